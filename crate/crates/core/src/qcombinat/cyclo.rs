//! Cyclotomic bookkeeping.
//!
//! Quantum integers factor as `[n] = q^{1−n} · Π_{d | 2n, d > 2} Φ_d(q)`, so
//! every factorial, multinomial and closed-form graph value is a unit
//! monomial times a product of cyclotomic powers. [`Factored`] keeps that
//! product symbolic and only expands it when a sum forces it.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, OnceLock, RwLock};

use crate::exactq::{ArithError, GaussInt, Order, QPoly, QRat};

fn cache() -> &'static RwLock<BTreeMap<u32, Arc<QPoly>>> {
    static CACHE: OnceLock<RwLock<BTreeMap<u32, Arc<QPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn divisors(n: u32) -> impl Iterator<Item = u32> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

/// `Φ_d(q)` as a polynomial in `x` (exponents are multiples of 4).
///
/// Memoized; concurrent fills compute the same value, so the table behaves
/// as if absent.
pub fn cyclotomic(d: u32) -> Arc<QPoly> {
    assert!(d >= 1);
    if let Some(p) = cache().read().unwrap().get(&d) {
        return p.clone();
    }
    // Φ_d = (q^d − 1) / Π_{e | d, e < d} Φ_e
    let mut p = &QPoly::q_pow(d as i64) - &QPoly::one();
    for e in divisors(d).filter(|&e| e < d) {
        p = p.div_exact(&cyclotomic(e)).expect("cyclotomic factor divides");
    }
    let p = Arc::new(p);
    cache().write().unwrap().entry(d).or_insert_with(|| p.clone()).clone()
}

/// `coeff · Π Φ_d(q)^{k_d}` with `coeff` a polynomial (usually a unit
/// monomial) and exponents `k_d` of either sign.
#[derive(Clone, Debug)]
pub struct Factored {
    coeff: QPoly,
    cyclo: BTreeMap<u32, i64>,
}

impl Factored {
    pub fn one() -> Factored {
        Factored::from_poly(QPoly::one())
    }

    pub fn zero() -> Factored {
        Factored::from_poly(QPoly::zero())
    }

    pub fn from_poly(p: QPoly) -> Factored {
        Factored {
            coeff: p,
            cyclo: BTreeMap::new(),
        }
    }

    /// `(√−1)^k · x^e`.
    pub fn unit_monomial(k: i64, e: i64) -> Factored {
        Factored::from_poly(QPoly::monomial(GaussInt::unit(k), e))
    }

    /// `[n]`; zero for `n = 0`.
    pub fn quantum_int(n: u32) -> Factored {
        if n == 0 {
            return Factored::zero();
        }
        let mut f = Factored::from_poly(QPoly::q_pow(1 - n as i64));
        for d in divisors(2 * n).filter(|&d| d > 2) {
            *f.cyclo.entry(d).or_insert(0) += 1;
        }
        f
    }

    /// `[n]!`.
    pub fn quantum_factorial(n: u32) -> Factored {
        let mut shift = 0;
        let mut cyclo = BTreeMap::new();
        for k in 1..=n {
            shift += 1 - k as i64;
            for d in divisors(2 * k).filter(|&d| d > 2) {
                *cyclo.entry(d).or_insert(0) += 1;
            }
        }
        Factored {
            coeff: QPoly::q_pow(shift),
            cyclo,
        }
    }

    /// `Π [tops]! / Π [bottoms]!`.
    pub fn factorial_ratio(tops: &[u32], bottoms: &[u32]) -> Factored {
        let mut f = Factored::one();
        for &m in tops {
            f.mul_assign(&Factored::quantum_factorial(m));
        }
        for &n in bottoms {
            f.div_assign_product(&Factored::quantum_factorial(n));
        }
        f
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn coeff(&self) -> &QPoly {
        &self.coeff
    }

    pub fn cyclo_exponents(&self) -> &BTreeMap<u32, i64> {
        &self.cyclo
    }

    pub fn mul_assign(&mut self, rhs: &Factored) {
        if !(rhs.coeff.is_one()) {
            self.coeff = &self.coeff * &rhs.coeff;
        }
        for (&d, &k) in &rhs.cyclo {
            let e = self.cyclo.entry(d).or_insert(0);
            *e += k;
            if *e == 0 {
                self.cyclo.remove(&d);
            }
        }
    }

    pub fn mul(&self, rhs: &Factored) -> Factored {
        let mut out = self.clone();
        out.mul_assign(rhs);
        out
    }

    pub fn mul_unit_monomial(&self, k: i64, e: i64) -> Factored {
        Factored {
            coeff: self.coeff.mul_unit(k).shift(e),
            cyclo: self.cyclo.clone(),
        }
    }

    /// Divides by a value whose coefficient is a unit monomial.
    fn div_assign_product(&mut self, rhs: &Factored) {
        let inv = rhs.recip().expect("pure cyclotomic product");
        self.mul_assign(&inv);
    }

    /// Reciprocal; available when the coefficient is a unit monomial, which
    /// holds for every quantum integer, factorial and multinomial.
    pub fn recip(&self) -> Result<Factored, ArithError> {
        if self.coeff.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let (e, c) = match self.coeff.terms() {
            [(e, c)] => (*e, c),
            _ => return Err(ArithError::NotAUnit),
        };
        let k = c.unit_exponent().ok_or(ArithError::NotAUnit)?;
        Ok(Factored {
            coeff: QPoly::monomial(GaussInt::unit(-k), -e),
            cyclo: self.cyclo.iter().map(|(&d, &k)| (d, -k)).collect(),
        })
    }

    /// Integer power; negative exponents need an invertible coefficient.
    pub fn pow(&self, n: i64) -> Result<Factored, ArithError> {
        let base = if n < 0 { self.recip()? } else { self.clone() };
        let m = n.unsigned_abs() as u32;
        Ok(Factored {
            coeff: base.coeff.pow(m),
            cyclo: base.cyclo.iter().map(|(&d, &k)| (d, k * m as i64)).collect(),
        })
    }

    /// Order at `q = √−1`: only `Φ_4(q) = q² + 1` vanishes there, simply.
    pub fn ord_at_i(&self) -> Order {
        match self.coeff.x4_minus_i_multiplicity() {
            None => Order::Infinite,
            Some(m) => Order::Finite(m as i64 + self.cyclo.get(&4).copied().unwrap_or(0)),
        }
    }

    /// Exact sum over a common cyclotomic denominator, cancelling
    /// denominator factors that divide the numerator sum.
    pub fn sum<'a, I>(terms: I) -> Factored
    where
        I: IntoIterator<Item = &'a Factored>,
        I::IntoIter: Clone,
    {
        let terms = terms.into_iter().filter(|t| !t.is_zero());
        if terms.clone().next().is_none() {
            return Factored::zero();
        }
        // per-factor minimum exponent, an absent factor counting as 0
        let keys: BTreeSet<u32> = terms.clone().flat_map(|t| t.cyclo.keys().copied()).collect();
        let mut common: BTreeMap<u32, i64> = BTreeMap::new();
        for d in keys {
            let m = terms.clone().map(|t| t.cyclo.get(&d).copied().unwrap_or(0)).min().unwrap();
            if m != 0 {
                common.insert(d, m);
            }
        }
        let mut total = QPoly::zero();
        for t in terms {
            let mut p = t.coeff.clone();
            let ds = t.cyclo.keys().chain(common.keys()).copied().collect::<BTreeSet<_>>();
            for d in ds {
                let rel = t.cyclo.get(&d).copied().unwrap_or(0) - common.get(&d).copied().unwrap_or(0);
                if rel > 0 {
                    p = &p * &cyclotomic(d).pow(rel as u32);
                }
            }
            total = &total + &p;
        }
        let mut out = Factored {
            coeff: total,
            cyclo: common,
        };
        out.cancel_denominator();
        out
    }

    /// Divides out denominator cyclotomics that divide the coefficient.
    fn cancel_denominator(&mut self) {
        if self.coeff.is_zero() {
            self.cyclo.clear();
            return;
        }
        let negs: Vec<u32> = self.cyclo.iter().filter(|(_, &k)| k < 0).map(|(&d, _)| d).collect();
        for d in negs {
            let phi = cyclotomic(d);
            while self.cyclo[&d] < 0 {
                match self.coeff.div_exact(&phi) {
                    Some(q) => {
                        self.coeff = q;
                        *self.cyclo.get_mut(&d).unwrap() += 1;
                    }
                    None => break,
                }
            }
            if self.cyclo[&d] == 0 {
                self.cyclo.remove(&d);
            }
        }
    }

    /// Expands into an explicit numerator/denominator pair.
    pub fn to_qrat(&self) -> QRat {
        let mut num = self.coeff.clone();
        let mut den = QPoly::one();
        for (&d, &k) in &self.cyclo {
            let p = cyclotomic(d).pow(k.unsigned_abs() as u32);
            if k > 0 {
                num = &num * &p;
            } else {
                den = &den * &p;
            }
        }
        QRat::new(num, den).expect("cyclotomic denominators are nonzero")
    }
}
