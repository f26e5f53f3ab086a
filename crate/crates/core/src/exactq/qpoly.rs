use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gauss::GaussInt;

/// Sparse Laurent polynomial in `x = q^{1/4}` with Gaussian-integer
/// coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficient stored, so the
/// zero polynomial is the empty term list and derived equality is value
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    terms: Vec<(i64, GaussInt)>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(GaussInt::ONE)
    }

    pub fn constant(c: impl Into<GaussInt>) -> Self {
        QPoly::monomial(c, 0)
    }

    /// `c·x^exp`.
    pub fn monomial(c: impl Into<GaussInt>, exp: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            QPoly::zero()
        } else {
            QPoly {
                terms: vec![(exp, c)],
            }
        }
    }

    /// `x^exp`.
    pub fn x_pow(exp: i64) -> Self {
        QPoly::monomial(GaussInt::ONE, exp)
    }

    /// `q^exp = x^(4·exp)`.
    pub fn q_pow(exp: i64) -> Self {
        QPoly::x_pow(4 * exp)
    }

    /// `A^exp = x^(2·exp)`, the Kauffman variable with `q = A²`.
    pub fn a_pow(exp: i64) -> Self {
        QPoly::x_pow(2 * exp)
    }

    /// Builds from `(x-exponent, coefficient)` pairs, combining repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<GaussInt>,
    {
        let mut map: BTreeMap<i64, GaussInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += &c.into();
        }
        QPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Builds from `(q-exponent, integer coefficient)` pairs.
    pub fn from_q_terms(terms: &[(i64, i64)]) -> Self {
        QPoly::from_terms(terms.iter().map(|&(e, c)| (4 * e, c)))
    }

    fn from_sorted_unchecked(terms: Vec<(i64, GaussInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        QPoly { terms }
    }

    pub fn terms(&self) -> &[(i64, GaussInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<&GaussInt> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn coeff(&self, exp: i64) -> GaussInt {
        match self.terms.binary_search_by_key(&exp, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => GaussInt::ZERO,
        }
    }

    /// True when every exponent is a multiple of `m` (the zero polynomial
    /// qualifies).
    pub fn exponents_divisible_by(&self, m: i64) -> bool {
        self.terms.iter().all(|(e, _)| e.rem_euclid(m) == 0)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> QPoly {
        QPoly::from_sorted_unchecked(self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect())
    }

    pub fn scale(&self, c: &GaussInt) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly::from_sorted_unchecked(self.terms.iter().map(|(e, a)| (*e, a * c)).collect())
    }

    /// Multiplies by `(√−1)^k`.
    pub fn mul_unit(&self, k: i64) -> QPoly {
        QPoly::from_sorted_unchecked(self.terms.iter().map(|(e, a)| (*e, a.mul_unit(k))).collect())
    }

    pub fn pow(&self, n: u32) -> QPoly {
        let mut result = QPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitutes `q = √−1`; defined only when every exponent is an integer
    /// power of `q`.
    pub fn eval_q_at_i(&self) -> Option<GaussInt> {
        if !self.exponents_divisible_by(4) {
            return None;
        }
        let mut acc = GaussInt::ZERO;
        for (e, c) in &self.terms {
            acc += &c.mul_unit(e / 4);
        }
        Some(acc)
    }

    /// Dense ascending coefficients after dividing out the lowest power of
    /// `x`; returns `(lowest exponent, coefficients)`.
    pub(crate) fn to_dense(&self) -> (i64, Vec<GaussInt>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![GaussInt::ZERO; (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(lo: i64, coeffs: Vec<GaussInt>) -> QPoly {
        QPoly::from_sorted_unchecked(
            coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c))
                .collect(),
        )
    }

    /// One step of synthetic division by `x⁴ − √−1`: the quotient when the
    /// division is exact.
    pub fn div_x4_minus_i(&self) -> Option<QPoly> {
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        let (lo, mut c) = self.to_dense();
        let quotient = synthetic_div_x4_minus_i(&mut c)?;
        Some(QPoly::from_dense(lo, quotient))
    }

    /// Multiplicity of `x⁴ − √−1` as a factor, or `None` for the zero
    /// polynomial.
    ///
    /// The monomial part is a unit at every root of `x⁴ − √−1`, so it is
    /// dropped before repeated exact synthetic division.
    pub fn x4_minus_i_multiplicity(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let (_, mut c) = self.to_dense();
        let mut m = 0;
        while c.len() > 4 {
            let mut trial = c.clone();
            match synthetic_div_x4_minus_i(&mut trial) {
                Some(q) => {
                    c = q;
                    m += 1;
                }
                None => break,
            }
        }
        Some(m)
    }

    /// Exact Laurent division `self / d`, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &QPoly) -> Option<QPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        if d.is_monomial() {
            let (e, c) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (f, a) in &self.terms {
                out.push((f - e, a.div_exact(c)?));
            }
            return Some(QPoly::from_sorted_unchecked(out));
        }
        let (lo_n, mut n) = self.to_dense();
        let (lo_d, dd) = d.to_dense();
        if n.len() < dd.len() {
            return None;
        }
        let lead = dd.last().unwrap();
        let qlen = n.len() - dd.len() + 1;
        let mut q = vec![GaussInt::ZERO; qlen];
        for k in (0..qlen).rev() {
            let top = &n[k + dd.len() - 1];
            if top.is_zero() {
                continue;
            }
            let t = top.div_exact(lead)?;
            for (j, dj) in dd.iter().enumerate() {
                if !dj.is_zero() {
                    let prod = &t * dj;
                    n[k + j] -= &prod;
                }
            }
            q[k] = t;
        }
        if n.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(QPoly::from_dense(lo_n - lo_d, q))
    }

    /// Gaussian-integer gcd of the coefficients, normalized to the first
    /// quadrant.
    pub fn content(&self) -> GaussInt {
        let mut g = GaussInt::ZERO;
        for (_, c) in &self.terms {
            g = GaussInt::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Polynomial gcd over `ℤ[√−1][x, x⁻¹]` by the primitive remainder
    /// sequence. Determined up to a unit and a power of `x`; the result is
    /// normalized to lowest exponent 0 and a first-quadrant leading
    /// coefficient.
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        if a.is_zero() {
            return b.normalize_associate();
        }
        if b.is_zero() {
            return a.normalize_associate();
        }
        let cont = GaussInt::gcd(&a.content(), &b.content());
        let (_, u) = a.primitive_part().to_dense();
        let (_, v) = b.primitive_part().to_dense();
        // Work in x^stride when both inputs allow it; the gcd then has the
        // same stride.
        let stride = dense_stride(&u).map_or(0, |s| gcd_i64(s, dense_stride(&v).unwrap_or(s)));
        let stride = stride.max(1) as usize;
        let compress = |d: Vec<GaussInt>| -> Vec<GaussInt> { d.into_iter().step_by(stride).collect() };
        let (mut u, mut v) = (compress(u), compress(v));
        if u.len() < v.len() {
            std::mem::swap(&mut u, &mut v);
        }
        while v.len() > 1 {
            let r = pseudo_rem(&u, &v);
            u = v;
            if r.is_empty() {
                v = Vec::new();
                break;
            }
            v = QPoly::from_dense(0, r).primitive_part().to_dense().1;
        }
        let g = if v.len() == 1 {
            QPoly::one()
        } else {
            QPoly::from_terms(
                u.into_iter()
                    .enumerate()
                    .map(|(i, c)| ((i * stride) as i64, c)),
            )
        };
        g.scale(&cont).normalize_associate()
    }

    pub fn primitive_part(&self) -> QPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.div_exact(&QPoly::constant(c)).expect("content divides")
    }

    /// Shifts to lowest exponent 0 and rotates the leading coefficient into
    /// the first quadrant.
    pub fn normalize_associate(&self) -> QPoly {
        let Some(lo) = self.min_exp() else {
            return QPoly::zero();
        };
        let (_, k) = self.leading_coeff().unwrap().normalized_associate();
        self.shift(-lo).mul_unit(k)
    }
}

/// In-place synthetic division of dense ascending coefficients by
/// `x⁴ − √−1`; returns the quotient when the remainder vanishes.
fn synthetic_div_x4_minus_i(c: &mut [GaussInt]) -> Option<Vec<GaussInt>> {
    let n = c.len();
    if n <= 4 {
        return c.iter().all(|v| v.is_zero()).then(Vec::new);
    }
    let mut q = vec![GaussInt::ZERO; n - 4];
    for k in (4..n).rev() {
        if c[k].is_zero() {
            continue;
        }
        let top = std::mem::take(&mut c[k]);
        // x^k = x^(k-4)·(x⁴ − i) + i·x^(k-4)
        c[k - 4] += &top.mul_unit(1);
        q[k - 4] = top;
    }
    if c[..4].iter().any(|v| !v.is_zero()) {
        return None;
    }
    while q.last().is_some_and(|v| v.is_zero()) {
        q.pop();
    }
    Some(q)
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i64(b, a % b)
    }
}

/// Largest `s` such that every nonzero coefficient sits at a multiple of `s`
/// (`None` for constants).
fn dense_stride(d: &[GaussInt]) -> Option<i64> {
    d.iter()
        .enumerate()
        .filter(|(i, c)| *i > 0 && !c.is_zero())
        .map(|(i, _)| i as i64)
        .reduce(gcd_i64)
}

/// Pseudo-remainder of dense polynomials: `lc(v)^(deg u − deg v + 1)·u mod v`.
fn pseudo_rem(u: &[GaussInt], v: &[GaussInt]) -> Vec<GaussInt> {
    let mut r = u.to_vec();
    let lead = v.last().unwrap();
    let dv = v.len() - 1;
    while r.len() > dv {
        let top = r.last().unwrap().clone();
        let shift = r.len() - 1 - dv;
        for c in r.iter_mut() {
            *c = &*c * lead;
        }
        for (j, vj) in v.iter().enumerate() {
            let prod = &top * vj;
            r[shift + j] -= &prod;
        }
        debug_assert!(r.last().unwrap().is_zero());
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = &a[i].1 + &b[j].1;
                    if !s.is_zero() {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        QPoly::from_sorted_unchecked(out)
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::from_sorted_unchecked(self.terms.iter().map(|(e, c)| (*e, -c)).collect())
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        if rhs.is_monomial() {
            let (e, c) = &rhs.terms[0];
            return QPoly::from_sorted_unchecked(self.terms.iter().map(|(f, a)| (f + e, a * c)).collect());
        }
        if self.is_monomial() {
            return rhs * self;
        }
        let lo = self.min_exp().unwrap() + rhs.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + rhs.max_exp().unwrap();
        let span = (hi - lo + 1) as usize;
        if span <= 16 * self.len() * rhs.len() + 64 {
            let mut acc = vec![GaussInt::ZERO; span];
            for (ea, ca) in &self.terms {
                for (eb, cb) in &rhs.terms {
                    GaussInt::add_mul(&mut acc[(ea + eb - lo) as usize], ca, cb);
                }
            }
            QPoly::from_dense(lo, acc)
        } else {
            let mut map: BTreeMap<i64, GaussInt> = BTreeMap::new();
            for (ea, ca) in &self.terms {
                for (eb, cb) in &rhs.terms {
                    GaussInt::add_mul(map.entry(ea + eb).or_default(), ca, cb);
                }
            }
            QPoly::from_sorted_unchecked(map.into_iter().filter(|(_, c)| !c.is_zero()).collect())
        }
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| &acc + &p)
    }
}

impl std::iter::Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::one(), |acc, p| &acc * &p)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::render_poly(self, super::render::Var::for_poly(self)))
    }
}
