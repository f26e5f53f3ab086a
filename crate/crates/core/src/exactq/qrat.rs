use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::gauss::GaussInt;
use super::order::Order;
use super::qpoly::QPoly;
use super::render;
use super::ArithError;

/// A rational function `num / den` in `x = q^{1/4}`.
///
/// Values are kept unreduced apart from cheap monomial and unit
/// normalization; equality is cross-multiplication.
#[derive(Clone, Debug)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    pub fn new(num: QPoly, den: QPoly) -> Result<QRat, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(QRat::normalized(num, den))
    }

    pub fn zero() -> QRat {
        QRat::from_poly(QPoly::zero())
    }

    pub fn one() -> QRat {
        QRat::from_poly(QPoly::one())
    }

    pub fn from_poly(p: QPoly) -> QRat {
        QRat {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn into_parts(self) -> (QPoly, QPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Moves monomial and unit factors of the denominator into the numerator.
    fn normalized(num: QPoly, den: QPoly) -> QRat {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return QRat::zero();
        }
        let lo = den.min_exp().unwrap();
        let (num, den) = (num.shift(-lo), den.shift(-lo));
        if den.is_monomial() {
            let c = den.leading_coeff().unwrap();
            if let Some(k) = c.unit_exponent() {
                return QRat::from_poly(num.mul_unit(-k));
            }
            if let Some(q) = num.div_exact(&den) {
                return QRat::from_poly(q);
            }
        }
        QRat { num, den }
    }

    pub fn checked_div(&self, rhs: &QRat) -> Result<QRat, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(QRat::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn recip(&self) -> Result<QRat, ArithError> {
        QRat::one().checked_div(self)
    }

    pub fn pow(&self, n: i32) -> Result<QRat, ArithError> {
        if n >= 0 {
            let e = n as u32;
            return Ok(QRat::normalized(self.num.pow(e), self.den.pow(e)));
        }
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let e = n.unsigned_abs();
        Ok(QRat::normalized(self.den.pow(e), self.num.pow(e)))
    }

    /// Order of vanishing at `q = √−1`.
    pub fn ord_at_i(&self) -> Order {
        match self.num.x4_minus_i_multiplicity() {
            None => Order::Infinite,
            Some(m) => {
                let d = self.den.x4_minus_i_multiplicity().expect("nonzero denominator");
                Order::Finite(m as i64 - d as i64)
            }
        }
    }

    /// Value at `q = √−1` when it is finite and the value lies on the `q`
    /// grid.
    pub fn eval_q_at_i(&self) -> Option<GaussInt> {
        let n = self.num.eval_q_at_i()?;
        let d = self.den.eval_q_at_i()?;
        if d.is_zero() {
            let r = self.reduced();
            let n = r.num.eval_q_at_i()?;
            let d = r.den.eval_q_at_i()?;
            return n.div_exact(&d);
        }
        n.div_exact(&d)
    }

    /// Fully reduced canonical representative: coprime numerator and
    /// denominator, denominator with first-quadrant leading coefficient and
    /// its exponent range centered on zero (in steps of `q`).
    pub fn reduced(&self) -> QRat {
        if self.num.is_zero() {
            return QRat::zero();
        }
        let g = QPoly::gcd(&self.num, &self.den);
        let mut num = self.num.div_exact(&g).expect("gcd divides numerator");
        let mut den = self.den.div_exact(&g).expect("gcd divides denominator");
        let (_, k) = den.leading_coeff().unwrap().normalized_associate();
        num = num.mul_unit(k);
        den = den.mul_unit(k);
        let (lo, hi) = (den.min_exp().unwrap(), den.max_exp().unwrap());
        let t = (lo + hi).div_euclid(2).div_euclid(4) * 4;
        num = num.shift(-t);
        den = den.shift(-t);
        if den.is_one() {
            return QRat::from_poly(num);
        }
        QRat { num, den }
    }

    /// Canonical text form; equal values render identically.
    pub fn render(&self) -> String {
        let r = self.reduced();
        render::render_fraction(&r.num, &r.den)
    }
}

impl PartialEq for QRat {
    fn eq(&self, other: &QRat) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for QRat {}

impl From<QPoly> for QRat {
    fn from(p: QPoly) -> QRat {
        QRat::from_poly(p)
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if self.den == rhs.den {
            return QRat::normalized(&self.num + &rhs.num, self.den.clone());
        }
        QRat::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Add for QRat {
    type Output = QRat;
    fn add(self, rhs: QRat) -> QRat {
        &self + &rhs
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Sub for QRat {
    type Output = QRat;
    fn sub(self, rhs: QRat) -> QRat {
        &self - &rhs
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        QRat::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul for QRat {
    type Output = QRat;
    fn mul(self, rhs: QRat) -> QRat {
        &self * &rhs
    }
}

/// Panics on division by zero; use [`QRat::checked_div`] for a `Result`.
impl Div for &QRat {
    type Output = QRat;
    fn div(self, rhs: &QRat) -> QRat {
        self.checked_div(rhs).expect("division by the zero function")
    }
}

impl Div for QRat {
    type Output = QRat;
    fn div(self, rhs: QRat) -> QRat {
        &self / &rhs
    }
}

impl std::iter::Sum for QRat {
    fn sum<I: Iterator<Item = QRat>>(iter: I) -> QRat {
        iter.fold(QRat::zero(), |acc, p| &acc + &p)
    }
}

impl std::iter::Product for QRat {
    fn product<I: Iterator<Item = QRat>>(iter: I) -> QRat {
        iter.fold(QRat::one(), |acc, p| &acc * &p)
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(terms: &[(i64, i64)]) -> QPoly {
        QPoly::from_q_terms(terms)
    }

    fn two() -> QPoly {
        q(&[(1, 1), (-1, 1)])
    }

    fn three() -> QPoly {
        q(&[(2, 1), (0, 1), (-2, 1)])
    }

    #[test]
    fn additive_inverse() {
        let a = QRat::from(two());
        assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn reciprocal() {
        let a = QRat::from(-two());
        let r = a.pow(-1).unwrap();
        assert_eq!(r, QRat::new(QPoly::constant(-1), two()).unwrap());
        assert_eq!(QRat::zero().pow(-1).unwrap_err(), ArithError::DivisionByZero);
        assert!(QRat::new(QPoly::one(), QPoly::zero()).is_err());
        assert!(QRat::one().checked_div(&QRat::zero()).is_err());
    }

    #[test]
    fn square_of_two() {
        let a = QRat::from(two());
        assert_eq!(&a * &a, QRat::from(q(&[(2, 1), (0, 2), (-2, 1)])));
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let sq = QRat::new(two().pow(2), two()).unwrap();
        assert_eq!(sq, QRat::from(two()));
        let z1 = QRat::new(QPoly::zero(), two()).unwrap();
        let z2 = QRat::new(QPoly::zero(), three()).unwrap();
        assert_eq!(z1, z2);
        assert_ne!(QRat::from(three()), QRat::from(two()));
    }

    #[test]
    fn orders() {
        assert_eq!(QRat::from(two()).ord_at_i(), Order::Finite(1));
        assert_eq!(QRat::from(three()).ord_at_i(), Order::Finite(0));
        assert_eq!(QRat::zero().ord_at_i(), Order::Infinite);
        let inv = QRat::new(QPoly::one(), two().pow(2)).unwrap();
        assert_eq!(inv.ord_at_i(), Order::Finite(-2));
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(QRat::from(-two()).render(), "-q - q^-1");
        assert_eq!(QRat::zero().render(), "0");
        // [4][3]/[2]² reduces to (q² + q⁻²)[3]/[2]
        let four = q(&[(3, 1), (1, 1), (-1, 1), (-3, 1)]);
        let v = QRat::new(-(&four * &three()), two().pow(2)).unwrap();
        let w = QRat::new(-(&four * &three()).shift(12), (&two() * &two()).shift(12)).unwrap();
        assert_eq!(v.render(), w.render());
        assert_eq!(v.render(), "(-q^4 - q^2 - 2 - q^-2 - q^-4)/(q + q^-1)");
    }

    #[test]
    fn rendering_in_x() {
        let v = QRat::new(QPoly::x_pow(6), two()).unwrap();
        assert_eq!(v.render(), format!("x^6/(x^4 + x^-4){}", render::X_LEGEND));
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec((-12i64..12, -4i64..4, -4i64..4), 1..5)
            .prop_map(|v| QPoly::from_terms(v.into_iter().map(|(e, a, b)| (e, GaussInt::new(a, b)))))
    }

    fn arb_rat() -> impl Strategy<Value = QRat> {
        (arb_poly(), arb_poly())
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| QRat::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn order_is_additive(a in arb_rat(), b in arb_rat()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!((&a * &b).ord_at_i(), a.ord_at_i() + b.ord_at_i());
        }

        #[test]
        fn order_ignores_representative(a in arb_rat(), c in arb_poly()) {
            prop_assume!(!c.is_zero());
            let (n, d) = a.clone().into_parts();
            let b = QRat::new(&n * &c, &d * &c).unwrap();
            prop_assert_eq!(a.ord_at_i(), b.ord_at_i());
        }

        #[test]
        fn equality_is_an_equivalence(a in arb_rat(), c in arb_poly(), e in arb_poly()) {
            prop_assume!(!c.is_zero() && !e.is_zero());
            let (n, d) = a.clone().into_parts();
            let b = QRat::new(&n * &c, &d * &c).unwrap();
            let f = QRat::new(&n * &e, &d * &e).unwrap();
            prop_assert_eq!(&a, &a);
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(&b, &a);
            prop_assert_eq!(&b, &f);
            prop_assert_eq!(a.render(), f.render());
        }

        #[test]
        fn field_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a);
            }
        }
    }
}
