use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use dashu_int::IBig;

/// Arbitrary precision integer used for every coefficient.
pub type Int = IBig;

/// A Gaussian integer `re + im·√−1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: Int,
    pub im: Int,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt {
        re: IBig::ZERO,
        im: IBig::ZERO,
    };
    pub const ONE: GaussInt = GaussInt {
        re: IBig::ONE,
        im: IBig::ZERO,
    };

    pub fn new(re: impl Into<Int>, im: impl Into<Int>) -> Self {
        GaussInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn from_int(re: impl Into<Int>) -> Self {
        GaussInt {
            re: re.into(),
            im: IBig::ZERO,
        }
    }

    /// The imaginary unit `√−1`.
    pub fn i() -> Self {
        GaussInt::new(0, 1)
    }

    /// `(√−1)^k` for any integer `k`.
    pub fn unit(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussInt::new(1, 0),
            1 => GaussInt::new(0, 1),
            2 => GaussInt::new(-1, 0),
            _ => GaussInt::new(0, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Returns `k` with `self == (√−1)^k`, if `self` is a unit.
    pub fn unit_exponent(&self) -> Option<i64> {
        (0..4).find(|&k| *self == GaussInt::unit(k))
    }

    pub fn conj(&self) -> Self {
        GaussInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn norm(&self) -> Int {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplies by `(√−1)^k` without any integer multiplication.
    pub fn mul_unit(&self, k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => self.clone(),
            1 => GaussInt {
                re: -&self.im,
                im: self.re.clone(),
            },
            2 => -self,
            _ => GaussInt {
                re: self.im.clone(),
                im: -&self.re,
            },
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &GaussInt) -> Option<GaussInt> {
        if d.is_zero() {
            return None;
        }
        if d.im.is_zero() && self.im.is_zero() {
            let (q, r) = dashu_int::ops::DivRem::div_rem(&self.re, &d.re);
            return r.is_zero().then(|| GaussInt::from_int(q));
        }
        let n = d.norm();
        let p = self * &d.conj();
        let (qr, rr) = dashu_int::ops::DivRem::div_rem(&p.re, &n);
        let (qi, ri) = dashu_int::ops::DivRem::div_rem(&p.im, &n);
        (rr.is_zero() && ri.is_zero()).then_some(GaussInt { re: qr, im: qi })
    }

    /// Euclidean division rounding to the nearest Gaussian integer; the
    /// remainder has strictly smaller norm than `d`.
    pub fn div_rem_nearest(&self, d: &GaussInt) -> (GaussInt, GaussInt) {
        let n = d.norm();
        let p = self * &d.conj();
        let q = GaussInt {
            re: round_div(&p.re, &n),
            im: round_div(&p.im, &n),
        };
        let r = self - &(&q * d);
        (q, r)
    }

    pub fn gcd(a: &GaussInt, b: &GaussInt) -> GaussInt {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem_nearest(&b);
            a = b;
            b = r;
        }
        a.normalized_associate().0
    }

    /// Returns `(u·self, k)` where `u = (√−1)^k` puts the value in the
    /// half-open first quadrant `re > 0, im ≥ 0` (zero maps to itself).
    pub fn normalized_associate(&self) -> (GaussInt, i64) {
        if self.is_zero() {
            return (GaussInt::ZERO, 0);
        }
        for k in 0..4 {
            let v = self.mul_unit(k);
            if v.re > IBig::ZERO && v.im >= IBig::ZERO {
                return (v, k);
            }
        }
        unreachable!("every nonzero Gaussian integer has a first-quadrant associate")
    }
}

fn round_div(a: &Int, n: &Int) -> Int {
    // floor((2a + n) / 2n) for n > 0
    let two = IBig::from(2);
    let num = &two * a + n;
    let den = &two * n;
    dashu_int::ops::DivEuclid::div_euclid(num, den)
}

impl From<i64> for GaussInt {
    fn from(v: i64) -> Self {
        GaussInt::from_int(v)
    }
}

impl From<Int> for GaussInt {
    fn from(v: Int) -> Self {
        GaussInt::from_int(v)
    }
}

impl<'a> Add<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: GaussInt) -> GaussInt {
        GaussInt {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl AddAssign<&GaussInt> for GaussInt {
    fn add_assign(&mut self, rhs: &GaussInt) {
        self.re += &rhs.re;
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl SubAssign<&GaussInt> for GaussInt {
    fn sub_assign(&mut self, rhs: &GaussInt) {
        self.re -= &rhs.re;
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

impl<'a> Sub<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: GaussInt) -> GaussInt {
        &self - &rhs
    }
}

impl<'a> Mul<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: &GaussInt) -> GaussInt {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussInt::from_int(&self.re * &rhs.re);
        }
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: GaussInt) -> GaussInt {
        &self * &rhs
    }
}

impl Neg for &GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl GaussInt {
    /// `acc += a * b`, the inner step of polynomial multiplication.
    pub(crate) fn add_mul(acc: &mut GaussInt, a: &GaussInt, b: &GaussInt) {
        if a.im.is_zero() && b.im.is_zero() {
            acc.re += &a.re * &b.re;
            return;
        }
        acc.re += &a.re * &b.re - &a.im * &b.im;
        acc.im += &a.re * &b.im + &a.im * &b.re;
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = IBig::ZERO;
        match (self.re == zero, self.im == zero) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => {
                if self.im.is_one() {
                    write!(f, "i")
                } else if self.im == IBig::NEG_ONE {
                    write!(f, "-i")
                } else {
                    write!(f, "{}i", self.im)
                }
            }
            (false, false) => {
                let sign = if self.im < zero { '-' } else { '+' };
                let mag = if self.im < zero { -&self.im } else { self.im.clone() };
                if mag.is_one() {
                    write!(f, "({}{}i)", self.re, sign)
                } else {
                    write!(f, "({}{}{}i)", self.re, sign, mag)
                }
            }
        }
    }
}
