//! Deterministic text rendering of exact values.

use dashu_int::IBig;

use super::gauss::GaussInt;
use super::qpoly::QPoly;

/// Print variable: `q` when every exponent is an integer power of `q`,
/// otherwise `x = q^{1/4}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    Q,
    X,
}

impl Var {
    pub fn for_poly(p: &QPoly) -> Var {
        if p.exponents_divisible_by(4) {
            Var::Q
        } else {
            Var::X
        }
    }

    pub fn for_pair(a: &QPoly, b: &QPoly) -> Var {
        if a.exponents_divisible_by(4) && b.exponents_divisible_by(4) {
            Var::Q
        } else {
            Var::X
        }
    }

    fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::X => "x",
        }
    }

    fn exponent(self, x_exp: i64) -> i64 {
        match self {
            Var::Q => x_exp / 4,
            Var::X => x_exp,
        }
    }
}

/// Legend appended whenever a value is printed in `x`.
pub const X_LEGEND: &str = "  [x = q^(1/4)]";

fn monomial(var: Var, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => var.name().to_string(),
        _ => format!("{}^{}", var.name(), e),
    }
}

/// Splits a coefficient into a sign and a printable magnitude; `None` for
/// magnitude means "1" (suppressed in front of a monomial).
fn split_coeff(c: &GaussInt) -> (bool, Option<String>) {
    let zero = IBig::ZERO;
    if c.is_real() {
        let neg = c.re < zero;
        let mag = if neg { -&c.re } else { c.re.clone() };
        return (neg, (!mag.is_one()).then(|| mag.to_string()));
    }
    if c.re.is_zero() {
        let neg = c.im < zero;
        let mag = if neg { -&c.im } else { c.im.clone() };
        let s = if mag.is_one() { "i".to_string() } else { format!("{mag}i") };
        return (neg, Some(s));
    }
    (false, Some(c.to_string()))
}

pub fn render_poly(p: &QPoly, var: Var) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (e, c)) in p.terms().iter().rev().enumerate() {
        let (neg, mag) = split_coeff(c);
        let mono = monomial(var, var.exponent(*e));
        let body = match (mag, mono.is_empty()) {
            (None, true) => "1".to_string(),
            (None, false) => mono,
            (Some(m), true) => m,
            (Some(m), false) => format!("{m}{mono}"),
        };
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

fn wrap(s: String, p: &QPoly) -> String {
    if p.len() > 1 {
        format!("({s})")
    } else {
        s
    }
}

/// Renders `num/den` (already canonical) in a shared variable.
pub fn render_fraction(num: &QPoly, den: &QPoly) -> String {
    let var = Var::for_pair(num, den);
    let body = if den.is_one() {
        render_poly(num, var)
    } else if num.is_zero() {
        "0".to_string()
    } else {
        format!(
            "{}/{}",
            wrap(render_poly(num, var), num),
            wrap(render_poly(den, var), den)
        )
    };
    match var {
        Var::Q => body,
        Var::X => format!("{body}{X_LEGEND}"),
    }
}
