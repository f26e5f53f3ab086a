//! Quantum integers, factorials and generalized multinomials, with the
//! closed-form orders at `q = √−1`.
//!
//! ```
//! use shadowbracket::exactq::Order;
//! use shadowbracket::qcombinat::{ord_closed_form, quantum_int, ClosedForm};
//!
//! assert_eq!(quantum_int(2).to_string(), "q + q^-1");
//! assert_eq!(ord_closed_form(&ClosedForm::Factorial(4)), Order::Finite(2));
//! ```

mod cyclo;

pub use cyclo::{cyclotomic, Factored};

use serde::{Deserialize, Serialize};

use crate::exactq::{Order, QPoly, QRat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombinatError {
    #[error("multinomial tops sum to {tops} but bottoms sum to {bottoms}")]
    SumMismatch { tops: u64, bottoms: u64 },
}

/// `[n] = q^{−n+1} + q^{−n+3} + … + q^{n−1}`.
pub fn quantum_int(n: u32) -> QPoly {
    let n = n as i64;
    QPoly::from_terms((0..n).map(|k| (4 * (1 - n + 2 * k), 1i64)))
}

/// `[n]! = [1][2]···[n]`.
pub fn quantum_factorial(n: u32) -> QPoly {
    (1..=n).map(quantum_int).product()
}

/// `Π [mᵢ]! / Π [nⱼ]!` with `Σ mᵢ = Σ nⱼ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultinomialSpec {
    tops: Vec<u32>,
    bottoms: Vec<u32>,
}

impl MultinomialSpec {
    pub fn new(tops: Vec<u32>, bottoms: Vec<u32>) -> Result<Self, CombinatError> {
        let t: u64 = tops.iter().map(|&v| v as u64).sum();
        let b: u64 = bottoms.iter().map(|&v| v as u64).sum();
        if t != b {
            return Err(CombinatError::SumMismatch { tops: t, bottoms: b });
        }
        Ok(MultinomialSpec { tops, bottoms })
    }

    pub fn tops(&self) -> &[u32] {
        &self.tops
    }

    pub fn bottoms(&self) -> &[u32] {
        &self.bottoms
    }

    pub fn factored(&self) -> Factored {
        Factored::factorial_ratio(&self.tops, &self.bottoms)
    }
}

pub fn quantum_multinomial(s: &MultinomialSpec) -> QRat {
    s.factored().to_qrat()
}

/// Inputs to [`ord_closed_form`].
#[derive(Clone, Debug)]
pub enum ClosedForm {
    Int(u32),
    Factorial(u32),
    Multinomial(MultinomialSpec),
}

/// Orders at `q = √−1` without any polynomial arithmetic:
/// `[n]` has order 1 for even `n` and 0 for odd `n`, `[n]!` has order
/// `⌊n/2⌋`, and a multinomial has `⌊#odd bottoms/2⌋ − ⌊#odd tops/2⌋`.
pub fn ord_closed_form(f: &ClosedForm) -> Order {
    match f {
        ClosedForm::Int(0) => Order::Infinite,
        ClosedForm::Int(n) => Order::Finite((n % 2 == 0) as i64),
        ClosedForm::Factorial(n) => Order::Finite((n / 2) as i64),
        ClosedForm::Multinomial(s) => {
            let odd = |v: &[u32]| v.iter().filter(|&&m| m % 2 == 1).count() as i64;
            Order::Finite(odd(&s.bottoms) / 2 - odd(&s.tops) / 2)
        }
    }
}
