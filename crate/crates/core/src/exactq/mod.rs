//! Exact arithmetic in `ℚ(i)(x)` restricted to Gaussian-integer
//! coefficients, where `x = q^{1/4}` and `A = x²`.
//!
//! Everything the calculator produces is a [`QRat`]; the order of vanishing
//! at `q = √−1` is read off by exact synthetic division by `x⁴ − √−1`.
//!
//! ```
//! use shadowbracket::exactq::{Order, QPoly, QRat};
//!
//! let two = QPoly::from_q_terms(&[(1, 1), (-1, 1)]); // q + q⁻¹
//! let inv = QRat::new(QPoly::one(), two.pow(2)).unwrap();
//! assert_eq!(inv.ord_at_i(), Order::Finite(-2));
//! assert_eq!(QRat::from(-two).render(), "-q - q^-1");
//! ```

mod gauss;
mod order;
mod qpoly;
mod qrat;
pub mod render;

pub use gauss::{GaussInt, Int};
pub use order::{HalfInt, Order};
pub use qpoly::QPoly;
pub use qrat::QRat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by the zero function")]
    DivisionByZero,
    #[error("factored value has a non-unit coefficient and cannot be inverted")]
    NotAUnit,
}
