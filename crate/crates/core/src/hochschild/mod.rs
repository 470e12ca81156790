//! Reduced Hochschild cochains and chains with the operators δ, b, cup,
//! braces, the Gerstenhaber bracket, Connes' B and its dual Δ.
//!
//! Every cochain is stored in the suspended picture: a map (sĀ)^⊗n → sA,
//! with parity taken in the shifted grading `sp(a) = |a| + 1`.

mod chain;
mod cochain;
mod dual;
mod ops;
mod space;

pub use chain::{chain_cochain_pairing, connes_b, hoch_boundary, Chain};
pub use cochain::{Cochain, Mono};
pub use dual::{cyclic_project, delta, is_cyclic};
pub use ops::{brace, cup, gerstenhaber, hoch_diff};
pub use space::MonoIndex;

pub(crate) use dual::{delta_part, pair_mono};
pub(crate) use ops::{brace_full, brace_raw, brace_split, bracket_raw, cup_raw, diff_raw};

use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HochError {
    /// Operands belong to different algebras.
    AlgebraMismatch,
    /// A term of the wrong parity was added to a homogeneous element.
    ParityMismatch,
    /// A basis index outside the algebra or a unit in a reduced slot.
    BadMonomial(String),
    /// Δ, cyclicity and the chain pairing need an invertible pairing.
    DegeneratePairing,
    /// Cyclic averaging divides by n+1.
    NonInvertibleAverage { weight: usize, characteristic: u64 },
}

impl fmt::Display for HochError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HochError::AlgebraMismatch => write!(f, "operands live over different algebras"),
            HochError::ParityMismatch => write!(f, "term parity differs from the element's parity"),
            HochError::BadMonomial(s) => write!(f, "bad monomial: {}", s),
            HochError::DegeneratePairing => write!(f, "the pairing is degenerate"),
            HochError::NonInvertibleAverage { weight, characteristic } => write!(
                f,
                "cyclic projection at weight {} needs {} invertible, but the characteristic is {}",
                weight,
                weight + 1,
                characteristic
            ),
        }
    }
}
