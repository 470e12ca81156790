//! Exact linear algebra over Q and F_p.

mod scalar;
mod sparse;

pub use scalar::{Field, Scalar};
pub use sparse::{
    axpy, cobound_certificate, dot, kernel, rank, solve, Echelon, Insert, Solution, SparseMatrix,
    SparseVec,
};
