#![no_std]
extern crate alloc;
pub mod exactla;
pub mod algebra;
pub mod hochschild;
pub mod homology;
pub mod deform;
pub mod trees;
