//! File formats, reports and the command-line front end for `ncbtt-core`.

pub mod cli;
pub mod io;
