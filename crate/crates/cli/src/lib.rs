//! Command layer for the obstruction verifier: curve descriptions on disk,
//! point-expression parsing, report rendering, the place-by-place versus
//! cocycle-enumeration cross-check, and the bundled verification suite.

pub mod commands;
pub mod crossval;
pub mod pointexpr;
pub mod report;
pub mod spec;
pub mod suite;
