//! Command-line front end for `surreal-core`: an expression language over
//! surreal numbers, a tree emitter, and a law-harness runner.

pub mod eval;
pub mod expr;
pub mod run;
