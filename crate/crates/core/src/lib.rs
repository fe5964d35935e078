pub mod arith;
pub mod census;
pub mod cli;
pub mod curve;
pub mod doubling;
pub mod family;
pub mod field;
pub mod tripling;
