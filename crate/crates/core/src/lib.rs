//! Algebraic-geometry MDS codes: finite fields, elliptic and genus-2 curves,
//! Riemann-Roch evaluation codes, and code invariants.

pub mod arith;
pub mod catalog;
pub mod code;
pub mod constructions;
pub mod curve;
pub mod export;
pub mod field;
pub mod group;
pub mod linalg;
pub mod poly;
pub mod riemann_roch;
