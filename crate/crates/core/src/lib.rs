//! Exact enumeration of independent sets in four layered graph families.
//!
//! Each family is built level by level from an `ell`-cycle (or the complete
//! graph `K_ell`) by repeatedly splitting the innermost ring with a new ring of
//! vertices. Independent sets are counted with a transfer matrix over level
//! vectors, the resulting sequences are turned into certified rational
//! generating functions, and everything is cross-checked against brute force
//! on explicitly constructed graphs.
//!
//! * [`graphs`]: problem instances, level vectors and explicit graphs.
//! * [`transfer`]: transfer matrices and exact counts.
//! * [`poly`], [`recurrence`], [`genfunc`]: polynomial algebra, minimal
//!   recurrences and generating functions.
//! * [`oracle`]: brute-force independent-set counting.
//! * [`bijection`]: independent sets of `P_4^n` versus odd-neighbor sequences.
//! * [`cli`]: the command-line front end.

pub mod bijection;
pub mod cli;
mod error;
pub mod genfunc;
pub mod graphs;
pub mod oracle;
pub mod poly;
pub mod recurrence;
pub mod transfer;
pub mod verify;

mod json;

pub use error::{Error, Result};
pub use graphs::{EdgeInterpretation, ExplicitGraph, Family, FamilySpec, LevelVector};
pub use poly::{IntPolynomial, RationalGF};
pub use transfer::{BigCount, TransferMatrix};
