//! Exact computer algebra for the ring of symmetric functions and its
//! finite-variable truncations: the five classical bases and conversions
//! between them, plethysm and the other lambda-ring operations, symmetric
//! group characters with the Frobenius characteristic, and a brute-force
//! commutant oracle for tensor powers of the defining matrix-monoid
//! representation.
//!
//! All arithmetic is exact (big integers and big rationals); nothing is
//! floating point.

pub mod error;
pub mod expr;
pub mod lambda;
pub mod linalg;
pub mod partition;
pub mod repsn;
pub mod schur_weyl;
pub mod symfunc;
pub mod tableaux;
pub mod transforms;
pub mod truncate;

use std::sync::atomic::{AtomicUsize, Ordering};

pub use error::{Error, Result};
pub use partition::Partition;
pub use symfunc::{Basis, SymFunc};

/// Exact rational scalar used throughout.
pub type Rational = num::BigRational;
/// Exact integer scalar used throughout.
pub type Integer = num::BigInt;

static DEGREE_CAP: AtomicUsize = AtomicUsize::new(20);

/// Current global degree cap guarding every enumeration.
pub fn degree_cap() -> usize {
    DEGREE_CAP.load(Ordering::Relaxed)
}

/// Override the global degree cap (default 20).
pub fn set_degree_cap(cap: usize) {
    DEGREE_CAP.store(cap, Ordering::Relaxed);
}

pub(crate) fn check_degree_cap(d: usize) -> Result<()> {
    let cap = degree_cap();
    if d > cap {
        Err(Error::DegreeCapExceeded { degree: d, cap })
    } else {
        Ok(())
    }
}
