//! Lattice-path combinatorics for ladder determinantal rings.
//!
//! Exact h-vectors and Hilbert series from non-intersecting families of
//! two-rowed arrays, the cutting-point injection behind log-concavity in the
//! 2x2-minor case, and brute-force oracles to check both.

pub mod arrays;
pub mod complex_oracle;
pub mod count;
pub mod error;
pub mod hilbert;
pub mod injection;
pub mod ladder;
pub mod suite;

pub use arrays::{Bounds, TwoRowedArray};
pub use count::Count;
pub use error::{Error, Result};
pub use ladder::{Cogenerator, LadderRegion, PathSystemData, Point};

/// h-vector with fixed-width entries, for instances known to be small.
pub type HVectorU64 = hilbert::HVector<u64>;
pub type HVector = hilbert::HVector<num_bigint::BigUint>;
pub type HilbertSeries = hilbert::HilbertSeries<num_bigint::BigUint>;
