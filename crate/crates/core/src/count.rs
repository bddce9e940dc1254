//! The counting scalar.
//!
//! Every enumerative quantity in this crate (array counts, h-vector entries,
//! Hilbert function values, face numbers) is a non-negative integer. The
//! algorithms are written against [`Count`] so callers can pick the carrier:
//! [`BigUint`] for unbounded exact results (the default used by the crate-root
//! aliases), or `u64`/`u128` when the instance is known to be small.
//! Fixed-width carriers panic on overflow in debug builds.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub trait Count:
    Clone
    + Debug
    + Display
    + Ord
    + Send
    + Sync
    + Zero
    + One
    + From<u32>
    + Add<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
{
    fn from_usize(n: usize) -> Self {
        // u32 chunks keep this free of a FromPrimitive bound.
        let mut acc = Self::zero();
        let mut scale = Self::one();
        let mut rest = n as u64;
        while rest > 0 {
            let digit = (rest & 0xffff_ffff) as u32;
            acc = acc + scale.clone() * Self::from(digit);
            rest >>= 32;
            if rest > 0 {
                scale = scale * Self::from(1u32 << 16) * Self::from(1u32 << 16);
            }
        }
        acc
    }
}

impl<T> Count for T where
    T: Clone
        + Debug
        + Display
        + Ord
        + Send
        + Sync
        + Zero
        + One
        + From<u32>
        + Add<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + for<'a> Add<&'a T, Output = T>
{
}

/// `binom(n, k)` with the convention that it vanishes unless `0 <= k <= n`.
///
/// The upper argument may be negative; the Hilbert-series manipulations sum
/// over ranges where that happens and rely on the zero.
pub fn binom<C: Count>(n: i64, k: i64) -> C {
    if k < 0 || n < 0 || k > n {
        return C::zero();
    }
    let k = k.min(n - k);
    let mut acc = C::one();
    for i in 1..=k {
        // acc * (n-k+i) is divisible by i at every step.
        acc = acc * C::from_usize((n - k + i) as usize) / C::from_usize(i as usize);
    }
    acc
}

/// Convenience for the default carrier.
pub fn binom_big(n: i64, k: i64) -> BigUint {
    binom(n, k)
}
