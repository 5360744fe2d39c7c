//! Global big-integer operation tally.
//!
//! The counting pipeline reports how many big-integer additions,
//! subtractions, and multiplications it performed. The tally is a single
//! relaxed atomic; hot loops batch their contributions per chunk so the
//! counter itself stays off the critical path and the final value does not
//! depend on thread interleaving.
//!
//! Reference oracles deliberately bypass this module: the tally describes
//! the fast path only.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;

static TALLY: AtomicU64 = AtomicU64::new(0);

/// Resets the tally to zero. Callers that want a per-run count reset before
/// the run and read [`total`] after it.
pub fn reset() {
    TALLY.store(0, Ordering::Relaxed);
}

/// Current tally since the last [`reset`].
pub fn total() -> u64 {
    TALLY.load(Ordering::Relaxed)
}

/// Records `n` operations. Crate-internal; hot loops call this once per
/// chunk rather than once per element.
#[inline]
pub(crate) fn tally(n: u64) {
    TALLY.fetch_add(n, Ordering::Relaxed);
}

#[inline]
pub(crate) fn add(a: &BigInt, b: &BigInt) -> BigInt {
    tally(1);
    a + b
}

#[inline]
pub(crate) fn sub(a: &BigInt, b: &BigInt) -> BigInt {
    tally(1);
    a - b
}

#[inline]
pub(crate) fn mul(a: &BigInt, b: &BigInt) -> BigInt {
    tally(1);
    a * b
}

#[inline]
pub(crate) fn add_assign(a: &mut BigInt, b: BigInt) {
    tally(1);
    *a += b;
}

#[cfg(test)]
mod tests {
    use super::*;

    // Exact tally values are asserted in the dedicated op-count integration
    // test, which owns its process. Unit tests here and elsewhere must not
    // assume exclusive access to the global counter.
    #[test]
    fn arithmetic_helpers_compute_correctly() {
        let two = BigInt::from(2);
        let three = BigInt::from(3);
        assert_eq!(add(&two, &three), BigInt::from(5));
        assert_eq!(sub(&two, &three), BigInt::from(-1));
        assert_eq!(mul(&two, &three), BigInt::from(6));
        let mut acc = BigInt::from(1);
        add_assign(&mut acc, BigInt::from(9));
        assert_eq!(acc, BigInt::from(10));
    }
}
