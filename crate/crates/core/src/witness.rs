//! Witness counting: candidates minus failures.
//!
//! A witness of length i is an ordered i-tuple of pairwise distinct
//! instance vectors XORing to the target. Candidate tuples allow repeats;
//! the correction subtracts the failures, tuples with at least one repeated
//! vector.
//!
//! Each failure induces a partition of its i positions into groups holding
//! the same vector. Because x ^ x = 0, the even groups cancel out of the
//! XOR, so collapsing every odd group to a single occurrence leaves a
//! shorter witness. Counting failures therefore only needs, per parity
//! signature (e even groups, o odd groups): the number of partitions with
//! that signature, the number of ways to pick distinct vectors for the even
//! groups, and the number of shorter witnesses of length o. Non-trivial
//! signatures satisfy e + o < i, so a single pass for i = 1..=k resolves
//! the whole profile bottom-up.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use crate::candidates::count_candidates_profile;
use crate::error::{Error, Result};
use crate::instance::{build_char_table, Instance};
use crate::ops;
use crate::partitions::{build_parity_tables, unordered_parity_count, ParityTables};

/// Candidate, failure, and witness counts for every tuple length up to k.
/// `wit[i] = cand[i] - fail[i]` holds by construction and every entry is
/// non-negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessProfile {
    cand: Vec<BigInt>,
    fail: Vec<BigInt>,
    wit: Vec<BigInt>,
}

impl WitnessProfile {
    pub(crate) fn from_parts(
        cand: Vec<BigInt>,
        fail: Vec<BigInt>,
        wit: Vec<BigInt>,
    ) -> WitnessProfile {
        debug_assert_eq!(cand.len(), fail.len());
        debug_assert_eq!(cand.len(), wit.len());
        WitnessProfile { cand, fail, wit }
    }

    pub fn k(&self) -> usize {
        self.wit.len() - 1
    }

    pub fn cand(&self) -> &[BigInt] {
        &self.cand
    }

    pub fn fail(&self) -> &[BigInt] {
        &self.fail
    }

    pub fn wit(&self) -> &[BigInt] {
        &self.wit
    }

    /// Prefix sums of the witness counts: tuples of length at most i.
    pub fn cumulative_wit(&self) -> Vec<BigInt> {
        let mut acc = BigInt::zero();
        self.wit
            .iter()
            .map(|w| {
                acc += w;
                acc.clone()
            })
            .collect()
    }
}

/// Falling factorial `(m - o) * (m - o - 1) * ... * (m - o - e + 1)`: the
/// number of ways to assign distinct vectors to `e` even groups when `o`
/// vectors are already taken by the odd groups. Zero when fewer than `e`
/// vectors remain.
pub fn falling_factorial(m: usize, o: usize, e: usize) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..e {
        let factor = m as i64 - o as i64 - j as i64;
        if factor <= 0 {
            return BigInt::zero();
        }
        acc = ops::mul(&acc, &BigInt::from(factor));
    }
    acc
}

/// Failures of length `kp`, given the witness counts for all shorter
/// lengths (`wit_prefix[o]` for `o < kp` must be filled in).
///
/// Only signatures with `e + o < kp` describe failures; `e + o = kp` forces
/// all-singleton groups, i.e. a distinct tuple. The total group size parity
/// also pins `o` to the parity of `kp`, so other values of `o` contribute
/// nothing and are skipped outright.
pub fn count_failures(
    wit_prefix: &[BigInt],
    tables: &ParityTables,
    m: usize,
    kp: usize,
) -> Result<BigInt> {
    let mut total = BigInt::zero();
    let mut o = kp % 2;
    while o < kp {
        if !wit_prefix[o].is_zero() {
            let e_max = (kp - o) / 2;
            for e in 0..=e_max {
                if e + o >= kp {
                    break;
                }
                let partitions = unordered_parity_count(tables, e, o, kp)?;
                if partitions.is_zero() {
                    continue;
                }
                let placements = falling_factorial(m, o, e);
                if placements.is_zero() {
                    continue;
                }
                let per_witness = ops::mul(&partitions, &placements);
                let term = ops::mul(&per_witness, &wit_prefix[o]);
                ops::add_assign(&mut total, term);
            }
        }
        o += 2;
    }
    Ok(total)
}

/// Full counting pipeline for an instance: candidate profile via the
/// transform, then failure correction bottom-up. Errors only surface from
/// internal exactness checks; any such error is a bug, not bad input.
pub fn count_witnesses(instance: &Instance) -> Result<WitnessProfile> {
    let table = build_char_table(instance);
    let m = instance.vector_count();
    let k = instance.k();

    let cand = count_candidates_profile(&table, instance.target(), k)?.into_counts();
    let tables = build_parity_tables(k);

    let mut fail = Vec::with_capacity(k + 1);
    let mut wit = Vec::with_capacity(k + 1);
    fail.push(BigInt::zero());
    wit.push(cand[0].clone());

    for (kp, c) in cand.iter().enumerate().skip(1) {
        let f = count_failures(&wit, &tables, m, kp)?;
        let w = ops::sub(c, &f);
        if w.sign() == Sign::Minus {
            return Err(Error::Internal {
                context: "witness correction",
                detail: format!("negative witness count {w} at tuple length {kp}"),
            });
        }
        fail.push(f);
        wit.push(w);
    }

    Ok(WitnessProfile { cand, fail, wit })
}
