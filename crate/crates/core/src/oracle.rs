//! Reference oracles: independent, slow reimplementations used to
//! cross-check the transform pipeline. Every oracle refuses inputs beyond
//! its size guard instead of grinding or overflowing, and none of them
//! touch the big-integer op tally: the tally describes the fast path only.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::wht::Spectrum;
use crate::witness::WitnessProfile;

/// Largest number of tuples (`m^k`) the exhaustive enumerator will walk.
pub const ENUMERATION_GUARD: u64 = 10_000_000;

/// Largest number of table entries (`2^d * k * m`) the naive DP will fill.
pub const NAIVE_DP_GUARD: u64 = 10_000_000;

/// Largest element count for exhaustive partition enumeration.
pub const PARTITION_GUARD: usize = 10;

/// Largest dimension for quadratic-time convolution.
pub const CONVOLUTION_GUARD: usize = 8;

fn checked_pow(base: u64, exp: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Exhaustively enumerates all ordered tuples over the instance's vectors
/// in odometer order (rightmost position varies fastest) and tallies
/// candidates, failures, and witnesses per length. Refuses when `m^k`
/// exceeds [`ENUMERATION_GUARD`].
pub fn brute_force_profile(instance: &Instance) -> Result<WitnessProfile> {
    let m = instance.vector_count();
    let k = instance.k();
    let t = instance.target();

    match checked_pow(m as u64, k) {
        Some(total) if total <= ENUMERATION_GUARD => {}
        _ => {
            return Err(Error::SizeGuard {
                oracle: "enumeration",
                reason: format!("m^k = {m}^{k} exceeds {ENUMERATION_GUARD} tuples"),
            })
        }
    }

    let vectors = instance.vectors();
    let mut cand = vec![0u64; k + 1];
    let mut fail = vec![0u64; k + 1];
    let mut wit = vec![0u64; k + 1];
    if t.is_zero() {
        cand[0] = 1;
        wit[0] = 1;
    }

    for i in 1..=k {
        if m == 0 {
            break;
        }
        let mut digits = vec![0usize; i];
        loop {
            let mut sum = crate::instance::GF2Vector::ZERO;
            for &dig in &digits {
                sum = sum.xor(vectors[dig]);
            }
            if sum == t {
                cand[i] += 1;
                let mut distinct = true;
                'pairs: for a in 0..i {
                    for b in a + 1..i {
                        if digits[a] == digits[b] {
                            distinct = false;
                            break 'pairs;
                        }
                    }
                }
                if distinct {
                    wit[i] += 1;
                } else {
                    fail[i] += 1;
                }
            }

            // Advance the odometer; stop once every position wrapped.
            let mut pos = i;
            let mut done = true;
            while pos > 0 {
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < m {
                    done = false;
                    break;
                }
                digits[pos] = 0;
            }
            if done {
                break;
            }
        }
    }

    let lift = |v: Vec<u64>| v.into_iter().map(BigInt::from).collect();
    Ok(WitnessProfile::from_parts(lift(cand), lift(fail), lift(wit)))
}

/// Witness counts per length from a dynamic program over sorted tuples.
///
/// Sort the vectors; count strictly increasing i-tuples by last element and
/// running XOR, then multiply by i! since every witness is a permutation of
/// exactly one sorted tuple. Shares nothing with the transform pipeline.
/// Refuses when the table would exceed [`NAIVE_DP_GUARD`] entries, and
/// reports a guard error on (theoretical) u128 overflow rather than
/// returning a wrong count.
pub fn naive_dp_profile(instance: &Instance) -> Result<Vec<BigInt>> {
    let d = instance.dimension();
    let m = instance.vector_count();
    let k = instance.k();
    let n = 1usize << d;

    let entries = (n as u64)
        .checked_mul(m as u64)
        .and_then(|v| v.checked_mul(k as u64));
    match entries {
        Some(total) if total <= NAIVE_DP_GUARD => {}
        _ => {
            return Err(Error::SizeGuard {
                oracle: "naive DP",
                reason: format!("2^{d} * {k} * {m} exceeds {NAIVE_DP_GUARD} table entries"),
            })
        }
    }

    let overflow = || Error::SizeGuard {
        oracle: "naive DP",
        reason: "intermediate count exceeds u128".into(),
    };

    let mut sorted: Vec<usize> = instance.vectors().iter().map(|v| v.index()).collect();
    sorted.sort_unstable();
    let t = instance.target().index();

    let mut profile = Vec::with_capacity(k + 1);
    profile.push(if t == 0 { BigInt::one() } else { BigInt::zero() });
    if k == 0 {
        return Ok(profile);
    }

    // prev[j * n + v]: increasing (i-1)-tuples ending at sorted[j] with
    // XOR v. The layer for i = 1 is an indicator.
    let mut prev = vec![0u128; m * n];
    for (j, &w) in sorted.iter().enumerate() {
        prev[j * n + w] = 1;
    }

    let mut factorial: u128 = 1;
    for i in 1..=k {
        factorial = factorial.checked_mul(i as u128).ok_or_else(overflow)?;

        if i > 1 {
            let mut cur = vec![0u128; m * n];
            // prefix[v] accumulates sum over j' < j of prev[j'][v].
            let mut prefix = vec![0u128; n];
            for (j, &w) in sorted.iter().enumerate() {
                let row = &mut cur[j * n..(j + 1) * n];
                for (v, slot) in row.iter_mut().enumerate() {
                    *slot = prefix[v ^ w];
                }
                let prev_row = &prev[j * n..(j + 1) * n];
                for (p, &value) in prefix.iter_mut().zip(prev_row.iter()) {
                    *p = p.checked_add(value).ok_or_else(overflow)?;
                }
            }
            prev = cur;
        }

        let mut sorted_tuples: u128 = 0;
        for j in 0..m {
            sorted_tuples = sorted_tuples
                .checked_add(prev[j * n + t])
                .ok_or_else(overflow)?;
        }
        let count = sorted_tuples.checked_mul(factorial).ok_or_else(overflow)?;
        profile.push(BigInt::from(count));
    }

    Ok(profile)
}

/// Witness count for the full tuple length `k` only.
pub fn naive_dp_witnesses(instance: &Instance) -> Result<BigInt> {
    Ok(naive_dp_profile(instance)?.pop().expect("non-empty profile"))
}

/// All set partitions of `{1, ..., kp}` in canonical form: classes ordered
/// by smallest element, elements ascending within a class.
#[derive(Clone, Debug)]
pub struct PartitionList {
    partitions: Vec<Vec<Vec<usize>>>,
}

impl PartitionList {
    pub fn partitions(&self) -> &[Vec<Vec<usize>>] {
        &self.partitions
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    /// Histogram over (even-size classes, odd-size classes) signatures.
    pub fn parity_histogram(&self) -> BTreeMap<(usize, usize), u64> {
        let mut histogram = BTreeMap::new();
        for partition in &self.partitions {
            let e = partition.iter().filter(|c| c.len() % 2 == 0).count();
            let o = partition.len() - e;
            *histogram.entry((e, o)).or_insert(0u64) += 1;
        }
        histogram
    }
}

/// Enumerates every set partition of `{1, ..., kp}`. Refuses `kp` beyond
/// [`PARTITION_GUARD`].
pub fn enumerate_partitions(kp: usize) -> Result<PartitionList> {
    if kp > PARTITION_GUARD {
        return Err(Error::SizeGuard {
            oracle: "partition enumeration",
            reason: format!("kp = {kp} exceeds {PARTITION_GUARD} elements"),
        });
    }

    fn extend(
        next: usize,
        kp: usize,
        classes: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if next > kp {
            out.push(classes.clone());
            return;
        }
        for i in 0..classes.len() {
            classes[i].push(next);
            extend(next + 1, kp, classes, out);
            classes[i].pop();
        }
        classes.push(vec![next]);
        extend(next + 1, kp, classes, out);
        classes.pop();
    }

    let mut partitions = Vec::new();
    extend(1, kp, &mut Vec::new(), &mut partitions);
    Ok(PartitionList { partitions })
}

/// Quadratic-time XOR convolution straight from the definition. Refuses
/// dimensions beyond [`CONVOLUTION_GUARD`].
pub fn brute_force_convolution(f: &Spectrum, g: &Spectrum) -> Result<Spectrum> {
    assert_eq!(
        f.dimension(),
        g.dimension(),
        "convolution needs matching dimensions"
    );
    let d = f.dimension();
    if d > CONVOLUTION_GUARD {
        return Err(Error::SizeGuard {
            oracle: "quadratic convolution",
            reason: format!("d = {d} exceeds {CONVOLUTION_GUARD}"),
        });
    }
    let n = 1usize << d;
    let mut out = vec![BigInt::zero(); n];
    for a in 0..n {
        for b in 0..n {
            out[a ^ b] += &f[a] * &g[b];
        }
    }
    Ok(Spectrum::new(d, out))
}
