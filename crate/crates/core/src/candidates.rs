//! Candidate counting: ordered i-tuples of instance vectors (repetition
//! allowed) that XOR to the target, for every i up to k.
//!
//! The i-fold XOR convolution of the characteristic function, evaluated at
//! the target, is exactly this count. Convolving in the transform domain
//! needs a single forward transform: keep a running pointwise power of the
//! transformed table and read off one target evaluation per i. A full
//! inverse per i would do d*2^d work each time; evaluating only at the
//! target is a signed sum over the power table followed by one exact
//! division by 2^d.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::instance::{CharTable, GF2Vector};
use crate::ops;
use crate::wht::{pointwise_mul_assign, scale_down_exact, transform_slice};

/// Chunk length for the signed target evaluation. Fixed (not derived from
/// the worker count) so the partial-sum tree and the op tally are identical
/// across thread counts.
const DOT_CHUNK: usize = 1 << 14;

/// Candidate counts indexed by tuple length, `counts()[i]` for i in 0..=k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateProfile {
    counts: Vec<BigInt>,
}

impl CandidateProfile {
    pub fn k(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    pub fn count(&self, i: usize) -> &BigInt {
        &self.counts[i]
    }

    pub fn into_counts(self) -> Vec<BigInt> {
        self.counts
    }
}

/// Signed sum `sum_x (-1)^{<x,t>} values[x]`, the transform-domain
/// evaluation of the underlying function at `t` scaled by 2^d.
fn signed_target_sum(values: &[BigInt], target: GF2Vector) -> BigInt {
    let chunk_sum = |(ci, chunk): (usize, &[BigInt])| -> BigInt {
        let base = ci * DOT_CHUNK;
        let mut acc = BigInt::zero();
        for (j, v) in chunk.iter().enumerate() {
            if GF2Vector((base + j) as u32).odd_overlap(target) {
                acc -= v;
            } else {
                acc += v;
            }
        }
        ops::tally(chunk.len() as u64);
        acc
    };

    #[cfg(feature = "parallel")]
    let partials: Vec<BigInt> = values
        .par_chunks(DOT_CHUNK)
        .enumerate()
        .map(chunk_sum)
        .collect();
    #[cfg(not(feature = "parallel"))]
    let partials: Vec<BigInt> = values.chunks(DOT_CHUNK).enumerate().map(chunk_sum).collect();

    let mut total = BigInt::zero();
    for p in partials {
        ops::add_assign(&mut total, p);
    }
    total
}

/// Divides the signed sum by 2^d and checks the result is a count.
fn finish_count(sum: BigInt, d: usize, i: usize) -> Result<BigInt> {
    let denom: BigInt = BigInt::one() << d;
    let (q, r) = sum.div_rem(&denom);
    if !r.is_zero() {
        return Err(Error::Internal {
            context: "candidate extraction",
            detail: format!("target sum {sum} for tuple length {i} is not divisible by 2^{d}"),
        });
    }
    if q.sign() == Sign::Minus {
        return Err(Error::Internal {
            context: "candidate extraction",
            detail: format!("negative candidate count {q} for tuple length {i}"),
        });
    }
    Ok(q)
}

/// Counts candidate tuples of every length up to `k`. One forward transform
/// of the characteristic table, then one pointwise multiplication and one
/// target evaluation per additional tuple length.
pub fn count_candidates_profile(
    table: &CharTable,
    target: GF2Vector,
    k: usize,
) -> Result<CandidateProfile> {
    let d = table.dimension();
    debug_assert!(target.fits(d), "target must fit in dimension {d}");

    // The empty tuple XORs to 0, so counts[0] is the indicator of t = 0.
    let mut counts = Vec::with_capacity(k + 1);
    counts.push(if target.is_zero() {
        BigInt::one()
    } else {
        BigInt::zero()
    });
    if k == 0 {
        return Ok(CandidateProfile { counts });
    }

    let mut transformed: Vec<BigInt> =
        table.values().iter().map(|&b| BigInt::from(b)).collect();
    transform_slice(&mut transformed);

    counts.push(finish_count(
        signed_target_sum(&transformed, target),
        d,
        1,
    )?);

    if k >= 2 {
        let mut power = transformed.clone();
        for i in 2..=k {
            pointwise_mul_assign(&mut power, &transformed);
            counts.push(finish_count(signed_target_sum(&power, target), d, i)?);
        }
    }

    Ok(CandidateProfile { counts })
}

/// Slow cross-check for the target-evaluation shortcut: reads each count
/// out of a full inverse transform of the i-th pointwise power. Only
/// sensible at test scale.
pub fn count_candidates_profile_via_inverse(
    table: &CharTable,
    target: GF2Vector,
    k: usize,
) -> Result<CandidateProfile> {
    let d = table.dimension();
    let mut counts = Vec::with_capacity(k + 1);
    counts.push(if target.is_zero() {
        BigInt::one()
    } else {
        BigInt::zero()
    });
    if k == 0 {
        return Ok(CandidateProfile { counts });
    }

    let mut transformed: Vec<BigInt> =
        table.values().iter().map(|&b| BigInt::from(b)).collect();
    transform_slice(&mut transformed);

    let mut power = transformed.clone();
    for i in 1..=k {
        if i >= 2 {
            pointwise_mul_assign(&mut power, &transformed);
        }
        let mut inverted = power.clone();
        transform_slice(&mut inverted);
        scale_down_exact(&mut inverted, d, "candidate cross-check")?;
        let value = inverted[target.index()].clone();
        if value.sign() == Sign::Minus {
            return Err(Error::Internal {
                context: "candidate cross-check",
                detail: format!("negative count {value} for tuple length {i}"),
            });
        }
        counts.push(value);
    }
    Ok(CandidateProfile { counts })
}
