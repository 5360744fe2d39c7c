//! Walsh-Hadamard transform over exact big integers.
//!
//! The transform of `f: GF(2)^d -> Z` is `F(y) = sum_x (-1)^{<x,y>} f(x)`.
//! It is its own inverse up to the factor 2^d, and it turns XOR convolution
//! into pointwise multiplication, which is what makes candidate counting
//! cheap. Everything here is exact integer arithmetic: the inverse divides
//! by 2^d and reports an internal error on any non-zero remainder instead of
//! rounding.
//!
//! The in-place butterfly performs exactly `d * 2^d` additions and
//! subtractions. With the `parallel` feature the butterfly levels run as a
//! recursive split driven by rayon; the operation DAG is identical to the
//! sequential version, so results and the op tally do not depend on the
//! thread count.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::instance::CharTable;
use crate::ops;

/// Below this many entries a subtransform runs sequentially; splitting
/// further would drown in task overhead.
#[cfg(feature = "parallel")]
const PARALLEL_CUTOFF: usize = 1 << 13;

/// Chunk length for parallel element-wise loops. Fixed so that the op tally
/// batching is independent of the worker count.
#[cfg(feature = "parallel")]
const CHUNK: usize = 1 << 13;

/// A function `GF(2)^d -> Z` stored densely: entry `x` is the value at the
/// vector with index `x`. The same type holds both a function and its
/// transform; the name reflects the dominant use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    d: usize,
    values: Vec<BigInt>,
}

impl Spectrum {
    /// Wraps a dense value table. Panics unless `values.len() == 2^d`.
    pub fn new(d: usize, values: Vec<BigInt>) -> Spectrum {
        assert_eq!(values.len(), 1usize << d, "need exactly 2^d values");
        Spectrum { d, values }
    }

    pub fn zeros(d: usize) -> Spectrum {
        Spectrum::new(d, vec![BigInt::zero(); 1usize << d])
    }

    /// Convenience constructor for small literal tables.
    pub fn from_integers(d: usize, values: &[i64]) -> Spectrum {
        Spectrum::new(d, values.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Lifts a characteristic table into the integers.
    pub fn from_char_table(table: &CharTable) -> Spectrum {
        Spectrum::new(
            table.dimension(),
            table.values().iter().map(|&b| BigInt::from(b)).collect(),
        )
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn into_values(self) -> Vec<BigInt> {
        self.values
    }
}

impl std::ops::Index<usize> for Spectrum {
    type Output = BigInt;

    fn index(&self, i: usize) -> &BigInt {
        &self.values[i]
    }
}

/// One butterfly: `(a, b) <- (a + b, a - b)`. Two tallied operations,
/// recorded in batches by the callers.
#[inline]
fn butterfly(a: &mut BigInt, b: &mut BigInt) {
    let diff = &*a - &*b;
    *a += std::mem::take(b);
    *b = diff;
}

/// Butterflies `lo[i]` with `hi[i]` for all `i`, in parallel chunks.
#[cfg(feature = "parallel")]
fn butterfly_halves(lo: &mut [BigInt], hi: &mut [BigInt]) {
    debug_assert_eq!(lo.len(), hi.len());
    lo.par_chunks_mut(CHUNK)
        .zip(hi.par_chunks_mut(CHUNK))
        .for_each(|(lc, hc)| {
            for (a, b) in lc.iter_mut().zip(hc.iter_mut()) {
                butterfly(a, b);
            }
            ops::tally(2 * lc.len() as u64);
        });
}

/// Iterative in-place transform, smallest stride first.
fn transform_sequential(values: &mut [BigInt]) {
    let n = values.len();
    let mut half = 1;
    while half < n {
        for block in values.chunks_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                butterfly(a, b);
            }
        }
        ops::tally(n as u64);
        half <<= 1;
    }
}

/// Recursive split: butterfly the two halves against each other, then
/// transform each half. Because the butterfly levels commute, this performs
/// the same operations as the iterative order, just grouped so that the two
/// halves become independent tasks.
#[cfg(feature = "parallel")]
fn transform_recursive(values: &mut [BigInt]) {
    let n = values.len();
    if n <= PARALLEL_CUTOFF {
        transform_sequential(values);
        return;
    }
    let (lo, hi) = values.split_at_mut(n / 2);
    butterfly_halves(lo, hi);
    rayon::join(|| transform_recursive(lo), || transform_recursive(hi));
}

pub(crate) fn transform_slice(values: &mut [BigInt]) {
    debug_assert!(values.len().is_power_of_two());
    #[cfg(feature = "parallel")]
    transform_recursive(values);
    #[cfg(not(feature = "parallel"))]
    transform_sequential(values);
}

/// In-place forward transform.
pub fn fwht_in_place(spectrum: &mut Spectrum) {
    transform_slice(&mut spectrum.values);
}

/// Forward transform of a borrowed spectrum.
pub fn fwht(spectrum: &Spectrum) -> Spectrum {
    let mut out = spectrum.clone();
    fwht_in_place(&mut out);
    out
}

/// Divides every entry by 2^d, failing on any non-zero remainder.
pub(crate) fn scale_down_exact(
    values: &mut [BigInt],
    d: usize,
    context: &'static str,
) -> Result<()> {
    let denom: BigInt = BigInt::one() << d;
    let scale = |(i, v): (usize, &mut BigInt)| -> Result<()> {
        let (q, r) = v.div_rem(&denom);
        if !r.is_zero() {
            return Err(Error::Internal {
                context,
                detail: format!("entry {i} = {v} is not divisible by 2^{d}"),
            });
        }
        *v = q;
        Ok(())
    };
    #[cfg(feature = "parallel")]
    {
        values
            .par_chunks_mut(CHUNK)
            .enumerate()
            .try_for_each(|(ci, chunk)| {
                chunk
                    .iter_mut()
                    .enumerate()
                    .try_for_each(|(j, v)| scale((ci * CHUNK + j, v)))
            })
    }
    #[cfg(not(feature = "parallel"))]
    {
        values.iter_mut().enumerate().try_for_each(scale)
    }
}

/// In-place inverse transform: forward transform followed by exact division
/// by 2^d. An inexact division signals a bug and comes back as
/// [`Error::Internal`].
pub fn inverse_fwht_in_place(spectrum: &mut Spectrum) -> Result<()> {
    transform_slice(&mut spectrum.values);
    scale_down_exact(&mut spectrum.values, spectrum.d, "inverse transform")
}

/// Inverse transform of a borrowed spectrum.
pub fn inverse_fwht(spectrum: &Spectrum) -> Result<Spectrum> {
    let mut out = spectrum.clone();
    inverse_fwht_in_place(&mut out)?;
    Ok(out)
}

/// Entry-wise product of equally sized tables, tallied.
pub(crate) fn pointwise_mul_assign(acc: &mut [BigInt], other: &[BigInt]) {
    debug_assert_eq!(acc.len(), other.len());
    #[cfg(feature = "parallel")]
    {
        acc.par_chunks_mut(CHUNK)
            .zip(other.par_chunks(CHUNK))
            .for_each(|(ac, oc)| {
                for (a, o) in ac.iter_mut().zip(oc.iter()) {
                    *a *= o;
                }
                ops::tally(ac.len() as u64);
            });
    }
    #[cfg(not(feature = "parallel"))]
    {
        for (a, o) in acc.iter_mut().zip(other.iter()) {
            *a *= o;
        }
        ops::tally(acc.len() as u64);
    }
}

/// XOR convolution: `(f * g)(x) = sum_{a ^ b = x} f(a) g(b)`, computed by
/// transforming both sides, multiplying pointwise, and inverting. Panics if
/// the dimensions differ. For integer inputs the final division is always
/// exact.
pub fn xor_convolve(f: &Spectrum, g: &Spectrum) -> Spectrum {
    assert_eq!(f.d, g.d, "convolution needs matching dimensions");
    let mut fh = fwht(f);
    let gh = fwht(g);
    pointwise_mul_assign(&mut fh.values, gh.values());
    inverse_fwht_in_place(&mut fh)
        .expect("convolution of integer tables is exactly divisible by 2^d");
    fh
}
