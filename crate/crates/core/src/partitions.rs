//! Set-partition combinatorics by class parity.
//!
//! The failure correction never looks at a partition itself, only at how
//! many of its classes have even size and how many have odd size. This
//! module counts, for a set of `s` labeled elements, the ordered sequences
//! of `x` even-sized and `y` odd-sized disjoint non-empty classes covering
//! the set; dividing by `(x + y)!` turns that into the number of set
//! partitions with that parity signature.
//!
//! The ordered table satisfies a peel-off-the-first-class recurrence: the
//! class containing no fixed anchor, just "the first in the sequence", has
//! some size p chosen from the s elements, and the rest recurse. Building
//! all tables up to `s = k` costs O(k^3) entries at O(k) operations each.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ops;

/// Pascal's triangle up to row `n`, exact.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialTable {
    pub fn build(n: usize) -> BinomialTable {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
        for s in 0..=n {
            let mut row = vec![BigInt::one(); s + 1];
            for p in 1..s {
                row[p] = ops::add(&rows[s - 1][p - 1], &rows[s - 1][p]);
            }
            rows.push(row);
        }
        BinomialTable { rows }
    }

    /// `s choose p`; zero when `p > s`.
    pub fn choose(&self, s: usize, p: usize) -> BigInt {
        if p > s {
            BigInt::zero()
        } else {
            self.rows[s][p].clone()
        }
    }
}

/// `counts[s][x][y]`: ordered sequences of `x` even and `y` odd non-empty
/// classes partitioning `s` labeled elements. Since an even class has at
/// least 2 elements, `x` is capped at `k/2` and larger values are implicitly
/// zero.
#[derive(Clone, Debug)]
pub struct OrderedParityTable {
    k: usize,
    even_cap: usize,
    counts: Vec<Vec<Vec<BigInt>>>,
}

impl OrderedParityTable {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Ordered class-sequence count for `s` elements, `x` even classes, and
    /// `y` odd classes. Out-of-range parameters yield zero.
    pub fn count(&self, s: usize, x: usize, y: usize) -> BigInt {
        if s > self.k || x > self.even_cap || y > s {
            BigInt::zero()
        } else {
            self.counts[s][x][y].clone()
        }
    }
}

/// Everything the failure correction needs for one value of `k`.
#[derive(Clone, Debug)]
pub struct ParityTables {
    pub binomial: BinomialTable,
    pub ordered: OrderedParityTable,
}

/// Builds the binomial and ordered parity tables for tuple lengths up to
/// `k`.
pub fn build_parity_tables(k: usize) -> ParityTables {
    let binomial = BinomialTable::build(k);
    let even_cap = k / 2;

    let mut counts =
        vec![vec![vec![BigInt::zero(); k + 1]; even_cap + 1]; k + 1];
    counts[0][0][0] = BigInt::one();

    for s in 1..=k {
        for x in 0..=even_cap.min(s / 2) {
            for y in 0..=s {
                if 2 * x + y > s {
                    break;
                }
                // Choose the size p of the first class in the sequence and
                // the p elements it contains; the remaining s - p elements
                // form the rest of the sequence.
                let mut acc = BigInt::zero();
                for p in 1..=s {
                    let prev = if p % 2 == 0 {
                        if x == 0 {
                            continue;
                        }
                        &counts[s - p][x - 1][y]
                    } else {
                        if y == 0 {
                            continue;
                        }
                        &counts[s - p][x][y - 1]
                    };
                    if prev.is_zero() {
                        continue;
                    }
                    let term = ops::mul(&binomial.rows[s][p], prev);
                    ops::add_assign(&mut acc, term);
                }
                counts[s][x][y] = acc;
            }
        }
    }

    ParityTables {
        binomial,
        ordered: OrderedParityTable {
            k,
            even_cap,
            counts,
        },
    }
}

/// Number of set partitions of `kp` labeled elements into exactly `e` even
/// and `o` odd classes: the ordered count divided by `(e + o)!`, which is
/// always exact.
pub fn unordered_parity_count(
    tables: &ParityTables,
    e: usize,
    o: usize,
    kp: usize,
) -> Result<BigInt> {
    assert!(
        kp <= tables.ordered.k(),
        "tables were built for k = {}, asked about kp = {kp}",
        tables.ordered.k()
    );
    let ordered = tables.ordered.count(kp, e, o);
    if ordered.is_zero() {
        return Ok(BigInt::zero());
    }
    let (q, r) = ordered.div_rem(&factorial(e + o));
    if !r.is_zero() {
        return Err(Error::Internal {
            context: "parity partition count",
            detail: format!(
                "ordered count {ordered} for (e={e}, o={o}, kp={kp}) is not divisible by ({e}+{o})!"
            ),
        });
    }
    Ok(q)
}

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc = ops::mul(&acc, &BigInt::from(i));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_match_known_rows() {
        let t = BinomialTable::build(6);
        assert_eq!(t.choose(0, 0), BigInt::one());
        assert_eq!(t.choose(4, 2), BigInt::from(6));
        assert_eq!(t.choose(6, 3), BigInt::from(20));
        assert_eq!(t.choose(3, 5), BigInt::zero());
    }

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(1), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }

    #[test]
    fn ordered_counts_base_cases() {
        let t = build_parity_tables(4);
        // Zero elements: exactly the empty sequence.
        assert_eq!(t.ordered.count(0, 0, 0), BigInt::one());
        assert_eq!(t.ordered.count(0, 0, 1), BigInt::zero());
        // One element: a single odd class.
        assert_eq!(t.ordered.count(1, 0, 1), BigInt::one());
        assert_eq!(t.ordered.count(1, 1, 0), BigInt::zero());
        // Two elements: either one even class or two ordered singletons.
        assert_eq!(t.ordered.count(2, 1, 0), BigInt::one());
        assert_eq!(t.ordered.count(2, 0, 2), BigInt::from(2));
    }

    #[test]
    fn ordered_counts_hand_checked() {
        let t = build_parity_tables(4);
        // Four elements in two even classes: C(4,2) splits, each ordered
        // sequence counted once per order, sizes 2+2.
        assert_eq!(t.ordered.count(4, 2, 0), BigInt::from(6));
        // One even and two odd classes: sizes (2,1,1); 6 unordered
        // partitions times 3! orders.
        assert_eq!(t.ordered.count(4, 1, 2), BigInt::from(36));
        // Two odd classes covering four elements: sizes 1+3 or 3+1.
        assert_eq!(t.ordered.count(4, 0, 2), BigInt::from(8));
        // Sizes 2+1 in either order: C(3,2) + C(3,1) sequences.
        assert_eq!(t.ordered.count(3, 1, 1), BigInt::from(6));
        // Total class sizes have the wrong parity: impossible.
        assert_eq!(t.ordered.count(3, 1, 0), BigInt::zero());
        assert_eq!(t.ordered.count(4, 0, 1), BigInt::zero());
    }

    #[test]
    fn unordered_counts_match_direct_reasoning() {
        let t = build_parity_tables(6);
        assert_eq!(
            unordered_parity_count(&t, 1, 0, 2).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            unordered_parity_count(&t, 2, 0, 4).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            unordered_parity_count(&t, 0, 1, 3).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            unordered_parity_count(&t, 0, 2, 4).unwrap(),
            BigInt::from(4)
        );
        // Impossible signatures are zero.
        assert_eq!(
            unordered_parity_count(&t, 0, 1, 2).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            unordered_parity_count(&t, 3, 0, 4).unwrap(),
            BigInt::zero()
        );
    }
}
