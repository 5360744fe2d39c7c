//! Counting perfect matchings in uniform hypergraphs via witness counting.
//!
//! Encode each edge of an l-uniform hypergraph on n vertices as its
//! characteristic vector over GF(2)^n and ask for witnesses of length
//! k = n / l with the all-ones target. A tuple of k distinct edges XORs to
//! all-ones exactly when every vertex is covered an odd number of times;
//! the k edges carry k * l = n vertex slots in total, and n vertices with
//! odd cover counts can only split n slots as one slot each. So the
//! witnesses are precisely the ordered perfect matchings, k! per matching.
//!
//! The text format is line oriented:
//!
//! ```text
//! n=4 l=2
//! 0 1
//! 2 3
//! ```

use std::collections::HashSet;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::instance::{GF2Vector, Instance, MAX_DIMENSION};
use crate::partitions::factorial;
use crate::witness::count_witnesses;

/// Backtracking node budget for the exhaustive matching counter.
const BACKTRACK_BUDGET: u64 = 100_000_000;

/// An l-uniform hypergraph on vertices `0..n` with distinct edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    uniformity: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Validates and normalizes: every edge must consist of exactly
    /// `uniformity` distinct vertices below `n`, and no edge may repeat.
    /// Edges are stored with sorted vertices, in input order.
    pub fn new(n: usize, uniformity: usize, edges: Vec<Vec<usize>>) -> Result<Hypergraph> {
        if uniformity < 2 {
            return Err(Error::Invalid {
                reason: format!("uniformity l must be at least 2, got {uniformity}"),
            });
        }
        if n > 63 {
            return Err(Error::Invalid {
                reason: format!("vertex count n = {n} exceeds the supported 63"),
            });
        }
        let mut normalized = Vec::with_capacity(edges.len());
        let mut seen = HashSet::with_capacity(edges.len());
        for mut edge in edges {
            edge.sort_unstable();
            if edge.len() != uniformity {
                return Err(Error::Invalid {
                    reason: format!(
                        "edge {edge:?} has {} vertices, expected {uniformity}",
                        edge.len()
                    ),
                });
            }
            if edge.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Invalid {
                    reason: format!("edge {edge:?} repeats a vertex"),
                });
            }
            if let Some(&v) = edge.iter().find(|&&v| v >= n) {
                return Err(Error::Invalid {
                    reason: format!("edge {edge:?} mentions vertex {v}, but n = {n}"),
                });
            }
            if !seen.insert(edge.clone()) {
                return Err(Error::Invalid {
                    reason: format!("edge {edge:?} appears twice"),
                });
            }
            normalized.push(edge);
        }
        Ok(Hypergraph {
            n,
            uniformity,
            edges: normalized,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.uniformity
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Serializes back to the text format.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("n={} l={}\n", self.n, self.uniformity);
        for edge in &self.edges {
            let words: Vec<String> = edge.iter().map(|v| v.to_string()).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Parses the hypergraph text format. Errors carry 1-based line numbers
/// where the offending text is known.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line))
        }
    });

    let (header_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        reason: "missing header line \"n=<int> l=<int>\"".into(),
    })?;
    let mut n = None;
    let mut l = None;
    for token in header.split_whitespace() {
        let (key, value) = token.split_once('=').ok_or_else(|| Error::Parse {
            line: header_no,
            reason: format!("expected key=value, got {token:?}"),
        })?;
        let parsed: usize = value.parse().map_err(|_| Error::Parse {
            line: header_no,
            reason: format!("invalid integer {value:?} for {key}"),
        })?;
        match key {
            "n" => n = Some(parsed),
            "l" => l = Some(parsed),
            other => {
                return Err(Error::Parse {
                    line: header_no,
                    reason: format!("unknown header key {other:?}"),
                })
            }
        }
    }
    let (n, l) = match (n, l) {
        (Some(n), Some(l)) => (n, l),
        _ => {
            return Err(Error::Parse {
                line: header_no,
                reason: "header must declare both n= and l=".into(),
            })
        }
    };

    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let mut edge = Vec::new();
        for word in line.split_whitespace() {
            let v: usize = word.parse().map_err(|_| Error::Parse {
                line: line_no,
                reason: format!("invalid vertex {word:?}"),
            })?;
            edge.push(v);
        }
        edges.push(edge);
    }

    Hypergraph::new(n, l, edges)
}

/// Outcome of the matching-to-witness reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    /// Counting witnesses of this instance counts matchings (times k!).
    Instance(Instance),
    /// `l` does not divide `n`: no perfect matching can exist.
    TriviallyZero,
}

/// Builds the witness instance whose length-k witnesses are the ordered
/// perfect matchings: one characteristic vector per edge, all-ones target,
/// k = n / l. Fails if `n` exceeds the dimension ceiling of the counting
/// pipeline.
pub fn reduce_to_witness_instance(graph: &Hypergraph) -> Result<Reduction> {
    let n = graph.vertex_count();
    if n > MAX_DIMENSION {
        return Err(Error::DimensionCap {
            d: n,
            cap: MAX_DIMENSION,
        });
    }
    if !n.is_multiple_of(graph.uniformity()) {
        return Ok(Reduction::TriviallyZero);
    }
    let k = n / graph.uniformity();

    let vectors: Vec<GF2Vector> = graph
        .edges()
        .iter()
        .map(|edge| {
            let mut bits = 0u32;
            for &v in edge {
                bits |= 1 << v;
            }
            GF2Vector(bits)
        })
        .collect();
    // Distinct edges give distinct characteristic vectors, so this cannot
    // fail for a validated hypergraph.
    let all_ones = GF2Vector(if n == 0 { 0 } else { ((1u64 << n) - 1) as u32 });
    let instance = Instance::new(n, vectors, all_ones, k)?;
    Ok(Reduction::Instance(instance))
}

/// Number of perfect matchings, exactly. Witness tuples are ordered, so the
/// witness count at length k is k! times the matching count; the division
/// is checked and its failure would indicate a bug.
pub fn count_perfect_matchings(graph: &Hypergraph) -> Result<BigInt> {
    match reduce_to_witness_instance(graph)? {
        Reduction::TriviallyZero => Ok(BigInt::zero()),
        Reduction::Instance(instance) => {
            let k = instance.k();
            let profile = count_witnesses(&instance)?;
            let ordered = &profile.wit()[k];
            let (q, r) = ordered.div_rem(&factorial(k));
            if !r.is_zero() || q.sign() == Sign::Minus {
                return Err(Error::Internal {
                    context: "matching extraction",
                    detail: format!("witness count {ordered} is not {k}! times a matching count"),
                });
            }
            Ok(q)
        }
    }
}

/// Exhaustive matching counter: backtracks over the lowest uncovered
/// vertex, trying every edge that contains it. Refuses after
/// [`BACKTRACK_BUDGET`] visited nodes.
pub fn brute_force_matchings(graph: &Hypergraph) -> Result<BigInt> {
    let n = graph.vertex_count();
    if !n.is_multiple_of(graph.uniformity()) {
        return Ok(BigInt::zero());
    }
    if n == 0 {
        // The empty matching covers the empty vertex set.
        return Ok(BigInt::from(1));
    }

    let masks: Vec<u64> = graph
        .edges()
        .iter()
        .map(|edge| edge.iter().fold(0u64, |acc, &v| acc | 1 << v))
        .collect();
    // Edges grouped by their lowest vertex, the branching key.
    let mut by_lowest: Vec<Vec<u64>> = vec![Vec::new(); n];
    for mask in &masks {
        by_lowest[mask.trailing_zeros() as usize].push(*mask);
    }

    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut budget = BACKTRACK_BUDGET;

    fn recurse(
        covered: u64,
        full: u64,
        by_lowest: &[Vec<u64>],
        budget: &mut u64,
    ) -> Result<u64> {
        if *budget == 0 {
            return Err(Error::SizeGuard {
                oracle: "matching backtracker",
                reason: format!("exceeded {BACKTRACK_BUDGET} nodes"),
            });
        }
        *budget -= 1;
        if covered == full {
            return Ok(1);
        }
        let lowest = (!covered & full).trailing_zeros() as usize;
        let mut count = 0u64;
        for &mask in &by_lowest[lowest] {
            if mask & covered == 0 {
                count += recurse(covered | mask, full, by_lowest, budget)?;
            }
        }
        Ok(count)
    }

    recurse(0, full, &by_lowest, &mut budget).map(BigInt::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, l: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, l, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    /// Complete graph K_n as a 2-uniform hypergraph.
    fn complete_graph(n: usize) -> Hypergraph {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push(vec![a, b]);
            }
        }
        Hypergraph::new(n, 2, edges).unwrap()
    }

    #[test]
    fn complete_graphs_match_double_factorials() {
        // K_{2r} has (2r-1)!! perfect matchings.
        assert_eq!(count_perfect_matchings(&complete_graph(4)).unwrap(), BigInt::from(3));
        assert_eq!(count_perfect_matchings(&complete_graph(6)).unwrap(), BigInt::from(15));
        assert_eq!(count_perfect_matchings(&complete_graph(8)).unwrap(), BigInt::from(105));
    }

    #[test]
    fn cycle_of_length_four_has_two_matchings() {
        let c4 = graph(4, 2, &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]]);
        assert_eq!(count_perfect_matchings(&c4).unwrap(), BigInt::from(2));
    }

    #[test]
    fn indivisible_vertex_count_is_trivially_zero() {
        let triangle = graph(3, 2, &[&[0, 1], &[1, 2], &[2, 0]]);
        assert_eq!(
            reduce_to_witness_instance(&triangle).unwrap(),
            Reduction::TriviallyZero
        );
        assert_eq!(count_perfect_matchings(&triangle).unwrap(), BigInt::zero());
        assert_eq!(brute_force_matchings(&triangle).unwrap(), BigInt::zero());
    }

    #[test]
    fn complete_three_uniform_on_six_vertices() {
        // Every unordered pair of disjoint triples is a matching; there are
        // C(6,3) / 2 = 10.
        let mut edges = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    edges.push(vec![a, b, c]);
                }
            }
        }
        let h = Hypergraph::new(6, 3, edges).unwrap();
        assert_eq!(count_perfect_matchings(&h).unwrap(), BigInt::from(10));
        assert_eq!(brute_force_matchings(&h).unwrap(), BigInt::from(10));
    }

    #[test]
    fn reduction_produces_the_expected_instance() {
        let c4 = graph(4, 2, &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]]);
        match reduce_to_witness_instance(&c4).unwrap() {
            Reduction::Instance(inst) => {
                assert_eq!(inst.dimension(), 4);
                assert_eq!(inst.k(), 2);
                assert_eq!(inst.target(), GF2Vector(0b1111));
                assert_eq!(
                    inst.vectors(),
                    &[
                        GF2Vector(0b0011),
                        GF2Vector(0b0110),
                        GF2Vector(0b1100),
                        GF2Vector(0b1001)
                    ]
                );
            }
            other => panic!("expected an instance, got {other:?}"),
        }
    }

    #[test]
    fn brute_force_agrees_on_small_graphs() {
        let path = graph(4, 2, &[&[0, 1], &[1, 2], &[2, 3]]);
        assert_eq!(count_perfect_matchings(&path).unwrap(), BigInt::from(1));
        assert_eq!(brute_force_matchings(&path).unwrap(), BigInt::from(1));

        let k4 = complete_graph(4);
        assert_eq!(brute_force_matchings(&k4).unwrap(), BigInt::from(3));

        let no_edges = Hypergraph::new(4, 2, vec![]).unwrap();
        assert_eq!(count_perfect_matchings(&no_edges).unwrap(), BigInt::zero());
        assert_eq!(brute_force_matchings(&no_edges).unwrap(), BigInt::zero());
    }

    #[test]
    fn parses_and_round_trips() {
        let text = "# square\nn=4 l=2\n0 1\n1 2\n2 3\n3 0\n";
        let h = parse_hypergraph(text).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.uniformity(), 2);
        assert_eq!(h.edge_count(), 4);
        assert_eq!(parse_hypergraph(&h.to_file_string()).unwrap(), h);
    }

    #[test]
    fn validation_rejects_malformed_graphs() {
        assert!(Hypergraph::new(4, 1, vec![vec![0]]).is_err());
        assert!(Hypergraph::new(4, 2, vec![vec![0, 0]]).is_err());
        assert!(Hypergraph::new(4, 2, vec![vec![0, 4]]).is_err());
        assert!(Hypergraph::new(4, 2, vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(Hypergraph::new(4, 2, vec![vec![0, 1, 2]]).is_err());
        let err = parse_hypergraph("n=4 l=2\n0 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn reduction_rejects_oversized_graphs() {
        let edges: Vec<Vec<usize>> = (0..16).map(|i| vec![2 * i, 2 * i + 1]).collect();
        let big = Hypergraph::new(32, 2, edges).unwrap();
        assert!(matches!(
            reduce_to_witness_instance(&big),
            Err(Error::DimensionCap { .. })
        ));
    }
}
