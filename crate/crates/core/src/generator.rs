//! Seeded random instances and hypergraphs for oracle sweeps and benches.
//! Everything here is a plain function of the supplied RNG, so a fixed seed
//! reproduces the exact same inputs.

use rand::seq::index;
use rand::Rng;

use crate::hypergraph::Hypergraph;
use crate::instance::{GF2Vector, Instance};

/// Uniformly random instance: `m` distinct vectors sampled from GF(2)^d
/// without replacement, a uniform target, tuple length `k`. Panics if
/// `m > 2^d`, which cannot be satisfied.
pub fn random_instance<R: Rng>(rng: &mut R, d: usize, m: usize, k: usize) -> Instance {
    let space = 1usize << d;
    assert!(m <= space, "cannot pick {m} distinct vectors from 2^{d}");
    let vectors: Vec<GF2Vector> = index::sample(rng, space, m)
        .into_iter()
        .map(|x| GF2Vector(x as u32))
        .collect();
    let target = GF2Vector(rng.gen_range(0..space) as u32);
    Instance::new(d, vectors, target, k).expect("sampled instances are valid by construction")
}

/// Number of distinct l-subsets of n vertices, saturating at u64::MAX.
pub fn max_edge_count(n: usize, l: usize) -> u64 {
    if l > n {
        return 0;
    }
    let mut acc: u64 = 1;
    for i in 0..l {
        match acc.checked_mul((n - i) as u64) {
            Some(v) => acc = v / (i as u64 + 1),
            None => return u64::MAX,
        }
    }
    acc
}

/// Uniformly random l-uniform hypergraph with exactly `edge_count` distinct
/// edges, via rejection sampling. Panics if more edges are requested than
/// exist.
pub fn random_hypergraph<R: Rng>(
    rng: &mut R,
    n: usize,
    uniformity: usize,
    edge_count: usize,
) -> Hypergraph {
    assert!(
        edge_count as u64 <= max_edge_count(n, uniformity),
        "cannot pick {edge_count} distinct {uniformity}-subsets of {n} vertices"
    );
    let mut edges = std::collections::BTreeSet::new();
    while edges.len() < edge_count {
        let mut edge = index::sample(rng, n, uniformity).into_vec();
        edge.sort_unstable();
        edges.insert(edge);
    }
    Hypergraph::new(n, uniformity, edges.into_iter().collect())
        .expect("sampled hypergraphs are valid by construction")
}
