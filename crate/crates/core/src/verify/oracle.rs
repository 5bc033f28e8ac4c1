//! Exact maximum of the Sombor index over every tree realizing a degree
//! sequence, by exhaustive Prüfer enumeration.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{multinomial, next_permutation, prufer_multiset, unrank};
use super::prufer::decode_into;
use crate::graph::{canonical_form, sombor_index, weight, CanonicalCode, DegreeSequence, Tree, REL_TOL};

pub const DEFAULT_CAP: u64 = 10_000_000;

/// One non-isomorphic maximizer.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub code: CanonicalCode,
    pub so: f64,
    pub tree: Tree,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult {
    pub max_so: f64,
    pub enumerated: u64,
    pub witnesses: Vec<Witness>,
    pub capped: bool,
}

/// Best-so-far state over a contiguous rank range.
#[derive(Default)]
struct Partial {
    best: f64,
    // code -> (so, lowest rank seen, tree)
    witnesses: BTreeMap<CanonicalCode, (f64, u128, Tree)>,
}

impl Partial {
    fn offer(&mut self, so: f64, rank: u128, edges: &[(usize, usize)], n: usize) {
        if so < self.best * (1.0 - REL_TOL) {
            return;
        }
        if so > self.best {
            self.best = so;
            let floor = so * (1.0 - REL_TOL);
            self.witnesses.retain(|_, w| w.0 >= floor);
        }
        let tree = Tree::from_edges(n, edges).expect("Prüfer decode yields a tree");
        let code = canonical_form(&tree);
        self.witnesses.entry(code).or_insert((so, rank, tree));
    }

    fn absorb(mut self, other: Partial) -> Partial {
        self.best = self.best.max(other.best);
        for (code, w) in other.witnesses {
            match self.witnesses.get(&code) {
                Some(mine) if mine.1 <= w.1 => {}
                _ => {
                    self.witnesses.insert(code, w);
                }
            }
        }
        let floor = self.best * (1.0 - REL_TOL);
        self.witnesses.retain(|_, w| w.0 >= floor);
        self
    }
}

fn scan(d: &DegreeSequence, counts: &[usize], start: u128, len: u128) -> Partial {
    let n = d.vertex_count();
    let mut partial = Partial::default();
    if len == 0 {
        return partial;
    }
    let vertex_degree: Vec<usize> = d
        .degrees()
        .iter()
        .copied()
        .chain(std::iter::repeat_n(1, n - d.internal_count()))
        .collect();
    let mut seq = unrank(counts, start).expect("start rank within range");
    let mut scratch = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n);
    for offset in 0..len {
        decode_into(&seq, n, &mut scratch, &mut edges);
        let so: f64 = edges
            .iter()
            .map(|&(u, v)| weight(vertex_degree[u], vertex_degree[v]))
            .sum();
        partial.offer(so, start + offset, &edges, n);
        if offset + 1 < len {
            next_permutation(&mut seq);
        }
    }
    partial
}

/// Enumerates up to `cap` labeled trees realizing `d` on `workers` threads.
///
/// The rank space is cut into contiguous ranges, one per worker; the
/// reduction is order-independent, so the result does not depend on
/// `workers`. Trees within [`REL_TOL`] of the maximum are co-witnesses,
/// deduplicated by canonical form and listed in code order.
pub fn oracle_max(d: &DegreeSequence, cap: u64, workers: usize) -> OracleResult {
    let counts: Vec<usize> = d.degrees().iter().map(|&x| x - 1).collect();
    debug_assert_eq!(prufer_multiset(d).len(), counts.iter().sum::<usize>());
    let total = multinomial(&counts).unwrap_or(u128::MAX);
    let limit = total.min(cap as u128);
    let capped = total > cap as u128;

    let workers = workers.max(1) as u128;
    let ranges: Vec<(u128, u128)> = (0..workers)
        .map(|w| {
            let lo = limit * w / workers;
            let hi = limit * (w + 1) / workers;
            (lo, hi - lo)
        })
        .filter(|&(_, len)| len > 0)
        .collect();

    let partial = if ranges.len() <= 1 {
        ranges
            .iter()
            .map(|&(lo, len)| scan(d, &counts, lo, len))
            .fold(Partial::default(), Partial::absorb)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(ranges.len())
            .build()
            .expect("worker pool");
        let parts: Vec<Partial> = pool.install(|| {
            ranges
                .par_iter()
                .map(|&(lo, len)| scan(d, &counts, lo, len))
                .collect()
        });
        parts.into_iter().fold(Partial::default(), Partial::absorb)
    };

    let witnesses: Vec<Witness> = partial
        .witnesses
        .into_iter()
        .map(|(code, (_, _, tree))| Witness {
            so: sombor_index(&tree),
            code,
            tree,
        })
        .collect();
    let max_so = witnesses.iter().map(|w| w.so).fold(0.0, f64::max);
    OracleResult {
        max_so,
        enumerated: limit as u64,
        witnesses,
        capped,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(raw: &[i64]) -> DegreeSequence {
        DegreeSequence::validate(raw).unwrap()
    }

    #[test]
    fn three_two_two() {
        let r = oracle_max(&seq(&[3, 2, 2]), DEFAULT_CAP, 1);
        assert_eq!(r.enumerated, 12);
        assert!(!r.capped);
        assert_eq!(r.witnesses.len(), 1);
        let expected = 13f64.sqrt() + 8f64.sqrt() + 2.0 * 10f64.sqrt() + 5f64.sqrt();
        assert!((r.max_so - expected).abs() < 1e-12);
    }

    #[test]
    fn unique_shapes() {
        let r = oracle_max(&seq(&[3, 3]), DEFAULT_CAP, 1);
        assert!((r.max_so - (18f64.sqrt() + 4.0 * 10f64.sqrt())).abs() < 1e-12);
        assert_eq!(r.witnesses.len(), 1);
        let r = oracle_max(&seq(&[2, 2, 2]), DEFAULT_CAP, 1);
        assert!((r.max_so - (2.0 * 5f64.sqrt() + 2.0 * 8f64.sqrt())).abs() < 1e-12);
        let r = oracle_max(&seq(&[]), DEFAULT_CAP, 1);
        assert_eq!(r.enumerated, 1);
        assert!((r.max_so - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn capped_run_is_flagged() {
        let r = oracle_max(&seq(&[3, 2, 2]), 5, 1);
        assert!(r.capped);
        assert_eq!(r.enumerated, 5);
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let d = seq(&[4, 3, 2, 2, 2]);
        let one = oracle_max(&d, DEFAULT_CAP, 1);
        for w in [2, 3, 7] {
            assert_eq!(oracle_max(&d, DEFAULT_CAP, w), one);
        }
    }
}
