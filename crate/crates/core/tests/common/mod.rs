//! Test-only oracles, independent of the library's enumeration path.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use sombor_core::graph::Tree;

/// O(n²) textbook Prüfer decode.
pub fn naive_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

pub fn plain_so(n: usize, edges: &[(usize, usize)]) -> f64 {
    let mut deg = vec![0usize; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    edges
        .iter()
        .map(|&(u, v)| ((deg[u] * deg[u] + deg[v] * deg[v]) as f64).sqrt())
        .sum()
}

/// Maximum index per internal-degree multiset over every labeled tree on
/// `n` vertices (all `n^(n−2)` Prüfer strings).
pub fn brute_force_maxima(n: usize) -> BTreeMap<Vec<usize>, f64> {
    let mut best: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        let edges = naive_decode(&seq, n);
        let so = plain_so(n, &edges);
        let mut deg = vec![1usize; n];
        for &x in &seq {
            deg[x] += 1;
        }
        let mut key: Vec<usize> = deg.into_iter().filter(|&d| d >= 2).collect();
        key.sort_unstable_by(|a, b| b.cmp(a));
        let slot = best.entry(key).or_insert(f64::MIN);
        if so > *slot {
            *slot = so;
        }
        // odometer
        let mut i = 0;
        loop {
            if i == len {
                return best;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

/// `(n−2)! / Π(dᵢ−1)!` with exact big factorials in f64-free u128.
pub fn multinomial_by_factorials(degrees: &[usize]) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let n_minus_2: usize = degrees.iter().map(|d| d - 1).sum();
    degrees.iter().fold(fact(n_minus_2), |acc, &d| acc / fact(d - 1))
}

pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Tree {
    if n == 1 {
        return Tree::singleton();
    }
    if n == 2 {
        return Tree::single_edge();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Tree::from_edges(n, &naive_decode(&seq, n)).unwrap()
}

pub fn star_so(n: usize) -> f64 {
    let k = (n - 1) as f64;
    k * (k * k + 1.0).sqrt()
}

pub fn path_so(n: usize) -> f64 {
    2.0 * 5f64.sqrt() + (n as f64 - 3.0) * 8f64.sqrt()
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs())
}
