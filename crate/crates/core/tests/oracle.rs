mod common;

use common::{brute_force_maxima, multinomial_by_factorials, rel_close};
use sombor_core::construct::construct_max_tree;
use sombor_core::graph::{canonical_form, sombor_index, DegreeSequence, Tree};
use sombor_core::verify::{enumerate_trees, oracle_max, prufer_to_tree, tree_to_prufer, DEFAULT_CAP};

fn seq(raw: &[i64]) -> DegreeSequence {
    DegreeSequence::validate(raw).unwrap()
}

#[test]
fn library_oracle_agrees_with_full_labeled_brute_force() {
    for n in 3..=9 {
        let maxima = brute_force_maxima(n);
        for (key, &brute) in &maxima {
            let raw: Vec<i64> = key.iter().map(|&d| d as i64).collect();
            let d = seq(&raw);
            assert_eq!(d.vertex_count(), n);
            let r = oracle_max(&d, DEFAULT_CAP, 1);
            assert!(!r.capped);
            assert!(rel_close(r.max_so, brute, 1e-12), "{d}: {} vs {brute}", r.max_so);
            let built = sombor_index(&construct_max_tree(&d));
            assert!(rel_close(built, brute, 1e-9), "{d}: constructed {built} vs brute {brute}");
        }
    }
}

#[test]
fn derived_oracle_values() {
    let r = oracle_max(&seq(&[3, 2, 2]), DEFAULT_CAP, 1);
    assert!((r.max_so - 14.994601698).abs() < 1e-9);
    assert_eq!(r.witnesses.len(), 1);
    let cat = Tree::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]).unwrap();
    assert_eq!(r.witnesses[0].code, canonical_form(&cat));

    let r = oracle_max(&seq(&[3, 3]), DEFAULT_CAP, 1);
    assert!((r.max_so - (18f64.sqrt() + 4.0 * 10f64.sqrt())).abs() < 1e-12);
    assert!((r.max_so - 16.89175).abs() < 1e-5);
    assert_eq!(r.witnesses.len(), 1);

    let r = oracle_max(&seq(&[2, 2, 2]), DEFAULT_CAP, 1);
    assert!((r.max_so - 10.12899).abs() < 1e-5);
    assert_eq!(r.witnesses.len(), 1);
}

#[test]
fn enumeration_counts_match_multinomial() {
    for raw in [&[3][..], &[2, 2], &[3, 2, 2], &[4, 3, 2], &[3, 3, 2, 2], &[2, 2, 2, 2, 2]] {
        let d = seq(raw);
        let expected = multinomial_by_factorials(d.degrees());
        assert_eq!(enumerate_trees(&d, u64::MAX).count() as u128, expected);
        assert_eq!(d.labeled_count(), Some(expected));
        assert_eq!(oracle_max(&d, DEFAULT_CAP, 1).enumerated as u128, expected);
    }
}

#[test]
fn prufer_bijection_for_small_n() {
    for n in 2..=8 {
        let len = n - 2;
        let total = (n as u64).pow(len as u32);
        // every string for n ≤ 6, a stride through the rest
        let step = if n <= 6 { 1 } else { 97 };
        let mut code = 0;
        while code < total {
            let mut rest = code;
            let s: Vec<usize> = (0..len)
                .map(|_| {
                    let x = (rest % n as u64) as usize;
                    rest /= n as u64;
                    x
                })
                .collect();
            let t = prufer_to_tree(&s, n).unwrap();
            assert_eq!(tree_to_prufer(&t), s);
            code += step;
        }
    }
}

#[test]
fn witnesses_are_distinct_maximizers() {
    for d in sombor_core::experiments::generate_degree_sequences(9) {
        let r = oracle_max(&d, DEFAULT_CAP, 1);
        assert!(!r.witnesses.is_empty());
        for w in &r.witnesses {
            assert!(rel_close(w.so, r.max_so, 1e-9));
            assert_eq!(DegreeSequence::of_tree(&w.tree), d);
            assert_eq!(canonical_form(&w.tree), w.code);
        }
        let mut codes: Vec<_> = r.witnesses.iter().map(|w| &w.code).collect();
        codes.dedup();
        assert_eq!(codes.len(), r.witnesses.len());
    }
}
