//! The Sombor index `SO(T) = Σ_{uv ∈ E} √(d(u)² + d(v)²)`.

use thiserror::Error;

use super::Tree;

/// Relative tolerance under which two index values are treated as equal.
pub const REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("edge weight needs positive degrees, got ({0}, {1})")]
pub struct NonPositiveDegree(pub i64, pub i64);

/// `√(x² + y²)` for positive integer degrees.
pub fn edge_weight(x: i64, y: i64) -> Result<f64, NonPositiveDegree> {
    if x < 1 || y < 1 {
        return Err(NonPositiveDegree(x, y));
    }
    Ok(weight(x as usize, y as usize))
}

/// Unchecked edge weight. `x² + y²` is exact in `f64` for any realistic
/// degree, so the result is the correctly rounded square root.
#[inline]
pub fn weight(x: usize, y: usize) -> f64 {
    ((x * x + y * y) as f64).sqrt()
}

/// Neumaier-compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::default();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Sombor index, summed over edges in lexicographic order.
pub fn sombor_index(t: &Tree) -> f64 {
    t.edges()
        .map(|(u, v)| weight(t.degree(u), t.degree(v)))
        .collect::<CompensatedSum>()
        .value()
}

/// `|a − b| ≤ tol · max(|a|, |b|)`.
pub fn approx_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        approx_eq(a, b, 1e-12)
    }

    #[test]
    fn edge_weight_examples() {
        assert!(close(edge_weight(1, 1).unwrap(), 2f64.sqrt()));
        assert_eq!(edge_weight(3, 4).unwrap(), 5.0);
        assert!(close(edge_weight(5, 1).unwrap(), 26f64.sqrt()));
        assert_eq!(edge_weight(0, 3), Err(NonPositiveDegree(0, 3)));
        assert!(edge_weight(2, -1).is_err());
    }

    #[test]
    fn small_trees() {
        assert!(close(sombor_index(&Tree::single_edge()), 2f64.sqrt()));
        assert!(close(sombor_index(&Tree::star(4).unwrap()), 3.0 * 10f64.sqrt()));
        assert!(close(
            sombor_index(&Tree::path(4).unwrap()),
            2.0 * 5f64.sqrt() + 8f64.sqrt()
        ));
        assert_eq!(sombor_index(&Tree::singleton()), 0.0);
    }

    #[test]
    fn caterpillar_for_3_2_2() {
        // 0 has leaves 1, 2; 0 - 3 - 4 - 5 with 5 a leaf
        let t = Tree::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]).unwrap();
        let expected = 13f64.sqrt() + 8f64.sqrt() + 2.0 * 10f64.sqrt() + 5f64.sqrt();
        assert!(close(sombor_index(&t), expected));
        assert!((sombor_index(&t) - 14.994601698).abs() < 1e-9);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let acc: CompensatedSum = [1e16, 1.0, -1e16].into_iter().collect();
        assert_eq!(acc.value(), 1.0);
    }
}
