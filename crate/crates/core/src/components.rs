//! Numeric shape of the simple component `QG * pci` attached to a leaf:
//! nested matrix rings over crossed products of `Q(xi_k)`.

use serde::Serialize;

use crate::algebra::{centralizer_of_element_in, epsilon, ideal_rank, sum_of_conjugates};
use crate::clifford::LeafPath;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::idempotents::ShodaRecord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Level {
    pub matrix_degree: usize,
    pub crossed_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentTower {
    /// `[H:K]`
    #[serde(rename = "k")]
    pub cyclotomic_order: usize,
    /// `phi(k)`
    #[serde(rename = "phi_k")]
    pub base_field_degree: usize,
    /// Outermost first.
    pub levels: Vec<Level>,
    #[serde(rename = "dimension")]
    pub predicted_dimension: usize,
}

pub fn euler_phi(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// For a leaf path of height `n`, level `i` (`1 <= i <= n-1`) has
/// `k_i = [H_i : Cen_{H_i}(e(H_{i+1},H,K))]` and crossed order
/// `[Cen_{H_i}(e(H_{i+1},H,K)) : H_{i+1}]`; the innermost one is
/// `[N_{H_{n-1}}(K) : H]`. Levels with `k_i = c_i = 1` are dropped.
pub fn tower_of_leaf(g: &GroupTable, leaf: &LeafPath) -> Result<ComponentTower> {
    let (h, k) = leaf.pair();
    let eps = epsilon(g, h, k)?;
    let n = leaf.height();
    let mut levels = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let hi = leaf.h(i);
        let cen = centralizer_of_element_in(g, hi, &sum_of_conjugates(g, leaf.h(i + 1), &eps));
        let crossed_order = if i == n - 1 {
            let nk = g.normalizer(hi, k);
            if nk != cen {
                return Err(Error::Precondition("innermost centralizer differs from N_{H_{n-1}}(K)".into()));
            }
            nk.index_of(h)
        } else {
            cen.index_of(leaf.h(i + 1))
        };
        let matrix_degree = hi.index_of(&cen);
        if matrix_degree > 1 || crossed_order > 1 {
            levels.push(Level { matrix_degree, crossed_order });
        }
    }
    let cyclotomic_order = h.index_of(k);
    let base_field_degree = euler_phi(cyclotomic_order);
    let degree: usize = levels.iter().map(|l| l.matrix_degree).product();
    let crossed: usize = levels.iter().map(|l| l.crossed_order).product();
    Ok(ComponentTower {
        cyclotomic_order,
        base_field_degree,
        levels,
        predicted_dimension: base_field_degree * degree * degree * crossed,
    })
}

/// `predicted_dimension = dim_Q(QG * pci)`; returns the rank.
pub fn dimension_audit(g: &GroupTable, record: &ShodaRecord, tower: &ComponentTower) -> Result<usize> {
    let rank = ideal_rank(g, &record.pci)?;
    if rank != tower.predicted_dimension {
        return Err(Error::AuditFailure { predicted: tower.predicted_dimension as u64, rank: rank as u64 });
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idempotents::pipeline;
    use crate::io::builtin;

    const CAP: usize = 5000;

    #[test]
    fn totient() {
        let phi: Vec<usize> = (1..=12).map(euler_phi).collect();
        assert_eq!(phi, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }

    #[test]
    fn s3_towers() {
        let g = builtin("symmetric(3)", CAP).unwrap();
        let (_, recs) = pipeline(&g, CAP).unwrap();
        let c3 = recs.iter().find(|r| r.h.order() == 3).unwrap();
        let t = tower_of_leaf(&g, &c3.path).unwrap();
        assert_eq!(t.cyclotomic_order, 3);
        assert_eq!(t.levels, vec![Level { matrix_degree: 1, crossed_order: 2 }]);
        assert_eq!(t.predicted_dimension, 4);
        assert_eq!(dimension_audit(&g, c3, &t).unwrap(), 4);
        let whole = recs.iter().find(|r| r.path.height() == 1).unwrap();
        let t = tower_of_leaf(&g, &whole.path).unwrap();
        assert!(t.levels.is_empty());
        assert_eq!(t.predicted_dimension, 1);
    }

    #[test]
    fn cyclic_quotient_leaf_has_no_levels() {
        let g = builtin("cyclic(12)", CAP).unwrap();
        let n = g.normal_subgroups().into_iter().find(|n| n.order() == 2).unwrap();
        let tree = crate::clifford::ShodaTree::build(&g, &n, CAP).unwrap();
        let leaf = &tree.shoda_leaves()[0];
        let t = tower_of_leaf(&g, leaf).unwrap();
        assert_eq!(t.cyclotomic_order, 6);
        assert!(t.levels.is_empty());
        assert_eq!(t.predicted_dimension, 2);
    }

    #[test]
    fn small_audits_sum_to_order() {
        for name in ["symmetric(3)", "dihedral(4)", "quaternion8", "cyclic(6)", "paper-ex2"] {
            let g = builtin(name, CAP).unwrap();
            let (_, recs) = pipeline(&g, CAP).unwrap();
            let mut total = 0;
            for r in &recs {
                let t = tower_of_leaf(&g, &r.path).unwrap();
                assert!(t.levels.iter().all(|l| l.matrix_degree >= 1 && l.crossed_order >= 1));
                assert!(t.levels.len() < r.path.height().max(1));
                total += dimension_audit(&g, r, &t).unwrap();
            }
            assert_eq!(total, g.order(), "{name}");
        }
    }
}
