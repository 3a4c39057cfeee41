//! Shoda pairs read off the tree leaves, their scaling factor `alpha`,
//! primitive central idempotents and the completeness checks.

use std::collections::HashSet;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{
    centralizer_of_element_in, distinct_conjugates, e_sum, epsilon, ideal_rank, idempotency_scalar, sum_of_conjugates,
    AlgebraElement, Rational,
};
use crate::clifford::{is_good, LeafPath, ShodaTree};
use crate::error::{Error, Result};
use crate::group::{BitSet, GroupTable, Subgroup};

#[derive(Clone, Debug)]
pub struct ShodaRecord {
    /// The normal subgroup whose tree produced the pair.
    pub n: Subgroup,
    pub path: LeafPath,
    pub h: Subgroup,
    pub k: Subgroup,
    pub alpha: Rational,
    /// `e(G,H,K)`
    pub e: AlgebraElement,
    /// `alpha * e(G,H,K)`
    pub pci: AlgebraElement,
    pub strong: bool,
    pub good: bool,
    pub cor52: bool,
}

fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Level `i` idempotent `e(H_i, H, K)` for `1 <= i <= n`.
fn level_idempotent(g: &GroupTable, leaf: &LeafPath, eps: &AlgebraElement, i: usize) -> AlgebraElement {
    sum_of_conjugates(g, leaf.h(i), eps)
}

/// ```text
///           [Cen_G(eps) : Cen_{H_{n-1}}(eps)]
/// alpha = ---------------------------------------------------
///         prod_{2 <= i <= n-1} [Cen_{H_{i-1}}(e(H_i,H,K)) : H_i]
/// ```
/// with `eps = eps(H,K)` and `alpha = 1` for a single-vertex path.
pub fn alpha_formula(g: &GroupTable, leaf: &LeafPath) -> Result<Rational> {
    alpha_with(g, leaf, |prev, e_i, _| centralizer_of_element_in(g, prev, e_i))
}

/// [`alpha_formula`] with `Cen_{H_{i-1}}(e(H_i,H,K))` replaced by
/// `N_{H_{i-1}}(ker theta_i)`; agrees with it on good leaves.
pub fn alpha_via_normalizers(g: &GroupTable, leaf: &LeafPath) -> Result<Rational> {
    alpha_with(g, leaf, |prev, _, k_i| g.normalizer(prev, k_i))
}

fn alpha_with(
    g: &GroupTable,
    leaf: &LeafPath,
    level_group: impl Fn(&Subgroup, &AlgebraElement, &Subgroup) -> Subgroup,
) -> Result<Rational> {
    let n = leaf.height();
    if n <= 1 {
        return Ok(Rational::one());
    }
    let (h, k) = leaf.pair();
    let eps = epsilon(g, h, k)?;
    let whole = Subgroup::whole(g);
    let top = centralizer_of_element_in(g, &whole, &eps);
    let bottom = centralizer_of_element_in(g, leaf.h(n - 1), &eps);
    let mut alpha = ratio(top.index_of(&bottom), 1);
    for i in 2..n {
        let e_i = level_idempotent(g, leaf, &eps, i);
        let c = level_group(leaf.h(i - 1), &e_i, leaf.k(i));
        alpha /= ratio(c.index_of(leaf.h(i)), 1);
    }
    Ok(alpha)
}

fn set_product(g: &GroupTable, a: &Subgroup, b: &Subgroup) -> BitSet {
    let mut out = BitSet::new(g.order());
    for &x in a.members() {
        for &y in b.members() {
            out.insert(g.mul(x, y));
        }
    }
    out
}

/// `Cen_{H_{i-1}}(e(H_i,H,K)) = Cen_{H_{i-1}}(eps(H,K)) * H_i` for all
/// `2 <= i <= n-1`, the intrinsic characterization of `alpha = 1`.
pub fn alpha_is_one_criterion(g: &GroupTable, leaf: &LeafPath) -> Result<bool> {
    let (h, k) = leaf.pair();
    let eps = epsilon(g, h, k)?;
    for i in 2..leaf.height() {
        let prev = leaf.h(i - 1);
        let e_i = level_idempotent(g, leaf, &eps, i);
        let lhs = centralizer_of_element_in(g, prev, &e_i);
        let rhs = set_product(g, &centralizer_of_element_in(g, prev, &eps), leaf.h(i));
        if *lhs.mask() != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `alpha * e(G,H,K)`, checked to be a central idempotent.
pub fn pci(g: &GroupTable, h: &Subgroup, k: &Subgroup, alpha: &Rational) -> Result<AlgebraElement> {
    let whole = Subgroup::whole(g);
    let x = e_sum(g, &whole, h, k)?.scale(alpha);
    if !x.is_idempotent(g) {
        return Err(Error::IdempotencyFailure(format!("alpha = {alpha} does not give an idempotent")));
    }
    if !x.is_central_in(g, &whole) {
        return Err(Error::IdempotencyFailure("not central".into()));
    }
    Ok(x)
}

/// Strong Shoda pair test:
/// `K ⊴ H ⊴ N_G(K)`, `H/K` maximal abelian in `N_G(K)/K`, and the distinct
/// `G`-conjugates of `eps(H,K)` mutually orthogonal.
///
/// Maximality is tested as `H/K` being its own centralizer in `N_G(K)/K`.
/// Orthogonality of all conjugates reduces to `eps * eps^t = 0` for every
/// conjugate `eps^t != eps`.
pub fn is_strong_shoda(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> Result<bool> {
    let whole = Subgroup::whole(g);
    let nk = g.normalizer(&whole, k);
    if !g.is_normal_in(k, h) || !g.is_normal_in(h, &nk) {
        return Ok(false);
    }
    if !g.is_abelian_over(h, k) {
        return Ok(false);
    }
    let cen = nk.members().iter().filter(|&&x| h.gens().iter().all(|&y| k.contains(g.commutator(x, y)))).count();
    if cen != h.order() {
        return Ok(false);
    }
    let eps = epsilon(g, h, k)?;
    Ok(distinct_conjugates(g, &whole, &eps).iter().filter(|c| **c != eps).all(|c| eps.mul(c, g).is_zero()))
}

/// `H ⊴ N_G(ker theta_2)`: sufficient for `(H, K)` to be strong.
pub fn cor52_precheck(g: &GroupTable, leaf: &LeafPath) -> bool {
    if leaf.height() < 2 {
        return true;
    }
    let nk2 = g.normalizer(&Subgroup::whole(g), leaf.k(2));
    g.is_normal_in(leaf.pair().0, &nk2)
}

/// Literal Shoda criterion: `K ⊴ H`, `H/K` cyclic, and every `g` with
/// `[H,g] ∩ H ⊆ K` lies in `H`.
pub fn is_shoda_bruteforce(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> bool {
    if !k.is_subgroup_of(h) || !g.is_normal_in(k, h) || !g.is_cyclic_quotient(h, k) {
        return false;
    }
    (0..g.order()).all(|x| {
        h.contains(x)
            || h.members().iter().any(|&y| {
                let c = g.commutator(y, x);
                h.contains(c) && !k.contains(c)
            })
    })
}

/// One record per leaf of type `(H, H, theta)`, trees in the given order.
pub fn records(g: &GroupTable, trees: &[ShodaTree]) -> Result<Vec<ShodaRecord>> {
    let leaves: Vec<(Subgroup, LeafPath)> =
        trees.iter().flat_map(|t| t.shoda_leaves().into_iter().map(move |l| (t.n.clone(), l))).collect();
    leaves.into_par_iter().map(|(n, leaf)| record(g, n, leaf)).collect()
}

pub fn record(g: &GroupTable, n: Subgroup, leaf: LeafPath) -> Result<ShodaRecord> {
    let (h, k) = (leaf.pair().0.clone(), leaf.pair().1.clone());
    let alpha = alpha_formula(g, &leaf)?;
    let e = e_sum(g, &Subgroup::whole(g), &h, &k)?;
    let pci = pci(g, &h, &k, &alpha)?;
    let strong = is_strong_shoda(g, &h, &k)?;
    let good = is_good(g, &leaf)?;
    let cor52 = cor52_precheck(g, &leaf);
    Ok(ShodaRecord { n, path: leaf, h, k, alpha, e, pci, strong, good, cor52 })
}

/// `(records, trees)` for every normal subgroup of `g`.
pub fn pipeline(g: &GroupTable, cap: usize) -> Result<(Vec<ShodaTree>, Vec<ShodaRecord>)> {
    let trees = crate::clifford::forest(g, cap)?;
    let recs = records(g, &trees)?;
    Ok((trees, recs))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletenessReport {
    pub order: usize,
    pub records: usize,
    /// Distinct PCIs, first witness first.
    pub distinct_pcis: usize,
    /// `orthogonality[i][j]`: product of distinct PCIs `i != j` vanishes.
    pub orthogonality: Vec<Vec<bool>>,
    pub pairwise_orthogonal: bool,
    pub sum_is_one: bool,
    /// Record index to its goodness flag.
    pub goodness: Vec<bool>,
    pub all_good: bool,
    /// Distinct PCIs across the trees of distinct normal subgroups.
    pub distinct_across_trees: bool,
    pub ranks: Option<Vec<usize>>,
    pub rank_sum: Option<usize>,
}

impl CompletenessReport {
    /// Irredundancy is only claimed when every leaf is good.
    pub fn irredundancy(&self) -> &'static str {
        if self.all_good {
            "guaranteed"
        } else {
            "not guaranteed"
        }
    }

    pub fn passes(&self) -> bool {
        self.pairwise_orthogonal
            && self.sum_is_one
            && self.rank_sum.is_none_or(|r| r == self.order)
            && (!self.all_good || self.distinct_pcis == self.records)
    }
}

/// PCIs deduplicated by exact coefficient equality, in first-seen order.
pub fn distinct_pcis(records: &[ShodaRecord]) -> Vec<&AlgebraElement> {
    let mut seen = HashSet::new();
    records.iter().map(|r| &r.pci).filter(|p| seen.insert(*p)).collect()
}

pub fn verify_complete(g: &GroupTable, records: &[ShodaRecord], with_ranks: bool) -> Result<CompletenessReport> {
    let pcis = distinct_pcis(records);
    let m = pcis.len();
    let orthogonality: Vec<Vec<bool>> =
        (0..m).into_par_iter().map(|i| (0..m).map(|j| i == j || pcis[i].mul(pcis[j], g).is_zero()).collect()).collect();
    let pairwise_orthogonal = orthogonality.iter().flatten().all(|&b| b);
    let sum = pcis.iter().fold(AlgebraElement::zero(g.order()), |acc, p| acc.add(p));
    let sum_is_one = sum == AlgebraElement::one(g.order());
    let goodness: Vec<bool> = records.iter().map(|r| r.good).collect();
    let all_good = goodness.iter().all(|&b| b);
    let distinct_across_trees =
        records.iter().enumerate().all(|(i, a)| records[..i].iter().all(|b| a.n == b.n || a.pci != b.pci));
    let ranks =
        if with_ranks { Some(pcis.par_iter().map(|p| ideal_rank(g, p)).collect::<Result<Vec<_>>>()?) } else { None };
    let rank_sum = ranks.as_ref().map(|r| r.iter().sum());
    Ok(CompletenessReport {
        order: g.order(),
        records: records.len(),
        distinct_pcis: m,
        orthogonality,
        pairwise_orthogonal,
        sum_is_one,
        goodness,
        all_good,
        distinct_across_trees,
        ranks,
        rank_sum,
    })
}

/// PCIs from every pair passing [`is_shoda_bruteforce`], scaled through
/// [`idempotency_scalar`]; sorted canonically by coefficient vector.
pub fn bruteforce_pcis(g: &GroupTable, cap: usize) -> Result<Vec<AlgebraElement>> {
    let subs = g.all_subgroups(cap)?;
    let whole = Subgroup::whole(g);
    let mut out: HashSet<AlgebraElement> = HashSet::new();
    for h in &subs {
        for k in subs.iter().filter(|k| k.is_subgroup_of(h)) {
            if !is_shoda_bruteforce(g, h, k) {
                continue;
            }
            let e = e_sum(g, &whole, h, k)?;
            let lambda = idempotency_scalar(g, &e)?;
            out.insert(e.scale(&(Rational::one() / lambda)));
        }
    }
    let mut v: Vec<AlgebraElement> = out.into_iter().collect();
    v.sort_by(canonical_cmp);
    Ok(v)
}

/// Total order on algebra elements by coefficient vector.
pub fn canonical_cmp(a: &AlgebraElement, b: &AlgebraElement) -> std::cmp::Ordering {
    (0..a.len()).map(|i| a.coeff(i).cmp(&b.coeff(i))).find(|o| !o.is_eq()).unwrap_or(std::cmp::Ordering::Equal)
}

/// Sanity for `alpha * lambda = 1`.
pub fn alpha_matches_scalar(g: &GroupTable, rec: &ShodaRecord) -> Result<bool> {
    let lambda = idempotency_scalar(g, &rec.e)?;
    Ok(!lambda.is_zero() && &rec.alpha * lambda == Rational::one())
}

#[cfg(test)]
mod tests;
