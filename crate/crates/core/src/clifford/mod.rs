//! Kernel-encoded character triples and the trees `G_N` built from direct
//! Clifford correspondents.
//!
//! A triple `(H, A, theta)` with `theta` linear is stored as `(H, A, K)` with
//! `K = ker theta`. All questions the construction asks about `theta`
//! (invariance, inertia, kernel of the induced character) only depend on `K`.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::algebra::{centralizer_of_element_in, epsilon, sum_of_conjugates};
use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};

/// `(H, A, K)` plus the cached core `N = core_G(K)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTriple {
    pub h: Subgroup,
    pub a: Subgroup,
    pub k: Subgroup,
    pub n: Subgroup,
}

impl CharTriple {
    /// `(G, N, 1_N)`, encoded as `(G, N, N)`.
    pub fn root(g: &GroupTable, n: &Subgroup) -> Self {
        Self { h: Subgroup::whole(g), a: n.clone(), k: n.clone(), n: n.clone() }
    }

    /// Leaf type `(H, H, theta)`.
    pub fn is_shoda_type(&self) -> bool {
        self.h == self.a
    }

    /// Checks `A ⊴ H`, `K ⊴ H`, `K <= A`, `A/K` cyclic, `theta` invariant in
    /// `H` and `core_G(K) = N`.
    pub fn is_valid(&self, g: &GroupTable) -> bool {
        g.is_normal_in(&self.a, &self.h)
            && self.k.is_subgroup_of(&self.a)
            && g.is_normal_in(&self.k, &self.h)
            && g.is_cyclic_quotient(&self.a, &self.k)
            && inertia(g, &self.h, &self.a, &self.k).map(|i| i == self.h).unwrap_or(false)
            && g.core(&self.k) == self.n
    }
}

/// Inertia group in `H` of a linear character of `A` with kernel `K`:
/// `{ h in H : [h, a] in K for all a in A }`.
pub fn inertia(g: &GroupTable, h: &Subgroup, a: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    if !g.is_normal_in(a, h) || !g.is_normal_in(k, a) || !g.is_cyclic_quotient(a, k) {
        return Err(Error::Precondition("inertia needs A ⊴ H and A/K cyclic".into()));
    }
    let members =
        h.members().iter().copied().filter(|&x| a.gens().iter().all(|&s| k.contains(g.commutator(x, s)))).collect();
    Ok(Subgroup::from_members(g, members))
}

/// Direct Clifford correspondents of `t`, together with the chosen `𝒜`.
///
/// Kernels `K'` with `K <= K' <= 𝒜`, `𝒜/K'` cyclic, `K' ∩ A = K` and
/// `core_G(K') = N` are grouped into `H`-conjugacy classes; each class is
/// represented by its lexicographically smallest member list.
pub fn dcc(g: &GroupTable, t: &CharTriple, cap: usize) -> Result<(Option<Subgroup>, Vec<CharTriple>)> {
    if t.is_shoda_type() {
        return Ok((None, Vec::new()));
    }
    let big_a = g.maximal_abelian_normal_over(&t.h, &t.k);
    let candidates: Vec<Subgroup> = g
        .subgroups_between(&t.k, &big_a, cap)?
        .into_iter()
        .filter(|kp| g.is_cyclic_quotient(&big_a, kp) && kp.intersection(g, &t.a) == t.k && g.core(kp) == t.n)
        .collect();
    let mut assigned: HashSet<Subgroup> = HashSet::new();
    let mut reps = Vec::new();
    for kp in &candidates {
        if assigned.contains(kp) {
            continue;
        }
        let mut class: Vec<Subgroup> = Vec::new();
        for &x in t.h.members() {
            let c = g.conjugate_subgroup(kp, x);
            if assigned.insert(c.clone()) {
                class.push(c);
            }
        }
        let rep = class.into_iter().min_by(|a, b| a.members().cmp(b.members())).expect("class");
        reps.push(rep);
    }
    reps.sort_by(|a, b| a.members().cmp(b.members()));
    let children = reps
        .into_iter()
        .map(|kp| {
            let i = inertia(g, &t.h, &big_a, &kp)?;
            Ok(CharTriple { h: i, a: big_a.clone(), k: kp, n: t.n.clone() })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((Some(big_a), children))
}

#[derive(Clone, Debug)]
pub struct TreeNode {
    pub triple: CharTriple,
    /// The `𝒜` fixed for this vertex; `None` at leaves of type `(H, H, theta)`.
    pub chosen_a: Option<Subgroup>,
    pub children: Vec<TreeNode>,
    pub depth: usize,
}

impl TreeNode {
    fn expand(g: &GroupTable, triple: CharTriple, depth: usize, cap: usize) -> Result<Self> {
        let (chosen_a, kids) = dcc(g, &triple, cap)?;
        let children = kids.into_par_iter().map(|c| Self::expand(g, c, depth + 1, cap)).collect::<Result<Vec<_>>>()?;
        Ok(Self { triple, chosen_a, children, depth })
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(TreeNode::node_count).sum::<usize>()
    }

    /// Root-to-leaf paths, in depth-first order.
    pub fn paths(&self) -> Vec<Vec<&TreeNode>> {
        if self.is_leaf() {
            return vec![vec![self]];
        }
        self.children
            .iter()
            .flat_map(|c| {
                c.paths().into_iter().map(move |mut p| {
                    p.insert(0, self);
                    p
                })
            })
            .collect()
    }
}

/// The rooted tree of `N`-linear character triples with root `(G, N, 1_N)`.
#[derive(Clone, Debug)]
pub struct ShodaTree {
    pub n: Subgroup,
    pub root: TreeNode,
}

/// A root-to-leaf path ending in a leaf `(H, H, theta)`.
#[derive(Clone, Debug)]
pub struct LeafPath {
    pub path: Vec<CharTriple>,
}

impl LeafPath {
    pub fn leaf(&self) -> &CharTriple {
        self.path.last().expect("non-empty path")
    }

    /// Number of vertices on the path.
    pub fn height(&self) -> usize {
        self.path.len()
    }

    /// The Shoda pair `(H, K)`.
    pub fn pair(&self) -> (&Subgroup, &Subgroup) {
        let l = self.leaf();
        (&l.h, &l.k)
    }

    /// `H_i` and `K_i = ker theta_i` with `i` counted from 1 at the root.
    pub fn h(&self, i: usize) -> &Subgroup {
        &self.path[i - 1].h
    }

    pub fn k(&self, i: usize) -> &Subgroup {
        &self.path[i - 1].k
    }
}

impl ShodaTree {
    pub fn build(g: &GroupTable, n: &Subgroup, cap: usize) -> Result<Self> {
        if !g.is_normal(n) {
            return Err(Error::NotNormal("tree root needs a normal subgroup".into()));
        }
        let root = TreeNode::expand(g, CharTriple::root(g, n), 1, cap)?;
        Ok(Self { n: n.clone(), root })
    }

    pub fn node_count(&self) -> usize {
        self.root.node_count()
    }

    pub fn leaf_count(&self) -> usize {
        self.root.paths().len()
    }

    /// Vertex count of each root-to-leaf path, in depth-first order.
    pub fn leaf_heights(&self) -> Vec<usize> {
        self.root.paths().iter().map(Vec::len).collect()
    }

    /// Paths to leaves of type `(H, H, theta)`; stalled vertices are skipped.
    pub fn shoda_leaves(&self) -> Vec<LeafPath> {
        self.root
            .paths()
            .into_iter()
            .filter(|p| p.last().unwrap().triple.is_shoda_type())
            .map(|p| LeafPath { path: p.into_iter().map(|n| n.triple.clone()).collect() })
            .collect()
    }

    pub fn edges(&self) -> Vec<(&TreeNode, &TreeNode)> {
        fn walk<'a>(n: &'a TreeNode, out: &mut Vec<(&'a TreeNode, &'a TreeNode)>) {
            for c in &n.children {
                out.push((n, c));
                walk(c, out);
            }
        }
        let mut out = Vec::new();
        walk(&self.root, &mut out);
        out
    }
}

/// `N_{H_{i-1}}(ker theta_i) <= Cen_{H_{i-1}}(e(H_i, H, K))` for `1 < i <= n`.
pub fn is_good(g: &GroupTable, leaf: &LeafPath) -> Result<bool> {
    let (h, k) = leaf.pair();
    let eps = epsilon(g, h, k)?;
    for i in 2..=leaf.height() {
        let prev = leaf.h(i - 1);
        let e_i = sum_of_conjugates(g, leaf.h(i), &eps);
        let cen = centralizer_of_element_in(g, prev, &e_i);
        let nor = g.normalizer(prev, leaf.k(i));
        if !nor.is_subgroup_of(&cen) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One tree per normal subgroup, in canonical (ascending) order.
pub fn forest(g: &GroupTable, cap: usize) -> Result<Vec<ShodaTree>> {
    g.normal_subgroups().par_iter().map(|n| ShodaTree::build(g, n, cap)).collect()
}
