//! Shared fixtures and invariant checks for the integration targets.

#![allow(dead_code)]

use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shoda::algebra::{centralizer_of_element_in, distinct_conjugates, epsilon, sum_of_conjugates, AlgebraElement};
use shoda::clifford::{inertia, ShodaTree, TreeNode};
use shoda::io::{builtin, direct_product};
use shoda::{GroupTable, Subgroup};

pub const CAP: usize = 5000;

/// Small groups used for randomized checks.
pub fn pool() -> &'static [(String, GroupTable)] {
    static POOL: OnceLock<Vec<(String, GroupTable)>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v: Vec<(String, GroupTable)> = [
            "cyclic(8)",
            "cyclic(12)",
            "klein4",
            "symmetric(3)",
            "symmetric(4)",
            "dihedral(4)",
            "dihedral(5)",
            "dihedral(6)",
            "quaternion8",
            "heisenberg(3)",
            "paper-ex2",
        ]
        .iter()
        .map(|n| (n.to_string(), builtin(n, CAP).unwrap()))
        .collect();
        v.push(("c2xc2xc3".into(), c2c2c3()));
        v.push((
            "s3xc3".into(),
            direct_product(&[builtin("symmetric(3)", CAP).unwrap(), builtin("cyclic(3)", CAP).unwrap()], CAP).unwrap(),
        ));
        v
    })
}

pub fn c2c2c3() -> GroupTable {
    let c2 = builtin("cyclic(2)", CAP).unwrap();
    let c3 = builtin("cyclic(3)", CAP).unwrap();
    direct_product(&[c2.clone(), c2, c3], CAP).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_subgroup(g: &GroupTable, r: &mut impl Rng) -> Subgroup {
    let k = r.gen_range(0..=2);
    let gens: Vec<usize> = (0..k).map(|_| r.gen_range(0..g.order())).collect();
    g.closure(&gens)
}

pub fn random_normal_in(g: &GroupTable, h: &Subgroup, r: &mut impl Rng) -> Subgroup {
    let k = r.gen_range(0..=2);
    let xs: Vec<usize> = (0..k).map(|_| *h.members().choose(r).unwrap()).collect();
    g.normal_closure(h, &xs)
}

pub type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `eps(H,K)` is an idempotent supported on `H`.
pub fn epsilon_idempotent(g: &GroupTable, seed: u64) -> Check {
    let mut r = rng(seed);
    let h = random_subgroup(g, &mut r);
    let k = random_normal_in(g, &h, &mut r);
    let e = epsilon(g, &h, &k).map_err(|e| e.to_string())?;
    ensure(e.is_idempotent(g), || format!("eps not idempotent, |H|={} |K|={}", h.order(), k.order()))?;
    let inside = e.support().all(|x| h.contains(x));
    ensure(inside, || "eps leaves QH".into())
}

/// `conj(xy, g) = conj(x, g) conj(y, g)` on random elements.
pub fn conj_automorphism(g: &GroupTable, seed: u64) -> Check {
    let mut r = rng(seed);
    let random_elem = |r: &mut ChaCha8Rng| {
        let coeffs: Vec<shoda::algebra::Rational> = (0..g.order())
            .map(|_| shoda::algebra::Rational::new(r.gen_range(-3..=3).into(), r.gen_range(1..=4).into()))
            .collect();
        AlgebraElement::from_rationals(&coeffs)
    };
    let x = random_elem(&mut r);
    let y = random_elem(&mut r);
    let t = r.gen_range(0..g.order());
    let lhs = x.mul(&y, g).conj(g, t);
    let rhs = x.conj(g, t).mul(&y.conj(g, t), g);
    ensure(lhs == rhs, || "conj is not multiplicative".into())?;
    ensure(x.add(&y).conj(g, t) == x.conj(g, t).add(&y.conj(g, t)), || "conj is not additive".into())
}

/// `eps(H,K) eps(A, K∩A) = eps(H,K)` whenever `H/K` is cyclic and `A ⊴ H`.
pub fn epsilon_product(g: &GroupTable, h: &Subgroup, k: &Subgroup, a: &Subgroup) -> Check {
    let d = k.intersection(g, a);
    let e = epsilon(g, h, k).map_err(|e| e.to_string())?;
    let f = epsilon(g, a, &d).map_err(|e| e.to_string())?;
    ensure(e.mul(&f, g) == e, || {
        format!("product identity fails |H|={} |K|={} |A|={}", h.order(), k.order(), a.order())
    })
}

pub fn epsilon_product_random(g: &GroupTable, seed: u64) -> Check {
    let mut r = rng(seed);
    let h = random_subgroup(g, &mut r);
    let trivial = Subgroup::trivial(g);
    let normals = g.normal_subgroups_over(&h, &trivial);
    let kernels: Vec<&Subgroup> = normals.iter().filter(|k| g.is_cyclic_quotient(&h, k)).collect();
    let k = kernels.choose(&mut r).unwrap();
    let a = normals.choose(&mut r).unwrap();
    epsilon_product(g, &h, k, a)
}

/// Every `(H, K, A)` with `H ≤ G`, `K, A ⊴ H`, `H/K` cyclic.
pub fn epsilon_product_exhaustive(g: &GroupTable) -> Check {
    let trivial = Subgroup::trivial(g);
    for h in g.all_subgroups(CAP).map_err(|e| e.to_string())? {
        let normals = g.normal_subgroups_over(&h, &trivial);
        for k in normals.iter().filter(|k| g.is_cyclic_quotient(&h, k)) {
            for a in &normals {
                epsilon_product(g, &h, k, a)?;
            }
        }
    }
    Ok(())
}

/// `{h : phi^h = phi}` for an explicit linear character `phi` of `A` with
/// kernel `K`, computed from exponent values on `A/K`.
pub fn explicit_inertia(g: &GroupTable, h: &Subgroup, a: &Subgroup, k: &Subgroup) -> Subgroup {
    let m = a.index_of(k);
    let y = *a.members().iter().find(|&&x| g.order_modulo(x, k) == m).unwrap();
    let mut value = vec![usize::MAX; g.order()];
    let mut p = g.identity();
    for j in 0..m {
        for &z in k.members() {
            value[g.mul(p, z)] = j;
        }
        p = g.mul(p, y);
    }
    let members =
        h.members().iter().copied().filter(|&t| a.members().iter().all(|&x| value[g.conj(x, t)] == value[x])).collect();
    Subgroup::from_members(g, members)
}

/// Random `A ⊴ H`, `K ⊴ A` with `A/K` cyclic: kernel-wise inertia equals
/// the character stabilizer.
pub fn inertia_oracle(g: &GroupTable, seed: u64) -> Check {
    let mut r = rng(seed);
    let h = random_subgroup(g, &mut r);
    let a = random_normal_in(g, &h, &mut r);
    let kernels: Vec<Subgroup> = g
        .subgroups_of(&a, CAP)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|k| g.is_normal_in(k, &a) && g.is_cyclic_quotient(&a, k))
        .collect();
    let k = kernels.choose(&mut r).unwrap();
    let fast = inertia(g, &h, &a, k).map_err(|e| e.to_string())?;
    ensure(fast == explicit_inertia(g, &h, &a, k), || {
        format!("inertia mismatch |H|={} |A|={} |K|={}", h.order(), a.order(), k.order())
    })
}

fn walk<'a>(n: &'a TreeNode, out: &mut Vec<&'a TreeNode>) {
    out.push(n);
    for c in &n.children {
        walk(c, out);
    }
}

/// Structural invariants of one tree: strictly increasing `A` along paths,
/// valid triples, inertia normality, leaf characterization, abelian nodes,
/// singleton kernel classes, and the per-level containment and
/// orthogonality on every leaf path.
pub fn tree_invariants(g: &GroupTable, t: &ShodaTree) -> Check {
    for p in t.root.paths() {
        for w in p.windows(2) {
            let (a, b) = (&w[0].triple.a, &w[1].triple.a);
            ensure(a.is_subgroup_of(b) && a.order() < b.order(), || "A-chain not strictly increasing".into())?;
        }
    }
    let mut nodes = Vec::new();
    walk(&t.root, &mut nodes);
    for node in nodes {
        let tr = &node.triple;
        ensure(tr.is_valid(g), || "invalid triple".into())?;
        ensure(tr.is_shoda_type() == node.children.is_empty() || (!tr.is_shoda_type() && node.depth == 1), || {
            "H = A must characterize leaves below the root".into()
        })?;
        let Some(big_a) = &node.chosen_a else { continue };
        let abelian = g.is_abelian_over(&tr.h, &tr.k);
        if abelian {
            ensure(big_a == &tr.h, || "abelian node must choose A = H".into())?;
            ensure(node.children.iter().all(|c| c.children.is_empty()), || {
                "children of abelian node must be leaves".into()
            })?;
        }
        let candidates: Vec<Subgroup> = g
            .subgroups_between(&tr.k, big_a, CAP)
            .map_err(|e| e.to_string())?
            .into_iter()
            .filter(|kp| g.is_cyclic_quotient(big_a, kp) && kp.intersection(g, &tr.a) == tr.k && g.core(kp) == tr.n)
            .collect();
        if abelian {
            ensure(candidates.iter().all(|kp| g.is_normal_in(kp, &tr.h)), || "kernel class not a singleton".into())?;
            ensure(candidates.len() == node.children.len(), || "children differ from candidates".into())?;
        }
        for c in &node.children {
            let ct = &c.triple;
            let nk = g.normalizer(&tr.h, &ct.k);
            ensure(big_a.is_subgroup_of(&ct.h) && ct.h.is_subgroup_of(&nk), || "inertia bounds fail".into())?;
            ensure(g.is_normal_in(&ct.h, &nk), || "inertia not normal in N_H(K')".into())?;
        }
    }
    for leaf in t.shoda_leaves() {
        let (h, k) = leaf.pair();
        let eps = epsilon(g, h, k).map_err(|e| e.to_string())?;
        for i in 2..=leaf.height() {
            let prev = leaf.h(i - 1);
            let e_i = sum_of_conjugates(g, leaf.h(i), &eps);
            let cen = centralizer_of_element_in(g, prev, &e_i);
            ensure(cen.is_subgroup_of(&g.normalizer(prev, leaf.k(i))), || format!("containment fails at level {i}"))?;
            let conjs = distinct_conjugates(g, prev, &e_i);
            for (x, a) in conjs.iter().enumerate() {
                for b in &conjs[x + 1..] {
                    ensure(a.mul(b, g).is_zero(), || format!("level {i} conjugates not orthogonal"))?;
                }
            }
        }
    }
    Ok(())
}

pub fn tree_invariants_random(g: &GroupTable, seed: u64) -> Check {
    let mut r = rng(seed);
    let normals = g.normal_subgroups();
    let n = normals.choose(&mut r).unwrap();
    let t = ShodaTree::build(g, n, CAP).map_err(|e| e.to_string())?;
    tree_invariants(g, &t)
}
