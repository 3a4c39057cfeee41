//! Subgroup machinery on top of [`GroupTable`]: closures, conjugation,
//! normalizers, cores, normal-subgroup lattices and quotients.

use std::collections::HashSet;

use super::{BitSet, GroupTable, QuotientGroup, Subgroup};
use crate::error::{Error, Result};

/// Default cap for full subgroup enumeration.
pub const SUBGROUP_ENUMERATION_CAP: usize = 2000;

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn is_prime_power(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).unwrap();
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

impl GroupTable {
    /// Smallest subgroup containing `gens`.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let (members, kept) = self.close(gens.iter().copied());
        Subgroup::from_parts(self, members, kept)
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        if b.is_subgroup_of(a) {
            return a.clone();
        }
        if a.is_subgroup_of(b) {
            return b.clone();
        }
        self.closure(&[a.gens(), b.gens()].concat())
    }

    /// `H^g = g^-1 H g`
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Subgroup {
        let members = h.members().iter().map(|&x| self.conj(x, g)).collect();
        let gens = h.gens().iter().map(|&x| self.conj(x, g)).collect();
        Subgroup::from_parts(self, members, gens)
    }

    /// `N_U(H) = { u in U : H^u = H }`
    pub fn normalizer(&self, u: &Subgroup, h: &Subgroup) -> Subgroup {
        let members =
            u.members().iter().copied().filter(|&x| h.gens().iter().all(|&s| h.contains(self.conj(s, x)))).collect();
        Subgroup::from_members(self, members)
    }

    /// Largest normal subgroup of the whole group contained in `h`.
    pub fn core(&self, h: &Subgroup) -> Subgroup {
        let mut current = h.clone();
        loop {
            let mut shrunk = false;
            for &g in self.generators() {
                if current.gens().iter().all(|&s| current.contains(self.conj(s, g))) {
                    continue;
                }
                let conj = self.conjugate_subgroup(&current, g);
                current = current.intersection(self, &conj);
                shrunk = true;
            }
            if !shrunk {
                return current;
            }
        }
    }

    /// `K` is normal in `H` (and contained in it).
    pub fn is_normal_in(&self, k: &Subgroup, h: &Subgroup) -> bool {
        k.is_subgroup_of(h) && h.gens().iter().all(|&x| k.gens().iter().all(|&s| k.contains(self.conj(s, x))))
    }

    pub fn is_normal(&self, k: &Subgroup) -> bool {
        self.is_normal_in(k, &Subgroup::whole(self))
    }

    /// Every commutator `[h, a]` with `h` in `H`, `a` in `A` lies in `K`.
    pub fn commutator_set_in(&self, h: &Subgroup, a: &Subgroup, k: &Subgroup) -> bool {
        h.members().iter().all(|&x| a.members().iter().all(|&y| k.contains(self.commutator(x, y))))
    }

    /// `H/K` is abelian, for `K` normal in `H`.
    pub fn is_abelian_over(&self, h: &Subgroup, k: &Subgroup) -> bool {
        h.gens().iter().all(|&a| h.gens().iter().all(|&b| k.contains(self.commutator(a, b))))
    }

    pub fn center_of(&self, h: &Subgroup) -> Subgroup {
        let members = h
            .members()
            .iter()
            .copied()
            .filter(|&z| h.gens().iter().all(|&s| self.mul(z, s) == self.mul(s, z)))
            .collect();
        Subgroup::from_members(self, members)
    }

    /// Preimage of `Z(H/K)` in `H`.
    pub fn center_over(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let members = h
            .members()
            .iter()
            .copied()
            .filter(|&z| h.gens().iter().all(|&s| k.contains(self.commutator(z, s))))
            .collect();
        Subgroup::from_members(self, members)
    }

    /// Conjugacy classes of `H` acting on itself, each sorted, listed by
    /// smallest member.
    pub fn conjugacy_classes(&self, h: &Subgroup) -> Vec<Vec<usize>> {
        let mut seen = BitSet::new(self.order());
        let mut classes = Vec::new();
        for &x in h.members() {
            if seen.contains(x) {
                continue;
            }
            let mut class = Vec::new();
            for &y in h.members() {
                let c = self.conj(x, y);
                if seen.insert(c) {
                    class.push(c);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Smallest normal subgroup of `H` containing `xs`.
    pub fn normal_closure(&self, h: &Subgroup, xs: &[usize]) -> Subgroup {
        let mut current = self.closure(xs);
        loop {
            let missing: Vec<usize> = h
                .gens()
                .iter()
                .flat_map(|&g| current.gens().iter().map(move |&s| (s, g)))
                .map(|(s, g)| self.conj(s, g))
                .filter(|&c| !current.contains(c))
                .collect();
            if missing.is_empty() {
                return current;
            }
            current = self.closure(&[current.gens(), &missing].concat());
        }
    }

    /// Breadth-first join closure of `base` with `seeds`, keeping only
    /// subgroups accepted by `keep`.
    fn join_closure(&self, base: Subgroup, seeds: &[Subgroup], keep: impl Fn(&Subgroup) -> bool) -> Vec<Subgroup> {
        let mut all: HashSet<Subgroup> = HashSet::new();
        all.insert(base.clone());
        let mut frontier = vec![base];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for s in seeds {
                    if s.is_subgroup_of(a) {
                        continue;
                    }
                    let j = self.join(a, s);
                    if keep(&j) && all.insert(j.clone()) {
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<Subgroup> = all.into_iter().collect();
        out.sort();
        out
    }

    /// Seeds `<K, x^H>` for conjugacy-class representatives `x` of `H`
    /// outside `K`.
    fn class_seeds(&self, h: &Subgroup, k: &Subgroup) -> Vec<Subgroup> {
        let mut seeds: HashSet<Subgroup> = HashSet::new();
        for class in self.conjugacy_classes(h) {
            if k.contains(class[0]) {
                continue;
            }
            let gens = [k.gens(), &class].concat();
            seeds.insert(self.closure(&gens));
        }
        let mut seeds: Vec<Subgroup> = seeds.into_iter().collect();
        seeds.sort();
        seeds
    }

    /// All normal subgroups of the whole group, sorted by `(order, members)`.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        self.normal_subgroups_over(&Subgroup::whole(self), &Subgroup::trivial(self))
    }

    /// Normal subgroups of `H` that contain `K` (`K` normal in `H`).
    pub fn normal_subgroups_over(&self, h: &Subgroup, k: &Subgroup) -> Vec<Subgroup> {
        let seeds = self.class_seeds(h, k);
        self.join_closure(k.clone(), &seeds, |_| true)
    }

    /// Coset group `H/K` with projection and section maps.
    pub fn quotient(&self, h: &Subgroup, k: &Subgroup) -> Result<QuotientGroup> {
        if !self.is_normal_in(k, h) {
            return Err(Error::NotNormal(format!(
                "subgroup of order {} in subgroup of order {}",
                k.order(),
                h.order()
            )));
        }
        Ok(QuotientGroup::build(self, h, k))
    }

    /// Quotient of the whole group by a normal subgroup.
    pub fn quotient_by(&self, n: &Subgroup) -> Result<QuotientGroup> {
        self.quotient(&Subgroup::whole(self), n)
    }

    /// Order of `xK` in `N_G(K)/K`: least `m` with `x^m` in `K`.
    pub fn order_modulo(&self, x: usize, k: &Subgroup) -> usize {
        let mut y = x;
        let mut m = 1;
        while !k.contains(y) {
            y = self.mul(y, x);
            m += 1;
        }
        m
    }

    /// `A/K` is cyclic (`K` normal in `A`).
    pub fn is_cyclic_quotient(&self, a: &Subgroup, k: &Subgroup) -> bool {
        let n = a.index_of(k);
        n == 1 || a.members().iter().any(|&x| self.order_modulo(x, k) == n)
    }

    /// Minimal normal subgroups of `H` containing `K` properly.
    pub fn minimal_normals_over(&self, h: &Subgroup, k: &Subgroup) -> Vec<Subgroup> {
        let mut seen = BitSet::new(self.order());
        let mut candidates: HashSet<Subgroup> = HashSet::new();
        for &x in h.members() {
            if seen.contains(x) || k.contains(x) {
                continue;
            }
            let mut class = Vec::new();
            for &y in h.members() {
                let c = self.conj(x, y);
                if seen.insert(c) {
                    class.push(c);
                }
            }
            if !is_prime(self.order_modulo(x, k)) {
                continue;
            }
            class.sort_unstable();
            candidates.insert(self.closure(&[k.gens(), &class].concat()));
        }
        let mut minimal: Vec<Subgroup> = candidates
            .iter()
            .filter(|m| !candidates.iter().any(|other| other.order() < m.order() && other.is_subgroup_of(m)))
            .cloned()
            .collect();
        minimal.sort();
        minimal
    }

    /// A normal subgroup `M` of `H` of maximal order with `K <= M` and `M/K`
    /// abelian. Ties go to the lexicographically smallest member list.
    pub fn maximal_abelian_normal_over(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        if self.is_abelian_over(h, k) {
            return h.clone();
        }
        // abelian-over-K normal subgroups are joins of abelian seeds, and every
        // intermediate join stays abelian, so pruning is exact
        let seeds: Vec<Subgroup> = self.class_seeds(h, k).into_iter().filter(|s| self.is_abelian_over(s, k)).collect();
        let all = self.join_closure(k.clone(), &seeds, |j| self.is_abelian_over(j, k));
        let best = all.iter().map(Subgroup::order).max().unwrap_or(k.order());
        all.into_iter()
            .filter(|m| m.order() == best)
            .min_by(|a, b| a.members().cmp(b.members()))
            .expect("K itself qualifies")
    }

    /// Every subgroup of `H`, sorted by `(order, members)`.
    pub fn subgroups_of(&self, h: &Subgroup, cap: usize) -> Result<Vec<Subgroup>> {
        if h.order() > cap {
            return Err(Error::CapExceeded { order: h.order(), cap });
        }
        // every subgroup is a join of cyclic subgroups of prime-power order
        let mut seeds: HashSet<Subgroup> = HashSet::new();
        for &x in h.members() {
            if is_prime_power(self.element_order(x)) {
                seeds.insert(self.closure(&[x]));
            }
        }
        let mut seeds: Vec<Subgroup> = seeds.into_iter().collect();
        seeds.sort();
        Ok(self.join_closure(Subgroup::trivial(self), &seeds, |_| true))
    }

    pub fn all_subgroups(&self, cap: usize) -> Result<Vec<Subgroup>> {
        self.subgroups_of(&Subgroup::whole(self), cap)
    }

    /// Subgroups `L` with `K <= L <= M`, enumerated inside `M/K`.
    pub fn subgroups_between(&self, k: &Subgroup, m: &Subgroup, cap: usize) -> Result<Vec<Subgroup>> {
        let q = self.quotient(m, k)?;
        let inner = q.table().all_subgroups(cap)?;
        let mut out: Vec<Subgroup> = inner.iter().map(|s| q.preimage(self, s)).collect();
        out.sort();
        Ok(out)
    }

    /// Abelian, or has a non-central abelian normal subgroup.
    ///
    /// A non-central abelian normal subgroup exists iff some non-central
    /// element has an abelian normal closure.
    pub fn has_property_c(&self, h: &Subgroup) -> bool {
        if h.is_abelian(self) {
            return true;
        }
        let z = self.center_of(h);
        self.conjugacy_classes(h).iter().filter(|c| !z.contains(c[0])).any(|c| self.closure(c).is_abelian(self))
    }

    /// Every subgroup and every quotient group is abelian or contains a
    /// non-central abelian normal subgroup.
    pub fn is_in_class_c(&self, cap: usize) -> Result<bool> {
        if self.order() > cap {
            return Err(Error::CapExceeded { order: self.order(), cap });
        }
        if self.is_abelian() {
            return Ok(true);
        }
        for s in self.all_subgroups(cap)? {
            if !self.has_property_c(&s) {
                return Ok(false);
            }
        }
        for n in self.normal_subgroups() {
            let q = self.quotient_by(&n)?;
            let t = q.table();
            if !t.has_property_c(&Subgroup::whole(t)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
