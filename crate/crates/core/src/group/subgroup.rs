use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use super::GroupTable;

/// Fixed-width membership mask over element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        Self { words: vec![0; len.div_ceil(64)] }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let w = &mut self.words[i / 64];
        let fresh = *w >> (i % 64) & 1 == 0;
        *w |= 1 << (i % 64);
        fresh
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }
}

/// A subgroup of some [`GroupTable`], stored as a sorted member list plus a
/// membership mask. Generators are cached for closure computations.
///
/// Equality, hashing and ordering only look at the member set; ordering is
/// by `(order, member list)`.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<usize>,
    mask: BitSet,
    gens: Vec<usize>,
}

impl Subgroup {
    /// Assembles a subgroup from an already closed member set.
    pub(crate) fn from_parts(g: &GroupTable, mut members: Vec<usize>, gens: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        let mut mask = BitSet::new(g.order());
        for &m in &members {
            mask.insert(m);
        }
        debug_assert!(mask.contains(0));
        Self { members, mask, gens }
    }

    /// Builds a subgroup from a closed member set, choosing generators greedily.
    pub fn from_members(g: &GroupTable, members: Vec<usize>) -> Self {
        let gens = g.greedy_generators(members.iter().copied());
        Self::from_parts(g, members, gens)
    }

    pub fn trivial(g: &GroupTable) -> Self {
        Self::from_parts(g, vec![0], Vec::new())
    }

    pub fn whole(g: &GroupTable) -> Self {
        Self::from_parts(g, (0..g.order()).collect(), g.generators().to_vec())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask.contains(x)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn mask(&self) -> &BitSet {
        &self.mask
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.mask.is_subset(&other.mask)
    }

    /// `[self : sub]`; panics if `sub` is not contained in `self`.
    pub fn index_of(&self, sub: &Subgroup) -> usize {
        assert!(sub.is_subgroup_of(self), "index of a non-subgroup");
        self.order() / sub.order()
    }

    pub fn intersection(&self, g: &GroupTable, other: &Subgroup) -> Subgroup {
        let members: Vec<usize> = self.members.iter().copied().filter(|&x| other.contains(x)).collect();
        Subgroup::from_members(g, members)
    }

    pub fn is_abelian(&self, g: &GroupTable) -> bool {
        self.gens.iter().all(|&a| self.gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// Closure property and Lagrange divisibility.
    pub fn is_valid_in(&self, g: &GroupTable) -> bool {
        self.contains(0)
            && g.order().is_multiple_of(self.order())
            && self
                .members
                .iter()
                .all(|&a| self.contains(g.inv(a)) && self.members.iter().all(|&b| self.contains(g.mul(a, b))))
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mask.hash(state);
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order().cmp(&other.order()).then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
