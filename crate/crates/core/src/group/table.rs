use std::collections::HashMap;
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Orders up to this bound get a full associativity audit.
pub const ASSOCIATIVITY_AUDIT_CAP: usize = 256;
/// Random triples checked above [`ASSOCIATIVITY_AUDIT_CAP`].
pub const ASSOCIATIVITY_SPOT_CHECKS: usize = 10_000;
const AUDIT_SEED: u64 = 0x5_0da;

/// A finite group stored as a dense multiplication table.
///
/// Element `0` is always the identity. Element order is fixed when the table
/// is built and never changes afterwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    gens: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl GroupTable {
    /// Builds a table from row-major products and validates the group axioms.
    ///
    /// If the identity is not element `0` it is swapped into place.
    pub fn from_rows(rows: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotClosed("empty table".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotClosed("table is not square".into()));
        }
        if rows.iter().flatten().any(|&x| x >= n) {
            return Err(Error::NotClosed("entry out of range".into()));
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::MalformedSpec("label count differs from order".into()));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or_else(|| Error::NotClosed("no identity element".into()))?;
        // relabel so that the identity sits at 0
        let swap = |x: usize| {
            if x == 0 {
                identity
            } else if x == identity {
                0
            } else {
                x
            }
        };
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = swap(rows[swap(a)][swap(b)]) as u32;
            }
        }
        let labels = labels.map(|mut l| {
            l.swap(0, identity);
            l
        });
        let table = Self::from_raw(n, mul, labels)?;
        table.audit()?;
        Ok(table)
    }

    fn from_raw(order: usize, mul: Vec<u32>, labels: Option<Vec<String>>) -> Result<Self> {
        let mut inv = vec![u32::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if mul[a * order + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
            if inv[a] == u32::MAX {
                return Err(Error::NotClosed(format!("element {a} has no inverse")));
            }
        }
        let mut table = Self { order, mul, inv, gens: Vec::new(), labels };
        table.gens = table.greedy_generators(0..order);
        Ok(table)
    }

    /// Enumerates the group generated by `gens` breadth first from the
    /// identity and tabulates it.
    ///
    /// Returns the table together with the concrete element behind each
    /// index. The listed generators become the table's generators.
    pub fn generate<T, F>(identity: T, gens: &[T], mul: F, cap: usize) -> Result<(Self, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head].clone();
            head += 1;
            for g in gens {
                let y = mul(&x, g);
                if !index.contains_key(&y) {
                    if elems.len() >= cap {
                        return Err(Error::CapExceeded { order: elems.len() + 1, cap });
                    }
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for (a, x) in elems.iter().enumerate() {
            for (b, y) in elems.iter().enumerate() {
                let z = mul(x, y);
                let k = *index.get(&z).ok_or_else(|| Error::NotClosed("generated set not closed".into()))?;
                table[a * n + b] = k as u32;
            }
        }
        let mut group = Self::from_raw(n, table, None)?;
        let gen_idx: Vec<usize> = gens.iter().map(|g| index[g]).collect();
        group.gens = gen_idx;
        group.audit_associativity()?;
        Ok((group, elems))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g^-1 x g`
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[x, y] = x^-1 y^-1 x y`
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let a = self.mul(self.inv(x), self.inv(y));
        self.mul(self.mul(a, x), y)
    }

    pub fn pow(&self, x: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(x) } else { x };
        let mut acc = 0;
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => format!("g{x}"),
        }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| (0..self.order).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().all(|&a| self.gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Picks generators from `candidates` in order, keeping each one that
    /// enlarges the subgroup generated so far.
    pub(crate) fn greedy_generators(&self, candidates: impl IntoIterator<Item = usize>) -> Vec<usize> {
        self.close(candidates).1
    }

    /// Breadth-first product closure. Returns the members (in discovery
    /// order) and the generators that were actually needed.
    pub(crate) fn close(&self, candidates: impl IntoIterator<Item = usize>) -> (Vec<usize>, Vec<usize>) {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut members = vec![0usize];
        let mut gens = Vec::new();
        for c in candidates {
            if inside[c] {
                continue;
            }
            gens.push(c);
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for &g in &gens {
                    let y = self.mul(x, g);
                    if !inside[y] {
                        inside[y] = true;
                        members.push(y);
                    }
                }
            }
        }
        (members, gens)
    }

    /// Latin square, identity, inverse and associativity checks.
    pub fn audit(&self) -> Result<()> {
        let n = self.order;
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(a, b);
                if seen[c] == a {
                    return Err(Error::NotClosed(format!("row {a} repeats {c}")));
                }
                seen[c] = a;
            }
        }
        let mut seen = vec![usize::MAX; n];
        for b in 0..n {
            for a in 0..n {
                let c = self.mul(a, b);
                if seen[c] == b {
                    return Err(Error::NotClosed(format!("column {b} repeats {c}")));
                }
                seen[c] = b;
            }
        }
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::NotClosed("element 0 is not the identity".into()));
            }
            if self.mul(x, self.inv(x)) != 0 {
                return Err(Error::NotClosed(format!("bad inverse for {x}")));
            }
        }
        self.audit_associativity()
    }

    fn audit_associativity(&self) -> Result<()> {
        let n = self.order;
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::NotClosed(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
            }
            Ok(())
        };
        if n <= ASSOCIATIVITY_AUDIT_CAP {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(AUDIT_SEED);
            for _ in 0..ASSOCIATIVITY_SPOT_CHECKS {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }
}
