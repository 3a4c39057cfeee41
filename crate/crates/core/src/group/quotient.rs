use super::{GroupTable, Subgroup};

/// `H/K` as a table of its own, with maps back and forth.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    table: GroupTable,
    /// parent element index -> coset index, `usize::MAX` outside `H`
    projection: Vec<usize>,
    /// coset index -> smallest representative
    section: Vec<usize>,
    kernel_order: usize,
}

impl QuotientGroup {
    pub(crate) fn build(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> Self {
        let mut projection = vec![usize::MAX; g.order()];
        let mut section = Vec::with_capacity(h.order() / k.order());
        for &x in h.members() {
            if projection[x] != usize::MAX {
                continue;
            }
            let c = section.len();
            section.push(x);
            for &y in k.members() {
                projection[g.mul(x, y)] = c;
            }
        }
        let n = section.len();
        let rows: Vec<Vec<usize>> =
            section.iter().map(|&a| section.iter().map(|&b| projection[g.mul(a, b)]).collect()).collect();
        let labels = section.iter().map(|&r| g.label(r)).collect();
        let table = GroupTable::from_rows(&rows, Some(labels)).expect("quotient by a normal subgroup is a group");
        debug_assert_eq!(table.order(), n);
        Self { table, projection, section, kernel_order: k.order() }
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn project(&self, x: usize) -> Option<usize> {
        let c = self.projection[x];
        (c != usize::MAX).then_some(c)
    }

    pub fn section(&self, c: usize) -> usize {
        self.section[c]
    }

    pub fn kernel_order(&self) -> usize {
        self.kernel_order
    }

    /// Full preimage in the parent of a subgroup of the quotient.
    pub fn preimage(&self, g: &GroupTable, s: &Subgroup) -> Subgroup {
        let members: Vec<usize> = (0..g.order()).filter(|&x| self.project(x).is_some_and(|c| s.contains(c))).collect();
        let gens = [
            g.greedy_generators(self.projection.iter().enumerate().filter(|(_, &c)| c == 0).map(|(x, _)| x)),
            s.gens().iter().map(|&c| self.section[c]).collect(),
        ]
        .concat();
        Subgroup::from_parts(g, members, gens)
    }
}
