use std::path::Path;

use serde::{Deserialize, Serialize};

use super::builtins::{builtin, compose, cycle_label};
use crate::error::{Error, Result};
use crate::group::GroupTable;

/// A group description as read from JSON.
///
/// * `permutation`: 0-indexed image arrays, composed left to right
///   (`p*q` applies `p` first).
/// * `table`: row-major products of element indices.
/// * `builtin`: one of [`super::BUILTIN_NAMES`].
/// * `product`: direct product of the factors.
/// * `semidirect`: `action[i][j]` is the index, in the normal group, of
///   `g_i^-1 n_j g_i`, where `g_i` and `n_j` run over the generators of the
///   acting and normal groups.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Permutation {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    Table {
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Builtin {
        name: String,
    },
    Product {
        factors: Vec<GroupSpec>,
    },
    Semidirect {
        normal: Box<GroupSpec>,
        acting: Box<GroupSpec>,
        action: Vec<Vec<usize>>,
    },
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedSpec(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    /// Table spec reproducing `g` exactly, labels included.
    pub fn of_table(g: &GroupTable) -> Self {
        GroupSpec::Table { table: g.rows(), labels: g.labels().map(<[String]>::to_vec) }
    }

    pub fn build(&self, cap: usize) -> Result<GroupTable> {
        match self {
            GroupSpec::Permutation { degree, generators } => permutation_group(*degree, generators, cap),
            GroupSpec::Table { table, labels } => {
                if table.len() > cap {
                    return Err(Error::CapExceeded { order: table.len(), cap });
                }
                GroupTable::from_rows(table, labels.clone())
            }
            GroupSpec::Builtin { name } => builtin(name, cap),
            GroupSpec::Product { factors } => {
                let tables = factors.iter().map(|f| f.build(cap)).collect::<Result<Vec<_>>>()?;
                direct_product(&tables, cap)
            }
            GroupSpec::Semidirect { normal, acting, action } => {
                semidirect(&normal.build(cap)?, &acting.build(cap)?, action, cap)
            }
        }
    }
}

/// Reads `builtin:<name>` or a path to a JSON spec.
pub fn load_group(source: &str, cap: usize) -> Result<GroupTable> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return builtin(name, cap);
    }
    let text = std::fs::read_to_string(Path::new(source))?;
    GroupSpec::from_json(&text)?.build(cap)
}

pub fn permutation_group(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<GroupTable> {
    for p in generators {
        let mut seen = vec![false; degree];
        if p.len() != degree || p.iter().any(|&i| i >= degree || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::MalformedSpec(format!("not a permutation of degree {degree}: {p:?}")));
        }
    }
    let id: Vec<usize> = (0..degree).collect();
    let (g, elems) = GroupTable::generate(id, generators, |p, q| compose(p, q), cap)?;
    Ok(g.with_labels(elems.iter().map(|p| cycle_label(p)).collect()))
}

pub fn direct_product(factors: &[GroupTable], cap: usize) -> Result<GroupTable> {
    let k = factors.len();
    let mut gens = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        for &s in f.generators() {
            let mut v = vec![0usize; k];
            v[i] = s;
            gens.push(v);
        }
    }
    let mul = |a: &Vec<usize>, b: &Vec<usize>| -> Vec<usize> {
        a.iter().zip(b).zip(factors).map(|((&x, &y), f)| f.mul(x, y)).collect()
    };
    let (g, elems) = GroupTable::generate(vec![0; k], &gens, mul, cap)?;
    let labels = elems
        .iter()
        .map(|v| {
            let parts: Vec<String> = v.iter().zip(factors).map(|(&x, f)| f.label(x)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    Ok(g.with_labels(labels))
}

/// Extends generator images to a map on all of `n`, checking that it is a
/// bijective homomorphism.
pub fn extend_automorphism(n: &GroupTable, images: &[usize]) -> Result<Vec<usize>> {
    let gens = n.generators();
    if images.len() != gens.len() || images.iter().any(|&x| x >= n.order()) {
        return Err(Error::MalformedSpec("action needs one image per normal generator".into()));
    }
    let mut map = vec![usize::MAX; n.order()];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &img) in gens.iter().zip(images) {
            let y = n.mul(x, s);
            let fy = n.mul(map[x], img);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return Err(Error::ConstructionInvalid("action is not a homomorphism".into()));
            }
        }
    }
    let mut hit = vec![false; n.order()];
    for &y in &map {
        if y == usize::MAX || std::mem::replace(&mut hit[y], true) {
            return Err(Error::ConstructionInvalid("action is not bijective".into()));
        }
    }
    Ok(map)
}

/// `K ⋉ N` with elements `k*n` and `k^-1 n k` given on generators by
/// `action`.
pub fn semidirect(n: &GroupTable, k: &GroupTable, action: &[Vec<usize>], cap: usize) -> Result<GroupTable> {
    if action.len() != k.generators().len() {
        return Err(Error::MalformedSpec("action needs one row per acting generator".into()));
    }
    let gen_maps = action.iter().map(|row| extend_automorphism(n, row)).collect::<Result<Vec<_>>>()?;
    // conj[k] is n -> k^-1 n k, and conj[k s] = conj[s] after conj[k]
    let mut conj: Vec<Option<Vec<usize>>> = vec![None; k.order()];
    conj[0] = Some((0..n.order()).collect());
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, m) in k.generators().iter().zip(&gen_maps) {
            let y = k.mul(x, s);
            let composed: Vec<usize> = conj[x].as_ref().unwrap().iter().map(|&v| m[v]).collect();
            match &conj[y] {
                None => {
                    conj[y] = Some(composed);
                    queue.push(y);
                }
                Some(existing) if *existing != composed => {
                    return Err(Error::ConstructionInvalid("action does not respect the acting group".into()));
                }
                Some(_) => {}
            }
        }
    }
    let conj: Vec<Vec<usize>> = conj.into_iter().map(|c| c.expect("acting group is generated")).collect();
    let mut gens: Vec<(usize, usize)> = k.generators().iter().map(|&s| (s, 0)).collect();
    gens.extend(n.generators().iter().map(|&s| (0, s)));
    let mul = |a: &(usize, usize), b: &(usize, usize)| (k.mul(a.0, b.0), n.mul(conj[b.0][a.1], b.1));
    let (g, elems) = GroupTable::generate((0, 0), &gens, mul, cap)?;
    let labels = elems
        .iter()
        .map(|&(a, b)| match (a, b) {
            (0, 0) => "1".to_string(),
            (0, b) => n.label(b),
            (a, 0) => k.label(a),
            (a, b) => format!("{}*{}", k.label(a), n.label(b)),
        })
        .collect();
    Ok(g.with_labels(labels))
}
