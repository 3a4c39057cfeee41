//! Deterministic JSON, DOT and plain-text renderings.
//!
//! JSON objects are built as `serde_json::Value` maps, whose keys are kept
//! sorted; rationals are always written as `"num/den"`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::algebra::{rational_text, AlgebraElement};
use crate::clifford::{ShodaTree, TreeNode};
use crate::components::ComponentTower;
use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};
use crate::idempotents::{CompletenessReport, ShodaRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            "text" => Ok(Format::Text),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// Greedy generating set, preferring short labels.
pub fn display_generators(g: &GroupTable, s: &Subgroup) -> Vec<usize> {
    let mut cands: Vec<(usize, usize)> = s.members().iter().map(|&x| (g.label(x).len(), x)).collect();
    cands.sort_unstable();
    let mut gens = Vec::new();
    let mut span = Subgroup::trivial(g);
    for (_, x) in cands {
        if span.order() == s.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = g.closure(&gens);
        }
    }
    gens
}

/// `<g1,g2>`, `<1>` when trivial.
pub fn subgroup_name(g: &GroupTable, s: &Subgroup) -> String {
    let gens = display_generators(g, s);
    if gens.is_empty() {
        return "<1>".into();
    }
    let labels: Vec<String> = gens.iter().map(|&x| g.label(x)).collect();
    format!("<{}>", labels.join(","))
}

pub fn subgroup_json(g: &GroupTable, s: &Subgroup) -> Value {
    json!({
        "order": s.order(),
        "generators": display_generators(g, s).iter().map(|&x| g.label(x)).collect::<Vec<_>>(),
        "members": s.members(),
        "name": subgroup_name(g, s),
    })
}

pub fn element_json(g: &GroupTable, x: &AlgebraElement) -> Value {
    Value::Array(x.canonical_text(g).into_iter().map(|(l, q)| json!([l, q])).collect())
}

pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

struct Flat<'a> {
    node: &'a TreeNode,
    id: usize,
    parent: Option<usize>,
}

fn flatten(root: &TreeNode) -> Vec<Flat<'_>> {
    let mut out = Vec::new();
    let mut stack = vec![(root, None)];
    while let Some((node, parent)) = stack.pop() {
        let id = out.len();
        out.push(Flat { node, id, parent });
        for c in node.children.iter().rev() {
            stack.push((c, Some(id)));
        }
    }
    out
}

/// `goodness(leaf_index)` is supplied by the caller, in depth-first leaf order.
pub fn tree_json(g: &GroupTable, t: &ShodaTree, goodness: &[Option<bool>]) -> Value {
    let mut leaf_i = 0;
    let nodes: Vec<Value> = flatten(&t.root)
        .iter()
        .map(|f| {
            let tr = &f.node.triple;
            let mut m = Map::new();
            m.insert("id".into(), json!(f.id));
            m.insert("parent".into(), json!(f.parent));
            m.insert("depth".into(), json!(f.node.depth));
            m.insert("H".into(), subgroup_json(g, &tr.h));
            m.insert("A".into(), subgroup_json(g, &tr.a));
            m.insert("K".into(), subgroup_json(g, &tr.k));
            m.insert("chosen_A".into(), f.node.chosen_a.as_ref().map_or(Value::Null, |a| subgroup_json(g, a)));
            m.insert("leaf".into(), json!(f.node.is_leaf()));
            m.insert("shoda_type".into(), json!(tr.is_shoda_type()));
            if f.node.is_leaf() {
                m.insert("good".into(), json!(goodness.get(leaf_i).copied().flatten()));
                leaf_i += 1;
            }
            Value::Object(m)
        })
        .collect();
    json!({
        "normal": subgroup_json(g, &t.n),
        "node_count": t.node_count(),
        "leaf_count": t.leaf_count(),
        "leaf_heights": t.leaf_heights(),
        "nodes": nodes,
    })
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// One digraph, root drawn at the bottom.
pub fn tree_dot(g: &GroupTable, t: &ShodaTree, name: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"{}\" {{", dot_escape(name));
    let _ = writeln!(s, "  rankdir=BT;");
    let _ = writeln!(s, "  node [shape=box];");
    let flat = flatten(&t.root);
    for f in &flat {
        let tr = &f.node.triple;
        let label = format!(
            "H={}\\nA={}\\nK={}",
            dot_escape(&subgroup_name(g, &tr.h)),
            dot_escape(&subgroup_name(g, &tr.a)),
            dot_escape(&subgroup_name(g, &tr.k))
        );
        let _ = writeln!(s, "  n{} [label=\"{}\"];", f.id, label);
    }
    for f in &flat {
        if let Some(p) = f.parent {
            let _ = writeln!(s, "  n{p} -> n{};", f.id);
        }
    }
    s.push_str("}\n");
    s
}

pub fn tree_text(g: &GroupTable, t: &ShodaTree, goodness: &[Option<bool>]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "tree over N = {} (order {}): {} nodes, {} leaves",
        subgroup_name(g, &t.n),
        t.n.order(),
        t.node_count(),
        t.leaf_count()
    );
    let mut leaf_i = 0;
    for f in flatten(&t.root) {
        let tr = &f.node.triple;
        let _ = write!(
            s,
            "{}({}, {}, {})",
            "  ".repeat(f.node.depth),
            subgroup_name(g, &tr.h),
            subgroup_name(g, &tr.a),
            subgroup_name(g, &tr.k)
        );
        if f.node.is_leaf() {
            match goodness.get(leaf_i).copied().flatten() {
                Some(true) => s.push_str("  [good]"),
                Some(false) => s.push_str("  [not good]"),
                None if !tr.is_shoda_type() => s.push_str("  [stalled]"),
                None => {}
            }
            leaf_i += 1;
        }
        s.push('\n');
    }
    s
}

pub fn record_json(g: &GroupTable, r: &ShodaRecord, with_pci: bool) -> Value {
    let mut m = Map::new();
    m.insert("H".into(), subgroup_json(g, &r.h));
    m.insert("K".into(), subgroup_json(g, &r.k));
    m.insert("N".into(), subgroup_json(g, &r.n));
    m.insert("height".into(), json!(r.path.height()));
    m.insert("alpha".into(), json!(rational_text(&r.alpha)));
    m.insert("flags".into(), json!({ "strong": r.strong, "good": r.good, "cor52": r.cor52 }));
    if with_pci {
        m.insert("pci".into(), element_json(g, &r.pci));
    }
    Value::Object(m)
}

pub fn record_text(g: &GroupTable, r: &ShodaRecord) -> String {
    format!(
        "({}, {})  N={}  height={}  alpha={}  strong={}  good={}",
        subgroup_name(g, &r.h),
        subgroup_name(g, &r.k),
        subgroup_name(g, &r.n),
        r.path.height(),
        rational_text(&r.alpha),
        r.strong,
        r.good
    )
}

pub fn element_text(g: &GroupTable, x: &AlgebraElement) -> String {
    let terms: Vec<String> = x.canonical_text(g).into_iter().map(|(l, q)| format!("{q}*{l}")).collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn tower_json(t: &ComponentTower) -> Value {
    serde_json::to_value(t).expect("tower serializes")
}

pub fn tower_text(t: &ComponentTower) -> String {
    let mut s = String::new();
    for l in &t.levels {
        let _ = write!(s, "M_{}(", l.matrix_degree);
    }
    let _ = write!(s, "Q(xi_{})", t.cyclotomic_order);
    for l in t.levels.iter().rev() {
        let _ = write!(s, " * [{}])", l.crossed_order);
    }
    let _ = write!(s, "  phi(k)={}  dimension={}", t.base_field_degree, t.predicted_dimension);
    s
}

pub fn report_json(r: &CompletenessReport) -> Value {
    json!({
        "order": r.order,
        "records": r.records,
        "distinct_pcis": r.distinct_pcis,
        "pairwise_orthogonal": r.pairwise_orthogonal,
        "orthogonality": r.orthogonality,
        "sum_is_one": r.sum_is_one,
        "goodness": r.goodness,
        "all_good": r.all_good,
        "irredundancy": r.irredundancy(),
        "distinct_across_trees": r.distinct_across_trees,
        "ranks": r.ranks,
        "rank_sum": r.rank_sum,
        "passes": r.passes(),
    })
}

pub fn report_text(r: &CompletenessReport) -> String {
    let mut s = format!(
        "{} PCIs, sum={}, orthogonal={}, irredundancy {}",
        r.distinct_pcis,
        if r.sum_is_one { "1" } else { "not 1" },
        r.pairwise_orthogonal,
        r.irredundancy()
    );
    if let Some(rs) = r.rank_sum {
        let _ = write!(s, ", rank sum={rs}/{}", r.order);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::builtin;

    #[test]
    fn formats_parse() {
        assert_eq!("dot".parse::<Format>().unwrap(), Format::Dot);
        assert!(matches!("xml".parse::<Format>(), Err(Error::UnsupportedFormat(_))));
    }

    #[test]
    fn single_vertex_dot() {
        let g = builtin("cyclic(3)", 100).unwrap();
        let t = ShodaTree::build(&g, &Subgroup::whole(&g), 100).unwrap();
        let d = tree_dot(&g, &t, "G_N");
        assert_eq!(d.matches("[label=").count(), 1);
        assert_eq!(d.matches("->").count(), 0);
    }

    #[test]
    fn json_keys_sorted() {
        let g = builtin("cyclic(2)", 100).unwrap();
        let v = subgroup_json(&g, &Subgroup::whole(&g));
        let text = serde_json::to_string(&v).unwrap();
        assert!(text.find("\"generators\"").unwrap() < text.find("\"members\"").unwrap());
        assert!(text.find("\"name\"").unwrap() < text.find("\"order\"").unwrap());
    }
}
