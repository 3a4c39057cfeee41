//! Command-line front end.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_traits::One;
use serde_json::{json, Value};

use crate::clifford::{forest, is_good, CharTriple, ShodaTree};
use crate::components::{dimension_audit, tower_of_leaf};
use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup, SUBGROUP_ENUMERATION_CAP};
use crate::idempotents::{
    alpha_is_one_criterion, alpha_matches_scalar, alpha_via_normalizers, distinct_pcis, is_shoda_bruteforce, records,
    verify_complete, ShodaRecord,
};
use crate::io::emit::{
    element_json, element_text, record_json, record_text, report_json, report_text, subgroup_json, subgroup_name,
    to_json_string, tower_json, tower_text, tree_dot, tree_json, tree_text,
};
use crate::io::{load_group, Format, WordParser};

/// Default bound on the group order for the pipeline.
pub const DEFAULT_MAX_ORDER: usize = 5000;

#[derive(Debug, Parser)]
#[command(name = "shoda", version, about = "Shoda pairs and primitive central idempotents of QG")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Trees of character triples, one per selected normal subgroup
    Tree(CommonArgs),
    /// Shoda pairs with alpha and the strong/good flags
    Pairs(CommonArgs),
    /// Primitive central idempotents
    Pci(CommonArgs),
    /// Simple component towers
    Components {
        #[command(flatten)]
        common: CommonArgs,
        /// Also compare each predicted dimension with the exact ideal rank
        #[arg(long)]
        audit: bool,
    },
    /// Completeness and invariant checks; exit status 1 on any failure
    Verify(CommonArgs),
    /// Membership in the class of groups handled by the construction
    Classc(CommonArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// `builtin:<name>` or a path to a JSON group spec
    #[arg(long)]
    pub group: String,
    /// `N<i>` (1 = whole group, by decreasing order), a 0-based index in
    /// increasing order, `G`, `gens:<words>` or `members:<i,j,...>`
    #[arg(long)]
    pub normal: Option<String>,
    #[arg(long, default_value = "text")]
    pub format: String,
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    /// Bound for subgroup enumeration steps
    #[arg(long, default_value_t = SUBGROUP_ENUMERATION_CAP)]
    pub subgroup_cap: usize,
    /// Worker threads (default: all cores)
    #[arg(long)]
    pub jobs: Option<usize>,
}

/// Validated settings for one run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub group: String,
    pub normal: Option<String>,
    pub format: Format,
    pub max_order: usize,
    pub subgroup_cap: usize,
}

impl RunConfig {
    pub fn from_args(a: &CommonArgs) -> Result<Self> {
        if a.max_order == 0 || a.subgroup_cap == 0 {
            return Err(Error::MalformedSpec("caps must be positive".into()));
        }
        Ok(Self {
            group: a.group.clone(),
            normal: a.normal.clone(),
            format: a.format.parse()?,
            max_order: a.max_order,
            subgroup_cap: a.subgroup_cap,
        })
    }

    pub fn load(&self) -> Result<GroupTable> {
        let g = load_group(&self.group, self.max_order)?;
        if g.order() > self.max_order {
            return Err(Error::CapExceeded { order: g.order(), cap: self.max_order });
        }
        Ok(g)
    }
}

/// Resolves a normal-subgroup selector against the ascending list `normals`.
pub fn select_normal(g: &GroupTable, normals: &[Subgroup], sel: &str) -> Result<Subgroup> {
    let sel = sel.trim();
    let bad = |m: String| Error::Selector(m);
    let found = if sel == "G" {
        Subgroup::whole(g)
    } else if let Some(words) = sel.strip_prefix("gens:") {
        let gens = if words.trim().is_empty() { Vec::new() } else { WordParser::new(g).eval_list(words)? };
        g.closure(&gens)
    } else if let Some(list) = sel.strip_prefix("members:") {
        let mut members = list
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad(format!("bad member `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&x| x >= g.order()) {
            return Err(bad("member index out of range".into()));
        }
        let s = g.closure(&members);
        if s.members() != members.as_slice() {
            return Err(bad("member list is not a subgroup".into()));
        }
        s
    } else if let Some(i) = sel.strip_prefix('N') {
        let i: usize = i.parse().map_err(|_| bad(format!("bad selector `{sel}`")))?;
        if i == 0 || i > normals.len() {
            return Err(bad(format!("N{i} out of range 1..={}", normals.len())));
        }
        normals[normals.len() - i].clone()
    } else if let Ok(i) = sel.parse::<usize>() {
        normals.get(i).cloned().ok_or_else(|| bad(format!("index {i} out of range 0..{}", normals.len())))?
    } else {
        return Err(bad(format!("unrecognized selector `{sel}`")));
    };
    if !g.is_normal(&found) {
        return Err(Error::NotNormal(format!("selector `{sel}` is not a normal subgroup")));
    }
    Ok(found)
}

/// Output text and whether every check passed.
pub struct Outcome {
    pub output: String,
    pub ok: bool,
}

fn trees_for(g: &GroupTable, cfg: &RunConfig) -> Result<Vec<ShodaTree>> {
    match &cfg.normal {
        None => forest(g, cfg.subgroup_cap),
        Some(sel) => {
            let n = select_normal(g, &g.normal_subgroups(), sel)?;
            Ok(vec![ShodaTree::build(g, &n, cfg.subgroup_cap)?])
        }
    }
}

fn leaf_goodness(g: &GroupTable, t: &ShodaTree) -> Result<Vec<Option<bool>>> {
    let leaves = t.shoda_leaves();
    let mut it = leaves.iter();
    t.root
        .paths()
        .iter()
        .map(
            |p| {
                if p.last().unwrap().triple.is_shoda_type() {
                    is_good(g, it.next().unwrap()).map(Some)
                } else {
                    Ok(None)
                }
            },
        )
        .collect()
}

fn no_dot(cmd: &str) -> Error {
    Error::UnsupportedFormat(format!("dot output is only available for `tree`, not `{cmd}`"))
}

fn json_out(v: Value) -> Outcome {
    Outcome { output: to_json_string(&v), ok: true }
}

pub fn cmd_tree(cfg: &RunConfig) -> Result<Outcome> {
    let g = cfg.load()?;
    let trees = trees_for(&g, cfg)?;
    let mut out = String::new();
    let mut values = Vec::new();
    for (i, t) in trees.iter().enumerate() {
        let good = leaf_goodness(&g, t)?;
        match cfg.format {
            Format::Json => values.push(tree_json(&g, t, &good)),
            Format::Dot => out.push_str(&tree_dot(&g, t, &format!("G_N{i}"))),
            Format::Text => out.push_str(&tree_text(&g, t, &good)),
        }
    }
    if cfg.format == Format::Json {
        return Ok(json_out(json!({ "order": g.order(), "trees": values })));
    }
    Ok(Outcome { output: out, ok: true })
}

fn records_for(cfg: &RunConfig) -> Result<(GroupTable, Vec<ShodaRecord>)> {
    let g = cfg.load()?;
    let trees = trees_for(&g, cfg)?;
    let recs = records(&g, &trees)?;
    Ok((g, recs))
}

pub fn cmd_pairs(cfg: &RunConfig) -> Result<Outcome> {
    let (g, recs) = records_for(cfg)?;
    match cfg.format {
        Format::Json => Ok(json_out(json!({
            "order": g.order(),
            "pairs": recs.iter().map(|r| record_json(&g, r, false)).collect::<Vec<_>>(),
        }))),
        Format::Text => {
            let mut s = format!("{} pairs\n", recs.len());
            for r in &recs {
                s.push_str(&record_text(&g, r));
                s.push('\n');
            }
            Ok(Outcome { output: s, ok: true })
        }
        Format::Dot => Err(no_dot("pairs")),
    }
}

pub fn cmd_pci(cfg: &RunConfig) -> Result<Outcome> {
    let (g, recs) = records_for(cfg)?;
    match cfg.format {
        Format::Json => Ok(json_out(json!({
            "order": g.order(),
            "pairs": recs.iter().map(|r| record_json(&g, r, true)).collect::<Vec<_>>(),
        }))),
        Format::Text => {
            let mut s = String::new();
            for r in &recs {
                s.push_str(&format!("{}\n  {}\n", record_text(&g, r), element_text(&g, &r.pci)));
            }
            Ok(Outcome { output: s, ok: true })
        }
        Format::Dot => Err(no_dot("pci")),
    }
}

pub fn cmd_components(cfg: &RunConfig, audit: bool) -> Result<Outcome> {
    let (g, recs) = records_for(cfg)?;
    let mut items = Vec::new();
    let mut text = String::new();
    let mut ok = true;
    for r in &recs {
        let t = tower_of_leaf(&g, &r.path)?;
        let rank = if audit {
            match dimension_audit(&g, r, &t) {
                Ok(rank) => Some(rank),
                Err(Error::AuditFailure { rank, .. }) => {
                    ok = false;
                    Some(rank as usize)
                }
                Err(e) => return Err(e),
            }
        } else {
            None
        };
        items.push(json!({
            "H": subgroup_json(&g, &r.h),
            "K": subgroup_json(&g, &r.k),
            "tower": tower_json(&t),
            "rank": rank,
        }));
        text.push_str(&format!("({}, {})  {}", subgroup_name(&g, &r.h), subgroup_name(&g, &r.k), tower_text(&t)));
        if let Some(rank) = rank {
            text.push_str(&format!("  rank={rank}"));
        }
        text.push('\n');
    }
    match cfg.format {
        Format::Json => Ok(Outcome { output: to_json_string(&json!({ "order": g.order(), "components": items })), ok }),
        Format::Text => Ok(Outcome { output: text, ok }),
        Format::Dot => Err(no_dot("components")),
    }
}

/// Named checks run by `verify`.
pub fn battery(g: &GroupTable, trees: &[ShodaTree], recs: &[ShodaRecord]) -> Result<Vec<(String, bool)>> {
    let mut checks = Vec::new();
    let mut push = |name: &str, ok: bool| checks.push((name.to_string(), ok));
    let chains = trees.iter().all(|t| {
        t.root.paths().iter().all(|p| {
            p.windows(2).all(|w| {
                let (a, b) = (&w[0].triple.a, &w[1].triple.a);
                a.is_subgroup_of(b) && a.order() < b.order()
            })
        })
    });
    push("strictly increasing A-chains", chains);
    let valid = trees.iter().all(|t| t.root.paths().iter().flatten().all(|n| valid_triple(g, &n.triple)));
    push("triples valid", valid);
    let mut oracle = true;
    let mut alpha_ok = true;
    let mut alpha_one = true;
    let mut substitution = true;
    let mut strong_ok = true;
    let mut audits = true;
    for r in recs {
        oracle &= is_shoda_bruteforce(g, &r.h, &r.k);
        alpha_ok &= alpha_matches_scalar(g, r)?;
        alpha_one &= alpha_is_one_criterion(g, &r.path)? == r.alpha.is_one();
        if r.good {
            substitution &= alpha_via_normalizers(g, &r.path)? == r.alpha;
        }
        if r.cor52 || r.path.height() <= 2 {
            strong_ok &= r.strong;
        }
        if !r.alpha.is_one() {
            strong_ok &= !r.strong;
        }
        let t = tower_of_leaf(g, &r.path)?;
        audits &= dimension_audit(g, r, &t).is_ok();
    }
    push("pairs pass the Shoda criterion", oracle);
    push("alpha times idempotency scalar is 1", alpha_ok);
    push("alpha = 1 criterion", alpha_one);
    push("normalizer substitution on good leaves", substitution);
    push("strongness coherence", strong_ok);
    push("dimension audits", audits);
    Ok(checks)
}

fn valid_triple(g: &GroupTable, t: &CharTriple) -> bool {
    t.is_valid(g)
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Outcome> {
    let g = cfg.load()?;
    let trees = trees_for(&g, cfg)?;
    let recs = records(&g, &trees)?;
    let mut checks = battery(&g, &trees, &recs)?;
    let whole_forest = cfg.normal.is_none();
    let report = verify_complete(&g, &recs, true)?;
    if whole_forest {
        checks.push(("pairwise orthogonal".into(), report.pairwise_orthogonal));
        checks.push(("sum is 1".into(), report.sum_is_one));
        checks.push(("rank sum is |G|".into(), report.rank_sum == Some(g.order())));
        checks.push(("distinct across trees".into(), report.distinct_across_trees));
    } else {
        checks.push(("pairwise orthogonal".into(), report.pairwise_orthogonal));
    }
    let ok = checks.iter().all(|(_, b)| *b);
    match cfg.format {
        Format::Json => {
            let checks_json: serde_json::Map<String, Value> =
                checks.iter().map(|(n, b)| (n.clone(), json!(b))).collect();
            Ok(Outcome {
                output: to_json_string(&json!({
                    "checks": checks_json,
                    "report": report_json(&report),
                    "ok": ok,
                })),
                ok,
            })
        }
        Format::Text => {
            let mut s = String::new();
            for (n, b) in &checks {
                s.push_str(&format!("{} {n}\n", if *b { "ok    " } else { "FAILED" }));
            }
            s.push_str(&report_text(&report));
            s.push('\n');
            Ok(Outcome { output: s, ok })
        }
        Format::Dot => Err(no_dot("verify")),
    }
}

pub fn cmd_classc(cfg: &RunConfig) -> Result<Outcome> {
    let g = cfg.load()?;
    let verdict = g.is_in_class_c(cfg.subgroup_cap)?;
    match cfg.format {
        Format::Json => Ok(json_out(json!({ "order": g.order(), "class_c": verdict }))),
        Format::Text => Ok(Outcome { output: format!("{verdict}\n"), ok: true }),
        Format::Dot => Err(no_dot("classc")),
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let common = match &cli.command {
        Command::Tree(c) | Command::Pairs(c) | Command::Pci(c) | Command::Verify(c) | Command::Classc(c) => c,
        Command::Components { common, .. } => common,
    };
    let cfg = RunConfig::from_args(common)?;
    let work = || match &cli.command {
        Command::Tree(_) => cmd_tree(&cfg),
        Command::Pairs(_) => cmd_pairs(&cfg),
        Command::Pci(_) => cmd_pci(&cfg),
        Command::Components { audit, .. } => cmd_components(&cfg, *audit),
        Command::Verify(_) => cmd_verify(&cfg),
        Command::Classc(_) => cmd_classc(&cfg),
    };
    match common.jobs {
        Some(0) => Err(Error::MalformedSpec("--jobs must be positive".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::MalformedSpec(e.to_string()))?
            .install(work),
        None => work(),
    }
}

/// Exit status for an error: 3 for caps, 2 for bad input, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::MalformedSpec(_)
        | Error::NotClosed(_)
        | Error::ConstructionInvalid(_)
        | Error::NotNormal(_)
        | Error::UnsupportedFormat(_)
        | Error::Selector(_)
        | Error::Io(_)
        | Error::Json(_) => 2,
        _ => 1,
    }
}

/// Parses `args` (program name first), runs, writes, returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = out.write_all(o.output.as_bytes());
            if o.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Distinct PCIs in text, one per line.
pub fn pci_lines(g: &GroupTable, recs: &[ShodaRecord]) -> Vec<String> {
    distinct_pcis(recs).into_iter().map(|p| serde_json::to_string(&element_json(g, p)).unwrap()).collect()
}
