//! The two worked-example groups and cross-checks that are too slow for
//! unit tests.

mod common;

use common::*;
use shoda::algebra::{ideal_rank, ideal_rank_exact};
use shoda::idempotents::pipeline;
use shoda::io::{builtin, check_relations, GroupSpec, EX1_RELATIONS, EX2_RELATIONS};

#[test]
fn builtins_pass_relations_and_class_c() {
    for (name, rels, order) in [("paper-ex1", EX1_RELATIONS, 1000), ("paper-ex2", EX2_RELATIONS, 54)] {
        let g = builtin(name, CAP).unwrap();
        assert_eq!(g.order(), order);
        check_relations(&g, rels).unwrap();
        g.audit().unwrap();
        assert!(g.is_in_class_c(CAP).unwrap(), "{name}");
    }
}

#[test]
fn ex1_normal_subgroup_orders() {
    let g = builtin("paper-ex1", CAP).unwrap();
    let orders: Vec<usize> = g.normal_subgroups().iter().map(|n| n.order()).collect();
    assert_eq!(orders, vec![1, 5, 125, 250, 500, 1000]);
}

#[test]
fn table_round_trip() {
    for (name, g) in pool() {
        let text = GroupSpec::of_table(g).to_json();
        let back = GroupSpec::from_json(&text).unwrap().build(CAP).unwrap();
        assert_eq!(back.rows(), g.rows(), "{name}");
        assert_eq!(GroupSpec::of_table(&back).to_json(), text, "{name}");
    }
}

#[test]
fn modular_rank_matches_exact_rank() {
    for (name, g) in pool().iter().filter(|(_, g)| g.order() <= 54) {
        let (_, recs) = pipeline(g, CAP).unwrap();
        for r in &recs {
            assert_eq!(ideal_rank(g, &r.pci).unwrap(), ideal_rank_exact(g, &r.pci), "{name}");
        }
    }
}
