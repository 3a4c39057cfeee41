//! Group ingestion and serialization.

mod builtins;
pub mod emit;
mod spec;
mod words;

pub use builtins::{builtin, cycle_label, BUILTIN_NAMES, EX1_RELATIONS, EX2_RELATIONS};
pub use emit::Format;
pub use spec::{direct_product, extend_automorphism, load_group, permutation_group, semidirect, GroupSpec};
pub use words::{check_relations, power_word, split_top_level, subgroup_from_words, WordParser};
