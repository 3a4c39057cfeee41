//! Exact arithmetic in the rational group algebra.

mod element;
mod rank;

pub use element::{
    centralizer_of_element_in, distinct_conjugates, e_sum, epsilon, idempotency_scalar, rational_text,
    sum_of_conjugates, AlgebraElement, Rational,
};
pub use rank::{ideal_rank, ideal_rank_exact};

#[cfg(test)]
mod tests;
