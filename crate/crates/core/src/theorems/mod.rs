//! Hypothesis/conclusion checks for the spectral sufficient conditions on
//! `P(k, δ)`, structural recognition of the extremal graphs `B(n, s, k)`,
//! a randomized validation harness and the table of published numbers.

mod evaluate;
mod recognize;
mod reproduce;
mod validation;

pub use evaluate::{
    eval_t16, eval_t17, eval_t41, lambda2_threshold, Clause, Conclusion, Evaluator, GraphCase, Status,
    TheoremError, TheoremId, TheoremReport,
};
pub use recognize::{is_b_graph, recognize_b, BParams, BRecognition};
pub use reproduce::{reproduce_paper, ReproductionRow, ReproductionTable};
pub use validation::{random_validation, Family, Tally, ValidationConfig, ValidationError, ValidationReport, Violation};
