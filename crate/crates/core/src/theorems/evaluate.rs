use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use serde::Serialize;
use thiserror::Error;

use super::recognize::{is_b_graph, BParams, BRecognition};
use crate::graph::{build_b, Graph, GraphError};
use crate::property_p::{check_p, CheckOptions, PQuery, PStatus, PVerdict, Stage};
use crate::spectral::{compare_banded, lambda_alpha, BandOrdering, SpectralError, COMPARISON_BAND};
use crate::{ExactValue, Rational};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TheoremError {
    #[error("k must be at least 1")]
    InvalidK,
    #[error("alpha must lie in [0, 1), got {0}")]
    AlphaOutOfRange(Rational),
    #[error("graph needs at least 2 vertices (got {0})")]
    TooSmall(usize),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TheoremId {
    #[serde(rename = "T1.6")]
    T16,
    #[serde(rename = "T1.7")]
    T17,
    #[serde(rename = "T4.1")]
    T41,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremId::T16 => "T1.6",
            TheoremId::T17 => "T1.7",
            TheoremId::T41 => "T4.1",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    PCertified,
    PRefuted,
    ExtremalB,
    Unknown,
}

/// One hypothesis clause `value relation bound`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Clause {
    pub name: String,
    pub relation: String,
    pub value: f64,
    /// `None` when the comparison graph does not exist.
    pub bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_exact: Option<ExactValue>,
    pub status: Status,
}

impl Clause {
    fn integer_at_least(name: &str, value: usize, bound: usize) -> Self {
        Clause {
            name: name.into(),
            relation: ">=".into(),
            value: value as f64,
            bound: Some(bound as f64),
            bound_exact: None,
            status: if value >= bound { Status::Holds } else { Status::Fails },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<ExactValue>,
    pub n: usize,
    pub delta: usize,
    pub clauses: Vec<Clause>,
    pub hypothesis: Status,
    pub conclusion: Conclusion,
    pub verdict: PVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_recognition: Option<BRecognition>,
    pub consistent: bool,
}

fn hypothesis_of(clauses: &[Clause]) -> Status {
    if clauses.iter().any(|c| c.status == Status::Fails) {
        Status::Fails
    } else if clauses.iter().any(|c| c.status == Status::Boundary) {
        Status::Boundary
    } else {
        Status::Holds
    }
}

fn banded(value: f64, bound: f64, strict_less: bool) -> Status {
    match (compare_banded(value, bound, COMPARISON_BAND), strict_less) {
        (BandOrdering::Boundary, _) => Status::Boundary,
        (BandOrdering::Less, true) | (BandOrdering::Greater, false) => Status::Holds,
        _ => Status::Fails,
    }
}

/// `δ − 2(1 − α)(k + (δ − 1)/δ)/(δ + 1)`; `α = 0` gives the adjacency version.
pub fn lambda2_threshold(delta: usize, k: usize, alpha: Rational) -> Rational {
    let d = delta as i64;
    let inner = Rational::from_integer(k as i64) + Rational::new(d - 1, d);
    Rational::from_integer(d) - Rational::from_integer(2) * (Rational::from_integer(1) - alpha) * inner / (d + 1)
}

/// Shares `λ₁(B(n, s, k))` across graphs; evaluations on one graph share
/// `check_P` verdicts through [`GraphCase`].
#[derive(Debug, Default)]
pub struct Evaluator {
    opts: CheckOptions,
    b_lambda: Mutex<HashMap<BParams, f64>>,
}

impl Evaluator {
    pub fn new(opts: CheckOptions) -> Self {
        Evaluator {
            opts,
            b_lambda: Mutex::new(HashMap::new()),
        }
    }

    fn lambda1_b(&self, p: BParams) -> Result<f64, TheoremError> {
        if let Some(&v) = self.b_lambda.lock().expect("cache lock").get(&p) {
            return Ok(v);
        }
        let v = lambda_alpha(&build_b(p.n, p.s, p.k)?, 0.0, 1)?;
        self.b_lambda.lock().expect("cache lock").insert(p, v);
        Ok(v)
    }

    pub fn case<'g>(&'g self, g: &'g Graph) -> Result<GraphCase<'g>, TheoremError> {
        if g.order() < 2 {
            return Err(TheoremError::TooSmall(g.order()));
        }
        Ok(GraphCase {
            ev: self,
            g,
            delta: g.min_degree(),
            verdicts: HashMap::new(),
            lambda: HashMap::new(),
        })
    }
}

/// One graph under evaluation, caching spectra and `check_P` per `k`.
pub struct GraphCase<'g> {
    ev: &'g Evaluator,
    g: &'g Graph,
    delta: usize,
    verdicts: HashMap<usize, PVerdict>,
    lambda: HashMap<(Rational, usize), f64>,
}

impl GraphCase<'_> {
    fn verdict(&mut self, k: usize) -> PVerdict {
        if let Some(v) = self.verdicts.get(&k) {
            return v.clone();
        }
        let v = match PQuery::new(k, self.delta) {
            Ok(q) => check_p(self.g, q, &self.ev.opts),
            Err(_) => PVerdict::unknown(Stage::None),
        };
        self.verdicts.insert(k, v.clone());
        v
    }

    fn lambda(&mut self, alpha: Rational, i: usize) -> Result<f64, TheoremError> {
        if let Some(&v) = self.lambda.get(&(alpha, i)) {
            return Ok(v);
        }
        let a = *alpha.numer() as f64 / *alpha.denom() as f64;
        let v = lambda_alpha(self.g, a, i)?;
        self.lambda.insert((alpha, i), v);
        Ok(v)
    }

    fn conclusion_of(verdict: &PVerdict) -> Conclusion {
        match verdict.status {
            PStatus::Certified => Conclusion::PCertified,
            PStatus::Refuted => Conclusion::PRefuted,
            PStatus::Unknown => Conclusion::Unknown,
        }
    }

    /// `δ ≥ 2k + 2`, `n ≥ 2δ + 3` and `λ₁(G) ≥ λ₁(B(n, δ + 1, k − 1))` imply
    /// `P(k, δ)` unless `G ≅ B(n, δ + 1, k − 1)`.
    pub fn t16(&mut self, k: usize) -> Result<TheoremReport, TheoremError> {
        if k == 0 {
            return Err(TheoremError::InvalidK);
        }
        let (n, delta) = (self.g.order(), self.delta);
        let l1 = self.lambda(Rational::from_integer(0), 1)?;
        let params = BParams {
            n,
            s: delta + 1,
            k: k - 1,
        };
        let spectral = if n >= params.s + params.k {
            let b = self.ev.lambda1_b(params)?;
            Clause {
                name: "spectral".into(),
                relation: ">=".into(),
                value: l1,
                bound: Some(b),
                bound_exact: None,
                status: banded(l1, b, false),
            }
        } else {
            Clause {
                name: "spectral".into(),
                relation: ">=".into(),
                value: l1,
                bound: None,
                bound_exact: None,
                status: Status::Fails,
            }
        };
        let clauses = vec![
            Clause::integer_at_least("min_degree", delta, 2 * k + 2),
            Clause::integer_at_least("order", n, 2 * delta + 3),
            spectral,
        ];
        let hypothesis = hypothesis_of(&clauses);
        let b = is_b_graph(self.g, params.s, params.k);
        let verdict = self.verdict(k);
        let conclusion = if b.matched {
            Conclusion::ExtremalB
        } else {
            Self::conclusion_of(&verdict)
        };
        Ok(TheoremReport {
            theorem: TheoremId::T16,
            k,
            alpha: None,
            n,
            delta,
            consistent: !(hypothesis == Status::Holds && conclusion == Conclusion::PRefuted),
            clauses,
            hypothesis,
            conclusion,
            verdict,
            b_recognition: Some(b),
        })
    }

    /// `δ ≥ 2k + 2` and `λ₂(G) < δ − 2(k + (δ − 1)/δ)/(δ + 1)` imply `P(k, δ)`.
    pub fn t17(&mut self, k: usize) -> Result<TheoremReport, TheoremError> {
        let mut r = self.alpha_report(k, Rational::from_integer(0))?;
        r.theorem = TheoremId::T17;
        r.alpha = None;
        Ok(r)
    }

    /// `δ ≥ 2k + 2` and `λ_{α,2}(G) < δ − 2(1 − α)(k + (δ − 1)/δ)/(δ + 1)`
    /// imply `P(k, δ)`, for `0 ≤ α < 1`.
    pub fn t41(&mut self, k: usize, alpha: Rational) -> Result<TheoremReport, TheoremError> {
        self.alpha_report(k, alpha)
    }

    fn alpha_report(&mut self, k: usize, alpha: Rational) -> Result<TheoremReport, TheoremError> {
        if k == 0 {
            return Err(TheoremError::InvalidK);
        }
        if alpha < Rational::from_integer(0) || alpha >= Rational::from_integer(1) {
            return Err(TheoremError::AlphaOutOfRange(alpha));
        }
        let (n, delta) = (self.g.order(), self.delta);
        let l2 = self.lambda(alpha, 2)?;
        let mut clauses = vec![Clause::integer_at_least("min_degree", delta, 2 * k + 2)];
        if delta == 0 {
            clauses.push(Clause {
                name: "spectral".into(),
                relation: "<".into(),
                value: l2,
                bound: None,
                bound_exact: None,
                status: Status::Fails,
            });
        } else {
            let t = lambda2_threshold(delta, k, alpha);
            let exact = ExactValue::from(t);
            clauses.push(Clause {
                name: "spectral".into(),
                relation: "<".into(),
                value: l2,
                bound: Some(exact.decimal),
                status: banded(l2, exact.decimal, true),
                bound_exact: Some(exact),
            });
        }
        let hypothesis = hypothesis_of(&clauses);
        let verdict = self.verdict(k);
        let conclusion = Self::conclusion_of(&verdict);
        Ok(TheoremReport {
            theorem: TheoremId::T41,
            k,
            alpha: Some(ExactValue::from(alpha)),
            n,
            delta,
            consistent: !(hypothesis == Status::Holds && conclusion == Conclusion::PRefuted),
            clauses,
            hypothesis,
            conclusion,
            verdict,
            b_recognition: None,
        })
    }
}

pub fn eval_t16(g: &Graph, k: usize) -> Result<TheoremReport, TheoremError> {
    Evaluator::default().case(g)?.t16(k)
}

pub fn eval_t17(g: &Graph, k: usize) -> Result<TheoremReport, TheoremError> {
    Evaluator::default().case(g)?.t17(k)
}

pub fn eval_t41(g: &Graph, k: usize, alpha: Rational) -> Result<TheoremReport, TheoremError> {
    Evaluator::default().case(g)?.t41(k, alpha)
}
