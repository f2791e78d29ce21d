use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::evaluate::{Conclusion, Evaluator, Status, TheoremReport};
use crate::graph::{build_b, complete, Edge, Graph};
use crate::property_p::{CheckOptions, DEFAULT_NODE_BUDGET};
use crate::{parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("invalid validation config: {0}")]
    InvalidConfig(String),
}

/// Sampling plan for [`random_validation`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValidationConfig {
    #[serde(default)]
    pub seed: u64,
    pub families: Vec<Family>,
    pub k_values: Vec<usize>,
    /// Exact `α` values such as `"1/2"` or `"0.25"` for the `A_α` theorem.
    #[serde(default)]
    pub alphas: Vec<String>,
    #[serde(default = "default_budget")]
    pub exhaustive_budget: u64,
}

fn default_budget() -> u64 {
    DEFAULT_NODE_BUDGET
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Family {
    /// `K_n` minus up to `max_removed` random edges.
    Dense {
        n_min: usize,
        n_max: usize,
        max_removed: usize,
        samples: usize,
    },
    /// `build_b(n, s, k)` plus up to `max_extra` random cross edges.
    BSupergraph {
        n: usize,
        s: usize,
        k: usize,
        max_extra: usize,
        samples: usize,
    },
    /// Erdős–Rényi `G(n, p)`.
    Gnp {
        n_min: usize,
        n_max: usize,
        p: f64,
        samples: usize,
    },
}

impl Family {
    fn name(&self) -> &'static str {
        match self {
            Family::Dense { .. } => "dense",
            Family::BSupergraph { .. } => "b_supergraph",
            Family::Gnp { .. } => "gnp",
        }
    }

    fn samples(&self) -> usize {
        match *self {
            Family::Dense { samples, .. } | Family::BSupergraph { samples, .. } | Family::Gnp { samples, .. } => {
                samples
            }
        }
    }

    fn check(&self) -> Result<(), String> {
        match *self {
            Family::Dense { n_min, n_max, max_removed, .. } => {
                if n_min < 2 || n_min > n_max {
                    return Err(format!("dense: bad order range {n_min}..={n_max}"));
                }
                if max_removed > n_min * (n_min - 1) / 2 {
                    return Err("dense: max_removed exceeds the edge count".into());
                }
            }
            Family::BSupergraph { n, s, k, .. } => {
                build_b(n, s, k).map_err(|e| format!("b_supergraph: {e}"))?;
            }
            Family::Gnp { n_min, n_max, p, .. } => {
                if n_min < 2 || n_min > n_max {
                    return Err(format!("gnp: bad order range {n_min}..={n_max}"));
                }
                if !(0.0..=1.0).contains(&p) {
                    return Err(format!("gnp: p = {p} outside [0, 1]"));
                }
            }
        }
        Ok(())
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Graph {
        match *self {
            Family::Dense { n_min, n_max, max_removed, .. } => {
                let n = rng.gen_range(n_min..=n_max);
                let j = rng.gen_range(0..=max_removed);
                let g = complete(n).expect("n ≥ 2");
                let mut edges = g.edges().to_vec();
                edges.shuffle(rng);
                Graph::new(n, edges.into_iter().skip(j)).expect("subgraph of K_n")
            }
            Family::BSupergraph { n, s, k, max_extra, .. } => {
                let b = build_b(n, s, k).expect("checked");
                let mut missing: Vec<Edge> = (0..s)
                    .flat_map(|u| (s..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| !b.has_edge(u, v))
                    .collect();
                missing.shuffle(rng);
                let x = rng.gen_range(0..=max_extra.min(missing.len()));
                b.with_edges(missing.into_iter().take(x)).expect("new cross edges")
            }
            Family::Gnp { n_min, n_max, p, .. } => {
                let n = rng.gen_range(n_min..=n_max);
                let edges: Vec<Edge> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.gen_bool(p))
                    .collect();
                Graph::new(n, edges).expect("simple")
            }
        }
    }
}

/// Per-theorem tallies. `holds_*` split the non-boundary hypothesis cases by
/// conclusion; `holds_refuted` counts violations.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub evaluated: usize,
    pub hypothesis_holds: usize,
    pub hypothesis_boundary: usize,
    pub hypothesis_fails: usize,
    pub holds_certified: usize,
    pub holds_extremal: usize,
    pub holds_unknown: usize,
    pub holds_refuted: usize,
}

impl Tally {
    fn add(&mut self, r: &TheoremReport) {
        self.evaluated += 1;
        match r.hypothesis {
            Status::Holds => {
                self.hypothesis_holds += 1;
                match r.conclusion {
                    Conclusion::PCertified => self.holds_certified += 1,
                    Conclusion::ExtremalB => self.holds_extremal += 1,
                    Conclusion::Unknown => self.holds_unknown += 1,
                    Conclusion::PRefuted => self.holds_refuted += 1,
                }
            }
            Status::Boundary => self.hypothesis_boundary += 1,
            Status::Fails => self.hypothesis_fails += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub family: String,
    pub sample: usize,
    pub report: TheoremReport,
    pub edges: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub seed: u64,
    pub samples: usize,
    pub skipped: usize,
    pub tallies: BTreeMap<String, Tally>,
    pub violations: Vec<Violation>,
    pub passed: bool,
}

struct SampleResult {
    family: String,
    index: usize,
    edges: Vec<Edge>,
    reports: Vec<TheoremReport>,
}

/// Samples graphs, evaluates every theorem for every `k` (and `α`), and
/// tallies outcomes. Sample `i` of family `f` draws from ChaCha8 stream
/// `(f << 32) | i` of `seed`, so the report is independent of thread count.
pub fn random_validation(config: &ValidationConfig) -> Result<ValidationReport, ValidationError> {
    let bad = |m: String| ValidationError::InvalidConfig(m);
    if config.k_values.is_empty() || config.k_values.contains(&0) {
        return Err(bad("k_values must be nonempty and positive".into()));
    }
    let mut alphas: Vec<Rational> = Vec::new();
    for a in &config.alphas {
        let r = parse_rational(a).ok_or_else(|| bad(format!("alpha {a:?} is not a rational")))?;
        if r < Rational::from_integer(0) || r >= Rational::from_integer(1) {
            return Err(bad(format!("alpha {a} outside [0, 1)")));
        }
        alphas.push(r);
    }
    for f in &config.families {
        f.check().map_err(bad)?;
    }
    let jobs: Vec<(usize, usize)> = config
        .families
        .iter()
        .enumerate()
        .flat_map(|(fi, f)| (0..f.samples()).map(move |si| (fi, si)))
        .collect();
    let ev = Evaluator::new(CheckOptions {
        exhaustive_budget: config.exhaustive_budget,
        ..CheckOptions::default()
    });
    let results: Vec<Option<SampleResult>> = jobs
        .par_iter()
        .map(|&(fi, si)| {
            let family = &config.families[fi];
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(((fi as u64) << 32) | si as u64);
            let g = family.sample(&mut rng);
            let mut case = ev.case(&g).ok()?;
            let mut reports = Vec::new();
            for &k in &config.k_values {
                reports.push(case.t16(k).ok()?);
                reports.push(case.t17(k).ok()?);
                for &a in &alphas {
                    reports.push(case.t41(k, a).ok()?);
                }
            }
            Some(SampleResult {
                family: family.name().to_string(),
                index: si,
                edges: g.edges().to_vec(),
                reports,
            })
        })
        .collect();

    let mut tallies: BTreeMap<String, Tally> = BTreeMap::new();
    let mut violations = Vec::new();
    let mut skipped = 0;
    for r in &results {
        let Some(r) = r else {
            skipped += 1;
            continue;
        };
        for rep in &r.reports {
            tallies.entry(rep.theorem.to_string()).or_default().add(rep);
            if !rep.consistent {
                violations.push(Violation {
                    family: r.family.clone(),
                    sample: r.index,
                    report: rep.clone(),
                    edges: r.edges.clone(),
                });
            }
        }
    }
    Ok(ValidationReport {
        seed: config.seed,
        samples: jobs.len(),
        skipped,
        passed: violations.is_empty(),
        tallies,
        violations,
    })
}
