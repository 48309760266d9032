use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{
    construct_cover, derive_parameters, feasibility, normalize, BaseParameters, ColoringParameters,
    Construction, EngineError, FeasibilityReport, NormalizedForm,
};
use crate::graph::BipartiteGraph;

/// How the number of mixed classes `t` is picked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Only `t = floor(k/4)`.
    Theorem,
    /// Smallest `t` in `0..=k-x` whose conditions all hold.
    #[default]
    BestEffort,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Theorem => "theorem",
            Mode::BestEffort => "best-effort",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "theorem" => Ok(Mode::Theorem),
            "best-effort" | "best_effort" => Ok(Mode::BestEffort),
            other => Err(format!(
                "unknown mode `{other}` (expected theorem or best-effort)"
            )),
        }
    }
}

/// Pick `t` and return its parameters together with every report evaluated
/// along the way. `None` means no candidate satisfied all four conditions.
pub fn choose_t(
    nf: &NormalizedForm,
    base: &BaseParameters,
    b: usize,
    mode: Mode,
) -> (Option<ColoringParameters>, Vec<FeasibilityReport>) {
    let candidates = match mode {
        Mode::Theorem => {
            let t = base.k / 4;
            t..=t
        }
        // x <= floor(k/2), so k - x never underflows.
        Mode::BestEffort => 0..=base.k - nf.x,
    };
    let mut reports = Vec::new();
    for t in candidates {
        let params = ColoringParameters::new(base, b, t);
        let report = feasibility(nf, &params);
        reports.push(report);
        if report.all_true() {
            return (Some(params), reports);
        }
    }
    (None, reports)
}

/// A successful coloring with everything needed to audit it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colored {
    pub mode: Mode,
    pub base: BaseParameters,
    pub construction: Construction,
    pub report: FeasibilityReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Colored(Box<Colored>),
    /// No admissible `t` was found; one report per candidate tried.
    Infeasible(Vec<FeasibilityReport>),
}

impl Outcome {
    pub fn colored(&self) -> Option<&Colored> {
        match self {
            Outcome::Colored(c) => Some(c),
            Outcome::Infeasible(_) => None,
        }
    }

    pub fn is_colored(&self) -> bool {
        matches!(self, Outcome::Colored(_))
    }
}

/// Equitable `(ceil(delta/2) + 1)`-coloring of `graph`, or the feasibility
/// reports explaining why the construction does not apply.
pub fn color_equitably(graph: &BipartiteGraph, mode: Mode) -> Result<Outcome, EngineError> {
    let base = derive_parameters(graph.n(), graph.max_degree())?;
    let nf = normalize(graph.a(), base.q, base.k, base.r)?;
    let (chosen, reports) = choose_t(&nf, &base, graph.b(), mode);
    let Some(params) = chosen else {
        return Ok(Outcome::Infeasible(reports));
    };
    let construction = construct_cover(graph, &nf, &params)?;
    let report = *reports.last().expect("a chosen t has a report");
    Ok(Outcome::Colored(Box::new(Colored {
        mode,
        base,
        construction,
        report,
    })))
}
