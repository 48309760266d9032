//! Scaling benchmark for the coloring pipeline.
//!
//! For each requested order `n` an instance is generated with
//! `delta_cap = floor(n / zeta)`, a quarter of the vertices on side A and
//! edge probability high enough that most A-vertices reach the cap. The
//! timed region is `color_equitably` on the already built graph; the best of
//! [`REPETITIONS`] runs is recorded.

use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::engine::{color_equitably, EngineError, Mode, Outcome};
use crate::generate::{generate, GenError, GenSpec};
use crate::graph::{build_graph, BipartiteGraph, GraphError};
use crate::rational::Rational;
use crate::verify::verify;

pub const REPETITIONS: usize = 7;
pub const CSV_HEADER: &str = "n,m,delta,wall_time_ns,edge_scans,outcome";

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("n = {n} is too small for zeta = {zeta}: degree cap {cap} is below 2")]
    TooSmall {
        n: usize,
        zeta: Rational,
        cap: usize,
    },
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BenchOutcome {
    Ok,
    Infeasible,
    /// The engine produced a cover the verifier rejected.
    Invalid,
}

impl BenchOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            BenchOutcome::Ok => "ok",
            BenchOutcome::Infeasible => "infeasible",
            BenchOutcome::Invalid => "invalid",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub wall_time_ns: u128,
    pub edge_scans: usize,
    pub outcome: BenchOutcome,
    /// Mixed classes used; 0 unless colored.
    pub t: usize,
    /// |B|
    pub b: usize,
}

impl BenchRecord {
    /// `edge_scans <= |E| + t|B|`
    pub fn within_work_bound(&self) -> bool {
        self.edge_scans <= self.m + self.t * self.b
    }
}

/// Generator parameters used for order `n`.
pub fn bench_spec(n: usize, zeta: &Rational, seed: u64) -> Result<GenSpec, BenchError> {
    let cap = (Rational::integer(n as u64).as_big() / zeta.as_big())
        .floor()
        .to_integer()
        .to_usize()
        .unwrap_or(0);
    if cap < 2 {
        return Err(BenchError::TooSmall {
            n,
            zeta: zeta.clone(),
            cap,
        });
    }
    let n_a = n / 4;
    let n_b = n - n_a;
    // Mean A-degree about 1.1 * cap.
    let numer = BigInt::from(cap) * 11 + 10;
    let denom = BigInt::from(n_b) * 10;
    let p = if numer >= denom {
        Rational::integer(1)
    } else {
        Rational::new(numer, denom)
    };
    Ok(GenSpec {
        n_a,
        n_b,
        delta_cap: cap,
        p,
        seed,
    })
}

/// Time the engine on `graph` and package the result.
pub fn measure(graph: &BipartiteGraph, mode: Mode) -> Result<BenchRecord, BenchError> {
    let mut best = u128::MAX;
    let mut outcome = None;
    for _ in 0..REPETITIONS {
        let start = Instant::now();
        let out = color_equitably(graph, mode)?;
        best = best.min(start.elapsed().as_nanos());
        outcome = Some(out);
    }
    let outcome = outcome.expect("at least one repetition");
    let (edge_scans, t, verdict) = match &outcome {
        Outcome::Colored(c) => {
            let built = &c.construction;
            let rep = verify(graph, &built.cover, c.base.k, c.base.q, c.base.r);
            let verdict = if rep.all_ok() {
                BenchOutcome::Ok
            } else {
                BenchOutcome::Invalid
            };
            (built.edge_scans, built.params.t, verdict)
        }
        Outcome::Infeasible(_) => (0, 0, BenchOutcome::Infeasible),
    };
    Ok(BenchRecord {
        n: graph.n(),
        m: graph.edge_count(),
        delta: graph.max_degree(),
        wall_time_ns: best,
        edge_scans,
        outcome: verdict,
        t,
        b: graph.b(),
    })
}

/// One record per requested order, in input order. Instance `i` uses seed
/// `seed + i` (wrapping).
pub fn run_bench(
    sizes: &[usize],
    zeta: &Rational,
    seed: u64,
) -> Result<Vec<BenchRecord>, BenchError> {
    sizes
        .iter()
        .enumerate()
        .map(|(i, &n)| {
            let spec = bench_spec(n, zeta, seed.wrapping_add(i as u64))?;
            let graph = build_graph(&generate(&spec)?)?;
            measure(&graph, Mode::BestEffort)
        })
        .collect()
}

pub fn write_bench_csv(records: &[BenchRecord]) -> String {
    let mut out = String::new();
    writeln!(out, "{CSV_HEADER}").unwrap();
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n,
            r.m,
            r.delta,
            r.wall_time_ns,
            r.edge_scans,
            r.outcome.as_str()
        )
        .unwrap();
    }
    out
}
