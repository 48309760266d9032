use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use equibip::bench::{run_bench, write_bench_csv};
use equibip::engine::{compute_constants, Colored, FeasibilityReport};
use equibip::formats::{
    parse_coloring, parse_graph, write_coloring, write_dimacs, write_edge_list, ReadOptions,
};
use equibip::generate::{generate, GenSpec};
use equibip::oracle::{BruteForce, ChiE};
use equibip::verify::verify as verify_cover;
use equibip::{build_graph, color_equitably, BipartiteGraph, Cover, Mode, Outcome, Rational};
use serde_json::json;

use crate::{GraphInput, GraphOutputFormat, OutputFormat};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_INFEASIBLE: u8 = 2;
pub const EXIT_UNVERIFIED: u8 = 3;

fn load_graph(input: &GraphInput) -> Result<BipartiteGraph> {
    let text = fs::read_to_string(&input.graph)
        .with_context(|| format!("reading {}", input.graph.display()))?;
    let raw = parse_graph(
        &text,
        input.input_format,
        ReadOptions { dedup: input.dedup },
    )
    .with_context(|| format!("parsing {}", input.graph.display()))?;
    Ok(build_graph(&raw)?)
}

fn emit(output: Option<&Path>, body: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            Ok(out.flush()?)
        }
    }
}

fn report_line(r: &FeasibilityReport) -> String {
    let p = &r.params;
    format!(
        "t={} L={} H={} x={} u={} M={} | r-u<=k-x:{} t<=k-x:{} H>=0:{} tH>=M:{}",
        p.t, p.l, p.h, r.x, r.u, r.m, r.surplus_fits, r.t_fits, r.h_nonnegative, r.split_fits
    )
}

fn colored_json(
    graph: &BipartiteGraph,
    c: &Colored,
    verification: &equibip::VerificationReport,
) -> serde_json::Value {
    let built = &c.construction;
    let p = &built.params;
    let nf = &built.normalized;
    json!({
        "status": "colored",
        "mode": c.mode,
        "parameters": {
            "n": graph.n(), "m": graph.edge_count(), "delta": p.delta,
            "a": graph.a(), "b": graph.b(),
            "k": p.k, "q": p.q, "r": p.r,
            "x": nf.x, "u": nf.u, "M": nf.m,
            "t": p.t, "L": p.l, "H": p.h,
            "e": built.e, "y": built.y,
        },
        "normalization": nf.trace,
        "split": built.split.as_ref().map(|s| s.parts().to_vec()),
        "classes": built.cover.classes.iter().enumerate().map(|(i, class)| json!({
            "color": i,
            "kind": class.kind,
            "size": class.len(),
            "vertices": class.vertices,
        })).collect::<Vec<_>>(),
        "verification": verification,
    })
}

pub fn color(
    input: &GraphInput,
    mode: Mode,
    format: OutputFormat,
    output: Option<&Path>,
) -> Result<u8> {
    let graph = load_graph(input)?;
    let outcome = color_equitably(&graph, mode)?;
    match outcome {
        Outcome::Colored(c) => {
            let cover = &c.construction.cover;
            let rep = verify_cover(&graph, cover, c.base.k, c.base.q, c.base.r);
            if !rep.all_ok() {
                eprintln!("internal error: constructed cover failed verification: {rep:?}");
                return Ok(EXIT_UNVERIFIED);
            }
            let body = match format {
                OutputFormat::Text => write_coloring(&cover.colors(graph.n())),
                OutputFormat::Json => {
                    serde_json::to_string_pretty(&colored_json(&graph, &c, &rep))? + "\n"
                }
            };
            emit(output, &body)?;
            Ok(EXIT_OK)
        }
        Outcome::Infeasible(reports) => {
            let body = match format {
                OutputFormat::Text => {
                    let mut s = format!(
                        "infeasible: no admissible t in {mode} mode (n={}, delta={}, |A|={}, |B|={})\n",
                        graph.n(),
                        graph.max_degree(),
                        graph.a(),
                        graph.b()
                    );
                    for r in &reports {
                        s.push_str(&report_line(r));
                        s.push('\n');
                    }
                    s
                }
                OutputFormat::Json => {
                    serde_json::to_string_pretty(&json!({
                        "status": "infeasible",
                        "mode": mode,
                        "n": graph.n(),
                        "delta": graph.max_degree(),
                        "a": graph.a(),
                        "b": graph.b(),
                        "reports": reports,
                    }))? + "\n"
                }
            };
            emit(output, &body)?;
            Ok(EXIT_INFEASIBLE)
        }
    }
}

pub fn verify(input: &GraphInput, coloring: &Path, k: Option<usize>) -> Result<u8> {
    let graph = load_graph(input)?;
    let text =
        fs::read_to_string(coloring).with_context(|| format!("reading {}", coloring.display()))?;
    let colors = parse_coloring(&text, graph.n())
        .with_context(|| format!("parsing {}", coloring.display()))?;
    let used = colors.iter().copied().max().map_or(0, |c| c + 1);
    let k = k.unwrap_or(used);
    if k == 0 || used > k {
        bail!("coloring uses {used} colors but k = {k}");
    }
    let cover = Cover::from_colors(&graph, &colors, k);
    let rep = verify_cover(&graph, &cover, k, graph.n() / k, graph.n() % k);
    println!("proper: {}", rep.proper);
    println!("partition: {}", rep.partition);
    println!("class_count_ok: {}", rep.class_count_ok);
    println!("size_profile: {:?}", rep.size_profile);
    println!("equitable: {}", rep.equitable);
    println!("exact_profile_ok: {}", rep.exact_profile_ok);
    Ok(if rep.is_valid_coloring() {
        EXIT_OK
    } else {
        EXIT_UNVERIFIED
    })
}

pub fn chie(input: &GraphInput, kmax: Option<usize>, limit: usize) -> Result<u8> {
    let graph = load_graph(input)?;
    let k_max = kmax.unwrap_or(graph.n());
    match BruteForce::new(limit).chi_e(&graph, k_max)? {
        ChiE::Exact(k) => println!("{k}"),
        ChiE::Unknown => println!("Unknown"),
    }
    Ok(EXIT_OK)
}

pub fn constants(zeta: &str) -> Result<u8> {
    let zeta = Rational::parse(zeta)?;
    let res = compute_constants(&zeta)?;
    println!("zeta = {}", res.zeta);
    println!("K0 = {}", res.k0);
    println!("K = {}", res.k);
    println!("c = {}", res.c);
    Ok(EXIT_OK)
}

pub fn gen(
    na: usize,
    nb: usize,
    delta_cap: usize,
    p: &str,
    seed: u64,
    format: GraphOutputFormat,
    output: Option<&Path>,
) -> Result<u8> {
    let spec = GenSpec {
        n_a: na,
        n_b: nb,
        delta_cap,
        p: Rational::parse(p)?,
        seed,
    };
    let raw = generate(&spec)?;
    let body = match format {
        GraphOutputFormat::Edgelist => write_edge_list(&raw),
        GraphOutputFormat::Dimacs => write_dimacs(&raw),
    };
    emit(output, &body)?;
    Ok(EXIT_OK)
}

pub fn bench(sizes: &[usize], zeta: &str, seed: u64, output: Option<&Path>) -> Result<u8> {
    let zeta = Rational::parse(zeta)?;
    let records = run_bench(sizes, &zeta, seed)?;
    emit(output, &write_bench_csv(&records))?;
    Ok(EXIT_OK)
}
