//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use equibip::bench::{run_bench, BenchOutcome};
use equibip::engine::hypotheses_hold;
use equibip::engine::{
    color_equitably, compute_constants, construct_cover, derive_parameters, feasibility, normalize,
    split, ColoringParameters, Mode, Outcome,
};
use equibip::generate::{generate, GenSpec};
use equibip::graph::{build_graph, RawGraph};
use equibip::oracle::{brute_chi_e, brute_equitable_k, brute_normal_forms, ChiE};
use equibip::verify::verify;
use equibip::Rational;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_s: u64) -> Result<(), String> {
    ensure(elapsed < Duration::from_secs(limit_s), || {
        format!("took {:.1}s, limit {limit_s}s", elapsed.as_secs_f64())
    })
}

fn star(delta: usize) -> RawGraph {
    RawGraph::new(delta + 1, (1..=delta).map(|v| (0, v)).collect())
}

fn k33() -> RawGraph {
    RawGraph::new(
        6,
        (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect(),
    )
}

fn c1_star_sharpness() -> Check {
    let start = Instant::now();
    for delta in 5..=15 {
        let g = build_graph(&star(delta)).unwrap();
        let expected = delta.div_ceil(2) + 1;
        let got = brute_chi_e(&g, g.n()).map_err(|e| e.to_string())?;
        ensure(got == ChiE::Exact(expected), || {
            format!("K_1,{delta}: oracle says {got:?}, expected {expected}")
        })?;
    }
    within(start.elapsed(), 10)?;
    Ok("chi_e(K_1,D) = ceil(D/2)+1 for D = 5..15 (n <= 16)".into())
}

fn c2_normalization() -> Check {
    let start = Instant::now();
    let (mut cells, mut hits) = (0usize, 0usize);
    for k in 1..=12 {
        for r in 0..k {
            for q in 1..=8 {
                for a in 0..=(k * q + r) / 2 {
                    cells += 1;
                    let nf = normalize(a, q, k, r).map_err(|e| e.to_string())?;
                    if brute_normal_forms(a, q, k, r).contains(&nf.triple()) {
                        hits += 1;
                    }
                }
            }
        }
    }
    ensure(hits == cells, || format!("{hits}/{cells} cells matched"))?;
    within(start.elapsed(), 30)?;
    Ok(format!("{cells}/{cells} cells in the enumerated set"))
}

fn c3_split() -> Check {
    let start = Instant::now();
    let mut cells = 0usize;
    for t in 1..=20usize {
        for h in 0..=20usize {
            for m in 0..=t * h {
                cells += 1;
                let s = split(m, t, h as i64).map_err(|e| e.to_string())?;
                let p = s.parts();
                let ok = p.len() == t
                    && p.iter().sum::<usize>() == m
                    && p.iter().all(|&v| v <= h)
                    && p.iter().max().unwrap() - p.iter().min().unwrap() <= 1;
                ensure(ok, || format!("split({m}, {t}, {h}) = {p:?}"))?;
            }
        }
    }
    within(start.elapsed(), 5)?;
    Ok(format!("{cells} cells"))
}

/// Random instance with maximum degree in [10, 200] and n / delta in [3, 40].
fn random_instance(rng: &mut ChaCha8Rng) -> (RawGraph, usize) {
    loop {
        let target = rng.gen_range(10..=200usize);
        let ratio = rng.gen_range(3.0..=40.0f64);
        let n = (ratio * target as f64).round() as usize;
        let n_a = ((n as f64) * rng.gen_range(0.1..=0.5)).round().max(1.0) as usize;
        let n_b = n - n_a;
        if n_b < target {
            continue;
        }
        let numer = (target * 13).min(n_b * 10);
        let spec = GenSpec {
            n_a,
            n_b,
            delta_cap: target,
            p: Rational::new(numer as u64, (n_b * 10) as u64),
            seed: rng.gen(),
        };
        let raw = generate(&spec).unwrap();
        let g = build_graph(&raw).unwrap();
        let delta = g.max_degree();
        let r = n as f64 / delta as f64;
        if (10..=200).contains(&delta) && (3.0..=40.0).contains(&r) {
            return (raw, delta);
        }
    }
}

fn c4_construction_validity() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let (mut feasible, mut covers) = (0usize, 0usize);
    for i in 0..1000 {
        let (raw, _) = random_instance(&mut rng);
        let g = build_graph(&raw).unwrap();
        let base = derive_parameters(g.n(), g.max_degree()).map_err(|e| e.to_string())?;
        let nf = normalize(g.a(), base.q, base.k, base.r).map_err(|e| e.to_string())?;
        let mut any = false;
        for t in 0..=base.k - nf.x {
            let params = ColoringParameters::new(&base, g.b(), t);
            if !feasibility(&nf, &params).all_true() {
                continue;
            }
            any = true;
            let built = construct_cover(&g, &nf, &params).map_err(|e| e.to_string())?;
            let rep = verify(&g, &built.cover, base.k, base.q, base.r);
            ensure(rep.all_ok(), || format!("instance {i}, t = {t}: {rep:?}"))?;
            covers += 1;
        }
        if any {
            feasible += 1;
            let out = color_equitably(&g, Mode::BestEffort).map_err(|e| e.to_string())?;
            ensure(out.is_colored(), || {
                format!("instance {i}: driver disagrees with t-scan")
            })?;
        }
    }
    within(start.elapsed(), 120)?;
    Ok(format!(
        "{feasible}/1000 instances feasible, {covers} covers (every feasible t) verified"
    ))
}

/// Largest k in `1..=limit` with `f1(k) < 0` or `f2(k) < 0`, plus one,
/// evaluated in factored form with i128 arithmetic.
fn scan_k0(p: i128, d: i128, limit: i128) -> i128 {
    let mut last = i128::MIN;
    for k in 1..=limit {
        let f1 = p * (2 * k - 3) * (k - 8) - d * (5 * k * k - 4 * k);
        let f2 = p * (2 * k - 3) * (k - 36) - d * (41 * k * k - 36 * k);
        if f1 < 0 || f2 < 0 {
            last = k;
        }
    }
    last + 1
}

fn c5_constants() -> Check {
    let res = compute_constants(&Rational::integer(21)).map_err(|e| e.to_string())?;
    let triple = (res.k0.clone(), res.k.clone(), res.c.clone());
    ensure(
        triple == (BigInt::from(1538), BigInt::from(1538), BigInt::from(3076)),
        || format!("got {triple:?}"),
    )?;
    let scanned = scan_k0(21, 1, 1_000_000);
    ensure(scanned == 1538, || {
        format!("integer scan gives K0 = {scanned}")
    })?;

    let mut previous: Option<BigInt> = None;
    let mut cs = Vec::new();
    for z in [21i64, 25, 41, 100, 1_000_000] {
        let r = compute_constants(&Rational::integer(z)).map_err(|e| e.to_string())?;
        let scan = scan_k0(z as i128, 1, 100_000);
        ensure(r.k0 == BigInt::from(scan), || {
            format!("zeta {z}: K0 {} vs scan {scan}", r.k0)
        })?;
        if let Some(prev) = &previous {
            ensure(&r.c <= prev, || format!("c rises at zeta = {z}"))?;
        }
        cs.push(r.c.to_string());
        previous = Some(r.c);
    }
    ensure(cs.last().map(String::as_str) == Some("74"), || {
        "c(10^6) != 74".into()
    })?;
    Ok(format!(
        "c(21)=3076, K0 matches integer scan; c over zeta list = [{}]",
        cs.join(", ")
    ))
}

fn c6_theorem_witness() -> Check {
    let start = Instant::now();
    let cap = 3100usize;
    let n = 21 * cap;
    let n_a = 4000;
    let n_b = n - n_a;
    let spec = GenSpec {
        n_a,
        n_b,
        delta_cap: cap,
        p: Rational::new((cap * 11) as u64, (n_b * 10) as u64),
        seed: 6,
    };
    let g = build_graph(&generate(&spec).unwrap()).map_err(|e| e.to_string())?;
    let delta = g.max_degree();
    ensure(delta == cap, || {
        format!("generated delta {delta}, wanted {cap}")
    })?;
    ensure(g.n() == 21 * delta, || "n != ceil(21 delta)".into())?;
    let zeta = Rational::integer(21);
    ensure(hypotheses_hold(&g, &zeta).unwrap(), || {
        "theorem hypotheses fail".into()
    })?;
    let out = color_equitably(&g, Mode::Theorem).map_err(|e| e.to_string())?;
    let Outcome::Colored(c) = out else {
        return Err(format!("theorem mode infeasible: {out:?}"));
    };
    ensure(c.report.all_true(), || "feasibility not all-true".into())?;
    ensure(c.construction.params.t == c.base.k / 4, || {
        "t != floor(k/4)".into()
    })?;
    let rep = verify(&g, &c.construction.cover, c.base.k, c.base.q, c.base.r);
    ensure(rep.all_ok(), || format!("{rep:?}"))?;
    ensure(c.base.k == delta.div_ceil(2) + 1, || {
        "wrong color count".into()
    })?;
    within(start.elapsed(), 300)?;
    Ok(format!(
        "delta={delta} n={} m={} k={} t={} verified in {:.1}s",
        g.n(),
        g.edge_count(),
        c.base.k,
        c.construction.params.t,
        start.elapsed().as_secs_f64()
    ))
}

fn c7_infeasibility() -> Check {
    let g = build_graph(&k33()).unwrap();
    for mode in [Mode::Theorem, Mode::BestEffort] {
        let out = color_equitably(&g, mode).map_err(|e| e.to_string())?;
        ensure(!out.is_colored(), || format!("K3,3 colored in {mode} mode"))?;
    }
    ensure(brute_equitable_k(&g, 3).unwrap().is_none(), || {
        "oracle found a 3-coloring".into()
    })?;
    let w = brute_equitable_k(&g, 2)
        .unwrap()
        .ok_or("no 2-coloring witness")?;
    ensure(verify(&g, &w, 2, 3, 0).all_ok(), || {
        "2-coloring witness invalid".into()
    })?;
    Ok("K3,3: infeasible in both modes; oracle k=3 none, k=2 witness".into())
}

fn c8_quadratic_scaling() -> Check {
    let records = run_bench(&[10_000, 20_000, 40_000], &Rational::integer(21), 8)
        .map_err(|e| e.to_string())?;
    for r in &records {
        ensure(r.outcome == BenchOutcome::Ok, || {
            format!("n={}: {:?}", r.n, r.outcome)
        })?;
        ensure(r.within_work_bound(), || {
            format!(
                "n={}: scans {} > {} + {}*{}",
                r.n, r.edge_scans, r.m, r.t, r.b
            )
        })?;
    }
    let ratios: Vec<f64> = records
        .windows(2)
        .map(|w| w[1].wall_time_ns as f64 / w[0].wall_time_ns.max(1) as f64)
        .collect();
    ensure(ratios.iter().all(|&x| x <= 5.0), || {
        format!("ratios {ratios:?}")
    })?;
    let times: Vec<String> = records
        .iter()
        .map(|r| format!("{}us", r.wall_time_ns / 1000))
        .collect();
    Ok(format!(
        "times [{}], doubling ratios [{:.2}, {:.2}], scans within |E| + t|B|",
        times.join(", "),
        ratios[0],
        ratios[1]
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("C1 star sharpness", c1_star_sharpness),
        ("C2 normalization soundness", c2_normalization),
        ("C3 split soundness", c3_split),
        ("C4 construction validity", c4_construction_validity),
        ("C5 constants reproduction", c5_constants),
        ("C6 theorem witness at full scale", c6_theorem_witness),
        ("C7 infeasibility ground truth", c7_infeasibility),
        ("C8 quadratic scaling", c8_quadratic_scaling),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS  {name}: {detail} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why} ({secs:.2}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
