#![no_main]

use equibip::graph::RawGraph;
use equibip::verify::verify;
use equibip::{build_graph, color_equitably, Mode, Outcome};
use libfuzzer_sys::fuzz_target;

// First byte is the vertex count, each following byte pair an edge.
fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let n = n as usize;
    if n == 0 {
        return;
    }
    let edges = rest
        .chunks_exact(2)
        .map(|p| (p[0] as usize % n, p[1] as usize % n))
        .collect();
    let Ok(g) = build_graph(&RawGraph::new(n, edges)) else {
        return;
    };
    if g.max_degree() < 2 {
        return;
    }
    for mode in [Mode::Theorem, Mode::BestEffort] {
        if let Ok(Outcome::Colored(c)) = color_equitably(&g, mode) {
            let rep = verify(&g, &c.construction.cover, c.base.k, c.base.q, c.base.r);
            assert!(rep.all_ok(), "{rep:?}");
        }
    }
});
