#![no_main]

use equibip::formats::{parse_edge_list, write_edge_list, ReadOptions};
use equibip::graph::build_graph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for dedup in [false, true] {
        if let Ok(raw) = parse_edge_list(text, ReadOptions { dedup }) {
            let again =
                equibip::formats::parse_edge_list(&write_edge_list(&raw), ReadOptions::default())
                    .expect("written edge list parses");
            assert_eq!(again.edges, raw.edges);
            if raw.n <= 1 << 16 {
                let _ = build_graph(&raw);
            }
        }
    }
});
