#![no_main]

use equibip::formats::{parse_coloring, write_coloring};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(colors) = parse_coloring(text, n as usize) {
        assert_eq!(colors.len(), n as usize);
        assert_eq!(
            parse_coloring(&write_coloring(&colors), n as usize).unwrap(),
            colors
        );
    }
});
