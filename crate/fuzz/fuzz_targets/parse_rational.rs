#![no_main]

use equibip::engine::compute_constants;
use equibip::Rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 64 {
        return;
    }
    if let Ok(z) = Rational::parse(text) {
        assert_eq!(Rational::parse(&z.to_string()).unwrap(), z);
        if let Ok(c) = compute_constants(&z) {
            assert!(c.k >= c.k0);
            assert_eq!(c.c, &c.k * 2);
        }
    }
});
