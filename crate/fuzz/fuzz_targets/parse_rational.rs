#![no_main]

use libfuzzer_sys::fuzz_target;
use niven::arith::parse_rational;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(r) = parse_rational(s) {
            assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
        }
    }
});
