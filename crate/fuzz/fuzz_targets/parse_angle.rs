#![no_main]

use libfuzzer_sys::fuzz_target;
use niven::minpoly::ReducedAngle;
use niven::verify::Suite;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(a) = ReducedAngle::parse(s) {
        assert!(a.k() < 2 * a.n());
        assert_eq!(ReducedAngle::parse(&a.to_string()).unwrap(), a);
    }
    // CLI suite names go through the same kind of text path
    let _ = s.parse::<Suite>();
});
