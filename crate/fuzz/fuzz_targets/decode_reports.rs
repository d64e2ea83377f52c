#![no_main]

use libfuzzer_sys::fuzz_target;
use niven::arith::IntPolynomial;
use niven::cyclofield::{KElement, KPolynomial};
use niven::independence::Verdict;
use niven::report::{ClassifyReport, IndepReport, MinPolyReport, SuiteReport};

fuzz_target!(|data: &[u8]| {
    let _ = serde_json::from_slice::<KElement>(data);
    let _ = serde_json::from_slice::<KPolynomial>(data);
    let _ = serde_json::from_slice::<IntPolynomial>(data);
    let _ = serde_json::from_slice::<Verdict>(data);
    let _ = serde_json::from_slice::<IndepReport>(data);
    let _ = serde_json::from_slice::<MinPolyReport>(data);
    let _ = serde_json::from_slice::<ClassifyReport>(data);
    let _ = serde_json::from_slice::<SuiteReport>(data);
});
