#![no_main]

use libfuzzer_sys::fuzz_target;
use niven::cyclofield::CycloElement;
use niven::report::ElementJson;

fuzz_target!(|data: &[u8]| {
    let Ok(json) = serde_json::from_slice::<ElementJson>(data) else { return };
    if let Ok(x) = CycloElement::try_from(&json) {
        let back = CycloElement::try_from(&ElementJson::from(&x)).unwrap();
        assert_eq!(back, x);
    }
});
