#![no_main]

use exotic4::fpgroup::parse_relation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_relation(s) {
        let _ = r.relator_canonical();
    }
});
