#![no_main]

use exotic4::topmodel::parse_manifold_json;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_manifold_json(s) {
        if m.lattice.rank() <= 16 {
            let _ = m.validate();
        }
    }
});
