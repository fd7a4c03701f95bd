#![no_main]

use exotic4_cli::parse_script;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let _ = parse_script(s, &std::collections::BTreeMap::new());
});
