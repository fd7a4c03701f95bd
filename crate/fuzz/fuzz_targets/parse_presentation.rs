#![no_main]

use exotic4::fpgroup::parse_presentation_json;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_presentation_json(s) {
        if p.generators().len() <= 8 && p.relators().iter().map(|r| r.len()).sum::<usize>() <= 200 {
            let _ = p.abelianization();
        }
    }
});
