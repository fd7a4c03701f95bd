#![no_main]

use exotic4::fpgroup::AbelianInvariants;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(a) = AbelianInvariants::parse(s) {
        assert_eq!(AbelianInvariants::parse(&a.to_string()).unwrap(), a);
    }
});
