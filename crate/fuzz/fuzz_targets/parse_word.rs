#![no_main]

use exotic4::fpgroup::{free_reduce, parse_word};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(w) = parse_word(s) {
        assert_eq!(free_reduce(w.letters().to_vec()), w);
        assert_eq!(parse_word(&w.to_string()).unwrap(), w);
        assert!(w.mul(&w.inverse()).is_identity());
    }
});
