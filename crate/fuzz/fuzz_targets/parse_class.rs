#![no_main]

use exotic4::topmodel::IntersectionLattice;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let l = IntersectionLattice::from_pairings(
        &["Sigma", "G", "R1", "R2"],
        &[0, 0, -1, -1],
        &[("Sigma", "G", 1), ("Sigma", "R1", 1), ("Sigma", "R2", 1)],
    )
    .unwrap();
    if let Ok(v) = l.parse_class(s) {
        assert_eq!(l.parse_class(&l.render(&v)).unwrap(), v);
    }
});
