use std::collections::BTreeMap;

use exotic4::construct::{
    blow_up, fiber_sum, torus_surgery, Declared, FiberSum, GluingMap, MeridianKilled, SurgerySpec,
};
use exotic4::fpgroup::{
    coset_enumerate, derive_relation, eliminate_generators, free_reduce, prove_trivial, AbelianInvariants,
    CosetOutcome, Effort, Letter, Limits, Presentation, ProofStatus, Word,
};
use exotic4::swengine::{blowup_sw, enumerate_basic_classes, mms_value, BasicClassProblem};
use exotic4::topmodel::{product_block, IntersectionLattice, SurfaceFlag, SwFunction};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

const GENS: [&str; 4] = ["a", "b", "c", "d"];

fn letter() -> impl Strategy<Value = Letter> {
    (0..GENS.len(), prop_oneof![Just(1i64), Just(-1), Just(2), Just(-2)]).prop_map(|(g, e)| Letter::new(GENS[g], e))
}

fn raw_word(max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(letter(), 0..max)
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    raw_word(max).prop_map(free_reduce)
}

fn presentation() -> impl Strategy<Value = Presentation> {
    prop::collection::vec(word(8), 0..5).prop_map(|rels| Presentation::new(GENS, rels).unwrap())
}

fn raw_len(v: &[Letter]) -> usize {
    v.iter().map(|l| l.exp.unsigned_abs() as usize).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn free_reduce_idempotent_and_shortening(v in raw_word(16)) {
        let w = free_reduce(v.clone());
        prop_assert!(w.len() <= raw_len(&v));
        prop_assert_eq!(free_reduce(w.letters().to_vec()), w.clone());
        prop_assert!(w.mul(&w.inverse()).is_identity());
        prop_assert!(w.inverse().mul(&w).is_identity());
    }

    #[test]
    fn parse_display_round_trip(w in word(12)) {
        prop_assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn abelianization_ignores_relator_order(p in presentation(), seed in any::<u64>()) {
        let mut rels = p.relators().to_vec();
        let n = rels.len();
        if n > 1 {
            rels.rotate_left((seed as usize) % n);
            rels.reverse();
        }
        let q = Presentation::new(GENS, rels).unwrap();
        prop_assert_eq!(p.abelianization(), q.abelianization());
    }

    #[test]
    fn abelianization_survives_elimination(p in presentation(), w in word(6), g in 0..GENS.len()) {
        // Adding `g = w` for a word avoiding `g`, then eliminating `g`, gives the same group.
        let name = GENS[g];
        let w = w.substitute(&BTreeMap::from([(name.to_string(), Word::identity())]));
        let extended = p.clone().with_relator(Word::gen(name).mul(&w.inverse())).unwrap();
        let reduced = eliminate_generators(&extended, &[(name.to_string(), w)]).unwrap();
        prop_assert!(!reduced.has_generator(name));
        prop_assert_eq!(extended.abelianization(), reduced.abelianization());
    }

    #[test]
    fn invariants_form_divisibility_chain(p in presentation()) {
        let ab = p.abelianization();
        prop_assert!(ab.free_rank + ab.torsion.len() <= GENS.len());
        for t in &ab.torsion {
            prop_assert!(*t >= BigInt::from(2));
        }
        for pair in ab.torsion.windows(2) {
            prop_assert!((&pair[1] % &pair[0]).is_zero());
        }
        prop_assert_eq!(AbelianInvariants::parse(&ab.to_string()).unwrap(), ab);
    }

    #[test]
    fn coset_index_bounds_abelianization(p in presentation()) {
        let limits = Limits { max_cosets: 2_000, max_steps: 200_000 };
        if let CosetOutcome::Index(k) = coset_enumerate(&p, limits) {
            let ab = p.abelianization();
            prop_assert_eq!(ab.free_rank, 0);
            let order = ab.order().unwrap();
            prop_assert!((BigInt::from(k) % order).is_zero());
            if k == 1 {
                prop_assert!(ab.is_trivial());
            }
        }
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn more_effort_never_flips_a_verdict(p in presentation(), w in word(8)) {
        let small = derive_relation(&p, &w, Effort { cosets: Limits { max_cosets: 50, max_steps: 5_000 }, rewrite_steps: 100 });
        let large = derive_relation(&p, &w, Effort { cosets: Limits { max_cosets: 500, max_steps: 40_000 }, rewrite_steps: 400 });
        if small.status != ProofStatus::Unknown {
            prop_assert_eq!(small.status, large.status);
        }
        for v in [&small, &large] {
            if v.status == ProofStatus::Refuted {
                prop_assert!(v.witness.as_deref().is_some_and(|s| !s.is_empty()));
            }
        }
        // A proof of w = 1 means w vanishes in the abelianization.
        if large.status == ProofStatus::Proven {
            let img = p.abelian_image(&w);
            let mut with = p.clone();
            with.add_relator(w.clone()).unwrap();
            prop_assert_eq!(with.abelianization(), p.abelianization(), "image {:?}", img);
        }
    }

    #[test]
    fn refuted_triviality_has_witness(p in presentation()) {
        let v = prove_trivial(&p, Effort::with_max_cosets(2_000));
        if v.status == ProofStatus::Refuted {
            prop_assert!(v.witness.is_some());
        }
        if v.status == ProofStatus::Proven {
            prop_assert!(p.abelianization().is_trivial());
        }
    }
}

#[test]
fn product_blocks_are_consistent() {
    for g in 0..=3 {
        for h in 0..=3 {
            if g == 0 && h == 0 {
                continue;
            }
            let m = product_block(g, h).unwrap();
            assert!(m.validate().is_empty(), "{g},{h}: {:?}", m.validate());
            assert_eq!(m.sigma, 0);
            assert_eq!(m.lattice.signature(), 0);
            let b = m.betti().unwrap();
            assert_eq!(b.b2plus, b.b2minus);
            assert_eq!(m.lattice.rank(), 2 + 4 * (g * h) as usize);
        }
    }
}

#[test]
fn twist_template_homology_is_z2() {
    for n in 1..=10 {
        let m = exotic4::construct::t4_twist_template(n).unwrap();
        assert_eq!(m.pi1.abelianization(), AbelianInvariants::free(2), "n = {n}");
    }
}

#[test]
fn characteristic_in_four_torus_basis() {
    // Sigma, G, R1, R2 with Sigma.G = 1, R_i^2 = -1, R_i.Sigma = 1.
    let l = IntersectionLattice::from_pairings(
        &["Sigma", "G", "R1", "R2"],
        &[0, 0, -1, -1],
        &[("Sigma", "G", 1), ("Sigma", "R1", 1), ("Sigma", "R2", 1)],
    )
    .unwrap();
    for a in -3..=3i64 {
        for b in -3..=3i64 {
            for r1 in -3..=3i64 {
                for r2 in -3..=3i64 {
                    let k = [a, b, r1, r2];
                    let want = a % 2 == 0 && b % 2 == 0 && r1 % 2 != 0 && r2 % 2 != 0;
                    assert_eq!(l.is_characteristic(&k), want, "{k:?}");
                }
            }
        }
    }
}

fn sum_side(g: u32, h: u32, ups: usize) -> exotic4::topmodel::Manifold {
    let mut m = product_block(g, h).unwrap();
    for _ in 0..ups {
        m = blow_up(&m, &[]).unwrap();
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn fiber_sum_numbers_are_symmetric(g in 1u32..=3, h1 in 0u32..=2, h2 in 0u32..=2, u1 in 0usize..3, u2 in 0usize..3) {
        let y = sum_side(g, h1, u1);
        let yp = sum_side(g, h2, u2);
        let spec = FiberSum {
            name: "X".into(),
            phi: GluingMap::identity(g),
            meridian_killed: MeridianKilled { left: Some("test".into()), right: None },
            complements: [None, None],
            declared: Declared { lattice: IntersectionLattice::empty().partial(), surfaces: Vec::new() },
        };
        let yp_primed = exotic4::construct::primed(&yp, "'", false).unwrap();
        let y_primed = exotic4::construct::primed(&y, "'", false).unwrap();
        let (l, lp) = (y.surfaces[0].label.clone(), yp.surfaces[0].label.clone());
        let ab = fiber_sum(&y, &l, &yp_primed, &lp, &spec).unwrap();
        let ba = fiber_sum(&yp, &lp, &y_primed, &l, &spec).unwrap();
        prop_assert_eq!((ab.e, ab.sigma), (ba.e, ba.sigma));
        prop_assert_eq!(ab.e, y.e + yp.e + 4 * g as i64 - 4);
        prop_assert_eq!(ab.sigma, y.sigma + yp.sigma);
    }

    #[test]
    fn surgery_keeps_euler_and_signature(h in 1u32..=2, pick in any::<prop::sample::Index>(), p in -4i64..=4, q in -4i64..=4, ups in 0usize..3) {
        prop_assume!(p != 0 || q != 0);
        let m = sum_side(1, h, ups);
        let tori: Vec<_> = m.surfaces.iter().filter(|s| s.has(SurfaceFlag::Lagrangian)).collect();
        let t = pick.get(&tori);
        let im = t.pi1_images.clone().unwrap();
        let spec = SurgerySpec::dropping(&m, &t.label, &im[0].to_string(), &im[1].to_string(), (p, q), &[]).unwrap();
        let x = torus_surgery(&m, &spec).unwrap();
        prop_assert_eq!((x.e, x.sigma), (m.e, m.sigma));
    }

    #[test]
    fn mms_is_affine(k in -20i64..20, orbit in prop::collection::vec(-5i64..5, 0..4), n in -10i64..10) {
        prop_assert_eq!(mms_value(k, &orbit, 0), k);
        let step = mms_value(k, &orbit, 1) - k;
        prop_assert_eq!(mms_value(k, &orbit, n), k + n * step);
    }

    #[test]
    fn blow_up_doubles_classes(ups in 1usize..4) {
        let mut m = product_block(1, 1).unwrap();
        m.sw = Some(SwFunction::from_pairs([(vec![0; m.lattice.rank()], 1)]));
        for i in 0..ups {
            let before = m.sw.as_ref().unwrap().len();
            m = blow_up(&m, &[]).unwrap();
            prop_assert_eq!(m.sw.as_ref().unwrap().len(), 2 * before, "step {}", i);
        }
        let sw = m.sw.unwrap();
        prop_assert!(sw.conjugation_failures(1).is_empty());
    }

    #[test]
    fn enumerated_classes_are_closed_under_negation(r in 0usize..3, pairs in 0usize..2, extra in 0i64..3) {
        let tori: Vec<(String, u32)> = (1..=r).map(|i| (format!("R{i}"), 1)).collect();
        let named: Vec<(&str, u32)> = tori.iter().map(|(l, g)| (l.as_str(), *g)).collect();
        let e = 6 + 2 * extra;
        let sigma = -2 - 2 * extra;
        let prob = BasicClassProblem::sum_model(2, 2, &named, pairs, e, sigma).unwrap();
        let ks = enumerate_basic_classes(&prob).unwrap();
        for k in &ks {
            let neg: Vec<i64> = k.iter().map(|x| -x).collect();
            prop_assert!(ks.contains(&neg));
            prop_assert!(prob.admits(k));
            prop_assert_eq!(prob.lattice.square(k), prob.simple_type_square());
        }
    }
}

#[test]
fn blowup_sw_matches_orthogonal_shift() {
    let l = IntersectionLattice::from_pairings(&["S", "G", "E"], &[0, 0, -1], &[("S", "G", 1)]).unwrap();
    let f = SwFunction::from_pairs([(vec![2, 0, 0], 3), (vec![-2, 0, 0], -3)]);
    let out = blowup_sw(&f, &[0, 0, 1], &l).unwrap();
    assert_eq!(out.len(), 4);
    assert_eq!(out.get(&[2, 0, 1]), 3);
    assert_eq!(out.get(&[-2, 0, -1]), -3);
    assert!(blowup_sw(&f, &[0, 1, 0], &l).is_err());
}
