//! Products of two closed orientable surfaces.

use std::collections::BTreeSet;

use super::lattice::IntersectionLattice;
use super::manifold::{Manifold, ManifoldFlag};
use super::surface::{SurfaceClass, SurfaceFlag};
use crate::error::{Error, Result};
use crate::fpgroup::{Presentation, Word};

/// Loop names of a genus-`g` factor using the letter pair `(p, q)`: bare
/// letters for a torus, indexed ones for higher genus.
fn loops(g: u32, p: char, q: char) -> Vec<String> {
    match g {
        0 => Vec::new(),
        1 => vec![p.to_string(), q.to_string()],
        _ => (1..=g).flat_map(|i| [format!("{p}{i}"), format!("{q}{i}")]).collect(),
    }
}

fn factor_label(g: u32, names: &[String], p: char) -> String {
    match g {
        0 => "S2".to_string(),
        1 => format!("{}*{}", names[0], names[1]),
        _ => format!("Sigma_{p}"),
    }
}

fn surface_relator(names: &[String]) -> Word {
    let mut r = Word::identity();
    for pair in names.chunks(2) {
        r = r.mul(&Word::commutator(&Word::gen(pair[0].clone()), &Word::gen(pair[1].clone())));
    }
    r
}

/// Algebraic intersection of loops `i` and `j` on a surface with symplectic
/// basis `a1, b1, a2, b2, ...`.
fn loop_pairing(i: usize, j: usize) -> i64 {
    if i / 2 != j / 2 || i == j {
        0
    } else if i % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Sigma_g x Sigma_h` with its standard presentation, lattice and surfaces.
///
/// Loops are named `a, b` / `c, d` (indexed for genus at least two); when one
/// factor is a sphere the other uses `x, y`.
pub fn product_block(g: u32, h: u32) -> Result<Manifold> {
    if g == 0 && h == 0 {
        return Err(Error::InvalidArgument("S2 x S2 is not a building block".into()));
    }
    let (p1, p2) = match (g, h) {
        (0, _) => (('s', 't'), ('x', 'y')),
        (_, 0) => (('x', 'y'), ('s', 't')),
        _ => (('a', 'b'), ('c', 'd')),
    };
    let first = loops(g, p1.0, p1.1);
    let second = loops(h, p2.0, p2.1);
    let mut gens = first.clone();
    gens.extend(second.iter().cloned());

    let mut rels = Vec::new();
    if g > 0 {
        rels.push(surface_relator(&first));
    }
    if h > 0 {
        rels.push(surface_relator(&second));
    }
    for a in &first {
        for c in &second {
            rels.push(Word::commutator(&Word::gen(a.clone()), &Word::gen(c.clone())));
        }
    }
    let pi1 = Presentation::new(gens, rels)?;

    let f1 = factor_label(g, &first, p1.0);
    let f2 = factor_label(h, &second, p2.0);
    let mut basis = vec![f1.clone(), f2.clone()];
    let mut cross = Vec::new();
    for (i, a) in first.iter().enumerate() {
        for (j, c) in second.iter().enumerate() {
            basis.push(format!("{a}*{c}"));
            cross.push((i, j));
        }
    }
    let n = basis.len();
    let mut gram = vec![vec![0i64; n]; n];
    gram[0][1] = 1;
    gram[1][0] = 1;
    for (u, &(i, j)) in cross.iter().enumerate() {
        for (v, &(k, l)) in cross.iter().enumerate() {
            gram[2 + u][2 + v] = -loop_pairing(i, k) * loop_pairing(j, l);
        }
    }
    let lattice = IntersectionLattice::new(basis.clone(), gram)?;

    let mut surfaces = Vec::new();
    let words = |v: &[String]| v.iter().map(|s| Word::gen(s.clone())).collect::<Vec<_>>();
    surfaces.push(
        SurfaceClass::basis_class(&f1, g, &lattice)?.with_flag(SurfaceFlag::Symplectic).with_images(words(&first)),
    );
    surfaces.push(
        SurfaceClass::basis_class(&f2, h, &lattice)?.with_flag(SurfaceFlag::Symplectic).with_images(words(&second)),
    );
    for (u, &(i, j)) in cross.iter().enumerate() {
        surfaces.push(
            SurfaceClass::basis_class(&basis[2 + u], 1, &lattice)?
                .with_flag(SurfaceFlag::Lagrangian)
                .with_images(vec![Word::gen(first[i].clone()), Word::gen(second[j].clone())]),
        );
    }

    let mut flags =
        BTreeSet::from([ManifoldFlag::Symplectic, ManifoldFlag::Minimal, ManifoldFlag::ResiduallyFinitePi1]);
    if g == 0 || h == 0 {
        flags.insert(ManifoldFlag::SphereBundleOverSurface);
    }
    let name = match (g, h) {
        (0, _) => format!("S2 x Sigma_{h}"),
        (_, 0) => format!("Sigma_{g} x S2"),
        (1, 1) => "T4".to_string(),
        _ => format!("Sigma_{g} x Sigma_{h}"),
    };
    Ok(Manifold {
        name,
        e: (2 - 2 * g as i64) * (2 - 2 * h as i64),
        sigma: 0,
        b1: 2 * (g + h),
        pi1,
        lattice,
        surfaces,
        flags,
        sw: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::AbelianInvariants;

    #[test]
    fn sphere_times_torus() {
        let m = product_block(0, 1).unwrap();
        assert_eq!((m.e, m.sigma, m.b1), (0, 0, 2));
        assert_eq!(m.pi1, Presentation::from_strs(&["x", "y"], &["[x,y]"]).unwrap());
        assert_eq!(m.lattice.basis, ["S2", "x*y"]);
        assert!(m.validate().is_empty(), "{:?}", m.validate());
    }

    #[test]
    fn four_torus() {
        let m = product_block(1, 1).unwrap();
        assert_eq!((m.e, m.sigma, m.b1), (0, 0, 4));
        assert_eq!(m.lattice.rank(), 6);
        assert_eq!(m.pi1.relators().len(), 6);
        assert_eq!(m.pi1.abelianization(), AbelianInvariants::free(4));
        let i = m.lattice.inertia();
        assert_eq!((i.positive, i.negative), (3, 3));
        // three hyperbolic pairs
        let pair = |u: &str, v: &str| m.lattice.pair(&m.lattice.unit(u).unwrap(), &m.lattice.unit(v).unwrap()).abs();
        assert_eq!(pair("a*b", "c*d"), 1);
        assert_eq!(pair("a*c", "b*d"), 1);
        assert_eq!(pair("a*d", "b*c"), 1);
        assert_eq!(pair("a*c", "a*d"), 0);
        assert_eq!(m.surfaces.iter().filter(|s| s.has(SurfaceFlag::Lagrangian)).count(), 4);
        assert!(m.validate().is_empty());
    }

    #[test]
    fn genus_two_square() {
        let m = product_block(2, 2).unwrap();
        assert_eq!((m.e, m.sigma, m.b1), (4, 0, 8));
        assert_eq!(m.betti().unwrap().b2, 18);
        assert!(m.validate().is_empty());
    }

    #[test]
    fn all_small_blocks_validate() {
        for g in 0..=3 {
            for h in 0..=3 {
                if g == 0 && h == 0 {
                    assert!(product_block(g, h).is_err());
                    continue;
                }
                let m = product_block(g, h).unwrap();
                assert!(m.validate().is_empty(), "({g},{h}): {:?}", m.validate());
                let b = m.betti().unwrap();
                assert_eq!(b.b2plus, b.b2minus);
            }
        }
    }
}
