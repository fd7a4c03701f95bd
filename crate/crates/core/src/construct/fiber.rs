//! Fiber sums along square-zero surfaces with Van Kampen assembly of pi1.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fpgroup::{Presentation, Word};
use crate::topmodel::{b1_of, IntersectionLattice, Manifold, ManifoldFlag, SurfaceClass};

/// Standard loop names of a genus-`g` surface: `a, b` for a torus, `a, b, c, d`
/// for genus two, `a1, b1, ..., ag, bg` beyond.
pub fn loop_names(g: u32) -> Vec<String> {
    match g {
        0 => Vec::new(),
        1 => vec!["a".into(), "b".into()],
        2 => ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect(),
        _ => (1..=g).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect(),
    }
}

/// Sends each loop of the first surface to a word in the loops of the second,
/// whose names carry a trailing `'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GluingMap {
    pub assignments: BTreeMap<String, Word>,
}

impl GluingMap {
    pub fn identity(g: u32) -> Self {
        GluingMap { assignments: loop_names(g).into_iter().map(|l| (l.clone(), Word::gen(format!("{l}'")))).collect() }
    }

    pub fn from_strs(pairs: &[(&str, &str)]) -> Result<Self> {
        let mut assignments = BTreeMap::new();
        for (k, v) in pairs {
            assignments.insert(k.to_string(), Word::parse(v)?);
        }
        Ok(GluingMap { assignments })
    }

    fn check(&self, g: u32) -> Result<()> {
        let names = loop_names(g);
        let src: BTreeSet<&str> = names.iter().map(|s| s.as_str()).collect();
        let keys: BTreeSet<&str> = self.assignments.keys().map(|s| s.as_str()).collect();
        if src != keys {
            return Err(Error::BadGluing(format!(
                "genus {g} needs assignments for {:?}, got {:?}",
                names,
                keys.iter().collect::<Vec<_>>()
            )));
        }
        let tgt: BTreeSet<String> = names.iter().map(|s| format!("{s}'")).collect();
        for w in self.assignments.values() {
            if let Some(x) = w.generators().into_iter().find(|x| !tgt.contains(*x)) {
                return Err(Error::BadGluing(format!("target word {w} uses `{x}`, not a loop of the second surface")));
            }
        }
        Ok(())
    }
}

/// An explicit presentation of a surface complement with its meridian.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Complement {
    pub presentation: Presentation,
    pub meridian: Word,
    /// Why this presentation is right.
    #[serde(default)]
    pub provenance: String,
}

/// Which sides have their meridian bounding a disk (for instance a punctured
/// exceptional sphere meeting the surface once), with the reason.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeridianKilled {
    pub left: Option<String>,
    pub right: Option<String>,
}

/// Lattice and surfaces of the sum, taken as input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Declared {
    pub lattice: IntersectionLattice,
    #[serde(default)]
    pub surfaces: Vec<SurfaceClass>,
}

#[derive(Debug, Clone)]
pub struct FiberSum {
    pub name: String,
    pub phi: GluingMap,
    pub meridian_killed: MeridianKilled,
    pub complements: [Option<Complement>; 2],
    pub declared: Declared,
}

fn side_word(images: &[Word], names: &[String], w: &Word) -> Word {
    let map: BTreeMap<String, Word> = names.iter().cloned().zip(images.iter().cloned()).collect();
    w.substitute(&map)
}

/// Symplectic fiber sum of `y` and `yp` along square-zero surfaces of equal
/// genus.
pub fn fiber_sum(y: &Manifold, sigma: &str, yp: &Manifold, sigmap: &str, spec: &FiberSum) -> Result<Manifold> {
    let s = y.surface(sigma)?;
    let sp = yp.surface(sigmap)?;
    if s.genus != sp.genus {
        return Err(Error::GenusMismatch(s.genus, sp.genus));
    }
    let g = s.genus;
    if g == 0 {
        return Err(Error::InvalidArgument("fiber sums need positive genus".into()));
    }
    for x in [s, sp] {
        if x.square != 0 {
            return Err(Error::NonzeroSquare(x.label.clone(), x.square));
        }
    }
    spec.phi.check(g)?;
    let names = loop_names(g);
    let primed: Vec<String> = names.iter().map(|n| format!("{n}'")).collect();
    let img = |x: &SurfaceClass| {
        x.pi1_images
            .clone()
            .filter(|v| v.len() == 2 * g as usize)
            .ok_or_else(|| Error::BadGluing(format!("surface `{}` needs {} loop images", x.label, 2 * g)))
    };
    let (im, imp) = (img(s)?, img(sp)?);

    let killed = [spec.meridian_killed.left.is_some(), spec.meridian_killed.right.is_some()];
    let sides = [y, yp];
    let mut pieces = Vec::new();
    let mut meridians = Vec::new();
    for i in 0..2 {
        match &spec.complements[i] {
            Some(c) => {
                c.presentation.check_word(&c.meridian)?;
                for w in if i == 0 { &im } else { &imp } {
                    c.presentation.check_word(w)?;
                }
                pieces.push(c.presentation.clone());
                meridians.push(Some(c.meridian.clone()));
            }
            None if killed[0] || killed[1] => {
                pieces.push(sides[i].pi1.clone());
                meridians.push(None);
            }
            None => return Err(Error::MeridianUnresolved),
        }
    }
    let mut pi1 = pieces[0].free_product(&pieces[1])?;
    for (src, tgt) in &spec.phi.assignments {
        let left = side_word(&im, &names, &Word::gen(src.clone()));
        let right = side_word(&imp, &primed, tgt);
        pi1.add_relator(left.mul(&right.inverse()))?;
    }
    if killed[0] || killed[1] {
        for m in meridians.iter().flatten() {
            pi1.add_relator(m.clone())?;
        }
    } else {
        let (m0, m1) = (meridians[0].clone().unwrap(), meridians[1].clone().unwrap());
        pi1.add_relator(m0.mul(&m1))?;
    }

    let mut flags = BTreeSet::new();
    if y.has(ManifoldFlag::Symplectic) && yp.has(ManifoldFlag::Symplectic) {
        flags.insert(ManifoldFlag::Symplectic);
    }
    let x = Manifold {
        name: spec.name.clone(),
        e: y.e + yp.e + 4 * g as i64 - 4,
        sigma: y.sigma + yp.sigma,
        b1: b1_of(&pi1),
        pi1,
        lattice: spec.declared.lattice.clone(),
        surfaces: spec.declared.surfaces.clone(),
        flags,
        sw: None,
    };
    let findings = x.validate();
    if !findings.is_empty() {
        let msg: Vec<String> = findings.iter().map(|f| f.to_string()).collect();
        return Err(Error::DeclaredLatticeInvalid(msg.join("; ")));
    }
    Ok(x)
}
