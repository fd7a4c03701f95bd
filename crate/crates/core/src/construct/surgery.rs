//! Torus surgeries and the twist-knot templates on the 4-torus.

use serde::{Deserialize, Serialize};

use super::fiber::Declared;
use crate::error::{Error, Result};
use crate::fpgroup::{Presentation, Word};
use crate::topmodel::{b1_of, product_block, IntersectionLattice, Manifold, ManifoldFlag, SurfaceClass, SurfaceFlag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Framing {
    Lagrangian,
    ZeroFraming,
}

/// A `(torus, lambda, p/q)` surgery. The relator added is `meridian^p * lambda^q`,
/// so a `1/m` Luttinger surgery is `(1, m)` and a `-n` surgery is `(-n, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurgerySpec {
    pub torus_label: String,
    pub lambda_pushoff: Word,
    pub meridian: Word,
    pub p: i64,
    pub q: i64,
    pub framing: Framing,
    pub complement_presentation: Presentation,
    /// Label for the nullhomologous core torus left behind.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub core_label: Option<String>,
    /// Lattice classes that do not survive the surgery.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub drop_classes: Vec<String>,
}

impl SurgerySpec {
    /// A spec whose complement is `m.pi1` with the given relators removed.
    pub fn dropping(
        m: &Manifold,
        torus: &str,
        lambda: &str,
        meridian: &str,
        (p, q): (i64, i64),
        drop: &[&str],
    ) -> Result<Self> {
        let drop = drop.iter().map(|s| Word::parse(s)).collect::<Result<Vec<_>>>()?;
        Ok(SurgerySpec {
            torus_label: torus.to_string(),
            lambda_pushoff: Word::parse(lambda)?,
            meridian: Word::parse(meridian)?,
            p,
            q,
            framing: Framing::Lagrangian,
            complement_presentation: m.pi1.without_relators(&drop)?,
            core_label: None,
            drop_classes: Vec::new(),
        })
    }

    pub fn relator(&self) -> Word {
        self.meridian.pow(self.p).mul(&self.lambda_pushoff.pow(self.q))
    }

    pub fn is_luttinger(&self) -> bool {
        self.framing == Framing::Lagrangian && self.p.abs() == 1
    }
}

/// Performs the surgery; `(e, sigma)` are unchanged.
pub fn torus_surgery(m: &Manifold, spec: &SurgerySpec) -> Result<Manifold> {
    if spec.p == 0 && spec.q == 0 {
        return Err(Error::DegenerateSurgery);
    }
    let c = &spec.complement_presentation;
    c.check_word(&spec.lambda_pushoff)?;
    c.check_word(&spec.meridian)?;
    let torus = m.surface(&spec.torus_label)?;
    if torus.genus != 1 || torus.square != 0 {
        return Err(Error::InvalidSurgery(format!(
            "`{}` is not a square-zero torus (genus {}, square {})",
            torus.label, torus.genus, torus.square
        )));
    }
    if spec.is_luttinger() && !torus.has(SurfaceFlag::Lagrangian) {
        return Err(Error::InvalidSurgery(format!("Luttinger surgery on `{}`, which is not lagrangian", torus.label)));
    }
    let mut out = m.clone();
    out.pi1 = c.clone().with_relator(spec.relator())?;
    out.b1 = b1_of(&out.pi1);
    if !spec.is_luttinger() {
        out.set(ManifoldFlag::Symplectic, false);
        out.set(ManifoldFlag::Minimal, false);
    }
    out.set(ManifoldFlag::SimplyConnected, false);
    out.set(ManifoldFlag::ResiduallyFinitePi1, false);
    out.set(ManifoldFlag::SphereBundleOverSurface, false);
    out.sw = None;
    out.surfaces.retain(|s| s.label != spec.torus_label);
    if !spec.drop_classes.is_empty() {
        out = drop_classes(&out, &spec.drop_classes)?;
    }
    if let Some(core) = &spec.core_label {
        let rank = out.lattice.rank();
        out.surfaces.push(
            SurfaceClass {
                label: core.clone(),
                genus: 1,
                coords: vec![0; rank],
                square: 0,
                flags: Default::default(),
                pi1_images: None,
            }
            .with_flag(SurfaceFlag::CoreTorus)
            .with_flag(SurfaceFlag::Nullhomologous),
        );
    }
    if out.lattice.complete {
        if let Ok(b) = out.betti() {
            if b.b2 as usize != out.lattice.rank() {
                out.lattice.complete = false;
            }
        }
    }
    Ok(out)
}

/// Removes basis classes; surfaces still supported on them are discarded.
fn drop_classes(m: &Manifold, labels: &[String]) -> Result<Manifold> {
    let idx = labels
        .iter()
        .map(|l| m.lattice.index_of(l).ok_or_else(|| Error::UnknownClass(l.clone())))
        .collect::<Result<Vec<_>>>()?;
    let keep: Vec<usize> = (0..m.lattice.rank()).filter(|i| !idx.contains(i)).collect();
    let basis = keep.iter().map(|&i| m.lattice.basis[i].clone()).collect();
    let gram = keep.iter().map(|&i| keep.iter().map(|&j| m.lattice.gram[i][j]).collect()).collect();
    let mut out = m.clone();
    out.lattice = IntersectionLattice::new(basis, gram)?;
    out.lattice.complete = m.lattice.complete;
    out.surfaces = m
        .surfaces
        .iter()
        .filter(|s| idx.iter().all(|&i| s.coords.get(i).copied().unwrap_or(0) == 0))
        .map(|s| {
            let mut s = s.clone();
            s.coords = keep.iter().map(|&i| s.coords[i]).collect();
            s
        })
        .collect();
    Ok(out)
}

/// `S^1 x M_K` for the `n`-twist knot, from two surgeries on the 4-torus:
/// `(c x a~, a~, -1)` and `(c x b~, b~, -n)`.
pub fn t4_twist_template(n: i64) -> Result<Manifold> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("twist template needs n >= 1, got {n}")));
    }
    let t4 = product_block(1, 1)?;
    let first = SurgerySpec::dropping(&t4, "a*c", "d*a*d^-1", "[d,b^-1]", (1, -1), &["[b,d]"])?;
    let m = torus_surgery(&t4, &first)?;
    let mut second = SurgerySpec::dropping(&m, "b*c", "b", "[a^-1,d]", (-n, 1), &["[a,d]"])?;
    second.core_label = Some("Lambda".into());
    let mut m = torus_surgery(&m, &second)?;

    let lattice = IntersectionLattice::from_pairings(&["F", "S"], &[0, 0], &[("F", "S", 1)])?;
    let mut f = SurfaceClass::basis_class("F", 1, &lattice)?.with_images(vec![Word::gen("a"), Word::gen("b")]);
    let mut s = SurfaceClass::basis_class("S", 1, &lattice)?.with_images(vec![Word::gen("c"), Word::gen("d")]);
    if n == 1 {
        f = f.with_flag(SurfaceFlag::Symplectic);
        s = s.with_flag(SurfaceFlag::Symplectic);
    }
    let core = m.surfaces.iter().find(|x| x.label == "Lambda").cloned();
    m.lattice = lattice;
    m.surfaces = vec![f, s];
    if let Some(mut core) = core {
        core.coords = vec![0, 0];
        m.surfaces.push(core);
    }
    m.name = format!("S1 x M_K{n}");
    Ok(m)
}

/// Replaces lattice and surfaces by declared data.
pub fn redeclare(m: &Manifold, d: &Declared) -> Result<Manifold> {
    let mut out = m.clone();
    out.lattice = d.lattice.clone();
    out.surfaces = d.surfaces.clone();
    Ok(out)
}
