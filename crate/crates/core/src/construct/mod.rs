//! The construction calculus: blow-ups, resolutions, fiber sums, torus
//! surgeries, internal sums and the twist-knot templates.

mod fiber;
mod surgery;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fpgroup::Word;
use crate::swengine::blowup_sw;
use crate::topmodel::{Manifold, ManifoldFlag, SurfaceClass, SurfaceFlag};

pub use fiber::{fiber_sum, loop_names, Complement, Declared, FiberSum, GluingMap, MeridianKilled};
pub use surgery::{redeclare, t4_twist_template, torus_surgery, Framing, SurgerySpec};

/// Blows up once, adding an exceptional class orthogonal to the old basis.
/// Each surface in `meets` passes through the blown-up point and is replaced
/// by its proper transform.
pub fn blow_up(m: &Manifold, meets: &[&str]) -> Result<Manifold> {
    for l in meets {
        m.surface(l)?;
    }
    let mut k = 1;
    let label = loop {
        let l = format!("E{k}");
        if m.lattice.index_of(&l).is_none() && m.surface(&l).is_err() {
            break l;
        }
        k += 1;
    };
    blow_up_as(m, meets, &label)
}

/// [`blow_up`] with an explicit label for the exceptional class.
pub fn blow_up_as(m: &Manifold, meets: &[&str], label: &str) -> Result<Manifold> {
    let mut out = m.clone();
    out.lattice = m.lattice.extend_orthogonal(label, -1)?;
    let n = m.lattice.rank();
    for s in &mut out.surfaces {
        s.coords.push(0);
    }
    for l in meets {
        let s = out.surface_mut(l)?;
        s.coords[n] -= 1;
        s.square -= 1;
    }
    let mut e = SurfaceClass::basis_class(label, 0, &out.lattice)?
        .with_flag(SurfaceFlag::ExceptionalSphere)
        .with_images(Vec::new());
    if m.has(ManifoldFlag::Symplectic) {
        e = e.with_flag(SurfaceFlag::Symplectic);
    }
    out.surfaces.push(e);
    out.e += 1;
    out.sigma -= 1;
    out.set(ManifoldFlag::Minimal, false);
    out.set(ManifoldFlag::SphereBundleOverSurface, false);
    if let Some(sw) = &m.sw {
        let mut unit = vec![0; n + 1];
        unit[n] = 1;
        out.sw = Some(blowup_sw(&sw.pad(1), &unit, &out.lattice)?);
    }
    out.name = format!("{} # CP2bar", m.name);
    Ok(out)
}

/// Components to be smoothed at their double points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolutionPlan {
    /// Surface labels; a label may repeat for parallel copies.
    pub components: Vec<String>,
    pub double_points: u32,
}

/// Smooths a transverse union of symplectic surfaces into one surface.
///
/// Loop images are the concatenation of the components' images unless
/// `images` declares them.
pub fn resolve_union(
    m: &Manifold,
    plan: &ResolutionPlan,
    label: &str,
    images: Option<Vec<Word>>,
) -> Result<SurfaceClass> {
    let c = plan.components.len();
    if c == 0 {
        return Err(Error::InvalidArgument("resolution with no components".into()));
    }
    if (plan.double_points as usize) + 1 < c {
        return Err(Error::DisconnectedPlan { components: c, double_points: plan.double_points });
    }
    let comps = plan.components.iter().map(|l| m.surface(l)).collect::<Result<Vec<_>>>()?;
    if let Some(s) = comps.iter().find(|s| !s.has(SurfaceFlag::Symplectic)) {
        return Err(Error::ResolutionMismatch(format!("component `{}` is not symplectic", s.label)));
    }
    let mut meets = 0i64;
    for i in 0..c {
        for j in i + 1..c {
            meets += m.lattice.pair(&comps[i].coords, &comps[j].coords);
        }
    }
    if meets != plan.double_points as i64 {
        return Err(Error::ResolutionMismatch(format!(
            "components meet in {meets} points but the plan smooths {}",
            plan.double_points
        )));
    }
    if c == 1 {
        let mut s = comps[0].clone();
        s.label = label.to_string();
        if let Some(im) = images {
            s.pi1_images = Some(im);
        }
        return Ok(s);
    }
    let genus = comps.iter().map(|s| s.genus).sum::<u32>() + plan.double_points + 1 - c as u32;
    let mut coords = vec![0; m.lattice.rank()];
    for s in &comps {
        for (x, y) in coords.iter_mut().zip(&s.coords) {
            *x += y;
        }
    }
    let images = match images {
        Some(im) => im,
        None => {
            let mut v = Vec::new();
            for s in &comps {
                v.extend(s.pi1_images.clone().unwrap_or_default());
            }
            v
        }
    };
    let s = SurfaceClass::in_lattice(label, genus, coords, &m.lattice)
        .with_flag(SurfaceFlag::Symplectic)
        .with_images(images);
    if let Some(f) = s.findings(&m.lattice).into_iter().next() {
        return Err(Error::ResolutionMismatch(f));
    }
    Ok(s)
}

/// Adds (or replaces) a surface record.
pub fn with_surface(m: &Manifold, s: SurfaceClass) -> Result<Manifold> {
    if let Some(f) = s.findings(&m.lattice).into_iter().next() {
        return Err(Error::InconsistentManifold(f));
    }
    for w in s.pi1_images.iter().flatten() {
        m.pi1.check_word(w)?;
    }
    let mut out = m.clone();
    out.surfaces.retain(|x| x.label != s.label);
    out.surfaces.push(s);
    Ok(out)
}

/// Renames generators (and optionally labels) by appending `suffix`, used to
/// keep the two sides of a sum apart.
pub fn primed(m: &Manifold, suffix: &str, labels: bool) -> Result<Manifold> {
    let map: BTreeMap<String, String> =
        m.pi1.generators().iter().map(|g| (g.clone(), format!("{g}{suffix}"))).collect();
    let mut out = m.clone();
    out.pi1 = m.pi1.rename(&map)?;
    for s in &mut out.surfaces {
        if let Some(im) = &mut s.pi1_images {
            for w in im.iter_mut() {
                *w = w.rename(&map);
            }
        }
        if labels {
            s.label = format!("{}{suffix}", s.label);
        }
    }
    if labels {
        for b in &mut out.lattice.basis {
            b.push_str(suffix);
        }
    }
    out.name = format!("{}{suffix}", m.name);
    Ok(out)
}

/// Data identifying the two halves of an internal connected sum.
pub struct InternalSides<'a> {
    pub y: &'a Manifold,
    pub a: &'a str,
    pub sigma_y: &'a str,
    pub yp: &'a Manifold,
    pub bp: &'a str,
    pub sigma_yp: &'a str,
}

/// The internal sum `A # B'` inside the fiber sum `x`, recorded as the
/// declared class `class` of `x`'s lattice.
///
/// Genus and square are computed from the two halves; the declared class must
/// have that square and meet the sum surface `sigma` once.
pub fn internal_sum(x: &Manifold, sides: &InternalSides<'_>, sigma: &str, class: &str) -> Result<SurfaceClass> {
    let a = sides.y.surface(sides.a)?;
    let b = sides.yp.surface(sides.bp)?;
    let sa = sides.y.surface(sides.sigma_y)?;
    let sb = sides.yp.surface(sides.sigma_yp)?;
    let ia = sides.y.lattice.pair(&a.coords, &sa.coords);
    let ib = sides.yp.lattice.pair(&b.coords, &sb.coords);
    if ia != 1 || ib != 1 {
        return Err(Error::InternalSum(format!(
            "`{}` meets `{}` {ia} times and `{}` meets `{}` {ib} times; both must be 1",
            a.label, sa.label, b.label, sb.label
        )));
    }
    let genus = a.genus + b.genus;
    let square = a.square + b.square;
    let coords = x.lattice.unit(class)?;
    let got = x.lattice.square(&coords);
    if got != square {
        return Err(Error::InternalSum(format!("class `{class}` has square {got}, the sum has square {square}")));
    }
    let s = x.surface(sigma)?;
    let meet = x.lattice.pair(&coords, &s.coords);
    if meet != 1 {
        return Err(Error::InternalSum(format!("class `{class}` meets `{sigma}` {meet} times")));
    }
    let mut out =
        SurfaceClass { label: class.to_string(), genus, coords, square, flags: Default::default(), pi1_images: None };
    if a.has(SurfaceFlag::Symplectic) && b.has(SurfaceFlag::Symplectic) {
        out = out.with_flag(SurfaceFlag::Symplectic);
    }
    Ok(out)
}
