//! Manifold snapshots and their consistency checks.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::lattice::IntersectionLattice;
use super::surface::SurfaceClass;
use super::sw::{conjugation_sign, SwFunction};
use crate::error::{Error, Result};
use crate::fpgroup::{prove_trivial, Effort, Presentation, ProofStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ManifoldFlag {
    Symplectic,
    Minimal,
    SimplyConnected,
    ResiduallyFinitePi1,
    SphereBundleOverSurface,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifold {
    pub name: String,
    pub e: i64,
    pub sigma: i64,
    pub b1: u32,
    pub pi1: Presentation,
    pub lattice: IntersectionLattice,
    #[serde(default)]
    pub surfaces: Vec<SurfaceClass>,
    #[serde(default)]
    pub flags: BTreeSet<ManifoldFlag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sw: Option<SwFunction>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Betti {
    pub b1: u32,
    pub b2: u32,
    pub b2plus: u32,
    pub b2minus: u32,
}

/// Betti numbers forced by `e`, `sigma` and `b1` on a closed oriented 4-manifold.
pub fn betti_numbers(e: i64, sigma: i64, b1: u32) -> Result<Betti> {
    let b2 = e - 2 + 2 * b1 as i64;
    if b2 < 0 {
        return Err(Error::InconsistentManifold(format!("b2 = e - 2 + 2 b1 = {b2} is negative")));
    }
    if (b2 + sigma).rem_euclid(2) != 0 {
        return Err(Error::InconsistentManifold(format!("b2 = {b2} and sigma = {sigma} have different parity")));
    }
    let plus = (b2 + sigma) / 2;
    let minus = (b2 - sigma) / 2;
    if plus < 0 || minus < 0 {
        return Err(Error::InconsistentManifold(format!("|sigma| = {} exceeds b2 = {b2}", sigma.abs())));
    }
    Ok(Betti { b1, b2: b2 as u32, b2plus: plus as u32, b2minus: minus as u32 })
}

/// Free rank of the abelianization.
pub fn b1_of(p: &Presentation) -> u32 {
    p.abelianization().free_rank as u32
}

/// A single consistency problem found by [`Manifold::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub check: &'static str,
    pub detail: String,
}

impl Finding {
    fn new(check: &'static str, detail: impl Into<String>) -> Self {
        Finding { check, detail: detail.into() }
    }
}

impl std::fmt::Display for Finding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

impl Manifold {
    pub fn betti(&self) -> Result<Betti> {
        betti_numbers(self.e, self.sigma, self.b1)
    }

    pub fn has(&self, f: ManifoldFlag) -> bool {
        self.flags.contains(&f)
    }

    pub fn set(&mut self, f: ManifoldFlag, on: bool) {
        if on {
            self.flags.insert(f);
        } else {
            self.flags.remove(&f);
        }
    }

    pub fn surface(&self, label: &str) -> Result<&SurfaceClass> {
        self.surfaces.iter().find(|s| s.label == label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn surface_mut(&mut self, label: &str) -> Result<&mut SurfaceClass> {
        self.surfaces.iter_mut().find(|s| s.label == label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Checks every structural invariant; an empty list means consistent.
    pub fn validate(&self) -> Vec<Finding> {
        let mut out = Vec::new();
        let betti = match self.betti() {
            Ok(b) => Some(b),
            Err(e) => {
                out.push(Finding::new("betti", e.to_string()));
                None
            }
        };
        if let Err(e) = self.lattice.check() {
            out.push(Finding::new("lattice", e.to_string()));
            return out;
        }
        if let Some(b) = betti {
            let inertia = self.lattice.inertia();
            if self.lattice.complete {
                if self.lattice.rank() != b.b2 as usize {
                    out.push(Finding::new("rank", format!("lattice rank {} but b2 = {}", self.lattice.rank(), b.b2)));
                }
                if inertia.signature() != self.sigma || inertia.null != 0 {
                    out.push(Finding::new(
                        "signature",
                        format!(
                            "gram inertia ({}, {}, {}) does not match sigma = {}",
                            inertia.positive, inertia.negative, inertia.null, self.sigma
                        ),
                    ));
                }
            } else if inertia.positive > b.b2plus as usize || inertia.negative > b.b2minus as usize {
                out.push(Finding::new(
                    "signature",
                    format!(
                        "partial lattice inertia ({}, {}) exceeds (b2+, b2-) = ({}, {})",
                        inertia.positive, inertia.negative, b.b2plus, b.b2minus
                    ),
                ));
            }
        }
        let ab = self.pi1.abelianization();
        if ab.free_rank as u32 != self.b1 {
            out.push(Finding::new("b1", format!("b1 = {} but pi1 abelianizes to {ab}", self.b1)));
        }
        let mut labels = BTreeSet::new();
        for s in &self.surfaces {
            if !labels.insert(s.label.as_str()) {
                out.push(Finding::new("surface", format!("duplicate surface label `{}`", s.label)));
            }
            for f in s.findings(&self.lattice) {
                out.push(Finding::new("surface", f));
            }
            for w in s.pi1_images.iter().flatten() {
                if let Err(e) = self.pi1.check_word(w) {
                    out.push(Finding::new("surface", format!("loop image of `{}`: {e}", s.label)));
                }
            }
        }
        if self.has(ManifoldFlag::SimplyConnected) {
            if self.b1 != 0 {
                out.push(Finding::new("pi1", "simply connected but b1 > 0"));
            }
            let v = prove_trivial(&self.pi1, Effort::with_max_cosets(100_000));
            if v.status == ProofStatus::Refuted {
                out.push(Finding::new(
                    "pi1",
                    format!("simply connected flag contradicted: {}", v.witness.unwrap_or_default()),
                ));
            }
        }
        if let Some(sw) = &self.sw {
            for k in sw.non_characteristic(&self.lattice) {
                out.push(Finding::new("sw", format!("basic class {k:?} is not characteristic")));
            }
            if let Ok(sign) = conjugation_sign(self.e, self.sigma) {
                for k in sw.conjugation_failures(sign) {
                    out.push(Finding::new("sw", format!("value at {k:?} breaks conjugation sign {sign}")));
                }
            }
        }
        out
    }

    /// Fails with the first finding, if any.
    pub fn ensure_valid(&self) -> Result<()> {
        match self.validate().into_iter().next() {
            None => Ok(()),
            Some(f) => Err(Error::InconsistentManifold(format!("{}: {f}", self.name))),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifold serializes")
    }
}

/// Parses a manifold snapshot from JSON. Structural validity is not checked.
pub fn parse_manifold_json(text: &str) -> Result<Manifold> {
    let m: Manifold = serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
    m.lattice.check()?;
    Ok(m)
}
