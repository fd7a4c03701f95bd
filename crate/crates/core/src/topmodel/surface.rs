//! Embedded surface records.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::lattice::IntersectionLattice;
use crate::fpgroup::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceFlag {
    Symplectic,
    Lagrangian,
    ExceptionalSphere,
    CoreTorus,
    Nullhomologous,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceClass {
    pub label: String,
    pub genus: u32,
    /// Coordinates in the lattice basis.
    pub coords: Vec<i64>,
    pub square: i64,
    #[serde(default)]
    pub flags: BTreeSet<SurfaceFlag>,
    /// Images of the standard loops `a1, b1, ..., ag, bg`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi1_images: Option<Vec<Word>>,
}

impl SurfaceClass {
    /// A surface whose square is read off the lattice.
    pub fn in_lattice(label: &str, genus: u32, coords: Vec<i64>, lattice: &IntersectionLattice) -> Self {
        let square = lattice.square(&coords);
        SurfaceClass { label: label.to_string(), genus, coords, square, flags: BTreeSet::new(), pi1_images: None }
    }

    /// The surface dual to a single basis class.
    pub fn basis_class(label: &str, genus: u32, lattice: &IntersectionLattice) -> crate::Result<Self> {
        let coords = lattice.unit(label)?;
        Ok(SurfaceClass::in_lattice(label, genus, coords, lattice))
    }

    pub fn with_flag(mut self, f: SurfaceFlag) -> Self {
        self.flags.insert(f);
        self
    }

    pub fn with_images(mut self, images: Vec<Word>) -> Self {
        self.pi1_images = Some(images);
        self
    }

    pub fn has(&self, f: SurfaceFlag) -> bool {
        self.flags.contains(&f)
    }

    /// Problems with this record relative to a lattice; empty when consistent.
    pub fn findings(&self, lattice: &IntersectionLattice) -> Vec<String> {
        let mut out = Vec::new();
        let l = &self.label;
        if self.coords.len() != lattice.rank() {
            out.push(format!(
                "surface `{l}` has {} coordinates for a rank-{} lattice",
                self.coords.len(),
                lattice.rank()
            ));
            return out;
        }
        let sq = lattice.square(&self.coords);
        if sq != self.square {
            out.push(format!("surface `{l}` declares square {} but its class has square {sq}", self.square));
        }
        if self.has(SurfaceFlag::ExceptionalSphere) && (self.genus != 0 || self.square != -1) {
            out.push(format!("exceptional sphere `{l}` must have genus 0 and square -1"));
        }
        if self.has(SurfaceFlag::Nullhomologous) && self.coords.iter().any(|&c| c != 0) {
            out.push(format!("nullhomologous surface `{l}` has nonzero class"));
        }
        if self.has(SurfaceFlag::Symplectic) && self.has(SurfaceFlag::Lagrangian) {
            out.push(format!("surface `{l}` flagged both symplectic and lagrangian"));
        }
        if let Some(im) = &self.pi1_images {
            if im.len() != 2 * self.genus as usize {
                out.push(format!("surface `{l}` of genus {} lists {} loop images", self.genus, im.len()));
            }
        }
        out
    }
}
