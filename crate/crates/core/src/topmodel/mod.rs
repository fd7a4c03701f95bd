//! The algebraic-topology data model.

mod lattice;
mod manifold;
mod product;
mod surface;
mod sw;

pub use lattice::{Inertia, IntersectionLattice};
pub use manifold::{b1_of, betti_numbers, parse_manifold_json, Betti, Finding, Manifold, ManifoldFlag};
pub use product::product_block;
pub use surface::{SurfaceClass, SurfaceFlag};
pub use sw::{conjugation_sign, SwFunction};
