//! Seiberg–Witten bookkeeping over declared lattices. Values of building
//! blocks are inputs; nothing here computes moduli spaces.

mod enumerate;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::topmodel::{IntersectionLattice, SwFunction};

pub use crate::topmodel::conjugation_sign;
pub use enumerate::{enumerate_basic_classes, BasicClassProblem};

/// Condition under which an invariant with `b2+ = 1` does not depend on the
/// chamber. Wall-crossing is not modelled, so results carry it instead.
pub const CHAMBER_PROVISO: &str = "b2+(X)=1 and b2-(X) <= 9";

/// `None` when `b2+ != 1`; otherwise whether [`CHAMBER_PROVISO`] holds.
pub fn chamber_proviso(b2plus: u32, b2minus: u32) -> Option<bool> {
    (b2plus == 1).then_some(b2minus <= 9)
}

/// `sw_at_k + n * sum(orbit_values)`: the surgery formula once the orbit
/// sum is known to be finite.
pub fn mms_value(sw_at_k: i64, orbit_values: &[i64], n: i64) -> i64 {
    sw_at_k + n * orbit_values.iter().sum::<i64>()
}

/// The blow-up formula: every key `k` becomes `k + E` and `k - E`.
///
/// Keys of `f` must already live in `lattice`, which contains `e_class`.
pub fn blowup_sw(f: &SwFunction, e_class: &[i64], lattice: &IntersectionLattice) -> Result<SwFunction> {
    if e_class.len() != lattice.rank() || lattice.square(e_class) != -1 {
        return Err(Error::InvalidArgument("blow-up class must have square -1".into()));
    }
    let mut out = SwFunction::new();
    for (k, &v) in f.iter() {
        if k.len() != lattice.rank() || lattice.pair(k, e_class) != 0 {
            return Err(Error::InvalidArgument("blow-up class is not orthogonal to a basic class".into()));
        }
        for s in [1, -1] {
            let key: Vec<i64> = k.iter().zip(e_class).map(|(a, b)| a + s * b).collect();
            out.insert(key, v);
        }
    }
    Ok(out)
}

/// Hypotheses under which a fiber-sum value is the product of side values.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumHypotheses {
    pub both_simple_type: bool,
    pub genus_two_square_zero: bool,
    pub one_class_per_side: bool,
}

/// Value on the glued class for the restricted sum formula.
pub fn canonical_sum_sw(v_a: i64, v_b: i64, h: SumHypotheses) -> Result<i64> {
    if !(h.both_simple_type && h.genus_two_square_zero && h.one_class_per_side) {
        return Err(Error::InvalidArgument("sum formula hypotheses not asserted".into()));
    }
    Ok(v_a * v_b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GapStatus {
    Minimal,
    NotExcluded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapVerdict {
    pub status: GapStatus,
    /// Squares of all pairwise differences, sorted and deduplicated.
    pub difference_squares: Vec<i64>,
}

/// Looks for two basic classes differing by a class of square -4.
pub fn minimality_gap_check(classes: &[Vec<i64>], lattice: &IntersectionLattice) -> GapVerdict {
    let mut sq = Vec::new();
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            let d: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
            sq.push(lattice.square(&d));
        }
    }
    sq.sort();
    sq.dedup();
    let status = if sq.contains(&-4) { GapStatus::NotExcluded } else { GapStatus::Minimal };
    GapVerdict { status, difference_squares: sq }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyStatus {
    InfiniteFamily,
    PairwiseDistinct,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyVerdict {
    pub status: FamilyStatus,
    pub reason: String,
}

/// Reads off what the 0-surgery invariant says about the `1/n` family.
pub fn fps_family(sw_x0: &SwFunction) -> FamilyVerdict {
    if sw_x0.is_empty() {
        return FamilyVerdict {
            status: FamilyStatus::Inconclusive,
            reason: "the 0-surgery has vanishing invariant".into(),
        };
    }
    let n = sw_x0.classes_up_to_sign();
    if n == 1 {
        FamilyVerdict {
            status: FamilyStatus::PairwiseDistinct,
            reason: "nonzero invariant with one basic class up to sign".into(),
        }
    } else {
        FamilyVerdict {
            status: FamilyStatus::InfiniteFamily,
            reason: format!("nonzero invariant with {n} basic classes up to sign"),
        }
    }
}
