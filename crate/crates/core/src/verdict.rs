//! Rule-based verdicts on declared hypotheses: homeomorphism type,
//! minimality of sums, irreducibility and the reverse-engineering conditions.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fpgroup::{prove_trivial, Effort, ProofStatus, Word};
use crate::topmodel::{b1_of, betti_numbers, Manifold, ManifoldFlag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Odd,
    Even,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomeoType {
    pub b2plus: u32,
    pub b2minus: u32,
    pub parity: Parity,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub descriptor: Option<String>,
}

impl HomeoType {
    /// The odd indefinite type with the given Betti numbers.
    pub fn odd(b2plus: u32, b2minus: u32) -> Self {
        HomeoType { b2plus, b2minus, parity: Parity::Odd, descriptor: Some(format!("{b2plus} CP2 # {b2minus} CP2bar")) }
    }

    /// Characteristic numbers of the simply connected manifold of this type.
    pub fn e_sigma(&self) -> (i64, i64) {
        let (p, m) = (self.b2plus as i64, self.b2minus as i64);
        (2 + p + m, p - m)
    }
}

impl fmt::Display for HomeoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.descriptor {
            Some(d) => f.write_str(d),
            None => write!(f, "{:?} form with b2+ = {}, b2- = {}", self.parity, self.b2plus, self.b2minus),
        }
    }
}

/// Freedman's classification for simply connected manifolds with odd
/// indefinite forms. Triviality of the group must be certified here.
pub fn freedman_type(m: &Manifold, effort: Effort) -> Result<HomeoType> {
    let proof = prove_trivial(&m.pi1, effort);
    if proof.status != ProofStatus::Proven {
        return Err(Error::NotSimplyConnected(format!("{}: prove_trivial returned {}", m.name, proof.status)));
    }
    let b = betti_numbers(m.e, m.sigma, 0)?;
    if !m.lattice.is_odd() {
        return Err(Error::UnsupportedForm(format!("{}: no declared class of odd square", m.name)));
    }
    if b.b2plus == 0 || b.b2minus == 0 {
        return Err(Error::UnsupportedForm(format!("{}: definite form", m.name)));
    }
    Ok(HomeoType::odd(b.b2plus, b.b2minus))
}

/// A declared boolean together with where it comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Hypothesis {
    pub holds: bool,
    #[serde(default)]
    pub provenance: String,
}

pub const SPHERE_IN_COMPLEMENT: &str = "contains_square_minus1_sphere_in_complement";
pub const SPHERE_BUNDLE_SECTION: &str = "summand_is_sphere_bundle_with_section";
pub const OTHER_SUMMAND_MINIMAL: &str = "other_summand_minimal";
pub const PI1_RESIDUALLY_FINITE: &str = "pi1_residually_finite";

const KNOWN: [&str; 4] = [SPHERE_IN_COMPLEMENT, SPHERE_BUNDLE_SECTION, OTHER_SUMMAND_MINIMAL, PI1_RESIDUALLY_FINITE];

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Hypotheses(pub BTreeMap<String, Hypothesis>);

impl Hypotheses {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, holds: bool, provenance: &str) -> Self {
        self.0.insert(name.to_string(), Hypothesis { holds, provenance: provenance.to_string() });
        self
    }

    pub fn holds(&self, name: &str) -> bool {
        self.0.get(name).is_some_and(|h| h.holds)
    }

    pub fn declared(&self, name: &str) -> Option<bool> {
        self.0.get(name).map(|h| h.holds)
    }

    pub fn check(&self) -> Result<()> {
        for (k, h) in &self.0 {
            if !KNOWN.contains(&k.as_str()) {
                return Err(Error::ContradictoryHypotheses(format!("unknown hypothesis {k}")));
            }
            if h.holds && h.provenance.trim().is_empty() {
                return Err(Error::ContradictoryHypotheses(format!("{k} is asserted without provenance")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Minimality {
    Minimal,
    NotMinimal,
    Undetermined,
}

/// Usher's trichotomy for symplectic sums along positive-genus surfaces.
pub fn usher_minimality(m: &Manifold, h: &Hypotheses) -> Result<Minimality> {
    h.check()?;
    let sphere = h.holds(SPHERE_IN_COMPLEMENT);
    let bundle = h.holds(SPHERE_BUNDLE_SECTION);
    let other = h.declared(OTHER_SUMMAND_MINIMAL);
    if sphere && bundle && other == Some(true) {
        return Err(Error::ContradictoryHypotheses(
            "a -1 sphere in a complement with a minimal other summand over a sphere-bundle section".into(),
        ));
    }
    if !m.has(ManifoldFlag::Symplectic) {
        return Ok(Minimality::Undetermined);
    }
    Ok(if sphere {
        Minimality::NotMinimal
    } else if bundle {
        match other {
            Some(true) => Minimality::Minimal,
            Some(false) => Minimality::NotMinimal,
            None => Minimality::Undetermined,
        }
    } else {
        Minimality::Minimal
    })
}

/// Whether every pair of generators commutes by a listed relator.
fn visibly_abelian(m: &Manifold) -> bool {
    let classes = m.pi1.relator_classes();
    let g = m.pi1.generators();
    g.iter().enumerate().all(|(i, a)| {
        g[i + 1..].iter().all(|b| {
            classes.contains(&Word::commutator(&Word::gen(a.clone()), &Word::gen(b.clone())).relator_canonical())
        })
    })
}

/// Residual finiteness as used for irreducibility: declared, simply
/// connected, or visibly abelian.
pub fn residually_finite(m: &Manifold) -> bool {
    m.has(ManifoldFlag::ResiduallyFinitePi1) || m.has(ManifoldFlag::SimplyConnected) || visibly_abelian(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Irreducibility {
    Irreducible,
    Undetermined,
}

/// Hamilton–Kotschick: minimal symplectic with residually finite group.
pub fn hk_irreducible(m: &Manifold) -> Irreducibility {
    if m.has(ManifoldFlag::Minimal) && m.has(ManifoldFlag::Symplectic) && residually_finite(m) {
        Irreducibility::Irreducible
    } else {
        Irreducibility::Undetermined
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Conditions (I) and (II): matching characteristic numbers, and at least
/// `2 b1` lagrangian tori to kill the first homology.
pub fn reverse_engineering_check(xp: &Manifold, target: (i64, i64), r: u32) -> Vec<Condition> {
    let (e, sigma) = target;
    let cond1 = Condition {
        name: "I".into(),
        pass: xp.e == e && xp.sigma == sigma,
        detail: format!("(e, sigma) = ({}, {}) against target ({e}, {sigma})", xp.e, xp.sigma),
    };
    let b1 = b1_of(&xp.pi1) as i64;
    let s = 2 * b1;
    let b2x = xp.e - 2 + 2 * b1;
    let b2z = e - 2;
    let pass = r as i64 >= s && s == b2x - b2z;
    let cond2 =
        Condition { name: "II".into(), pass, detail: format!("r = {r}, 2 b1 = {s}, b2(X') - b2(Z) = {}", b2x - b2z) };
    vec![cond1, cond2]
}
