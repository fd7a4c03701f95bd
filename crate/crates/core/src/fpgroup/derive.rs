//! Triviality proofs and relation derivation with honest `Unknown` results.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::coset::{enumerate_table, Limits};
use super::nilpotent::Class2Quotient;
use super::presentation::Presentation;
use super::tietze::simplify;
use super::word::{free_reduce, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProofStatus {
    Proven,
    Refuted,
    Unknown,
}

impl fmt::Display for ProofStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ProofStatus::Proven => "Proven",
            ProofStatus::Refuted => "Refuted",
            ProofStatus::Unknown => "Unknown",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofVerdict {
    pub status: ProofStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl ProofVerdict {
    fn proven(w: impl Into<String>) -> Self {
        ProofVerdict { status: ProofStatus::Proven, witness: Some(w.into()) }
    }
    fn refuted(w: impl Into<String>) -> Self {
        ProofVerdict { status: ProofStatus::Refuted, witness: Some(w.into()) }
    }
    fn unknown() -> Self {
        ProofVerdict { status: ProofStatus::Unknown, witness: None }
    }
}

/// Search budgets for proofs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Effort {
    pub cosets: Limits,
    /// Node expansions allowed in the rewriting search.
    pub rewrite_steps: usize,
}

impl Default for Effort {
    fn default() -> Self {
        Effort { cosets: Limits::default(), rewrite_steps: 10_000 }
    }
}

impl Effort {
    pub fn with_max_cosets(n: usize) -> Self {
        Effort { cosets: Limits { max_cosets: n, ..Limits::default() }, ..Effort::default() }
    }
}

/// Decides whether the group is trivial, as far as the effort allows.
pub fn prove_trivial(p: &Presentation, effort: Effort) -> ProofVerdict {
    let ab = p.abelianization();
    if !ab.is_trivial() {
        return ProofVerdict::refuted(format!("abelianization {ab}"));
    }
    let q = simplify(p);
    if q.generators().is_empty() {
        return ProofVerdict::proven("Tietze reduction to the empty presentation");
    }
    match enumerate_table(&q, effort.cosets) {
        Some(t) if t.index() == 1 => ProofVerdict::proven(format!(
            "coset enumeration index 1 on {} generators after Tietze reduction",
            q.generators().len()
        )),
        Some(t) => ProofVerdict::refuted(format!("finite group of order {}", t.index())),
        None => ProofVerdict::unknown(),
    }
}

/// Tries to decide whether `w` is the identity in the group of `p`.
///
/// Refutation uses the abelianization and the class-2 nilpotent quotient;
/// proofs come from a best-first relator-insertion search or from a finite
/// coset table. `Unknown` is always possible.
pub fn derive_relation(p: &Presentation, w: &Word, effort: Effort) -> ProofVerdict {
    if p.check_word(w).is_err() {
        return ProofVerdict::unknown();
    }
    if w.is_identity() {
        return ProofVerdict::proven("free reduction");
    }
    let nq = Class2Quotient::new(p);
    if !nq.abelian_trivial(w) {
        return ProofVerdict::refuted("nonzero image in the abelianization");
    }
    if !nq.is_trivial(w) {
        return ProofVerdict::refuted("nontrivial image in the class-2 nilpotent quotient");
    }
    if let Some(steps) = rewrite_search(p, w, effort.rewrite_steps) {
        return ProofVerdict::proven(format!("relator insertion search, {steps} expansions"));
    }
    let small = Limits { max_cosets: effort.cosets.max_cosets.min(200_000), ..effort.cosets };
    if let Some(t) = enumerate_table(p, small) {
        return match t.is_identity(w) {
            Some(true) => ProofVerdict::proven(format!("identity in the finite group of order {}", t.index())),
            _ => ProofVerdict::refuted(format!("nonidentity in the finite group of order {}", t.index())),
        };
    }
    ProofVerdict::unknown()
}

/// Best-first search: repeatedly insert a cyclic conjugate of a relator or
/// its inverse at some position and freely reduce, preferring short words.
/// Returns the number of expansions used when the identity is reached.
fn rewrite_search(p: &Presentation, w: &Word, max_steps: usize) -> Option<usize> {
    let mut pieces: Vec<Vec<Letter>> = Vec::new();
    let mut seen_pieces = HashSet::new();
    for r in p.relators() {
        let c = r.cyclically_reduced();
        for base in [c.clone(), c.inverse()] {
            let units: Vec<Letter> = base.unit_letters().into_iter().map(|(g, s)| Letter::new(g, s as i64)).collect();
            for k in 0..units.len() {
                let rot: Vec<Letter> = units[k..].iter().chain(units[..k].iter()).cloned().collect();
                if seen_pieces.insert(rot.clone()) {
                    pieces.push(rot);
                }
            }
        }
    }
    let max_piece = pieces.iter().map(|p| p.len()).max().unwrap_or(0);
    let limit_len = w.len() + 2 * max_piece + 8;

    let start: Vec<Letter> = w.unit_letters().into_iter().map(|(g, s)| Letter::new(g, s as i64)).collect();
    let mut heap = BinaryHeap::new();
    let mut visited: HashSet<Vec<Letter>> = HashSet::new();
    let mut tie = 0u64;
    visited.insert(start.clone());
    heap.push((Reverse(start.len()), Reverse(tie), start));
    let mut steps = 0;
    while let Some((_, _, cur)) = heap.pop() {
        steps += 1;
        if steps > max_steps {
            return None;
        }
        for pos in 0..=cur.len() {
            for piece in &pieces {
                let next = free_reduce(cur[..pos].iter().chain(piece.iter()).chain(cur[pos..].iter()).cloned());
                if next.is_identity() {
                    return Some(steps);
                }
                let units: Vec<Letter> =
                    next.unit_letters().into_iter().map(|(g, s)| Letter::new(g, s as i64)).collect();
                if units.len() > limit_len || visited.contains(&units) {
                    continue;
                }
                visited.insert(units.clone());
                tie += 1;
                heap.push((Reverse(units.len()), Reverse(tie), units));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn trivial_and_free() {
        let p = Presentation::from_strs(&["x"], &["x"]).unwrap();
        assert_eq!(prove_trivial(&p, Effort::default()).status, ProofStatus::Proven);
        let p = Presentation::free(&["x"]).unwrap();
        let v = prove_trivial(&p, Effort::default());
        assert_eq!(v.status, ProofStatus::Refuted);
        assert!(v.witness.is_some());
    }

    #[test]
    fn abelian_refutation() {
        let p = Presentation::from_strs(&["x", "y"], &["[x,y]"]).unwrap();
        assert_eq!(derive_relation(&p, &w("x"), Effort::default()).status, ProofStatus::Refuted);
        assert_eq!(derive_relation(&p, &w("x*y*x^-1*y^-1"), Effort::default()).status, ProofStatus::Proven);
    }

    #[test]
    fn nilpotent_refutation() {
        let p = Presentation::free(&["x", "y"]).unwrap();
        let v = derive_relation(&p, &w("[x,y]"), Effort::default());
        assert_eq!(v.status, ProofStatus::Refuted);
    }
}
