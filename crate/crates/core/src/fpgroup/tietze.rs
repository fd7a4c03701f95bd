//! Tietze moves: explicit generator elimination and a greedy simplifier.

use std::collections::{BTreeMap, BTreeSet};

use super::presentation::Presentation;
use super::word::{free_reduce, Word};
use crate::error::{Error, Result};

/// Removes each identified generator `g` by substituting its word `w`.
///
/// Each identification must be a relator of `p` (up to rotation and
/// inversion), which makes the move a genuine Tietze transformation. Chains
/// such as `a = b, b = x` are resolved; cycles are rejected.
pub fn eliminate_generators(p: &Presentation, identifications: &[(String, Word)]) -> Result<Presentation> {
    if identifications.is_empty() {
        return Ok(p.clone());
    }
    let classes = p.relator_classes();
    let mut defs: BTreeMap<String, Word> = BTreeMap::new();
    for (g, w) in identifications {
        if !p.has_generator(g) {
            return Err(Error::UndeclaredGenerator(g.clone()));
        }
        p.check_word(w)?;
        let rel = Word::gen(g.clone()).mul(&w.inverse());
        if !rel.is_identity() && !classes.contains(&rel.relator_canonical()) {
            return Err(Error::NotARelator { gen: g.clone(), word: w.to_string() });
        }
        if defs.insert(g.clone(), w.clone()).is_some() {
            return Err(Error::DuplicateGenerator(g.clone()));
        }
    }
    let resolved = resolve_chains(&defs)?;
    let gens: Vec<String> = p.generators().iter().filter(|g| !resolved.contains_key(*g)).cloned().collect();
    let rels = p.relators().iter().map(|r| r.substitute(&resolved)).filter(|r| !r.cyclically_reduced().is_identity());
    Presentation::new(gens, rels)
}

fn resolve_chains(defs: &BTreeMap<String, Word>) -> Result<BTreeMap<String, Word>> {
    let mut done: BTreeMap<String, Word> = BTreeMap::new();
    for g in defs.keys() {
        let mut stack = Vec::new();
        resolve_one(g, defs, &mut done, &mut stack)?;
    }
    Ok(done)
}

fn resolve_one(
    g: &str,
    defs: &BTreeMap<String, Word>,
    done: &mut BTreeMap<String, Word>,
    stack: &mut Vec<String>,
) -> Result<Word> {
    if let Some(w) = done.get(g) {
        return Ok(w.clone());
    }
    if stack.iter().any(|s| s == g) {
        return Err(Error::CyclicIdentification(g.to_string()));
    }
    stack.push(g.to_string());
    let w = &defs[g];
    let mut sub = BTreeMap::new();
    for h in w.generators() {
        if defs.contains_key(h) {
            let img = resolve_one(h, defs, done, stack)?;
            sub.insert(h.to_string(), img);
        }
    }
    let img = w.substitute(&sub);
    stack.pop();
    done.insert(g.to_string(), img.clone());
    Ok(img)
}

/// Greedy simplification: cyclically reduces relators, removes duplicates,
/// and eliminates any generator occurring exactly once in some relator,
/// as long as the total relator length stays bounded.
pub fn simplify(p: &Presentation) -> Presentation {
    let mut gens: Vec<String> = p.generators().to_vec();
    let mut rels: Vec<Word> = p.relators().to_vec();
    let budget = (4 * total_len(&rels)).max(256);
    loop {
        rels = normalize(rels);
        let mut best: Option<(usize, String, Word)> = None;
        for r in &rels {
            for g in r.generators() {
                if occurrences(r, g) != 1 {
                    continue;
                }
                let img = solve_for(r, g);
                let cost: usize = rels
                    .iter()
                    .map(|s| {
                        let k = occurrences(s, g);
                        s.len() - k + k * img.len()
                    })
                    .sum();
                if best.as_ref().is_none_or(|(c, _, _)| cost < *c) {
                    best = Some((cost, g.to_string(), img));
                }
            }
        }
        let Some((cost, g, img)) = best else { break };
        if cost > budget {
            break;
        }
        let mut sub = BTreeMap::new();
        sub.insert(g.clone(), img);
        rels = rels.iter().map(|r| r.substitute(&sub)).collect();
        gens.retain(|x| *x != g);
    }
    // Generators that appear in no relator stay (they are free factors).
    Presentation::new(gens, rels).expect("simplification keeps relators over declared generators")
}

fn total_len(rels: &[Word]) -> usize {
    rels.iter().map(|r| r.len()).sum()
}

fn occurrences(r: &Word, g: &str) -> usize {
    r.letters().iter().filter(|l| l.gen == g).map(|l| l.exp.unsigned_abs() as usize).sum()
}

/// Given a relator where `g` occurs exactly once, returns `w` with `g = w`.
fn solve_for(r: &Word, g: &str) -> Word {
    let letters = r.letters();
    let k = letters.iter().position(|l| l.gen == g).expect("occurs");
    let eps = letters[k].exp;
    // rotate so g comes first: g^eps * s = 1
    let s = free_reduce(letters[k + 1..].iter().chain(letters[..k].iter()).cloned());
    if eps > 0 {
        s.inverse()
    } else {
        s
    }
}

fn normalize(rels: Vec<Word>) -> Vec<Word> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in rels {
        let c = r.cyclically_reduced();
        if c.is_identity() {
            continue;
        }
        if seen.insert(c.relator_canonical()) {
            out.push(c);
        }
    }
    out
}

/// Builds the identification list `g = image` from a map.
pub fn identifications_from(map: &BTreeMap<String, Word>) -> Vec<(String, Word)> {
    map.iter().map(|(g, w)| (g.clone(), w.clone())).collect()
}
