use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::parse;
use crate::error::Result;

/// A generator raised to a nonzero power.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: String,
    pub exp: i64,
}

impl Letter {
    pub fn new(gen: impl Into<String>, exp: i64) -> Self {
        Letter { gen: gen.into(), exp }
    }
}

/// A freely reduced word in named generators. The empty word is the identity.
///
/// Every constructor normalizes, so two words are equal as group elements of
/// the free group exactly when they compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Freely reduces an arbitrary letter sequence: merges adjacent powers of the
/// same generator and drops zero exponents.
pub fn free_reduce<I>(letters: I) -> Word
where
    I: IntoIterator<Item = Letter>,
{
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        if l.exp == 0 {
            continue;
        }
        match out.last_mut() {
            Some(top) if top.gen == l.gen => {
                top.exp += l.exp;
                if top.exp == 0 {
                    out.pop();
                }
            }
            _ => out.push(l),
        }
    }
    Word { letters: out }
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(name: impl Into<String>) -> Self {
        Word { letters: vec![Letter::new(name, 1)] }
    }

    pub fn power_of(name: impl Into<String>, exp: i64) -> Self {
        free_reduce([Letter::new(name, exp)])
    }

    pub fn parse(s: &str) -> Result<Self> {
        parse::parse_word(s)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of syllables `g^k`.
    pub fn syllables(&self) -> usize {
        self.letters.len()
    }

    /// Length counted in unit letters.
    pub fn len(&self) -> usize {
        self.letters.iter().map(|l| l.exp.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| Letter::new(l.gen.clone(), -l.exp)).collect() }
    }

    pub fn mul(&self, other: &Word) -> Word {
        free_reduce(self.letters.iter().chain(other.letters.iter()).cloned())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `[u,v] = u v u^-1 v^-1`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        free_reduce(
            u.letters
                .iter()
                .cloned()
                .chain(v.letters.iter().cloned())
                .chain(u.inverse().letters)
                .chain(v.inverse().letters),
        )
    }

    /// `g w g^-1`.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.mul(self).mul(&g.inverse())
    }

    pub fn exponent_sum(&self, gen: &str) -> i64 {
        self.letters.iter().filter(|l| l.gen == gen).map(|l| l.exp).sum()
    }

    pub fn generators(&self) -> BTreeSet<&str> {
        self.letters.iter().map(|l| l.gen.as_str()).collect()
    }

    pub fn mentions(&self, gen: &str) -> bool {
        self.letters.iter().any(|l| l.gen == gen)
    }

    /// Replaces every generator that has an entry in `map` by its image.
    pub fn substitute(&self, map: &BTreeMap<String, Word>) -> Word {
        let mut out = Vec::new();
        for l in &self.letters {
            match map.get(&l.gen) {
                Some(img) => {
                    let p = img.pow(l.exp);
                    out.extend(p.letters);
                }
                None => out.push(l.clone()),
            }
        }
        free_reduce(out)
    }

    pub fn rename(&self, map: &BTreeMap<String, String>) -> Word {
        free_reduce(
            self.letters.iter().map(|l| Letter::new(map.get(&l.gen).cloned().unwrap_or_else(|| l.gen.clone()), l.exp)),
        )
    }

    /// Expands into unit letters `(gen, ±1)`.
    pub fn unit_letters(&self) -> Vec<(&str, i8)> {
        let mut out = Vec::with_capacity(self.len());
        for l in &self.letters {
            let s = if l.exp > 0 { 1 } else { -1 };
            for _ in 0..l.exp.unsigned_abs() {
                out.push((l.gen.as_str(), s));
            }
        }
        out
    }

    /// Cyclic reduction: conjugates away matching ends. Only used on relators.
    pub fn cyclically_reduced(&self) -> Word {
        let mut letters = self.letters.clone();
        loop {
            if letters.len() < 2 {
                break;
            }
            let n = letters.len();
            if letters[0].gen != letters[n - 1].gen {
                break;
            }
            let merged = letters[0].exp + letters[n - 1].exp;
            let gen = letters[0].gen.clone();
            letters.pop();
            letters.remove(0);
            if merged != 0 {
                // Keep the merged syllable at the front; the rest stays put.
                letters.insert(0, Letter::new(gen, merged));
                break;
            }
        }
        Word { letters }
    }

    /// Canonical representative of the relator class under cyclic permutation
    /// and inversion. Two relators generate the same normal closure when their
    /// canonical forms agree.
    pub fn relator_canonical(&self) -> Word {
        let units: Vec<(String, i8)> =
            self.cyclically_reduced().unit_letters().into_iter().map(|(g, s)| (g.to_string(), s)).collect();
        if units.is_empty() {
            return Word::identity();
        }
        let inv: Vec<(String, i8)> = units.iter().rev().map(|(g, s)| (g.clone(), -s)).collect();
        let mut best: Option<Vec<(String, i8)>> = None;
        for seq in [&units, &inv] {
            let n = seq.len();
            for r in 0..n {
                let rot: Vec<(String, i8)> = seq[r..].iter().chain(seq[..r].iter()).cloned().collect();
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        free_reduce(best.unwrap().into_iter().map(|(g, s)| Letter::new(g, s as i64)))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if l.exp == 1 {
                write!(f, "{}", l.gen)?;
            } else {
                write!(f, "{}^{}", l.gen, l.exp)?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Word {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Word::parse(&s).map_err(serde::de::Error::custom)
    }
}
