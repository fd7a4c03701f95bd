use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::intmat::{smith_invariants, Row};
use super::parse::{is_valid_name, parse_relation};
use super::word::Word;
use crate::error::{Error, Result};

/// A finitely presented group. Relators are stored freely reduced and never
/// the identity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new<S: Into<String>>(
        generators: impl IntoIterator<Item = S>,
        relators: impl IntoIterator<Item = Word>,
    ) -> Result<Self> {
        let mut p = Presentation { generators: Vec::new(), relators: Vec::new() };
        let mut seen = BTreeSet::new();
        for g in generators {
            let g = g.into();
            if !is_valid_name(&g) {
                return Err(Error::Parse { pos: 0, msg: format!("invalid generator name `{g}`") });
            }
            if !seen.insert(g.clone()) {
                return Err(Error::DuplicateGenerator(g));
            }
            p.generators.push(g);
        }
        for r in relators {
            p.add_relator(r)?;
        }
        Ok(p)
    }

    /// Builds a presentation from relator strings (`u = v` allowed).
    pub fn from_strs(generators: &[&str], relators: &[&str]) -> Result<Self> {
        let rels = relators.iter().map(|s| parse_relation(s)).collect::<Result<Vec<_>>>()?;
        Presentation::new(generators.iter().copied(), rels)
    }

    pub fn free(generators: &[&str]) -> Result<Self> {
        Presentation::new(generators.iter().copied(), [])
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn has_generator(&self, g: &str) -> bool {
        self.generators.iter().any(|x| x == g)
    }

    pub fn index_of(&self, g: &str) -> Option<usize> {
        self.generators.iter().position(|x| x == g)
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        for g in w.generators() {
            if !self.has_generator(g) {
                return Err(Error::UndeclaredGenerator(g.to_string()));
            }
        }
        Ok(())
    }

    /// Appends a relator; trivial relators are dropped.
    pub fn add_relator(&mut self, r: Word) -> Result<()> {
        self.check_word(&r)?;
        if !r.is_identity() {
            self.relators.push(r);
        }
        Ok(())
    }

    pub fn with_relator(mut self, r: Word) -> Result<Self> {
        self.add_relator(r)?;
        Ok(self)
    }

    /// Removes the relators equivalent (up to rotation and inversion) to each
    /// word in `drop`. Every dropped word must be present.
    pub fn without_relators(&self, drop: &[Word]) -> Result<Self> {
        let mut out = self.clone();
        for d in drop {
            let key = d.relator_canonical();
            match out.relators.iter().position(|r| r.relator_canonical() == key) {
                Some(i) => {
                    out.relators.remove(i);
                }
                None => return Err(Error::InvalidArgument(format!("relator {d} is not present"))),
            }
        }
        Ok(out)
    }

    /// Free product: disjoint generator sets are required.
    pub fn free_product(&self, other: &Presentation) -> Result<Self> {
        let clash: Vec<&str> = other.generators.iter().filter(|g| self.has_generator(g)).map(|s| s.as_str()).collect();
        if !clash.is_empty() {
            return Err(Error::NameClash(clash.join(",")));
        }
        let mut out = self.clone();
        out.generators.extend(other.generators.iter().cloned());
        out.relators.extend(other.relators.iter().cloned());
        Ok(out)
    }

    pub fn rename(&self, map: &BTreeMap<String, String>) -> Result<Self> {
        let gens: Vec<String> =
            self.generators.iter().map(|g| map.get(g).cloned().unwrap_or_else(|| g.clone())).collect();
        Presentation::new(gens, self.relators.iter().map(|r| r.rename(map)))
    }

    /// Relator classes up to rotation and inversion, as a set.
    pub fn relator_classes(&self) -> BTreeSet<Word> {
        self.relators.iter().map(|r| r.relator_canonical()).collect()
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn exponent_matrix(&self) -> Vec<Row> {
        self.relators.iter().map(|r| self.abelian_image(r)).collect()
    }

    pub fn abelian_image(&self, w: &Word) -> Row {
        let mut row = vec![BigInt::from(0); self.generators.len()];
        for l in w.letters() {
            if let Some(i) = self.index_of(&l.gen) {
                row[i] += l.exp;
            }
        }
        row
    }

    pub fn abelianization(&self) -> AbelianInvariants {
        let n = self.generators.len();
        let d = smith_invariants(&self.exponent_matrix(), n);
        let free_rank = n - d.len();
        let torsion = d.into_iter().filter(|x| !x.is_one()).collect();
        AbelianInvariants { free_rank, torsion }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generators.join(", "))?;
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_string()).collect();
        write!(f, "{} >", rels.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPresentation {
    generators: Vec<String>,
    #[serde(default)]
    relators: Vec<String>,
}

impl Serialize for Presentation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawPresentation {
            generators: self.generators.clone(),
            relators: self.relators.iter().map(|r| r.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Presentation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPresentation::deserialize(d)?;
        let rels = raw
            .relators
            .iter()
            .map(|s| parse_relation(s))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Presentation::new(raw.generators, rels).map_err(serde::de::Error::custom)
    }
}

/// Parses a presentation from its JSON form.
pub fn parse_presentation_json(text: &str) -> Result<Presentation> {
    serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })
}

/// Invariants of a finitely generated abelian group `Z^r + Z/d1 + ... + Z/dk`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    /// Each at least 2 and dividing the next.
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn free(rank: usize) -> Self {
        AbelianInvariants { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group, when finite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    /// Parses the notation produced by `Display`: `trivial`, `Z^2`, `Z/2`,
    /// `Z^2 + Z/2 + Z/6`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse { pos: 0, msg: format!("bad abelian group notation `{s}`") };
        if s == "trivial" || s == "1" || s == "0" {
            return Ok(AbelianInvariants::free(0));
        }
        let mut out = AbelianInvariants::free(0);
        for part in s.split('+').map(str::trim) {
            if part == "Z" {
                out.free_rank += 1;
            } else if let Some(k) = part.strip_prefix("Z^") {
                out.free_rank += k.trim().parse::<usize>().map_err(|_| bad())?;
            } else if let Some(k) = part.strip_prefix("Z/") {
                let d: BigInt = k.trim().parse().map_err(|_| bad())?;
                if d < BigInt::from(2) {
                    return Err(bad());
                }
                out.torsion.push(d);
            } else {
                return Err(bad());
            }
        }
        out.torsion.sort();
        Ok(out)
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "trivial");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for AbelianInvariants {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Num {
            Small(u64),
            Big(String),
        }
        #[derive(Serialize)]
        struct Out {
            free_rank: usize,
            torsion: Vec<Num>,
            notation: String,
        }
        Out {
            free_rank: self.free_rank,
            torsion: self
                .torsion
                .iter()
                .map(|t| t.to_u64().map(Num::Small).unwrap_or_else(|| Num::Big(t.to_string())))
                .collect(),
            notation: self.to_string(),
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelianizations() {
        let p = Presentation::from_strs(&["x", "y"], &["[x,y]"]).unwrap();
        assert_eq!(p.abelianization(), AbelianInvariants::free(2));
        let p = Presentation::from_strs(&["x"], &["x^2"]).unwrap();
        assert_eq!(p.abelianization().to_string(), "Z/2");
        let p = Presentation::from_strs(&["x", "y"], &["x^4", "y^6"]).unwrap();
        assert_eq!(p.abelianization().to_string(), "Z/2 + Z/12");
    }

    #[test]
    fn json_round_trip() {
        let p = parse_presentation_json(r#"{"generators":["a","b"],"relators":["a = [a,b]", "b^3"]}"#).unwrap();
        let q = parse_presentation_json(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(p, q);
        assert!(parse_presentation_json(r#"{"generators":["a"],"relators":["b"]}"#).is_err());
        assert!(parse_presentation_json(r#"{"generators":["a","a"]}"#).is_err());
    }

    #[test]
    fn notation_round_trip() {
        for s in ["trivial", "Z^4", "Z", "Z/2 + Z/4", "Z^2 + Z/3"] {
            assert_eq!(AbelianInvariants::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn dropping_relators_matches_rotations() {
        let p = Presentation::from_strs(&["a", "d"], &["[a,d]"]).unwrap();
        let q = p.without_relators(&[Word::parse("[a^-1,d]").unwrap()]).unwrap();
        assert!(q.relators().is_empty());
    }
}
