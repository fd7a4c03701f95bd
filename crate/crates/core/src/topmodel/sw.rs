//! Sparse Seiberg–Witten functions on characteristic classes.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::lattice::IntersectionLattice;
use crate::error::{Error, Result};

/// `(-1)^((e + sigma) / 4)`, the sign relating the values at `k` and `-k`.
pub fn conjugation_sign(e: i64, sigma: i64) -> Result<i64> {
    let t = e + sigma;
    if t.rem_euclid(4) != 0 {
        return Err(Error::ConjugationModulus(t));
    }
    Ok(if (t / 4).rem_euclid(2) == 0 { 1 } else { -1 })
}

/// Sparse map from class vectors (in a lattice basis) to integer values.
/// Zero values are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SwFunction {
    entries: BTreeMap<Vec<i64>, i64>,
}

impl SwFunction {
    pub fn new() -> Self {
        SwFunction::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Vec<i64>, i64)>) -> Self {
        let mut f = SwFunction::new();
        for (k, v) in pairs {
            f.insert(k, v);
        }
        f
    }

    pub fn insert(&mut self, k: Vec<i64>, v: i64) {
        if v == 0 {
            self.entries.remove(&k);
        } else {
            self.entries.insert(k, v);
        }
    }

    pub fn get(&self, k: &[i64]) -> i64 {
        self.entries.get(k).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &i64)> {
        self.entries.iter()
    }

    pub fn basic_classes(&self) -> Vec<Vec<i64>> {
        self.entries.keys().cloned().collect()
    }

    /// Number of basic classes counted up to sign.
    pub fn classes_up_to_sign(&self) -> usize {
        let mut n = 0;
        for k in self.entries.keys() {
            let neg: Vec<i64> = k.iter().map(|x| -x).collect();
            if k.iter().all(|&x| x == 0) || !self.entries.contains_key(&neg) || *k > neg {
                n += 1;
            }
        }
        n
    }

    /// Extends a function given on one class of each sign pair to all of them.
    pub fn symmetrize(&self, sign: i64) -> Result<Self> {
        let mut out = self.clone();
        for (k, v) in &self.entries {
            let neg: Vec<i64> = k.iter().map(|x| -x).collect();
            let want = sign * v;
            match self.entries.get(&neg) {
                Some(&w) if w != want => {
                    return Err(Error::InvalidArgument(format!(
                        "values at {k:?} and its negative break the sign {sign}"
                    )))
                }
                _ => out.insert(neg, want),
            }
        }
        Ok(out)
    }

    /// Keys failing the characteristic condition.
    pub fn non_characteristic(&self, lattice: &IntersectionLattice) -> Vec<Vec<i64>> {
        self.entries.keys().filter(|k| !lattice.is_characteristic(k)).cloned().collect()
    }

    /// Keys `k` with `f(-k) != sign * f(k)`.
    pub fn conjugation_failures(&self, sign: i64) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .filter(|(k, v)| {
                let neg: Vec<i64> = k.iter().map(|x| -x).collect();
                self.get(&neg) != sign * **v
            })
            .map(|(k, _)| k.clone())
            .collect()
    }

    /// Appends zero coordinates so keys live in a larger lattice.
    pub fn pad(&self, extra: usize) -> Self {
        SwFunction::from_pairs(self.entries.iter().map(|(k, v)| {
            let mut k = k.clone();
            k.extend(std::iter::repeat_n(0, extra));
            (k, *v)
        }))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    class: Vec<i64>,
    value: i64,
}

impl Serialize for SwFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<Entry> = self.entries.iter().map(|(k, v)| Entry { class: k.clone(), value: *v }).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SwFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<Entry>::deserialize(d)?;
        let mut f = SwFunction::new();
        for e in v {
            if f.entries.contains_key(&e.class) {
                return Err(serde::de::Error::custom(format!("class {:?} listed twice", e.class)));
            }
            f.insert(e.class, e.value);
        }
        Ok(f)
    }
}
