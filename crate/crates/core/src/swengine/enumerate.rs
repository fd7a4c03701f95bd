//! Basic-class enumeration under parity, adjunction and simple-type
//! constraints.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::topmodel::{IntersectionLattice, SurfaceClass, SurfaceFlag};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasicClassProblem {
    pub lattice: IntersectionLattice,
    /// Constraint surfaces; genus-0 records are ignored.
    pub surfaces: Vec<SurfaceClass>,
    pub e: i64,
    pub sigma: i64,
    pub simple_type: bool,
}

impl BasicClassProblem {
    /// `2e + 3 sigma`, the square of every basic class under simple type.
    pub fn simple_type_square(&self) -> i64 {
        2 * self.e + 3 * self.sigma
    }

    /// The lattice spanned by two square-zero surfaces `Sigma` and `G`
    /// meeting once, tori of square -1 each meeting `Sigma` once and nothing
    /// else, and `pairs` orthogonal hyperbolic pairs of lagrangian tori.
    pub fn sum_model(
        sigma_genus: u32,
        g_genus: u32,
        minus_one: &[(&str, u32)],
        pairs: usize,
        e: i64,
        sigma: i64,
    ) -> Result<Self> {
        let mut labels: Vec<String> = vec!["Sigma".into(), "G".into()];
        labels.extend(minus_one.iter().map(|(l, _)| l.to_string()));
        for i in 1..=pairs {
            labels.push(format!("L{}", 2 * i - 1));
            labels.push(format!("L{}", 2 * i));
        }
        let n = labels.len();
        let mut gram = vec![vec![0; n]; n];
        gram[0][1] = 1;
        gram[1][0] = 1;
        for i in 0..minus_one.len() {
            gram[2 + i][2 + i] = -1;
            gram[0][2 + i] = 1;
            gram[2 + i][0] = 1;
        }
        let base = 2 + minus_one.len();
        for i in 0..pairs {
            gram[base + 2 * i][base + 2 * i + 1] = 1;
            gram[base + 2 * i + 1][base + 2 * i] = 1;
        }
        let lattice = IntersectionLattice::new(labels.clone(), gram)?;
        let mut surfaces = vec![
            SurfaceClass::basis_class("Sigma", sigma_genus, &lattice)?.with_flag(SurfaceFlag::Symplectic),
            SurfaceClass::basis_class("G", g_genus, &lattice)?.with_flag(SurfaceFlag::Symplectic),
        ];
        for (l, g) in minus_one {
            surfaces.push(SurfaceClass::basis_class(l, *g, &lattice)?.with_flag(SurfaceFlag::Symplectic));
        }
        for l in &labels[base..] {
            surfaces.push(SurfaceClass::basis_class(l, 1, &lattice)?.with_flag(SurfaceFlag::Lagrangian));
        }
        Ok(BasicClassProblem { lattice, surfaces, e, sigma, simple_type: true })
    }

    fn constraints(&self) -> Vec<(Vec<i64>, i64, String)> {
        self.surfaces
            .iter()
            .filter(|s| s.genus >= 1)
            .map(|s| {
                let bound = 2 * s.genus as i64 - 2 - s.square;
                (self.lattice.form(&s.coords), bound, s.label.clone())
            })
            .collect()
    }

    /// Whether `k` meets every constraint family.
    pub fn admits(&self, k: &[i64]) -> bool {
        if !self.lattice.is_characteristic(k) {
            return false;
        }
        for s in self.surfaces.iter().filter(|s| s.genus >= 1) {
            let pair = self.lattice.pair(k, &s.coords);
            if s.square + pair.abs() > 2 * s.genus as i64 - 2 {
                return false;
            }
            if s.genus == 1 && s.square == 0 && pair != 0 {
                return false;
            }
        }
        !self.simple_type || self.lattice.square(k) == self.simple_type_square()
    }
}

/// Inverse of a nonsingular integer matrix as `(d, A)` with `inverse = A / d`.
fn scaled_inverse(m: &[Vec<i64>]) -> (BigInt, Vec<Vec<BigInt>>) {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<BigRational> = r.iter().map(|&x| BigRational::from_integer(x.into())).collect();
            row.extend((0..n).map(|j| BigRational::from_integer(BigInt::from((i == j) as i64))));
            row
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero()).expect("nonsingular");
        a.swap(p, k);
        let piv = a[k][k].clone();
        for x in a[k].iter_mut() {
            *x /= &piv;
        }
        for i in 0..n {
            if i != k && !a[i][k].is_zero() {
                let f = a[i][k].clone();
                for j in 0..2 * n {
                    let d = &f * &a[k][j];
                    a[i][j] -= d;
                }
            }
        }
    }
    let d = a.iter().flat_map(|r| r[n..].iter()).fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let inv = a.iter().map(|r| r[n..].iter().map(|x| x.numer() * (&d / x.denom())).collect()).collect();
    (d, inv)
}

/// Greedy choice of linearly independent rows, returned as indices.
fn independent_rows(rows: &[Vec<i64>], n: usize) -> (Vec<usize>, Vec<Vec<BigInt>>) {
    let mut basis: Vec<(usize, Vec<BigInt>)> = Vec::new(); // (pivot column, reduced row)
    let mut chosen = Vec::new();
    for (idx, r) in rows.iter().enumerate() {
        let mut v: Vec<BigInt> = r.iter().map(|&x| BigInt::from(x)).collect();
        for (c, b) in &basis {
            if v[*c].is_zero() {
                continue;
            }
            let f = v[*c].clone();
            let g = b[*c].clone();
            for j in 0..n {
                v[j] = &v[j] * &g - &f * &b[j];
            }
        }
        if let Some(c) = (0..n).find(|&j| !v[j].is_zero()) {
            basis.push((c, v));
            chosen.push(idx);
        }
    }
    (chosen, basis.into_iter().map(|(_, v)| v).collect())
}

/// All characteristic classes meeting parity, adjunction, torus and (when
/// asked) simple-type constraints, sorted.
///
/// The scan runs over the values of independent constraint forms, which the
/// adjunction inequalities bound; each value vector determines at most one
/// class. Fails when the forms do not span the dual lattice.
pub fn enumerate_basic_classes(p: &BasicClassProblem) -> Result<Vec<Vec<i64>>> {
    let n = p.lattice.rank();
    if n == 0 {
        let ok = !p.simple_type || p.simple_type_square() == 0;
        return Ok(if ok { vec![Vec::new()] } else { Vec::new() });
    }
    let mut cons = p.constraints();
    if cons.iter().any(|(_, b, _)| *b < 0) {
        return Ok(Vec::new());
    }
    // tight constraints first so the chosen box is small
    cons.sort_by_key(|(f, b, s)| {
        let tight = *b == 0 || {
            let sf = p.surfaces.iter().find(|x| &x.label == s);
            sf.is_some_and(|x| x.genus == 1 && x.square == 0)
        };
        (if tight { 0 } else { 1 + *b }, f.iter().map(|x| x.abs()).sum::<i64>())
    });
    let ranges: Vec<i64> = cons
        .iter()
        .map(|(_, b, s)| {
            let torus = p.surfaces.iter().any(|x| &x.label == s && x.genus == 1 && x.square == 0);
            if torus {
                0
            } else {
                *b
            }
        })
        .collect();
    let forms: Vec<Vec<i64>> = cons.iter().map(|(f, _, _)| f.clone()).collect();
    let (chosen, reduced) = independent_rows(&forms, n);
    if chosen.len() < n {
        // a direction killed by every chosen form is unbounded
        let free =
            (0..n).find(|&j| reduced.iter().all(|r| r.iter().position(|x| !x.is_zero()) != Some(j))).unwrap_or(0);
        return Err(Error::UnboundedDirection(p.lattice.basis[free].clone()));
    }
    let f: Vec<Vec<i64>> = chosen.iter().map(|&i| forms[i].clone()).collect();
    let r: Vec<i64> = chosen.iter().map(|&i| ranges[i]).collect();
    let (det, adj) = scaled_inverse(&f);
    let det = det.to_i128().expect("small determinant");
    let adj: Vec<Vec<i128>> =
        adj.iter().map(|row| row.iter().map(|x| x.to_i128().expect("small adjugate")).collect()).collect();

    let mut out = Vec::new();
    let mut y: Vec<i64> = r.iter().map(|b| -b).collect();
    loop {
        let mut k = Vec::with_capacity(n);
        let mut integral = true;
        for row in &adj {
            let s: i128 = row.iter().zip(&y).map(|(a, b)| a * *b as i128).sum();
            if s % det != 0 {
                integral = false;
                break;
            }
            k.push((s / det) as i64);
        }
        if integral && p.admits(&k) {
            out.push(k);
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                out.sort();
                return Ok(out);
            }
            if y[i] < r[i] {
                y[i] += 1;
                break;
            }
            y[i] = -r[i];
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classes(p: &BasicClassProblem) -> Vec<String> {
        enumerate_basic_classes(p).unwrap().iter().map(|k| p.lattice.render(k)).collect()
    }

    #[test]
    fn genus_two_sum_with_two_tori() {
        let p = BasicClassProblem::sum_model(2, 2, &[("R1", 1), ("R2", 1)], 1, 6, -2).unwrap();
        assert_eq!(classes(&p), vec!["-2Sigma - R1 - R2", "2Sigma + R1 + R2"]);
    }

    #[test]
    fn four_torus_models() {
        let p = BasicClassProblem::sum_model(2, 2, &[("R1", 1), ("R2", 1), ("S1", 1), ("S2", 1)], 1, 8, -4).unwrap();
        assert_eq!(classes(&p), vec!["-2Sigma + 2G - R1 - R2 - S1 - S2", "2Sigma - 2G + R1 + R2 + S1 + S2"]);
    }
    #[test]
    fn higher_genus_model() {
        let p = BasicClassProblem::sum_model(2, 3, &[("R1", 2), ("R2", 2)], 3, 10, -2).unwrap();
        assert_eq!(classes(&p), vec!["-4Sigma - R1 - R2", "4Sigma + R1 + R2"]);
    }

    #[test]
    fn unbounded_direction_reported() {
        let mut p = BasicClassProblem::sum_model(2, 2, &[("R1", 1)], 0, 6, -2).unwrap();
        p.surfaces.retain(|s| s.label != "G");
        assert!(matches!(enumerate_basic_classes(&p), Err(Error::UnboundedDirection(_))));
    }

    #[test]
    fn negative_budget_gives_nothing() {
        let mut p = BasicClassProblem::sum_model(1, 1, &[], 0, 0, 0).unwrap();
        p.surfaces[0].square = 1;
        assert!(enumerate_basic_classes(&p).unwrap().is_empty());
    }
}
