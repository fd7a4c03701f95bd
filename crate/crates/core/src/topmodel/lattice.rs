//! Intersection lattices: labelled bases with an integer Gram matrix.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntersectionLattice {
    pub basis: Vec<String>,
    /// Row-major symmetric Gram matrix.
    pub gram: Vec<Vec<i64>>,
    /// Whether the basis spans all of `H_2`; partial lattices are only checked
    /// against the bounds they can violate.
    #[serde(default = "default_true")]
    pub complete: bool,
}

/// Inertia of a symmetric form: counts of positive, negative and zero
/// eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub null: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

impl IntersectionLattice {
    pub fn new(basis: Vec<String>, gram: Vec<Vec<i64>>) -> Result<Self> {
        let l = IntersectionLattice { basis, gram, complete: true };
        l.check()?;
        Ok(l)
    }

    pub fn empty() -> Self {
        IntersectionLattice { basis: Vec::new(), gram: Vec::new(), complete: true }
    }

    pub fn partial(mut self) -> Self {
        self.complete = false;
        self
    }

    /// Symmetric, square, labels distinct.
    pub fn check(&self) -> Result<()> {
        let n = self.basis.len();
        if self.gram.len() != n || self.gram.iter().any(|r| r.len() != n) {
            return Err(Error::InconsistentManifold(format!("gram matrix is not {n}x{n}")));
        }
        for i in 0..n {
            for j in 0..i {
                if self.gram[i][j] != self.gram[j][i] {
                    return Err(Error::InconsistentManifold(format!(
                        "gram matrix not symmetric at ({}, {})",
                        self.basis[i], self.basis[j]
                    )));
                }
            }
            if self.basis[..i].contains(&self.basis[i]) {
                return Err(Error::InconsistentManifold(format!("duplicate class label `{}`", self.basis[i])));
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    pub fn unit(&self, label: &str) -> Result<Vec<i64>> {
        let i = self.index_of(label).ok_or_else(|| Error::UnknownClass(label.to_string()))?;
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        Ok(v)
    }

    /// `u . Q . v`.
    pub fn pair(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut s = 0i64;
        for (i, ui) in u.iter().enumerate() {
            if *ui == 0 {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                s += ui * self.gram[i][j] * vj;
            }
        }
        s
    }

    pub fn square(&self, v: &[i64]) -> i64 {
        self.pair(v, v)
    }

    /// `Q . v`, the linear form `x -> x . v`.
    pub fn form(&self, v: &[i64]) -> Vec<i64> {
        (0..self.rank()).map(|i| self.gram[i].iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Exact inertia by symmetric Gaussian elimination over the rationals.
    pub fn inertia(&self) -> Inertia {
        let n = self.rank();
        let mut m: Vec<Vec<BigRational>> =
            self.gram.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
        let mut out = Inertia { positive: 0, negative: 0, null: 0 };
        let mut alive: Vec<usize> = (0..n).collect();
        while !alive.is_empty() {
            let diag = alive.iter().copied().find(|&i| !m[i][i].is_zero());
            let p = match diag {
                Some(p) => p,
                None => {
                    // all diagonal entries vanish; find an off-diagonal entry and
                    // replace row/column i by i + j, which makes the diagonal 2 m_ij
                    let hit = alive
                        .iter()
                        .flat_map(|&i| alive.iter().map(move |&j| (i, j)))
                        .find(|&(i, j)| i != j && !m[i][j].is_zero());
                    let Some((i, j)) = hit else {
                        out.null += alive.len();
                        break;
                    };
                    for k in 0..n {
                        let v = m[j][k].clone();
                        m[i][k] += v;
                    }
                    for k in 0..n {
                        let v = m[k][j].clone();
                        m[k][i] += v;
                    }
                    i
                }
            };
            let d = m[p][p].clone();
            if d.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            alive.retain(|&i| i != p);
            for &i in &alive {
                if m[i][p].is_zero() {
                    continue;
                }
                let f = &m[i][p] / &d;
                for &k in &alive {
                    let v = &f * &m[p][k];
                    m[i][k] -= v;
                }
            }
            for &i in &alive {
                m[i][p] = BigRational::zero();
                m[p][i] = BigRational::zero();
            }
        }
        out
    }

    pub fn signature(&self) -> i64 {
        self.inertia().signature()
    }

    /// Odd iff some basis vector has odd square.
    pub fn is_odd(&self) -> bool {
        (0..self.rank()).any(|i| self.gram[i][i].rem_euclid(2) == 1)
    }

    /// `k . x = x . x (mod 2)` for every basis vector `x`.
    pub fn is_characteristic(&self, k: &[i64]) -> bool {
        k.len() == self.rank() && self.form(k).iter().enumerate().all(|(i, v)| (v - self.gram[i][i]).rem_euclid(2) == 0)
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, other: &IntersectionLattice) -> Result<Self> {
        let n = self.rank();
        let m = other.rank();
        let mut basis = self.basis.clone();
        basis.extend(other.basis.iter().cloned());
        let mut gram = vec![vec![0; n + m]; n + m];
        for i in 0..n {
            gram[i][..n].copy_from_slice(&self.gram[i]);
        }
        for i in 0..m {
            gram[n + i][n..].copy_from_slice(&other.gram[i]);
        }
        let mut l = IntersectionLattice::new(basis, gram)?;
        l.complete = self.complete && other.complete;
        Ok(l)
    }

    /// Adds a class orthogonal to everything with the given square.
    pub fn extend_orthogonal(&self, label: &str, square: i64) -> Result<Self> {
        let n = self.rank();
        let mut basis = self.basis.clone();
        basis.push(label.to_string());
        let mut gram: Vec<Vec<i64>> = self.gram.iter().map(|r| r.iter().copied().chain([0]).collect()).collect();
        let mut last = vec![0; n + 1];
        last[n] = square;
        gram.push(last);
        let mut l = IntersectionLattice::new(basis, gram)?;
        l.complete = self.complete;
        Ok(l)
    }

    /// Builds a lattice from labels, diagonal squares and symmetric pairings.
    pub fn from_pairings(labels: &[&str], squares: &[i64], pairings: &[(&str, &str, i64)]) -> Result<Self> {
        let n = labels.len();
        if squares.len() != n {
            return Err(Error::InvalidArgument("one square per label".into()));
        }
        let mut gram = vec![vec![0; n]; n];
        for i in 0..n {
            gram[i][i] = squares[i];
        }
        let idx = |s: &str| labels.iter().position(|l| *l == s).ok_or_else(|| Error::UnknownClass(s.to_string()));
        for &(u, v, x) in pairings {
            let (i, j) = (idx(u)?, idx(v)?);
            if i == j {
                return Err(Error::InvalidArgument(format!("pairing of `{u}` with itself")));
            }
            gram[i][j] = x;
            gram[j][i] = x;
        }
        IntersectionLattice::new(labels.iter().map(|s| s.to_string()).collect(), gram)
    }

    /// Renders `v` in the basis, e.g. `2Sigma - 2G + R1`.
    pub fn render(&self, v: &[i64]) -> String {
        let mut out = String::new();
        for (c, label) in v.iter().zip(&self.basis) {
            if *c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if out.is_empty() {
                if *c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if *c < 0 { " - " } else { " + " });
            }
            if mag != 1 {
                out.push_str(&mag.to_string());
            }
            out.push_str(label);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Inverse of [`render`](Self::render): parses `2Sigma - G + R1`.
    /// A term is an optional decimal coefficient followed by a basis label.
    pub fn parse_class(&self, s: &str) -> Result<Vec<i64>> {
        let mut v = vec![0i64; self.rank()];
        let t = s.trim();
        if t == "0" {
            return Ok(v);
        }
        let mut sign = 1i64;
        let mut expect_term = true;
        let mut pos = 0;
        for tok in t.split_whitespace() {
            let at = s[pos..].find(tok).map_or(pos, |i| pos + i);
            pos = at + tok.len();
            if !expect_term {
                sign = match tok {
                    "+" => 1,
                    "-" => -1,
                    _ => return Err(Error::Parse { pos: at, msg: format!("expected + or -, found `{tok}`") }),
                };
                expect_term = true;
                continue;
            }
            let (neg, body) = match tok.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, tok),
            };
            let digits = body.len() - body.trim_start_matches(|c: char| c.is_ascii_digit()).len();
            let (num, label) = body.split_at(digits);
            if label.is_empty() {
                return Err(Error::Parse { pos: at, msg: format!("term `{tok}` has no label") });
            }
            let coef: i64 = if num.is_empty() {
                1
            } else {
                num.parse().map_err(|_| Error::Parse { pos: at, msg: format!("coefficient `{num}` too large") })?
            };
            let i = self.index_of(label).ok_or_else(|| Error::UnknownClass(label.to_string()))?;
            let c = coef
                .checked_mul(if neg { -sign } else { sign })
                .and_then(|c| v[i].checked_add(c))
                .ok_or_else(|| Error::Parse { pos: at, msg: "coefficient overflow".into() })?;
            v[i] = c;
            expect_term = false;
        }
        if expect_term {
            return Err(Error::Parse { pos: s.len(), msg: "expected a term".into() });
        }
        Ok(v)
    }
}
