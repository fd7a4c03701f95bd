//! Exact integer matrix reductions: Smith invariants and row Hermite form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Row = Vec<BigInt>;

pub fn to_big(rows: &[Vec<i64>]) -> Vec<Row> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Nonzero invariant factors `d1 | d2 | ...` of an integer matrix with `ncols`
/// columns, all positive.
pub fn smith_invariants(rows: &[Row], ncols: usize) -> Vec<BigInt> {
    let mut m: Vec<Row> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let nrows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows && t < ncols {
        // pick the smallest nonzero entry in the trailing block as pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..nrows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                let pivot_row = m[t].clone();
                for j in t..ncols {
                    let v = &q * &pivot_row[j];
                    m[i][j] -= v;
                }
                if !m[i][t].is_zero() {
                    m.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..ncols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for i in t..nrows {
                    let v = &q * &m[i][t];
                    m[i][j] -= v;
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide the whole trailing block
            let mut fix = None;
            'scan: for i in t + 1..nrows {
                for j in t + 1..ncols {
                    if !(&m[i][j] % &m[t][t]).is_zero() {
                        fix = Some(i);
                        break 'scan;
                    }
                }
            }
            match fix {
                Some(i) => {
                    for j in t..ncols {
                        let v = m[i][j].clone();
                        m[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

/// Row-style Hermite normal form of the lattice spanned by some integer rows,
/// together with a basis of the integer left kernel.
#[derive(Debug, Clone)]
pub struct Hermite {
    pub ncols: usize,
    pub ninput: usize,
    /// Nonzero rows in echelon form; pivots strictly increase, pivot entries positive.
    pub rows: Vec<Row>,
    pub pivots: Vec<usize>,
    /// `rows[k] = sum_i ops[k][i] * input_i`.
    pub ops: Vec<Row>,
    /// Integer vectors `t` with `sum t_i * input_i = 0`, spanning all such.
    pub kernel: Vec<Row>,
}

impl Hermite {
    pub fn new(input: &[Row], ncols: usize) -> Self {
        let n = input.len();
        let mut m: Vec<Row> = input.to_vec();
        let mut u: Vec<Row> =
            (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r >= n {
                break;
            }
            loop {
                let mut best: Option<usize> = None;
                for i in r..n {
                    if !m[i][c].is_zero() && best.is_none_or(|b| m[i][c].abs() < m[b][c].abs()) {
                        best = Some(i);
                    }
                }
                let Some(b) = best else { break };
                m.swap(r, b);
                u.swap(r, b);
                let mut done = true;
                for i in r + 1..n {
                    if m[i][c].is_zero() {
                        continue;
                    }
                    let q = m[i][c].div_floor(&m[r][c]);
                    sub_mul(&mut m, i, r, &q);
                    sub_mul(&mut u, i, r, &q);
                    if !m[i][c].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if r < n && !m[r][c].is_zero() {
                if m[r][c].is_negative() {
                    m[r].iter_mut().for_each(|x| *x = -x.clone());
                    u[r].iter_mut().for_each(|x| *x = -x.clone());
                }
                for i in 0..r {
                    let q = m[i][c].div_floor(&m[r][c]);
                    if !q.is_zero() {
                        sub_mul(&mut m, i, r, &q);
                        sub_mul(&mut u, i, r, &q);
                    }
                }
                pivots.push(c);
                r += 1;
            }
        }
        let kernel = u[r..].to_vec();
        u.truncate(r);
        m.truncate(r);
        Hermite { ncols, ninput: n, rows: m, pivots, ops: u, kernel }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` modulo the lattice; the result is zero iff `v` is a member.
    pub fn reduce(&self, v: &[BigInt]) -> Row {
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if v[c].is_zero() {
                continue;
            }
            let q = v[c].div_floor(&row[c]);
            for j in c..self.ncols {
                let d = &q * &row[j];
                v[j] -= d;
            }
        }
        v
    }

    /// Integer coefficients `t` with `sum t_i * input_i = v`, if any.
    pub fn solve(&self, v: &[BigInt]) -> Option<Row> {
        let mut v = v.to_vec();
        let mut t = vec![BigInt::zero(); self.ninput];
        for ((row, op), &c) in self.rows.iter().zip(&self.ops).zip(&self.pivots) {
            if v[c].is_zero() {
                continue;
            }
            let (q, rem) = v[c].div_rem(&row[c]);
            if !rem.is_zero() {
                return None;
            }
            for j in c..self.ncols {
                let d = &q * &row[j];
                v[j] -= d;
            }
            for (ti, oi) in t.iter_mut().zip(op) {
                *ti += &q * oi;
            }
        }
        v.iter().all(|x| x.is_zero()).then_some(t)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }
}

fn sub_mul(m: &mut [Row], target: usize, src: usize, q: &BigInt) {
    let (a, b) = if target < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(target);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in a.iter_mut().zip(b.iter()) {
        *x -= q * y;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn smith_small() {
        let m = to_big(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(ints(&smith_invariants(&m, 3)), vec![2, 6, 12]);
        let m = to_big(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(ints(&smith_invariants(&m, 2)), vec![1, 6]);
        assert!(smith_invariants(&to_big(&[vec![0, 0]]), 2).is_empty());
    }

    #[test]
    fn hermite_membership_and_kernel() {
        let m = to_big(&[vec![2, 4], vec![1, 1], vec![3, 5]]);
        let h = Hermite::new(&m, 2);
        assert_eq!(h.rank(), 2);
        assert!(h.contains(&to_big(&[vec![0, 2]])[0]));
        assert!(!h.contains(&to_big(&[vec![0, 1]])[0]));
        assert_eq!(h.kernel.len(), 1);
        let target = to_big(&[vec![5, 9]]).remove(0);
        let t = h.solve(&target).unwrap();
        for c in 0..2 {
            let s: BigInt = (0..3).map(|i| &t[i] * &m[i][c]).sum();
            assert_eq!(s, target[c]);
        }
        let t = &h.kernel[0];
        for c in 0..2 {
            let s: BigInt = (0..3).map(|i| &t[i] * &m[i][c]).sum();
            assert!(s.is_zero());
        }
    }
}
