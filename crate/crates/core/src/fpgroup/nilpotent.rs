//! The class-2 nilpotent quotient `G / [[G,G],G]`, used to refute relations.
//!
//! Elements of the free class-2 nilpotent group on `n` generators are pairs
//! `(x, y)` with `x` in `Z^n` and `y` indexed by pairs `i > j`, multiplied by
//! `(x, y)(x', y') = (x + x', y + y' + B(x, x'))` where `B(x, x')_{ij} = x_i x'_j`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::intmat::{Hermite, Row};
use super::presentation::Presentation;
use super::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
struct Elem {
    x: Vec<BigInt>,
    y: Vec<BigInt>,
}

pub struct Class2Quotient {
    n: usize,
    gens: Vec<String>,
    abelian: Hermite,
    relator_images: Vec<Elem>,
    central: Hermite,
}

fn pair(i: usize, j: usize) -> usize {
    debug_assert!(i > j);
    i * (i - 1) / 2 + j
}

impl Class2Quotient {
    pub fn new(p: &Presentation) -> Self {
        let n = p.generators().len();
        let m = n * n.saturating_sub(1) / 2;
        let mut q = Class2Quotient {
            n,
            gens: p.generators().to_vec(),
            abelian: Hermite::new(&[], n),
            relator_images: Vec::new(),
            central: Hermite::new(&[], m),
        };
        q.relator_images = p.relators().iter().map(|r| q.image(r)).collect();
        let xs: Vec<Row> = q.relator_images.iter().map(|e| e.x.clone()).collect();
        q.abelian = Hermite::new(&xs, n);

        let mut central_gens: Vec<Row> = Vec::new();
        // [v, g_k] for v in a basis of the relator lattice
        for v in &q.abelian.rows {
            let e = Elem { x: v.clone(), y: vec![BigInt::zero(); m] };
            for k in 0..n {
                let g = q.unit(k);
                let c = q.commutator(&e, &g);
                central_gens.push(c.y);
            }
        }
        // central parts of relator products whose abelian image vanishes
        for t in &q.abelian.kernel {
            let prod = q.relator_product(t);
            debug_assert!(prod.x.iter().all(|v| v.is_zero()));
            central_gens.push(prod.y);
        }
        q.central = Hermite::new(&central_gens, m);
        q
    }

    fn identity(&self) -> Elem {
        Elem { x: vec![BigInt::zero(); self.n], y: vec![BigInt::zero(); self.n * self.n.saturating_sub(1) / 2] }
    }

    fn unit(&self, k: usize) -> Elem {
        let mut e = self.identity();
        e.x[k] = BigInt::from(1);
        e
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = a.clone();
        for i in 0..self.n {
            out.x[i] += &b.x[i];
        }
        for (o, v) in out.y.iter_mut().zip(&b.y) {
            *o += v;
        }
        for i in 1..self.n {
            if a.x[i].is_zero() {
                continue;
            }
            for j in 0..i {
                if !b.x[j].is_zero() {
                    out.y[pair(i, j)] += &a.x[i] * &b.x[j];
                }
            }
        }
        out
    }

    fn inv(&self, a: &Elem) -> Elem {
        // (x,y)^-1 = (-x, -y + B(x,x))
        let mut out = self.identity();
        for i in 0..self.n {
            out.x[i] = -a.x[i].clone();
        }
        for (o, v) in out.y.iter_mut().zip(&a.y) {
            *o = -v.clone();
        }
        for i in 1..self.n {
            for j in 0..i {
                out.y[pair(i, j)] += &a.x[i] * &a.x[j];
            }
        }
        out
    }

    fn pow(&self, a: &Elem, t: &BigInt) -> Elem {
        // (x,y)^t = (t x, t y + t(t-1)/2 B(x,x))
        let mut out = self.identity();
        for i in 0..self.n {
            out.x[i] = &a.x[i] * t;
        }
        for (o, v) in out.y.iter_mut().zip(&a.y) {
            *o = v * t;
        }
        let c: BigInt = t * (t - 1) / 2;
        for i in 1..self.n {
            for j in 0..i {
                out.y[pair(i, j)] += &c * &a.x[i] * &a.x[j];
            }
        }
        out
    }

    fn commutator(&self, a: &Elem, b: &Elem) -> Elem {
        let ab = self.mul(a, b);
        let ai = self.inv(a);
        let bi = self.inv(b);
        self.mul(&self.mul(&ab, &ai), &bi)
    }

    fn image(&self, w: &Word) -> Elem {
        let mut e = self.identity();
        for l in w.letters() {
            let k = self.gens.iter().position(|g| *g == l.gen).expect("declared generator");
            let mut g = self.identity();
            g.x[k] = BigInt::from(l.exp);
            e = self.mul(&e, &g);
        }
        e
    }

    fn relator_product(&self, t: &[BigInt]) -> Elem {
        let mut e = self.identity();
        for (r, ti) in self.relator_images.iter().zip(t) {
            if !ti.is_zero() {
                e = self.mul(&e, &self.pow(r, ti));
            }
        }
        e
    }

    /// Whether `w` maps to the identity of `G / [[G,G],G]`.
    pub fn is_trivial(&self, w: &Word) -> bool {
        let e = self.image(w);
        let Some(t) = self.abelian.solve(&e.x) else { return false };
        let prod = self.relator_product(&t);
        let rest = self.mul(&e, &self.inv(&prod));
        debug_assert!(rest.x.iter().all(|v| v.is_zero()));
        self.central.contains(&rest.y)
    }

    /// Whether `w` already dies in the abelianization.
    pub fn abelian_trivial(&self, w: &Word) -> bool {
        self.abelian.contains(&self.image(w).x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn commutator_detected_in_free_group() {
        let p = Presentation::free(&["x", "y"]).unwrap();
        let q = Class2Quotient::new(&p);
        assert!(q.abelian_trivial(&w("[x,y]")));
        assert!(!q.is_trivial(&w("[x,y]")));
        assert!(q.is_trivial(&w("[[x,y],x]")));
    }

    #[test]
    fn abelian_group_kills_commutators() {
        let p = Presentation::from_strs(&["x", "y"], &["[x,y]"]).unwrap();
        let q = Class2Quotient::new(&p);
        assert!(q.is_trivial(&w("[x,y]^5")));
        assert!(!q.is_trivial(&w("x")));
    }

    #[test]
    fn heisenberg_center() {
        // Heisenberg group: [x,y] central but nontrivial
        let p = Presentation::from_strs(&["x", "y"], &["[[x,y],x]", "[[x,y],y]"]).unwrap();
        let q = Class2Quotient::new(&p);
        assert!(!q.is_trivial(&w("[x,y]")));
        assert!(q.is_trivial(&w("[x,y]*[y,x]")));
    }

    #[test]
    fn torsion_in_center() {
        // [x,y]^2 = 1 leaves [x,y] of order 2
        let p = Presentation::from_strs(&["x", "y"], &["[x,y]^2"]).unwrap();
        let q = Class2Quotient::new(&p);
        assert!(!q.is_trivial(&w("[x,y]")));
        assert!(q.is_trivial(&w("[x,y]^4")));
    }
}
