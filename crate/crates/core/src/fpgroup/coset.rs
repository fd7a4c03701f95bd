//! Todd–Coxeter enumeration over the trivial subgroup (HLT strategy with
//! lookahead and compaction when the table fills up).

use serde::{Deserialize, Serialize};

use super::presentation::Presentation;
use super::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_cosets: usize,
    /// Budget on coset definitions plus deductions.
    pub max_steps: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_cosets: 1_000_000, max_steps: 50_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CosetOutcome {
    Index(usize),
    Exhausted,
}

/// A completed coset table. Coset 0 is the trivial subgroup.
#[derive(Debug, Clone)]
pub struct CosetTable {
    generators: Vec<String>,
    /// `rows[c][2*g]` is `c·g`, `rows[c][2*g+1]` is `c·g^-1`.
    rows: Vec<Vec<u32>>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.rows.len()
    }

    /// The coset reached from coset 0 by reading `w`, i.e. the image of `w`
    /// in the permutation representation. Identity maps to 0.
    pub fn trace(&self, w: &Word) -> Option<usize> {
        let mut c = 0usize;
        for l in w.letters() {
            let g = self.generators.iter().position(|x| *x == l.gen)?;
            let col = 2 * g + usize::from(l.exp < 0);
            for _ in 0..l.exp.unsigned_abs() {
                c = self.rows[c][col] as usize;
            }
        }
        Some(c)
    }

    /// Whether `w` is the identity in the (finite) group.
    pub fn is_identity(&self, w: &Word) -> Option<bool> {
        // Since the subgroup is trivial, the regular representation is
        // faithful: w = 1 iff it fixes every coset.
        let mut perm: Vec<u32> = (0..self.rows.len() as u32).collect();
        for l in w.letters() {
            let g = self.generators.iter().position(|x| *x == l.gen)?;
            let col = 2 * g + usize::from(l.exp < 0);
            for _ in 0..l.exp.unsigned_abs() {
                for p in perm.iter_mut() {
                    *p = self.rows[*p as usize][col];
                }
            }
        }
        Some(perm.iter().enumerate().all(|(i, &p)| i as u32 == p))
    }
}

pub fn coset_enumerate(p: &Presentation, limits: Limits) -> CosetOutcome {
    match enumerate_table(p, limits) {
        Some(t) => CosetOutcome::Index(t.index()),
        None => CosetOutcome::Exhausted,
    }
}

pub fn enumerate_table(p: &Presentation, limits: Limits) -> Option<CosetTable> {
    let ngens = p.generators().len();
    let rels: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|r| {
            r.cyclically_reduced()
                .unit_letters()
                .into_iter()
                .map(|(g, s)| 2 * p.index_of(g).expect("declared") + usize::from(s < 0))
                .collect::<Vec<usize>>()
        })
        .filter(|r| !r.is_empty())
        .collect();
    let mut e = Enumerator::new(2 * ngens, limits);
    e.run(&rels)?;
    Some(e.into_table(p.generators().to_vec()))
}

const NONE: u32 = u32::MAX;

struct Enumerator {
    ncols: usize,
    limits: Limits,
    table: Vec<u32>,
    parent: Vec<u32>,
    /// Number of allocated coset slots (live or dead).
    next: usize,
    live: usize,
    steps: u64,
    queue: std::collections::VecDeque<u32>,
}

enum Stop {
    NoSpace,
    Budget,
}

impl Enumerator {
    fn new(ncols: usize, limits: Limits) -> Self {
        let mut e = Enumerator {
            ncols,
            limits,
            table: Vec::new(),
            parent: Vec::new(),
            next: 0,
            live: 0,
            steps: 0,
            queue: Default::default(),
        };
        e.alloc();
        e
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ncols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.ncols + x] = v;
    }

    fn alloc(&mut self) -> u32 {
        let c = self.next as u32;
        self.next += 1;
        self.live += 1;
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        self.parent.push(c);
        c
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<u32, Stop> {
        if self.next >= self.limits.max_cosets {
            return Err(Stop::NoSpace);
        }
        self.tick()?;
        let d = self.alloc();
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(d)
    }

    fn tick(&mut self) -> Result<(), Stop> {
        self.steps += 1;
        if self.steps > self.limits.max_steps {
            Err(Stop::Budget)
        } else {
            Ok(())
        }
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let n = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = n;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi as usize] = lo;
        self.live -= 1;
        self.queue.push_back(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(e) = self.queue.pop_front() {
            for x in 0..self.ncols {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                if self.get(f, x ^ 1) == e {
                    self.set(f, x ^ 1, NONE);
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let ex = self.get(e1, x);
                if ex != NONE {
                    self.merge(f1, ex);
                } else {
                    let fx = self.get(f1, x ^ 1);
                    if fx != NONE {
                        self.merge(e1, fx);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, x ^ 1, e1);
                    }
                }
            }
        }
    }

    /// Scans `w` at coset `c`; with `fill` new cosets are defined to close
    /// the cycle, otherwise only deductions and coincidences are made.
    fn scan(&mut self, c: u32, w: &[usize], fill: bool) -> Result<(), Stop> {
        let mut f = c;
        let mut i = 0usize;
        let mut b = c;
        let mut j = w.len();
        loop {
            while i < j {
                let n = self.get(f, w[i]);
                if n == NONE {
                    break;
                }
                f = n;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let n = self.get(b, w[j - 1] ^ 1);
                if n == NONE {
                    break;
                }
                b = n;
                j -= 1;
            }
            if j == i {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            if j == i + 1 {
                self.tick()?;
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn lookahead(&mut self, rels: &[Vec<usize>]) -> Result<(), Stop> {
        let mut c = 0u32;
        while (c as usize) < self.next {
            if self.is_live(c) {
                for r in rels {
                    self.scan(c, r, false)?;
                    if !self.is_live(c) {
                        break;
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }

    /// Renumbers live cosets contiguously; returns the new position of `cur`.
    fn compact(&mut self, cur: u32) -> u32 {
        let mut map = vec![NONE; self.next];
        let mut k = 0u32;
        for c in 0..self.next {
            if self.parent[c] == c as u32 {
                map[c] = k;
                k += 1;
            }
        }
        let mut table = Vec::with_capacity(k as usize * self.ncols);
        for c in 0..self.next {
            if map[c] == NONE {
                continue;
            }
            for x in 0..self.ncols {
                let v = self.table[c * self.ncols + x];
                table.push(if v == NONE { NONE } else { map[v as usize] });
            }
        }
        let mut new_cur = k;
        for c in cur as usize..self.next {
            if map[c] != NONE {
                new_cur = map[c];
                break;
            }
        }
        self.table = table;
        self.next = k as usize;
        self.live = k as usize;
        self.parent = (0..k).collect();
        new_cur
    }

    fn run(&mut self, rels: &[Vec<usize>]) -> Option<()> {
        let mut cur = 0u32;
        while (cur as usize) < self.next {
            if !self.is_live(cur) {
                cur += 1;
                continue;
            }
            match self.process(cur, rels) {
                Ok(()) => cur += 1,
                Err(Stop::Budget) => return None,
                Err(Stop::NoSpace) => {
                    if self.lookahead(rels).is_err() {
                        return None;
                    }
                    let before = self.next;
                    cur = self.compact(cur);
                    // demand real progress: at least a tenth of the table freed
                    if self.next * 10 > before * 9 {
                        return None;
                    }
                }
            }
        }
        Some(())
    }

    fn process(&mut self, c: u32, rels: &[Vec<usize>]) -> Result<(), Stop> {
        for r in rels {
            self.scan(c, r, true)?;
            if !self.is_live(c) {
                return Ok(());
            }
        }
        for x in 0..self.ncols {
            if !self.is_live(c) {
                return Ok(());
            }
            if self.get(c, x) == NONE {
                self.define(c, x)?;
            }
        }
        Ok(())
    }

    fn into_table(mut self, generators: Vec<String>) -> CosetTable {
        self.compact(0);
        let rows = (0..self.next).map(|c| self.table[c * self.ncols..(c + 1) * self.ncols].to_vec()).collect();
        CosetTable { generators, rows }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(g: &[&str], r: &[&str]) -> Presentation {
        Presentation::from_strs(g, r).unwrap()
    }

    #[test]
    fn small_groups() {
        let l = Limits::default();
        assert_eq!(coset_enumerate(&pres(&["x"], &["x"]), l), CosetOutcome::Index(1));
        assert_eq!(coset_enumerate(&pres(&["x"], &["x^5"]), l), CosetOutcome::Index(5));
        // S3
        assert_eq!(coset_enumerate(&pres(&["a", "b"], &["a^2", "b^3", "(a*b)^2"]), l), CosetOutcome::Index(6));
        assert_eq!(coset_enumerate(&pres(&["a", "b"], &["a^2", "b^3", "(a*b)^5"]), l), CosetOutcome::Index(60));
        // quaternion group
        assert_eq!(coset_enumerate(&pres(&["a", "b"], &["a^4", "a^2 = b^2", "b*a*b^-1*a"]), l), CosetOutcome::Index(8));
        // a group with no generators
        assert_eq!(coset_enumerate(&pres(&[], &[]), l), CosetOutcome::Index(1));
    }

    #[test]
    fn infinite_group_exhausts() {
        let l = Limits { max_cosets: 2_000, max_steps: 100_000 };
        assert_eq!(coset_enumerate(&pres(&["x", "y"], &["[x,y]"]), l), CosetOutcome::Exhausted);
    }

    #[test]
    fn table_traces_words() {
        let t = enumerate_table(&pres(&["a", "b"], &["a^2", "b^3", "(a*b)^2"]), Limits::default()).unwrap();
        assert_eq!(t.is_identity(&Word::parse("a*b*a*b").unwrap()), Some(true));
        assert_eq!(t.is_identity(&Word::parse("a*b").unwrap()), Some(false));
        assert_eq!(t.trace(&Word::parse("b^3").unwrap()), Some(0));
    }
}
