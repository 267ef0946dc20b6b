use super::Presentation;
use crate::words::Letter;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Enumeration {
    FiniteOrder(usize),
    Inconclusive { cosets_defined: usize },
}

const NONE: u32 = u32::MAX;

struct Table {
    cols: usize,
    rows: Vec<u32>,
    parent: Vec<u32>,
    defined: usize,
    max: usize,
    queue: Vec<(u32, u32)>,
}

fn col(l: Letter) -> usize {
    2 * (l.unsigned_abs() as usize - 1) + (l < 0) as usize
}

fn inv_col(c: usize) -> usize {
    c ^ 1
}

impl Table {
    fn get(&self, c: u32, x: usize) -> u32 {
        self.rows[c as usize * self.cols + x]
    }

    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.rows[c as usize * self.cols + x] = d;
    }

    fn live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Option<u32> {
        if self.defined >= self.max {
            return None;
        }
        let d = self.parent.len() as u32;
        self.parent.push(d);
        self.rows.extend(std::iter::repeat_n(NONE, self.cols));
        self.defined += 1;
        self.set(c, x, d);
        self.set(d, inv_col(x), c);
        Some(d)
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
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi as usize] = lo;
        self.queue.push((hi, lo));
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some((dead, _)) = self.queue.pop() {
            for x in 0..self.cols {
                let e = self.get(dead, x);
                if e == NONE {
                    continue;
                }
                let ix = inv_col(x);
                if self.get(e, ix) == dead {
                    self.set(e, ix, NONE);
                }
                let (c, e) = (self.rep(dead), self.rep(e));
                let ce = self.get(c, x);
                if ce != NONE {
                    self.merge(e, ce);
                } else {
                    let ei = self.get(e, ix);
                    if ei != NONE {
                        self.merge(c, ei);
                    } else {
                        self.set(c, x, e);
                        self.set(e, ix, c);
                    }
                }
            }
        }
    }

    /// Traces `w` from `c` in both directions, defining cosets to close it.
    fn scan_and_fill(&mut self, c: u32, w: &[usize]) -> bool {
        let n = w.len();
        let (mut f, mut i) = (c, 0usize);
        let (mut b, mut j) = (c, n);
        loop {
            while i < j && self.get(f, w[i]) != NONE {
                f = self.get(f, w[i]);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            }
            while j > i && self.get(b, inv_col(w[j - 1])) != NONE {
                b = self.get(b, inv_col(w[j - 1]));
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return true;
            }
            if i + 1 == j {
                self.set(f, w[i], b);
                self.set(b, inv_col(w[i]), f);
                return true;
            }
            if self.define(f, w[i]).is_none() {
                return false;
            }
        }
    }
}

/// HLT enumeration of the cosets of the trivial subgroup.
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> Enumeration {
    let cols = 2 * p.generators.rank();
    if cols == 0 {
        return Enumeration::FiniteOrder(1);
    }
    let rels: Vec<Vec<usize>> = p.relators.iter().map(|r| r.letters().iter().map(|&l| col(l)).collect()).collect();
    let mut t = Table { cols, rows: vec![NONE; cols], parent: vec![0], defined: 1, max: max_cosets.max(1), queue: Vec::new() };
    let mut c = 0u32;
    while (c as usize) < t.parent.len() {
        if t.live(c) {
            for r in &rels {
                if !t.scan_and_fill(c, r) {
                    return Enumeration::Inconclusive { cosets_defined: t.defined };
                }
                if !t.live(c) {
                    break;
                }
            }
            if t.live(c) {
                for x in 0..cols {
                    if t.get(c, x) == NONE && t.define(c, x).is_none() {
                        return Enumeration::Inconclusive { cosets_defined: t.defined };
                    }
                }
            }
        }
        c += 1;
    }
    Enumeration::FiniteOrder((0..t.parent.len() as u32).filter(|&c| t.live(c)).count())
}
