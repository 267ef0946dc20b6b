//! One-vertex ribbon graph (cut-disk) model of a bordered surface and
//! the action of a Dehn twist about a simple closed curve given by a word.
//!
//! Cutting along the arcs dual to the generators leaves a disk whose
//! boundary circle alternates between generator sides and boundary arcs.
//! A reduced cyclic word for a simple curve is a family of disjoint chords
//! in that disk; the twist image of a generator loop is read off from the
//! chords it crosses.

use super::SurfaceKind;
use crate::error::{Error, Result};
use crate::words::{inverse_letters, push_reduced, Letter, Word};


const STRIDE: u64 = 1 << 32;

// Side ids: 2(y-1) for in(y), 2(y-1)+1 for out(y).
fn arrive(l: Letter) -> usize {
    2 * (l.unsigned_abs() as usize - 1) + (l < 0) as usize
}

fn depart(l: Letter) -> usize {
    2 * (l.unsigned_abs() as usize - 1) + (l > 0) as usize
}

fn is_in(side: usize) -> bool {
    side.is_multiple_of(2)
}

#[derive(Clone, Debug)]
pub struct RibbonModel {
    kind: SurfaceKind,
    rank: usize,
    pos: Vec<usize>,
    n_sides: usize,
    base: u64,
    second: Option<u64>,
}

/// Images of the generators and, on two-boundary surfaces, of the arc
/// joining the two basepoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistAction {
    pub images: Vec<Word>,
    pub arc: Option<Word>,
}

impl RibbonModel {
    pub fn new(kind: SurfaceKind) -> Result<Self> {
        if kind.boundary == 0 {
            return Err(Error::Surface("closed surfaces have no cut-disk model".into()));
        }
        let rank = kind.rank();
        let words = kind.boundary_words();
        // arcs: (arrive side, depart side, boundary index, pair index)
        let mut arcs = Vec::new();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * rank];
        for (bi, w) in words.iter().enumerate() {
            let l = w.letters();
            for k in 0..l.len() {
                let (s, t) = (arrive(l[k]), depart(l[(k + 1) % l.len()]));
                arcs.push((s, t, bi, k));
                adj[s].push(arcs.len() - 1);
                adj[t].push(arcs.len() - 1);
            }
        }
        if adj.iter().any(|v| v.len() != 2) {
            return Err(Error::Surface("boundary words do not define a ribbon graph".into()));
        }
        let start = 0usize;
        let mut order = vec![start];
        let mut arc_after = Vec::new();
        let mut cur = start;
        let mut arc = adj[start][1];
        loop {
            arc_after.push(arc);
            let (s, t, _, _) = arcs[arc];
            let next = if s == cur { t } else { s };
            if next == start {
                break;
            }
            order.push(next);
            if adj[next][0] != adj[next][1] {
                arc = if adj[next][0] == arc { adj[next][1] } else { adj[next][0] };
            }
            cur = next;
        }
        if order.len() != 2 * rank {
            return Err(Error::Surface("side circle is not connected".into()));
        }
        let mut pos = vec![0; 2 * rank];
        for (i, &s) in order.iter().enumerate() {
            pos[s] = i;
        }
        let point_after = |bi: usize, k: usize| -> u64 {
            let idx = arc_after
                .iter()
                .position(|&a| arcs[a].2 == bi && arcs[a].3 == k)
                .expect("boundary arc present");
            idx as u64 * STRIDE + STRIDE - 1
        };
        let base = point_after(0, words[0].len() - 1);
        let second = if words.len() > 1 { Some(point_after(1, 0)) } else { None };
        Ok(RibbonModel { kind, rank, pos, n_sides: 2 * rank, base, second })
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    fn sdist(&self, from: usize, to: usize) -> usize {
        (self.pos[to] + self.n_sides - self.pos[from]) % self.n_sides
    }

    // Is the strand through crossing i further right than through j?
    fn more_right(&self, c: &[Letter], i: usize, j: usize) -> Result<bool> {
        let n = c.len() as i64;
        let strand = |i: usize, k: i64| -> Letter {
            if c[i] > 0 {
                c[(i as i64 + k).rem_euclid(n) as usize]
            } else {
                -c[(i as i64 - k).rem_euclid(n) as usize]
            }
        };
        let mut fw = None;
        for k in 1..2 * n + 2 {
            let (x, y) = (strand(i, k), strand(j, k));
            if x != y {
                let s = arrive(strand(i, k - 1));
                fw = Some(self.sdist(s, depart(x)) < self.sdist(s, depart(y)));
                break;
            }
        }
        let mut bw = None;
        for k in 1..2 * n + 2 {
            let (x, y) = (-strand(i, -k), -strand(j, -k));
            if x != y {
                let s = arrive(-strand(i, -(k - 1)));
                bw = Some(self.sdist(s, depart(x)) >= self.sdist(s, depart(y)));
                break;
            }
        }
        match (fw, bw) {
            (None, None) => Err(Error::NotSimple("word is a proper power".into())),
            (Some(f), Some(b)) if f != b => Err(Error::NotSimple("strands cross".into())),
            (Some(f), _) => Ok(f),
            (None, Some(b)) => Ok(b),
        }
    }

    fn sort_crossings(&self, c: &[Letter], idx: &mut Vec<usize>) -> Result<()> {
        // merge sort tolerant of a non-transitive comparator on non-simple input
        if idx.len() <= 1 {
            return Ok(());
        }
        let mut right = idx.split_off(idx.len() / 2);
        self.sort_crossings(c, idx)?;
        self.sort_crossings(c, &mut right)?;
        let left = std::mem::take(idx);
        let (mut p, mut q) = (0, 0);
        while p < left.len() && q < right.len() {
            // ascending: j precedes i when i is more right
            if self.more_right(c, left[p], right[q])? {
                idx.push(right[q]);
                q += 1;
            } else {
                idx.push(left[p]);
                p += 1;
            }
        }
        idx.extend_from_slice(&left[p..]);
        idx.extend_from_slice(&right[q..]);
        Ok(())
    }

    /// Chord endpoints `(start, end)` for each position of the cyclic word.
    fn chords(&self, c: &[Letter]) -> Result<Vec<(u64, u64)>> {
        let n = c.len();
        let mut by_gen: Vec<Vec<usize>> = vec![Vec::new(); self.rank];
        for (i, &l) in c.iter().enumerate() {
            let y = l.unsigned_abs() as usize;
            if y == 0 || y > self.rank {
                return Err(Error::LetterOutOfRange { index: y as u32, rank: self.rank });
            }
            by_gen[y - 1].push(i);
        }
        let mut rank_of = vec![0u64; n];
        let mut count = vec![0u64; self.rank];
        for (y, idx) in by_gen.iter_mut().enumerate() {
            self.sort_crossings(c, idx)?;
            for (r, &i) in idx.iter().enumerate() {
                rank_of[i] = r as u64;
            }
            count[y] = idx.len() as u64;
        }
        let point = |i: usize, side: usize| -> u64 {
            let y = c[i].unsigned_abs() as usize - 1;
            let sub = if is_in(side) { rank_of[i] + 1 } else { count[y] - rank_of[i] };
            self.pos[side] as u64 * STRIDE + sub
        };
        Ok((0..n)
            .map(|k| {
                let nk = (k + 1) % n;
                (point(k, arrive(c[k])), point(nk, depart(c[nk])))
            })
            .collect())
    }

    fn total(&self) -> u64 {
        self.n_sides as u64 * STRIDE
    }

    fn chords_disjoint(&self, ch: &[(u64, u64)]) -> bool {
        let mut ends: Vec<(u64, usize)> = Vec::with_capacity(2 * ch.len());
        for (k, &(s, t)) in ch.iter().enumerate() {
            ends.push((s, k));
            ends.push((t, k));
        }
        ends.sort_unstable();
        let mut stack = Vec::new();
        for (_, k) in ends {
            if stack.last() == Some(&k) {
                stack.pop();
            } else {
                stack.push(k);
            }
        }
        stack.is_empty()
    }

    /// Whether a cyclically reduced word is represented by a simple closed curve.
    pub fn is_simple(&self, w: &Word) -> bool {
        let c = w.cyclically_reduce();
        if c.is_empty() {
            return true;
        }
        match self.chords(c.letters()) {
            Ok(ch) => self.chords_disjoint(&ch),
            Err(_) => false,
        }
    }

    fn crossings(&self, ch: &[(u64, u64)], c: &[Letter], p: u64, q: u64, positive: bool) -> Vec<Letter> {
        let t = self.total();
        let span = (q + t - p) % t;
        let inside = |z: u64| {
            let d = (z + t - p) % t;
            d > 0 && d < span
        };
        let n = c.len();
        let mut hits: Vec<(u64, usize, bool)> = Vec::new();
        for (k, &(s, e)) in ch.iter().enumerate() {
            let (si, ei) = (inside(s), inside(e));
            if si != ei {
                let z = if si { s } else { e };
                hits.push(((z + t - p) % t, k, si == positive));
            }
        }
        hits.sort_unstable();
        let mut out = Vec::with_capacity(hits.len() * n);
        for (_, k, flip) in hits {
            let lp: Vec<Letter> = (0..n).map(|m| c[(k + 1 + m) % n]).collect();
            if flip {
                out.extend(inverse_letters(&lp));
            } else {
                out.extend(lp);
            }
        }
        out
    }

    /// Twist about the curve `w` (right-handed when `positive`).
    pub fn twist(&self, w: &Word, positive: bool) -> Result<TwistAction> {
        let cw = w.cyclically_reduce();
        let c = cw.letters();
        if c.is_empty() {
            return Ok(TwistAction {
                images: (1..=self.rank as Letter).map(Word::gen).collect(),
                arc: self.second.map(|_| Word::identity()),
            });
        }
        let ch = self.chords(c)?;
        if !self.chords_disjoint(&ch) {
            return Err(Error::NotSimple(format!("{cw}")));
        }
        let images = (1..=self.rank as Letter)
            .map(|x| {
                let q_out = self.pos[depart(x)] as u64 * STRIDE + (STRIDE - 2);
                let q_in = self.pos[arrive(x)] as u64 * STRIDE;
                let mut raw = self.crossings(&ch, c, self.base, q_out, positive);
                raw.push(x);
                let mut out = Vec::with_capacity(raw.len());
                push_reduced(&mut out, &raw);
                push_reduced(&mut out, &self.crossings(&ch, c, q_in, self.base, positive));
                Word::reduce(&out)
            })
            .collect();
        let arc = self.second.map(|p2| Word::reduce(&self.crossings(&ch, c, self.base, p2, positive)));
        Ok(TwistAction { images, arc })
    }
}

