use super::{Factorization, MoveKind, MoveRecord};
use crate::error::{Error, Result};
use crate::mcg::{Evaluator, Level, MappingClass, DEFAULT_WORD_BUDGET};
use crate::relators::Relator;
use crate::surface::{Curve, CurveCatalog, SurfaceKind};
use std::ops::Range;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `(t_v, t_w) -> (t_w, t_{t_w^-1(v)})`
    Left,
    /// `(t_v, t_w) -> (t_{t_v(w)}, t_v)`
    Right,
}

/// Catalog, evaluator and verification level shared by a run of moves.
pub struct Context {
    pub catalog: CurveCatalog,
    pub ev: Evaluator,
    pub level: Level,
}

fn root(label: &str) -> &str {
    let s = label.rsplit('(').next().unwrap_or(label);
    s.trim_end_matches(')')
}

impl Context {
    pub fn new(surface: SurfaceKind) -> Result<Self> {
        Self::with_budget(surface, DEFAULT_WORD_BUDGET)
    }

    pub fn with_budget(surface: SurfaceKind, budget: usize) -> Result<Self> {
        Ok(Context {
            catalog: CurveCatalog::build(surface)?,
            ev: Evaluator::with_budget(surface, budget)?,
            level: Level::L2,
        })
    }

    pub fn surface(&self) -> SurfaceKind {
        self.catalog.surface()
    }

    fn label(&self, c: &Curve, op: &str, base: &str) -> String {
        match self.catalog.lookup(&c.word) {
            Some(n) => n.to_string(),
            None => format!("{op}({})", root(base)),
        }
    }

    fn image(&mut self, m: &MappingClass, c: &Curve, op: &str) -> Result<Curve> {
        let mut img = self.ev.apply_curve(m, c, String::new())?;
        img.label = self.label(&img, op, &c.label);
        Ok(img)
    }

    // products of the old and new slots agree in H1
    fn check_local(&self, old: &[Curve], new: &[Curve], what: &str) -> Result<()> {
        let s = self.surface();
        let prod = |cs: &[Curve]| {
            self.ev.evaluate_l1(&MappingClass::from_twists(s, cs.iter().map(|c| (c.clone(), 1))))
        };
        if prod(old) != prod(new) {
            return Err(Error::Stage { stage: what.into(), reason: "H1 product changed".into() });
        }
        Ok(())
    }

    pub fn elementary(&mut self, f: &Factorization, i: usize, dir: Direction) -> Result<Factorization> {
        let mut out = f.clone();
        self.elementary_in_place(&mut out, i, dir)?;
        Ok(out)
    }

    pub fn elementary_in_place(&mut self, f: &mut Factorization, i: usize, dir: Direction) -> Result<()> {
        if i + 1 >= f.len() {
            return Err(Error::Index { index: i, len: f.len() });
        }
        let (v, w) = (f.cycles[i].clone(), f.cycles[i + 1].clone());
        let hyper = v.hyperelliptic && w.hyperelliptic;
        let s = self.surface();
        let (x, y) = match dir {
            Dir::Left => {
                let m = MappingClass::twist(s, w.clone(), -1);
                let mut img = self.image(&m, &v, &format!("t_{}^-1", root(&w.label)))?;
                img.hyperelliptic = hyper;
                (w, img)
            }
            Dir::Right => {
                let m = MappingClass::twist(s, v.clone(), 1);
                let mut img = self.image(&m, &w, &format!("t_{}", root(&v.label)))?;
                img.hyperelliptic = hyper;
                (img, v)
            }
        };
        self.check_local(&f.cycles[i..i + 2], &[x.clone(), y.clone()], "elementary transformation")?;
        f.cycles[i] = x;
        f.cycles[i + 1] = y;
        let kind = if dir == Dir::Left { MoveKind::ElementaryLeft } else { MoveKind::ElementaryRight };
        f.trace.push(MoveRecord::neutral(kind, i));
        Ok(())
    }

    /// Moves cycle `i` to the right end by right moves.
    pub fn push_twist(&mut self, f: &Factorization, i: usize) -> Result<Factorization> {
        self.push_to(f, i, f.len().saturating_sub(1))
    }

    /// Moves cycle `i` to slot `j` by right moves (`j > i`) or left moves (`j < i`).
    pub fn push_to(&mut self, f: &Factorization, i: usize, j: usize) -> Result<Factorization> {
        if i >= f.len() || j >= f.len() {
            return Err(Error::Index { index: i.max(j), len: f.len() });
        }
        let mut cur = f.clone();
        if j > i {
            for k in i..j {
                self.elementary_in_place(&mut cur, k, Dir::Right)?;
            }
        } else {
            for k in (j..i).rev() {
                self.elementary_in_place(&mut cur, k, Dir::Left)?;
            }
        }
        Ok(cur)
    }

    pub fn simultaneous_conjugation(&mut self, f: &Factorization, phi: &MappingClass, tag: &str) -> Result<Factorization> {
        let mut out = f.clone();
        for c in out.cycles.iter_mut() {
            *c = self.image(phi, c, tag)?;
        }
        out.trace.push(MoveRecord {
            phi: Some(tag.to_string()),
            ..MoveRecord::neutral(MoveKind::SimultaneousConjugation, 0)
        });
        Ok(out)
    }

    fn fixes_curve(&mut self, phi: &MappingClass, c: &Curve) -> Result<bool> {
        self.ev.fixes(phi, &c.word, self.level)
    }

    /// R^φ-substitution: the subword `d_1..d_l` at `at` becomes `φ(v_1)..φ(v_k)`.
    pub fn substitute(
        &mut self,
        f: &Factorization,
        at: usize,
        r: &Relator,
        phi: &MappingClass,
        tag: &str,
    ) -> Result<Factorization> {
        let l = r.negative.len();
        if at + l > f.len() {
            return Err(Error::Index { index: at + l, len: f.len() });
        }
        let verdict = r.verify(&mut self.ev, self.level);
        if verdict.is_refuted() {
            return Err(Error::Relator(format!("{} refuted", r.tag())));
        }
        for (k, d) in r.negative.iter().enumerate() {
            if !f.cycles[at + k].same_as(d) {
                return Err(Error::SubwordMismatch(at + k));
            }
        }
        for d in &r.negative {
            if !self.fixes_curve(phi, d)? {
                return Err(Error::NotFixed(d.label.clone()));
            }
        }
        let mut new = Vec::with_capacity(r.positive.len());
        for v in &r.positive {
            new.push(if phi.twists.is_empty() { v.clone() } else { self.image(phi, v, tag)? });
        }
        self.check_local(&f.cycles[at..at + l], &new, "substitution")?;
        let mut out = f.clone();
        out.cycles.splice(at..at + l, new);
        out.trace.push(MoveRecord {
            kind: MoveKind::Substitution,
            position: at,
            relator: Some(r.tag()),
            phi: Some(if phi.twists.is_empty() { "1".into() } else { tag.to_string() }),
            sigma_delta: r.sigma_delta,
            cycle_delta: r.positive.len() as i64 - l as i64,
        });
        Ok(out)
    }

    /// Conjugates the cycles in `segments` by φ. Valid when φ fixes every
    /// other cycle, or when a single segment's product commutes with φ.
    pub fn partial_conjugation(
        &mut self,
        f: &Factorization,
        segments: &[Range<usize>],
        phi: &MappingClass,
        tag: &str,
    ) -> Result<Factorization> {
        let inside = |i: usize| segments.iter().any(|r| r.contains(&i));
        if let Some(r) = segments.iter().find(|r| r.end > f.len()) {
            return Err(Error::Index { index: r.end, len: f.len() });
        }
        let mut complement_fixed = true;
        for i in (0..f.len()).filter(|&i| !inside(i)) {
            if !self.fixes_curve(phi, &f.cycles[i].clone())? {
                complement_fixed = false;
                break;
            }
        }
        if !complement_fixed {
            let ok = segments.len() == 1 && self.commutes(phi, &f.cycles[segments[0].clone()])?;
            if !ok {
                return Err(Error::NotFixed("complement of the conjugated segment".into()));
            }
        }
        let mut out = f.clone();
        for i in 0..f.len() {
            if inside(i) {
                out.cycles[i] = self.image(phi, &f.cycles[i], tag)?;
            }
        }
        out.trace.push(MoveRecord {
            phi: Some(tag.to_string()),
            ..MoveRecord::neutral(MoveKind::PartialConjugation, segments.first().map_or(0, |r| r.start))
        });
        Ok(out)
    }

    fn commutes(&mut self, phi: &MappingClass, seg: &[Curve]) -> Result<bool> {
        let s = self.surface();
        let p = MappingClass::from_twists(s, seg.iter().map(|c| (c.clone(), 1)));
        let comm = phi.then(&p).then(&phi.inverse()).then(&p.inverse());
        Ok(!self.ev.is_identity(&comm, self.level).is_refuted())
    }

    pub fn verify(&mut self, f: &Factorization) -> crate::mcg::Verdict {
        f.verify(&mut self.ev, self.level)
    }
}

use Direction as Dir;

