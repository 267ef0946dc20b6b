//! Mapping classes as twist words, evaluated on π1 (L2) and on H1 (L1).

mod h1;

pub use h1::H1Matrix;

use crate::error::{Error, Result};
use crate::surface::{Curve, RibbonModel, SurfaceKind, TwistAction};
use crate::words::{push_reduced, Letter, Word};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

pub const DEFAULT_WORD_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Level {
    L1,
    L2,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::L1 => "L1",
            Level::L2 => "L2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Verified { level: Level },
    Refuted { level: Level },
    /// L2 was not decided; `l1_verified` records the homological evidence.
    Inconclusive { l1_verified: bool, reason: String },
}

impl Verdict {
    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted { .. })
    }

    pub fn is_verified_at(&self, level: Level) -> bool {
        matches!(self, Verdict::Verified { level: l } if *l >= level)
    }

    /// Verified at some level, or undecided at L2 with L1 holding.
    pub fn holds_at_l1(&self) -> bool {
        match self {
            Verdict::Verified { .. } => true,
            Verdict::Inconclusive { l1_verified, .. } => *l1_verified,
            Verdict::Refuted { .. } => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twist {
    pub curve: Curve,
    pub exponent: i32,
}

/// A product of twists; the rightmost factor acts first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappingClass {
    pub surface: SurfaceKind,
    pub twists: Vec<Twist>,
}

impl MappingClass {
    pub fn identity(surface: SurfaceKind) -> Self {
        MappingClass { surface, twists: Vec::new() }
    }

    pub fn twist(surface: SurfaceKind, curve: Curve, exponent: i32) -> Self {
        MappingClass { surface, twists: vec![Twist { curve, exponent }] }
    }

    pub fn from_twists(surface: SurfaceKind, twists: impl IntoIterator<Item = (Curve, i32)>) -> Self {
        MappingClass {
            surface,
            twists: twists.into_iter().map(|(curve, exponent)| Twist { curve, exponent }).collect(),
        }
    }

    /// `self ∘ other`.
    pub fn then(&self, other: &MappingClass) -> MappingClass {
        let mut twists = self.twists.clone();
        twists.extend(other.twists.iter().cloned());
        MappingClass { surface: self.surface, twists }
    }

    pub fn inverse(&self) -> MappingClass {
        MappingClass {
            surface: self.surface,
            twists: self
                .twists
                .iter()
                .rev()
                .map(|t| Twist { curve: t.curve.clone(), exponent: -t.exponent })
                .collect(),
        }
    }

    pub fn is_hyperelliptic(&self) -> bool {
        self.twists.iter().all(|t| t.curve.hyperelliptic)
    }

    pub fn describe(&self) -> String {
        if self.twists.is_empty() {
            return "1".into();
        }
        self.twists
            .iter()
            .map(|t| match t.exponent {
                1 => format!("t_{{{}}}", t.curve.label),
                e => format!("t_{{{}}}^{e}", t.curve.label),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Images of the generators of a bordered surface group, plus the image of
/// the arc between the two basepoints on two-boundary surfaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pi1Automorphism {
    pub images: Vec<Word>,
    pub arc: Option<Word>,
}

impl Pi1Automorphism {
    pub fn identity(surface: SurfaceKind) -> Self {
        Pi1Automorphism {
            images: (1..=surface.rank() as Letter).map(Word::gen).collect(),
            arc: (surface.boundary == 2).then(Word::identity),
        }
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(&self.images)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Pi1Automorphism) -> Pi1Automorphism {
        let images = if self.size() > 20_000 {
            other.images.par_iter().map(|w| self.apply(w)).collect()
        } else {
            other.images.iter().map(|w| self.apply(w)).collect()
        };
        let arc = match (&self.arc, &other.arc) {
            (Some(u), Some(v)) => {
                let mut out = self.apply(v).into_letters();
                push_reduced(&mut out, u.letters());
                Some(Word::reduce(&out))
            }
            _ => None,
        };
        Pi1Automorphism { images, arc }
    }

    pub fn size(&self) -> usize {
        self.images.iter().map(Word::len).sum::<usize>() + self.arc.as_ref().map_or(0, Word::len)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| w.letters() == [i as Letter + 1])
            && self.arc.as_ref().is_none_or(Word::is_empty)
    }

    pub fn abelianize(&self) -> H1Matrix {
        let rank = self.images.len();
        let cols: Vec<Vec<i64>> = self.images.iter().map(|w| w.abelianize(rank)).collect();
        H1Matrix::from_columns(&cols)
    }
}

impl From<TwistAction> for Pi1Automorphism {
    fn from(t: TwistAction) -> Self {
        Pi1Automorphism { images: t.images, arc: t.arc }
    }
}

/// Evaluation context for one surface: twist cache and word budget.
pub struct Evaluator {
    surface: SurfaceKind,
    ribbon: Option<RibbonModel>,
    cache: HashMap<(Word, bool), Arc<Pi1Automorphism>>,
    budget: usize,
}

impl Evaluator {
    pub fn new(surface: SurfaceKind) -> Result<Self> {
        Self::with_budget(surface, DEFAULT_WORD_BUDGET)
    }

    pub fn with_budget(surface: SurfaceKind, budget: usize) -> Result<Self> {
        let ribbon = if surface.is_bordered() { Some(RibbonModel::new(surface)?) } else { None };
        Ok(Evaluator { surface, ribbon, cache: HashMap::new(), budget })
    }

    pub fn surface(&self) -> SurfaceKind {
        self.surface
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn set_budget(&mut self, budget: usize) {
        self.budget = budget;
    }

    fn ribbon(&self) -> Result<&RibbonModel> {
        self.ribbon
            .as_ref()
            .ok_or_else(|| Error::Surface("L2 evaluation needs a bordered surface".into()))
    }

    pub fn is_simple(&self, w: &Word) -> Result<bool> {
        Ok(self.ribbon()?.is_simple(w))
    }

    pub fn twist_automorphism(&mut self, w: &Word, positive: bool) -> Result<Arc<Pi1Automorphism>> {
        let key = (w.cyclically_reduce(), positive);
        if let Some(t) = self.cache.get(&key) {
            return Ok(t.clone());
        }
        let t: Arc<Pi1Automorphism> = Arc::new(self.ribbon()?.twist(&key.0, positive)?.into());
        self.cache.insert(key, t.clone());
        Ok(t)
    }

    pub fn evaluate_l2(&mut self, m: &MappingClass) -> Result<Pi1Automorphism> {
        let mut f = Pi1Automorphism::identity(self.surface);
        for t in &m.twists {
            let a = self.twist_automorphism(&t.curve.word, t.exponent > 0)?;
            for _ in 0..t.exponent.unsigned_abs() {
                f = f.compose(&a);
                if f.size() > self.budget {
                    return Err(Error::Budget(self.budget));
                }
            }
        }
        Ok(f)
    }

    pub fn evaluate_l1(&self, m: &MappingClass) -> H1Matrix {
        let dim = self.surface.rank();
        let mut f = H1Matrix::identity(dim);
        for t in &m.twists {
            let c = t.curve.word.abelianize(dim);
            f = f.mul_transvection(&c, t.exponent as i64);
        }
        f
    }

    /// Image of a curve word under `m`, applying the rightmost twist first.
    pub fn apply(&mut self, m: &MappingClass, w: &Word) -> Result<Word> {
        let mut cur = w.clone();
        for t in m.twists.iter().rev() {
            let a = self.twist_automorphism(&t.curve.word, t.exponent > 0)?;
            for _ in 0..t.exponent.unsigned_abs() {
                cur = a.apply(&cur);
                if cur.len() > self.budget {
                    return Err(Error::Budget(self.budget));
                }
            }
        }
        Ok(cur)
    }

    /// Image of a curve, reduced cyclically; metadata is kept.
    pub fn apply_curve(&mut self, m: &MappingClass, c: &Curve, label: String) -> Result<Curve> {
        let word = self.apply(m, &c.word)?.cyclically_reduce();
        Ok(Curve {
            label,
            word,
            split: c.split,
            hyperelliptic: c.hyperelliptic && m.is_hyperelliptic(),
        })
    }

    pub fn is_identity(&mut self, m: &MappingClass, level: Level) -> Verdict {
        let l1 = self.evaluate_l1(m).is_identity();
        if !l1 {
            return Verdict::Refuted { level: Level::L1 };
        }
        if level == Level::L1 {
            return Verdict::Verified { level: Level::L1 };
        }
        match self.evaluate_l2(m) {
            Ok(f) if f.is_identity() => Verdict::Verified { level: Level::L2 },
            Ok(_) => Verdict::Refuted { level: Level::L2 },
            Err(e) => Verdict::Inconclusive { l1_verified: true, reason: e.to_string() },
        }
    }

    /// Whether `m` fixes the unoriented curve `c`.
    pub fn fixes(&mut self, m: &MappingClass, c: &Word, level: Level) -> Result<bool> {
        let h = c.abelianize(self.surface.rank());
        let img = self.evaluate_l1(m).apply(&h);
        let neg: Vec<i64> = h.iter().map(|x| -x).collect();
        if img != h && img != neg {
            return Ok(false);
        }
        if level == Level::L1 || !self.surface.is_bordered() {
            return Ok(true);
        }
        match self.apply(m, c) {
            Ok(w) => Ok(crate::words::same_curve(&w, c)),
            Err(Error::Budget(_)) => Ok(true),
            Err(e) => Err(e),
        }
    }
}
