//! Positive factorizations and the moves that rewrite them.

mod json;
mod moves;

pub use json::{FactorizationDoc, CurveDoc};
pub use moves::{Context, Direction};

use crate::error::{Error, Result};
use crate::mcg::{Evaluator, Level, MappingClass, Twist, Verdict};
use crate::surface::{c_word, Curve, SurfaceKind};
use crate::words::Word;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    ElementaryLeft,
    ElementaryRight,
    SimultaneousConjugation,
    Substitution,
    PartialConjugation,
    CloseUp,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    pub kind: MoveKind,
    pub position: usize,
    pub relator: Option<String>,
    pub phi: Option<String>,
    /// `None` when no signature change is known for the move.
    pub sigma_delta: Option<i64>,
    pub cycle_delta: i64,
}

impl MoveRecord {
    pub fn neutral(kind: MoveKind, position: usize) -> Self {
        MoveRecord { kind, position, relator: None, phi: None, sigma_delta: Some(0), cycle_delta: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// The bordered surface carrying the words; `closed` marks its capped-off reading.
    pub surface: SurfaceKind,
    pub closed: bool,
    pub cycles: Vec<Curve>,
    /// Exponents of the boundary twists, ordered as [`boundary_curves`].
    pub boundary_exponents: Vec<i64>,
    pub base_sigma: Option<i64>,
    pub trace: Vec<MoveRecord>,
}

/// Boundary curves: `δ = c_g` on one boundary; `a_{g+1}`, `a'_{g+1}` on two.
pub fn boundary_curves(s: SurfaceKind) -> Vec<Curve> {
    let g = s.genus;
    match s.boundary {
        1 => vec![Curve::new(format!("a{}", g + 1), c_word(g))],
        2 => {
            let d = crate::surface::a(g + 1);
            vec![
                Curve::new(format!("a{}", g + 1), Word::gen(d)),
                Curve::new(format!("a'{}", g + 1), c_word(g).mul(&Word::gen(d))),
            ]
        }
        _ => vec![],
    }
}

impl Factorization {
    pub fn new(surface: SurfaceKind, cycles: Vec<Curve>, boundary_exponents: Vec<i64>) -> Result<Self> {
        if !surface.is_bordered() {
            return Err(Error::Surface("factorizations are carried by a bordered lift".into()));
        }
        if boundary_exponents.len() != surface.boundary as usize {
            return Err(Error::Dimension(boundary_exponents.len(), surface.boundary as usize));
        }
        let rank = surface.rank();
        for c in &cycles {
            if let Some(&l) = c.word.letters().iter().find(|l| l.unsigned_abs() as usize > rank) {
                return Err(Error::LetterOutOfRange { index: l.unsigned_abs(), rank });
            }
        }
        Ok(Factorization { surface, closed: false, cycles, boundary_exponents, base_sigma: None, trace: Vec::new() })
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn product(&self) -> MappingClass {
        MappingClass {
            surface: self.surface,
            twists: self.cycles.iter().map(|c| Twist { curve: c.clone(), exponent: 1 }).collect(),
        }
    }

    /// `product · ∏ t_δ^{-k}`, the identity exactly when the lift holds.
    pub fn lift_relator(&self) -> MappingClass {
        let mut m = self.product();
        for (d, &k) in boundary_curves(self.surface).into_iter().zip(&self.boundary_exponents) {
            if k != 0 {
                m.twists.push(Twist { curve: d, exponent: -(k as i32) });
            }
        }
        m
    }

    pub fn verify(&self, ev: &mut Evaluator, level: Level) -> Verdict {
        ev.is_identity(&self.lift_relator(), level)
    }

    /// Number of boundary components with exponent 1, i.e. (-1)-sections.
    pub fn sections(&self) -> usize {
        self.boundary_exponents.iter().filter(|&&k| k == 1).count()
    }

    pub fn same_cycles(&self, other: &Factorization) -> bool {
        self.cycles.len() == other.cycles.len()
            && self.cycles.iter().zip(&other.cycles).all(|(x, y)| x.same_as(y))
    }

    pub fn close_up(&self) -> Factorization {
        let mut f = self.clone();
        f.closed = true;
        f.trace.push(MoveRecord::neutral(MoveKind::CloseUp, 0));
        f
    }

    pub fn ledger_cycle_delta(&self) -> i64 {
        self.trace.iter().map(|m| m.cycle_delta).sum()
    }
}
