//! Bordered and closed surfaces, their π1 models and homology.

mod catalog;
mod ribbon;

pub use catalog::{CurveCatalog, CurveSpec, Realization};
pub use ribbon::{RibbonModel, TwistAction};

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};
use serde::{Deserialize, Serialize};

/// A named curve given by a π1 word, with the metadata the invariants need.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    pub label: String,
    pub word: Word,
    /// Genus split when the curve is separating.
    pub split: Option<u32>,
    pub hyperelliptic: bool,
}

impl Curve {
    pub fn new(label: impl Into<String>, word: Word) -> Self {
        Curve { label: label.into(), word: word.cyclically_reduce(), split: None, hyperelliptic: false }
    }

    pub fn same_as(&self, other: &Curve) -> bool {
        crate::words::same_curve(&self.word, &other.word)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceKind {
    pub genus: u32,
    pub boundary: u32,
}

/// Integer coordinates over `[a1, b1, ..., ag, bg (, a{g+1})]`.
pub type HomologyClass = Vec<i64>;

impl SurfaceKind {
    pub fn new(genus: u32, boundary: u32) -> Result<Self> {
        if genus == 0 {
            return Err(Error::GenusTooSmall { genus, what: "any surface" });
        }
        if boundary > 2 {
            return Err(Error::Surface(format!("{boundary} boundary components")));
        }
        Ok(SurfaceKind { genus, boundary })
    }

    pub fn rank(&self) -> usize {
        2 * self.genus as usize + self.boundary.saturating_sub(1) as usize
    }

    pub fn is_bordered(&self) -> bool {
        self.boundary > 0
    }

    pub fn alphabet(&self) -> Alphabet {
        let g = self.genus;
        let mut names = Vec::new();
        for i in 1..=g {
            names.push(format!("a{i}"));
            names.push(format!("b{i}"));
        }
        if self.boundary == 2 {
            names.push(format!("a{}", g + 1));
        }
        Alphabet::new(names).expect("generator names are distinct")
    }

    /// Boundary words of the cut-disk model; empty for closed surfaces.
    pub fn boundary_words(&self) -> Vec<Word> {
        let cg = c_word(self.genus);
        match self.boundary {
            1 => vec![cg],
            2 => {
                let d = a(self.genus + 1);
                vec![cg.mul(&Word::gen(d)), Word::gen(-d)]
            }
            _ => vec![],
        }
    }

    /// The surface relator `c_g` of the closed one-relator presentation.
    pub fn surface_relator(&self) -> Word {
        c_word(self.genus)
    }

    pub fn homology_of(&self, w: &Word) -> HomologyClass {
        w.abelianize(self.rank())
    }

    pub fn intersection(&self, x: &[i64], y: &[i64]) -> Result<i64> {
        intersection(x, y)
    }

    pub fn ribbon(&self) -> Result<RibbonModel> {
        RibbonModel::new(*self)
    }
}

pub fn a(i: u32) -> Letter {
    2 * i as Letter - 1
}

pub fn b(i: u32) -> Letter {
    2 * i as Letter
}

/// `c_i = b_i^-1 ... b_1^-1 (a_1 b_1 a_1^-1) ... (a_i b_i a_i^-1)`; `c_0` is trivial.
pub fn c_word(i: u32) -> Word {
    let mut raw = Vec::new();
    for j in (1..=i).rev() {
        raw.push(-b(j));
    }
    for j in 1..=i {
        raw.extend([a(j), b(j), -a(j)]);
    }
    Word::reduce(&raw)
}

/// Algebraic intersection with `<a_i, b_i> = 1`; a trailing odd coordinate pairs trivially.
pub fn intersection(x: &[i64], y: &[i64]) -> Result<i64> {
    if x.len() != y.len() {
        return Err(Error::Dimension(x.len(), y.len()));
    }
    let mut s = 0;
    for i in 0..x.len() / 2 {
        s += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i];
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relator_is_null_homologous() {
        for g in 1..6 {
            let s = SurfaceKind::new(g, 1).unwrap();
            assert!(s.homology_of(&c_word(g)).iter().all(|&x| x == 0));
        }
    }
}
