//! Finitely presented groups: total-space π1, abelianization, Tietze
//! simplification, coset enumeration and abelian quotient certificates.

mod snf;
mod stages;
mod tietze;
mod todd_coxeter;

pub use snf::{smith, Smith};
pub use stages::{second_family_certificate, second_family_group_stages, second_family_quotient_images, z_plus_zn, GroupStage, STAGE_BUDGET};
pub use tietze::{tietze_simplify, tietze_simplify_keeping, TietzeMove, TietzeResult};
pub use todd_coxeter::{todd_coxeter, Enumeration};

use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::words::{Alphabet, Word};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub const DEFAULT_MAX_COSETS: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Alphabet,
    pub relators: Vec<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = (0..self.free_rank).map(|_| "Z".to_string()).collect();
        parts.extend(self.torsion.iter().map(|d| format!("Z_{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl Presentation {
    pub fn new(generators: Alphabet, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            generators.check(r)?;
        }
        Ok(Presentation { generators, relators })
    }

    /// `gens: a1 b1 ...` followed by one `rel: <word>` line per relator.
    pub fn to_text(&self) -> String {
        let mut s = format!("gens: {}\n", self.generators.names().join(" "));
        for r in &self.relators {
            s.push_str(&format!("rel: {}\n", if r.is_empty() { "1".into() } else { self.generators.format(r) }));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut gens: Option<Alphabet> = None;
        let mut rels = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(rest) = line.strip_prefix("gens:") {
                gens = Some(Alphabet::new(rest.split_whitespace().map(String::from).collect())?);
            } else if let Some(rest) = line.strip_prefix("rel:") {
                let al = gens.as_ref().ok_or_else(|| Error::Parse("relator before gens line".into()))?;
                rels.push(al.parse(rest)?);
            } else {
                return Err(Error::Parse(line.to_string()));
            }
        }
        let generators = gens.ok_or_else(|| Error::Parse("missing gens line".into()))?;
        Presentation::new(generators, rels)
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }
}

/// `⟨a_1, b_1, ..., a_g, b_g | c_g, v_1, ..., v_n⟩` with `a_{g+1} = 1`.
pub fn pi1_total_space(f: &Factorization) -> Result<Presentation> {
    if f.sections() == 0 {
        return Err(Error::NoSection);
    }
    let g = f.surface.genus;
    let closed = crate::surface::SurfaceKind::new(g, 0)?;
    let rank = 2 * g as i32;
    let mut rels = vec![closed.surface_relator()];
    for c in &f.cycles {
        let kept: Vec<i32> = c.word.letters().iter().copied().filter(|l| l.abs() <= rank).collect();
        rels.push(Word::reduce(&kept));
    }
    Presentation::new(closed.alphabet(), rels)
}

pub fn relation_matrix(p: &Presentation) -> Vec<Vec<i64>> {
    p.relators.iter().map(|r| r.abelianize(p.generators.rank())).collect()
}

pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    let d = p.generators.rank();
    let s = smith(&relation_matrix(p), d);
    let mut free_rank = 0;
    let mut torsion = Vec::new();
    for x in &s.diagonal {
        if x.is_zero() {
            free_rank += 1;
        } else if x.abs() > 1.into() {
            torsion.push(x.abs().to_u64().expect("torsion coefficient fits in u64"));
        }
    }
    AbelianInvariants { free_rank, torsion }
}

/// Element of `Z^r ⊕ Z_{d_1} ⊕ ...`: free coordinates first.
pub type AbelianElement = Vec<i64>;

/// Whether `generator i ↦ images[i]` kills every relator.
pub fn verify_quotient_map(p: &Presentation, target: &AbelianInvariants, images: &[AbelianElement]) -> Result<bool> {
    let dim = target.free_rank + target.torsion.len();
    if images.len() != p.generators.rank() || images.iter().any(|v| v.len() != dim) {
        return Err(Error::Dimension(images.len(), p.generators.rank()));
    }
    for r in &p.relators {
        let mut acc = vec![0i64; dim];
        for &l in r.letters() {
            let img = &images[l.unsigned_abs() as usize - 1];
            for k in 0..dim {
                acc[k] += l.signum() as i64 * img[k];
            }
        }
        for (k, x) in acc.iter().enumerate() {
            let zero = if k < target.free_rank { *x == 0 } else { x.rem_euclid(target.torsion[k - target.free_rank] as i64) == 0 };
            if !zero {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Generator images of the abelianization map read off the Smith column transform.
pub fn abelianization_map(p: &Presentation) -> (AbelianInvariants, Vec<AbelianElement>) {
    let d = p.generators.rank();
    let s = smith(&relation_matrix(p), d);
    let mut free = Vec::new();
    let mut tors = Vec::new();
    for (i, x) in s.diagonal.iter().enumerate() {
        if x.is_zero() {
            free.push(i);
        } else if x.abs() > 1.into() {
            tors.push((i, x.abs().to_i64().expect("torsion fits")));
        }
    }
    let images = (0..d)
        .map(|j| {
            let mut e: Vec<i64> = free.iter().map(|&i| to_i64(&s.v[j][i])).collect();
            e.extend(tors.iter().map(|&(i, m)| to_i64(&s.v[j][i]).rem_euclid(m)));
            e
        })
        .collect();
    let inv = AbelianInvariants { free_rank: free.len(), torsion: tors.iter().map(|&(_, m)| m as u64).collect() };
    (inv, images)
}

fn to_i64(x: &num_bigint::BigInt) -> i64 {
    x.to_i64().expect("transform entry fits in i64")
}
