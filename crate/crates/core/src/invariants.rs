//! Numerical invariants of the total space of a Lefschetz fibration.

use crate::error::{Error, Result};
use crate::factorization::Factorization;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub num: i64,
    pub den: i64,
}

impl From<Ratio<i64>> for Rational {
    fn from(r: Ratio<i64>) -> Self {
        Rational { num: *r.numer(), den: *r.denom() }
    }
}

impl Rational {
    pub fn ratio(&self) -> Ratio<i64> {
        Ratio::new(self.num, self.den)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SigmaMethod {
    Hyperelliptic,
    SubstitutionLedger,
    Both,
    Unavailable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonholomorphicFlags {
    pub slope: Option<bool>,
    pub pi1_obstruction: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub genus: u32,
    pub n_cycles: usize,
    pub n_nonseparating: usize,
    /// Separating cycles keyed by the genus of the smaller side.
    pub separating: BTreeMap<u32, usize>,
    pub euler: i64,
    pub sigma: Option<i64>,
    pub sigma_method: SigmaMethod,
    pub k2: Option<i64>,
    pub chi_h: Option<i64>,
    pub lambda: Option<Rational>,
    pub slope_violation: Option<bool>,
    pub sections: usize,
    pub nonholomorphic_flags: NonholomorphicFlags,
}

pub fn euler(f: &Factorization) -> i64 {
    4 - 4 * f.surface.genus as i64 + f.cycles.len() as i64
}

fn closed_separating(f: &Factorization, i: usize) -> bool {
    let g = f.surface.genus as usize;
    f.surface.homology_of(&f.cycles[i].word).iter().take(2 * g).all(|&x| x == 0)
}

/// Counts of nonseparating cycles and of separating ones per genus split.
pub fn cycle_types(f: &Factorization) -> Result<(usize, BTreeMap<u32, usize>)> {
    let mut non = 0;
    let mut sep = BTreeMap::new();
    for (i, c) in f.cycles.iter().enumerate() {
        if !closed_separating(f, i) {
            non += 1;
            continue;
        }
        match c.split {
            Some(h) if h >= 1 => *sep.entry(h).or_insert(0) += 1,
            Some(_) => return Err(Error::Invariant(format!("cycle {i} ({}) is null-homotopic", c.label))),
            None => return Err(Error::Invariant(format!("cycle {i} ({}) is separating without split data", c.label))),
        }
    }
    Ok((non, sep))
}

/// `σ = -(g+1)/(2g+1)·n + Σ_h (4h(g-h)/(2g+1) - 1)·s_h`.
pub fn signature_hyperelliptic(f: &Factorization) -> Result<i64> {
    if let Some(c) = f.cycles.iter().find(|c| !c.hyperelliptic) {
        return Err(Error::Signature(format!("cycle {} is not known to be hyperelliptic", c.label)));
    }
    let g = f.surface.genus as i64;
    let (n, sep) = cycle_types(f)?;
    let mut s = Ratio::new(-(g + 1) * n as i64, 2 * g + 1);
    for (&h, &count) in &sep {
        let h = h as i64;
        s += (Ratio::new(4 * h * (g - h), 2 * g + 1) - 1) * count as i64;
    }
    if !s.is_integer() {
        return Err(Error::Signature(format!("non-integral value {s}")));
    }
    Ok(s.to_integer())
}

pub fn signature_ledger(f: &Factorization) -> Result<i64> {
    let mut s = f.base_sigma.ok_or_else(|| Error::Signature("no base signature recorded".into()))?;
    for (i, m) in f.trace.iter().enumerate() {
        match m.sigma_delta {
            Some(d) => s += d,
            None => {
                return Err(Error::Signature(format!(
                    "move {i} ({}) has no signature delta",
                    m.relator.as_deref().unwrap_or("?")
                )))
            }
        }
    }
    Ok(s)
}

/// `(K² - 8(g-1)(k-1)) / (χ_h - (g-1)(k-1))`.
pub fn slope(g: u32, k2: i64, chi_h: i64, base_genus: i64) -> Result<Ratio<i64>> {
    let t = (g as i64 - 1) * (base_genus - 1);
    let den = chi_h - t;
    if den == 0 {
        return Err(Error::Invariant("slope denominator vanishes".into()));
    }
    Ok(Ratio::new(k2 - 8 * t, den))
}

pub fn slope_bound(g: u32) -> Ratio<i64> {
    Ratio::from_integer(4) - Ratio::new(4, g as i64)
}

pub fn report(f: &Factorization, pi1_obstruction: Option<bool>) -> Result<InvariantReport> {
    let g = f.surface.genus;
    let (n_non, sep) = cycle_types(f)?;
    let e = euler(f);
    let hyp = signature_hyperelliptic(f).ok();
    let led = signature_ledger(f).ok();
    let (sigma, method) = match (hyp, led) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::Signature(format!("hyperelliptic {a} vs ledger {b}")));
        }
        (Some(a), Some(_)) => (Some(a), SigmaMethod::Both),
        (Some(a), None) => (Some(a), SigmaMethod::Hyperelliptic),
        (None, Some(b)) => (Some(b), SigmaMethod::SubstitutionLedger),
        (None, None) => (None, SigmaMethod::Unavailable),
    };
    let (mut k2, mut chi_h, mut lambda, mut violation) = (None, None, None, None);
    if let Some(s) = sigma {
        if (s + e) % 4 != 0 {
            return Err(Error::Invariant(format!("σ + e = {} is not divisible by 4", s + e)));
        }
        let k = 3 * s + 2 * e;
        let chi = (s + e) / 4;
        let l = slope(g, k, chi, 0)?;
        k2 = Some(k);
        chi_h = Some(chi);
        lambda = Some(l.into());
        violation = Some(l < slope_bound(g));
    }
    Ok(InvariantReport {
        genus: g,
        n_cycles: f.cycles.len(),
        n_nonseparating: n_non,
        separating: sep,
        euler: e,
        sigma,
        sigma_method: method,
        k2,
        chi_h,
        lambda,
        slope_violation: violation,
        sections: f.sections(),
        nonholomorphic_flags: NonholomorphicFlags { slope: violation, pi1_obstruction },
    })
}

/// Whether `H_1` of the total space has the shape `Z ⊕ Z_n`; `None` without a section.
pub fn pi1_obstruction(f: &Factorization) -> Result<Option<bool>> {
    if f.sections() == 0 {
        return Ok(None);
    }
    let ab = crate::fpgroups::abelianization(&crate::fpgroups::pi1_total_space(f)?);
    Ok(Some(ab.free_rank == 1 && ab.torsion.len() <= 1))
}
