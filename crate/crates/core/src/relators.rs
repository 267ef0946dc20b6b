//! Relators: signed twist words equal to the identity, split into a
//! positive part `v_1..v_k` and a negative part `d_1..d_l` so that
//! `t_{v_1}..t_{v_k} = t_{d_1}..t_{d_l}`.

use crate::error::{Error, Result};
use crate::mcg::{Evaluator, Level, MappingClass, Twist, Verdict};
use crate::surface::{Curve, CurveCatalog, SurfaceKind};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelatorKind {
    Braid,
    Lantern,
    ChainEven(u32),
    ChainOdd(u32),
    W(u32, u32),
    Mck(u32),
    Derived(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidKind {
    Disjoint,
    Once,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub kind: RelatorKind,
    pub surface: SurfaceKind,
    pub positive: Vec<Curve>,
    /// The subword `d_1..d_l` that a substitution replaces.
    pub negative: Vec<Curve>,
    pub sigma_delta: Option<i64>,
    pub inverted: bool,
}

impl Relator {
    /// `t_{v_1}..t_{v_k} t_{d_l}^-1 .. t_{d_1}^-1`.
    pub fn word(&self) -> MappingClass {
        let mut twists: Vec<Twist> =
            self.positive.iter().map(|c| Twist { curve: c.clone(), exponent: 1 }).collect();
        twists.extend(self.negative.iter().rev().map(|c| Twist { curve: c.clone(), exponent: -1 }));
        MappingClass { surface: self.surface, twists }
    }

    pub fn inverse(&self) -> Relator {
        Relator {
            kind: self.kind.clone(),
            surface: self.surface,
            positive: self.negative.clone(),
            negative: self.positive.clone(),
            sigma_delta: self.sigma_delta.map(|d| -d),
            inverted: !self.inverted,
        }
    }

    pub fn tag(&self) -> String {
        let base = match &self.kind {
            RelatorKind::Braid => "B".to_string(),
            RelatorKind::Lantern => "L".to_string(),
            RelatorKind::ChainEven(h) => format!("C_{}", 2 * h),
            RelatorKind::ChainOdd(h) => format!("C_{}", 2 * h + 1),
            RelatorKind::W(s, h) => format!("W_{{{s},{h}}}"),
            RelatorKind::Mck(g) => format!("MCK_{g}"),
            RelatorKind::Derived(t) => t.clone(),
        };
        if self.inverted {
            format!("{base}^-1")
        } else {
            base
        }
    }

    pub fn verify(&self, ev: &mut Evaluator, level: Level) -> Verdict {
        ev.is_identity(&self.word(), level)
    }

    /// Verifies at the requested level and rejects a refutation.
    pub fn checked(self, ev: &mut Evaluator, level: Level) -> Result<Relator> {
        match self.verify(ev, level) {
            v if v.is_refuted() => Err(Error::Relator(format!("{} refuted", self.tag()))),
            _ => Ok(self),
        }
    }
}

fn pairing(s: SurfaceKind, x: &Curve, y: &Curve) -> i64 {
    crate::surface::intersection(&s.homology_of(&x.word), &s.homology_of(&y.word)).unwrap_or(0)
}

pub fn braid(s: SurfaceKind, alpha: Curve, beta: Curve, kind: BraidKind) -> Result<Relator> {
    let p = pairing(s, &alpha, &beta).abs();
    let (positive, negative) = match kind {
        BraidKind::Disjoint if p == 0 => (vec![alpha.clone(), beta.clone()], vec![beta, alpha]),
        BraidKind::Once if p == 1 => {
            (vec![alpha.clone(), beta.clone(), alpha.clone()], vec![beta.clone(), alpha, beta])
        }
        _ => return Err(Error::Relator(format!("pair {}/{} has pairing {p}", alpha.label, beta.label))),
    };
    Ok(Relator { kind: RelatorKind::Braid, surface: s, positive, negative, sigma_delta: Some(0), inverted: false })
}

fn check_chain(s: SurfaceKind, curves: &[Curve]) -> Result<()> {
    for i in 0..curves.len() {
        for j in i + 1..curves.len() {
            let want = if j == i + 1 { 1 } else { 0 };
            if pairing(s, &curves[i], &curves[j]).abs() != want {
                return Err(Error::Relator(format!(
                    "chain pattern fails at {}, {}",
                    curves[i].label, curves[j].label
                )));
            }
        }
    }
    Ok(())
}

fn closed_nontrivial(s: SurfaceKind, c: &Curve) -> bool {
    s.homology_of(&c.word).iter().take(2 * s.genus as usize).any(|&x| x != 0)
}

/// `(t_{α_1}..t_{α_m})^{e} = t_{d_1}(t_{d_2})` with `e = 4h+2` for `m = 2h`
/// and `e = 2h+2` for `m = 2h+1`.
pub fn chain(s: SurfaceKind, curves: Vec<Curve>, boundary: Vec<Curve>) -> Result<Relator> {
    check_chain(s, &curves)?;
    let m = curves.len() as u32;
    let h = m / 2;
    let (kind, exp, sigma) = if m.is_multiple_of(2) {
        if boundary.len() != 1 {
            return Err(Error::Relator("even chain needs one boundary curve".into()));
        }
        (RelatorKind::ChainEven(h), 4 * h + 2, None)
    } else {
        if boundary.len() != 2 {
            return Err(Error::Relator("odd chain needs two boundary curves".into()));
        }
        let d = 2 * h as i64 * (h as i64 + 2);
        let sigma = boundary.iter().all(|c| closed_nontrivial(s, c)).then_some(d);
        (RelatorKind::ChainOdd(h), 2 * h + 2, sigma)
    };
    let mut positive = Vec::new();
    for _ in 0..exp {
        positive.extend(curves.iter().cloned());
    }
    Ok(Relator { kind, surface: s, positive, negative: boundary, sigma_delta: sigma, inverted: false })
}

/// `t_{e1} t_{a2} t_{e2} = t_{A3} t_{A5} t_{a3} t_{A1}`; `boundary` is given
/// in the displayed order `A1, a3, A5, A3` of the inverted factors.
pub fn lantern(s: SurfaceKind, interior: [Curve; 3], boundary: [Curve; 4]) -> Relator {
    let mut negative = boundary.to_vec();
    negative.reverse();
    Relator {
        kind: RelatorKind::Lantern,
        surface: s,
        positive: interior.to_vec(),
        negative,
        sigma_delta: Some(1),
        inverted: false,
    }
}

/// The lantern on the chain A1, A3, A5 with interior a2, e1, e2.
pub fn catalog_lantern(cat: &CurveCatalog) -> Result<Relator> {
    let c = |n: &str| cat.curve(n);
    Ok(lantern(cat.surface(), [c("e1")?, c("a2")?, c("e2")?], [c("A1")?, c("a3")?, c("A5")?, c("A3")?]))
}

/// Chain relators built from the A-curves of a catalog.
pub fn catalog_chain(cat: &CurveCatalog, m: u32) -> Result<Relator> {
    let curves = (1..=m).map(|i| cat.curve(&format!("A{i}"))).collect::<Result<Vec<_>>>()?;
    let h = m / 2;
    let boundary = if m.is_multiple_of(2) {
        vec![cat.curve(&format!("c{h}"))?]
    } else {
        vec![cat.curve(&format!("a{}", h + 1))?, cat.curve(&format!("a'{}", h + 1))?]
    };
    chain(cat.surface(), curves, boundary)
}

/// One block `B_{0,s} B_1 .. B_h X` of a W relator.
pub fn w_block(cat: &CurveCatalog, s: u32, h: u32) -> Result<Vec<Curve>> {
    let mut out = vec![cat.curve(&format!("B^{h}_0,{s}"))?];
    for i in 1..=h {
        out.push(cat.curve(&format!("B^{h}_{i}"))?);
    }
    out.extend(w_tail(cat, h)?);
    Ok(out)
}

/// `c_r` for `h = 2r`, `a_{r+1}^2 a'_{r+1}^2` for `h = 2r+1`.
pub fn w_tail(cat: &CurveCatalog, h: u32) -> Result<Vec<Curve>> {
    let r = h / 2;
    Ok(if h.is_multiple_of(2) {
        vec![cat.curve(&format!("c{r}"))?]
    } else {
        let (x, y) = (cat.curve(&format!("a{}", r + 1))?, cat.curve(&format!("a'{}", r + 1))?);
        vec![x.clone(), x, y.clone(), y]
    })
}

pub fn w_relator(cat: &CurveCatalog, s: u32, h: u32) -> Result<Relator> {
    let sk = cat.surface();
    if sk.boundary != 2 {
        return Err(Error::Surface("W relators live on the two-boundary surface".into()));
    }
    if !(1..=2).contains(&s) || h == 0 || h > sk.genus || sk.genus < 2 {
        return Err(Error::Relator(format!("W_{{{s},{h}}} out of range for genus {}", sk.genus)));
    }
    let block = w_block(cat, s, h)?;
    let mut positive = block.clone();
    positive.extend(block);
    let negative = if s == 1 {
        vec![cat.curve(&format!("c{h}"))?]
    } else {
        vec![cat.curve(&format!("a{}", h + 1))?, cat.curve(&format!("a'{}", h + 1))?]
    };
    Ok(Relator { kind: RelatorKind::W(s, h), surface: sk, positive, negative, sigma_delta: None, inverted: false })
}

/// W_{2,g}, whose closed-surface image is the positive relator of genus g.
pub fn mck(cat: &CurveCatalog) -> Result<Relator> {
    let g = cat.surface().genus;
    let mut r = w_relator(cat, 2, g)?;
    r.kind = RelatorKind::Mck(g);
    Ok(r)
}
