use super::{abelianization, abelianization_map, tietze_simplify_keeping, verify_quotient_map, AbelianElement,
    AbelianInvariants, Presentation, TietzeResult};
use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::surface::SurfaceKind;
use crate::words::{same_curve, Word};

pub const STAGE_BUDGET: usize = 200_000;

#[derive(Clone, Debug)]
pub struct GroupStage {
    pub name: &'static str,
    pub presentation: Presentation,
    pub simplified: TietzeResult,
    pub abelian: AbelianInvariants,
    /// Whether the simplified presentation has the expected shape.
    pub target_met: bool,
    pub target: String,
}

/// `(G_1, G_2, G_3)` for Û_n: the closed surface group modulo the head
/// curves, then the untwisted block, then its φ_n image.
pub fn second_family_group_stages(f: &Factorization, n: u32) -> Result<Vec<GroupStage>> {
    let g = f.surface.genus;
    if g < 4 || !f.len().is_multiple_of(2) {
        return Err(Error::Stage { stage: "G".into(), reason: "not a second-family factorization".into() });
    }
    let r = g / 2;
    let t = r / 2;
    let half = f.len() / 2;
    let head = g as usize + 1;
    let tail = if g.is_multiple_of(2) { 0 } else { 2 };
    let words: Vec<Word> = f.cycles.iter().map(|c| closed_word(g, &c.word)).collect();
    let mut g1: Vec<Word> = words[..head].to_vec();
    g1.extend_from_slice(&words[half - tail..half]);
    let block = &words[head..half - tail];
    let twisted = &words[half + head..f.len() - tail];

    let closed = SurfaceKind::new(g, 0)?;
    let mut rels = vec![closed.surface_relator()];
    let mut out = Vec::new();
    let specs: [(&'static str, &[Word], u32); 3] = [("G1", &g1, r), ("G2", block, t), ("G3", twisted, 0)];
    for (name, extra, genus) in specs {
        rels.extend_from_slice(extra);
        let p = Presentation::new(closed.alphabet(), rels.clone())?;
        let (keep, target): (Vec<String>, String) = if name == "G3" {
            (vec![format!("a{t}"), format!("b{t}")], format!("<a{t}, b{t} | a{t}^{n}, [a{t}, b{t}]>"))
        } else {
            ((1..=genus).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect(), format!("pi1 of the genus-{genus} surface"))
        };
        let keep_refs: Vec<&str> = keep.iter().map(String::as_str).collect();
        let simplified = tietze_simplify_keeping(&p, STAGE_BUDGET, &keep_refs);
        let abelian = abelianization(&p);
        let target_met = if name == "G3" {
            is_cyclic_times_z(&simplified.presentation, n) && abelian == z_plus_zn(n)
        } else {
            is_surface_group(&simplified.presentation, genus)
                && abelian == AbelianInvariants { free_rank: 2 * genus as usize, torsion: vec![] }
        };
        out.push(GroupStage { name, presentation: p, simplified, abelian, target_met, target });
    }
    Ok(out)
}

fn closed_word(g: u32, w: &Word) -> Word {
    let rank = 2 * g as i32;
    Word::reduce(&w.letters().iter().copied().filter(|l| l.abs() <= rank).collect::<Vec<_>>())
}

pub fn z_plus_zn(n: u32) -> AbelianInvariants {
    AbelianInvariants { free_rank: 1, torsion: if n > 1 { vec![n as u64] } else { vec![] } }
}

/// One orientable quadratic relator in `2·genus` generators.
fn is_surface_group(p: &Presentation, genus: u32) -> bool {
    let d = 2 * genus as usize;
    if p.generators.rank() != d {
        return false;
    }
    if genus == 0 {
        return p.relators.is_empty();
    }
    if p.relators.len() != 1 {
        return false;
    }
    let r = &p.relators[0];
    r.len() == 2 * d
        && (1..=d as i32).all(|x| {
            r.letters().iter().filter(|&&l| l == x).count() == 1 && r.letters().iter().filter(|&&l| l == -x).count() == 1
        })
}

/// Exactly `<a, b | a^n, [a, b]>`, or `<b | >` when `n = 1`.
fn is_cyclic_times_z(p: &Presentation, n: u32) -> bool {
    if n == 1 {
        return p.generators.rank() == 1 && p.relators.is_empty();
    }
    if p.generators.rank() != 2 || p.relators.len() != 2 {
        return false;
    }
    let power = Word::gen(1).pow(n as i32);
    let comm = Word::reduce(&[1, 2, -1, -2]);
    let has = |w: &Word| p.relators.iter().any(|r| same_curve(r, w));
    has(&power) && has(&comm)
}

/// Images of the generators in `Z ⊕ Z_n` with `a_t ↦ (0, 1)` and
/// `b_t ↦ (1, 0)`, the rest read off the Smith transform.
pub fn second_family_quotient_images(p: &Presentation, g: u32, n: u32) -> Result<Vec<AbelianElement>> {
    let (ab, imgs) = abelianization_map(p);
    if ab != z_plus_zn(n) {
        return Err(Error::Invariant(format!("abelianization is {ab}, expected {}", z_plus_zn(n))));
    }
    let t = (g / 2 / 2) as usize;
    let (ia, ib) = (2 * t - 2, 2 * t - 1);
    let n = n as i64;
    let (za, zb) = (imgs[ia][0], imgs[ib][0]);
    if za != 0 || zb.abs() != 1 {
        return Err(Error::Invariant("a_t, b_t do not split the free factor".into()));
    }
    let eps = zb;
    if n == 1 {
        return Ok(imgs.iter().map(|v| vec![eps * v[0]]).collect());
    }
    let u = mod_inverse(imgs[ia][1], n).ok_or_else(|| Error::Invariant("a_t does not generate the torsion".into()))?;
    let k = (-u * imgs[ib][1] * eps).rem_euclid(n);
    Ok(imgs.iter().map(|v| vec![eps * v[0], (u * v[1] + k * v[0]).rem_euclid(n)]).collect())
}

fn mod_inverse(a: i64, n: i64) -> Option<i64> {
    (1..n).find(|&u| (u * a).rem_euclid(n) == 1)
}

/// The full certificate: the assignment above kills every relator.
pub fn second_family_certificate(p: &Presentation, g: u32, n: u32) -> Result<bool> {
    let imgs = second_family_quotient_images(p, g, n)?;
    verify_quotient_map(p, &z_plus_zn(n), &imgs)
}

