use super::braid_words::{rewrite, BraidOp};
use super::{psi, PipelineReport, Stage};
use crate::error::{Error, Result};
use crate::factorization::{Context, Direction, Factorization};
use crate::invariants;
use crate::mcg::MappingClass;
use crate::relators;

/// `C_{2g} = (t_{A_1}..t_{A_{2g}})^{4g+2}` on the one-boundary surface, with its signature.
pub fn chain_factorization(ctx: &Context) -> Result<Factorization> {
    let g = ctx.surface().genus;
    let r = relators::catalog_chain(&ctx.catalog, 2 * g)?;
    let mut f = Factorization::new(ctx.surface(), r.positive, vec![1])?;
    f.base_sigma = invariants::signature_hyperelliptic(&f).ok();
    Ok(f)
}

pub fn psi_catalog(ctx: &Context) -> Result<[MappingClass; 3]> {
    if ctx.surface().genus < 3 {
        return Err(Error::GenusTooSmall { genus: ctx.surface().genus, what: "ψ maps" });
    }
    Ok([
        ctx.catalog.mapping_class(&psi::PSI1)?,
        ctx.catalog.mapping_class(&psi::PSI2)?,
        ctx.catalog.mapping_class(&psi::PSI3)?,
    ])
}

fn replay(ctx: &mut Context, f: &mut Factorization, offset: usize, ops: &[BraidOp]) -> Result<()> {
    for &op in ops {
        match op {
            BraidOp::Commute(k) => ctx.elementary_in_place(f, offset + k, Direction::Right)?,
            BraidOp::Braid(k) => {
                ctx.elementary_in_place(f, offset + k + 1, Direction::Right)?;
                ctx.elementary_in_place(f, offset + k, Direction::Right)?;
            }
        }
    }
    Ok(())
}

fn expect_slots(ctx: &Context, f: &Factorization, names: &[String], stage: &str) -> Result<()> {
    if f.len() != names.len() {
        return Err(Error::Stage { stage: stage.into(), reason: format!("{} slots, expected {}", f.len(), names.len()) });
    }
    for (i, n) in names.iter().enumerate() {
        if !f.cycles[i].same_as(&ctx.catalog.get(n)?.curve) {
            return Err(Error::Stage { stage: stage.into(), reason: format!("slot {i} is not {n}") });
        }
    }
    Ok(())
}

/// Rewrites both halves of `C_{2g}` by braid moves into
/// `{(t_{A_1}..t_{A_{2g-1}})^{2g} t_{A_{2g}}..t_{A_1} t_{A_1}..t_{A_{2g}}}^2`.
pub fn rearrange_chain(ctx: &mut Context) -> Result<Factorization> {
    let g = ctx.surface().genus;
    if g < 2 {
        return Err(Error::GenusTooSmall { genus: g, what: "the chain rearrangement" });
    }
    let n = 2 * g;
    let src: Vec<u32> = (0..=n).flat_map(|_| 1..=n).collect();
    let mut tgt: Vec<u32> = (0..n).flat_map(|_| 1..n).collect();
    tgt.extend((1..=n).rev());
    tgt.extend(1..=n);
    let ops = rewrite(&src, &tgt)?;
    let mut f = chain_factorization(ctx)?;
    let half = src.len();
    replay(ctx, &mut f, 0, &ops)?;
    replay(ctx, &mut f, half, &ops)?;
    let names: Vec<String> = tgt.iter().chain(tgt.iter()).map(|i| format!("A{i}")).collect();
    expect_slots(ctx, &f, &names, "C'_2g")?;
    for (c, name) in f.cycles.iter_mut().zip(&names) {
        c.label = name.clone();
    }
    Ok(f)
}

fn position(f: &Factorization, from: usize, name: &str, ctx: &Context) -> Result<usize> {
    let c = ctx.catalog.curve(name)?;
    (from..f.len())
        .find(|&i| f.cycles[i].same_as(&c))
        .ok_or_else(|| Error::Stage { stage: "H''".into(), reason: format!("no {name} after slot {from}") })
}

fn stage(ctx: &mut Context, stages: &mut Vec<Stage>, name: &str, f: Factorization) -> Result<()> {
    let v = ctx.verify(&f);
    if !v.holds_at_l1() {
        return Err(Error::Stage { stage: name.into(), reason: format!("{v:?}") });
    }
    stages.push(Stage { name: name.into(), factorization: f });
    Ok(())
}

/// The genus-g family Î with one (-1)-section.
pub fn build_first_family(ctx: &mut Context) -> Result<PipelineReport> {
    let g = ctx.surface().genus;
    if g < 3 {
        return Err(Error::GenusTooSmall { genus: g, what: "the first family" });
    }
    if ctx.surface().boundary != 1 {
        return Err(Error::Surface("the first family is built on the one-boundary surface".into()));
    }
    let mut stages = Vec::new();
    let c2g = chain_factorization(ctx)?;
    stage(ctx, &mut stages, "C_2g", c2g)?;
    let cp = rearrange_chain(ctx)?;
    stage(ctx, &mut stages, "C'_2g", cp.clone())?;

    let odd = relators::catalog_chain(&ctx.catalog, 2 * g - 1)?;
    let id = MappingClass::identity(ctx.surface());
    let block = ((2 * g - 1) * 2 * g) as usize;
    let q = 4 * g as usize;
    let mut h = ctx.substitute(&cp, 0, &odd.inverse(), &id, "1")?;
    h = ctx.substitute(&h, 2 + q, &odd.inverse(), &id, "1")?;
    stage(ctx, &mut stages, "H", h.clone())?;

    let [psi1, psi2, psi3] = psi_catalog(ctx)?;
    let hp = ctx.partial_conjugation(&h, &[2..2 + q, 4 + q..4 + 2 * q], &psi1, "psi1")?;
    stage(ctx, &mut stages, "H^psi1", hp.clone())?;

    let mut h1 = ctx.substitute(&hp, 0, &odd, &psi2, "psi2")?;
    h1 = ctx.substitute(&h1, block + q, &odd, &psi3, "psi3")?;
    stage(ctx, &mut stages, "H'", h1.clone())?;

    // collect e1 (last block-1 copy), a2 (first in block 1's ψ1 part) and e2 (first of block 2) at the right end
    let n = h1.len();
    let e2 = position(&h1, block + q, "e2", ctx)?;
    let mut h2 = ctx.push_to(&h1, e2, n - 1)?;
    let a2 = position(&h2, block, "a2", ctx)?;
    h2 = ctx.push_to(&h2, a2, n - 2)?;
    let e1 = (0..block)
        .rev()
        .find(|&i| h2.cycles[i].same_as(&ctx.catalog.curve("e1").unwrap()))
        .ok_or_else(|| Error::Stage { stage: "H''".into(), reason: "no e1 in block 1".into() })?;
    h2 = ctx.push_to(&h2, e1, n - 3)?;
    stage(ctx, &mut stages, "H''", h2.clone())?;

    let lantern = relators::catalog_lantern(&ctx.catalog)?;
    let i = ctx.substitute(&h2, n - 3, &lantern.inverse(), &id, "1")?;
    stage(ctx, &mut stages, "I", i.clone())?;
    let closed = i.close_up();
    stage(ctx, &mut stages, "I^", closed)?;
    Ok(PipelineReport { name: format!("first family g={g}"), stages })
}
