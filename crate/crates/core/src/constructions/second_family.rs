use super::{PipelineReport, Stage};
use crate::error::{Error, Result};
use crate::factorization::{Context, Direction, Factorization};
use crate::mcg::MappingClass;
use crate::relators;

/// Twist word of φ_n: with `[g/2] = 2k` it is `t_{a_1}..t_{a_{k-1}} t_{a_k}^n t_{b_{k+2}}..t_{b_{2k}}`,
/// with `[g/2] = 2k+1` it is `t_{a_1}..t_{a_{k-1}} t_{a_k}^n t_{b_{k+3}}..t_{b_{2k+1}}`.
pub fn phi_n_twists(g: u32, n: u32) -> Result<Vec<(String, i32)>> {
    if g < 4 {
        return Err(Error::GenusTooSmall { genus: g, what: "φ_n" });
    }
    if n == 0 {
        return Err(Error::Relator("φ_n needs n ≥ 1".into()));
    }
    let t = g / 2;
    let k = t / 2;
    let mut out: Vec<(String, i32)> = (1..k).map(|i| (format!("a{i}"), 1)).collect();
    out.push((format!("a{k}"), n as i32));
    let (lo, hi) = if t.is_multiple_of(2) { (k + 2, 2 * k) } else { (k + 3, 2 * k + 1) };
    out.extend((lo..=hi).map(|i| (format!("b{i}"), 1)));
    Ok(out)
}

pub fn phi_n(ctx: &Context, n: u32) -> Result<MappingClass> {
    let tw = phi_n_twists(ctx.surface().genus, n)?;
    let refs: Vec<(&str, i32)> = tw.iter().map(|(s, e)| (s.as_str(), *e)).collect();
    ctx.catalog.mapping_class(&refs)
}

fn stage(ctx: &mut Context, stages: &mut Vec<Stage>, name: &str, f: Factorization) -> Result<()> {
    let v = ctx.verify(&f);
    if !v.holds_at_l1() {
        return Err(Error::Stage { stage: name.into(), reason: format!("{v:?}") });
    }
    stages.push(Stage { name: name.into(), factorization: f });
    Ok(())
}

/// Displayed U_n: `(B^g_{0,2} B^g_1..B^g_g V) (B^g_{0,2} B^g_1..B^g_g V^{φ_n})`, with
/// `V = V_1` for even g and `V = V_2 t_{a_{r+1}} t_{a'_{r+1}}` for odd g.
fn displayed(ctx: &mut Context, phi: &MappingClass) -> Result<Vec<crate::surface::Curve>> {
    let g = ctx.surface().genus;
    let r = g / 2;
    let cat = &ctx.catalog;
    let mut head = vec![cat.curve(&format!("B^{g}_0,2"))?];
    for i in 1..=g {
        head.push(cat.curve(&format!("B^{g}_{i}"))?);
    }
    let s = if g.is_multiple_of(2) { 1 } else { 2 };
    let v = relators::w_relator(cat, s, r)?.positive;
    let tail = if g.is_multiple_of(2) {
        vec![]
    } else {
        vec![cat.curve(&format!("a{}", r + 1))?, cat.curve(&format!("a'{}", r + 1))?]
    };
    let mut out = head.clone();
    out.extend(v.iter().cloned());
    out.extend(tail.iter().cloned());
    out.extend(head);
    for c in &v {
        out.push(ctx.ev.apply_curve(phi, c, String::new())?);
    }
    out.extend(tail);
    Ok(out)
}

/// The genus-g family Û_n with two disjoint (-1)-sections.
pub fn build_second_family(ctx: &mut Context, n: u32) -> Result<PipelineReport> {
    let g = ctx.surface().genus;
    if g < 4 {
        return Err(Error::GenusTooSmall { genus: g, what: "the second family" });
    }
    if ctx.surface().boundary != 2 {
        return Err(Error::Surface("the second family is built on the two-boundary surface".into()));
    }
    let phi = phi_n(ctx, n)?;
    let r = g / 2;
    let mut stages = Vec::new();
    let w2 = relators::w_relator(&ctx.catalog, 2, g)?;
    let base = Factorization::new(ctx.surface(), w2.positive.clone(), vec![1, 1])?;
    stage(ctx, &mut stages, "W_2^g", base.clone())?;

    let head = g as usize + 1;
    let id = MappingClass::identity(ctx.surface());
    let tag = format!("phi_{n}");
    let u = if g.is_multiple_of(2) {
        let w1 = relators::w_relator(&ctx.catalog, 1, r)?;
        let block = head + 1;
        // second block first so the first block's slots stay put
        let f = ctx.substitute(&base, block + head, &w1, &phi, &tag)?;
        ctx.substitute(&f, head, &w1, &id, "1")?
    } else {
        let w2r = relators::w_relator(&ctx.catalog, 2, r)?;
        let block = head + 4;
        // a a a' a' -> a a' a a' in both blocks, then substitute the leading pair
        let mut f = ctx.elementary(&base, block + head + 1, Direction::Right)?;
        f = ctx.elementary(&f, head + 1, Direction::Right)?;
        f = ctx.substitute(&f, block + head, &w2r, &phi, &tag)?;
        ctx.substitute(&f, head, &w2r, &id, "1")?
    };
    let want = displayed(ctx, &phi)?;
    if u.len() != want.len() || !u.cycles.iter().zip(&want).all(|(x, y)| x.same_as(y)) {
        return Err(Error::Stage { stage: "U_n".into(), reason: "substitution result differs from the display".into() });
    }
    stage(ctx, &mut stages, "U_n", u.clone())?;
    stage(ctx, &mut stages, "U_n^", u.close_up())?;
    Ok(PipelineReport { name: format!("second family g={g} n={n}"), stages })
}
