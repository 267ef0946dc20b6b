//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use monodromy::constructions::{build_first_family, build_second_family, chain_factorization};
use monodromy::factorization::{Context, Direction, Factorization};
use monodromy::fpgroups::{self, Enumeration};
use monodromy::invariants::{self, SigmaMethod};
use monodromy::mcg::Level;
use monodromy::relators::{self, BraidKind, Relator};
use monodromy::surface::SurfaceKind;
use num_rational::Ratio;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::Instant;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn first_family(g: u32) -> Result<(Context, Factorization), String> {
    let mut ctx = Context::new(SurfaceKind::new(g, 1).map_err(err)?).map_err(err)?;
    ctx.level = Level::L1;
    let f = build_first_family(&mut ctx).map_err(err)?.final_factorization().clone();
    Ok((ctx, f))
}

fn criterion1() -> Check {
    for g in 3u32..=8 {
        let (mut ctx, f) = first_family(g)?;
        let gi = g as i64;
        let r = invariants::report(&f, None).map_err(err)?;
        let ledger = invariants::signature_ledger(&f).map_err(err)?;
        let want_lambda = Ratio::from_integer(4) - Ratio::new(4, gi) - Ratio::new(1, gi * gi);
        ensure(f.len() as i64 == 2 * gi * (4 * gi + 2) + 1, || format!("g={g}: {} cycles", f.len()))?;
        ensure(r.euler == 8 * gi * gi + 5, || format!("g={g}: e = {}", r.euler))?;
        ensure(ledger == -4 * gi * (gi + 1) - 1, || format!("g={g}: ledger σ = {ledger}"))?;
        ensure(r.sigma == Some(ledger), || format!("g={g}: reported σ {:?}", r.sigma))?;
        ensure(r.lambda.map(|l| l.ratio()) == Some(want_lambda), || format!("g={g}: λ = {:?}", r.lambda))?;
        ensure(r.slope_violation == Some(true), || format!("g={g}: no slope violation"))?;
        ensure(ctx.verify(&f).is_verified_at(Level::L1), || format!("g={g}: not verified at L1"))?;
        if g == 3 {
            ctx.level = Level::L2;
            let v = ctx.verify(&f);
            ensure(v.is_verified_at(Level::L2), || format!("g=3: L2 verdict {v:?}"))?;
        }
    }
    Ok("g=3..8 closed forms exact; L2 verified at g=3".into())
}

fn criterion2() -> Check {
    for g in 2u32..=8 {
        let ctx = Context::new(SurfaceKind::new(g, 1).map_err(err)?).map_err(err)?;
        let f = chain_factorization(&ctx).map_err(err)?;
        let s = invariants::signature_hyperelliptic(&f).map_err(err)?;
        let gi = g as i64;
        ensure(s == -4 * gi * (gi + 1), || format!("g={g}: σ(C_2g) = {s}"))?;
    }
    let mut ctx = Context::new(SurfaceKind::new(2, 2).map_err(err)?).map_err(err)?;
    let r = relators::mck(&ctx.catalog).map_err(err)?;
    let f = Factorization::new(ctx.surface(), r.positive, vec![1, 1]).map_err(err)?;
    ensure(ctx.verify(&f).is_verified_at(Level::L2), || "genus-2 relator does not verify".into())?;
    let s = invariants::signature_hyperelliptic(&f).map_err(err)?;
    ensure(s == -4, || format!("genus-2 relator σ = {s}"))?;
    Ok("σ(C_2g) = -4g(g+1) for g=2..8; genus-2 relator σ = -4".into())
}

fn relator_holds(ctx: &mut Context, r: &Relator, level: Level) -> Result<(), String> {
    let v = r.verify(&mut ctx.ev, level);
    ensure(v.is_verified_at(level), || format!("{} on genus {}: {v:?}", r.tag(), ctx.surface().genus))
}

fn criterion3() -> Check {
    let mut count = 0;
    for g in [3u32, 4] {
        for b in [1u32, 2] {
            let mut ctx = Context::new(SurfaceKind::new(g, b).map_err(err)?).map_err(err)?;
            let c = |n: &str| ctx.catalog.curve(n).map_err(err);
            let s = ctx.surface();
            let mut rels = vec![
                relators::braid(s, c("a1")?, c("b1")?, BraidKind::Once).map_err(err)?,
                relators::braid(s, c("a1")?, c("a2")?, BraidKind::Disjoint).map_err(err)?,
                relators::catalog_lantern(&ctx.catalog).map_err(err)?,
            ];
            for m in 2..=4 {
                rels.push(relators::catalog_chain(&ctx.catalog, m).map_err(err)?);
            }
            for r in &rels {
                relator_holds(&mut ctx, r, Level::L2)?;
                count += 1;
            }
        }
    }
    // W relators are defined from genus 2 on
    for g in 2u32..=6 {
        let mut ctx = Context::new(SurfaceKind::new(g, 2).map_err(err)?).map_err(err)?;
        for h in 1..=g {
            for s in [1, 2] {
                let r = relators::w_relator(&ctx.catalog, s, h).map_err(err)?;
                relator_holds(&mut ctx, &r, Level::L1)?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} relators verified (braids, chains, lantern at L2; W at L1)"))
}

fn criterion4() -> Check {
    for g in [4u32, 5] {
        let mut seen = Vec::new();
        for n in 1u32..=5 {
            let t = Instant::now();
            let mut ctx = Context::new(SurfaceKind::new(g, 2).map_err(err)?).map_err(err)?;
            ctx.level = Level::L1;
            let f = build_second_family(&mut ctx, n).map_err(err)?.final_factorization().clone();
            ensure(f.boundary_exponents == vec![1, 1] && f.sections() == 2, || format!("g={g} n={n}: sections"))?;
            ensure(ctx.verify(&f).is_verified_at(Level::L1), || format!("g={g} n={n}: not verified"))?;
            let p = fpgroups::pi1_total_space(&f).map_err(err)?;
            let ab = fpgroups::abelianization(&p);
            ensure(ab == fpgroups::z_plus_zn(n), || format!("g={g} n={n}: H1 = {ab}"))?;
            ensure(fpgroups::second_family_certificate(&p, g, n).map_err(err)?, || format!("g={g} n={n}: certificate"))?;
            ensure(!seen.contains(&ab), || format!("g={g}: H1 repeats at n={n}"))?;
            seen.push(ab);
            ensure(t.elapsed().as_secs() < 30, || format!("g={g} n={n}: too slow"))?;
        }
    }
    Ok("g=4,5, n=1..5: two sections, H1 = Z + Z_n, certificate passes, H1 pairwise distinct".into())
}

fn criterion5() -> Check {
    for g in [3u32, 4] {
        let (_, f) = first_family(g)?;
        let p = fpgroups::pi1_total_space(&f).map_err(err)?;
        let e = fpgroups::todd_coxeter(&p, fpgroups::DEFAULT_MAX_COSETS);
        ensure(e == Enumeration::FiniteOrder(1), || format!("g={g}: {e:?}"))?;
    }
    Ok("coset enumeration gives order 1 for g=3,4".into())
}

fn criterion6() -> Check {
    let kinds = common::moves::random_moves(1000, 0x5eed)?;
    let total: usize = kinds.values().sum();
    ensure(total == 1000, || format!("{total} moves ran"))?;
    let summary: Vec<String> = kinds.iter().map(|(k, v)| format!("{k} {v}")).collect();
    Ok(format!("1000 random moves ({})", summary.join(", ")))
}

fn criterion7() -> Check {
    let mut rng = StdRng::seed_from_u64(11);
    let mut checked = 0;
    for g in 2u32..=5 {
        let mut ctx = Context::new(SurfaceKind::new(g, 1).map_err(err)?).map_err(err)?;
        ctx.level = Level::L1;
        let mut f = chain_factorization(&ctx).map_err(err)?;
        for step in 0..=30 {
            let r = invariants::report(&f, None).map_err(err)?;
            ensure(r.sigma_method == SigmaMethod::Both, || format!("g={g} step {step}: {:?}", r.sigma_method))?;
            let (h, l) = (invariants::signature_hyperelliptic(&f).map_err(err)?, invariants::signature_ledger(&f).map_err(err)?);
            ensure(h == l, || format!("g={g} step {step}: {h} vs {l}"))?;
            checked += 1;
            let i = rng.gen_range(0..f.len() - 1);
            let dir = if rng.gen_bool(0.5) { Direction::Left } else { Direction::Right };
            f = ctx.elementary(&f, i, dir).map_err(err)?;
        }
    }
    Ok(format!("{checked} factorizations with both methods agree"))
}

type Criterion = (&'static str, fn() -> Check);

fn main() {
    let criteria: [Criterion; 7] = [
        ("first family closed forms", criterion1),
        ("base signature oracle", criterion2),
        ("relator suite", criterion3),
        ("second family", criterion4),
        ("fundamental group triviality", criterion5),
        ("move calculus properties", criterion6),
        ("signature cross-method agreement", criterion7),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (tag, detail) = match check() {
            Ok(d) => ("PASS", d),
            Err(e) => {
                failed += 1;
                ("FAIL", e)
            }
        };
        println!("criterion {}: {tag} {name}: {detail} [{:.2}s]", i + 1, t.elapsed().as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 7 acceptance criteria passed");
}
