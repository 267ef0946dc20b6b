use monodromy::factorization::{Context, Direction, Factorization, MoveKind};
use monodromy::invariants::{euler, signature_ledger};
use monodromy::mcg::{Level, MappingClass};
use monodromy::relators::{self, BraidKind, Relator};
use monodromy::surface::{Curve, SurfaceKind};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;

const MAX_LETTERS: usize = 2500;

pub struct Bench {
    ctx: Context,
    pub fixed: Vec<Relator>,
    twisters: Vec<Curve>,
}

impl Bench {
    pub fn new() -> Bench {
        let mut ctx = Context::new(SurfaceKind::new(3, 1).unwrap()).unwrap();
        ctx.level = Level::L1;
        let c3 = relators::catalog_chain(&ctx.catalog, 3).unwrap();
        let lantern = relators::catalog_lantern(&ctx.catalog).unwrap();
        let fixed = vec![c3.inverse(), c3, lantern.inverse(), lantern];
        let twisters = ["a1", "b1", "a2", "b2", "a3", "b3", "A3", "A5"].iter().map(|n| ctx.catalog.curve(n).unwrap()).collect();
        Bench { ctx, fixed, twisters }
    }

    fn start(&self, rng: &mut StdRng) -> Factorization {
        let c = |n: &str| self.ctx.catalog.curve(n).unwrap();
        let mut cycles = vec![c("a2"), c("a'2")];
        cycles.extend(self.fixed[3].negative.iter().cloned());
        for _ in 0..4 {
            cycles.insert(rng.gen_range(0..=cycles.len()), self.twisters[rng.gen_range(0..self.twisters.len())].clone());
        }
        let mut f = Factorization::new(self.ctx.surface(), cycles, vec![0]).unwrap();
        f.base_sigma = Some(0);
        f
    }

    /// Every `(position, relator)` whose negative part sits in `f`.
    fn substitutions(&self, f: &Factorization) -> Vec<(usize, Relator)> {
        let s = f.surface;
        let mut out = Vec::new();
        for at in 0..f.len() {
            for r in &self.fixed {
                let l = r.negative.len();
                if at + l <= f.len() && r.negative.iter().zip(&f.cycles[at..]).all(|(d, c)| d.same_as(c)) {
                    out.push((at, r.clone()));
                }
            }
            if at + 1 < f.len() {
                let (x, y) = (f.cycles[at].clone(), f.cycles[at + 1].clone());
                if let Ok(r) = relators::braid(s, y.clone(), x.clone(), BraidKind::Disjoint) {
                    out.push((at, r));
                }
                if at + 2 < f.len() && f.cycles[at + 2].same_as(&x) {
                    if let Ok(r) = relators::braid(s, y, x, BraidKind::Once) {
                        out.push((at, r));
                    }
                }
            }
        }
        out
    }
}

fn letters(f: &Factorization) -> usize {
    f.cycles.iter().map(|c| c.word.len()).sum()
}

/// Runs `moves` random moves from fresh starts, checking the product,
/// `e` and the signature ledger after each one. Returns move counts by kind.
pub fn random_moves(moves: usize, seed: u64) -> Result<BTreeMap<String, usize>, String> {
    let mut b = Bench::new();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut done = 0;
    let mut kinds = BTreeMap::new();
    while done < moves {
        let mut f = b.start(&mut rng);
        let mut product = b.ctx.ev.evaluate_l1(&f.product());
        let mut sigma = 0i64;
        while done < moves && letters(&f) < MAX_LETTERS {
            let before = f.clone();
            let roll = rng.gen_range(0..10);
            let (next, delta) = if roll < 5 && f.len() > 1 {
                let i = rng.gen_range(0..f.len() - 1);
                let dir = if rng.gen_bool(0.5) { Direction::Left } else { Direction::Right };
                (b.ctx.elementary(&f, i, dir).map_err(|e| e.to_string())?, 0)
            } else if roll < 7 {
                let c = b.twisters[rng.gen_range(0..b.twisters.len())].clone();
                let e = if rng.gen_bool(0.5) { 1 } else { -1 };
                let phi = MappingClass::twist(f.surface, c, e);
                // the product is carried to φ P φ^-1
                product = b.ctx.ev.evaluate_l1(&phi).mul(&product).mul(&b.ctx.ev.evaluate_l1(&phi.inverse()));
                (b.ctx.simultaneous_conjugation(&f, &phi, "t").map_err(|e| e.to_string())?, 0)
            } else {
                let subs = b.substitutions(&f);
                if subs.is_empty() {
                    continue;
                }
                let (at, r) = &subs[rng.gen_range(0..subs.len())];
                let id = MappingClass::identity(f.surface);
                let delta = r.sigma_delta.ok_or("relator without a signature delta")?;
                (b.ctx.substitute(&f, *at, r, &id, "1").map_err(|e| e.to_string())?, delta)
            };
            sigma += delta;
            f = next;
            done += 1;
            let last = f.trace.last().unwrap();
            *kinds.entry(format!("{:?}", last.kind)).or_insert(0) += 1;
            let grown = f.len() as i64 - before.len() as i64;
            let checks = [
                (b.ctx.ev.evaluate_l1(&f.product()) == product, "product changed"),
                (euler(&f) - euler(&before) == grown, "euler characteristic drifted"),
                (last.cycle_delta == grown, "recorded cycle delta is wrong"),
                (last.kind == MoveKind::Substitution || grown == 0, "a length-preserving move changed the length"),
                (signature_ledger(&f).ok() == Some(sigma), "signature ledger drifted"),
                (f.trace.len() == before.trace.len() + 1, "trace did not grow by one"),
            ];
            if let Some((_, what)) = checks.iter().find(|(ok, _)| !ok) {
                return Err(format!("{what} after move {done}"));
            }
        }
    }
    Ok(kinds)
}

