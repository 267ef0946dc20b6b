use monodromy::constructions::{build_first_family, build_second_family, chain_factorization, phi_n_twists};
use monodromy::factorization::{Context, Direction, Factorization};
use monodromy::invariants::{self, SigmaMethod};
use monodromy::mcg::Level;
use monodromy::relators;
use monodromy::surface::SurfaceKind;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn chain_signature_closed_form() {
    for g in 2u32..=8 {
        let ctx = Context::new(SurfaceKind::new(g, 1).unwrap()).unwrap();
        let f = chain_factorization(&ctx).unwrap();
        let gi = g as i64;
        assert_eq!(f.len() as i64, 2 * gi * (4 * gi + 2));
        assert_eq!(invariants::signature_hyperelliptic(&f).unwrap(), -4 * gi * (gi + 1));
        let r = invariants::report(&f, None).unwrap();
        assert_eq!(r.euler, 8 * gi * gi + 4);
        assert_eq!(r.sigma_method, SigmaMethod::Both);
    }
    let ctx = Context::new(SurfaceKind::new(3, 1).unwrap()).unwrap();
    let r = invariants::report(&chain_factorization(&ctx).unwrap(), None).unwrap();
    assert_eq!((r.sigma, r.euler), (Some(-48), 76));
}

#[test]
fn genus2_positive_relator_signature() {
    let mut ctx = Context::new(SurfaceKind::new(2, 2).unwrap()).unwrap();
    let r = relators::mck(&ctx.catalog).unwrap();
    let f = Factorization::new(ctx.surface(), r.positive.clone(), vec![1, 1]).unwrap();
    assert!(ctx.verify(&f).is_verified_at(Level::L2));
    let (non, sep) = invariants::cycle_types(&f).unwrap();
    assert_eq!((non, sep.get(&1).copied()), (6, Some(2)));
    assert_eq!(invariants::signature_hyperelliptic(&f).unwrap(), -4);
    assert_eq!(invariants::euler(&f), 4);
}

#[test]
fn signature_methods_agree_after_moves() {
    let mut rng = StdRng::seed_from_u64(7);
    for g in 2u32..=4 {
        let mut ctx = Context::new(SurfaceKind::new(g, 1).unwrap()).unwrap();
        ctx.level = Level::L1;
        let mut f = chain_factorization(&ctx).unwrap();
        for _ in 0..40 {
            let i = rng.gen_range(0..f.len() - 1);
            let dir = if rng.gen_bool(0.5) { Direction::Left } else { Direction::Right };
            f = ctx.elementary(&f, i, dir).unwrap();
            let r = invariants::report(&f, None).unwrap();
            assert_eq!(r.sigma_method, SigmaMethod::Both);
            assert_eq!(invariants::signature_hyperelliptic(&f).unwrap(), invariants::signature_ledger(&f).unwrap());
        }
    }
}

#[test]
fn mismatching_methods_are_an_error() {
    let ctx = Context::new(SurfaceKind::new(2, 1).unwrap()).unwrap();
    let mut f = chain_factorization(&ctx).unwrap();
    f.base_sigma = Some(-23);
    assert!(invariants::report(&f, None).is_err());
}

#[test]
fn slope_values() {
    assert_eq!(invariants::slope_bound(3), num_rational::Ratio::new(8, 3));
    let l = invariants::slope(3, 7, 7, 0).unwrap();
    assert_eq!(l, num_rational::Ratio::new(23, 9));
}

#[test]
fn phi_n_words() {
    let tw = |g, n| phi_n_twists(g, n).unwrap();
    assert_eq!(tw(8, 2), vec![("a1".into(), 1), ("a2".into(), 2), ("b4".into(), 1)]);
    for n in 1..5 {
        assert_eq!(tw(4, n), vec![("a1".to_string(), n as i32)]);
        assert_eq!(tw(5, n), vec![("a1".to_string(), n as i32)]);
    }
    assert_eq!(tw(12, 1), vec![("a1".into(), 1), ("a2".into(), 1), ("a3".into(), 1), ("b5".into(), 1), ("b6".into(), 1)]);
    assert!(phi_n_twists(3, 1).is_err());
    assert!(phi_n_twists(4, 0).is_err());
}

#[test]
fn second_family_reports() {
    for (g, n) in [(4, 1), (5, 3)] {
        let mut ctx = Context::new(SurfaceKind::new(g, 2).unwrap()).unwrap();
        let f = build_second_family(&mut ctx, n).unwrap().final_factorization().clone();
        let r = invariants::report(&f, Some(true)).unwrap();
        assert_eq!(r.sections, 2);
        assert_eq!(r.euler, 4 - 4 * g as i64 + f.len() as i64);
        assert_eq!(r.nonholomorphic_flags.pi1_obstruction, Some(true));
    }
}

#[test]
fn json_round_trip_is_stable() {
    let mut ctx = Context::new(SurfaceKind::new(3, 1).unwrap()).unwrap();
    let f = build_first_family(&mut ctx).unwrap().final_factorization().clone();
    let text = f.to_json();
    let back = Factorization::from_json(&text).unwrap();
    assert!(back.same_cycles(&f));
    assert_eq!(back.to_json(), text);
    assert_eq!(invariants::report(&back, None).unwrap(), invariants::report(&f, None).unwrap());
    let mut ctx2 = Context::new(SurfaceKind::new(3, 1).unwrap()).unwrap();
    let again = build_first_family(&mut ctx2).unwrap().final_factorization().to_json();
    assert_eq!(again, text);
    assert!(Factorization::from_json(&text.replace("monodromy/1", "monodromy/0")).is_err());
    assert!(Factorization::from_json(&text.replacen("\"genus\"", "\"extra\": 1, \"genus\"", 1)).is_err());
}
