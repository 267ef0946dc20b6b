use monodromy::constructions::{build_first_family, build_second_family};
use monodromy::factorization::{Context, Factorization};
use monodromy::fpgroups::*;
use monodromy::surface::{c_word, SurfaceKind};
use monodromy::words::{Alphabet, Word};
use proptest::prelude::*;

fn ab2() -> Alphabet {
    Alphabet::new(vec!["a".into(), "b".into()]).unwrap()
}

fn pres(text: &str) -> Presentation {
    Presentation::from_text(text).unwrap()
}

#[test]
fn abelianization_of_cyclic_times_z() {
    for n in 2..7 {
        let p = pres(&format!("gens: a b\nrel: a^{n}\nrel: a b a^-1 b^-1\n"));
        assert_eq!(abelianization(&p), AbelianInvariants { free_rank: 1, torsion: vec![n] });
    }
    let p = pres("gens: a b\nrel: a^4 b^6\nrel: a^6 b^4\n");
    assert_eq!(abelianization(&p), AbelianInvariants { free_rank: 0, torsion: vec![2, 10] });
}

#[test]
fn text_round_trip() {
    let p = Presentation::new(ab2(), vec![Word::reduce(&[1, 1, -2]), Word::reduce(&[2, 1, -2, -1])]).unwrap();
    let text = p.to_text();
    assert_eq!(text, "gens: a b\nrel: a a b^-1\nrel: b a b^-1 a^-1\n");
    assert_eq!(Presentation::from_text(&text).unwrap(), p);
    assert!(Presentation::from_text("rel: a\n").is_err());
    assert!(Presentation::from_text("gens: a\nrel: c\n").is_err());
}

#[test]
fn tietze_drops_a_killed_generator() {
    let s = tietze_simplify(&pres("gens: a b\nrel: b\n"), 1000);
    assert_eq!(s.presentation.to_text(), "gens: a\n");
    assert!(!s.exhausted);
    assert!(matches!(s.log[0], TietzeMove::Eliminate { ref generator, .. } if generator == "b"));
}

#[test]
fn todd_coxeter_small_groups() {
    assert_eq!(todd_coxeter(&pres("gens: a\nrel: a^5\n"), 1000), Enumeration::FiniteOrder(5));
    let s3 = pres("gens: a b\nrel: a^2\nrel: b^3\nrel: a b a b\n");
    assert_eq!(todd_coxeter(&s3, 1000), Enumeration::FiniteOrder(6));
    let q8 = pres("gens: a b\nrel: a^4\nrel: a^2 b^-2\nrel: a b a b^-1\n");
    assert_eq!(todd_coxeter(&q8, 1000), Enumeration::FiniteOrder(8));
    assert!(matches!(todd_coxeter(&pres("gens: a b\nrel: a b a^-1 b^-1\n"), 500), Enumeration::Inconclusive { .. }));
}

#[test]
fn empty_factorization_gives_surface_group() {
    let s = SurfaceKind::new(3, 1).unwrap();
    let p = pi1_total_space(&Factorization::new(s, vec![], vec![1]).unwrap()).unwrap();
    assert_eq!(p.relators, vec![c_word(3)]);
    assert_eq!(abelianization(&p).free_rank, 6);
    assert!(pi1_total_space(&Factorization::new(s, vec![], vec![0]).unwrap()).is_err());
}

#[test]
fn chain_presentation_is_trivial() {
    let mut ctx = Context::new(SurfaceKind::new(3, 1).unwrap()).unwrap();
    let mut f = monodromy::constructions::chain_factorization(&ctx).unwrap();
    f.boundary_exponents = vec![1];
    let p = pi1_total_space(&f).unwrap();
    assert!(p.relators.contains(&Word::gen(1)) && p.relators.contains(&Word::gen(2)));
    assert!(abelianization(&p).is_trivial());
    let _ = &mut ctx;
}

#[test]
fn first_family_group_is_trivial() {
    for g in [3, 4] {
        let mut ctx = Context::new(SurfaceKind::new(g, 1).unwrap()).unwrap();
        let f = build_first_family(&mut ctx).unwrap().final_factorization().clone();
        let p = pi1_total_space(&f).unwrap();
        assert!(abelianization(&p).is_trivial());
        assert_eq!(todd_coxeter(&p, DEFAULT_MAX_COSETS), Enumeration::FiniteOrder(1));
        let s = tietze_simplify(&p, 100_000);
        assert_eq!(s.presentation.generators.rank(), 0);
    }
}

fn second_family(g: u32, n: u32) -> Factorization {
    let mut ctx = Context::new(SurfaceKind::new(g, 2).unwrap()).unwrap();
    build_second_family(&mut ctx, n).unwrap().final_factorization().clone()
}

#[test]
fn second_family_group_is_infinite() {
    let p = pi1_total_space(&second_family(4, 2)).unwrap();
    assert!(matches!(todd_coxeter(&p, 2000), Enumeration::Inconclusive { .. }));
}

#[test]
fn second_family_quotient_certificate() {
    let p = pi1_total_space(&second_family(4, 3)).unwrap();
    assert_eq!(abelianization(&p), z_plus_zn(3));
    let imgs = second_family_quotient_images(&p, 4, 3).unwrap();
    assert_eq!(imgs[0], vec![0, 1]);
    assert_eq!(imgs[1], vec![1, 0]);
    assert!(verify_quotient_map(&p, &z_plus_zn(3), &imgs).unwrap());
    assert!(second_family_certificate(&p, 4, 3).unwrap());
    // every generator onto the torsion generator
    let wrong = vec![vec![0, 1]; p.generators.rank()];
    assert!(!verify_quotient_map(&p, &z_plus_zn(3), &wrong).unwrap());
    assert!(verify_quotient_map(&p, &z_plus_zn(3), &[vec![0, 1]]).is_err());
}

#[test]
fn surface_relator_dies_in_any_abelian_quotient() {
    let s = SurfaceKind::new(3, 0).unwrap();
    let p = Presentation::new(s.alphabet(), vec![s.surface_relator()]).unwrap();
    let target = AbelianInvariants { free_rank: 2, torsion: vec![5] };
    let imgs: Vec<Vec<i64>> = (0..6).map(|i| vec![i * 3 - 7, 2 - i, i * i]).collect();
    assert!(verify_quotient_map(&p, &target, &imgs).unwrap());
}

#[test]
fn g1_stage_genus4() {
    let st = second_family_group_stages(&second_family(4, 2), 2).unwrap();
    let g1 = &st[0];
    assert_eq!(g1.presentation.generators.rank(), 8);
    assert_eq!(g1.abelian, AbelianInvariants { free_rank: 4, torsion: vec![] });
    assert_eq!(g1.simplified.presentation.generators.names(), ["a1", "b1", "a2", "b2"]);
    assert_eq!(g1.simplified.presentation.relators.len(), 1);
    assert!(st.iter().all(|s| s.target_met));
}

#[test]
fn g3_stage_genus8() {
    let st = second_family_group_stages(&second_family(8, 2), 2).unwrap();
    let g3 = &st[2].simplified.presentation;
    assert_eq!(g3.generators.names(), ["a2", "b2"]);
    let a2 = Word::gen(1).pow(2);
    let comm = Word::reduce(&[1, 2, -1, -2]);
    assert_eq!(g3.relators.len(), 2);
    assert!(g3.relators.iter().any(|r| monodromy::words::same_curve(r, &a2)));
    assert!(g3.relators.iter().any(|r| monodromy::words::same_curve(r, &comm)));
    assert!(st.iter().all(|s| s.target_met));
}

#[test]
fn h1_separates_the_family() {
    let invs: Vec<_> = (1..=4).map(|n| abelianization(&pi1_total_space(&second_family(5, n)).unwrap())).collect();
    for i in 0..invs.len() {
        for j in 0..i {
            assert_ne!(invs[i], invs[j]);
        }
    }
}

fn small_word() -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(prop_oneof![1..=3i32, -3..=-1i32], 0..8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tietze_preserves_abelianization(rels in prop::collection::vec(small_word(), 0..4)) {
        let al = Alphabet::new(vec!["x".into(), "y".into(), "z".into()]).unwrap();
        let p = Presentation::new(al, rels.iter().map(|r| Word::reduce(r)).collect()).unwrap();
        let s = tietze_simplify(&p, 10_000);
        prop_assert_eq!(abelianization(&s.presentation), abelianization(&p));
    }

    #[test]
    fn finite_order_is_a_multiple_of_h1(rels in prop::collection::vec(small_word(), 2..5)) {
        let al = Alphabet::new(vec!["x".into(), "y".into()]).unwrap();
        let rels: Vec<Word> = rels.iter().map(|r| Word::reduce(&r.iter().map(|l| if l.abs() == 3 { l.signum() } else { *l }).collect::<Vec<_>>())).collect();
        let p = Presentation::new(al, rels).unwrap();
        if let Enumeration::FiniteOrder(k) = todd_coxeter(&p, 5000) {
            let ab = abelianization(&p);
            prop_assert_eq!(ab.free_rank, 0);
            let order: u64 = ab.torsion.iter().product();
            prop_assert_eq!(k as u64 % order, 0);
        }
    }
}
