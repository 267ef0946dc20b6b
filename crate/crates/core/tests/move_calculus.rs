mod common;

use common::moves::{random_moves, Bench};

#[test]
fn random_moves_preserve_product_and_bookkeeping() {
    let kinds = random_moves(1000, 0x5eed).unwrap();
    assert_eq!(kinds.values().sum::<usize>(), 1000);
    assert!(kinds["Substitution"] > 50);
    assert!(kinds["SimultaneousConjugation"] > 50);
}

#[test]
fn other_seeds() {
    for seed in 1..4 {
        random_moves(300, seed).unwrap();
    }
}

#[test]
fn known_deltas() {
    let b = Bench::new();
    // C_3: (A1 A2 A3)^4 = t_{a2} t_{a'2}
    assert_eq!(b.fixed[1].positive.len(), 12);
    assert_eq!(b.fixed[1].sigma_delta, Some(6));
    assert_eq!(b.fixed[0].sigma_delta, Some(-6));
    assert_eq!(b.fixed[3].sigma_delta, Some(1));
    assert_eq!(b.fixed[2].sigma_delta, Some(-1));
}
