use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Diagonal of the Smith normal form of an `m × d` matrix, and the column
/// transform `V` (so that `U·M·V` is diagonal for some unimodular `U`).
pub struct Smith {
    pub diagonal: Vec<BigInt>,
    pub v: Vec<Vec<BigInt>>,
}

pub fn smith(rows: &[Vec<i64>], d: usize) -> Smith {
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let m = a.len();
    let mut v: Vec<Vec<BigInt>> =
        (0..d).map(|i| (0..d).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let mut t = 0;
    while t < m.min(d) {
        // pivot: least nonzero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..d {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        swap_cols(&mut a, &mut v, t, pj);
        loop {
            let mut done = true;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..d {
                        let x = &a[t][j] * &q;
                        a[i][j] -= x;
                    }
                    if !a[i][t].is_zero() {
                        a.swap(t, i);
                        done = false;
                    }
                }
            }
            for j in t + 1..d {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    add_col(&mut a, &mut v, j, t, &-q);
                    if !a[t][j].is_zero() {
                        swap_cols(&mut a, &mut v, t, j);
                        done = false;
                    }
                }
            }
            if done {
                // divisibility: fold a non-divisible entry into the pivot row
                let bad = (t + 1..m).find_map(|i| (t + 1..d).find(|&j| !(&a[i][j] % &a[t][t]).is_zero()).map(|j| (i, j)));
                match bad {
                    Some((i, _)) => {
                        for j in t..d {
                            let x = a[i][j].clone();
                            a[t][j] += x;
                        }
                    }
                    None => break,
                }
            }
        }
        if a[t][t].is_negative() {
            for j in t..d {
                a[t][j] = -a[t][j].clone();
            }
        }
        t += 1;
    }
    let diagonal = (0..d).map(|i| if i < m { a[i][i].clone() } else { BigInt::zero() }).collect();
    Smith { diagonal, v }
}

fn swap_cols(a: &mut [Vec<BigInt>], v: &mut [Vec<BigInt>], x: usize, y: usize) {
    for r in a.iter_mut() {
        r.swap(x, y);
    }
    for r in v.iter_mut() {
        r.swap(x, y);
    }
}

// column j += q · column k
fn add_col(a: &mut [Vec<BigInt>], v: &mut [Vec<BigInt>], j: usize, k: usize, q: &BigInt) {
    for r in a.iter_mut().chain(v.iter_mut()) {
        let x = &r[k] * q;
        r[j] += x;
    }
}
