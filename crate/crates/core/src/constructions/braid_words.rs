//! Rewriting between equal positive braid words by commutations and braid moves.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidOp {
    /// `σ_i σ_j -> σ_j σ_i` at this position, `|i - j| ≥ 2`.
    Commute(usize),
    /// `σ_i σ_j σ_i -> σ_j σ_i σ_j` at this position, `|i - j| = 1`.
    Braid(usize),
}

/// A sequence of relation applications turning `src` into `tgt`, found by
/// pulling each target letter to the front of the remaining suffix.
pub fn rewrite(src: &[u32], tgt: &[u32]) -> Result<Vec<BraidOp>> {
    if src.len() != tgt.len() {
        return Err(Error::Stage { stage: "braid rewrite".into(), reason: "length mismatch".into() });
    }
    let mut w = src.to_vec();
    let mut ops = Vec::new();
    for (k, &s) in tgt.iter().enumerate() {
        extract(&mut w, k, s, &mut ops)?;
    }
    Ok(ops)
}

fn extract(w: &mut Vec<u32>, k: usize, s: u32, ops: &mut Vec<BraidOp>) -> Result<()> {
    let t = *w.get(k).ok_or_else(|| Error::Stage {
        stage: "braid rewrite".into(),
        reason: format!("σ{s} does not divide the suffix"),
    })?;
    if t == s {
        return Ok(());
    }
    extract(w, k + 1, s, ops)?;
    if t.abs_diff(s) >= 2 {
        w.swap(k, k + 1);
        ops.push(BraidOp::Commute(k));
    } else {
        extract(w, k + 2, t, ops)?;
        debug_assert_eq!(&w[k..k + 3], &[t, s, t]);
        w[k] = s;
        w[k + 1] = t;
        w[k + 2] = s;
        ops.push(BraidOp::Braid(k));
    }
    Ok(())
}

pub fn apply(w: &mut [u32], op: BraidOp) {
    match op {
        BraidOp::Commute(k) => w.swap(k, k + 1),
        BraidOp::Braid(k) => {
            let (a, b) = (w[k], w[k + 1]);
            w[k] = b;
            w[k + 1] = a;
            w[k + 2] = b;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_twist_decomposition() {
        for n in [2u32, 4, 6] {
            let src: Vec<u32> = (0..n + 1).flat_map(|_| 1..=n).collect();
            let mut tgt: Vec<u32> = (0..n).flat_map(|_| 1..n).collect();
            tgt.extend((1..=n).rev());
            tgt.extend(1..=n);
            let ops = rewrite(&src, &tgt).unwrap();
            let mut w = src.clone();
            for op in ops {
                apply(&mut w, op);
            }
            assert_eq!(w, tgt);
        }
    }

    #[test]
    fn unequal_words_fail() {
        assert!(rewrite(&[1, 2], &[2, 1]).is_err());
    }
}
