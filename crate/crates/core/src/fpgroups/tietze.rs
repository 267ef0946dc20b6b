use super::Presentation;
use crate::words::{inverse_letters, same_curve, Alphabet, Letter, Word};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TietzeMove {
    /// Drops a relator that is trivial or a cyclic copy of another.
    RemoveRelator { relator: String },
    /// Removes `generator` using `generator = expression`, read off `relator`.
    Eliminate { generator: String, expression: String, relator: String },
    /// Rewrites `target` to `result` using the relator `by`.
    Shorten { target: String, by: String, result: String },
}

#[derive(Clone, Debug)]
pub struct TietzeResult {
    pub presentation: Presentation,
    pub log: Vec<TietzeMove>,
    pub exhausted: bool,
}

pub fn tietze_simplify(p: &Presentation, budget: usize) -> TietzeResult {
    tietze_simplify_keeping(p, budget, &[])
}

/// Greedy simplification. Generators named in `keep` are only eliminated
/// by relators of length one.
pub fn tietze_simplify_keeping(p: &Presentation, budget: usize, keep: &[&str]) -> TietzeResult {
    let mut s = State {
        names: p.generators.names().to_vec(),
        alive: vec![true; p.generators.rank()],
        rels: p.relators.clone(),
        log: Vec::new(),
    };
    let kept: Vec<bool> = s.names.iter().map(|n| keep.contains(&n.as_str())).collect();
    let mut exhausted = false;
    loop {
        s.clean();
        while s.shorten() {
            s.clean();
        }
        match s.eliminate(&kept, budget) {
            Step::Done => {}
            Step::Stuck => break,
            Step::OverBudget => {
                exhausted = true;
                break;
            }
        }
    }
    TietzeResult { presentation: s.finish(), log: s.log, exhausted }
}

enum Step {
    Done,
    Stuck,
    OverBudget,
}

struct State {
    names: Vec<String>,
    alive: Vec<bool>,
    rels: Vec<Word>,
    log: Vec<TietzeMove>,
}

fn rotations(w: &Word) -> impl Iterator<Item = Vec<Letter>> + '_ {
    let l = w.letters();
    (0..l.len()).map(move |i| l[i..].iter().chain(&l[..i]).copied().collect())
}

impl State {
    fn fmt(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = w
            .letters()
            .iter()
            .map(|&l| {
                let n = &self.names[l.unsigned_abs() as usize - 1];
                if l < 0 {
                    format!("{n}^-1")
                } else {
                    n.clone()
                }
            })
            .collect();
        parts.join(" ")
    }

    fn clean(&mut self) {
        let mut kept: Vec<Word> = Vec::new();
        for r in std::mem::take(&mut self.rels) {
            let r = r.cyclically_reduce();
            if r.is_empty() || kept.iter().any(|k| same_curve(k, &r)) {
                self.log.push(TietzeMove::RemoveRelator { relator: self.fmt(&r) });
            } else {
                kept.push(r);
            }
        }
        kept.sort_by_key(Word::len);
        self.rels = kept;
    }

    /// One substring reduction: a cyclic subword `u` of some relator with
    /// `u v` a cyclic form of a shorter relator and `|u| > |v|` becomes `v^-1`.
    fn shorten(&mut self) -> bool {
        for i in 0..self.rels.len() {
            let r = self.rels[i].clone();
            let forms: Vec<Vec<Letter>> = rotations(&r).chain(rotations(&r.inverse())).collect();
            for j in 0..self.rels.len() {
                if i == j || self.rels[j].len() < r.len() {
                    continue;
                }
                let s = self.rels[j].clone();
                for rot in rotations(&s) {
                    for f in &forms {
                        let m = (f.len() / 2 + 1..=f.len()).rev().find(|&m| rot.len() >= m && rot[..m] == f[..m]);
                        if let Some(m) = m {
                            let mut out = inverse_letters(&f[m..]);
                            out.extend_from_slice(&rot[m..]);
                            let new = Word::reduce(&out).cyclically_reduce();
                            self.log.push(TietzeMove::Shorten { target: self.fmt(&s), by: self.fmt(&r), result: self.fmt(&new) });
                            self.rels[j] = new;
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    fn eliminate(&mut self, kept: &[bool], budget: usize) -> Step {
        let mut best: Option<(usize, usize, Letter, usize)> = None;
        for (ri, r) in self.rels.iter().enumerate() {
            for g in 1..=self.names.len() as Letter {
                let gi = g as usize - 1;
                if !self.alive[gi] || (kept[gi] && r.len() > 1) {
                    continue;
                }
                let mut occ = r.letters().iter().enumerate().filter(|(_, &l)| l.abs() == g);
                let (Some((pos, _)), None) = (occ.next(), occ.next()) else { continue };
                let growth: usize = self
                    .rels
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != ri)
                    .map(|(_, w)| w.letters().iter().filter(|&&l| l.abs() == g).count() * (r.len() - 1))
                    .sum();
                if best.is_none_or(|(_, _, _, b)| growth < b) {
                    best = Some((ri, pos, r.letters()[pos], growth));
                }
            }
        }
        let Some((ri, pos, letter, _)) = best else { return Step::Stuck };
        let r = self.rels[ri].clone();
        let l = r.letters();
        let rest: Vec<Letter> = l[pos + 1..].iter().chain(&l[..pos]).copied().collect();
        // letter · rest = 1
        let expr = if letter > 0 { Word::reduce(&inverse_letters(&rest)) } else { Word::reduce(&rest) };
        let g = letter.abs();
        let mut images: Vec<Word> = (1..=self.names.len() as Letter).map(Word::gen).collect();
        images[g as usize - 1] = expr.clone();
        let new: Vec<Word> =
            self.rels.iter().enumerate().filter(|&(k, _)| k != ri).map(|(_, w)| w.substitute(&images)).collect();
        if new.iter().map(Word::len).sum::<usize>() > budget {
            return Step::OverBudget;
        }
        self.log.push(TietzeMove::Eliminate {
            generator: self.names[g as usize - 1].clone(),
            expression: self.fmt(&expr),
            relator: self.fmt(&r),
        });
        self.alive[g as usize - 1] = false;
        self.rels = new;
        Step::Done
    }

    fn finish(&self) -> Presentation {
        let mut remap = vec![0 as Letter; self.names.len()];
        let mut names = Vec::new();
        for (i, n) in self.names.iter().enumerate() {
            if self.alive[i] {
                names.push(n.clone());
                remap[i] = names.len() as Letter;
            }
        }
        let relators = self
            .rels
            .iter()
            .map(|w| Word::reduce(&w.letters().iter().map(|&l| l.signum() * remap[l.unsigned_abs() as usize - 1]).collect::<Vec<_>>()))
            .collect();
        Presentation { generators: Alphabet::new(names).expect("subset of distinct names"), relators }
    }
}
