//! Reduced words in free groups and canonical conjugacy classes.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// A signed generator: `+i` is generator `i` (1-based), `-i` its inverse.
pub type Letter = i32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new(names: Vec<String>) -> Result<Self> {
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.contains(char::is_whitespace) || n.contains('^') {
                return Err(Error::Parse(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(Error::Parse(format!("duplicate generator {n}")));
            }
        }
        Ok(Alphabet { names })
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, gen: u32) -> &str {
        &self.names[gen as usize - 1]
    }

    pub fn index_of(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32 + 1)
    }

    pub fn check(&self, w: &Word) -> Result<()> {
        self.check_letters(&w.0)
    }

    fn check_letters(&self, letters: &[Letter]) -> Result<()> {
        for &l in letters {
            let i = l.unsigned_abs();
            if l == 0 || i as usize > self.rank() {
                return Err(Error::LetterOutOfRange { index: i, rank: self.rank() });
            }
        }
        Ok(())
    }

    pub fn reduce(&self, raw: &[Letter]) -> Result<Word> {
        self.check_letters(raw)?;
        Ok(Word::reduce(raw))
    }

    pub fn multiply(&self, u: &Word, v: &Word) -> Result<Word> {
        self.check(u)?;
        self.check(v)?;
        Ok(u.mul(v))
    }

    /// Parses `a1 b1 a1^-1`; `1` and the empty string denote the identity.
    pub fn parse(&self, text: &str) -> Result<Word> {
        let mut raw = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (n, e.parse::<i32>().map_err(|_| Error::Parse(tok.to_string()))?),
                None => (tok, 1),
            };
            let g = self.index_of(name).ok_or_else(|| Error::Parse(tok.to_string()))? as Letter;
            let l = if exp < 0 { -g } else { g };
            for _ in 0..exp.unsigned_abs() {
                raw.push(l);
            }
        }
        Ok(Word::reduce(&raw))
    }

    pub fn format(&self, w: &Word) -> String {
        let mut out = String::new();
        for &l in &w.0 {
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(self.name(l.unsigned_abs()));
            if l < 0 {
                out.push_str("^-1");
            }
        }
        out
    }
}

/// A freely reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn gen(l: Letter) -> Self {
        assert!(l != 0);
        Word(vec![l])
    }

    pub fn reduce(raw: &[Letter]) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(raw.len());
        for &x in raw {
            if out.last() == Some(&-x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        Word(out)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        push_reduced(&mut out, &other.0);
        Word(out)
    }

    pub fn inverse(&self) -> Word {
        Word(inverse_letters(&self.0))
    }

    /// `g w g^-1`.
    pub fn conjugate(&self, g: &Word) -> Word {
        g.mul(self).mul(&g.inverse())
    }

    pub fn pow(&self, n: i32) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn cyclically_reduce(&self) -> Word {
        let w = &self.0;
        let (mut i, mut j) = (0, w.len());
        while j - i > 1 && w[i] == -w[j - 1] {
            i += 1;
            j -= 1;
        }
        Word(w[i..j].to_vec())
    }

    /// Exponent sum of each generator, indexed from 0.
    pub fn abelianize(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0i64; rank];
        for &l in &self.0 {
            v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        v
    }

    /// Substitutes `images[i-1]` for generator `i`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Vec::new();
        for &l in &self.0 {
            let img = &images[l.unsigned_abs() as usize - 1].0;
            if l > 0 {
                push_reduced(&mut out, img);
            } else {
                push_reduced(&mut out, &inverse_letters(img));
            }
        }
        Word(out)
    }
}

pub(crate) fn inverse_letters(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|&x| -x).collect()
}

pub(crate) fn push_reduced(out: &mut Vec<Letter>, tail: &[Letter]) {
    for &x in tail {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

// a1 < a1^-1 < a2 < ...
fn key(l: Letter) -> u32 {
    2 * (l.unsigned_abs() - 1) + (l < 0) as u32
}

/// Start index of the lexicographically least rotation (Booth).
fn least_rotation(s: &[Letter]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| key(s[i % n]);
    let mut f = vec![-1i64; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = f[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    k % n
}

fn rotate(w: &[Letter], k: usize) -> Vec<Letter> {
    w[k..].iter().chain(w[..k].iter()).copied().collect()
}

fn cmp_keys(a: &[Letter], b: &[Letter]) -> Ordering {
    a.iter().map(|&l| key(l)).cmp(b.iter().map(|&l| key(l)))
}

/// Canonical representative of a conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConjClass {
    rep: Vec<Letter>,
    orientation_agnostic: bool,
}

impl ConjClass {
    pub fn new(w: &Word, orientation_agnostic: bool) -> Self {
        let c = w.cyclically_reduce().0;
        let fwd = rotate(&c, least_rotation(&c));
        let rep = if orientation_agnostic {
            let ic = inverse_letters(&c);
            let bwd = rotate(&ic, least_rotation(&ic));
            if cmp_keys(&bwd, &fwd) == Ordering::Less {
                bwd
            } else {
                fwd
            }
        } else {
            fwd
        };
        ConjClass { rep, orientation_agnostic }
    }

    pub fn representative(&self) -> Word {
        Word(self.rep.clone())
    }

    pub fn orientation_agnostic(&self) -> bool {
        self.orientation_agnostic
    }

    pub fn is_trivial(&self) -> bool {
        self.rep.is_empty()
    }
}

pub fn conj_class(w: &Word, orientation_agnostic: bool) -> ConjClass {
    ConjClass::new(w, orientation_agnostic)
}

/// Unoriented curve equality up to conjugacy.
pub fn same_curve(u: &Word, v: &Word) -> bool {
    u.len() + v.len() == 0 || ConjClass::new(u, true) == ConjClass::new(v, true)
}
