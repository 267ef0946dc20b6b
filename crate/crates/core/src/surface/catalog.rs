use super::{a, b, c_word, intersection, Curve, HomologyClass, SurfaceKind};
use crate::constructions::psi;
use crate::error::{Error, Result};
use crate::mcg::{Evaluator, MappingClass};
use crate::words::{ConjClass, Word};
use serde_json::{json, Value};
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realization {
    Standard,
    /// `phi(base)` for a twist word `phi` over catalog names.
    Image { phi: Vec<(String, i32)>, base: String },
}

#[derive(Clone, Debug)]
pub struct CurveSpec {
    pub name: String,
    pub surface: SurfaceKind,
    pub curve: Curve,
    pub class: ConjClass,
    pub h1: HomologyClass,
    pub realization: Realization,
}

impl CurveSpec {
    pub fn is_separating(&self) -> bool {
        self.h1.iter().all(|&x| x == 0)
    }
}

#[derive(Clone, Debug)]
pub struct CurveCatalog {
    surface: SurfaceKind,
    entries: Vec<CurveSpec>,
    index: HashMap<String, usize>,
}

impl CurveCatalog {
    pub fn build(surface: SurfaceKind) -> Result<Self> {
        Builder::new(surface).run()
    }

    pub fn surface(&self) -> SurfaceKind {
        self.surface
    }

    pub fn entries(&self) -> &[CurveSpec] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Result<&CurveSpec> {
        self.index
            .get(name)
            .map(|&i| &self.entries[i])
            .ok_or_else(|| Error::UnknownCurve(name.to_string()))
    }

    pub fn curve(&self, name: &str) -> Result<Curve> {
        Ok(self.get(name)?.curve.clone())
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    /// Twist word over catalog names.
    pub fn mapping_class(&self, twists: &[(&str, i32)]) -> Result<MappingClass> {
        let mut out = Vec::new();
        for &(n, e) in twists {
            out.push((self.curve(n)?, e));
        }
        Ok(MappingClass::from_twists(self.surface, out))
    }

    /// Finds a catalog name for an unoriented curve class.
    pub fn lookup(&self, w: &Word) -> Option<&str> {
        let c = ConjClass::new(w, true);
        self.entries.iter().find(|e| e.class == c).map(|e| e.name.as_str())
    }

    pub fn to_json(&self) -> Value {
        let al = self.surface.alphabet();
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                let realization = match &e.realization {
                    Realization::Standard => json!("standard"),
                    Realization::Image { phi, base } => json!({
                        "image": {
                            "phi": phi.iter().map(|(n, x)| json!({"curve": n, "exponent": x})).collect::<Vec<_>>(),
                            "base": base,
                        }
                    }),
                };
                json!({
                    "name": e.name,
                    "word": al.format(&e.curve.word),
                    "h1": e.h1,
                    "separating": e.curve.split,
                    "hyperelliptic": e.curve.hyperelliptic,
                    "realization": realization,
                })
            })
            .collect();
        json!({
            "schema": crate::SCHEMA,
            "surface": {"genus": self.surface.genus, "boundary": self.surface.boundary},
            "curves": entries,
        })
    }
}

struct Builder {
    s: SurfaceKind,
    g: u32,
    entries: Vec<CurveSpec>,
    index: HashMap<String, usize>,
}

impl Builder {
    fn new(s: SurfaceKind) -> Self {
        Builder { s, g: s.genus, entries: Vec::new(), index: HashMap::new() }
    }

    // a_{g+1} is a generator only with two boundary components; otherwise it is capped off.
    fn aw(&self, i: u32) -> Vec<i32> {
        if i <= self.g || self.s.boundary == 2 {
            vec![a(i)]
        } else {
            vec![]
        }
    }

    fn cw(&self, i: u32) -> Vec<i32> {
        c_word(i).into_letters()
    }

    fn bs(&self, from: u32, to: u32) -> Vec<i32> {
        (from..=to).map(b).collect()
    }

    fn closed_h1_zero(&self, w: &Word) -> bool {
        w.abelianize(self.s.rank()).iter().take(2 * self.g as usize).all(|&x| x == 0)
    }

    fn push(&mut self, name: String, letters: Vec<i32>, split: Option<u32>, hyper: bool, realization: Realization) {
        let word = Word::reduce(&letters).cyclically_reduce();
        let h1 = self.s.homology_of(&word);
        let split = if self.closed_h1_zero(&word) { Some(split.unwrap_or(0)) } else { None };
        let mut curve = Curve::new(name.clone(), word.clone());
        curve.split = split;
        curve.hyperelliptic = hyper || self.g <= 2;
        let spec = CurveSpec {
            name: name.clone(),
            surface: self.s,
            class: ConjClass::new(&word, true),
            h1,
            curve,
            realization,
        };
        self.index.insert(name, self.entries.len());
        self.entries.push(spec);
    }

    fn std(&mut self, name: String, letters: Vec<i32>, hyper: bool) {
        self.push(name, letters, None, hyper, Realization::Standard)
    }

    fn run(mut self) -> Result<CurveCatalog> {
        let g = self.g;
        for i in 1..=g {
            self.std(format!("a{i}"), self.aw(i), i == 1);
        }
        for i in 1..=g {
            self.std(format!("b{i}"), vec![b(i)], true);
        }
        for h in 1..=g {
            let split = h.min(g - h);
            let w = self.cw(h);
            self.push(format!("c{h}"), w, Some(split), true, Realization::Standard);
        }
        for h in 1..=g {
            let mut w = self.cw(h - 1);
            w.extend(self.aw(h));
            self.std(format!("a'{h}"), w, h == 1);
        }
        for i in 1..=2 * g {
            let w = if i == 1 {
                vec![a(1)]
            } else if i % 2 == 0 {
                vec![b(i / 2)]
            } else {
                vec![a((i - 1) / 2), -a(i.div_ceil(2))]
            };
            self.std(format!("A{i}"), w, true);
        }
        if g >= 2 {
            for h in 1..=g {
                self.b_curves(h);
            }
        }
        match self.s.boundary {
            1 => {
                let w = self.cw(g);
                self.push(format!("a{}", g + 1), w.clone(), Some(0), false, Realization::Standard);
                self.push(format!("a'{}", g + 1), w, Some(0), false, Realization::Standard);
            }
            2 => {
                self.push(format!("a{}", g + 1), vec![a(g + 1)], Some(0), false, Realization::Standard);
                let mut w = self.cw(g);
                w.push(a(g + 1));
                self.push(format!("a'{}", g + 1), w, Some(0), false, Realization::Standard);
            }
            _ => {}
        }
        if g >= 3 {
            self.lantern()?;
        }
        self.check()?;
        Ok(CurveCatalog { surface: self.s, entries: self.entries, index: self.index })
    }

    fn b_curves(&mut self, h: u32) {
        let r = h / 2;
        let mut w = self.bs(1, h);
        self.std(format!("B^{h}_0,1"), w.clone(), false);
        w.extend(self.cw(h));
        w.extend(self.aw(h + 1));
        self.std(format!("B^{h}_0,2"), w, false);
        let odd_max = if h.is_multiple_of(2) { r } else { r + 1 };
        for i in 1..=h {
            let k = i.div_ceil(2);
            let mut w = vec![a(k)];
            if i % 2 == 1 {
                debug_assert!(k <= odd_max);
                w.extend(self.bs(k, h + 1 - k));
                w.extend(self.cw(h + 1 - k));
            } else {
                w.extend(self.bs(k + 1, h - k));
                w.extend(self.cw(h - k));
            }
            w.extend(self.aw(h + 1 - k));
            self.std(format!("B^{h}_{i}"), w, false);
        }
    }

    fn lantern(&mut self) -> Result<()> {
        // images are computed on a bordered model; on the closed surface the b = 1 words are used
        let model = if self.s.is_bordered() { self.s } else { SurfaceKind::new(self.g, 1)? };
        let mut ev = Evaluator::new(model)?;
        for (name, phi) in [("e1", &psi::PSI2), ("e2", &psi::PSI3)] {
            let mut twists = Vec::new();
            for &(n, e) in phi.iter() {
                let c = self.entries[self.index[n]].curve.clone();
                twists.push((c, e));
            }
            let m = MappingClass::from_twists(model, twists);
            let base = self.entries[self.index["A1"]].curve.word.clone();
            let w = ev.apply(&m, &base)?.cyclically_reduce();
            let realization = Realization::Image {
                phi: phi.iter().map(|&(n, e)| (n.to_string(), e)).collect(),
                base: "A1".into(),
            };
            self.push(name.into(), w.into_letters(), None, false, realization);
        }
        Ok(())
    }

    fn check(&self) -> Result<()> {
        for e in &self.entries {
            if e.h1 != self.s.homology_of(&e.curve.word) {
                return Err(Error::Invariant(format!("{}: homology mismatch", e.name)));
            }
            let _ = intersection(&e.h1, &e.h1)?;
        }
        Ok(())
    }
}
