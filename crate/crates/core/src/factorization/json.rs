use super::{Factorization, MoveRecord};
use crate::error::{Error, Result};
use crate::surface::{Curve, SurfaceKind};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceDoc {
    pub genus: u32,
    pub boundary: u32,
    #[serde(default)]
    pub closed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveDoc {
    pub label: String,
    pub word: String,
    #[serde(default)]
    pub separating: Option<u32>,
    #[serde(default)]
    pub hyperelliptic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorizationDoc {
    pub schema: String,
    pub surface: SurfaceDoc,
    pub cycles: Vec<CurveDoc>,
    pub boundary_exponents: Vec<i64>,
    #[serde(default)]
    pub base_sigma: Option<i64>,
    #[serde(default)]
    pub trace: Vec<MoveRecord>,
}

impl Factorization {
    pub fn to_doc(&self) -> FactorizationDoc {
        let al = self.surface.alphabet();
        FactorizationDoc {
            schema: crate::SCHEMA.into(),
            surface: SurfaceDoc { genus: self.surface.genus, boundary: self.surface.boundary, closed: self.closed },
            cycles: self
                .cycles
                .iter()
                .map(|c| CurveDoc {
                    label: c.label.clone(),
                    word: al.format(&c.word),
                    separating: c.split,
                    hyperelliptic: c.hyperelliptic,
                })
                .collect(),
            boundary_exponents: self.boundary_exponents.clone(),
            base_sigma: self.base_sigma,
            trace: self.trace.clone(),
        }
    }

    pub fn from_doc(doc: &FactorizationDoc) -> Result<Self> {
        if doc.schema != crate::SCHEMA {
            return Err(Error::Schema(format!("unsupported schema `{}`", doc.schema)));
        }
        let s = SurfaceKind::new(doc.surface.genus, doc.surface.boundary).map_err(|e| Error::Schema(e.to_string()))?;
        let al = s.alphabet();
        let mut cycles = Vec::new();
        for c in &doc.cycles {
            let word = al.parse(&c.word).map_err(|e| Error::Schema(e.to_string()))?;
            let mut curve = Curve::new(c.label.clone(), word);
            curve.split = c.separating;
            curve.hyperelliptic = c.hyperelliptic;
            cycles.push(curve);
        }
        let mut f = Factorization::new(s, cycles, doc.boundary_exponents.clone()).map_err(|e| Error::Schema(e.to_string()))?;
        f.closed = doc.surface.closed;
        f.base_sigma = doc.base_sigma;
        f.trace = doc.trace.clone();
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("document serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: FactorizationDoc = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        Self::from_doc(&doc)
    }
}
