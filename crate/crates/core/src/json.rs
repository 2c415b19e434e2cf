//! JSON input and output literals.
//!
//! Algebras are `{"dim": n, "name": "...", "brackets": [{"i": 1, "j": 4,
//! "out": {"1": "-1"}}]}` (omitted brackets are zero) or `{"catalog":
//! "name"}`. Forms use the layout of [`crate::form::Form`]'s serde impls.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::coordforms::{self, PolyForm};
use crate::error::{Error, Result};
use crate::exterior::ExteriorForm;
use crate::lie::{Catalog, LieAlgebra, StructureConstants};
use crate::pairs::PairKind;
use crate::poly::PolyMap;
use crate::scalar::Scalar;

/// Parse `text`, prefixing errors with `source` and the line/column.
pub fn parse<T: DeserializeOwned>(text: &str, source: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{source}: {e}")))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BracketLiteral {
    pub i: usize,
    pub j: usize,
    /// Output index (as a string key) to coefficient.
    pub out: BTreeMap<String, Scalar>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraLiteral {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default)]
    pub brackets: Vec<BracketLiteral>,
}

impl AlgebraLiteral {
    pub fn build(&self) -> Result<LieAlgebra> {
        let mut c = StructureConstants::abelian(self.dim)?;
        let mut seen = std::collections::BTreeSet::new();
        for b in &self.brackets {
            let key = (b.i.min(b.j), b.i.max(b.j));
            if !seen.insert(key) {
                return Err(Error::Input(format!("bracket [e{}, e{}] given twice", key.0, key.1)));
            }
            let out = b
                .out
                .iter()
                .map(|(k, v)| {
                    k.trim()
                        .parse::<usize>()
                        .map(|k| (k, v.clone()))
                        .map_err(|_| Error::Input(format!("bracket output index '{k}' is not an integer")))
                })
                .collect::<Result<Vec<_>>>()?;
            c.set_bracket(b.i, b.j, &out)?;
        }
        LieAlgebra::new(c, self.name.clone())
    }

    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let mut brackets: BTreeMap<(usize, usize), BTreeMap<String, Scalar>> = BTreeMap::new();
        for (i, j, k, v) in g.constants().nonzero() {
            brackets.entry((i, j)).or_default().insert(k.to_string(), v);
        }
        AlgebraLiteral {
            dim: g.dim(),
            name: g.name().map(str::to_string),
            brackets: brackets
                .into_iter()
                .map(|((i, j), out)| BracketLiteral { i, j, out })
                .collect(),
        }
    }
}

/// Read an algebra literal or a catalog reference.
pub fn parse_algebra(text: &str, source: &str, catalog: &Catalog) -> Result<LieAlgebra> {
    let value: serde_json::Value = parse(text, source)?;
    if let Some(name) = value.get("catalog") {
        let name = name
            .as_str()
            .ok_or_else(|| Error::Input(format!("{source}: \"catalog\" must be a string")))?;
        return Ok(catalog.get(name)?.algebra);
    }
    let lit: AlgebraLiteral =
        serde_json::from_value(value).map_err(|e| Error::Input(format!("{source}: {e}")))?;
    lit.build()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FormsRepr {
    List(Vec<ExteriorForm>),
    Tagged {
        forms: Vec<ExteriorForm>,
        #[serde(default)]
        kind: Option<PairKind>,
    },
}

/// Two forms and the kind of pair they are meant to be.
#[derive(Clone, Debug)]
pub struct FormsInput {
    pub forms: Vec<ExteriorForm>,
    pub kind: PairKind,
}

/// `[form, form]` or `{"forms": [..], "kind": ".."}`; the kind defaults to
/// the one implied by the degrees.
pub fn parse_forms(text: &str, source: &str) -> Result<FormsInput> {
    let value: serde_json::Value = parse(text, source)?;
    let repr: FormsRepr = serde_json::from_value(value).map_err(|e| {
        Error::Input(format!("{source}: expected a list of two forms or {{\"forms\": [..]}} ({e})"))
    })?;
    let (forms, kind) = match repr {
        FormsRepr::List(f) => (f, None),
        FormsRepr::Tagged { forms, kind } => (forms, kind),
    };
    if forms.len() != 2 {
        return Err(Error::Input(format!("{source}: expected two forms, found {}", forms.len())));
    }
    let kind = match kind {
        Some(k) => k,
        None => match (forms[0].degree(), forms[1].degree()) {
            (2, 2) => PairKind::Symplectic,
            (1, 2) => PairKind::ContactSymplectic,
            (1, 1) => PairKind::Contact,
            (p, q) => return Err(Error::Input(format!("{source}: no pair kind has degrees ({p}, {q})"))),
        },
    };
    Ok(FormsInput { forms, kind })
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum SamplesSpec {
    Named(String),
    Explicit(Vec<Vec<Scalar>>),
}

impl Default for SamplesSpec {
    fn default() -> Self {
        SamplesSpec::Named("default".into())
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct CoordInput {
    pub forms: Vec<PolyForm>,
    #[serde(default)]
    pub maps: Vec<PolyMap>,
    #[serde(default)]
    pub samples: SamplesSpec,
}

impl CoordInput {
    pub fn sample_points(&self) -> Result<Vec<Vec<BigRational>>> {
        let n = self.forms.first().map_or(4, PolyForm::dim);
        match &self.samples {
            SamplesSpec::Named(s) if s == "default" => Ok(coordforms::default_samples(n)),
            SamplesSpec::Named(s) => Err(Error::Input(format!("unknown sample set '{s}'"))),
            SamplesSpec::Explicit(points) => points
                .iter()
                .map(|p| {
                    if p.len() != n {
                        return Err(Error::Input(format!("sample point has {} coordinates, chart has {n}", p.len())));
                    }
                    p.iter()
                        .map(|x| {
                            x.as_rational()
                                .cloned()
                                .ok_or_else(|| Error::Input("sample coordinates must be rational".into()))
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

pub fn parse_coord_input(text: &str, source: &str) -> Result<CoordInput> {
    parse_value(text, source)
}

/// Parse a typed document, keeping the position for syntax errors.
pub fn parse_value<T: DeserializeOwned>(text: &str, source: &str) -> Result<T> {
    let value: serde_json::Value = parse(text, source)?;
    serde_json::from_value(value).map_err(|e| Error::Input(format!("{source}: {e}")))
}
