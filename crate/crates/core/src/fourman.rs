//! Four-manifold bookkeeping: the classification table of oriented
//! `T^2`-bundles over `T^2`, Gompf sums of manifolds carrying symplectic
//! pairs, and the Pasternack obstruction for Riemannian foliations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type IntMatrix2 = [[i64; 2]; 2];

const IDENTITY: IntMatrix2 = [[1, 0], [0, 1]];
const MINUS_IDENTITY: IntMatrix2 = [[-1, 0], [0, -1]];

/// Monodromies `C`, `D` of the two generators of `pi_1(T^2)` and Euler
/// class `(m, n)`, already in normal form.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct T2BundleData {
    pub c: IntMatrix2,
    pub d: IntMatrix2,
    pub euler: (i64, i64),
    /// Shear parameter, if given separately; must match `c[0][1]`.
    #[serde(default)]
    pub lambda: Option<i64>,
}

fn det(m: &IntMatrix2) -> i64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

fn trace(m: &IntMatrix2) -> i64 {
    m[0][0] + m[1][1]
}

impl T2BundleData {
    pub fn new(c: IntMatrix2, d: IntMatrix2, euler: (i64, i64), lambda: Option<i64>) -> Result<Self> {
        let data = T2BundleData { c, d, euler, lambda };
        data.validate()?;
        Ok(data)
    }

    pub fn validate(&self) -> Result<()> {
        if det(&self.c) != 1 {
            return Err(Error::InvalidParameters(format!("det C = {} (must be 1)", det(&self.c))));
        }
        if self.d != IDENTITY && self.d != MINUS_IDENTITY {
            return Err(Error::InvalidParameters("D must be I or -I".into()));
        }
        if let Some(l) = self.lambda {
            let shear = self.c[1][0] == 0 && self.c[0][0] == self.c[1][1] && self.c[0][0].abs() == 1;
            if !shear || self.c[0][1] != l {
                return Err(Error::InvalidParameters(format!(
                    "lambda = {l} does not match C = {:?}",
                    self.c
                )));
            }
        }
        Ok(())
    }

    /// `[[s, lambda], [0, s]]` with `lambda != 0`: returns `(s, lambda)`.
    fn shear(&self) -> Option<(i64, i64)> {
        let c = &self.c;
        (c[1][0] == 0 && c[0][0] == c[1][1] && c[0][1] != 0).then_some((c[0][0], c[0][1]))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Geometry {
    #[serde(rename = "R^4")]
    Flat,
    #[serde(rename = "Nil^3 x R")]
    Nil3xR,
    #[serde(rename = "Nil^4")]
    Nil4,
    #[serde(rename = "Sol^3 x R")]
    Sol3xR,
}

impl Geometry {
    /// Catalog algebra of the model Lie group.
    pub fn catalog_algebra(self) -> &'static str {
        match self {
            Geometry::Flat => "abelian4",
            Geometry::Nil3xR => "nil3xR",
            Geometry::Nil4 => "nil4",
            Geometry::Sol3xR => "sol3xR",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Geometry::Flat => "R^4",
            Geometry::Nil3xR => "Nil^3 x R",
            Geometry::Nil4 => "Nil^4",
            Geometry::Sol3xR => "Sol^3 x R",
        }
    }
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum Row {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b")]
    B,
    #[serde(rename = "c")]
    C,
    #[serde(rename = "d")]
    D,
    #[serde(rename = "e")]
    E,
    #[serde(rename = "f")]
    F,
    #[serde(rename = "g")]
    G,
    #[serde(rename = "h")]
    H,
}

impl Row {
    pub const ALL: [Row; 8] = [Row::A, Row::B, Row::C, Row::D, Row::E, Row::F, Row::G, Row::H];

    pub fn label(self) -> char {
        b"abcdefgh"[self as usize] as char
    }

    pub fn b1(self) -> usize {
        match self {
            Row::A => 4,
            Row::B => 3,
            _ => 2,
        }
    }

    pub fn geometry(self) -> Geometry {
        match self {
            Row::A | Row::C => Geometry::Flat,
            Row::B | Row::E | Row::F => Geometry::Nil3xR,
            Row::D => Geometry::Nil4,
            Row::G | Row::H => Geometry::Sol3xR,
        }
    }

    /// Rows whose pair comes from explicit coordinate forms rather than an
    /// invariant pair on the model group.
    pub fn uses_coordinate_forms(self) -> bool {
        matches!(self, Row::E | Row::F)
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

/// The seven flat bundles with `b1 = 2`, as `(C, Euler class)` with `D = I`.
pub const FLAT_B1_TWO: [(IntMatrix2, (i64, i64)); 7] = [
    ([[0, -1], [1, -1]], (0, 0)),
    ([[0, -1], [1, -1]], (-1, 0)),
    ([[0, -1], [1, 0]], (0, 0)),
    ([[0, -1], [1, 0]], (-1, 0)),
    ([[1, -1], [1, 0]], (0, 0)),
    (MINUS_IDENTITY, (0, 0)),
    (MINUS_IDENTITY, (-1, 0)),
];

fn row_matches(row: Row, b: &T2BundleData) -> bool {
    let d_plus = b.d == IDENTITY;
    let (m, n) = b.euler;
    match row {
        Row::A => b.c == IDENTITY && d_plus && (m, n) == (0, 0),
        Row::B => b.c == IDENTITY && d_plus && (m, n) != (0, 0),
        Row::C => d_plus && FLAT_B1_TWO.contains(&(b.c, b.euler)),
        Row::D => d_plus && n != 0 && matches!(b.shear(), Some((1, _))),
        Row::E => d_plus && matches!(b.shear(), Some((-1, _))),
        Row::F => !d_plus && matches!(b.shear(), Some((1, _))),
        Row::G => d_plus && trace(&b.c).abs() >= 3,
        Row::H => !d_plus && trace(&b.c) >= 3,
    }
}

/// Every row whose normal-form condition `b` satisfies.
pub fn matching_rows(b: &T2BundleData) -> Vec<Row> {
    Row::ALL.into_iter().filter(|r| row_matches(*r, b)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct BundleClass {
    pub row: Row,
    pub b1: usize,
    pub geometry: Geometry,
    /// Catalog algebra carrying an invariant pair for this geometry.
    pub algebra: &'static str,
    /// The pair is certified by explicit coordinate forms instead.
    pub coordinate_forms: bool,
}

pub fn classify_t2_bundle(b: &T2BundleData) -> Result<BundleClass> {
    b.validate()?;
    let rows = matching_rows(b);
    match rows.as_slice() {
        [row] => Ok(BundleClass {
            row: *row,
            b1: row.b1(),
            geometry: row.geometry(),
            algebra: row.geometry().catalog_algebra(),
            coordinate_forms: row.uses_coordinate_forms(),
        }),
        [] => Err(Error::NotInNormalForm(format!(
            "C = {:?}, D = {:?}, euler = {:?} matches no row",
            b.c, b.d, b.euler
        ))),
        many => Err(Error::NotInNormalForm(format!(
            "ambiguous: matches rows {}",
            many.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
        ))),
    }
}

/// A closed leaf of one of the foliations.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct LeafData {
    pub genus: u32,
    /// Integral of the transverse pair form over the leaf.
    pub area: Scalar,
    pub trivial_normal_bundle: bool,
    pub product_neighbourhood: bool,
}

impl LeafData {
    pub fn validate(&self) -> Result<()> {
        if !self.area.is_positive() {
            return Err(Error::InvalidParameters(format!("leaf area {} must be positive", self.area)));
        }
        Ok(())
    }
}

/// Topological data of a closed 4-manifold with a symplectic pair
/// `(F, G)` of foliations.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct PairedManifoldDescriptor {
    pub euler_characteristic: i64,
    pub signature: i64,
    /// First Pontryagin number of `TF`.
    pub p1_tf: i64,
    /// First Pontryagin number of `TG`.
    pub p1_tg: i64,
    #[serde(default)]
    pub leaves: Vec<LeafData>,
    /// Leaf used for gluing.
    #[serde(default)]
    pub chosen_leaf: usize,
}

impl PairedManifoldDescriptor {
    /// `p1(TF) + p1(TG) = 3 sigma` and positive leaf areas.
    pub fn validate(&self) -> Result<()> {
        if self.p1_tf + self.p1_tg != 3 * self.signature {
            return Err(Error::InvalidParameters(format!(
                "p1(TF) + p1(TG) = {} but 3 sigma = {}",
                self.p1_tf + self.p1_tg,
                3 * self.signature
            )));
        }
        self.leaves.iter().try_for_each(LeafData::validate)
    }

    pub fn leaf(&self) -> Result<&LeafData> {
        self.leaves.get(self.chosen_leaf).ok_or_else(|| {
            Error::InvalidParameters(format!(
                "chosen leaf {} out of range ({} leaves)",
                self.chosen_leaf,
                self.leaves.len()
            ))
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GompfFeasibility {
    pub feasible: bool,
    /// Factor applied to the second manifold's transverse form so that the
    /// leaf areas agree; `1` means no rescaling.
    pub scale: Option<Scalar>,
    pub reasons: Vec<String>,
}

pub fn gompf_feasible(d1: &PairedManifoldDescriptor, d2: &PairedManifoldDescriptor) -> Result<GompfFeasibility> {
    d1.validate()?;
    d2.validate()?;
    let (l1, l2) = (d1.leaf()?, d2.leaf()?);
    let mut reasons = Vec::new();
    for (k, l) in [(1, l1), (2, l2)] {
        if !l.trivial_normal_bundle {
            reasons.push(format!("leaf {k} has nontrivial normal bundle"));
        }
        if !l.product_neighbourhood {
            reasons.push(format!("leaf {k} has no product neighbourhood"));
        }
    }
    if l1.genus != l2.genus {
        reasons.push(format!("genera differ ({} vs {})", l1.genus, l2.genus));
    }
    let feasible = reasons.is_empty();
    let scale = feasible.then(|| &l1.area * &l2.area.inv().expect("positive area"));
    Ok(GompfFeasibility {
        feasible,
        scale,
        reasons,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GompfSum {
    pub descriptor: PairedManifoldDescriptor,
    pub genus: u32,
    pub scale: Scalar,
    /// Euler characteristic and signature of the sum come from standard
    /// gluing arithmetic.
    pub provenance: &'static str,
}

/// Invariants of the sum along the chosen leaves: `chi = chi1 + chi2 -
/// 2(2 - 2g)`, signature and Pontryagin numbers add.
pub fn gompf_invariants(d1: &PairedManifoldDescriptor, d2: &PairedManifoldDescriptor) -> Result<GompfSum> {
    let f = gompf_feasible(d1, d2)?;
    if !f.feasible {
        return Err(Error::Precondition(format!("Gompf sum not feasible: {}", f.reasons.join("; "))));
    }
    let g = d1.leaf()?.genus;
    let leaves = d1
        .leaves
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != d1.chosen_leaf)
        .chain(d2.leaves.iter().enumerate().filter(|(i, _)| *i != d2.chosen_leaf))
        .map(|(_, l)| l.clone())
        .collect();
    let descriptor = PairedManifoldDescriptor {
        euler_characteristic: d1.euler_characteristic + d2.euler_characteristic - 2 * (2 - 2 * g as i64),
        signature: d1.signature + d2.signature,
        p1_tf: d1.p1_tf + d2.p1_tf,
        p1_tg: d1.p1_tg + d2.p1_tg,
        leaves,
        chosen_leaf: 0,
    };
    if descriptor.p1_tf + descriptor.p1_tg != 3 * descriptor.signature {
        return Err(Error::InvalidParameters("inconsistent Pontryagin ledger after gluing".into()));
    }
    Ok(GompfSum {
        descriptor,
        genus: g,
        scale: f.scale.expect("feasible"),
        provenance: "derived-standard",
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RiemannianPossible {
    No,
    Unknown,
}

/// Pontryagin numbers of the normal bundle of a Riemannian foliation vanish
/// in degrees above the codimension, so a nonzero `p1` (degree 4) rules out
/// codimension below 4. The test never proves that a foliation is Riemannian.
pub fn pasternack_obstruction(p1_normal: i64, codim: u32) -> Result<RiemannianPossible> {
    if codim == 0 {
        return Err(Error::InvalidParameters("codimension must be at least 1".into()));
    }
    Ok(if p1_normal != 0 && 4 > codim {
        RiemannianPossible::No
    } else {
        RiemannianPossible::Unknown
    })
}
