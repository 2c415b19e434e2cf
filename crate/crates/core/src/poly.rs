//! Multivariate polynomials with rational coefficients and polynomial maps
//! between coordinate charts.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::form::Coefficient;
use crate::scalar::parse_rational;

/// Exponent vector with trailing zeros removed, so that `x1` has the same
/// key regardless of how many variables the chart has.
pub type Exponent = Vec<u32>;

fn trim(mut e: Exponent) -> Exponent {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

/// Sparse polynomial in variables `x1, x2, ...` (1-based).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Exponent, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::monomial(Vec::new(), c)
    }

    pub fn int(n: i64) -> Self {
        Polynomial::constant(BigRational::from_integer(n.into()))
    }

    pub fn monomial(exp: Exponent, c: BigRational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(trim(exp), c);
        p
    }

    /// The coordinate function `x_i`.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are 1-based");
        let mut e = vec![0; i];
        e[i - 1] = 1;
        Polynomial::monomial(e, BigRational::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, BigRational)>) -> Self {
        let mut p = Polynomial::zero();
        for (e, c) in terms {
            p.add_term(trim(e), c);
        }
        p
    }

    fn add_term(&mut self, exp: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant value, if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> BigRational {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Largest variable index that occurs.
    pub fn max_var(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Polynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let n = e1.len().max(e2.len());
                let e: Exponent = (0..n)
                    .map(|i| e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Polynomial::int(1), |acc, _| acc.mul(self))
    }

    /// `d/dx_i`, 1-based.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Polynomial::zero();
        for (e, c) in &self.terms {
            let Some(&k) = e.get(i - 1) else { continue };
            if k == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i - 1] -= 1;
            out.add_term(trim(e2), c * BigRational::from_integer(k.into()));
        }
        out
    }

    /// Value at `point`; variables beyond `point.len()` are an error.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if self.max_var() > point.len() {
            return Err(Error::DimensionMismatch {
                expected: self.max_var(),
                found: point.len(),
            });
        }
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    v *= x;
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Replace `x_i` by `values[i-1]`.
    pub fn substitute(&self, values: &[Polynomial]) -> Result<Self> {
        if self.max_var() > values.len() {
            return Err(Error::DimensionMismatch {
                expected: self.max_var(),
                found: values.len(),
            });
        }
        let mut out = Polynomial::zero();
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            for (v, &k) in values.iter().zip(e) {
                if k > 0 {
                    term = term.mul(&v.pow(k));
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }
}

impl Coefficient for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::int(1)
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
}

/// Variable names used for display: `x, y, z, t` up to four variables,
/// `x1, x2, ...` beyond.
pub fn var_name(i: usize, nvars: usize) -> String {
    if nvars <= 4 {
        ["x", "y", "z", "t"][i - 1].to_string()
    } else {
        format!("x{i}")
    }
}

impl Polynomial {
    /// Display with the chart's variable names.
    pub fn display(&self, nvars: usize) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let nvars = nvars.max(self.max_var());
        let mut out = String::new();
        // highest degree first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    let name = var_name(i + 1, nvars);
                    if p == 1 {
                        name
                    } else {
                        format!("{name}^{p}")
                    }
                })
                .collect();
            if vars.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&format!("{abs}*"));
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(0))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.display(0))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<u32>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    terms: Vec<TermRepr>,
}

/// `{"terms": [{"exp": [e1, .., en], "c": "a/b"}]}`.
impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    exp: e.clone(),
                    c: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PolyRepr::deserialize(d)?;
        let terms = r
            .terms
            .into_iter()
            .map(|t| Ok((t.exp, parse_rational(&t.c)?)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Polynomial::from_terms(terms))
    }
}

/// A polynomial map `R^source -> R^target`, one polynomial per target
/// coordinate.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PolyMap {
    source: usize,
    components: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(source: usize, components: Vec<Polynomial>) -> Result<Self> {
        if let Some(p) = components.iter().find(|p| p.max_var() > source) {
            return Err(Error::Precondition(format!(
                "component {} uses a variable beyond the source dimension {source}",
                p.display(source)
            )));
        }
        Ok(PolyMap { source, components })
    }

    pub fn identity(n: usize) -> Self {
        PolyMap {
            source: n,
            components: (1..=n).map(Polynomial::var).collect(),
        }
    }

    /// `x_i -> x_i + shift_i`.
    pub fn translation(shift: &[BigRational]) -> Self {
        let n = shift.len();
        PolyMap {
            source: n,
            components: (1..=n)
                .map(|i| Polynomial::var(i).add(&Polynomial::constant(shift[i - 1].clone())))
                .collect(),
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &PolyMap) -> Result<PolyMap> {
        if inner.target() != self.source {
            return Err(Error::DimensionMismatch {
                expected: self.source,
                found: inner.target(),
            });
        }
        let components = self
            .components
            .iter()
            .map(|p| p.substitute(&inner.components))
            .collect::<Result<_>>()?;
        PolyMap::new(inner.source, components)
    }

    pub fn eval(&self, point: &[BigRational]) -> Result<Vec<BigRational>> {
        if point.len() != self.source {
            return Err(Error::DimensionMismatch {
                expected: self.source,
                found: point.len(),
            });
        }
        self.components.iter().map(|p| p.eval(point)).collect()
    }
}
