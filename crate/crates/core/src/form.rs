//! Sparse alternating forms over an arbitrary commutative coefficient ring.
//!
//! Basis monomials `dx^{i1} ^ ... ^ dx^{ip}` are stored as bitmasks
//! ([`Blade`]); index tuples at the API boundary are 1-based and strictly
//! increasing. Only nonzero coefficients are stored, so two forms are equal
//! iff their term maps are equal.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const MAX_DIM: usize = 16;

/// Ring operations needed to build forms.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
}

impl Coefficient for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

/// A basis monomial, i.e. a subset of `{1..=16}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u16);

impl Blade {
    pub const EMPTY: Blade = Blade(0);

    pub fn from_indices(dim: usize, indices: &[usize]) -> Result<Blade> {
        let mut mask = 0u16;
        let mut prev = 0;
        for &i in indices {
            if i == 0 || i > dim {
                return Err(Error::InvalidIndex(indices.to_vec(), "index out of range"));
            }
            if i <= prev {
                return Err(Error::InvalidIndex(indices.to_vec(), "indices must be strictly increasing"));
            }
            prev = i;
            mask |= 1 << (i - 1);
        }
        Ok(Blade(mask))
    }

    pub fn single(i: usize) -> Blade {
        debug_assert!((1..=MAX_DIM).contains(&i));
        Blade(1 << (i - 1))
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    /// 1-based indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        (0..16).filter(|b| self.0 & (1 << b) != 0).map(|b| b + 1).collect()
    }

    /// Sign of `self ^ other` relative to the sorted blade, `None` on overlap.
    pub fn wedge_sign(self, other: Blade) -> Option<i32> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut swaps = 0;
        let mut rest = other.0;
        while rest != 0 {
            let b = rest.trailing_zeros();
            // elements of self above b must hop over it
            swaps += (self.0 >> b).count_ones();
            rest &= rest - 1;
        }
        Some(if swaps % 2 == 0 { 1 } else { -1 })
    }

    pub fn union(self, other: Blade) -> Blade {
        Blade(self.0 | other.0)
    }

    pub fn without(self, i: usize) -> Blade {
        Blade(self.0 & !(1 << (i - 1)))
    }

    /// Sign picked up by moving `dx^i` to the front before removing it.
    pub fn removal_sign(self, i: usize) -> i32 {
        let below = (self.0 & ((1u16 << (i - 1)) - 1)).count_ones();
        if below.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All blades of the given degree in lexicographic order of index tuples.
    pub fn all(dim: usize, degree: usize) -> Vec<Blade> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(degree);
        fn rec(start: usize, dim: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Blade>) {
            if left == 0 {
                out.push(Blade(cur.iter().fold(0u16, |m, &i| m | 1 << (i - 1))));
                return;
            }
            for i in start..=dim {
                if dim - i + 1 < left {
                    break;
                }
                cur.push(i);
                rec(i + 1, dim, left - 1, cur, out);
                cur.pop();
            }
        }
        if degree <= dim {
            rec(1, dim, degree, &mut current, &mut out);
        }
        out
    }
}

impl Ord for Blade {
    // degree first, then lexicographic on index tuples
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.indices())
    }
}

/// Homogeneous alternating form of fixed degree on a `dim`-dimensional space.
///
/// A degree above `dim` is permitted only for the zero form, which is what
/// over-degree wedge products produce.
#[derive(Clone, PartialEq)]
pub struct Form<C: Coefficient> {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Blade, C>,
}

impl<C: Coefficient> Form<C> {
    pub fn zero(dim: usize, degree: usize) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge(dim));
        }
        Ok(Form {
            dim,
            degree,
            terms: BTreeMap::new(),
        })
    }

    pub fn from_terms<I>(dim: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, C)>,
    {
        let mut form = Form::zero(dim, degree)?;
        for (idx, c) in terms {
            if idx.len() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: idx.len(),
                });
            }
            let blade = Blade::from_indices(dim, &idx)?;
            form.add_term(blade, &c);
        }
        Ok(form)
    }

    /// `c * dx^{indices}`; the indices must be strictly increasing.
    pub fn monomial(dim: usize, indices: &[usize], c: C) -> Result<Self> {
        Form::from_terms(dim, indices.len(), [(indices.to_vec(), c)])
    }

    pub fn basis(dim: usize, indices: &[usize]) -> Result<Self> {
        Form::monomial(dim, indices, C::one())
    }

    /// Constant function `c` viewed as a 0-form.
    pub fn constant(dim: usize, c: C) -> Result<Self> {
        Form::from_terms(dim, 0, [(Vec::new(), c)])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn blades(&self) -> impl Iterator<Item = (Blade, &C)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    /// Terms as `(1-based indices, coefficient)` in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &C)> {
        self.terms.iter().map(|(b, c)| (b.indices(), c))
    }

    pub fn coefficient(&self, indices: &[usize]) -> C {
        Blade::from_indices(self.dim, indices)
            .ok()
            .and_then(|b| self.terms.get(&b).cloned())
            .unwrap_or_else(C::zero)
    }

    pub fn coefficient_of(&self, blade: Blade) -> C {
        self.terms.get(&blade).cloned().unwrap_or_else(C::zero)
    }

    pub(crate) fn add_term(&mut self, blade: Blade, c: &C) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&blade) {
            Some(old) => old.plus(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&blade);
        } else {
            self.terms.insert(blade, sum);
        }
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coefficients(|c| c.negated())
    }

    pub fn scale(&self, s: &C) -> Self {
        self.map_coefficients(|c| c.times(s))
    }

    /// Apply `f` to every coefficient, dropping terms that become zero.
    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Form<D> {
        Form {
            dim: self.dim,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Exterior product. When `p + q > dim` the result is the zero form of
    /// degree `p + q`.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let mut out = Form::zero(self.dim, self.degree + other.degree)?;
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(sign) = a.wedge_sign(*b) {
                    let c = ca.times(cb);
                    let c = if sign < 0 { c.negated() } else { c };
                    out.add_term(a.union(*b), &c);
                }
            }
        }
        Ok(out)
    }

    /// `k`-fold wedge power; the 0-th power is the constant 1.
    pub fn wedge_power(&self, k: usize) -> Result<Self> {
        let mut acc = Form::constant(self.dim, C::one())?;
        for _ in 0..k {
            acc = acc.wedge(self)?;
        }
        Ok(acc)
    }

    /// Interior product with a coordinate vector `v` (length `dim`).
    pub fn contract(&self, v: &[C]) -> Result<Self> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        if self.degree == 0 {
            return Err(Error::Precondition("cannot contract a 0-form".into()));
        }
        let mut out = Form::zero(self.dim, self.degree - 1)?;
        for (blade, c) in &self.terms {
            for i in blade.indices() {
                let vi = &v[i - 1];
                if vi.is_zero() {
                    continue;
                }
                let term = c.times(vi);
                let term = if blade.removal_sign(i) < 0 { term.negated() } else { term };
                out.add_term(blade.without(i), &term);
            }
        }
        Ok(out)
    }

    /// Reindex into a larger space through `map[i-1] = new index of i`.
    /// The map must be strictly increasing so that blade order is preserved.
    pub fn lift(&self, new_dim: usize, map: &[usize]) -> Result<Self> {
        if map.len() != self.dim || map.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition("lift map must be strictly increasing".into()));
        }
        let mut out = Form::zero(new_dim, self.degree)?;
        for (blade, c) in &self.terms {
            let idx: Vec<usize> = blade.indices().iter().map(|&i| map[i - 1]).collect();
            out.add_term(Blade::from_indices(new_dim, &idx)?, c);
        }
        Ok(out)
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for Form<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (blade, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let idx = blade.indices();
            if idx.is_empty() {
                write!(f, "({c})")?;
            } else {
                let names: Vec<String> = idx.iter().map(|i| format!("e{i}")).collect();
                write!(f, "({c}) {}", names.join("^"))?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient + fmt::Display> fmt::Debug for Form<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form<dim {}, deg {}>[{}]", self.dim, self.degree, self)
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct TermRepr<C> {
    idx: Vec<usize>,
    c: C,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct FormRepr<C> {
    dim: usize,
    degree: usize,
    terms: Vec<TermRepr<C>>,
}

/// `{"dim": n, "degree": p, "terms": [{"idx": [i1, ..], "c": ..}]}` with
/// 1-based indices.
impl<C: Coefficient + serde::Serialize> serde::Serialize for Form<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FormRepr {
            dim: self.dim,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| TermRepr {
                    idx: b.indices(),
                    c: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, C: Coefficient + serde::Deserialize<'de>> serde::Deserialize<'de> for Form<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = FormRepr::<C>::deserialize(d)?;
        Form::from_terms(r.dim, r.degree, r.terms.into_iter().map(|t| (t.idx, t.c)))
            .map_err(serde::de::Error::custom)
    }
}
