//! Built-in four-dimensional model algebras (plus a few small helpers such as
//! the Heisenberg algebra), with their distinguished invariant pairs.
//!
//! Entries are written as structure equations `d alpha_k = ...`. Names:
//!
//! | name | structure equations | source |
//! |------|---------------------|--------|
//! | `abelian<n>` | all closed | standard |
//! | `heis3` | `d a3 = a1^a2` | standard |
//! | `heis3xheis3` | `d a3 = a1^a2`, `d a6 = a4^a5` | standard |
//! | `nil3xR` | `d a3 = a1^a2` | stated |
//! | `nil4` | `d a2 = a1^a4`, `d a3 = a2^a4` | stated |
//! | `sol3xR` | `d a1 = a1^a4`, `d a3 = a4^a3` | stated |
//! | `sl2xR` | `[e1,e2]=2e2, [e1,e3]=-2e3, [e2,e3]=e1` | implementer-sourced |
//! | `sol4_0` | `d ai = li ai^a4`, `l = (1,1,-2)` | implementer-sourced |
//! | `sol4_1` | heisenberg with derivation `diag(1,-1,0)` | implementer-sourced |
//! | `aff_c` | `d a1 = a1^a3 - a2^a4`, `d a2 = a1^a4 + a2^a3` | implementer-sourced |
//! | `sol_mn(a,b,c)` | `d ai = li ai^a4`, `l = (a,b,c)`, `a+b+c = 0`, all nonzero | implementer-sourced |

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::Serialize;

use super::{LieAlgebra, StructureConstants};
use crate::error::{Error, Result};
use crate::exterior::{basis_form, ExteriorForm};
use crate::scalar::{parse_rational, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Structure equations and pair transcribed from the stated examples.
    Stated,
    /// Textbook presentation (abelian, Heisenberg).
    Standard,
    /// Presentation chosen here; only conclusions about it are asserted.
    ImplementerSourced,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    /// Structure equations the presentation is meant to realise.
    pub structure_equations: Vec<(usize, ExteriorForm)>,
    /// Distinguished invariant symplectic pair, when one is known.
    pub pair: Option<(ExteriorForm, ExteriorForm)>,
    pub provenance: Provenance,
}

impl CatalogEntry {
    fn new(
        name: &str,
        dim: usize,
        equations: Vec<(usize, ExteriorForm)>,
        pair: Option<(&[usize], &[usize])>,
        provenance: Provenance,
    ) -> Result<Self> {
        let algebra = LieAlgebra::from_structure_equations(dim, &equations, name)?;
        let pair = pair.map(|(a, b)| (basis_form(dim, a), basis_form(dim, b)));
        Ok(CatalogEntry {
            name: name.to_string(),
            algebra,
            structure_equations: equations,
            pair,
            provenance,
        })
    }

    /// Does `d alpha_k` agree with every recorded structure equation (and are
    /// the unlisted duals closed)?
    pub fn matches_structure_equations(&self) -> bool {
        let g = &self.algebra;
        (1..=g.dim()).all(|k| {
            let expected = self
                .structure_equations
                .iter()
                .find(|(i, _)| *i == k)
                .map(|(_, w)| w.clone())
                .unwrap_or_else(|| ExteriorForm::zero(g.dim(), 2).expect("dim"));
            g.constants().d_dual(k) == expected
        })
    }
}

fn two(dim: usize, i: usize, j: usize, c: i64) -> ExteriorForm {
    basis_form(dim, &[i, j]).scale(&Scalar::int(c))
}

fn diagonal_derivation(name: &str, lambdas: [Scalar; 3], provenance: Provenance) -> Result<CatalogEntry> {
    let eqs = lambdas
        .iter()
        .enumerate()
        .filter(|(_, l)| !l.is_zero())
        .map(|(i, l)| (i + 1, basis_form(4, &[i + 1, 4]).scale(l)))
        .collect();
    CatalogEntry::new(name, 4, eqs, None, provenance)
}

/// `sol_mn` with rational eigenvalues `a + b + c = 0`, none of them zero
/// (equivalently all pairwise sums nonzero).
pub fn sol_mn(a: BigRational, b: BigRational, c: BigRational) -> Result<CatalogEntry> {
    let [a, b, c] = [a, b, c].map(Scalar::from);
    if !(&(&a + &b) + &c).is_zero() {
        return Err(Error::InvalidParameters(format!("eigenvalues {a}, {b}, {c} must sum to zero")));
    }
    if [&a, &b, &c].iter().any(|x| x.is_zero()) {
        return Err(Error::InvalidParameters(
            "a vanishing eigenvalue gives a vanishing pairwise sum (that is sol3xR)".into(),
        ));
    }
    let name = format!("sol_mn({a},{b},{c})");
    diagonal_derivation(&name, [a, b, c], Provenance::ImplementerSourced)
}

fn sl2_x_r() -> Result<CatalogEntry> {
    let mut c = StructureConstants::abelian(4)?;
    c.set_bracket(1, 2, &[(2, Scalar::int(2))])?;
    c.set_bracket(1, 3, &[(3, Scalar::int(-2))])?;
    c.set_bracket(2, 3, &[(1, Scalar::one())])?;
    let algebra = LieAlgebra::named(c, "sl2xR")?;
    let structure_equations = (1..=4)
        .map(|k| (k, algebra.constants().d_dual(k)))
        .filter(|(_, w)| !w.is_zero())
        .collect();
    Ok(CatalogEntry {
        name: "sl2xR".into(),
        algebra,
        structure_equations,
        pair: None,
        provenance: Provenance::ImplementerSourced,
    })
}

/// A named collection of entries; [`Catalog::standard`] holds the built-ins.
/// Tests may replace entries (for example with deliberately corrupted constants).
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: BTreeMap<String, CatalogEntry>,
}

impl Catalog {
    pub fn standard() -> Self {
        let mut entries = BTreeMap::new();
        let build = || -> Result<Vec<CatalogEntry>> {
            use Provenance::*;
            Ok(vec![
                CatalogEntry::new("abelian4", 4, vec![], Some((&[1, 2], &[3, 4])), Standard)?,
                CatalogEntry::new("heis3", 3, vec![(3, two(3, 1, 2, 1))], None, Standard)?,
                CatalogEntry::new(
                    "heis3xheis3",
                    6,
                    vec![(3, two(6, 1, 2, 1)), (6, two(6, 4, 5, 1))],
                    None,
                    Standard,
                )?,
                CatalogEntry::new("nil3xR", 4, vec![(3, two(4, 1, 2, 1))], Some((&[1, 3], &[2, 4])), Stated)?,
                CatalogEntry::new(
                    "nil4",
                    4,
                    vec![(2, two(4, 1, 4, 1)), (3, two(4, 2, 4, 1))],
                    Some((&[1, 2], &[3, 4])),
                    Stated,
                )?,
                CatalogEntry::new(
                    "sol3xR",
                    4,
                    // d a3 = a4 ^ a3 = -a3 ^ a4
                    vec![(1, two(4, 1, 4, 1)), (3, two(4, 3, 4, -1))],
                    Some((&[1, 3], &[2, 4])),
                    Stated,
                )?,
                sl2_x_r()?,
                diagonal_derivation("sol4_0", [Scalar::int(1), Scalar::int(1), Scalar::int(-2)], ImplementerSourced)?,
                // complex affine algebra aff(C) as a real algebra; not unimodular
                CatalogEntry::new(
                    "aff_c",
                    4,
                    vec![
                        (1, two(4, 1, 3, 1).add(&two(4, 2, 4, -1))?),
                        (2, two(4, 1, 4, 1).add(&two(4, 2, 3, 1))?),
                    ],
                    None,
                    ImplementerSourced,
                )?,
                CatalogEntry::new(
                    "sol4_1",
                    4,
                    vec![(1, two(4, 1, 4, 1)), (2, two(4, 2, 4, -1)), (3, two(4, 1, 2, -1))],
                    None,
                    ImplementerSourced,
                )?,
            ])
        };
        for e in build().expect("built-in catalog entries satisfy Jacobi") {
            entries.insert(e.name.clone(), e);
        }
        Catalog { entries }
    }

    /// Names of the fixed (non-parametric) entries.
    pub fn names(&self) -> Vec<&str> {
        self.entries.keys().map(String::as_str).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.values()
    }

    pub fn insert(&mut self, entry: CatalogEntry) {
        self.entries.insert(entry.name.clone(), entry);
    }

    pub fn entry_mut(&mut self, name: &str) -> Option<&mut CatalogEntry> {
        self.entries.get_mut(name)
    }

    /// Look up a fixed entry, `abelian<n>`, or `sol_mn(a,b,c)`.
    /// Bare `sol_mn` means `sol_mn(1,2,-3)`.
    pub fn get(&self, name: &str) -> Result<CatalogEntry> {
        let name = name.trim();
        if let Some(e) = self.entries.get(name) {
            return Ok(e.clone());
        }
        if let Some(n) = name.strip_prefix("abelian").and_then(|s| s.parse::<usize>().ok()) {
            let pair = (n == 4).then_some((&[1usize, 2][..], &[3usize, 4][..]));
            return CatalogEntry::new(name, n, vec![], pair, Provenance::Standard);
        }
        if name == "sol_mn" {
            return self.get("sol_mn(1,2,-3)");
        }
        if let Some(args) = name.strip_prefix("sol_mn(").and_then(|s| s.strip_suffix(')')) {
            let parts: Vec<&str> = args.split(',').collect();
            if parts.len() != 3 {
                return Err(Error::InvalidParameters(format!("sol_mn needs three eigenvalues, got '{args}'")));
            }
            let q = parts.iter().map(|p| parse_rational(p)).collect::<Result<Vec<_>>>()?;
            let [a, b, c]: [BigRational; 3] = q.try_into().expect("three values");
            return sol_mn(a, b, c);
        }
        Err(Error::UnknownAlgebra(name.to_string()))
    }
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::standard()
    }
}

/// Look up an entry in the standard catalog.
pub fn catalog_get(name: &str) -> Result<CatalogEntry> {
    Catalog::standard().get(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_reproduces_its_equations() {
        for e in Catalog::standard().entries() {
            assert!(e.matches_structure_equations(), "{}", e.name);
            assert!(e.algebra.constants().jacobi_check().is_ok(), "{}", e.name);
        }
    }

    #[test]
    fn stated_structure_equations() {
        let sol = catalog_get("sol3xR").unwrap();
        let d = |k| sol.algebra.constants().d_dual(k);
        assert_eq!(d(1), basis_form(4, &[1, 4]));
        assert_eq!(d(3), two(4, 3, 4, -1));
        assert!(d(2).is_zero() && d(4).is_zero());

        let nil = catalog_get("nil4").unwrap();
        assert_eq!(nil.algebra.ce_d(&basis_form(4, &[3])).unwrap(), basis_form(4, &[2, 4]));
        assert_eq!(nil.pair.as_ref().unwrap().0, basis_form(4, &[1, 2]));
    }

    #[test]
    fn parametric_names() {
        let e = catalog_get("sol_mn(1/2, 1/3, -5/6)").unwrap();
        assert_eq!(e.algebra.dim(), 4);
        assert!(e.algebra.is_unimodular());
        assert!(catalog_get("sol_mn(1,1,1)").is_err());
        assert!(catalog_get("sol_mn(1,0,-1)").is_err());
        assert_eq!(catalog_get("abelian6").unwrap().algebra.dim(), 6);
        assert!(matches!(catalog_get("nope"), Err(Error::UnknownAlgebra(_))));
    }

    #[test]
    fn implementer_sourced_entries_are_unimodular() {
        for name in ["sl2xR", "sol4_0", "sol4_1", "sol_mn"] {
            assert!(catalog_get(name).unwrap().algebra.is_unimodular(), "{name}");
        }
    }
}
