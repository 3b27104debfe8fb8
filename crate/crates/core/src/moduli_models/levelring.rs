//! The parametric level-surface model: a tiny surface ring over polynomial
//! coefficients in the formal level parameters `n` and `t`, with forced
//! exact cancellation when normalizing by the symmetry-group order.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra_core::rat::{rat, rat_int, Rat};

use super::{CatalogEntry, ModelError};

/// A polynomial in the commuting formal parameters `n` and `t` with exact
/// rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParamPoly {
    /// (n-exponent, t-exponent) → coefficient; no zero coefficients stored.
    terms: BTreeMap<(u32, u32), Rat>,
}

impl ParamPoly {
    pub fn zero() -> ParamPoly {
        ParamPoly::default()
    }

    pub fn constant(c: Rat) -> ParamPoly {
        ParamPoly::monomial(c, 0, 0)
    }

    /// `c·n^a·t^b`.
    pub fn monomial(c: Rat, a: u32, b: u32) -> ParamPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        ParamPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the polynomial has no parameter dependence.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, other: &ParamPoly) -> ParamPoly {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            let entry = terms.entry(*k).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(k);
            }
        }
        ParamPoly { terms }
    }

    pub fn neg(&self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                out = out.add(&ParamPoly::monomial(c1 * c2, a1 + a2, b1 + b2));
            }
        }
        out
    }

    /// Exact division by the monomial `c·n^a·t^b`. Every term must be
    /// divisible — no remainder, no approximation.
    pub fn divide_by_monomial(&self, c: &Rat, a: u32, b: u32) -> Result<ParamPoly, ModelError> {
        assert!(!c.is_zero(), "division by the zero monomial");
        let mut terms = BTreeMap::new();
        for ((na, tb), coeff) in &self.terms {
            if *na < a || *tb < b {
                return Err(ModelError::ParameterNotCancelled);
            }
            terms.insert((na - a, tb - b), coeff / c);
        }
        Ok(ParamPoly { terms })
    }
}

impl std::fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            if *a > 0 {
                write!(f, "*n^{a}")?;
            }
            if *b > 0 {
                write!(f, "*t^{b}")?;
            }
        }
        Ok(())
    }
}

/// An element of the parametric surface ring over the basis {1, S, N, SN}
/// with S² = N² = 0 and ∫SN = 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LevelElem {
    pub c1: ParamPoly,
    pub cs: ParamPoly,
    pub cn: ParamPoly,
    pub csn: ParamPoly,
}

impl LevelElem {
    pub fn zero() -> LevelElem {
        LevelElem::default()
    }

    pub fn from_parts(c1: ParamPoly, cs: ParamPoly, cn: ParamPoly, csn: ParamPoly) -> LevelElem {
        LevelElem { c1, cs, cn, csn }
    }

    pub fn add(&self, other: &LevelElem) -> LevelElem {
        LevelElem {
            c1: self.c1.add(&other.c1),
            cs: self.cs.add(&other.cs),
            cn: self.cn.add(&other.cn),
            csn: self.csn.add(&other.csn),
        }
    }

    pub fn neg(&self) -> LevelElem {
        LevelElem {
            c1: self.c1.neg(),
            cs: self.cs.neg(),
            cn: self.cn.neg(),
            csn: self.csn.neg(),
        }
    }

    /// Product in the ring with S² = N² = 0 (hence SN·S = SN·N = 0).
    pub fn mul(&self, other: &LevelElem) -> LevelElem {
        LevelElem {
            c1: self.c1.mul(&other.c1),
            cs: self.c1.mul(&other.cs).add(&self.cs.mul(&other.c1)),
            cn: self.c1.mul(&other.cn).add(&self.cn.mul(&other.c1)),
            csn: self
                .c1
                .mul(&other.csn)
                .add(&self.csn.mul(&other.c1))
                .add(&self.cs.mul(&other.cn))
                .add(&self.cn.mul(&other.cs)),
        }
    }

    pub fn scale_poly(&self, p: &ParamPoly) -> LevelElem {
        LevelElem {
            c1: self.c1.mul(p),
            cs: self.cs.mul(p),
            cn: self.cn.mul(p),
            csn: self.csn.mul(p),
        }
    }

    /// The integral: the SN-coefficient.
    pub fn integrate(&self) -> ParamPoly {
        self.csn.clone()
    }
}

impl std::fmt::Display for LevelElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        for (poly, label) in [
            (&self.c1, ""),
            (&self.cs, "*S"),
            (&self.cn, "*N"),
            (&self.csn, "*S*N"),
        ] {
            if !poly.is_zero() {
                parts.push(format!("({poly}){label}"));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The parametric level-surface space: ambient classes restricted to the
/// level-n parametric surface, with the group-order normalization.
#[derive(Debug, Clone)]
pub struct LevelParamRing {
    name: String,
    catalog: Vec<(String, LevelElem, String)>,
}

impl LevelParamRing {
    /// Installs the restricted ambient classes:
    /// 12L| = n·t·N, D| = −2n·S + n·t·N, M| = 2n·S, β₂| = −2n²·t·SN.
    /// Boundary branching contributes the factor n (n² for β₂'s two
    /// boundary slots).
    pub fn build() -> LevelParamRing {
        let s = LevelElem::from_parts(
            ParamPoly::zero(),
            ParamPoly::constant(rat_int(1)),
            ParamPoly::zero(),
            ParamPoly::zero(),
        );
        let nfib = LevelElem::from_parts(
            ParamPoly::zero(),
            ParamPoly::zero(),
            ParamPoly::constant(rat_int(1)),
            ParamPoly::zero(),
        );
        let l = nfib.scale_poly(&ParamPoly::monomial(rat(1, 12), 1, 1));
        let d = s
            .scale_poly(&ParamPoly::monomial(rat_int(-2), 1, 0))
            .add(&nfib.scale_poly(&ParamPoly::monomial(rat_int(1), 1, 1)));
        let m = s.scale_poly(&ParamPoly::monomial(rat_int(2), 1, 0));
        let b2 = LevelElem::from_parts(
            ParamPoly::zero(),
            ParamPoly::zero(),
            ParamPoly::zero(),
            ParamPoly::monomial(rat_int(-2), 2, 1),
        );
        let catalog = vec![
            (
                "S".to_owned(),
                s,
                "0-section class of the parametric surface".to_owned(),
            ),
            (
                "N".to_owned(),
                nfib,
                "fiber class of the parametric surface".to_owned(),
            ),
            (
                "L".to_owned(),
                l,
                "restriction of L: (1/12)*n*t*N".to_owned(),
            ),
            (
                "D".to_owned(),
                d,
                "restriction of D: n*(-2*S + t*N), branching factor n".to_owned(),
            ),
            ("M".to_owned(), m, "restriction of M: 2*n*S".to_owned()),
            (
                "B2".to_owned(),
                b2,
                "restriction of B2: -2*n^2*t*S*N, branching factor n^2".to_owned(),
            ),
        ];
        LevelParamRing {
            name: "SP_level".to_owned(),
            catalog,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn resolve(&self, name: &str) -> Option<&LevelElem> {
        self.catalog
            .iter()
            .find(|(n, _, _)| n == name)
            .map(|(_, e, _)| e)
    }

    /// Integral divided by the symmetry-group order `16n²t`; every power of
    /// the formal parameters must cancel exactly.
    pub fn normalized_value(&self, x: &LevelElem) -> Result<Rat, ModelError> {
        let integral = x.integrate();
        let quotient = integral.divide_by_monomial(&rat_int(16), 2, 1)?;
        quotient
            .as_constant()
            .ok_or(ModelError::ParameterNotCancelled)
    }

    /// The six normalized pairings of the parametric surface against
    /// {L², LD, D², LM, M², β₂}, keyed L2, LD, D2, LM, M2, B2.
    pub fn pairing_row(&self) -> Vec<(String, Rat)> {
        let l = self.resolve("L").unwrap().clone();
        let d = self.resolve("D").unwrap().clone();
        let m = self.resolve("M").unwrap().clone();
        let b2 = self.resolve("B2").unwrap().clone();
        let entries = [
            ("L2", l.mul(&l)),
            ("LD", l.mul(&d)),
            ("D2", d.mul(&d)),
            ("LM", l.mul(&m)),
            ("M2", m.mul(&m)),
            ("B2", b2),
        ];
        entries
            .into_iter()
            .map(|(name, e)| {
                (
                    name.to_owned(),
                    self.normalized_value(&e)
                        .expect("model classes normalize exactly"),
                )
            })
            .collect()
    }

    pub fn catalog_entries(&self) -> Vec<CatalogEntry> {
        self.catalog
            .iter()
            .map(|(name, elem, description)| CatalogEntry {
                name: name.clone(),
                degree: match name.as_str() {
                    "B2" => 2,
                    _ => 1,
                },
                expression: elem.to_string(),
                description: description.clone(),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_row_matches_the_published_values() {
        let ring = LevelParamRing::build();
        let row = ring.pairing_row();
        let expected = [
            ("L2", rat_int(0)),
            ("LD", rat(-1, 96)),
            ("D2", rat(-1, 4)),
            ("LM", rat(1, 96)),
            ("M2", rat_int(0)),
            ("B2", rat(-1, 8)),
        ];
        for ((name, value), (ename, evalue)) in row.iter().zip(expected) {
            assert_eq!(name, ename);
            assert_eq!(*value, evalue, "{name}");
        }
    }

    #[test]
    fn uncancelled_parameters_are_an_error() {
        let ring = LevelParamRing::build();
        // S·N integrates to 1, which does not contain the 16n²t factor.
        let s = ring.resolve("S").unwrap().clone();
        let n = ring.resolve("N").unwrap().clone();
        assert!(matches!(
            ring.normalized_value(&s.mul(&n)),
            Err(ModelError::ParameterNotCancelled)
        ));
    }

    #[test]
    fn nilpotent_squares_vanish() {
        let ring = LevelParamRing::build();
        let s = ring.resolve("S").unwrap().clone();
        let n = ring.resolve("N").unwrap().clone();
        assert!(s.mul(&s).integrate().is_zero());
        assert!(n.mul(&n).integrate().is_zero());
        assert_eq!(s.mul(&n).integrate(), ParamPoly::constant(rat_int(1)));
    }

    #[test]
    fn division_is_exact_or_fails() {
        let p = ParamPoly::monomial(rat_int(4), 3, 2);
        let q = p.divide_by_monomial(&rat_int(2), 1, 1).unwrap();
        assert_eq!(q, ParamPoly::monomial(rat_int(2), 2, 1));
        assert!(p.divide_by_monomial(&rat_int(2), 4, 0).is_err());
        let mixed = ParamPoly::monomial(rat_int(1), 2, 1).add(&ParamPoly::monomial(rat_int(1), 0, 1));
        assert!(mixed.divide_by_monomial(&rat_int(1), 1, 0).is_err());
    }
}
