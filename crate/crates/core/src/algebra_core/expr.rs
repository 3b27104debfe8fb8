//! Polynomial class expressions: exact linear combinations of monomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::monomial::Monomial;
use super::rat::{fmt_rat, Rat};

/// A finite rational linear combination of monomials. Zero coefficients are
/// never stored; the zero expression has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassExpr {
    terms: BTreeMap<Monomial, Rat>,
}

impl ClassExpr {
    pub fn zero() -> Self {
        ClassExpr::default()
    }

    /// The ring unit as an expression.
    pub fn one() -> Self {
        ClassExpr::constant(Rat::from_integer(1.into()))
    }

    /// A single generator.
    pub fn gen(name: &str) -> Self {
        ClassExpr::from_monomial(Monomial::gen(name), Rat::from_integer(1.into()))
    }

    /// A constant (degree-zero) expression.
    pub fn constant(c: Rat) -> Self {
        ClassExpr::from_monomial(Monomial::one(), c)
    }

    /// A scaled monomial.
    pub fn from_monomial(m: Monomial, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ClassExpr { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `(monomial, coefficient)` pairs in canonical map order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rat) -> ClassExpr {
        if c.is_zero() {
            return ClassExpr::zero();
        }
        ClassExpr {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    /// Exact polynomial exponentiation.
    pub fn pow(&self, e: u32) -> ClassExpr {
        let mut acc = ClassExpr::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &ClassExpr {
    type Output = ClassExpr;
    fn add(self, rhs: &ClassExpr) -> ClassExpr {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &ClassExpr {
    type Output = ClassExpr;
    fn sub(self, rhs: &ClassExpr) -> ClassExpr {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &ClassExpr {
    type Output = ClassExpr;
    fn neg(self) -> ClassExpr {
        ClassExpr {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &ClassExpr {
    type Output = ClassExpr;
    fn mul(self, rhs: &ClassExpr) -> ClassExpr {
        let mut out = ClassExpr::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let coeff = fmt_rat(c);
            let (sign, magnitude) = match coeff.strip_prefix('-') {
                Some(rest) => ("-", rest.to_owned()),
                None => ("+", coeff),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat::{rat, rat_int};
    use super::*;

    fn gen(n: &str) -> ClassExpr {
        ClassExpr::gen(n)
    }

    #[test]
    fn arithmetic_collects_and_cancels() {
        let l = gen("L");
        let z = gen("Z");
        let t = &l + &z;
        let t_sq = &t * &t;
        // (L+Z)^2 = L^2 + 2LZ + Z^2
        assert_eq!(t_sq.num_terms(), 3);
        let lz = Monomial::gen("L").mul(&Monomial::gen("Z"));
        assert_eq!(t_sq.coefficient(&lz), rat_int(2));
        let cancel = &t_sq - &t_sq;
        assert!(cancel.is_zero());
    }

    #[test]
    fn display_is_deterministic() {
        let e = &(&gen("L") - &gen("Z").scale(&rat(1, 2))) + &ClassExpr::constant(rat_int(3));
        assert_eq!(e.to_string(), "3 + L - 1/2*Z");
        assert_eq!(ClassExpr::zero().to_string(), "0");
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let s = &gen("A") + &gen("B");
        assert_eq!(s.pow(3), &(&s * &s) * &s);
        assert_eq!(s.pow(0), ClassExpr::one());
    }
}
