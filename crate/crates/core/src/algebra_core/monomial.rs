//! Commutative monomials over named generators.

use std::collections::BTreeMap;
use std::fmt;

/// A commutative monomial: finitely many generator names with positive
/// exponents. The empty monomial is the ring unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exponents: BTreeMap<String, u32>,
}

impl Monomial {
    /// The unit monomial (degree zero).
    pub fn one() -> Self {
        Monomial::default()
    }

    /// The monomial consisting of a single generator.
    pub fn gen(name: &str) -> Self {
        let mut exponents = BTreeMap::new();
        exponents.insert(name.to_owned(), 1);
        Monomial { exponents }
    }

    /// Builds a monomial from `(name, exponent)` pairs; zero exponents are
    /// dropped.
    pub fn from_pairs<I: IntoIterator<Item = (String, u32)>>(pairs: I) -> Self {
        let mut exponents = BTreeMap::new();
        for (name, e) in pairs {
            if e > 0 {
                *exponents.entry(name).or_insert(0) += e;
            }
        }
        Monomial { exponents }
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Product of two monomials (exponents add).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (name, e) in &other.exponents {
            *exponents.entry(name.clone()).or_insert(0) += e;
        }
        Monomial { exponents }
    }

    /// Iterates `(name, exponent)` pairs in name order.
    pub fn exponents(&self) -> impl Iterator<Item = (&str, u32)> {
        self.exponents.iter().map(|(n, &e)| (n.as_str(), e))
    }

    /// Exponent of one generator (zero when absent).
    pub fn exponent_of(&self, name: &str) -> u32 {
        self.exponents.get(name).copied().unwrap_or(0)
    }

    /// Sum of exponents weighted by generator degrees; `None` when a
    /// generator is not present in `degrees`.
    pub fn weighted_degree(&self, degrees: &BTreeMap<String, usize>) -> Option<usize> {
        let mut total = 0usize;
        for (name, e) in &self.exponents {
            total += degrees.get(name)? * (*e as usize);
        }
        Some(total)
    }

    /// First generator name (if any) missing from `degrees`.
    pub fn unknown_generator(&self, degrees: &BTreeMap<String, usize>) -> Option<&str> {
        self.exponents
            .keys()
            .find(|n| !degrees.contains_key(*n))
            .map(String::as_str)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, e) in &self.exponents {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_add_exponents() {
        let lz = Monomial::gen("L").mul(&Monomial::gen("Z"));
        let l2z = lz.mul(&Monomial::gen("L"));
        assert_eq!(l2z.exponent_of("L"), 2);
        assert_eq!(l2z.exponent_of("Z"), 1);
        assert_eq!(l2z.to_string(), "L^2*Z");
        assert_eq!(Monomial::one().to_string(), "1");
    }

    #[test]
    fn weighted_degree_uses_generator_degrees() {
        let mut degrees = BTreeMap::new();
        degrees.insert("L".to_owned(), 1);
        degrees.insert("Q".to_owned(), 2);
        let m = Monomial::from_pairs([("L".to_owned(), 3), ("Q".to_owned(), 1)]);
        assert_eq!(m.weighted_degree(&degrees), Some(5));
        let bad = Monomial::gen("X");
        assert_eq!(bad.weighted_degree(&degrees), None);
        assert_eq!(bad.unknown_generator(&degrees), Some("X"));
    }
}
