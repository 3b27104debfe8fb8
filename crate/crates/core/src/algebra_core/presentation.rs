//! Finite presentations of graded commutative algebras and their
//! build-time validation errors.

use std::collections::BTreeMap;

use num_traits::{One, Signed};

use super::expr::ClassExpr;
use super::monomial::Monomial;
use super::rat::Rat;

/// One declared generator: a name and a positive (codimension) degree.
/// Divisor classes have degree 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: usize,
}

impl GeneratorSpec {
    pub fn new(name: &str, degree: usize) -> Self {
        GeneratorSpec {
            name: name.to_owned(),
            degree,
        }
    }
}

/// A finite presentation: generators, homogeneous relations, a top degree,
/// the integral values pinning the top-degree functional, and a positive
/// overall scale multiplying the solved functional (quotient-stack factor).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<GeneratorSpec>,
    pub relations: Vec<ClassExpr>,
    pub top_degree: usize,
    /// Pairs `(monomial of top degree, required integral value)`; one or
    /// more entries; must pin the functional uniquely.
    pub integral_spec: Vec<(Monomial, Rat)>,
    pub scale: Rat,
}

impl Presentation {
    pub fn new(
        generators: Vec<GeneratorSpec>,
        relations: Vec<ClassExpr>,
        top_degree: usize,
        integral_spec: Vec<(Monomial, Rat)>,
    ) -> Self {
        Presentation {
            generators,
            relations,
            top_degree,
            integral_spec,
            scale: Rat::one(),
        }
    }

    pub fn with_scale(mut self, scale: Rat) -> Self {
        self.scale = scale;
        self
    }

    /// Map generator name → degree, in declaration order semantics.
    pub fn degree_map(&self) -> BTreeMap<String, usize> {
        self.generators
            .iter()
            .map(|g| (g.name.clone(), g.degree))
            .collect()
    }

    /// Structural validation run before any linear algebra.
    pub fn validate(&self) -> Result<(), BuildError> {
        let mut seen = BTreeMap::new();
        for g in &self.generators {
            if g.degree == 0 {
                return Err(BuildError::ZeroDegreeGenerator(g.name.clone()));
            }
            if seen.insert(g.name.clone(), ()).is_some() {
                return Err(BuildError::DuplicateGenerator(g.name.clone()));
            }
        }
        if self.top_degree == 0 {
            return Err(BuildError::ZeroTopDegree);
        }
        if !self.scale.is_positive() {
            return Err(BuildError::NonPositiveScale);
        }
        let degrees = self.degree_map();
        for rel in &self.relations {
            let mut rel_degree: Option<usize> = None;
            if rel.is_zero() {
                continue;
            }
            for (m, _) in rel.terms() {
                if let Some(unknown) = m.unknown_generator(&degrees) {
                    return Err(BuildError::UnknownGenerator(unknown.to_owned()));
                }
                let d = m
                    .weighted_degree(&degrees)
                    .expect("unknown generators handled above");
                match rel_degree {
                    None => rel_degree = Some(d),
                    Some(prev) if prev != d => {
                        return Err(BuildError::NonHomogeneousRelation(rel.to_string()))
                    }
                    _ => {}
                }
            }
            let d = rel_degree.expect("nonzero relation has a degree");
            if d == 0 {
                return Err(BuildError::ConstantRelation(rel.to_string()));
            }
            if d > self.top_degree {
                return Err(BuildError::RelationAboveTop {
                    relation: rel.to_string(),
                    degree: d,
                    top: self.top_degree,
                });
            }
        }
        if self.integral_spec.is_empty() {
            return Err(BuildError::UnderdeterminedIntegral);
        }
        for (m, _) in &self.integral_spec {
            if let Some(unknown) = m.unknown_generator(&degrees) {
                return Err(BuildError::UnknownGenerator(unknown.to_owned()));
            }
            let d = m
                .weighted_degree(&degrees)
                .expect("unknown generators handled above");
            if d != self.top_degree {
                return Err(BuildError::IntegralNotTopDegree {
                    monomial: m.to_string(),
                    degree: d,
                    top: self.top_degree,
                });
            }
        }
        Ok(())
    }
}

/// Errors raised while validating or building an algebra from a
/// presentation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("relation `{0}` mixes monomials of different degrees")]
    NonHomogeneousRelation(String),
    #[error("generator `{0}` is declared more than once")]
    DuplicateGenerator(String),
    #[error("generator `{0}` must have positive degree")]
    ZeroDegreeGenerator(String),
    #[error("top degree must be positive")]
    ZeroTopDegree,
    #[error("scale must be positive")]
    NonPositiveScale,
    #[error("relation `{0}` mentions an undeclared generator or is constant")]
    ConstantRelation(String),
    #[error("relation `{relation}` has degree {degree}, above the top degree {top}")]
    RelationAboveTop {
        relation: String,
        degree: usize,
        top: usize,
    },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("integral monomial `{monomial}` has degree {degree}, not the top degree {top}")]
    IntegralNotTopDegree {
        monomial: String,
        degree: usize,
        top: usize,
    },
    #[error("integral rule contradicts the relations")]
    InconsistentIntegral,
    #[error("integral rule does not determine the top-degree functional")]
    UnderdeterminedIntegral,
    #[error("generator name `{0}` appears in both tensor factors")]
    NameCollision(String),
}

#[cfg(test)]
mod tests {
    use super::super::rat::rat;
    use super::*;

    fn x1_presentation() -> Presentation {
        let l = ClassExpr::gen("L");
        let z = ClassExpr::gen("Z");
        Presentation::new(
            vec![GeneratorSpec::new("L", 1), GeneratorSpec::new("Z", 1)],
            vec![l.pow(2), &z.pow(2) + &(&l * &z)],
            2,
            vec![(
                Monomial::gen("L").mul(&Monomial::gen("Z")),
                rat(1, 24),
            )],
        )
    }

    #[test]
    fn valid_presentation_passes() {
        assert_eq!(x1_presentation().validate(), Ok(()));
    }

    #[test]
    fn mixed_degree_relation_is_rejected() {
        let mut p = x1_presentation();
        p.relations
            .push(&ClassExpr::gen("L") + &ClassExpr::gen("L").pow(2));
        assert!(matches!(
            p.validate(),
            Err(BuildError::NonHomogeneousRelation(_))
        ));
    }

    #[test]
    fn duplicate_generator_is_rejected() {
        let mut p = x1_presentation();
        p.generators.push(GeneratorSpec::new("L", 1));
        assert_eq!(
            p.validate(),
            Err(BuildError::DuplicateGenerator("L".into()))
        );
    }

    #[test]
    fn relation_above_top_is_rejected() {
        let mut p = x1_presentation();
        p.relations.push(ClassExpr::gen("Z").pow(3));
        assert!(matches!(
            p.validate(),
            Err(BuildError::RelationAboveTop { degree: 3, top: 2, .. })
        ));
    }

    #[test]
    fn integral_entries_must_sit_in_top_degree() {
        let mut p = x1_presentation();
        p.integral_spec = vec![(Monomial::gen("L"), rat(1, 24))];
        assert!(matches!(
            p.validate(),
            Err(BuildError::IntegralNotTopDegree { .. })
        ));
        p.integral_spec = vec![];
        assert_eq!(p.validate(), Err(BuildError::UnderdeterminedIntegral));
    }
}
