//! Degree-preserving algebra homomorphisms, finite group actions given by
//! generator images, and exact invariant subspaces.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::expr::ClassExpr;
use super::linalg::{fixed_space, Mat};
use super::quotient::GradedAlgebra;
use super::rat::Rat;
use super::EvalError;

/// A ring homomorphism described by an image expression for each generator.
/// Generators without an image are rejected at substitution time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraHom {
    pub images: BTreeMap<String, ClassExpr>,
}

impl AlgebraHom {
    pub fn new<I, S>(images: I) -> AlgebraHom
    where
        I: IntoIterator<Item = (S, ClassExpr)>,
        S: Into<String>,
    {
        AlgebraHom {
            images: images.into_iter().map(|(n, x)| (n.into(), x)).collect(),
        }
    }

    /// Identity on the given generator names.
    pub fn identity<'a, I: IntoIterator<Item = &'a str>>(names: I) -> AlgebraHom {
        AlgebraHom {
            images: names
                .into_iter()
                .map(|n| (n.to_owned(), ClassExpr::gen(n)))
                .collect(),
        }
    }

    /// Replaces every generator occurrence in `x` by its image and expands.
    /// Fails with [`EvalError::UnmappedGenerator`] when `x` mentions a
    /// generator that has no declared image.
    pub fn substitute(&self, x: &ClassExpr) -> Result<ClassExpr, EvalError> {
        let mut out = ClassExpr::zero();
        for (mono, coeff) in x.terms() {
            let mut term = ClassExpr::constant(coeff.clone());
            for (name, e) in mono.exponents() {
                let image = self
                    .images
                    .get(name)
                    .ok_or_else(|| EvalError::UnmappedGenerator(name.to_owned()))?;
                term = &term * &image.pow(e);
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Composition `self ∘ other`: first apply `other`, then `self`.
    pub fn compose(&self, other: &AlgebraHom) -> Result<AlgebraHom, EvalError> {
        let mut images = BTreeMap::new();
        for (name, image) in &other.images {
            images.insert(name.clone(), self.substitute(image)?);
        }
        Ok(AlgebraHom { images })
    }
}

/// A finite group action presented as the list of its elements' generator
/// maps (the identity may be included or omitted; it fixes everything).
#[derive(Debug, Clone)]
pub struct GroupAction {
    pub maps: Vec<AlgebraHom>,
}

impl GroupAction {
    pub fn new(maps: Vec<AlgebraHom>) -> GroupAction {
        GroupAction { maps }
    }
}

/// Exact basis of the simultaneous fixed space of `action` on the degree-`d`
/// residue basis of `algebra`, as expressions over that basis in reduced row
/// echelon form (deterministic output).
///
/// Every map must send each declared generator to a homogeneous expression
/// of the generator's own degree; otherwise the action does not act on the
/// graded pieces and [`EvalError::ActionNotDegreePreserving`] is returned.
pub fn invariant_subspace(
    algebra: &GradedAlgebra,
    action: &GroupAction,
    degree: usize,
) -> Result<Vec<ClassExpr>, EvalError> {
    for hom in &action.maps {
        validate_degree_preserving(algebra, hom)?;
    }

    let basis = algebra.basis(degree);
    let dim = basis.len();
    if dim == 0 {
        return Ok(Vec::new());
    }

    let mut mats = Vec::with_capacity(action.maps.len());
    for hom in &action.maps {
        let mut mat = Mat::zeros(dim, dim);
        for (j, b) in basis.iter().enumerate() {
            let image = algebra.normal_form(&hom.substitute(b)?)?;
            let coords = algebra.coordinates(&image, degree)?;
            for (i, c) in coords.into_iter().enumerate() {
                mat.set(i, j, c);
            }
        }
        mats.push(mat);
    }

    let vectors = fixed_space(&mats);
    Ok(vectors
        .into_iter()
        .map(|v| combine(&basis, &v))
        .collect())
}

fn validate_degree_preserving(
    algebra: &GradedAlgebra,
    hom: &AlgebraHom,
) -> Result<(), EvalError> {
    for (name, image) in &hom.images {
        if !algebra.has_generator(name) {
            return Err(EvalError::UnknownGenerator(name.clone()));
        }
        let expected = algebra.generator_degree(name).expect("declared generator");
        match algebra.expr_degree(image)? {
            None => {} // zero image is homogeneous of every degree
            Some(d) if d == expected => {}
            Some(_) => {
                return Err(EvalError::ActionNotDegreePreserving(name.clone()));
            }
        }
    }
    Ok(())
}

fn combine(basis: &[ClassExpr], coords: &[Rat]) -> ClassExpr {
    let mut out = ClassExpr::zero();
    for (b, c) in basis.iter().zip(coords) {
        if !c.is_zero() {
            out = &out + &b.scale(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::monomial::Monomial;
    use super::super::presentation::{GeneratorSpec, Presentation};
    use super::super::rat::{rat, rat_int};
    use super::super::tensor::tensor_product;
    use super::*;

    fn x1_named(l: &str, z: &str) -> GradedAlgebra {
        let lg = ClassExpr::gen(l);
        let zg = ClassExpr::gen(z);
        GradedAlgebra::build(Presentation::new(
            vec![GeneratorSpec::new(l, 1), GeneratorSpec::new(z, 1)],
            vec![lg.pow(2), &zg.pow(2) + &(&lg * &zg)],
            2,
            vec![(Monomial::gen(l).mul(&Monomial::gen(z)), rat(1, 24))],
        ))
        .expect("valid presentation")
    }

    fn product() -> GradedAlgebra {
        tensor_product(&x1_named("L1", "Z1"), &x1_named("L2", "Z2"), rat(1, 2)).unwrap()
    }

    fn swap() -> AlgebraHom {
        AlgebraHom::new([
            ("L1", ClassExpr::gen("L2")),
            ("Z1", ClassExpr::gen("Z2")),
            ("L2", ClassExpr::gen("L1")),
            ("Z2", ClassExpr::gen("Z1")),
        ])
    }

    #[test]
    fn substitution_expands_products() {
        let hom = swap();
        let x = &ClassExpr::gen("L1") * &ClassExpr::gen("Z1");
        assert_eq!(
            hom.substitute(&x).unwrap(),
            &ClassExpr::gen("L2") * &ClassExpr::gen("Z2")
        );
    }

    #[test]
    fn unmapped_generator_is_reported() {
        let hom = AlgebraHom::new([("L1", ClassExpr::gen("L1"))]);
        let err = hom.substitute(&ClassExpr::gen("Z1")).unwrap_err();
        assert_eq!(err, EvalError::UnmappedGenerator("Z1".into()));
    }

    #[test]
    fn swap_invariants_in_degree_one() {
        let alg = product();
        let action = GroupAction::new(vec![swap()]);
        let inv = invariant_subspace(&alg, &action, 1).unwrap();
        // Canonical order follows the degree-1 residue basis (ascending
        // lexicographic exponent tuples), which begins with Z2.
        let expected = vec![
            &ClassExpr::gen("Z1") + &ClassExpr::gen("Z2"),
            &ClassExpr::gen("L1") + &ClassExpr::gen("L2"),
        ];
        assert_eq!(inv, expected);
    }

    #[test]
    fn non_degree_preserving_map_is_rejected() {
        let alg = product();
        let bad = AlgebraHom::new([
            ("L1", ClassExpr::gen("L1").pow(2)),
            ("Z1", ClassExpr::gen("Z1")),
            ("L2", ClassExpr::gen("L2")),
            ("Z2", ClassExpr::gen("Z2")),
        ]);
        let err = invariant_subspace(&alg, &GroupAction::new(vec![bad]), 1).unwrap_err();
        assert_eq!(err, EvalError::ActionNotDegreePreserving("L1".into()));
    }

    #[test]
    fn composition_matches_sequential_substitution() {
        let hom = swap();
        let comp = hom.compose(&hom).unwrap();
        let x = &ClassExpr::gen("L1") + &ClassExpr::gen("Z2").scale(&rat_int(3));
        assert_eq!(comp.substitute(&x).unwrap(), x);
    }
}
