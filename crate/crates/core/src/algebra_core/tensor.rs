//! Tensor products of graded algebras with an explicit scale on the
//! integration functional (quotient-stack bookkeeping).

use num_traits::One;

use super::expr::ClassExpr;
use super::monomial::Monomial;
use super::presentation::{BuildError, Presentation};
use super::quotient::{enumerate_tuples, GradedAlgebra};
use super::rat::Rat;

/// Tensor product `a ⊗ b` with integral `∫(x·y) = scale·∫x·∫y` on classes
/// split between the factors.
///
/// Generator name sets must be disjoint. The combined relation list is the
/// union of both factors' relations plus, for each factor, every monomial of
/// degree `factor_top + 1` in that factor's generators alone: a factor has
/// no classes above its own top degree, and these truncation relations make
/// the integral vanish on any monomial that does not split as
/// top(a) × top(b).
pub fn tensor_product(
    a: &GradedAlgebra,
    b: &GradedAlgebra,
    scale: Rat,
) -> Result<GradedAlgebra, BuildError> {
    for name in b.generator_names() {
        if a.has_generator(name) {
            return Err(BuildError::NameCollision(name.clone()));
        }
    }
    let pa = a.presentation();
    let pb = b.presentation();

    let mut generators = pa.generators.clone();
    generators.extend(pb.generators.iter().cloned());

    let mut relations = pa.relations.clone();
    relations.extend(pb.relations.iter().cloned());
    relations.extend(truncation_monomials(a));
    relations.extend(truncation_monomials(b));

    let top_degree = pa.top_degree + pb.top_degree;

    // Integral rule: products of top-degree residue monomials of the
    // factors, with value scale · ∫_a · ∫_b.
    let mut integral_spec = Vec::new();
    for ma in a.basis(pa.top_degree) {
        for mb in b.basis(pb.top_degree) {
            let va = a.integrate(&ma).expect("factor basis integrates");
            let vb = b.integrate(&mb).expect("factor basis integrates");
            let product = &ma * &mb;
            let (mono, coeff) = product
                .terms()
                .next()
                .map(|(m, c)| (m.clone(), c.clone()))
                .expect("basis product is a single monomial");
            debug_assert!(coeff.is_one());
            integral_spec.push((mono, &(&va * &vb) * &scale));
        }
    }

    // The factor scales are already baked into the factor integrals, and
    // `scale` enters through the integral values above, so the product
    // presentation carries scale 1.
    GradedAlgebra::build(Presentation::new(
        generators,
        relations,
        top_degree,
        integral_spec,
    ))
}

/// All monomials of degree `top + 1` in one factor's generators: the
/// truncation relations of that factor inside a larger tensor product.
fn truncation_monomials(a: &GradedAlgebra) -> Vec<ClassExpr> {
    let p = a.presentation();
    let degrees: Vec<usize> = p.generators.iter().map(|g| g.degree).collect();
    let names: Vec<&str> = p.generators.iter().map(|g| g.name.as_str()).collect();
    enumerate_tuples(p.top_degree + 1, &degrees)
        .into_iter()
        .map(|tuple| {
            let mono = Monomial::from_pairs(
                tuple
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| (names[i].to_owned(), e)),
            );
            ClassExpr::from_monomial(mono, Rat::one())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::presentation::GeneratorSpec;
    use super::super::rat::{rat, rat_int};
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

    #[test]
    fn split_top_monomials_factorize_with_scale() {
        let v = tensor_product(&x1_named("L1", "Z1"), &x1_named("L2", "Z2"), rat(1, 2))
            .expect("tensor builds");
        let m = |pairs: &[(&str, u32)]| {
            ClassExpr::from_monomial(
                Monomial::from_pairs(pairs.iter().map(|(n, e)| (n.to_string(), *e))),
                rat_int(1),
            )
        };
        // (1/2)·(1/24)·(1/24) = 1/1152.
        assert_eq!(
            v.integrate(&m(&[("L1", 1), ("Z1", 1), ("L2", 1), ("Z2", 1)]))
                .unwrap(),
            rat(1, 1152)
        );
        // Non-splitting degree-4 monomials die against the truncation
        // relations.
        assert_eq!(
            v.integrate(&m(&[("Z1", 3), ("Z2", 1)])).unwrap(),
            rat_int(0)
        );
    }

    #[test]
    fn trivial_factor_is_an_identity() {
        let trivial = GradedAlgebra::build(Presentation::new(
            vec![GeneratorSpec::new("U", 1)],
            vec![],
            1,
            vec![(Monomial::gen("U"), rat_int(1))],
        ))
        .unwrap();
        let x = x1_named("L", "Z");
        let prod = tensor_product(&x, &trivial, rat_int(1)).unwrap();
        let lzu = ClassExpr::from_monomial(
            Monomial::from_pairs([
                ("L".to_owned(), 1),
                ("Z".to_owned(), 1),
                ("U".to_owned(), 1),
            ]),
            rat_int(1),
        );
        assert_eq!(prod.integrate(&lzu).unwrap(), rat(1, 24));
    }

    #[test]
    fn name_collision_is_rejected() {
        let a = x1_named("L", "Z");
        let b = x1_named("L", "W");
        assert_eq!(
            tensor_product(&a, &b, rat_int(1)).unwrap_err(),
            BuildError::NameCollision("L".into())
        );
    }
}
