//! The graded-ring space models and their class catalogs.

use crate::algebra_core::rat::{rat, rat_int, Rat};
use crate::algebra_core::{
    tensor_product, ClassExpr, GeneratorSpec, GradedAlgebra, Monomial, Presentation,
};

use super::CatalogEntry;

/// A space whose intersection theory is a finitely presented graded ring,
/// together with a catalog of named derived classes.
#[derive(Debug, Clone)]
pub struct RingSpace {
    name: String,
    algebra: GradedAlgebra,
    catalog: Vec<(String, ClassExpr, String)>,
}

impl RingSpace {
    pub(crate) fn new(name: &str, algebra: GradedAlgebra) -> RingSpace {
        RingSpace {
            name: name.to_owned(),
            algebra,
            catalog: Vec::new(),
        }
    }

    pub(crate) fn add(&mut self, name: &str, expr: ClassExpr, description: &str) {
        debug_assert!(
            self.catalog.iter().all(|(n, _, _)| n != name) && !self.algebra.has_generator(name),
            "catalog names are unique and distinct from generators"
        );
        self.catalog
            .push((name.to_owned(), expr, description.to_owned()));
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    /// Catalog entry by name, if present.
    pub fn catalog_expr(&self, name: &str) -> Option<&ClassExpr> {
        self.catalog
            .iter()
            .find(|(n, _, _)| n == name)
            .map(|(_, e, _)| e)
    }

    /// Resolves a name to a class: generators first, then the catalog.
    pub fn resolve(&self, name: &str) -> Option<ClassExpr> {
        if self.algebra.has_generator(name) {
            return Some(ClassExpr::gen(name));
        }
        self.catalog_expr(name).cloned()
    }

    pub fn catalog_entries(&self) -> Vec<CatalogEntry> {
        self.catalog
            .iter()
            .map(|(name, expr, description)| CatalogEntry {
                name: name.clone(),
                degree: self
                    .algebra
                    .expr_degree(expr)
                    .expect("catalog classes use declared generators")
                    .expect("catalog classes are homogeneous and nonzero"),
                expression: expr.to_string(),
                description: description.clone(),
            })
            .collect()
    }
}

fn g(name: &str) -> ClassExpr {
    ClassExpr::gen(name)
}

fn k(v: i64) -> Rat {
    rat_int(v)
}

/// Genus-1 base: one divisor generator, top degree 1, ∫L1 = 1/24.
pub fn a1() -> RingSpace {
    let algebra = GradedAlgebra::build(Presentation::new(
        vec![GeneratorSpec::new("L1", 1)],
        vec![],
        1,
        vec![(Monomial::gen("L1"), rat(1, 24))],
    ))
    .expect("valid presentation");
    RingSpace::new("A1", algebra)
}

fn x1_algebra(l: &str, z: &str) -> GradedAlgebra {
    let lg = g(l);
    let zg = g(z);
    GradedAlgebra::build(Presentation::new(
        vec![GeneratorSpec::new(l, 1), GeneratorSpec::new(z, 1)],
        vec![lg.pow(2), &zg.pow(2) + &(&lg * &zg)],
        2,
        vec![(Monomial::gen(l).mul(&Monomial::gen(z)), rat(1, 24))],
    ))
    .expect("valid presentation")
}

/// Elliptic modular surface: generators L (Hodge) and Z (0-section),
/// relations L² = 0 and Z² = −LZ, ∫LZ = 1/24.
pub fn x1() -> RingSpace {
    let mut space = RingSpace::new("X1", x1_algebra("L", "Z"));
    space.add("T", &g("L") + &g("Z"), "shifted section class L + Z; T^2 = L*Z");
    space
}

/// Genus-2 base ring: generators L2 (Hodge) and D2 (boundary), relations
/// L2²·D2 = 0 and 120L2² − 22L2·D2 + D2² = 0, ∫L2³ = 1/2880.
pub fn a2() -> RingSpace {
    let l = g("L2");
    let d = g("D2");
    let rel1 = &l.pow(2) * &d;
    let rel2 = &(&l.pow(2).scale(&k(120)) - &(&l * &d).scale(&k(22))) + &d.pow(2);
    let algebra = GradedAlgebra::build(Presentation::new(
        vec![GeneratorSpec::new("L2", 1), GeneratorSpec::new("D2", 1)],
        vec![rel1, rel2],
        3,
        vec![(Monomial::from_pairs([("L2".to_owned(), 3)]), rat(1, 2880))],
    ))
    .expect("valid presentation");

    let mut space = RingSpace::new("A2", algebra);
    space.add("M2", &l.scale(&k(12)) - &d, "divisor 12*L2 - D2");
    space.add(
        "CA",
        (&(&l.scale(&k(10)) - &d) * &l).scale(&k(12)),
        "curve class 12*L2*(10*L2 - D2); pairs to zero with M2",
    );
    space.add(
        "CF",
        (&l * &d).scale(&k(12)),
        "curve class 12*L2*D2; pairs to zero with L2",
    );
    space
}

/// Product of the two bases: tensor ring with the product functional.
/// Catalog: the four diagonal/boundary surface classes and the pullbacks of
/// the ambient divisor generators.
pub fn a1xa2() -> RingSpace {
    let algebra = tensor_product(a1().algebra(), a2().algebra(), rat_int(1))
        .expect("disjoint generator names");
    let l1 = g("L1");
    let l2 = g("L2");
    let d2 = g("D2");

    let mut space = RingSpace::new("A1xA2", algebra);
    space.add(
        "SDD",
        (&l1 * &d2).scale(&k(12)),
        "boundary-boundary surface 12*L1*D2",
    );
    space.add(
        "SDA",
        (&l1 * &(&l2.scale(&k(5)) - &d2.scale(&rat(1, 2)))).scale(&k(12)),
        "boundary-diagonal surface 12*L1*(5*L2 - D2/2)",
    );
    space.add(
        "SAF",
        (&l2 * &d2).scale(&k(6)),
        "diagonal-boundary surface 6*L2*D2",
    );
    space.add(
        "SAA",
        (&l2 * &(&l2.scale(&k(5)) - &d2.scale(&rat(1, 2)))).scale(&k(12)),
        "diagonal-diagonal surface 12*L2*(5*L2 - D2/2); its row equals 2*SDA",
    );
    space.add("Lres", &l1 + &l2, "pullback of L: L1 + L2");
    space.add("Dres", &l1.scale(&k(12)) + &d2, "pullback of D: 12*L1 + D2");
    space.add("Mres", &l2.scale(&k(12)) - &d2, "pullback of M: 12*L2 - D2");
    space.add(
        "B2res",
        &(&l1.scale(&k(12)) + &l2.scale(&k(6))) * &d2,
        "pullback of B2: (12*L1 + 6*L2)*D2",
    );
    space
}

/// Product of two elliptic modular surfaces with the half-sized functional:
/// the degree-2 cover of the deepest product stratum. Catalog: the four
/// distinguished surfaces, the section-shift classes, and the restrictions
/// of the ambient classes.
pub fn vcover() -> RingSpace {
    let algebra = tensor_product(
        &x1_algebra("L1", "Z1"),
        &x1_algebra("L2", "Z2"),
        rat(1, 2),
    )
    .expect("disjoint generator names");
    let l1 = g("L1");
    let z1 = g("Z1");
    let l2 = g("L2");
    let z2 = g("Z2");
    let t1 = &l1 + &z1;
    let t2 = &l2 + &z2;
    let lsum = &l1 + &l2;

    let mut space = RingSpace::new("Vcover", algebra);
    space.add("S1", (&l1 * &l2).scale(&k(144)), "surface 144*L1*L2");
    space.add("S2", &z1 * &z2, "surface Z1*Z2");
    space.add(
        "S3",
        (&(&l1 * &z1) + &(&l2 * &z2)).scale(&k(12)),
        "surface 12*(L1*Z1 + L2*Z2)",
    );
    space.add(
        "S4",
        (&(&l1 * &z2) + &(&l2 * &z1)).scale(&k(12)),
        "surface 12*(L1*Z2 + L2*Z1)",
    );
    space.add("T1", t1.clone(), "shifted section class L1 + Z1");
    space.add("T2", t2.clone(), "shifted section class L2 + Z2");
    space.add("Lres", lsum.clone(), "restriction of L: L1 + L2");
    space.add(
        "Dres",
        &(&t1 + &t2).scale(&k(-2)) + &lsum.scale(&k(12)),
        "restriction of D: -2*(T1 + T2) + 12*(L1 + L2)",
    );
    space.add(
        "Mres",
        (&t1 + &t2).scale(&k(2)),
        "restriction of M: 2*(T1 + T2)",
    );
    space.add(
        "B2res",
        &(&(&(&t1 + &t2) * &lsum).scale(&k(-24)) + &(&l1 * &l2).scale(&k(144)))
            + &(&(&l1 * &z1) + &(&l2 * &z2)).scale(&k(12)),
        "restriction of B2: -24*(T1 + T2)*(L1 + L2) + 144*L1*L2 + 12*(L1*Z1 + L2*Z2)",
    );
    space.add(
        "Tsq",
        (&t1 * &t2).scale(&k(2)),
        "stated restriction of the squared section-sum class: 2*T1*T2",
    );
    space
}
