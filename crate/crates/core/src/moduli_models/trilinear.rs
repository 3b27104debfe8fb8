//! The deepest-stratum resolution model: a symmetric trilinear form on a
//! four-dimensional divisor space, populated by solving the published table
//! of pair-against-divisor values and audited for consistency.

use num_traits::Zero;

use crate::algebra_core::linalg::{fixed_space, Mat, SolveOutcome};
use crate::algebra_core::rat::{rat, rat_int, Rat};
use crate::algebra_core::{AlgebraHom, ClassExpr};

use super::{CatalogEntry, ModelError};

/// Divisor basis size.
const DIM: usize = 4;

/// Names of the divisor basis, in declared order.
const BASIS: [&str; DIM] = ["L", "Z1", "Z2", "Dt"];

/// A symmetric trilinear intersection form on the divisor space spanned by
/// L, Z1, Z2, Dt, together with a catalog of derived divisor and quadratic
/// classes and the symmetry maps of the stratum.
#[derive(Debug, Clone)]
pub struct TrilinearSpace {
    name: String,
    /// Values on sorted basis triples (i ≤ j ≤ k), 20 entries.
    values: Vec<Rat>,
    catalog: Vec<(String, ClassExpr, String)>,
    /// Symmetry maps as generator substitutions (all degree-preserving).
    actions: Vec<(String, AlgebraHom)>,
}

/// Sorted triples (i ≤ j ≤ k) over 4 indices in lexicographic order.
fn sorted_triples() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::with_capacity(20);
    for i in 0..DIM {
        for j in i..DIM {
            for k in j..DIM {
                out.push((i, j, k));
            }
        }
    }
    out
}

fn triple_index(mut i: usize, mut j: usize, mut k: usize) -> usize {
    if i > j {
        std::mem::swap(&mut i, &mut j);
    }
    if j > k {
        std::mem::swap(&mut j, &mut k);
    }
    if i > j {
        std::mem::swap(&mut i, &mut j);
    }
    sorted_triples()
        .iter()
        .position(|&t| t == (i, j, k))
        .expect("triple in range")
}

impl TrilinearSpace {
    /// Solves the pair/divisor table for all 20 monomial values. The table
    /// over-determines the form (78 linear conditions for 20 unknowns), so
    /// a unique solution doubles as the consistency audit; the build also
    /// verifies the symmetry maps preserve the form.
    pub fn build() -> TrilinearSpace {
        // Column classes of the table, as coordinate vectors over BASIS.
        let e = |i: usize| -> Vec<Rat> {
            let mut v = vec![Rat::zero(); DIM];
            v[i] = rat_int(1);
            v
        };
        let l = e(0);
        let z1 = e(1);
        let z2 = e(2);
        let dt = e(3);
        let t1 = vec![rat_int(1), rat_int(1), rat_int(0), rat_int(0)];
        let t2 = vec![rat_int(1), rat_int(0), rat_int(1), rat_int(0)];
        let columns = [&l, &z1, &t1, &z2, &t2, &dt];

        // Each row: a list of equal pair-classes (coeff, a, b) and the six
        // values against the columns.
        type Pair<'a> = (Rat, &'a [Rat], &'a [Rat]);
        type RowSpec = (Vec<(Rat, Vec<Rat>, Vec<Rat>)>, [Rat; 6]);
        let row = |pairs: Vec<Pair>, vals: [Rat; 6]| -> RowSpec {
            (
                pairs
                    .into_iter()
                    .map(|(c, a, b)| (c, a.to_vec(), b.to_vec()))
                    .collect(),
                vals,
            )
        };
        let z = rat_int(0);
        let p24 = rat(1, 24);
        let m24 = rat(-1, 24);
        let one = rat_int(1);
        let rows = [
            row(
                vec![
                    (one.clone(), &l, &t1),
                    (one.clone(), &t1, &t1),
                    (one.clone(), &l, &z1),
                    (rat_int(-1), &z1, &z1),
                ],
                [z.clone(), z.clone(), z.clone(), p24.clone(), p24.clone(), p24.clone()],
            ),
            row(
                vec![
                    (one.clone(), &l, &t2),
                    (one.clone(), &t2, &t2),
                    (one.clone(), &l, &z2),
                    (rat_int(-1), &z2, &z2),
                ],
                [z.clone(), p24.clone(), p24.clone(), z.clone(), z.clone(), p24.clone()],
            ),
            row(
                vec![(one.clone(), &l, &dt)],
                [z.clone(), p24.clone(), p24.clone(), p24.clone(), p24.clone(), z.clone()],
            ),
            row(
                vec![
                    (one.clone(), &z1, &z2),
                    (one.clone(), &z1, &dt),
                    (one.clone(), &z2, &dt),
                ],
                [p24.clone(), m24.clone(), z.clone(), m24.clone(), z.clone(), m24.clone()],
            ),
            row(
                vec![(one.clone(), &dt, &dt)],
                [z.clone(), m24.clone(), m24.clone(), m24.clone(), m24.clone(), rat(-1, 2)],
            ),
        ];

        // Assemble the linear system over the 20 sorted-triple unknowns.
        let triples = sorted_triples();
        let mut eqs: Vec<Vec<Rat>> = Vec::new();
        let mut rhs: Vec<Rat> = Vec::new();
        for (pairs, vals) in &rows {
            for (coeff, a, b) in pairs {
                for (col, val) in columns.iter().zip(vals) {
                    let mut eq = vec![Rat::zero(); triples.len()];
                    for (i, ai) in a.iter().enumerate() {
                        if ai.is_zero() {
                            continue;
                        }
                        for (j, bj) in b.iter().enumerate() {
                            if bj.is_zero() {
                                continue;
                            }
                            for (kk, ck) in col.iter().enumerate() {
                                if ck.is_zero() {
                                    continue;
                                }
                                let idx = triple_index(i, j, kk);
                                eq[idx] = &eq[idx] + &(coeff * ai * bj * ck);
                            }
                        }
                    }
                    eqs.push(eq);
                    rhs.push(val.clone());
                }
            }
        }
        let values = match Mat::from_rows(eqs).solve(&rhs) {
            SolveOutcome::Unique(v) => v,
            SolveOutcome::Underdetermined => {
                panic!("trilinear table does not pin all monomial values")
            }
            SolveOutcome::Inconsistent => {
                panic!("trilinear table is internally inconsistent")
            }
        };

        let mut space = TrilinearSpace {
            name: "Ytilde".to_owned(),
            values,
            catalog: Vec::new(),
            actions: Vec::new(),
        };
        space.install_catalog();
        space.install_actions();
        space.audit();
        space
    }

    fn install_catalog(&mut self) {
        let g = ClassExpr::gen;
        let l = g("L");
        let z1 = g("Z1");
        let z2 = g("Z2");
        let dt = g("Dt");
        let t1 = &l + &z1;
        let t2 = &l + &z2;
        let p = &(&(&l + &z1) + &z2) - &dt;
        let mut add = |name: &str, expr: ClassExpr, d: &str| {
            self.catalog.push((name.to_owned(), expr, d.to_owned()));
        };
        add("T1", t1.clone(), "shifted section class L + Z1");
        add("T2", t2.clone(), "shifted section class L + Z2");
        add("P", p.clone(), "divisor L + Z1 + Z2 - Dt; P*Z1*Z2 = 0");
        add(
            "Dminus",
            &(&t1 + &t2).scale(&rat_int(2)) - &(&dt + &l.scale(&rat_int(2))),
            "antidiagonal divisor 2*T1 + 2*T2 - Dt - 2*L",
        );
        add(
            "Dres",
            &(&t1 + &t2).scale(&rat_int(-3)) + &(&dt + &l.scale(&rat_int(13))),
            "restriction of D: -3*T1 - 3*T2 + Dt + 13*L",
        );
        add(
            "Mres",
            &l.scale(&rat_int(12))
                - &(&(&t1 + &t2).scale(&rat_int(-3)) + &(&dt + &l.scale(&rat_int(13)))),
            "restriction of M: 12*L - Dres",
        );
        add(
            "SDprime",
            &(&t1 + &t2).scale(&rat_int(3)) - &(&dt + &l.scale(&rat_int(4))),
            "proper-transform surface divisor 3*T1 + 3*T2 - Dt - 4*L = Z1 + Z2 + Dminus",
        );
        add(
            "K31div",
            l.scale(&rat_int(12)),
            "divisor 12*L cutting the deeper stratum surface",
        );
        add(
            "E",
            (&(&(&z1 + &z2).scale(&rat_int(3)) - &dt) * &l).scale(&rat_int(6)),
            "exceptional quadratic 6*L*(3*Z1 + 3*Z2 - Dt)",
        );
        add(
            "B2res",
            &(&(&t1 * &t2).scale(&rat_int(4)) - &(&p * &p))
                - &(&(&(&t1 + &t2).scale(&rat_int(3)) - &dt) * &l).scale(&rat_int(6)),
            "restriction of B2: 4*T1*T2 - P^2 - 6*L*(3*T1 + 3*T2 - Dt)",
        );
    }

    fn install_actions(&mut self) {
        let g = ClassExpr::gen;
        let id = AlgebraHom::identity(BASIS);
        let swap = AlgebraHom::new([
            ("L", g("L")),
            ("Z1", g("Z2")),
            ("Z2", g("Z1")),
            ("Dt", g("Dt")),
        ]);
        // Exchanges Z1 with the antidiagonal Dminus = 2L + 2Z1 + 2Z2 - Dt,
        // which forces Dt ↦ 6L + 3Z1 + 6Z2 - 2Dt.
        let dminus = self.catalog_expr("Dminus").unwrap().clone();
        let cross = AlgebraHom::new([
            ("L", g("L")),
            ("Z1", dminus),
            ("Z2", g("Z2")),
            (
                "Dt",
                &(&(&g("L").scale(&rat_int(6)) + &g("Z1").scale(&rat_int(3)))
                    + &g("Z2").scale(&rat_int(6)))
                    - &g("Dt").scale(&rat_int(2)),
            ),
        ]);
        self.actions = vec![
            ("gamma1".to_owned(), id),
            ("gamma2".to_owned(), swap),
            ("gamma3".to_owned(), cross),
        ];
    }

    /// Construction-time checks: anchor values, form invariance under the
    /// symmetry maps, and the derived antidiagonal constraint.
    fn audit(&self) {
        assert_eq!(self.value_at(3, 3, 3), rat(-1, 2), "Dt^3");
        assert_eq!(self.value_at(0, 1, 2), rat(1, 24), "L*Z1*Z2");
        assert_eq!(self.value_at(0, 0, 0), rat_int(0), "L^3");

        // The form is invariant under every symmetry map; i ≤ j ≤ k are
        // shared triple indices into both the basis and the value table.
        #[allow(clippy::needless_range_loop)]
        for (name, hom) in &self.actions {
            for i in 0..DIM {
                for j in i..DIM {
                    for k in j..DIM {
                        let a = hom.substitute(&ClassExpr::gen(BASIS[i])).unwrap();
                        let b = hom.substitute(&ClassExpr::gen(BASIS[j])).unwrap();
                        let c = hom.substitute(&ClassExpr::gen(BASIS[k])).unwrap();
                        assert_eq!(
                            self.triple(&a, &b, &c, false).unwrap(),
                            self.value_at(i, j, k),
                            "{name} must preserve <{} {} {}>",
                            BASIS[i],
                            BASIS[j],
                            BASIS[k]
                        );
                    }
                }
            }
        }

        // P restricts trivially to the base product: P*Z1*Z2 = 0.
        let p = self.catalog_expr("P").unwrap().clone();
        assert_eq!(
            self.triple(&p, &ClassExpr::gen("Z1"), &ClassExpr::gen("Z2"), false)
                .unwrap(),
            rat_int(0)
        );
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis_names(&self) -> &'static [&'static str; DIM] {
        &BASIS
    }

    fn value_at(&self, i: usize, j: usize, k: usize) -> Rat {
        self.values[triple_index(i, j, k)].clone()
    }

    pub fn catalog_expr(&self, name: &str) -> Option<&ClassExpr> {
        self.catalog
            .iter()
            .find(|(n, _, _)| n == name)
            .map(|(_, e, _)| e)
    }

    /// Resolves a name to a class: basis divisors first, then the catalog.
    pub fn resolve(&self, name: &str) -> Option<ClassExpr> {
        if BASIS.contains(&name) {
            return Some(ClassExpr::gen(name));
        }
        self.catalog_expr(name).cloned()
    }

    /// The symmetry maps (identity, factor swap, antidiagonal exchange).
    pub fn actions(&self) -> &[(String, AlgebraHom)] {
        &self.actions
    }

    /// Coordinates of a linear divisor expression over the basis.
    pub(crate) fn divisor_coords(&self, x: &ClassExpr) -> Result<Vec<Rat>, ModelError> {
        let mut coords = vec![Rat::zero(); DIM];
        for (mono, coeff) in x.terms() {
            let mut exps = mono.exponents();
            let (name, e) = match (exps.next(), exps.next()) {
                (Some((n, 1)), None) => (n, 1u32),
                _ => return Err(ModelError::NonDivisorClass),
            };
            debug_assert_eq!(e, 1);
            let idx = BASIS
                .iter()
                .position(|b| *b == name)
                .ok_or(ModelError::NonDivisorClass)?;
            coords[idx] = &coords[idx] + coeff;
        }
        Ok(coords)
    }

    /// Decomposition of a quadratic expression into basis pair terms.
    pub(crate) fn quadratic_terms(&self, q: &ClassExpr) -> Result<Vec<(Rat, usize, usize)>, ModelError> {
        let mut out = Vec::new();
        for (mono, coeff) in q.terms() {
            let pairs: Vec<(usize, u32)> = mono
                .exponents()
                .map(|(name, e)| {
                    BASIS
                        .iter()
                        .position(|b| *b == name)
                        .map(|i| (i, e))
                        .ok_or(ModelError::DegreeMismatch { expected: 2 })
                })
                .collect::<Result<_, _>>()?;
            let (i, j) = match pairs.as_slice() {
                [(i, 2)] => (*i, *i),
                [(i, 1), (j, 1)] => (*i, *j),
                _ => return Err(ModelError::DegreeMismatch { expected: 2 }),
            };
            out.push((coeff.clone(), i, j));
        }
        Ok(out)
    }

    /// Trilinear value on three linear divisor classes; `stacky` divides by
    /// 12 to interpret the number on the coarse quotient.
    pub fn triple(
        &self,
        c1: &ClassExpr,
        c2: &ClassExpr,
        c3: &ClassExpr,
        stacky: bool,
    ) -> Result<Rat, ModelError> {
        let a = self.divisor_coords(c1)?;
        let b = self.divisor_coords(c2)?;
        let c = self.divisor_coords(c3)?;
        let mut acc = Rat::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                for (k, ck) in c.iter().enumerate() {
                    if ck.is_zero() {
                        continue;
                    }
                    acc += ai * bj * ck * self.value_at(i, j, k);
                }
            }
        }
        Ok(if stacky { acc * rat(1, 12) } else { acc })
    }

    /// Contraction of a quadratic class against a divisor class; `stacky`
    /// divides by 12 as in [`TrilinearSpace::triple`].
    pub fn pair_quadratic(
        &self,
        q: &ClassExpr,
        d: &ClassExpr,
        stacky: bool,
    ) -> Result<Rat, ModelError> {
        let terms = self.quadratic_terms(q)?;
        let dv = self
            .divisor_coords(d)
            .map_err(|_| ModelError::DegreeMismatch { expected: 1 })?;
        let mut acc = Rat::zero();
        for (coeff, i, j) in terms {
            for (k, dk) in dv.iter().enumerate() {
                if dk.is_zero() {
                    continue;
                }
                acc += &coeff * dk * self.value_at(i, j, k);
            }
        }
        Ok(if stacky { acc * rat(1, 12) } else { acc })
    }

    /// Basis of the divisor subspace fixed by all symmetry maps, in reduced
    /// echelon form over the declared basis order.
    pub fn invariant_divisors(&self) -> Vec<ClassExpr> {
        let mats: Vec<Mat> = self
            .actions
            .iter()
            .map(|(_, hom)| {
                let mut m = Mat::zeros(DIM, DIM);
                for (j, name) in BASIS.iter().enumerate() {
                    let image = hom.substitute(&ClassExpr::gen(name)).unwrap();
                    let coords = self.divisor_coords(&image).unwrap();
                    for (i, c) in coords.into_iter().enumerate() {
                        m.set(i, j, c);
                    }
                }
                m
            })
            .collect();
        fixed_space(&mats)
            .into_iter()
            .map(|v| {
                let mut expr = ClassExpr::zero();
                for (name, c) in BASIS.iter().zip(&v) {
                    if !c.is_zero() {
                        expr = &expr + &ClassExpr::gen(name).scale(c);
                    }
                }
                expr
            })
            .collect()
    }

    pub fn catalog_entries(&self) -> Vec<CatalogEntry> {
        self.catalog
            .iter()
            .map(|(name, expr, description)| {
                let degree = if self.divisor_coords(expr).is_ok() { 1 } else { 2 };
                CatalogEntry {
                    name: name.clone(),
                    degree,
                    expression: expr.to_string(),
                    description: description.clone(),
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space() -> TrilinearSpace {
        TrilinearSpace::build()
    }

    fn gen(name: &str) -> ClassExpr {
        ClassExpr::gen(name)
    }

    #[test]
    fn anchor_values_from_the_table() {
        let y = space();
        let l = gen("L");
        let t1 = y.catalog_expr("T1").unwrap().clone();
        let t2 = y.catalog_expr("T2").unwrap().clone();
        let dt = gen("Dt");
        assert_eq!(y.triple(&l, &t1, &t2, false).unwrap(), rat(1, 24));
        assert_eq!(y.triple(&dt, &dt, &dt, false).unwrap(), rat(-1, 2));
        assert_eq!(y.triple(&l, &l, &dt, false).unwrap(), rat_int(0));
        assert_eq!(
            y.triple(&gen("Z1"), &gen("Z2"), &dt, false).unwrap(),
            rat(-1, 24)
        );
    }

    #[test]
    fn exceptional_quadratic_pairs_with_the_antidiagonal() {
        let y = space();
        let e = y.catalog_expr("E").unwrap().clone();
        let dminus = y.catalog_expr("Dminus").unwrap().clone();
        assert_eq!(y.pair_quadratic(&e, &dminus, false).unwrap(), rat(1, 2));
    }

    #[test]
    fn stacky_factor_divides_by_twelve() {
        let y = space();
        let dres = y.catalog_expr("Dres").unwrap().clone();
        let k31 = y.catalog_expr("K31div").unwrap().clone();
        let l = gen("L");
        assert_eq!(y.triple(&l, &dres, &dres, true).unwrap(), rat(1, 48));
        assert_eq!(
            y.triple(&dres, &dres, &dres, true).unwrap(),
            rat(31, 48)
        );
        let b2 = y.catalog_expr("B2res").unwrap().clone();
        assert_eq!(y.pair_quadratic(&b2, &l, true).unwrap(), rat(1, 48));
        assert_eq!(y.pair_quadratic(&b2, &dres, true).unwrap(), rat(5, 16));
        assert_eq!(y.pair_quadratic(&b2, &k31, true).unwrap(), rat(1, 4));
    }

    #[test]
    fn proper_transform_surface_row() {
        let y = space();
        let sd = y.catalog_expr("SDprime").unwrap().clone();
        let l = gen("L");
        let dres = y.catalog_expr("Dres").unwrap().clone();
        let mres = y.catalog_expr("Mres").unwrap().clone();
        let b2 = y.catalog_expr("B2res").unwrap().clone();
        // Row over (L^2, L*D, D^2, L*M, M^2, B2), all with the 1/12 factor.
        assert_eq!(y.triple(&sd, &l, &l, true).unwrap(), rat_int(0));
        assert_eq!(y.triple(&sd, &l, &dres, true).unwrap(), rat(-1, 48));
        assert_eq!(y.triple(&sd, &dres, &dres, true).unwrap(), rat(-11, 24));
        assert_eq!(y.triple(&sd, &l, &mres, true).unwrap(), rat(1, 48));
        assert_eq!(y.triple(&sd, &mres, &mres, true).unwrap(), rat(1, 24));
        assert_eq!(y.pair_quadratic(&b2, &sd, true).unwrap(), rat(-1, 8));
    }

    #[test]
    fn invariant_divisor_space_is_two_dimensional() {
        let y = space();
        let inv = y.invariant_divisors();
        assert_eq!(inv.len(), 2);
        assert_eq!(inv[0], gen("L"));
        let expected = &(&gen("Z1") + &gen("Z2")) - &gen("Dt").scale(&rat(1, 3));
        assert_eq!(inv[1], expected);
        // The fixed line through Z1 + Z2 + Dminus lies in the fixed space:
        // (2,3,3,-1) = 2·L + 3·(Z1 + Z2 - Dt/3).
        let sdp = y.catalog_expr("SDprime").unwrap().clone();
        let combo = &inv[0].scale(&rat_int(2)) + &inv[1].scale(&rat_int(3));
        assert_eq!(sdp, combo);
    }

    #[test]
    fn quadratic_invariance_holds_functionally() {
        let y = space();
        let t1 = y.catalog_expr("T1").unwrap().clone();
        let t2 = y.catalog_expr("T2").unwrap().clone();
        let p = y.catalog_expr("P").unwrap().clone();
        let q = &(&t1 * &t2).scale(&rat_int(4)) - &(&p * &p);
        for (_, hom) in y.actions() {
            let gq = hom.substitute(&q).unwrap();
            for name in BASIS {
                let d = gen(name);
                assert_eq!(
                    y.pair_quadratic(&gq, &d, false).unwrap(),
                    y.pair_quadratic(&q, &d, false).unwrap(),
                    "4*T1*T2 - P^2 must be functionally fixed"
                );
            }
        }
    }

    #[test]
    fn non_divisor_inputs_are_rejected() {
        let y = space();
        let l = gen("L");
        let sq = l.pow(2);
        assert_eq!(
            y.triple(&sq, &l, &l, false).unwrap_err(),
            ModelError::NonDivisorClass
        );
        assert_eq!(
            y.pair_quadratic(&l, &l, false).unwrap_err(),
            ModelError::DegreeMismatch { expected: 2 }
        );
    }
}
