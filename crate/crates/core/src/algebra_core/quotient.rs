//! Building graded quotient algebras from presentations: per-degree residue
//! bases by exact row reduction, normal forms, products, and the top-degree
//! integration functional.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::expr::ClassExpr;
use super::linalg::{Mat, SolveOutcome};
use super::monomial::Monomial;
use super::presentation::{BuildError, Presentation};
use super::rat::Rat;
use super::EvalError;

/// Per-degree data: the full monomial list of that degree (ascending
/// lexicographic exponent tuples over the declared generator order), the
/// residue-basis positions inside that list, and for every monomial its
/// exact coordinates over the residue basis.
#[derive(Debug, Clone)]
struct DegreePiece {
    monomials: Vec<Vec<u32>>,
    index: BTreeMap<Vec<u32>, usize>,
    residue: Vec<usize>,
    /// `reduce[i]` = coordinates of monomial `i` over the residue basis.
    reduce: Vec<Vec<Rat>>,
}

/// A finitely presented graded commutative algebra with computed residue
/// bases and an integration functional on the top degree. Immutable after
/// construction.
#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    presentation: Presentation,
    gen_names: Vec<String>,
    gen_degrees: Vec<usize>,
    degree_map: BTreeMap<String, usize>,
    pieces: Vec<DegreePiece>,
    /// Functional coefficients over the top-degree residue basis, already
    /// multiplied by the presentation scale.
    functional: Vec<Rat>,
}

impl GradedAlgebra {
    /// Builds the algebra: validates the presentation, computes residue
    /// bases degree by degree, solves for the integration functional, and
    /// audits that every relation multiple integrates to zero.
    pub fn build(presentation: Presentation) -> Result<GradedAlgebra, BuildError> {
        presentation.validate()?;
        let gen_names: Vec<String> = presentation
            .generators
            .iter()
            .map(|g| g.name.clone())
            .collect();
        let gen_degrees: Vec<usize> = presentation
            .generators
            .iter()
            .map(|g| g.degree)
            .collect();
        let degree_map = presentation.degree_map();

        let mut pieces = Vec::with_capacity(presentation.top_degree + 1);
        for d in 0..=presentation.top_degree {
            pieces.push(build_degree_piece(
                d,
                &gen_names,
                &gen_degrees,
                &presentation.relations,
                &degree_map,
            ));
        }

        let mut algebra = GradedAlgebra {
            presentation,
            gen_names,
            gen_degrees,
            degree_map,
            pieces,
            functional: Vec::new(),
        };
        algebra.functional = algebra.solve_functional()?;
        algebra.audit()?;
        Ok(algebra)
    }

    /// Solves the integral rule for the functional on the top-degree
    /// residue basis and applies the scale.
    fn solve_functional(&self) -> Result<Vec<Rat>, BuildError> {
        let top = self.presentation.top_degree;
        let dim = self.pieces[top].residue.len();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for (mono, value) in &self.presentation.integral_spec {
            let tuple = self
                .monomial_tuple(mono)
                .expect("validated integral monomials");
            let idx = self.pieces[top]
                .index
                .get(&tuple)
                .expect("top-degree monomial is enumerated");
            rows.push(self.pieces[top].reduce[*idx].clone());
            rhs.push(value.clone());
        }
        if dim == 0 {
            // Degenerate top piece: all required values must reduce to zero.
            if rhs.iter().all(Rat::is_zero) {
                return Ok(Vec::new());
            }
            return Err(BuildError::InconsistentIntegral);
        }
        match Mat::from_rows(rows).solve(&rhs) {
            SolveOutcome::Unique(f) => Ok(f
                .into_iter()
                .map(|v| v * &self.presentation.scale)
                .collect()),
            SolveOutcome::Underdetermined => Err(BuildError::UnderdeterminedIntegral),
            SolveOutcome::Inconsistent => Err(BuildError::InconsistentIntegral),
        }
    }

    /// Verifies that every relation, multiplied by every complementary
    /// monomial, reduces to zero (and hence integrates to zero). This is a
    /// consequence of the construction; the audit guards the implementation.
    fn audit(&self) -> Result<(), BuildError> {
        for rel in &self.presentation.relations {
            let rel_degree = match self.expr_degree(rel) {
                Ok(Some(d)) => d,
                _ => continue,
            };
            for d in 0..=(self.presentation.top_degree - rel_degree) {
                for tuple in &self.pieces[d].monomials {
                    let m = self.tuple_monomial(tuple);
                    let product = &ClassExpr::from_monomial(m, Rat::from_integer(1.into())) * rel;
                    let nf = self
                        .normal_form(&product)
                        .expect("relation monomials are declared generators");
                    if !nf.is_zero() {
                        return Err(BuildError::InconsistentIntegral);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn top_degree(&self) -> usize {
        self.presentation.top_degree
    }

    pub fn generator_names(&self) -> &[String] {
        &self.gen_names
    }

    /// True when `name` is a declared generator.
    pub fn has_generator(&self, name: &str) -> bool {
        self.degree_map.contains_key(name)
    }

    /// Degree of a declared generator, if present.
    pub fn generator_degree(&self, name: &str) -> Option<usize> {
        self.degree_map.get(name).copied()
    }

    /// Residue-basis dimension of each degree `0..=top`.
    pub fn degree_dims(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.residue.len()).collect()
    }

    /// Residue basis of one degree as expressions.
    pub fn basis(&self, degree: usize) -> Vec<ClassExpr> {
        if degree > self.presentation.top_degree {
            return Vec::new();
        }
        let piece = &self.pieces[degree];
        piece
            .residue
            .iter()
            .map(|&i| {
                ClassExpr::from_monomial(
                    self.tuple_monomial(&piece.monomials[i]),
                    Rat::from_integer(1.into()),
                )
            })
            .collect()
    }

    fn monomial_tuple(&self, m: &Monomial) -> Result<Vec<u32>, EvalError> {
        let mut tuple = vec![0u32; self.gen_names.len()];
        for (name, e) in m.exponents() {
            match self.gen_names.iter().position(|g| g == name) {
                Some(i) => tuple[i] += e,
                None => return Err(EvalError::UnknownGenerator(name.to_owned())),
            }
        }
        Ok(tuple)
    }

    fn tuple_monomial(&self, tuple: &[u32]) -> Monomial {
        Monomial::from_pairs(
            tuple
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (self.gen_names[i].clone(), e)),
        )
    }

    fn tuple_degree(&self, tuple: &[u32]) -> usize {
        tuple
            .iter()
            .zip(&self.gen_degrees)
            .map(|(&e, &d)| e as usize * d)
            .sum()
    }

    /// Homogeneous degree of an expression: `Ok(None)` for zero, an error
    /// for unknown generators, and `Err` is never raised for mixed degrees —
    /// those return the *set* via [`GradedAlgebra::normal_form`]; this
    /// helper reports `Ok(Some(d))` only when all monomials share degree `d`.
    pub fn expr_degree(&self, x: &ClassExpr) -> Result<Option<usize>, EvalError> {
        let mut degree = None;
        for (m, _) in x.terms() {
            let tuple = self.monomial_tuple(m)?;
            let d = self.tuple_degree(&tuple);
            match degree {
                None => degree = Some(Some(d)),
                Some(Some(prev)) if prev != d => degree = Some(None),
                _ => {}
            }
        }
        Ok(degree.flatten())
    }

    /// Canonical residue representative. Components of degree above the top
    /// reduce to zero; inhomogeneous inputs reduce degree by degree.
    pub fn normal_form(&self, x: &ClassExpr) -> Result<ClassExpr, EvalError> {
        let mut out = ClassExpr::zero();
        for (m, c) in x.terms() {
            let tuple = self.monomial_tuple(m)?;
            let d = self.tuple_degree(&tuple);
            if d > self.presentation.top_degree {
                continue;
            }
            let piece = &self.pieces[d];
            let idx = piece.index[&tuple];
            for (k, coeff) in piece.reduce[idx].iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let residue_mono = self.tuple_monomial(&piece.monomials[piece.residue[k]]);
                out = &out + &ClassExpr::from_monomial(residue_mono, c * coeff);
            }
        }
        Ok(out)
    }

    /// Coordinates of the degree-`d` component of `normal_form(x)` over the
    /// residue basis of degree `d`.
    pub fn coordinates(&self, x: &ClassExpr, degree: usize) -> Result<Vec<Rat>, EvalError> {
        let piece = &self.pieces[degree];
        let mut coords = vec![Rat::zero(); piece.residue.len()];
        for (m, c) in x.terms() {
            let tuple = self.monomial_tuple(m)?;
            if self.tuple_degree(&tuple) != degree {
                continue;
            }
            let idx = piece.index[&tuple];
            for (k, coeff) in piece.reduce[idx].iter().enumerate() {
                coords[k] = &coords[k] + &(c * coeff);
            }
        }
        Ok(coords)
    }

    /// Value of the integration functional on the top-degree component of
    /// the normal form. Lower-degree components contribute zero.
    pub fn integrate(&self, x: &ClassExpr) -> Result<Rat, EvalError> {
        let coords = self.coordinates(x, self.presentation.top_degree)?;
        let mut acc = Rat::zero();
        for (c, f) in coords.iter().zip(&self.functional) {
            acc += c * f;
        }
        Ok(acc)
    }

    /// Integral of a product of classes; symmetric in the factors.
    pub fn intersection_number(&self, factors: &[ClassExpr]) -> Result<Rat, EvalError> {
        assert!(!factors.is_empty(), "intersection_number expects factors");
        let mut product = ClassExpr::one();
        for f in factors {
            product = &product * f;
            // Reduce eagerly to keep intermediate expressions small.
            product = self.normal_form(&product)?;
        }
        self.integrate(&product)
    }

    /// Matrix of pairwise intersection numbers `rows_i · cols_j`.
    pub fn pairing_matrix(
        &self,
        rows: &[ClassExpr],
        cols: &[ClassExpr],
    ) -> Result<Vec<Vec<Rat>>, EvalError> {
        let mut out = Vec::with_capacity(rows.len());
        for r in rows {
            let mut line = Vec::with_capacity(cols.len());
            for c in cols {
                line.push(self.intersection_number(&[r.clone(), c.clone()])?);
            }
            out.push(line);
        }
        Ok(out)
    }
}

/// Enumerates all exponent tuples of weighted degree `d` in ascending
/// lexicographic order over the declared generator order.
pub(crate) fn enumerate_tuples(d: usize, degrees: &[usize]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; degrees.len()];
    fn recurse(
        pos: usize,
        remaining: usize,
        degrees: &[usize],
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if pos == degrees.len() {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        let step = degrees[pos];
        let max = remaining / step;
        for e in 0..=max {
            current[pos] = e as u32;
            recurse(pos + 1, remaining - e * step, degrees, current, out);
        }
        current[pos] = 0;
    }
    recurse(0, d, degrees, &mut current, &mut out);
    out
}

/// Builds one degree piece: enumerate monomials, span all relation
/// multiples landing in this degree, row-reduce, and read off the residue
/// basis (non-pivot columns) and the reduction map.
fn build_degree_piece(
    d: usize,
    gen_names: &[String],
    gen_degrees: &[usize],
    relations: &[ClassExpr],
    degree_map: &BTreeMap<String, usize>,
) -> DegreePiece {
    let monomials = enumerate_tuples(d, gen_degrees);
    let index: BTreeMap<Vec<u32>, usize> = monomials
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();

    let tuple_of = |m: &Monomial| -> Vec<u32> {
        let mut tuple = vec![0u32; gen_names.len()];
        for (name, e) in m.exponents() {
            let i = gen_names
                .iter()
                .position(|g| g == name)
                .expect("validated relation generators");
            tuple[i] += e;
        }
        tuple
    };

    let mut span_rows: Vec<Vec<Rat>> = Vec::new();
    for rel in relations {
        if rel.is_zero() {
            continue;
        }
        let rel_degree = rel
            .terms()
            .next()
            .map(|(m, _)| m.weighted_degree(degree_map).expect("validated"))
            .expect("nonzero relation");
        if rel_degree > d {
            continue;
        }
        for multiplier in enumerate_tuples(d - rel_degree, gen_degrees) {
            let mut row = vec![Rat::zero(); monomials.len()];
            for (m, c) in rel.terms() {
                let mut tuple = tuple_of(m);
                for (t, &e) in tuple.iter_mut().zip(&multiplier) {
                    *t += e;
                }
                let col = index[&tuple];
                row[col] = &row[col] + c;
            }
            span_rows.push(row);
        }
    }

    let (pivots, reduced) = if span_rows.is_empty() {
        (Vec::new(), Mat::zeros(0, monomials.len()))
    } else {
        let mut m = Mat::from_rows(span_rows);
        let p = m.rref();
        (p, m)
    };

    let residue: Vec<usize> = (0..monomials.len())
        .filter(|c| !pivots.contains(c))
        .collect();

    let mut reduce = Vec::with_capacity(monomials.len());
    for col in 0..monomials.len() {
        let mut coords = vec![Rat::zero(); residue.len()];
        if let Some(k) = residue.iter().position(|&r| r == col) {
            coords[k] = Rat::from_integer(1.into());
        } else {
            let row = pivots
                .iter()
                .position(|&p| p == col)
                .expect("pivot column has a pivot row");
            // RREF row: monomial_col + Σ_f coeff_f · monomial_f = 0.
            for (k, &f) in residue.iter().enumerate() {
                coords[k] = -reduced.at(row, f).clone();
            }
        }
        reduce.push(coords);
    }

    DegreePiece {
        monomials,
        index,
        residue,
        reduce,
    }
}
