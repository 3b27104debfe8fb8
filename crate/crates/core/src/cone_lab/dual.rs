//! Dual cones by exact double description.
//!
//! The dual of `cone{r_i}` is `{f : f·r_i ≥ 0 for all i}`. It splits as the
//! dual taken inside the linear span of the generators plus the full
//! orthogonal complement of that span (a lineality part, represented by ±
//! basis rays). The span part is converted from H-representation to
//! V-representation by double description with lexicographic insertion
//! order and the algebraic adjacency test, which keeps the output
//! deterministic.

use num_traits::{Signed, Zero};

use crate::algebra_core::linalg::{dot, Mat};
use crate::algebra_core::rat::Rat;

use super::cone::Cone;
use super::ray::{canonicalize_ray, Ray};

/// Canonical V-representation of `{f : f·r ≥ 0 for all generators r}`.
/// The dual of the zero cone is the full space, returned as ± standard
/// basis rays.
pub fn dual_cone(cone: &Cone) -> Cone {
    let n = cone.ambient_dim();
    let mut generators: Vec<Vec<Rat>> = Vec::new();

    if cone.is_zero() {
        for i in 0..n {
            generators.push(unit(n, i, 1));
            generators.push(unit(n, i, -1));
        }
        return Cone::from_vectors(n, &generators).expect("unit vectors are valid rays");
    }

    // Echelon basis of the span of the generators.
    let mut span = cone.ray_matrix();
    span.rref();
    let basis: Vec<Vec<Rat>> = span
        .rows_vec()
        .iter()
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let r = basis.len();

    // Constraints in span coordinates: one per generator.
    let mut constraints: Vec<Vec<Rat>> = Vec::new();
    for ray in cone.rays() {
        let coords: Vec<Rat> = basis
            .iter()
            .map(|b| dot(b, &ray.as_rationals()))
            .collect();
        let canon = canonicalize_ray(&coords)
            .expect("a nonzero ray in the span has nonzero span coordinates");
        constraints.push(canon.as_rationals());
    }
    constraints.sort();
    constraints.dedup();

    // Inner duals in span coordinates, mapped back to the ambient space.
    for y in dual_by_double_description(r, &constraints) {
        let mut x = vec![Rat::zero(); n];
        for (yk, b) in y.iter().zip(&basis) {
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi += yk * bi;
            }
        }
        generators.push(x);
    }

    // Lineality: ± a basis of the orthogonal complement of the span.
    for w in cone.ray_matrix().kernel_basis() {
        generators.push(w.iter().map(|x| -x).collect());
        generators.push(w);
    }

    Cone::from_vectors(n, &generators).expect("dual generators are nonzero")
}

fn unit(n: usize, i: usize, sign: i64) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::from_integer(sign.into());
    v
}

/// V-representation of `{y ∈ Q^r : c·y ≥ 0 for all c}` for a constraint
/// family of full rank `r`, by double description. Constraints must be
/// canonicalized, sorted, and deduplicated by the caller.
fn dual_by_double_description(r: usize, constraints: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    // Seed: the lexicographically first maximal independent subfamily.
    let mut seed: Vec<usize> = Vec::new();
    let mut seed_rows: Vec<Vec<Rat>> = Vec::new();
    for (i, c) in constraints.iter().enumerate() {
        if seed.len() == r {
            break;
        }
        let mut candidate = seed_rows.clone();
        candidate.push(c.clone());
        if Mat::from_rows(candidate.clone()).rank() > seed_rows.len() {
            seed.push(i);
            seed_rows = candidate;
        }
    }
    assert_eq!(
        seed.len(),
        r,
        "constraints of a spanning generator family have full rank"
    );

    // Initial cone {y : N y ≥ 0} for the invertible seed block N has the
    // columns of N⁻¹ as extremal rays.
    let inverse = Mat::from_rows(seed_rows)
        .inverse()
        .expect("seed block is invertible");
    let mut rays: Vec<Ray> = Vec::new();
    for j in 0..r {
        let column: Vec<Rat> = (0..r).map(|i| inverse.at(i, j).clone()).collect();
        rays.push(canonicalize_ray(&column).expect("inverse columns are nonzero"));
    }
    rays.sort();
    rays.dedup();

    let mut processed: Vec<Vec<Rat>> = seed.iter().map(|&i| constraints[i].clone()).collect();

    for (i, c) in constraints.iter().enumerate() {
        if seed.contains(&i) {
            continue;
        }
        let value: Vec<Rat> = rays.iter().map(|v| dot(c, &v.as_rationals())).collect();
        let keep: Vec<usize> = (0..rays.len())
            .filter(|&k| !value[k].is_negative())
            .collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| value[k].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| value[k].is_negative()).collect();

        let mut next: Vec<Ray> = keep.iter().map(|&k| rays[k].clone()).collect();
        for &u in &pos {
            for &w in &neg {
                if !adjacent(&rays[u], &rays[w], &processed, r) {
                    continue;
                }
                // (c·u)·w − (c·w)·u lies on the hyperplane c·y = 0 and in
                // the cone spanned by u and w.
                let ru = rays[u].as_rationals();
                let rw = rays[w].as_rationals();
                let combo: Vec<Rat> = ru
                    .iter()
                    .zip(&rw)
                    .map(|(a, b)| &(&value[u] * b) - &(&value[w] * a))
                    .collect();
                if combo.iter().all(Rat::is_zero) {
                    continue;
                }
                next.push(canonicalize_ray(&combo).expect("nonzero combination"));
            }
        }
        next.sort();
        next.dedup();
        rays = next;
        processed.push(c.clone());
    }

    rays.iter().map(Ray::as_rationals).collect()
}

/// Algebraic adjacency: two extremal rays of a pointed `r`-dimensional cone
/// are adjacent when the constraints tight at both span a space of rank
/// `r − 2`. In rank ≤ 2 every pair is adjacent.
fn adjacent(u: &Ray, w: &Ray, processed: &[Vec<Rat>], r: usize) -> bool {
    if r <= 2 {
        return true;
    }
    let ur = u.as_rationals();
    let wr = w.as_rationals();
    let tight: Vec<Vec<Rat>> = processed
        .iter()
        .filter(|c| dot(c, &ur).is_zero() && dot(c, &wr).is_zero())
        .cloned()
        .collect();
    if tight.len() < r - 2 {
        return false;
    }
    Mat::from_rows(tight).rank() == r - 2
}

#[cfg(test)]
mod tests {
    use crate::algebra_core::rat::{rat, rat_int};

    use super::*;

    fn cone_of(ambient: usize, rows: &[Vec<Rat>]) -> Cone {
        Cone::from_vectors(ambient, rows).unwrap()
    }

    fn int_vec(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&z| Rat::from_integer(z.into())).collect()
    }

    #[test]
    fn orthant_is_self_dual() {
        let orthant = cone_of(
            4,
            &[
                int_vec(&[1, 0, 0, 0]),
                int_vec(&[0, 1, 0, 0]),
                int_vec(&[0, 0, 1, 0]),
                int_vec(&[0, 0, 0, 1]),
            ],
        );
        assert_eq!(dual_cone(&orthant), orthant);
    }

    #[test]
    fn dual_of_zero_cone_is_everything() {
        let dual = dual_cone(&Cone::zero(3));
        let expected = cone_of(
            3,
            &[
                int_vec(&[1, 0, 0]),
                int_vec(&[-1, 0, 0]),
                int_vec(&[0, 1, 0]),
                int_vec(&[0, -1, 0]),
                int_vec(&[0, 0, 1]),
                int_vec(&[0, 0, -1]),
            ],
        );
        assert_eq!(dual, expected);
    }

    #[test]
    fn dual_of_everything_is_zero() {
        let full = cone_of(
            4,
            &[
                int_vec(&[1, 0, 0, 0]),
                int_vec(&[-1, 0, 0, 0]),
                int_vec(&[0, 1, 0, 0]),
                int_vec(&[0, -1, 0, 0]),
                int_vec(&[0, 0, 1, 0]),
                int_vec(&[0, 0, -1, 0]),
                int_vec(&[0, 0, 0, 1]),
                int_vec(&[0, 0, 0, -1]),
            ],
        );
        assert_eq!(dual_cone(&full), Cone::zero(4));
    }

    #[test]
    fn halfplane_dual_has_a_lineality_free_normal() {
        // cone{e1, -e1, e2} in Q^2 is the upper half-plane; its dual is the
        // single ray e2.
        let half = cone_of(2, &[int_vec(&[1, 0]), int_vec(&[-1, 0]), int_vec(&[0, 1])]);
        assert_eq!(dual_cone(&half), cone_of(2, &[int_vec(&[0, 1])]));
    }

    #[test]
    fn lower_dimensional_cone_dual_includes_the_complement() {
        // Single ray e1 in Q^3: dual = {f : f_1 ≥ 0} = cone{e1, ±e2, ±e3}.
        let line = cone_of(3, &[int_vec(&[1, 0, 0])]);
        let expected = cone_of(
            3,
            &[
                int_vec(&[1, 0, 0]),
                int_vec(&[0, 1, 0]),
                int_vec(&[0, -1, 0]),
                int_vec(&[0, 0, 1]),
                int_vec(&[0, 0, -1]),
            ],
        );
        assert_eq!(dual_cone(&line), expected);
    }

    #[test]
    fn square_cone_dual_is_the_polar_square() {
        // cone over the square [-1,1]² at height 1; self-polar up to a
        // 45-degree rotation.
        let square = cone_of(
            3,
            &[
                int_vec(&[1, 1, 1]),
                int_vec(&[1, -1, 1]),
                int_vec(&[-1, 1, 1]),
                int_vec(&[-1, -1, 1]),
            ],
        );
        let expected = cone_of(
            3,
            &[
                int_vec(&[1, 0, 1]),
                int_vec(&[0, 1, 1]),
                int_vec(&[-1, 0, 1]),
                int_vec(&[0, -1, 1]),
            ],
        );
        assert_eq!(dual_cone(&square), expected);
        assert_eq!(dual_cone(&expected), square);
    }

    #[test]
    fn double_dual_recovers_pointed_full_dimensional_cones() {
        let cones = [
            cone_of(2, &[int_vec(&[1, 0]), int_vec(&[1, 5])]),
            cone_of(
                3,
                &[
                    int_vec(&[1, 0, 1]),
                    int_vec(&[0, 1, 1]),
                    int_vec(&[-1, 0, 1]),
                    int_vec(&[0, -1, 1]),
                ],
            ),
            cone_of(
                4,
                &[
                    int_vec(&[1, 0, 0, 72]),
                    int_vec(&[0, 1, 0, -12]),
                    int_vec(&[0, 1, 2, -6]),
                    int_vec(&[0, 0, 1, -3]),
                    int_vec(&[0, 0, 1, 1]),
                ],
            ),
        ];
        for c in &cones {
            assert_eq!(dual_cone(&dual_cone(c)), *c, "double dual of {c}");
        }
    }

    #[test]
    fn dual_generators_pair_nonnegatively_with_primal_rays() {
        let c = cone_of(
            4,
            &[
                int_vec(&[1, 0, 0, 72]),
                int_vec(&[0, 1, 0, -12]),
                int_vec(&[0, 1, 2, -6]),
                int_vec(&[0, 0, 1, -3]),
                int_vec(&[0, 0, 1, 1]),
            ],
        );
        let dual = dual_cone(&c);
        assert!(!dual.rays().is_empty());
        for f in dual.rays() {
            for r in c.rays() {
                assert!(!dot(&f.as_rationals(), &r.as_rationals()).is_negative());
            }
        }
    }

    #[test]
    fn fractional_generators_are_handled_exactly() {
        let c = cone_of(2, &[vec![rat(1, 3), rat_int(0)], vec![rat(1, 7), rat(2, 7)]]);
        let dual = dual_cone(&c);
        assert_eq!(
            dual,
            cone_of(2, &[int_vec(&[0, 1]), int_vec(&[2, -1])])
        );
    }
}
