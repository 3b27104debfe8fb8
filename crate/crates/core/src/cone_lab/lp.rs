//! Exact membership tests by phase-1 simplex with Bland's rule, returning
//! certificates that are re-verified by independent arithmetic.

use num_traits::{One, Signed, Zero};

use crate::algebra_core::linalg::dot;
use crate::algebra_core::rat::Rat;

use super::cone::Cone;
use super::ConeError;

/// Proof of a membership verdict. `Inside` carries nonnegative coefficients
/// over the cone's canonical rays reproducing the query exactly; `Outside`
/// carries a separating functional that is nonnegative on every ray and
/// strictly negative on the query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MembershipCertificate {
    Inside { coefficients: Vec<Rat> },
    Outside { separator: Vec<Rat> },
}

impl MembershipCertificate {
    pub fn is_inside(&self) -> bool {
        matches!(self, MembershipCertificate::Inside { .. })
    }
}

/// Verdict of an extremality test together with its membership certificate
/// against the cone generated by the remaining rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalityReport {
    pub extremal: bool,
    pub certificate: MembershipCertificate,
}

/// Decides whether `v` lies in the cone, with certificate. The verdict is
/// exact; both certificate kinds are re-checked after the LP.
pub fn membership(cone: &Cone, v: &[Rat]) -> Result<MembershipCertificate, ConeError> {
    if v.len() != cone.ambient_dim() {
        return Err(ConeError::DimensionMismatch {
            expected: cone.ambient_dim(),
            got: v.len(),
        });
    }
    let rays: Vec<Vec<Rat>> = cone.rays().iter().map(|r| r.as_rationals()).collect();
    let certificate = if rays.is_empty() {
        if v.iter().all(Rat::is_zero) {
            MembershipCertificate::Inside {
                coefficients: Vec::new(),
            }
        } else {
            // The query itself separates: w·v = −|v|² < 0.
            MembershipCertificate::Outside {
                separator: v.iter().map(|x| -x).collect(),
            }
        }
    } else {
        match solve_nonnegative_combination(&rays, v) {
            Feasibility::Feasible(coefficients) => MembershipCertificate::Inside { coefficients },
            Feasibility::Infeasible(separator) => MembershipCertificate::Outside { separator },
        }
    };
    verify_certificate(&rays, v, &certificate);
    Ok(certificate)
}

/// Checks whether ray `index` lies outside the cone generated by the other
/// rays; `extremal == true` means it does not belong to that subcone.
pub fn is_extremal_generator(cone: &Cone, index: usize) -> Result<ExtremalityReport, ConeError> {
    if index >= cone.rays().len() {
        return Err(ConeError::IndexOutOfRange {
            index,
            len: cone.rays().len(),
        });
    }
    let others = cone.without_ray(index)?;
    let query = cone.rays()[index].as_rationals();
    let certificate = membership(&others, &query)?;
    Ok(ExtremalityReport {
        extremal: !certificate.is_inside(),
        certificate,
    })
}

/// A cone is simplicial when its extremal generators are as many as the
/// dimension of its linear span.
pub fn is_simplicial(cone: &Cone) -> bool {
    let extremal = (0..cone.rays().len())
        .filter(|&i| {
            is_extremal_generator(cone, i)
                .expect("index in range")
                .extremal
        })
        .count();
    extremal == cone.span_rank()
}

enum Feasibility {
    Feasible(Vec<Rat>),
    Infeasible(Vec<Rat>),
}

/// Finds λ ≥ 0 with Σ λ_j·ray_j = v, or a Farkas separator w with
/// w·ray_j ≥ 0 for all j and w·v < 0. Phase-1 simplex over exact rationals;
/// Bland's rule prevents cycling, so termination is unconditional.
fn solve_nonnegative_combination(rays: &[Vec<Rat>], v: &[Rat]) -> Feasibility {
    let m = rays.len();
    let n = v.len();

    // Row i of the structural matrix is coordinate i across the rays.
    // Flip rows so the right-hand side is nonnegative.
    let mut flip = vec![false; n];
    let mut a = vec![vec![Rat::zero(); m + n]; n];
    let mut b = vec![Rat::zero(); n];
    for i in 0..n {
        flip[i] = v[i].is_negative();
        let sign = if flip[i] { -Rat::one() } else { Rat::one() };
        for j in 0..m {
            a[i][j] = &rays[j][i] * &sign;
        }
        a[i][m + i] = Rat::one();
        b[i] = &v[i] * &sign;
    }

    // Reduced-cost row for minimizing the sum of artificials:
    // cost[j] = c_j − Σ_i a[i][j] with c = (0,…,0,1,…,1).
    let mut cost = vec![Rat::zero(); m + n];
    for (j, c) in cost.iter_mut().enumerate() {
        let direct = if j < m { Rat::zero() } else { Rat::one() };
        let mut acc = direct;
        for row in a.iter() {
            acc -= &row[j];
        }
        *c = acc;
    }
    let mut basis: Vec<usize> = (m..m + n).collect();

    // Bland: entering column is the smallest index with negative reduced
    // cost; stop when none remains.
    while let Some(enter) = (0..m + n).find(|&j| cost[j].is_negative()) {
        // Ratio test; ties broken by the smallest basic variable index.
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for i in 0..n {
            if a[i][enter].is_positive() {
                let ratio = &b[i] / &a[i][enter];
                let better = match &best {
                    None => true,
                    Some(r) => match ratio.cmp(r) {
                        std::cmp::Ordering::Less => true,
                        std::cmp::Ordering::Equal => basis[i] < basis[leave.unwrap()],
                        std::cmp::Ordering::Greater => false,
                    },
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(leave) = leave else {
            // Phase-1 objective is bounded below by zero, so an entering
            // column always admits a pivot.
            unreachable!("phase-1 simplex cannot be unbounded");
        };

        // Pivot on (leave, enter).
        let pivot = a[leave][enter].clone();
        for x in a[leave].iter_mut() {
            *x = &*x / &pivot;
        }
        b[leave] = &b[leave] / &pivot;
        let pivot_row = a[leave].clone();
        let pivot_rhs = b[leave].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != leave && !row[enter].is_zero() {
                let factor = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&factor * p);
                }
                b[i] = &b[i] - &(&factor * &pivot_rhs);
            }
        }
        if !cost[enter].is_zero() {
            let factor = cost[enter].clone();
            for (c, p) in cost.iter_mut().zip(&pivot_row) {
                *c = &*c - &(&factor * p);
            }
        }
        basis[leave] = enter;
    }

    // Objective value = total artificial mass remaining.
    let mut objective = Rat::zero();
    for i in 0..n {
        if basis[i] >= m {
            objective += &b[i];
        }
    }

    if objective.is_zero() {
        let mut coefficients = vec![Rat::zero(); m];
        for i in 0..n {
            if basis[i] < m {
                coefficients[basis[i]] = b[i].clone();
            }
        }
        Feasibility::Feasible(coefficients)
    } else {
        // Dual solution: y_i = 1 − reduced cost of artificial column i;
        // undo the row flips and negate to obtain the separator.
        let mut separator = Vec::with_capacity(n);
        for i in 0..n {
            let y = Rat::one() - &cost[m + i];
            separator.push(if flip[i] { y } else { -y });
        }
        Feasibility::Infeasible(separator)
    }
}

/// Independent arithmetic re-check of a certificate; an inconsistency here
/// is an implementation bug, so it aborts loudly.
fn verify_certificate(rays: &[Vec<Rat>], v: &[Rat], certificate: &MembershipCertificate) {
    match certificate {
        MembershipCertificate::Inside { coefficients } => {
            assert_eq!(coefficients.len(), rays.len());
            let mut sum = vec![Rat::zero(); v.len()];
            for (c, ray) in coefficients.iter().zip(rays) {
                assert!(!c.is_negative(), "inside coefficient must be nonnegative");
                for (s, x) in sum.iter_mut().zip(ray) {
                    *s += c * x;
                }
            }
            assert_eq!(sum, v, "inside certificate must reproduce the query");
        }
        MembershipCertificate::Outside { separator } => {
            for ray in rays {
                assert!(
                    !dot(separator, ray).is_negative(),
                    "separator must be nonnegative on every ray"
                );
            }
            assert!(
                dot(separator, v).is_negative(),
                "separator must be strictly negative on the query"
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::algebra_core::rat::{rat, rat_int};

    use super::*;

    fn cone2(rays: &[[i64; 2]]) -> Cone {
        let vecs: Vec<Vec<Rat>> = rays
            .iter()
            .map(|r| r.iter().map(|&z| Rat::from_integer(z.into())).collect())
            .collect();
        Cone::from_vectors(2, &vecs).unwrap()
    }

    #[test]
    fn interior_point_of_the_orthant_is_inside() {
        let c = cone2(&[[1, 0], [0, 1]]);
        let cert = membership(&c, &[rat_int(3), rat(1, 2)]).unwrap();
        assert_eq!(
            cert,
            MembershipCertificate::Inside {
                coefficients: vec![rat(1, 2), rat_int(3)],
            }
        );
    }

    #[test]
    fn outside_point_gets_a_separator() {
        let c = cone2(&[[1, 0], [0, 1]]);
        let cert = membership(&c, &[rat_int(-1), rat_int(2)]).unwrap();
        assert!(!cert.is_inside());
    }

    #[test]
    fn zero_vector_is_inside_every_cone() {
        let c = cone2(&[[1, 0]]);
        let cert = membership(&c, &[rat_int(0), rat_int(0)]).unwrap();
        assert!(cert.is_inside());
    }

    #[test]
    fn zero_cone_contains_only_zero() {
        let c = Cone::zero(3);
        assert!(membership(&c, &[rat_int(0), rat_int(0), rat_int(0)])
            .unwrap()
            .is_inside());
        assert!(!membership(&c, &[rat_int(1), rat_int(0), rat_int(0)])
            .unwrap()
            .is_inside());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let c = cone2(&[[1, 0]]);
        assert_eq!(
            membership(&c, &[rat_int(1)]).unwrap_err(),
            ConeError::DimensionMismatch {
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn redundant_ray_is_not_extremal() {
        // Canonical order: (0,1), (1,0), (1,1); index 2 is the sum.
        let c = cone2(&[[1, 0], [0, 1], [1, 1]]);
        assert!(!is_extremal_generator(&c, 2).unwrap().extremal);
        assert!(is_extremal_generator(&c, 0).unwrap().extremal);
        assert!(is_extremal_generator(&c, 1).unwrap().extremal);
        assert_eq!(
            is_extremal_generator(&c, 5).unwrap_err(),
            ConeError::IndexOutOfRange { index: 5, len: 3 }
        );
    }

    #[test]
    fn simpliciality_counts_extremal_rays_against_span() {
        assert!(is_simplicial(&cone2(&[[1, 0], [0, 1]])));
        assert!(is_simplicial(&cone2(&[[1, 0], [0, 1], [1, 1]])));
        // Square cone over a 3-dimensional span: four extremal rays.
        let square = Cone::from_vectors(
            3,
            &[
                vec![rat_int(1), rat_int(0), rat_int(1)],
                vec![rat_int(0), rat_int(1), rat_int(1)],
                vec![rat_int(-1), rat_int(0), rat_int(1)],
                vec![rat_int(0), rat_int(-1), rat_int(1)],
            ],
        )
        .unwrap();
        assert!(!is_simplicial(&square));
    }

    #[test]
    fn rescaling_a_generator_does_not_change_extremality() {
        let a = cone2(&[[1, 0], [0, 1], [2, 2]]);
        let b = cone2(&[[1, 0], [0, 1], [1, 1]]);
        assert_eq!(a, b);
        assert!(!is_extremal_generator(&a, 2).unwrap().extremal);
    }
}
