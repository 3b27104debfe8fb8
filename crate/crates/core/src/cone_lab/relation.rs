//! The unique linear relation among a family of vectors, when there is one.

use num_traits::Zero;

use crate::algebra_core::linalg::Mat;
use crate::algebra_core::rat::Rat;

use super::ConeError;

/// Coefficients `c` with `Σ c_i·v_i = 0`, normalized so the first nonzero
/// coefficient is `+1`.
///
/// Returns `Ok(None)` when the vectors are linearly independent (kernel
/// dimension zero) and `Err(AmbiguousRelation)` when the kernel has
/// dimension two or more.
pub fn unique_relation(vectors: &[Vec<Rat>]) -> Result<Option<Vec<Rat>>, ConeError> {
    if vectors.is_empty() {
        return Ok(None);
    }
    let dim = vectors[0].len();
    for v in vectors {
        if v.len() != dim {
            return Err(ConeError::DimensionMismatch {
                expected: dim,
                got: v.len(),
            });
        }
    }
    // Rows are coordinates, columns are the vectors, so the kernel consists
    // of relation coefficient tuples.
    let mut rows = vec![vec![Rat::zero(); vectors.len()]; dim];
    for (j, v) in vectors.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            rows[i][j] = x.clone();
        }
    }
    let kernel = Mat::from_rows(rows).kernel_basis();
    match kernel.len() {
        0 => Ok(None),
        1 => {
            let rel = &kernel[0];
            let lead = rel
                .iter()
                .find(|x| !x.is_zero())
                .expect("kernel basis vector is nonzero");
            Ok(Some(rel.iter().map(|x| x / lead).collect()))
        }
        d => Err(ConeError::AmbiguousRelation(d)),
    }
}

#[cfg(test)]
mod tests {
    use crate::algebra_core::rat::{rat, rat_int};

    use super::*;

    fn int_vec(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&z| Rat::from_integer(z.into())).collect()
    }

    #[test]
    fn independent_vectors_have_no_relation() {
        let vs = vec![int_vec(&[1, 0, 0, 0]), int_vec(&[0, 1, 0, 0])];
        assert_eq!(unique_relation(&vs).unwrap(), None);
    }

    #[test]
    fn scaled_pair_gives_a_normalized_relation() {
        let v = int_vec(&[3, 1]);
        let two_v = int_vec(&[6, 2]);
        let w = int_vec(&[0, 1]);
        let rel = unique_relation(&[v, two_v, w]).unwrap().unwrap();
        assert_eq!(rel, vec![rat_int(1), rat(-1, 2), rat_int(0)]);
    }

    #[test]
    fn two_dimensional_kernel_is_ambiguous() {
        let v = int_vec(&[1, 0]);
        let vs = vec![v.clone(), v.clone(), v];
        assert_eq!(
            unique_relation(&vs).unwrap_err(),
            ConeError::AmbiguousRelation(2)
        );
    }

    #[test]
    fn relation_coefficients_annihilate_the_family() {
        let vs = vec![
            int_vec(&[1, 2, 3]),
            int_vec(&[2, 0, 1]),
            int_vec(&[3, 2, 4]),
        ];
        let rel = unique_relation(&vs).unwrap().unwrap();
        for i in 0..3 {
            let mut acc = Rat::zero();
            for (c, v) in rel.iter().zip(&vs) {
                acc += c * &v[i];
            }
            assert!(acc.is_zero());
        }
        assert_eq!(rel[0], rat_int(1));
    }
}
