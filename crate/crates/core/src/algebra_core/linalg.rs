//! Exact rational linear algebra: reduced row echelon form, kernels,
//! solving, inverses, and simultaneous fixed spaces.
//!
//! All routines are fully deterministic: the pivot is always the first
//! eligible column and the first eligible row, which is well defined with
//! exact arithmetic (no numeric tie-breaking exists).

use num_traits::{One, Zero};

use super::rat::Rat;

/// A dense matrix of exact rationals, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rat>>,
}

/// Outcome of solving a linear system exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// Exactly one solution.
    Unique(Vec<Rat>),
    /// Consistent but with free variables.
    Underdetermined,
    /// No solution.
    Inconsistent,
}

impl Mat {
    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "ragged rows in matrix construction"
        );
        Mat {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![vec![Rat::zero(); cols]; rows],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Rat::one();
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r]
    }

    pub fn rows_vec(&self) -> &[Vec<Rat>] {
        &self.data
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vec");
        self.data
            .iter()
            .map(|row| dot(row, v))
            .collect()
    }

    /// In-place reduced row echelon form; returns the pivot column indices
    /// in increasing order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let found = (pivot_row..self.rows).find(|&r| !self.data[r][col].is_zero());
            let Some(r) = found else { continue };
            self.data.swap(pivot_row, r);
            let inv = self.data[pivot_row][col].recip();
            for c in col..self.cols {
                let v = &self.data[pivot_row][c] * &inv;
                self.data[pivot_row][c] = v;
            }
            for r in 0..self.rows {
                if r != pivot_row && !self.data[r][col].is_zero() {
                    let factor = self.data[r][col].clone();
                    for c in col..self.cols {
                        let v = &self.data[r][c] - &factor * &self.data[pivot_row][c];
                        self.data[r][c] = v;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    /// Rank via row reduction on a copy.
    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel `{x : Ax = 0}`, one vector per free column,
    /// in increasing free-column order (deterministic echelon convention).
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<usize> = pivots.clone();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (i, &p) in pivot_set.iter().enumerate() {
                v[p] = -m.data[i][f].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `Ax = b` exactly.
    pub fn solve(&self, b: &[Rat]) -> SolveOutcome {
        assert_eq!(b.len(), self.rows, "dimension mismatch in solve");
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for (i, rhs) in b.iter().enumerate() {
            aug.data[i][..self.cols].clone_from_slice(&self.data[i]);
            aug.data[i][self.cols] = rhs.clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return SolveOutcome::Inconsistent;
        }
        if pivots.len() < self.cols {
            return SolveOutcome::Underdetermined;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug.data[i][self.cols].clone();
        }
        SolveOutcome::Unique(x)
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols, "inverse requires a square matrix");
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i][j] = self.data[i][j].clone();
            }
            aug.data[i][n + i] = Rat::one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i][j] = aug.data[i][n + j].clone();
            }
        }
        Some(inv)
    }
}

/// Exact dot product.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dimension mismatch in dot");
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

/// Basis of the simultaneous fixed space `{v : Mv = v for every M}`,
/// returned in reduced echelon form (deterministic).
pub fn fixed_space(mats: &[Mat]) -> Vec<Vec<Rat>> {
    let Some(first) = mats.first() else {
        return Vec::new();
    };
    let n = first.n_cols();
    let mut stacked = Vec::new();
    for m in mats {
        assert_eq!(m.n_rows(), n, "fixed_space expects square matrices");
        assert_eq!(m.n_cols(), n, "fixed_space expects square matrices");
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let mut v = m.at(i, j).clone();
                if i == j {
                    v -= Rat::one();
                }
                row.push(v);
            }
            stacked.push(row);
        }
    }
    let kernel = Mat::from_rows(stacked).kernel_basis();
    if kernel.is_empty() {
        return kernel;
    }
    // Normalize the output basis to reduced echelon form so callers get a
    // canonical answer independent of enumeration order.
    let mut m = Mat::from_rows(kernel);
    m.rref();
    m.data
}

#[cfg(test)]
mod tests {
    use super::super::rat::{rat, rat_int};
    use super::*;

    fn m(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_pivots_first_eligible_column() {
        let mut a = m(&[&[0, 2, 4], &[1, 1, 1]]);
        let pivots = a.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(a.row(0), &[rat_int(1), rat_int(0), rat_int(-1)]);
        assert_eq!(a.row(1), &[rat_int(0), rat_int(1), rat_int(2)]);
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        // x + 2y + 3z = 0 twice: kernel is two-dimensional.
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(dot(a.row(0), v).is_zero());
        }
    }

    #[test]
    fn solve_distinguishes_all_three_outcomes() {
        let a = m(&[&[1, 0], &[0, 1]]);
        assert_eq!(
            a.solve(&[rat_int(3), rat(1, 2)]),
            SolveOutcome::Unique(vec![rat_int(3), rat(1, 2)])
        );
        let b = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(b.solve(&[rat_int(1), rat_int(2)]), SolveOutcome::Underdetermined);
        assert_eq!(b.solve(&[rat_int(1), rat_int(3)]), SolveOutcome::Inconsistent);
    }

    #[test]
    fn inverse_round_trips() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().expect("invertible");
        let prod_first = inv.mul_vec(&[rat_int(2), rat_int(1)]);
        assert_eq!(prod_first, vec![rat_int(1), rat_int(0)]);
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn fixed_space_of_a_swap() {
        // Swap of two coordinates fixes exactly the diagonal.
        let swap = m(&[&[0, 1], &[1, 0]]);
        let basis = fixed_space(&[swap]);
        assert_eq!(basis, vec![vec![rat_int(1), rat_int(1)]]);
    }
}
