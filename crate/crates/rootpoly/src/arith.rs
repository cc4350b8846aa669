//! Exact integer and rational linear algebra.
//!
//! Matrices are dense, row-major, with arbitrary-precision integer entries.
//! Determinants use fraction-free (Bareiss) elimination; solving and rank use
//! rational Gaussian elimination. Total unimodularity is checked by exhaustive
//! subdeterminant enumeration with a hard size cap, so it is only for
//! desk-scale inputs; matrices produced by the pipeline itself are totally
//! unimodular by construction and are not re-verified.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::util::combinations;
use crate::{Error, Result};

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;

/// Shorthand used throughout the crate.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Dense integer matrix, row-major. Dimensions are always positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

/// Result of pivoting a full-row-rank matrix to the form `(I_r | X)`.
///
/// `matrix` holds `(I_r | X)` whose column `j` is the original column
/// `col_perm[j]` transformed by the row operations; `row_transform` is the
/// unimodular matrix `U` with `U * M[:, col_perm] = matrix`.
#[derive(Debug, Clone)]
pub struct StandardForm {
    pub matrix: IntMatrix,
    pub col_perm: Vec<usize>,
    pub row_transform: IntMatrix,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Int>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Self::new(rows, cols, entries.iter().map(|&v| int(v)).collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Int) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Int::one() } else { Int::zero() })
            .expect("identity dimensions are positive")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Int {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn select_columns(&self, idx: &[usize]) -> Result<IntMatrix> {
        for &j in idx {
            if j >= self.cols {
                return Err(Error::Dimension(format!("column {j} out of range")));
            }
        }
        Self::from_fn(self.rows, idx.len(), |i, j| self.entry(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Result<IntMatrix> {
        for &i in idx {
            if i >= self.rows {
                return Err(Error::Dimension(format!("row {i} out of range")));
            }
        }
        Self::from_fn(idx.len(), self.cols, |i, j| self.entry(idx[i], j).clone())
    }

    pub fn transpose(&self) -> IntMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.entry(j, i).clone())
            .expect("transpose keeps dimensions positive")
    }

    pub fn negated(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|v| -v).collect(),
        }
    }

    pub fn hstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows {
            return Err(Error::Dimension(format!(
                "hstack row mismatch: {} vs {}",
                self.rows, other.rows
            )));
        }
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.entry(i, j).clone()
            } else {
                other.entry(i, j - self.cols).clone()
            }
        })
    }

    /// Matrix-vector product with a rational vector.
    pub fn mul_rat_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector length {} does not match {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, x)| acc + Rat::from_integer(a.clone()) * x)
            })
            .collect())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<Int> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant requires a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut m: Vec<Vec<Int>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = 1i64;
        let mut prev = Int::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
                match swap {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(Int::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                    m[i][j] = num / &prev;
                }
                m[i][k] = Int::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if sign < 0 { -det } else { det })
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Rat>> = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|v| Rat::from_integer(v.clone()))
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let pivot = (rank..self.rows).find(|&i| !m[i][col].is_zero());
            let Some(p) = pivot else { continue };
            m.swap(rank, p);
            let inv = m[rank][col].clone();
            for i in 0..self.rows {
                if i != rank && !m[i][col].is_zero() {
                    let factor = &m[i][col] / &inv;
                    for j in col..self.cols {
                        let sub = &factor * &m[rank][j];
                        m[i][j] = &m[i][j] - sub;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Solves `M x = b` exactly. Returns `None` when the system is
    /// inconsistent. Free variables are set to zero, so when the columns are
    /// linearly independent the unique solution is returned.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<Vec<Rat>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!(
                "rhs length {} does not match {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut m: Vec<Vec<Rat>> = (0..self.rows)
            .map(|i| {
                let mut row: Vec<Rat> = self
                    .row(i)
                    .iter()
                    .map(|v| Rat::from_integer(v.clone()))
                    .collect();
                row.push(b[i].clone());
                row
            })
            .collect();
        let ncols = self.cols;
        let mut pivot_col_of_row: Vec<usize> = Vec::new();
        let mut next_row = 0;
        for col in 0..ncols {
            let pivot = (next_row..self.rows).find(|&i| !m[i][col].is_zero());
            let Some(p) = pivot else { continue };
            m.swap(next_row, p);
            let inv = m[next_row][col].clone();
            for j in col..=ncols {
                m[next_row][j] = &m[next_row][j] / &inv;
            }
            for i in 0..self.rows {
                if i != next_row && !m[i][col].is_zero() {
                    let factor = m[i][col].clone();
                    for j in col..=ncols {
                        let sub = &factor * &m[next_row][j];
                        m[i][j] = &m[i][j] - sub;
                    }
                }
            }
            pivot_col_of_row.push(col);
            next_row += 1;
            if next_row == self.rows {
                break;
            }
        }
        // inconsistent iff a zero row has nonzero rhs
        for i in next_row..self.rows {
            if !m[i][ncols].is_zero() {
                return Ok(None);
            }
        }
        let mut x = vec![Rat::zero(); ncols];
        for (row, &col) in pivot_col_of_row.iter().enumerate() {
            x[col] = m[row][ncols].clone();
        }
        Ok(Some(x))
    }

    /// Integer right-hand-side convenience wrapper around [`Self::solve`].
    pub fn solve_int(&self, b: &[Int]) -> Result<Option<Vec<Rat>>> {
        let rb: Vec<Rat> = b.iter().map(|v| Rat::from_integer(v.clone())).collect();
        self.solve(&rb)
    }

    /// Indices of a row basis, chosen greedily in index order.
    pub fn row_basis(&self) -> Vec<usize> {
        let mut kept: Vec<usize> = Vec::new();
        let mut current_rank = 0;
        for i in 0..self.rows {
            let mut candidate = kept.clone();
            candidate.push(i);
            let sub = self
                .select_rows(&candidate)
                .expect("row indices are in range");
            if sub.rank() == current_rank + 1 {
                kept = candidate;
                current_rank += 1;
            }
        }
        kept
    }

    /// Deletes dependent rows greedily in index order until full row rank.
    pub fn drop_dependent_rows(&self) -> IntMatrix {
        let kept = self.row_basis();
        self.select_rows(&kept).expect("row basis indices valid")
    }

    /// Pivots a full-row-rank matrix to `(I_r | X)` using only ±1 pivots,
    /// which keeps a totally unimodular input totally unimodular and leaves
    /// the signed circuits of the represented oriented matroid unchanged.
    pub fn pivot_standard_form(&self) -> Result<StandardForm> {
        let pref: Vec<usize> = (0..self.cols).collect();
        self.pivot_standard_form_with(&pref)
    }

    /// Like [`Self::pivot_standard_form`] but trying pivot columns in the
    /// order given by `col_pref`. Exposed so that representation-invariance
    /// checks can build the same matroid along a different pivot sequence.
    pub fn pivot_standard_form_with(&self, col_pref: &[usize]) -> Result<StandardForm> {
        if col_pref.len() != self.cols {
            return Err(Error::Dimension(format!(
                "column preference length {} does not match {} columns",
                col_pref.len(),
                self.cols
            )));
        }
        let r = self.rows;
        let m = self.cols;
        if self.rank() != r {
            return Err(Error::Precondition(
                "pivot_standard_form requires full row rank; drop dependent rows first".into(),
            ));
        }
        let mut work: Vec<Vec<Int>> = (0..r).map(|i| self.row(i).to_vec()).collect();
        let mut transform: Vec<Vec<Int>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| if i == j { Int::one() } else { Int::zero() })
                    .collect()
            })
            .collect();
        let mut pivot_cols: Vec<usize> = Vec::new();
        for row in 0..r {
            let col = col_pref
                .iter()
                .copied()
                .find(|&j| !pivot_cols.contains(&j) && !work[row][j].is_zero());
            let Some(col) = col else {
                return Err(Error::Integrity(
                    "full-row-rank matrix has a zero row after elimination".into(),
                ));
            };
            let pivot = work[row][col].clone();
            if !pivot.is_one() && !(-&pivot).is_one() {
                return Err(Error::Integrity(format!(
                    "pivot entry {pivot} is not ±1; input is not totally unimodular"
                )));
            }
            if pivot.is_negative() {
                for v in work[row].iter_mut() {
                    *v = -&*v;
                }
                for v in transform[row].iter_mut() {
                    *v = -&*v;
                }
            }
            for other in 0..r {
                if other == row || work[other][col].is_zero() {
                    continue;
                }
                let factor = work[other][col].clone();
                for j in 0..m {
                    let sub = &factor * &work[row][j];
                    work[other][j] = &work[other][j] - sub;
                }
                for j in 0..r {
                    let sub = &factor * &transform[row][j];
                    transform[other][j] = &transform[other][j] - sub;
                }
            }
            pivot_cols.push(col);
        }
        let mut col_perm = pivot_cols.clone();
        for j in 0..m {
            if !pivot_cols.contains(&j) {
                col_perm.push(j);
            }
        }
        let matrix = IntMatrix::from_fn(r, m, |i, j| work[i][col_perm[j]].clone())?;
        let row_transform = IntMatrix::from_fn(r, r, |i, j| transform[i][j].clone())?;
        Ok(StandardForm {
            matrix,
            col_perm,
            row_transform,
        })
    }

    /// Exhaustively checks that every square subdeterminant up to
    /// `size_cap × size_cap` lies in {-1, 0, 1}. Refuses matrices whose
    /// smaller dimension exceeds the cap, since the check would then not be
    /// exhaustive.
    pub fn is_totally_unimodular(&self, size_cap: usize) -> Result<bool> {
        let max_size = self.rows.min(self.cols);
        if max_size > size_cap {
            return Err(Error::SizeCap(format!(
                "TU check needs subdeterminants up to {max_size}x{max_size}, cap is {size_cap}"
            )));
        }
        let one = Int::one();
        // 1x1 subdeterminants are the entries themselves
        if self.entries.iter().any(|v| v.abs() > one) {
            return Ok(false);
        }
        let row_idx: Vec<usize> = (0..self.rows).collect();
        let col_idx: Vec<usize> = (0..self.cols).collect();
        for k in 2..=max_size {
            for rows in combinations(&row_idx, k) {
                let row_sub = self.select_rows(&rows)?;
                for cols in combinations(&col_idx, k) {
                    let sub = row_sub.select_columns(&cols)?;
                    if sub.determinant()?.abs() > one {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// A basis of the rational kernel (right null space), one vector per
    /// free column of the reduced row echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut m: Vec<Vec<Rat>> = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|v| Rat::from_integer(v.clone()))
                    .collect()
            })
            .collect();
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; self.cols];
        let mut next_row = 0;
        for col in 0..self.cols {
            let pivot = (next_row..self.rows).find(|&i| !m[i][col].is_zero());
            let Some(p) = pivot else { continue };
            m.swap(next_row, p);
            let inv = m[next_row][col].clone();
            for j in col..self.cols {
                m[next_row][j] = &m[next_row][j] / &inv;
            }
            for i in 0..self.rows {
                if i != next_row && !m[i][col].is_zero() {
                    let factor = m[i][col].clone();
                    for j in col..self.cols {
                        let sub = &factor * &m[next_row][j];
                        m[i][j] = &m[i][j] - sub;
                    }
                }
            }
            pivot_of_col[col] = Some(next_row);
            next_row += 1;
            if next_row == self.rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for col in 0..self.cols {
                if let Some(row) = pivot_of_col[col] {
                    v[col] = -m[row][free].clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix with determinant ±1; entries are integer.
    pub fn unimodular_inverse(&self) -> Result<IntMatrix> {
        if self.rows != self.cols {
            return Err(Error::Dimension("inverse requires a square matrix".into()));
        }
        let n = self.rows;
        let det = self.determinant()?;
        if !det.is_one() && !(-&det).is_one() {
            return Err(Error::Precondition(format!(
                "unimodular_inverse requires determinant ±1, got {det}"
            )));
        }
        let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![Rat::zero(); n];
            e[j] = Rat::one();
            let x = self
                .solve(&e)?
                .ok_or_else(|| Error::Integrity("unimodular matrix must be invertible".into()))?;
            cols.push(x);
        }
        IntMatrix::from_fn(n, n, |i, j| {
            debug_assert!(cols[j][i].is_integer());
            cols[j][i].to_integer()
        })
    }
}

/// Sum of a rational vector.
pub fn rat_sum(v: &[Rat]) -> Rat {
    v.iter().fold(Rat::zero(), |acc, x| acc + x)
}
