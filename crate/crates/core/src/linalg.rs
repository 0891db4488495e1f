//! Dense exact linear algebra over the rationals.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Row-major dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(QMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Convenience for tests and examples: integer entries.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(r, c, |i, j| scalar::int(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    /// Kronecker product `self ⊗ other`, with `self` indexing the slow digit.
    pub fn kron(&self, other: &QMatrix) -> Self {
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Self::zeros(self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * r2 + k, j * c2 + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// `self * v` for a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &QMatrix) -> QMatrix {
        &(self * other) - &(other * self)
    }

    pub fn inverse(&self) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| if c == r { scalar::one() } else { Scalar::zero() }));
                row
            })
            .collect();
        let pivots = rref_in_place(&mut aug, n);
        if pivots.len() < n {
            return Err(Error::SingularMatrix);
        }
        Ok(QMatrix::from_fn(n, n, |r, c| aug[r][n + c].clone()))
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        rref_in_place(&mut rows, self.cols).len()
    }

    pub fn max_abs(&self) -> Scalar {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_else(Scalar::zero)
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|r| self.row(r).iter().map(scalar::to_f64).collect()).collect()
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;

    // Operators here are overwhelmingly sparse; skipping zeros on both sides
    // is the difference between seconds and minutes at n = 4.
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let rrow = rhs.row(k);
                for (j, b) in rrow.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum dimension mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference dimension mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(scalar::format).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Brings the first `width` columns of `rows` to reduced row echelon form,
/// carrying any further columns along (augmented systems). Zero rows are
/// dropped. Returns the pivot column of each remaining row, in order.
pub fn rref_in_place(rows: &mut Vec<Vec<Scalar>>, width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    pivots
}

/// Reduced row echelon basis of the span of a family of vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSpace {
    width: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn span<'a>(width: usize, vectors: impl IntoIterator<Item = &'a [Scalar]>) -> Self {
        let mut rows: Vec<Vec<Scalar>> = vectors
            .into_iter()
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .map(|v| {
                assert_eq!(v.len(), width, "vector width mismatch");
                v.to_vec()
            })
            .collect();
        let pivots = rref_in_place(&mut rows, width);
        RowSpace { width, rows, pivots }
    }

    /// Rebuilds a space from rows already in reduced row echelon form.
    pub fn from_rref(width: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let space = Self::span(width, rows.iter().map(Vec::as_slice));
        if space.rows != rows {
            return Err(Error::Parse("relation rows are not in reduced row echelon form".into()));
        }
        Ok(space)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.width).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Reduces `v` modulo the space: the result has zero pivot coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, y) in out.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }
}

/// Solution set `{particular + Σ t_k · basis_k}` of a linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSpace {
    pub particular: Vec<Scalar>,
    pub directions: Vec<Vec<Scalar>>,
}

/// Outcome of solving `A x = b` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Affine(AffineSpace),
    /// Index of an input row whose reduction reads `0 = nonzero`.
    Inconsistent { row: usize },
}

impl AffineSpace {
    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    /// The value of coordinate `k` if every point of the space agrees on it.
    pub fn pinned(&self, k: usize) -> Option<&Scalar> {
        self.directions.iter().all(|d| d[k].is_zero()).then(|| &self.particular[k])
    }

    /// Constant value of the functional `Σ f_k x_k` on the space, if any.
    pub fn functional_value(&self, f: &[Scalar]) -> Option<Scalar> {
        let dot = |v: &[Scalar]| -> Scalar {
            f.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum()
        };
        self.directions.iter().all(|d| dot(d).is_zero()).then(|| dot(&self.particular))
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        let diff: Vec<Scalar> = x.iter().zip(&self.particular).map(|(a, b)| a - b).collect();
        let span = RowSpace::span(x.len(), self.directions.iter().map(Vec::as_slice));
        span.contains(&diff)
    }
}

/// Solves `A x = b` over the rationals, reporting the full solution set.
pub fn solve_affine(a: &QMatrix, b: &[Scalar]) -> LinearSolution {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let width = a.cols();
    // Tag each row with its origin so an inconsistency can be attributed.
    let mut rows: Vec<Vec<Scalar>> = (0..a.rows())
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.push(b[r].clone());
            row.extend((0..a.rows()).map(|k| if k == r { scalar::one() } else { Scalar::zero() }));
            row
        })
        .collect();
    let pivots = rref_in_place(&mut rows, width);
    for row in rows.iter().skip(pivots.len()) {
        if !row[width].is_zero() {
            let origin = (0..a.rows()).find(|&k| !row[width + 1 + k].is_zero()).unwrap_or(0);
            return LinearSolution::Inconsistent { row: origin };
        }
    }
    let mut particular = vec![Scalar::zero(); width];
    for (row, &p) in rows.iter().zip(&pivots) {
        particular[p] = row[width].clone();
    }
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    let directions = free
        .iter()
        .map(|&f| {
            let mut d = vec![Scalar::zero(); width];
            d[f] = scalar::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                d[p] = -row[f].clone();
            }
            d
        })
        .collect();
    LinearSolution::Affine(AffineSpace { particular, directions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn inverse_of_2x2() {
        let m = QMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, QMatrix::from_i64(&[&[1, -1], &[-1, 2]]));
        assert_eq!(&m * &inv, QMatrix::identity(2));
    }

    #[test]
    fn singular_inverse_errors() {
        let m = QMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(matches!(m.inverse(), Err(Error::SingularMatrix)));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kron_matches_block_layout() {
        let a = QMatrix::from_i64(&[&[1, 2], &[0, 1]]);
        let b = QMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k[(0, 3)], int(2));
        assert_eq!(k[(1, 2)], int(2));
        assert_eq!(k[(2, 3)], int(1));
        assert_eq!(k[(3, 0)], int(0));
    }

    #[test]
    fn row_space_reduce_and_free_columns() {
        let v1 = vec![int(0), int(0), int(1), int(0)];
        let v2 = vec![int(2), int(0), int(0), int(-2)];
        let space = RowSpace::span(4, [v1.as_slice(), v2.as_slice(), v1.as_slice()]);
        assert_eq!(space.dim(), 2);
        assert_eq!(space.pivots(), &[0, 2]);
        assert_eq!(space.free_columns(), vec![1, 3]);
        let r = space.reduce(&[int(1), int(5), int(7), int(0)]);
        assert_eq!(r, vec![int(0), int(5), int(0), int(1)]);
        assert!(space.contains(&[int(3), int(0), int(-1), int(-3)]));
    }

    #[test]
    fn affine_solve_and_inconsistency() {
        // x + y = 1, 2x + 2y = 2
        let a = QMatrix::from_i64(&[&[1, 1], &[2, 2]]);
        let LinearSolution::Affine(sol) = solve_affine(&a, &[int(1), int(2)]) else {
            panic!("expected a solution");
        };
        assert_eq!(sol.dim(), 1);
        assert!(sol.contains(&[frac(1, 2), frac(1, 2)]));
        assert!(!sol.contains(&[int(1), int(1)]));
        assert_eq!(sol.functional_value(&[int(1), int(1)]), Some(int(1)));
        assert_eq!(sol.pinned(0), None);

        let bad = solve_affine(&a, &[int(1), int(3)]);
        assert!(matches!(bad, LinearSolution::Inconsistent { .. }));
    }
}
