use std::fmt;

use num::Zero;

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::scalar::Scalar;

/// An endomorphism `R` of `M ⊗ M`, `dim M = n`, stored through its
/// coefficient family `x_{uv}^{ji}`:
///
/// ```text
/// R(m_v ⊗ m_u) = Σ_{i,j} x_{uv}^{ji} m_i ⊗ m_j
/// ```
///
/// Coefficients are held in a flat `[u][v][j][i]` array. All indices in this
/// Rust API are 0-based; serialized formats and diagnostics are 1-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorOp2 {
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl TensorOp2 {
    pub fn zero(dim: usize) -> Self {
        assert!(dim > 0, "operator dimension must be positive");
        TensorOp2 { dim, coeffs: vec![Scalar::zero(); dim.pow(4)] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut r = Self::zero(dim);
        for v in 0..dim {
            for u in 0..dim {
                // R(m_v ⊗ m_u) = m_v ⊗ m_u, i.e. i = v, j = u.
                r.set(u, v, u, v, crate::scalar::one());
            }
        }
        r
    }

    /// Builds from the flat `[u][v][j][i]` coefficient array.
    pub fn from_coeffs(dim: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        if dim == 0 || coeffs.len() != dim.pow(4) {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coefficients for n = {dim}, got {}",
                dim.pow(4),
                coeffs.len()
            )));
        }
        Ok(TensorOp2 { dim, coeffs })
    }

    /// Builds from the `n² × n²` matrix view: row `i·n + j`, column `v·n + u`.
    pub fn from_matrix(dim: usize, m: &QMatrix) -> Result<Self> {
        let n2 = dim * dim;
        if dim == 0 || m.rows() != n2 || m.cols() != n2 {
            return Err(Error::DimensionMismatch(format!(
                "expected a {n2}x{n2} matrix for n = {dim}, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        let mut r = Self::zero(dim);
        for (i, j, v, u) in quadruples(dim) {
            r.set(u, v, j, i, m[(i * dim + j, v * dim + u)].clone());
        }
        Ok(r)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    #[inline]
    fn offset(&self, u: usize, v: usize, j: usize, i: usize) -> usize {
        let n = self.dim;
        debug_assert!(u < n && v < n && j < n && i < n);
        ((u * n + v) * n + j) * n + i
    }

    /// `x_{uv}^{ji}`.
    #[inline]
    pub fn x(&self, u: usize, v: usize, j: usize, i: usize) -> &Scalar {
        &self.coeffs[self.offset(u, v, j, i)]
    }

    pub fn set(&mut self, u: usize, v: usize, j: usize, i: usize, value: Scalar) {
        let k = self.offset(u, v, j, i);
        self.coeffs[k] = value;
    }

    /// The `n² × n²` matrix in the ordered basis `m_a ⊗ m_b ↦ a·n + b`.
    pub fn matrix(&self) -> QMatrix {
        let n = self.dim;
        let mut m = QMatrix::zeros(n * n, n * n);
        for (i, j, v, u) in quadruples(n) {
            let x = self.x(u, v, j, i);
            if !x.is_zero() {
                m[(i * n + j, v * n + u)] = x.clone();
            }
        }
        m
    }

    /// `τ R τ`.
    pub fn flipped(&self) -> TensorOp2 {
        let mut out = Self::zero(self.dim);
        for (i, j, v, u) in quadruples(self.dim) {
            // τRτ(m_u ⊗ m_v) = Σ x_{uv}^{ji} m_j ⊗ m_i
            out.set(v, u, i, j, self.x(u, v, j, i).clone());
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.flipped() == *self
    }

    /// Applies `R` to `m_v ⊗ m_u`, returning coordinates indexed `i·n + j`.
    pub fn apply_basis(&self, v: usize, u: usize) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = self.x(u, v, j, i).clone();
            }
        }
        out
    }
}

impl fmt::Debug for TensorOp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorOp2(n = {}) {:?}", self.dim, self.matrix())
    }
}

/// All `(i, j, v, u)` in lexicographic order.
pub(crate) fn quadruples(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..n).flat_map(move |a| {
        (0..n).flat_map(move |b| (0..n).flat_map(move |c| (0..n).map(move |d| (a, b, c, d))))
    })
}

/// An endomorphism of `M ⊗ M ⊗ M`, basis `m_a ⊗ m_b ⊗ m_c ↦ a·n² + b·n + c`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorOp3 {
    dim: usize,
    mat: QMatrix,
}

impl TensorOp3 {
    pub fn identity(dim: usize) -> Self {
        TensorOp3 { dim, mat: QMatrix::identity(dim.pow(3)) }
    }

    pub fn from_matrix(dim: usize, mat: QMatrix) -> Result<Self> {
        let d = dim.pow(3);
        if mat.rows() != d || mat.cols() != d {
            return Err(Error::DimensionMismatch(format!("expected a {d}x{d} matrix")));
        }
        Ok(TensorOp3 { dim, mat })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.mat
    }

    pub fn compose(&self, other: &TensorOp3) -> TensorOp3 {
        assert_eq!(self.dim, other.dim);
        TensorOp3 { dim: self.dim, mat: &self.mat * &other.mat }
    }

    pub fn add(&self, other: &TensorOp3) -> TensorOp3 {
        assert_eq!(self.dim, other.dim);
        TensorOp3 { dim: self.dim, mat: &self.mat + &other.mat }
    }

    pub fn commutator(&self, other: &TensorOp3) -> TensorOp3 {
        assert_eq!(self.dim, other.dim);
        TensorOp3 { dim: self.dim, mat: self.mat.commutator(&other.mat) }
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }
}

impl fmt::Debug for TensorOp3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorOp3(n = {}) {:?}", self.dim, self.mat)
    }
}

/// Which pair of tensor legs a lifted operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Legs {
    L12,
    L13,
    L23,
}

impl Legs {
    fn slots(self) -> (usize, usize) {
        match self {
            Legs::L12 => (0, 1),
            Legs::L13 => (0, 2),
            Legs::L23 => (1, 2),
        }
    }
}

/// `R^{12} = R ⊗ I`, `R^{23} = I ⊗ R`, `R^{13} = (I ⊗ τ)(R ⊗ I)(I ⊗ τ)`.
pub fn lift(r: &TensorOp2, legs: Legs) -> TensorOp3 {
    let (a, b) = legs.slots();
    TensorOp3 { dim: r.dim(), mat: lift_to_slots(r, a, b, 3) }
}

/// Matrix of `R` acting on `M^{⊗slots}` with its first leg on slot `first`
/// and its second leg on slot `second` (0-based, slot 0 most significant),
/// identity elsewhere. For `first > second` this is the slot-flipped
/// operator, i.e. `R^{ji} = τ_{ij} R^{ij} τ_{ij}`.
pub fn lift_to_slots(r: &TensorOp2, first: usize, second: usize, slots: usize) -> QMatrix {
    assert!(first != second && first < slots && second < slots, "invalid leg placement");
    let n = r.dim();
    let total = n.pow(slots as u32);
    let weight = |s: usize| n.pow((slots - 1 - s) as u32);
    let (wa, wb) = (weight(first), weight(second));
    let mut out = QMatrix::zeros(total, total);
    for col in 0..total {
        let v = (col / wa) % n;
        let u = (col / wb) % n;
        let rest = col - v * wa - u * wb;
        for i in 0..n {
            for j in 0..n {
                let x = r.x(u, v, j, i);
                if !x.is_zero() {
                    out[(rest + i * wa + j * wb, col)] = x.clone();
                }
            }
        }
    }
    out
}
