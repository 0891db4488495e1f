//! The comatrix coalgebra modulo a coideal spanned by linear relations.

use num::Zero;

use super::comatrix::{self, label, unlabel};
use crate::linalg::{QMatrix, RowSpace};
use crate::scalar::Scalar;

/// `C / V` for a subspace `V` of the comatrix coalgebra.
///
/// `V` is kept in reduced row echelon form with each row pivoting on its
/// *largest* label, so the surviving representatives are the smallest labels
/// (`c_11` is kept in favour of `c_22`, and so on).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientCoalgebra {
    n: usize,
    // Rows are stored in reversed label order, where ordinary RREF pivots on
    // the smallest column.
    space: RowSpace,
    representatives: Vec<usize>,
}

fn reversed(v: &[Scalar]) -> Vec<Scalar> {
    v.iter().rev().cloned().collect()
}

impl QuotientCoalgebra {
    pub fn new<'a>(n: usize, relations: impl IntoIterator<Item = &'a [Scalar]>) -> Self {
        let n2 = n * n;
        let rows: Vec<Vec<Scalar>> = relations.into_iter().map(reversed).collect();
        let space = RowSpace::span(n2, rows.iter().map(Vec::as_slice));
        let mut representatives: Vec<usize> =
            space.free_columns().into_iter().map(|c| n2 - 1 - c).collect();
        representatives.sort_unstable();
        QuotientCoalgebra { n, space, representatives }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `dim C/V`.
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Labels whose cosets form the canonical basis of `C/V`, ascending.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    /// RREF basis of `V` in label coordinates, ordered by pivot label.
    pub fn relations(&self) -> Vec<Vec<Scalar>> {
        let mut rows: Vec<Vec<Scalar>> = self.space.rows().iter().map(|r| reversed(r)).collect();
        rows.sort_by_key(|r| self.pivot_of(r));
        rows
    }

    /// The label each relation row solves for.
    pub fn pivot_of(&self, row: &[Scalar]) -> usize {
        (0..row.len()).rev().find(|&k| !row[k].is_zero()).expect("relation rows are non-zero")
    }

    pub fn relation_dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.space.contains(&reversed(v))
    }

    /// Coordinates of `π(v)` on the representatives.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let n2 = self.n * self.n;
        let reduced = self.space.reduce(&reversed(v));
        self.representatives.iter().map(|&k| reduced[n2 - 1 - k].clone()).collect()
    }

    pub fn project_label(&self, k: usize) -> Vec<Scalar> {
        self.project(&comatrix::basis_vector(self.n, k))
    }

    /// `ε` on the canonical basis.
    pub fn counit(&self) -> Vec<Scalar> {
        self.representatives
            .iter()
            .map(|&k| {
                let (i, j) = unlabel(self.n, k);
                if i == j { crate::scalar::one() } else { Scalar::zero() }
            })
            .collect()
    }

    /// `(π ⊗ π)Δ(v)` as an `m × m` coefficient matrix on the canonical basis.
    pub fn project_coproduct(&self, v: &[Scalar]) -> QMatrix {
        let n = self.n;
        let m = self.dim();
        let images: Vec<Vec<Scalar>> = (0..n * n).map(|k| self.project_label(k)).collect();
        let mut out = QMatrix::zeros(m, m);
        for (k, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (i, j) = unlabel(n, k);
            for u in 0..n {
                let (a, b) = (&images[label(n, i, u)], &images[label(n, u, j)]);
                for s in (0..m).filter(|&s| !a[s].is_zero()) {
                    for t in (0..m).filter(|&t| !b[t].is_zero()) {
                        out[(s, t)] += c * &a[s] * &b[t];
                    }
                }
            }
        }
        out
    }

    /// `ε(V) = 0`.
    pub fn counit_vanishes(&self) -> bool {
        self.space.rows().iter().all(|r| comatrix::counit(self.n, &reversed(r)).is_zero())
    }

    /// `Δ(V) ⊆ V ⊗ C + C ⊗ V`, i.e. `(π ⊗ π)Δ` kills `V`.
    pub fn is_coideal(&self) -> bool {
        self.relations().iter().all(|r| self.project_coproduct(r).is_zero())
    }
}
