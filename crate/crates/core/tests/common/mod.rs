#![allow(dead_code)]

use longeq_core::group::FiniteGroup;
use longeq_core::linalg::QMatrix;
use longeq_core::scalar::{frac, int};
use longeq_core::tensor::{
    make_conjugate, make_diag, make_graded, make_homothety, make_pair, make_phi, GradedActionData, HomothetyTerm,
    TensorOp2,
};
use longeq_core::Scalar;
use num::Zero;

/// Every idempotent self-map of `{0..n}`.
pub fn idempotents(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut phi = vec![0; n];
    loop {
        if (0..n).all(|k| phi[phi[k]] == phi[k]) {
            out.push(phi.clone());
        }
        let mut k = 0;
        while k < n && phi[k] == n - 1 {
            phi[k] = 0;
            k += 1;
        }
        if k == n {
            return out;
        }
        phi[k] += 1;
    }
}

pub fn triangular_pair(a: i64, b: i64, c: i64) -> TensorOp2 {
    let f = QMatrix::from_i64(&[&[a, 1], &[0, a]]);
    let g = QMatrix::from_i64(&[&[b, c], &[0, b]]);
    make_pair(&f, &g).unwrap()
}

pub fn diag_instances() -> Vec<(String, TensorOp2)> {
    let arrays = [
        QMatrix::from_i64(&[&[2, 3], &[0, 0]]),
        QMatrix::from_i64(&[&[1, -1], &[-1, 1]]),
        QMatrix::from_i64(&[&[2, 3], &[5, 7]]),
        QMatrix::from_fn(3, 3, |i, j| frac((i * 3 + j) as i64 * 7 - 11, (j + 2) as i64)),
    ];
    arrays.iter().enumerate().map(|(k, a)| (format!("diag#{k}"), make_diag(a).unwrap())).collect()
}

/// Long solutions from every constructor.
pub fn corpus() -> Vec<(String, TensorOp2)> {
    let mut out = vec![("identity2".to_string(), TensorOp2::identity(2))];
    out.extend(diag_instances());
    for (a, b, c) in [(1, 1, 1), (2, 3, 5), (1, 1, 0), (0, 1, 1)] {
        out.push((format!("pair({a},{b},{c})"), triangular_pair(a, b, c)));
    }
    out.push((
        "pair(diag)".into(),
        make_pair(&QMatrix::from_i64(&[&[1, 0], &[0, 0]]), &QMatrix::from_i64(&[&[2, 0], &[0, 3]])).unwrap(),
    ));
    let base = make_diag(&QMatrix::from_i64(&[&[1, 2], &[3, 4]])).unwrap();
    out.push(("conjugate(diag)".into(), make_conjugate(&QMatrix::from_i64(&[&[1, 1], &[0, 1]]), &base).unwrap()));
    out.push((
        "conjugate(phi)".into(),
        make_conjugate(&QMatrix::from_i64(&[&[2, 1, 0], &[0, 1, 0], &[1, 0, 1]]), &make_phi(&[0, 0, 2]).unwrap())
            .unwrap(),
    ));
    out.push(("graded(Z/2)".into(), make_graded(&graded_z2()).unwrap()));
    out.push(("graded(Z/3)".into(), make_graded(&graded_z3()).unwrap()));
    let id = QMatrix::identity(2);
    let d1 = QMatrix::from_i64(&[&[1, 0], &[0, 2]]);
    let d2 = QMatrix::from_i64(&[&[3, 0], &[0, -1]]);
    let element = [
        HomothetyTerm { coeff: int(2), left: 1, right: 2 },
        HomothetyTerm { coeff: frac(-1, 3), left: 2, right: 0 },
    ];
    out.push(("homothety".into(), make_homothety(&[id, d1, d2], &element).unwrap()));
    for n in 1..=4 {
        for phi in idempotents(n) {
            let name = format!("phi{:?}", phi.iter().map(|p| p + 1).collect::<Vec<_>>());
            out.push((name, make_phi(&phi).unwrap()));
        }
    }
    out
}

pub fn graded_z2() -> GradedActionData {
    GradedActionData {
        group: FiniteGroup::cyclic(2),
        actions: vec![QMatrix::identity(2), QMatrix::from_i64(&[&[1, 0], &[0, -1]])],
        degrees: vec![0, 1],
    }
}

/// `Z/3` acting on `k³` by an order-three block on `span{m_2, m_3}`.
pub fn graded_z3() -> GradedActionData {
    let g = QMatrix::from_i64(&[&[1, 0, 0], &[0, 0, -1], &[0, 1, -1]]);
    let g2 = &g * &g;
    GradedActionData { group: FiniteGroup::cyclic(3), actions: vec![QMatrix::identity(3), g, g2], degrees: vec![0, 1, 1] }
}

/// `R` on `M^{⊗3}` in one of the three leg positions, built straight from the
/// coefficients: row `(a,b,c) ↦ a·n²+b·n+c` is the output, column the input.
pub fn naive_lift(r: &TensorOp2, legs: (usize, usize)) -> Vec<Vec<Scalar>> {
    let n = r.dim();
    let idx = |t: [usize; 3]| t[0] * n * n + t[1] * n + t[2];
    let mut m = vec![vec![Scalar::zero(); n * n * n]; n * n * n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let input = [a, b, c];
                let (p, q) = legs;
                // R(m_v ⊗ m_u) = Σ x(u,v,j,i) m_i ⊗ m_j with v in leg p, u in leg q
                for i in 0..n {
                    for j in 0..n {
                        let x = r.x(input[q], input[p], j, i);
                        if x.is_zero() {
                            continue;
                        }
                        let mut out = input;
                        out[p] = i;
                        out[q] = j;
                        m[idx(out)][idx(input)] += x;
                    }
                }
            }
        }
    }
    m
}

pub fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

pub struct NaiveLifts {
    pub r12: Vec<Vec<Scalar>>,
    pub r13: Vec<Vec<Scalar>>,
    pub r23: Vec<Vec<Scalar>>,
}

impl NaiveLifts {
    pub fn new(r: &TensorOp2) -> Self {
        NaiveLifts { r12: naive_lift(r, (0, 1)), r13: naive_lift(r, (0, 2)), r23: naive_lift(r, (1, 2)) }
    }

    pub fn long(&self) -> bool {
        mat_mul(&self.r12, &self.r13) == mat_mul(&self.r13, &self.r12)
            && mat_mul(&self.r12, &self.r23) == mat_mul(&self.r23, &self.r12)
    }

    pub fn kz_bracket(&self) -> bool {
        let sum: Vec<Vec<Scalar>> =
            self.r13.iter().zip(&self.r23).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect()).collect();
        mat_mul(&self.r12, &sum) == mat_mul(&sum, &self.r12)
    }
}
