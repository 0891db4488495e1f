//! Families of Long solutions.

use num::Zero;

use super::laws::{is_long, require_long};
use super::op::TensorOp2;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::QMatrix;
use crate::scalar::{self, Scalar};

fn square(m: &QMatrix, n: usize, what: &str) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch(format!("{what} must be {n}x{n}")));
    }
    Ok(())
}

/// `R(m_i ⊗ m_j) = a_ij m_i ⊗ m_j`; `a` is `n × n`.
pub fn make_diag(a: &QMatrix) -> Result<TensorOp2> {
    let n = a.rows();
    square(a, n, "diagonal coefficient array")?;
    let mut r = TensorOp2::zero(n);
    for i in 0..n {
        for j in 0..n {
            // input m_v ⊗ m_u with v = i, u = j maps to itself
            r.set(j, i, j, i, a[(i, j)].clone());
        }
    }
    Ok(r)
}

/// `R = f ⊗ g` for commuting `f, g ∈ End(M)`.
pub fn make_pair(f: &QMatrix, g: &QMatrix) -> Result<TensorOp2> {
    let n = f.rows();
    square(f, n, "f")?;
    square(g, n, "g")?;
    if f * g != g * f {
        return Err(Error::NonCommutingPair);
    }
    TensorOp2::from_matrix(n, &f.kron(g))
}

/// `(u ⊗ u) R (u ⊗ u)⁻¹` for a Long solution `R` and invertible `u`.
pub fn make_conjugate(u: &QMatrix, r: &TensorOp2) -> Result<TensorOp2> {
    let n = r.dim();
    square(u, n, "u")?;
    let u_inv = u.inverse()?;
    require_long(r)?;
    let uu = u.kron(u);
    let uu_inv = u_inv.kron(&u_inv);
    let out = TensorOp2::from_matrix(n, &(&(&uu * &r.matrix()) * &uu_inv))?;
    debug_assert!(is_long(&out));
    Ok(out)
}

/// The symmetric solution attached to an idempotent `φ: {0..n} → {0..n}`:
///
/// ```text
/// R^φ(m_i ⊗ m_j) = δ_ij [i ∈ Im φ] Σ_{a,b ∈ φ⁻¹(i)} m_a ⊗ m_b
/// ```
///
/// `phi` is 0-based here.
pub fn make_phi(phi: &[usize]) -> Result<TensorOp2> {
    let n = phi.len();
    if n == 0 {
        return Err(Error::DimensionMismatch("phi must act on a non-empty set".into()));
    }
    if let Some(&bad) = phi.iter().find(|&&p| p >= n) {
        return Err(Error::Parse(format!("phi value {} outside 1..{n}", bad + 1)));
    }
    if let Some(k) = (0..n).find(|&k| phi[phi[k]] != phi[k]) {
        return Err(Error::NotIdempotent { index: k + 1 });
    }
    let mut r = TensorOp2::zero(n);
    // x_{uv}^{ji} = δ_uv δ_{φ(i) v} δ_{φ(j) v}
    for v in 0..n {
        for i in (0..n).filter(|&i| phi[i] == v) {
            for j in (0..n).filter(|&j| phi[j] == v) {
                r.set(v, v, j, i, scalar::one());
            }
        }
    }
    Ok(r)
}

/// A finite abelian group acting on `M = k^n`, with `M` graded by the group
/// so that each homogeneous component is a submodule.
#[derive(Clone, Debug)]
pub struct GradedActionData {
    pub group: FiniteGroup,
    /// One `n × n` matrix per group element, in the group's element order.
    pub actions: Vec<QMatrix>,
    /// Degree of each basis vector `m_l`, as a group element index.
    pub degrees: Vec<usize>,
}

impl GradedActionData {
    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        let n = self.dim();
        if n == 0 {
            return Err(Error::DimensionMismatch("graded module must be non-zero".into()));
        }
        if !g.is_abelian() {
            return Err(Error::InvalidGroupTable("group must be abelian".into()));
        }
        if self.actions.len() != g.order() {
            return Err(Error::InvalidAction(format!(
                "expected {} action matrices, got {}",
                g.order(),
                self.actions.len()
            )));
        }
        for a in &self.actions {
            square(a, n, "action matrix")?;
        }
        if self.degrees.iter().any(|&d| d >= g.order()) {
            return Err(Error::InvalidAction("degree outside the group".into()));
        }
        if self.actions[g.identity()] != QMatrix::identity(n) {
            return Err(Error::InvalidAction("identity element must act trivially".into()));
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                if &self.actions[a] * &self.actions[b] != self.actions[g.mul(a, b)] {
                    return Err(Error::InvalidAction(format!(
                        "action of {}·{} is not the product of the actions",
                        g.name(a),
                        g.name(b)
                    )));
                }
            }
        }
        for (a, act) in self.actions.iter().enumerate() {
            for l in 0..n {
                for k in 0..n {
                    if self.degrees[k] != self.degrees[l] && !act[(k, l)].is_zero() {
                        return Err(Error::NotASubmodule {
                            degree: g.name(self.degrees[l]).to_string(),
                            element: g.name(a).to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// `R(n ⊗ m) = Σ_σ σ·n ⊗ m_σ`; on basis vectors
/// `R(m_v ⊗ m_u) = deg(m_u)·m_v ⊗ m_u`.
pub fn make_graded(data: &GradedActionData) -> Result<TensorOp2> {
    data.validate()?;
    let n = data.dim();
    let mut r = TensorOp2::zero(n);
    for u in 0..n {
        let act = &data.actions[data.degrees[u]];
        for v in 0..n {
            for i in 0..n {
                let c = &act[(i, v)];
                if !c.is_zero() {
                    r.set(u, v, u, i, c.clone());
                }
            }
        }
    }
    Ok(r)
}

/// One term `coeff · rep[left] ⊗ rep[right]` of an element of `A ⊗ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomothetyTerm {
    pub coeff: Scalar,
    pub left: usize,
    pub right: usize,
}

/// The homothety `m ⊗ n ↦ Σ R¹·m ⊗ R²·n` of an element `Σ R¹ ⊗ R²` whose
/// left factors satisfy `Σ R¹a ⊗ R² = Σ aR¹ ⊗ R²` for every matrix `a` in
/// `rep`.
///
/// Only the left-sided condition is required of the input; the Long property
/// of the result is then verified directly.
pub fn make_homothety(rep: &[QMatrix], element: &[HomothetyTerm]) -> Result<TensorOp2> {
    let n = rep.first().map(QMatrix::rows).ok_or_else(|| {
        Error::DimensionMismatch("homothety needs at least one representation matrix".into())
    })?;
    for m in rep {
        square(m, n, "representation matrix")?;
    }
    if let Some(t) = element.iter().find(|t| t.left >= rep.len() || t.right >= rep.len()) {
        return Err(Error::Parse(format!(
            "term refers to matrix #{} but only {} are given",
            t.left.max(t.right) + 1,
            rep.len()
        )));
    }
    for (k, a) in rep.iter().enumerate() {
        let mut defect = QMatrix::zeros(n * n, n * n);
        for t in element {
            let r1 = &rep[t.left];
            let comm = &(r1 * a) - &(a * r1);
            defect = &defect + &comm.kron(&rep[t.right]).scale(&t.coeff);
        }
        if !defect.is_zero() {
            return Err(Error::CentralityViolated { generator: k + 1 });
        }
    }
    let mut m = QMatrix::zeros(n * n, n * n);
    for t in element {
        m = &m + &rep[t.left].kron(&rep[t.right]).scale(&t.coeff);
    }
    let r = TensorOp2::from_matrix(n, &m)?;
    require_long(&r)?;
    Ok(r)
}

/// `R⁻¹` in the same coefficient convention.
pub fn invert(r: &TensorOp2) -> Result<TensorOp2> {
    let inv = r.matrix().inverse().map_err(|e| match e {
        Error::SingularMatrix => Error::SingularOperator,
        other => other,
    })?;
    TensorOp2::from_matrix(r.dim(), &inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use crate::tensor::laws::{check_laws, check_long_componentwise, Law};

    fn long(r: &TensorOp2) -> bool {
        check_laws(r, &[Law::Long]).get(Law::Long).unwrap()
    }

    #[test]
    fn diag_all_ones_is_identity() {
        let a = QMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(make_diag(&a).unwrap(), TensorOp2::identity(2));
    }

    #[test]
    fn diag_families_are_long() {
        let r = make_diag(&QMatrix::from_i64(&[&[2, 3], &[5, 7]])).unwrap();
        assert!(long(&r));
        let a = QMatrix::from_fn(3, 3, |i, j| frac((i * 3 + j) as i64 * 7 - 11, (j + 2) as i64));
        assert!(long(&make_diag(&a).unwrap()));
        // R(m_1 ⊗ m_2) = 3 m_1 ⊗ m_2
        assert_eq!(*r.x(1, 0, 1, 0), int(3));
    }

    #[test]
    fn pair_reproduces_the_4x4_display() {
        let (a, b, c) = (1, 1, 1);
        let f = QMatrix::from_i64(&[&[a, 1], &[0, a]]);
        let g = QMatrix::from_i64(&[&[b, c], &[0, b]]);
        let r = make_pair(&f, &g).unwrap();
        let expected = QMatrix::from_i64(&[
            &[a * b, a * c, b, c],
            &[0, a * b, 0, b],
            &[0, 0, a * b, a * c],
            &[0, 0, 0, a * b],
        ]);
        assert_eq!(r.matrix(), expected);
        assert!(long(&r));
    }

    #[test]
    fn pair_with_identity_left_factor() {
        let g = QMatrix::from_i64(&[&[2, -1], &[4, 3]]);
        let r = make_pair(&QMatrix::identity(2), &g).unwrap();
        assert_eq!(r.matrix(), QMatrix::identity(2).kron(&g));
        assert!(long(&r));
    }

    #[test]
    fn non_commuting_pair_is_rejected() {
        let f = QMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        let g = QMatrix::from_i64(&[&[0, 0], &[1, 0]]);
        assert!(matches!(make_pair(&f, &g), Err(Error::NonCommutingPair)));
    }

    #[test]
    fn conjugation() {
        let r = make_diag(&QMatrix::from_i64(&[&[1, 2], &[3, 4]])).unwrap();
        assert_eq!(make_conjugate(&QMatrix::identity(2), &r).unwrap(), r);
        let two = QMatrix::identity(2).scale(&int(2));
        assert_eq!(make_conjugate(&two, &r).unwrap(), r);
        let u = QMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let c = make_conjugate(&u, &r).unwrap();
        assert!(long(&c));
        assert_ne!(c, r);
    }

    #[test]
    fn conjugation_errors() {
        let r = TensorOp2::identity(2);
        let singular = QMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert!(matches!(make_conjugate(&singular, &r), Err(Error::SingularMatrix)));
        let mut bad = TensorOp2::identity(2);
        bad.set(0, 0, 1, 1, int(1));
        bad.set(1, 1, 0, 0, int(1));
        if !long(&bad) {
            assert!(matches!(
                make_conjugate(&QMatrix::identity(2), &bad),
                Err(Error::NotALongSolution { .. })
            ));
        }
    }

    #[test]
    fn phi_identity_is_diagonal_projector() {
        let r = make_phi(&[0, 1, 2]).unwrap();
        for (i, j, v, u) in crate::tensor::op::quadruples(3) {
            let expect = if i == v && j == u && u == v { int(1) } else { int(0) };
            assert_eq!(*r.x(u, v, j, i), expect);
        }
    }

    #[test]
    fn phi_coefficient_formula() {
        let phi = [0, 1, 1, 1];
        let r = make_phi(&phi).unwrap();
        for (i, j, v, u) in crate::tensor::op::quadruples(4) {
            let expect = u == v && phi[i] == v && phi[j] == v;
            assert_eq!(*r.x(u, v, j, i), if expect { int(1) } else { int(0) });
        }
    }

    #[test]
    fn phi_by_hand_expansion() {
        // φ = (1,1,3): R(m_1 ⊗ m_1) = Σ_{a,b ∈ {1,2}} m_a ⊗ m_b, R(m_2 ⊗ m_2) = 0.
        let r = make_phi(&[0, 0, 2]).unwrap();
        let out = r.apply_basis(0, 0);
        let ones: Vec<usize> = (0..9).filter(|&k| !out[k].is_zero()).collect();
        assert_eq!(ones, vec![0, 1, 3, 4]);
        assert!(r.apply_basis(1, 1).iter().all(Zero::is_zero));
        assert_eq!(r.apply_basis(2, 2).iter().filter(|x| !x.is_zero()).count(), 1);
    }

    #[test]
    fn non_idempotent_phi_is_rejected() {
        assert!(matches!(make_phi(&[1, 2, 0]), Err(Error::NotIdempotent { .. })));
        assert!(make_phi(&[3, 0]).is_err());
    }

    fn z2_data(action_g: QMatrix) -> GradedActionData {
        GradedActionData {
            group: FiniteGroup::cyclic(2),
            actions: vec![QMatrix::identity(2), action_g],
            degrees: vec![0, 1],
        }
    }

    #[test]
    fn graded_trivial_group_gives_identity() {
        let data = GradedActionData {
            group: FiniteGroup::cyclic(1),
            actions: vec![QMatrix::identity(3)],
            degrees: vec![0, 0, 0],
        };
        assert_eq!(make_graded(&data).unwrap(), TensorOp2::identity(3));
    }

    #[test]
    fn graded_z2() {
        let g = QMatrix::from_i64(&[&[1, 0], &[0, -1]]);
        let r = make_graded(&z2_data(g.clone())).unwrap();
        assert!(long(&r));
        // R(m_v ⊗ m_1) = m_v ⊗ m_1, R(m_v ⊗ m_2) = g·m_v ⊗ m_2
        for v in 0..2 {
            let mut e = vec![int(0); 4];
            e[v * 2] = int(1);
            assert_eq!(r.apply_basis(v, 0), e);
            let mut e = vec![int(0); 4];
            e[v * 2 + 1] = g[(v, v)].clone();
            assert_eq!(r.apply_basis(v, 1), e);
        }
    }

    #[test]
    fn graded_rejects_non_invariant_component() {
        let swap = QMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert!(matches!(make_graded(&z2_data(swap)), Err(Error::NotASubmodule { .. })));
    }

    #[test]
    fn graded_rejects_non_homomorphism() {
        let g = QMatrix::from_i64(&[&[2, 0], &[0, 1]]);
        assert!(matches!(make_graded(&z2_data(g)), Err(Error::InvalidAction(_))));
    }

    #[test]
    fn homothety_cases() {
        let id = QMatrix::identity(2);
        let unit = [HomothetyTerm { coeff: int(1), left: 0, right: 0 }];
        assert_eq!(make_homothety(std::slice::from_ref(&id), &unit).unwrap(), TensorOp2::identity(2));

        let d1 = QMatrix::from_i64(&[&[1, 0], &[0, 2]]);
        let d2 = QMatrix::from_i64(&[&[3, 0], &[0, -1]]);
        let rep = [id.clone(), d1, d2];
        let element = [
            HomothetyTerm { coeff: int(2), left: 1, right: 2 },
            HomothetyTerm { coeff: frac(-1, 3), left: 2, right: 0 },
        ];
        let r = make_homothety(&rep, &element).unwrap();
        assert!(long(&r));
        assert!(check_long_componentwise(&r));
    }

    #[test]
    fn homothety_non_central_factor() {
        let e12 = QMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        let e21 = QMatrix::from_i64(&[&[0, 0], &[1, 0]]);
        let rep = [QMatrix::identity(2), e12, e21];
        let element = [HomothetyTerm { coeff: int(1), left: 1, right: 0 }];
        assert!(matches!(
            make_homothety(&rep, &element),
            Err(Error::CentralityViolated { generator: 3 })
        ));
    }

    #[test]
    fn inverse_cases() {
        assert_eq!(invert(&TensorOp2::identity(2)).unwrap(), TensorOp2::identity(2));
        let f = QMatrix::from_i64(&[&[2, 1], &[0, 2]]);
        let g = QMatrix::from_i64(&[&[3, 5], &[0, 3]]);
        let r = make_pair(&f, &g).unwrap();
        let expected = make_pair(&f.inverse().unwrap(), &g.inverse().unwrap()).unwrap();
        assert_eq!(invert(&r).unwrap(), expected);
        assert!(long(&invert(&r).unwrap()));
        assert!(matches!(invert(&make_phi(&[0, 0]).unwrap()), Err(Error::SingularOperator)));
    }
}
