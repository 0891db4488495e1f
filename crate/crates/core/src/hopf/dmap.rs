//! Strong D-maps and the operator they induce on a comodule.

use num::{One, Zero};

use super::axioms::{strong_d_violation, SigmaTable};
use super::structure::Coalgebra;
use crate::error::{Error, Result};
use crate::frt::comatrix::{self, label};
use crate::frt::LongPresentation;
use crate::scalar::Scalar;
use crate::tensor::{require_long, TensorOp2};

/// A right comodule structure `ρ(m_l) = Σ_v m_v ⊗ ρ^v_l` on `k^n`, each
/// `ρ^v_l` given by coordinates in the coalgebra basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coaction {
    coeffs: Vec<Vec<Vec<Scalar>>>,
}

impl Coaction {
    /// `coeffs[v][l]` is `ρ^v_l`. Checks the counit law and coassociativity.
    pub fn new(c: &Coalgebra, coeffs: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let n = coeffs.len();
        let d = c.dim();
        if coeffs.iter().any(|row| row.len() != n || row.iter().any(|x| x.len() != d)) {
            return Err(Error::InvalidCoaction(format!("coefficients must be {n}x{n} vectors of length {d}")));
        }
        for v in 0..n {
            for l in 0..n {
                let e: Scalar = coeffs[v][l].iter().zip(c.counit_vector()).map(|(x, y)| x * y).sum();
                let expected = if v == l { Scalar::one() } else { Scalar::zero() };
                if e != expected {
                    return Err(Error::InvalidCoaction(format!("counit law fails at ({}, {})", v + 1, l + 1)));
                }
            }
        }
        // Δ(ρ^w_l) = Σ_v ρ^w_v ⊗ ρ^v_l
        for w in 0..n {
            for l in 0..n {
                for p in 0..d {
                    for q in 0..d {
                        let lhs: Scalar = (0..d)
                            .filter(|&a| !coeffs[w][l][a].is_zero())
                            .map(|a| &coeffs[w][l][a] * c.comult(a, p, q))
                            .sum();
                        let rhs: Scalar = (0..n).map(|v| &coeffs[w][v][p] * &coeffs[v][l][q]).sum();
                        if lhs != rhs {
                            return Err(Error::InvalidCoaction(format!(
                                "coassociativity fails at ({}, {})",
                                w + 1,
                                l + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(Coaction { coeffs })
    }

    /// The fundamental comodule of a presentation: `ρ(m_l) = Σ_v m_v ⊗ c̄_vl`.
    pub fn fundamental(lr: &LongPresentation) -> Result<Self> {
        let n = lr.order();
        let coeffs = (0..n)
            .map(|v| (0..n).map(|l| lr.coords_of_label(label(n, v, l)).to_vec()).collect())
            .collect();
        Self::new(&presentation_coalgebra(lr)?, coeffs)
    }

    /// The trivial comodule `ρ(m_l) = m_l ⊗ 1` needs a group-like; this
    /// takes its coordinates.
    pub fn trivial(c: &Coalgebra, n: usize, grouplike: &[Scalar]) -> Result<Self> {
        let zero = vec![Scalar::zero(); c.dim()];
        let coeffs = (0..n)
            .map(|v| (0..n).map(|l| if v == l { grouplike.to_vec() } else { zero.clone() }).collect())
            .collect();
        Self::new(c, coeffs)
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, v: usize, l: usize) -> &[Scalar] {
        &self.coeffs[v][l]
    }
}

/// The coalgebra of a presentation, on the generator basis.
pub fn presentation_coalgebra(lr: &LongPresentation) -> Result<Coalgebra> {
    let m = lr.num_generators();
    let comult = (0..m).map(|t| lr.delta(t).to_rows()).collect();
    let counit = (0..m).map(|t| lr.epsilon(t).clone()).collect();
    Coalgebra::new(lr.names().into_iter().map(String::from).collect(), comult, counit)
}

/// The full comatrix coalgebra `C(n)` on the labels `c_i_j`.
pub fn comatrix_coalgebra(n: usize) -> Coalgebra {
    let n2 = n * n;
    let comult = (0..n2)
        .map(|k| {
            let d = comatrix::coproduct(n, &comatrix::basis_vector(n, k));
            (0..n2).map(|a| d[a * n2..(a + 1) * n2].to_vec()).collect()
        })
        .collect();
    let counit = (0..n2).map(|k| comatrix::counit(n, &comatrix::basis_vector(n, k))).collect();
    let labels = (0..n2).map(|k| comatrix::label_name(n, k)).collect();
    Coalgebra::new(labels, comult, counit).expect("comatrix coalgebra is valid")
}

/// `R_σ(m_v ⊗ m_u) = Σ σ(ρ^i_v ⊗ ρ^j_u) m_i ⊗ m_j`, after checking that σ
/// is a strong D-map on `c`. The result solves the Long equation.
pub fn strong_dmap_rsigma(c: &Coalgebra, s: &SigmaTable, rho: &Coaction) -> Result<TensorOp2> {
    if s.rows() != c.dim() || s.cols() != c.dim() {
        return Err(Error::DimensionMismatch(format!("sigma must be {0}x{0}", c.dim())));
    }
    if let Some(witness) = strong_d_violation(c, s) {
        return Err(Error::NotAStrongDMap { witness });
    }
    let n = rho.dim();
    let sigma = |a: &[Scalar], b: &[Scalar]| -> Scalar {
        let sb = s.apply(b);
        a.iter().zip(&sb).filter(|(x, _)| !x.is_zero()).map(|(x, y)| x * y).sum()
    };
    let mut r = TensorOp2::zero(n);
    for (i, j, v, u) in crate::tensor::op::quadruples(n) {
        r.set(u, v, j, i, sigma(rho.coeff(i, v), rho.coeff(j, u)));
    }
    require_long(&r).map_err(|e| Error::Internal(format!("R_sigma of a strong D-map failed the Long check: {e}")))?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frt::{build_lr, SigmaForm};
    use crate::hopf::axioms::counit_table;
    use crate::hopf::structure::sweedler_h4;
    use crate::scalar::int;
    use crate::tensor::make_phi;

    #[test]
    fn counit_sigma_gives_identity() {
        let h = sweedler_h4();
        let c = h.coalgebra();
        let mut one = vec![int(0); 4];
        one[0] = int(1);
        let rho = Coaction::trivial(c, 3, &one).unwrap();
        assert_eq!(strong_dmap_rsigma(c, &counit_table(c), &rho).unwrap(), TensorOp2::identity(3));

        let c2 = comatrix_coalgebra(2);
        let fund = (0..2)
            .map(|v| (0..2).map(|l| comatrix::basis_vector(2, label(2, v, l))).collect())
            .collect();
        let rho = Coaction::new(&c2, fund).unwrap();
        assert_eq!(strong_dmap_rsigma(&c2, &counit_table(&c2), &rho).unwrap(), TensorOp2::identity(2));
    }

    #[test]
    fn fundamental_comodule_recovers_r() {
        let r = make_phi(&[0, 1, 1, 1]).unwrap();
        let lr = build_lr(&r, None).unwrap();
        let c = presentation_coalgebra(&lr).unwrap();
        let rho = Coaction::fundamental(&lr).unwrap();
        assert_eq!(strong_dmap_rsigma(&c, lr.sigma(), &rho).unwrap(), r);
    }

    #[test]
    fn mutated_sigma_is_rejected() {
        let r = make_phi(&[0, 1, 1, 1]).unwrap();
        let lr = build_lr(&r, None).unwrap();
        let c = presentation_coalgebra(&lr).unwrap();
        let rho = Coaction::fundamental(&lr).unwrap();
        let m = c.dim();
        let hit = (0..m * m).any(|k| {
            let mut s = lr.sigma().clone();
            s[(k / m, k % m)] += int(1);
            matches!(strong_dmap_rsigma(&c, &s, &rho), Err(Error::NotAStrongDMap { .. }))
        });
        assert!(hit);
    }

    #[test]
    fn sigma0_on_full_comatrix_needs_zero_obstructions() {
        let c = comatrix_coalgebra(2);
        let id = SigmaForm::from_operator(&TensorOp2::identity(2));
        assert!(strong_d_violation(&c, id.table()).is_none());
        let r = make_phi(&[0, 1, 1, 1]).unwrap();
        let s0 = SigmaForm::from_operator(&r);
        assert!(strong_d_violation(&c, s0.table()).is_some());
    }

    #[test]
    fn bad_coactions_are_rejected() {
        let c = comatrix_coalgebra(2);
        let zero = vec![vec![vec![int(0); 4]; 2]; 2];
        assert!(matches!(Coaction::new(&c, zero), Err(Error::InvalidCoaction(_))));
        // ρ^1_2 = c_21 keeps the counit law but breaks coassociativity
        let mut coeffs: Vec<Vec<Vec<Scalar>>> = (0..2)
            .map(|v| (0..2).map(|l| comatrix::basis_vector(2, label(2, v, l))).collect())
            .collect();
        coeffs[0][1] = comatrix::basis_vector(2, label(2, 1, 0));
        assert!(matches!(Coaction::new(&c, coeffs), Err(Error::InvalidCoaction(_))));
    }
}
