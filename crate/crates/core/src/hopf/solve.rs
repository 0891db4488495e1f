//! The linear part of the Long axioms as an exact linear system in the
//! `d²` unknowns `s[a][b]`, and a sound but incomplete feasibility test for
//! the quadratic part.

use std::collections::BTreeSet;

use num::Zero;

use super::axioms::{Axiom, SigmaTable};
use super::structure::FinDimBialgebra;
use crate::linalg::{solve_affine, AffineSpace, LinearSolution, QMatrix};
use crate::scalar::Scalar;

/// One linear equation `Σ coeffs · s = rhs`, tagged with where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRow {
    pub axiom: Axiom,
    pub tuple: Vec<usize>,
    pub coeffs: Vec<Scalar>,
    pub rhs: Scalar,
}

fn unknown(d: usize, a: usize, b: usize) -> usize {
    a * d + b
}

/// Rows for (L1), (L2) and (L4).
pub fn linear_rows(h: &FinDimBialgebra) -> Vec<LinearRow> {
    let d = h.dim();
    let co = h.coalgebra();
    let mut rows = Vec::new();
    for a in 0..d {
        for b in 0..d {
            // coefficient of e_z in Σ s[p][b] e_q − Σ s[q][b] e_p over Δ(e_a) = Σ k e_p ⊗ e_q
            let mut per_z = vec![vec![Scalar::zero(); d * d]; d];
            for (p, q, k) in co.delta_terms(a) {
                per_z[q][unknown(d, p, b)] += k;
                per_z[p][unknown(d, q, b)] -= k;
            }
            for (z, coeffs) in per_z.into_iter().enumerate() {
                if coeffs.iter().any(|x| !x.is_zero()) {
                    rows.push(LinearRow { axiom: Axiom::L1, tuple: vec![a, b, z], coeffs, rhs: Scalar::zero() });
                }
            }
        }
    }
    for a in 0..d {
        let mut l2 = vec![Scalar::zero(); d * d];
        let mut l4 = vec![Scalar::zero(); d * d];
        for (c, u) in h.unit().iter().enumerate().filter(|(_, u)| !u.is_zero()) {
            l2[unknown(d, a, c)] += u;
            l4[unknown(d, c, a)] += u;
        }
        rows.push(LinearRow { axiom: Axiom::L2, tuple: vec![a], coeffs: l2, rhs: h.counit(a).clone() });
        rows.push(LinearRow { axiom: Axiom::L4, tuple: vec![a], coeffs: l4, rhs: h.counit(a).clone() });
    }
    rows
}

/// Outcome of solving a family of linear rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionSpace {
    /// Every table satisfying the rows, as `particular + span(directions)`
    /// over the flattened unknowns `s[a][b] ↦ a·d + b`.
    Affine(AffineSpace),
    /// The rows are contradictory; this one reduces to `0 = nonzero`.
    Inconsistent(LinearRow),
}

fn solve_rows(d: usize, rows: &[LinearRow]) -> SolutionSpace {
    if rows.is_empty() {
        let directions = (0..d * d)
            .map(|k| (0..d * d).map(|j| if j == k { crate::scalar::one() } else { Scalar::zero() }).collect())
            .collect();
        return SolutionSpace::Affine(AffineSpace { particular: vec![Scalar::zero(); d * d], directions });
    }
    let a = QMatrix::from_fn(rows.len(), d * d, |r, c| rows[r].coeffs[c].clone());
    let b: Vec<Scalar> = rows.iter().map(|r| r.rhs.clone()).collect();
    match solve_affine(&a, &b) {
        LinearSolution::Affine(space) => SolutionSpace::Affine(space),
        LinearSolution::Inconsistent { row } => SolutionSpace::Inconsistent(rows[row].clone()),
    }
}

/// All tables satisfying (L1), (L2) and (L4).
pub fn l1_solution_space(h: &FinDimBialgebra) -> SolutionSpace {
    solve_rows(h.dim(), &linear_rows(h))
}

/// Only the (L1) rows; for cocommutative coalgebras this is everything.
pub fn l1_only_space(h: &FinDimBialgebra) -> SolutionSpace {
    let rows: Vec<LinearRow> = linear_rows(h).into_iter().filter(|r| r.axiom == Axiom::L1).collect();
    solve_rows(h.dim(), &rows)
}

impl SolutionSpace {
    pub fn affine(&self) -> Option<&AffineSpace> {
        match self {
            SolutionSpace::Affine(a) => Some(a),
            SolutionSpace::Inconsistent(_) => None,
        }
    }

    /// Value of `s[a][b]` if fixed on the whole space.
    pub fn pinned(&self, d: usize, a: usize, b: usize) -> Option<Scalar> {
        self.affine()?.pinned(unknown(d, a, b)).cloned()
    }

    /// Whether `s[a][b] − s[c][b]`-style functionals are constant.
    pub fn functional(&self, f: &[Scalar]) -> Option<Scalar> {
        self.affine()?.functional_value(f)
    }

    pub fn contains(&self, s: &SigmaTable) -> bool {
        let flat: Vec<Scalar> = (0..s.rows()).flat_map(|a| s.row(a).to_vec()).collect();
        self.affine().is_some_and(|space| space.contains(&flat))
    }
}

/// "Infeasible" is a proof; "Unknown" claims nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Infeasible { axiom: Axiom, tuple: Vec<usize> },
    Unknown(AffineSpace),
}

/// A quadratic equation `Σ lin·s + Σ quad·s·s = 0` from (L3) or (L5).
struct Quadratic {
    axiom: Axiom,
    tuple: Vec<usize>,
    linear: Vec<(usize, Scalar)>,
    quadratic: Vec<(usize, usize, Scalar)>,
}

fn quadratic_equations(h: &FinDimBialgebra) -> Vec<Quadratic> {
    let d = h.dim();
    let co = h.coalgebra();
    let mut out = Vec::new();
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                // (L3): Σ_k μ[b][c][k] s[a][k] − Σ Δ[a][p][q] s[p][b] s[q][c]
                let linear = h.mult(b, c).iter().enumerate()
                    .filter(|(_, k)| !k.is_zero())
                    .map(|(k, m)| (unknown(d, a, k), m.clone()))
                    .collect();
                let quadratic = co.delta_terms(a)
                    .map(|(p, q, k)| (unknown(d, p, b), unknown(d, q, c), -k.clone()))
                    .collect();
                out.push(Quadratic { axiom: Axiom::L3, tuple: vec![a, b, c], linear, quadratic });
                // (L5): Σ_k μ[a][b][k] s[k][c] − Σ Δ[c][p][q] s[b][p] s[a][q]
                let linear = h.mult(a, b).iter().enumerate()
                    .filter(|(_, k)| !k.is_zero())
                    .map(|(k, m)| (unknown(d, k, c), m.clone()))
                    .collect();
                let quadratic = co.delta_terms(c)
                    .map(|(p, q, k)| (unknown(d, b, p), unknown(d, a, q), -k.clone()))
                    .collect();
                out.push(Quadratic { axiom: Axiom::L5, tuple: vec![a, b, c], linear, quadratic });
            }
        }
    }
    out
}

/// Solves the linear axioms, then repeatedly turns (L3)/(L5) equations into
/// linear ones wherever every quadratic monomial has a factor pinned by the
/// current solution space.
pub fn sigma_feasibility(h: &FinDimBialgebra) -> Feasibility {
    let d = h.dim();
    let mut rows = linear_rows(h);
    let quads = quadratic_equations(h);
    let mut used: BTreeSet<usize> = BTreeSet::new();
    loop {
        let space = match solve_rows(d, &rows) {
            SolutionSpace::Affine(space) => space,
            SolutionSpace::Inconsistent(row) => {
                return Feasibility::Infeasible { axiom: row.axiom, tuple: row.tuple };
            }
        };
        let mut added = false;
        for (k, q) in quads.iter().enumerate() {
            if used.contains(&k) {
                continue;
            }
            let mut coeffs = vec![Scalar::zero(); d * d];
            let mut rhs = Scalar::zero();
            for (u, c) in &q.linear {
                coeffs[*u] += c;
            }
            let mut linearizable = true;
            for (u, v, c) in &q.quadratic {
                match (space.pinned(*u), space.pinned(*v)) {
                    (Some(pu), Some(pv)) => rhs -= c * pu * pv,
                    (Some(pu), None) => coeffs[*v] += c * pu,
                    (None, Some(pv)) => coeffs[*u] += c * pv,
                    (None, None) => {
                        linearizable = false;
                        break;
                    }
                }
            }
            if !linearizable {
                continue;
            }
            used.insert(k);
            rows.push(LinearRow { axiom: q.axiom, tuple: q.tuple.clone(), coeffs, rhs });
            added = true;
        }
        if !added {
            return Feasibility::Unknown(space);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::hopf::axioms::counit_table;
    use crate::hopf::structure::{group_algebra, sweedler_h4};
    use crate::scalar::int;

    #[test]
    fn h4_forced_constraints() {
        let h = sweedler_h4();
        let space = l1_solution_space(&h);
        let (one, x, y) = (0, 1, 2);
        for b in 0..4 {
            assert_eq!(space.pinned(4, y, b), Some(int(0)));
            let mut f = vec![int(0); 16];
            f[unknown(4, x, b)] = int(1);
            f[unknown(4, one, b)] = int(-1);
            assert_eq!(space.functional(&f), Some(int(0)));
        }
        assert!(space.contains(&counit_table(h.coalgebra())));
    }

    #[test]
    fn h4_feasibility_is_unknown() {
        match sigma_feasibility(&sweedler_h4()) {
            Feasibility::Unknown(space) => {
                let flat: Vec<Scalar> = counit_table(sweedler_h4().coalgebra()).to_rows().concat();
                assert!(space.contains(&flat));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn z2_space_by_hand() {
        let h = group_algebra(&FiniteGroup::cyclic(2));
        let SolutionSpace::Affine(space) = l1_solution_space(&h) else { panic!() };
        // s[e][·] = s[·][e] = 1 and s[g][g] free.
        assert_eq!(space.dim(), 1);
        assert_eq!(space.pinned(unknown(2, 1, 1)), None);
        assert_eq!(space.pinned(unknown(2, 0, 1)), Some(&int(1)));
        let SolutionSpace::Affine(l1) = l1_only_space(&h) else { panic!() };
        assert_eq!(l1.dim(), 4);
    }
}
