//! The Long-bialgebra axioms (L1)–(L5), the braided axiom (B1), and the
//! strong D-map identity, checked on basis elements.

use std::fmt;
use std::str::FromStr;

use num::Zero;
use serde::{Deserialize, Serialize};

use super::structure::{Coalgebra, FinDimBialgebra};
use crate::error::Error;
use crate::linalg::QMatrix;
use crate::scalar::{Frac, Scalar};

/// `σ(e_a ⊗ e_b)` on a basis.
pub type SigmaTable = QMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axiom {
    L1,
    L2,
    L3,
    L4,
    L5,
    B1,
    #[serde(rename = "strongD")]
    StrongD,
}

impl Axiom {
    pub const ALL: [Axiom; 7] =
        [Axiom::L1, Axiom::L2, Axiom::L3, Axiom::L4, Axiom::L5, Axiom::B1, Axiom::StrongD];
    pub const LONG: [Axiom; 5] = [Axiom::L1, Axiom::L2, Axiom::L3, Axiom::L4, Axiom::L5];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::L1 => "L1",
            Axiom::L2 => "L2",
            Axiom::L3 => "L3",
            Axiom::L4 => "L4",
            Axiom::L5 => "L5",
            Axiom::B1 => "B1",
            Axiom::StrongD => "strongD",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        Axiom::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::Parse(format!("unknown axiom `{s}`")))
    }
}

/// Per-axiom verdicts with the first failing basis tuple (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub results: Vec<(Axiom, Option<Vec<usize>>)>,
}

impl AxiomReport {
    pub fn passes(&self, axiom: Axiom) -> Option<bool> {
        self.results.iter().find(|(a, _)| *a == axiom).map(|(_, w)| w.is_none())
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|(_, w)| w.is_none())
    }

    pub fn witness(&self, axiom: Axiom) -> Option<&[usize]> {
        self.results.iter().find(|(a, _)| *a == axiom).and_then(|(_, w)| w.as_deref())
    }
}

/// `Σ σ(c₍₁₎ ⊗ d) c₍₂₎ = Σ σ(c₍₂₎ ⊗ d) c₍₁₎` on basis pairs.
pub fn strong_d_violation(c: &Coalgebra, s: &SigmaTable) -> Option<[usize; 2]> {
    let d = c.dim();
    for a in 0..d {
        for b in 0..d {
            let mut defect = vec![Scalar::zero(); d];
            for (p, q, k) in c.delta_terms(a) {
                defect[q] += k * &s[(p, b)];
                defect[p] -= k * &s[(q, b)];
            }
            if defect.iter().any(|x| !x.is_zero()) {
                return Some([a, b]);
            }
        }
    }
    None
}

fn sigma_of(s: &SigmaTable, x: &[Scalar], b: usize) -> Scalar {
    x.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(a, v)| v * &s[(a, b)]).sum()
}

fn sigma_left(s: &SigmaTable, a: usize, y: &[Scalar]) -> Scalar {
    y.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(b, v)| v * &s[(a, b)]).sum()
}

fn check_one(h: &FinDimBialgebra, s: &SigmaTable, axiom: Axiom) -> Option<Vec<usize>> {
    let d = h.dim();
    let co = h.coalgebra();
    let unit = h.unit();
    match axiom {
        Axiom::L1 | Axiom::StrongD => strong_d_violation(co, s).map(|w| w.to_vec()),
        Axiom::L2 => (0..d).find(|&a| sigma_left(s, a, unit) != *h.counit(a)).map(|a| vec![a]),
        Axiom::L4 => (0..d).find(|&a| sigma_of(s, unit, a) != *h.counit(a)).map(|a| vec![a]),
        Axiom::L3 => {
            // σ(x ⊗ yz) = Σ σ(x₍₁₎ ⊗ y) σ(x₍₂₎ ⊗ z)
            for a in 0..d {
                for b in 0..d {
                    for c in 0..d {
                        let lhs = sigma_left(s, a, h.mult(b, c));
                        let rhs: Scalar =
                            co.delta_terms(a).map(|(p, q, k)| k * &s[(p, b)] * &s[(q, c)]).sum();
                        if lhs != rhs {
                            return Some(vec![a, b, c]);
                        }
                    }
                }
            }
            None
        }
        Axiom::L5 => {
            // σ(xy ⊗ z) = Σ σ(y ⊗ z₍₁₎) σ(x ⊗ z₍₂₎)
            for a in 0..d {
                for b in 0..d {
                    for c in 0..d {
                        let lhs = sigma_of(s, h.mult(a, b), c);
                        let rhs: Scalar =
                            co.delta_terms(c).map(|(p, q, k)| k * &s[(b, p)] * &s[(a, q)]).sum();
                        if lhs != rhs {
                            return Some(vec![a, b, c]);
                        }
                    }
                }
            }
            None
        }
        Axiom::B1 => {
            // Σ σ(x₍₁₎ ⊗ y₍₁₎) y₍₂₎x₍₂₎ = Σ σ(x₍₂₎ ⊗ y₍₂₎) x₍₁₎y₍₁₎
            for a in 0..d {
                for b in 0..d {
                    let mut defect = vec![Scalar::zero(); d];
                    for (p, q, k) in co.delta_terms(a) {
                        for (r, t, l) in co.delta_terms(b) {
                            let kl = k * l;
                            let left = &kl * &s[(p, r)];
                            let right = &kl * &s[(q, t)];
                            for z in 0..d {
                                defect[z] += &left * &h.mult(t, q)[z] - &right * &h.mult(p, r)[z];
                            }
                        }
                    }
                    if defect.iter().any(|x| !x.is_zero()) {
                        return Some(vec![a, b]);
                    }
                }
            }
            None
        }
    }
}

pub fn check_axioms(h: &FinDimBialgebra, s: &SigmaTable, which: &[Axiom]) -> AxiomReport {
    assert!(s.rows() == h.dim() && s.cols() == h.dim(), "σ table must be d x d");
    AxiomReport { results: which.iter().map(|&a| (a, check_one(h, s, a))).collect() }
}

/// `s[a][b] = ε(e_a) ε(e_b)`.
pub fn counit_table(c: &Coalgebra) -> SigmaTable {
    let d = c.dim();
    QMatrix::from_fn(d, d, |a, b| c.counit(a) * c.counit(b))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SigmaDoc {
    pub table: Vec<Vec<Frac>>,
}

impl SigmaDoc {
    pub fn from_table(s: &SigmaTable) -> Self {
        SigmaDoc { table: s.to_rows().into_iter().map(|r| r.into_iter().map(Frac).collect()).collect() }
    }

    pub fn to_table(&self) -> crate::error::Result<SigmaTable> {
        QMatrix::from_rows(self.table.iter().map(|r| r.iter().map(|f| f.0.clone()).collect()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::hopf::structure::{group_algebra, sweedler_h4};
    use crate::scalar::int;

    #[test]
    fn counit_table_passes_long_axioms() {
        for h in [sweedler_h4(), group_algebra(&FiniteGroup::cyclic(2)), group_algebra(&FiniteGroup::cyclic(3))] {
            let s = counit_table(h.coalgebra());
            let report = check_axioms(&h, &s, &Axiom::LONG);
            assert!(report.all_pass(), "{report:?}");
        }
    }

    #[test]
    fn counit_table_is_not_braided_on_h4() {
        // ε ⊗ ε satisfies (B1) only when the algebra is commutative.
        let h = sweedler_h4();
        let report = check_axioms(&h, &counit_table(h.coalgebra()), &[Axiom::B1]);
        assert_eq!(report.passes(Axiom::B1), Some(false));
        let z3 = group_algebra(&FiniteGroup::cyclic(3));
        assert!(check_axioms(&z3, &counit_table(z3.coalgebra()), &Axiom::ALL).all_pass());
    }

    #[test]
    fn bicharacter_on_z2() {
        let h = group_algebra(&FiniteGroup::cyclic(2));
        let s = QMatrix::from_i64(&[&[1, 1], &[1, -1]]);
        assert!(check_axioms(&h, &s, &Axiom::ALL).all_pass());
        // Not a bicharacter: σ(g ⊗ g) = 2 breaks (L3).
        let bad = QMatrix::from_i64(&[&[1, 1], &[1, 2]]);
        let report = check_axioms(&h, &bad, &Axiom::LONG);
        assert_eq!(report.passes(Axiom::L1), Some(true));
        assert_eq!(report.passes(Axiom::L3), Some(false));
    }

    #[test]
    fn h4_l1_failure_has_witness() {
        let h = sweedler_h4();
        let mut s = counit_table(h.coalgebra());
        s[(2, 0)] = int(1); // σ(y ⊗ 1) ≠ 0
        let report = check_axioms(&h, &s, &[Axiom::L1, Axiom::L2]);
        assert_eq!(report.witness(Axiom::L1), Some(&[2usize, 0][..]));
        assert_eq!(report.passes(Axiom::L2), Some(false));
    }

    #[test]
    fn axiom_names_parse() {
        for a in Axiom::ALL {
            assert_eq!(a.name().parse::<Axiom>().unwrap(), a);
        }
        assert_eq!("strongd".parse::<Axiom>().unwrap(), Axiom::StrongD);
    }
}
