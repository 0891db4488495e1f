//! Exact integrability checks for the lifted operators.

use serde::Serialize;

use crate::linalg::QMatrix;
use crate::tensor::{lift_to_slots, TensorOp2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FlatnessKind {
    /// `[R^{ij}, R^{ik} + R^{jk}]` on slots `[i, j, k]`.
    BracketSum,
    /// `[R^{ab}, R^{cd}]` on slots `[a, b, c, d]`, sharing at least one slot.
    Pair,
    /// `[R^{ab}, R^{cd}]` with `{a, b}` and `{c, d}` disjoint.
    Disjoint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatnessEntry {
    pub kind: FlatnessKind,
    /// 1-based slot indices.
    pub slots: Vec<usize>,
    pub vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatnessReport {
    pub entries: Vec<FlatnessEntry>,
}

impl FlatnessReport {
    pub fn all_vanish(&self) -> bool {
        self.entries.iter().all(|e| e.vanishes)
    }

    pub fn get(&self, kind: FlatnessKind, slots: &[usize]) -> Option<bool> {
        self.entries.iter().find(|e| e.kind == kind && e.slots == slots).map(|e| e.vanishes)
    }
}

fn ordered_pairs(slots: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..slots {
        for b in 0..slots {
            if a != b {
                out.push((a, b));
            }
        }
    }
    out
}

/// Every bracket on three slots and, for `points ≥ 4`, every disjoint pair
/// on four, computed exactly.
pub fn flatness_residuals(r: &TensorOp2, points: usize) -> FlatnessReport {
    let mut entries = Vec::new();
    if points < 2 {
        return FlatnessReport { entries };
    }
    if points == 2 {
        let r12 = lift_to_slots(r, 0, 1, 2);
        let r21 = lift_to_slots(r, 1, 0, 2);
        entries.push(FlatnessEntry { kind: FlatnessKind::Pair, slots: vec![1, 2, 2, 1], vanishes: r12.commutator(&r21).is_zero() });
        return FlatnessReport { entries };
    }
    let pairs = ordered_pairs(3);
    let lifts: Vec<QMatrix> = pairs.iter().map(|&(a, b)| lift_to_slots(r, a, b, 3)).collect();
    let op = |a: usize, b: usize| &lifts[pairs.iter().position(|&p| p == (a, b)).unwrap()];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                if i == j || j == k || i == k {
                    continue;
                }
                let sum = op(i, k) + op(j, k);
                entries.push(FlatnessEntry {
                    kind: FlatnessKind::BracketSum,
                    slots: vec![i + 1, j + 1, k + 1],
                    vanishes: op(i, j).commutator(&sum).is_zero(),
                });
            }
        }
    }
    for (x, &(a, b)) in pairs.iter().enumerate() {
        for &(c, d) in &pairs[x + 1..] {
            entries.push(FlatnessEntry {
                kind: FlatnessKind::Pair,
                slots: vec![a + 1, b + 1, c + 1, d + 1],
                vanishes: op(a, b).commutator(op(c, d)).is_zero(),
            });
        }
    }
    if points >= 4 {
        for (p, q) in [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))] {
            for (a, b) in [p, (p.1, p.0)] {
                for (c, d) in [q, (q.1, q.0)] {
                    let left = lift_to_slots(r, a, b, 4);
                    let right = lift_to_slots(r, c, d, 4);
                    entries.push(FlatnessEntry {
                        kind: FlatnessKind::Disjoint,
                        slots: vec![a + 1, b + 1, c + 1, d + 1],
                        vanishes: left.commutator(&right).is_zero(),
                    });
                }
            }
        }
    }
    FlatnessReport { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::make_phi;

    #[test]
    fn identity_is_flat() {
        let report = flatness_residuals(&TensorOp2::identity(2), 4);
        assert!(report.all_vanish());
        assert_eq!(report.entries.len(), 6 + 15 + 12);
    }

    #[test]
    fn symmetric_phi_is_flat() {
        let r = make_phi(&[0, 0, 2]).unwrap();
        assert!(r.is_symmetric());
        assert!(flatness_residuals(&r, 3).all_vanish());
    }
}
