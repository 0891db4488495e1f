//! Predicates for the Long equation and its relatives.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::op::{lift, Legs, TensorOp2, TensorOp3};
use crate::error::{Error, SixTuple};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    /// `R¹²R¹³ = R¹³R¹²` and `R¹²R²³ = R²³R¹²`.
    Long,
    /// `R¹²R²³ = R²³R¹²`.
    DEquation,
    /// `R¹²R¹³R²³ = R²³R¹³R¹²`.
    Qybe,
    /// `R²³R¹³R¹² = R¹²R²³`.
    Hopf,
    /// `[R¹², R¹³ + R²³] = 0`.
    KzBracket,
    /// `τRτ = R`.
    Symmetric,
}

impl Law {
    pub const ALL: [Law; 6] =
        [Law::Long, Law::DEquation, Law::Qybe, Law::Hopf, Law::KzBracket, Law::Symmetric];

    pub fn name(self) -> &'static str {
        match self {
            Law::Long => "long",
            Law::DEquation => "d_equation",
            Law::Qybe => "qybe",
            Law::Hopf => "hopf",
            Law::KzBracket => "kz_bracket",
            Law::Symmetric => "symmetric",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Law::ALL
            .into_iter()
            .find(|l| l.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown law `{s}`")))
    }
}

/// Per-law verdicts, in the order requested.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub results: Vec<(Law, bool)>,
}

impl LawReport {
    pub fn get(&self, law: Law) -> Option<bool> {
        self.results.iter().find(|(l, _)| *l == law).map(|(_, ok)| *ok)
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|(_, ok)| *ok)
    }
}

/// The three lifts of `R`, computed once and shared between law checks.
pub struct Lifts {
    pub r12: TensorOp3,
    pub r13: TensorOp3,
    pub r23: TensorOp3,
}

impl Lifts {
    pub fn new(r: &TensorOp2) -> Self {
        Lifts { r12: lift(r, Legs::L12), r13: lift(r, Legs::L13), r23: lift(r, Legs::L23) }
    }

    pub fn long_first(&self) -> bool {
        self.r12.compose(&self.r13) == self.r13.compose(&self.r12)
    }

    pub fn d_equation(&self) -> bool {
        self.r12.compose(&self.r23) == self.r23.compose(&self.r12)
    }

    pub fn long(&self) -> bool {
        self.long_first() && self.d_equation()
    }

    pub fn qybe(&self) -> bool {
        self.r12.compose(&self.r13).compose(&self.r23)
            == self.r23.compose(&self.r13).compose(&self.r12)
    }

    pub fn hopf(&self) -> bool {
        self.r23.compose(&self.r13).compose(&self.r12) == self.r12.compose(&self.r23)
    }

    pub fn kz_bracket(&self) -> bool {
        self.r12.commutator(&self.r13.add(&self.r23)).is_zero()
    }
}

pub fn check_laws(r: &TensorOp2, laws: &[Law]) -> LawReport {
    let lifts = Lifts::new(r);
    let mut results = Vec::with_capacity(laws.len());
    for &law in laws {
        let ok = match law {
            Law::Long => {
                let long = lifts.long();
                if long {
                    // Both brackets vanish individually, so their sum does.
                    assert!(lifts.kz_bracket(), "Long solution violates the KZ bracket identity");
                }
                long
            }
            Law::DEquation => lifts.d_equation(),
            Law::Qybe => lifts.qybe(),
            Law::Hopf => lifts.hopf(),
            Law::KzBracket => lifts.kz_bracket(),
            Law::Symmetric => r.is_symmetric(),
        };
        results.push((law, ok));
    }
    LawReport { results }
}

pub fn is_long(r: &TensorOp2) -> bool {
    Lifts::new(r).long()
}

/// First failure of the componentwise identities, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentViolation {
    /// 1 or 2: which of the two coefficient identities fails.
    pub equation: u8,
    /// `(i, j, k, l, p, q)`, 1-based.
    pub tuple: SixTuple,
}

impl From<ComponentViolation> for Error {
    fn from(v: ComponentViolation) -> Self {
        Error::NotALongSolution { equation: v.equation, tuple: v.tuple }
    }
}

/// Checks the Long equation coefficient by coefficient:
///
/// ```text
/// Σ_v x_{kv}^{ji} x_{ql}^{pv} = Σ_α x_{kl}^{jα} x_{qα}^{pi}
/// Σ_v x_{kv}^{ji} x_{lq}^{vp} = Σ_α x_{kl}^{jα} x_{αq}^{ip}
/// ```
///
/// over all six-tuples in lexicographic order.
pub fn long_componentwise_witness(r: &TensorOp2) -> Option<ComponentViolation> {
    let n = r.dim();
    let x = |u: usize, v: usize, j: usize, i: usize| r.x(u, v, j, i);
    let dot = |f: &dyn Fn(usize) -> Scalar| -> Scalar { (0..n).map(f).sum() };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    for p in 0..n {
                        for q in 0..n {
                            let lhs5 = dot(&|v| x(k, v, j, i) * x(q, l, p, v));
                            let rhs5 = dot(&|a| x(k, l, j, a) * x(q, a, p, i));
                            let tuple = [i + 1, j + 1, k + 1, l + 1, p + 1, q + 1];
                            if lhs5 != rhs5 {
                                return Some(ComponentViolation { equation: 1, tuple });
                            }
                            let lhs6 = dot(&|v| x(k, v, j, i) * x(l, q, v, p));
                            let rhs6 = dot(&|a| x(k, l, j, a) * x(a, q, i, p));
                            if lhs6 != rhs6 {
                                return Some(ComponentViolation { equation: 2, tuple });
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn check_long_componentwise(r: &TensorOp2) -> bool {
    long_componentwise_witness(r).is_none()
}

/// Succeeds iff `R` solves the Long equation; otherwise reports the first
/// violated coefficient identity.
pub fn require_long(r: &TensorOp2) -> Result<(), Error> {
    match long_componentwise_witness(r) {
        None => Ok(()),
        Some(v) => Err(v.into()),
    }
}
