//! JSON documents for operators, constructor inputs, loops and holonomies.
//! Algebraic values are exact fraction strings; indices are 1-based.

use std::collections::HashSet;

use indexmap::IndexMap;
use nalgebra::{Complex, DMatrix};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frt::Naming;
use crate::group::FiniteGroup;
use crate::kz::{Center, LoopKind, LoopSpec};
use crate::linalg::QMatrix;
use crate::scalar::Frac;
use crate::tensor::{GradedActionData, HomothetyTerm, TensorOp2};

pub type MatrixDoc = Vec<Vec<Frac>>;

pub fn matrix_to_doc(m: &QMatrix) -> MatrixDoc {
    m.to_rows().into_iter().map(|r| r.into_iter().map(Frac).collect()).collect()
}

pub fn matrix_from_doc(doc: &MatrixDoc) -> Result<QMatrix> {
    QMatrix::from_rows(doc.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryDoc {
    pub v: usize,
    pub u: usize,
    pub i: usize,
    pub j: usize,
    pub coeff: Frac,
}

/// `{"dim": n, "entries": [{"v","u","i","j","coeff"}]}` for
/// `R(m_v ⊗ m_u) = Σ coeff · m_i ⊗ m_j`; omitted entries are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorDoc {
    pub dim: usize,
    pub entries: Vec<EntryDoc>,
}

impl OperatorDoc {
    pub fn from_operator(r: &TensorOp2) -> Self {
        let n = r.dim();
        let mut entries = Vec::new();
        for v in 0..n {
            for u in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        let x = r.x(u, v, j, i);
                        if !num::Zero::is_zero(x) {
                            entries.push(EntryDoc { v: v + 1, u: u + 1, i: i + 1, j: j + 1, coeff: Frac(x.clone()) });
                        }
                    }
                }
            }
        }
        OperatorDoc { dim: n, entries }
    }

    pub fn to_operator(&self) -> Result<TensorOp2> {
        let n = self.dim;
        if n == 0 {
            return Err(Error::Parse("dim must be positive".into()));
        }
        let mut r = TensorOp2::zero(n);
        let mut seen = HashSet::new();
        for e in &self.entries {
            let idx = [e.v, e.u, e.i, e.j];
            if idx.iter().any(|&k| k == 0 || k > n) {
                return Err(Error::Parse(format!("entry {idx:?} has an index outside 1..={n}")));
            }
            if !seen.insert(idx) {
                return Err(Error::Parse(format!("duplicate entry (v,u,i,j) = {idx:?}")));
            }
            r.set(e.u - 1, e.v - 1, e.j - 1, e.i - 1, e.coeff.0.clone());
        }
        Ok(r)
    }
}

pub fn parse_operator(text: &str) -> Result<TensorOp2> {
    serde_json::from_str::<OperatorDoc>(text)?.to_operator()
}

pub fn operator_json(r: &TensorOp2) -> String {
    serde_json::to_string_pretty(&OperatorDoc::from_operator(r)).expect("operator serializes")
}

/// `{"c_1_1": "x", ...}`.
pub fn parse_naming(n: usize, text: &str) -> Result<Naming> {
    let map: IndexMap<String, String> = serde_json::from_str(text)?;
    Naming::parse(n, map.iter().map(|(k, v)| (k.as_str(), v.as_str())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub elements: Vec<String>,
    /// `table[a][b]` is the name of `ab`.
    pub table: Vec<Vec<String>>,
}

/// A graded action: group, one matrix per element, and the degree of each
/// basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradedDoc {
    pub group: GroupDoc,
    pub actions: IndexMap<String, MatrixDoc>,
    pub degrees: Vec<String>,
}

impl GradedDoc {
    pub fn to_data(&self) -> Result<GradedActionData> {
        let names = &self.group.elements;
        let index = |s: &str| -> Result<usize> {
            names
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| Error::InvalidGroupTable(format!("unknown element `{s}`")))
        };
        let table = self
            .group
            .table
            .iter()
            .map(|row| row.iter().map(|s| index(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let group = FiniteGroup::new(names.clone(), table)?;
        let mut actions = Vec::with_capacity(names.len());
        for name in names {
            let m = self
                .actions
                .get(name)
                .ok_or_else(|| Error::InvalidAction(format!("no action matrix for `{name}`")))?;
            actions.push(matrix_from_doc(m)?);
        }
        if let Some(extra) = self.actions.keys().find(|k| !names.contains(k)) {
            return Err(Error::InvalidAction(format!("action given for unknown element `{extra}`")));
        }
        let degrees = self.degrees.iter().map(|s| index(s)).collect::<Result<Vec<_>>>()?;
        Ok(GradedActionData { group, actions, degrees })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomothetyTermDoc {
    pub coeff: Frac,
    pub left: usize,
    pub right: usize,
}

/// Representation matrices and an element `Σ coeff · rep[left] ⊗ rep[right]`
/// (1-based into `rep`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomothetyDoc {
    pub rep: Vec<MatrixDoc>,
    pub element: Vec<HomothetyTermDoc>,
}

impl HomothetyDoc {
    pub fn to_parts(&self) -> Result<(Vec<QMatrix>, Vec<HomothetyTerm>)> {
        let rep = self.rep.iter().map(matrix_from_doc).collect::<Result<Vec<_>>>()?;
        let k = rep.len();
        let element = self
            .element
            .iter()
            .map(|t| {
                if t.left == 0 || t.left > k || t.right == 0 || t.right > k {
                    return Err(Error::Parse(format!("term refers to a matrix outside 1..={k}")));
                }
                Ok(HomothetyTerm { coeff: t.coeff.0.clone(), left: t.left - 1, right: t.right - 1 })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((rep, element))
    }
}

pub type ComplexDoc = [f64; 2];

fn c64(z: ComplexDoc) -> Complex<f64> {
    Complex::new(z[0], z[1])
}

/// Circle: `{"base", "kind": "circle", "moving", "center" | "center_point",
/// "radius", "steps", "turns"?}`. Polygon: `{"base", "kind": "polygon",
/// "waypoints", "steps"}`. Point indices are 1-based.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopDoc {
    pub base: Vec<ComplexDoc>,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub moving: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center_point: Option<ComplexDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub turns: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub waypoints: Option<Vec<Vec<ComplexDoc>>>,
    pub steps: usize,
}

impl LoopDoc {
    pub fn to_loop(&self) -> Result<LoopSpec> {
        let base: Vec<_> = self.base.iter().map(|&z| c64(z)).collect();
        let missing = |f: &str| Error::InvalidLoop(format!("`{f}` is required for a {} loop", self.kind));
        let kind = match self.kind.as_str() {
            "circle" => {
                let moving = self.moving.ok_or_else(|| missing("moving"))?;
                let center = match (self.center, self.center_point) {
                    (Some(j), None) => {
                        Center::Index(j.checked_sub(1).ok_or_else(|| Error::InvalidLoop("center is 1-based".into()))?)
                    }
                    (None, Some(p)) => Center::Point(c64(p)),
                    _ => return Err(Error::InvalidLoop("give exactly one of `center` and `center_point`".into())),
                };
                LoopKind::Circle {
                    moving: moving.checked_sub(1).ok_or_else(|| Error::InvalidLoop("moving is 1-based".into()))?,
                    center,
                    radius: self.radius.ok_or_else(|| missing("radius"))?,
                    turns: self.turns.unwrap_or(1),
                }
            }
            "polygon" => {
                let w = self.waypoints.as_ref().ok_or_else(|| missing("waypoints"))?;
                LoopKind::Polygon { waypoints: w.iter().map(|p| p.iter().map(|&z| c64(z)).collect()).collect() }
            }
            other => return Err(Error::InvalidLoop(format!("unknown loop kind `{other}`"))),
        };
        LoopSpec::new(base, kind, self.steps)
    }

    pub fn from_loop(lp: &LoopSpec) -> Self {
        let pair = |z: &Complex<f64>| [z.re, z.im];
        let base = lp.base().iter().map(pair).collect();
        let mut doc = LoopDoc {
            base,
            kind: String::new(),
            moving: None,
            center: None,
            center_point: None,
            radius: None,
            turns: None,
            waypoints: None,
            steps: lp.steps(),
        };
        match lp.kind() {
            LoopKind::Circle { moving, center, radius, turns } => {
                doc.kind = "circle".into();
                doc.moving = Some(moving + 1);
                match center {
                    Center::Index(j) => doc.center = Some(j + 1),
                    Center::Point(p) => doc.center_point = Some(pair(p)),
                }
                doc.radius = Some(*radius);
                doc.turns = Some(*turns);
            }
            LoopKind::Polygon { waypoints } => {
                doc.kind = "polygon".into();
                doc.waypoints = Some(waypoints.iter().map(|w| w.iter().map(pair).collect()).collect());
            }
        }
        doc
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HolonomyHeader {
    pub h: ComplexDoc,
    #[serde(rename = "N")]
    pub points: usize,
    pub n: usize,
    pub steps: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HolonomyDoc {
    pub header: HolonomyHeader,
    pub holonomy: Vec<Vec<ComplexDoc>>,
}

pub fn complex_matrix_to_doc(m: &DMatrix<Complex<f64>>) -> Vec<Vec<ComplexDoc>> {
    (0..m.nrows()).map(|r| (0..m.ncols()).map(|c| [m[(r, c)].re, m[(r, c)].im]).collect()).collect()
}

pub fn complex_matrix_from_doc(doc: &[Vec<ComplexDoc>]) -> Result<DMatrix<Complex<f64>>> {
    let rows = doc.len();
    let cols = doc.first().map_or(0, Vec::len);
    if doc.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse("ragged complex matrix".into()));
    }
    Ok(DMatrix::from_fn(rows, cols, |r, c| c64(doc[r][c])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::tensor::make_phi;

    #[test]
    fn operator_round_trip() {
        let r = make_phi(&[0, 1, 1]).unwrap();
        assert_eq!(parse_operator(&operator_json(&r)).unwrap(), r);
    }

    #[test]
    fn operator_errors() {
        let dup = r#"{"dim":1,"entries":[{"v":1,"u":1,"i":1,"j":1,"coeff":"1"},{"v":1,"u":1,"i":1,"j":1,"coeff":"2"}]}"#;
        assert!(matches!(parse_operator(dup), Err(Error::Parse(_))));
        let range = r#"{"dim":1,"entries":[{"v":2,"u":1,"i":1,"j":1,"coeff":"1"}]}"#;
        assert!(parse_operator(range).is_err());
        let float = r#"{"dim":1,"entries":[{"v":1,"u":1,"i":1,"j":1,"coeff":"0.5"}]}"#;
        assert!(parse_operator(float).is_err());
    }

    #[test]
    fn operator_entry_semantics() {
        // R(m_1 ⊗ m_2) = 3 m_2 ⊗ m_1 means x_{21}^{12} = 3.
        let text = r#"{"dim":2,"entries":[{"v":1,"u":2,"i":2,"j":1,"coeff":"3"}]}"#;
        let r = parse_operator(text).unwrap();
        assert_eq!(r.x(1, 0, 0, 1), &int(3));
    }

    #[test]
    fn loop_round_trip() {
        let text = r#"{"base":[[0,0],[1,0],[10,0]],"kind":"circle","moving":1,"center":2,"radius":0.5,"steps":4000}"#;
        let doc: LoopDoc = serde_json::from_str(text).unwrap();
        let lp = doc.to_loop().unwrap();
        assert_eq!(LoopDoc::from_loop(&lp).to_loop().unwrap(), lp);
        let bad = r#"{"base":[[0,0],[1,0]],"kind":"circle","moving":1,"radius":0.5,"steps":10}"#;
        let doc: LoopDoc = serde_json::from_str(bad).unwrap();
        assert!(matches!(doc.to_loop(), Err(Error::InvalidLoop(_))));
    }

    #[test]
    fn graded_doc_builds() {
        let text = r#"{
            "group": {"elements": ["e", "g"], "table": [["e", "g"], ["g", "e"]]},
            "actions": {"e": [["1","0"],["0","1"]], "g": [["1","0"],["0","-1"]]},
            "degrees": ["e", "g"]
        }"#;
        let doc: GradedDoc = serde_json::from_str(text).unwrap();
        let data = doc.to_data().unwrap();
        assert_eq!(data.degrees, vec![0, 1]);
        assert!(crate::tensor::make_graded(&data).is_ok());
    }
}
