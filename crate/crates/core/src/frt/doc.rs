//! JSON form of a presentation.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::comatrix::{label_name, parse_label};
use super::presentation::{LongPresentation, Naming};
use super::quotient::QuotientCoalgebra;
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::scalar::{Frac, Scalar};

/// `[coeff, left, right]` for one `coeff · left ⊗ right` term.
pub type DeltaTerm = (Frac, String, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDoc {
    pub dim: usize,
    /// Basis of the relation space, one coefficient vector over `c_11, c_12, ..` per row.
    pub relations: Vec<Vec<Frac>>,
    pub generators: Vec<String>,
    /// Comatrix label (`c_i_j`) of each generator.
    pub naming: IndexMap<String, String>,
    pub delta: IndexMap<String, Vec<DeltaTerm>>,
    pub epsilon: IndexMap<String, Frac>,
    pub sigma: Vec<Vec<Frac>>,
}

impl PresentationDoc {
    pub fn from_presentation(lr: &LongPresentation) -> Self {
        let n = lr.order();
        let names: Vec<String> = lr.names().into_iter().map(str::to_string).collect();
        let m = names.len();
        let delta = (0..m)
            .map(|t| {
                let d = lr.delta(t);
                let terms = (0..m)
                    .flat_map(|s| (0..m).map(move |r| (s, r)))
                    .filter(|&(s, r)| !num::Zero::is_zero(&d[(s, r)]))
                    .map(|(s, r)| (Frac(d[(s, r)].clone()), names[s].clone(), names[r].clone()))
                    .collect();
                (names[t].clone(), terms)
            })
            .collect();
        PresentationDoc {
            dim: n,
            relations: lr
                .quotient()
                .relations()
                .into_iter()
                .map(|r| r.into_iter().map(Frac).collect())
                .collect(),
            generators: names.clone(),
            naming: lr.naming().0.iter().map(|(l, s)| (label_name(n, *l), s.clone())).collect(),
            delta,
            epsilon: (0..m).map(|t| (names[t].clone(), Frac(lr.epsilon(t).clone()))).collect(),
            sigma: lr.sigma().to_rows().into_iter().map(|r| r.into_iter().map(Frac).collect()).collect(),
        }
    }

    /// Rebuilds the presentation from relations, naming and σ, and checks
    /// that the stated Δ and ε agree with the ones the relations induce.
    pub fn to_presentation(&self) -> Result<LongPresentation> {
        let n = self.dim;
        if n == 0 {
            return Err(Error::Parse("dim must be positive".into()));
        }
        let rows: Vec<Vec<Scalar>> = self
            .relations
            .iter()
            .map(|r| {
                if r.len() != n * n {
                    return Err(Error::Parse(format!("relation rows must have {} entries", n * n)));
                }
                Ok(r.iter().map(|f| f.0.clone()).collect())
            })
            .collect::<Result<_>>()?;
        let quotient = QuotientCoalgebra::new(n, rows.iter().map(Vec::as_slice));
        if !quotient.counit_vanishes() || !quotient.is_coideal() {
            return Err(Error::Parse("relations do not span a coideal".into()));
        }
        let mut pairs = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let key = self
                .naming
                .iter()
                .find(|(_, v)| *v == g)
                .map(|(k, _)| k.as_str())
                .ok_or_else(|| Error::Parse(format!("generator `{g}` has no label in naming")))?;
            pairs.push((key, g.as_str()));
        }
        if self.naming.len() != self.generators.len() {
            return Err(Error::Parse("naming must list exactly the generators".into()));
        }
        for (k, _) in &self.naming {
            parse_label(n, k)?;
        }
        let naming = Naming::parse(n, pairs)?;
        let sigma_rows: Vec<Vec<Scalar>> =
            self.sigma.iter().map(|r| r.iter().map(|f| f.0.clone()).collect()).collect();
        let sigma = QMatrix::from_rows(sigma_rows)?;
        let lr = LongPresentation::assemble(quotient, naming, sigma)?;
        let induced = PresentationDoc::from_presentation(&lr);
        for g in &self.generators {
            let stated = self.delta.get(g).map(|t| normalize(t)).unwrap_or_default();
            if stated != normalize(&induced.delta[g]) {
                return Err(Error::Parse(format!("delta({g}) disagrees with the relations")));
            }
            if self.epsilon.get(g) != induced.epsilon.get(g) {
                return Err(Error::Parse(format!("epsilon({g}) disagrees with the relations")));
            }
        }
        Ok(lr)
    }
}

fn normalize(terms: &[DeltaTerm]) -> Vec<(String, String, Scalar)> {
    let mut acc: IndexMap<(String, String), Scalar> = IndexMap::new();
    for (c, l, r) in terms {
        *acc.entry((l.clone(), r.clone())).or_insert_with(crate::scalar::zero) += &c.0;
    }
    let mut out: Vec<_> = acc
        .into_iter()
        .filter(|(_, c)| !num::Zero::is_zero(c))
        .map(|((l, r), c)| (l, r, c))
        .collect();
    out.sort();
    out
}
