//! Coalgebras and bialgebras given by structure constants.

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::scalar::{Frac, Scalar};

/// `Δ(e_a) = Σ comult[a][b][c] e_b ⊗ e_c`, `ε(e_a) = counit[a]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    labels: Vec<String>,
    comult: Vec<Vec<Vec<Scalar>>>,
    counit: Vec<Scalar>,
}

fn invalid(axiom: &'static str, witness: &[usize]) -> Error {
    Error::InvalidBialgebra { axiom, witness: witness.to_vec() }
}

fn check_cube(t: &[Vec<Vec<Scalar>>], d: usize, what: &str) -> Result<()> {
    if t.len() != d || t.iter().any(|m| m.len() != d || m.iter().any(|r| r.len() != d)) {
        return Err(Error::DimensionMismatch(format!("{what} must be {d}x{d}x{d}")));
    }
    Ok(())
}

impl Coalgebra {
    /// Validates coassociativity and the counit laws.
    pub fn new(labels: Vec<String>, comult: Vec<Vec<Vec<Scalar>>>, counit: Vec<Scalar>) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::DimensionMismatch("coalgebra must be non-zero".into()));
        }
        check_cube(&comult, d, "comult")?;
        if counit.len() != d {
            return Err(Error::DimensionMismatch(format!("counit must have {d} entries")));
        }
        let c = Coalgebra { labels, comult, counit };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        let delta = &self.comult;
        for a in 0..d {
            for x in 0..d {
                for y in 0..d {
                    for z in 0..d {
                        // (Δ ⊗ id)Δ = (id ⊗ Δ)Δ, coefficient of e_x ⊗ e_y ⊗ e_z
                        let lhs: Scalar = (0..d).map(|p| &delta[a][p][z] * &delta[p][x][y]).sum();
                        let rhs: Scalar = (0..d).map(|q| &delta[a][x][q] * &delta[q][y][z]).sum();
                        if lhs != rhs {
                            return Err(invalid("coassociativity", &[a, x, y, z]));
                        }
                    }
                }
            }
            for x in 0..d {
                let left: Scalar = (0..d).map(|p| &self.counit[p] * &delta[a][p][x]).sum();
                let right: Scalar = (0..d).map(|q| &self.counit[q] * &delta[a][x][q]).sum();
                let target = if x == a { Scalar::one() } else { Scalar::zero() };
                if left != target || right != target {
                    return Err(invalid("counit", &[a, x]));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Coefficient of `e_b ⊗ e_c` in `Δ(e_a)`.
    pub fn comult(&self, a: usize, b: usize, c: usize) -> &Scalar {
        &self.comult[a][b][c]
    }

    pub fn comult_tensor(&self) -> &[Vec<Vec<Scalar>>] {
        &self.comult
    }

    pub fn counit(&self, a: usize) -> &Scalar {
        &self.counit[a]
    }

    pub fn counit_vector(&self) -> &[Scalar] {
        &self.counit
    }

    /// Nonzero `(b, c, coeff)` terms of `Δ(e_a)`.
    pub fn delta_terms(&self, a: usize) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        let d = self.dim();
        (0..d).flat_map(move |b| (0..d).map(move |c| (b, c))).filter_map(move |(b, c)| {
            let x = &self.comult[a][b][c];
            (!x.is_zero()).then_some((b, c, x))
        })
    }

    pub fn is_cocommutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|a| (0..d).all(|b| (0..d).all(|c| self.comult[a][b][c] == self.comult[a][c][b])))
    }
}

/// A bialgebra by structure constants: `e_a e_b = Σ mult[a][b][c] e_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimBialgebra {
    coalgebra: Coalgebra,
    mult: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
}

impl FinDimBialgebra {
    /// Validates the algebra, coalgebra and compatibility axioms.
    pub fn new(
        labels: Vec<String>,
        mult: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        comult: Vec<Vec<Vec<Scalar>>>,
        counit: Vec<Scalar>,
    ) -> Result<Self> {
        let coalgebra = Coalgebra::new(labels, comult, counit)?;
        let d = coalgebra.dim();
        check_cube(&mult, d, "mult")?;
        if unit.len() != d {
            return Err(Error::DimensionMismatch(format!("unit must have {d} entries")));
        }
        let b = FinDimBialgebra { coalgebra, mult, unit };
        b.validate()?;
        Ok(b)
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        let mu = &self.mult;
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    for z in 0..d {
                        let lhs: Scalar = (0..d).map(|k| &mu[a][b][k] * &mu[k][c][z]).sum();
                        let rhs: Scalar = (0..d).map(|k| &mu[b][c][k] * &mu[a][k][z]).sum();
                        if lhs != rhs {
                            return Err(invalid("associativity", &[a, b, c]));
                        }
                    }
                }
            }
        }
        for a in 0..d {
            let la = self.mul_vec(&self.unit, &basis(d, a));
            let ra = self.mul_vec(&basis(d, a), &self.unit);
            if la != basis(d, a) || ra != basis(d, a) {
                return Err(invalid("unit", &[a]));
            }
        }
        // Δ(1) = 1 ⊗ 1 and ε(1) = 1
        if self.delta_vec(&self.unit) != outer(&self.unit, &self.unit) {
            return Err(invalid("comultiplicative unit", &[]));
        }
        if self.counit_of(&self.unit) != Scalar::one() {
            return Err(invalid("counital unit", &[]));
        }
        for a in 0..d {
            for b in 0..d {
                let ab = self.mul_vec(&basis(d, a), &basis(d, b));
                // Δ(ab) = Δ(a)Δ(b)
                let lhs = self.delta_vec(&ab);
                let mut rhs = vec![vec![Scalar::zero(); d]; d];
                for (p, q, x) in self.coalgebra.delta_terms(a) {
                    for (r, t, y) in self.coalgebra.delta_terms(b) {
                        let left = &self.mult[p][r];
                        let right = &self.mult[q][t];
                        for (u, lu) in left.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                            for (w, rw) in right.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                                rhs[u][w] += x * y * lu * rw;
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return Err(invalid("multiplicative comultiplication", &[a, b]));
                }
                if self.counit_of(&ab) != self.coalgebra.counit(a) * self.coalgebra.counit(b) {
                    return Err(invalid("multiplicative counit", &[a, b]));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn labels(&self) -> &[String] {
        self.coalgebra.labels()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels().iter().position(|l| l == label)
    }

    pub fn mult(&self, a: usize, b: usize) -> &[Scalar] {
        &self.mult[a][b]
    }

    pub fn mult_tensor(&self) -> &[Vec<Vec<Scalar>>] {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn comult(&self, a: usize, b: usize, c: usize) -> &Scalar {
        self.coalgebra.comult(a, b, c)
    }

    pub fn counit(&self, a: usize) -> &Scalar {
        self.coalgebra.counit(a)
    }

    pub fn mul_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                for (o, m) in out.iter_mut().zip(&self.mult[a][b]) {
                    if !m.is_zero() {
                        *o += xa * yb * m;
                    }
                }
            }
        }
        out
    }

    pub fn delta_vec(&self, x: &[Scalar]) -> Vec<Vec<Scalar>> {
        let d = self.dim();
        let mut out = vec![vec![Scalar::zero(); d]; d];
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, c, k) in self.coalgebra.delta_terms(a) {
                out[b][c] += xa * k;
            }
        }
        out
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        x.iter().zip(self.coalgebra.counit_vector()).map(|(a, b)| a * b).sum()
    }
}

pub(crate) fn basis(d: usize, a: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); d];
    v[a] = Scalar::one();
    v
}

fn outer(x: &[Scalar], y: &[Scalar]) -> Vec<Vec<Scalar>> {
    x.iter().map(|a| y.iter().map(|b| a * b).collect()).collect()
}

fn cube(d: usize) -> Vec<Vec<Vec<Scalar>>> {
    vec![vec![vec![Scalar::zero(); d]; d]; d]
}

/// Sweedler's four-dimensional Hopf algebra on `{1, x, y, z}`:
/// `x² = 1`, `y² = 0`, `xy = z`, `xz = −zx = y`,
/// `Δ(x) = x ⊗ x`, `Δ(y) = y ⊗ x + 1 ⊗ y`, `Δ(z) = x ⊗ z + z ⊗ 1`.
pub fn sweedler_h4() -> FinDimBialgebra {
    let (one, x, y, z) = (0, 1, 2, 3);
    let mut mult = cube(4);
    let mut set = |a: usize, b: usize, c: usize, k: i64| mult[a][b][c] = crate::scalar::int(k);
    for a in 0..4 {
        set(one, a, a, 1);
        set(a, one, a, 1);
    }
    set(x, x, one, 1);
    set(x, y, z, 1);
    set(x, z, y, 1);
    set(y, x, z, -1);
    set(z, x, y, -1);
    // y², yz, zy, z² vanish
    let mut comult = cube(4);
    let mut co = |a: usize, b: usize, c: usize| comult[a][b][c] = Scalar::one();
    co(one, one, one);
    co(x, x, x);
    co(y, y, x);
    co(y, one, y);
    co(z, x, z);
    co(z, z, one);
    let ints = |v: [i64; 4]| v.iter().map(|&k| crate::scalar::int(k)).collect::<Vec<_>>();
    FinDimBialgebra::new(
        ["1", "x", "y", "z"].map(String::from).to_vec(),
        mult,
        ints([1, 0, 0, 0]),
        comult,
        ints([1, 1, 0, 0]),
    )
    .expect("Sweedler's algebra is a bialgebra")
}

/// `k[G]` with every group element group-like.
pub fn group_algebra(g: &FiniteGroup) -> FinDimBialgebra {
    let d = g.order();
    let mut mult = cube(d);
    let mut comult = cube(d);
    for a in 0..d {
        for b in 0..d {
            mult[a][b][g.mul(a, b)] = Scalar::one();
        }
        comult[a][a][a] = Scalar::one();
    }
    FinDimBialgebra::new(g.names().to_vec(), mult, basis(d, g.identity()), comult, vec![Scalar::one(); d])
        .expect("group algebras are bialgebras")
}

/// `k·1 ⊕ C ⊕ C^{⊗2} ⊕ … ⊕ C^{⊗degree}` for the comatrix coalgebra `C` of
/// order `n`, with `Δ` and `ε` extended multiplicatively.
///
/// This is a subcoalgebra of the tensor bialgebra but not a bialgebra itself:
/// products leave it once the degrees add past the truncation.
pub fn comatrix_tensor_truncation(n: usize, degree: usize) -> Coalgebra {
    assert!(n > 0, "order must be positive");
    let mut words: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    let mut layer: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for _ in 0..degree {
        let mut next = Vec::new();
        for w in &layer {
            for i in 0..n {
                for j in 0..n {
                    let mut v = w.clone();
                    v.push((i, j));
                    next.push(v);
                }
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    let index: std::collections::HashMap<Vec<(usize, usize)>, usize> =
        words.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
    let d = words.len();
    let mut comult = cube(d);
    let mut counit = vec![Scalar::zero(); d];
    for (a, w) in words.iter().enumerate() {
        if w.iter().all(|(i, j)| i == j) {
            counit[a] = Scalar::one();
        }
        // Choose the middle indices u_1..u_k.
        let k = w.len();
        for mut code in 0..n.pow(k as u32) {
            let mut left = Vec::with_capacity(k);
            let mut right = Vec::with_capacity(k);
            for &(i, j) in w {
                let u = code % n;
                code /= n;
                left.push((i, u));
                right.push((u, j));
            }
            comult[a][index[&left]][index[&right]] += Scalar::one();
        }
    }
    let labels = words
        .iter()
        .map(|w| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|(i, j)| format!("c_{}_{}", i + 1, j + 1)).collect::<Vec<_>>().join("*")
            }
        })
        .collect();
    Coalgebra::new(labels, comult, counit).expect("truncated tensor coalgebra is a coalgebra")
}

/// JSON form of a bialgebra; every number is an exact fraction string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraDoc {
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<Vec<Vec<Frac>>>,
    pub unit: Vec<Frac>,
    pub comult: Vec<Vec<Vec<Frac>>>,
    pub counit: Vec<Frac>,
}

fn unwrap_cube(t: &[Vec<Vec<Frac>>]) -> Vec<Vec<Vec<Scalar>>> {
    t.iter().map(|m| m.iter().map(|r| r.iter().map(|f| f.0.clone()).collect()).collect()).collect()
}

fn wrap_cube(t: &[Vec<Vec<Scalar>>]) -> Vec<Vec<Vec<Frac>>> {
    t.iter().map(|m| m.iter().map(|r| r.iter().cloned().map(Frac).collect()).collect()).collect()
}

impl BialgebraDoc {
    pub fn from_bialgebra(b: &FinDimBialgebra) -> Self {
        BialgebraDoc {
            dim: b.dim(),
            basis: b.labels().to_vec(),
            mult: wrap_cube(b.mult_tensor()),
            unit: b.unit().iter().cloned().map(Frac).collect(),
            comult: wrap_cube(b.coalgebra().comult_tensor()),
            counit: b.coalgebra().counit_vector().iter().cloned().map(Frac).collect(),
        }
    }

    pub fn to_bialgebra(&self) -> Result<FinDimBialgebra> {
        if self.basis.len() != self.dim {
            return Err(Error::Parse(format!("basis must have {} labels", self.dim)));
        }
        FinDimBialgebra::new(
            self.basis.clone(),
            unwrap_cube(&self.mult),
            self.unit.iter().map(|f| f.0.clone()).collect(),
            unwrap_cube(&self.comult),
            self.counit.iter().map(|f| f.0.clone()).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn builtins_validate() {
        let h = sweedler_h4();
        assert_eq!(h.dim(), 4);
        assert!(!h.coalgebra().is_cocommutative());
        // z = xy, y = xz, zx = −y
        assert_eq!(h.mult(1, 2), &[int(0), int(0), int(0), int(1)]);
        assert_eq!(h.mult(3, 1), &[int(0), int(0), int(-1), int(0)]);
        let g = group_algebra(&FiniteGroup::cyclic(2));
        assert!(g.coalgebra().is_cocommutative());
        let t = comatrix_tensor_truncation(2, 2);
        assert_eq!(t.dim(), 1 + 4 + 16);
    }

    #[test]
    fn broken_counit_is_rejected() {
        let h = sweedler_h4();
        let mut doc = BialgebraDoc::from_bialgebra(&h);
        doc.counit[1] = Frac(int(2));
        assert!(matches!(doc.to_bialgebra(), Err(Error::InvalidBialgebra { .. })));
    }

    #[test]
    fn broken_multiplication_is_rejected() {
        let mut doc = BialgebraDoc::from_bialgebra(&sweedler_h4());
        // y² = 1 breaks compatibility with Δ
        doc.mult[2][2][0] = Frac(int(1));
        assert!(doc.to_bialgebra().is_err());
    }

    #[test]
    fn doc_round_trip() {
        let h = sweedler_h4();
        let doc = BialgebraDoc::from_bialgebra(&h);
        let text = serde_json::to_string(&doc).unwrap();
        let back: BialgebraDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_bialgebra().unwrap(), h);
    }
}
