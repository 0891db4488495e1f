//! The bialgebra `L(R) = T(C/V)` with its σ-form, and everything that can be
//! read back from it.

use num::{One, Zero};

use super::comatrix::{self, label, label_name, parse_label};
use super::quotient::QuotientCoalgebra;
use crate::error::{Error, Result};
use crate::free::{FreeBialgebra, Poly, SigmaExtension, SplitOrder, Tensor2, Word};
use crate::linalg::QMatrix;
use crate::scalar::Scalar;
use crate::tensor::{invert, require_long, TensorOp2};

/// `σ₀(c_iv ⊗ c_ju) = x_{uv}^{ji}` on the comatrix coalgebra, as an
/// `n² × n²` table indexed by labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaForm {
    n: usize,
    table: QMatrix,
}

impl SigmaForm {
    pub fn from_operator(r: &TensorOp2) -> Self {
        let n = r.dim();
        let table = QMatrix::from_fn(n * n, n * n, |a, b| {
            let (i, v) = comatrix::unlabel(n, a);
            let (j, u) = comatrix::unlabel(n, b);
            r.x(u, v, j, i).clone()
        });
        SigmaForm { n, table }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &QMatrix {
        &self.table
    }

    pub fn on_labels(&self, a: usize, b: usize) -> &Scalar {
        &self.table[(a, b)]
    }

    /// Bilinear evaluation on two comatrix elements.
    pub fn eval(&self, v: &[Scalar], w: &[Scalar]) -> Scalar {
        let tw = self.table.apply(w);
        v.iter().zip(&tw).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum()
    }

    /// `σ₀(V ⊗ C) = σ₀(C ⊗ V) = 0`.
    pub fn vanishes_on(&self, quotient: &QuotientCoalgebra) -> bool {
        let n2 = self.n * self.n;
        quotient.relations().iter().all(|v| {
            (0..n2).all(|b| {
                let e = comatrix::basis_vector(self.n, b);
                self.eval(v, &e).is_zero() && self.eval(&e, v).is_zero()
            })
        })
    }
}

/// Generator names attached to comatrix labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Naming(pub Vec<(usize, String)>);

impl Naming {
    /// Parses `label → name` pairs; labels may be written `c11`, `c_1_1` or `1,1`.
    pub fn parse<'a>(
        n: usize,
        pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let mut out: Vec<(usize, String)> = Vec::new();
        for (k, v) in pairs {
            let l = parse_label(n, k)?;
            let name = v.trim();
            if name.is_empty() || name.chars().any(|c| c.is_whitespace() || "(),".contains(c)) {
                return Err(Error::InvalidNaming(format!("`{v}` is not a usable generator name")));
            }
            if out.iter().any(|(l2, n2)| *l2 == l || n2 == name) {
                return Err(Error::InvalidNaming(format!("duplicate entry for `{k}` / `{v}`")));
            }
            out.push((l, name.to_string()));
        }
        Ok(Naming(out))
    }

    pub fn canonical(n: usize, labels: &[usize]) -> Self {
        Naming(labels.iter().map(|&l| (l, label_name(n, l))).collect())
    }
}

/// `L(R)`: the free algebra on generators `g_t = c̄_{label_t}` with Δ and ε
/// induced from the quotient coalgebra, and σ on generator pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongPresentation {
    quotient: QuotientCoalgebra,
    naming: Naming,
    /// Generator coordinates of `c̄_k` for every label `k`.
    coords: Vec<Vec<Scalar>>,
    delta: Vec<QMatrix>,
    epsilon: Vec<Scalar>,
    sigma: QMatrix,
}

impl LongPresentation {
    /// Assembles a presentation from its quotient, a naming of a basis of
    /// `C/V` and σ on generator pairs.
    pub fn assemble(quotient: QuotientCoalgebra, naming: Naming, sigma: QMatrix) -> Result<Self> {
        let n = quotient.order();
        let m = quotient.dim();
        if naming.0.len() != m {
            return Err(Error::InvalidNaming(format!(
                "{} names given but the quotient has dimension {m}",
                naming.0.len()
            )));
        }
        if sigma.rows() != m || sigma.cols() != m {
            return Err(Error::DimensionMismatch(format!("sigma must be {m}x{m}")));
        }
        // Columns: canonical coordinates of each named generator.
        let images: Vec<Vec<Scalar>> = naming.0.iter().map(|(l, _)| quotient.project_label(*l)).collect();
        let basis = QMatrix::from_fn(m, m, |r, c| images[c][r].clone());
        let change = basis.inverse().map_err(|_| {
            Error::InvalidNaming("named labels do not project to a basis of the quotient".into())
        })?;
        let coords: Vec<Vec<Scalar>> =
            (0..n * n).map(|k| change.apply(&quotient.project_label(k))).collect();

        let mut delta = Vec::with_capacity(m);
        let mut epsilon = Vec::with_capacity(m);
        for &(l, _) in &naming.0 {
            let (i, j) = comatrix::unlabel(n, l);
            let mut d = QMatrix::zeros(m, m);
            for u in 0..n {
                let (a, b) = (&coords[label(n, i, u)], &coords[label(n, u, j)]);
                for s in (0..m).filter(|&s| !a[s].is_zero()) {
                    for t in (0..m).filter(|&t| !b[t].is_zero()) {
                        d[(s, t)] += &a[s] * &b[t];
                    }
                }
            }
            delta.push(d);
            epsilon.push(if i == j { Scalar::one() } else { Scalar::zero() });
        }
        Ok(LongPresentation { quotient, naming, coords, delta, epsilon, sigma })
    }

    pub fn order(&self) -> usize {
        self.quotient.order()
    }

    pub fn quotient(&self) -> &QuotientCoalgebra {
        &self.quotient
    }

    pub fn num_generators(&self) -> usize {
        self.naming.0.len()
    }

    pub fn naming(&self) -> &Naming {
        &self.naming
    }

    pub fn names(&self) -> Vec<&str> {
        self.naming.0.iter().map(|(_, s)| s.as_str()).collect()
    }

    pub fn generator_label(&self, t: usize) -> usize {
        self.naming.0[t].0
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.naming.0.iter().position(|(_, s)| s == name)
    }

    /// Coordinates of `c̄_k` on the generators.
    pub fn coords_of_label(&self, k: usize) -> &[Scalar] {
        &self.coords[k]
    }

    /// Coordinates of `π(v)` on the generators, for any comatrix element.
    pub fn coords_of(&self, v: &[Scalar]) -> Vec<Scalar> {
        let m = self.num_generators();
        let mut out = vec![Scalar::zero(); m];
        for (k, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (o, x) in out.iter_mut().zip(&self.coords[k]) {
                *o += c * x;
            }
        }
        out
    }

    /// `Δ(g_t)` as the matrix of coefficients of `g_s ⊗ g_r`.
    pub fn delta(&self, t: usize) -> &QMatrix {
        &self.delta[t]
    }

    pub fn epsilon(&self, t: usize) -> &Scalar {
        &self.epsilon[t]
    }

    /// σ on generator pairs.
    pub fn sigma(&self) -> &QMatrix {
        &self.sigma
    }

    /// Overwrites one σ entry; the result is in general no longer a Long
    /// bialgebra (useful for negative tests).
    pub fn set_sigma(&mut self, s: usize, t: usize, value: Scalar) {
        self.sigma[(s, t)] = value;
    }

    fn sigma_coords(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let sb = self.sigma.apply(b);
        a.iter().zip(&sb).filter(|(x, _)| !x.is_zero()).map(|(x, y)| x * y).sum()
    }

    /// `σ(c̄_a ⊗ c̄_b)`.
    pub fn sigma_on_labels(&self, a: usize, b: usize) -> Scalar {
        self.sigma_coords(&self.coords[a], &self.coords[b])
    }

    /// `R_σ(m_v ⊗ m_u) = Σ σ(c̄_iv ⊗ c̄_ju) m_i ⊗ m_j`.
    pub fn round_trip(&self) -> TensorOp2 {
        let n = self.order();
        let mut r = TensorOp2::zero(n);
        for (i, j, v, u) in crate::tensor::op::quadruples(n) {
            r.set(u, v, j, i, self.sigma_on_labels(label(n, i, v), label(n, j, u)));
        }
        r
    }

    /// The L1 defect `Σ_v σ(c̄_iv ⊗ y) c̄_vj − Σ_α σ(c̄_αj ⊗ y) c̄_iα` for
    /// `x = c̄_ij` and `y` given by generator coordinates.
    pub fn l1_defect(&self, i: usize, j: usize, y: &[Scalar]) -> Vec<Scalar> {
        let n = self.order();
        let mut out = vec![Scalar::zero(); self.num_generators()];
        for v in 0..n {
            let s1 = self.sigma_coords(&self.coords[label(n, i, v)], y);
            let s2 = self.sigma_coords(&self.coords[label(n, v, j)], y);
            for (o, (a, b)) in
                out.iter_mut().zip(self.coords[label(n, v, j)].iter().zip(&self.coords[label(n, i, v)]))
            {
                *o += &s1 * a - &s2 * b;
            }
        }
        out
    }

    /// Checks (L1) on all pairs `x = c̄_ij`, `y = c̄_pq`; returns the first
    /// failing `(i, j, p, q)`, 1-based.
    pub fn l1_violation(&self) -> Option<[usize; 4]> {
        let n = self.order();
        for (i, j, p, q) in crate::tensor::op::quadruples(n) {
            let y = &self.coords[label(n, p, q)];
            if y.iter().all(Zero::is_zero) {
                continue;
            }
            if self.l1_defect(i, j, y).iter().any(|x| !x.is_zero()) {
                return Some([i + 1, j + 1, p + 1, q + 1]);
            }
        }
        None
    }

    pub fn check_l1_on_generators(&self) -> bool {
        self.l1_violation().is_none()
    }

    /// The free bialgebra on the generators with the induced Δ and ε.
    pub fn free_bialgebra(&self) -> FreeBialgebra {
        let m = self.num_generators();
        let delta = self
            .delta
            .iter()
            .map(|d| {
                let mut t = Tensor2::zero();
                for s in 0..m {
                    for r in 0..m {
                        t.add_term(d[(s, r)].clone(), vec![s], vec![r]);
                    }
                }
                t
            })
            .collect();
        FreeBialgebra::new(delta, self.epsilon.clone())
    }

    pub fn sigma_extension(&self) -> SigmaExtension {
        SigmaExtension::new(self.free_bialgebra(), self.sigma.to_rows())
    }

    /// σ on two words in the generators, by (L2)–(L5).
    pub fn sigma_extend(&self, w1: &[usize], w2: &[usize]) -> Result<Scalar> {
        self.sigma_extension().words(w1, w2)
    }

    pub fn sigma_extend_with(
        &self,
        w1: &[usize],
        w2: &[usize],
        order: SplitOrder,
        cap: usize,
    ) -> Result<Scalar> {
        self.sigma_extension().with_order(order).with_cap(cap).words(w1, w2)
    }

    /// Parses a word of generator names separated by spaces or `*`.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.split(|c: char| c.is_whitespace() || c == '*')
            .filter(|s| !s.is_empty() && *s != "1")
            .map(|s| {
                self.generator_index(s)
                    .ok_or_else(|| Error::Parse(format!("unknown generator `{s}`")))
            })
            .collect()
    }

    /// `h · m_l = Σ_v σ(c̄_vl ⊗ h) m_v`.
    pub fn dimodule_action(&self, h: &Poly, l: usize) -> Result<Vec<Scalar>> {
        let mut ext = self.sigma_extension();
        self.action_with(&mut ext, h, l)
    }

    fn action_with(&self, ext: &mut SigmaExtension, h: &Poly, l: usize) -> Result<Vec<Scalar>> {
        let n = self.order();
        (0..n).map(|v| ext.poly(&Poly::linear(&self.coords[label(n, v, l)]), h)).collect()
    }

    /// Checks `ρ(h·m_l) = Σ h·m_v ⊗ c̄_vl` for every basis vector `m_l`;
    /// returns the first failing `l` (0-based).
    pub fn dimodule_violation(&self, h: &Poly) -> Result<Option<usize>> {
        let n = self.order();
        let m = self.num_generators();
        let mut ext = self.sigma_extension();
        let actions: Vec<Vec<Scalar>> =
            (0..n).map(|l| self.action_with(&mut ext, h, l)).collect::<Result<_>>()?;
        for l in 0..n {
            // Both sides live in M ⊗ L(R); compare the C/V coefficient of each m_w.
            for w in 0..n {
                let mut lhs = vec![Scalar::zero(); m];
                let mut rhs = vec![Scalar::zero(); m];
                for v in 0..n {
                    let a = &actions[l][v];
                    let b = &actions[v][w];
                    for k in 0..m {
                        lhs[k] += a * &self.coords[label(n, w, v)][k];
                        rhs[k] += b * &self.coords[label(n, v, l)][k];
                    }
                }
                if lhs != rhs {
                    return Ok(Some(l));
                }
            }
        }
        Ok(None)
    }

    /// σ′ from `S = R⁻¹`, verified to be the convolution inverse of σ on
    /// all generator pairs.
    pub fn convolution_inverse(&self, r: &TensorOp2) -> Result<SigmaForm> {
        let n = self.order();
        if r.dim() != n {
            return Err(Error::DimensionMismatch("operator and presentation differ in order".into()));
        }
        let s = invert(r)?;
        let inv = SigmaForm::from_operator(&s);
        let delta = |a: usize, b: usize| if a == b { Scalar::one() } else { Scalar::zero() };
        for (i, j, v, u) in crate::tensor::op::quadruples(n) {
            let mut left = Scalar::zero();
            let mut right = Scalar::zero();
            for p in 0..n {
                for q in 0..n {
                    let sp = self.sigma_on_labels(label(n, i, p), label(n, j, q));
                    left += sp * inv.on_labels(label(n, p, v), label(n, q, u));
                    let sq = self.sigma_on_labels(label(n, p, v), label(n, q, u));
                    right += inv.on_labels(label(n, i, p), label(n, j, q)) * sq;
                }
            }
            let target = delta(i, v) * delta(j, u);
            if left != target || right != target {
                return Err(Error::Internal(format!(
                    "convolution identity fails at (i,v,j,u) = ({},{},{},{})",
                    i + 1,
                    v + 1,
                    j + 1,
                    u + 1
                )));
            }
        }
        Ok(inv)
    }
}

/// Builds `L(R)` for a Long solution `R`.
///
/// Without a naming the generators are the canonical representatives
/// `c_i_j`; a naming may pick any labels whose cosets form a basis of `C/V`.
pub fn build_lr(r: &TensorOp2, naming: Option<&Naming>) -> Result<LongPresentation> {
    require_long(r)?;
    let n = r.dim();
    let obs = super::comatrix::obstructions(r);
    if let Some(o) = obs.iter().find(|o| !comatrix::counit(n, o).is_zero()) {
        return Err(Error::Internal(format!("counit does not vanish on obstruction {o:?}")));
    }
    let quotient = QuotientCoalgebra::new(n, obs.iter().map(Vec::as_slice));
    if !quotient.is_coideal() {
        return Err(Error::Internal("obstruction span is not a coideal".into()));
    }
    let sigma0 = SigmaForm::from_operator(r);
    if !sigma0.vanishes_on(&quotient) {
        return Err(Error::Internal("sigma is ill-defined on the quotient".into()));
    }
    let naming = match naming {
        Some(nm) => nm.clone(),
        None => Naming::canonical(n, quotient.representatives()),
    };
    let labels: Vec<usize> = naming.0.iter().map(|(l, _)| *l).collect();
    let m = labels.len();
    let sigma = QMatrix::from_fn(m, m, |s, t| sigma0.on_labels(labels[s], labels[t]).clone());
    let lr = LongPresentation::assemble(quotient, naming, sigma)?;
    if lr.round_trip() != *r {
        return Err(Error::Internal("R_sigma differs from R".into()));
    }
    if let Some(w) = lr.l1_violation() {
        return Err(Error::Internal(format!("(L1) fails on generators at {w:?}")));
    }
    Ok(lr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::tensor::{make_diag, make_pair, make_phi};

    fn triangular_pair(a: i64, b: i64, c: i64) -> TensorOp2 {
        let f = QMatrix::from_i64(&[&[a, 1], &[0, a]]);
        let g = QMatrix::from_i64(&[&[b, c], &[0, b]]);
        make_pair(&f, &g).unwrap()
    }

    fn xy_naming() -> Naming {
        Naming::parse(2, [("c11", "x"), ("c12", "y")]).unwrap()
    }

    #[test]
    fn identity_n1_has_one_grouplike() {
        let lr = build_lr(&TensorOp2::identity(1), None).unwrap();
        assert_eq!(lr.num_generators(), 1);
        assert_eq!(lr.delta(0), &QMatrix::from_i64(&[&[1]]));
        assert_eq!(lr.epsilon(0), &int(1));
    }

    #[test]
    fn triangular_pair_structure() {
        let r = triangular_pair(2, 3, 5);
        let lr = build_lr(&r, Some(&xy_naming())).unwrap();
        assert_eq!(lr.names(), vec!["x", "y"]);
        assert_eq!(lr.delta(0), &QMatrix::from_i64(&[&[1, 0], &[0, 0]]));
        assert_eq!(lr.delta(1), &QMatrix::from_i64(&[&[0, 1], &[1, 0]]));
        assert_eq!((lr.epsilon(0), lr.epsilon(1)), (&int(1), &int(0)));
        // σ read off the 4×4 display: x_{11}^{11}, x_{21}^{11}, x_{12}^{11}, x_{22}^{11}.
        assert_eq!(lr.sigma(), &QMatrix::from_i64(&[&[6, 10], &[3, 5]]));
        assert_eq!(lr.round_trip(), r);
    }

    #[test]
    fn canonical_representatives_need_no_naming() {
        let lr = build_lr(&triangular_pair(1, 1, 1), None).unwrap();
        assert_eq!(lr.names(), vec!["c_1_1", "c_1_2"]);
    }

    #[test]
    fn naming_must_span_the_quotient() {
        let r = triangular_pair(1, 1, 1);
        let bad = Naming::parse(2, [("c11", "x"), ("c22", "y")]).unwrap();
        assert!(matches!(build_lr(&r, Some(&bad)), Err(Error::InvalidNaming(_))));
        let short = Naming::parse(2, [("c11", "x")]).unwrap();
        assert!(matches!(build_lr(&r, Some(&short)), Err(Error::InvalidNaming(_))));
        let alt = Naming::parse(2, [("c22", "x"), ("c12", "y")]).unwrap();
        assert_eq!(build_lr(&r, Some(&alt)).unwrap().round_trip(), r);
    }

    #[test]
    fn not_long_is_rejected() {
        let mut r = TensorOp2::identity(2);
        r.set(0, 0, 0, 0, int(0));
        r.set(0, 0, 1, 1, int(1));
        if !crate::tensor::is_long(&r) {
            assert!(matches!(build_lr(&r, None), Err(Error::NotALongSolution { .. })));
        }
    }

    #[test]
    fn sigma_extend_hand_expansion() {
        let lr = build_lr(&triangular_pair(1, 1, 1), Some(&xy_naming())).unwrap();
        // σ(y ⊗ xy) = σ(x⊗x)σ(y⊗y) + σ(y⊗x)σ(x⊗y) = 1·1 + 1·1
        assert_eq!(lr.sigma_extend(&[1], &[0, 1]).unwrap(), int(2));
        assert_eq!(lr.sigma_extend(&[], &[1, 0]).unwrap(), int(0));
        assert_eq!(lr.sigma_extend(&[0, 0], &[]).unwrap(), int(1));
        assert!(matches!(lr.sigma_extend(&[0; 7], &[0]), Err(Error::WordTooLong { cap: 6 })));
    }

    #[test]
    fn diagonal_orders_agree() {
        let lr = build_lr(&make_diag(&QMatrix::from_i64(&[&[2, 3], &[0, 0]])).unwrap(), None).unwrap();
        let (x, y) = (0, 1);
        for (w1, w2) in [(vec![x, y], vec![x]), (vec![y, x], vec![x]), (vec![x, y], vec![y, x])] {
            let a = lr.sigma_extend_with(&w1, &w2, SplitOrder::RightFirst, 6).unwrap();
            let b = lr.sigma_extend_with(&w1, &w2, SplitOrder::LeftFirst, 6).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn l1_mutation_is_caught() {
        // Δ(y) = x ⊗ y + y ⊗ x is cocommutative, so here (L1) holds for any σ.
        let mut lr = build_lr(&triangular_pair(1, 1, 1), Some(&xy_naming())).unwrap();
        lr.set_sigma(1, 0, int(7));
        assert!(lr.check_l1_on_generators());

        let lr = build_lr(&make_phi(&[0, 1, 1, 1]).unwrap(), None).unwrap();
        assert!(lr.check_l1_on_generators());
        let m = lr.num_generators();
        let mut flipped = 0;
        for s in 0..m {
            for t in 0..m {
                let mut bad = lr.clone();
                bad.set_sigma(s, t, &lr.sigma()[(s, t)] + int(1));
                if let Some(w) = bad.l1_violation() {
                    assert!(w.iter().all(|&k| (1..=4).contains(&k)));
                    flipped += 1;
                }
            }
        }
        assert!(flipped > 0);
    }

    #[test]
    fn l1_defect_is_projected_obstruction() {
        let r = triangular_pair(2, 3, 5);
        let lr = build_lr(&r, None).unwrap();
        let n = 2;
        for (i, j, p, q) in crate::tensor::op::quadruples(n) {
            let y = lr.coords_of_label(label(n, p, q)).to_vec();
            let o = comatrix::obstruction(&r, i, p, q, j);
            assert_eq!(lr.l1_defect(i, j, &y), lr.coords_of(&o));
        }
    }

    #[test]
    fn dimodule_on_phi() {
        let lr = build_lr(&make_phi(&[0, 1, 1, 1]).unwrap(), None).unwrap();
        assert_eq!(lr.dimodule_action(&Poly::unit(), 2).unwrap(), vec![int(0), int(0), int(1), int(0)]);
        for g in 0..lr.num_generators() {
            assert_eq!(lr.dimodule_violation(&Poly::generator(g)).unwrap(), None);
        }
    }

    #[test]
    fn convolution_inverse_cases() {
        let id = TensorOp2::identity(2);
        let lr = build_lr(&id, None).unwrap();
        assert_eq!(lr.convolution_inverse(&id).unwrap(), SigmaForm::from_operator(&id));
        let r = triangular_pair(1, 1, 0);
        let lr = build_lr(&r, None).unwrap();
        let inv = lr.convolution_inverse(&r).unwrap();
        assert_eq!(inv, SigmaForm::from_operator(&invert(&r).unwrap()));
        let phi = make_phi(&[0, 0]).unwrap();
        let lr = build_lr(&phi, None).unwrap();
        assert!(matches!(lr.convolution_inverse(&phi), Err(Error::SingularOperator)));
    }
}
