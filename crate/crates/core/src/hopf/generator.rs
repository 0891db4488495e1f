//! Bialgebras presented by generators with free-algebra semantics: Δ and ε
//! are given on generators and extended multiplicatively, σ is given on
//! generator pairs (plus the unit) and extended by (L3)/(L5).

use num::{One, Zero};

use super::axioms::Axiom;
use crate::error::{Error, Result};
use crate::free::{FreeBialgebra, Poly, SigmaExtension, SplitOrder, Tensor2, Word};
use crate::linalg::{solve_affine, LinearSolution, QMatrix};
use crate::scalar::Scalar;

/// Longest word allowed inside a generator coproduct.
pub const GENERATOR_WORD_CAP: usize = 4;

#[derive(Clone, Debug)]
pub struct GeneratorBialgebra {
    names: Vec<String>,
    free: FreeBialgebra,
}

impl GeneratorBialgebra {
    /// `delta[g]` lists `(coeff, left word, right word)`; the empty word is the unit.
    /// Checks the counit laws and coassociativity on every generator.
    pub fn new(names: Vec<String>, delta: Vec<Vec<(Scalar, Word, Word)>>, epsilon: Vec<Scalar>) -> Result<Self> {
        let m = names.len();
        if delta.len() != m || epsilon.len() != m {
            return Err(Error::DimensionMismatch(format!("{m} generators need {m} coproducts and counits")));
        }
        let mut tensors = Vec::with_capacity(m);
        for terms in &delta {
            let mut t = Tensor2::zero();
            for (c, l, r) in terms {
                if l.iter().chain(r).any(|&g| g >= m) {
                    return Err(Error::Parse(format!("generator index out of range in {l:?} (x) {r:?}")));
                }
                if l.len() > GENERATOR_WORD_CAP || r.len() > GENERATOR_WORD_CAP {
                    return Err(Error::WordTooLong { cap: GENERATOR_WORD_CAP });
                }
                t.add_term(c.clone(), l.clone(), r.clone());
            }
            tensors.push(t);
        }
        let mut free = FreeBialgebra::new(tensors, epsilon);
        for g in 0..m {
            let dg = free.generator_delta(g).clone();
            let mut left = Poly::zero();
            let mut right = Poly::zero();
            for ((l, r), c) in dg.terms() {
                left.add_term(c * free.epsilon_word(l), r.clone());
                right.add_term(c * free.epsilon_word(r), l.clone());
            }
            if left != Poly::generator(g) || right != Poly::generator(g) {
                return Err(Error::InvalidBialgebra { axiom: "counit", witness: vec![g] });
            }
            // (Δ ⊗ id)Δ(g) and (id ⊗ Δ)Δ(g) as sums over word triples
            let mut lhs = std::collections::BTreeMap::<(Word, Word, Word), Scalar>::new();
            let mut rhs = lhs.clone();
            for ((l, r), c) in dg.terms() {
                for ((a, b), k) in free.delta_word(l).terms() {
                    *lhs.entry((a.clone(), b.clone(), r.clone())).or_insert_with(Scalar::zero) += c * k;
                }
                for ((a, b), k) in free.delta_word(r).terms() {
                    *rhs.entry((l.clone(), a.clone(), b.clone())).or_insert_with(Scalar::zero) += c * k;
                }
            }
            lhs.retain(|_, v| !v.is_zero());
            rhs.retain(|_, v| !v.is_zero());
            if lhs != rhs {
                return Err(Error::InvalidBialgebra { axiom: "coassociativity", witness: vec![g] });
            }
        }
        Ok(GeneratorBialgebra { names, free })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn free(&self) -> &FreeBialgebra {
        &self.free
    }

    /// Index into a σ table: 0 is the unit, `g + 1` is generator `g`.
    pub fn slot_name(&self, k: usize) -> &str {
        if k == 0 { "1" } else { &self.names[k - 1] }
    }

    /// `Δ(x) = x ⊗ x`, `Δ(y) = y ⊗ 1 + x ⊗ y`.
    pub fn skew_primitive() -> Self {
        let one = Scalar::one();
        Self::new(
            vec!["x".into(), "y".into()],
            vec![
                vec![(one.clone(), vec![0], vec![0])],
                vec![(one.clone(), vec![1], vec![]), (one.clone(), vec![0], vec![1])],
            ],
            vec![one, Scalar::zero()],
        )
        .expect("valid generator bialgebra")
    }

    /// `x`, `y` group-like and `Δ(z) = x ⊗ z + z ⊗ y`.
    pub fn twisted_primitive() -> Self {
        let one = Scalar::one();
        Self::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![
                vec![(one.clone(), vec![0], vec![0])],
                vec![(one.clone(), vec![1], vec![1])],
                vec![(one.clone(), vec![0], vec![2]), (one.clone(), vec![2], vec![1])],
            ],
            vec![one.clone(), one, Scalar::zero()],
        )
        .expect("valid generator bialgebra")
    }

    /// The table `σ(a ⊗ b) = ε(a)ε(b)` on unit and generators.
    pub fn counit_table(&self) -> Vec<Vec<Scalar>> {
        let eps = |k: usize| if k == 0 { Scalar::one() } else { self.free.generator_epsilon(k - 1).clone() };
        let m = self.num_generators() + 1;
        (0..m).map(|a| (0..m).map(|b| eps(a) * eps(b)).collect()).collect()
    }
}

/// One failed equation of the generator-level check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorViolation {
    pub axiom: Axiom,
    /// Table slots (0 = unit).
    pub pair: [usize; 2],
    /// For (L1): the word whose coefficient is nonzero, and that coefficient.
    pub word: Word,
    pub defect: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorReport {
    pub violations: Vec<GeneratorViolation>,
    /// Both extension orders agree on all word pairs up to length 2.
    pub orders_agree: bool,
}

impl GeneratorReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.orders_agree
    }
}

fn check_table_shape(g: &GeneratorBialgebra, table: &[Vec<Scalar>]) -> Result<()> {
    let m = g.num_generators() + 1;
    if table.len() != m || table.iter().any(|r| r.len() != m) {
        return Err(Error::DimensionMismatch(format!("sigma table must be {m}x{m} (unit first)")));
    }
    Ok(())
}

fn words_up_to(m: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 0..m {
                let mut v: Word = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// `table` is indexed by slots: 0 is the unit, `g + 1` is generator `g`.
/// Checks (L2)/(L4) on the unit entries and (L1) on every pair
/// (generator, unit or generator), extending σ to words by (L3)/(L5).
pub fn check_generator_long(g: &GeneratorBialgebra, table: &[Vec<Scalar>]) -> Result<GeneratorReport> {
    check_table_shape(g, table)?;
    let m = g.num_generators();
    let eps = g.counit_table();
    let mut violations = Vec::new();
    for k in 0..=m {
        if table[k][0] != eps[k][0] {
            violations.push(GeneratorViolation {
                axiom: Axiom::L2, pair: [k, 0], word: Vec::new(), defect: &table[k][0] - &eps[k][0],
            });
        }
        if k > 0 && table[0][k] != eps[0][k] {
            violations.push(GeneratorViolation {
                axiom: Axiom::L4, pair: [0, k], word: Vec::new(), defect: &table[0][k] - &eps[0][k],
            });
        }
    }
    let inner: Vec<Vec<Scalar>> = table[1..].iter().map(|r| r[1..].to_vec()).collect();
    let mut ext = SigmaExtension::new(g.free().clone(), inner.clone());
    for a in 0..m {
        let da = g.free().generator_delta(a).clone();
        for b in 0..=m {
            let bw: Word = if b == 0 { Vec::new() } else { vec![b - 1] };
            // Σ σ(a₍₁₎ ⊗ b) a₍₂₎ − Σ σ(a₍₂₎ ⊗ b) a₍₁₎
            let mut defect = Poly::zero();
            for ((l, r), c) in da.terms() {
                defect.add_term(c * ext.words(l, &bw)?, r.clone());
                defect.add_term(-(c * ext.words(r, &bw)?), l.clone());
            }
            for (w, c) in defect.terms() {
                violations.push(GeneratorViolation { axiom: Axiom::L1, pair: [a + 1, b], word: w.clone(), defect: c.clone() });
            }
        }
    }
    let mut left = SigmaExtension::new(g.free().clone(), inner).with_order(SplitOrder::LeftFirst);
    let words = words_up_to(m, 2);
    let mut orders_agree = true;
    'outer: for u in &words {
        for v in &words {
            if ext.words(u, v)? != left.words(u, v)? {
                orders_agree = false;
                break 'outer;
            }
        }
    }
    Ok(GeneratorReport { violations, orders_agree })
}

/// The tables satisfying (L1), (L2) and (L4) on generators, when every
/// generator coproduct is linear in the generators (words of length ≤ 1).
/// Unknowns are the slots `(a, b)` flattened as `a·(m+1) + b`.
pub fn generator_l1_space(g: &GeneratorBialgebra) -> Result<LinearSolution> {
    let m = g.num_generators();
    let w = m + 1;
    let slot = |word: &[usize]| -> usize { word.first().map_or(0, |&x| x + 1) };
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    let eps = g.counit_table();
    for k in 0..w {
        for (a, b) in [(k, 0), (0, k)] {
            let mut row = vec![Scalar::zero(); w * w];
            row[a * w + b] = Scalar::one();
            rows.push(row);
            rhs.push(eps[a][b].clone());
        }
    }
    for a in 0..m {
        let da = g.free().generator_delta(a);
        if da.terms().any(|((l, r), _)| l.len() > 1 || r.len() > 1) {
            return Err(Error::Unsupported(format!(
                "coproduct of `{}` is not linear in the generators",
                g.names()[a]
            )));
        }
        for b in 0..w {
            let mut per_word = vec![vec![Scalar::zero(); w * w]; w];
            for ((l, r), c) in da.terms() {
                per_word[slot(r)][slot(l) * w + b] += c;
                per_word[slot(l)][slot(r) * w + b] -= c;
            }
            for row in per_word.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())) {
                rows.push(row);
                rhs.push(Scalar::zero());
            }
        }
    }
    let a = QMatrix::from_rows(rows)?;
    Ok(solve_affine(&a, &rhs))
}
