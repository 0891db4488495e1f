//! Noncommutative polynomials over generator indices, and the bialgebra
//! structure a free algebra inherits from Δ and ε on its generators.

use std::collections::{BTreeMap, HashMap};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A monomial in the free algebra; the empty word is the unit.
pub type Word = Vec<usize>;

/// A linear combination of words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly(BTreeMap<Word, Scalar>);

/// A linear combination of `word ⊗ word`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor2(BTreeMap<(Word, Word), Scalar>);

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn unit() -> Self {
        Self::word(Vec::new())
    }

    pub fn word(w: Word) -> Self {
        Self::term(Scalar::one(), w)
    }

    pub fn generator(g: usize) -> Self {
        Self::word(vec![g])
    }

    pub fn term(coeff: Scalar, w: Word) -> Self {
        let mut p = Poly::zero();
        p.add_term(coeff, w);
        p
    }

    /// `Σ coeffs[g] · x_g`.
    pub fn linear(coeffs: &[Scalar]) -> Self {
        let mut p = Poly::zero();
        for (g, c) in coeffs.iter().enumerate() {
            p.add_term(c.clone(), vec![g]);
        }
        p
    }

    pub fn add_term(&mut self, coeff: Scalar, w: Word) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.0.entry(w.clone()).or_insert_with(Scalar::zero);
        *slot += coeff;
        // Keep the map free of explicit zeros so equality is structural.
        if slot.is_zero() {
            self.0.remove(&w);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (w, c) in &other.0 {
            out.add_term(c.clone(), w.clone());
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> Poly {
        let mut out = Poly::zero();
        for (w, c) in &self.0 {
            out.add_term(c * k, w.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (a, x) in &self.0 {
            for (b, y) in &other.0 {
                out.add_term(x * y, concat(a, b));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, w: &[usize]) -> Scalar {
        self.0.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.0.iter()
    }

    pub fn max_len(&self) -> usize {
        self.0.keys().map(Vec::len).max().unwrap_or(0)
    }
}

impl Tensor2 {
    pub fn zero() -> Self {
        Tensor2::default()
    }

    /// `1 ⊗ 1`.
    pub fn unit() -> Self {
        let mut t = Tensor2::zero();
        t.add_term(Scalar::one(), Vec::new(), Vec::new());
        t
    }

    pub fn add_term(&mut self, coeff: Scalar, left: Word, right: Word) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        let slot = self.0.entry(key.clone()).or_insert_with(Scalar::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.0.remove(&key);
        }
    }

    pub fn add(&self, other: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        for ((l, r), c) in &other.0 {
            out.add_term(c.clone(), l.clone(), r.clone());
        }
        out
    }

    /// Product in `H ⊗ H`: `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn mul(&self, other: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((a, b), x) in &self.0 {
            for ((c, d), y) in &other.0 {
                out.add_term(x * y, concat(a, c), concat(b, d));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Scalar)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn concat(a: &[usize], b: &[usize]) -> Word {
    let mut w = Vec::with_capacity(a.len() + b.len());
    w.extend_from_slice(a);
    w.extend_from_slice(b);
    w
}

/// The unique bialgebra structure on the free algebra `k<x_0, .., x_{m-1}>`
/// extending Δ and ε given on generators.
#[derive(Clone, Debug)]
pub struct FreeBialgebra {
    delta: Vec<Tensor2>,
    epsilon: Vec<Scalar>,
    delta_cache: HashMap<Word, Tensor2>,
}

impl FreeBialgebra {
    pub fn new(delta: Vec<Tensor2>, epsilon: Vec<Scalar>) -> Self {
        assert_eq!(delta.len(), epsilon.len(), "one Δ and one ε per generator");
        FreeBialgebra { delta, epsilon, delta_cache: HashMap::new() }
    }

    pub fn num_generators(&self) -> usize {
        self.epsilon.len()
    }

    pub fn generator_delta(&self, g: usize) -> &Tensor2 {
        &self.delta[g]
    }

    pub fn generator_epsilon(&self, g: usize) -> &Scalar {
        &self.epsilon[g]
    }

    pub fn epsilon_word(&self, w: &[usize]) -> Scalar {
        w.iter().map(|&g| self.epsilon[g].clone()).product()
    }

    pub fn epsilon(&self, p: &Poly) -> Scalar {
        p.terms().map(|(w, c)| c * self.epsilon_word(w)).sum()
    }

    /// Δ on a word, by multiplicativity.
    pub fn delta_word(&mut self, w: &[usize]) -> Tensor2 {
        if let Some(t) = self.delta_cache.get(w) {
            return t.clone();
        }
        let t = match w.split_last() {
            None => Tensor2::unit(),
            Some((&last, rest)) => self.delta_word(rest).mul(&self.delta[last]),
        };
        self.delta_cache.insert(w.to_vec(), t.clone());
        t
    }

    pub fn delta(&mut self, p: &Poly) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (w, c) in p.terms() {
            for ((l, r), d) in self.delta_word(w).terms() {
                out.add_term(c * d, l.clone(), r.clone());
            }
        }
        out
    }
}

/// Which word (L3) vs (L5) splits first when both sides have length ≥ 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum SplitOrder {
    /// `σ(x ⊗ yz) = Σ σ(x₍₁₎ ⊗ y) σ(x₍₂₎ ⊗ z)` first.
    #[default]
    RightFirst,
    /// `σ(xy ⊗ z) = Σ σ(y ⊗ z₍₁₎) σ(x ⊗ z₍₂₎)` first.
    LeftFirst,
}

pub const DEFAULT_WORD_CAP: usize = 6;
const MAX_DEPTH: usize = 256;

/// Extension of a bilinear form given on generator pairs to the whole free
/// bialgebra, through σ(x ⊗ 1) = σ(1 ⊗ x) = ε(x) and the two splitting rules.
#[derive(Clone, Debug)]
pub struct SigmaExtension {
    bialgebra: FreeBialgebra,
    table: Vec<Vec<Scalar>>,
    cap: usize,
    order: SplitOrder,
    memo: HashMap<(Word, Word), Scalar>,
}

impl SigmaExtension {
    /// `table[a][b] = σ(x_a ⊗ x_b)`.
    pub fn new(bialgebra: FreeBialgebra, table: Vec<Vec<Scalar>>) -> Self {
        let m = bialgebra.num_generators();
        assert!(table.len() == m && table.iter().all(|r| r.len() == m), "σ table must be m x m");
        SigmaExtension {
            bialgebra,
            table,
            cap: DEFAULT_WORD_CAP,
            order: SplitOrder::default(),
            memo: HashMap::new(),
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self.memo.clear();
        self
    }

    pub fn with_order(mut self, order: SplitOrder) -> Self {
        self.order = order;
        self.memo.clear();
        self
    }

    pub fn bialgebra(&self) -> &FreeBialgebra {
        &self.bialgebra
    }

    pub fn bialgebra_mut(&mut self) -> &mut FreeBialgebra {
        &mut self.bialgebra
    }

    pub fn words(&mut self, a: &[usize], b: &[usize]) -> Result<Scalar> {
        self.eval(a, b, 0)
    }

    /// Bilinear extension to polynomials.
    pub fn poly(&mut self, p: &Poly, q: &Poly) -> Result<Scalar> {
        let mut total = Scalar::zero();
        for (a, x) in p.terms() {
            for (b, y) in q.terms() {
                total += x * y * self.eval(a, b, 0)?;
            }
        }
        Ok(total)
    }

    fn eval(&mut self, a: &[usize], b: &[usize], depth: usize) -> Result<Scalar> {
        if a.len() > self.cap || b.len() > self.cap || depth > MAX_DEPTH {
            return Err(Error::WordTooLong { cap: self.cap });
        }
        if let Some(v) = self.memo.get(&(a.to_vec(), b.to_vec())) {
            return Ok(v.clone());
        }
        let value = if b.is_empty() {
            self.bialgebra.epsilon_word(a)
        } else if a.is_empty() {
            self.bialgebra.epsilon_word(b)
        } else if a.len() == 1 && b.len() == 1 {
            self.table[a[0]][b[0]].clone()
        } else {
            let split_right = match self.order {
                SplitOrder::RightFirst => b.len() >= 2,
                SplitOrder::LeftFirst => a.len() < 2,
            };
            let mut total = Scalar::zero();
            if split_right {
                let (y, z) = b.split_at(1);
                for ((a1, a2), c) in self.bialgebra.delta_word(a).terms() {
                    let first = self.eval(a1, y, depth + 1)?;
                    if !first.is_zero() {
                        total += c * first * self.eval(a2, z, depth + 1)?;
                    }
                }
            } else {
                let (x, y) = a.split_at(1);
                for ((b1, b2), c) in self.bialgebra.delta_word(b).terms() {
                    let first = self.eval(y, b1, depth + 1)?;
                    if !first.is_zero() {
                        total += c * first * self.eval(x, b2, depth + 1)?;
                    }
                }
            }
            total
        };
        self.memo.insert((a.to_vec(), b.to_vec()), value.clone());
        Ok(value)
    }
}
