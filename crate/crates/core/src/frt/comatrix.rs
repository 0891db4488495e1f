//! The comatrix coalgebra `C` of order `n` and the obstruction elements.
//!
//! Elements of `C` are coordinate vectors over `{c_ij}`, with `c_ij` at
//! label `i·n + j` (0-based). Elements of `C ⊗ C` use index `a·n² + b`.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::TensorOp2;

pub fn label(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

pub fn unlabel(n: usize, k: usize) -> (usize, usize) {
    (k / n, k % n)
}

/// `c_i_j` with 1-based indices.
pub fn label_name(n: usize, k: usize) -> String {
    let (i, j) = unlabel(n, k);
    format!("c_{}_{}", i + 1, j + 1)
}

/// Accepts `c_1_2`, `c12` (single-digit indices only) and `1,2`.
pub fn parse_label(n: usize, text: &str) -> Result<usize> {
    let t = text.trim();
    let bad = || Error::Parse(format!("`{text}` is not a comatrix label"));
    let (i, j) = if let Some((a, b)) = t.split_once(',') {
        (a.trim().parse::<usize>(), b.trim().parse::<usize>())
    } else if let Some(rest) = t.strip_prefix("c_") {
        let (a, b) = rest.split_once('_').ok_or_else(bad)?;
        (a.parse(), b.parse())
    } else if let Some(rest) = t.strip_prefix('c') {
        if rest.len() != 2 || !rest.bytes().all(|c| c.is_ascii_digit()) || n > 9 {
            return Err(bad());
        }
        (rest[..1].parse(), rest[1..].parse())
    } else {
        return Err(bad());
    };
    let (i, j) = (i.map_err(|_| bad())?, j.map_err(|_| bad())?);
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::Parse(format!("label `{text}` outside 1..{n}")));
    }
    Ok(label(n, i - 1, j - 1))
}

pub fn basis_vector(n: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n * n];
    v[k] = Scalar::one();
    v
}

/// `ε(Σ v_ij c_ij) = Σ v_ii`.
pub fn counit(n: usize, v: &[Scalar]) -> Scalar {
    (0..n).map(|i| v[label(n, i, i)].clone()).sum()
}

/// `Δ(c_ij) = Σ_u c_iu ⊗ c_uj`, extended linearly.
pub fn coproduct(n: usize, v: &[Scalar]) -> Vec<Scalar> {
    let n2 = n * n;
    let mut out = vec![Scalar::zero(); n2 * n2];
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (i, j) = unlabel(n, k);
        for u in 0..n {
            out[label(n, i, u) * n2 + label(n, u, j)] += c;
        }
    }
    out
}

/// `v ⊗ w` in `C ⊗ C`.
pub fn tensor(v: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); v.len() * w.len()];
    for (a, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (b, y) in w.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            out[a * w.len() + b] = x * y;
        }
    }
    out
}

/// `o(i,j,k,l) = Σ_v x_{kv}^{ji} c_vl − Σ_α x_{kl}^{jα} c_iα`.
pub fn obstruction(r: &TensorOp2, i: usize, j: usize, k: usize, l: usize) -> Vec<Scalar> {
    let n = r.dim();
    let mut o = vec![Scalar::zero(); n * n];
    for v in 0..n {
        o[label(n, v, l)] += r.x(k, v, j, i);
    }
    for a in 0..n {
        o[label(n, i, a)] -= r.x(k, l, j, a);
    }
    o
}

/// All `n⁴` obstructions in lexicographic order of `(i, j, k, l)`.
pub fn obstructions(r: &TensorOp2) -> Vec<Vec<Scalar>> {
    let n = r.dim();
    crate::tensor::op::quadruples(n).map(|(i, j, k, l)| obstruction(r, i, j, k, l)).collect()
}

/// Checks `Δ(o(i,j,k,l)) = Σ_u o(i,j,k,u) ⊗ c_ul + c_iu ⊗ o(u,j,k,l)` for
/// every index quadruple; returns the first failing one (0-based).
pub fn coideal_identity_violation(r: &TensorOp2) -> Option<[usize; 4]> {
    let n = r.dim();
    for (i, j, k, l) in crate::tensor::op::quadruples(n) {
        let lhs = coproduct(n, &obstruction(r, i, j, k, l));
        let mut rhs = vec![Scalar::zero(); lhs.len()];
        for u in 0..n {
            let t1 = tensor(&obstruction(r, i, j, k, u), &basis_vector(n, label(n, u, l)));
            let t2 = tensor(&basis_vector(n, label(n, i, u)), &obstruction(r, u, j, k, l));
            for (acc, (a, b)) in rhs.iter_mut().zip(t1.iter().zip(&t2)) {
                *acc += a + b;
            }
        }
        if lhs != rhs {
            return Some([i, j, k, l]);
        }
    }
    None
}
