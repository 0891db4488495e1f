//! Plain-text rendering of a presentation, one declaration per line.

use std::fmt::Write;

use num::{Signed, Zero};

use super::comatrix::label_name;
use super::presentation::LongPresentation;
use crate::scalar::{self, Scalar};

/// Joins `(coeff, term)` pairs as `a + 2 b - 1/2 c`; zero sums render as `0`.
fn signed_sum(terms: impl IntoIterator<Item = (Scalar, String)>) -> String {
    let mut out = String::new();
    for (c, t) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = if mag == scalar::one() { t } else { format!("{} {t}", scalar::format(&mag)) };
        match (out.is_empty(), c.is_negative()) {
            (true, false) => out.push_str(&body),
            (true, true) => write!(out, "-{body}").unwrap(),
            (false, false) => write!(out, " + {body}").unwrap(),
            (false, true) => write!(out, " - {body}").unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Relations (`c_2_2 = c_1_1`), generators, Δ, ε and σ, in that order.
pub fn presentation_text(lr: &LongPresentation) -> String {
    let n = lr.order();
    let names = lr.names();
    let m = names.len();
    let mut out = String::new();
    writeln!(out, "generators: {}", names.join(", ")).unwrap();
    for row in lr.quotient().relations() {
        let p = lr.quotient().pivot_of(&row);
        let inv = row[p].recip();
        let rhs = (0..p).rev().map(|k| (-(&row[k] * &inv), label_name(n, k)));
        writeln!(out, "relation: {} = {}", label_name(n, p), signed_sum(rhs)).unwrap();
    }
    for (t, name) in names.iter().enumerate() {
        let d = lr.delta(t);
        let terms = (0..m).flat_map(|s| (0..m).map(move |r| (s, r)));
        let rendered =
            signed_sum(terms.map(|(s, r)| (d[(s, r)].clone(), format!("{} (x) {}", names[s], names[r]))));
        writeln!(out, "delta({name}) = {rendered}").unwrap();
    }
    for (t, name) in names.iter().enumerate() {
        writeln!(out, "epsilon({name}) = {}", scalar::format(lr.epsilon(t))).unwrap();
    }
    for s in 0..m {
        for t in 0..m {
            writeln!(out, "sigma({} (x) {}) = {}", names[s], names[t], scalar::format(&lr.sigma()[(s, t)]))
                .unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frt::{build_lr, Naming};
    use crate::linalg::QMatrix;
    use crate::scalar::{frac, int};
    use crate::tensor::{make_pair, TensorOp2};

    #[test]
    fn sums_render_with_signs() {
        let s = signed_sum([(int(1), "a".into()), (int(-1), "b".into()), (frac(1, 2), "c".into())]);
        assert_eq!(s, "a - b + 1/2 c");
        assert_eq!(signed_sum([(int(-2), "a".to_string())]), "-2 a");
        assert_eq!(signed_sum(Vec::<(Scalar, String)>::new()), "0");
    }

    #[test]
    fn identity_n1() {
        let text = presentation_text(&build_lr(&TensorOp2::identity(1), None).unwrap());
        assert_eq!(
            text,
            "generators: c_1_1\ndelta(c_1_1) = c_1_1 (x) c_1_1\nepsilon(c_1_1) = 1\nsigma(c_1_1 (x) c_1_1) = 1\n"
        );
    }

    #[test]
    fn triangular_pair_text() {
        let f = QMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let r = make_pair(&f, &f).unwrap();
        let naming = Naming::parse(2, [("c11", "x"), ("c12", "y")]).unwrap();
        let text = presentation_text(&build_lr(&r, Some(&naming)).unwrap());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "generators: x, y");
        assert_eq!(lines[1], "relation: c_2_1 = 0");
        assert_eq!(lines[2], "relation: c_2_2 = c_1_1");
        assert_eq!(lines[3], "delta(x) = x (x) x");
        assert_eq!(lines[4], "delta(y) = x (x) y + y (x) x");
        assert!(text.is_ascii());
    }
}
