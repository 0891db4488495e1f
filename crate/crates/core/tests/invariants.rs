mod common;

use common::NaiveLifts;
use longeq_core::frt::{build_lr, PresentationDoc};
use longeq_core::group::FiniteGroup;
use longeq_core::hopf::{
    check_axioms, counit_table, group_algebra, l1_only_space, sigma_feasibility, strong_d_violation, strong_dmap_rsigma,
    sweedler_h4, Axiom, Coaction, Feasibility, SigmaDoc,
};
use longeq_core::io::{operator_json, parse_operator, LoopDoc};
use longeq_core::kz::{Center, LoopKind, LoopSpec};
use longeq_core::linalg::QMatrix;
use longeq_core::scalar::{frac, int};
use longeq_core::tensor::{
    check_laws, check_long_componentwise, invert, is_long, make_conjugate, make_diag, make_pair, make_phi, Law,
    TensorOp2,
};
use longeq_core::Scalar;
use nalgebra::Complex;
use num::Zero;
use proptest::prelude::*;

fn small() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

fn nonzero() -> impl Strategy<Value = Scalar> {
    small().prop_filter("non-zero", |x| !x.is_zero())
}

fn matrix(n: usize, entry: impl Strategy<Value = Scalar>) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(entry, n * n).prop_map(move |v| QMatrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

fn invertible(n: usize) -> impl Strategy<Value = QMatrix> {
    matrix(n, small()).prop_filter("invertible", |m| m.inverse().is_ok())
}

/// An idempotent map on `{0..n}`: choose the image, then send every point to it.
fn idempotent() -> impl Strategy<Value = Vec<usize>> {
    (1usize..=4).prop_flat_map(|n| {
        (prop::collection::vec(any::<bool>(), n), prop::collection::vec(0usize..n, n)).prop_map(move |(fixed, pick)| {
            let mut image: Vec<usize> = (0..n).filter(|&k| fixed[k]).collect();
            if image.is_empty() {
                image.push(pick[0]);
            }
            (0..n).map(|k| if image.contains(&k) { k } else { image[pick[k] % image.len()] }).collect()
        })
    })
}

/// A Long solution from one of the closed-form families.
fn long_solution() -> impl Strategy<Value = TensorOp2> {
    prop_oneof![
        (2usize..=3).prop_flat_map(|n| matrix(n, small())).prop_map(|a| make_diag(&a).unwrap()),
        idempotent().prop_map(|p| make_phi(&p).unwrap()),
        (small(), small(), small()).prop_map(|(a, b, c)| {
            let f = QMatrix::from_fn(2, 2, |i, j| match (i, j) {
                (0, 1) => int(1),
                (1, 0) => int(0),
                _ => a.clone(),
            });
            let g = QMatrix::from_fn(2, 2, |i, j| match (i, j) {
                (0, 1) => c.clone(),
                (1, 0) => int(0),
                _ => b.clone(),
            });
            make_pair(&f, &g).unwrap()
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn long_checks_agree(coeffs in prop::collection::vec(-2i64..=2, 16)) {
        let r = TensorOp2::from_coeffs(2, coeffs.into_iter().map(int).collect()).unwrap();
        let matrix = check_laws(&r, &[Law::Long]).get(Law::Long).unwrap();
        prop_assert_eq!(matrix, check_long_componentwise(&r));
        prop_assert_eq!(matrix, NaiveLifts::new(&r).long());
    }

    #[test]
    fn long_implies_kz_bracket(r in long_solution()) {
        prop_assert!(is_long(&r));
        prop_assert!(check_laws(&r, &[Law::KzBracket]).all_pass());
        prop_assert!(NaiveLifts::new(&r).kz_bracket());
    }

    #[test]
    fn invert_is_an_involution(a in matrix(2, nonzero()), u in invertible(2)) {
        let r = make_diag(&a).unwrap();
        let inv = invert(&r).unwrap();
        prop_assert!(is_long(&inv));
        prop_assert_eq!(invert(&inv).unwrap(), r.clone());
        let c = make_conjugate(&u, &r).unwrap();
        prop_assert!(is_long(&c));
        prop_assert!(is_long(&invert(&c).unwrap()));
    }

    #[test]
    fn conjugation_composes(r in long_solution(), seed in 0usize..4) {
        let n = r.dim();
        // Elementary invertible matrices keep entries small.
        let u = QMatrix::from_fn(n, n, |i, j| if i == j { int(1) } else if (i + seed) % n == j && i < j { int(2) } else { int(0) });
        let v = QMatrix::from_fn(n, n, |i, j| if i == j { int(if i == seed % n { -1 } else { 1 }) } else { int(0) });
        let once = make_conjugate(&(&u * &v), &r).unwrap();
        let twice = make_conjugate(&u, &make_conjugate(&v, &r).unwrap()).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn matrix_and_json_round_trip(coeffs in prop::collection::vec(small(), 16)) {
        let r = TensorOp2::from_coeffs(2, coeffs).unwrap();
        prop_assert_eq!(TensorOp2::from_matrix(2, &r.matrix()).unwrap(), r.clone());
        prop_assert_eq!(parse_operator(&operator_json(&r)).unwrap(), r);
    }

    #[test]
    fn presentation_round_trips(r in long_solution()) {
        let lr = build_lr(&r, None).unwrap();
        prop_assert_eq!(lr.round_trip(), r.clone());
        let doc = PresentationDoc::from_presentation(&lr);
        let text = serde_json::to_string(&doc).unwrap();
        let back: PresentationDoc = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.to_presentation().unwrap(), lr.clone());
        let rho = Coaction::fundamental(&lr).unwrap();
        let c = longeq_core::hopf::presentation_coalgebra(&lr).unwrap();
        prop_assert_eq!(strong_dmap_rsigma(&c, lr.sigma(), &rho).unwrap(), r);
    }

    #[test]
    fn strong_d_is_l1_membership(table in matrix_i64(4, -1..=1), ts in prop::collection::vec(-2i64..=2, 16)) {
        let h = sweedler_h4();
        let space = l1_only_space(&h);
        let direct = strong_d_violation(h.coalgebra(), &table).is_none();
        prop_assert_eq!(direct, space.contains(&table));
        // Points of the L1 space itself always pass.
        let aff = space.affine().unwrap();
        let mut flat = aff.particular.clone();
        for (dir, t) in aff.directions.iter().zip(&ts) {
            for (x, d) in flat.iter_mut().zip(dir) {
                *x += d * int(*t);
            }
        }
        let point = QMatrix::from_fn(4, 4, |a, b| flat[a * 4 + b].clone());
        prop_assert!(strong_d_violation(h.coalgebra(), &point).is_none());
        prop_assert_eq!(check_axioms(&h, &point, &[Axiom::L1]).passes(Axiom::L1), Some(true));
    }

    #[test]
    fn sigma_doc_round_trip(table in matrix(3, small())) {
        let doc = SigmaDoc::from_table(&table);
        let back: SigmaDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        prop_assert_eq!(back.to_table().unwrap(), table);
    }

    #[test]
    fn loop_doc_round_trip(radius in 0.1f64..0.4, turns in -2i32..=2, steps in 1usize..50, far in 2.0f64..9.0) {
        prop_assume!(turns != 0);
        let base = vec![Complex::new(0.0, 0.0), Complex::new(1.0, 0.0), Complex::new(far, 1.0)];
        let kind = LoopKind::Circle { moving: 0, center: Center::Index(1), radius, turns };
        let lp = LoopSpec::new(base, kind, steps).unwrap();
        let doc = LoopDoc::from_loop(&lp);
        let back: LoopDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        prop_assert_eq!(back.to_loop().unwrap(), lp);
    }
}

fn matrix_i64(n: usize, range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(range, n * n).prop_map(move |v| QMatrix::from_fn(n, n, |i, j| int(v[i * n + j])))
}

#[test]
fn counit_table_on_abelian_group_algebras() {
    for m in 1..=5 {
        let h = group_algebra(&FiniteGroup::cyclic(m));
        let report = check_axioms(&h, &counit_table(h.coalgebra()), &Axiom::ALL);
        assert!(report.all_pass(), "Z/{m}: {report:?}");
    }
}

#[test]
fn feasibility_is_never_infeasible_when_the_counit_table_exists() {
    let mut cases = vec![sweedler_h4()];
    cases.extend((1..=4).map(|m| group_algebra(&FiniteGroup::cyclic(m))));
    for h in cases {
        let eps = counit_table(h.coalgebra());
        assert!(check_axioms(&h, &eps, &Axiom::LONG).all_pass());
        match sigma_feasibility(&h) {
            Feasibility::Unknown(space) => {
                let flat: Vec<Scalar> = eps.to_rows().concat();
                assert!(space.contains(&flat));
            }
            other => panic!("{other:?}"),
        }
    }
}
