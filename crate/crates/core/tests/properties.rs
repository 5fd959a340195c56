use bosemesner::arith::induced_diagonal;
use bosemesner::builders::{cycle_scheme, group_scheme, hamming, one_class};
use bosemesner::coding::{self, Code};
use bosemesner::generalized_hamming::{dual_eigenmatrix_gh, eigenmatrix_gh};
use bosemesner::scheme::{idempotents, verify_table};
use bosemesner::{induced_matrix, AssociationScheme, ExactMatrix, GaussRat, MPoly};
use proptest::prelude::*;

fn gauss() -> impl Strategy<Value = GaussRat> {
    (-3i64..=3, -2i64..=2).prop_map(|(re, im)| GaussRat::from_ints(re, im))
}

fn square(k: usize) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(proptest::collection::vec(gauss(), k), k)
        .prop_map(|rows| ExactMatrix::from_rows(rows).unwrap())
}

fn pair_of_squares() -> impl Strategy<Value = (ExactMatrix, ExactMatrix)> {
    (2usize..=3).prop_flat_map(|k| (square(k), square(k)))
}

fn poly(vars: usize) -> impl Strategy<Value = MPoly> {
    proptest::collection::vec((proptest::collection::vec(0u32..=2, vars), gauss()), 0..4).prop_map(move |terms| {
        let mut p = MPoly::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    })
}

fn identity(k: usize) -> ExactMatrix {
    ExactMatrix::identity(k)
}

fn group_base(which: usize) -> AssociationScheme {
    match which {
        0 => group_scheme(&[2]).unwrap(),
        1 => group_scheme(&[4]).unwrap(),
        _ => group_scheme(&[2, 2]).unwrap(),
    }
}

/// Random additive code: span of a few random generators.
fn additive_code() -> impl Strategy<Value = Code> {
    (0usize..3, 1usize..=3).prop_flat_map(|(which, n)| {
        let v = group_base(which).v();
        proptest::collection::vec(proptest::collection::vec(0..v, n), 1..=2)
            .prop_map(move |gens| Code::span(group_base(which), n, &gens).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn induced_is_functorial((m, n) in pair_of_squares(), deg in 1u32..=3) {
        let lhs = induced_matrix(&m.mul(&n).unwrap(), deg).unwrap();
        let rhs = induced_matrix(&m, deg).unwrap().mul(&induced_matrix(&n, deg).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn induced_degree_one_is_identity_map(m in (2usize..=4).prop_flat_map(square)) {
        prop_assert_eq!(induced_matrix(&m, 1).unwrap(), m);
    }

    #[test]
    fn inverse_is_exact(m in (2usize..=4).prop_flat_map(square)) {
        if let Ok(inv) = m.inverse() {
            prop_assert_eq!(m.mul(&inv).unwrap(), identity(m.rows()));
            prop_assert_eq!(inv.mul(&m).unwrap(), identity(m.rows()));
        } else {
            prop_assert!(m.determinant().unwrap() == GaussRat::from_int(0));
        }
    }

    #[test]
    fn induced_commutes_with_inverse(m in (2usize..=3).prop_flat_map(square), deg in 1u32..=3) {
        if let Ok(inv) = m.inverse() {
            let lhs = induced_matrix(&inv, deg).unwrap();
            let rhs = induced_matrix(&m, deg).unwrap().inverse().unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn substitution_is_multiplicative(
        (p, q, m) in (2usize..=3).prop_flat_map(|k| (poly(k), poly(k), square(k)))
    ) {
        let lhs = p.mul(&q).substitute_linear(&m).unwrap();
        let rhs = p.substitute_linear(&m).unwrap().mul(&q.substitute_linear(&m).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn induced_diagonal_matches_induced(
        diag in proptest::collection::vec(gauss(), 2..=3), deg in 1u32..=3
    ) {
        let t = ExactMatrix::diagonal(&diag);
        prop_assert_eq!(induced_matrix(&t, deg).unwrap(), induced_diagonal(&diag, deg));
    }

    #[test]
    fn macwilliams_is_an_involution(code in additive_code()) {
        let base = code.base().clone();
        let w = coding::weight_enumerator(&code);
        prop_assert!(coding::macwilliams_involution(&w, base.exact_eigenmatrix().unwrap(), base.v(), code.len()).unwrap());
    }

    #[test]
    fn dual_sizes_multiply_to_space(code in additive_code()) {
        let dual = coding::dual_code(&code).unwrap();
        let space = code.base().v().pow(code.n() as u32);
        prop_assert_eq!(code.len() * dual.len(), space);
        prop_assert!(coding::double_dual_check(&code).unwrap());
        prop_assert!(coding::translation_duality_check(&code).unwrap());
    }

    #[test]
    fn direct_oracle_matches_transform(code in additive_code()) {
        let base = code.base().clone();
        let w = coding::weight_enumerator(&code);
        prop_assert!(w.is_nonnegative());
        let t = coding::macwilliams_transform(&w, base.exact_eigenmatrix().unwrap(), base.v(), code.len()).unwrap();
        prop_assert!(t.is_nonnegative());
        prop_assert_eq!(coding::dual_weight_enumerator_direct(&code).unwrap(), t);
    }

    #[test]
    fn z4_swe_is_cwe_identified(code in (1usize..=3).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(0usize..4, n), 1..=2)
            .prop_map(move |g| Code::span(group_scheme(&[4]).unwrap(), n, &g).unwrap())
    })) {
        let e = coding::z4_enumerators(&code).unwrap();
        prop_assert_eq!(&e.swe, &e.cwe.rename_vars(&[0, 1, 2, 1], 3));
        prop_assert_eq!(coding::z4_swe_over_cycle(&code).unwrap(), e.swe);
        prop_assert!(coding::z4_check(&code).unwrap().holds());
    }

    #[test]
    fn gh_eigenmatrix_times_dual(which in 0usize..5, n in 1u32..=4) {
        let base = builtin(which);
        let p = base.exact_eigenmatrix().unwrap();
        let size = base.v().pow(n);
        let prod = eigenmatrix_gh(p, n).unwrap().mul(&dual_eigenmatrix_gh(p, base.v(), n).unwrap()).unwrap();
        prop_assert_eq!(prod.clone(), ExactMatrix::scalar(prod.rows(), &GaussRat::from_int(size as i64)));
    }
}

fn builtin(which: usize) -> AssociationScheme {
    match which {
        0 => one_class(2).unwrap(),
        1 => one_class(3).unwrap(),
        2 => cycle_scheme(4).unwrap(),
        3 => group_scheme(&[4]).unwrap(),
        _ => hamming(2, 3).unwrap(),
    }
}

fn all_builders() -> Vec<AssociationScheme> {
    let mut out = Vec::new();
    for q in 2..=5 {
        out.push(one_class(q).unwrap());
    }
    for (n, q) in [(1, 2), (2, 2), (3, 2), (2, 3), (4, 2)] {
        out.push(hamming(n, q).unwrap());
    }
    for orders in [&[2][..], &[3], &[4], &[5], &[2, 2], &[2, 4], &[3, 3]] {
        out.push(group_scheme(orders).unwrap());
    }
    for m in 3..=8 {
        out.push(cycle_scheme(m).unwrap());
    }
    out
}

#[test]
fn builders_pass_axioms_and_are_regular() {
    for s in all_builders() {
        let (report, _) = verify_table(s.table());
        assert!(report.passed(), "{report}");
        let vals = s.valencies();
        for x in 0..s.v() {
            let mut counts = vec![0u64; s.classes()];
            for y in 0..s.v() {
                counts[s.relation(x, y)] += 1;
            }
            assert_eq!(counts, vals);
        }
    }
}

#[test]
fn exact_eigenmatrices_are_invertible_pairs() {
    for s in all_builders() {
        let Some(p) = s.eigenmatrix() else { continue };
        let q = p.inverse().unwrap().scale(&GaussRat::from_int(s.v() as i64));
        assert_eq!(p.mul(&q).unwrap(), ExactMatrix::scalar(p.rows(), &GaussRat::from_int(s.v() as i64)));
    }
}

#[test]
fn group_characters_are_orthogonal() {
    for orders in [&[2][..], &[4], &[2, 2], &[2, 4], &[4, 4], &[2, 2, 2]] {
        let s = group_scheme(orders).unwrap();
        let p = s.exact_eigenmatrix().unwrap();
        let v = GaussRat::from_int(s.v() as i64);
        assert_eq!(p.mul(&p.conj_transpose()).unwrap(), ExactMatrix::scalar(p.rows(), &v));
    }
}

#[test]
fn idempotents_are_orthogonal_and_complete() {
    for s in [one_class(3).unwrap(), cycle_scheme(4).unwrap(), group_scheme(&[4]).unwrap(), hamming(3, 2).unwrap()] {
        let es = idempotents(&s).unwrap();
        let v = s.v();
        let j = ExactMatrix::from_fn(v, v, |_, _| GaussRat::from_frac(1, v as i64));
        assert_eq!(es[0], j);
        let mut sum = ExactMatrix::zeros(v, v);
        for (a, ea) in es.iter().enumerate() {
            sum = sum.add(ea).unwrap();
            for (b, eb) in es.iter().enumerate() {
                let prod = ea.mul(eb).unwrap();
                if a == b {
                    assert_eq!(&prod, ea);
                } else {
                    assert_eq!(prod, ExactMatrix::zeros(v, v));
                }
            }
        }
        assert_eq!(sum, ExactMatrix::identity(v));
    }
}

#[test]
fn symmetric_orbit_fusion_is_generalized_hamming() {
    use bosemesner::generalized_hamming::build_explicit;
    use bosemesner::scheme::{orbit_fusion, same_classes};
    for base in [one_class(2).unwrap(), one_class(3).unwrap(), cycle_scheme(4).unwrap(), group_scheme(&[4]).unwrap()] {
        for n in 2..=3usize {
            let mut swap: Vec<usize> = (0..n).collect();
            swap.swap(0, 1);
            let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            let orbit = orbit_fusion(&base, n, &[swap, cycle]).unwrap();
            let gh = build_explicit(&base, n).unwrap();
            assert_eq!(orbit.classes(), gh.classes());
            assert!(same_classes(orbit.table(), gh.table()).is_some());
        }
    }
}
