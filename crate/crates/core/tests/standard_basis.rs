mod common;

use common::*;
use proptest::prelude::*;
use weylstd::basis::{
    buchberger, in_staircase, is_standard_basis, minimal_staircase, semisyzygy, std_basis_pipeline,
    BuchbergerOptions, StandardBasisReport,
};
use weylstd::division::reduces_to_zero;
use weylstd::homogenize::{homogenize, restrict};
use weylstd::oracle::{compare_with_pipeline, staircase_oracle, DEFAULT_MAX_MATRIX};
use weylstd::order::{LinearForm, MonomialOrder, OrderContext, TieBreak};
use weylstd::parse::parse_operator;
use weylstd::{Error, Exponent, Fp, Prime, Rational, WeylOperator};

fn e1(a: u32, b: u32) -> Exponent {
    Exponent::new(vec![a], vec![b])
}

/// Every invariant a pipeline run must satisfy.
fn check_report(
    ctx: &OrderContext,
    gens: &[WeylOperator<Rational>],
    report: &StandardBasisReport<Rational>,
) {
    let basis = &report.homog_basis;
    assert!(basis.iter().all(|g| g.is_homogeneous() && !g.is_zero()));
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = semisyzygy(ctx, &basis[i], &basis[j]).unwrap();
            assert!(
                reduces_to_zero(ctx, &s, basis).unwrap(),
                "S({i},{j}) does not reduce"
            );
        }
    }
    for (g, (p, sym)) in basis
        .iter()
        .zip(report.delta_basis.iter().zip(&report.symbols))
    {
        assert_eq!(&restrict(g), p);
        let projected = ctx.exp_homog(g).unwrap().exponent.base;
        assert_eq!(projected, ctx.exp_delta(p).unwrap().exponent);
        assert_eq!(projected, ctx.exp_tiebreak(sym).unwrap().exponent);
    }
    // the generators themselves lie in the ideal, so their exponents are in the staircase
    for g in gens.iter().filter(|g| !g.is_zero()) {
        assert!(in_staircase(
            &report.staircase,
            &ctx.exp_delta(g).unwrap().exponent
        ));
        assert!(reduces_to_zero(ctx, &homogenize(g).unwrap(), basis).unwrap());
    }
    let exps: Vec<Exponent> = report
        .delta_basis
        .iter()
        .map(|p| ctx.exp_delta(p).unwrap().exponent)
        .collect();
    assert_eq!(minimal_staircase(&exps), report.staircase);
}

fn check_membership(gens: &[WeylOperator<Rational>], report: &StandardBasisReport<Rational>) {
    let rows = report.membership.as_ref().expect("cofactors requested");
    for (p, row) in report.delta_basis.iter().zip(rows) {
        let combo = row
            .iter()
            .zip(gens)
            .fold(WeylOperator::zero(), |acc, (c, g)| acc.add(&c.mul(g)));
        assert_eq!(&combo, p);
    }
}

fn tracked() -> BuchbergerOptions {
    BuchbergerOptions {
        degree_cap: Some(16),
        track_cofactors: true,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_ideals_in_one_variable(
        ctx in context(1),
        gens in proptest::collection::vec(nonzero_weyl(1, 3, 3), 1..=3),
    ) {
        match std_basis_pipeline(&ctx, &gens, &tracked()) {
            Ok(report) => {
                check_report(&ctx, &gens, &report);
                check_membership(&gens, &report);
            }
            Err(Error::DegreeCapReached { .. }) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn random_ideals_in_two_variables(
        ctx in context(2),
        gens in proptest::collection::vec(nonzero_weyl(2, 2, 2), 1..=2),
    ) {
        match std_basis_pipeline(&ctx, &gens, &tracked()) {
            Ok(report) => {
                check_report(&ctx, &gens, &report);
                check_membership(&gens, &report);
            }
            Err(Error::DegreeCapReached { .. }) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    // Enlarging the truncation degree never loses leading exponents.
    #[test]
    fn oracle_is_monotone(ctx in context(1), gens in proptest::collection::vec(nonzero_weyl(1, 2, 2), 1..=2)) {
        let mut previous = None;
        for d in 2..=6 {
            let w = staircase_oracle(&ctx, &gens, d, DEFAULT_MAX_MATRIX).unwrap();
            if let Some(prev) = previous.replace(w.leading_exponents.clone()) {
                prop_assert!(prev.is_subset(&w.leading_exponents));
            }
        }
    }

    #[test]
    fn oracle_agrees_with_pipeline(ctx in context(1), gens in proptest::collection::vec(nonzero_weyl(1, 3, 2), 1..=2)) {
        let report = match std_basis_pipeline(&ctx, &gens, &tracked()) {
            Ok(r) => r,
            Err(Error::DegreeCapReached { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let witness = staircase_oracle(&ctx, &gens, 7, DEFAULT_MAX_MATRIX).unwrap();
        let cmp = compare_with_pipeline(&ctx, &gens, &report, &witness).unwrap();
        prop_assert!(cmp.agrees(), "{:?}", cmp);
    }
}

#[test]
fn x_and_d_generate_everything() {
    let ctx = OrderContext::with_default_tiebreak(LinearForm::order(1));
    let gens = ops(&["x1", "D1"], 1);
    let report = std_basis_pipeline(&ctx, &gens, &tracked()).unwrap();
    check_report(&ctx, &gens, &report);
    check_membership(&gens, &report);
    assert_eq!(ctx.format_homog(report.homog_basis.last().unwrap()), "t^2");
    assert!(report.symbols.iter().any(|s| s == &op("1", 1)));
    assert_eq!(report.staircase, vec![e1(0, 0)]);
}

// P is a standard basis by itself, but does not generate the ideal it
// determines the staircase of.
#[test]
fn unit_symbol_example() {
    let ctx = OrderContext::new(
        LinearForm::v_filtration(1),
        TieBreak::new(MonomialOrder::DegLex, vec![0, 1]).unwrap(),
    )
    .unwrap();
    let p = op("1 + x1^2*D1", 1);
    assert_eq!(ctx.symbol(&p).unwrap(), op("1", 1));
    let report = std_basis_pipeline(&ctx, std::slice::from_ref(&p), &tracked()).unwrap();
    check_report(&ctx, std::slice::from_ref(&p), &report);
    assert_eq!(report.staircase, vec![e1(0, 0)]);
    assert_eq!(report.delta_basis, vec![p]);
}

#[test]
fn worked_ideals_under_several_filtrations() {
    let cases: Vec<(LinearForm, usize, Vec<&str>)> = vec![
        (LinearForm::order(1), 1, vec!["x1*D1 - 2", "D1^2 + x1"]),
        (LinearForm::bernstein(1), 1, vec!["x1^2"]),
        (
            LinearForm::v_filtration(2),
            2,
            vec!["D1 - x2*D2", "x1*D2 + 1"],
        ),
        (
            LinearForm::order(2),
            2,
            vec!["x1*D1 + x2*D2 + 1", "D1^2 - D2"],
        ),
        (
            LinearForm::l_filtration(2, 1, 1).unwrap(),
            2,
            vec!["x1 + x2^2*D2", "D1*D2"],
        ),
        (
            LinearForm::bernstein(2),
            2,
            vec!["x1*D2 - x2*D1", "x1*D1 + x2*D2", "D1^2 + D2^2"],
        ),
    ];
    for (lambda, n, texts) in cases {
        let ctx = OrderContext::with_default_tiebreak(lambda);
        let gens = ops(&texts, n);
        let report = std_basis_pipeline(&ctx, &gens, &tracked()).unwrap();
        check_report(&ctx, &gens, &report);
        check_membership(&gens, &report);
    }
}

#[test]
fn prime_field_run() {
    let p = Prime::new(7).unwrap();
    let ctx = OrderContext::with_default_tiebreak(LinearForm::order(1));
    // D^7 is central modulo 7
    let gens: Vec<WeylOperator<Fp>> = ["D1^7 + x1", "x1*D1"]
        .iter()
        .map(|t| parse_operator(t, 1, &p).unwrap())
        .collect();
    let report = std_basis_pipeline(&ctx, &gens, &BuchbergerOptions::default()).unwrap();
    assert!(is_standard_basis(&ctx, &report.homog_basis).unwrap());
    assert!(report.homog_basis.iter().all(|g| g.is_homogeneous()));
}

#[test]
fn completion_rejects_bad_input() {
    let ctx = OrderContext::with_default_tiebreak(LinearForm::order(1));
    assert_eq!(
        std_basis_pipeline::<Rational>(
            &ctx,
            &[WeylOperator::zero()],
            &BuchbergerOptions::default()
        )
        .unwrap_err(),
        Error::ZeroIdeal
    );
    assert!(matches!(
        std_basis_pipeline(&ctx, &ops(&["x1*x2"], 2), &BuchbergerOptions::default()),
        Err(Error::DimensionMismatch { .. })
    ));
    let capped = BuchbergerOptions {
        degree_cap: Some(2),
        track_cofactors: false,
    };
    assert!(matches!(
        std_basis_pipeline(&ctx, &ops(&["x1*D1 - 2", "D1^2 + x1"], 1), &capped),
        Err(Error::DegreeCapReached { cap: 2, .. })
    ));
    let inhomog = homogenize(&op("x1", 1))
        .unwrap()
        .add(&homogenize(&op("D1^2", 1)).unwrap());
    assert!(buchberger(&ctx, &[inhomog]).is_err());
}
