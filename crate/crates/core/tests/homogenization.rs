mod common;

use common::*;
use proptest::prelude::*;
use weylstd::homogenize::{graded_degree, homogenize, restrict, strip_t, GradedDegree};
use weylstd::order::OrderContext;
use weylstd::HomogOperator;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn round_trip_and_degree(p in nonzero_weyl(2, 4, 4)) {
        let h = homogenize(&p).unwrap();
        prop_assert_eq!(restrict(&h), p.clone());
        prop_assert_eq!(
            graded_degree(&h).unwrap(),
            GradedDegree::Homogeneous(p.total_order().unwrap())
        );
        let (k, stripped) = strip_t(&h);
        prop_assert_eq!(k, 0);
        prop_assert_eq!(stripped, h);
    }

    #[test]
    fn multiplicative(p in nonzero_weyl(2, 3, 3), q in nonzero_weyl(2, 3, 3)) {
        let pq = p.mul(&q);
        prop_assert_eq!(homogenize(&pq).unwrap(), homogenize(&p).unwrap().mul(&homogenize(&q).unwrap()));
    }

    #[test]
    fn sum_law(p in nonzero_weyl(2, 4, 3), q in nonzero_weyl(2, 4, 3)) {
        let sum = p.add(&q);
        prop_assume!(!sum.is_zero());
        let (b, c, d) = (
            p.total_order().unwrap() as u32,
            q.total_order().unwrap() as u32,
            sum.total_order().unwrap() as u32,
        );
        let e = b.max(c);
        let lhs = homogenize(&sum).unwrap().mul_t(e - d);
        let rhs = homogenize(&p).unwrap().mul_t(e - b).add(&homogenize(&q).unwrap().mul_t(e - c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn projection_of_exponents(t in tiebreak(2), p in nonzero_weyl(2, 4, 4)) {
        for (_, lambda) in named_forms(2) {
            let ctx = OrderContext::new(lambda, t.clone()).unwrap();
            let h = homogenize(&p).unwrap();
            prop_assert_eq!(
                ctx.exp_homog(&h).unwrap().exponent.base,
                ctx.exp_delta(&p).unwrap().exponent
            );
        }
    }

    // for homogeneous H, H = t^k · h(H|_{t=1}) and π(exp(H)) = exp_δ(H|_{t=1})
    #[test]
    fn homogeneous_elements_are_t_multiples(ctx in context(2), h in homogeneous(2, 4, 4)) {
        let r = restrict(&h);
        prop_assume!(!r.is_zero());
        let (k, stripped) = strip_t(&h);
        prop_assert_eq!(homogenize(&r).unwrap(), stripped.clone());
        prop_assert_eq!(stripped.mul_t(k), h.clone());
        prop_assert_eq!(ctx.exp_homog(&h).unwrap().exponent.base, ctx.exp_delta(&r).unwrap().exponent);
    }
}

#[test]
fn worked_homogenizations() {
    let h = homogenize(&op("D1*x1", 1)).unwrap();
    let ctx = OrderContext::with_default_tiebreak(weylstd::LinearForm::order(1));
    assert_eq!(ctx.format_homog(&h), "x1*D1 + t^2");
    assert!(homogenize(&op("0", 1)).is_err());
    let mixed = HomogOperator::from_terms(
        homogenize(&op("x1^2", 1))
            .unwrap()
            .terms()
            .iter()
            .map(|(e, c)| (e.clone(), c.clone()))
            .chain(HomogOperator::t_power(1, 1, &()).into_terms()),
    );
    assert_eq!(graded_degree(&mixed).unwrap(), GradedDegree::Mixed);
}
