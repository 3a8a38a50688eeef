use proptest::prelude::*;

use rootchi::cyclo::{eval_at_root, eval_half_at_root, CycloNum};
use rootchi::laurent::{rat, LaurentPoly};
use rootchi::linalg;

fn poly(vars: &'static [&'static str], half: bool) -> impl Strategy<Value = LaurentPoly> {
    let exp = if half { -6i64..=6 } else { -3i64..=3 };
    prop::collection::vec((prop::collection::vec(exp, vars.len()), -4i64..=4), 0..6).prop_map(move |terms| {
        LaurentPoly::from_terms(
            vars,
            terms.into_iter().map(|(e, c)| (e.into_iter().map(|x| if half { x } else { 2 * x }).collect(), rat(c))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly(&["a", "z"], false), q in poly(&["a", "z"], false), r in poly(&["a", "z"], false)) {
        prop_assert_eq!(p.clone() + q.clone(), q.clone() + p.clone());
        prop_assert_eq!(p.clone() * q.clone(), q.clone() * p.clone());
        prop_assert_eq!((p.clone() * q.clone()) * r.clone(), p.clone() * (q.clone() * r.clone()));
        prop_assert_eq!(p.clone() * (q.clone() + r.clone()), p.clone() * q.clone() + p.clone() * r.clone());
        prop_assert!((p.clone() - p.clone()).is_zero());
    }

    #[test]
    fn exact_division_round_trip(p in poly(&["a", "z"], false), q in poly(&["a", "z"], false)) {
        prop_assume!(!q.is_zero());
        let prod = p.clone() * q.clone();
        prop_assert_eq!(prod.exact_div(&q).unwrap(), p);
    }

    #[test]
    fn text_round_trip(p in poly(&["t"], true)) {
        let back = LaurentPoly::parse_with_vars(&p.to_string(), &["t"]).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(&["q"], false), q in poly(&["q"], false), n in 1u32..8, k in -5i64..5) {
        let (ep, eq) = (eval_at_root(&p, n, k).unwrap(), eval_at_root(&q, n, k).unwrap());
        prop_assert_eq!(eval_at_root(&(p.clone() * q.clone()), n, k).unwrap(), ep.mul(&eq));
        prop_assert_eq!(eval_at_root(&(p + q), n, k).unwrap(), ep.add(&eq));
    }

    #[test]
    fn half_evaluation_is_a_homomorphism(p in poly(&["t"], true), q in poly(&["t"], true), n in 1u32..8, k in -9i64..9) {
        let prod = eval_half_at_root(&(p.clone() * q.clone()), n, k).unwrap();
        prop_assert_eq!(prod, eval_half_at_root(&p, n, k).unwrap().mul(&eval_half_at_root(&q, n, k).unwrap()));
    }

    #[test]
    fn cyclotomic_field(n in 1u32..10, a in prop::collection::vec(-3i64..=3, 0..8), b in prop::collection::vec(-3i64..=3, 0..8)) {
        let x = CycloNum::from_coeffs(2 * n, a.into_iter().map(rat).collect());
        let y = CycloNum::from_coeffs(2 * n, b.into_iter().map(rat).collect());
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        if !y.is_zero() {
            prop_assert_eq!(x.mul(&y).div(&y).unwrap(), x.clone());
        }
        prop_assert_eq!(x.embed(4 * n).mul(&y), x.mul(&y));
        prop_assert_eq!(CycloNum::root(n, 2 * n as i64), CycloNum::one(2 * n));
    }

    #[test]
    fn rank_nullity(rows in 0usize..6, cols in 0usize..6, seed in prop::collection::vec(-2i64..=2, 36)) {
        let m: linalg::Mat = (0..rows).map(|i| (0..cols).map(|j| rat(seed[i * 6 + j])).collect()).collect();
        let ns = linalg::nullspace(&m, cols);
        prop_assert_eq!(linalg::rank(&m) + ns.len(), cols);
        for v in &ns {
            prop_assert!(linalg::mat_vec(&m, v).iter().all(|x| *x == rat(0)));
        }
    }
}
