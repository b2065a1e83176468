use proptest::prelude::*;

use leviform::algebra::ExteriorForm;
use leviform::levi::{complexify, is_levi_flat, levi_form_restriction_split, levi_one_form, differential};
use leviform::local::{local_algebra_basis, milnor_number, standard_basis, LocalOrder};
use leviform::parser::{parse_holomorphic, parse_real_analytic};
use leviform::quasihomogeneous::{find_weights, newton_support, semiqh_split, weighted_degree};
use leviform::{BiPoly, Error, ExponentVector, GaussRational, HermitianPoly, Limits, Poly};
use num_rational::BigRational;
use num_traits::One;

fn coeff() -> impl Strategy<Value = GaussRational> {
    (-4i64..=4, -2i64..=2, 1i64..=3).prop_map(|(re, im, den)| {
        GaussRational::new(BigRational::new(re.into(), den.into()), BigRational::new(im.into(), den.into()))
    })
}

fn poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, nvars), coeff()), 0..=max_terms).prop_map(
        move |terms| Poly::from_terms(nvars, terms.into_iter().map(|(e, c)| (ExponentVector::new(e), c))).unwrap(),
    )
}

/// Holomorphic polynomial vanishing at the origin.
fn vanishing_poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    poly(nvars, max_deg, max_terms).prop_map(|p| p.filter_terms(|e, _| !e.is_constant()))
}

/// Random real-valued `G + G*` with `G` a polynomial in `(z, w)`.
fn hermitian(nvars: usize) -> impl Strategy<Value = HermitianPoly> {
    poly(2 * nvars, 2, 4).prop_map(move |g| {
        let g = g.filter_terms(|e, _| !e.is_constant());
        let b = BiPoly::new(nvars, g).unwrap();
        let star = leviform::levi::reality_conjugate(&b);
        HermitianPoly::from_bipoly(&BiPoly::new(nvars, b.poly() + star.poly()).unwrap()).unwrap()
    })
}

fn elementary(n: usize, i: usize, j: usize, c: i64) -> Vec<Vec<GaussRational>> {
    let mut m: Vec<Vec<GaussRational>> = (0..n)
        .map(|r| (0..n).map(|s| GaussRational::from_integer((r == s) as i64)).collect())
        .collect();
    m[i][j] = GaussRational::from_integer(c);
    m
}

fn one_form(half: usize) -> impl Strategy<Value = ExteriorForm> {
    prop::collection::vec((0..2 * half, poly(2 * half, 1, 2)), 1..=3)
        .prop_map(move |ts| ExteriorForm::from_terms(half, 1, ts.into_iter().map(|(k, p)| (vec![k], p))).unwrap())
}

fn two_form(half: usize) -> impl Strategy<Value = ExteriorForm> {
    prop::collection::vec((0..2 * half, 0..2 * half, poly(2 * half, 1, 2)), 1..=3).prop_map(move |ts| {
        ExteriorForm::from_terms(half, 2, ts.into_iter().map(|(a, b, p)| (vec![a, b], p))).unwrap()
    })
}

/// `x^a + y^b` plus random terms strictly above its weighted diagonal.
fn semiqh_curve() -> impl Strategy<Value = (Poly, Poly, u32, u32)> {
    (2u32..=5, 2u32..=5).prop_flat_map(|(a, b)| {
        let above = prop::collection::vec((0..=a, 0..=b, coeff()), 0..=3).prop_map(move |ts| {
            let terms = ts
                .into_iter()
                .filter(|(i, j, _)| i * b + j * a > a * b)
                .map(|(i, j, c)| (ExponentVector::new(vec![i, j]), c));
            Poly::from_terms(2, terms).unwrap()
        });
        above.prop_map(move |tail| {
            let q = parse_holomorphic(&format!("x^{a} + y^{b}"), 2).unwrap();
            (q, tail, a, b)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in poly(2, 3, 4), b in poly(2, 3, 4), c in poly(2, 3, 4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(2), a.clone());
    }

    #[test]
    fn partials_commute(f in poly(3, 4, 5), i in 0usize..3, j in 0usize..3) {
        prop_assert_eq!(f.partial(i).partial(j), f.partial(j).partial(i));
    }

    #[test]
    fn substitution_round_trip(
        f in poly(3, 3, 4),
        ops in prop::collection::vec((0usize..3, 0usize..3, -3i64..=3), 1..5),
    ) {
        let ops: Vec<_> = ops.into_iter().filter(|(i, j, _)| i != j).collect();
        let mut g = f.clone();
        for &(i, j, c) in &ops {
            g = g.substitute_linear(&elementary(3, i, j, c)).unwrap();
        }
        for &(i, j, c) in ops.iter().rev() {
            g = g.substitute_linear(&elementary(3, i, j, -c)).unwrap();
        }
        prop_assert_eq!(g, f);
    }

    #[test]
    fn graded_anticommutativity(a in one_form(2), b in one_form(2), c in two_form(2)) {
        // 1-forms anticommute, 2-forms commute with 1-forms
        prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap().scale(&GaussRational::from_integer(-1)));
        prop_assert_eq!(a.wedge(&c).unwrap(), c.wedge(&a).unwrap());
        prop_assert!(a.wedge(&a).unwrap().is_zero());
    }

    #[test]
    fn json_round_trip(f in poly(3, 4, 6)) {
        let s = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<Poly>(&s).unwrap(), f);
    }

    #[test]
    fn print_parse_round_trip(f in poly(2, 4, 6), g in poly(3, 3, 5)) {
        prop_assert_eq!(parse_holomorphic(&f.to_string(), 2).unwrap(), f);
        prop_assert_eq!(parse_holomorphic(&g.to_string(), 3).unwrap(), g);
    }

    #[test]
    fn hermitian_round_trips(f in hermitian(2)) {
        prop_assume!(!f.is_zero());
        prop_assert_eq!(parse_real_analytic(&f.to_string(), 2).unwrap(), f.clone());
        prop_assert_eq!(HermitianPoly::from_bipoly(&complexify(&f)).unwrap(), f.clone());
        let s = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<HermitianPoly>(&s).unwrap(), f);
    }

    #[test]
    fn real_valued_at_points(f in hermitian(2), pt in prop::collection::vec(coeff(), 2)) {
        prop_assert!(f.eval(&pt).is_real());
    }

    #[test]
    fn non_real_inputs_rejected(f in hermitian(2)) {
        prop_assume!(!f.is_zero());
        let rotated = complexify(&f).poly().scale(&GaussRational::i());
        let rejected = HermitianPoly::from_bipoly(&BiPoly::new(2, rotated).unwrap());
        prop_assert!(matches!(rejected, Err(Error::NotRealValued { .. })), "{:?}", rejected);
        let text = format!("i*({f})");
        let parsed = parse_real_analytic(&text, 2);
        prop_assert!(matches!(parsed, Err(Error::NotRealValued { .. })), "{:?}", parsed);
    }

    #[test]
    fn levi_one_form_identity(f in hermitian(2)) {
        // η_ℂ + i·dF_ℂ = 2i·α
        let fc = complexify(&f);
        let (alpha, _) = levi_form_restriction_split(&fc);
        let i = GaussRational::i();
        let lhs = levi_one_form(&fc).add(&differential(&fc).scale(&i)).unwrap();
        prop_assert_eq!(lhs, alpha.scale(&(&i * &GaussRational::from_integer(2))));
    }

    #[test]
    fn real_parts_are_flat(h in vanishing_poly(3, 3, 4)) {
        prop_assume!(!h.is_zero());
        let f = HermitianPoly::real_part(&h).unwrap();
        prop_assume!(!f.is_zero());
        prop_assert!(is_levi_flat(&f).unwrap().is_flat());
    }

    #[test]
    fn semiqh_reassembly((q, tail, a, b) in semiqh_curve()) {
        let f = &q + &tail;
        let s = semiqh_split(&f, Limits::default()).unwrap();
        prop_assert_eq!(&s.q + &s.fprime, f.clone());
        prop_assert_eq!(&s.q, &q);
        let one = BigRational::one();
        prop_assert!(s.fprime.terms().all(|(e, _)| weighted_degree(e, &s.weights) > one));
        // μ of a semiquasihomogeneous germ is that of its principal part
        let mu = milnor_number(&f, Limits::default()).unwrap().finite().unwrap();
        prop_assert_eq!(mu, ((a - 1) * (b - 1)) as usize);
    }

    #[test]
    fn weights_are_exact(pts in prop::collection::btree_set(prop::collection::vec(0u32..=5, 3), 1..=4)) {
        let terms = pts.iter().map(|e| (ExponentVector::new(e.clone()), GaussRational::from_integer(1)));
        let f = Poly::from_terms(3, terms).unwrap();
        if let Ok(w) = find_weights(&newton_support(&f)) {
            prop_assert!(w.alpha.iter().all(|a| *a > BigRational::default()));
            prop_assert!(f.terms().all(|(e, _)| weighted_degree(e, &w) == BigRational::one()));
        }
    }

    #[test]
    fn homogeneous_weights(f in vanishing_poly(3, 4, 5), k in 1u32..=5) {
        let h = f.homogeneous_part(k);
        prop_assume!(!h.is_zero());
        let w = find_weights(&newton_support(&h)).unwrap();
        let expected = BigRational::new(1.into(), k.into());
        // uniquely determined coordinates must be 1/k; all points on the diagonal
        prop_assert!(h.terms().all(|(e, _)| weighted_degree(e, &w) == BigRational::one()));
        if !w.ambiguous {
            prop_assert!(w.alpha.iter().all(|a| *a == expected));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn staircase_closure((q, tail, _a, _b) in semiqh_curve()) {
        let b = local_algebra_basis(&(&q + &tail), Limits::default()).unwrap();
        for m in &b.monomials {
            for v in 0..2 {
                if m[v] > 0 {
                    let mut d = m.as_slice().to_vec();
                    d[v] -= 1;
                    prop_assert!(b.monomials.contains(&ExponentVector::new(d)));
                }
            }
        }
    }

    #[test]
    fn ideal_members_reduce_to_zero(
        a in poly(2, 3, 3),
        b in poly(2, 3, 3),
        r in poly(2, 2, 3),
    ) {
        let f = parse_holomorphic("x^2*y + y^4 + x^3*y^2", 2).unwrap();
        let order = LocalOrder::new(2);
        let sb = standard_basis(&f.gradient(), &order, Limits::default()).unwrap();
        let member = &(&a * &f.partial(0)) + &(&b * &f.partial(1));
        prop_assert!(sb.normal_form(&member).is_zero());
        // normal forms only see the class modulo the ideal
        prop_assert_eq!(sb.normal_form(&(&member + &r)), sb.normal_form(&r));
    }
}
