use proptest::prelude::*;

use projsym::operators::{ad_action, commutator, compose, formal_adjoint, DiffOp, VectorField};
use projsym::projsym::{quantization_map, symbol_map};
use projsym::ring::{int, parse_coeff, CoeffPoly, MultiIndex, Scalar};
use projsym::symbols::{lie_derivative_symbol, poisson_bracket, SymbolPoly};

const N: usize = 2;

fn coeff(max_deg: u32, lambda: bool) -> impl Strategy<Value = CoeffPoly> {
    let lam = if lambda { 2usize } else { 0 };
    prop::collection::vec(((0..=max_deg, 0..=max_deg), -3i64..=3, 0..=lam), 0..4).prop_map(|ts| {
        CoeffPoly::from_terms(
            N,
            ts.into_iter().map(|((a, b), c, p)| {
                let mut s = vec![int(0); p + 1];
                s[p] = int(c);
                (MultiIndex::new(vec![a, b]), Scalar::from_coeffs(s))
            }),
        )
    })
}

fn field() -> impl Strategy<Value = VectorField> {
    (coeff(3, false), coeff(3, false)).prop_map(|(a, b)| VectorField::new(vec![a, b]).unwrap())
}

fn fiber_terms() -> impl Strategy<Value = Vec<((u32, u32), CoeffPoly)>> {
    prop::collection::vec(((0u32..=2, 0u32..=2), coeff(2, false)), 1..4)
}

fn symbol() -> impl Strategy<Value = SymbolPoly> {
    fiber_terms().prop_map(|ts| SymbolPoly::from_terms(N, ts.into_iter().map(|((a, b), c)| (MultiIndex::new(vec![a, b]), c))))
}

fn operator() -> impl Strategy<Value = DiffOp> {
    fiber_terms().prop_map(|ts| DiffOp::from_terms(N, ts.into_iter().map(|((a, b), c)| (MultiIndex::new(vec![a, b]), c))))
}

fn xi_form(x: &VectorField) -> SymbolPoly {
    let mut s = SymbolPoly::zero(N);
    for i in 0..N {
        s.add_term(MultiIndex::unit(N, i), x.comp(i));
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coefficient_ring_axioms(a in coeff(2, true), b in coeff(2, true), c in coeff(2, true)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn text_form_round_trips(a in coeff(3, true)) {
        prop_assert_eq!(parse_coeff(&a.to_string(), N).unwrap(), a);
    }

    #[test]
    fn operator_composition_is_associative(a in operator(), b in operator(), c in operator()) {
        let ab_c = compose(&compose(&a, &b).unwrap(), &c).unwrap();
        let a_bc = compose(&a, &compose(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn adjoint_is_an_antihomomorphism(a in operator(), b in operator()) {
        let lhs = formal_adjoint(&compose(&a, &b).unwrap());
        let rhs = compose(&formal_adjoint(&b), &formal_adjoint(&a)).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(formal_adjoint(&formal_adjoint(&a)), a);
    }

    #[test]
    fn poisson_jacobi(f in symbol(), g in symbol(), h in symbol()) {
        let pb = |a: &SymbolPoly, b: &SymbolPoly| poisson_bracket(a, b).unwrap();
        let sum = &(&pb(&f, &pb(&g, &h)) + &pb(&g, &pb(&h, &f))) + &pb(&h, &pb(&f, &g));
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn lie_derivative_is_the_hamiltonian_flow(x in field(), p in symbol()) {
        prop_assert_eq!(lie_derivative_symbol(&x, &p).unwrap(), poisson_bracket(&xi_form(&x), &p).unwrap());
    }

    #[test]
    fn lie_derivative_represents_the_bracket(x in field(), y in field(), p in symbol()) {
        let l = |v: &VectorField, q: &SymbolPoly| lie_derivative_symbol(v, q).unwrap();
        let lhs = l(&x.bracket(&y).unwrap(), &p);
        let rhs = &l(&x, &l(&y, &p)) - &l(&y, &l(&x, &p));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ad_action_represents_the_bracket(x in field(), y in field(), a in operator()) {
        let ad = |v: &VectorField, b: &DiffOp| ad_action(v, b).unwrap();
        let lhs = ad(&x.bracket(&y).unwrap(), &a);
        let rhs = &ad(&x, &ad(&y, &a)) - &ad(&y, &ad(&x, &a));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quantization_inverts_the_symbol_map(a in operator(), p in symbol()) {
        prop_assert_eq!(quantization_map(&symbol_map(&a)), a);
        prop_assert_eq!(symbol_map(&quantization_map(&p)), p);
    }

    #[test]
    fn commutator_principal_symbol_is_the_bracket(f in symbol(), g in symbol()) {
        // top-degree part of σ([Q(f), Q(g)]) is the bracket of the top parts
        let (Some(df), Some(dg)) = (f.degree(), g.degree()) else { return Ok(()) };
        let top = df + dg;
        prop_assume!(top >= 1);
        let c = commutator(&quantization_map(&f), &quantization_map(&g)).unwrap();
        let s = symbol_map(&c).homogeneous(top - 1);
        let pb = poisson_bracket(&f.homogeneous(df), &g.homogeneous(dg)).unwrap();
        prop_assert_eq!(s, pb);
    }
}
