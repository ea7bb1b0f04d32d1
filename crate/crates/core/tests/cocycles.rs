use projsym::cocycles::*;
use projsym::ring::{rat, Scalar};
use projsym::sample;

#[test]
fn extracted_first_correction_is_the_closed_form() {
    for k in [2, 3] {
        for n in [2, 3] {
            let s = ansatz_samples(n, k, 1, 2, 5);
            let ex = extract_gamma(1, k, n).unwrap();
            assert!(agree_on(&ex, &Gamma1 { k, n }, &s).unwrap(), "k={k} n={n}");
        }
    }
}

#[test]
fn fitted_second_correction() {
    for (k, n) in [(3, 2), (2, 2), (4, 2), (3, 3)] {
        let s = ansatz_samples(n, k, 2, 3, 17);
        let fitted = fit_ansatz(&extract_gamma(2, k, n).unwrap(), &s).unwrap();
        let (pre, exact) = gamma2_exact(k, n).unwrap();
        assert_eq!(fitted, exact.scale(&pre), "k={k} n={n}");
        let (pre, shown) = gamma2_coeffs(k, n).unwrap();
        assert_ne!(fitted, shown.scale(&pre), "k={k} n={n}");
    }
}

#[test]
fn sampled_classification_matches_system() {
    for (k, p, n) in [(3, 2, 2), (2, 2, 2), (3, 1, 2), (1, 1, 2), (2, 1, 3), (4, 3, 2)] {
        let sys = solve_sys(k, p, n, false).unwrap();
        let brute = classify_by_sampling(k, p, n, false, sample::DEFAULT_SEED).unwrap();
        assert_eq!(sys.dimension, brute.dimension, "(k,p,n)=({k},{p},{n})");
    }
    for (k, p, n) in [(3, 2, 2), (4, 3, 2)] {
        let sys = solve_sys(k, p, n, true).unwrap();
        let brute = classify_by_sampling(k, p, n, true, sample::DEFAULT_SEED).unwrap();
        assert_eq!(sys.dimension, brute.dimension, "cocycle (k,p,n)=({k},{p},{n})");
    }
}

#[test]
fn c2_is_a_cocycle_and_perturbation_is_not() {
    let mut rng = sample::rng(3);
    let pairs: Vec<_> =
        (0..3).map(|_| (sample::random_field(&mut rng, 2, 3, 2), sample::random_field(&mut rng, 2, 3, 2))).collect();
    let syms: Vec<_> = (0..2).map(|_| sample::random_symbol(&mut rng, 2, 3, 2, 2)).collect();
    let c2 = c2_coeffs(3, 2).unwrap();
    assert!(check_cocycle(&c2, &pairs, &syms).unwrap().passed);
    let mut v = c2.unknowns();
    v[2] = &v[2] + &Scalar::one();
    let bad = GammaAnsatz::from_unknowns(2, 3, 2, &v).unwrap();
    assert!(!check_cocycle(&bad, &pairs, &syms).unwrap().passed);
    assert!(check_tensor_cocycle(&pairs).unwrap().passed);
}

#[test]
fn third_correction_vanishes_on_half_densities() {
    let s = ansatz_samples(2, 4, 3, 2, 9);
    let ex = extract_gamma(3, 4, 2).unwrap();
    for (x, a) in &s {
        assert!(ex.eval(x, a).unwrap().eval_lambda(&rat(1, 2)).is_zero());
    }
}
