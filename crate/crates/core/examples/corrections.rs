//! First and second corrections read off the module action and fitted to the ansatz.

use projsym::cocycles::{
    agree_on, ansatz_samples, c2_coeffs, extract_gamma, fit_ansatz, gamma2_coeffs, gamma2_exact, Gamma1,
};
use projsym::ring::rat;
use projsym::sample::DEFAULT_SEED;

fn main() -> projsym::Result<()> {
    let (k, n) = (3, 2);
    let samples = ansatz_samples(n, k, 1, 3, DEFAULT_SEED);
    let g1 = extract_gamma(1, k, n)?;
    println!("first correction matches the closed form: {}", agree_on(&g1, &Gamma1 { k, n }, &samples)?);
    for (name, c) in fit_ansatz(&g1, &samples)?.named() {
        println!("  {name} = {c}");
    }

    let samples = ansatz_samples(n, k, 2, 3, DEFAULT_SEED);
    let fitted = fit_ansatz(&extract_gamma(2, k, n)?, &samples)?;
    println!("second correction, fitted:");
    for (name, c) in fitted.named() {
        println!("  {name} = {c}");
    }
    let (pre, exact) = gamma2_exact(k, n)?;
    let (pre_shown, shown) = gamma2_coeffs(k, n)?;
    println!("matches gamma2_exact: {}", fitted == exact.scale(&pre));
    println!("matches the displayed coefficients: {}", fitted == shown.scale(&pre_shown));
    let at_half = fitted.eval_lambda(&rat(1, 2)).ratio_to(&c2_coeffs(k, n)?);
    println!("at l = 1/2: {} * c2", at_half.map(|c| c.to_string()).unwrap_or_else(|| "not proportional".into()));
    Ok(())
}
