//! Transvectants on the line and the coefficients of the action on symbols of degree k.

use projsym::onedim::{
    bernoulli, bernoulli_decomposition, check_transvectant_equivariance, extract_correction_1d, t_display,
    transvectant, transvectant_literal, Density1D,
};
use projsym::ring::{parse_coeff, Scalar};

fn main() -> projsym::Result<()> {
    let phi = Density1D::new(parse_coeff("x1^3", 1)?, Scalar::lambda())?;
    let psi = Density1D::new(parse_coeff("x1^2 + 1", 1)?, Scalar::int(2))?;
    for m in 0..=3 {
        let j = transvectant(&phi, &psi, m);
        println!("J{m} = {}   (weight {})", j.coeff(), j.weight());
    }
    println!("equivariant: {}", check_transvectant_equivariance(3, transvectant)?.passed);
    println!("other binomial attachment equivariant: {}", check_transvectant_equivariance(1, transvectant_literal)?.passed);

    for s in 0..=4 {
        println!("B{s} = {}", bernoulli(s));
    }
    for k in 2..=5 {
        for j in 2..=k.min(4) {
            let c = extract_correction_1d(k, j)?;
            let Some(t) = c.t else {
                println!("k={k} j={j}: not a multiple of the transvectant");
                continue;
            };
            let dec = bernoulli_decomposition(&t, j).unwrap_or_default();
            let parts: Vec<String> = dec.iter().map(|(s, v)| format!("{v}*B{s}")).collect();
            let shown = t_display(k, j).map(|d| d.to_string()).unwrap_or_default();
            println!("t_{k}^{j} = {t} = {}   [closed form {shown}]", parts.join(" + "));
        }
    }
    Ok(())
}
