//! The star product induced by the equivariant quantization.

use projsym::quantize_apps::{check_star, check_star_associativity, star_product, STAR_NORMALIZATION_NOTE};
use projsym::ring::{parse_coeff, MultiIndex, Scalar};
use projsym::symbols::poisson_bracket;
use projsym::SymbolPoly;

fn main() -> projsym::Result<()> {
    let n = 1;
    let f = SymbolPoly::monomial(n, MultiIndex::new(vec![2]), parse_coeff("x1", n)?);
    let g = SymbolPoly::monomial(n, MultiIndex::new(vec![1]), parse_coeff("x1^2", n)?);
    let l = Scalar::lambda();
    let fg = star_product(&f, &g, &l)?;
    for (i, c) in fg.terms().iter().enumerate() {
        println!("C{i}(F,G) = {c}");
    }
    let gf = star_product(&g, &f, &l)?;
    println!("C1(F,G) - C1(G,F) = {}", &fg.grade(1) - &gf.grade(1));
    println!("{{F,G}}            = {}", poisson_bracket(&f, &g)?);
    println!("{STAR_NORMALIZATION_NOTE}");
    for n in 1..=2 {
        let r = check_star(n, 2, &l);
        let a = check_star_associativity(n, 3, &l);
        println!("n={n}: C0/C1 checks passed={} ({}), associativity passed={} ({})", r.passed, r.checked, a.passed, a.checked);
    }
    Ok(())
}
