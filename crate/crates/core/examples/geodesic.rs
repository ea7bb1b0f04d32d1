//! Quantization of a quadratic Hamiltonian on half-densities.

use projsym::quantize_apps::{check_geodesic, geodesic_operator};
use projsym::projsym::quantization_map_at;
use projsym::ring::{parse_coeff, rat, CoeffPoly, MultiIndex, Scalar};
use projsym::SymbolPoly;

fn main() -> projsym::Result<()> {
    let n = 2;
    let h = SymbolPoly::from_terms(
        n,
        [(MultiIndex::new(vec![2, 0]), CoeffPoly::one(n)), (MultiIndex::new(vec![0, 2]), parse_coeff("1 + x2^2", n)?)],
    );
    let a = geodesic_operator(&h)?;
    println!("H   = {h}");
    println!("A_H = {a}");
    assert_eq!(a, quantization_map_at(&h, &Scalar::constant(rat(1, 2))));
    for n in 2..=3 {
        let r = check_geodesic(n, 2);
        println!("{}: passed={} ({} symbols)", r.name, r.passed, r.checked);
    }
    Ok(())
}
