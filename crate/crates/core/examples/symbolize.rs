//! Equivariant symbol and quantization of a few operators, formal and specialised weights.

use projsym::projsym::{quantization_map, quantization_map_at, symbol_map, symbol_map_at};
use projsym::ring::{parse_coeff, rat, MultiIndex, Scalar};
use projsym::DiffOp;

fn main() -> projsym::Result<()> {
    let n = 2;
    let a = DiffOp::monomial(n, MultiIndex::new(vec![2, 0]), parse_coeff("x1", n)?);
    let s = symbol_map(&a);
    println!("A        = {a}");
    println!("sigma(A) = {s}");
    println!("latex    = {}", s.to_latex());
    assert_eq!(quantization_map(&s), a);

    let mut b = DiffOp::monomial(n, MultiIndex::new(vec![1, 1]), parse_coeff("x1^2*x2", n)?);
    b.add_term(MultiIndex::new(vec![0, 1]), &parse_coeff("x1^3", n)?);
    for w in [rat(0, 1), rat(1, 2), rat(1, 1)] {
        let sw = symbol_map_at(&b, &Scalar::constant(w.clone()));
        println!("l = {w}: sigma(B) = {sw}");
        assert_eq!(quantization_map_at(&sw, &Scalar::constant(w)), b);
    }
    Ok(())
}
