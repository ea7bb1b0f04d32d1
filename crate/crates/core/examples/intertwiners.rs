//! Isomorphisms between modules of second-order operators on densities of different weights.

use projsym::quantize_apps::{
    anticommutator_closed_form, check_intertwiner, check_lie_form, intertwiner_factors, intertwiner_l2,
    symbol_anticommutator,
};
use projsym::ring::{parse_coeff, rat, MultiIndex};
use projsym::sample::DEFAULT_SEED;
use projsym::{DiffOp, VectorField};

fn main() -> projsym::Result<()> {
    let n = 2;
    let (from, to) = (rat(1, 3), rat(2, 5));
    let f = intertwiner_factors(&from, &to)?;
    println!("factors by degree 2, 1, 0: {}, {}, {}", f[0], f[1], f[2]);
    let a = DiffOp::monomial(n, MultiIndex::new(vec![1, 1]), parse_coeff("x1^2", n)?);
    println!("{a}  |->  {}", intertwiner_l2(&a, &from, &to)?);
    for printed in [false, true] {
        let r = check_intertwiner(n, &from, &to, DEFAULT_SEED, printed)?;
        println!("{}: passed={}", r.name, r.passed);
    }
    println!("Lie-derivative form agrees: {}", check_lie_form(n, &from, &to, DEFAULT_SEED)?.passed);

    let x = VectorField::new(vec![parse_coeff("x1^2", n)?, parse_coeff("x2", n)?])?;
    let y = VectorField::new(vec![parse_coeff("x2", n)?, parse_coeff("x1*x2", n)?])?;
    let s = symbol_anticommutator(&x, &y)?;
    println!("sigma([L_X, L_Y]+) = {s}");
    println!("closed form agrees: {}", s == anticommutator_closed_form(&x, &y, false)?);
    Ok(())
}
