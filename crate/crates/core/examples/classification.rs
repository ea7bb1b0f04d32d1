//! Dimensions of the spaces of invariant corrections, from the recurrent system and from
//! brute-force sampling of the equivariance conditions.

use projsym::cocycles::{c2_coeffs, classify_by_sampling, solve_sys};
use projsym::sample::DEFAULT_SEED;

fn main() -> projsym::Result<()> {
    let n = 2;
    println!(" k  p  system  sampled  with cocycle identity");
    for (k, p) in [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2), (3, 3), (4, 3)] {
        let sys = solve_sys(k, p, n, false)?;
        let brute = classify_by_sampling(k, p, n, false, DEFAULT_SEED)?;
        let coc = solve_sys(k, p, n, true)?;
        println!("{k:>2} {p:>2} {:>7} {:>8} {:>10}", sys.dimension, brute.dimension, coc.dimension);
    }
    let sol = solve_sys(3, 2, n, true)?;
    let c2 = c2_coeffs(3, n)?;
    println!("cocycle solution at k=3, p=2 is c2 times {:?}", sol.basis[0].ratio_to(&c2).map(|c| c.to_string()));
    for (name, v) in c2.named() {
        println!("  {name} = {v}");
    }
    Ok(())
}
