//! The equivariant symbol commutes with the projective action; the naive one does not.

use projsym::projsym::{check_equivariance, check_equivariance_with, naive_symbol};

fn main() {
    for n in 1..=2 {
        let r = check_equivariance(n, 2, 2);
        println!("equivariant symbol, n={n}: passed={} over {} pairs", r.passed, r.checked);
    }
    let naive = check_equivariance_with(2, 2, 1, naive_symbol);
    println!(
        "naive symbol, n=2: passed={} ({} of {} pairs shown failing)",
        naive.passed,
        naive.failures.len(),
        naive.checked
    );
    if let Some(f) = naive.failures.first() {
        println!("  e.g. {f}");
    }
}
