//! Seeded random polynomial data for property sweeps. Sparse small-integer coefficients keep
//! exact arithmetic cheap while staying generic enough to separate linear conditions.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::operators::VectorField;
use crate::ring::{int, CoeffPoly, MultiIndex, Scalar};
use crate::symbols::SymbolPoly;

pub const DEFAULT_SEED: u64 = 0x5eed_1998;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn nonzero_int(rng: &mut ChaCha8Rng) -> i64 {
    let v = rng.gen_range(1..=4);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

/// Sum of `terms` random monomials of degree ≤ `max_degree`.
pub fn random_coeff(rng: &mut ChaCha8Rng, n: usize, max_degree: usize, terms: usize) -> CoeffPoly {
    let monos = MultiIndex::up_to_degree(n, max_degree);
    let mut out = CoeffPoly::zero(n);
    for e in monos.choose_multiple(rng, terms.min(monos.len())) {
        out.add_term(e.clone(), &Scalar::constant(int(nonzero_int(rng))));
    }
    out
}

/// A field whose components each carry `terms` random monomials, at least one of top degree.
pub fn random_field(rng: &mut ChaCha8Rng, n: usize, degree: usize, terms: usize) -> VectorField {
    let top = MultiIndex::of_degree(n, degree);
    let comps = (0..n)
        .map(|_| {
            let mut c = random_coeff(rng, n, degree, terms);
            let e = top.choose(rng).expect("non-empty").clone();
            c.add_term(e, &Scalar::constant(int(nonzero_int(rng))));
            c
        })
        .collect();
    VectorField::new(comps).expect("rational components")
}

/// A homogeneous degree-`k` symbol with every ξ-monomial present and random coefficients.
pub fn random_symbol(rng: &mut ChaCha8Rng, n: usize, k: usize, coeff_degree: usize, terms: usize) -> SymbolPoly {
    let mut out = SymbolPoly::zero(n);
    for e in MultiIndex::of_degree(n, k) {
        out.add_term(e, &random_coeff(rng, n, coeff_degree, terms));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_draws_repeat() {
        let a = random_field(&mut rng(7), 2, 3, 2);
        let b = random_field(&mut rng(7), 2, 3, 2);
        assert_eq!(a, b);
        assert_eq!(a.degree(), Some(3));
        let s = random_symbol(&mut rng(1), 2, 3, 2, 3);
        assert!(s.is_homogeneous(3));
    }
}
