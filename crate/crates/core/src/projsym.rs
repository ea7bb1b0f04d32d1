//! The sl(n+1)-equivariant symbol map σ^λ and its inverse, the quantization map.
//!
//! On a homogeneous degree-k piece P_k of the standard symbol,
//!   σ(P_k)   = Σ_m c(k,m)·P_k^{(m)},   c(k,m) = (−1)^m C(k,m) C((n+1)λ+k−1, m) / C(2k+n−m, m)
//!   σ⁻¹(P_k) = Σ_m c̄(k,m)·P_k^{(m)},  c̄(k,m) =        C(k,m) C((n+1)λ+k−1, m) / C(2k+n−1, m)
//! where P^{(m)} is the m-fold divergence. Both extend linearly over degrees.

use rayon::prelude::*;

use crate::error::{precondition, Result};
use crate::operators::{ad_action, sl_generators, DiffOp, VectorField};
use crate::report::Report;
use crate::ring::{binom_poly, binomial_int, int, CoeffPoly, MultiIndex, Scalar};
use crate::symbols::{divergence, lie_derivative_symbol, SymbolPoly};

fn shifted_weight(k: usize, n: usize, w: &Scalar) -> Scalar {
    &w.scale(&int(n as i64 + 1)) + &Scalar::int(k as i64 - 1)
}

fn check_indices(k: usize, m: usize, n: usize) -> Result<()> {
    if m > k {
        return precondition(format!("coefficient index m = {m} exceeds k = {k}"));
    }
    if n == 0 {
        return precondition("dimension must be at least 1");
    }
    Ok(())
}

/// c(k,m) at weight `w`.
pub fn coeff_c_at(k: usize, m: usize, n: usize, w: &Scalar) -> Result<Scalar> {
    check_indices(k, m, n)?;
    let sign = if m % 2 == 0 { 1 } else { -1 };
    let num = binomial_int(k as i64, m) * int(sign);
    let den = binomial_int((2 * k + n - m) as i64, m);
    Ok(binom_poly(&shifted_weight(k, n, w), m).scale(&(num / den)))
}

/// c̄(k,m) at weight `w`.
pub fn coeff_cbar_at(k: usize, m: usize, n: usize, w: &Scalar) -> Result<Scalar> {
    check_indices(k, m, n)?;
    let num = binomial_int(k as i64, m);
    let den = binomial_int((2 * k + n - 1) as i64, m);
    Ok(binom_poly(&shifted_weight(k, n, w), m).scale(&(num / den)))
}

pub fn coeff_c(k: usize, m: usize, n: usize) -> Result<Scalar> {
    coeff_c_at(k, m, n, &Scalar::lambda())
}

pub fn coeff_cbar(k: usize, m: usize, n: usize) -> Result<Scalar> {
    coeff_cbar_at(k, m, n, &Scalar::lambda())
}

fn divergence_series(
    p: &SymbolPoly,
    w: &Scalar,
    coeff: fn(usize, usize, usize, &Scalar) -> Result<Scalar>,
) -> SymbolPoly {
    let n = p.n();
    let mut out = SymbolPoly::zero(n);
    for (k, pk) in p.components() {
        let mut d = pk;
        for m in 0..=k {
            if m > 0 {
                // iterated single divergences compose to the m-fold one
                d = divergence(&d, 1).expect("homogeneous component");
            }
            if d.is_zero() {
                break;
            }
            let c = coeff(k, m, n, w).expect("valid indices");
            out = &out + &d.scale(&c);
        }
    }
    out
}

/// σ at weight `w`.
pub fn symbol_map_at(a: &DiffOp, w: &Scalar) -> SymbolPoly {
    divergence_series(&a.standard_symbol(), w, coeff_c_at)
}

/// σ⁻¹ at weight `w`.
pub fn quantization_map_at(p: &SymbolPoly, w: &Scalar) -> DiffOp {
    DiffOp::from_standard_symbol(&divergence_series(p, w, coeff_cbar_at))
}

/// σ^λ, λ formal.
pub fn symbol_map(a: &DiffOp) -> SymbolPoly {
    symbol_map_at(a, &Scalar::lambda())
}

/// (σ^λ)⁻¹, λ formal.
pub fn quantization_map(p: &SymbolPoly) -> DiffOp {
    quantization_map_at(p, &Scalar::lambda())
}

/// The coefficient-wise identification a_α∂^α ↦ a_αξ^α; equivariant only under affine fields.
pub fn naive_symbol(a: &DiffOp) -> SymbolPoly {
    a.standard_symbol()
}

/// σ_to⁻¹(Σ_j f_j·σ_from(A)_j): rescale the equivariant symbol degree-wise and requantize.
pub fn diagonal_map(a: &DiffOp, factors: &[Scalar], from: &Scalar, to: &Scalar) -> Result<DiffOp> {
    let s = symbol_map_at(a, from);
    let mut scaled = SymbolPoly::zero(a.n());
    for (j, sj) in s.components() {
        let Some(f) = factors.get(j) else {
            return precondition(format!("no factor supplied for symbol degree {j}"));
        };
        scaled = &scaled + &sj.scale(f);
    }
    Ok(quantization_map_at(&scaled, to))
}

/// All monomial operators x^β∂^α with |α| ≤ max_order, |β| ≤ max_coeff_degree.
pub fn monomial_operators(n: usize, max_order: usize, max_coeff_degree: usize) -> Vec<DiffOp> {
    let mut out = Vec::new();
    for alpha in MultiIndex::up_to_degree(n, max_order) {
        for beta in MultiIndex::up_to_degree(n, max_coeff_degree) {
            out.push(DiffOp::monomial(n, alpha.clone(), CoeffPoly::monomial(n, beta, Scalar::one())));
        }
    }
    out
}

/// σ(ad_X A) = L_X σ(A) for every sl generator X and monomial A, with `symbol` as σ.
pub fn check_equivariance_with<F>(n: usize, max_order: usize, max_coeff_degree: usize, symbol: F) -> Report
where
    F: Fn(&DiffOp) -> SymbolPoly + Sync,
{
    let gens = sl_generators(n);
    let ops = monomial_operators(n, max_order, max_coeff_degree);
    let pairs: Vec<(&VectorField, &DiffOp)> = gens.iter().flat_map(|g| ops.iter().map(move |a| (g, a))).collect();
    let results: Vec<bool> = pairs
        .par_iter()
        .map(|(x, a)| {
            let lhs = symbol(&ad_action(x, a).expect("same dimension"));
            let rhs = lie_derivative_symbol(x, &symbol(a)).expect("same dimension");
            lhs == rhs
        })
        .collect();
    let mut r = Report::new(format!("equivariance n={n} order<={max_order} coeff-degree<={max_coeff_degree}"));
    for ((x, a), ok) in pairs.iter().zip(results) {
        r.check(ok, || format!("X = {:?}, A = {a}", x.comps().iter().map(|c| c.to_string()).collect::<Vec<_>>()));
    }
    r
}

pub fn check_equivariance(n: usize, max_order: usize, max_coeff_degree: usize) -> Report {
    check_equivariance_with(n, max_order, max_coeff_degree, symbol_map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, parse_coeff, parse_scalar, rat};

    fn s(t: &str) -> Scalar {
        parse_scalar(t).unwrap()
    }

    #[test]
    fn low_order_coefficients() {
        assert_eq!(coeff_c(1, 1, 2).unwrap(), s("-l"));
        for n in 1..=4usize {
            let nn = n as i64;
            let two = Scalar::affine(int(1), int(nn + 1));
            assert_eq!(coeff_c(2, 1, n).unwrap(), two.scale(&rat(-2, nn + 3)));
            assert_eq!(coeff_c(2, 2, n).unwrap(), (&Scalar::lambda() * &two).scale(&rat(1, nn + 2)));
            assert_eq!(coeff_cbar(2, 1, n).unwrap(), two.scale(&rat(2, nn + 3)));
            assert_eq!(
                coeff_cbar(2, 2, n).unwrap(),
                (&Scalar::lambda() * &two).scale(&rat(nn + 1, (nn + 2) * (nn + 3)))
            );
            assert_eq!(coeff_c(3, 0, n).unwrap(), Scalar::one());
        }
        // c̄(3,1) at n = 1: 3·(2λ+2)/6
        assert_eq!(coeff_cbar(3, 1, 1).unwrap(), s("l + 1"));
        assert!(coeff_c(1, 2, 2).is_err());
    }

    #[test]
    fn symbolize_example() {
        let a = DiffOp::monomial(2, MultiIndex::new(vec![2, 0]), parse_coeff("x1", 2).unwrap());
        let sym = symbol_map(&a);
        let expected = SymbolPoly::from_terms(
            2,
            [
                (MultiIndex::new(vec![2, 0]), parse_coeff("x1", 2).unwrap()),
                (MultiIndex::new(vec![1, 0]), parse_coeff("-6/5*l - 2/5", 2).unwrap()),
            ],
        );
        assert_eq!(sym, expected);
        assert_eq!(quantization_map(&sym), a);
    }

    #[test]
    fn first_order_quantization() {
        // āⁱξᵢ ↦ āⁱ∂ᵢ + λ∂ᵢ(āⁱ)
        let p = SymbolPoly::from_terms(
            2,
            [
                (MultiIndex::new(vec![1, 0]), parse_coeff("x1^2*x2", 2).unwrap()),
                (MultiIndex::new(vec![0, 1]), parse_coeff("x2^3 + x1", 2).unwrap()),
            ],
        );
        let q = quantization_map(&p);
        let mut expected = DiffOp::from_standard_symbol(&p);
        expected.add_term(MultiIndex::zero(2), &parse_coeff("2*l*x1*x2 + 3*l*x2^2", 2).unwrap());
        assert_eq!(q, expected);
    }

    #[test]
    fn constant_coefficients_are_fixed() {
        let p = &SymbolPoly::from_terms(2, [(MultiIndex::new(vec![2, 0]), CoeffPoly::one(2))])
            + &SymbolPoly::from_terms(2, [(MultiIndex::new(vec![0, 2]), CoeffPoly::one(2))]);
        let q = quantization_map_at(&p, &Scalar::constant(rat(1, 2)));
        assert_eq!(q, DiffOp::from_standard_symbol(&p));
        assert_eq!(symbol_map(&DiffOp::one(3)), SymbolPoly::one(3));
    }

    #[test]
    fn small_equivariance_and_negative_control() {
        assert!(check_equivariance(1, 2, 2).passed);
        let naive = check_equivariance_with(2, 2, 1, naive_symbol);
        assert!(!naive.passed);
    }
}
