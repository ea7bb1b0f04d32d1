//! Fibrewise-polynomial functions on T*ℝⁿ, i.e. sums of symmetric contravariant
//! tensor fields, stored by ξ-monomial.
//!
//! Index convention: the symbol Σ a^{i₁…i_k} ξ_{i₁}…ξ_{i_k} is summed over all index
//! tuples with a symmetric, so tensor contractions are expressed as ξ-derivatives.
//! E.g. the m-fold divergence of a degree-k symbol is ((k−m)!/k!)·(Σⱼ ∂_{xʲ}∂_{ξⱼ})^m.

use std::ops::Mul;

use crate::error::{precondition, Error, Result};
use crate::operators::VectorField;
use crate::ring::fiber::{FiberPoly, Xi};
use crate::ring::{factorial, int, CoeffPoly, MultiIndex, Rational};

pub type SymbolPoly = FiberPoly<Xi>;

impl SymbolPoly {
    /// ξᵢ (0-based).
    pub fn xi(n: usize, i: usize) -> Self {
        Self::fiber_var(n, i)
    }

    /// ∂/∂ξᵢ
    pub fn partial_xi(&self, i: usize) -> Self {
        let n = self.n();
        let mut out = Self::zero(n);
        for (e, c) in self.terms() {
            let k = e.get(i);
            if k > 0 {
                out.add_term(e.drop_one(i).unwrap(), &c.scale_rat(&int(k as i64)));
            }
        }
        out
    }

    /// ξⱼ·∂/∂ξᵢ, the elementary "index transfer".
    fn transfer(&self, from: usize, to: usize) -> Self {
        let n = self.n();
        let mut out = Self::zero(n);
        for (e, c) in self.terms() {
            let k = e.get(from);
            if k > 0 {
                out.add_term(e.drop_one(from).unwrap().bump(to), &c.scale_rat(&int(k as i64)));
            }
        }
        out
    }

    /// Multiply by ξ^α.
    pub fn shift_xi(&self, alpha: &MultiIndex) -> Self {
        Self::from_terms(self.n(), self.terms().map(|(e, c)| (e.add(alpha), c.clone())))
    }

    /// ∂^β_ξ
    pub fn derive_xi(&self, beta: &MultiIndex) -> Self {
        let mut out = Self::zero(self.n());
        for (e, c) in self.terms() {
            if let Some(rest) = e.checked_sub(beta) {
                let f = e.factorial() / rest.factorial();
                out.add_term(rest, &c.scale_rat(&f));
            }
        }
        out
    }

    /// ∂^β_x applied to every coefficient.
    pub fn derive_x(&self, beta: &MultiIndex) -> Self {
        self.map_coeffs(|c| c.derive(beta))
    }

    /// Σⱼ ∂_{xʲ}∂_{ξⱼ}
    fn trace_operator(&self) -> Self {
        let n = self.n();
        let mut out = Self::zero(n);
        for j in 0..n {
            out = &out + &self.partial_xi(j).partial_x(j);
        }
        out
    }
}

impl<'a> Mul<&'a SymbolPoly> for &'a SymbolPoly {
    type Output = SymbolPoly;
    fn mul(self, o: &SymbolPoly) -> SymbolPoly {
        assert_eq!(self.n(), o.n(), "dimension mismatch");
        let mut out = SymbolPoly::zero(self.n());
        for (e1, c1) in self.terms() {
            for (e2, c2) in o.terms() {
                out.add_term(e1.add(e2), &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for SymbolPoly {
    type Output = SymbolPoly;
    fn mul(self, o: SymbolPoly) -> SymbolPoly {
        &self * &o
    }
}

/// L_X P = Xⁱ∂ᵢP − ∂ᵢ(Xʲ)·ξⱼ∂_{ξᵢ}P.
pub fn lie_derivative_symbol(x: &VectorField, p: &SymbolPoly) -> Result<SymbolPoly> {
    let n = p.n();
    if x.n() != n {
        return Err(Error::DimensionMismatch { left: x.n(), right: n });
    }
    let mut out = SymbolPoly::zero(n);
    for i in 0..n {
        out = &out + &p.partial_x(i).scale_coeff(x.comp(i));
        for j in 0..n {
            let dx = x.comp(j).partial(i);
            if !dx.is_zero() {
                out = &out - &p.transfer(i, j).scale_coeff(&dx);
            }
        }
    }
    Ok(out)
}

/// m-fold divergence a^{(m)} of a homogeneous symbol.
pub fn divergence(a: &SymbolPoly, m: usize) -> Result<SymbolPoly> {
    let Some(k) = a.degree() else {
        return Ok(SymbolPoly::zero(a.n()));
    };
    a.expect_homogeneous(k)?;
    if m > k {
        return precondition(format!("divergence order {m} exceeds symbol degree {k}"));
    }
    let mut out = a.clone();
    for _ in 0..m {
        out = out.trace_operator();
    }
    Ok(out.scale_rat(&(factorial(k - m) / factorial(k))))
}

/// D(a) = ∂ᵢ(a)·dxⁱ, returned as its n components.
pub fn differential(a: &SymbolPoly) -> Vec<SymbolPoly> {
    (0..a.n()).map(|i| a.partial_x(i)).collect()
}

/// {F,G} = ∂_{ξᵢ}F·∂ᵢG − ∂ᵢF·∂_{ξᵢ}G.
pub fn poisson_bracket(f: &SymbolPoly, g: &SymbolPoly) -> Result<SymbolPoly> {
    f.check_dim(g)?;
    let mut out = SymbolPoly::zero(f.n());
    for i in 0..f.n() {
        out = &out + &(&f.partial_xi(i) * &g.partial_x(i));
        out = &out - &(&f.partial_x(i) * &g.partial_xi(i));
    }
    Ok(out)
}

/// Symmetric (1,2)-tensor field T^k_{ij} = T^k_{ji}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor12 {
    n: usize,
    comps: Vec<CoeffPoly>,
}

impl Tensor12 {
    pub fn zero(n: usize) -> Self {
        Tensor12 { n, comps: vec![CoeffPoly::zero(n); n * n * n] }
    }

    /// Build from a component function; fails unless symmetric in the lower pair.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize, usize) -> CoeffPoly) -> Result<Self> {
        let mut comps = Vec::with_capacity(n * n * n);
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    comps.push(f(k, i, j));
                }
            }
        }
        let t = Tensor12 { n, comps };
        for k in 0..n {
            for i in 0..n {
                for j in 0..i {
                    if t.get(k, i, j) != t.get(k, j, i) {
                        return precondition(format!("T^{}_{{{}{}}} is not symmetric", k + 1, i + 1, j + 1));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// T^k_{ij} (0-based).
    pub fn get(&self, k: usize, i: usize, j: usize) -> &CoeffPoly {
        &self.comps[(k * self.n + i) * self.n + j]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// Traces Σₖ T^k_{ik}, one per lower index i.
    pub fn traces(&self) -> Vec<CoeffPoly> {
        (0..self.n)
            .map(|i| (0..self.n).fold(CoeffPoly::zero(self.n), |acc, k| &acc + self.get(k, i, k)))
            .collect()
    }

    pub fn is_trace_free(&self) -> bool {
        self.traces().iter().all(|t| t.is_zero())
    }

    pub fn sub(&self, o: &Tensor12) -> Tensor12 {
        Tensor12 { n: self.n, comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a - b).collect() }
    }

    pub fn add(&self, o: &Tensor12) -> Tensor12 {
        Tensor12 { n: self.n, comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a + b).collect() }
    }

    pub fn scale_rat(&self, r: &Rational) -> Tensor12 {
        Tensor12 { n: self.n, comps: self.comps.iter().map(|a| a.scale_rat(r)).collect() }
    }
}

/// γ(X) = D²X: T^k_{ij} = ∂ᵢ∂ⱼX^k.
pub fn second_differential(x: &VectorField) -> Tensor12 {
    let n = x.n();
    Tensor12::from_fn(n, |k, i, j| x.comp(k).partial(i).partial(j)).expect("mixed partials commute")
}

/// (L_X T)^k_{ij} = X^l∂_l T^k_{ij} − T^l_{ij}∂_l X^k + T^k_{lj}∂ᵢX^l + T^k_{il}∂ⱼX^l.
pub fn lie_derivative_tensor(x: &VectorField, t: &Tensor12) -> Result<Tensor12> {
    let n = t.n();
    if x.n() != n {
        return Err(Error::DimensionMismatch { left: x.n(), right: n });
    }
    Tensor12::from_fn(n, |k, i, j| {
        let mut acc = CoeffPoly::zero(n);
        for l in 0..n {
            acc = &acc + &(x.comp(l) * &t.get(k, i, j).partial(l));
            acc = &acc - &(t.get(l, i, j) * &x.comp(k).partial(l));
            acc = &acc + &(t.get(k, l, j) * &x.comp(l).partial(i));
            acc = &acc + &(t.get(k, i, l) * &x.comp(l).partial(j));
        }
        acc
    })
}

/// ⟨T, a⟩ = (1/(k(k−1)))·ξ_m T^m_{ij} ∂_{ξᵢ}∂_{ξⱼ} a, i.e. the contraction of the lower
/// pair of T into two upper indices of a, averaged over the k−1 remaining slots.
pub fn contract_12(t: &Tensor12, a: &SymbolPoly) -> Result<SymbolPoly> {
    let n = a.n();
    if t.n() != n {
        return Err(Error::DimensionMismatch { left: t.n(), right: n });
    }
    let Some(k) = a.degree() else {
        return Ok(SymbolPoly::zero(n));
    };
    a.expect_homogeneous(k)?;
    if k < 2 {
        return precondition("contraction needs a symbol of degree at least 2");
    }
    let mut out = SymbolPoly::zero(n);
    for i in 0..n {
        let ai = a.partial_xi(i);
        for j in 0..n {
            let aij = ai.partial_xi(j);
            if aij.is_zero() {
                continue;
            }
            for m in 0..n {
                let c = t.get(m, i, j);
                if !c.is_zero() {
                    out = &out + &aij.shift_xi(&MultiIndex::unit(n, m)).scale_coeff(c);
                }
            }
        }
    }
    Ok(out.scale_rat(&(Rational::from_integer(1.into()) / int((k * (k - 1)) as i64))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_coeff, rat, Scalar};

    fn c(s: &str) -> CoeffPoly {
        parse_coeff(s, 2).unwrap()
    }

    fn sym(n: usize, terms: &[(&[u32], &str)]) -> SymbolPoly {
        SymbolPoly::from_terms(
            n,
            terms.iter().map(|(e, s)| (MultiIndex::new(e.to_vec()), parse_coeff(s, n).unwrap())),
        )
    }

    fn field(comps: &[&str]) -> VectorField {
        VectorField::new(comps.iter().map(|s| parse_coeff(s, comps.len()).unwrap()).collect()).unwrap()
    }

    #[test]
    fn lie_derivative_examples() {
        let p = sym(2, &[(&[0, 1], "x1")]);
        assert_eq!(lie_derivative_symbol(&field(&["1", "0"]), &p).unwrap(), SymbolPoly::xi(2, 1));
        let xi1 = SymbolPoly::xi(2, 0);
        assert_eq!(lie_derivative_symbol(&field(&["x1", "0"]), &xi1).unwrap(), -xi1);
        assert!(lie_derivative_symbol(&field(&["x1^2", "x2"]), &SymbolPoly::one(2)).unwrap().is_zero());
    }

    #[test]
    fn divergence_convention() {
        let a = sym(2, &[(&[2, 0], "x1")]);
        assert_eq!(divergence(&a, 1).unwrap(), SymbolPoly::xi(2, 0));
        let b = sym(2, &[(&[1, 1], "x1*x2")]);
        assert_eq!(divergence(&b, 2).unwrap(), SymbolPoly::one(2));
        let flat = sym(2, &[(&[2, 1], "3")]);
        assert!(divergence(&flat, 2).unwrap().is_zero());
        assert!(divergence(&a, 3).is_err());
        assert!(matches!(divergence(&(&a + &SymbolPoly::one(2)), 1), Err(Error::NotHomogeneous { .. })));
    }

    #[test]
    fn divergence_composes() {
        let a = sym(2, &[(&[2, 1], "x1^2*x2"), (&[0, 3], "x1*x2^2 + l"), (&[1, 2], "x2^3")]);
        let once = divergence(&divergence(&a, 1).unwrap(), 1).unwrap();
        assert_eq!(once, divergence(&a, 2).unwrap());
    }

    #[test]
    fn second_differential_examples() {
        let t = second_differential(&field(&["x1^2", "0"]));
        assert_eq!(t.get(0, 0, 0), &CoeffPoly::constant(2, Scalar::int(2)));
        let u = second_differential(&field(&["0", "x1*x2"]));
        assert_eq!(u.get(1, 0, 1), &CoeffPoly::one(2));
        assert_eq!(u.get(1, 1, 0), &CoeffPoly::one(2));
        assert!(second_differential(&field(&["x1 + 3", "x2 - x1"])).is_zero());
    }

    #[test]
    fn contraction_examples() {
        let t = Tensor12::from_fn(2, |k, i, j| match (k, i, j) {
            (0, 0, 0) => CoeffPoly::constant(2, Scalar::constant(rat(2, 3))),
            (1, 0, 1) | (1, 1, 0) => CoeffPoly::constant(2, Scalar::constant(rat(-2, 3))),
            _ => CoeffPoly::zero(2),
        })
        .unwrap();
        let a = sym(2, &[(&[2, 0], "1")]);
        assert_eq!(contract_12(&t, &a).unwrap(), SymbolPoly::xi(2, 0).scale_rat(&rat(2, 3)));
        let b = sym(2, &[(&[0, 2], "1")]);
        // ⟨T, ξ₂²⟩ = T^m₂₂ ξ_m = 0 here
        assert!(contract_12(&t, &b).unwrap().is_zero());
        assert!(contract_12(&t, &SymbolPoly::xi(2, 0)).is_err());
        assert!(Tensor12::from_fn(2, |_, i, _| if i == 0 { c("x1") } else { c("0") }).is_err());
    }

    #[test]
    fn poisson_examples() {
        let x1 = SymbolPoly::from_coeff(c("x1"));
        let xi1 = SymbolPoly::xi(2, 0);
        assert_eq!(poisson_bracket(&xi1, &x1).unwrap(), SymbolPoly::one(2));
        assert!(poisson_bracket(&xi1, &SymbolPoly::xi(2, 1)).unwrap().is_zero());
        assert_eq!(poisson_bracket(&(&x1 * &xi1), &xi1).unwrap(), -xi1);
    }

    #[test]
    fn display_and_latex() {
        let p = sym(2, &[(&[2, 0], "x1"), (&[1, 0], "-6/5*l - 2/5")]);
        assert_eq!(p.to_string(), "x1*xi1^2 + (-6/5*l - 2/5)*xi1");
        assert_eq!(sym(2, &[(&[2, 0], "x1")]).to_latex(), "x^1 \\xi_1^2");
    }
}
