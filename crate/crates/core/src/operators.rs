//! Linear differential operators with polynomial coefficients acting on λ-densities.
//!
//! An operator Σ a_α(x)∂^α is stored by ∂-monomial, coefficient on the left.

use itertools::Itertools;

use crate::error::{precondition, Error, Result};
use crate::ring::fiber::{FiberPoly, Partial};
use crate::ring::{CoeffPoly, MultiIndex, Scalar};
use crate::symbols::SymbolPoly;

pub type DiffOp = FiberPoly<Partial>;

impl DiffOp {
    /// ∂ᵢ (0-based).
    pub fn partial(n: usize, i: usize) -> Self {
        Self::fiber_var(n, i)
    }

    /// Multiplication by a function.
    pub fn multiplication(f: CoeffPoly) -> Self {
        Self::from_coeff(f)
    }

    pub fn order(&self) -> Option<usize> {
        self.degree()
    }

    /// A∘B via the Leibniz rule.
    pub fn compose(&self, o: &DiffOp) -> Result<DiffOp> {
        self.check_dim(o)?;
        let mut out = DiffOp::zero(self.n());
        for (alpha, a) in self.terms() {
            for (beta, b) in o.terms() {
                for gamma in alpha.below() {
                    let db = b.derive(&gamma);
                    if db.is_zero() {
                        continue;
                    }
                    let f = alpha.binomial(&gamma);
                    let e = alpha.checked_sub(&gamma).unwrap().add(beta);
                    out.add_term(e, &(a * &db).scale_rat(&f));
                }
            }
        }
        Ok(out)
    }

    /// The coefficients read as a symbol: a_α∂^α ↦ a_αξ^α (the naive symbol).
    pub fn standard_symbol(&self) -> SymbolPoly {
        SymbolPoly::from_terms(self.n(), self.terms().map(|(e, c)| (e.clone(), c.clone())))
    }

    /// Inverse of [`standard_symbol`](Self::standard_symbol).
    pub fn from_standard_symbol(p: &SymbolPoly) -> DiffOp {
        DiffOp::from_terms(p.n(), p.terms().map(|(e, c)| (e.clone(), c.clone())))
    }

    /// Apply to a function.
    pub fn apply(&self, f: &CoeffPoly) -> CoeffPoly {
        let mut out = CoeffPoly::zero(self.n());
        for (alpha, a) in self.terms() {
            out = &out + &(a * &f.derive(alpha));
        }
        out
    }
}

pub fn compose(a: &DiffOp, b: &DiffOp) -> Result<DiffOp> {
    a.compose(b)
}

/// [A,B] = A∘B − B∘A
pub fn commutator(a: &DiffOp, b: &DiffOp) -> Result<DiffOp> {
    Ok(&a.compose(b)? - &b.compose(a)?)
}

/// [A,B]₊ = A∘B + B∘A
pub fn anticommutator(a: &DiffOp, b: &DiffOp) -> Result<DiffOp> {
    Ok(&a.compose(b)? + &b.compose(a)?)
}

/// Polynomial vector field Xⁱ∂ᵢ with λ-free components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorField {
    comps: Vec<CoeffPoly>,
}

impl VectorField {
    pub fn new(comps: Vec<CoeffPoly>) -> Result<Self> {
        let n = comps.len();
        if n == 0 {
            return precondition("a vector field needs at least one component");
        }
        for c in &comps {
            if c.n() != n {
                return Err(Error::DimensionMismatch { left: c.n(), right: n });
            }
            if !c.is_lambda_free() {
                return Err(Error::LambdaDependent);
            }
        }
        Ok(VectorField { comps })
    }

    pub fn zero(n: usize) -> Self {
        VectorField { comps: vec![CoeffPoly::zero(n); n] }
    }

    /// f·∂ᵢ
    pub fn along(n: usize, i: usize, f: CoeffPoly) -> Result<Self> {
        let mut comps = vec![CoeffPoly::zero(n); n];
        comps[i] = f;
        Self::new(comps)
    }

    /// Euler field E = xʲ∂ⱼ.
    pub fn euler(n: usize) -> Self {
        VectorField { comps: (0..n).map(|i| CoeffPoly::var(n, i)).collect() }
    }

    pub fn n(&self) -> usize {
        self.comps.len()
    }

    pub fn comp(&self, i: usize) -> &CoeffPoly {
        &self.comps[i]
    }

    pub fn comps(&self) -> &[CoeffPoly] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn scale_coeff(&self, f: &CoeffPoly) -> Result<Self> {
        Self::new(self.comps.iter().map(|c| c * f).collect())
    }

    pub fn add(&self, o: &VectorField) -> VectorField {
        VectorField { comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &VectorField) -> VectorField {
        VectorField { comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a - b).collect() }
    }

    pub fn scale_rat(&self, r: &crate::ring::Rational) -> VectorField {
        VectorField { comps: self.comps.iter().map(|a| a.scale_rat(r)).collect() }
    }

    /// div X = ∂ᵢXⁱ
    pub fn divergence(&self) -> CoeffPoly {
        let n = self.n();
        (0..n).fold(CoeffPoly::zero(n), |acc, i| &acc + &self.comps[i].partial(i))
    }

    /// [X,Y]^k = X^l∂_lY^k − Y^l∂_lX^k
    pub fn bracket(&self, o: &VectorField) -> Result<VectorField> {
        let n = self.n();
        if o.n() != n {
            return Err(Error::DimensionMismatch { left: n, right: o.n() });
        }
        let comps = (0..n)
            .map(|k| {
                (0..n).fold(CoeffPoly::zero(n), |acc, l| {
                    &(&acc + &(&self.comps[l] * &o.comps[k].partial(l))) - &(&o.comps[l] * &self.comps[k].partial(l))
                })
            })
            .collect();
        Ok(VectorField { comps })
    }

    /// Xⁱ∂ᵢ as a first-order operator.
    pub fn as_operator(&self) -> DiffOp {
        let n = self.n();
        DiffOp::from_terms(n, (0..n).map(|i| (MultiIndex::unit(n, i), self.comps[i].clone())))
    }

    /// Largest component degree.
    pub fn degree(&self) -> Option<usize> {
        self.comps.iter().filter_map(|c| c.degree()).max()
    }
}

/// L^w_X = Xⁱ∂ᵢ + w·div X, the Lie derivative on densities of weight `w`.
pub fn lie_operator_weighted(x: &VectorField, w: &Scalar) -> DiffOp {
    let mut op = x.as_operator();
    op.add_term(MultiIndex::zero(x.n()), &x.divergence().scale(w));
    op
}

/// L^λ_X with λ formal.
pub fn lie_operator(x: &VectorField) -> DiffOp {
    lie_operator_weighted(x, &Scalar::lambda())
}

/// ad L^w_X (A) = L^w_X∘A − A∘L^w_X.
pub fn ad_action_weighted(x: &VectorField, a: &DiffOp, w: &Scalar) -> Result<DiffOp> {
    if x.n() != a.n() {
        return Err(Error::DimensionMismatch { left: x.n(), right: a.n() });
    }
    commutator(&lie_operator_weighted(x, w), a)
}

pub fn ad_action(x: &VectorField, a: &DiffOp) -> Result<DiffOp> {
    ad_action_weighted(x, a, &Scalar::lambda())
}

/// (a∂^α)* = (−1)^{|α|}∂^α∘a.
pub fn formal_adjoint(a: &DiffOp) -> DiffOp {
    let n = a.n();
    let mut out = DiffOp::zero(n);
    for (alpha, c) in a.terms() {
        let d = DiffOp::monomial(n, alpha.clone(), CoeffPoly::one(n));
        let term = d.compose(&DiffOp::multiplication(c.clone())).expect("same dimension");
        out = if alpha.degree() % 2 == 0 { &out + &term } else { &out - &term };
    }
    out
}

/// ∂ᵢ, xⁱ∂ⱼ, xⁱE: a basis of the projective algebra sl(n+1), n²+2n fields.
pub fn sl_generators(n: usize) -> Vec<VectorField> {
    let mut g = Vec::with_capacity(n * n + 2 * n);
    for i in 0..n {
        g.push(VectorField::along(n, i, CoeffPoly::one(n)).unwrap());
    }
    for i in 0..n {
        for j in 0..n {
            g.push(VectorField::along(n, j, CoeffPoly::var(n, i)).unwrap());
        }
    }
    let e = VectorField::euler(n);
    for i in 0..n {
        g.push(e.scale_coeff(&CoeffPoly::var(n, i)).unwrap());
    }
    g
}

/// Σ over all k! orderings of L^w_{X_{σ1}}∘…∘L^w_{X_{σk}} (a sum, not an average).
pub fn symmetrized_product_weighted(fields: &[VectorField], w: &Scalar) -> Result<DiffOp> {
    let Some(first) = fields.first() else {
        return precondition("symmetrized product of an empty list");
    };
    let n = first.n();
    let ops: Vec<DiffOp> = fields.iter().map(|x| lie_operator_weighted(x, w)).collect();
    let mut out = DiffOp::zero(n);
    for perm in (0..ops.len()).permutations(ops.len()) {
        let mut acc = DiffOp::one(n);
        for &i in &perm {
            acc = acc.compose(&ops[i])?;
        }
        out = &out + &acc;
    }
    Ok(out)
}

pub fn symmetrized_product(fields: &[VectorField]) -> Result<DiffOp> {
    symmetrized_product_weighted(fields, &Scalar::lambda())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_coeff;

    fn op(n: usize, terms: &[(&[u32], &str)]) -> DiffOp {
        DiffOp::from_terms(n, terms.iter().map(|(e, s)| (MultiIndex::new(e.to_vec()), parse_coeff(s, n).unwrap())))
    }

    fn field(comps: &[&str]) -> VectorField {
        VectorField::new(comps.iter().map(|s| parse_coeff(s, comps.len()).unwrap()).collect()).unwrap()
    }

    #[test]
    fn composition_examples() {
        let d1 = DiffOp::partial(1, 0);
        let x1 = op(1, &[(&[0], "x1")]);
        assert_eq!(d1.compose(&x1).unwrap(), op(1, &[(&[1], "x1"), (&[0], "1")]));
        let e = op(1, &[(&[1], "x1")]);
        assert_eq!(e.compose(&e).unwrap(), op(1, &[(&[2], "x1^2"), (&[1], "x1")]));
        assert_eq!(e.compose(&DiffOp::one(1)).unwrap(), e);
        assert!(e.compose(&DiffOp::one(2)).is_err());
    }

    #[test]
    fn commutator_examples() {
        let d1 = DiffOp::partial(2, 0);
        let x1 = op(2, &[(&[0, 0], "x1")]);
        assert_eq!(commutator(&d1, &x1).unwrap(), DiffOp::one(2));
        assert!(commutator(&d1, &DiffOp::partial(2, 1)).unwrap().is_zero());
        let a = op(2, &[(&[1, 0], "x1"), (&[0, 0], "l")]);
        assert_eq!(commutator(&a, &d1).unwrap(), -d1);
    }

    #[test]
    fn lie_operator_examples() {
        assert_eq!(lie_operator(&field(&["1", "0"])), DiffOp::partial(2, 0));
        assert_eq!(lie_operator(&field(&["x1"])), op(1, &[(&[1], "x1"), (&[0], "l")]));
        assert_eq!(
            lie_operator(&VectorField::euler(2)),
            op(2, &[(&[1, 0], "x1"), (&[0, 1], "x2"), (&[0, 0], "2*l")])
        );
    }

    #[test]
    fn ad_examples() {
        let x1 = op(1, &[(&[0], "x1")]);
        assert_eq!(ad_action(&field(&["1"]), &x1).unwrap(), DiffOp::one(1));
        assert_eq!(ad_action(&field(&["x1"]), &DiffOp::partial(1, 0)).unwrap(), -DiffOp::partial(1, 0));
        // ad_{x²∂}(∂²) = −4x∂² − (4λ+2)∂, against the direct commutator
        let x = field(&["x1^2"]);
        let l = lie_operator(&x);
        let d2 = op(1, &[(&[2], "1")]);
        let direct = &l.compose(&d2).unwrap() - &d2.compose(&l).unwrap();
        assert_eq!(ad_action(&x, &d2).unwrap(), direct);
        assert_eq!(direct, op(1, &[(&[2], "-4*x1"), (&[1], "-4*l - 2")]));
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(formal_adjoint(&DiffOp::partial(1, 0)), -DiffOp::partial(1, 0));
        let f = op(1, &[(&[0], "x1^2 + l")]);
        assert_eq!(formal_adjoint(&f), f);
        let a = op(1, &[(&[1], "x1^3")]);
        assert_eq!(formal_adjoint(&a), op(1, &[(&[1], "-x1^3"), (&[0], "-3*x1^2")]));
    }

    #[test]
    fn generators() {
        for n in 1..=3 {
            assert_eq!(sl_generators(n).len(), n * n + 2 * n);
        }
        assert_eq!(sl_generators(1)[2], field(&["x1^2"]));
    }

    #[test]
    fn symmetrized_examples() {
        let x = field(&["x1^2", "x2"]);
        assert_eq!(symmetrized_product(&[x.clone()]).unwrap(), lie_operator(&x));
        let d = field(&["1", "0"]);
        assert_eq!(symmetrized_product(&[d.clone(), d]).unwrap(), op(2, &[(&[2, 0], "2")]));
        let y = field(&["x2", "x1"]);
        assert_eq!(
            symmetrized_product(&[x.clone(), y.clone()]).unwrap(),
            anticommutator(&lie_operator(&x), &lie_operator(&y)).unwrap()
        );
        assert!(symmetrized_product(&[]).is_err());
    }

    #[test]
    fn fields_reject_lambda() {
        let bad = parse_coeff("l*x1", 1).unwrap();
        assert_eq!(VectorField::new(vec![bad]), Err(Error::LambdaDependent));
    }
}
