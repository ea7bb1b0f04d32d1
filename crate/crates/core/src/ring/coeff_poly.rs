use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::multi_index::MultiIndex;
use super::rational::{fmt_rational, fmt_rational_latex, int, Rational};
use super::scalar::{join_terms, Scalar};
use crate::error::{Error, Result};

/// Polynomial in x¹..xⁿ with coefficients in Q[λ].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffPoly {
    n: usize,
    terms: BTreeMap<MultiIndex, Scalar>,
}

impl CoeffPoly {
    pub fn zero(n: usize) -> Self {
        CoeffPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        Self::monomial(n, MultiIndex::zero(n), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Scalar::one())
    }

    pub fn monomial(n: usize, e: MultiIndex, c: Scalar) -> Self {
        assert_eq!(e.dim(), n, "exponent length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        CoeffPoly { n, terms }
    }

    /// xⁱ (0-based axis).
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i < n, "axis {i} out of range for n = {n}");
        Self::monomial(n, MultiIndex::unit(n, i), Scalar::one())
    }

    pub fn try_var(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::AxisOutOfRange { axis: i, n });
        }
        Ok(Self::var(n, i))
    }

    pub fn from_terms(n: usize, it: impl IntoIterator<Item = (MultiIndex, Scalar)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &MultiIndex) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: MultiIndex, c: &Scalar) {
        assert_eq!(e.dim(), self.n, "exponent length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    /// Highest total degree in x; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    pub fn lambda_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(|c| c.degree()).max()
    }

    pub fn is_lambda_free(&self) -> bool {
        self.terms.values().all(|c| c.degree().unwrap_or(0) == 0)
    }

    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                (e.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn homogeneous_part(&self, d: usize) -> CoeffPoly {
        CoeffPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> CoeffPoly {
        if s.is_zero() {
            return CoeffPoly::zero(self.n);
        }
        CoeffPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * s))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn scale_rat(&self, r: &Rational) -> CoeffPoly {
        if r.is_zero() {
            return CoeffPoly::zero(self.n);
        }
        CoeffPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.scale(r))).collect(),
        }
    }

    pub fn try_add(&self, o: &CoeffPoly) -> Result<CoeffPoly> {
        self.check_dim(o)?;
        Ok(self + o)
    }

    pub fn try_sub(&self, o: &CoeffPoly) -> Result<CoeffPoly> {
        self.check_dim(o)?;
        Ok(self - o)
    }

    pub fn try_mul(&self, o: &CoeffPoly) -> Result<CoeffPoly> {
        self.check_dim(o)?;
        Ok(self * o)
    }

    fn check_dim(&self, o: &CoeffPoly) -> Result<()> {
        if self.n != o.n {
            return Err(Error::DimensionMismatch { left: self.n, right: o.n });
        }
        Ok(())
    }

    /// ∂/∂x^{axis}
    pub fn differentiate(&self, axis: usize) -> Result<CoeffPoly> {
        if axis >= self.n {
            return Err(Error::AxisOutOfRange { axis, n: self.n });
        }
        Ok(self.partial(axis))
    }

    /// ∂/∂x^{axis}; panics on a bad axis (use [`differentiate`](Self::differentiate) for the checked form).
    pub fn partial(&self, axis: usize) -> CoeffPoly {
        assert!(axis < self.n, "axis {axis} out of range for n = {}", self.n);
        let mut out = CoeffPoly::zero(self.n);
        for (e, c) in &self.terms {
            let k = e.get(axis);
            if k > 0 {
                out.terms.insert(e.drop_one(axis).unwrap(), c.scale(&int(k as i64)));
            }
        }
        out
    }

    /// ∂^α
    pub fn derive(&self, alpha: &MultiIndex) -> CoeffPoly {
        let mut out = CoeffPoly::zero(self.n);
        for (e, c) in &self.terms {
            if let Some(rest) = e.checked_sub(alpha) {
                // e!/(e−α)!
                let f = e.factorial() / rest.factorial();
                out.terms.insert(rest, c.scale(&f));
            }
        }
        out
    }

    /// Multiply by x^α.
    pub fn shift(&self, alpha: &MultiIndex) -> CoeffPoly {
        CoeffPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.add(alpha), c.clone())).collect(),
        }
    }

    pub fn eval_lambda(&self, at: &Rational) -> CoeffPoly {
        CoeffPoly::from_terms(
            self.n,
            self.terms.iter().map(|(e, c)| (e.clone(), Scalar::constant(c.eval(at)))),
        )
    }

    pub fn substitute_lambda(&self, s: &Scalar) -> CoeffPoly {
        CoeffPoly::from_terms(self.n, self.terms.iter().map(|(e, c)| (e.clone(), c.substitute(s))))
    }

    /// Evaluate at a rational point, keeping λ.
    pub fn eval_at(&self, point: &[Rational]) -> Scalar {
        assert_eq!(point.len(), self.n);
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut m = Rational::from_integer(1.into());
            for (x, &k) in point.iter().zip(e.exps()) {
                for _ in 0..k {
                    m *= x;
                }
            }
            acc += &c.scale(&m);
        }
        acc
    }

    /// Expanded (x-monomial, λ-power, rational) triples, descending canonical order.
    fn flat_terms(&self) -> Vec<(&MultiIndex, usize, Rational)> {
        let mut v = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            for (p, r) in c.coeffs().iter().enumerate().rev() {
                if !r.is_zero() {
                    v.push((e, p, r.clone()));
                }
            }
        }
        v
    }

    pub fn to_latex(&self) -> String {
        join_terms(
            self.flat_terms().into_iter().map(|(e, p, r)| {
                let mut f = Vec::new();
                match p {
                    0 => {}
                    1 => f.push("\\lambda".to_string()),
                    _ => f.push(format!("\\lambda^{{{p}}}")),
                }
                for (i, &k) in e.exps().iter().enumerate() {
                    match k {
                        0 => {}
                        1 => f.push(format!("x^{}", i + 1)),
                        _ => f.push(format!("(x^{})^{{{k}}}", i + 1)),
                    }
                }
                (r, f.join(" "))
            }),
            fmt_rational_latex,
            " ",
        )
    }

    /// Whether rendering as a factor needs parentheses.
    pub(crate) fn is_compound(&self) -> bool {
        self.flat_terms().len() > 1
    }
}

impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = join_terms(
            self.flat_terms().into_iter().map(|(e, p, r)| {
                let mut fs = Vec::new();
                match p {
                    0 => {}
                    1 => fs.push("l".to_string()),
                    _ => fs.push(format!("l^{p}")),
                }
                for (i, &k) in e.exps().iter().enumerate() {
                    match k {
                        0 => {}
                        1 => fs.push(format!("x{}", i + 1)),
                        _ => fs.push(format!("x{}^{k}", i + 1)),
                    }
                }
                (r, fs.join("*"))
            }),
            fmt_rational,
            "*",
        );
        f.write_str(&s)
    }
}

impl<'a> Add<&'a CoeffPoly> for &'a CoeffPoly {
    type Output = CoeffPoly;
    fn add(self, o: &CoeffPoly) -> CoeffPoly {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a CoeffPoly> for &'a CoeffPoly {
    type Output = CoeffPoly;
    fn sub(self, o: &CoeffPoly) -> CoeffPoly {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }
}

impl<'a> Mul<&'a CoeffPoly> for &'a CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, o: &CoeffPoly) -> CoeffPoly {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let mut out = CoeffPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1.add(e2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        CoeffPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CoeffPoly> for CoeffPoly {
            type Output = CoeffPoly;
            fn $m(self, o: CoeffPoly) -> CoeffPoly {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a CoeffPoly> for CoeffPoly {
            type Output = CoeffPoly;
            fn $m(self, o: &CoeffPoly) -> CoeffPoly {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<CoeffPoly> for &'a CoeffPoly {
            type Output = CoeffPoly;
            fn $m(self, o: CoeffPoly) -> CoeffPoly {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::rat;

    fn x(i: usize) -> CoeffPoly {
        CoeffPoly::var(2, i)
    }

    #[test]
    fn arithmetic_and_display() {
        let p = &(&x(0) * &x(0)) + &CoeffPoly::constant(2, Scalar::lambda().scale(&rat(2, 3)));
        assert_eq!(p.to_string(), "x1^2 + 2/3*l");
        let q = &p * &x(1);
        assert_eq!(q.to_string(), "x1^2*x2 + 2/3*l*x2");
        assert_eq!((&q - &q).to_string(), "0");
    }

    #[test]
    fn derivatives() {
        let p = &(&x(0) * &x(0)) * &x(1);
        assert_eq!(p.partial(0), (&x(0) * &x(1)).scale_rat(&int(2)));
        assert_eq!(p.derive(&MultiIndex::new(vec![2, 1])), CoeffPoly::constant(2, Scalar::int(2)));
        assert_eq!(p.differentiate(2), Err(Error::AxisOutOfRange { axis: 2, n: 2 }));
    }

    #[test]
    fn dimension_errors() {
        let a = CoeffPoly::var(1, 0);
        let b = CoeffPoly::var(2, 0);
        assert_eq!(a.try_add(&b), Err(Error::DimensionMismatch { left: 1, right: 2 }));
    }

    #[test]
    fn specialization() {
        let p = x(0).scale(&Scalar::affine(int(-1), int(2)));
        assert!(p.eval_lambda(&rat(1, 2)).is_zero());
        assert!(!p.is_lambda_free());
        assert!(p.eval_lambda(&int(3)).is_lambda_free());
    }
}
