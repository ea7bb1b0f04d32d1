//! Polynomials in fibre variables (ξ for symbols, ∂ for operators) whose coefficients are
//! [`CoeffPoly`]s. The two kinds share storage and linear structure; the product differs
//! (pointwise for symbols, composition for operators) and lives with each kind.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, Neg, Sub};

use super::coeff_poly::CoeffPoly;
use super::multi_index::MultiIndex;
use super::rational::Rational;
use super::scalar::Scalar;
use crate::error::{Error, Result};

pub trait FiberKind: Clone + fmt::Debug + PartialEq + Eq + Hash + Default + Send + Sync {
    const TEXT: &'static str;
    const LATEX: &'static str;
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Xi;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partial;

impl FiberKind for Xi {
    const TEXT: &'static str = "xi";
    const LATEX: &'static str = "\\xi";
}

impl FiberKind for Partial {
    const TEXT: &'static str = "d";
    const LATEX: &'static str = "\\partial";
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiberPoly<K: FiberKind> {
    n: usize,
    terms: BTreeMap<MultiIndex, CoeffPoly>,
    kind: PhantomData<K>,
}

impl<K: FiberKind> FiberPoly<K> {
    pub fn zero(n: usize) -> Self {
        FiberPoly { n, terms: BTreeMap::new(), kind: PhantomData }
    }

    pub fn monomial(n: usize, fiber: MultiIndex, coeff: CoeffPoly) -> Self {
        let mut p = Self::zero(n);
        p.add_term(fiber, &coeff);
        p
    }

    /// Zero-order element with the given coefficient.
    pub fn from_coeff(c: CoeffPoly) -> Self {
        let n = c.n();
        Self::monomial(n, MultiIndex::zero(n), c)
    }

    /// The bare fibre variable with index `i` (ξᵢ or ∂ᵢ).
    pub fn fiber_var(n: usize, i: usize) -> Self {
        Self::monomial(n, MultiIndex::unit(n, i), CoeffPoly::one(n))
    }

    pub fn one(n: usize) -> Self {
        Self::from_coeff(CoeffPoly::one(n))
    }

    pub fn from_terms(n: usize, it: impl IntoIterator<Item = (MultiIndex, CoeffPoly)>) -> Self {
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &CoeffPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &MultiIndex) -> CoeffPoly {
        self.terms.get(e).cloned().unwrap_or_else(|| CoeffPoly::zero(self.n))
    }

    pub fn add_term(&mut self, e: MultiIndex, c: &CoeffPoly) {
        assert_eq!(e.dim(), self.n, "fibre index length");
        assert_eq!(c.n(), self.n, "coefficient dimension");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    /// Highest fibre degree (order of an operator); `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    /// Distinct fibre degrees present, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(|e| e.degree()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn homogeneous(&self, k: usize) -> Self {
        Self::from_terms(
            self.n,
            self.terms.iter().filter(|(e, _)| e.degree() == k).map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn is_homogeneous(&self, k: usize) -> bool {
        self.terms.keys().all(|e| e.degree() == k)
    }

    pub fn expect_homogeneous(&self, k: usize) -> Result<()> {
        if self.is_homogeneous(k) {
            Ok(())
        } else {
            Err(Error::NotHomogeneous { expected: k, found: self.degrees() })
        }
    }

    /// Homogeneous components keyed by fibre degree.
    pub fn components(&self) -> BTreeMap<usize, Self> {
        let mut out: BTreeMap<usize, Self> = BTreeMap::new();
        for (e, c) in &self.terms {
            out.entry(e.degree()).or_insert_with(|| Self::zero(self.n)).add_term(e.clone(), c);
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&CoeffPoly) -> CoeffPoly) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.map_coeffs(|c| c.scale(s))
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        self.map_coeffs(|c| c.scale_rat(r))
    }

    /// Multiply every coefficient by a function (on the left, as a coefficient).
    pub fn scale_coeff(&self, f: &CoeffPoly) -> Self {
        self.map_coeffs(|c| c * f)
    }

    /// Coefficient-wise ∂/∂x^{axis}.
    pub fn partial_x(&self, axis: usize) -> Self {
        self.map_coeffs(|c| c.partial(axis))
    }

    pub fn eval_lambda(&self, at: &Rational) -> Self {
        self.map_coeffs(|c| c.eval_lambda(at))
    }

    pub fn substitute_lambda(&self, s: &Scalar) -> Self {
        self.map_coeffs(|c| c.substitute_lambda(s))
    }

    pub fn is_lambda_free(&self) -> bool {
        self.terms.values().all(|c| c.is_lambda_free())
    }

    /// Largest x-degree among coefficients.
    pub fn coeff_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(|c| c.degree()).max()
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check_dim(o)?;
        Ok(self + o)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.check_dim(o)?;
        Ok(self - o)
    }

    pub(crate) fn check_dim(&self, o: &Self) -> Result<()> {
        if self.n != o.n {
            return Err(Error::DimensionMismatch { left: self.n, right: o.n });
        }
        Ok(())
    }

    fn fiber_text(e: &MultiIndex, latex: bool) -> String {
        let mut f = Vec::new();
        for (i, &k) in e.exps().iter().enumerate() {
            let v = if latex { format!("{}_{}", K::LATEX, i + 1) } else { format!("{}{}", K::TEXT, i + 1) };
            match k {
                0 => {}
                1 => f.push(v),
                _ => f.push(format!("{v}^{k}")),
            }
        }
        f.join(if latex { " " } else { "*" })
    }

    fn render(&self, latex: bool) -> String {
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let mono = Self::fiber_text(e, latex);
            let ctext = if latex { c.to_latex() } else { c.to_string() };
            let piece = if mono.is_empty() {
                if c.is_compound() && !out.is_empty() {
                    format!("({ctext})")
                } else {
                    ctext
                }
            } else if c.is_compound() {
                format!("({ctext}){}{mono}", if latex { " " } else { "*" })
            } else if ctext == "1" {
                mono
            } else if ctext == "-1" {
                format!("-{mono}")
            } else {
                format!("{ctext}{}{mono}", if latex { " " } else { "*" })
            };
            if out.is_empty() {
                out = piece;
            } else if let Some(rest) = piece.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&piece);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }
}

impl<K: FiberKind> fmt::Display for FiberPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl<'a, K: FiberKind> Add<&'a FiberPoly<K>> for &'a FiberPoly<K> {
    type Output = FiberPoly<K>;
    fn add(self, o: &FiberPoly<K>) -> FiberPoly<K> {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl<'a, K: FiberKind> Sub<&'a FiberPoly<K>> for &'a FiberPoly<K> {
    type Output = FiberPoly<K>;
    fn sub(self, o: &FiberPoly<K>) -> FiberPoly<K> {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }
}

impl<K: FiberKind> Neg for &FiberPoly<K> {
    type Output = FiberPoly<K>;
    fn neg(self) -> FiberPoly<K> {
        self.map_coeffs(|c| -c)
    }
}

impl<K: FiberKind> Add for FiberPoly<K> {
    type Output = FiberPoly<K>;
    fn add(self, o: Self) -> Self {
        &self + &o
    }
}

impl<K: FiberKind> Sub for FiberPoly<K> {
    type Output = FiberPoly<K>;
    fn sub(self, o: Self) -> Self {
        &self - &o
    }
}

impl<K: FiberKind> Neg for FiberPoly<K> {
    type Output = FiberPoly<K>;
    fn neg(self) -> Self {
        -&self
    }
}
