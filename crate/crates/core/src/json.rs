//! Wire formats. Coefficients travel as canonical text ("3/5*l*x1 - 2"), exponent vectors as
//! integer arrays, so nothing loses precision on the way through JSON.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operators::{DiffOp, VectorField};
use crate::ring::fiber::{FiberKind, FiberPoly};
use crate::ring::{parse_coeff, parse_rational, parse_scalar, MultiIndex, Rational, Scalar};
use crate::symbols::{SymbolPoly, Tensor12};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorTerm {
    pub dx: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolTerm {
    pub xi: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorJson {
    pub terms: Vec<OperatorTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolJson {
    pub terms: Vec<SymbolTerm>,
}

/// A vector field as its component list "X¹", …, "Xⁿ".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldJson {
    pub components: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DensityJson {
    pub coeff: String,
    pub weight: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorEntry {
    pub upper: usize,
    pub lower: [usize; 2],
    pub coeff: String,
}

fn exponent(n: usize, e: &[u32]) -> Result<MultiIndex> {
    if e.len() != n {
        return Err(Error::DimensionMismatch { left: n, right: e.len() });
    }
    Ok(MultiIndex::new(e.to_vec()))
}

fn poly_from<K: FiberKind>(n: usize, terms: impl Iterator<Item = (Vec<u32>, String)>) -> Result<FiberPoly<K>> {
    let mut out = FiberPoly::zero(n);
    for (e, c) in terms {
        out.add_term(exponent(n, &e)?, &parse_coeff(&c, n)?);
    }
    Ok(out)
}

impl OperatorJson {
    /// Operators carry no λ in their coefficients.
    pub fn to_operator(&self, n: usize) -> Result<DiffOp> {
        let op: DiffOp = poly_from(n, self.terms.iter().map(|t| (t.dx.clone(), t.coeff.clone())))?;
        if !op.is_lambda_free() {
            return Err(Error::LambdaDependent);
        }
        Ok(op)
    }

    pub fn from_operator(op: &DiffOp) -> Self {
        OperatorJson {
            terms: op.terms().map(|(e, c)| OperatorTerm { dx: e.exps().to_vec(), coeff: c.to_string() }).collect(),
        }
    }
}

impl SymbolJson {
    pub fn to_symbol(&self, n: usize) -> Result<SymbolPoly> {
        poly_from(n, self.terms.iter().map(|t| (t.xi.clone(), t.coeff.clone())))
    }

    pub fn from_symbol(p: &SymbolPoly) -> Self {
        SymbolJson {
            terms: p.terms().map(|(e, c)| SymbolTerm { xi: e.exps().to_vec(), coeff: c.to_string() }).collect(),
        }
    }
}

impl FieldJson {
    pub fn to_field(&self, n: usize) -> Result<VectorField> {
        if self.components.len() != n {
            return Err(Error::DimensionMismatch { left: n, right: self.components.len() });
        }
        VectorField::new(self.components.iter().map(|c| parse_coeff(c, n)).collect::<Result<_>>()?)
    }
}

pub fn tensor_entries(t: &Tensor12) -> Vec<TensorEntry> {
    let n = t.n();
    let mut out = Vec::new();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let c = t.get(k, i, j);
                if !c.is_zero() {
                    out.push(TensorEntry { upper: k + 1, lower: [i + 1, j + 1], coeff: c.to_string() });
                }
            }
        }
    }
    out
}

/// "formal" (or absent) keeps λ symbolic; anything else must be a rational.
pub fn parse_weight(s: Option<&str>) -> Result<Scalar> {
    match s {
        None | Some("formal") => Ok(Scalar::lambda()),
        Some(t) => parse_rational(t)
            .map(Scalar::constant)
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("weight {t:?} is neither \"formal\" nor a rational") }),
    }
}

pub fn parse_rational_field(s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| Error::Parse { pos: 0, msg: format!("{s:?} is not a rational") })
}

/// Density weights may be λ-polynomials ("l", "2l - 1") or rationals.
pub fn parse_density_weight(s: &str) -> Result<Scalar> {
    parse_scalar(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbol_round_trip() {
        let j: SymbolJson =
            serde_json::from_str(r#"{"terms":[{"xi":[2,0],"coeff":"x1"},{"xi":[1,0],"coeff":"-6/5*l - 2/5"}]}"#).unwrap();
        let p = j.to_symbol(2).unwrap();
        assert_eq!(SymbolJson::from_symbol(&p).to_symbol(2).unwrap(), p);
    }

    #[test]
    fn schema_errors() {
        assert!(serde_json::from_str::<OperatorJson>(r#"{"terms":[{"dx":[1],"coef":"1"}]}"#).is_err());
        let j: OperatorJson = serde_json::from_str(r#"{"terms":[{"dx":[1,0],"coeff":"l"}]}"#).unwrap();
        assert_eq!(j.to_operator(2), Err(Error::LambdaDependent));
        let j: OperatorJson = serde_json::from_str(r#"{"terms":[{"dx":[1],"coeff":"1"}]}"#).unwrap();
        assert!(matches!(j.to_operator(2), Err(Error::DimensionMismatch { .. })));
        assert!(parse_weight(Some("half")).is_err());
        assert_eq!(parse_weight(Some("1/2")).unwrap().as_constant(), parse_rational("1/2"));
    }
}
