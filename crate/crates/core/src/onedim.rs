//! The line: tensor densities, transvectants, the corrections t_k^j(λ) of the operator
//! action and their relation to Bernoulli polynomials, and low-order cocycles of Vect(ℝ).
//!
//! Symbols of degree k on the line are densities of weight −k; a vector field has weight −1.

use num_traits::Zero;
use rayon::prelude::*;

use crate::cocycles::{extract_gamma, BilinearMap};
use crate::error::{precondition, Error, Result};
use crate::operators::VectorField;
use crate::report::Report;
use crate::ring::{binom_poly, factorial, gauss_solve, int, null_space, rat, CoeffPoly, MultiIndex, Rational, Scalar};
use crate::symbols::SymbolPoly;

/// f(x)|dx|^w on the line; the weight may depend on λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Density1D {
    coeff: CoeffPoly,
    weight: Scalar,
}

impl Density1D {
    pub fn new(coeff: CoeffPoly, weight: Scalar) -> Result<Self> {
        if coeff.n() != 1 {
            return Err(Error::DimensionMismatch { left: coeff.n(), right: 1 });
        }
        Ok(Density1D { coeff, weight })
    }

    pub fn coeff(&self) -> &CoeffPoly {
        &self.coeff
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    fn derivative(&self, i: usize) -> CoeffPoly {
        self.coeff.derive(&MultiIndex::new(vec![i as u32]))
    }

    /// Same-weight sum.
    pub fn try_add(&self, o: &Density1D) -> Result<Density1D> {
        if self.weight != o.weight {
            return precondition(format!("cannot add densities of weights {} and {}", self.weight, o.weight));
        }
        Ok(Density1D { coeff: &self.coeff + &o.coeff, weight: self.weight.clone() })
    }
}

fn line_field(x: &VectorField) -> Result<&CoeffPoly> {
    if x.n() != 1 {
        return precondition(format!("a field on the line is expected, got n = {}", x.n()));
    }
    Ok(x.comp(0))
}

/// L_X(f|dx|^w) = (Xf′ + wX′f)|dx|^w.
pub fn lie_derivative_density(x: &VectorField, d: &Density1D) -> Result<Density1D> {
    let xc = line_field(x)?;
    let c = &(xc * &d.coeff.partial(0)) + &(&xc.partial(0) * &d.coeff).scale(&d.weight);
    Ok(Density1D { coeff: c, weight: d.weight.clone() })
}

fn transvectant_with(phi: &Density1D, psi: &Density1D, m: usize, swap: bool) -> Density1D {
    let shift = Scalar::int(m as i64 - 1);
    let a = &phi.weight.scale(&int(2)) + &shift;
    let b = &psi.weight.scale(&int(2)) + &shift;
    let mut out = CoeffPoly::zero(1);
    for i in 0..=m {
        let j = m - i;
        let c = if swap { &binom_poly(&a, j) * &binom_poly(&b, i) } else { &binom_poly(&a, i) * &binom_poly(&b, j) };
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let c = c.scale(&(factorial(m) * int(sign)));
        out = &out + &(&phi.derivative(i) * &psi.derivative(j)).scale(&c);
    }
    Density1D { coeff: out, weight: &(&phi.weight + &psi.weight) + &Scalar::int(m as i64) }
}

/// J_m(φ,ψ) = Σ_{i+j=m} (−1)ⁱ m!·C(2λ+m−1, j)·C(2μ+m−1, i)·φ^{(i)}ψ^{(j)} for φ of weight λ
/// and ψ of weight μ: the sl₂-equivariant pairing, of weight λ+μ+m.
pub fn transvectant(phi: &Density1D, psi: &Density1D, m: usize) -> Density1D {
    transvectant_with(phi, psi, m, true)
}

/// The same sum with the binomials attached the other way round,
/// C(2λ+m−1, i)·C(2μ+m−1, j); not equivariant for m ≥ 1 unless λ = μ.
pub fn transvectant_literal(phi: &Density1D, psi: &Density1D, m: usize) -> Density1D {
    transvectant_with(phi, psi, m, false)
}

fn sl2() -> Vec<VectorField> {
    ["1", "x1", "x1^2"]
        .iter()
        .map(|s| VectorField::new(vec![crate::ring::parse_coeff(s, 1).expect("literal")]).expect("rational"))
        .collect()
}

/// L_X J(φ,ψ) = J(L_Xφ, ψ) + J(φ, L_Xψ) for X ∈ {∂, x∂, x²∂}; φ has formal weight λ and ψ
/// runs through m+2 rational weights, enough to make the identity polynomial in both.
pub fn check_transvectant_equivariance(
    m_max: usize,
    pairing: fn(&Density1D, &Density1D, usize) -> Density1D,
) -> Result<Report> {
    let mut r = Report::new(format!("transvectant equivariance m<={m_max}"));
    let polys: Vec<CoeffPoly> = ["x1^5 + 2x1^3 - x1 + 3", "3x1^4 - x1^2 + 2x1", "x1^6 - 5x1^5 + x1"]
        .iter()
        .map(|s| crate::ring::parse_coeff(s, 1).expect("literal"))
        .collect();
    for m in 0..=m_max {
        for t in 0..(m as i64 + 2) {
            let mu = Scalar::constant(rat(2 * t - 3, 3));
            for x in sl2() {
                for f in &polys {
                    for g in &polys {
                        let phi = Density1D::new(f.clone(), Scalar::lambda())?;
                        let psi = Density1D::new(g.clone(), mu.clone())?;
                        let lhs = lie_derivative_density(&x, &pairing(&phi, &psi, m))?;
                        let rhs = pairing(&lie_derivative_density(&x, &phi)?, &psi, m)
                            .try_add(&pairing(&phi, &lie_derivative_density(&x, &psi)?, m))?;
                        r.check(lhs == rhs, || format!("m={m} mu={mu} X={} phi={f} psi={g}", x.comp(0)));
                    }
                }
            }
        }
    }
    Ok(r)
}

fn antiderivative(p: &Scalar) -> Scalar {
    let mut c = vec![int(0)];
    c.extend(p.coeffs().iter().enumerate().map(|(i, a)| a / int(i as i64 + 1)));
    Scalar::from_coeffs(c)
}

/// B_s(λ): B₀ = 1, B_s′ = s·B_{s−1}, ∫₀¹ B_s = 0 for s ≥ 1.
pub fn bernoulli(s: usize) -> Scalar {
    let mut b = Scalar::one();
    for t in 1..=s {
        let anti = antiderivative(&b.scale(&int(t as i64)));
        let mean = antiderivative(&anti).eval(&int(1));
        b = &anti - &Scalar::constant(mean);
    }
    b
}

/// Coefficients of J_m(X, a) on X^{(i)}a^{(m−i)}, i = 0..m, for X of weight −1 and a of
/// weight −k, normalised so that the X^{(m)}a coefficient is 1. `None` at resonant weights,
/// where that coefficient vanishes (2k < m).
pub fn reference_pairing(k: usize, m: usize) -> Option<Vec<Rational>> {
    let x = Scalar::int(-1);
    let a = Scalar::int(-(k as i64));
    let shift = Scalar::int(m as i64 - 1);
    let (bx, ba) = (&x.scale(&int(2)) + &shift, &a.scale(&int(2)) + &shift);
    let raw: Vec<Rational> = (0..=m)
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let c = &binom_poly(&bx, m - i) * &binom_poly(&ba, i);
            c.as_constant().expect("integer weights") * int(sign) * factorial(m)
        })
        .collect();
    let top = raw[m].clone();
    if top.is_zero() {
        return None;
    }
    Some(raw.into_iter().map(|c| c / &top).collect())
}

/// The correction of order j on degree-k symbols, as Σ_i b_i(λ)·X^{(i)}a^{(j+1−i)}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correction1D {
    pub k: usize,
    pub j: usize,
    /// b_0..b_{j+1}
    pub coeffs: Vec<Scalar>,
    /// b_{j+1} when the whole form is b_{j+1}·(normalised J_{j+1}).
    pub t: Option<Scalar>,
}

fn monomial(e: u32) -> CoeffPoly {
    CoeffPoly::monomial(1, MultiIndex::new(vec![e]), Scalar::one())
}

/// Read the correction off σ(ad_X σ⁻¹(a ξ^k)) at n = 1 and match it against the reference
/// pairing. Non-proportionality is reported through `t = None`, never guessed.
pub fn extract_correction_1d(k: usize, j: usize) -> Result<Correction1D> {
    if j < 2 || j > k {
        return precondition(format!("need 2 <= j <= k, got j = {j}, k = {k}"));
    }
    let m = j + 1;
    let ex = extract_gamma(j, k, 1)?;
    let xi_k = MultiIndex::new(vec![k as u32]);
    let xi_out = MultiIndex::new(vec![(k - j) as u32]);
    let cases: Vec<(u32, u32)> = (0..=(m as u32 + 1)).flat_map(|q| (0..=(m as u32)).map(move |r| (q, r))).collect();
    let data = cases
        .par_iter()
        .map(|&(q, r)| {
            let x = VectorField::new(vec![monomial(q)])?;
            let a = SymbolPoly::monomial(1, xi_k.clone(), monomial(r));
            let out = ex.eval(&x, &a)?;
            if out.terms().any(|(e, _)| *e != xi_out) {
                return precondition("correction left the expected degree");
            }
            Ok((q, r, out.coeff(&xi_out)))
        })
        .collect::<Result<Vec<_>>>()?;

    // rows: one per (sample, output monomial); unknowns b_0..b_m; λ-power split on the right
    let mut rows = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for (q, r, out) in &data {
        let xq = monomial(*q);
        let ar = monomial(*r);
        let basis: Vec<CoeffPoly> = (0..=m)
            .map(|i| &xq.derive(&MultiIndex::new(vec![i as u32])) * &ar.derive(&MultiIndex::new(vec![(m - i) as u32])))
            .collect();
        let mut keys: Vec<MultiIndex> = basis.iter().flat_map(|b| b.terms().map(|(e, _)| e.clone())).collect();
        keys.extend(out.terms().map(|(e, _)| e.clone()));
        keys.sort();
        keys.dedup();
        for e in keys {
            rows.push(basis.iter().map(|b| b.coeff(&e).as_constant().expect("rational")).collect::<Vec<_>>());
            rhs.push(out.coeff(&e));
        }
    }
    let lam_deg = rhs.iter().filter_map(|s| s.degree()).max().unwrap_or(0);
    let mut coeffs = vec![Vec::new(); m + 1];
    for d in 0..=lam_deg {
        let b: Vec<Rational> = rhs.iter().map(|s| s.coeff(d)).collect();
        let sol = gauss_solve(&rows, &b)?;
        if sol.dimension() != 0 {
            return precondition("samples do not determine the correction");
        }
        for (i, v) in sol.particular.into_iter().enumerate() {
            coeffs[i].push(v);
        }
    }
    let coeffs: Vec<Scalar> = coeffs.into_iter().map(Scalar::from_coeffs).collect();
    let refp = reference_pairing(k, m).expect("k >= j keeps the weights generic");
    let t = coeffs[m].clone();
    let proportional = coeffs.iter().zip(&refp).all(|(c, r)| *c == t.scale(r));
    Ok(Correction1D { k, j, coeffs, t: proportional.then_some(t) })
}

fn lam_shift() -> Scalar {
    Scalar::from_coeffs(vec![int(0), int(-1), int(1)])
}

/// The closed forms printed for t_k^j, j = 2..5 (for j = 3 the first of the two displays).
pub fn t_display(k: usize, j: usize) -> Option<Scalar> {
    let ki = k as i64;
    let b = bernoulli;
    Some(match j {
        2 => (&lam_shift() - &Scalar::constant(rat((ki + 1) * (ki - 2), 12))).scale(&rat(ki * (ki - 1), 2 * ki - 1)),
        3 => {
            let p = &(&Scalar::lambda() * &Scalar::affine(int(-1), int(2))) * &Scalar::affine(int(-1), int(1));
            p.scale(&rat(ki, 6))
        }
        4 => {
            let inner = &(&b(4) + &b(2).scale(&rat(2 * ki * ki - 6 * ki + 3, 24)))
                - &Scalar::constant(rat(3 * ki.pow(4) + 18 * ki.pow(3) - 35 * ki * ki + 8 * ki + 2, 480));
            inner.scale(&rat(ki * (ki - 1) * (ki - 2), 2 * (2 * ki - 3) * (2 * ki - 5)))
        }
        5 => (&b(5) + &b(3).scale(&rat(5 * (ki - 1) * (ki - 3), 24))).scale(&rat(ki * (ki - 1), 15 * (2 * ki - 7))),
        _ => return None,
    })
}

/// The alternative display of t_k³, (k/12)·B₃(λ).
pub fn t3_bernoulli_display(k: usize) -> Scalar {
    bernoulli(3).scale(&rat(k as i64, 12))
}

/// Write `t` as Σ c_s B_s over s ≡ j (mod 2), s ≤ j; `None` if impossible.
pub fn bernoulli_decomposition(t: &Scalar, j: usize) -> Option<Vec<(usize, Rational)>> {
    let idx: Vec<usize> = (0..=j).filter(|s| s % 2 == j % 2).collect();
    let deg = t.degree().unwrap_or(0).max(j);
    let rows: Vec<Vec<Rational>> =
        (0..=deg).map(|d| idx.iter().map(|&s| bernoulli(s).coeff(d)).collect()).collect();
    let b: Vec<Rational> = (0..=deg).map(|d| t.coeff(d)).collect();
    let sol = gauss_solve(&rows, &b).ok()?;
    Some(idx.into_iter().zip(sol.particular).collect())
}

/// Parity t(1−λ) = (−1)^j t(λ) and membership in the span of B_j, B_{j−2}, … for every
/// extracted t_k^j with 2 ≤ j ≤ k ≤ k_max, j ≤ j_max.
pub fn check_bernoulli_structure(k_max: usize, j_max: usize) -> Result<Report> {
    let mut r = Report::new(format!("Bernoulli structure k<={k_max} j<={j_max}"));
    let dual = Scalar::affine(int(1), int(-1));
    let cases: Vec<(usize, usize)> =
        (2..=k_max).flat_map(|k| (2..=j_max.min(k)).map(move |j| (k, j))).collect();
    let got = cases.par_iter().map(|&(k, j)| extract_correction_1d(k, j)).collect::<Result<Vec<_>>>()?;
    for c in got {
        let Some(t) = c.t.clone() else {
            r.check(false, || format!("k={} j={}: not proportional to the reference pairing", c.k, c.j));
            continue;
        };
        let flipped = t.substitute(&dual);
        let expect = if c.j % 2 == 0 { t.clone() } else { -&t };
        r.check(flipped == expect, || format!("k={} j={}: parity fails for {t}", c.k, c.j));
        let dec = bernoulli_decomposition(&t, c.j);
        r.check(dec.is_some(), || format!("k={} j={}: {t} not in the Bernoulli span", c.k, c.j));
        if let Some(dec) = dec {
            let parts: Vec<String> = dec.iter().map(|(s, v)| format!("{v}*B{s}")).collect();
            r.note(format!("t_{}^{} = {} = {}", c.k, c.j, t, parts.join(" + ")));
        }
    }
    Ok(r)
}

/// Space of coefficient vectors (c_3..c_m) for which X ↦ (a ↦ Σ_{i=3}^m c_i X^{(i)}a^{(m−i)})
/// is a 1-cocycle with values in Hom(F_{−k}, F_{m−1−k}).
pub fn cocycle_space_1d(k: usize, m: usize) -> Result<Vec<Vec<Rational>>> {
    if m < 3 {
        return precondition("patterns start at third derivatives of the field");
    }
    let src = Scalar::int(-(k as i64));
    let dst = Scalar::int(m as i64 - 1 - k as i64);
    let unknowns = m - 2;
    let d = |f: &CoeffPoly, i: usize| f.derive(&MultiIndex::new(vec![i as u32]));
    let apply = |i: usize, x: &CoeffPoly, a: &CoeffPoly| &d(x, i) * &d(a, m - i);
    let lie = |x: &CoeffPoly, a: &CoeffPoly, w: &Scalar| &(x * &a.partial(0)) + &(&x.partial(0) * a).scale(w);
    let mut rows = Vec::new();
    let deg = m as u32 + 3;
    for p in 0..=deg {
        for q in (p + 1)..=deg {
            for s in 0..=(m as u32 + 1) {
                let (x, y, a) = (monomial(p), monomial(q), monomial(s));
                let xy = &(&x * &y.partial(0)) - &(&y * &x.partial(0));
                let defects: Vec<CoeffPoly> = (3..=m)
                    .map(|i| {
                        let mut t = lie(&x, &apply(i, &y, &a), &dst);
                        t = &t - &apply(i, &y, &lie(&x, &a, &src));
                        t = &t - &lie(&y, &apply(i, &x, &a), &dst);
                        t = &t + &apply(i, &x, &lie(&y, &a, &src));
                        &t - &apply(i, &xy, &a)
                    })
                    .collect();
                let mut keys: Vec<MultiIndex> = defects.iter().flat_map(|c| c.terms().map(|(e, _)| e.clone())).collect();
                keys.sort();
                keys.dedup();
                for e in keys {
                    rows.push(defects.iter().map(|c| c.coeff(&e).as_constant().expect("rational")).collect());
                }
            }
        }
    }
    Ok(null_space(&rows, unknowns))
}

/// The s making X ↦ (a ↦ s·X⁗a + 2X‴a′) a cocycle on weight −k, if exactly one does.
pub fn solve_c4(k: usize) -> Result<Option<Rational>> {
    let c4 = cocycle_space_1d(k, 4)?;
    Ok((c4.len() == 1 && !c4[0][0].is_zero()).then(|| &c4[0][1] * int(2) / &c4[0][0]))
}

/// c₃ = X‴a is a cocycle; c₄ = s·X⁗a + 2X‴a′ is one for exactly one s; and the claim that
/// no order-5 pattern X^{(5)}a, X⁗a′, X‴a″ combines into a cocycle.
pub fn check_1d_cocycles(k_max: usize) -> Result<Report> {
    let mut r = Report::new(format!("cocycles of Vect(R) vanishing on sl2, weights -1..-{k_max}"));
    for k in 1..=k_max {
        let c3 = cocycle_space_1d(k, 3)?;
        r.check(c3.len() == 1, || format!("k={k}: X'''a spans a {}-dimensional cocycle space", c3.len()));
        let s = solve_c4(k)?;
        r.check(s.is_some(), || format!("k={k}: no unique s for the order-4 pattern"));
        if let Some(s) = s {
            r.note(format!("weight -{k}: s = {s}"));
        }
        let c5 = cocycle_space_1d(k, 5)?;
        if let Some(v) = c5.first() {
            let matches_j5 = reference_pairing(k, 5).is_some_and(|j| j[3..] == v[..]);
            r.note(format!(
                "weight -{k}: order-5 cocycle space has dimension {}{}",
                c5.len(),
                if matches_j5 { ", spanned by the J5 transvectant" } else { "" }
            ));
        }
        r.check(c5.is_empty(), || format!("k={k}: order-5 pattern has a {}-dimensional cocycle space", c5.len()));
    }
    Ok(r)
}
