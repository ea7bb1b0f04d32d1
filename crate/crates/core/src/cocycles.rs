//! Cohomology of Vect(ℝⁿ) with coefficients in symbol spaces: the projective cocycle γ̄,
//! the bilinear maps γ_p hidden in the operator action, the sl(n+1)-equivariant ansatz
//! for them and its classification system.
//!
//! Ansatz reading (umbral). Write every term as a contraction of derivatives of X with
//! derivatives of a degree-k symbol a. With Q = ∂_ξ^{β+γ}∂_x^{γ} a, a term of family F,
//! index u and depth p is
//!   (r!/k!)·Σ_{|β|=s, |γ|=t} (s!/β!)(t!/γ!)·F_X(β)·Q
//! where
//!   α_u: F = ξᵢ∂^βXⁱ,                     s = u+1, t = p−u, r = k−p−1   (only when k > p)
//!   β_u: F = ∂^{β+eᵢ}Xⁱ,                  s = u,   t = p−u, r = k−p
//!   δ_u: F = ∂^βXⁱ, with an extra ∂ᵢ on Q, s = u,   t = p−u, r = k−p     (δ₁ = 0)
//! The multinomial weights turn monomial storage back into sums over all index tuples.

use rayon::prelude::*;

use crate::error::{precondition, Error, Result};
use crate::operators::{ad_action, sl_generators, VectorField};
use crate::projsym::{quantization_map, symbol_map};
use crate::report::Report;
use crate::ring::{factorial, int, interpolate, null_space, rat, CoeffPoly, MultiIndex, Rational, Scalar};
use crate::ring::{gauss_solve, LinearSolution};
use crate::sample;
use crate::symbols::{contract_12, lie_derivative_symbol, lie_derivative_tensor, SymbolPoly, Tensor12};

/// γ̄(X)^k_{ij} = ∂ᵢ∂ⱼX^k − (δ^k_j∂ᵢdiv X + δ^k_i∂ⱼdiv X)/(n+1), the trace-free part of D²X.
/// Identically zero on the line.
pub fn gamma_bar(x: &VectorField) -> Tensor12 {
    let n = x.n();
    if n == 1 {
        log::warn!("the projective cocycle vanishes identically in dimension 1");
    }
    let div = x.divergence();
    let ddiv: Vec<CoeffPoly> = (0..n).map(|i| div.partial(i)).collect();
    let w = Rational::from_integer(1.into()) / int(n as i64 + 1);
    Tensor12::from_fn(n, |k, i, j| {
        let mut t = x.comp(k).partial(i).partial(j);
        if k == j {
            t = &t - &ddiv[i].scale_rat(&w);
        }
        if k == i {
            t = &t - &ddiv[j].scale_rat(&w);
        }
        t
    })
    .expect("symmetric by construction")
}

/// The closed form γ₁(X, a) = (2λ−1)·k(k−1)(n+1)/(2(2k+n−1))·⟨γ̄(X), a⟩.
pub fn gamma1(x: &VectorField, a: &SymbolPoly) -> Result<SymbolPoly> {
    let Some(k) = a.degree() else {
        return Ok(SymbolPoly::zero(a.n()));
    };
    a.expect_homogeneous(k)?;
    if k < 2 {
        return precondition(format!("gamma1 needs symbol degree at least 2, got {k}"));
    }
    let n = a.n() as i64;
    let k = k as i64;
    let c = Scalar::affine(int(-1), int(2)).scale(&(rat(k * (k - 1) * (n + 1), 2 * (2 * k + n - 1))));
    Ok(contract_12(&gamma_bar(x), a)?.scale(&c))
}

/// Coefficients of the three-family ansatz, 1-based in the accessors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaAnsatz {
    p: usize,
    k: usize,
    n: usize,
    alpha: Vec<Scalar>,
    beta: Vec<Scalar>,
    delta: Vec<Scalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    FreeX,
    DivX,
    Transport,
}

impl GammaAnsatz {
    pub fn zero(p: usize, k: usize, n: usize) -> Result<Self> {
        check_shape(p, k, n)?;
        Ok(GammaAnsatz {
            p,
            k,
            n,
            alpha: vec![Scalar::zero(); p],
            beta: vec![Scalar::zero(); p],
            delta: vec![Scalar::zero(); p - 1],
        })
    }

    /// `alpha` and `beta` hold indices 1..=p, `delta` holds 2..=p.
    pub fn new(p: usize, k: usize, n: usize, alpha: Vec<Scalar>, beta: Vec<Scalar>, delta: Vec<Scalar>) -> Result<Self> {
        check_shape(p, k, n)?;
        if alpha.len() != p || beta.len() != p || delta.len() != p - 1 {
            return precondition(format!(
                "ansatz of depth {p} needs {p} alpha, {p} beta and {} delta entries",
                p - 1
            ));
        }
        if k == p && alpha.iter().any(|a| !a.is_zero()) {
            return precondition("alpha terms do not exist when k = p");
        }
        Ok(GammaAnsatz { p, k, n, alpha, beta, delta })
    }

    pub fn depth(&self) -> usize {
        self.p
    }

    pub fn source_degree(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn alpha(&self, u: usize) -> &Scalar {
        &self.alpha[u - 1]
    }

    pub fn beta(&self, u: usize) -> &Scalar {
        &self.beta[u - 1]
    }

    /// δ_u; δ₁ is identically zero.
    pub fn delta(&self, u: usize) -> Scalar {
        if u == 1 {
            Scalar::zero()
        } else {
            self.delta[u - 2].clone()
        }
    }

    /// Number of free coefficients: [α₁..α_p if k > p, β₁..β_p, δ₂..δ_p].
    pub fn unknown_count(p: usize, k: usize) -> usize {
        let a = if k > p { p } else { 0 };
        a + p + (p - 1)
    }

    pub fn unknowns(&self) -> Vec<Scalar> {
        let mut v = Vec::new();
        if self.k > self.p {
            v.extend(self.alpha.iter().cloned());
        }
        v.extend(self.beta.iter().cloned());
        v.extend(self.delta.iter().cloned());
        v
    }

    pub fn from_unknowns(p: usize, k: usize, n: usize, v: &[Scalar]) -> Result<Self> {
        check_shape(p, k, n)?;
        if v.len() != Self::unknown_count(p, k) {
            return precondition(format!("expected {} coefficients, got {}", Self::unknown_count(p, k), v.len()));
        }
        let mut it = v.iter().cloned();
        let alpha = if k > p { it.by_ref().take(p).collect() } else { vec![Scalar::zero(); p] };
        let beta = it.by_ref().take(p).collect();
        let delta = it.collect();
        Self::new(p, k, n, alpha, beta, delta)
    }

    pub fn from_rationals(p: usize, k: usize, n: usize, v: &[Rational]) -> Result<Self> {
        let s: Vec<Scalar> = v.iter().cloned().map(Scalar::constant).collect();
        Self::from_unknowns(p, k, n, &s)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let f = |v: &Vec<Scalar>| v.iter().map(|c| c * s).collect();
        GammaAnsatz { p: self.p, k: self.k, n: self.n, alpha: f(&self.alpha), beta: f(&self.beta), delta: f(&self.delta) }
    }

    pub fn eval_lambda(&self, at: &Rational) -> Self {
        let f = |v: &Vec<Scalar>| v.iter().map(|c| Scalar::constant(c.eval(at))).collect();
        GammaAnsatz { p: self.p, k: self.k, n: self.n, alpha: f(&self.alpha), beta: f(&self.beta), delta: f(&self.delta) }
    }

    /// Named coefficient list in display order, e.g. for reports.
    pub fn named(&self) -> Vec<(String, Scalar)> {
        let mut v = Vec::new();
        for u in 1..=self.p {
            v.push((format!("alpha{u}"), self.alpha(u).clone()));
        }
        for u in 1..=self.p {
            v.push((format!("beta{u}"), self.beta(u).clone()));
        }
        for u in 2..=self.p {
            v.push((format!("delta{u}"), self.delta(u)));
        }
        v
    }

    /// If `self = c·other` for a constant c, returns c.
    pub fn ratio_to(&self, other: &GammaAnsatz) -> Option<Scalar> {
        let (a, b) = (self.unknowns(), other.unknowns());
        let (i, pivot) = b.iter().enumerate().find(|(_, c)| !c.is_zero())?;
        let c = a[i].exact_div(pivot)?;
        a.iter().zip(&b).all(|(x, y)| *x == y * &c).then_some(c)
    }
}

fn check_shape(p: usize, k: usize, n: usize) -> Result<()> {
    if p == 0 || p > k {
        return precondition(format!("need 1 <= p <= k, got p = {p}, k = {k}"));
    }
    if n == 0 {
        return precondition("dimension must be at least 1");
    }
    Ok(())
}

fn family_term(x: &VectorField, a: &SymbolPoly, k: usize, p: usize, u: usize, fam: Family) -> SymbolPoly {
    let n = a.n();
    let (s, r) = match fam {
        Family::FreeX => (u + 1, k - p - 1),
        Family::DivX | Family::Transport => (u, k - p),
    };
    let t = p - u;
    let mut out = SymbolPoly::zero(n);
    for beta in MultiIndex::of_degree(n, s) {
        let wb = beta.multinomial();
        let dx: Vec<CoeffPoly> = match fam {
            Family::DivX => {
                let d = (0..n).fold(CoeffPoly::zero(n), |acc, i| &acc + &x.comp(i).derive(&beta.bump(i)));
                vec![d]
            }
            _ => (0..n).map(|i| x.comp(i).derive(&beta)).collect(),
        };
        if dx.iter().all(|c| c.is_zero()) {
            continue;
        }
        for gamma in MultiIndex::of_degree(n, t) {
            let q = a.derive_xi(&beta.add(&gamma)).derive_x(&gamma);
            if q.is_zero() {
                continue;
            }
            let w = &wb * gamma.multinomial();
            let mut piece = SymbolPoly::zero(n);
            match fam {
                Family::FreeX => {
                    for (i, c) in dx.iter().enumerate() {
                        if !c.is_zero() {
                            piece = &piece + &q.shift_xi(&MultiIndex::unit(n, i)).scale_coeff(c);
                        }
                    }
                }
                Family::DivX => piece = q.scale_coeff(&dx[0]),
                Family::Transport => {
                    for (i, c) in dx.iter().enumerate() {
                        if !c.is_zero() {
                            piece = &piece + &q.partial_x(i).scale_coeff(c);
                        }
                    }
                }
            }
            out = &out + &piece.scale_rat(&w);
        }
    }
    out.scale_rat(&(factorial(r) / factorial(k)))
}

/// Evaluate the ansatz on (X, a) with a homogeneous of the ansatz's source degree.
pub fn apply_ansatz(g: &GammaAnsatz, x: &VectorField, a: &SymbolPoly) -> Result<SymbolPoly> {
    let n = g.n;
    if x.n() != n || a.n() != n {
        return Err(Error::DimensionMismatch { left: n, right: if x.n() != n { x.n() } else { a.n() } });
    }
    a.expect_homogeneous(g.k)?;
    let mut out = SymbolPoly::zero(n);
    for u in 1..=g.p {
        if g.k > g.p && !g.alpha(u).is_zero() {
            out = &out + &family_term(x, a, g.k, g.p, u, Family::FreeX).scale(g.alpha(u));
        }
        if !g.beta(u).is_zero() {
            out = &out + &family_term(x, a, g.k, g.p, u, Family::DivX).scale(g.beta(u));
        }
        let d = g.delta(u);
        if !d.is_zero() {
            out = &out + &family_term(x, a, g.k, g.p, u, Family::Transport).scale(&d);
        }
    }
    Ok(out)
}

/// Solution space of the recurrent system, optionally with the cocycle constraints.
#[derive(Clone, Debug)]
pub struct SysSolution {
    pub dimension: usize,
    pub basis: Vec<GammaAnsatz>,
}

/// The linear system that equivariance and vanishing on sl(n+1) impose on the ansatz,
/// for u = 1..p with α_{p+1} = β_{p+1} = δ_{p+1} = δ₁ = 0:
///   −u(u+2)α_{u+1} + (k−p)δ_{u+1} + (p−u)(2k+n−p+u)α_u = 0
///   −u(u+1)β_{u+1} + (u+1)δ_{u+1} + (p−u)(2k+n−p+u)β_u = 0
///   −(u²−1)δ_{u+1} + (p−u)(2k+n−p+u)δ_u = 0
///   (u+1)δ_{u+1} + (u+1)α_u + (k−p+u)δ_u + (n+1)β_u = 0
/// The cocycle constraints add β₁ = β₂ and, from p = 3 on, β₁ = β_p.
pub fn solve_sys(k: usize, p: usize, n: usize, cocycle_constraints: bool) -> Result<SysSolution> {
    check_shape(p, k, n)?;
    let cols = GammaAnsatz::unknown_count(p, k);
    let has_alpha = k > p;
    let off_beta = if has_alpha { p } else { 0 };
    let alpha = |u: usize| (has_alpha && (1..=p).contains(&u)).then(|| u - 1);
    let beta = |u: usize| (1..=p).contains(&u).then(|| off_beta + u - 1);
    let delta = |u: usize| (2..=p).contains(&u).then(|| off_beta + p + u - 2);
    let (k, n) = (k as i64, n as i64);
    let pp = p as i64;

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut push = |terms: &[(Option<usize>, i64)]| {
        let mut row = vec![Rational::from_integer(0.into()); cols];
        for (c, v) in terms {
            if let Some(c) = c {
                row[*c] += int(*v);
            }
        }
        rows.push(row);
    };
    for u in 1..=p {
        let ui = u as i64;
        let m = (pp - ui) * (2 * k + n - pp + ui);
        push(&[(alpha(u + 1), -ui * (ui + 2)), (delta(u + 1), k - pp), (alpha(u), m)]);
        push(&[(beta(u + 1), -ui * (ui + 1)), (delta(u + 1), ui + 1), (beta(u), m)]);
        push(&[(delta(u + 1), -(ui * ui - 1)), (delta(u), m)]);
        push(&[(delta(u + 1), ui + 1), (alpha(u), ui + 1), (delta(u), k - pp + ui), (beta(u), n + 1)]);
    }
    if cocycle_constraints && p >= 2 {
        push(&[(beta(1), 1), (beta(2), -1)]);
        if p >= 3 {
            push(&[(beta(1), 1), (beta(p), -1)]);
        }
    }
    let basis = null_space(&rows, cols)
        .into_iter()
        .map(|v| GammaAnsatz::from_rationals(p, k as usize, n as usize, &v))
        .collect::<Result<Vec<_>>>()?;
    Ok(SysSolution { dimension: basis.len(), basis })
}

/// The cocycle c₂: α₁ = k−2, α₂ = (k−2)(2k+n+1)/6, β₁ = β₂ = 1, δ₂ = −(2k+n−3)/2.
pub fn c2_coeffs(k: usize, n: usize) -> Result<GammaAnsatz> {
    if k < 2 || n < 1 {
        return precondition(format!("c2 needs k >= 2, got k = {k}"));
    }
    let (ki, ni) = (k as i64, n as i64);
    let (a1, a2) = if k > 2 {
        (Scalar::int(ki - 2), Scalar::constant(rat((ki - 2) * (2 * ki + ni + 1), 6)))
    } else {
        (Scalar::zero(), Scalar::zero())
    };
    GammaAnsatz::new(2, k, n, vec![a1, a2], vec![Scalar::one(), Scalar::one()], vec![Scalar::constant(rat(
        -(2 * ki + ni - 3),
        2,
    ))])
}

/// The ansatz form of γ₁: α₁ = (2λ−1)k(k−1)(n+1)/(2(2k+n−1)), β₁ = −(2λ−1)k(k−1)/(2k+n−1).
pub fn gamma1_ansatz(k: usize, n: usize) -> Result<GammaAnsatz> {
    if k < 2 {
        return precondition(format!("gamma1 needs k >= 2, got k = {k}"));
    }
    let (ki, ni) = (k as i64, n as i64);
    let tl = Scalar::affine(int(-1), int(2));
    let c = ki * (ki - 1);
    let a = tl.scale(&rat(c * (ni + 1), 2 * (2 * ki + ni - 1)));
    let b = tl.scale(&rat(-c, 2 * ki + ni - 1));
    GammaAnsatz::new(1, k, n, vec![a], vec![b], vec![])
}

fn lambda_shift() -> Scalar {
    // λ(λ−1)
    Scalar::from_coeffs(vec![int(0), int(-1), int(1)])
}

/// The second-order coefficients exactly as displayed, with the displayed prefactor
/// k(k−1)/(2(2k+n−2)). See [`gamma2_exact`] for the values the action actually produces.
pub fn gamma2_coeffs(k: usize, n: usize) -> Result<(Scalar, GammaAnsatz)> {
    if k < 2 {
        return precondition(format!("gamma2 needs k >= 2, got k = {k}"));
    }
    let (ki, ni) = (k as i64, n as i64);
    let l = lambda_shift();
    let n1 = ni + 1;
    let c = |v: i64| Scalar::int(v);
    let a1 = (&l.scale(&int(2 * n1 * n1)) + &c(2 * ki * ki + 2 * ki * ni - 4 * ki + ni * ni - ni + 2))
        .scale(&rat(-(ki - 2), 2 * ki + ni - 1));
    let a2 = (&l.scale(&int(n1 * n1)) + &Scalar::constant(rat(ki * ki + ki * ni + ni * ni - ki + ni, 3)))
        .scale(&int(-(ki - 2)));
    let b1 = (&l.scale(&int((4 * ki + ni - 5) * n1)) + &c((ki - 2) * (ki - 1))).scale(&rat(1, 2 * ki + ni - 1));
    let b2 = &l.scale(&int((4 * ki - 6) * n1)) + &c((ki - 2) * ni);
    let d2 = &l.scale(&int(-n1 * n1)) - &c((ki - 2) * (ki + ni - 1));
    let pre = Scalar::constant(rat(ki * (ki - 1), 2 * (2 * ki + ni - 2)));
    let g = GammaAnsatz::new(2, k, n, vec![a1, a2], vec![b1, b2], vec![d2])?;
    Ok((pre, g))
}

/// The second-order coefficients reproduced by the action: prefactor k(k−1)/(2(2k+n−2)(2k+n−3)),
/// α₁, α₂, β₂ as displayed, β₁ = 2((4k+n−5)(n+1)λ(λ−1) − (k−2)(k−1))/(2k+n−1),
/// δ₂ = −(n+1)²λ(λ−1) + (k−2)(k+n−1).
pub fn gamma2_exact(k: usize, n: usize) -> Result<(Scalar, GammaAnsatz)> {
    let (_, shown) = gamma2_coeffs(k, n)?;
    let (ki, ni) = (k as i64, n as i64);
    if 2 * ki + ni - 3 == 0 {
        return precondition("gamma2 prefactor is singular at k = 2, n = 1");
    }
    let l = lambda_shift();
    let n1 = ni + 1;
    let b1 = (&l.scale(&int((4 * ki + ni - 5) * n1)) - &Scalar::int((ki - 2) * (ki - 1)))
        .scale(&rat(2, 2 * ki + ni - 1));
    let d2 = &l.scale(&int(-n1 * n1)) + &Scalar::int((ki - 2) * (ki + ni - 1));
    let pre = Scalar::constant(rat(ki * (ki - 1), 2 * (2 * ki + ni - 2) * (2 * ki + ni - 3)));
    let g = GammaAnsatz::new(
        2,
        k,
        n,
        vec![shown.alpha(1).clone(), shown.alpha(2).clone()],
        vec![b1, shown.beta(2).clone()],
        vec![d2],
    )?;
    Ok((pre, g))
}

/// A bilinear differential map Vect ⊗ 𝒮ᵏ → 𝒮^{k−p}.
pub trait BilinearMap: Sync {
    fn source_degree(&self) -> usize;
    fn depth(&self) -> usize;
    fn dim(&self) -> usize;
    fn eval(&self, x: &VectorField, a: &SymbolPoly) -> Result<SymbolPoly>;
}

impl BilinearMap for GammaAnsatz {
    fn source_degree(&self) -> usize {
        self.k
    }
    fn depth(&self) -> usize {
        self.p
    }
    fn dim(&self) -> usize {
        self.n
    }
    fn eval(&self, x: &VectorField, a: &SymbolPoly) -> Result<SymbolPoly> {
        apply_ansatz(self, x, a)
    }
}

/// `factor·inner`.
pub struct Scaled<M> {
    pub factor: Scalar,
    pub inner: M,
}

impl<M: BilinearMap> BilinearMap for Scaled<M> {
    fn source_degree(&self) -> usize {
        self.inner.source_degree()
    }
    fn depth(&self) -> usize {
        self.inner.depth()
    }
    fn dim(&self) -> usize {
        self.inner.dim()
    }
    fn eval(&self, x: &VectorField, a: &SymbolPoly) -> Result<SymbolPoly> {
        Ok(self.inner.eval(x, a)?.scale(&self.factor))
    }
}

/// γ_p read off the operator action: the degree-(k−p) part of σ(ad_X σ⁻¹(a)), λ formal.
#[derive(Clone, Copy, Debug)]
pub struct ExtractedGamma {
    pub p: usize,
    pub k: usize,
    pub n: usize,
}

pub fn extract_gamma(p: usize, k: usize, n: usize) -> Result<ExtractedGamma> {
    if p > k || n == 0 {
        return precondition(format!("need p <= k and n >= 1, got p = {p}, k = {k}, n = {n}"));
    }
    Ok(ExtractedGamma { p, k, n })
}

impl BilinearMap for ExtractedGamma {
    fn source_degree(&self) -> usize {
        self.k
    }
    fn depth(&self) -> usize {
        self.p
    }
    fn dim(&self) -> usize {
        self.n
    }
    fn eval(&self, x: &VectorField, a: &SymbolPoly) -> Result<SymbolPoly> {
        a.expect_homogeneous(self.k)?;
        let op = ad_action(x, &quantization_map(a))?;
        Ok(symbol_map(&op).homogeneous(self.k - self.p))
    }
}

/// The closed form of γ₁ as a [`BilinearMap`].
#[derive(Clone, Copy, Debug)]
pub struct Gamma1 {
    pub k: usize,
    pub n: usize,
}

impl BilinearMap for Gamma1 {
    fn source_degree(&self) -> usize {
        self.k
    }
    fn depth(&self) -> usize {
        1
    }
    fn dim(&self) -> usize {
        self.n
    }
    fn eval(&self, x: &VectorField, a: &SymbolPoly) -> Result<SymbolPoly> {
        gamma1(x, a)
    }
}

/// Seeded (field, symbol) samples adapted to the depth of a map.
pub fn ansatz_samples(n: usize, k: usize, p: usize, count: usize, seed: u64) -> Vec<(VectorField, SymbolPoly)> {
    let mut rng = sample::rng(seed);
    (0..count)
        .map(|_| {
            let x = sample::random_field(&mut rng, n, p + 2, 3);
            let a = sample::random_symbol(&mut rng, n, k, p + 1, 2);
            (x, a)
        })
        .collect()
}

/// Does `m` agree with `other` on every sample?
pub fn agree_on(m: &dyn BilinearMap, other: &dyn BilinearMap, samples: &[(VectorField, SymbolPoly)]) -> Result<bool> {
    let res: Vec<Result<bool>> = samples.par_iter().map(|(x, a)| Ok(m.eval(x, a)? == other.eval(x, a)?)).collect();
    res.into_iter().try_fold(true, |acc, r| Ok(acc && r?))
}

fn columns(rows: &mut Vec<Vec<Rational>>, keyed: Vec<SymbolPoly>) {
    use std::collections::BTreeMap;
    let cols = keyed.len();
    let mut at: BTreeMap<(MultiIndex, MultiIndex), Vec<Rational>> = BTreeMap::new();
    for (j, p) in keyed.iter().enumerate() {
        for (e, c) in p.terms() {
            for (m, s) in c.terms() {
                let v = s.as_constant().expect("rational condition");
                at.entry((e.clone(), m.clone())).or_insert_with(|| vec![Rational::from_integer(0.into()); cols])[j] += v;
            }
        }
    }
    rows.extend(at.into_values());
}

/// Fit the ansatz of depth p to a map (λ formal): solve at several λ and interpolate, then
/// confirm the fitted coefficients reproduce the map exactly on the samples.
pub fn fit_ansatz(m: &dyn BilinearMap, samples: &[(VectorField, SymbolPoly)]) -> Result<GammaAnsatz> {
    let (p, k, n) = (m.depth(), m.source_degree(), m.dim());
    let cols = GammaAnsatz::unknown_count(p, k);
    let unit = |j: usize| {
        let mut v = vec![Rational::from_integer(0.into()); cols];
        v[j] = Rational::from_integer(1.into());
        GammaAnsatz::from_rationals(p, k, n, &v)
    };
    let units = (0..cols).map(unit).collect::<Result<Vec<_>>>()?;
    let targets = samples.par_iter().map(|(x, a)| m.eval(x, a)).collect::<Result<Vec<_>>>()?;
    let basis_out: Vec<Vec<SymbolPoly>> = samples
        .par_iter()
        .map(|(x, a)| units.iter().map(|u| apply_ansatz(u, x, a)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;

    let points: Vec<Rational> = (0..(p as i64 + 4)).map(|i| rat(i, 1)).collect();
    let mut values: Vec<Vec<(Rational, Rational)>> = vec![Vec::new(); cols];
    for t in &points {
        let mut rows = Vec::new();
        for (outs, target) in basis_out.iter().zip(&targets) {
            let mut keyed = outs.clone();
            keyed.push(target.eval_lambda(t));
            columns(&mut rows, keyed);
        }
        let a: Vec<Vec<Rational>> = rows.iter().map(|r| r[..cols].to_vec()).collect();
        let b: Vec<Rational> = rows.iter().map(|r| r[cols].clone()).collect();
        let LinearSolution { particular, null_space } = gauss_solve(&a, &b)?;
        if !null_space.is_empty() {
            return precondition("the samples do not determine the ansatz coefficients");
        }
        for (j, v) in particular.into_iter().enumerate() {
            values[j].push((t.clone(), v));
        }
    }
    let coeffs: Vec<Scalar> = values.iter().map(|pts| interpolate(pts)).collect();
    let g = GammaAnsatz::from_unknowns(p, k, n, &coeffs)?;
    for ((x, a), target) in samples.iter().zip(&targets) {
        if apply_ansatz(&g, x, a)? != *target {
            return precondition("fitted coefficients are not polynomial of the sampled degree in λ");
        }
    }
    Ok(g)
}

/// L_X(c(Y)a) − c(Y)(L_X a) − L_Y(c(X)a) + c(X)(L_Y a) − c([X,Y])a = 0 on all samples.
pub fn check_cocycle(
    c: &dyn BilinearMap,
    pairs: &[(VectorField, VectorField)],
    symbols: &[SymbolPoly],
) -> Result<Report> {
    let cases: Vec<(&(VectorField, VectorField), &SymbolPoly)> =
        pairs.iter().flat_map(|pr| symbols.iter().map(move |a| (pr, a))).collect();
    let res = cases
        .par_iter()
        .map(|((x, y), a)| cocycle_defect(c, x, y, a))
        .collect::<Result<Vec<SymbolPoly>>>()?;
    let mut r = Report::new(format!("cocycle identity, k={} depth={} n={}", c.source_degree(), c.depth(), c.dim()));
    for (((x, y), a), d) in cases.iter().zip(res) {
        r.check(d.is_zero(), || {
            format!("X={:?} Y={:?} a={a}: defect {d}", field_text(x), field_text(y))
        });
    }
    Ok(r)
}

fn field_text(x: &VectorField) -> Vec<String> {
    x.comps().iter().map(|c| c.to_string()).collect()
}

pub fn cocycle_defect(c: &dyn BilinearMap, x: &VectorField, y: &VectorField, a: &SymbolPoly) -> Result<SymbolPoly> {
    let xy = x.bracket(y)?;
    let mut d = lie_derivative_symbol(x, &c.eval(y, a)?)?;
    d = &d - &c.eval(y, &lie_derivative_symbol(x, a)?)?;
    d = &d - &lie_derivative_symbol(y, &c.eval(x, a)?)?;
    d = &d + &c.eval(x, &lie_derivative_symbol(y, a)?)?;
    Ok(&d - &c.eval(&xy, a)?)
}

/// L_X γ̄(Y) − L_Y γ̄(X) − γ̄([X,Y]) = 0 on all pairs.
pub fn check_tensor_cocycle(pairs: &[(VectorField, VectorField)]) -> Result<Report> {
    let mut r = Report::new("projective cocycle identity");
    for (x, y) in pairs {
        let d = lie_derivative_tensor(x, &gamma_bar(y))?
            .sub(&lie_derivative_tensor(y, &gamma_bar(x))?)
            .sub(&gamma_bar(&x.bracket(y)?));
        r.check(d.is_zero(), || format!("X={:?} Y={:?}", field_text(x), field_text(y)));
    }
    Ok(r)
}

/// X d/dx ↦ X‴, the Gelfand–Fuchs cocycle with values in quadratic differentials.
pub fn gelfand_fuchs(x: &VectorField) -> Result<CoeffPoly> {
    if x.n() != 1 {
        return precondition(format!("the Gelfand-Fuchs cocycle lives on the line, got n = {}", x.n()));
    }
    Ok(x.comp(0).partial(0).partial(0).partial(0))
}

/// Dimension of the space of ansatz coefficients satisfying, on seeded samples,
/// sl(n+1)-equivariance, vanishing on sl(n+1) and optionally the cocycle identity.
/// A brute-force check on the recurrent system, independent of its derivation.
pub fn classify_by_sampling(k: usize, p: usize, n: usize, cocycle: bool, seed: u64) -> Result<SysSolution> {
    check_shape(p, k, n)?;
    let cols = GammaAnsatz::unknown_count(p, k);
    let units = (0..cols)
        .map(|j| {
            let mut v = vec![Rational::from_integer(0.into()); cols];
            v[j] = Rational::from_integer(1.into());
            GammaAnsatz::from_rationals(p, k, n, &v)
        })
        .collect::<Result<Vec<_>>>()?;
    let gens = sl_generators(n);
    let mut rng = sample::rng(seed);
    let draws = 3;
    let fields: Vec<VectorField> = (0..draws).map(|_| sample::random_field(&mut rng, n, p + 2, 3)).collect();
    let syms: Vec<SymbolPoly> = (0..draws).map(|_| sample::random_symbol(&mut rng, n, k, p + 1, 2)).collect();

    let mut rows = Vec::new();
    // vanishing on sl(n+1)
    for z in &gens {
        for a in &syms {
            columns(&mut rows, units.iter().map(|u| apply_ansatz(u, z, a)).collect::<Result<_>>()?);
        }
    }
    // equivariance: L_Z γ(Y,a) − γ(Y, L_Z a) − γ([Z,Y], a) = 0
    let cases: Vec<(&VectorField, &VectorField, &SymbolPoly)> = gens
        .iter()
        .flat_map(|z| fields.iter().zip(&syms).map(move |(y, a)| (z, y, a)))
        .collect();
    let eq = cases
        .par_iter()
        .map(|(z, y, a)| {
            let zy = z.bracket(y)?;
            let za = lie_derivative_symbol(z, a)?;
            units
                .iter()
                .map(|u| {
                    let v = lie_derivative_symbol(z, &apply_ansatz(u, y, a)?)?;
                    Ok(&(&v - &apply_ansatz(u, y, &za)?) - &apply_ansatz(u, &zy, a)?)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    for e in eq {
        columns(&mut rows, e);
    }
    if cocycle {
        let pairs: Vec<(VectorField, VectorField)> =
            (0..2).map(|_| (sample::random_field(&mut rng, n, p + 1, 2), sample::random_field(&mut rng, n, p + 1, 2))).collect();
        let a = &syms[0];
        let defects = pairs
            .par_iter()
            .map(|(x, y)| units.iter().map(|u| cocycle_defect(u, x, y, a)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        for d in defects {
            columns(&mut rows, d);
        }
    }
    let basis = null_space(&rows, cols)
        .into_iter()
        .map(|v| GammaAnsatz::from_rationals(p, k, n, &v))
        .collect::<Result<Vec<_>>>()?;
    Ok(SysSolution { dimension: basis.len(), basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_coeff, parse_scalar};

    fn field(comps: &[&str]) -> VectorField {
        VectorField::new(comps.iter().map(|s| parse_coeff(s, comps.len()).unwrap()).collect()).unwrap()
    }

    fn sym(n: usize, terms: &[(&[u32], &str)]) -> SymbolPoly {
        SymbolPoly::from_terms(
            n,
            terms.iter().map(|(e, s)| (MultiIndex::new(e.to_vec()), parse_coeff(s, n).unwrap())),
        )
    }

    #[test]
    fn projective_cocycle_examples() {
        let t = gamma_bar(&field(&["x1^2", "0"]));
        assert_eq!(t.get(0, 0, 0), &parse_coeff("2/3", 2).unwrap());
        assert_eq!(t.get(1, 0, 1), &parse_coeff("-2/3", 2).unwrap());
        assert_eq!(t.get(1, 1, 0), &parse_coeff("-2/3", 2).unwrap());
        assert!(t.get(0, 1, 1).is_zero() && t.get(1, 1, 1).is_zero() && t.get(0, 0, 1).is_zero());
        assert!(t.is_trace_free());
        for g in sl_generators(3) {
            assert!(gamma_bar(&g).is_zero());
        }
        assert!(gamma_bar(&field(&["x1^3"])).is_zero());
    }

    #[test]
    fn gamma1_example_and_half_densities() {
        let x = field(&["x1^2", "0"]);
        let a = sym(2, &[(&[2, 0], "1")]);
        let g = gamma1(&x, &a).unwrap();
        assert_eq!(g, sym(2, &[(&[1, 0], "4/5*l - 2/5")]));
        assert!(g.eval_lambda(&rat(1, 2)).is_zero());
        assert!(gamma1(&x, &sym(2, &[(&[1, 0], "1")])).is_err());
    }

    #[test]
    fn gamma1_agrees_with_its_ansatz_form() {
        for (k, n) in [(2, 2), (3, 2), (2, 3)] {
            let s = ansatz_samples(n, k, 1, 3, 11);
            let g = gamma1_ansatz(k, n).unwrap();
            assert!(agree_on(&Gamma1 { k, n }, &g, &s).unwrap(), "k={k} n={n}");
        }
    }

    #[test]
    fn zero_ansatz_is_zero() {
        let g = GammaAnsatz::zero(2, 3, 2).unwrap();
        let (x, a) = &ansatz_samples(2, 3, 2, 1, 3)[0];
        assert!(apply_ansatz(&g, x, a).unwrap().is_zero());
        assert!(GammaAnsatz::zero(3, 2, 2).is_err());
    }

    #[test]
    fn classification_dimensions() {
        for n in [2, 3] {
            assert_eq!(solve_sys(3, 2, n, false).unwrap().dimension, 2);
            assert_eq!(solve_sys(2, 2, n, false).unwrap().dimension, 1);
            assert_eq!(solve_sys(1, 1, n, false).unwrap().dimension, 0);
            for k in 2..=4 {
                assert_eq!(solve_sys(k, 1, n, false).unwrap().dimension, 1);
            }
            let c = solve_sys(3, 2, n, true).unwrap();
            assert_eq!(c.dimension, 1);
            assert!(c.basis[0].ratio_to(&c2_coeffs(3, n).unwrap()).is_some());
            assert_eq!(solve_sys(4, 3, n, true).unwrap().dimension, 0);
        }
    }

    #[test]
    fn c2_instances() {
        let g = c2_coeffs(3, 2).unwrap();
        let v: Vec<String> = g.named().iter().map(|(_, s)| s.to_string()).collect();
        assert_eq!(v, ["1", "3/2", "1", "1", "-5/2"]);
        let g = c2_coeffs(2, 2).unwrap();
        assert!(g.alpha(1).is_zero() && g.alpha(2).is_zero());
        assert_eq!(g.delta(2), parse_scalar("-3/2").unwrap());
    }

    #[test]
    fn gamma2_display_instance() {
        let (pre, g) = gamma2_coeffs(3, 2).unwrap();
        assert_eq!(g.delta(2), parse_scalar("-9l^2 + 9l - 4").unwrap());
        assert_eq!(pre, parse_scalar("1/2").unwrap());
        let (_, g2) = gamma2_coeffs(2, 3).unwrap();
        assert!(g2.alpha(1).is_zero() && g2.alpha(2).is_zero());
    }

    #[test]
    fn gelfand_fuchs_values() {
        assert_eq!(gelfand_fuchs(&field(&["x1^3"])).unwrap(), parse_coeff("6", 1).unwrap());
        assert!(gelfand_fuchs(&field(&["x1^2"])).unwrap().is_zero());
        assert_eq!(gelfand_fuchs(&field(&["x1^4"])).unwrap(), parse_coeff("24x1", 1).unwrap());
        assert!(gelfand_fuchs(&field(&["x1", "x2"])).is_err());
    }
}
