use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::rational::{factorial, fmt_rational, fmt_rational_latex, int, Rational};

/// Element of Q[λ], stored densely by ascending power of λ with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    c: Vec<Rational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(r: Rational) -> Self {
        Self::from_coeffs(vec![r])
    }

    pub fn int(i: i64) -> Self {
        Self::constant(int(i))
    }

    pub fn lambda() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `a + b·λ`
    pub fn affine(a: Rational, b: Rational) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    pub fn from_coeffs(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Scalar { c }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.c.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree in λ; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.c.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.c.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Substitute λ ↦ `s`.
    pub fn substitute(&self, s: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * s) + &Scalar::constant(c.clone());
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Scalar {
        if r.is_zero() {
            return Scalar::zero();
        }
        Scalar { c: self.c.iter().map(|x| x * r).collect() }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division; `None` if `d` is zero.
    pub fn div_rem(&self, d: &Scalar) -> Option<(Scalar, Scalar)> {
        let dd = d.degree()?;
        let lead = d.c[dd].clone();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Some((Scalar::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let f = &r[i + dd] / &lead;
            if !f.is_zero() {
                for (j, dc) in d.c.iter().enumerate() {
                    r[i + j] -= &f * dc;
                }
            }
            q[i] = f;
        }
        Some((Scalar::from_coeffs(q), Scalar::from_coeffs(r)))
    }

    pub fn exact_div(&self, d: &Scalar) -> Option<Scalar> {
        let (q, r) = self.div_rem(d)?;
        r.is_zero().then_some(q)
    }

    pub fn is_divisible_by(&self, d: &Scalar) -> bool {
        self.exact_div(d).is_some()
    }

    pub fn to_latex(&self) -> String {
        join_terms(
            self.c
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(p, c)| {
                    let var = match p {
                        0 => String::new(),
                        1 => "\\lambda".to_string(),
                        _ => format!("\\lambda^{{{p}}}"),
                    };
                    (c.clone(), var)
                }),
            fmt_rational_latex,
            "",
        )
    }
}

/// Render `Σ c·m` with sign-aware joining; `m` empty means a bare constant.
pub(crate) fn join_terms(
    terms: impl Iterator<Item = (Rational, String)>,
    fmt_c: fn(&Rational) -> String,
    sep: &str,
) -> String {
    let mut out = String::new();
    for (c, m) in terms {
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_empty() {
            out.push_str(&fmt_c(&a));
        } else if a.is_one() {
            out.push_str(&m);
        } else {
            out.push_str(&fmt_c(&a));
            out.push_str(sep);
            out.push_str(&m);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = join_terms(
            self.c
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(p, c)| {
                    let var = match p {
                        0 => String::new(),
                        1 => "l".to_string(),
                        _ => format!("l^{p}"),
                    };
                    (c.clone(), var)
                }),
            fmt_rational,
            "*",
        );
        f.write_str(&s)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::constant(r)
    }
}

impl From<i64> for Scalar {
    fn from(i: i64) -> Self {
        Scalar::int(i)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| self.coeff(i) + o.coeff(i)).collect();
        Scalar::from_coeffs(c)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| self.coeff(i) - o.coeff(i)).collect();
        Scalar::from_coeffs(c)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        let mut c = vec![Rational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Scalar::from_coeffs(c)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        if self.c.len() < o.c.len() {
            self.c.resize(o.c.len(), Rational::zero());
        }
        for (a, b) in self.c.iter_mut().zip(&o.c) {
            *a += b;
        }
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self += &(-o);
    }
}

/// `binom(t, m) = t(t−1)…(t−m+1)/m!` with `t` a λ-polynomial.
pub fn binom_poly(t: &Scalar, m: usize) -> Scalar {
    let mut acc = Scalar::one();
    for i in 0..m {
        acc = &acc * &(t - &Scalar::int(i as i64));
    }
    acc.scale(&(Rational::one() / factorial(m)))
}

/// The λ-polynomial of least degree through the given `(λ, value)` points.
pub fn interpolate(points: &[(Rational, Rational)]) -> Scalar {
    let mut acc = Scalar::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = Scalar::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                let d = Rational::one() / (xi - xj);
                basis = &basis * &Scalar::affine(-xj * &d, d);
            }
        }
        acc += &basis;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::rat;

    fn l() -> Scalar {
        Scalar::lambda()
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = Scalar::from_coeffs(vec![rat(1, 6), rat(-1, 1), rat(1, 1)]);
        let pts: Vec<_> = (0..4).map(|i| (rat(i, 3), p.eval(&rat(i, 3)))).collect();
        assert_eq!(interpolate(&pts), p);
    }

    #[test]
    fn display_is_canonical() {
        let s = &(&l() * &l()) - &l() + Scalar::constant(rat(1, 6));
        assert_eq!(s.to_string(), "l^2 - l + 1/6");
        let t = (l().scale(&int(-6)) - Scalar::int(2)).scale(&rat(1, 5));
        assert_eq!(t.to_string(), "-6/5*l - 2/5");
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!((l().scale(&int(2)) - Scalar::one()).to_latex(), "2\\lambda - 1");
    }

    #[test]
    fn binom_poly_of_lambda() {
        // binom(3λ+1, 1) = 3λ+1
        let t = Scalar::affine(int(1), int(3));
        assert_eq!(binom_poly(&t, 1), t);
        assert_eq!(binom_poly(&t, 0), Scalar::one());
        // binom(λ, 2) = (λ² − λ)/2
        let b = binom_poly(&l(), 2);
        assert_eq!(b, Scalar::from_coeffs(vec![int(0), rat(-1, 2), rat(1, 2)]));
    }

    #[test]
    fn division_and_divisibility() {
        let two_l_minus_1 = Scalar::affine(int(-1), int(2));
        let p = &two_l_minus_1 * &(&l() * &l() + Scalar::int(3));
        assert_eq!(p.exact_div(&two_l_minus_1), Some(&l() * &l() + Scalar::int(3)));
        assert!(!(&p + &Scalar::one()).is_divisible_by(&two_l_minus_1));
        assert!(p.div_rem(&Scalar::zero()).is_none());
    }

    #[test]
    fn substitution_reflects() {
        let one_minus_l = Scalar::affine(int(1), int(-1));
        let b = binom_poly(&l(), 2);
        // λ(λ−1)/2 is invariant under λ ↦ 1−λ
        assert_eq!(b.substitute(&one_minus_l), b);
        assert_eq!(b.eval(&rat(1, 2)), rat(-1, 8));
    }
}
