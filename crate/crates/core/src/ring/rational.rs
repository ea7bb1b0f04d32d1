use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// Generalized binomial coefficient `top choose m` for a rational top.
pub fn binomial(top: &Rational, m: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..m {
        acc *= top - int(i as i64);
    }
    acc / factorial(m)
}

pub fn binomial_int(top: i64, m: usize) -> Rational {
    binomial(&int(top), m)
}

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn fmt_rational_latex(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else if r.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", -r.numer(), r.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generalized_binomials() {
        assert_eq!(binomial_int(5, 2), int(10));
        assert_eq!(binomial_int(-1, 3), int(-1));
        assert_eq!(binomial_int(2, 3), int(0));
        assert_eq!(binomial(&rat(1, 2), 2), rat(-1, 8));
    }

    #[test]
    fn rational_text() {
        assert_eq!(fmt_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(parse_rational(" 3/6 "), Some(rat(1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(fmt_rational_latex(&rat(-2, 5)), "-\\frac{2}{5}");
    }
}
