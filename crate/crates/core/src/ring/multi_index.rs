use std::cmp::Ordering;

use super::rational::{factorial, Rational};

/// Exponent vector. Ordered graded-lexicographically: total degree first,
/// then lexicographically with the first variable most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(e: Vec<u32>) -> Self {
        MultiIndex(e)
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        MultiIndex(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn add(&self, o: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_sub(&self, o: &MultiIndex) -> Option<MultiIndex> {
        self.0
            .iter()
            .zip(&o.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    pub fn bump(&self, i: usize) -> MultiIndex {
        let mut e = self.0.clone();
        e[i] += 1;
        MultiIndex(e)
    }

    pub fn drop_one(&self, i: usize) -> Option<MultiIndex> {
        let mut e = self.0.clone();
        e[i] = e[i].checked_sub(1)?;
        Some(MultiIndex(e))
    }

    /// α! = Π αᵢ!
    pub fn factorial(&self) -> Rational {
        self.0.iter().map(|&e| factorial(e as usize)).product()
    }

    /// Π binom(αᵢ, βᵢ) for β ≤ α.
    pub fn binomial(&self, beta: &MultiIndex) -> Rational {
        self.factorial() / (beta.factorial() * self.checked_sub(beta).expect("β ≤ α").factorial())
    }

    /// Multinomial |α|!/α!: the number of index tuples whose counts are α.
    pub fn multinomial(&self) -> Rational {
        factorial(self.degree()) / self.factorial()
    }

    /// All β with β ≤ α componentwise.
    pub fn below(&self) -> Vec<MultiIndex> {
        let mut out = vec![Vec::new()];
        for &e in &self.0 {
            out = out
                .into_iter()
                .flat_map(|v: Vec<u32>| {
                    (0..=e).map(move |k| {
                        let mut w = v.clone();
                        w.push(k);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(MultiIndex).collect()
    }

    /// All multi-indices in `n` variables of total degree exactly `d`, ascending.
    pub fn of_degree(n: usize, d: usize) -> Vec<MultiIndex> {
        fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if n == 1 {
                prefix.push(d);
                out.push(MultiIndex(prefix.clone()));
                prefix.pop();
                return;
            }
            for k in 0..=d {
                prefix.push(k);
                rec(n - 1, d - k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if d == 0 {
                out.push(MultiIndex(Vec::new()));
            }
            return out;
        }
        rec(n, d as u32, &mut Vec::new(), &mut out);
        out
    }

    pub fn up_to_degree(n: usize, d: usize) -> Vec<MultiIndex> {
        (0..=d).flat_map(|k| Self::of_degree(n, k)).collect()
    }

    /// The sorted index tuple i₁ ≤ … ≤ i_k with these counts.
    pub fn to_tuple(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat(i).take(e as usize))
            .collect()
    }

    pub fn from_tuple(n: usize, t: &[usize]) -> MultiIndex {
        let mut e = vec![0; n];
        for &i in t {
            e[i] += 1;
        }
        MultiIndex(e)
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::int;

    #[test]
    fn graded_lex() {
        let a = MultiIndex::new(vec![0, 2]);
        let b = MultiIndex::new(vec![1, 1]);
        let c = MultiIndex::new(vec![3, 0]);
        assert!(a < b);
        assert!(b < c);
        assert!(MultiIndex::new(vec![2, 0]) < MultiIndex::new(vec![0, 3]));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(MultiIndex::of_degree(3, 2).len(), 6);
        assert_eq!(MultiIndex::up_to_degree(2, 3).len(), 10);
        let v = MultiIndex::of_degree(2, 2);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn combinatorics() {
        let a = MultiIndex::new(vec![2, 1]);
        assert_eq!(a.multinomial(), int(3));
        assert_eq!(a.binomial(&MultiIndex::new(vec![1, 1])), int(2));
        assert_eq!(a.below().len(), 6);
        assert_eq!(MultiIndex::from_tuple(2, &a.to_tuple()), a);
    }
}
