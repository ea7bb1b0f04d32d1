use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Solution set of `A·v = b`: `particular + span(null_space)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSolution {
    pub particular: Vec<Rational>,
    pub null_space: Vec<Vec<Rational>>,
}

impl LinearSolution {
    pub fn dimension(&self) -> usize {
        self.null_space.len()
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut Vec<Vec<Rational>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Rational::one() / &m[row][col];
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        let prow = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r == row || line[col].is_zero() {
                continue;
            }
            let f = line[col].clone();
            for (v, pv) in line.iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row.max(0));
    pivots
}

pub fn rank(rows: &[Vec<Rational>], cols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, cols).len()
}

/// Basis of `{v : A·v = 0}`.
pub fn null_space(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let pivots = rref(&mut m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Exact Gaussian elimination. An inconsistent system is an error, distinct
/// from a consistent system with a zero-dimensional solution space.
pub fn gauss_solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<LinearSolution> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { left: a.len(), right: b.len() });
    }
    let cols = a.first().map_or(0, |r| r.len());
    if let Some(bad) = a.iter().find(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch { left: bad.len(), right: cols });
    }
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, cols + 1);
    if pivots.contains(&cols) {
        return Err(Error::InconsistentSystem);
    }
    let mut particular = vec![Rational::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        particular[p] = m[r][cols].clone();
    }
    let coeff_rows: Vec<Vec<Rational>> = a.to_vec();
    Ok(LinearSolution { particular, null_space: null_space(&coeff_rows, cols) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::int;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn unique_solution() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let s = gauss_solve(&a, &[int(3), int(5)]).unwrap();
        assert_eq!(s.particular, vec![Rational::new(4.into(), 5.into()), Rational::new(7.into(), 5.into())]);
        assert_eq!(s.dimension(), 0);
    }

    #[test]
    fn inconsistent_is_distinct() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(gauss_solve(&a, &[int(1), int(3)]), Err(Error::InconsistentSystem));
        let s = gauss_solve(&a, &[int(1), int(2)]).unwrap();
        assert_eq!(s.dimension(), 1);
    }

    #[test]
    fn null_space_is_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ns = null_space(&a, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &a {
                let dot: Rational = r.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
    }
}
