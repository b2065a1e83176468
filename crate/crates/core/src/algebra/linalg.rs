//! Exact Gaussian elimination over any field with num-traits arithmetic.

use std::ops::{Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub trait Field:
    Clone + PartialEq + Zero + One + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
}

impl<T> Field for T where
    T: Clone + PartialEq + Zero + One + Sub<Output = T> + Mul<Output = T> + Div<Output = T> + Neg<Output = T>
{
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = F::one() / m[r][c].clone();
        for v in m[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, t) in row.iter_mut().zip(&pivot_row) {
                    *v = v.clone() - f.clone() * t.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(mut m: Vec<Vec<F>>) -> usize {
    rref(&mut m).len()
}

/// Solution set of `a·x = b`.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution<F> {
    Inconsistent,
    /// A particular solution plus a basis of the null space of `a`.
    Affine { particular: Vec<F>, kernel: Vec<Vec<F>> },
}

pub fn solve<F: Field>(a: &[Vec<F>], b: &[F]) -> Solution<F> {
    let n = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&n) {
        return Solution::Inconsistent;
    }
    let mut particular = vec![F::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[r][n].clone();
    }
    let kernel = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![F::zero(); n];
            v[free] = F::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -aug[r][free].clone();
            }
            v
        })
        .collect();
    Solution::Affine { particular, kernel }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn unique_solution() {
        // 2a + b = 1, 4b = 1
        let a = vec![vec![q(2), q(1)], vec![q(0), q(4)]];
        match solve(&a, &[q(1), q(1)]) {
            Solution::Affine { particular, kernel } => {
                assert!(kernel.is_empty());
                assert_eq!(particular, vec![BigRational::new(3.into(), 8.into()), BigRational::new(1.into(), 4.into())]);
            }
            s => panic!("{s:?}"),
        }
    }

    #[test]
    fn inconsistent_and_kernel() {
        let a = vec![vec![q(2)], vec![q(3)]];
        assert_eq!(solve(&a, &[q(1), q(1)]), Solution::Inconsistent);
        let a = vec![vec![q(1), q(1)]];
        match solve(&a, &[q(1)]) {
            Solution::Affine { kernel, .. } => assert_eq!(kernel, vec![vec![q(-1), q(1)]]),
            s => panic!("{s:?}"),
        }
        assert_eq!(rank(vec![vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
    }
}
