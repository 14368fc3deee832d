//! Smith normal form over arbitrary-precision integers.
//!
//! Only the column transform is tracked: for a row-generated lattice
//! `L = Z^m · A` we have `U A V = D`, so `b ∈ L` exactly when every entry of
//! `b V` is divisible by the matching diagonal entry of `D`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Non-zero elementary divisors, each dividing the next.
    pub divisors: Vec<BigInt>,
    /// Unimodular `cols × cols` column transform.
    pub transform: Vec<Vec<BigInt>>,
    pub cols: usize,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    /// Product of the elementary divisors, i.e. `[Z^n : L]` when the lattice
    /// has full rank.
    pub fn determinant(&self) -> BigInt {
        self.divisors.iter().fold(BigInt::one(), |acc, d| acc * d)
    }

    pub fn contains(&self, b: &[i64]) -> bool {
        assert_eq!(b.len(), self.cols, "vector length must match lattice dimension");
        for j in 0..self.cols {
            let mut w = BigInt::zero();
            for (i, bi) in b.iter().enumerate() {
                if *bi != 0 {
                    w += &self.transform[i][j] * BigInt::from(*bi);
                }
            }
            let ok = match self.divisors.get(j) {
                Some(dj) => w.is_multiple_of(dj),
                None => w.is_zero(),
            };
            if !ok {
                return false;
            }
        }
        true
    }
}

pub fn smith_normal_form(rows: &[Vec<i64>], cols: usize) -> SmithForm {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols, "ragged generator matrix");
            r.iter().map(|&x| BigInt::from(x)).collect()
        })
        .collect();
    let m = a.len();
    let mut v: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();

    let mut divisors = Vec::new();
    let mut t = 0;
    while t < m.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&a, t) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut v, t, pj);

        loop {
            let mut dirty = false;
            // Clear column t below the pivot.
            for i in (t + 1)..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                row_axpy(&mut a, i, t, &q);
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            // Clear row t right of the pivot.
            for j in (t + 1)..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                col_axpy(&mut a, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let (pi, pj) = min_abs_in_cross(&a, t);
                a.swap(t, pi);
                swap_cols(&mut a, t, pj);
                swap_cols(&mut v, t, pj);
                continue;
            }
            // Divisibility condition on the remaining block.
            let bad = ((t + 1)..m).find(|&i| {
                ((t + 1)..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t]))
            });
            match bad {
                Some(i) => {
                    let one = -BigInt::one();
                    row_axpy(&mut a, t, i, &one);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            a[t][t] = -a[t][t].clone();
        }
        divisors.push(a[t][t].clone());
        t += 1;
    }

    SmithForm {
        divisors,
        transform: v,
        cols,
    }
}

fn min_abs_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[bi][bj].abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn min_abs_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    for i in t..a.len() {
        let x = &a[i][t];
        if !x.is_zero() && (a[best.0][best.1].is_zero() || x.abs() < a[best.0][best.1].abs()) {
            best = (i, t);
        }
    }
    for j in t..a[t].len() {
        let x = &a[t][j];
        if !x.is_zero() && (a[best.0][best.1].is_zero() || x.abs() < a[best.0][best.1].abs()) {
            best = (t, j);
        }
    }
    best
}

/// row[dst] -= q * row[src]
fn row_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    let src_row = a[src].clone();
    for (x, s) in a[dst].iter_mut().zip(src_row.iter()) {
        if !s.is_zero() {
            *x -= q * s;
        }
    }
}

/// col[dst] -= q * col[src]
fn col_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    for row in a.iter_mut() {
        if !row[src].is_zero() {
            let delta = q * &row[src];
            row[dst] -= delta;
        }
    }
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_of_simple_matrix() {
        let snf = smith_normal_form(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
        let d: Vec<i64> = snf
            .divisors
            .iter()
            .map(|x| i64::try_from(x.clone()).unwrap())
            .collect();
        assert_eq!(d, vec![2, 6, 12]);
    }

    #[test]
    fn rank_deficient() {
        let snf = smith_normal_form(&[vec![1, 2], vec![2, 4]], 2);
        assert_eq!(snf.rank(), 1);
        assert!(snf.contains(&[3, 6]));
        assert!(!snf.contains(&[1, 1]));
    }

    #[test]
    fn membership_in_even_sum_lattice() {
        let snf = smith_normal_form(&[vec![2, 0], vec![1, 1], vec![0, 2]], 2);
        assert_eq!(snf.determinant(), BigInt::from(2));
        assert!(snf.contains(&[3, 1]));
        assert!(snf.contains(&[-1, 1]));
        assert!(!snf.contains(&[1, 0]));
    }
}
