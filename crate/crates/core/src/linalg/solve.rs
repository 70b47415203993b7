use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A particular solution of `M b = v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Solution {
    pub values: Vec<Rational>,
    /// `false` when `M` is singular, in which case `values` is one of many solutions
    /// (free variables set to zero).
    pub unique: bool,
}

struct Reduced {
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

/// Gauss-Jordan elimination over Q on the first `ncols` columns.
fn reduce(mut rows: Vec<Vec<BigRational>>, ncols: usize) -> Reduced {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in c..rows[i].len() {
                let delta = &f * &rows[r][j];
                rows[i][j] -= delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Reduced { rows, pivots }
}

fn to_rational_rows(m: &IntMatrix, extra: Option<&[BigInt]>) -> Vec<Vec<BigRational>> {
    (0..m.rows())
        .map(|i| {
            let mut row: Vec<BigRational> = m
                .row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            if let Some(v) = extra {
                row.push(BigRational::from_integer(v[i].clone()));
            }
            row
        })
        .collect()
}

/// Solves `M b = v` exactly over Q.
///
/// Forward elimination runs on the integer augmented matrix, each row kept
/// primitive; only back substitution uses rationals. Returns `Ok(None)` when
/// the system is inconsistent.
pub fn solve_rational(m: &IntMatrix, v: &[BigInt]) -> Result<Option<Solution>> {
    m.ensure_square()?;
    if v.len() != m.rows() {
        return Err(Error::Dimension {
            expected: m.rows(),
            found: v.len(),
        });
    }
    let n = m.cols();
    let mut rows: Vec<Vec<BigInt>> = m
        .to_rows()
        .into_iter()
        .zip(v)
        .map(|(mut row, x)| {
            row.push(x.clone());
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| rows[i][c].abs())
        else {
            continue;
        };
        rows.swap(r, p);
        let (top, bottom) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let g = pivot_row[c].gcd(&row[c]);
            let (fp, fr) = (&row[c] / &g, &pivot_row[c] / &g);
            let mut content = BigInt::zero();
            for j in c..=n {
                row[j] = &fr * &row[j] - &fp * &pivot_row[j];
                content = content.gcd(&row[j]);
            }
            if !content.is_zero() && !content.is_one() {
                for x in row[c..].iter_mut() {
                    *x /= &content;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return Ok(None);
    }

    let mut values = vec![BigRational::zero(); n];
    for (i, &c) in pivots.iter().enumerate().rev() {
        let row = &rows[i];
        let mut acc = BigRational::from_integer(row[n].clone());
        for j in (c + 1)..n {
            if !row[j].is_zero() {
                acc -= &values[j] * BigRational::from_integer(row[j].clone());
            }
        }
        values[c] = acc / BigRational::from_integer(row[c].clone());
    }
    Ok(Some(Solution {
        values: values.into_iter().map(Rational::from).collect(),
        unique: pivots.len() == n,
    }))
}

/// Basis of the rational null space `{ x : M x = 0 }`.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<Rational>> {
    let n = m.cols();
    let red = reduce(to_rational_rows(m, None), n);
    let free: Vec<usize> = (0..n).filter(|c| !red.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); n];
            x[f] = BigRational::one();
            for (r, &c) in red.pivots.iter().enumerate() {
                x[c] = -red.rows[r][f].clone();
            }
            x.into_iter().map(Rational::from).collect()
        })
        .collect()
}

/// Rank over Q.
pub fn rank(m: &IntMatrix) -> usize {
    reduce(to_rational_rows(m, None), m.cols()).pivots.len()
}
