use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::IntMatrix;
use crate::error::Result;

/// Sylvester inertia of a real symmetric form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct InertiaTriple {
    pub n_pos: usize,
    pub n_neg: usize,
    pub n_zero: usize,
}

impl InertiaTriple {
    pub fn signature(&self) -> i64 {
        self.n_pos as i64 - self.n_neg as i64
    }

    pub fn dim(&self) -> usize {
        self.n_pos + self.n_neg + self.n_zero
    }
}

/// Inertia by symmetric Gaussian congruence, kept integral.
///
/// With a nonzero diagonal pivot `d = a[p][p]`, the form splits as `⟨d⟩` plus
/// the Schur complement `C = A' − v vᵀ/d`. The integer matrix
/// `sign(d) · (d A' − v vᵀ) = |d| C` has the inertia of `C`, and dividing
/// out its content keeps entries small. When every diagonal entry is zero
/// but some `a[i][j]` is not, adding row/column `j` to row/column `i`
/// produces the pivot `2 a[i][j]`.
pub fn inertia(m: &IntMatrix) -> Result<InertiaTriple> {
    m.ensure_symmetric()?;
    let mut a = m.to_rows();
    let mut out = InertiaTriple {
        n_pos: 0,
        n_neg: 0,
        n_zero: 0,
    };

    while !a.is_empty() {
        let n = a.len();
        let diagonal = (0..n)
            .filter(|&i| !a[i][i].is_zero())
            .min_by_key(|&i| a[i][i].abs());
        let pivot = diagonal.or_else(|| {
            let (i, j) = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_zero())?;
            let row_j = a[j].clone();
            for (x, v) in a[i].iter_mut().zip(row_j) {
                *x += v;
            }
            for row in a.iter_mut() {
                let v = row[j].clone();
                row[i] += v;
            }
            Some(i)
        });
        let Some(p) = pivot else {
            out.n_zero += n;
            break;
        };

        let d = a[p][p].clone();
        if d.is_positive() {
            out.n_pos += 1;
        } else {
            out.n_neg += 1;
        }
        let sign = d.signum();
        let rest: Vec<usize> = (0..n).filter(|&i| i != p).collect();
        let mut next = vec![vec![BigInt::zero(); n - 1]; n - 1];
        let mut content = BigInt::zero();
        for (x, &i) in rest.iter().enumerate() {
            for (y, &j) in rest.iter().enumerate().skip(x) {
                let v = &sign * (&d * &a[i][j] - &a[i][p] * &a[p][j]);
                content = content.gcd(&v);
                next[x][y] = v.clone();
                next[y][x] = v;
            }
        }
        if !content.is_zero() && !content.is_one() {
            for row in next.iter_mut() {
                for v in row.iter_mut() {
                    *v /= &content;
                }
            }
        }
        a = next;
    }
    Ok(out)
}
