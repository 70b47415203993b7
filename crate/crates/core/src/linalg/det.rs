use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntMatrix;
use crate::error::Result;

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    m.ensure_square()?;
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match ((k + 1)..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(i, k);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = num / &prev;
            }
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if negate { -d } else { d })
}
