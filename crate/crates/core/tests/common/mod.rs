#![allow(dead_code)]

//! Slow, obviously-correct reference computations used to cross-check the
//! library kernels.

pub mod strategies;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use contact3::linalg::IntMatrix;

pub fn to_rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    m.to_rows()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors: `d_k = gcd` of all `k×k` minors.
pub fn smith_by_minors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut factors = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect())
                    .collect();
                g = g.gcd(&cofactor_det(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        factors.push(&g / &prev);
        prev = g;
    }
    factors
}

/// Characteristic polynomial coefficients `c_0, …, c_n` (monic) by Faddeev–LeVerrier.
pub fn char_poly(m: &[Vec<BigInt>]) -> Vec<BigRational> {
    let n = m.len();
    let a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigRational::zero();
                for l in 0..n {
                    s += &a[i][l] * &mk[l][j];
                }
                if i == j {
                    s += &c[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        mk = next;
        let mut tr = BigRational::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i][l] * &mk[l][i];
            }
        }
        c[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    c
}

fn sign_changes(coeffs: &[BigRational]) -> usize {
    let signs: Vec<bool> = coeffs
        .iter()
        .filter(|x| !x.is_zero())
        .map(|x| x.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `(n_pos, n_neg, n_zero)` of a real symmetric matrix. Its characteristic
/// polynomial is real-rooted, so Descartes' rule of signs is exact.
pub fn inertia_by_descartes(m: &[Vec<BigInt>]) -> (usize, usize, usize) {
    let c = char_poly(m);
    let zero = c.iter().take_while(|x| x.is_zero()).count();
    let pos = sign_changes(&c);
    let flipped: Vec<BigRational> = c
        .iter()
        .enumerate()
        .map(|(i, x)| if i % 2 == 1 { -x.clone() } else { x.clone() })
        .collect();
    let neg = sign_changes(&flipped);
    (pos, neg, zero)
}
