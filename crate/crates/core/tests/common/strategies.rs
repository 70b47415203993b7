//! Proptest strategies for integer matrices.

use num_bigint::BigInt;
use proptest::prelude::*;

use contact3::linalg::IntMatrix;

pub fn symmetric(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim).prop_flat_map(move |n| {
        proptest::collection::vec(-bound..=bound, n * n).prop_map(move |v| {
            IntMatrix::from_fn(n, n, |i, j| BigInt::from(v[i.min(j) * n + i.max(j)]))
        })
    })
}

pub fn rectangular(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-bound..=bound, r * c)
            .prop_map(move |v| IntMatrix::from_fn(r, c, |i, j| BigInt::from(v[i * c + j])))
    })
}

#[derive(Clone, Debug)]
pub enum Elementary {
    Add { dst: usize, src: usize, k: i64 },
    Swap(usize, usize),
    Negate(usize),
}

fn elementary(n: usize) -> impl Strategy<Value = Elementary> {
    prop_oneof![
        (0..n, 0..n, -3i64..=3).prop_map(|(dst, src, k)| Elementary::Add { dst, src, k }),
        (0..n, 0..n).prop_map(|(a, b)| Elementary::Swap(a, b)),
        (0..n).prop_map(Elementary::Negate),
    ]
}

pub fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(elementary(n), 0..24).prop_map(move |ops| {
        let mut u = IntMatrix::identity(n);
        for op in ops {
            match op {
                Elementary::Add { dst, src, k } if dst != src => {
                    u.add_row_multiple(dst, src, &BigInt::from(k))
                }
                Elementary::Add { .. } => {}
                Elementary::Swap(a, b) => u.swap_rows(a, b),
                Elementary::Negate(a) => u.negate_row(a),
            }
        }
        u
    })
}

pub fn symmetric_with_unimodular() -> impl Strategy<Value = (IntMatrix, IntMatrix)> {
    symmetric(8, 6).prop_flat_map(|m| {
        let n = m.rows();
        (Just(m), unimodular(n))
    })
}
