//! Exact integer and rational linear algebra.
//!
//! Everything here works over `BigInt`/`BigRational`; there is no floating
//! point anywhere in the kernel.

mod det;
mod inertia;
mod matrix;
mod smith;
mod solve;

use num_bigint::BigInt;
use num_traits::Zero;

pub use det::determinant;
pub use inertia::{inertia, InertiaTriple};
pub use matrix::IntMatrix;
pub use smith::{cokernel_class, smith_form, AbelianGroup, CokernelClass, Order, SmithForm};
pub use solve::{kernel_basis, rank, solve_rational, Solution};

/// `A_n`: the `(n+1)×(n+1)` matrix with zero diagonal and `-1` elsewhere.
pub fn a_block(n: usize) -> IntMatrix {
    let k = n + 1;
    IntMatrix::from_fn(k, k, |i, j| {
        if i == j {
            BigInt::zero()
        } else {
            BigInt::from(-1)
        }
    })
}
