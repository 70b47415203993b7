//! Topological type of `Y(p,q,r)` read off the star plumbing: a 0-framed
//! center with leaves framed `p`, `q`, `r`.
//!
//! A leaf framed 0 splits the plumbing into a connected sum of two unknot
//! surgeries. A leaf framed ±1 blows down, leaving a three-term linear chain
//! and hence a lens space. Everything else with nonzero determinant is a
//! Seifert fibration with three exceptional fibers.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::family::{plumbing_determinant, MonodromyExponents};

/// Oriented lens space `L(m, n)`, the result of `−m/n` surgery on the unknot.
/// `m = 1` is S³. `n` is normalized to `min(n, n⁻¹ mod m)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LensSpace {
    pub m: u64,
    pub n: u64,
}

impl LensSpace {
    pub fn new(m: u64, n: i64) -> Self {
        if m <= 1 {
            return LensSpace { m: 1, n: 0 };
        }
        let n = n.rem_euclid(m as i64) as u64;
        let inv = mod_inverse(n, m).unwrap_or(n);
        LensSpace { m, n: n.min(inv) }
    }

    pub fn is_sphere(&self) -> bool {
        self.m == 1
    }

    /// `L(m, 1)`; includes `L(2, 1) = L(2, −1)`.
    pub fn is_plus_one(&self) -> bool {
        self.m >= 2 && self.n == 1
    }

    /// `L(m, −1)` with `m ≥ 3`.
    pub fn is_minus_one(&self) -> bool {
        self.m >= 3 && self.n == self.m - 1
    }

    /// Surgery on the unknot with integer framing `f ≠ 0`.
    pub fn unknot_surgery(f: i64) -> Self {
        LensSpace::new(f.unsigned_abs(), -f.signum())
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let g = (a as i64).extended_gcd(&(m as i64));
    (g.gcd == 1).then(|| g.x.rem_euclid(m as i64) as u64)
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_sphere() {
            f.write_str("S3")
        } else if self.is_minus_one() {
            write!(f, "L({},-1)", self.m)
        } else {
            write!(f, "L({},{})", self.m, self.n)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TopoType {
    Sphere,
    Lens {
        space: LensSpace,
    },
    ConnectedSumLens {
        factors: Vec<LensSpace>,
    },
    SeifertThreeFibers,
    #[serde(rename = "infinite_h1")]
    InfiniteH1,
}

impl TopoType {
    /// Drops S³ summands from a connected sum.
    pub fn prime_lens(&self) -> TopoType {
        match self {
            TopoType::ConnectedSumLens { factors } => {
                let nontrivial: Vec<_> =
                    factors.iter().copied().filter(|f| !f.is_sphere()).collect();
                match nontrivial.as_slice() {
                    [] => TopoType::Sphere,
                    [one] => TopoType::Lens { space: *one },
                    _ => TopoType::ConnectedSumLens {
                        factors: nontrivial,
                    },
                }
            }
            other => other.clone(),
        }
    }

    pub fn lens(&self) -> Option<LensSpace> {
        match self.prime_lens() {
            TopoType::Lens { space } => Some(space),
            _ => None,
        }
    }
}

impl fmt::Display for TopoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopoType::Sphere => f.write_str("S3"),
            TopoType::Lens { space } => write!(f, "{space}"),
            TopoType::ConnectedSumLens { factors } => {
                let parts: Vec<String> = factors.iter().map(ToString::to_string).collect();
                f.write_str(&parts.join("#"))
            }
            TopoType::SeifertThreeFibers => f.write_str("Seifert"),
            TopoType::InfiniteH1 => f.write_str("InfiniteH1"),
        }
    }
}

/// Lens space of a linear plumbing chain with framings `a_1, …, a_k`.
fn linear_chain(framings: &[i64]) -> TopoType {
    let (&last, rest) = framings.split_last().expect("nonempty chain");
    let (mut num, mut den) = (last, 1i64);
    for &a in rest.iter().rev() {
        (num, den) = (a * num - den, num);
    }
    match num.unsigned_abs() {
        0 => TopoType::InfiniteH1,
        1 => TopoType::Sphere,
        m => TopoType::Lens {
            space: LensSpace::new(m, -den * num.signum()),
        },
    }
}

pub fn topological_type(e: MonodromyExponents) -> TopoType {
    if plumbing_determinant(e) == 0 {
        return TopoType::InfiniteH1;
    }
    let ex = [e.p, e.q, e.r];
    let others = |i: usize| -> [i64; 2] {
        let v: Vec<i64> = (0..3).filter(|&j| j != i).map(|j| ex[j]).collect();
        [v[0], v[1]]
    };
    if let Some(i) = ex.iter().position(|&x| x == 0) {
        let [a, b] = others(i);
        return TopoType::ConnectedSumLens {
            factors: vec![LensSpace::unknot_surgery(a), LensSpace::unknot_surgery(b)],
        };
    }
    if let Some(i) = ex.iter().position(|&x| x.abs() == 1) {
        let [a, b] = others(i);
        return linear_chain(&[a, -ex[i], b]);
    }
    TopoType::SeifertThreeFibers
}
