use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::IntMatrix;
use crate::error::{Error, Result};
use crate::rational::{bigint_json, bigint_vec_json};

/// `left · M · right = diag(d_1, …, d_rank, 0, …)` with `d_i | d_{i+1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

/// Finite or infinite order of a group element.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Order {
    Finite(BigInt),
    Infinite,
}

impl Order {
    pub fn is_one(&self) -> bool {
        matches!(self, Order::Finite(n) if n.is_one())
    }

    pub fn finite(n: impl Into<BigInt>) -> Self {
        Order::Finite(n.into())
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Order::Finite(n) => bigint_json::serialize(n, s),
            Order::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Order {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(v) if v >= 1 => Ok(Order::finite(v)),
            Repr::Int(v) => Err(serde::de::Error::custom(format!(
                "order must be positive, got {v}"
            ))),
            Repr::Str(s) if s == "inf" => Ok(Order::Infinite),
            Repr::Str(s) => s
                .parse::<BigInt>()
                .map(Order::Finite)
                .map_err(serde::de::Error::custom),
        }
    }
}

/// Finitely generated abelian group `⊕ Z/t_i ⊕ Z^free_rank`, torsion factors `t_i > 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct AbelianGroup {
    #[serde(with = "bigint_vec_json")]
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl AbelianGroup {
    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|t| format!("Z/{t}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Class of a vector in `coker(M)`, written in the Smith basis.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CokernelClass {
    /// One coordinate per generator of the codomain. Torsion coordinates are
    /// reduced into `[0, d_i)`; free coordinates are unreduced.
    #[serde(with = "bigint_vec_json")]
    pub coords: Vec<BigInt>,
    /// `d_i` for torsion coordinates (including `1`), absent for free ones.
    #[serde(with = "moduli_json")]
    pub moduli: Vec<Option<BigInt>>,
}

mod moduli_json {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Wrap(#[serde(with = "bigint_json")] BigInt);

    pub fn serialize<S: serde::Serializer>(
        v: &[Option<BigInt>],
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|m| m.clone().map(Wrap)))
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Option<BigInt>>, D::Error> {
        Ok(Vec::<Option<Wrap>>::deserialize(d)?
            .into_iter()
            .map(|m| m.map(|w| w.0))
            .collect())
    }
}

impl CokernelClass {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Least `n >= 1` with `n·v ∈ im(M)`.
    pub fn order(&self) -> Order {
        let mut acc = BigInt::one();
        for (c, m) in self.coords.iter().zip(&self.moduli) {
            match m {
                None if !c.is_zero() => return Order::Infinite,
                None => {}
                Some(d) => {
                    let g = c.gcd(d);
                    acc = acc.lcm(&(d / g));
                }
            }
        }
        Order::Finite(acc)
    }
}

impl SmithForm {
    /// `coker(M) = Z^rows / im(M)`.
    pub fn cokernel(&self) -> AbelianGroup {
        AbelianGroup {
            torsion: self
                .invariant_factors
                .iter()
                .filter(|d| !d.is_one())
                .cloned()
                .collect(),
            free_rank: self.left.rows() - self.rank,
        }
    }

    pub fn class_of(&self, v: &[BigInt]) -> Result<CokernelClass> {
        let w = self.left.mul_vec(v)?;
        let mut coords = Vec::with_capacity(w.len());
        let mut moduli = Vec::with_capacity(w.len());
        for (i, x) in w.into_iter().enumerate() {
            match self.invariant_factors.get(i) {
                Some(d) => {
                    coords.push(x.mod_floor(d));
                    moduli.push(Some(d.clone()));
                }
                None => {
                    coords.push(x);
                    moduli.push(None);
                }
            }
        }
        Ok(CokernelClass { coords, moduli })
    }

    /// The diagonal matrix `left · M · right` this form claims.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.left.rows(), self.right.rows(), |i, j| {
            if i == j && i < self.rank {
                self.invariant_factors[i].clone()
            } else {
                BigInt::zero()
            }
        })
    }
}

struct Reducer {
    a: IntMatrix,
    left: IntMatrix,
    right: IntMatrix,
}

impl Reducer {
    fn row_swap(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.left.swap_rows(i, j);
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.right.swap_cols(i, j);
    }

    fn row_add(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_row_multiple(dst, src, f);
        self.left.add_row_multiple(dst, src, f);
    }

    fn col_add(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_col_multiple(dst, src, f);
        self.right.add_col_multiple(dst, src, f);
    }

    /// Smallest nonzero |entry| in the trailing block starting at `t`.
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Clears row and column `t` outside the pivot. Returns `false` if a
    /// remainder appeared and a new, smaller pivot must be chosen.
    fn clear_cross(&mut self, t: usize) -> bool {
        let p = self.a[(t, t)].clone();
        for i in (t + 1)..self.a.rows() {
            if self.a[(i, t)].is_zero() {
                continue;
            }
            let q = self.a[(i, t)].div_floor(&p);
            self.row_add(i, t, &-q);
            if !self.a[(i, t)].is_zero() {
                return false;
            }
        }
        for j in (t + 1)..self.a.cols() {
            if self.a[(t, j)].is_zero() {
                continue;
            }
            let q = self.a[(t, j)].div_floor(&p);
            self.col_add(j, t, &-q);
            if !self.a[(t, j)].is_zero() {
                return false;
            }
        }
        true
    }
}

/// Smith normal form by gcd-driven row and column reduction.
pub fn smith_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut red = Reducer {
        a: m.clone(),
        left: IntMatrix::identity(rows),
        right: IntMatrix::identity(cols),
    };
    let mut rank = 0;
    for t in 0..rows.min(cols) {
        'pivot: while let Some((i, j)) = red.min_entry(t) {
            red.row_swap(t, i);
            red.col_swap(t, j);
            if !red.clear_cross(t) {
                continue;
            }
            // The pivot must divide the whole trailing block.
            let p = red.a[(t, t)].clone();
            for i in (t + 1)..rows {
                for j in (t + 1)..cols {
                    if !red.a[(i, j)].is_multiple_of(&p) {
                        red.row_add(t, i, &BigInt::one());
                        continue 'pivot;
                    }
                }
            }
            break;
        }
        if red.a[(t, t)].is_zero() {
            break;
        }
        if red.a[(t, t)].is_negative() {
            red.a.negate_row(t);
            red.left.negate_row(t);
        }
        rank += 1;
    }
    let invariant_factors = (0..rank).map(|i| red.a[(i, i)].clone()).collect();
    SmithForm {
        invariant_factors,
        rank,
        left: red.left,
        right: red.right,
    }
}

/// Class of `v` in `coker(M)`.
pub fn cokernel_class(m: &IntMatrix, v: &[BigInt]) -> Result<CokernelClass> {
    if v.len() != m.rows() {
        return Err(Error::Dimension {
            expected: m.rows(),
            found: v.len(),
        });
    }
    smith_form(m).class_of(v)
}
