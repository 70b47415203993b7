//! Surgery presentations of `(Y(p,q,r), ξ_{p,q,r})`, the contact manifolds
//! supported by the planar open books `(Σ, D_a^p D_b^q D_c^r)`.
//!
//! Each exponent contributes a block of Legendrian unknots. Every `r`-curve
//! links every `p`- and `q`-curve once negatively; `p`- and `q`-curves are
//! unlinked from each other.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::diagram::{ContactCoeff, LegendrianComponent, RoleTag, SurgeryDiagram};
use crate::error::{Error, Result};
use crate::invariants::{compute_invariants, InvariantReport};
use crate::linalg::IntMatrix;
use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonodromyExponents {
    pub p: i64,
    pub q: i64,
    pub r: i64,
}

impl MonodromyExponents {
    pub fn new(p: i64, q: i64, r: i64) -> Self {
        MonodromyExponents { p, q, r }
    }

    pub fn swapped(self) -> Self {
        MonodromyExponents {
            p: self.q,
            q: self.p,
            r: self.r,
        }
    }

    pub fn as_tuple(self) -> (i64, i64, i64) {
        (self.p, self.q, self.r)
    }
}

impl fmt::Display for MonodromyExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.q, self.r)
    }
}

/// How curves inside a block of coefficient `−1` `p`/`q`-curves link.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum IntraPattern {
    /// Every pair links once negatively.
    #[default]
    Complete,
    /// Only consecutive curves link.
    Chain,
}

/// A run of identical Legendrian unknots contributed by one exponent.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FamilyBlock {
    pub family: RoleTag,
    pub curve_count: usize,
    pub tb: i64,
    pub rot_each: i64,
    pub coeff: ContactCoeff,
    /// Smooth framing of each curve.
    pub diagonal: i64,
    pub intra_linking: i64,
}

impl FamilyBlock {
    fn new(
        family: RoleTag,
        curve_count: usize,
        tb: i64,
        rot_each: i64,
        coeff: ContactCoeff,
    ) -> Self {
        let intra_linking = if family == RoleTag::RFamily { -2 } else { -1 };
        FamilyBlock {
            family,
            curve_count,
            tb,
            rot_each,
            coeff,
            diagonal: tb + coeff.value(),
            intra_linking,
        }
    }
}

fn pq_block(family: RoleTag, n: i64) -> Option<FamilyBlock> {
    use ContactCoeff::{Minus, Plus};
    match n {
        n if n < 0 => Some(FamilyBlock::new(
            family,
            n.unsigned_abs() as usize + 1,
            -1,
            0,
            Plus,
        )),
        0 => Some(FamilyBlock::new(RoleTag::Special, 1, -1, 0, Plus)),
        1 => None,
        n => Some(FamilyBlock::new(family, n as usize - 1, -1, 0, Minus)),
    }
}

fn r_block(r: i64) -> Option<FamilyBlock> {
    use ContactCoeff::{Minus, Plus};
    match r {
        0 => None,
        r if r > 0 => Some(FamilyBlock::new(RoleTag::RFamily, r as usize, -2, 1, Minus)),
        r => Some(FamilyBlock::new(
            RoleTag::RFamily,
            r.unsigned_abs() as usize,
            -2,
            1,
            Plus,
        )),
    }
}

/// Blocks in component order: `r` first, then the `p`/`q` block with the larger
/// exponent (ties go to `p`).
pub fn family_blocks(e: MonodromyExponents) -> Vec<(char, FamilyBlock)> {
    let p = pq_block(RoleTag::PFamily, e.p).map(|b| ('p', b));
    let q = pq_block(RoleTag::QFamily, e.q).map(|b| ('q', b));
    let (first, second) = if e.p >= e.q { (p, q) } else { (q, p) };
    r_block(e.r)
        .map(|b| ('r', b))
        .into_iter()
        .chain(first)
        .chain(second)
        .collect()
}

pub fn build_family_diagram(e: MonodromyExponents) -> SurgeryDiagram {
    build_family_diagram_with(e, IntraPattern::Complete)
}

pub fn build_family_diagram_with(e: MonodromyExponents, pattern: IntraPattern) -> SurgeryDiagram {
    let blocks = family_blocks(e);
    let mut components = Vec::new();
    let mut owner = Vec::new();
    for (bi, (letter, b)) in blocks.iter().enumerate() {
        for j in 0..b.curve_count {
            let id = if b.family == RoleTag::Special {
                format!("{letter}0")
            } else {
                format!("{letter}{}", j + 1)
            };
            components
                .push(LegendrianComponent::new(id, b.tb, b.rot_each, b.coeff).with_tag(b.family));
            owner.push((bi, j));
        }
    }
    let k = components.len();
    let linking = IntMatrix::from_fn(k, k, |i, j| {
        let ((bi, si), (bj, sj)) = (owner[i], owner[j]);
        if i == j {
            return 0.into();
        }
        let (a, b) = (&blocks[bi].1, &blocks[bj].1);
        let v = if bi == bj {
            let chained = pattern == IntraPattern::Chain && a.coeff == ContactCoeff::Minus;
            if chained && si.abs_diff(sj) != 1 {
                0
            } else {
                a.intra_linking
            }
        } else if a.family == RoleTag::RFamily || b.family == RoleTag::RFamily {
            -1
        } else {
            0
        };
        BigInt::from(v)
    });
    SurgeryDiagram::new(components, linking).expect("family linking matrix is symmetric")
}

/// Invariants of `ξ_{p,q,r}`. The empty presentation of `(1,1,0)` is the
/// standard structure on S³.
pub fn family_invariants(e: MonodromyExponents) -> InvariantReport {
    let d = build_family_diagram(e);
    if d.is_empty() {
        return InvariantReport::standard_sphere();
    }
    compute_invariants(&d.to_framed_link()).expect("family diagrams are valid")
}

/// Star-shaped plumbing of `Y(p,q,r)`: a 0-framed center with three leaves.
pub fn plumbing_matrix(e: MonodromyExponents) -> IntMatrix {
    IntMatrix::from_rows(&[[0, 1, 1, 1], [1, e.p, 0, 0], [1, 0, e.q, 0], [1, 0, 0, e.r]])
        .expect("4x4 literal")
}

/// `det = −r(p+q) − pq`.
pub fn plumbing_determinant(e: MonodromyExponents) -> i64 {
    -e.r * (e.p + e.q) - e.p * e.q
}

fn in_general_stratum(e: MonodromyExponents) -> bool {
    e.p >= 2 && e.q <= -2 && e.r <= -2
}

/// `c² = p|q||r| / (p|q| + p|r| − |q||r|)` for `p ≥ 2`, `q, r ≤ −2`;
/// `None` when the denominator (equal to the plumbing determinant) vanishes.
pub fn general_c_squared(e: MonodromyExponents) -> Result<Option<Rational>> {
    if !in_general_stratum(e) {
        return Err(Error::Domain(format!(
            "{e} is not in the stratum p >= 2, q <= -2, r <= -2"
        )));
    }
    let (p, q, r) = (e.p, e.q.abs(), e.r.abs());
    let den = p * q + p * r - q * r;
    Ok((den != 0).then(|| Rational::new(p * q * r, den)))
}

fn general_d3(e: MonodromyExponents) -> Option<Rational> {
    let (p, q, r) = e.as_tuple();
    let num = 8 * p * q * r + p * p * q + p * p * r + 4 * p * q * q + 4 * q * r * r
        - p * r * r
        - q * q * r
        - p * q
        - p * r
        - q * r;
    let den = 4 * p * q + 4 * p * r + 4 * q * r;
    (den != 0).then(|| Rational::new(num, den))
}

/// Reference values taken from closed-form expressions on special strata.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosedForm {
    pub stratum: &'static str,
    pub c1_order: Option<BigInt>,
    pub d3: Option<Rational>,
}

/// Order of `a` in `Z/n`.
fn order_in(a: i64, n: i64) -> BigInt {
    let n = n.abs();
    BigInt::from(n / a.gcd(&n))
}

fn closed_form_direct(e: MonodromyExponents) -> Option<ClosedForm> {
    let (p, q, r) = e.as_tuple();
    let cf = |stratum, c1_order: Option<BigInt>, d3: Option<Rational>| {
        Some(ClosedForm {
            stratum,
            c1_order,
            d3,
        })
    };
    let one = || Some(BigInt::from(1));
    let quarter = |n: i64| Some(Rational::new(n, 4));
    match (p, q, r) {
        (0, 1, -2) => cf("(0,1,-2)", one(), quarter(1)),
        (0, -1, -2) => cf("(0,-1,-2)", one(), quarter(5)),
        (-1, 2, -2) => cf("(-1,2,-2)", one(), quarter(2)),
        (-1, 2, -1) => cf("(-1,2,-1)", Some(order_in(-2, 3)), None),
        (-1, -1, 2) => cf("(-1,q,2)", Some(order_in(2, 3)), Some(Rational::new(-5, 6))),
        (-1, -2, 2) => cf("(-1,q,2)", Some(order_in(2, 4)), quarter(-1)),
        (-1, q, 2) if q <= -3 => cf(
            "(-1,q,2)",
            Some(order_in(2, q - 2)),
            Some(Rational::new(-q * q - 3 * q + 6, -4 * q + 8)),
        ),
        (-1, q, 0) if q <= -2 => cf("(-1,q,0)", one(), quarter(-q.abs() + 7)),
        (1, q, 0) if q <= -2 => cf("(1,q,0)", one(), quarter(-q.abs() + 3)),
        (0, q, 1) if q <= -1 => cf("(0,q,1)", one(), quarter(-q.abs() + 3)),
        (0, q, -1) if q <= -1 => cf("(0,q,-1)", one(), quarter(-q.abs() + 7)),
        (-2, q, 1) if q <= -4 => {
            let d3 = (q == -4).then(|| Rational::new(-1, 4));
            cf("(-2,q,1)", Some(order_in(q.abs() - 4, q.abs() - 2)), d3)
        }
        (2, q, -1) if q <= -2 => cf("(2,q,-1)", Some(order_in(q.abs(), q.abs() + 2)), None),
        (1, q, -2) if q <= -4 => cf(
            "(1,q,-2)",
            Some(order_in(q.abs() - 4, q.abs() - 2)),
            Some(Rational::new(-q * q - 7 * q - 14, -4 * q - 8)),
        ),
        (1, -2, r) if r <= -3 => cf("(1,-2,r)", Some(order_in(2, r.abs() - 2)), None),
        (1, 0, r) if r <= -3 => cf("(1,0,r)", one(), quarter(-r.abs() + 3)),
        (0, -1, r) if r <= -3 => cf("(0,-1,r)", one(), quarter(-r.abs() + 7)),
        (-1, 2, r) if r <= -3 => cf("(-1,2,r)", Some(order_in(r.abs(), r.abs() + 2)), None),
        _ if in_general_stratum(e) && plumbing_determinant(e) != 0 => {
            cf("p>=2,q<=-2,r<=-2", None, general_d3(e))
        }
        _ => None,
    }
}

/// Closed-form reference for `e` (or for `e` with `p` and `q` exchanged);
/// `None` off the covered strata.
pub fn closed_form_invariants(e: MonodromyExponents) -> Option<ClosedForm> {
    closed_form_direct(e).or_else(|| closed_form_direct(e.swapped()))
}
