//! Homotopy invariants of the contact structure presented by a surgery diagram.
//!
//! For a framed link matrix `M` with rotation vector `rot`:
//! `χ = 1 + k`, `σ = σ(M)`, `c² = bᵀMb` where `Mb = rot`, and
//! `d3 = (c² − 3σ − 2χ)/4 + s`. `H1 = coker M` and `c1` is the class of `rot`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::diagram::FramedLinkMatrix;
use crate::error::{Error, Result};
use crate::linalg::{inertia, smith_form, solve_rational, AbelianGroup, Order};
use crate::rational::{bigint_vec_json, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UndefinedReason {
    /// Some `+1` component has `tb = 0`.
    TbZero,
    /// `rot` is not in the rational image of `M`, so `c1` has infinite order.
    C1NonTorsion,
}

impl UndefinedReason {
    pub fn code(self) -> &'static str {
        match self {
            UndefinedReason::TbZero => "tb-zero",
            UndefinedReason::C1NonTorsion => "c1-non-torsion",
        }
    }
}

impl fmt::Display for UndefinedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct InvariantReport {
    pub k: usize,
    pub s: usize,
    pub chi: i64,
    pub sigma: i64,
    pub c_squared: Option<Rational>,
    pub d3: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub undefined_reason: Option<UndefinedReason>,
    pub h1: AbelianGroup,
    pub c1_is_zero: bool,
    pub c1_order: Order,
    /// Coordinates of `c1` in the Smith basis of `coker M`. Basis dependent.
    #[serde(with = "bigint_vec_json")]
    pub c1_coords: Vec<BigInt>,
}

impl InvariantReport {
    /// The standard tight structure on S³, presented by the empty diagram.
    pub fn standard_sphere() -> Self {
        InvariantReport {
            k: 0,
            s: 0,
            chi: 1,
            sigma: 0,
            c_squared: Some(Rational::zero()),
            d3: Some(Rational::new(-1, 2)),
            undefined_reason: None,
            h1: AbelianGroup::default(),
            c1_is_zero: true,
            c1_order: Order::finite(1),
            c1_coords: Vec::new(),
        }
    }

    /// Report for `η_m`, computed from its presentation as `(+1)`-surgery on
    /// `m + 1` pairwise `(−1)`-linked `tb = −1` unknots.
    pub fn eta_reference(m: i64) -> Result<Self> {
        if m < 1 {
            return Err(Error::Domain(format!("eta_m needs m >= 1, got {m}")));
        }
        let n = m as usize;
        let f = FramedLinkMatrix {
            matrix: crate::linalg::a_block(n),
            rot_vector: vec![0; n + 1],
            s_count: n + 1,
            plus_with_tb_zero: 0,
        };
        compute_invariants(&f)
    }

    /// `|H1|`, `None` when `H1` is infinite.
    pub fn h1_order(&self) -> Option<BigInt> {
        self.h1.order()
    }
}

/// `d3(η_m) = (−m + 3)/4`.
pub fn d3_eta(m: i64) -> Result<Rational> {
    if m < 1 {
        return Err(Error::Domain(format!("d3(eta_m) needs m >= 1, got {m}")));
    }
    Ok(Rational::new(3 - m, 4))
}

pub fn compute_invariants(f: &FramedLinkMatrix) -> Result<InvariantReport> {
    if f.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    let m = &f.matrix;
    let rot = f.rot_big();
    let k = f.len();
    let chi = 1 + k as i64;
    let sigma = inertia(m)?.signature();
    let smith = smith_form(m);
    let c1 = smith.class_of(&rot)?;

    let c_squared = solve_rational(m, &rot)?.map(|b| {
        b.values
            .iter()
            .zip(&rot)
            .map(|(bi, ri)| bi * &Rational::from(ri.clone()))
            .sum::<Rational>()
    });
    let undefined_reason = if c_squared.is_none() {
        Some(UndefinedReason::C1NonTorsion)
    } else if f.plus_with_tb_zero > 0 {
        Some(UndefinedReason::TbZero)
    } else {
        None
    };
    let d3 = match (&c_squared, undefined_reason) {
        (Some(c2), None) => {
            let raw = c2.clone() - Rational::from(3 * sigma + 2 * chi);
            Some(raw / Rational::from(4) + Rational::from(f.s_count as i64))
        }
        _ => None,
    };
    if let (Some(d3), Some(c2)) = (&d3, &c_squared) {
        debug_assert_eq!(
            Rational::from(4) * (d3.clone() - Rational::from(f.s_count as i64))
                + Rational::from(3 * sigma + 2 * chi),
            c2.clone()
        );
    }

    Ok(InvariantReport {
        k,
        s: f.s_count,
        chi,
        sigma,
        c_squared,
        d3,
        undefined_reason,
        h1: smith.cokernel(),
        c1_is_zero: c1.is_zero(),
        c1_order: c1.order(),
        c1_coords: c1.coords,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Witness {
    #[serde(rename = "h1")]
    H1,
    #[serde(rename = "c1-zero")]
    C1Zero,
    #[serde(rename = "c1-order")]
    C1Order,
    #[serde(rename = "d3")]
    D3,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Witness::H1 => "h1",
            Witness::C1Zero => "c1-zero",
            Witness::C1Order => "c1-order",
            Witness::D3 => "d3",
        })
    }
}

/// Outcome of comparing two reports. `Indistinguishable` only means the
/// homology, `c1` and `d3` data agree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "verdict", content = "witness")]
pub enum Comparison {
    Distinguishable(Witness),
    Indistinguishable,
}

pub fn homotopy_compare(a: &InvariantReport, b: &InvariantReport) -> Comparison {
    if a.h1 != b.h1 {
        Comparison::Distinguishable(Witness::H1)
    } else if a.c1_is_zero != b.c1_is_zero {
        Comparison::Distinguishable(Witness::C1Zero)
    } else if a.c1_order != b.c1_order {
        Comparison::Distinguishable(Witness::C1Order)
    } else if a.d3 != b.d3 {
        Comparison::Distinguishable(Witness::D3)
    } else {
        Comparison::Indistinguishable
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntMatrix;

    fn framed(rows: &[&[i64]], rot: &[i64], s: usize) -> FramedLinkMatrix {
        FramedLinkMatrix {
            matrix: IntMatrix::from_rows(rows).unwrap(),
            rot_vector: rot.to_vec(),
            s_count: s,
            plus_with_tb_zero: 0,
        }
    }

    #[test]
    fn three_by_three_example() {
        let f = framed(&[&[-1, -2, -1], &[-2, -1, -1], &[-1, -1, 0]], &[1, 1, 0], 3);
        let r = compute_invariants(&f).unwrap();
        assert_eq!((r.k, r.chi, r.sigma), (3, 4, 1));
        assert_eq!(r.c_squared, Some(Rational::zero()));
        assert_eq!(r.d3, Some(Rational::new(1, 4)));
    }

    #[test]
    fn five_by_five_example() {
        let f = framed(
            &[
                &[-1, -2, -1, -1, -1],
                &[-2, -1, -1, -1, -1],
                &[-1, -1, -2, 0, 0],
                &[-1, -1, 0, 0, -1],
                &[-1, -1, 0, -1, 0],
            ],
            &[1, 1, 0, 0, 0],
            4,
        );
        let r = compute_invariants(&f).unwrap();
        assert_eq!((r.chi, r.sigma), (6, 1));
        assert_eq!(r.c_squared, Some(Rational::one()));
        assert_eq!(r.d3, Some(Rational::new(1, 2)));
    }

    #[test]
    fn eta_values() {
        assert_eq!(d3_eta(2).unwrap(), Rational::new(1, 4));
        assert_eq!(d3_eta(4).unwrap(), Rational::new(-1, 4));
        assert_eq!(d3_eta(3).unwrap(), Rational::zero());
        assert!(matches!(d3_eta(0), Err(Error::Domain(_))));
        for m in 1..=8 {
            let r = InvariantReport::eta_reference(m).unwrap();
            assert_eq!(r.d3, Some(d3_eta(m).unwrap()));
            assert!(r.c1_is_zero);
            assert_eq!(r.h1_order(), Some(BigInt::from(m)));
        }
    }

    #[test]
    fn empty_is_rejected() {
        let f = framed(&[], &[], 0);
        assert!(matches!(compute_invariants(&f), Err(Error::EmptyDiagram)));
    }

    #[test]
    fn non_torsion_c1() {
        let f = framed(&[&[0]], &[2], 1);
        let r = compute_invariants(&f).unwrap();
        assert_eq!(r.undefined_reason, Some(UndefinedReason::C1NonTorsion));
        assert_eq!(r.c_squared, None);
        assert_eq!(r.d3, None);
        assert_eq!(r.c1_order, Order::Infinite);
        assert_eq!(r.h1.free_rank, 1);
    }

    #[test]
    fn singular_but_torsion() {
        let f = framed(&[&[0]], &[0], 0);
        let r = compute_invariants(&f).unwrap();
        assert_eq!(r.c_squared, Some(Rational::zero()));
        assert_eq!(r.d3, Some(Rational::from(-1)));
        assert!(r.c1_is_zero);
    }

    #[test]
    fn tb_zero_blocks_only_d3() {
        let mut f = framed(&[&[1]], &[1], 1);
        f.plus_with_tb_zero = 1;
        let r = compute_invariants(&f).unwrap();
        assert_eq!(r.undefined_reason, Some(UndefinedReason::TbZero));
        assert_eq!(r.c_squared, Some(Rational::one()));
        assert_eq!(r.d3, None);
    }

    #[test]
    fn comparison_witness_order() {
        let eta2 = InvariantReport::eta_reference(2).unwrap();
        assert_eq!(
            homotopy_compare(&eta2, &eta2),
            Comparison::Indistinguishable
        );
        let mut other = eta2.clone();
        other.d3 = Some(Rational::new(5, 4));
        assert_eq!(
            homotopy_compare(&other, &eta2),
            Comparison::Distinguishable(Witness::D3)
        );
        other.c1_order = Order::finite(2);
        assert_eq!(
            homotopy_compare(&other, &eta2),
            Comparison::Distinguishable(Witness::C1Order)
        );
        other.c1_is_zero = false;
        assert_eq!(
            homotopy_compare(&other, &eta2),
            Comparison::Distinguishable(Witness::C1Zero)
        );
        assert_eq!(
            homotopy_compare(&InvariantReport::standard_sphere(), &eta2),
            Comparison::Distinguishable(Witness::H1)
        );
    }

    #[test]
    fn report_json_shape() {
        let r = InvariantReport::eta_reference(2).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["d3"], serde_json::json!({"num": 1, "den": 4}));
        assert_eq!(v["c1_order"], serde_json::json!(1));
        assert_eq!(v["h1"]["torsion"], serde_json::json!([2]));
        let back: InvariantReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
        let c = serde_json::to_value(Comparison::Distinguishable(Witness::D3)).unwrap();
        assert_eq!(
            c,
            serde_json::json!({"verdict": "distinguishable", "witness": "d3"})
        );
    }
}
