//! Tightness, binding number and topological type of `ξ_{p,q,r}`.

mod topology;

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use topology::{topological_type, LensSpace, TopoType};

use crate::error::{Error, Result};
use crate::family::{family_invariants, MonodromyExponents};
use crate::invariants::{d3_eta, InvariantReport};
use crate::linalg::Order;
use crate::rational::Rational;

/// Largest bound accepted by [`sphere_search`].
pub const SPHERE_SEARCH_MAX_BOUND: i64 = 16;

/// Positive Dehn twists only.
pub fn is_tight(e: MonodromyExponents) -> bool {
    e.p >= 0 && e.q >= 0 && e.r >= 0
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremVerdict {
    Three,
    AtMostTwo,
}

/// Binding number from the explicit conditions on `(p, q, r)`.
pub fn binding_number_theorem(e: MonodromyExponents) -> TheoremVerdict {
    let (p, q, r) = e.as_tuple();
    let three = match r {
        0 => p != 1 && q != 1,
        1 => !matches!(p, -1 | 0) && !matches!(q, -1 | 0),
        -1 => p != 1 && q != 1,
        _ => p * q != -1 && !matches!((p, q), (1, 0) | (0, 1)),
    };
    if three {
        TheoremVerdict::Three
    } else {
        TheoremVerdict::AtMostTwo
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Decided from `c1`, `d3` and the topological type.
    Invariants,
    /// The invariants cannot decide; the value comes from [`binding_number_theorem`].
    ViaTheorem,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BindingNumber {
    pub value: u8,
    pub provenance: Provenance,
}

fn decide(e: MonodromyExponents, topo: &TopoType, report: &InvariantReport) -> BindingNumber {
    let by_invariants = |value| BindingNumber {
        value,
        provenance: Provenance::Invariants,
    };
    let tight = is_tight(e);
    match topo.prime_lens() {
        TopoType::InfiniteH1 => {
            let value = match binding_number_theorem(e) {
                TheoremVerdict::Three => 3,
                TheoremVerdict::AtMostTwo => 2,
            };
            BindingNumber {
                value,
                provenance: Provenance::ViaTheorem,
            }
        }
        TopoType::SeifertThreeFibers | TopoType::ConnectedSumLens { .. } => by_invariants(3),
        TopoType::Sphere if tight => by_invariants(1),
        TopoType::Sphere => {
            let eta1 = d3_eta(1).expect("m = 1");
            by_invariants(if report.d3.as_ref() == Some(&eta1) {
                2
            } else {
                3
            })
        }
        TopoType::Lens { space } if space.is_minus_one() => {
            by_invariants(if tight { 2 } else { 3 })
        }
        TopoType::Lens { space } if space.is_plus_one() => {
            if tight {
                return by_invariants(if space.m == 2 { 2 } else { 3 });
            }
            if !report.c1_is_zero {
                return by_invariants(3);
            }
            let eta = d3_eta(space.m as i64).expect("m >= 2");
            by_invariants(if report.d3.as_ref() == Some(&eta) {
                2
            } else {
                3
            })
        }
        TopoType::Lens { .. } => by_invariants(3),
    }
}

pub fn binding_number_invariants(e: MonodromyExponents) -> BindingNumber {
    decide(e, &topological_type(e), &family_invariants(e))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub exponents: MonodromyExponents,
    pub tight: bool,
    pub support_genus: u8,
    pub binding_number: u8,
    pub binding_provenance: Provenance,
    pub topo_type: TopoType,
    pub invariants: InvariantReport,
}

impl ClassificationReport {
    pub fn d3(&self) -> Option<&Rational> {
        self.invariants.d3.as_ref()
    }

    pub fn c1_order(&self) -> &Order {
        &self.invariants.c1_order
    }
}

pub fn classify(e: MonodromyExponents) -> ClassificationReport {
    let invariants = family_invariants(e);
    let topo_type = topological_type(e);
    let bn = decide(e, &topo_type, &invariants);
    ClassificationReport {
        exponents: e,
        tight: is_tight(e),
        support_genus: 0,
        binding_number: bn.value,
        binding_provenance: bn.provenance,
        topo_type,
        invariants,
    }
}

/// Classification of every triple in the box, ordered by `(r, p, q)`.
pub fn classification_table(
    p: RangeInclusive<i64>,
    q: RangeInclusive<i64>,
    r: RangeInclusive<i64>,
) -> Vec<ClassificationReport> {
    let triples: Vec<MonodromyExponents> = r
        .flat_map(|r| {
            let q = q.clone();
            p.clone()
                .flat_map(move |p| q.clone().map(move |q| MonodromyExponents::new(p, q, r)))
        })
        .collect();
    triples.into_par_iter().map(classify).collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SphereEntry {
    pub exponents: MonodromyExponents,
    pub d3: Option<Rational>,
    pub topo_type: TopoType,
    pub binding_number: u8,
}

/// Triples with `max(|p|,|q|,|r|) ≤ bound` whose plumbing determinant is ±1,
/// ordered by `(r, p, q)`.
pub fn sphere_search(bound: i64) -> Result<Vec<SphereEntry>> {
    if !(0..=SPHERE_SEARCH_MAX_BOUND).contains(&bound) {
        return Err(Error::Domain(format!(
            "sphere search bound must lie in 0..={SPHERE_SEARCH_MAX_BOUND}, got {bound}"
        )));
    }
    if bound == 0 {
        return Ok(Vec::new());
    }
    let range = -bound..=bound;
    let triples: Vec<MonodromyExponents> = range
        .clone()
        .flat_map(|r| {
            let range = range.clone();
            range
                .clone()
                .flat_map(move |p| range.clone().map(move |q| MonodromyExponents::new(p, q, r)))
        })
        .filter(|&e| crate::family::plumbing_determinant(e).abs() == 1)
        .collect();
    Ok(triples
        .into_par_iter()
        .map(|e| {
            let c = classify(e);
            SphereEntry {
                exponents: e,
                d3: c.invariants.d3,
                topo_type: c.topo_type,
                binding_number: c.binding_number,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(p: i64, q: i64, r: i64) -> MonodromyExponents {
        MonodromyExponents::new(p, q, r)
    }

    #[test]
    fn tightness() {
        assert!(is_tight(e(1, 1, 1)));
        assert!(is_tight(e(0, 0, 0)));
        assert!(!is_tight(e(-1, 2, 3)));
    }

    #[test]
    fn theorem_conditions() {
        assert_eq!(binding_number_theorem(e(2, 2, 2)), TheoremVerdict::Three);
        assert_eq!(
            binding_number_theorem(e(1, -2, 0)),
            TheoremVerdict::AtMostTwo
        );
        assert_eq!(
            binding_number_theorem(e(-1, 0, 1)),
            TheoremVerdict::AtMostTwo
        );
        assert_eq!(
            binding_number_theorem(e(1, -1, 5)),
            TheoremVerdict::AtMostTwo
        );
        assert_eq!(
            binding_number_theorem(e(0, 1, -4)),
            TheoremVerdict::AtMostTwo
        );
    }

    #[test]
    fn decided_binding_numbers() {
        let bn = |p, q, r| binding_number_invariants(e(p, q, r));
        assert_eq!(
            bn(0, 1, -2),
            BindingNumber {
                value: 2,
                provenance: Provenance::Invariants
            }
        );
        assert_eq!(bn(0, -1, -2).value, 3);
        assert_eq!(bn(1, 1, 0).value, 1);
        assert_eq!(bn(4, 4, -2).provenance, Provenance::ViaTheorem);
    }

    #[test]
    fn classify_example() {
        let c = classify(e(0, 1, -2));
        assert_eq!(c.d3(), Some(&Rational::new(1, 4)));
        assert_eq!(c.binding_number, 2);
        assert_eq!(c.support_genus, 0);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(
            serde_json::from_str::<ClassificationReport>(&json).unwrap(),
            c
        );
    }

    #[test]
    fn table_order() {
        let rows = classification_table(-1..=1, -1..=0, -2..=-1);
        let keys: Vec<_> = rows
            .iter()
            .map(|c| (c.exponents.r, c.exponents.p, c.exponents.q))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(rows.len(), 12);
        assert!(classification_table(RangeInclusive::new(1, 0), 0..=0, 0..=0).is_empty());
    }

    #[test]
    fn sphere_search_small() {
        assert!(sphere_search(0).unwrap().is_empty());
        assert!(sphere_search(17).is_err());
        let found = sphere_search(4).unwrap();
        let st = found.iter().find(|s| s.exponents == e(1, 1, 0)).unwrap();
        assert_eq!(st.d3, Some(Rational::new(-1, 2)));
        assert_eq!(st.binding_number, 1);
    }
}
