//! Contact (±1)-surgery diagrams and the smooth framed links they induce.
//!
//! A diagram records, per Legendrian component, its Thurston–Bennequin and
//! rotation numbers and its contact surgery coefficient, together with the
//! pairwise linking numbers. Framings are never stored: the smooth framing of
//! a component is always `coeff + tb`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Contact surgery coefficient relative to the contact framing.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ContactCoeff {
    Plus,
    Minus,
}

impl ContactCoeff {
    pub fn value(self) -> i64 {
        match self {
            ContactCoeff::Plus => 1,
            ContactCoeff::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            1 => Some(ContactCoeff::Plus),
            -1 => Some(ContactCoeff::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for ContactCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ContactCoeff::Plus => "+1",
            ContactCoeff::Minus => "-1",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum RoleTag {
    #[serde(rename = "p-family")]
    PFamily,
    #[serde(rename = "q-family")]
    QFamily,
    #[serde(rename = "r-family")]
    RFamily,
    #[serde(rename = "special")]
    Special,
}

impl fmt::Display for RoleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RoleTag::PFamily => "p-family",
            RoleTag::QFamily => "q-family",
            RoleTag::RFamily => "r-family",
            RoleTag::Special => "special",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LegendrianComponent {
    pub id: String,
    pub tb: i64,
    pub rot: i64,
    pub coeff: ContactCoeff,
    pub tag: Option<RoleTag>,
}

impl LegendrianComponent {
    pub fn new(id: impl Into<String>, tb: i64, rot: i64, coeff: ContactCoeff) -> Self {
        LegendrianComponent {
            id: id.into(),
            tb,
            rot,
            coeff,
            tag: None,
        }
    }

    pub fn with_tag(mut self, tag: RoleTag) -> Self {
        self.tag = Some(tag);
        self
    }

    /// Smooth surgery coefficient: contact coefficient plus `tb`.
    pub fn smooth_framing(&self) -> i64 {
        self.coeff.value() + self.tb
    }
}

/// `tb(K) = bb(K) − #left cusps`.
pub fn tb_from_front(blackboard_framing: i64, left_cusps: u64) -> Result<i64> {
    if left_cusps == 0 {
        return Err(Error::InvalidFront(
            "a closed front has at least one left cusp".into(),
        ));
    }
    Ok(blackboard_framing - left_cusps as i64)
}

/// `rot(K) = (#down cusps − #up cusps) / 2`.
pub fn rot_from_front(down_cusps: u64, up_cusps: u64) -> Result<i64> {
    let total = down_cusps + up_cusps;
    if total < 2 || !total.is_multiple_of(2) {
        return Err(Error::InvalidFront(format!(
            "cusp count must be even and at least 2, got {total}"
        )));
    }
    Ok((down_cusps as i64 - up_cusps as i64) / 2)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurgeryDiagram {
    components: Vec<LegendrianComponent>,
    linking: IntMatrix,
}

impl SurgeryDiagram {
    /// Validates that `linking` is a symmetric `k×k` matrix. Its diagonal is
    /// discarded; framings come from `tb` and `coeff` alone.
    pub fn new(components: Vec<LegendrianComponent>, linking: IntMatrix) -> Result<Self> {
        let k = components.len();
        if linking.rows() != k {
            return Err(Error::Validation {
                field: "linking".into(),
                message: format!("expected {k} rows, found {}", linking.rows()),
            });
        }
        if linking.cols() != k {
            return Err(Error::Validation {
                field: "linking".into(),
                message: format!("expected {k} columns, found {}", linking.cols()),
            });
        }
        let mut linking = linking;
        for i in 0..k {
            linking[(i, i)] = BigInt::from(0);
            for j in (i + 1)..k {
                if linking[(i, j)] != linking[(j, i)] {
                    return Err(Error::Validation {
                        field: format!("linking[{i}][{j}]"),
                        message: format!(
                            "linking matrix is not symmetric: {} != linking[{j}][{i}] = {}",
                            linking[(i, j)],
                            linking[(j, i)]
                        ),
                    });
                }
            }
        }
        Ok(SurgeryDiagram {
            components,
            linking,
        })
    }

    pub fn empty() -> Self {
        SurgeryDiagram {
            components: Vec::new(),
            linking: IntMatrix::zeros(0, 0),
        }
    }

    pub fn components(&self) -> &[LegendrianComponent] {
        &self.components
    }

    pub fn linking(&self) -> &IntMatrix {
        &self.linking
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn to_framed_link(&self) -> FramedLinkMatrix {
        let mut matrix = self.linking.clone();
        for (i, c) in self.components.iter().enumerate() {
            matrix[(i, i)] = BigInt::from(c.smooth_framing());
        }
        let plus = |c: &&LegendrianComponent| c.coeff == ContactCoeff::Plus;
        FramedLinkMatrix {
            matrix,
            rot_vector: self.components.iter().map(|c| c.rot).collect(),
            s_count: self.components.iter().filter(plus).count(),
            plus_with_tb_zero: self
                .components
                .iter()
                .filter(plus)
                .filter(|c| c.tb == 0)
                .count(),
        }
    }

    /// Reverses the orientation of component `i`: its rotation number and all
    /// of its linking numbers change sign.
    pub fn reverse_orientation(&self, i: usize) -> Result<SurgeryDiagram> {
        if i >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        let mut out = self.clone();
        out.components[i].rot = -out.components[i].rot;
        out.linking.negate_row(i);
        out.linking.negate_col(i);
        Ok(out)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let repr: DiagramRepr = serde_json::from_str(text)?;
        repr.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&DiagramRepr::from(self)).expect("diagram serializes")
    }
}

/// Symmetric framing/linking matrix of the smooth framed link, with the data
/// the invariant formulas need.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FramedLinkMatrix {
    pub matrix: IntMatrix,
    pub rot_vector: Vec<i64>,
    /// Number of components with contact coefficient `+1`.
    pub s_count: usize,
    /// `+1` components with `tb = 0`, for which the d3 formula does not apply.
    pub plus_with_tb_zero: usize,
}

impl FramedLinkMatrix {
    pub fn len(&self) -> usize {
        self.rot_vector.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rot_vector.is_empty()
    }

    pub fn rot_big(&self) -> Vec<BigInt> {
        self.rot_vector.iter().map(|&r| BigInt::from(r)).collect()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentRepr {
    id: String,
    tb: i64,
    rot: i64,
    coeff: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tag: Option<RoleTag>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramRepr {
    components: Vec<ComponentRepr>,
    linking: Vec<Vec<i64>>,
}

impl From<&SurgeryDiagram> for DiagramRepr {
    fn from(d: &SurgeryDiagram) -> Self {
        DiagramRepr {
            components: d
                .components
                .iter()
                .map(|c| ComponentRepr {
                    id: c.id.clone(),
                    tb: c.tb,
                    rot: c.rot,
                    coeff: c.coeff.value(),
                    tag: c.tag,
                })
                .collect(),
            linking: d
                .linking
                .to_rows()
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|x| i64::try_from(x).expect("linking numbers fit in i64"))
                        .collect()
                })
                .collect(),
        }
    }
}

impl TryFrom<DiagramRepr> for SurgeryDiagram {
    type Error = Error;

    fn try_from(repr: DiagramRepr) -> Result<Self> {
        let components = repr
            .components
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                let coeff = ContactCoeff::from_value(c.coeff).ok_or_else(|| Error::Validation {
                    field: format!("components[{i}].coeff"),
                    message: format!("expected 1 or -1, found {}", c.coeff),
                })?;
                Ok(LegendrianComponent {
                    id: c.id,
                    tb: c.tb,
                    rot: c.rot,
                    coeff,
                    tag: c.tag,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let k = components.len();
        if repr.linking.len() != k {
            return Err(Error::Validation {
                field: "linking".into(),
                message: format!("expected {k} rows, found {}", repr.linking.len()),
            });
        }
        for (i, row) in repr.linking.iter().enumerate() {
            if row.len() != k {
                return Err(Error::Validation {
                    field: format!("linking[{i}]"),
                    message: format!("expected {k} entries, found {}", row.len()),
                });
            }
            if row[i] != 0 {
                return Err(Error::Validation {
                    field: format!("linking[{i}][{i}]"),
                    message: "diagonal must be 0".into(),
                });
            }
        }
        let linking = if k == 0 {
            IntMatrix::zeros(0, 0)
        } else {
            IntMatrix::from_rows(&repr.linking)?
        };
        SurgeryDiagram::new(components, linking)
    }
}
