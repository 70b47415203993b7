use num_bigint::BigInt;
use proptest::prelude::*;

use contact3::linalg::IntMatrix;
use contact3::{compute_invariants, ContactCoeff, LegendrianComponent, RoleTag, SurgeryDiagram};

fn component(i: usize) -> impl Strategy<Value = LegendrianComponent> {
    let tag = prop_oneof![
        Just(None),
        Just(Some(RoleTag::PFamily)),
        Just(Some(RoleTag::QFamily)),
        Just(Some(RoleTag::RFamily)),
        Just(Some(RoleTag::Special)),
    ];
    (-4i64..=2, -3i64..=3, any::<bool>(), tag).prop_map(move |(tb, rot, plus, tag)| {
        let coeff = if plus {
            ContactCoeff::Plus
        } else {
            ContactCoeff::Minus
        };
        LegendrianComponent {
            id: format!("K{i}"),
            tb,
            rot,
            coeff,
            tag,
        }
    })
}

fn diagram() -> impl Strategy<Value = SurgeryDiagram> {
    (0usize..=6).prop_flat_map(|k| {
        let comps: Vec<_> = (0..k).map(component).collect();
        (comps, proptest::collection::vec(-3i64..=3, k * k)).prop_map(move |(c, v)| {
            let m = IntMatrix::from_fn(k, k, |i, j| {
                if i == j {
                    BigInt::from(0)
                } else {
                    BigInt::from(v[i.min(j) * k + i.max(j)])
                }
            });
            SurgeryDiagram::new(c, m).unwrap()
        })
    })
}

fn diagram_with_index() -> impl Strategy<Value = (SurgeryDiagram, usize)> {
    diagram()
        .prop_filter("nonempty", |d| !d.is_empty())
        .prop_flat_map(|d| {
            let k = d.len();
            (Just(d), 0..k)
        })
}

proptest! {
    #[test]
    fn json_round_trip(d in diagram()) {
        let text = d.to_json();
        let back = SurgeryDiagram::from_json(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn coefficient_counts_partition(d in diagram()) {
        let f = d.to_framed_link();
        let minus = d.components().iter().filter(|c| c.coeff == ContactCoeff::Minus).count();
        prop_assert_eq!(f.s_count + minus, d.len());
    }

    #[test]
    fn reversal_conjugates_framed_matrix((d, i) in diagram_with_index()) {
        let f = d.to_framed_link();
        let g = d.reverse_orientation(i).unwrap().to_framed_link();
        let mut conj = f.matrix.clone();
        conj.negate_row(i);
        conj.negate_col(i);
        prop_assert_eq!(&g.matrix, &conj);
        let mut rot = f.rot_vector.clone();
        rot[i] = -rot[i];
        prop_assert_eq!(g.rot_vector, rot);
        prop_assert_eq!(g.s_count, f.s_count);
    }

    #[test]
    fn reversal_preserves_invariants((d, i) in diagram_with_index()) {
        let a = compute_invariants(&d.to_framed_link()).unwrap();
        let b = compute_invariants(&d.reverse_orientation(i).unwrap().to_framed_link()).unwrap();
        prop_assert_eq!(a.sigma, b.sigma);
        prop_assert_eq!(a.c_squared, b.c_squared);
        prop_assert_eq!(a.d3, b.d3);
        prop_assert_eq!(a.h1, b.h1);
        prop_assert_eq!(a.c1_order, b.c1_order);
    }
}
