//! Shared inputs for the criterion benches.

use contact3::family::MonodromyExponents;

/// Triples spanning the small, medium and large matrix sizes the sweeps hit.
pub fn representative_triples() -> Vec<MonodromyExponents> {
    [
        (0, 1, -2),
        (-1, 2, -2),
        (-2, -8, 1),
        (5, -6, -7),
        (-8, -8, -8),
    ]
    .into_iter()
    .map(|(p, q, r)| MonodromyExponents::new(p, q, r))
    .collect()
}
