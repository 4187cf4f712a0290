use serde::Serialize;

use crate::diagram::Diagram;
use crate::state::{resolve_state, State};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdequacyReport {
    pub plus_adequate: bool,
    pub minus_adequate: bool,
    /// First crossing whose single flip fails to lose a circle (plus side
    /// checked first).
    pub witness: Option<usize>,
}

impl AdequacyReport {
    pub fn adequate(&self) -> bool {
        self.plus_adequate && self.minus_adequate
    }
}

/// Plus adequate: the all-positive state has more circles than every state
/// with a single negative smoothing. Minus adequate: dually for the
/// all-negative state.
pub fn check_adequacy(d: &Diagram) -> AdequacyReport {
    let n = d.len();
    let first_failure = |base: State| {
        let count = resolve_state(d, base).count;
        (0..n).find(|&c| {
            let flipped = resolve_state(d, base.toggled(c)).count;
            debug_assert_eq!(flipped.abs_diff(count), 1, "one flip changes the circle count by one");
            count <= flipped
        })
    };
    let plus = first_failure(State::all_positive(n));
    let minus = first_failure(State::all_negative(n));
    AdequacyReport {
        plus_adequate: plus.is_none(),
        minus_adequate: minus.is_none(),
        witness: plus.or(minus),
    }
}
