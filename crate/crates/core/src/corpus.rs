//! The bundled diagram corpus and generated two-strand twist chains.

use crate::diagram::{parse_corpus, Crossing, Diagram};
use crate::error::Result;

const BUNDLED: &str = include_str!("../data/corpus.txt");

/// Prime alternating knots through nine crossings, the Hopf link and the
/// closed twist chains `T2_2 .. T2_6`, in file order.
pub fn bundled() -> Vec<Diagram> {
    parse_corpus(BUNDLED).expect("bundled corpus parses")
}

pub fn bundled_text() -> &'static str {
    BUNDLED
}

/// Looks a bundled diagram up by name.
pub fn by_name(name: &str) -> Option<Diagram> {
    bundled().into_iter().find(|d| d.name() == Some(name))
}

/// The closed two-strand chain of `k` crossings, all in one twist region.
/// `k = 2` is the Hopf link and `k = 3` a trefoil. The chirality is the one
/// whose positive smoothing at any crossing leaves a chain of kinks.
///
/// Built as the closure of a two-strand braid read upward: crossing `i`
/// takes arcs `L_i`, `R_i` in and sends `L_i` to `R_{i+1}` under `R_i` to
/// `L_{i+1}`. Arcs are numbered along the strands.
pub fn torus_2(k: usize) -> Result<Diagram> {
    if k == 0 {
        return Ok(Diagram::unlink(2).with_name("T2_0"));
    }
    // Arc slot 2i is L_i, 2i + 1 is R_i, indices mod k.
    let next = |slot: usize| {
        let (i, right) = (slot / 2, slot % 2 == 1);
        2 * ((i + 1) % k) + usize::from(!right)
    };
    let mut label = vec![0u32; 2 * k];
    let mut counter = 0;
    for start in 0..2 * k {
        let mut slot = start;
        while label[slot] == 0 {
            counter += 1;
            label[slot] = counter;
            slot = next(slot);
        }
    }
    let (l, r) = (|i: usize| label[2 * (i % k)], |i: usize| label[2 * (i % k) + 1]);
    let crossings = (0..k)
        .map(|i| Crossing::new([r(i + 1), l(i + 1), l(i), r(i)]))
        .collect();
    Diagram::new(crossings, Some(format!("T2_{k}")))
}
