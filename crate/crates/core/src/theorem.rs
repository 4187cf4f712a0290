//! Extreme bracket coefficients against Tait-graph cycle ranks.
//!
//! For a reduced alternating diagram with bracket degrees `l <= ... <= k`:
//! `|a_{k-4} - a_k| = psi(reduced G*)` and `|a_{l+4} - a_l| = psi(reduced G)`,
//! and for knots the two magnitudes add up to the twist number.

use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::gaussian::{axis_magnitude, same_phase, GaussianInt};
use crate::homology::{bracket_from_homology, bracket_state_sum, homology_table, DEFAULT_STATESUM_CAP};
use crate::poly::BracketPolynomial;
use crate::skein::require_reduced_alternating;
use crate::state::{build_complex_with_cap, DEFAULT_COMPLEX_CAP};
use crate::tait::{psi, reduce, tait_graphs};

type Bracket = BracketPolynomial<i64>;

/// Which extreme is matched with which graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Pairing {
    /// Top pair with `G*`, bottom pair with `G`.
    #[serde(rename = "paper")]
    Standard,
    /// Top pair with `G`, bottom pair with `G*`.
    Swapped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub homology: usize,
    pub statesum: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            homology: DEFAULT_COMPLEX_CAP,
            statesum: DEFAULT_STATESUM_CAP,
        }
    }
}

/// The bracket of a diagram by every route the caps allow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComputedBracket {
    pub bracket: Bracket,
    pub from_homology: Option<Bracket>,
    pub from_state_sum: Option<Bracket>,
}

impl ComputedBracket {
    /// `None` when only one route ran.
    pub fn routes_agree(&self) -> Option<bool> {
        match (&self.from_homology, &self.from_state_sum) {
            (Some(h), Some(s)) => Some(h == s),
            _ => None,
        }
    }
}

pub fn compute_bracket(d: &Diagram, caps: Caps) -> Result<ComputedBracket> {
    let from_state_sum = match bracket_state_sum(d, caps.statesum) {
        Ok(b) => Some(b),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let from_homology = match build_complex_with_cap(d, caps.homology) {
        Ok(c) => Some(bracket_from_homology(&homology_table(&c))),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let bracket = from_homology
        .clone()
        .or_else(|| from_state_sum.clone())
        .ok_or(Error::CapExceeded {
            what: "bracket",
            crossings: d.len(),
            cap: caps.homology.max(caps.statesum),
        })?;
    Ok(ComputedBracket {
        bracket,
        from_homology,
        from_state_sum,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremeIdentity {
    /// `|a_{outer+-4} - a_outer|`, absent when the difference is off-axis.
    pub magnitude: Option<i64>,
    pub psi: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub name: String,
    pub crossings: usize,
    pub k: i32,
    pub l: i32,
    pub a_k: [i64; 2],
    pub a_k_minus_4: [i64; 2],
    pub a_l: [i64; 2],
    pub a_l_plus_4: [i64; 2],
    pub psi_g: i64,
    pub psi_gstar: i64,
    pub top: ExtremeIdentity,
    pub bottom: ExtremeIdentity,
    /// Both extreme pairs lie on a common axis before magnitudes are taken.
    pub phases_aligned: bool,
    pub pairing_used: Pairing,
    /// Homology and state-sum brackets agree; `None` if only one ran.
    pub routes_agree: Option<bool>,
    pub passed: bool,
}

fn pair(z: GaussianInt<i64>) -> [i64; 2] {
    [z.re, z.im]
}

fn difference_magnitude(outer: GaussianInt<i64>, inner: GaussianInt<i64>) -> Option<i64> {
    axis_magnitude(&(inner - outer))
}

/// `(psi(reduced G), psi(reduced G*))`.
pub fn reduced_psis(d: &Diagram) -> Result<(i64, i64)> {
    let (g, gs) = tait_graphs(d);
    Ok((psi(&reduce(&g))?, psi(&reduce(&gs))?))
}

fn require_theorem_input(d: &Diagram) -> Result<()> {
    require_reduced_alternating(d)?;
    if !d.is_connected() {
        return Err(Error::PreconditionViolated("diagram is split".into()));
    }
    Ok(())
}

pub fn verify_theorem(d: &Diagram) -> Result<TheoremReport> {
    verify_theorem_with(d, Pairing::Standard, Caps::default())
}

pub fn verify_theorem_with(d: &Diagram, pairing: Pairing, caps: Caps) -> Result<TheoremReport> {
    require_theorem_input(d)?;
    let computed = compute_bracket(d, caps)?;
    let (psi_g, psi_gstar) = reduced_psis(d)?;
    Ok(theorem_from_parts(d, &computed, psi_g, psi_gstar, pairing))
}

fn theorem_from_parts(
    d: &Diagram,
    computed: &ComputedBracket,
    psi_g: i64,
    psi_gstar: i64,
    pairing: Pairing,
) -> TheoremReport {
    let b = &computed.bracket;
    let k = b.max_degree().unwrap_or(0);
    let l = b.min_degree().unwrap_or(0);
    let (a_k, a_k4, a_l, a_l4) = (
        b.coefficient(k),
        b.coefficient(k - 4),
        b.coefficient(l),
        b.coefficient(l + 4),
    );
    let (psi_top, psi_bottom) = match pairing {
        Pairing::Standard => (psi_gstar, psi_g),
        Pairing::Swapped => (psi_g, psi_gstar),
    };
    let identity = |outer, inner, psi| {
        let magnitude = difference_magnitude(outer, inner);
        ExtremeIdentity {
            magnitude,
            psi,
            holds: magnitude == Some(psi),
        }
    };
    let top = identity(a_k, a_k4, psi_top);
    let bottom = identity(a_l, a_l4, psi_bottom);
    let phases_aligned = same_phase(&a_k, &a_k4) && same_phase(&a_l, &a_l4);
    let routes_agree = computed.routes_agree();
    TheoremReport {
        name: d.name().unwrap_or("").to_string(),
        crossings: d.len(),
        k,
        l,
        a_k: pair(a_k),
        a_k_minus_4: pair(a_k4),
        a_l: pair(a_l),
        a_l_plus_4: pair(a_l4),
        psi_g,
        psi_gstar,
        passed: top.holds && bottom.holds && phases_aligned && routes_agree != Some(false),
        top,
        bottom,
        phases_aligned,
        pairing_used: pairing,
        routes_agree,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub name: String,
    pub top_magnitude: Option<i64>,
    pub bottom_magnitude: Option<i64>,
    pub coefficient_sum: Option<i64>,
    /// `(|E~| - |V| + 1) + (|E~*| - |V*| + 1)`.
    pub psi_sum: i64,
    pub twist_number: usize,
    pub passed: bool,
}

pub fn verify_corollary(d: &Diagram) -> Result<CorollaryReport> {
    verify_corollary_with(d, Caps::default())
}

pub fn verify_corollary_with(d: &Diagram, caps: Caps) -> Result<CorollaryReport> {
    let components = d.link_components();
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    require_theorem_input(d)?;
    let computed = compute_bracket(d, caps)?;
    let (psi_g, psi_gstar) = reduced_psis(d)?;
    Ok(corollary_from_parts(d, &computed.bracket, psi_g, psi_gstar))
}

fn corollary_from_parts(d: &Diagram, b: &Bracket, psi_g: i64, psi_gstar: i64) -> CorollaryReport {
    let k = b.max_degree().unwrap_or(0);
    let l = b.min_degree().unwrap_or(0);
    let top = difference_magnitude(b.coefficient(k), b.coefficient(k - 4));
    let bottom = difference_magnitude(b.coefficient(l), b.coefficient(l + 4));
    let coefficient_sum = top.zip(bottom).map(|(t, b)| t + b);
    let twist_number = d.twist_classes().twist_number;
    CorollaryReport {
        name: d.name().unwrap_or("").to_string(),
        top_magnitude: top,
        bottom_magnitude: bottom,
        coefficient_sum,
        psi_sum: psi_g + psi_gstar,
        twist_number,
        passed: coefficient_sum == Some(twist_number as i64),
    }
}

/// One corpus entry's outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BatchEntry {
    pub name: String,
    pub crossings: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corollary: Option<CorollaryReport>,
    /// Why the theorem or corollary was not checked.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<String>,
    /// Skipped because a computation cap was exceeded.
    #[serde(skip)]
    pub cap_exceeded: bool,
}

impl BatchEntry {
    pub fn passed(&self) -> bool {
        self.theorem.as_ref().is_none_or(|t| t.passed) && self.corollary.as_ref().is_none_or(|c| c.passed)
    }

    pub fn verified(&self) -> bool {
        self.theorem.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BatchReport {
    pub pairing_used: Pairing,
    pub entries: Vec<BatchEntry>,
}

impl BatchReport {
    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.verified() && e.passed()).count()
    }

    pub fn verified(&self) -> usize {
        self.entries.iter().filter(|e| e.verified()).count()
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(BatchEntry::passed)
    }
}

struct Prepared {
    computed: ComputedBracket,
    psi_g: i64,
    psi_gstar: i64,
}

/// Runs the theorem and corollary over a corpus, in input order. The standard
/// pairing is used unless it fails somewhere while the swapped pairing
/// passes everywhere.
pub fn verify_batch(diagrams: &[Diagram], caps: Caps) -> Result<BatchReport> {
    let prepared: Vec<Result<Prepared>> = diagrams
        .par_iter()
        .map(|d| {
            require_theorem_input(d)?;
            let computed = compute_bracket(d, caps)?;
            let (psi_g, psi_gstar) = reduced_psis(d)?;
            Ok(Prepared {
                computed,
                psi_g,
                psi_gstar,
            })
        })
        .collect();

    let all_pass = |pairing| {
        diagrams.iter().zip(&prepared).all(|(d, p)| {
            p.as_ref().map_or(true, |p| {
                theorem_from_parts(d, &p.computed, p.psi_g, p.psi_gstar, pairing).passed
            })
        })
    };
    let pairing = if !all_pass(Pairing::Standard) && all_pass(Pairing::Swapped) {
        Pairing::Swapped
    } else {
        Pairing::Standard
    };

    let entries = diagrams
        .iter()
        .zip(prepared)
        .map(|(d, p)| {
            let name = d.name().unwrap_or("").to_string();
            match p {
                Err(why) => BatchEntry {
                    name,
                    crossings: d.len(),
                    theorem: None,
                    corollary: None,
                    cap_exceeded: matches!(why, Error::CapExceeded { .. }),
                    skipped: vec![why.to_string()],
                },
                Ok(p) => {
                    let theorem = theorem_from_parts(d, &p.computed, p.psi_g, p.psi_gstar, pairing);
                    let components = d.link_components();
                    let (corollary, skipped) = if components == 1 {
                        (
                            Some(corollary_from_parts(d, &p.computed.bracket, p.psi_g, p.psi_gstar)),
                            vec![],
                        )
                    } else {
                        (None, vec![format!("corollary: {}", Error::NotAKnot { components })])
                    };
                    BatchEntry {
                        name,
                        crossings: d.len(),
                        theorem: Some(theorem),
                        corollary,
                        skipped,
                        cap_exceeded: false,
                    }
                }
            }
        })
        .collect();
    Ok(BatchReport {
        pairing_used: pairing,
        entries,
    })
}
