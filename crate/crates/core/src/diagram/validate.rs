//! Non-fatal hygiene checks on diagrams.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::{Letter, Word};

use super::HeegaardDiagram;

/// A non-fatal irregularity. Warnings never make a diagram invalid; every
/// operation accepts diagrams that warn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    /// An alpha word contains an adjacent inverse pair.
    AlphaNotFreelyReduced { index: usize },
    /// A beta word contains an adjacent inverse pair.
    BetaNotFreelyReduced { index: usize },
    /// A beta word is freely reduced but its last letter cancels its first.
    BetaNotCyclicallyReduced { index: usize },
    /// Two labels name the same `(alpha, beta, k, l)` position.
    DuplicatePosition { first: String, second: String },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::AlphaNotFreelyReduced { index } => {
                write!(f, "alpha {index} is not freely reduced")
            }
            Warning::BetaNotFreelyReduced { index } => {
                write!(f, "beta {index} is not freely reduced")
            }
            Warning::BetaNotCyclicallyReduced { index } => {
                write!(f, "beta {index} is not cyclically reduced")
            }
            Warning::DuplicatePosition { first, second } => {
                write!(f, "points `{first}` and `{second}` share the same position")
            }
        }
    }
}

/// Checks reduction hygiene of the attaching words and reports labels that
/// share a position. Deterministic order: alpha warnings by index, then
/// beta warnings by index, then duplicates by label order.
pub fn validate(d: &HeegaardDiagram) -> Vec<Warning> {
    let mut out = Vec::new();
    for (i, w) in d.alpha().iter().enumerate() {
        if !freely_reduced(w) {
            out.push(Warning::AlphaNotFreelyReduced { index: i + 1 });
        }
    }
    for (j, w) in d.beta().iter().enumerate() {
        if !freely_reduced(w) {
            out.push(Warning::BetaNotFreelyReduced { index: j + 1 });
        } else if !cyclically_reduced(w) {
            out.push(Warning::BetaNotCyclicallyReduced { index: j + 1 });
        }
    }
    let mut seen: HashMap<(usize, usize, usize, usize), &str> = HashMap::new();
    for p in d.points() {
        match seen.entry((p.alpha, p.beta, p.k, p.l)) {
            std::collections::hash_map::Entry::Occupied(e) => {
                out.push(Warning::DuplicatePosition {
                    first: e.get().to_string(),
                    second: p.label.clone(),
                });
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(&p.label);
            }
        }
    }
    out
}

fn inverse_pair(a: &Letter, b: &Letter) -> bool {
    a.index == b.index && a.sign != b.sign
}

fn freely_reduced(w: &Word) -> bool {
    w.letters().windows(2).all(|p| !inverse_pair(&p[0], &p[1]))
}

/// Freely reduced with no cancellation across the wrap-around either.
fn cyclically_reduced(w: &Word) -> bool {
    let letters = w.letters();
    freely_reduced(w)
        && (letters.len() < 2 || !inverse_pair(&letters[letters.len() - 1], &letters[0]))
}
