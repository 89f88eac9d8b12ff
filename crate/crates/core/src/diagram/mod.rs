//! Combinatorial Heegaard diagrams: one word per attaching curve plus the
//! labeled intersection points of the alpha and beta curves, with a
//! line-oriented text format (`.hd` files).

mod fixtures;
mod parse;
mod serialize;
mod validate;

pub use fixtures::fixture;
pub use parse::parse_diagram;
pub use serialize::serialize_diagram;
pub use validate::{validate, Warning};

use std::collections::HashSet;

use thiserror::Error;

use crate::algebra::{Sign, Word};

/// Failure to parse or assemble a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    /// A line that does not match the file grammar.
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    /// A well-formed line whose content breaks a diagram rule.
    #[error("line {line}: {message}")]
    Semantic { line: usize, message: String },
    /// A programmatically assembled diagram breaks a structural rule.
    #[error("{0}")]
    Invalid(String),
    /// A fixture name that is not in the catalog.
    #[error("unknown fixture `{name}`; available: {available}")]
    UnknownFixture { name: String, available: String },
}

/// One labeled intersection point of an alpha and a beta curve.
///
/// `k` counts the alpha-word letters before the point and `l` the beta-word
/// letters before it. Both ends are legal: position `0` and position `len`
/// name the same pass through the basepoint, and coordinates treat them
/// identically, so no boundary case needs special handling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionPoint {
    /// Unique nonempty label.
    pub label: String,
    /// 1-based alpha curve index.
    pub alpha: usize,
    /// 1-based beta curve index.
    pub beta: usize,
    /// Prefix length along the alpha word, `0..=m`.
    pub k: usize,
    /// Prefix length along the beta word, `0..=n`.
    pub l: usize,
    /// Geometric intersection sign. The sign is input data: the text format
    /// carries it rather than deriving it from an embedding.
    pub sign: Sign,
}

/// A genus-`g` Heegaard diagram: `g` alpha words, `g` beta words, and
/// labeled intersection points.
///
/// Points are kept sorted by label, so diagrams with equal content compare
/// equal and serialize to identical bytes. Distinct labels may share the
/// same `(alpha, beta, k, l)` position; `validate` warns but nothing fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeegaardDiagram {
    genus: usize,
    alpha: Vec<Word>,
    beta: Vec<Word>,
    points: Vec<IntersectionPoint>,
}

impl HeegaardDiagram {
    /// Assembles and structurally validates a diagram.
    pub fn new(
        genus: usize,
        alpha: Vec<Word>,
        beta: Vec<Word>,
        mut points: Vec<IntersectionPoint>,
    ) -> Result<HeegaardDiagram, DiagramError> {
        let invalid = |m: String| DiagramError::Invalid(m);
        if genus == 0 {
            return Err(invalid("genus must be at least 1".into()));
        }
        if alpha.len() != genus {
            return Err(invalid(format!(
                "expected {genus} alpha words, got {}",
                alpha.len()
            )));
        }
        if beta.len() != genus {
            return Err(invalid(format!(
                "expected {genus} beta words, got {}",
                beta.len()
            )));
        }
        for (name, words) in [("alpha", &alpha), ("beta", &beta)] {
            for (i, w) in words.iter().enumerate() {
                if w.is_empty() {
                    return Err(invalid(format!("{name} {} word is empty", i + 1)));
                }
                for letter in w.letters() {
                    if letter.index == 0 || letter.index > 2 * genus {
                        return Err(invalid(format!(
                            "{name} {}: generator c{} out of range c1..c{}",
                            i + 1,
                            letter.index,
                            2 * genus
                        )));
                    }
                }
            }
        }
        let mut labels = HashSet::new();
        for p in &points {
            if p.label.is_empty() {
                return Err(invalid("intersection point with empty label".into()));
            }
            if !labels.insert(p.label.clone()) {
                return Err(invalid(format!("duplicate point label `{}`", p.label)));
            }
            if p.alpha == 0 || p.alpha > genus {
                return Err(invalid(format!(
                    "point {}: alpha index {} out of range 1..={genus}",
                    p.label, p.alpha
                )));
            }
            if p.beta == 0 || p.beta > genus {
                return Err(invalid(format!(
                    "point {}: beta index {} out of range 1..={genus}",
                    p.label, p.beta
                )));
            }
            let m = alpha[p.alpha - 1].len();
            if p.k > m {
                return Err(invalid(format!(
                    "point {}: k={} out of range 0..={m}",
                    p.label, p.k
                )));
            }
            let n = beta[p.beta - 1].len();
            if p.l > n {
                return Err(invalid(format!(
                    "point {}: l={} out of range 0..={n}",
                    p.label, p.l
                )));
            }
        }
        points.sort_by(|a, b| a.label.cmp(&b.label));
        Ok(HeegaardDiagram {
            genus,
            alpha,
            beta,
            points,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn alpha(&self) -> &[Word] {
        &self.alpha
    }

    pub fn beta(&self) -> &[Word] {
        &self.beta
    }

    /// The `i`-th alpha word, 1-based.
    pub fn alpha_word(&self, i: usize) -> &Word {
        &self.alpha[i - 1]
    }

    /// The `j`-th beta word, 1-based.
    pub fn beta_word(&self, j: usize) -> &Word {
        &self.beta[j - 1]
    }

    /// Points sorted by label.
    pub fn points(&self) -> &[IntersectionPoint] {
        &self.points
    }

    pub fn find_point(&self, label: &str) -> Option<&IntersectionPoint> {
        self.points
            .binary_search_by(|p| p.label.as_str().cmp(label))
            .ok()
            .map(|i| &self.points[i])
    }

    /// The diagram with `beta j` rotated one letter (first letter moved to
    /// the end) and the `l` of every point on it shifted to keep naming the
    /// same basepoint pass. Presents the same geometry from a different
    /// starting letter.
    pub fn rotate_beta(&self, j: usize) -> Result<HeegaardDiagram, DiagramError> {
        if j == 0 || j > self.genus {
            return Err(DiagramError::Invalid(format!(
                "beta index {j} out of range 1..={}",
                self.genus
            )));
        }
        let n = self.beta[j - 1].len();
        let mut beta = self.beta.clone();
        beta[j - 1] = beta[j - 1].rotated_left();
        let points = self
            .points
            .iter()
            .map(|p| {
                let mut p = p.clone();
                if p.beta == j {
                    p.l = (p.l + n - 1) % n;
                }
                p
            })
            .collect();
        HeegaardDiagram::new(self.genus, self.alpha.clone(), beta, points)
    }
}
