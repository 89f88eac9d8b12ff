//! Canonical text form for diagrams.

use std::fmt::Write;

use super::HeegaardDiagram;

/// Serializes `d` canonically: genus line, alpha curves in index order, beta
/// curves in index order, points sorted by label, single spaces throughout.
///
/// Parsing the output reproduces the diagram exactly, and equal diagrams
/// produce identical bytes.
pub fn serialize_diagram(d: &HeegaardDiagram) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "genus {}", d.genus());
    for (i, w) in d.alpha().iter().enumerate() {
        let _ = writeln!(out, "alpha {}: {w}", i + 1);
    }
    for (j, w) in d.beta().iter().enumerate() {
        let _ = writeln!(out, "beta {}: {w}", j + 1);
    }
    for p in d.points() {
        let _ = writeln!(
            out,
            "x {}: a{} b{} k={} l={} sign={}",
            p.label, p.alpha, p.beta, p.k, p.l, p.sign
        );
    }
    out
}
