//! Renderers for the report formats. Every function returns the complete
//! stdout payload, newline-terminated, and is deterministic for a given
//! report.

use heegaard_core::{BigInt, ClassCoordinate, ClassReport, QuotientGroup};
use serde_json::{json, Value};

pub fn h1_line(q: &QuotientGroup) -> String {
    format!("H1 = {q}\n")
}

pub fn generators_table(report: &ClassReport) -> String {
    let mut out = String::from("id\tcoordinate\tsign\n");
    for s in report.generators() {
        out.push_str(&format!("{}\t{}\t{}\n", s.id, s.coordinate, s.sign));
    }
    out
}

pub fn classes_table(report: &ClassReport) -> String {
    let mut out = String::from("coordinate\tsize\tmembers\tsigns\n");
    for (coordinate, members) in report.classes() {
        let signs: Vec<String> = members
            .iter()
            .map(|id| sign_of(report, id).to_string())
            .collect();
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            coordinate,
            members.len(),
            members.join(" "),
            signs.join(" ")
        ));
    }
    out
}

fn sign_of<'r>(report: &'r ClassReport, id: &str) -> &'r heegaard_core::Sign {
    &report
        .generators()
        .iter()
        .find(|s| s.id == id)
        .expect("class members appear in the generator list")
        .sign
}

/// One JSON document serves every machine consumer: the homology, the
/// generator list, and the class partition.
pub fn json_document(genus: usize, report: &ClassReport) -> String {
    let q = report.quotient();
    let torsion: Vec<Value> = q.invariant_factors().iter().map(big_number).collect();
    let generators: Vec<Value> = report
        .generators()
        .iter()
        .map(|s| {
            json!({
                "id": s.id,
                "coordinate": coordinate_value(&s.coordinate),
                "sign": s.sign.value(),
            })
        })
        .collect();
    let classes: Vec<Value> = report
        .classes()
        .iter()
        .map(|(coordinate, members)| {
            json!({
                "coordinate": coordinate_value(coordinate),
                "members": members,
            })
        })
        .collect();
    let doc = json!({
        "genus": genus,
        "h1": { "rank": q.free_rank(), "torsion": torsion },
        "generators": generators,
        "classes": classes,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("document has no non-string keys");
    text.push('\n');
    text
}

pub fn classes_dot(report: &ClassReport) -> String {
    let mut out = String::from("graph classes {\n");
    for s in report.generators() {
        out.push_str(&format!("  \"{}\";\n", s.id));
    }
    for (_, members) in report.classes() {
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                out.push_str(&format!("  \"{}\" -- \"{}\";\n", members[i], members[j]));
            }
        }
    }
    out.push_str("}\n");
    out
}

fn coordinate_value(c: &ClassCoordinate) -> Value {
    let free: Vec<Value> = c.free().iter().map(big_number).collect();
    let torsion: Vec<Value> = c
        .torsion()
        .iter()
        .map(|t| json!({ "residue": big_number(&t.residue), "modulus": big_number(&t.modulus) }))
        .collect();
    json!({ "free": free, "torsion": torsion })
}

/// Arbitrary-precision JSON number, digits preserved exactly.
fn big_number(b: &BigInt) -> Value {
    serde_json::from_str(&b.to_string()).expect("integer literal is valid JSON")
}
