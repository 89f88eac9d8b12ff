//! Parser for the `.hd` diagram text format.
//!
//! Grammar, one item per line:
//!
//! ```text
//! genus <g>
//! alpha <i>: <word>
//! beta <j>: <word>
//! x <label>: a<i> b<j> k=<int> l=<int> sign=<+|->
//! ```
//!
//! `#` starts a comment, blank lines are ignored, and the `genus` line must
//! come first. Curve lines may appear in any order but each index exactly
//! once. Malformed lines are syntax errors; well-formed lines that break a
//! diagram rule are semantic errors. Both carry the 1-based line number.

use std::collections::HashMap;

use crate::algebra::{parse_letter, Sign, Word};

use super::{DiagramError, HeegaardDiagram, IntersectionPoint};

pub fn parse_diagram(text: &str) -> Result<HeegaardDiagram, DiagramError> {
    let mut genus: Option<usize> = None;
    let mut genus_line = 1;
    let mut alpha: Vec<Option<Word>> = Vec::new();
    let mut beta: Vec<Option<Word>> = Vec::new();
    let mut points: Vec<(IntersectionPoint, usize)> = Vec::new();
    let mut label_lines: HashMap<String, usize> = HashMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if genus.is_none() && tokens[0] != "genus" {
            return Err(syntax(line, "expected `genus <g>` as the first line".into()));
        }
        match tokens[0] {
            "genus" => {
                if genus.is_some() {
                    return Err(semantic(line, "duplicate genus line".into()));
                }
                if tokens.len() != 2 {
                    return Err(syntax(line, "expected `genus <g>`".into()));
                }
                let g: usize = tokens[1]
                    .parse()
                    .map_err(|_| syntax(line, format!("invalid genus `{}`", tokens[1])))?;
                if g == 0 {
                    return Err(semantic(line, "genus must be at least 1".into()));
                }
                genus = Some(g);
                genus_line = line;
                alpha = vec![None; g];
                beta = vec![None; g];
            }
            kw @ ("alpha" | "beta") => {
                let g = genus.expect("genus precedes curves");
                if tokens.len() < 2 {
                    return Err(syntax(line, format!("expected `{kw} <i>: <word>`")));
                }
                let index_tok = labelled(tokens[1])
                    .ok_or_else(|| syntax(line, format!("expected `{kw} <i>: <word>`")))?;
                let i: usize = index_tok.parse().map_err(|_| {
                    syntax(line, format!("invalid curve index `{index_tok}`"))
                })?;
                if i == 0 || i > g {
                    return Err(semantic(line, format!("{kw} index {i} out of range 1..={g}")));
                }
                if tokens.len() == 2 {
                    return Err(semantic(line, format!("{kw} {i} word is empty")));
                }
                let mut letters = Vec::with_capacity(tokens.len() - 2);
                for tok in &tokens[2..] {
                    let letter = parse_letter(tok)
                        .ok_or_else(|| syntax(line, format!("invalid word token `{tok}`")))?;
                    if letter.index > 2 * g {
                        return Err(semantic(
                            line,
                            format!("generator c{} out of range c1..c{}", letter.index, 2 * g),
                        ));
                    }
                    letters.push(letter);
                }
                let slot = if kw == "alpha" {
                    &mut alpha[i - 1]
                } else {
                    &mut beta[i - 1]
                };
                if slot.is_some() {
                    return Err(semantic(line, format!("duplicate {kw} {i}")));
                }
                *slot = Some(Word::new(letters));
            }
            "x" => {
                let g = genus.expect("genus precedes points");
                let point = parse_point(&tokens, line, g)?;
                if let Some(&first) = label_lines.get(&point.label) {
                    return Err(semantic(
                        line,
                        format!("duplicate point label `{}` (first used on line {first})", point.label),
                    ));
                }
                label_lines.insert(point.label.clone(), line);
                points.push((point, line));
            }
            other => {
                return Err(syntax(line, format!("unknown directive `{other}`")));
            }
        }
    }

    let g = genus.ok_or_else(|| syntax(1, "expected `genus <g>`".into()))?;
    for i in 1..=g {
        if alpha[i - 1].is_none() {
            return Err(semantic(genus_line, format!("missing alpha {i}")));
        }
        if beta[i - 1].is_none() {
            return Err(semantic(genus_line, format!("missing beta {i}")));
        }
    }
    let alpha: Vec<Word> = alpha.into_iter().map(Option::unwrap).collect();
    let beta: Vec<Word> = beta.into_iter().map(Option::unwrap).collect();
    for (p, line) in &points {
        let m = alpha[p.alpha - 1].len();
        if p.k > m {
            return Err(semantic(
                *line,
                format!("point {}: k={} out of range 0..={m}", p.label, p.k),
            ));
        }
        let n = beta[p.beta - 1].len();
        if p.l > n {
            return Err(semantic(
                *line,
                format!("point {}: l={} out of range 0..={n}", p.label, p.l),
            ));
        }
    }
    HeegaardDiagram::new(g, alpha, beta, points.into_iter().map(|(p, _)| p).collect())
}

fn syntax(line: usize, message: String) -> DiagramError {
    DiagramError::Syntax { line, message }
}

fn semantic(line: usize, message: String) -> DiagramError {
    DiagramError::Semantic { line, message }
}

/// Strips the trailing `:` from a `<name>:` token.
fn labelled(tok: &str) -> Option<&str> {
    tok.strip_suffix(':').filter(|s| !s.is_empty())
}

fn parse_point(tokens: &[&str], line: usize, g: usize) -> Result<IntersectionPoint, DiagramError> {
    let usage = "expected `x <label>: a<i> b<j> k=<int> l=<int> sign=<+|->`";
    if tokens.len() != 7 {
        return Err(syntax(line, usage.into()));
    }
    let label = labelled(tokens[1]).ok_or_else(|| syntax(line, usage.into()))?;
    let alpha: usize = tokens[2]
        .strip_prefix('a')
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| syntax(line, format!("invalid alpha reference `{}`", tokens[2])))?;
    if alpha == 0 || alpha > g {
        return Err(semantic(line, format!("alpha index {alpha} out of range 1..={g}")));
    }
    let beta: usize = tokens[3]
        .strip_prefix('b')
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| syntax(line, format!("invalid beta reference `{}`", tokens[3])))?;
    if beta == 0 || beta > g {
        return Err(semantic(line, format!("beta index {beta} out of range 1..={g}")));
    }
    let k: usize = tokens[4]
        .strip_prefix("k=")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| syntax(line, format!("invalid position `{}`", tokens[4])))?;
    let l: usize = tokens[5]
        .strip_prefix("l=")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| syntax(line, format!("invalid position `{}`", tokens[5])))?;
    let sign = match tokens[6].strip_prefix("sign=") {
        Some("+") => Sign::Plus,
        Some("-") => Sign::Minus,
        _ => return Err(syntax(line, format!("invalid sign `{}`", tokens[6]))),
    };
    Ok(IntersectionPoint {
        label: label.to_string(),
        alpha,
        beta,
        k,
        l,
        sign,
    })
}
