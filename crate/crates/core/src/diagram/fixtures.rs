//! Built-in example diagrams.

use crate::algebra::{Letter, Sign, Word};

use super::{DiagramError, HeegaardDiagram, IntersectionPoint};

const AVAILABLE: &str =
    "s3, s1xs2, lens-p-q (2 <= p <= 12, 1 <= q < p, gcd(p, q) = 1), s3-genus2-stab";

/// Returns a named built-in diagram.
///
/// The catalog covers the standard genus-1 splittings (`s3`, `s1xs2`, the
/// `lens-p-q` family) and `s3-genus2-stab`, a genus-2 diagram of the
/// three-sphere whose first curve pair meets in three points of mixed sign.
pub fn fixture(name: &str) -> Result<HeegaardDiagram, DiagramError> {
    match name {
        "s3" => Ok(s3()),
        "s1xs2" => Ok(s1xs2()),
        "s3-genus2-stab" => Ok(s3_genus2_stab()),
        _ => match parse_lens(name) {
            Some((p, q)) => Ok(lens(p, q)),
            None => Err(DiagramError::UnknownFixture {
                name: name.to_string(),
                available: AVAILABLE.to_string(),
            }),
        },
    }
}

fn letter(index: usize) -> Letter {
    Letter {
        index,
        sign: Sign::Plus,
    }
}

fn point(label: &str, alpha: usize, beta: usize, k: usize, l: usize, sign: Sign) -> IntersectionPoint {
    IntersectionPoint {
        label: label.to_string(),
        alpha,
        beta,
        k,
        l,
        sign,
    }
}

/// Genus-1 S³: dual curves meeting once.
fn s3() -> HeegaardDiagram {
    HeegaardDiagram::new(
        1,
        vec![Word::new(vec![letter(1)])],
        vec![Word::new(vec![letter(2)])],
        vec![point("x0", 1, 1, 1, 1, Sign::Plus)],
    )
    .expect("catalog diagram is well formed")
}

/// Genus-1 S¹×S²: parallel curves, no intersection points.
fn s1xs2() -> HeegaardDiagram {
    HeegaardDiagram::new(
        1,
        vec![Word::new(vec![letter(1)])],
        vec![Word::new(vec![letter(1)])],
        vec![],
    )
    .expect("catalog diagram is well formed")
}

/// Genus-1 lens space L(p,q): β₁ runs q times around c1 and p times around
/// c2, crossing α₁ in p points. All signs are +1; the (1,0)-vs-(q,p) torus
/// picture has coherent crossings.
fn lens(p: usize, q: usize) -> HeegaardDiagram {
    let mut beta = Vec::with_capacity(p + q);
    beta.extend(std::iter::repeat(letter(1)).take(q));
    beta.extend(std::iter::repeat(letter(2)).take(p));
    let points = (0..p)
        .map(|i| point(&format!("x{i}"), 1, 1, 1, q + i, Sign::Plus))
        .collect();
    HeegaardDiagram::new(
        1,
        vec![Word::new(vec![letter(1)])],
        vec![Word::new(beta)],
        points,
    )
    .expect("catalog diagram is well formed")
}

/// Genus-2 S³ in which β₁ is isotoped across α₁ by a finger move, so the
/// pair meets in three points with signs +, -, + instead of one.
fn s3_genus2_stab() -> HeegaardDiagram {
    HeegaardDiagram::new(
        2,
        vec![Word::new(vec![letter(1)]), Word::new(vec![letter(3)])],
        vec![Word::new(vec![letter(2)]), Word::new(vec![letter(4)])],
        vec![
            point("x0", 1, 1, 0, 0, Sign::Plus),
            point("x1", 1, 1, 0, 1, Sign::Minus),
            point("x2", 1, 1, 1, 1, Sign::Plus),
            point("y0", 2, 2, 1, 1, Sign::Plus),
        ],
    )
    .expect("catalog diagram is well formed")
}

/// Parses `lens-p-q` and checks admissibility: 2 ≤ p ≤ 12, 1 ≤ q < p,
/// gcd(p, q) = 1.
fn parse_lens(name: &str) -> Option<(usize, usize)> {
    let rest = name.strip_prefix("lens-")?;
    let (p_str, q_str) = rest.split_once('-')?;
    let p: usize = p_str.parse().ok()?;
    let q: usize = q_str.parse().ok()?;
    if (2..=12).contains(&p) && (1..p).contains(&q) && num_integer::gcd(p, q) == 1 {
        Some((p, q))
    } else {
        None
    }
}
