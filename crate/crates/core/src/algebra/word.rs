//! Words in the surface group generators `c1..c2g` and their images in
//! the abelianization `Z^{2g}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::{AlgebraError, IntVector};

/// A sign in `{+1, -1}`, used for letter exponents and intersection signs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The sign as an integer, `+1` or `-1`.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// The opposite sign.
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// One letter of a word: the generator `c<index>` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    /// 1-based generator index.
    pub index: usize,
    /// `Plus` for `c<index>`, `Minus` for its inverse.
    pub sign: Sign,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "c{}", self.index),
            Sign::Minus => write!(f, "-c{}", self.index),
        }
    }
}

/// A finite word in the generators `c1..c2g` of the surface group.
///
/// The genus is not stored; operations that need it take it as an argument
/// and reject letters outside `c1..c2g`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The inverse word: letters reversed, exponents flipped.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    index: l.index,
                    sign: l.sign.flipped(),
                })
                .collect(),
        }
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Cyclic rotation moving the first letter to the end.
    pub fn rotated_left(&self) -> Word {
        if self.letters.len() < 2 {
            return self.clone();
        }
        let mut letters = self.letters[1..].to_vec();
        letters.push(self.letters[0]);
        Word { letters }
    }
}

impl FromStr for Word {
    type Err = AlgebraError;

    /// Parses a space-separated list of `c<k>` / `-c<k>` tokens.
    fn from_str(s: &str) -> Result<Word, AlgebraError> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            letters.push(parse_letter(tok).ok_or_else(|| AlgebraError::InvalidToken(tok.into()))?);
        }
        Ok(Word { letters })
    }
}

/// Parses one `c<k>` or `-c<k>` token; the index must be a positive integer.
pub(crate) fn parse_letter(tok: &str) -> Option<Letter> {
    let (sign, rest) = match tok.strip_prefix('-') {
        Some(rest) => (Sign::Minus, rest),
        None => (Sign::Plus, tok),
    };
    let digits = rest.strip_prefix('c')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let index: usize = digits.parse().ok()?;
    if index == 0 {
        return None;
    }
    Some(Letter { index, sign })
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// The image of `word` in `H1` of the genus-`genus` surface: the vector of
/// signed letter counts in `Z^{2g}`.
pub fn abelianize(word: &Word, genus: usize) -> Result<IntVector, AlgebraError> {
    signed_counts(word.letters(), genus)
}

/// Abelianization of the length-`k` prefix of `word`.
///
/// `k` counts letters, so `k = 0` is the empty prefix and `k = len` the
/// whole word.
pub fn prefix_vector(word: &Word, k: usize, genus: usize) -> Result<IntVector, AlgebraError> {
    if k > word.len() {
        return Err(AlgebraError::PositionOutOfRange {
            position: k,
            len: word.len(),
        });
    }
    signed_counts(&word.letters()[..k], genus)
}

/// Abelianization of the suffix of `word` after position `l`: letters
/// `l+1..=len`, so `l = 0` is the whole word and `l = len` the empty suffix.
pub fn suffix_vector(word: &Word, l: usize, genus: usize) -> Result<IntVector, AlgebraError> {
    if l > word.len() {
        return Err(AlgebraError::PositionOutOfRange {
            position: l,
            len: word.len(),
        });
    }
    signed_counts(&word.letters()[l..], genus)
}

fn signed_counts(letters: &[Letter], genus: usize) -> Result<IntVector, AlgebraError> {
    let n = 2 * genus;
    let mut v = IntVector::zeros(n);
    for letter in letters {
        if letter.index == 0 || letter.index > n {
            return Err(AlgebraError::LetterOutOfRange {
                index: letter.index,
                genus,
            });
        }
        v[letter.index - 1] += BigInt::from(letter.sign.value());
    }
    Ok(v)
}
