//! Words over the two-letter alphabet `{a, b}`.

use std::fmt;
use std::str::FromStr;

use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }

    pub fn lower(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }

    pub fn upper(self) -> char {
        self.lower().to_ascii_uppercase()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn swapped(&self) -> Word {
        Word(self.0.iter().map(|l| l.swap()).collect())
    }

    /// All words of length exactly `n`, in lexicographic order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = Word> {
        (0u64..1 << n).map(move |bits| {
            Word(
                (0..n)
                    .map(|i| if bits >> (n - 1 - i) & 1 == 1 { Letter::B } else { Letter::A })
                    .collect(),
            )
        })
    }

    /// All words of length at most `n`, shortest first.
    pub fn all_up_to(n: usize) -> impl Iterator<Item = Word> {
        (0..=n).flat_map(Word::all_of_length)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{}", l.lower()))
    }
}

/// Accepts `a`/`b` in either case; `ε` and the empty string give the empty word.
impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word, Error> {
        if s == "ε" {
            return Ok(Word::empty());
        }
        s.chars()
            .enumerate()
            .map(|(i, c)| match c {
                'a' | 'A' => Ok(Letter::A),
                'b' | 'B' => Ok(Letter::B),
                _ => Err(Error::Parse { position: i, expected: "letter a or b".into() }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}
