//! Letters and alphabets.
//!
//! Letters are interned as small integers. An [`Alphabet`] is only needed to
//! translate between letters and their printable symbols; all word
//! algorithms work on [`Letter`] values directly.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a symbol in its alphabet (declaration order).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub const fn new(index: u8) -> Self {
        Letter(index)
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 26 {
            write!(f, "{}", (b'a' + self.0) as char)
        } else {
            write!(f, "#{}", self.0)
        }
    }
}

pub type LetterSet = BTreeSet<Letter>;

/// Maximum number of symbols an alphabet may hold.
pub const MAX_ALPHABET: usize = 256;

/// An ordered set of distinct printable symbols.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::Alphabet("alphabet must contain at least one symbol".into()));
        }
        if symbols.len() > MAX_ALPHABET {
            return Err(Error::Alphabet(format!(
                "alphabet has {} symbols, at most {MAX_ALPHABET} are supported",
                symbols.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for s in &symbols {
            if s.is_empty() {
                return Err(Error::Alphabet("empty symbol".into()));
            }
            if s.chars().any(|c| c.is_whitespace() || "(),<'*=".contains(c)) {
                return Err(Error::Alphabet(format!("symbol `{s}` contains a reserved character")));
            }
            if !seen.insert(s.as_str()) {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// The first `k` lowercase latin letters, `a`, `b`, ...
    pub fn latin(k: usize) -> Self {
        assert!((1..=26).contains(&k), "latin alphabets have 1..=26 letters");
        Alphabet {
            symbols: (0..k as u8).map(|i| ((b'a' + i) as char).to_string()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.symbols.len()).map(|i| Letter(i as u8))
    }

    pub fn letter_set(&self) -> LetterSet {
        self.letters().collect()
    }

    pub fn letter(&self, symbol: &str) -> Result<Letter> {
        self.symbols
            .iter()
            .position(|s| s == symbol)
            .map(|i| Letter(i as u8))
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.index() < self.symbols.len()
    }

    pub fn symbol(&self, letter: Letter) -> Result<&str> {
        self.symbols
            .get(letter.index())
            .map(String::as_str)
            .ok_or_else(|| Error::Alphabet(format!("letter #{} outside alphabet", letter.index())))
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    /// True when every symbol is a single character, so words can be written
    /// contiguously.
    pub fn is_single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbols.join(","))
    }
}
