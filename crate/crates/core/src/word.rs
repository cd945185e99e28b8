//! Finite words and factor enumeration.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::ops::Deref;

use crate::alphabet::{Letter, LetterSet};
use crate::error::{Error, Result};

/// A finite word: a sequence of letters.
///
/// The derived `Ord` is the lexicographic order induced by the alphabet's
/// declaration order (a proper prefix is smaller than its extensions). Use
/// [`LexOrder`](crate::order::LexOrder) for any other order.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub const fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn single(letter: Letter) -> Self {
        Word(vec![letter])
    }

    /// Builds a word from lowercase latin characters, `a` being letter 0.
    /// Handy in tests and examples; real input goes through
    /// [`text`](crate::text).
    pub fn from_latin(text: &str) -> Result<Self> {
        text.char_indices()
            .map(|(i, c)| {
                if c.is_ascii_lowercase() {
                    Ok(Letter::new(c as u8 - b'a'))
                } else {
                    Err(Error::parse(i, format!("`{c}` is not a lowercase latin letter")))
                }
            })
            .collect()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn extend_from_slice(&mut self, letters: &[Letter]) {
        self.0.extend_from_slice(letters);
    }

    pub fn truncate(&mut self, len: usize) {
        self.0.truncate(len);
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(other);
        Word(out)
    }

    /// `letter · self`
    #[must_use]
    pub fn prepend(&self, letter: Letter) -> Word {
        let mut out = Vec::with_capacity(self.len() + 1);
        out.push(letter);
        out.extend_from_slice(&self.0);
        Word(out)
    }

    /// The prefix of length `n`, or the whole word when shorter.
    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n.min(self.len())].to_vec())
    }

    /// The suffix of length `n`, or the whole word when shorter.
    pub fn suffix(&self, n: usize) -> Word {
        let n = n.min(self.len());
        Word(self.0[self.len() - n..].to_vec())
    }

    pub fn reversal(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.0)
    }

    pub fn alph(&self) -> LetterSet {
        self.0.iter().copied().collect()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&c| c == letter).count()
    }
}

pub fn is_palindrome(w: &[Letter]) -> bool {
    w.iter().eq(w.iter().rev())
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a Letter;
    type IntoIter = std::slice::Iter<'a, Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for l in &self.0 {
            write!(f, "{l:?}")?;
        }
        Ok(())
    }
}

/// All distinct factors of length `k`. Empty when `k > |w|`.
pub fn factors(w: &[Letter], k: usize) -> BTreeSet<Word> {
    if k > w.len() {
        return BTreeSet::new();
    }
    w.windows(k.max(1))
        .map(|win| Word::from(&win[..k]))
        .chain((k == 0).then(Word::empty))
        .collect()
}

/// `|factors(w, k)|` without materialising the words.
pub fn count_factors(w: &[Letter], k: usize) -> usize {
    if k > w.len() {
        return 0;
    }
    if k == 0 {
        return 1;
    }
    w.windows(k).collect::<HashSet<_>>().len()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Factors of length `k` having at least two distinct one-letter extensions on
/// `side`, each extension witnessed inside `w`. Maps each special factor to its
/// extension letters.
pub fn special_factors(w: &[Letter], k: usize, side: Side) -> BTreeMap<Word, LetterSet> {
    let mut ext: BTreeMap<Word, LetterSet> = BTreeMap::new();
    if k + 1 > w.len() {
        return ext;
    }
    for win in w.windows(k + 1) {
        let (factor, letter) = match side {
            Side::Right => (&win[..k], win[k]),
            Side::Left => (&win[1..], win[0]),
        };
        ext.entry(Word::from(factor)).or_default().insert(letter);
    }
    ext.retain(|_, letters| letters.len() >= 2);
    ext
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_latin(s).unwrap()
    }

    fn set(words: &[&str]) -> BTreeSet<Word> {
        words.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn factors_of_small_word() {
        assert_eq!(factors(&w("abaab"), 2), set(&["ab", "ba", "aa"]));
        assert_eq!(factors(&w("abaab"), 0), set(&[""]));
        assert_eq!(factors(&w("ab"), 3), BTreeSet::new());
        assert_eq!(count_factors(&w("abaab"), 2), 3);
        assert_eq!(count_factors(&w(""), 0), 1);
    }

    #[test]
    fn reversal_and_palindromes() {
        assert_eq!(w("abaa").reversal(), w("aaba"));
        assert!(Word::empty().is_palindrome());
        assert!(w("abaaba").is_palindrome());
        assert!(!w("abaab").is_palindrome());
    }

    #[test]
    fn unary_word_has_no_right_special_factor() {
        assert!(special_factors(&w("aaaa"), 1, Side::Right).is_empty());
    }

    #[test]
    fn special_factors_record_extensions() {
        let sp = special_factors(&w("abaab"), 1, Side::Right);
        // a is followed by b and a; b only by a.
        assert_eq!(sp.len(), 1);
        assert_eq!(sp[&w("a")], w("ab").alph());
        let sp = special_factors(&w("abaab"), 1, Side::Left);
        assert_eq!(sp.keys().cloned().collect::<Vec<_>>(), vec![w("a")]);
    }

    #[test]
    fn from_latin_rejects_other_characters() {
        assert!(matches!(Word::from_latin("abC"), Err(Error::Parse { position: 2, .. })));
    }
}
