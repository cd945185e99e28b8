//! Reduced words of the free group over an alphabet.

use std::fmt;

use crate::alphabet::Letter;
use crate::word::Word;

/// A letter or its formal inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub letter: Letter,
    pub inverse: bool,
}

impl Syllable {
    pub const fn pos(letter: Letter) -> Self {
        Syllable { letter, inverse: false }
    }

    pub const fn neg(letter: Letter) -> Self {
        Syllable { letter, inverse: true }
    }

    pub const fn inverted(self) -> Self {
        Syllable {
            letter: self.letter,
            inverse: !self.inverse,
        }
    }

    /// +1 or -1.
    pub const fn exponent(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

impl fmt::Debug for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.letter, if self.inverse { "'" } else { "" })
    }
}

/// An element of the free group, always kept in reduced form: no syllable is
/// adjacent to its own inverse.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct GroupWord(Vec<Syllable>);

impl GroupWord {
    pub const fn identity() -> Self {
        GroupWord(Vec::new())
    }

    /// Freely reduces an arbitrary syllable sequence. The reduced form is
    /// unique, so this is also the equality test of the group.
    pub fn reduce<I: IntoIterator<Item = Syllable>>(syllables: I) -> Self {
        let mut out = GroupWord::identity();
        for s in syllables {
            out.push(s);
        }
        out
    }

    pub fn from_word(w: &[Letter]) -> Self {
        GroupWord(w.iter().map(|&l| Syllable::pos(l)).collect())
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Right-multiplies by one syllable, cancelling if needed.
    pub fn push(&mut self, s: Syllable) {
        if self.0.last() == Some(&s.inverted()) {
            self.0.pop();
        } else {
            self.0.push(s);
        }
    }

    pub fn mul(&self, other: &GroupWord) -> GroupWord {
        let mut out = self.clone();
        for &s in &other.0 {
            out.push(s);
        }
        out
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|s| s.inverted()).collect())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|s| !s.inverse)
    }

    /// The monoid word, when every exponent is +1.
    pub fn to_word(&self) -> Option<Word> {
        self.is_positive()
            .then(|| self.0.iter().map(|s| s.letter).collect())
    }
}

impl From<&Word> for GroupWord {
    fn from(w: &Word) -> Self {
        GroupWord::from_word(w)
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Letter = Letter::new(0);
    const B: Letter = Letter::new(1);
    const C: Letter = Letter::new(2);

    /// Repeated single left-to-right passes until nothing cancels.
    fn reduce_by_scanning(mut s: Vec<Syllable>) -> Vec<Syllable> {
        loop {
            let mut out = Vec::with_capacity(s.len());
            let mut i = 0;
            let mut changed = false;
            while i < s.len() {
                if i + 1 < s.len() && s[i + 1] == s[i].inverted() {
                    i += 2;
                    changed = true;
                } else {
                    out.push(s[i]);
                    i += 1;
                }
            }
            if !changed {
                return out;
            }
            s = out;
        }
    }

    #[test]
    fn cancels_inverse_pairs() {
        let g = GroupWord::reduce([Syllable::pos(A), Syllable::neg(A)]);
        assert!(g.is_empty());
        let g = GroupWord::reduce([Syllable::neg(A), Syllable::pos(A)]);
        assert!(g.is_empty());
        let g = GroupWord::reduce([Syllable::pos(A), Syllable::pos(B), Syllable::neg(B), Syllable::pos(A)]);
        assert_eq!(g.to_word().unwrap(), Word::new(vec![A, A]));
    }

    #[test]
    fn two_stage_cancellation() {
        let raw = vec![
            Syllable::pos(A),
            Syllable::neg(B),
            Syllable::pos(B),
            Syllable::neg(A),
            Syllable::pos(C),
        ];
        assert_eq!(reduce_by_scanning(raw.clone()), vec![Syllable::pos(C)]);
        assert_eq!(GroupWord::reduce(raw).syllables(), &[Syllable::pos(C)]);
    }

    #[test]
    fn inverse_multiplies_to_identity() {
        let g = GroupWord::reduce([Syllable::pos(A), Syllable::neg(B), Syllable::pos(C)]);
        assert!(g.mul(&g.inverse()).is_empty());
        assert!(g.inverse().mul(&g).is_empty());
        assert!(!g.is_positive());
        assert_eq!(g.to_word(), None);
    }

    proptest::proptest! {
        #[test]
        fn stack_reduction_matches_scanning_oracle(raw in proptest::collection::vec((0u8..3, proptest::bool::ANY), 0..24)) {
            let raw: Vec<Syllable> = raw.into_iter().map(|(l, inv)| Syllable { letter: Letter::new(l), inverse: inv }).collect();
            let reduced = GroupWord::reduce(raw.clone());
            proptest::prop_assert_eq!(reduced.syllables(), &reduce_by_scanning(raw)[..]);
            for pair in reduced.syllables().windows(2) {
                proptest::prop_assert_ne!(pair[1], pair[0].inverted());
            }
        }
    }
}
