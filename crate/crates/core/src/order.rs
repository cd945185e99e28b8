//! Total orders on letters and the lexicographic order they induce on words.

use std::cmp::Ordering;

use itertools::Itertools;

use crate::alphabet::{Letter, LetterSet};
use crate::error::{Error, Result};

/// A total order on a finite set of letters.
///
/// The order ranks a set of letters, usually the whole alphabet or the
/// letters occurring in a word. Comparing words that use an unranked letter
/// is an alphabet error.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LexOrder {
    /// Letters from least to greatest.
    sequence: Vec<Letter>,
    /// `rank[letter.index()]`, `u8::MAX` for unranked letters.
    rank: Vec<u8>,
}

const UNRANKED: u8 = u8::MAX;

impl LexOrder {
    /// The order listing `sequence` from least to greatest.
    pub fn new(sequence: Vec<Letter>) -> Result<Self> {
        if sequence.is_empty() {
            return Err(Error::InvalidArgument("an order needs at least one letter".into()));
        }
        if sequence.len() > UNRANKED as usize {
            return Err(Error::InvalidArgument("too many letters for an order".into()));
        }
        let width = sequence.iter().map(|l| l.index() + 1).max().unwrap_or(0);
        let mut rank = vec![UNRANKED; width];
        for (r, &l) in sequence.iter().enumerate() {
            if rank[l.index()] != UNRANKED {
                return Err(Error::InvalidArgument(format!("letter {l:?} listed twice in order")));
            }
            rank[l.index()] = r as u8;
        }
        Ok(LexOrder { sequence, rank })
    }

    /// The declaration order on letters `0..k`.
    pub fn identity(k: usize) -> Self {
        LexOrder::new((0..k as u8).map(Letter::new).collect()).expect("non-empty")
    }

    /// Every order on `letters`, in lexicographic order of the sequences (the
    /// declaration order comes first).
    pub fn all_orders(letters: &LetterSet) -> Vec<LexOrder> {
        let k = letters.len();
        letters
            .iter()
            .copied()
            .permutations(k)
            .map(|p| LexOrder::new(p).expect("permutation of distinct letters"))
            .collect()
    }

    /// Every order on `letters` whose least letter is `least`.
    pub fn orders_with_min(letters: &LetterSet, least: Letter) -> Vec<LexOrder> {
        let rest: Vec<Letter> = letters.iter().copied().filter(|&l| l != least).collect();
        let k = rest.len();
        rest.into_iter()
            .permutations(k)
            .map(|p| {
                let mut seq = Vec::with_capacity(p.len() + 1);
                seq.push(least);
                seq.extend(p);
                LexOrder::new(seq).expect("permutation of distinct letters")
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn sequence(&self) -> &[Letter] {
        &self.sequence
    }

    pub fn letter_set(&self) -> LetterSet {
        self.sequence.iter().copied().collect()
    }

    /// `min(𝒜)` under this order.
    pub fn least(&self) -> Letter {
        self.sequence[0]
    }

    pub fn greatest(&self) -> Letter {
        *self.sequence.last().expect("orders are non-empty")
    }

    pub fn rank(&self, letter: Letter) -> Result<u8> {
        match self.rank.get(letter.index()) {
            Some(&r) if r != UNRANKED => Ok(r),
            _ => Err(Error::LetterOutsideOrder(letter)),
        }
    }

    pub fn ranks(&self, word: &[Letter]) -> Result<Vec<u8>> {
        word.iter().map(|&l| self.rank(l)).collect()
    }

    pub fn compare_letters(&self, a: Letter, b: Letter) -> Result<Ordering> {
        Ok(self.rank(a)?.cmp(&self.rank(b)?))
    }

    /// Lexicographic comparison; a proper prefix is less than its extensions.
    pub fn compare(&self, u: &[Letter], v: &[Letter]) -> Result<Ordering> {
        for (&x, &y) in u.iter().zip(v) {
            match self.compare_letters(x, y)? {
                Ordering::Equal => continue,
                other => return Ok(other),
            }
        }
        // Validate the unmatched tail too, so an unranked letter is never
        // silently accepted.
        for &l in u.iter().skip(v.len()).chain(v.iter().skip(u.len())) {
            self.rank(l)?;
        }
        Ok(u.len().cmp(&v.len()))
    }

    /// The same letters, greatest first.
    pub fn reversed(&self) -> LexOrder {
        LexOrder::new(self.sequence.iter().rev().copied().collect()).expect("valid order")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn w(s: &str) -> Word {
        Word::from_latin(s).unwrap()
    }

    fn order(s: &str) -> LexOrder {
        LexOrder::new(w(s).into_letters()).unwrap()
    }

    #[test]
    fn first_difference_decides() {
        assert_eq!(order("ab").compare(&w("aab"), &w("aba")), Ok(Ordering::Less));
    }

    #[test]
    fn proper_prefix_is_less() {
        assert_eq!(order("ab").compare(&w("ab"), &w("aba")), Ok(Ordering::Less));
        assert_eq!(order("ab").compare(&w("aba"), &w("ab")), Ok(Ordering::Greater));
        assert_eq!(order("ab").compare(&w(""), &w("")), Ok(Ordering::Equal));
    }

    #[test]
    fn custom_rank_table() {
        // c < a < b
        let o = order("cab");
        assert_eq!(o.compare(&w("ca"), &w("cc")), Ok(Ordering::Greater));
        assert_eq!(o.compare(&w("cc"), &w("ca")), Ok(Ordering::Less));
        assert_eq!(o.least(), Letter::new(2));
        // Oracle: compare rank sequences with the std order on vectors.
        let ranks = |s: &str| o.ranks(&w(s)).unwrap();
        assert_eq!(ranks("ca").cmp(&ranks("cc")), Ordering::Greater);
    }

    #[test]
    fn unranked_letter_is_an_error() {
        let o = order("ab");
        assert_eq!(
            o.compare(&w("ab"), &w("ac")),
            Err(Error::LetterOutsideOrder(Letter::new(2)))
        );
        assert!(o.compare(&w("a"), &w("ac")).is_err());
    }

    #[test]
    fn enumerates_orders() {
        let letters = w("abc").alph();
        let all = LexOrder::all_orders(&letters);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], order("abc"));
        assert_eq!(all[4], order("cab"));
        let with_b = LexOrder::orders_with_min(&letters, Letter::new(1));
        assert_eq!(with_b, vec![order("bac"), order("bca")]);
        assert!(LexOrder::new(w("aba").into_letters()).is_err());
    }

    #[test]
    fn compare_is_a_total_order_on_short_words() {
        // Exhaustive over all words of length <= 4 on three letters.
        let mut words = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..4 {
            layer = layer
                .iter()
                .flat_map(|u| (0..3).map(move |i| u.concat(&[Letter::new(i)])))
                .collect();
            words.extend(layer.iter().cloned());
        }
        for o in LexOrder::all_orders(&w("abc").alph()) {
            let mut sorted = words.clone();
            sorted.sort_by(|u, v| o.compare(u, v).unwrap());
            for pair in sorted.windows(2) {
                assert_eq!(o.compare(&pair[0], &pair[1]), Ok(Ordering::Less));
                assert_eq!(o.compare(&pair[1], &pair[0]), Ok(Ordering::Greater));
            }
            // Transitivity and totality follow from a strict chain covering every
            // word; antisymmetry from the reverse comparisons above.
            assert_eq!(sorted.len(), words.len());
            for u in words.iter().step_by(7) {
                assert_eq!(o.compare(u, u), Ok(Ordering::Equal));
            }
        }
    }
}
