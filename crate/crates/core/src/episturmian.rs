//! Standard episturmian words generated from directive words.
//!
//! A directive word `Δ = x₁x₂x₃⋯` drives the palindromic prefixes
//! `u₁ = ε`, `u_{n+1} = (uₙxₙ)⁽⁺⁾`, whose limit is the standard episturmian
//! word `s`. With `μₙ = Ψ_{x₁}⋯Ψ_{xₙ}` and `hₙ = μₙ(x_{n+1})` we also have
//! `u_{n+1} = h_{n−1}uₙ`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use crate::alphabet::{Alphabet, Letter, LetterSet};
use crate::error::{Error, Result};
use crate::morphism::PureEpistandardMorphism;
use crate::stream::WordStream;
use crate::word::Word;

/// An eventually periodic directive word `preperiod · period^ω`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DirectiveWord {
    preperiod: Word,
    period: Word,
}

impl DirectiveWord {
    pub fn new(preperiod: Word, period: Word) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidDirective("period must be non-empty".into()));
        }
        Ok(DirectiveWord { preperiod, period })
    }

    pub fn periodic(period: Word) -> Result<Self> {
        DirectiveWord::new(Word::empty(), period)
    }

    pub fn preperiod(&self) -> &Word {
        &self.preperiod
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    /// `xᵢ`, 1-indexed.
    pub fn letter(&self, i: usize) -> Letter {
        assert!(i >= 1, "directive letters are 1-indexed");
        let i = i - 1;
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    /// `x₁⋯xₙ`.
    pub fn prefix(&self, n: usize) -> Word {
        (1..=n).map(|i| self.letter(i)).collect()
    }

    /// The `i`-th shift `x_{i+1}x_{i+2}⋯`.
    pub fn shift(&self, i: usize) -> DirectiveWord {
        if i <= self.preperiod.len() {
            DirectiveWord {
                preperiod: Word::from(&self.preperiod[i..]),
                period: self.period.clone(),
            }
        } else {
            let r = (i - self.preperiod.len()) % self.period.len();
            let mut period = Word::from(&self.period[r..]);
            period.extend_from_slice(&self.period[..r]);
            DirectiveWord {
                preperiod: Word::empty(),
                period,
            }
        }
    }

    /// Letters occurring in `Δ`.
    pub fn alph(&self) -> LetterSet {
        let mut s = self.preperiod.alph();
        s.extend(self.period.iter().copied());
        s
    }

    /// Letters occurring infinitely often in `Δ`.
    pub fn ult(&self) -> LetterSet {
        self.period.alph()
    }

    /// `Alph(Δ) = Ult(Δ)`.
    pub fn is_strict(&self) -> bool {
        self.alph() == self.ult()
    }

    /// `μₙ = Ψ_{x₁}⋯Ψ_{xₙ}`.
    pub fn mu(&self, n: usize) -> PureEpistandardMorphism {
        PureEpistandardMorphism::from_generators(self.prefix(n).into_letters())
    }
}

impl fmt::Debug for DirectiveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.preperiod.is_empty() {
            write!(f, "{:?}", self.preperiod)?;
        }
        write!(f, "({:?})", self.period)
    }
}

/// `w⁽⁺⁾`: the shortest palindrome having `w` as a prefix.
///
/// Computed as `w · reverse(w minus its longest palindromic suffix)`. The
/// longest palindromic suffix is the longest prefix of `reverse(w)` that is
/// also a suffix of `w`, found with a prefix-function pass over
/// `reverse(w) # w`.
pub fn palindromic_closure(w: &[Letter]) -> Word {
    let n = w.len();
    if n == 0 {
        return Word::empty();
    }
    let text: Vec<Option<Letter>> = w
        .iter()
        .rev()
        .map(|&l| Some(l))
        .chain(std::iter::once(None))
        .chain(w.iter().map(|&l| Some(l)))
        .collect();
    let mut pi = vec![0usize; text.len()];
    for i in 1..text.len() {
        let mut j = pi[i - 1];
        while j > 0 && text[i] != text[j] {
            j = pi[j - 1];
        }
        if text[i] == text[j] {
            j += 1;
        }
        pi[i] = j;
    }
    let pal_suffix = pi[text.len() - 1];
    let mut out = Word::from(w);
    out.extend_from_slice(&w[..n - pal_suffix].iter().rev().copied().collect::<Vec<_>>());
    out
}

/// `u₁, …, uₙ` by iterating `u_{k+1} = (u_k x_k)⁽⁺⁾` from `u₁ = ε`.
pub fn palindromic_prefixes(directive: &DirectiveWord, n: usize) -> Vec<Word> {
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    out.push(Word::empty());
    for k in 1..n {
        let next = palindromic_closure(&out[k - 1].concat(&[directive.letter(k)]));
        out.push(next);
    }
    out
}

/// `hₙ = μₙ(x_{n+1})`.
pub fn h_word(directive: &DirectiveWord, n: usize) -> Word {
    directive.mu(n).image_of(directive.letter(n + 1))
}

/// The standard episturmian word directed by `directive`.
pub fn standard_word(directive: &DirectiveWord) -> WordStream {
    WordStream::standard(directive.clone())
}

/// Memoised generator for a standard episturmian word.
///
/// Only the longest palindromic prefix computed so far is stored, together
/// with the lengths `|u₁|, |u₂|, …`; every `uₙ` is a prefix of it.
pub struct StandardWordGenerator {
    directive: DirectiveWord,
    state: Mutex<GeneratorState>,
}

struct GeneratorState {
    word: Vec<Letter>,
    /// `lengths[i] = |u_{i+1}|`
    lengths: Vec<usize>,
    /// Last directive index at which each letter occurred.
    last_index: HashMap<Letter, usize>,
}

impl GeneratorState {
    /// Appends `u_{n+1}` for `n = lengths.len()`.
    ///
    /// If `xₙ` occurred before, at a last index `k < n`, then
    /// `u_{n+1} = uₙ u_k⁻¹ uₙ`; otherwise `u_{n+1} = uₙ xₙ uₙ`. Both are the
    /// palindromic closure of `uₙxₙ`, obtained in time linear in the output.
    fn step(&mut self, directive: &DirectiveWord) {
        let n = self.lengths.len();
        let x = directive.letter(n);
        let un = self.lengths[n - 1];
        debug_assert_eq!(self.word.len(), un);
        match self.last_index.get(&x) {
            Some(&k) => {
                let uk = self.lengths[k - 1];
                self.word.extend_from_within(uk..un);
            }
            None => {
                self.word.push(x);
                self.word.extend_from_within(0..un);
            }
        }
        self.last_index.insert(x, n);
        self.lengths.push(self.word.len());
    }
}

impl StandardWordGenerator {
    pub fn new(directive: DirectiveWord) -> Self {
        StandardWordGenerator {
            directive,
            state: Mutex::new(GeneratorState {
                word: Vec::new(),
                lengths: vec![0],
                last_index: HashMap::new(),
            }),
        }
    }

    pub fn directive(&self) -> &DirectiveWord {
        &self.directive
    }

    fn with_state<T>(&self, f: impl FnOnce(&mut GeneratorState) -> T) -> T {
        let mut guard = self.state.lock().unwrap_or_else(|e| e.into_inner());
        f(&mut guard)
    }

    pub fn prefix(&self, n: usize) -> Word {
        self.with_state(|st| {
            while st.word.len() < n {
                st.step(&self.directive);
            }
            Word::from(&st.word[..n])
        })
    }

    /// `uₙ` (1-indexed).
    pub fn palindromic_prefix(&self, n: usize) -> Word {
        assert!(n >= 1);
        self.with_state(|st| {
            while st.lengths.len() < n {
                st.step(&self.directive);
            }
            Word::from(&st.word[..st.lengths[n - 1]])
        })
    }

    /// `|u₁|, …, |uₙ|`.
    pub fn palindromic_lengths(&self, n: usize) -> Vec<usize> {
        self.with_state(|st| {
            while st.lengths.len() < n {
                st.step(&self.directive);
            }
            st.lengths[..n].to_vec()
        })
    }

    /// Least `n` with `|uₙ| ≥ len`, and that length.
    pub fn first_palindrome_reaching(&self, len: usize) -> (usize, usize) {
        self.with_state(|st| {
            loop {
                if let Some(i) = st.lengths.iter().position(|&l| l >= len) {
                    return (i + 1, st.lengths[i]);
                }
                st.step(&self.directive);
            }
        })
    }

    /// `|u_m|` for the least `m` with `|u_m| ≥ 2k`: the horizon from which
    /// length-`k` extremal factors are reported as exact.
    pub fn exactness_floor(&self, k: usize) -> usize {
        self.first_palindrome_reaching(2 * k).1
    }

    /// A horizon after which every word `a·s_{k−1}` with `a ∈ Ult(Δ)` has
    /// occurred: each `a·uₙ` is a factor of `u_{n'+1}` for the next index
    /// `n' ≥ n` with `x_{n'} = a`.
    pub fn suggested_horizon(&self, k: usize) -> usize {
        let (n0, _) = self.first_palindrome_reaching(k);
        let n1 = n0.max(self.directive.preperiod.len() + 1) + self.directive.period.len() - 1;
        let lengths = self.palindromic_lengths(n1 + 1);
        lengths[n1].max(2 * k).max(1)
    }
}

impl fmt::Debug for StandardWordGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Standard({:?})", self.directive)
    }
}

/// Strictness analysis of a directive word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictnessReport {
    pub alph: LetterSet,
    pub ult: LetterSet,
    /// `B` when `Alph(Δ) = Ult(Δ) = B`.
    pub strict_over: Option<LetterSet>,
    /// Least `m` with `Alph(x_{m+1}x_{m+2}⋯) = Ult(Δ)`.
    pub m: usize,
    /// Strict over the whole alphabet.
    pub alphabet_strict: bool,
}

pub fn strictness(directive: &DirectiveWord, alphabet: &Alphabet) -> StrictnessReport {
    let alph = directive.alph();
    let ult = directive.ult();
    let strict_over = (alph == ult).then(|| ult.clone());
    let m = directive
        .preperiod
        .iter()
        .rposition(|l| !ult.contains(l))
        .map_or(0, |i| i + 1);
    let alphabet_strict = strict_over
        .as_ref()
        .is_some_and(|b| *b == alphabet.letter_set());
    StrictnessReport {
        alph,
        ult,
        strict_over,
        m,
        alphabet_strict,
    }
}

/// Splits a non-strict standard word as `s = μ_m(s⁽ᵐ⁾)` where `s⁽ᵐ⁾` is
/// strict over `Ult(Δ)`. Returns `(μ_m, Δ⁽ᵐ⁾)`.
pub fn decompose_nonstrict(
    directive: &DirectiveWord,
) -> Result<(PureEpistandardMorphism, DirectiveWord)> {
    if directive.is_strict() {
        return Err(Error::NothingToDecompose);
    }
    let ult = directive.ult();
    let m = directive
        .preperiod
        .iter()
        .rposition(|l| !ult.contains(l))
        .map_or(0, |i| i + 1);
    Ok((directive.mu(m), directive.shift(m)))
}

/// Witness that `s⁽ⁱ⁻¹⁾ = Ψ_{xᵢ}(s⁽ⁱ⁾)` on a prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftChainRecord {
    pub i: usize,
    pub letter: Letter,
    /// Prefix of `s⁽ⁱ⁻¹⁾`.
    pub previous: Word,
    /// Prefix of `s⁽ⁱ⁾`.
    pub shifted: Word,
    /// Prefix of `Ψ_{xᵢ}(s⁽ⁱ⁾)`.
    pub image: Word,
}

pub fn shift_chain(directive: &DirectiveWord, i: usize, horizon: usize) -> Result<ShiftChainRecord> {
    if i == 0 {
        return Err(Error::InvalidArgument("shift index must be at least 1".into()));
    }
    let letter = directive.letter(i);
    let previous = standard_word(&directive.shift(i - 1)).prefix(horizon);
    let shifted = standard_word(&directive.shift(i)).prefix(horizon);
    let image = PureEpistandardMorphism::psi(letter).apply_truncated(&shifted, horizon);
    if image != previous {
        return Err(Error::Internal(format!(
            "shift chain broken at i = {i}: Ψ image {image:?} vs {previous:?}"
        )));
    }
    Ok(ShiftChainRecord {
        i,
        letter,
        previous,
        shifted,
        image,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::is_separating;

    fn w(s: &str) -> Word {
        Word::from_latin(s).unwrap()
    }

    fn d(pre: &str, per: &str) -> DirectiveWord {
        DirectiveWord::new(w(pre), w(per)).unwrap()
    }

    fn set(s: &str) -> LetterSet {
        w(s).alph()
    }

    /// Shortest palindrome with prefix `w`, by trying every length in
    /// `|w|..=2|w|`.
    fn closure_by_search(x: &[Letter]) -> Word {
        let n = x.len();
        for len in n..=2 * n {
            let consistent = (0..n).all(|i| {
                let j = len - 1 - i;
                j >= n || x[i] == x[j]
            });
            if consistent {
                let mut out = Word::from(x);
                for i in n..len {
                    out.push(x[len - 1 - i]);
                }
                return out;
            }
        }
        unreachable!("w·reverse(w) is always a palindrome")
    }

    #[test]
    fn closure_examples() {
        assert_eq!(palindromic_closure(&w("")), w(""));
        assert_eq!(palindromic_closure(&w("ab")), w("aba"));
        assert_eq!(palindromic_closure(&w("abaa")), w("abaaba"));
        assert_eq!(closure_by_search(&w("ab")), w("aba"));
        assert_eq!(closure_by_search(&w("abaa")), w("abaaba"));
    }

    proptest::proptest! {
        #[test]
        fn closure_matches_search(letters in proptest::collection::vec(0u8..3, 0..30)) {
            let x: Word = letters.into_iter().map(Letter::new).collect();
            let c = palindromic_closure(&x);
            proptest::prop_assert!(c.is_palindrome());
            proptest::prop_assert!(c.starts_with(&x));
            proptest::prop_assert_eq!(c, closure_by_search(&x));
        }
    }

    #[test]
    fn directive_indexing_and_shifts() {
        let delta = d("ca", "b");
        assert_eq!(delta.prefix(5), w("cabbb"));
        assert_eq!(delta.shift(1), d("a", "b"));
        assert_eq!(delta.shift(2), d("", "b"));
        let fib = d("", "ab");
        assert_eq!(fib.shift(1), d("", "ba"));
        assert_eq!(fib.shift(4), fib);
        assert!(DirectiveWord::new(w("a"), w("")).is_err());
    }

    #[test]
    fn palindromic_prefixes_examples() {
        let expect = |pre: &str, per: &str, n: usize, words: &[&str]| {
            let got = palindromic_prefixes(&d(pre, per), n);
            let want: Vec<Word> = words.iter().map(|s| w(s)).collect();
            assert_eq!(got, want);
        };
        expect("", "ab", 5, &["", "a", "aba", "abaaba", "abaababaaba"]);
        expect("", "abc", 4, &["", "a", "aba", "abacaba"]);
        expect("", "a", 4, &["", "a", "aa", "aaa"]);
    }

    #[test]
    fn standard_word_prefixes() {
        assert_eq!(standard_word(&d("", "ab")).prefix(14), w("abaababaabaaba"));
        assert_eq!(standard_word(&d("c", "ab")).prefix(10), w("cacbcacacb"));
        assert_eq!(standard_word(&d("", "a")).prefix(5), w("aaaaa"));
        let via_morphism = PureEpistandardMorphism::psi(Letter::new(2))
            .apply_truncated(&standard_word(&d("", "ab")).prefix(10), 10);
        assert_eq!(via_morphism, w("cacbcacacb"));
    }

    #[test]
    fn generator_matches_iterated_closure() {
        for (pre, per) in [("", "ab"), ("ca", "b"), ("", "abc"), ("bb", "acab"), ("", "a")] {
            let delta = d(pre, per);
            let gen = StandardWordGenerator::new(delta.clone());
            for (n, u) in palindromic_prefixes(&delta, 14).iter().enumerate() {
                assert_eq!(&gen.palindromic_prefix(n + 1), u);
            }
        }
    }

    #[test]
    fn h_words() {
        let fib = d("", "ab");
        assert_eq!(h_word(&fib, 0), w("a"));
        assert_eq!(h_word(&fib, 1), w("ab"));
        assert_eq!(h_word(&fib, 2), w("aba"));
    }

    #[test]
    fn u_next_is_h_times_u() {
        for (pre, per) in [("", "ab"), ("ca", "b"), ("", "abc"), ("bb", "acab")] {
            let delta = d(pre, per);
            let us = palindromic_prefixes(&delta, 12);
            for n in 1..11 {
                assert_eq!(us[n], h_word(&delta, n - 1).concat(&us[n - 1]));
            }
        }
    }

    #[test]
    fn strictness_examples() {
        let r = strictness(&d("", "ab"), &Alphabet::latin(2));
        assert_eq!(r.strict_over, Some(set("ab")));
        assert_eq!(r.m, 0);
        assert!(r.alphabet_strict);

        let r = strictness(&d("c", "ab"), &Alphabet::latin(3));
        assert_eq!(r.strict_over, None);
        assert_eq!(r.ult, set("ab"));
        assert_eq!(r.alph, set("abc"));
        assert_eq!(r.m, 1);
        assert!(!r.alphabet_strict);

        let r = strictness(&d("", "abc"), &Alphabet::latin(3));
        assert_eq!(r.strict_over, Some(set("abc")));
        assert_eq!(r.m, 0);

        // Strict over a proper subset of the alphabet.
        let r = strictness(&d("", "ab"), &Alphabet::latin(3));
        assert_eq!(r.strict_over, Some(set("ab")));
        assert!(!r.alphabet_strict);
    }

    #[test]
    fn decompositions() {
        let (mu, rest) = decompose_nonstrict(&d("c", "ab")).unwrap();
        assert_eq!(mu, PureEpistandardMorphism::psi(Letter::new(2)));
        assert_eq!(rest, d("", "ab"));

        let (mu, rest) = decompose_nonstrict(&d("cab", "ab")).unwrap();
        assert_eq!(mu.generators(), &w("c")[..]);
        assert_eq!(rest, d("ab", "ab"));

        let (mu, rest) = decompose_nonstrict(&d("ca", "b")).unwrap();
        assert_eq!(mu.generators(), &w("ca")[..]);
        assert_eq!(rest, d("", "b"));

        assert_eq!(decompose_nonstrict(&d("", "ab")), Err(Error::NothingToDecompose));
        assert_eq!(decompose_nonstrict(&d("ab", "ba")), Err(Error::NothingToDecompose));
    }

    #[test]
    fn decomposition_reproduces_word() {
        for (pre, per) in [("c", "ab"), ("cab", "ab"), ("ca", "b"), ("aacb", "bc")] {
            let delta = d(pre, per);
            let (mu, rest) = decompose_nonstrict(&delta).unwrap();
            let direct = standard_word(&delta).prefix(3000);
            let composed = mu.apply_truncated(&standard_word(&rest).prefix(3000), 3000);
            assert_eq!(direct, composed, "{delta:?}");
        }
    }

    #[test]
    fn shift_chain_examples() {
        let r = shift_chain(&d("", "ab"), 1, 100).unwrap();
        assert_eq!(r.shifted, standard_word(&d("", "ba")).prefix(100));
        assert_eq!(r.shifted.prefix(5), w("babba"));

        let r = shift_chain(&d("c", "ab"), 1, 100).unwrap();
        assert_eq!(r.shifted, standard_word(&d("", "ab")).prefix(100));

        let r = shift_chain(&d("", "a"), 1, 10).unwrap();
        assert_eq!(r.shifted, w("aaaaaaaaaa"));
        assert!(shift_chain(&d("", "a"), 0, 10).is_err());
    }

    #[test]
    fn first_letter_separates() {
        for (pre, per) in [("", "ab"), ("c", "ab"), ("", "abc"), ("ba", "cab"), ("", "a")] {
            let delta = d(pre, per);
            let s = standard_word(&delta).prefix(2000);
            assert!(is_separating(delta.letter(1), &s), "{delta:?}");
        }
    }

    #[test]
    fn concurrent_readers_agree() {
        let gen = std::sync::Arc::new(StandardWordGenerator::new(d("", "abc")));
        let handles: Vec<_> = (0..4)
            .map(|i| {
                let gen = gen.clone();
                std::thread::spawn(move || gen.prefix(1000 + 500 * i))
            })
            .collect();
        let words: Vec<Word> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for x in &words {
            assert!(words[3].starts_with(x));
        }
    }
}
