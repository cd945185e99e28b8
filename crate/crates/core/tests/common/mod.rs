#![allow(dead_code)]

use etk::{DirectiveWord, Letter, LetterSet, PureEpistandardMorphism, SkewSpec, Word, WordStream};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn w(s: &str) -> Word {
    Word::from_latin(s).unwrap()
}

pub fn l(c: char) -> Letter {
    Letter::new(c as u8 - b'a')
}

pub fn d(pre: &str, per: &str) -> DirectiveWord {
    DirectiveWord::new(w(pre), w(per)).unwrap()
}

pub fn psi(gens: &str) -> PureEpistandardMorphism {
    PureEpistandardMorphism::from_generators(w(gens).into_letters())
}

pub fn fib() -> WordStream {
    etk::standard_word(&d("", "ab"))
}

fn random_letters<R: Rng>(rng: &mut R, from: &[Letter], len: usize) -> Word {
    (0..len).map(|_| *from.choose(rng).unwrap()).collect()
}

/// Eventually periodic directive over at most `max_letters` letters.
pub fn random_directive<R: Rng>(rng: &mut R, max_letters: u8, max_pre: usize, max_per: usize) -> DirectiveWord {
    let m = rng.gen_range(1..=max_letters);
    let letters: Vec<Letter> = (0..m).map(Letter::new).collect();
    let pre = rng.gen_range(0..=max_pre);
    let per = rng.gen_range(1..=max_per);
    DirectiveWord::new(random_letters(rng, &letters, pre), random_letters(rng, &letters, per)).unwrap()
}

/// Directive strict over exactly `b`.
pub fn random_strict_directive<R: Rng>(rng: &mut R, b: &[Letter], max_pre: usize, max_extra: usize) -> DirectiveWord {
    let mut period: Vec<Letter> = b.to_vec();
    period.shuffle(rng);
    for _ in 0..rng.gen_range(0..=max_extra) {
        let at = rng.gen_range(0..=period.len());
        period.insert(at, *b.choose(rng).unwrap());
    }
    let pre = rng.gen_range(0..=max_pre);
    DirectiveWord::new(random_letters(rng, b, pre), Word::new(period)).unwrap()
}

/// A canonical skew spec: `B` of 1 to 3 letters, `μ` of length 0 to 3 ending
/// in `x`, `p` in 0..=6 and a random non-empty suffix.
pub fn random_skew_spec<R: Rng>(rng: &mut R) -> SkewSpec {
    let nb = rng.gen_range(1..=3u8);
    let mut all: Vec<Letter> = (0..=nb).map(Letter::new).collect();
    all.shuffle(rng);
    let x = all[0];
    let b: Vec<Letter> = all[1..].to_vec();
    let directive = random_strict_directive(rng, &b, 2, 3);
    let mu_len = rng.gen_range(0..=3usize);
    let mut gens = Vec::new();
    if mu_len > 0 {
        gens = random_letters(rng, &all, mu_len - 1).into_letters();
        gens.push(x);
    }
    let mu = PureEpistandardMorphism::from_generators(gens);
    let p = rng.gen_range(0..=6);
    let full = SkewSpec::with_full_suffix(directive.clone(), x, p, mu.clone()).unwrap();
    let suffix = rng.gen_range(1..=full.suffix_len());
    SkewSpec::new(directive, x, p, mu, suffix).unwrap().canonical()
}

pub fn letter_set(s: &str) -> LetterSet {
    w(s).alph()
}

/// The six example words with their constructions.
pub struct Golden {
    pub name: &'static str,
    pub expected: &'static str,
    pub stream: WordStream,
    pub structured: etk::StructuredWord,
}

pub fn golden() -> Vec<Golden> {
    use etk::StructuredWord::{Directive, Skew};
    let c = l('c');
    let cf = SkewSpec::new(d("", "ab"), c, 0, psi(""), 1).unwrap();
    let f4cf = SkewSpec::with_full_suffix(d("", "ab"), c, 4, psi("")).unwrap();
    let psi_c_cf = SkewSpec::with_full_suffix(d("", "ab"), c, 0, psi("c")).unwrap();
    let psi_c_f4cf = SkewSpec::with_full_suffix(d("", "ab"), c, 4, psi("c")).unwrap();
    vec![
        Golden {
            name: "f",
            expected: "abaababaabaaba",
            stream: fib(),
            structured: Directive(d("", "ab")),
        },
        Golden {
            name: "c·f",
            expected: "cabaababaabaaba",
            stream: etk::construct_skew(&cf),
            structured: Skew(cf),
        },
        Golden {
            name: "rev(f_4)·c·f",
            expected: "aabacabaababaabaaba",
            stream: etk::construct_skew(&f4cf),
            structured: Skew(f4cf),
        },
        Golden {
            name: "Ψ_a(f)",
            expected: "aabaaabaabaaabaaaba",
            stream: psi("a").apply_stream(&fib()),
            structured: Directive(d("a", "ab")),
        },
        Golden {
            name: "Ψ_c(c·f)",
            expected: "ccacbcacacbcacbcacacbcacacbca",
            stream: psi("c").apply_stream(&WordStream::concatenation(w("c"), fib())),
            structured: Skew(psi_c_cf),
        },
        Golden {
            name: "Ψ_c(rev(f_4)·c·f)",
            expected: "cacacbcaccacbcacacbcacbcacacbcaca",
            stream: psi("c").apply_stream(&WordStream::concatenation(w("aabac"), fib())),
            structured: Skew(psi_c_f4cf),
        },
    ]
}
