//! Pure epistandard morphisms: compositions of the generators `Ψ_a`, where
//! `Ψ_a(a) = a` and `Ψ_a(x) = ax` for every other letter `x`.
//!
//! Each generator is an automorphism of the free group, with
//! `Ψ_a⁻¹(a) = a` and `Ψ_a⁻¹(x) = a⁻¹x`.

use std::collections::BTreeMap;

use crate::alphabet::{Letter, LetterSet};
use crate::error::{Error, Result};
use crate::free_group::{GroupWord, Syllable};
use crate::stream::WordStream;
use crate::word::Word;

/// `Ψ_{z₁} ∘ Ψ_{z₂} ∘ ⋯ ∘ Ψ_{zₙ}`, stored as the generator letters
/// `z₁ z₂ ⋯ zₙ`. The empty sequence is the identity.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct PureEpistandardMorphism {
    generators: Vec<Letter>,
}

impl PureEpistandardMorphism {
    pub const fn identity() -> Self {
        PureEpistandardMorphism { generators: Vec::new() }
    }

    pub fn psi(a: Letter) -> Self {
        PureEpistandardMorphism { generators: vec![a] }
    }

    pub fn from_generators(generators: Vec<Letter>) -> Self {
        PureEpistandardMorphism { generators }
    }

    pub fn generators(&self) -> &[Letter] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_identity(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PureEpistandardMorphism) -> PureEpistandardMorphism {
        let mut generators = self.generators.clone();
        generators.extend_from_slice(&other.generators);
        PureEpistandardMorphism { generators }
    }

    /// `self ∘ Ψ_a`.
    pub fn then_psi(&self, a: Letter) -> PureEpistandardMorphism {
        let mut generators = self.generators.clone();
        generators.push(a);
        PureEpistandardMorphism { generators }
    }

    pub fn apply(&self, w: &[Letter]) -> Word {
        let mut cur = w.to_vec();
        for &z in self.generators.iter().rev() {
            cur = psi_apply(z, &cur, usize::MAX);
        }
        Word::new(cur)
    }

    /// The first `limit` letters of `self(w)`.
    ///
    /// Every generator maps letters to non-empty words starting at block
    /// boundaries, so truncating between stages does not change the result.
    pub fn apply_truncated(&self, w: &[Letter], limit: usize) -> Word {
        let mut cur: Vec<Letter> = w[..w.len().min(limit)].to_vec();
        for &z in self.generators.iter().rev() {
            cur = psi_apply(z, &cur, limit);
        }
        Word::new(cur)
    }

    pub fn image_of(&self, letter: Letter) -> Word {
        self.apply(&[letter])
    }

    /// Longest image among `letters`.
    pub fn max_image_len(&self, letters: &LetterSet) -> usize {
        letters
            .iter()
            .map(|&l| self.image_of(l).len())
            .max()
            .unwrap_or(1)
    }

    pub fn apply_stream(&self, stream: &WordStream) -> WordStream {
        WordStream::morphic_image(self.clone(), stream.clone())
    }

    /// Extension to the free group: `ψ(a⁻¹) = ψ(a)⁻¹`.
    pub fn apply_group(&self, g: &GroupWord) -> GroupWord {
        let mut cur = g.clone();
        for &z in self.generators.iter().rev() {
            cur = psi_apply_group(z, &cur);
        }
        cur
    }

    /// `self⁻¹(g)`, i.e. `Ψ_{zₙ}⁻¹ ∘ ⋯ ∘ Ψ_{z₁}⁻¹` applied to `g`.
    pub fn apply_inverse(&self, g: &GroupWord) -> GroupWord {
        let mut cur = g.clone();
        for &z in &self.generators {
            cur = apply_inverse(z, &cur);
        }
        cur
    }

    /// Generator letters used by the morphism.
    pub fn letters(&self) -> LetterSet {
        self.generators.iter().copied().collect()
    }
}

fn psi_apply(z: Letter, w: &[Letter], limit: usize) -> Vec<Letter> {
    let mut out = Vec::with_capacity((2 * w.len()).min(limit));
    for &c in w {
        if out.len() >= limit {
            break;
        }
        out.push(z);
        if c != z {
            out.push(c);
        }
    }
    out.truncate(limit);
    out
}

fn psi_apply_group(z: Letter, g: &GroupWord) -> GroupWord {
    GroupWord::reduce(g.syllables().iter().flat_map(|s| {
        let img: &[Syllable] = match (s.letter == z, s.inverse) {
            (true, false) => &[Syllable::pos(z)],
            (true, true) => &[Syllable::neg(z)],
            (false, false) => &[Syllable::pos(z), Syllable::pos(s.letter)],
            (false, true) => &[Syllable::neg(s.letter), Syllable::neg(z)],
        };
        img.to_vec()
    }))
}

/// `Ψ_a⁻¹(g)`, reduced. Words outside the image of `Ψ_a` come back with
/// negative exponents rather than as an error.
pub fn apply_inverse(a: Letter, g: &GroupWord) -> GroupWord {
    GroupWord::reduce(g.syllables().iter().flat_map(|s| {
        let img: &[Syllable] = match (s.letter == a, s.inverse) {
            (true, false) => &[Syllable::pos(a)],
            (true, true) => &[Syllable::neg(a)],
            (false, false) => &[Syllable::neg(a), Syllable::pos(s.letter)],
            (false, true) => &[Syllable::neg(s.letter), Syllable::pos(a)],
        };
        img.to_vec()
    }))
}

/// `Ψ_a⁻¹(w)` as a monoid word, if `w` lies in the image of `Ψ_a`.
pub fn psi_preimage(a: Letter, w: &[Letter]) -> Option<Word> {
    apply_inverse(a, &GroupWord::from_word(w)).to_word()
}

/// True when every length-2 factor of `w` contains `a`.
pub fn is_separating(a: Letter, w: &[Letter]) -> bool {
    w.windows(2).all(|p| p[0] == a || p[1] == a)
}

/// A bijection of the alphabet, used as a letter-to-letter morphism.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    image: BTreeMap<Letter, Letter>,
}

impl Permutation {
    /// Letters missing from `pairs` are fixed.
    pub fn new(pairs: impl IntoIterator<Item = (Letter, Letter)>) -> Result<Self> {
        let image: BTreeMap<Letter, Letter> = pairs.into_iter().collect();
        let targets: LetterSet = image.values().copied().collect();
        let sources: LetterSet = image.keys().copied().collect();
        if targets != sources {
            return Err(Error::InvalidArgument("not a permutation of its letters".into()));
        }
        Ok(Permutation { image })
    }

    pub fn image_of(&self, l: Letter) -> Letter {
        self.image.get(&l).copied().unwrap_or(l)
    }

    pub fn apply(&self, w: &[Letter]) -> Word {
        w.iter().map(|&l| self.image_of(l)).collect()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum EpistandardStep {
    Psi(Letter),
    Permute(Permutation),
}

/// A general epistandard morphism: any composition of generators `Ψ_a` and
/// alphabet permutations, applied right to left like function composition.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct EpistandardMorphism {
    steps: Vec<EpistandardStep>,
}

impl EpistandardMorphism {
    pub fn new(steps: Vec<EpistandardStep>) -> Self {
        EpistandardMorphism { steps }
    }

    pub fn steps(&self) -> &[EpistandardStep] {
        &self.steps
    }

    pub fn compose(&self, other: &EpistandardMorphism) -> EpistandardMorphism {
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        EpistandardMorphism { steps }
    }

    pub fn apply(&self, w: &[Letter]) -> Word {
        let mut cur = w.to_vec();
        for step in self.steps.iter().rev() {
            cur = match step {
                EpistandardStep::Psi(z) => psi_apply(*z, &cur, usize::MAX),
                EpistandardStep::Permute(p) => p.apply(&cur).into_letters(),
            };
        }
        Word::new(cur)
    }

    /// The pure part, when no permutation occurs.
    pub fn as_pure(&self) -> Option<PureEpistandardMorphism> {
        self.steps
            .iter()
            .map(|s| match s {
                EpistandardStep::Psi(z) => Some(*z),
                EpistandardStep::Permute(_) => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(PureEpistandardMorphism::from_generators)
    }
}

impl From<PureEpistandardMorphism> for EpistandardMorphism {
    fn from(m: PureEpistandardMorphism) -> Self {
        EpistandardMorphism {
            steps: m.generators.into_iter().map(EpistandardStep::Psi).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    const A: Letter = Letter::new(0);
    const B: Letter = Letter::new(1);
    const C: Letter = Letter::new(2);

    fn w(s: &str) -> Word {
        Word::from_latin(s).unwrap()
    }

    fn all_words(k: u8, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            layer = layer
                .iter()
                .flat_map(|u| (0..k).map(move |i| u.concat(&[Letter::new(i)])))
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }

    #[test]
    fn generator_images() {
        let psi_a = PureEpistandardMorphism::psi(A);
        assert_eq!(psi_a.apply(&w("b")), w("ab"));
        assert_eq!(psi_a.apply(&w("a")), w("a"));
        assert_eq!(PureEpistandardMorphism::psi(C).apply(&w("ab")), w("cacb"));
    }

    #[test]
    fn composition_applies_right_to_left() {
        let ab = PureEpistandardMorphism::psi(A).compose(&PureEpistandardMorphism::psi(B));
        assert_eq!(ab.apply(&w("c")), w("abac"));
        assert_eq!(ab.apply(&w("a")), w("aba"));
        let id = PureEpistandardMorphism::identity();
        assert_eq!(id.compose(&ab), ab);
        assert_eq!(id.apply(&w("cab")), w("cab"));
    }

    #[test]
    fn truncated_application_is_a_prefix() {
        let m = PureEpistandardMorphism::from_generators(vec![A, C, B]);
        let x = w("abcabccba");
        let full = m.apply(&x);
        for limit in 0..full.len() + 3 {
            assert_eq!(m.apply_truncated(&x, limit), full.prefix(limit));
        }
    }

    #[test]
    fn inverse_of_outside_image_is_not_positive() {
        let g = apply_inverse(A, &GroupWord::from_word(&w("b")));
        assert_eq!(g.syllables(), &[Syllable::neg(A), Syllable::pos(B)]);
        let back = PureEpistandardMorphism::psi(A).apply_group(&g);
        assert_eq!(back.to_word().unwrap(), w("b"));
    }

    #[test]
    fn inverse_undoes_generator() {
        let img = PureEpistandardMorphism::psi(A).apply(&w("bacab"));
        assert_eq!(psi_preimage(A, &img).unwrap(), w("bacab"));
    }

    #[test]
    fn inverse_law_for_all_short_words() {
        for x in all_words(3, 6) {
            for z in [A, B, C] {
                let img = PureEpistandardMorphism::psi(z).apply(&x);
                let back = apply_inverse(z, &GroupWord::from_word(&img));
                assert_eq!(back.to_word().as_ref(), Some(&x), "z={z:?} x={x:?}");
            }
        }
    }

    #[test]
    fn composite_inverse_is_reversed_generators() {
        let m = PureEpistandardMorphism::from_generators(vec![A, B, C, A]);
        for x in all_words(3, 4) {
            let g = GroupWord::from_word(&x);
            assert_eq!(m.apply_inverse(&m.apply_group(&g)), g);
            assert_eq!(m.apply_group(&m.apply_inverse(&g)), g);
            assert_eq!(m.apply_group(&g).to_word().unwrap(), m.apply(&x));
        }
    }

    #[test]
    fn group_automorphism_on_mixed_words() {
        let g = GroupWord::reduce([Syllable::pos(A), Syllable::neg(B), Syllable::pos(C), Syllable::neg(A)]);
        for z in [A, B, C] {
            let psi = PureEpistandardMorphism::psi(z);
            assert_eq!(apply_inverse(z, &psi.apply_group(&g)), g);
            assert_eq!(psi.apply_group(&apply_inverse(z, &g)), g);
        }
    }

    /// Instance of the cancellation `Ψ_z⁻¹(z·a·s·z⁻¹·x) = a·s'·z⁻¹·z⁻¹·x`
    /// with `s = Ψ_z(s')` ending in `zz`.
    #[test]
    fn cancellation_through_prefix_with_negative_tail() {
        // z = c, a = a, x = b, s' = "bcc" so s = Ψ_c(bcc) = "cbcc".
        let s1 = w("bcc");
        let s = PureEpistandardMorphism::psi(C).apply(&s1);
        assert_eq!(s, w("cbcc"));
        // zw with w = a·s·z⁻¹·x
        let mut raw = vec![Syllable::pos(C), Syllable::pos(A)];
        raw.extend(s.iter().map(|&l| Syllable::pos(l)));
        raw.push(Syllable::neg(C));
        raw.push(Syllable::pos(B));
        let zw = GroupWord::reduce(raw);
        assert!(zw.is_positive());
        let pre = apply_inverse(C, &zw);
        // a · s'_{m-3} · x where s'_{m-1} = s1 has length 3, so s'_{m-3} = "b".
        assert_eq!(pre.to_word().unwrap(), w("abb"));
    }

    #[test]
    fn separating_letters() {
        assert!(!is_separating(B, &w("abaab")));
        assert!(is_separating(A, &w("abaab")));
        assert!(is_separating(C, &w("ccacbcacacbcacbcacacbcacacbca")));
        assert!(is_separating(B, &w("a")));
        assert!(is_separating(B, &w("")));
    }

    #[test]
    fn image_characterisation_matches_preimage_search() {
        for k in [2u8, 3] {
            let letters: Vec<Letter> = (0..k).map(Letter::new).collect();
            for &z in &letters {
                let psi = PureEpistandardMorphism::psi(z);
                let images: HashSet<Word> = all_words(k, 8).iter().map(|y| psi.apply(y)).collect();
                for x in all_words(k, 8) {
                    if !(x.is_empty() || x.last() == Some(&z)) {
                        continue;
                    }
                    let predicted = x.is_empty() || (x[0] == z && is_separating(z, &x));
                    assert_eq!(images.contains(&x), predicted, "z={z:?} x={x:?}");
                }
            }
        }
    }

    #[test]
    fn non_erasing_lengths() {
        for x in all_words(3, 4) {
            for m in [
                PureEpistandardMorphism::identity(),
                PureEpistandardMorphism::psi(A),
                PureEpistandardMorphism::from_generators(vec![B, C]),
            ] {
                let img = m.apply(&x);
                assert!(img.len() >= x.len());
                let fixed = x.iter().all(|&l| m.generators().iter().all(|&g| g == l));
                assert_eq!(img.len() == x.len(), m.is_identity() || x.is_empty() || fixed);
                if !m.is_identity() && !x.is_empty() {
                    assert_eq!(img[0], m.generators()[0]);
                }
            }
        }
    }

    #[test]
    fn permutations_compose_with_generators() {
        let swap = Permutation::new([(A, B), (B, A)]).unwrap();
        let m = EpistandardMorphism::new(vec![
            EpistandardStep::Permute(swap),
            EpistandardStep::Psi(A),
        ]);
        // swap(Ψ_a(ab)) = swap(aab) = bba
        assert_eq!(m.apply(&w("ab")), w("bba"));
        assert!(m.as_pure().is_none());
        let pure: EpistandardMorphism = PureEpistandardMorphism::psi(C).into();
        assert_eq!(pure.as_pure().unwrap(), PureEpistandardMorphism::psi(C));
        assert!(Permutation::new([(A, B)]).is_err());
    }
}
