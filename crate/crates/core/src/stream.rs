//! Infinite words as deterministic prefix generators.
//!
//! Properties of infinite words are evaluated on a finite prefix whose length
//! (the horizon) is always passed explicitly.

use std::fmt;
use std::sync::Arc;

use crate::alphabet::LetterSet;
use crate::episturmian::{DirectiveWord, StandardWordGenerator};
use crate::error::{Error, Result};
use crate::morphism::PureEpistandardMorphism;
use crate::word::{count_factors, factors, Word};

/// An infinite word. Cheap to clone; clones share memoised state.
#[derive(Clone)]
pub struct WordStream(Arc<StreamKind>);

pub enum StreamKind {
    /// `u · v^ω` with `v ≠ ε`.
    LiteralThenPeriodic { prefix: Word, period: Word },
    /// The standard episturmian word of a directive word.
    Episturmian(StandardWordGenerator),
    MorphicImage {
        morphism: PureEpistandardMorphism,
        inner: WordStream,
    },
    /// `head · inner`.
    Concatenation { head: Word, inner: WordStream },
}

impl WordStream {
    pub fn literal(prefix: Word, period: Word) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidArgument("periodic part must be non-empty".into()));
        }
        Ok(WordStream(Arc::new(StreamKind::LiteralThenPeriodic { prefix, period })))
    }

    pub fn standard(directive: DirectiveWord) -> Self {
        WordStream(Arc::new(StreamKind::Episturmian(StandardWordGenerator::new(directive))))
    }

    pub fn morphic_image(morphism: PureEpistandardMorphism, inner: WordStream) -> Self {
        if morphism.is_identity() {
            return inner;
        }
        WordStream(Arc::new(StreamKind::MorphicImage { morphism, inner }))
    }

    pub fn concatenation(head: Word, inner: WordStream) -> Self {
        if head.is_empty() {
            return inner;
        }
        WordStream(Arc::new(StreamKind::Concatenation { head, inner }))
    }

    pub fn kind(&self) -> &StreamKind {
        &self.0
    }

    pub fn as_standard(&self) -> Option<&StandardWordGenerator> {
        match &*self.0 {
            StreamKind::Episturmian(g) => Some(g),
            _ => None,
        }
    }

    /// The first `n` letters.
    pub fn prefix(&self, n: usize) -> Word {
        match &*self.0 {
            StreamKind::LiteralThenPeriodic { prefix, period } => {
                let mut out = prefix.prefix(n);
                while out.len() < n {
                    let take = (n - out.len()).min(period.len());
                    out.extend_from_slice(&period[..take]);
                }
                out
            }
            StreamKind::Episturmian(g) => g.prefix(n),
            StreamKind::MorphicImage { morphism, inner } => {
                // Non-erasing, so n letters of the preimage suffice.
                morphism.apply_truncated(&inner.prefix(n), n)
            }
            StreamKind::Concatenation { head, inner } => {
                let mut out = head.prefix(n);
                if out.len() < n {
                    out.extend_from_slice(&inner.prefix(n - out.len()));
                }
                out
            }
        }
    }

    /// Letters occurring in the first `horizon` letters.
    pub fn letters_upto(&self, horizon: usize) -> LetterSet {
        self.prefix(horizon).alph()
    }

    /// A horizon at which the length-`k` factors are expected to have
    /// occurred. Exact for literal streams; for episturmian streams it
    /// guarantees the occurrence of `a·s_{k−1}` for every recurrent directive
    /// letter `a` and is otherwise a recurrence proxy.
    pub fn suggested_horizon(&self, k: usize) -> usize {
        match &*self.0 {
            StreamKind::LiteralThenPeriodic { prefix, period } => {
                prefix.len() + period.len() * (k / period.len() + 2)
            }
            StreamKind::Episturmian(g) => g.suggested_horizon(k),
            StreamKind::MorphicImage { morphism, inner } => {
                let h = inner.suggested_horizon(k);
                let letters = inner.letters_upto(h).union(&morphism.letters()).copied().collect();
                h * morphism.max_image_len(&letters)
            }
            StreamKind::Concatenation { head, inner } => {
                head.len() + inner.suggested_horizon(k).max(k)
            }
        }
    }

    /// Lower bound on the horizon needed before a length-`k` scan may be
    /// called exact, when the stream kind provides one.
    pub fn exactness_floor(&self, k: usize) -> Option<usize> {
        self.as_standard().map(|g| g.exactness_floor(k))
    }
}

impl fmt::Debug for WordStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            StreamKind::LiteralThenPeriodic { prefix, period } => {
                write!(f, "{prefix:?}({period:?})")
            }
            StreamKind::Episturmian(g) => write!(f, "{g:?}"),
            StreamKind::MorphicImage { morphism, inner } => {
                write!(f, "Ψ{:?}[{inner:?}]", Word::from(morphism.generators()))
            }
            StreamKind::Concatenation { head, inner } => write!(f, "{head:?}·{inner:?}"),
        }
    }
}

/// `|F_n(prefix(horizon))|`: a lower bound on the factor complexity, exact
/// once every length-`n` factor has occurred within the horizon.
pub fn complexity(stream: &WordStream, n: usize, horizon: usize) -> Result<usize> {
    if horizon < n {
        return Err(Error::InvalidArgument(format!("horizon {horizon} < length {n}")));
    }
    Ok(count_factors(&stream.prefix(horizon), n))
}

/// Whether `F_j` agrees on both prefixes for every `j ≤ depth`.
pub fn factor_sets_equal(x: &WordStream, y: &WordStream, depth: usize, horizon: usize) -> Result<bool> {
    if horizon < depth {
        return Err(Error::InvalidArgument(format!("horizon {horizon} < depth {depth}")));
    }
    let px = x.prefix(horizon);
    let py = y.prefix(horizon);
    Ok((0..=depth).all(|j| factors(&px, j) == factors(&py, j)))
}
