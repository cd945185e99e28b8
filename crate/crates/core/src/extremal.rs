//! Lexicographically extremal factors `min(w|k)`, `max(w|k)` and the limit
//! words `min(w)`, `max(w)`.

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::order::LexOrder;
use crate::stream::WordStream;
use crate::word::Word;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Extreme {
    Min,
    Max,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Exactness {
    /// Every length-`k` factor of the word is known to occur in the scan.
    Exact,
    HorizonLimited,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtremalResult {
    pub word: Word,
    pub k: usize,
    pub order: LexOrder,
    pub horizon: usize,
    pub exactness: Exactness,
}

impl ExtremalResult {
    pub fn is_exact(&self) -> bool {
        self.exactness == Exactness::Exact
    }
}

/// What to scan: a finite word, or a stream cut at a horizon.
#[derive(Clone, Copy, Debug)]
pub enum Subject<'a> {
    Finite(&'a [Letter]),
    Stream(&'a WordStream),
}

impl<'a> From<&'a Word> for Subject<'a> {
    fn from(w: &'a Word) -> Self {
        Subject::Finite(w)
    }
}

impl<'a> From<&'a [Letter]> for Subject<'a> {
    fn from(w: &'a [Letter]) -> Self {
        Subject::Finite(w)
    }
}

impl<'a> From<&'a WordStream> for Subject<'a> {
    fn from(s: &'a WordStream) -> Self {
        Subject::Stream(s)
    }
}

pub fn min_factor<'a>(
    w: impl Into<Subject<'a>>,
    k: usize,
    order: &LexOrder,
    horizon: usize,
) -> Result<ExtremalResult> {
    extremal_factor(w.into(), k, order, horizon, Extreme::Min)
}

pub fn max_factor<'a>(
    w: impl Into<Subject<'a>>,
    k: usize,
    order: &LexOrder,
    horizon: usize,
) -> Result<ExtremalResult> {
    extremal_factor(w.into(), k, order, horizon, Extreme::Max)
}

/// For a finite word the horizon is ignored and the result is always exact.
///
/// For a stream the scan covers `prefix(horizon)`. The result is exact when
/// a scan of `prefix(2·horizon)` gives the same factor and the horizon
/// reaches the stream's exactness floor, if it has one.
pub fn extremal_factor(
    subject: Subject<'_>,
    k: usize,
    order: &LexOrder,
    horizon: usize,
    extreme: Extreme,
) -> Result<ExtremalResult> {
    match subject {
        Subject::Finite(w) => {
            if k > w.len() {
                return Err(Error::Length { k, len: w.len() });
            }
            let word = scan(w, k, order, extreme)?;
            Ok(ExtremalResult {
                word,
                k,
                order: order.clone(),
                horizon: w.len(),
                exactness: Exactness::Exact,
            })
        }
        Subject::Stream(s) => {
            if horizon < k {
                return Err(Error::Length { k, len: horizon });
            }
            let long = s.prefix(2 * horizon);
            let word = scan(&long[..horizon], k, order, extreme)?;
            let stable = scan(&long, k, order, extreme)? == word;
            let floor_ok = s.exactness_floor(k).is_none_or(|f| horizon >= f);
            Ok(ExtremalResult {
                word,
                k,
                order: order.clone(),
                horizon,
                exactness: if stable && floor_ok {
                    Exactness::Exact
                } else {
                    Exactness::HorizonLimited
                },
            })
        }
    }
}

/// Ranks with `Max` turned into `Min`; all windows have the same length so
/// reversing letter ranks reverses the order on them.
fn effective_ranks(w: &[Letter], order: &LexOrder, extreme: Extreme) -> Result<Vec<u8>> {
    let mut ranks = order.ranks(w)?;
    if extreme == Extreme::Max {
        let top = (order.len() - 1) as u8;
        for r in &mut ranks {
            *r = top - *r;
        }
    }
    Ok(ranks)
}

fn scan(w: &[Letter], k: usize, order: &LexOrder, extreme: Extreme) -> Result<Word> {
    let ranks = effective_ranks(w, order, extreme)?;
    let start = least_window(&ranks, k, (0..=w.len() - k).collect());
    Ok(Word::from(&w[start..start + k]))
}

/// Start of the least length-`k` window among `candidates`, refining the
/// candidate set one column at a time.
fn least_window(ranks: &[u8], k: usize, mut candidates: Vec<usize>) -> usize {
    for j in 0..k {
        refine(ranks, j, &mut candidates);
        if candidates.len() == 1 {
            break;
        }
    }
    candidates[0]
}

fn refine(ranks: &[u8], column: usize, candidates: &mut Vec<usize>) {
    let best = candidates.iter().map(|&c| ranks[c + column]).min().expect("non-empty");
    candidates.retain(|&c| ranks[c + column] == best);
}

/// `[ext(w|1), …, ext(w|kmax)]` for a finite word.
pub fn extremal_chain(w: &[Letter], kmax: usize, order: &LexOrder, extreme: Extreme) -> Result<Vec<Word>> {
    if kmax > w.len() {
        return Err(Error::Length { k: kmax, len: w.len() });
    }
    let ranks = effective_ranks(w, order, extreme)?;
    let n = ranks.len();
    let mut out = Vec::with_capacity(kmax);
    // Windows equal to the previous extremal word.
    let mut candidates: Vec<usize> = (0..n).collect();
    for k in 1..=kmax {
        candidates.retain(|&c| c + k <= n);
        if candidates.is_empty() {
            let start = least_window(&ranks, k, (0..=n - k).collect());
            candidates = (0..=n - k)
                .filter(|&c| ranks[c..c + k] == ranks[start..start + k])
                .collect();
        } else {
            refine(&ranks, k - 1, &mut candidates);
        }
        let c = candidates[0];
        out.push(Word::from(&w[c..c + k]));
    }
    Ok(out)
}

/// The longest prefix of the limit word `ext(w)` that the scan can vouch
/// for: the chain `ext(w|1), ext(w|2), …` is computed on `prefix(horizon)`
/// and on `prefix(2·horizon)` up to `horizon / 2`, and the result is the
/// last chain element before the two disagree or the chain stops being
/// prefix-closed.
pub fn limit_word(w: &WordStream, order: &LexOrder, horizon: usize, extreme: Extreme) -> Result<Word> {
    let long = w.prefix(2 * horizon);
    let kmax = (horizon / 2).min(long.len() / 2);
    if kmax == 0 {
        return Ok(Word::empty());
    }
    let short = extremal_chain(&long[..horizon.min(long.len())], kmax, order, extreme)?;
    let check = extremal_chain(&long, kmax, order, extreme)?;
    let mut best = Word::empty();
    for (a, b) in short.iter().zip(&check) {
        if a != b || !a.starts_with(&best) {
            break;
        }
        best = a.clone();
    }
    Ok(best)
}

pub fn min_stream(w: &WordStream, order: &LexOrder, horizon: usize) -> Result<Word> {
    limit_word(w, order, horizon, Extreme::Min)
}

pub fn max_stream(w: &WordStream, order: &LexOrder, horizon: usize) -> Result<Word> {
    limit_word(w, order, horizon, Extreme::Max)
}

/// Brute force: sort every length-`k` window by its rank vector and take
/// the first.
pub fn oracle_min(w: &[Letter], k: usize, order: &LexOrder) -> Result<Word> {
    oracle(w, k, order, false)
}

pub fn oracle_max(w: &[Letter], k: usize, order: &LexOrder) -> Result<Word> {
    oracle(w, k, order, true)
}

fn oracle(w: &[Letter], k: usize, order: &LexOrder, greatest: bool) -> Result<Word> {
    if k > w.len() {
        return Err(Error::Length { k, len: w.len() });
    }
    if k == 0 {
        return Ok(Word::empty());
    }
    let mut windows: Vec<(Vec<u8>, &[Letter])> = w
        .windows(k)
        .map(|win| order.ranks(win).map(|r| (r, win)))
        .collect::<Result<_>>()?;
    windows.sort();
    let pick = if greatest { windows.last() } else { windows.first() };
    Ok(Word::from(pick.expect("at least one window").1))
}
