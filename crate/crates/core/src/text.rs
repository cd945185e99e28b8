//! Text formats for words, directives, orders, morphisms, group words and
//! skew specs. Every parser reports errors at byte offsets into its input,
//! and every formatter's output parses back to the same value.
//!
//! | value | example |
//! |---|---|
//! | word | `abaab`, or `x1,x2,x1` over multi-character symbols; `ε` is empty |
//! | eventually periodic word / directive | `c(ab)` for `c(ab)^ω` |
//! | order | `c<a<b` |
//! | morphism | `Ψ:abc`, `psi(a)*psi(b)*psi(c)`, `Id` |
//! | group word | `a b' a c` |
//! | skew spec | `skew v=(ab) x=c p=4 mu=Ψ:c suffix=full` |

use crate::alphabet::{Alphabet, Letter, LetterSet};
use crate::episturmian::DirectiveWord;
use crate::error::{Error, Result};
use crate::fine::SkewSpec;
use crate::free_group::{GroupWord, Syllable};
use crate::morphism::PureEpistandardMorphism;
use crate::order::LexOrder;
use crate::word::Word;

const EMPTY: &str = "ε";

fn letter_at(alphabet: &Alphabet, symbol: &str, position: usize) -> Result<Letter> {
    alphabet
        .letter(symbol)
        .map_err(|_| Error::parse(position, format!("unknown symbol `{symbol}`")))
}

/// Parses `text`, which starts at byte `offset` of the caller's input.
fn word_at(alphabet: &Alphabet, text: &str, offset: usize) -> Result<Word> {
    if text.is_empty() || text == EMPTY {
        return Ok(Word::empty());
    }
    if alphabet.is_single_char() {
        text.char_indices()
            .map(|(i, c)| letter_at(alphabet, &text[i..i + c.len_utf8()], offset + i))
            .collect()
    } else {
        let mut out = Word::empty();
        let mut start = 0;
        for piece in text.split(',') {
            let lead = piece.len() - piece.trim_start().len();
            out.push(letter_at(alphabet, piece.trim(), offset + start + lead)?);
            start += piece.len() + 1;
        }
        Ok(out)
    }
}

pub fn parse_word(alphabet: &Alphabet, text: &str) -> Result<Word> {
    word_at(alphabet, text, 0)
}

pub fn format_word(alphabet: &Alphabet, w: &[Letter]) -> Result<String> {
    if w.is_empty() {
        return Ok(EMPTY.to_string());
    }
    let symbols = w.iter().map(|&l| alphabet.symbol(l)).collect::<Result<Vec<_>>>()?;
    let sep = if alphabet.is_single_char() { "" } else { "," };
    Ok(symbols.join(sep))
}

/// Parses `u(v)` into `(u, v)`.
pub fn parse_eventually_periodic(alphabet: &Alphabet, text: &str) -> Result<(Word, Word)> {
    let open = text
        .find('(')
        .ok_or_else(|| Error::parse(text.len(), "expected `(` starting the periodic part"))?;
    let close = text[open..]
        .find(')')
        .map(|i| open + i)
        .ok_or_else(|| Error::parse(text.len(), "expected `)` closing the periodic part"))?;
    if let Some(i) = text[open + 1..close].find('(') {
        return Err(Error::parse(open + 1 + i, "nested `(`"));
    }
    if close + 1 != text.len() {
        return Err(Error::parse(close + 1, "unexpected text after `)`"));
    }
    let prefix = word_at(alphabet, &text[..open], 0)?;
    let period = word_at(alphabet, &text[open + 1..close], open + 1)?;
    if period.is_empty() {
        return Err(Error::parse(close, "periodic part must be non-empty"));
    }
    Ok((prefix, period))
}

pub fn format_eventually_periodic(alphabet: &Alphabet, prefix: &[Letter], period: &[Letter]) -> Result<String> {
    let u = if prefix.is_empty() {
        String::new()
    } else {
        format_word(alphabet, prefix)?
    };
    Ok(format!("{u}({})", format_word(alphabet, period)?))
}

pub fn parse_directive(alphabet: &Alphabet, text: &str) -> Result<DirectiveWord> {
    let (u, v) = parse_eventually_periodic(alphabet, text)?;
    DirectiveWord::new(u, v)
}

pub fn format_directive(alphabet: &Alphabet, d: &DirectiveWord) -> Result<String> {
    format_eventually_periodic(alphabet, d.preperiod(), d.period())
}

/// Parses `a<b<c`, least letter first.
pub fn parse_order(alphabet: &Alphabet, text: &str) -> Result<LexOrder> {
    let mut letters = Vec::new();
    let mut start = 0;
    for piece in text.split('<') {
        let lead = piece.len() - piece.trim_start().len();
        let pos = start + lead;
        let l = letter_at(alphabet, piece.trim(), pos)?;
        if letters.contains(&l) {
            return Err(Error::parse(pos, format!("`{}` listed twice", piece.trim())));
        }
        letters.push(l);
        start += piece.len() + 1;
    }
    LexOrder::new(letters)
}

pub fn format_order(alphabet: &Alphabet, order: &LexOrder) -> Result<String> {
    let symbols = order
        .sequence()
        .iter()
        .map(|&l| alphabet.symbol(l))
        .collect::<Result<Vec<_>>>()?;
    Ok(symbols.join("<"))
}

pub fn parse_morphism(alphabet: &Alphabet, text: &str) -> Result<PureEpistandardMorphism> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    if trimmed.is_empty() || trimmed == "Id" || trimmed == "id" {
        return Ok(PureEpistandardMorphism::identity());
    }
    for tag in ["Ψ:", "Psi:", "psi:"] {
        if let Some(rest) = trimmed.strip_prefix(tag) {
            let w = word_at(alphabet, rest, lead + tag.len())?;
            return Ok(PureEpistandardMorphism::from_generators(w.into_letters()));
        }
    }
    let mut generators = Vec::new();
    let mut start = lead;
    for factor in trimmed.split('*') {
        let f = factor.trim();
        let pos = start + (factor.len() - factor.trim_start().len());
        let inner = ["psi(", "Psi(", "Ψ("]
            .iter()
            .find_map(|tag| f.strip_prefix(tag).map(|r| (tag.len(), r)))
            .and_then(|(n, r)| r.strip_suffix(')').map(|s| (n, s)));
        let (n, symbol) =
            inner.ok_or_else(|| Error::parse(pos, "expected `psi(<letter>)`, `Ψ:<letters>` or `Id`"))?;
        generators.push(letter_at(alphabet, symbol.trim(), pos + n)?);
        start += factor.len() + 1;
    }
    Ok(PureEpistandardMorphism::from_generators(generators))
}

pub fn format_morphism(alphabet: &Alphabet, m: &PureEpistandardMorphism) -> Result<String> {
    if m.is_identity() {
        return Ok("Id".to_string());
    }
    if alphabet.is_single_char() {
        return Ok(format!("Ψ:{}", format_word(alphabet, m.generators())?));
    }
    let parts = m
        .generators()
        .iter()
        .map(|&l| alphabet.symbol(l).map(|s| format!("psi({s})")))
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.join("*"))
}

/// Whitespace-separated letters, `'` marking an inverse. The result is
/// reduced.
pub fn parse_group_word(alphabet: &Alphabet, text: &str) -> Result<GroupWord> {
    let mut syllables = Vec::new();
    for (pos, token) in tokens(text) {
        if token == EMPTY {
            continue;
        }
        let (symbol, inverse) = match token.strip_suffix('\'') {
            Some(s) => (s, true),
            None => (token, false),
        };
        let letter = letter_at(alphabet, symbol, pos)?;
        syllables.push(Syllable { letter, inverse });
    }
    Ok(GroupWord::reduce(syllables))
}

pub fn format_group_word(alphabet: &Alphabet, g: &GroupWord) -> Result<String> {
    if g.is_empty() {
        return Ok(EMPTY.to_string());
    }
    let parts = g
        .syllables()
        .iter()
        .map(|s| {
            alphabet
                .symbol(s.letter)
                .map(|sym| if s.inverse { format!("{sym}'") } else { sym.to_string() })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.join(" "))
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - text.as_ptr() as usize, t))
}

/// Parses `skew v=(ab) x=c p=4 mu=Ψ:c suffix=full`. `mu` defaults to `Id`
/// and `suffix` to `full`.
pub fn parse_skew(alphabet: &Alphabet, text: &str) -> Result<SkewSpec> {
    let mut toks = tokens(text);
    match toks.next() {
        Some((_, "skew")) => {}
        Some((pos, _)) => return Err(Error::parse(pos, "expected `skew`")),
        None => return Err(Error::parse(0, "expected `skew`")),
    }
    let mut directive = None;
    let mut x = None;
    let mut p = None;
    let mut mu = None;
    let mut suffix: Option<Option<usize>> = None;
    for (pos, tok) in toks {
        let eq = tok
            .find('=')
            .ok_or_else(|| Error::parse(pos, "expected `key=value`"))?;
        let (key, value) = (&tok[..eq], &tok[eq + 1..]);
        let vpos = pos + eq + 1;
        let dup = || Error::parse(pos, format!("`{key}` given twice"));
        match key {
            "v" => {
                let (u, w) = parse_eventually_periodic(alphabet, value).map_err(|e| shift(e, vpos))?;
                let d = DirectiveWord::new(u, w)?;
                if directive.replace(d).is_some() {
                    return Err(dup());
                }
            }
            "x" => {
                if x.replace(letter_at(alphabet, value, vpos)?).is_some() {
                    return Err(dup());
                }
            }
            "p" => {
                let n = value
                    .parse::<usize>()
                    .map_err(|_| Error::parse(vpos, "p must be a non-negative integer"))?;
                if p.replace(n).is_some() {
                    return Err(dup());
                }
            }
            "mu" => {
                let m = parse_morphism(alphabet, value).map_err(|e| shift(e, vpos))?;
                if mu.replace(m).is_some() {
                    return Err(dup());
                }
            }
            "suffix" => {
                let s = if value == "full" {
                    None
                } else {
                    Some(value.parse::<usize>().map_err(|_| {
                        Error::parse(vpos, "suffix must be `full` or a positive integer")
                    })?)
                };
                if suffix.replace(s).is_some() {
                    return Err(dup());
                }
            }
            _ => return Err(Error::parse(pos, format!("unknown key `{key}`"))),
        }
    }
    let end = text.len();
    let directive = directive.ok_or_else(|| Error::parse(end, "missing `v=`"))?;
    let x = x.ok_or_else(|| Error::parse(end, "missing `x=`"))?;
    let p = p.ok_or_else(|| Error::parse(end, "missing `p=`"))?;
    let mu = mu.unwrap_or_default();
    match suffix.flatten() {
        None => SkewSpec::with_full_suffix(directive, x, p, mu),
        Some(n) => SkewSpec::new(directive, x, p, mu, n),
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { position, message } => Error::Parse {
            position: position + by,
            message,
        },
        other => other,
    }
}

pub fn format_skew(alphabet: &Alphabet, spec: &SkewSpec) -> Result<String> {
    let suffix = if spec.suffix_len() == spec.full_suffix_len() {
        "full".to_string()
    } else {
        spec.suffix_len().to_string()
    };
    Ok(format!(
        "skew v={} x={} p={} mu={} suffix={suffix}",
        format_directive(alphabet, spec.directive())?,
        alphabet.symbol(spec.x())?,
        spec.p(),
        format_morphism(alphabet, spec.mu())?,
    ))
}

/// Symbols of a letter set, in declaration order.
pub fn letter_symbols(alphabet: &Alphabet, set: &LetterSet) -> Result<Vec<String>> {
    set.iter().map(|&l| alphabet.symbol(l).map(str::to_string)).collect()
}
