//! Fine words: infinite words `t` admitting a single word `s` such that
//! `min(t) = a·s` for every lexicographic order, where `a` is the least
//! letter.
//!
//! A word is fine exactly when it is a strict episturmian word or a strict
//! skew episturmian word `v·μ(𝐯)`; [`classify`] decides this for words given
//! by their construction and [`is_fine_empirical`] checks any stream up to a
//! finite depth.

use crate::alphabet::{Letter, LetterSet};
use crate::episturmian::{standard_word, DirectiveWord};
use crate::error::{Error, Result};
use crate::extremal::{extremal_chain, Extreme};
use crate::morphism::{psi_preimage, PureEpistandardMorphism};
use crate::order::LexOrder;
use crate::stream::WordStream;
use crate::word::Word;

/// Orders are enumerated exhaustively, so the alphabet must stay small.
pub const MAX_ORDER_LETTERS: usize = 8;

/// Depth at which [`classify`] gives up looking for a non-fineness witness.
const WITNESS_DEPTH_CAP: usize = 512;

/// A strict skew episturmian word `v·μ(𝐯)`.
///
/// `𝐯` is the standard word of `directive`, strict over `B = 𝒜∖{x}`, and `v`
/// is the suffix of length `suffix_len` of `μ(ṽ_p·x)`, where `ṽ_p` is the
/// reversal of the length-`p` prefix of `𝐯`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewSpec {
    directive: DirectiveWord,
    x: Letter,
    p: usize,
    mu: PureEpistandardMorphism,
    suffix_len: usize,
}

impl SkewSpec {
    pub fn new(
        directive: DirectiveWord,
        x: Letter,
        p: usize,
        mu: PureEpistandardMorphism,
        suffix_len: usize,
    ) -> Result<Self> {
        if !directive.is_strict() {
            return Err(Error::Spec(format!(
                "directive {directive:?} is not strict over its alphabet"
            )));
        }
        let b = directive.alph();
        if b.contains(&x) {
            return Err(Error::Spec(format!("x = {x:?} occurs in the directive")));
        }
        let mut alphabet = b;
        alphabet.insert(x);
        if let Some(l) = mu.letters().difference(&alphabet).next() {
            return Err(Error::Spec(format!("morphism uses {l:?} outside the alphabet")));
        }
        let spec = SkewSpec {
            directive,
            x,
            p,
            mu,
            suffix_len,
        };
        let full = spec.full_suffix_len();
        if suffix_len == 0 || suffix_len > full {
            return Err(Error::Spec(format!("suffix length {suffix_len} outside 1..={full}")));
        }
        Ok(spec)
    }

    /// The spec with `v = μ(ṽ_p·x)` in full.
    pub fn with_full_suffix(
        directive: DirectiveWord,
        x: Letter,
        p: usize,
        mu: PureEpistandardMorphism,
    ) -> Result<Self> {
        let len = mu.apply(&reversed_prefix_then(&directive, p, x)).len();
        SkewSpec::new(directive, x, p, mu, len)
    }

    pub fn directive(&self) -> &DirectiveWord {
        &self.directive
    }

    pub fn x(&self) -> Letter {
        self.x
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn mu(&self) -> &PureEpistandardMorphism {
        &self.mu
    }

    pub fn suffix_len(&self) -> usize {
        self.suffix_len
    }

    /// `B`, the letters of `𝐯`.
    pub fn b(&self) -> LetterSet {
        self.directive.alph()
    }

    /// `𝒜 = B ∪ {x}`.
    pub fn alphabet(&self) -> LetterSet {
        let mut a = self.b();
        a.insert(self.x);
        a
    }

    /// `|μ(ṽ_p·x)|`.
    pub fn full_suffix_len(&self) -> usize {
        self.mu.apply(&reversed_prefix_then(&self.directive, self.p, self.x)).len()
    }

    /// The finite prefix `v`.
    pub fn v(&self) -> Word {
        let w = self.mu.apply(&reversed_prefix_then(&self.directive, self.p, self.x));
        w.suffix(self.suffix_len)
    }

    /// `s = μ(𝐯)`, the common word of the fine word.
    pub fn s(&self) -> WordStream {
        self.mu.apply_stream(&standard_word(&self.directive))
    }

    /// The same word with the least `p`. Since `ṽ_p·x` is a suffix of
    /// `ṽ_{p+1}·x`, any `p` with `|μ(ṽ_p·x)| ≥ suffix_len` gives the same `v`.
    pub fn canonical(&self) -> SkewSpec {
        let p = (0..=self.p)
            .find(|&q| {
                self.mu.apply(&reversed_prefix_then(&self.directive, q, self.x)).len() >= self.suffix_len
            })
            .unwrap_or(self.p);
        SkewSpec { p, ..self.clone() }
    }
}

/// `ṽ_p·x`.
fn reversed_prefix_then(directive: &DirectiveWord, p: usize, x: Letter) -> Word {
    let mut w = standard_word(directive).prefix(p).reversal();
    w.push(x);
    w
}

/// The stream `v·μ(𝐯)`.
pub fn construct_skew(spec: &SkewSpec) -> WordStream {
    WordStream::concatenation(spec.v(), spec.s())
}

/// A word given by its construction.
#[derive(Clone, Debug)]
pub enum StructuredWord {
    Directive(DirectiveWord),
    Skew(SkewSpec),
    Literal { prefix: Word, period: Word },
}

impl StructuredWord {
    pub fn stream(&self) -> Result<WordStream> {
        match self {
            StructuredWord::Directive(d) => Ok(standard_word(d)),
            StructuredWord::Skew(spec) => Ok(construct_skew(spec)),
            StructuredWord::Literal { prefix, period } => {
                WordStream::literal(prefix.clone(), period.clone())
            }
        }
    }
}

/// An order and a length at which `min(t|k)` is not `a·s_{k−1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub order: LexOrder,
    pub k: usize,
    /// `min(t|k)` in the scanned prefix.
    pub found: Word,
    /// `a·s_{k−1}`.
    pub required: Word,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Classification {
    StrictEpisturmian(LetterSet),
    SkewEpisturmian(SkewSpec),
    /// Fine up to the checked depth; only an empirical scan can say this.
    FineToDepth,
    NotFine(Witness),
    /// The scan at the horizon and at twice the horizon disagree.
    Unknown,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinenessVerdict {
    pub classification: Classification,
    /// The common word `s` up to length `depth − 1`.
    pub s_prefix: Word,
    pub depth: usize,
    pub horizon: usize,
    pub exact: bool,
}

impl FinenessVerdict {
    pub fn is_fine(&self) -> bool {
        matches!(
            self.classification,
            Classification::StrictEpisturmian(_)
                | Classification::SkewEpisturmian(_)
                | Classification::FineToDepth
        )
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.classification {
            Classification::NotFine(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Scan {
    Fine(Word),
    NotFine(Witness, Word),
}

fn orders_for(letters: &LetterSet) -> Result<Vec<LexOrder>> {
    if letters.len() > MAX_ORDER_LETTERS {
        return Err(Error::InvalidArgument(format!(
            "{} letters is too many to enumerate every order (limit {MAX_ORDER_LETTERS})",
            letters.len()
        )));
    }
    Ok(LexOrder::all_orders(letters))
}

fn scan_fineness(p: &[Letter], depth: usize) -> Result<Scan> {
    let depth = depth.min(p.len());
    if depth == 0 {
        return Ok(Scan::Fine(Word::empty()));
    }
    let orders = orders_for(&p.iter().copied().collect())?;
    let chains = orders
        .iter()
        .map(|o| extremal_chain(p, depth, o, Extreme::Min))
        .collect::<Result<Vec<_>>>()?;
    let s = Word::from(&chains[0][depth - 1][1..]);
    for k in 1..=depth {
        for (o, chain) in orders.iter().zip(&chains) {
            let required = Word::single(o.least()).concat(&s[..k - 1]);
            if chain[k - 1] != required {
                let witness = Witness {
                    order: o.clone(),
                    k,
                    found: chain[k - 1].clone(),
                    required,
                };
                return Ok(Scan::NotFine(witness, s));
            }
        }
    }
    Ok(Scan::Fine(s))
}

/// Checks fineness up to `depth` on every order of the letters seen.
///
/// The horizon is raised to at least `2·depth`. The verdict is exact when a
/// second scan at twice the horizon agrees; otherwise it is `Unknown`.
pub fn is_fine_empirical(t: &WordStream, depth: usize, horizon: usize) -> Result<FinenessVerdict> {
    let h = horizon.max(2 * depth);
    let long = t.prefix(2 * h);
    let first = scan_fineness(&long[..h], depth)?;
    let second = scan_fineness(&long, depth)?;
    let exact = first == second;
    let (classification, s_prefix) = match first {
        _ if !exact => (Classification::Unknown, scan_s(second)),
        Scan::Fine(s) => (Classification::FineToDepth, s),
        Scan::NotFine(w, s) => (Classification::NotFine(w), s),
    };
    Ok(FinenessVerdict {
        classification,
        s_prefix,
        depth,
        horizon: h,
        exact,
    })
}

fn scan_s(scan: Scan) -> Word {
    match scan {
        Scan::Fine(s) | Scan::NotFine(_, s) => s,
    }
}

/// The common word `s` to length `depth − 1`, if the stream is fine to that
/// depth. Over two letters the pairing `max(t) = b·s` is checked as well.
pub fn common_s(t: &WordStream, depth: usize, horizon: usize) -> Result<Option<Word>> {
    let verdict = is_fine_empirical(t, depth, horizon)?;
    if verdict.classification != Classification::FineToDepth {
        return Ok(None);
    }
    let s = verdict.s_prefix;
    let p = t.prefix(verdict.horizon);
    let letters: LetterSet = p.alph();
    if letters.len() == 2 && depth > 0 {
        for o in LexOrder::all_orders(&letters) {
            let chain = extremal_chain(&p, depth, &o, Extreme::Max)?;
            for (i, m) in chain.iter().enumerate() {
                if *m != Word::single(o.greatest()).concat(&s[..i]) {
                    return Ok(None);
                }
            }
        }
    }
    Ok(Some(s))
}

fn stream_horizon(t: &WordStream, depth: usize, horizon: usize) -> usize {
    horizon.max(t.suggested_horizon(depth)).max(2 * depth)
}

/// Runs the empirical scan at increasing depth until a witness shows up.
fn locate_witness(t: &WordStream, depth: usize, horizon: usize) -> Result<FinenessVerdict> {
    let mut d = depth.max(2);
    loop {
        let v = is_fine_empirical(t, d, stream_horizon(t, d, horizon))?;
        if v.witness().is_some() {
            return Ok(v);
        }
        if d >= WITNESS_DEPTH_CAP {
            return Err(Error::Internal(format!(
                "{t:?} is not fine by construction but no witness appears up to depth {d}"
            )));
        }
        d = (2 * d).min(WITNESS_DEPTH_CAP);
    }
}

/// Confirms a structural "fine" verdict against the empirical scan.
fn confirm_fine(
    t: &WordStream,
    classification: Classification,
    s: &WordStream,
    depth: usize,
    horizon: usize,
) -> Result<FinenessVerdict> {
    let h = stream_horizon(t, depth, horizon);
    let empirical = is_fine_empirical(t, depth, h)?;
    let s_prefix = s.prefix(depth.saturating_sub(1));
    match &empirical.classification {
        Classification::FineToDepth if empirical.s_prefix == s_prefix => {}
        Classification::Unknown => {}
        other => {
            return Err(Error::Internal(format!(
                "{t:?} is fine by construction with s = {s_prefix:?}, but the scan to depth \
                 {depth} found {other:?} with s = {:?}",
                empirical.s_prefix
            )))
        }
    }
    Ok(FinenessVerdict {
        classification,
        s_prefix,
        depth,
        horizon: h,
        exact: true,
    })
}

/// Decides fineness of a word given by its construction and cross-checks
/// the answer against an empirical scan at `depth`.
pub fn classify(word: &StructuredWord, depth: usize, horizon: usize) -> Result<FinenessVerdict> {
    let t = word.stream()?;
    match word {
        StructuredWord::Directive(d) => {
            if d.is_strict() {
                confirm_fine(&t, Classification::StrictEpisturmian(d.alph()), &t, depth, horizon)
            } else {
                locate_witness(&t, depth, horizon)
            }
        }
        StructuredWord::Skew(spec) => confirm_fine(
            &t,
            Classification::SkewEpisturmian(spec.clone()),
            &spec.s(),
            depth,
            horizon,
        ),
        StructuredWord::Literal { prefix, period } => {
            let mut letters = prefix.alph();
            letters.extend(period.iter().copied());
            match letters.len() {
                1 => confirm_fine(&t, Classification::StrictEpisturmian(letters), &t, depth, horizon),
                2 => match literal_as_skew(&t, prefix.len(), period.len(), depth, horizon) {
                    Some(spec) => {
                        let s = spec.s();
                        confirm_fine(&t, Classification::SkewEpisturmian(spec), &s, depth, horizon)
                    }
                    None => locate_witness(&t, depth, horizon),
                },
                // A fine word over three or more letters is aperiodic.
                _ => locate_witness(&t, depth, horizon),
            }
        }
    }
}

/// Reads an ultimately periodic word `u·w^ω` as a skew word, checking the
/// match exactly: two ultimately periodic words agree everywhere once they
/// agree on the longer preperiod plus a common multiple of the periods.
fn literal_as_skew(
    t: &WordStream,
    pre: usize,
    per: usize,
    depth: usize,
    horizon: usize,
) -> Option<SkewSpec> {
    let depth = depth.max(2 * (pre + per) + 2);
    let spec = reconstruct_skew(t, depth, stream_horizon(t, depth, horizon)).ok()?;
    // With a unary directive, v·μ(𝐯) = v·μ(b)^ω.
    let b = *spec.b().iter().next()?;
    let skew_per = spec.mu().image_of(b).len();
    let check = pre.max(spec.v().len()) + lcm(per, skew_per);
    (construct_skew(&spec).prefix(check) == t.prefix(check)).then_some(spec)
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// One order's evaluation of both sides of the transfer equivalence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransferRow {
    pub order: LexOrder,
    /// `min(t⁽¹⁾) = a·s⁽¹⁾` to the checked depth.
    pub lhs: bool,
    /// `min(Ψ_z(t⁽¹⁾))` is `z·a·s` when `z < a`, else `a·s`.
    pub rhs: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransferReport {
    pub rows: Vec<TransferRow>,
}

impl TransferReport {
    pub fn agree(&self) -> bool {
        self.rows.iter().all(|r| r.lhs == r.rhs)
    }

    pub fn both_hold(&self) -> usize {
        self.rows.iter().filter(|r| r.lhs && r.rhs).count()
    }

    pub fn both_fail(&self) -> usize {
        self.rows.iter().filter(|r| !r.lhs && !r.rhs).count()
    }
}

/// Evaluates `min(t⁽¹⁾) = a·s⁽¹⁾ ⇔ min(t) = (z)a·s` with `t = Ψ_z(t⁽¹⁾)`,
/// `s = Ψ_z(s⁽¹⁾)`, on every order of the letters involved.
///
/// The left side is checked for `k ≤ depth` on `prefix(horizon)` of `t⁽¹⁾`.
/// The right side is checked on the image of that prefix, up to
/// `|Ψ_z(a·s⁽¹⁾_{depth−1})| − 1`, the length the left side determines.
pub fn verify_lemma_transfer(
    t1: &WordStream,
    s1: &WordStream,
    z: Letter,
    a: Letter,
    depth: usize,
    horizon: usize,
) -> Result<TransferReport> {
    if depth == 0 || horizon < depth {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= depth <= horizon, got depth {depth}, horizon {horizon}"
        )));
    }
    let psi = PureEpistandardMorphism::psi(z);
    let t1p = t1.prefix(horizon);
    let s1p = s1.prefix(horizon);
    let tp = psi.apply(&t1p);
    let sp = psi.apply(&s1p);
    let a_s1 = Word::single(a).concat(&s1p[..depth - 1]);
    let rhs_depth = (psi.apply(&a_s1).len() - 1).max(1).min(tp.len());

    let mut letters: LetterSet = t1p.alph();
    letters.extend(s1p.iter().copied());
    letters.insert(z);
    letters.insert(a);

    let mut rows = Vec::new();
    for o in orders_for(&letters)? {
        let lhs_chain = extremal_chain(&t1p, depth, &o, Extreme::Min)?;
        let lhs = lhs_chain.iter().enumerate().all(|(i, m)| *m == a_s1.prefix(i + 1));

        let mut target = Word::empty();
        if o.compare_letters(z, a)?.is_lt() {
            target.push(z);
        }
        target.push(a);
        target.extend_from_slice(&sp);
        let rhs_chain = extremal_chain(&tp, rhs_depth, &o, Extreme::Min)?;
        let rhs = rhs_chain.iter().enumerate().all(|(i, m)| *m == target.prefix(i + 1));
        rows.push(TransferRow { order: o, lhs, rhs });
    }
    Ok(TransferReport { rows })
}

fn peel(z: Letter, w: &[Letter]) -> Option<Word> {
    if w.is_empty() {
        return Some(Word::empty());
    }
    if w[0] != z {
        return None;
    }
    // A trailing z may be the first half of an unfinished block.
    let w = if w.last() == Some(&z) { &w[..w.len() - 1] } else { w };
    psi_preimage(z, w)
}

/// Recovers a skew spec for a fine, non-strict stream.
///
/// The common word `s` is located inside `t = v·s` and both are peeled by
/// the generator `Ψ_z` named by the first letter of `s`, prepending `z` to
/// `t` when it does not start with it, until `s` misses exactly one letter
/// `x`. At that level `t` reads `ṽ_q·x·𝐯`; the prepends are then undone on
/// the way back up to find `|v|`.
pub fn reconstruct_skew(t: &WordStream, depth: usize, horizon: usize) -> Result<SkewSpec> {
    let verdict = is_fine_empirical(t, depth, horizon)?;
    if verdict.classification != Classification::FineToDepth {
        return Err(Error::NotSkewForm(format!(
            "stream is not fine to depth {depth}: {:?}",
            verdict.classification
        )));
    }
    let s = verdict.s_prefix;
    if s.is_empty() {
        return Err(Error::NotSkewForm("depth too small to locate s".into()));
    }
    let h = verdict.horizon;
    let tp = t.prefix(h);
    let mut last_err = Error::NotSkewForm("s does not occur in the scanned prefix".into());
    for j in 0..=tp.len() - s.len() {
        if !tp[j..].starts_with(&s) {
            continue;
        }
        match reconstruct_at(&tp, j, depth) {
            Ok(spec) => {
                if construct_skew(&spec).prefix(h) == tp {
                    return Ok(spec);
                }
                last_err = Error::NotSkewForm(format!("spec at offset {j} does not reproduce the prefix"));
            }
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

fn reconstruct_at(tp: &[Letter], j: usize, depth: usize) -> Result<SkewSpec> {
    let alphabet: LetterSet = tp.iter().copied().collect();
    let stall = |why: &str| Error::NotSkewForm(why.to_string());
    let mut t = Word::from(tp);
    let mut s = Word::from(&tp[j..]);
    let mut gens = Vec::new();
    let mut prepended = Vec::new();
    let x = loop {
        let missing: Vec<Letter> = alphabet.difference(&s.alph()).copied().collect();
        match missing.len() {
            0 => {}
            1 => break missing[0],
            _ => return Err(stall("s misses more than one letter")),
        }
        if s.len() < 2 || gens.len() > 64 {
            return Err(stall("peeling stalled before a letter disappeared from s"));
        }
        let z = s[0];
        s = peel(z, &s).ok_or_else(|| stall("s is not in the image of its first generator"))?;
        let pre = t.first() != Some(&z);
        if pre {
            t = t.prepend(z);
        }
        t = peel(z, &t).ok_or_else(|| stall("t is not in the image of the generator"))?;
        gens.push(z);
        prepended.push(pre);
    };

    // t = ṽ_q·x·𝐯 with 𝐯 free of x.
    let q = t
        .iter()
        .position(|&l| l == x)
        .ok_or_else(|| stall("x vanished from t"))?;
    if t[q + 1..].contains(&x) {
        return Err(stall("x occurs more than once at the last level"));
    }
    let tail = Word::from(&t[q + 1..]);
    // Any strict word agrees with some skew word on a finite prefix once μ
    // is long enough; insist that 𝐯 itself is seen to the checked depth.
    if tail.len() < depth {
        return Err(stall("too little of the standard word survives peeling"));
    }
    if s.len() < q || t[..q].iter().rev().ne(s[..q].iter()) {
        return Err(stall("the head of t is not a reversed prefix of s"));
    }
    let shared = tail.len().min(s.len());
    if tail[..shared] != s[..shared] {
        return Err(stall("t and s disagree after x"));
    }

    let mut head = Word::from(&t[..=q]);
    for (&z, &pre) in gens.iter().zip(&prepended).rev() {
        head = PureEpistandardMorphism::psi(z).apply(&head);
        if pre {
            head = Word::from(&head[1..]);
        }
    }
    if head.len() != j {
        return Err(stall("recovered v has the wrong length"));
    }

    let v_prefix = if tail.len() >= s.len() { tail } else { s };
    let b: LetterSet = alphabet.iter().copied().filter(|&l| l != x).collect();
    let mu = PureEpistandardMorphism::from_generators(gens);
    let mut last = stall("no eventually periodic directive fits");
    for directive in fit_directive(&v_prefix, &b)? {
        match SkewSpec::new(directive, x, q, mu.clone(), j) {
            Ok(spec) => {
                let spec = spec.canonical();
                if construct_skew(&spec).prefix(tp.len()) [..] == *tp {
                    return Ok(spec);
                }
            }
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// Candidate eventually periodic directives, strict over `b`, for a
/// standard word with prefix `w`, shortest first.
fn fit_directive(w: &[Letter], b: &LetterSet) -> Result<Vec<DirectiveWord>> {
    let stall = |why: &str| Error::NotSkewForm(why.to_string());
    if b.len() == 1 {
        let l = *b.iter().next().expect("one letter");
        return Ok(vec![DirectiveWord::periodic(Word::single(l))?]);
    }
    // The directive letters are the first letters of the successive
    // preimages.
    let mut letters = Vec::new();
    let mut cur = Word::from(w);
    while cur.len() >= 2 && letters.len() < 64 {
        let z = cur[0];
        letters.push(z);
        cur = peel(z, &cur).ok_or_else(|| stall("v is not a standard episturmian prefix"))?;
        if cur.iter().all(|&l| l == z) {
            break;
        }
    }
    let n = letters.len();
    let mut out = Vec::new();
    for total in 1..=n {
        for pre in 0..total {
            let per = total - pre;
            let consistent = (pre..n).all(|i| letters[i] == letters[pre + (i - pre) % per]);
            if !consistent {
                continue;
            }
            let period: Word = letters[pre..pre + per].iter().copied().collect();
            let prep: Word = letters[..pre].iter().copied().collect();
            if period.alph() != *b || !prep.alph().is_subset(b) {
                continue;
            }
            out.push(DirectiveWord::new(prep, period)?);
        }
    }
    Ok(out)
}
