//! JSON records and their plain-text renderings.

use etk::episturmian::StrictnessReport;
use etk::fine::{Classification, FinenessVerdict, Witness};
use etk::text::{format_directive, format_morphism, format_order, format_skew, format_word, letter_symbols};
use etk::{Alphabet, ExtremalResult, Result, SkewSpec, Word};
use serde::Serialize;

pub struct Report {
    json: String,
    text: String,
    failed: bool,
}

#[derive(Serialize)]
struct Generated {
    word: String,
    length: usize,
}

#[derive(Serialize)]
struct Extremal {
    word: String,
    k: usize,
    order: String,
    horizon: usize,
    exact: bool,
}

#[derive(Serialize)]
pub struct SkewRecord {
    directive: String,
    x: String,
    p: usize,
    morphism: String,
    suffix_len: usize,
}

#[derive(Serialize)]
struct WitnessRecord {
    order: String,
    k: usize,
    found: String,
    required: String,
}

#[derive(Serialize)]
struct Verdict {
    classification: &'static str,
    #[serde(rename = "B")]
    b: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skew: Option<SkewRecord>,
    s_prefix: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessRecord>,
    depth: usize,
    horizon: usize,
    exact: bool,
}

#[derive(Serialize)]
struct Constructed {
    skew: SkewRecord,
    spec: String,
    v: String,
    prefix: String,
}

#[derive(Serialize)]
pub struct Check {
    name: &'static str,
    passed: bool,
    detail: String,
}

impl Check {
    pub fn new(name: &'static str, passed: bool, detail: String) -> Self {
        Check { name, passed, detail }
    }
}

#[derive(Serialize)]
struct Strictness {
    alph: Vec<String>,
    ult: Vec<String>,
    strict_over: Option<Vec<String>>,
    m: usize,
}

#[derive(Serialize)]
struct Checks {
    checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    strictness: Option<Strictness>,
}

pub fn kind(c: &Classification) -> &'static str {
    match c {
        Classification::StrictEpisturmian(_) => "StrictEpisturmian",
        Classification::SkewEpisturmian(_) => "SkewEpisturmian",
        Classification::FineToDepth => "FineToDepth",
        Classification::NotFine(_) => "NotFine",
        Classification::Unknown => "Unknown",
    }
}

fn skew_record(a: &Alphabet, spec: &SkewSpec) -> Result<SkewRecord> {
    Ok(SkewRecord {
        directive: format_directive(a, spec.directive())?,
        x: a.symbol(spec.x())?.to_string(),
        p: spec.p(),
        morphism: format_morphism(a, spec.mu())?,
        suffix_len: spec.suffix_len(),
    })
}

fn witness_record(a: &Alphabet, w: &Witness) -> Result<WitnessRecord> {
    Ok(WitnessRecord {
        order: format_order(a, &w.order)?,
        k: w.k,
        found: format_word(a, &w.found)?,
        required: format_word(a, &w.required)?,
    })
}

fn to_json<T: Serialize>(t: &T) -> String {
    serde_json::to_string_pretty(t).expect("report records serialise")
}

impl Report {
    pub fn generated(a: &Alphabet, w: &Word) -> Result<Report> {
        let word = format_word(a, w)?;
        let json = to_json(&Generated { word: word.clone(), length: w.len() });
        Ok(Report { json, text: word, failed: false })
    }

    pub fn extremal(a: &Alphabet, results: &[ExtremalResult], many: bool) -> Result<Report> {
        let records = results
            .iter()
            .map(|r| {
                Ok(Extremal {
                    word: format_word(a, &r.word)?,
                    k: r.k,
                    order: format_order(a, &r.order)?,
                    horizon: r.horizon,
                    exact: r.is_exact(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let text = if many {
            records
                .iter()
                .map(|r| format!("{}: {}{}", r.order, r.word, if r.exact { "" } else { " (horizon-limited)" }))
                .collect::<Vec<_>>()
                .join("\n")
        } else {
            records[0].word.clone()
        };
        let json = if many { to_json(&records) } else { to_json(&records[0]) };
        Ok(Report { json, text, failed: false })
    }

    pub fn verdict(a: &Alphabet, v: &FinenessVerdict) -> Result<Report> {
        let b = match &v.classification {
            Classification::StrictEpisturmian(b) => Some(letter_symbols(a, b)?),
            Classification::SkewEpisturmian(spec) => Some(letter_symbols(a, &spec.b())?),
            _ => None,
        };
        let skew = match &v.classification {
            Classification::SkewEpisturmian(spec) => Some(skew_record(a, spec)?),
            _ => None,
        };
        let witness = v.witness().map(|w| witness_record(a, w)).transpose()?;
        let record = Verdict {
            classification: kind(&v.classification),
            b,
            skew,
            s_prefix: format_word(a, &v.s_prefix)?,
            witness,
            depth: v.depth,
            horizon: v.horizon,
            exact: v.exact,
        };
        let mut text = vec![format!("classification: {}", record.classification)];
        if let Some(b) = &record.b {
            text.push(format!("B: {}", b.join(",")));
        }
        if let Classification::SkewEpisturmian(spec) = &v.classification {
            text.push(format!("spec: {}", format_skew(a, spec)?));
        }
        text.push(format!("s: {}", record.s_prefix));
        if let Some(w) = &record.witness {
            text.push(format!(
                "witness: order {} k={} found {} required {}",
                w.order, w.k, w.found, w.required
            ));
        }
        Ok(Report { json: to_json(&record), text: text.join("\n"), failed: false })
    }

    pub fn constructed(a: &Alphabet, spec: &SkewSpec, prefix: &Word) -> Result<Report> {
        let record = Constructed {
            skew: skew_record(a, spec)?,
            spec: format_skew(a, spec)?,
            v: format_word(a, &spec.v())?,
            prefix: format_word(a, prefix)?,
        };
        let text = format!("spec: {}\nv: {}\n{}", record.spec, record.v, record.prefix);
        Ok(Report { json: to_json(&record), text, failed: false })
    }

    pub fn checks(a: &Alphabet, checks: Vec<Check>, strict: Option<StrictnessReport>) -> Result<Report> {
        let strictness = strict
            .map(|r| -> Result<Strictness> {
                Ok(Strictness {
                    alph: letter_symbols(a, &r.alph)?,
                    ult: letter_symbols(a, &r.ult)?,
                    strict_over: r.strict_over.map(|b| letter_symbols(a, &b)).transpose()?,
                    m: r.m,
                })
            })
            .transpose()?;
        let failed = checks.iter().any(|c| !c.passed);
        let mut text: Vec<String> = checks
            .iter()
            .map(|c| format!("{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail))
            .collect();
        if let Some(s) = &strictness {
            text.push(format!(
                "strictness: Alph = {{{}}}, Ult = {{{}}}, m = {}",
                s.alph.join(","),
                s.ult.join(","),
                s.m
            ));
        }
        let json = to_json(&Checks { checks, strictness });
        Ok(Report { json, text: text.join("\n"), failed })
    }

    pub fn failed(&self) -> bool {
        self.failed
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.json.clone()
        } else {
            self.text.clone()
        }
    }
}
