//! `etk`: generate episturmian words, compute extremal factors, classify
//! fineness and build skew words from the command line.

mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use etk::episturmian::{decompose_nonstrict, strictness};
use etk::extremal::{extremal_chain, Extreme};
use etk::fine::reconstruct_skew;
use etk::text;
use etk::{
    classify, construct_skew, is_fine_empirical, max_factor, min_factor, Alphabet, DirectiveWord, Error, LexOrder,
    PureEpistandardMorphism, SkewSpec, StructuredWord, Word, WordStream,
};

use report::{Check, Report};

/// Letters beyond which `--all-orders` refuses to enumerate.
const MAX_CLI_ORDER_LETTERS: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "etk", version, about = "Episturmian words, extremal factors and fine words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a prefix of the word.
    Generate {
        #[command(flatten)]
        common: Common,
        /// Number of letters to print.
        #[arg(long, default_value_t = 100)]
        prefix: usize,
    },
    /// Lexicographically least factor of length k.
    Min(ExtremeArgs),
    /// Lexicographically greatest factor of length k.
    Max(ExtremeArgs),
    /// Decide whether the word is fine.
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Build the skew word `v·μ(𝐯)` of a skew spec.
    Construct {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 100)]
        prefix: usize,
    },
    /// Cross-check the library's structural and empirical answers.
    Verify {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Comma-separated symbols, in default order.
    #[arg(long, value_delimiter = ',', required = true)]
    alphabet: Vec<String>,
    /// Directive word `u(v)` of a standard episturmian word.
    #[arg(long, group = "source")]
    directive: Option<String>,
    /// Eventually periodic word `u(v)`.
    #[arg(long, group = "source")]
    stream: Option<String>,
    /// Skew spec, e.g. `skew v=(ab) x=c p=4 mu=Ψ:c suffix=full`.
    #[arg(long, group = "source")]
    skew: Option<String>,
    /// Pure epistandard morphism applied to the source word.
    #[arg(long)]
    morphism: Option<String>,
    #[arg(long, default_value_t = 50)]
    depth: usize,
    #[arg(long, env = "ETK_HORIZON", default_value_t = 1000)]
    horizon: usize,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
}

#[derive(Args, Debug)]
struct ExtremeArgs {
    #[command(flatten)]
    common: Common,
    /// Factor length.
    #[arg(long)]
    k: usize,
    /// Order such as `b<a`.
    #[arg(long, conflicts_with = "all_orders")]
    order: Option<String>,
    /// Every order of the alphabet.
    #[arg(long)]
    all_orders: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

/// The resolved input word.
struct Source {
    alphabet: Alphabet,
    word: StructuredWord,
    stream: WordStream,
}

impl Common {
    fn resolve(&self) -> etk::Result<Source> {
        if self.depth > self.horizon {
            return Err(Error::InvalidArgument(format!(
                "depth {} exceeds horizon {}",
                self.depth, self.horizon
            )));
        }
        let alphabet = Alphabet::new(self.alphabet.iter().map(|s| s.trim()))?;
        let mu = match &self.morphism {
            Some(m) => text::parse_morphism(&alphabet, m)?,
            None => PureEpistandardMorphism::identity(),
        };
        let word = if let Some(d) = &self.directive {
            let d = text::parse_directive(&alphabet, d)?;
            // Ψ_{z₁⋯zₙ}(s_Δ) is the standard word directed by z₁⋯zₙΔ.
            let pre = Word::from(mu.generators()).concat(d.preperiod());
            StructuredWord::Directive(DirectiveWord::new(pre, d.period().clone())?)
        } else if let Some(s) = &self.stream {
            let (u, v) = text::parse_eventually_periodic(&alphabet, s)?;
            StructuredWord::Literal { prefix: mu.apply(&u), period: mu.apply(&v) }
        } else if let Some(s) = &self.skew {
            let spec = text::parse_skew(&alphabet, s)?;
            let composed = mu.compose(spec.mu());
            let suffix = mu.apply(&spec.v()).len();
            StructuredWord::Skew(SkewSpec::new(spec.directive().clone(), spec.x(), spec.p(), composed, suffix)?)
        } else {
            return Err(Error::InvalidArgument("one of --directive, --stream or --skew is required".into()));
        };
        let stream = word.stream()?;
        let outside: Vec<_> = stream
            .letters_upto(self.horizon.max(1))
            .into_iter()
            .filter(|l| !alphabet.contains(*l))
            .collect();
        if !outside.is_empty() {
            return Err(Error::Alphabet(format!("word uses letters outside the alphabet: {outside:?}")));
        }
        Ok(Source { alphabet, word, stream })
    }
}

fn orders(alphabet: &Alphabet, args: &ExtremeArgs) -> etk::Result<Vec<LexOrder>> {
    if args.all_orders {
        if alphabet.len() > MAX_CLI_ORDER_LETTERS {
            return Err(Error::InvalidArgument(format!(
                "--all-orders supports at most {MAX_CLI_ORDER_LETTERS} letters"
            )));
        }
        return Ok(LexOrder::all_orders(&alphabet.letter_set()));
    }
    match &args.order {
        Some(o) => Ok(vec![text::parse_order(alphabet, o)?]),
        None => Ok(vec![LexOrder::identity(alphabet.len())]),
    }
}

fn run(command: &Command) -> etk::Result<Report> {
    match command {
        Command::Generate { common, prefix } => {
            let src = common.resolve()?;
            Report::generated(&src.alphabet, &src.stream.prefix(*prefix))
        }
        Command::Min(args) | Command::Max(args) => {
            let src = args.common.resolve()?;
            let max = matches!(command, Command::Max(_));
            let mut results = Vec::new();
            for o in orders(&src.alphabet, args)? {
                let r = if max {
                    max_factor(&src.stream, args.k, &o, args.common.horizon)?
                } else {
                    min_factor(&src.stream, args.k, &o, args.common.horizon)?
                };
                results.push(r);
            }
            Report::extremal(&src.alphabet, &results, args.all_orders)
        }
        Command::Classify { common } => {
            let src = common.resolve()?;
            let verdict = classify(&src.word, common.depth, common.horizon)?;
            Report::verdict(&src.alphabet, &verdict)
        }
        Command::Construct { common, prefix } => {
            let src = common.resolve()?;
            let StructuredWord::Skew(spec) = &src.word else {
                return Err(Error::InvalidArgument("construct needs --skew".into()));
            };
            let spec = spec.canonical();
            Report::constructed(&src.alphabet, &spec, &construct_skew(&spec).prefix(*prefix))
        }
        Command::Verify { common } => {
            let src = common.resolve()?;
            let checks = verify(&src, common.depth, common.horizon)?;
            Report::checks(&src.alphabet, checks, strictness_of(&src))
        }
    }
}

fn strictness_of(src: &Source) -> Option<etk::episturmian::StrictnessReport> {
    match &src.word {
        StructuredWord::Directive(d) => Some(strictness(d, &src.alphabet)),
        _ => None,
    }
}

fn verify(src: &Source, depth: usize, horizon: usize) -> etk::Result<Vec<Check>> {
    let mut checks = Vec::new();
    let structural = classify(&src.word, depth, horizon)?;
    let empirical = is_fine_empirical(&src.stream, depth, horizon)?;
    checks.push(Check::new(
        "structural and empirical fineness agree",
        structural.is_fine() == empirical.is_fine(),
        format!("{} / {}", report::kind(&structural.classification), report::kind(&empirical.classification)),
    ));

    let h = horizon.max(src.stream.suggested_horizon(depth));
    let p = src.stream.prefix(h);
    let letters = p.alph();
    if letters.len() <= MAX_CLI_ORDER_LETTERS {
        let mut broken = None;
        for o in LexOrder::all_orders(&letters) {
            for ext in [Extreme::Min, Extreme::Max] {
                let chain = extremal_chain(&p, depth.min(p.len()), &o, ext)?;
                if let Some(i) = chain.windows(2).position(|w| !w[1].starts_with(&w[0])) {
                    broken.get_or_insert(format!("{:?} at k = {}", o.sequence(), i + 1));
                }
            }
        }
        checks.push(Check::new(
            "extremal factors extend each other",
            broken.is_none(),
            broken.unwrap_or_else(|| format!("all orders, k <= {depth}")),
        ));
    }

    match &src.word {
        StructuredWord::Directive(d) => {
            if letters.len() <= MAX_CLI_ORDER_LETTERS {
                let mut above = 0;
                let mut below = 0;
                for o in LexOrder::all_orders(&letters) {
                    let chain = extremal_chain(&p, depth.min(p.len()), &o, Extreme::Min)?;
                    for (i, m) in chain.iter().enumerate() {
                        let a_s = Word::single(o.least()).concat(&p[..i]);
                        match o.compare(&a_s, m)? {
                            std::cmp::Ordering::Greater => above += 1,
                            std::cmp::Ordering::Less => below += 1,
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                }
                checks.push(Check::new("a·s <= min(s)", above == 0, format!("{above} violations")));
                if d.is_strict() {
                    checks.push(Check::new("a·s = min(s) for a strict word", below == 0, format!("{below} strict inequalities")));
                }
            }
            if !d.is_strict() {
                let (mu, shifted) = decompose_nonstrict(d)?;
                let via = mu.apply_truncated(&etk::standard_word(&shifted).prefix(h), h);
                checks.push(Check::new(
                    "s = μ_m(s⁽ᵐ⁾)",
                    via == p,
                    format!("m = {}, {} letters compared", mu.len(), h),
                ));
            }
        }
        StructuredWord::Skew(spec) => {
            let back = reconstruct_skew(&src.stream, depth, horizon)?;
            let same = construct_skew(&back).prefix(h) == p;
            checks.push(Check::new(
                "skew spec is recovered from its word",
                same && back.x() == spec.x(),
                text::format_skew(&src.alphabet, &back)?,
            ));
        }
        StructuredWord::Literal { .. } => {}
    }
    Ok(checks)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let output = match &cli.command {
        Command::Generate { common, .. }
        | Command::Classify { common }
        | Command::Construct { common, .. }
        | Command::Verify { common } => common.output,
        Command::Min(a) | Command::Max(a) => a.common.output,
    };
    match run(&cli.command) {
        Ok(report) => {
            println!("{}", report.render(output == Output::Json));
            if report.failed() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Internal(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
