use std::fs;
use std::io::{self, BufRead, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sindhi_spell::formats::{self, read_pairs};
use sindhi_spell::render::{self, ClassRecord, ClassResult, Format};
use sindhi_spell::{ResourcePaths, Resources};
use sindhi_spell_core::inject::{Distribution, Injector};
use sindhi_spell_core::trends::{analyze, TrendError};
use sindhi_spell_core::{check_text, normalize, suggest, GraphemeSeq};

#[derive(Parser)]
#[command(name = "sindhi-spell", version, about = "Spell checker and error analysis for Sindhi text")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Data {
    /// Word list: one word per line, optional TAB and frequency
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Phonetic group file (defaults to the built-in table)
    #[arg(long)]
    phonetic: Option<PathBuf>,
    /// Visual group file (defaults to groups generated from letter shapes)
    #[arg(long)]
    visual: Option<PathBuf>,
    /// Keyboard layout file
    #[arg(long)]
    layout: Option<PathBuf>,
    /// Ranking config (key = value)
    #[arg(long)]
    config: Option<PathBuf>,
}

impl Data {
    fn paths(&self) -> ResourcePaths {
        ResourcePaths {
            lexicon: self.lexicon.clone(),
            phonetic: self.phonetic.clone(),
            visual: self.visual.clone(),
            layout: self.layout.clone(),
            config: self.config.clone(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Flag misspelled tokens in text read from stdin
    Check {
        #[command(flatten)]
        data: Data,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        #[arg(long)]
        max_suggestions: Option<usize>,
        /// Print each token and its normalized form instead of checking
        #[arg(long)]
        normalize_only: bool,
    },
    /// Rank corrections for each token (one per line) on stdin
    Suggest {
        #[command(flatten)]
        data: Data,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        #[arg(long)]
        max_suggestions: Option<usize>,
    },
    /// Classify each `wrong TAB intended` pair on stdin
    Classify {
        #[command(flatten)]
        data: Data,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Aggregate a pair corpus on stdin into a trend report
    Analyze {
        #[command(flatten)]
        data: Data,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Generate a labelled error corpus from the lexicon words
    Inject {
        #[command(flatten)]
        data: Data,
        /// Distribution file or preset name (gpo, web7)
        #[arg(long, default_value = "gpo")]
        distribution: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// Apportion kinds exactly instead of sampling them
        #[arg(long)]
        exact: bool,
    },
    /// Print the normalized lexicon sorted by codepoint
    Dump {
        #[command(flatten)]
        data: Data,
    },
}

/// Exit status 2 with a message.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn resources(data: &Data, need_lexicon: bool, max_suggestions: Option<usize>) -> Result<Resources, Failure> {
    if need_lexicon && data.lexicon.is_none() {
        return Err(Failure("--lexicon is required".into()));
    }
    let mut r = Resources::load(&data.paths())?;
    if let Some(n) = max_suggestions {
        r.config.max_suggestions = n;
    }
    Ok(r)
}

fn stdin_text() -> Result<String, Failure> {
    let mut text = String::new();
    io::stdin().read_to_string(&mut text)?;
    Ok(text)
}

fn run(cli: Cli) -> Outcome {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let flagged = match cli.command {
        Command::Check { data, format, max_suggestions, normalize_only } => {
            let text = stdin_text()?;
            if normalize_only {
                for (start, end) in sindhi_spell_core::suggest::tokenize(&text) {
                    let raw = &text[start..end];
                    match normalize(raw) {
                        Ok(seq) => writeln!(out, "{start}\t{raw}\t{seq}\t{}", seq.len())?,
                        Err(e) => writeln!(out, "{start}\t{raw}\t\t{e}")?,
                    }
                }
                false
            } else {
                let res = resources(&data, true, max_suggestions)?;
                let flags = check_text(&text, &res.context(), &res.config);
                for flag in &flags {
                    render::write_flag(flag, format, &mut out)?;
                }
                !flags.is_empty()
            }
        }
        Command::Suggest { data, format, max_suggestions } => {
            let res = resources(&data, true, max_suggestions)?;
            let mut any = false;
            for line in io::stdin().lock().lines() {
                let line = line?;
                let token = line.trim();
                if token.is_empty() {
                    continue;
                }
                let flag = match normalize(token) {
                    Ok(seq) if res.lexicon.contains(&seq) => continue,
                    Ok(seq) => sindhi_spell_core::suggest::Flag {
                        start: 0,
                        end: token.len(),
                        token: token.into(),
                        suggestions: suggest(&seq, &res.context(), &res.config),
                        error: None,
                    },
                    Err(e) => sindhi_spell_core::suggest::Flag {
                        start: 0,
                        end: token.len(),
                        token: token.into(),
                        suggestions: Vec::new(),
                        error: Some(e.to_string()),
                    },
                };
                any = true;
                render::write_flag(&flag, format, &mut out)?;
            }
            any
        }
        Command::Classify { data, format } => {
            let res = resources(&data, true, None)?;
            let mut failed = false;
            for (line, raw, parsed) in read_pairs(io::stdin().lock())? {
                let mut cols = raw.splitn(3, '\t');
                let wrong = cols.next().unwrap_or("").trim();
                let intended = cols.next().unwrap_or("").trim();
                let result = parsed.map_err(|e| e.to_string()).and_then(|p| {
                    p.pair.classify(&res.lexicon, &res.tables, &res.layout).map_err(|e| e.to_string())
                });
                let classification;
                let rec = ClassRecord {
                    line,
                    wrong,
                    intended,
                    result: match result {
                        Ok(c) => {
                            classification = c;
                            ClassResult::Ok(&classification)
                        }
                        Err(error) => {
                            failed = true;
                            ClassResult::Err { error }
                        }
                    },
                };
                render::write_classification(&rec, format, &mut out)?;
            }
            failed
        }
        Command::Analyze { data, format } => {
            let res = resources(&data, true, None)?;
            let pairs = formats::load_pairs(io::stdin().lock())?;
            let corpus: Vec<_> = pairs.iter().map(|p| p.pair.clone()).collect();
            let report = analyze(&corpus, &res.lexicon, &res.tables, &res.layout).map_err(|e| match e {
                TrendError::Classify { index, error } => {
                    Failure(format!("line {}: {error}", pairs[index].line))
                }
                e => Failure(e.to_string()),
            })?;
            render::write_report(&report, format, &mut out)?;
            false
        }
        Command::Inject { data, distribution, seed, count, exact } => {
            let res = resources(&data, true, None)?;
            let dist = match Distribution::preset(&distribution) {
                Some(d) => d,
                None => {
                    let text = fs::read_to_string(&distribution)
                        .map_err(|e| Failure(format!("{distribution}: {e}")))?;
                    Distribution::parse(&text).map_err(|e| Failure(format!("{distribution}: {e}")))?
                }
            };
            let words: Vec<GraphemeSeq> = res.lexicon.words().cloned().collect();
            let injector = Injector::new(&res.alphabet, &res.tables, &res.layout);
            for inj in injector.corpus(&words, &dist, seed, count, exact)? {
                writeln!(out, "{}\t{}\t{}", inj.wrong_text(), inj.intended_text(), inj.label())?;
            }
            false
        }
        Command::Dump { data } => {
            let res = resources(&data, true, None)?;
            formats::dump_lexicon(&res.lexicon, &mut out)?;
            false
        }
    };
    out.flush()?;
    Ok(flagged)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(Failure(message)) => {
            eprintln!("sindhi-spell: {message}");
            ExitCode::from(2)
        }
    }
}
