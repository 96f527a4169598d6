//! Text file formats: lexicons, ranking configs and pair corpora.

use std::io::{self, BufRead, Write};

use sindhi_spell_core::trends::CorpusPair;
use sindhi_spell_core::{normalize, GraphemeSeq, Lexicon, RankingConfig};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn at(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Line { line, message: message.into() }
}

/// Strips a trailing `\r` and reports whether the line is blank or a comment.
fn content(raw: &str) -> Option<&str> {
    let line = raw.strip_suffix('\r').unwrap_or(raw);
    if line.trim().is_empty() || line.starts_with('#') {
        None
    } else {
        Some(line)
    }
}

/// One word per line, optionally followed by a TAB and a decimal frequency.
/// Blank lines and lines starting with `#` are skipped.
pub fn load_lexicon<R: BufRead>(reader: R) -> Result<Lexicon, FormatError> {
    let mut builder = Lexicon::builder();
    for (i, raw) in reader.lines().enumerate() {
        let raw = raw?;
        let Some(line) = content(&raw) else { continue };
        let n = i + 1;
        let (word, freq) = match line.split_once('\t') {
            Some((w, f)) => {
                let f = f.trim();
                let freq: u64 = f
                    .parse()
                    .map_err(|_| at(n, format!("malformed frequency `{f}`")))?;
                (w, freq)
            }
            None => (line, 0),
        };
        let word = normalize(word).map_err(|e| at(n, e.to_string()))?;
        if word.is_empty() {
            return Err(at(n, "empty word"));
        }
        builder.insert(word, freq);
    }
    Ok(builder.build())
}

/// Writes `lexicon` in the load format, sorted by codepoint. Zero
/// frequencies are omitted.
pub fn dump_lexicon<W: Write>(lexicon: &Lexicon, mut out: W) -> io::Result<()> {
    for (word, freq) in lexicon.iter() {
        if freq == 0 {
            writeln!(out, "{word}")?;
        } else {
            writeln!(out, "{word}\t{freq}")?;
        }
    }
    Ok(())
}

/// Flat `key = value` config over the defaults.
pub fn parse_config(text: &str) -> Result<RankingConfig, FormatError> {
    let mut c = RankingConfig::default();
    for (i, raw) in text.lines().enumerate() {
        let Some(line) = content(raw) else { continue };
        let n = i + 1;
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| at(n, "expected `key = value`"))?;
        let (key, value) = (key.trim(), value.trim());
        let real = || value.parse::<f64>().map_err(|_| at(n, format!("bad number `{value}` for {key}")));
        let count = || value.parse::<usize>().map_err(|_| at(n, format!("bad integer `{value}` for {key}")));
        match key {
            "weight.deletion" => c.weight_deletion = real()?,
            "weight.insertion" => c.weight_insertion = real()?,
            "weight.substitution" => c.weight_substitution = real()?,
            "weight.transposition" => c.weight_transposition = real()?,
            "multiplier.phonetic" => c.multiplier_phonetic = real()?,
            "multiplier.visual" => c.multiplier_visual = real()?,
            "multiplier.keyboard" => c.multiplier_keyboard = real()?,
            "multiplier.plain" => c.multiplier_plain = real()?,
            "frequency_exponent" => c.frequency_exponent = real()?,
            "max_distance" => c.max_distance = count()?,
            "max_suggestions" => c.max_suggestions = count()?,
            _ => return Err(at(n, format!("unknown key `{key}`"))),
        }
    }
    c.validate().map_err(|e| FormatError::Invalid(e.to_string()))?;
    Ok(c)
}

/// A parsed pair-corpus line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairLine {
    pub line: usize,
    pub wrong: String,
    pub intended: String,
    pub pair: CorpusPair,
    pub label: Option<String>,
}

fn span(column: &str, line: usize) -> Result<Vec<GraphemeSeq>, FormatError> {
    let words: Vec<GraphemeSeq> = column
        .split_whitespace()
        .map(|w| normalize(w).map_err(|e| at(line, e.to_string())))
        .collect::<Result<_, _>>()?;
    if words.is_empty() {
        return Err(at(line, "empty column"));
    }
    Ok(words)
}

/// Parses one corpus line: `wrong TAB intended [TAB label]`. A column with
/// spaces is a span of words (boundary errors).
pub fn parse_pair_line(raw: &str, line: usize) -> Result<Option<PairLine>, FormatError> {
    let Some(text) = content(raw) else { return Ok(None) };
    let cols: Vec<&str> = text.split('\t').collect();
    if !(2..=3).contains(&cols.len()) {
        return Err(at(line, format!("expected 2 or 3 TAB-separated columns, found {}", cols.len())));
    }
    let pair = CorpusPair { wrong: span(cols[0], line)?, intended: span(cols[1], line)? };
    Ok(Some(PairLine {
        line,
        wrong: cols[0].trim().to_string(),
        intended: cols[1].trim().to_string(),
        pair,
        label: cols.get(2).map(|s| s.trim().to_string()).filter(|s| !s.is_empty()),
    }))
}

/// Line number, raw text and parse result of a corpus line.
pub type RawPair = (usize, String, Result<PairLine, FormatError>);

/// Every non-blank corpus line, with per-line parse results.
pub fn read_pairs<R: BufRead>(reader: R) -> io::Result<Vec<RawPair>> {
    let mut out = Vec::new();
    for (i, raw) in reader.lines().enumerate() {
        let raw = raw?;
        match parse_pair_line(&raw, i + 1) {
            Ok(None) => {}
            Ok(Some(p)) => out.push((i + 1, raw, Ok(p))),
            Err(e) => out.push((i + 1, raw, Err(e))),
        }
    }
    Ok(out)
}

/// Parses a whole corpus, failing on the first bad line.
pub fn load_pairs<R: BufRead>(reader: R) -> Result<Vec<PairLine>, FormatError> {
    read_pairs(reader)?.into_iter().map(|(_, _, p)| p).collect()
}
