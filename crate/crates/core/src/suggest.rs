//! Suggestion ranking and free-text checking.
//!
//! A candidate reached by edit script `s` from the flagged token scores
//!
//! ```text
//! score = mean(weight(op) for op in s) / |s| · (frequency + 1) ^ exponent
//! weight(op) = base(kind) · multiplier(cues)
//! ```
//!
//! where the multiplier is the largest of the phonetic, visual and keyboard
//! multipliers whose cue fires, or the plain multiplier when none does. For
//! single edits this is `base · multiplier · (frequency + 1) ^ exponent`.
//! Scores are homogeneous in the weights, so scaling every weight by the
//! same factor never reorders suggestions.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use unicode_general_category::{get_general_category, GeneralCategory};

use crate::alphabet::Alphabet;
use crate::boundary::{repair_runon, repair_split, smoothed};
use crate::classify::{cues_for, Category};
use crate::confusion::ConfusionTable;
use crate::edit::{generate_candidates, EditKind, EditOp};
use crate::keyboard::KeyboardLayout;
use crate::lexicon::Lexicon;
use crate::script::{normalize, GraphemeSeq, NormalizeError, SPACE};

#[derive(Debug, Clone, PartialEq)]
pub struct RankingConfig {
    pub weight_deletion: f64,
    pub weight_insertion: f64,
    pub weight_substitution: f64,
    pub weight_transposition: f64,
    pub multiplier_phonetic: f64,
    pub multiplier_visual: f64,
    pub multiplier_keyboard: f64,
    /// Multiplier for ops with no confusion or keyboard cue.
    pub multiplier_plain: f64,
    pub frequency_exponent: f64,
    pub max_distance: usize,
    pub max_suggestions: usize,
}

impl Default for RankingConfig {
    fn default() -> Self {
        RankingConfig {
            weight_deletion: 1.0,
            weight_insertion: 0.9,
            weight_substitution: 1.0,
            weight_transposition: 0.9,
            multiplier_phonetic: 2.0,
            multiplier_visual: 1.7,
            multiplier_keyboard: 1.4,
            multiplier_plain: 1.0,
            frequency_exponent: 0.5,
            max_distance: 1,
            max_suggestions: 10,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConfigError {
    NonPositiveWeight(&'static str),
    MultiplierBelowOne(&'static str),
    BadExponent,
    BadDistance(usize),
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::NonPositiveWeight(k) => write!(f, "{k} must be > 0"),
            ConfigError::MultiplierBelowOne(k) => write!(f, "{k} must be >= 1"),
            ConfigError::BadExponent => f.write_str("frequency_exponent must be finite and >= 0"),
            ConfigError::BadDistance(d) => write!(f, "max_distance must be 1 or 2, got {d}"),
        }
    }
}

impl RankingConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let weights = [
            ("weight.deletion", self.weight_deletion),
            ("weight.insertion", self.weight_insertion),
            ("weight.substitution", self.weight_substitution),
            ("weight.transposition", self.weight_transposition),
        ];
        for (name, w) in weights {
            if !(w > 0.0 && w.is_finite()) {
                return Err(ConfigError::NonPositiveWeight(name));
            }
        }
        let multipliers = [
            ("multiplier.phonetic", self.multiplier_phonetic),
            ("multiplier.visual", self.multiplier_visual),
            ("multiplier.keyboard", self.multiplier_keyboard),
            ("multiplier.plain", self.multiplier_plain),
        ];
        for (name, m) in multipliers {
            if !(m >= 1.0 && m.is_finite()) {
                return Err(ConfigError::MultiplierBelowOne(name));
            }
        }
        if !(self.frequency_exponent >= 0.0 && self.frequency_exponent.is_finite()) {
            return Err(ConfigError::BadExponent);
        }
        if !(1..=2).contains(&self.max_distance) {
            return Err(ConfigError::BadDistance(self.max_distance));
        }
        Ok(())
    }

    /// Copy with every weight and multiplier multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> RankingConfig {
        RankingConfig {
            weight_deletion: self.weight_deletion * factor,
            weight_insertion: self.weight_insertion * factor,
            weight_substitution: self.weight_substitution * factor,
            weight_transposition: self.weight_transposition * factor,
            multiplier_phonetic: self.multiplier_phonetic * factor,
            multiplier_visual: self.multiplier_visual * factor,
            multiplier_keyboard: self.multiplier_keyboard * factor,
            multiplier_plain: self.multiplier_plain * factor,
            ..self.clone()
        }
    }

    pub fn base_weight(&self, kind: EditKind) -> f64 {
        match kind {
            EditKind::Deletion => self.weight_deletion,
            EditKind::Insertion => self.weight_insertion,
            EditKind::Substitution => self.weight_substitution,
            EditKind::Transposition => self.weight_transposition,
        }
    }
}

/// Read-only resources shared by every check.
#[derive(Debug, Clone, Copy)]
pub struct SpellContext<'a> {
    pub lexicon: &'a Lexicon,
    pub alphabet: &'a Alphabet,
    pub tables: &'a ConfusionTable,
    pub layout: &'a KeyboardLayout,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Source {
    EditModel,
    Boundary,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Suggestion {
    /// One word, or two for a run-on repair.
    pub words: Vec<GraphemeSeq>,
    pub score: f64,
    /// Script turning the suggestion (words joined by single spaces) into
    /// the flagged text.
    pub script: Vec<EditOp>,
    pub source: Source,
}

impl Suggestion {
    /// The suggestion as text, words separated by spaces.
    pub fn text(&self) -> String {
        GraphemeSeq::join_words(&self.words).into_string()
    }
}

fn op_weight(op: &EditOp, ctx: &SpellContext<'_>, config: &RankingConfig) -> f64 {
    let base = config.base_weight(op.kind());
    let cues = cues_for(op, ctx.tables, ctx.layout);
    let mut multiplier: Option<f64> = None;
    let mut take = |m: f64| multiplier = Some(multiplier.map_or(m, |x: f64| x.max(m)));
    if cues.contains(Category::Phonetic) {
        take(config.multiplier_phonetic);
    }
    if cues.contains(Category::Visual) {
        take(config.multiplier_visual);
    }
    if let EditOp::Substitution { from, to, .. } = op {
        if let (Some(a), Some(b)) = (from.chars().next(), to.chars().next()) {
            if ctx.layout.keyboard_adjacent(a, b) {
                take(config.multiplier_keyboard);
            }
        }
    }
    base * multiplier.unwrap_or(config.multiplier_plain)
}

/// Score of a script leading to a word of the given frequency.
pub fn score_script(
    script: &[EditOp],
    frequency: u64,
    ctx: &SpellContext<'_>,
    config: &RankingConfig,
) -> f64 {
    let prior = libm::pow(frequency as f64 + 1.0, config.frequency_exponent);
    if script.is_empty() {
        return prior;
    }
    let k = script.len() as f64;
    let total: f64 = script.iter().map(|op| op_weight(op, ctx, config)).sum();
    total / (k * k) * prior
}

fn rank(mut list: Vec<Suggestion>, limit: usize) -> Vec<Suggestion> {
    list.sort_by(|a, b| {
        b.score
            .partial_cmp(&a.score)
            .unwrap_or(Ordering::Equal)
            .then_with(|| a.text().cmp(&b.text()))
    });
    list.dedup_by(|later, earlier| later.text() == earlier.text());
    list.truncate(limit);
    list
}

/// Ranked corrections for one token; empty when the token is a word.
pub fn suggest(token: &GraphemeSeq, ctx: &SpellContext<'_>, config: &RankingConfig) -> Vec<Suggestion> {
    if token.is_empty() || ctx.lexicon.contains(token) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for cand in generate_candidates(token, ctx.lexicon, ctx.alphabet, config.max_distance) {
        let freq = ctx.lexicon.frequency(&cand.word);
        out.push(Suggestion {
            score: score_script(&cand.script, freq, ctx, config),
            words: vec![cand.word],
            script: cand.script,
            source: Source::EditModel,
        });
    }
    for (left, right) in repair_runon(token, ctx.lexicon) {
        let script = vec![EditOp::Deletion { position: left.len(), letter: SPACE.into() }];
        let freq = smoothed(ctx.lexicon, &left).min(smoothed(ctx.lexicon, &right)) - 1;
        out.push(Suggestion {
            score: score_script(&script, freq, ctx, config),
            words: vec![left, right],
            script,
            source: Source::Boundary,
        });
    }
    rank(out, config.max_suggestions)
}

/// A flagged stretch of checked text.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Flag {
    /// Byte range in the checked text.
    pub start: usize,
    pub end: usize,
    pub token: String,
    pub suggestions: Vec<Suggestion>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub error: Option<String>,
}

/// True for characters that separate tokens.
pub fn is_separator(ch: char) -> bool {
    use GeneralCategory::*;
    ch.is_whitespace()
        || matches!(
            get_general_category(ch),
            ConnectorPunctuation
                | DashPunctuation
                | OpenPunctuation
                | ClosePunctuation
                | InitialPunctuation
                | FinalPunctuation
                | OtherPunctuation
        )
}

/// Byte ranges of the tokens of `text`.
pub fn tokenize(text: &str) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        match (is_separator(ch), start) {
            (true, Some(s)) => {
                out.push((s, i));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, text.len()));
    }
    out
}

enum Token<'t> {
    Word { start: usize, end: usize, raw: &'t str, seq: GraphemeSeq, known: bool },
    Skip,
    Invalid { start: usize, end: usize, raw: &'t str, error: NormalizeError },
}

/// Flags every token that is not a lexicon word. Two neighbouring tokens
/// separated only by whitespace are reported together when joining them
/// gives a word and at least one of them is not a word.
pub fn check_text(text: &str, ctx: &SpellContext<'_>, config: &RankingConfig) -> Vec<Flag> {
    let tokens: Vec<Token<'_>> = tokenize(text)
        .into_iter()
        .map(|(start, end)| {
            let raw = &text[start..end];
            if !raw.chars().any(char::is_alphabetic) {
                return Token::Skip;
            }
            match normalize(raw) {
                Ok(seq) => {
                    let known = ctx.lexicon.contains(&seq);
                    Token::Word { start, end, raw, seq, known }
                }
                Err(error) => Token::Invalid { start, end, raw, error },
            }
        })
        .collect();

    let mut flags = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        match &tokens[i] {
            Token::Skip => {}
            Token::Invalid { start, end, raw, error } => flags.push(Flag {
                start: *start,
                end: *end,
                token: (*raw).into(),
                suggestions: Vec::new(),
                error: Some(alloc::format!("{error}")),
            }),
            Token::Word { start, end, raw, seq, known } => {
                if let Some(Token::Word { start: s2, end: e2, seq: seq2, known: known2, .. }) =
                    tokens.get(i + 1)
                {
                    let gap_is_space = text[*end..*s2].chars().all(char::is_whitespace);
                    if gap_is_space && !(*known && *known2) {
                        if let Ok(Some(merged)) = repair_split(seq, seq2, ctx.lexicon) {
                            let script =
                                vec![EditOp::Insertion { position: seq.len(), letter: SPACE.into() }];
                            let freq = ctx.lexicon.frequency(&merged);
                            flags.push(Flag {
                                start: *start,
                                end: *e2,
                                token: text[*start..*e2].into(),
                                suggestions: vec![Suggestion {
                                    score: score_script(&script, freq, ctx, config),
                                    words: vec![merged],
                                    script,
                                    source: Source::Boundary,
                                }],
                                error: None,
                            });
                            i += 2;
                            continue;
                        }
                    }
                }
                if !*known {
                    flags.push(Flag {
                        start: *start,
                        end: *end,
                        token: (*raw).into(),
                        suggestions: suggest(seq, ctx, config),
                        error: None,
                    });
                }
            }
        }
        i += 1;
    }
    flags
}
