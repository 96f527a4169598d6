//! Corpus-level error statistics.
//!
//! Percentages use the total number of errors (multiple-error pairs
//! included) as denominator. Single errors are counted once under their
//! edit kind. Categories are counted per op, so a multiple-error pair adds
//! one category count for each of its ops and category shares are taken
//! over categorized ops.

use alloc::vec::Vec;
use core::fmt;

use crate::classify::{
    classify_boundary, classify_pair, Category, ClassifyError, ErrorClassification, LengthClass,
    Locus, Multiplicity, PositionClass, Wordness,
};
use crate::confusion::ConfusionTable;
use crate::edit::EditKind;
use crate::keyboard::KeyboardLayout;
use crate::lexicon::Lexicon;
use crate::script::GraphemeSeq;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TrendReport {
    pub total_errors: u64,
    pub transposition: u64,
    pub insertion: u64,
    pub deletion: u64,
    pub substitution: u64,
    pub single_error_total: u64,
    pub multiple_error: u64,
    pub boundary_errors: u64,
    pub short_word_errors: u64,
    pub first_char_errors: u64,
    pub real_word_errors: u64,
    pub typographic: u64,
    pub phonetic: u64,
    pub visual: u64,
    pub space_related: u64,
}

/// A count relative to the corpus total.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Share {
    pub count: u64,
    pub total: u64,
}

impl Share {
    /// Exact ratio in `[0, 1]`; 0 for an empty total.
    pub fn ratio(self) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        self.count as f64 / self.total as f64
    }

    /// Percentage in tenths of a percent, rounded half up.
    pub fn tenths(self) -> u64 {
        if self.total == 0 {
            return 0;
        }
        let (c, t) = (self.count as u128, self.total as u128);
        ((c * 2000 + t) / (2 * t)) as u64
    }
}

/// One decimal place, e.g. `40.0`.
impl fmt::Display for Share {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.tenths();
        write!(f, "{}.{}", t / 10, t % 10)
    }
}

impl TrendReport {
    pub fn add(&mut self, c: &ErrorClassification) {
        self.total_errors += 1;
        match (c.multiplicity, c.kind) {
            (Multiplicity::Single, Some(kind)) => {
                self.single_error_total += 1;
                *self.kind_mut(kind) += 1;
            }
            _ => self.multiple_error += 1,
        }
        self.boundary_errors += u64::from(c.locus == Locus::WordBoundary);
        self.short_word_errors += u64::from(c.word_length_class == LengthClass::Short);
        self.first_char_errors += u64::from(c.position_class == PositionClass::FirstChar);
        self.real_word_errors += u64::from(c.wordness == Wordness::RealWord);
        for cat in &c.op_categories {
            *self.category_mut(*cat) += 1;
        }
    }

    /// Adds the counts of `other`.
    pub fn merge(&mut self, other: &TrendReport) {
        self.total_errors += other.total_errors;
        self.transposition += other.transposition;
        self.insertion += other.insertion;
        self.deletion += other.deletion;
        self.substitution += other.substitution;
        self.single_error_total += other.single_error_total;
        self.multiple_error += other.multiple_error;
        self.boundary_errors += other.boundary_errors;
        self.short_word_errors += other.short_word_errors;
        self.first_char_errors += other.first_char_errors;
        self.real_word_errors += other.real_word_errors;
        self.typographic += other.typographic;
        self.phonetic += other.phonetic;
        self.visual += other.visual;
        self.space_related += other.space_related;
    }

    fn kind_mut(&mut self, kind: EditKind) -> &mut u64 {
        match kind {
            EditKind::Transposition => &mut self.transposition,
            EditKind::Insertion => &mut self.insertion,
            EditKind::Deletion => &mut self.deletion,
            EditKind::Substitution => &mut self.substitution,
        }
    }

    fn category_mut(&mut self, cat: Category) -> &mut u64 {
        match cat {
            Category::Typographic => &mut self.typographic,
            Category::Phonetic => &mut self.phonetic,
            Category::Visual => &mut self.visual,
            Category::SpaceRelated => &mut self.space_related,
        }
    }

    pub fn kind_count(&self, kind: EditKind) -> u64 {
        match kind {
            EditKind::Transposition => self.transposition,
            EditKind::Insertion => self.insertion,
            EditKind::Deletion => self.deletion,
            EditKind::Substitution => self.substitution,
        }
    }

    pub fn category_count(&self, cat: Category) -> u64 {
        match cat {
            Category::Typographic => self.typographic,
            Category::Phonetic => self.phonetic,
            Category::Visual => self.visual,
            Category::SpaceRelated => self.space_related,
        }
    }

    pub fn share(&self, count: u64) -> Share {
        Share { count, total: self.total_errors }
    }

    /// Ops carrying a category; multiple-error pairs add one per op.
    pub fn categorized_ops(&self) -> u64 {
        self.typographic + self.phonetic + self.visual + self.space_related
    }

    /// Category count over [`Self::categorized_ops`].
    pub fn category_share(&self, cat: Category) -> Share {
        Share { count: self.category_count(cat), total: self.categorized_ops() }
    }

    pub fn kind_share(&self, kind: EditKind) -> Share {
        self.share(self.kind_count(kind))
    }

    /// Kind rows in table order: transposition, insertion, deletion,
    /// substitution.
    pub const KIND_ORDER: [EditKind; 4] =
        [EditKind::Transposition, EditKind::Insertion, EditKind::Deletion, EditKind::Substitution];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrendError {
    EmptyCorpus,
    /// Pair `index` (0-based) could not be classified.
    Classify { index: usize, error: ClassifyError },
}

impl fmt::Display for TrendError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrendError::EmptyCorpus => f.write_str("empty corpus: no pairs to analyze"),
            TrendError::Classify { index, error } => write!(f, "pair {}: {error}", index + 1),
        }
    }
}

/// A (wrong, intended) pair; each side is one word or a span of words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusPair {
    pub wrong: Vec<GraphemeSeq>,
    pub intended: Vec<GraphemeSeq>,
}

impl CorpusPair {
    pub fn word(wrong: GraphemeSeq, intended: GraphemeSeq) -> Self {
        CorpusPair { wrong: alloc::vec![wrong], intended: alloc::vec![intended] }
    }

    /// Single words go to the within-word classifier; anything else is
    /// treated as a boundary error.
    pub fn classify(
        &self,
        lexicon: &Lexicon,
        tables: &ConfusionTable,
        layout: &KeyboardLayout,
    ) -> Result<ErrorClassification, ClassifyError> {
        match (self.wrong.as_slice(), self.intended.as_slice()) {
            ([w], [i]) => classify_pair(w, i, lexicon, tables, layout),
            (w, i) => {
                for word in i {
                    if !lexicon.contains(word) {
                        return Err(ClassifyError::UnknownIntended(word.as_str().into()));
                    }
                }
                classify_boundary(w, i, lexicon, tables, layout)
            }
        }
    }
}

/// Classifies and aggregates a pair corpus.
pub fn analyze(
    pairs: &[CorpusPair],
    lexicon: &Lexicon,
    tables: &ConfusionTable,
    layout: &KeyboardLayout,
) -> Result<TrendReport, TrendError> {
    if pairs.is_empty() {
        return Err(TrendError::EmptyCorpus);
    }
    let mut report = TrendReport::default();
    for (index, pair) in pairs.iter().enumerate() {
        let c = pair
            .classify(lexicon, tables, layout)
            .map_err(|error| TrendError::Classify { index, error })?;
        report.add(&c);
    }
    Ok(report)
}

/// Aggregates already-classified records.
pub fn analyze_records<'a, I>(records: I) -> Result<TrendReport, TrendError>
where
    I: IntoIterator<Item = &'a ErrorClassification>,
{
    let mut report = TrendReport::default();
    for r in records {
        report.add(r);
    }
    if report.total_errors == 0 {
        return Err(TrendError::EmptyCorpus);
    }
    Ok(report)
}
