//! Error taxonomy for (wrong, intended) pairs.
//!
//! Every pair is labelled along six axes: single vs multiple error, short vs
//! long word, first vs nth character, within-word vs boundary, non-word vs
//! real-word, plus one of four error categories.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::boundary::BoundaryKind;
use crate::confusion::ConfusionTable;
use crate::edit::{diagnose, EditKind, EditOp};
use crate::keyboard::KeyboardLayout;
use crate::lexicon::Lexicon;
use crate::script::{cluster_letter, GraphemeSeq, SPACE};

/// Words of at most this many clusters are short.
pub const SHORT_WORD_MAX: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Multiplicity {
    Single,
    Multiple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum LengthClass {
    Short,
    Long,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum PositionClass {
    FirstChar,
    NthChar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Locus {
    WithinWord,
    WordBoundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Wordness {
    NonWord,
    RealWord,
}

/// Error categories, highest precedence first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Category {
    Phonetic,
    Visual,
    SpaceRelated,
    Typographic,
}

impl Category {
    pub const ALL: [Category; 4] =
        [Category::Phonetic, Category::Visual, Category::SpaceRelated, Category::Typographic];

    pub fn name(self) -> &'static str {
        match self {
            Category::Phonetic => "phonetic",
            Category::Visual => "visual",
            Category::SpaceRelated => "space_related",
            Category::Typographic => "typographic",
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Set of category cues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct CueSet(u8);

impl CueSet {
    pub fn insert(&mut self, c: Category) {
        self.0 |= c.bit();
    }

    pub fn contains(self, c: Category) -> bool {
        self.0 & c.bit() != 0
    }

    pub fn union(self, other: CueSet) -> CueSet {
        CueSet(self.0 | other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Members in precedence order.
    pub fn iter(self) -> impl Iterator<Item = Category> {
        Category::ALL.into_iter().filter(move |c| self.contains(*c))
    }

    /// Highest-precedence member.
    pub fn top(self) -> Option<Category> {
        self.iter().next()
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for CueSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for CueSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let cats: Vec<Category> = Vec::deserialize(d)?;
        let mut set = CueSet::default();
        for c in cats {
            set.insert(c);
        }
        Ok(set)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ErrorClassification {
    pub edit_script: Vec<EditOp>,
    /// Kind of the single error; `None` for multiple errors.
    pub kind: Option<EditKind>,
    /// Set for word-boundary errors.
    pub boundary: Option<BoundaryKind>,
    pub multiplicity: Multiplicity,
    pub word_length_class: LengthClass,
    pub position_class: PositionClass,
    pub locus: Locus,
    pub wordness: Wordness,
    pub category: Category,
    pub cue_labels: CueSet,
    /// Category of each op of the script, in order.
    pub op_categories: Vec<Category>,
    /// Some substitution swaps letters on neighbouring keys.
    pub keyboard_adjacent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    Identical,
    UnknownIntended(String),
    /// Boundary spans that differ in more than their spaces.
    NotBoundary,
    EmptySpan,
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::Identical => f.write_str("wrong and intended forms are identical"),
            ClassifyError::UnknownIntended(w) => write!(f, "intended word `{w}` is not in the lexicon"),
            ClassifyError::NotBoundary => f.write_str("spans differ in more than space placement"),
            ClassifyError::EmptySpan => f.write_str("empty span"),
        }
    }
}

struct OpCues {
    cues: CueSet,
    keyboard: bool,
}

fn op_cues(op: &EditOp, tables: &ConfusionTable, layout: &KeyboardLayout) -> OpCues {
    let mut cues = CueSet::default();
    let mut keyboard = false;
    if op.letters().contains(&SPACE) {
        cues.insert(Category::SpaceRelated);
        return OpCues { cues, keyboard };
    }
    if let EditOp::Substitution { from, to, .. } = op {
        if let (Some(a), Some(b)) = (cluster_letter(from), cluster_letter(to)) {
            let ga = tables.phonetic_group(a);
            if ga.is_some() && ga == tables.phonetic_group(b) {
                cues.insert(Category::Phonetic);
            }
            if tables.visually_similar(a, b) {
                cues.insert(Category::Visual);
            }
            keyboard = layout.keyboard_adjacent(a, b);
        }
    }
    if keyboard || cues.is_empty() {
        cues.insert(Category::Typographic);
    }
    OpCues { cues, keyboard }
}

/// Category cues of a single op.
pub fn cues_for(op: &EditOp, tables: &ConfusionTable, layout: &KeyboardLayout) -> CueSet {
    op_cues(op, tables, layout).cues
}

fn build(
    script: Vec<EditOp>,
    intended_len: usize,
    wordness: Wordness,
    locus: Locus,
    boundary: Option<BoundaryKind>,
    tables: &ConfusionTable,
    layout: &KeyboardLayout,
) -> ErrorClassification {
    let mut cue_labels = CueSet::default();
    let mut op_categories = Vec::with_capacity(script.len());
    let mut keyboard_adjacent = false;
    for op in &script {
        let c = op_cues(op, tables, layout);
        cue_labels = cue_labels.union(c.cues);
        keyboard_adjacent |= c.keyboard;
        op_categories.push(c.cues.top().unwrap_or(Category::Typographic));
    }
    let multiplicity = if script.len() == 1 { Multiplicity::Single } else { Multiplicity::Multiple };
    let kind = match multiplicity {
        Multiplicity::Single => Some(script[0].kind()),
        Multiplicity::Multiple => None,
    };
    ErrorClassification {
        kind,
        boundary,
        multiplicity,
        word_length_class: if intended_len <= SHORT_WORD_MAX {
            LengthClass::Short
        } else {
            LengthClass::Long
        },
        position_class: if script.iter().any(EditOp::touches_first) {
            PositionClass::FirstChar
        } else {
            PositionClass::NthChar
        },
        locus,
        wordness,
        category: cue_labels.top().unwrap_or(Category::Typographic),
        cue_labels,
        op_categories,
        keyboard_adjacent,
        edit_script: script,
    }
}

/// Classifies a within-word misspelling.
pub fn classify_pair(
    wrong: &GraphemeSeq,
    intended: &GraphemeSeq,
    lexicon: &Lexicon,
    tables: &ConfusionTable,
    layout: &KeyboardLayout,
) -> Result<ErrorClassification, ClassifyError> {
    if wrong == intended {
        return Err(ClassifyError::Identical);
    }
    if !lexicon.contains(intended) {
        return Err(ClassifyError::UnknownIntended(intended.to_string()));
    }
    let script = diagnose(wrong, intended);
    let wordness = if lexicon.contains(wrong) { Wordness::RealWord } else { Wordness::NonWord };
    Ok(build(script, intended.len(), wordness, Locus::WithinWord, None, tables, layout))
}

/// Classifies spans that differ only in where (or whether) spaces occur.
///
/// The edit script is computed over the spans joined with single spaces,
/// so a run-on is a deleted space, an incorrect split an inserted space, and
/// a space moved by one letter a transposition.
pub fn classify_boundary(
    wrong_span: &[GraphemeSeq],
    intended_span: &[GraphemeSeq],
    lexicon: &Lexicon,
    tables: &ConfusionTable,
    layout: &KeyboardLayout,
) -> Result<ErrorClassification, ClassifyError> {
    if wrong_span.is_empty() || intended_span.is_empty() {
        return Err(ClassifyError::EmptySpan);
    }
    let flat = |span: &[GraphemeSeq]| -> String { span.iter().map(GraphemeSeq::as_str).collect() };
    if flat(wrong_span) != flat(intended_span) {
        return Err(ClassifyError::NotBoundary);
    }
    let wrong = GraphemeSeq::join_words(wrong_span);
    let intended = GraphemeSeq::join_words(intended_span);
    if wrong == intended {
        return Err(ClassifyError::Identical);
    }
    let boundary = match wrong_span.len().cmp(&intended_span.len()) {
        core::cmp::Ordering::Less => BoundaryKind::RunOn,
        core::cmp::Ordering::Greater => BoundaryKind::IncorrectSplit,
        core::cmp::Ordering::Equal => BoundaryKind::SpaceShift,
    };
    let script = diagnose(&wrong, &intended);
    let wordness = if wrong_span.iter().all(|w| lexicon.contains(w)) {
        Wordness::RealWord
    } else {
        Wordness::NonWord
    };
    let letters: usize = intended_span.iter().map(GraphemeSeq::len).sum();
    Ok(build(script, letters, wordness, Locus::WordBoundary, Some(boundary), tables, layout))
}
