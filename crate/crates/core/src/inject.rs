//! Seeded synthetic error injection.
//!
//! The generator is xoshiro256++ seeded from a `u64` through SplitMix64.
//! Uniform integers below `n` use rejection sampling on the full 64-bit
//! output, and uniform reals take the top 53 bits. With seed 0 the first
//! three raw outputs are
//!
//! ```text
//! 0x53175d61490b23df 0x61da6f3dc380d507 0x5c0fdf91ec9a7bfc
//! ```
//!
//! Injection of a given kind picks uniformly among the positions where that
//! kind is possible, so it only fails when the word admits no such error.
//! Corpus generation retries with a fresh word up to [`MAX_ATTEMPTS`] times
//! before giving up on an item.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::alphabet::Alphabet;
use crate::confusion::ConfusionTable;
use crate::edit::{apply, damerau_distance, EditKind, EditOp};
use crate::keyboard::KeyboardLayout;
use crate::script::{cluster_letter, GraphemeSeq, SPACE};

/// Resampling bound for corpus items.
pub const MAX_ATTEMPTS: usize = 16;

#[derive(Debug, Clone)]
pub struct SeededRng(Xoshiro256PlusPlus);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(Xoshiro256PlusPlus::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `0..n`.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "empty range");
        let n = n as u64;
        // 2^64 mod n
        let excess = (u64::MAX % n + 1) % n;
        let limit = 0u64.wrapping_sub(excess);
        loop {
            let x = self.next_u64();
            if excess == 0 || x < limit {
                return (x % n) as usize;
            }
        }
    }

    /// Uniform real in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len())]
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum InjectKind {
    Insertion,
    Deletion,
    Substitution,
    Transposition,
    /// Substitution within a phonetic group.
    Phonetic,
    /// Substitution within a visual group.
    Visual,
    /// Substitution by a neighbouring key.
    Keyboard,
    /// A space inserted inside a word.
    Split,
    /// The space between two words dropped.
    RunOn,
    /// The space between two words moved by one letter.
    Shift,
    /// Two independent letter edits.
    Multiple,
}

impl InjectKind {
    pub const ALL: [InjectKind; 11] = [
        InjectKind::Insertion,
        InjectKind::Deletion,
        InjectKind::Substitution,
        InjectKind::Transposition,
        InjectKind::Phonetic,
        InjectKind::Visual,
        InjectKind::Keyboard,
        InjectKind::Split,
        InjectKind::RunOn,
        InjectKind::Shift,
        InjectKind::Multiple,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InjectKind::Insertion => "insertion",
            InjectKind::Deletion => "deletion",
            InjectKind::Substitution => "substitution",
            InjectKind::Transposition => "transposition",
            InjectKind::Phonetic => "phonetic",
            InjectKind::Visual => "visual",
            InjectKind::Keyboard => "keyboard",
            InjectKind::Split => "split",
            InjectKind::RunOn => "runon",
            InjectKind::Shift => "shift",
            InjectKind::Multiple => "multiple",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        InjectKind::ALL.into_iter().find(|k| k.name() == name)
    }

    /// The edit kind the classifier should report, `None` for multiple.
    pub fn edit_kind(self) -> Option<EditKind> {
        match self {
            InjectKind::Insertion | InjectKind::Split => Some(EditKind::Insertion),
            InjectKind::Deletion | InjectKind::RunOn => Some(EditKind::Deletion),
            InjectKind::Substitution
            | InjectKind::Phonetic
            | InjectKind::Visual
            | InjectKind::Keyboard => Some(EditKind::Substitution),
            InjectKind::Transposition | InjectKind::Shift => Some(EditKind::Transposition),
            InjectKind::Multiple => None,
        }
    }

    /// Kinds that take two words.
    pub fn is_two_word(self) -> bool {
        matches!(self, InjectKind::RunOn | InjectKind::Shift)
    }
}

impl fmt::Display for InjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InjectError {
    TooShort { kind: InjectKind, len: usize },
    /// No position of the word admits the kind (no group partner, no
    /// neighbouring key, only equal neighbours to swap).
    NoCandidate(InjectKind),
    PositionOutOfRange { position: usize, len: usize },
    /// Run-on and shift errors need two words.
    NeedsTwoWords(InjectKind),
    EmptyWordList,
    /// Every attempt failed for a corpus item.
    Unsatisfiable(InjectKind),
}

impl fmt::Display for InjectError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InjectError::TooShort { kind, len } => {
                write!(f, "a {len}-cluster word is too short for a {kind} error")
            }
            InjectError::NoCandidate(kind) => write!(f, "no position admits a {kind} error"),
            InjectError::PositionOutOfRange { position, len } => {
                write!(f, "position {position} out of range for length {len}")
            }
            InjectError::NeedsTwoWords(kind) => write!(f, "{kind} errors need two words"),
            InjectError::EmptyWordList => f.write_str("empty word list"),
            InjectError::Unsatisfiable(kind) => {
                write!(f, "no sampled word admits a {kind} error after {MAX_ATTEMPTS} attempts")
            }
        }
    }
}

/// One injected error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Injection {
    pub wrong: Vec<GraphemeSeq>,
    pub intended: Vec<GraphemeSeq>,
    pub kind: InjectKind,
    /// Ops applied to the intended span (words joined by single spaces),
    /// each relative to the result of the previous one.
    pub ops: Vec<EditOp>,
    /// Another single op yields the same wrong form (a repeated letter next
    /// to the edit), or a confusion-kind substitution also fires a cue of
    /// higher precedence.
    pub ambiguous: bool,
}

impl Injection {
    /// `kind@position` for single errors, `multiple` otherwise.
    pub fn label(&self) -> String {
        match self.ops.as_slice() {
            [op] => alloc::format!("{}@{}", self.kind, op.position()),
            _ => self.kind.name().to_string(),
        }
    }

    pub fn wrong_text(&self) -> String {
        GraphemeSeq::join_words(&self.wrong).into_string()
    }

    pub fn intended_text(&self) -> String {
        GraphemeSeq::join_words(&self.intended).into_string()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Injector<'a> {
    pub alphabet: &'a Alphabet,
    pub tables: &'a ConfusionTable,
    pub layout: &'a KeyboardLayout,
}

impl<'a> Injector<'a> {
    pub fn new(alphabet: &'a Alphabet, tables: &'a ConfusionTable, layout: &'a KeyboardLayout) -> Self {
        Injector { alphabet, tables, layout }
    }

    /// Replacement letters for the cluster under a substitution kind.
    fn replacements(&self, kind: InjectKind, cluster: &str) -> Vec<String> {
        let letter = match cluster_letter(cluster) {
            Some(c) => c,
            None => return Vec::new(),
        };
        let chars: Vec<char> = match kind {
            InjectKind::Substitution => self.alphabet.letters().to_vec(),
            InjectKind::Phonetic => self.tables.phonetic_alternatives(letter),
            InjectKind::Visual => self.tables.visual_alternatives(letter),
            InjectKind::Keyboard => self.layout.neighbours(letter),
            _ => Vec::new(),
        };
        chars
            .into_iter()
            .map(|c| c.to_string())
            .filter(|s| s != cluster)
            .collect()
    }

    /// Positions at which `kind` can be applied to `word`.
    fn positions(&self, word: &GraphemeSeq, kind: InjectKind) -> Result<Vec<usize>, InjectError> {
        let n = word.len();
        let min = match kind {
            InjectKind::Insertion => 1,
            InjectKind::Deletion | InjectKind::Transposition | InjectKind::Split => 2,
            _ => 1,
        };
        if n < min {
            return Err(InjectError::TooShort { kind, len: n });
        }
        let all: Vec<usize> = match kind {
            InjectKind::Insertion => (0..=n).collect(),
            InjectKind::Deletion => (0..n).collect(),
            InjectKind::Transposition => {
                (0..n - 1).filter(|&p| word.cluster(p) != word.cluster(p + 1)).collect()
            }
            InjectKind::Split => (1..n).collect(),
            _ => (0..n).filter(|&p| !self.replacements(kind, word.cluster(p)).is_empty()).collect(),
        };
        if all.is_empty() {
            return Err(InjectError::NoCandidate(kind));
        }
        Ok(all)
    }

    /// One error of `kind` at a random admissible position.
    pub fn inject(
        &self,
        word: &GraphemeSeq,
        kind: InjectKind,
        rng: &mut SeededRng,
    ) -> Result<Injection, InjectError> {
        match kind {
            InjectKind::RunOn | InjectKind::Shift => Err(InjectError::NeedsTwoWords(kind)),
            InjectKind::Multiple => self.inject_multiple(word, rng),
            _ => {
                let positions = self.positions(word, kind)?;
                let p = *rng.pick(&positions);
                self.inject_at(word, kind, p, rng)
            }
        }
    }

    /// One error of `kind` at `position`; only the replacement or inserted
    /// letter is random.
    pub fn inject_at(
        &self,
        word: &GraphemeSeq,
        kind: InjectKind,
        position: usize,
        rng: &mut SeededRng,
    ) -> Result<Injection, InjectError> {
        if kind.is_two_word() {
            return Err(InjectError::NeedsTwoWords(kind));
        }
        if kind == InjectKind::Multiple {
            return self.inject_multiple(word, rng);
        }
        let positions = self.positions(word, kind)?;
        if !positions.contains(&position) {
            let n = word.len();
            let limit = if kind == InjectKind::Insertion { n + 1 } else { n };
            return Err(if position >= limit {
                InjectError::PositionOutOfRange { position, len: n }
            } else {
                InjectError::NoCandidate(kind)
            });
        }
        let op = self.op_at(word, kind, position, rng);
        let wrong = apply(word, &op).expect("admissible op");
        let ambiguous = self.is_ambiguous(word, kind, &op);
        let wrong = if kind == InjectKind::Split { wrong.split_words() } else { vec![wrong] };
        Ok(Injection { wrong, intended: vec![word.clone()], kind, ops: vec![op], ambiguous })
    }

    fn op_at(&self, word: &GraphemeSeq, kind: InjectKind, p: usize, rng: &mut SeededRng) -> EditOp {
        match kind {
            InjectKind::Insertion => {
                let letter = rng.pick(self.alphabet.letters()).to_string();
                EditOp::Insertion { position: p, letter }
            }
            InjectKind::Deletion => EditOp::Deletion { position: p, letter: word.cluster(p).into() },
            InjectKind::Transposition => EditOp::Transposition {
                position: p,
                first: word.cluster(p).into(),
                second: word.cluster(p + 1).into(),
            },
            InjectKind::Split => EditOp::Insertion { position: p, letter: SPACE.into() },
            _ => {
                let options = self.replacements(kind, word.cluster(p));
                let to = rng.pick(&options).clone();
                EditOp::Substitution { position: p, from: word.cluster(p).into(), to }
            }
        }
    }

    fn is_ambiguous(&self, word: &GraphemeSeq, kind: InjectKind, op: &EditOp) -> bool {
        let n = word.len();
        let at = |i: usize| (i < n).then(|| word.cluster(i));
        match op {
            EditOp::Deletion { position: p, letter } => {
                (*p > 0 && at(p - 1) == Some(letter)) || at(p + 1) == Some(letter)
            }
            EditOp::Insertion { position: p, letter } => {
                (*p > 0 && at(p - 1) == Some(letter)) || at(*p) == Some(letter)
            }
            EditOp::Substitution { from, to, .. } => {
                let (Some(a), Some(b)) = (cluster_letter(from), cluster_letter(to)) else {
                    return false;
                };
                let phonetic = {
                    let g = self.tables.phonetic_group(a);
                    g.is_some() && g == self.tables.phonetic_group(b)
                };
                match kind {
                    InjectKind::Visual => phonetic,
                    InjectKind::Keyboard => phonetic || self.tables.visually_similar(a, b),
                    _ => false,
                }
            }
            EditOp::Transposition { .. } => false,
        }
    }

    fn inject_multiple(&self, word: &GraphemeSeq, rng: &mut SeededRng) -> Result<Injection, InjectError> {
        const BASE: [InjectKind; 4] = [
            InjectKind::Insertion,
            InjectKind::Deletion,
            InjectKind::Substitution,
            InjectKind::Transposition,
        ];
        if word.len() < 2 {
            return Err(InjectError::TooShort { kind: InjectKind::Multiple, len: word.len() });
        }
        for _ in 0..MAX_ATTEMPTS {
            let first = self.inject(word, *rng.pick(&BASE), rng);
            let Ok(first) = first else { continue };
            let middle = &first.wrong[0];
            let Ok(second) = self.inject(middle, *rng.pick(&BASE), rng) else { continue };
            let wrong = &second.wrong[0];
            if damerau_distance(wrong, word) == 2 {
                let mut ops = first.ops;
                ops.extend(second.ops);
                return Ok(Injection {
                    wrong: vec![wrong.clone()],
                    intended: vec![word.clone()],
                    kind: InjectKind::Multiple,
                    ops,
                    ambiguous: false,
                });
            }
        }
        Err(InjectError::NoCandidate(InjectKind::Multiple))
    }

    /// Drops the space between `left` and `right`.
    pub fn inject_runon(&self, left: &GraphemeSeq, right: &GraphemeSeq) -> Result<Injection, InjectError> {
        if left.is_empty() || right.is_empty() {
            return Err(InjectError::TooShort { kind: InjectKind::RunOn, len: 0 });
        }
        Ok(Injection {
            wrong: vec![left.concat(right)],
            intended: vec![left.clone(), right.clone()],
            kind: InjectKind::RunOn,
            ops: vec![EditOp::Deletion { position: left.len(), letter: SPACE.into() }],
            ambiguous: false,
        })
    }

    /// Moves the space between `left` and `right` one letter left or right.
    pub fn inject_shift(
        &self,
        left: &GraphemeSeq,
        right: &GraphemeSeq,
        rng: &mut SeededRng,
    ) -> Result<Injection, InjectError> {
        let mut moves = Vec::new();
        if left.len() >= 2 {
            moves.push(false);
        }
        if right.len() >= 2 {
            moves.push(true);
        }
        if moves.is_empty() || left.is_empty() || right.is_empty() {
            return Err(InjectError::TooShort { kind: InjectKind::Shift, len: left.len().min(right.len()) });
        }
        let rightwards = *rng.pick(&moves);
        let joined = left.concat(right);
        let cut = if rightwards { left.len() + 1 } else { left.len() - 1 };
        let span = GraphemeSeq::join_words(&[left.clone(), right.clone()]);
        let op = if rightwards {
            EditOp::Transposition {
                position: left.len(),
                first: SPACE.into(),
                second: right.cluster(0).into(),
            }
        } else {
            EditOp::Transposition {
                position: left.len() - 1,
                first: left.cluster(left.len() - 1).into(),
                second: SPACE.into(),
            }
        };
        debug_assert_eq!(
            apply(&span, &op).ok(),
            Some(GraphemeSeq::join_words(&[joined.slice(0, cut), joined.slice(cut, joined.len())]))
        );
        Ok(Injection {
            wrong: vec![joined.slice(0, cut), joined.slice(cut, joined.len())],
            intended: vec![left.clone(), right.clone()],
            kind: InjectKind::Shift,
            ops: vec![op],
            ambiguous: false,
        })
    }

    /// Generates `count` errors over `words` with kinds drawn from
    /// `distribution`. In exact mode the kind counts are the largest-
    /// remainder apportionment of `count`, in shuffled order.
    pub fn corpus(
        &self,
        words: &[GraphemeSeq],
        distribution: &Distribution,
        seed: u64,
        count: usize,
        exact: bool,
    ) -> Result<Vec<Injection>, InjectError> {
        if count == 0 {
            return Ok(Vec::new());
        }
        if words.is_empty() {
            return Err(InjectError::EmptyWordList);
        }
        let mut rng = SeededRng::new(seed);
        let kinds: Vec<InjectKind> = if exact {
            let mut ks = distribution.apportion(count);
            rng.shuffle(&mut ks);
            ks
        } else {
            (0..count).map(|_| distribution.sample(&mut rng)).collect()
        };
        let mut out = Vec::with_capacity(count);
        for kind in kinds {
            out.push(self.corpus_item(words, kind, &mut rng)?);
        }
        Ok(out)
    }

    fn corpus_item(
        &self,
        words: &[GraphemeSeq],
        kind: InjectKind,
        rng: &mut SeededRng,
    ) -> Result<Injection, InjectError> {
        for _ in 0..MAX_ATTEMPTS {
            let word = rng.pick(words);
            let result = match kind {
                InjectKind::RunOn => {
                    let right = rng.pick(words);
                    self.inject_runon(word, right)
                }
                InjectKind::Shift => {
                    let right = rng.pick(words);
                    self.inject_shift(word, right, rng)
                }
                _ => self.inject(word, kind, rng),
            };
            if let Ok(injection) = result {
                return Ok(injection);
            }
        }
        Err(InjectError::Unsatisfiable(kind))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DistributionError {
    UnknownKind { line: usize, name: String },
    BadProportion { line: usize, value: String },
    Duplicate { line: usize, kind: InjectKind },
    /// Proportions must sum to 1 within 1e-9.
    BadSum(f64),
    Empty,
}

impl fmt::Display for DistributionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistributionError::UnknownKind { line, name } => write!(f, "line {line}: unknown kind `{name}`"),
            DistributionError::BadProportion { line, value } => {
                write!(f, "line {line}: bad proportion `{value}`")
            }
            DistributionError::Duplicate { line, kind } => write!(f, "line {line}: duplicate kind {kind}"),
            DistributionError::BadSum(s) => write!(f, "proportions sum to {s}, expected 1"),
            DistributionError::Empty => f.write_str("empty distribution"),
        }
    }
}

/// Proportions of error kinds.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    entries: Vec<(InjectKind, f64)>,
}

impl Distribution {
    pub const SUM_TOLERANCE: f64 = 1e-9;

    pub fn new(entries: Vec<(InjectKind, f64)>) -> Result<Self, DistributionError> {
        if entries.is_empty() {
            return Err(DistributionError::Empty);
        }
        for (i, (kind, p)) in entries.iter().enumerate() {
            if !(p.is_finite() && *p >= 0.0) {
                return Err(DistributionError::BadProportion { line: i + 1, value: p.to_string() });
            }
            if entries[..i].iter().any(|(k, _)| k == kind) {
                return Err(DistributionError::Duplicate { line: i + 1, kind: *kind });
            }
        }
        let sum: f64 = entries.iter().map(|(_, p)| p).sum();
        if (sum - 1.0).abs() > Self::SUM_TOLERANCE {
            return Err(DistributionError::BadSum(sum));
        }
        Ok(Distribution { entries })
    }

    /// Proportional to integer counts.
    pub fn from_counts(counts: &[(InjectKind, u64)]) -> Result<Self, DistributionError> {
        let total: u64 = counts.iter().map(|(_, c)| c).sum();
        if total == 0 {
            return Err(DistributionError::Empty);
        }
        Distribution::new(counts.iter().map(|&(k, c)| (k, c as f64 / total as f64)).collect())
    }

    /// `kind = proportion` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, DistributionError> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (name, value) = line
                .split_once('=')
                .ok_or_else(|| DistributionError::BadProportion { line: i + 1, value: line.into() })?;
            let (name, value) = (name.trim(), value.trim());
            let kind = InjectKind::from_name(name)
                .ok_or_else(|| DistributionError::UnknownKind { line: i + 1, name: name.into() })?;
            let p: f64 = value
                .parse()
                .map_err(|_| DistributionError::BadProportion { line: i + 1, value: value.into() })?;
            if !(p.is_finite() && p >= 0.0) {
                return Err(DistributionError::BadProportion { line: i + 1, value: value.into() });
            }
            if entries.iter().any(|(k, _)| *k == kind) {
                return Err(DistributionError::Duplicate { line: i + 1, kind });
            }
            entries.push((kind, p));
        }
        Distribution::new(entries)
    }

    /// Kind counts of the GPO column: 4 transpositions, 29 insertions, 49
    /// deletions, 62 substitutions and 11 multiple errors.
    pub fn gpo() -> Self {
        Distribution::from_counts(&[
            (InjectKind::Transposition, 4),
            (InjectKind::Insertion, 29),
            (InjectKind::Deletion, 49),
            (InjectKind::Substitution, 62),
            (InjectKind::Multiple, 11),
        ])
        .expect("valid preset")
    }

    /// Kind counts of the Web7 column over 360 errors.
    pub fn web7() -> Self {
        Distribution::from_counts(&[
            (InjectKind::Transposition, 47),
            (InjectKind::Insertion, 73),
            (InjectKind::Deletion, 124),
            (InjectKind::Substitution, 97),
            (InjectKind::Multiple, 19),
        ])
        .expect("valid preset")
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "gpo" => Some(Distribution::gpo()),
            "web7" => Some(Distribution::web7()),
            _ => None,
        }
    }

    pub fn entries(&self) -> &[(InjectKind, f64)] {
        &self.entries
    }

    pub fn proportion(&self, kind: InjectKind) -> f64 {
        self.entries.iter().find(|(k, _)| *k == kind).map_or(0.0, |(_, p)| *p)
    }

    pub fn sample(&self, rng: &mut SeededRng) -> InjectKind {
        let u = rng.unit();
        let mut acc = 0.0;
        for &(kind, p) in &self.entries {
            acc += p;
            if u < acc {
                return kind;
            }
        }
        // rounding slack: the last kind with non-zero weight
        self.entries.iter().rev().find(|(_, p)| *p > 0.0).map_or(self.entries[0].0, |(k, _)| *k)
    }

    /// Largest-remainder split of `count` (ties to the earlier entry).
    pub fn apportion(&self, count: usize) -> Vec<InjectKind> {
        let total: f64 = self.entries.iter().map(|(_, p)| p).sum();
        let mut quotas: Vec<(usize, f64)> = self
            .entries
            .iter()
            .map(|(_, p)| {
                let exact = p / total * count as f64;
                let floor = libm::floor(exact);
                (floor as usize, exact - floor)
            })
            .collect();
        let assigned: usize = quotas.iter().map(|(q, _)| q).sum();
        let mut order: Vec<usize> = (0..quotas.len()).collect();
        order.sort_by(|&a, &b| {
            quotas[b].1.partial_cmp(&quotas[a].1).unwrap_or(core::cmp::Ordering::Equal).then(a.cmp(&b))
        });
        for &i in order.iter().take(count.saturating_sub(assigned)) {
            quotas[i].0 += 1;
        }
        let mut out = Vec::with_capacity(count);
        for (i, (q, _)) in quotas.into_iter().enumerate() {
            out.extend(core::iter::repeat_n(self.entries[i].0, q));
        }
        out
    }
}
