//! Single-edit (Damerau) transformations over grapheme clusters.
//!
//! Distances are optimal string alignment distances: insertion, deletion,
//! substitution and adjacent transposition each cost one, and no cluster is
//! edited twice.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::Alphabet;
use crate::lexicon::Lexicon;
use crate::script::GraphemeSeq;

/// Edit kinds, in tie-breaking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum EditKind {
    Deletion,
    Insertion,
    Substitution,
    Transposition,
}

impl EditKind {
    pub const ALL: [EditKind; 4] =
        [EditKind::Deletion, EditKind::Insertion, EditKind::Substitution, EditKind::Transposition];

    pub fn name(self) -> &'static str {
        match self {
            EditKind::Deletion => "deletion",
            EditKind::Insertion => "insertion",
            EditKind::Substitution => "substitution",
            EditKind::Transposition => "transposition",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        EditKind::ALL.into_iter().find(|k| k.name().eq_ignore_ascii_case(name))
    }
}

impl fmt::Display for EditKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One transformation of an intended word into a misspelling. Positions are
/// cluster indices in the intended word; an insertion at `position` goes
/// before the cluster currently at that index (or at the end when
/// `position == len`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "lowercase"))]
pub enum EditOp {
    Deletion { position: usize, letter: String },
    Insertion { position: usize, letter: String },
    Substitution { position: usize, from: String, to: String },
    /// Swaps clusters `position` and `position + 1` (`first`, `second` as
    /// they appear in the intended word).
    Transposition { position: usize, first: String, second: String },
}

impl EditOp {
    pub fn kind(&self) -> EditKind {
        match self {
            EditOp::Deletion { .. } => EditKind::Deletion,
            EditOp::Insertion { .. } => EditKind::Insertion,
            EditOp::Substitution { .. } => EditKind::Substitution,
            EditOp::Transposition { .. } => EditKind::Transposition,
        }
    }

    pub fn position(&self) -> usize {
        match self {
            EditOp::Deletion { position, .. }
            | EditOp::Insertion { position, .. }
            | EditOp::Substitution { position, .. }
            | EditOp::Transposition { position, .. } => *position,
        }
    }

    /// Whether the op edits the first cluster of the intended word.
    pub fn touches_first(&self) -> bool {
        self.position() == 0
    }

    /// Clusters named by the op.
    pub fn letters(&self) -> Vec<&str> {
        match self {
            EditOp::Deletion { letter, .. } | EditOp::Insertion { letter, .. } => vec![letter],
            EditOp::Substitution { from, to, .. } => vec![from, to],
            EditOp::Transposition { first, second, .. } => vec![first, second],
        }
    }

    fn with_position(&self, position: usize) -> EditOp {
        let mut op = self.clone();
        match &mut op {
            EditOp::Deletion { position: p, .. }
            | EditOp::Insertion { position: p, .. }
            | EditOp::Substitution { position: p, .. }
            | EditOp::Transposition { position: p, .. } => *p = position,
        }
        op
    }
}

impl fmt::Display for EditOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EditOp::Deletion { position, letter } => write!(f, "del@{position}:{letter}"),
            EditOp::Insertion { position, letter } => write!(f, "ins@{position}:{letter}"),
            EditOp::Substitution { position, from, to } => write!(f, "sub@{position}:{from}>{to}"),
            EditOp::Transposition { position, first, second } => {
                write!(f, "trn@{position}:{first}{second}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EditError {
    OutOfRange { position: usize, len: usize },
    /// Substitution of a cluster by itself, or transposition of equal clusters.
    Identity,
    /// The op names a cluster the word does not have at that position.
    Mismatch { position: usize, expected: String, found: String },
    EmptyLetter,
}

impl fmt::Display for EditError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EditError::OutOfRange { position, len } => {
                write!(f, "position {position} out of range for a word of {len} clusters")
            }
            EditError::Identity => f.write_str("edit does not change the word"),
            EditError::Mismatch { position, expected, found } => {
                write!(f, "expected `{expected}` at {position}, found `{found}`")
            }
            EditError::EmptyLetter => f.write_str("edit letter is empty"),
        }
    }
}

fn check_letter(word: &GraphemeSeq, position: usize, expected: &str) -> Result<(), EditError> {
    let found = word.cluster(position);
    if found != expected {
        return Err(EditError::Mismatch {
            position,
            expected: expected.to_string(),
            found: found.to_string(),
        });
    }
    Ok(())
}

/// Applies one op to `word`.
pub fn apply(word: &GraphemeSeq, op: &EditOp) -> Result<GraphemeSeq, EditError> {
    let n = word.len();
    let mut clusters: Vec<&str> = word.clusters().collect();
    match op {
        EditOp::Deletion { position, letter } => {
            if *position >= n {
                return Err(EditError::OutOfRange { position: *position, len: n });
            }
            check_letter(word, *position, letter)?;
            clusters.remove(*position);
        }
        EditOp::Insertion { position, letter } => {
            if *position > n {
                return Err(EditError::OutOfRange { position: *position, len: n });
            }
            if letter.is_empty() {
                return Err(EditError::EmptyLetter);
            }
            clusters.insert(*position, letter);
        }
        EditOp::Substitution { position, from, to } => {
            if *position >= n {
                return Err(EditError::OutOfRange { position: *position, len: n });
            }
            if from == to {
                return Err(EditError::Identity);
            }
            if to.is_empty() {
                return Err(EditError::EmptyLetter);
            }
            check_letter(word, *position, from)?;
            clusters[*position] = to;
        }
        EditOp::Transposition { position, first, second } => {
            if *position + 1 >= n {
                return Err(EditError::OutOfRange { position: *position, len: n });
            }
            if first == second {
                return Err(EditError::Identity);
            }
            check_letter(word, *position, first)?;
            check_letter(word, *position + 1, second)?;
            clusters.swap(*position, *position + 1);
        }
    }
    Ok(GraphemeSeq::from_clusters(clusters))
}

/// Applies a script whose positions all refer to the original `word`, in
/// non-decreasing position order (the shape returned by [`diagnose`]).
pub fn apply_script(word: &GraphemeSeq, ops: &[EditOp]) -> Result<GraphemeSeq, EditError> {
    let mut current = word.clone();
    let mut shift: isize = 0;
    for op in ops {
        let position = op.position() as isize + shift;
        if position < 0 {
            return Err(EditError::OutOfRange { position: op.position(), len: word.len() });
        }
        current = apply(&current, &op.with_position(position as usize))?;
        match op.kind() {
            EditKind::Insertion => shift += 1,
            EditKind::Deletion => shift -= 1,
            _ => {}
        }
    }
    Ok(current)
}

/// Calls `visit(variant_text, op)` for every raw single edit of `word`,
/// position by position in kind order. Identity transpositions of equal
/// neighbours are included; identity substitutions are not.
fn for_each_single_edit<F>(word: &GraphemeSeq, letters: &[&str], mut visit: F)
where
    F: FnMut(&str, EditOp),
{
    let clusters: Vec<&str> = word.clusters().collect();
    let n = clusters.len();
    let text = word.as_str();
    let mut starts = Vec::with_capacity(n + 1);
    let mut acc = 0;
    for c in &clusters {
        starts.push(acc);
        acc += c.len();
    }
    starts.push(acc);
    let mut buf = String::with_capacity(text.len() + 8);

    for p in 0..=n {
        let head = &text[..starts[p]];
        if p < n {
            buf.clear();
            buf.push_str(head);
            buf.push_str(&text[starts[p + 1]..]);
            visit(&buf, EditOp::Deletion { position: p, letter: clusters[p].to_string() });
        }
        for &letter in letters {
            buf.clear();
            buf.push_str(head);
            buf.push_str(letter);
            buf.push_str(&text[starts[p]..]);
            visit(&buf, EditOp::Insertion { position: p, letter: letter.to_string() });
        }
        if p < n {
            for &letter in letters {
                if letter == clusters[p] {
                    continue;
                }
                buf.clear();
                buf.push_str(head);
                buf.push_str(letter);
                buf.push_str(&text[starts[p + 1]..]);
                visit(
                    &buf,
                    EditOp::Substitution {
                        position: p,
                        from: clusters[p].to_string(),
                        to: letter.to_string(),
                    },
                );
            }
        }
        if p + 1 < n {
            buf.clear();
            buf.push_str(head);
            buf.push_str(clusters[p + 1]);
            buf.push_str(clusters[p]);
            buf.push_str(&text[starts[p + 2]..]);
            visit(
                &buf,
                EditOp::Transposition {
                    position: p,
                    first: clusters[p].to_string(),
                    second: clusters[p + 1].to_string(),
                },
            );
        }
    }
}

fn alphabet_letters(alphabet: &Alphabet) -> Vec<String> {
    alphabet.letters().iter().map(|c| c.to_string()).collect()
}

fn apply_unchecked(word: &GraphemeSeq, op: &EditOp) -> GraphemeSeq {
    let mut clusters: Vec<&str> = word.clusters().collect();
    match op {
        EditOp::Deletion { position, .. } => {
            clusters.remove(*position);
        }
        EditOp::Insertion { position, letter } => clusters.insert(*position, letter),
        EditOp::Substitution { position, to, .. } => clusters[*position] = to,
        EditOp::Transposition { position, .. } => clusters.swap(*position, *position + 1),
    }
    GraphemeSeq::from_clusters(clusters)
}

/// Every raw single edit, duplicates included: `(n+1)·A` insertions, `n`
/// deletions, `n·(A−1)` substitutions (for words spelled from the
/// alphabet) and `n−1` transpositions.
pub fn single_edits_raw(word: &GraphemeSeq, alphabet: &Alphabet) -> Vec<(GraphemeSeq, EditOp)> {
    let owned = alphabet_letters(alphabet);
    let letters: Vec<&str> = owned.iter().map(String::as_str).collect();
    let mut out = Vec::new();
    for_each_single_edit(word, &letters, |_, op| {
        let v = apply_unchecked(word, &op);
        out.push((v, op));
    });
    out
}

/// All distinct words at distance exactly one from `word`, each paired with
/// the leftmost, kind-ordered op producing it.
pub fn single_edits(word: &GraphemeSeq, alphabet: &Alphabet) -> Vec<(GraphemeSeq, EditOp)> {
    let owned = alphabet_letters(alphabet);
    let letters: Vec<&str> = owned.iter().map(String::as_str).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for_each_single_edit(word, &letters, |text, op| {
        if text != word.as_str() && !seen.contains(text) {
            seen.insert(text.to_string());
            out.push((apply_unchecked(word, &op), op));
        }
    });
    out
}

/// Optimal string alignment distance in clusters.
pub fn damerau_distance(a: &GraphemeSeq, b: &GraphemeSeq) -> usize {
    let a: Vec<&str> = a.clusters().collect();
    let b: Vec<&str> = b.clusters().collect();
    osa(&a, &b, usize::MAX).unwrap_or(usize::MAX)
}

/// Distance if it is at most `max`.
pub fn damerau_distance_within(a: &GraphemeSeq, b: &GraphemeSeq, max: usize) -> Option<usize> {
    if a.len().abs_diff(b.len()) > max {
        return None;
    }
    let a: Vec<&str> = a.clusters().collect();
    let b: Vec<&str> = b.clusters().collect();
    osa(&a, &b, max)
}

fn osa(a: &[&str], b: &[&str], max: usize) -> Option<usize> {
    let m = b.len();
    // rows i-2, i-1, i
    let mut two_back = vec![0usize; m + 1];
    let mut prev: Vec<usize> = (0..=m).collect();
    let mut cur = vec![0usize; m + 1];
    for i in 1..=a.len() {
        cur[0] = i;
        let mut row_min = cur[0];
        for j in 1..=m {
            let cost = usize::from(a[i - 1] != b[j - 1]);
            let mut d = (prev[j] + 1).min(cur[j - 1] + 1).min(prev[j - 1] + cost);
            if i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1] {
                d = d.min(two_back[j - 2] + 1);
            }
            cur[j] = d;
            row_min = row_min.min(d);
        }
        if row_min > max {
            return None;
        }
        core::mem::swap(&mut two_back, &mut prev);
        core::mem::swap(&mut prev, &mut cur);
    }
    let d = prev[m];
    (d <= max).then_some(d)
}

/// Minimal edit script turning `intended` into `wrong`.
///
/// Among all minimal scripts the one that is smallest when ops are compared
/// by (position, kind) is returned, so repeated-letter ambiguities resolve
/// to the leftmost position.
pub fn diagnose(wrong: &GraphemeSeq, intended: &GraphemeSeq) -> Vec<EditOp> {
    let a: Vec<&str> = intended.clusters().collect();
    let b: Vec<&str> = wrong.clusters().collect();
    let (n, m) = (a.len(), b.len());
    let width = m + 1;
    // suffix[i * width + j] = distance between a[i..] and b[j..]
    let mut suffix = vec![0usize; (n + 1) * width];
    let at = |i: usize, j: usize| i * width + j;
    for i in (0..=n).rev() {
        for j in (0..=m).rev() {
            let v = if i == n {
                m - j
            } else if j == m {
                n - i
            } else {
                let mut d = (suffix[at(i + 1, j)] + 1)
                    .min(suffix[at(i, j + 1)] + 1)
                    .min(suffix[at(i + 1, j + 1)] + usize::from(a[i] != b[j]));
                if i + 1 < n && j + 1 < m && a[i] == b[j + 1] && a[i + 1] == b[j] {
                    d = d.min(suffix[at(i + 2, j + 2)] + 1);
                }
                d
            };
            suffix[at(i, j)] = v;
        }
    }

    let mut ops = Vec::with_capacity(suffix[0]);
    let (mut i, mut j) = (0, 0);
    while i < n || j < m {
        let here = suffix[at(i, j)];
        if i < n && suffix[at(i + 1, j)] + 1 == here {
            ops.push(EditOp::Deletion { position: i, letter: a[i].to_string() });
            i += 1;
        } else if j < m && suffix[at(i, j + 1)] + 1 == here {
            ops.push(EditOp::Insertion { position: i, letter: b[j].to_string() });
            j += 1;
        } else if i < n && j < m && a[i] != b[j] && suffix[at(i + 1, j + 1)] + 1 == here {
            ops.push(EditOp::Substitution {
                position: i,
                from: a[i].to_string(),
                to: b[j].to_string(),
            });
            i += 1;
            j += 1;
        } else if i + 1 < n
            && j + 1 < m
            && a[i] == b[j + 1]
            && a[i + 1] == b[j]
            && a[i] != a[i + 1]
            && suffix[at(i + 2, j + 2)] + 1 == here
        {
            ops.push(EditOp::Transposition {
                position: i,
                first: a[i].to_string(),
                second: a[i + 1].to_string(),
            });
            i += 2;
            j += 2;
        } else {
            debug_assert!(i < n && j < m && a[i] == b[j]);
            i += 1;
            j += 1;
        }
    }
    ops
}

/// A lexicon word reachable from a misspelling, with the script that turns
/// the word into the misspelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub word: GraphemeSeq,
    pub script: Vec<EditOp>,
}

/// Every lexicon word within `max_distance` of `nonword`, sorted by word.
///
/// Distance one is served by enumerating single edits over the alphabet and
/// the lexicon's own clusters; larger distances scan the lexicon with a
/// banded distance check.
pub fn generate_candidates(
    nonword: &GraphemeSeq,
    lexicon: &Lexicon,
    alphabet: &Alphabet,
    max_distance: usize,
) -> Vec<Candidate> {
    let mut found: BTreeSet<GraphemeSeq> = BTreeSet::new();
    if lexicon.contains(nonword) {
        found.insert(nonword.clone());
    }
    if max_distance == 1 && !nonword.is_empty() {
        let owned = alphabet_letters(alphabet);
        let mut letters: BTreeSet<&str> = owned.iter().map(String::as_str).collect();
        letters.extend(lexicon.cluster_inventory());
        let letters: Vec<&str> = letters.into_iter().collect();
        for_each_single_edit(nonword, &letters, |text, _| {
            if let Some(word) = lexicon.get(text) {
                found.insert(word.clone());
            }
        });
    } else if max_distance >= 1 {
        for word in lexicon.words() {
            if damerau_distance_within(nonword, word, max_distance).is_some() {
                found.insert(word.clone());
            }
        }
    }
    found
        .into_iter()
        .map(|word| {
            let script = diagnose(nonword, &word);
            Candidate { word, script }
        })
        .collect()
}
