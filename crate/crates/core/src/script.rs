//! Script normalization and grapheme-cluster sequences.
//!
//! Every word handled by the engine is a [`GraphemeSeq`]: canonically
//! composed text split into clusters of one base character plus any
//! combining marks attached to it. Edit operations, lengths and positions
//! are all measured in clusters.

use alloc::string::String;
use alloc::vec::Vec;
use core::borrow::Borrow;
use core::fmt;

use unicode_normalization::char::{decompose_compatible, is_combining_mark, is_public_assigned};
use unicode_normalization::UnicodeNormalization;

/// Separator cluster used when a span of several words is edited as one
/// sequence (word-boundary errors).
pub const SPACE: &str = " ";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalizeError {
    /// The input contains whitespace at the given byte offset.
    Whitespace { offset: usize },
    /// The input contains an unassigned or private-use scalar value.
    Unassigned { offset: usize, ch: char },
}

impl fmt::Display for NormalizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalizeError::Whitespace { offset } => {
                write!(f, "token contains whitespace at byte {offset}")
            }
            NormalizeError::Unassigned { offset, ch } => {
                write!(f, "unassigned scalar U+{:04X} at byte {offset}", *ch as u32)
            }
        }
    }
}

/// Arabic Presentation Forms-A and -B.
fn is_presentation_form(ch: char) -> bool {
    matches!(ch, '\u{FB50}'..='\u{FDFF}' | '\u{FE70}'..='\u{FEFE}')
}

fn is_zero_width(ch: char) -> bool {
    matches!(ch, '\u{200B}' | '\u{200C}' | '\u{200D}' | '\u{2060}' | '\u{FEFF}')
}

/// Normalizes one token.
///
/// Zero-width joiners are removed, Arabic presentation forms are folded to
/// their canonical letters, and the result is put in NFC. Heh (ه) and
/// do-chashmi heh (ھ), like yeh (ي) and Farsi yeh (ی), stay distinct.
pub fn normalize(text: &str) -> Result<GraphemeSeq, NormalizeError> {
    for (offset, ch) in text.char_indices() {
        if ch.is_whitespace() {
            return Err(NormalizeError::Whitespace { offset });
        }
        if !is_public_assigned(ch) {
            return Err(NormalizeError::Unassigned { offset, ch });
        }
    }
    let mut folded = String::with_capacity(text.len());
    for ch in text.chars().filter(|&c| !is_zero_width(c)) {
        if is_presentation_form(ch) {
            decompose_compatible(ch, |c| {
                // Some ligatures (e.g. U+FDFA) expand to phrases.
                if !c.is_whitespace() {
                    folded.push(c)
                }
            });
        } else {
            folded.push(ch);
        }
    }
    let composed: String = folded.nfc().collect();
    Ok(GraphemeSeq::segment(composed))
}

/// A normalized word as an ordered list of grapheme clusters.
///
/// Ordering and equality follow the underlying text, so a `GraphemeSeq`
/// can be looked up in ordered maps by `&str`.
#[derive(Clone, Default)]
pub struct GraphemeSeq {
    text: String,
    /// Exclusive end offset of every cluster.
    ends: Vec<u32>,
}

impl GraphemeSeq {
    pub(crate) fn segment(text: String) -> Self {
        let mut ends = Vec::with_capacity(text.len() / 2);
        for (offset, ch) in text.char_indices() {
            let end = (offset + ch.len_utf8()) as u32;
            match ends.last_mut() {
                Some(last) if is_combining_mark(ch) => *last = end,
                _ => ends.push(end),
            }
        }
        GraphemeSeq { text, ends }
    }

    /// Builds a sequence from already-normalized clusters.
    pub(crate) fn from_clusters<'a, I>(clusters: I) -> Self
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut text = String::new();
        let mut ends = Vec::new();
        for c in clusters {
            text.push_str(c);
            ends.push(text.len() as u32);
        }
        GraphemeSeq { text, ends }
    }

    /// Joins words into one span separated by [`SPACE`] clusters.
    pub fn join_words(words: &[GraphemeSeq]) -> Self {
        let mut clusters: Vec<&str> = Vec::new();
        for (i, w) in words.iter().enumerate() {
            if i > 0 {
                clusters.push(SPACE);
            }
            clusters.extend(w.clusters());
        }
        GraphemeSeq::from_clusters(clusters)
    }

    /// Splits a span on [`SPACE`] clusters. Empty words are dropped.
    pub fn split_words(&self) -> Vec<GraphemeSeq> {
        let mut out = Vec::new();
        let mut current: Vec<&str> = Vec::new();
        for c in self.clusters() {
            if c == SPACE {
                if !current.is_empty() {
                    out.push(GraphemeSeq::from_clusters(current.drain(..)));
                }
            } else {
                current.push(c);
            }
        }
        if !current.is_empty() {
            out.push(GraphemeSeq::from_clusters(current));
        }
        out
    }

    /// Number of clusters.
    pub fn len(&self) -> usize {
        self.ends.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ends.is_empty()
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn into_string(self) -> String {
        self.text
    }

    /// The cluster at `index`.
    ///
    /// # Panics
    /// If `index >= self.len()`.
    pub fn cluster(&self, index: usize) -> &str {
        let start = if index == 0 { 0 } else { self.ends[index - 1] as usize };
        &self.text[start..self.ends[index] as usize]
    }

    pub fn clusters(&self) -> Clusters<'_> {
        Clusters { seq: self, front: 0, back: self.ends.len() }
    }

    /// Sub-sequence of clusters `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> GraphemeSeq {
        GraphemeSeq::from_clusters((start..end).map(|i| self.cluster(i)))
    }

    /// Concatenation of two sequences (no separator).
    pub fn concat(&self, other: &GraphemeSeq) -> GraphemeSeq {
        GraphemeSeq::from_clusters(self.clusters().chain(other.clusters()))
    }

    pub fn contains_space(&self) -> bool {
        self.clusters().any(|c| c == SPACE)
    }
}

impl PartialEq for GraphemeSeq {
    fn eq(&self, other: &Self) -> bool {
        self.text == other.text
    }
}

impl Eq for GraphemeSeq {}

impl PartialOrd for GraphemeSeq {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GraphemeSeq {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.text.cmp(&other.text)
    }
}

impl core::hash::Hash for GraphemeSeq {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.text.hash(state)
    }
}

impl fmt::Debug for GraphemeSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.clusters()).finish()
    }
}

impl fmt::Display for GraphemeSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl Borrow<str> for GraphemeSeq {
    fn borrow(&self) -> &str {
        &self.text
    }
}

impl AsRef<str> for GraphemeSeq {
    fn as_ref(&self) -> &str {
        &self.text
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for GraphemeSeq {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.text)
    }
}

/// Deserializing normalizes the text.
#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for GraphemeSeq {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        normalize(&text).map_err(serde::de::Error::custom)
    }
}

pub struct Clusters<'a> {
    seq: &'a GraphemeSeq,
    front: usize,
    back: usize,
}

impl<'a> Iterator for Clusters<'a> {
    type Item = &'a str;

    fn next(&mut self) -> Option<&'a str> {
        if self.front == self.back {
            return None;
        }
        let c = self.seq.cluster(self.front);
        self.front += 1;
        Some(c)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.back - self.front;
        (n, Some(n))
    }
}

impl DoubleEndedIterator for Clusters<'_> {
    fn next_back(&mut self) -> Option<Self::Item> {
        if self.front == self.back {
            return None;
        }
        self.back -= 1;
        Some(self.seq.cluster(self.back))
    }
}

impl ExactSizeIterator for Clusters<'_> {}

/// The leading character of a cluster (its letter, marks excluded).
pub fn cluster_letter(cluster: &str) -> Option<char> {
    cluster.chars().next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn clusters(s: &GraphemeSeq) -> Vec<&str> {
        s.clusters().collect()
    }

    #[test]
    fn empty_input() {
        let s = normalize("").unwrap();
        assert!(s.is_empty());
        assert_eq!(s.len(), 0);
    }

    #[test]
    fn pakistan_has_seven_clusters() {
        let s = normalize("پاڪستان").unwrap();
        assert_eq!(clusters(&s), vec!["پ", "ا", "ڪ", "س", "ت", "ا", "ن"]);
    }

    #[test]
    fn marks_stay_with_their_base() {
        // beh + fatha, alef, lam + sukun
        let s = normalize("بَال\u{0652}").unwrap();
        assert_eq!(clusters(&s), vec!["بَ", "ا", "ل\u{0652}"]);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn presentation_ligature_is_decomposed() {
        // U+FEFB ARABIC LIGATURE LAM WITH ALEF ISOLATED FORM
        let s = normalize("\u{FEFB}").unwrap();
        assert_eq!(s.as_str(), "\u{0644}\u{0627}");
        // U+FB8E KEHEH isolated, U+FEE9 HEH isolated
        assert_eq!(normalize("\u{FB8E}\u{FEE9}").unwrap().as_str(), "\u{06A9}\u{0647}");
    }

    #[test]
    fn heh_variants_are_not_folded() {
        let a = normalize("ماڻهو").unwrap();
        let b = normalize("ماڻھو").unwrap();
        assert_ne!(a, b);
        assert_ne!(normalize("ي").unwrap(), normalize("ی").unwrap());
        // presentation forms of do-chashmi heh fold to U+06BE, not U+0647
        assert_eq!(normalize("\u{FBAA}").unwrap().as_str(), "\u{06BE}");
    }

    #[test]
    fn canonical_composition() {
        // alef + madda above composes to U+0622
        assert_eq!(normalize("\u{0627}\u{0653}").unwrap().as_str(), "\u{0622}");
        assert_eq!(normalize("\u{064A}\u{0654}").unwrap().as_str(), "\u{0626}");
    }

    #[test]
    fn zero_width_joiners_removed() {
        let s = normalize("ل\u{200D}ا\u{200C}").unwrap();
        assert_eq!(s.as_str(), "لا");
    }

    #[test]
    fn rejects_whitespace_and_unassigned() {
        assert_eq!(normalize("ا ب"), Err(NormalizeError::Whitespace { offset: 2 }));
        assert!(matches!(normalize("ا\u{0378}"), Err(NormalizeError::Unassigned { .. })));
    }

    #[test]
    fn join_and_split_words() {
        let a = normalize("لعل").unwrap();
        let b = normalize("شهباز").unwrap();
        let span = GraphemeSeq::join_words(&[a.clone(), b.clone()]);
        assert_eq!(span.as_str(), "لعل شهباز");
        assert_eq!(span.len(), 9);
        assert_eq!(span.split_words(), vec![a, b]);
    }
}
