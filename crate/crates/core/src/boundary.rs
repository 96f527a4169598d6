//! Word-boundary repairs: run-ons, incorrect splits and misplaced spaces.
//!
//! At most one space is repaired per span.

use alloc::vec::Vec;
use core::fmt;

use crate::edit::EditKind;
use crate::lexicon::Lexicon;
use crate::script::GraphemeSeq;

/// How the space went wrong, seen from the intended text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum BoundaryKind {
    /// A space was inserted inside a word.
    IncorrectSplit,
    /// The space between two words was omitted.
    RunOn,
    /// The space sits at the wrong position.
    SpaceShift,
}

impl BoundaryKind {
    /// The edit applied to the space character.
    pub fn edit_kind(self) -> EditKind {
        match self {
            BoundaryKind::IncorrectSplit => EditKind::Insertion,
            BoundaryKind::RunOn => EditKind::Deletion,
            BoundaryKind::SpaceShift => EditKind::Transposition,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundaryKind::IncorrectSplit => "split",
            BoundaryKind::RunOn => "runon",
            BoundaryKind::SpaceShift => "shift",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmptyToken;

impl fmt::Display for EmptyToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("boundary repair needs two non-empty tokens")
    }
}

/// Add-one smoothed frequency.
pub(crate) fn smoothed(lexicon: &Lexicon, word: &GraphemeSeq) -> u64 {
    lexicon.frequency(word).saturating_add(1)
}

/// Splits of `token` into two lexicon words, best first: by the smaller
/// smoothed frequency of the halves (descending), then leftmost split.
pub fn repair_runon(token: &GraphemeSeq, lexicon: &Lexicon) -> Vec<(GraphemeSeq, GraphemeSeq)> {
    let n = token.len();
    let mut out: Vec<(u64, usize, GraphemeSeq, GraphemeSeq)> = Vec::new();
    for i in 1..n {
        let left = token.slice(0, i);
        if !lexicon.contains(&left) {
            continue;
        }
        let right = token.slice(i, n);
        if lexicon.contains(&right) {
            let weight = smoothed(lexicon, &left).min(smoothed(lexicon, &right));
            out.push((weight, i, left, right));
        }
    }
    out.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    out.into_iter().map(|(_, _, l, r)| (l, r)).collect()
}

/// Joins two tokens if the result is a lexicon word.
pub fn repair_split(
    left: &GraphemeSeq,
    right: &GraphemeSeq,
    lexicon: &Lexicon,
) -> Result<Option<GraphemeSeq>, EmptyToken> {
    if left.is_empty() || right.is_empty() {
        return Err(EmptyToken);
    }
    let joined = left.concat(right);
    Ok(lexicon.contains(&joined).then_some(joined))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceRepair {
    /// The space is moved: both new parts are words.
    Shifted { left: GraphemeSeq, right: GraphemeSeq },
    /// The space is removed: the concatenation is a word.
    Merged(GraphemeSeq),
}

impl SpaceRepair {
    pub fn parts(&self) -> Vec<GraphemeSeq> {
        match self {
            SpaceRepair::Shifted { left, right } => alloc::vec![left.clone(), right.clone()],
            SpaceRepair::Merged(w) => alloc::vec![w.clone()],
        }
    }
}

/// Every other placement of the single space in `left right` that yields two
/// lexicon words (leftmost first), followed by the no-space merge when it is
/// a word. The original placement is never returned.
pub fn repair_space_shift(
    left: &GraphemeSeq,
    right: &GraphemeSeq,
    lexicon: &Lexicon,
) -> Result<Vec<SpaceRepair>, EmptyToken> {
    if left.is_empty() || right.is_empty() {
        return Err(EmptyToken);
    }
    let joined = left.concat(right);
    let n = joined.len();
    let original = left.len();
    let mut out = Vec::new();
    for i in (1..n).filter(|&i| i != original) {
        let l = joined.slice(0, i);
        let r = joined.slice(i, n);
        if lexicon.contains(&l) && lexicon.contains(&r) {
            out.push(SpaceRepair::Shifted { left: l, right: r });
        }
    }
    if lexicon.contains(&joined) {
        out.push(SpaceRepair::Merged(joined));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::script::normalize;
    use alloc::vec;

    fn w(s: &str) -> GraphemeSeq {
        normalize(s).unwrap()
    }

    #[test]
    fn runon_examples() {
        let lex = Lexicon::from_words([w("يونيورسٽي"), w("جو"), w("لعل"), w("شهباز")]);
        assert_eq!(repair_runon(&w("يونيورسٽيجو"), &lex), vec![(w("يونيورسٽي"), w("جو"))]);
        assert_eq!(repair_runon(&w("لعلشهباز"), &lex), vec![(w("لعل"), w("شهباز"))]);
        assert!(repair_runon(&w("ل"), &lex).is_empty());
    }

    #[test]
    fn runon_ranking_by_frequency_then_leftmost() {
        // ابت splits as ا|بت and اب|ت
        let mut b = Lexicon::builder();
        b.insert(w("ا"), 1).insert(w("بت"), 1).insert(w("اب"), 5).insert(w("ت"), 5);
        let lex = b.build();
        assert_eq!(repair_runon(&w("ابت"), &lex), vec![(w("اب"), w("ت")), (w("ا"), w("بت"))]);
        let lex = Lexicon::from_words([w("ا"), w("بت"), w("اب"), w("ت")]);
        assert_eq!(repair_runon(&w("ابت"), &lex), vec![(w("ا"), w("بت")), (w("اب"), w("ت"))]);
    }

    #[test]
    fn split_examples() {
        let lex = Lexicon::from_words([w("جامشورو")]);
        assert_eq!(repair_split(&w("ج"), &w("امشورو"), &lex), Ok(Some(w("جامشورو"))));
        assert_eq!(repair_split(&w("اب"), &w("ج"), &lex), Ok(None));
        assert_eq!(repair_split(&GraphemeSeq::default(), &w("ا"), &lex), Err(EmptyToken));
    }

    #[test]
    fn space_shift_examples() {
        let lex = Lexicon::from_words([w("زندگي"), w("لعل"), w("شهباز")]);
        let fixes = repair_space_shift(&w("زن"), &w("دگي"), &lex).unwrap();
        assert!(fixes.contains(&SpaceRepair::Merged(w("زندگي"))));
        assert!(repair_space_shift(&w("لعل"), &w("شهباز"), &lex).unwrap().is_empty());
    }

    #[test]
    fn space_shift_matches_brute_force() {
        let lex = Lexicon::from_words([w("ا"), w("ب"), w("اب"), w("بج"), w("ج"), w("ابج")]);
        let left = w("ا");
        let right = w("بج");
        // brute force: every way of writing ابج with zero or one space
        let full = ["ا", "ب", "ج"];
        let mut expected = Vec::new();
        for cut in 1..3 {
            if cut == 1 {
                continue;
            }
            let l = w(&full[..cut].concat());
            let r = w(&full[cut..].concat());
            if lex.contains(&l) && lex.contains(&r) {
                expected.push(SpaceRepair::Shifted { left: l, right: r });
            }
        }
        if lex.contains(&w("ابج")) {
            expected.push(SpaceRepair::Merged(w("ابج")));
        }
        assert_eq!(repair_space_shift(&left, &right, &lex).unwrap(), expected);
        assert_eq!(expected.len(), 2);
    }
}
