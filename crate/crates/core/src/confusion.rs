//! Phonetic and visual confusion groups.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use unicode_normalization::UnicodeNormalization;

use crate::alphabet::{base_letter, Alphabet};

pub const DEFAULT_PHONETIC: &str = include_str!("../data/phonetic.txt");

/// Dot-less base shape (rasm) of each default letter. Letters mapping to the
/// same skeleton differ only in dots or small diacritic strokes.
pub const SKELETONS: [(char, char); 52] = [
    ('ا', 'ا'),
    ('ب', 'ٮ'), ('ٻ', 'ٮ'), ('ڀ', 'ٮ'), ('ت', 'ٮ'), ('ٿ', 'ٮ'),
    ('ٽ', 'ٮ'), ('ٺ', 'ٮ'), ('ث', 'ٮ'), ('پ', 'ٮ'),
    ('ج', 'ح'), ('ڄ', 'ح'), ('ڃ', 'ح'), ('چ', 'ح'), ('ڇ', 'ح'), ('ح', 'ح'), ('خ', 'ح'),
    ('د', 'د'), ('ڌ', 'د'), ('ڏ', 'د'), ('ڊ', 'د'), ('ڍ', 'د'), ('ذ', 'د'),
    ('ر', 'ر'), ('ڙ', 'ر'), ('ز', 'ر'),
    ('س', 'س'), ('ش', 'س'),
    ('ص', 'ص'), ('ض', 'ص'),
    ('ط', 'ط'), ('ظ', 'ط'),
    ('ع', 'ع'), ('غ', 'ع'),
    ('ف', 'ڡ'), ('ڦ', 'ڡ'),
    ('ق', 'ٯ'),
    ('ڪ', 'ڪ'),
    ('ک', 'ک'), ('گ', 'ک'), ('ڳ', 'ک'), ('ڱ', 'ک'),
    ('ل', 'ل'),
    ('م', 'م'),
    ('ن', 'ں'), ('ڻ', 'ں'),
    ('و', 'و'),
    ('ه', 'ه'),
    ('ء', 'ء'),
    ('ي', 'ى'), ('ی', 'ى'),
    ('ھ', 'ھ'),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableError {
    /// A member on `line` is not a single letter.
    BadMember { line: usize, member: String },
    /// A letter outside the alphabet.
    NotInAlphabet { line: usize, letter: char },
    /// A letter listed in two groups.
    Overlap { line: usize, letter: char },
    /// A layout key listed twice.
    DuplicateKey { line: usize, letter: char },
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::BadMember { line, member } => {
                write!(f, "line {line}: `{member}` is not a single letter")
            }
            TableError::NotInAlphabet { line, letter } => {
                write!(f, "line {line}: {letter} is not in the alphabet")
            }
            TableError::Overlap { line, letter } => {
                write!(f, "line {line}: {letter} already belongs to another group")
            }
            TableError::DuplicateKey { line, letter } => {
                write!(f, "line {line}: key {letter} appears twice in the layout")
            }
        }
    }
}

/// One parsed line of a group/row file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedLine {
    pub line: usize,
    pub letters: Vec<char>,
}

/// Parses the shared group/row text format: one group per line, members
/// separated by spaces, `#` comment lines and blank lines ignored.
pub fn parse_letter_lines(text: &str) -> Result<Vec<ParsedLine>, TableError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut letters = Vec::new();
        for member in trimmed.split_whitespace() {
            let nfc: String = member.nfc().collect();
            let mut chars = nfc.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => letters.push(c),
                _ => return Err(TableError::BadMember { line, member: member.to_string() }),
            }
        }
        out.push(ParsedLine { line, letters });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhoneticGroup {
    pub sound_code: u16,
    pub members: Vec<char>,
}

/// Phonetic sound-code groups and visual shape groups.
#[derive(Debug, Clone)]
pub struct ConfusionTable {
    phonetic: Vec<PhoneticGroup>,
    phonetic_index: BTreeMap<char, u16>,
    visual: Vec<Vec<char>>,
    visual_index: BTreeMap<char, usize>,
    source: String,
}

impl ConfusionTable {
    /// Builds a table from parsed phonetic lines and optional visual lines.
    /// Without visual lines the shape groups come from [`SKELETONS`].
    pub fn from_lines(
        alphabet: &Alphabet,
        phonetic: &[ParsedLine],
        visual: Option<&[ParsedLine]>,
        source: &str,
    ) -> Result<Self, TableError> {
        let mut table = ConfusionTable {
            phonetic: Vec::new(),
            phonetic_index: BTreeMap::new(),
            visual: Vec::new(),
            visual_index: BTreeMap::new(),
            source: source.to_string(),
        };
        for (i, parsed) in phonetic.iter().enumerate() {
            let code = (i + 1) as u16;
            for &letter in &parsed.letters {
                if !alphabet.contains(letter) {
                    return Err(TableError::NotInAlphabet { line: parsed.line, letter });
                }
                if table.phonetic_index.insert(letter, code).is_some() {
                    return Err(TableError::Overlap { line: parsed.line, letter });
                }
            }
            table.phonetic.push(PhoneticGroup { sound_code: code, members: parsed.letters.clone() });
        }
        let visual_groups: Vec<(usize, Vec<char>)> = match visual {
            Some(lines) => lines.iter().map(|p| (p.line, p.letters.clone())).collect(),
            None => skeleton_groups(alphabet).into_iter().map(|g| (0, g)).collect(),
        };
        for (line, group) in visual_groups {
            let id = table.visual.len();
            for &letter in &group {
                if !alphabet.contains(letter) {
                    return Err(TableError::NotInAlphabet { line, letter });
                }
                if table.visual_index.insert(letter, id).is_some() {
                    return Err(TableError::Overlap { line, letter });
                }
            }
            table.visual.push(group);
        }
        Ok(table)
    }

    /// Parses phonetic (and optionally visual) group files.
    pub fn parse(
        alphabet: &Alphabet,
        phonetic: &str,
        visual: Option<&str>,
        source: &str,
    ) -> Result<Self, TableError> {
        let p = parse_letter_lines(phonetic)?;
        let v = visual.map(parse_letter_lines).transpose()?;
        ConfusionTable::from_lines(alphabet, &p, v.as_deref(), source)
    }

    /// Built-in Sindhi tables.
    pub fn sindhi() -> Self {
        ConfusionTable::parse(&Alphabet::sindhi(), DEFAULT_PHONETIC, None, "builtin")
            .expect("built-in phonetic table is valid")
    }

    pub fn phonetic_groups(&self) -> &[PhoneticGroup] {
        &self.phonetic
    }

    pub fn visual_groups(&self) -> &[Vec<char>] {
        &self.visual
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Sound code of the group containing `ch` (or its base letter).
    pub fn phonetic_group(&self, ch: char) -> Option<u16> {
        self.phonetic_index
            .get(&ch)
            .or_else(|| self.phonetic_index.get(&base_letter(ch)))
            .copied()
    }

    /// Distinct letters sharing `ch`'s phonetic group.
    pub fn phonetic_alternatives(&self, ch: char) -> Vec<char> {
        match self.phonetic_group(ch) {
            Some(code) => self.phonetic[code as usize - 1]
                .members
                .iter()
                .copied()
                .filter(|&c| c != ch)
                .collect(),
            None => Vec::new(),
        }
    }

    fn visual_id(&self, ch: char) -> Option<usize> {
        self.visual_index
            .get(&ch)
            .or_else(|| self.visual_index.get(&base_letter(ch)))
            .copied()
    }

    /// Reflexive, symmetric shape similarity.
    pub fn visually_similar(&self, a: char, b: char) -> bool {
        if a == b || base_letter(a) == base_letter(b) {
            return true;
        }
        matches!((self.visual_id(a), self.visual_id(b)), (Some(x), Some(y)) if x == y)
    }

    /// Distinct letters sharing `ch`'s visual group.
    pub fn visual_alternatives(&self, ch: char) -> Vec<char> {
        match self.visual_id(ch) {
            Some(id) => self.visual[id].iter().copied().filter(|&c| c != ch).collect(),
            None => Vec::new(),
        }
    }
}

impl Default for ConfusionTable {
    fn default() -> Self {
        ConfusionTable::sindhi()
    }
}

/// Groups alphabet letters by skeleton, keeping groups of two or more.
fn skeleton_groups(alphabet: &Alphabet) -> Vec<Vec<char>> {
    let mut by_skeleton: BTreeMap<char, Vec<char>> = BTreeMap::new();
    for &letter in alphabet.letters() {
        if let Some(&(_, skel)) = SKELETONS.iter().find(|(l, _)| *l == letter) {
            by_skeleton.entry(skel).or_default().push(letter);
        }
    }
    by_skeleton.into_values().filter(|g| g.len() > 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_phonetic_shape() {
        let t = ConfusionTable::sindhi();
        assert_eq!(t.phonetic_groups().len(), 22);
        let alphabet = Alphabet::sindhi();
        // every base letter covered exactly once
        for &c in alphabet.letters() {
            assert!(t.phonetic_group(c).is_some(), "{c} uncovered");
        }
        let base_members: usize = t
            .phonetic_groups()
            .iter()
            .map(|g| g.members.iter().filter(|&&c| base_letter(c) == c).count())
            .sum();
        assert_eq!(base_members, 52);
    }

    #[test]
    fn verbatim_pairs() {
        let t = ConfusionTable::sindhi();
        assert!(t.phonetic_group('ت').is_some());
        assert_eq!(t.phonetic_group('ت'), t.phonetic_group('ط'));
        assert_eq!(t.phonetic_group('ه'), t.phonetic_group('ح'));
        let g1 = t.phonetic_group('ا');
        for c in ['آ', 'ء', 'ي', 'ئ'] {
            assert_eq!(t.phonetic_group(c), g1);
        }
        assert_eq!(t.phonetic_group('x'), None);
    }

    #[test]
    fn visual_examples() {
        let t = ConfusionTable::sindhi();
        assert!(t.visually_similar('ب', 'پ'));
        assert!(!t.visually_similar('ا', 'ب'));
        assert!(t.visually_similar('ت', 'ت'));
        assert!(t.visually_similar('ي', 'ی'));
        assert!(t.visually_similar('آ', 'ا'));
    }

    #[test]
    fn skeleton_table_covers_alphabet() {
        for &c in Alphabet::sindhi().letters() {
            assert!(SKELETONS.iter().any(|(l, _)| *l == c), "{c}");
        }
    }

    #[test]
    fn overlapping_groups_rejected() {
        let a = Alphabet::sindhi();
        let err = ConfusionTable::parse(&a, "ت ط\nط ظ\n", None, "t").unwrap_err();
        assert_eq!(err, TableError::Overlap { line: 2, letter: 'ط' });
        let err = ConfusionTable::parse(&a, "# c\nت x\n", None, "t").unwrap_err();
        assert_eq!(err, TableError::NotInAlphabet { line: 2, letter: 'x' });
        let err = ConfusionTable::parse(&a, "تط\n", None, "t").unwrap_err();
        assert!(matches!(err, TableError::BadMember { line: 1, .. }));
    }

    #[test]
    fn visual_override() {
        let a = Alphabet::sindhi();
        let t = ConfusionTable::parse(&a, "ت ط\n", Some("ا ل\n"), "t").unwrap();
        assert!(t.visually_similar('ا', 'ل'));
        assert!(!t.visually_similar('ب', 'پ'));
    }
}
