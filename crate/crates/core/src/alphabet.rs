use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use unicode_normalization::char::decompose_canonical;

/// The 52 base letters of the default Sindhi alphabet.
///
/// Fifty single-codepoint letters of the standard alphabet, do-chashmi heh
/// (ھ, written in the aspirated digraphs جھ and گھ) and Farsi yeh (ی).
/// Precomposed letters such as آ and ئ are variants of their base letter;
/// see [`base_letter`].
pub const DEFAULT_LETTERS: [char; 52] = [
    'ا', 'ب', 'ٻ', 'ڀ', 'ت', 'ٿ', 'ٽ', 'ٺ', 'ث', 'پ', //
    'ج', 'ڄ', 'ڃ', 'چ', 'ڇ', 'ح', 'خ', //
    'د', 'ڌ', 'ڏ', 'ڊ', 'ڍ', 'ذ', 'ر', 'ڙ', 'ز', //
    'س', 'ش', 'ص', 'ض', 'ط', 'ظ', 'ع', 'غ', //
    'ف', 'ڦ', 'ق', 'ڪ', 'ک', 'گ', 'ڳ', 'ڱ', //
    'ل', 'م', 'ن', 'ڻ', 'و', 'ه', 'ء', 'ي', //
    'ھ', 'ی',
];

/// First character of the canonical decomposition of `ch`.
///
/// `base_letter('آ') == 'ا'`, `base_letter('ئ') == 'ي'`; characters without
/// a decomposition map to themselves.
pub fn base_letter(ch: char) -> char {
    let mut base = None;
    decompose_canonical(ch, |c| {
        if base.is_none() {
            base = Some(c);
        }
    });
    base.unwrap_or(ch)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphabetError {
    Duplicate(char),
    NotBase(char),
}

impl fmt::Display for AlphabetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphabetError::Duplicate(c) => write!(f, "duplicate letter {c}"),
            AlphabetError::NotBase(c) => write!(f, "{c} is not a base letter"),
        }
    }
}

/// Ordered set of base letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<char>,
    index: BTreeSet<char>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(letters: I) -> Result<Self, AlphabetError> {
        let mut out = Alphabet { letters: Vec::new(), index: BTreeSet::new() };
        for c in letters {
            if base_letter(c) != c || c.is_whitespace() {
                return Err(AlphabetError::NotBase(c));
            }
            if !out.index.insert(c) {
                return Err(AlphabetError::Duplicate(c));
            }
            out.letters.push(c);
        }
        Ok(out)
    }

    pub fn sindhi() -> Self {
        Alphabet::new(DEFAULT_LETTERS).expect("default alphabet is valid")
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True for alphabet letters and for precomposed variants of them.
    pub fn contains(&self, ch: char) -> bool {
        self.index.contains(&ch) || self.index.contains(&base_letter(ch))
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet::sindhi()
    }
}
