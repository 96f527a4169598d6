//! Keyboard layouts and key adjacency.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::confusion::{parse_letter_lines, TableError};

pub const DEFAULT_LAYOUT: &str = include_str!("../data/layout.txt");

/// Staggered key grid. Each row sits half a key to the right of the row
/// above, and two keys are adjacent when their centres are at Chebyshev
/// distance 1 (one key) or less.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyboardLayout {
    rows: Vec<Vec<char>>,
    positions: BTreeMap<char, (usize, usize)>,
}

impl KeyboardLayout {
    pub fn from_rows(rows: Vec<Vec<char>>) -> Result<Self, TableError> {
        let mut positions = BTreeMap::new();
        for (r, row) in rows.iter().enumerate() {
            for (c, &letter) in row.iter().enumerate() {
                if positions.insert(letter, (r, c)).is_some() {
                    return Err(TableError::DuplicateKey { line: r + 1, letter });
                }
            }
        }
        Ok(KeyboardLayout { rows, positions })
    }

    pub fn parse(text: &str) -> Result<Self, TableError> {
        let lines = parse_letter_lines(text)?;
        let mut positions = BTreeMap::new();
        for parsed in &lines {
            for &letter in &parsed.letters {
                if positions.insert(letter, ()).is_some() {
                    return Err(TableError::DuplicateKey { line: parsed.line, letter });
                }
            }
        }
        KeyboardLayout::from_rows(lines.into_iter().map(|p| p.letters).collect())
    }

    pub fn sindhi() -> Self {
        KeyboardLayout::parse(DEFAULT_LAYOUT).expect("built-in layout is valid")
    }

    pub fn rows(&self) -> &[Vec<char>] {
        &self.rows
    }

    pub fn position(&self, ch: char) -> Option<(usize, usize)> {
        self.positions.get(&ch).copied()
    }

    /// Key centre in half-key units: `(row, 2 * column + row)`.
    fn centre(&self, ch: char) -> Option<(i64, i64)> {
        self.position(ch).map(|(r, c)| (r as i64, 2 * c as i64 + r as i64))
    }

    pub fn keyboard_adjacent(&self, a: char, b: char) -> bool {
        if a == b {
            return false;
        }
        match (self.centre(a), self.centre(b)) {
            (Some((ra, xa)), Some((rb, xb))) => (ra - rb).abs() <= 1 && (xa - xb).abs() <= 2,
            _ => false,
        }
    }

    /// Letters on keys adjacent to `ch`.
    pub fn neighbours(&self, ch: char) -> Vec<char> {
        self.rows
            .iter()
            .flatten()
            .copied()
            .filter(|&other| self.keyboard_adjacent(ch, other))
            .collect()
    }
}

impl Default for KeyboardLayout {
    fn default() -> Self {
        KeyboardLayout::sindhi()
    }
}
