use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};

use crate::script::GraphemeSeq;

/// Immutable word list with optional frequency counts.
///
/// Iteration is in codepoint order of the normalized words.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    words: BTreeMap<GraphemeSeq, u64>,
    /// Every distinct cluster occurring in some word.
    inventory: BTreeSet<String>,
    max_len: usize,
}

impl Lexicon {
    pub fn builder() -> LexiconBuilder {
        LexiconBuilder::default()
    }

    /// Lexicon of `words`, each with frequency 0.
    pub fn from_words<I: IntoIterator<Item = GraphemeSeq>>(words: I) -> Self {
        let mut b = LexiconBuilder::default();
        for w in words {
            b.insert(w, 0);
        }
        b.build()
    }

    pub fn contains(&self, word: &GraphemeSeq) -> bool {
        self.contains_str(word.as_str())
    }

    pub fn contains_str(&self, word: &str) -> bool {
        !word.is_empty() && self.words.contains_key(word)
    }

    /// The stored copy of `word`.
    pub fn get(&self, word: &str) -> Option<&GraphemeSeq> {
        self.words.get_key_value(word).map(|(w, _)| w)
    }

    /// Stored count, 0 for unlisted counts and non-members.
    pub fn frequency(&self, word: &GraphemeSeq) -> u64 {
        self.words.get(word.as_str()).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GraphemeSeq, u64)> + '_ {
        self.words.iter().map(|(w, &f)| (w, f))
    }

    pub fn words(&self) -> impl Iterator<Item = &GraphemeSeq> + '_ {
        self.words.keys()
    }

    /// Distinct clusters used by the stored words.
    pub fn cluster_inventory(&self) -> impl Iterator<Item = &str> + '_ {
        self.inventory.iter().map(String::as_str)
    }

    /// Length in clusters of the longest word.
    pub fn max_word_len(&self) -> usize {
        self.max_len
    }
}

#[derive(Debug, Default)]
pub struct LexiconBuilder {
    words: BTreeMap<GraphemeSeq, u64>,
}

impl LexiconBuilder {
    /// Adds `word`; a repeated word keeps the larger frequency. Empty words
    /// are ignored.
    pub fn insert(&mut self, word: GraphemeSeq, frequency: u64) -> &mut Self {
        if word.is_empty() {
            return self;
        }
        let slot = self.words.entry(word).or_insert(frequency);
        if *slot < frequency {
            *slot = frequency;
        }
        self
    }

    pub fn build(self) -> Lexicon {
        let mut inventory = BTreeSet::new();
        let mut max_len = 0;
        for w in self.words.keys() {
            max_len = max_len.max(w.len());
            for c in w.clusters() {
                if !inventory.contains(c) {
                    inventory.insert(c.to_string());
                }
            }
        }
        Lexicon { words: self.words, inventory, max_len }
    }
}
