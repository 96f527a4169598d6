//! Spell-checking and error-analysis engine for Sindhi in Perso-Arabic
//! script.
//!
//! The crate is `no_std` (it needs `alloc`). Words are normalized into
//! [`GraphemeSeq`]s, misspellings are explained as single-edit (Damerau)
//! transformations, classified along the usual error-taxonomy axes, and
//! ranked into suggestions using phonetic and visual confusion groups,
//! keyboard adjacency and word frequencies.
#![no_std]

extern crate alloc;

pub mod alphabet;
pub mod boundary;
pub mod classify;
pub mod confusion;
pub mod edit;
pub mod inject;
pub mod keyboard;
pub mod lexicon;
pub mod script;
pub mod suggest;
pub mod trends;

pub use alphabet::Alphabet;
pub use classify::{classify_boundary, classify_pair, Category, ErrorClassification};
pub use confusion::ConfusionTable;
pub use edit::{apply, apply_script, damerau_distance, diagnose, generate_candidates, EditKind, EditOp};
pub use keyboard::KeyboardLayout;
pub use lexicon::Lexicon;
pub use script::{normalize, GraphemeSeq, NormalizeError};
pub use suggest::{check_text, suggest, RankingConfig, Suggestion};
pub use trends::{analyze, CorpusPair, TrendReport};
pub use inject::{Distribution, InjectKind, Injector, SeededRng};
pub use suggest::SpellContext;
