//! File formats, report rendering and resource loading for the
//! `sindhi-spell` command-line tool.

pub mod formats;
pub mod render;

use std::fs;
use std::path::{Path, PathBuf};

use sindhi_spell_core::confusion::DEFAULT_PHONETIC;
use sindhi_spell_core::{Alphabet, ConfusionTable, KeyboardLayout, Lexicon, RankingConfig};

pub use formats::FormatError;

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
}

fn read(path: &Path) -> Result<String, LoadError> {
    fs::read_to_string(path).map_err(|source| LoadError::Io { path: path.to_owned(), source })
}

fn parse_err(path: &Path, e: impl ToString) -> LoadError {
    LoadError::Parse { path: path.to_owned(), message: e.to_string() }
}

/// Lexicon, confusion tables, layout and ranking config for one run.
#[derive(Debug, Clone)]
pub struct Resources {
    pub lexicon: Lexicon,
    pub alphabet: Alphabet,
    pub tables: ConfusionTable,
    pub layout: KeyboardLayout,
    pub config: RankingConfig,
}

#[derive(Debug, Clone, Default)]
pub struct ResourcePaths {
    pub lexicon: Option<PathBuf>,
    pub phonetic: Option<PathBuf>,
    pub visual: Option<PathBuf>,
    pub layout: Option<PathBuf>,
    pub config: Option<PathBuf>,
}

impl Resources {
    /// Loads every given file; missing ones fall back to the built-in data
    /// (an empty lexicon for the word list).
    pub fn load(paths: &ResourcePaths) -> Result<Self, LoadError> {
        let alphabet = Alphabet::sindhi();
        let lexicon = match &paths.lexicon {
            Some(p) => formats::load_lexicon(read(p)?.as_bytes()).map_err(|e| parse_err(p, e))?,
            None => Lexicon::default(),
        };
        let phonetic = match &paths.phonetic {
            Some(p) => read(p)?,
            None => DEFAULT_PHONETIC.to_string(),
        };
        let visual = paths.visual.as_deref().map(read).transpose()?;
        let source = paths
            .phonetic
            .as_ref()
            .map_or_else(|| "builtin".to_string(), |p| p.display().to_string());
        let tables = ConfusionTable::parse(&alphabet, &phonetic, visual.as_deref(), &source).map_err(|e| {
            let path = match (&paths.phonetic, &paths.visual) {
                (Some(p), _) | (None, Some(p)) => p.clone(),
                _ => PathBuf::from("builtin"),
            };
            parse_err(&path, e)
        })?;
        let layout = match &paths.layout {
            Some(p) => KeyboardLayout::parse(&read(p)?).map_err(|e| parse_err(p, e))?,
            None => KeyboardLayout::sindhi(),
        };
        let config = match &paths.config {
            Some(p) => formats::parse_config(&read(p)?).map_err(|e| parse_err(p, e))?,
            None => RankingConfig::default(),
        };
        Ok(Resources { lexicon, alphabet, tables, layout, config })
    }

    pub fn context(&self) -> sindhi_spell_core::SpellContext<'_> {
        sindhi_spell_core::SpellContext {
            lexicon: &self.lexicon,
            alphabet: &self.alphabet,
            tables: &self.tables,
            layout: &self.layout,
        }
    }
}
