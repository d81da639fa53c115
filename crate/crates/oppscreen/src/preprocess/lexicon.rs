//! Word-frequency and lemma resources backing the text pipeline.
//!
//! Both resources are plain TSV files so that they can be swapped for any
//! reference corpus. Lookups are case-folded and accent-preserving.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Word frequencies from a reference corpus. File format: `word<TAB>freq`,
/// UTF-8, one entry per line; `#` starts a comment line.
#[derive(Debug, Clone, Default)]
pub struct FrequencyLexicon {
    entries: HashMap<String, u64>,
    total: u64,
    max_word_chars: usize,
}

impl FrequencyLexicon {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut lex = FrequencyLexicon::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (word, freq) = line.split_once('\t').ok_or_else(|| {
                Error::malformed(path, i + 1, "expected word<TAB>frequency")
            })?;
            let freq: u64 = freq.trim().parse().map_err(|_| {
                Error::malformed(path, i + 1, format!("bad frequency {freq:?}"))
            })?;
            lex.insert(word, freq);
        }
        Ok(lex)
    }

    pub fn insert(&mut self, word: &str, freq: u64) {
        let folded = word.trim().to_lowercase();
        let chars = folded.chars().count();
        self.max_word_chars = self.max_word_chars.max(chars);
        self.total += freq;
        *self.entries.entry(folded).or_insert(0) += freq;
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains_key(&word.to_lowercase())
    }

    pub fn frequency(&self, word: &str) -> u64 {
        self.entries.get(&word.to_lowercase()).copied().unwrap_or(0)
    }

    /// Natural log of the unigram probability; `None` for unknown words.
    pub fn log_prob(&self, word: &str) -> Option<f64> {
        let freq = self.entries.get(&word.to_lowercase()).copied()?;
        if freq == 0 || self.total == 0 {
            return None;
        }
        Some((freq as f64 / self.total as f64).ln())
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_word_chars(&self) -> usize {
        self.max_word_chars
    }

    pub fn words(&self) -> impl Iterator<Item = (&str, u64)> {
        self.entries.iter().map(|(w, f)| (w.as_str(), *f))
    }
}

/// Verb tense recorded by the lemma dictionary, feeding the temporal
/// feature counters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Tense {
    Past,
    Present,
    Future,
    Conditional,
    #[default]
    None,
}

impl Tense {
    pub fn parse(s: &str) -> Option<Tense> {
        match s.trim().to_lowercase().as_str() {
            "past" => Some(Tense::Past),
            "present" => Some(Tense::Present),
            "future" => Some(Tense::Future),
            "conditional" => Some(Tense::Conditional),
            "none" | "-" | "" => Some(Tense::None),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct LemmaEntry {
    pub lemma: String,
    pub pos: String,
    pub tense: Tense,
}

/// Surface-form dictionary: `surface<TAB>lemma<TAB>pos<TAB>tense` per line.
#[derive(Debug, Clone, Default)]
pub struct LemmaDictionary {
    entries: HashMap<String, LemmaEntry>,
    adverbs: HashSet<String>,
}

impl LemmaDictionary {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut dict = LemmaDictionary::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut cols = line.split('\t');
            let surface = cols.next().unwrap_or_default().trim();
            let lemma = cols.next().unwrap_or_default().trim();
            let pos = cols.next().unwrap_or_default().trim();
            let tense = cols.next().unwrap_or("none");
            if surface.is_empty() || lemma.is_empty() {
                return Err(Error::malformed(
                    path,
                    i + 1,
                    "expected surface<TAB>lemma<TAB>pos<TAB>tense",
                ));
            }
            let tense = Tense::parse(tense)
                .ok_or_else(|| Error::malformed(path, i + 1, format!("bad tense {tense:?}")))?;
            dict.insert(surface, lemma, pos, tense);
        }
        Ok(dict)
    }

    pub fn insert(&mut self, surface: &str, lemma: &str, pos: &str, tense: Tense) {
        let folded = surface.to_lowercase();
        if pos.eq_ignore_ascii_case("adv") {
            self.adverbs.insert(lemma.to_lowercase());
        }
        self.entries.insert(
            folded,
            LemmaEntry {
                lemma: lemma.to_string(),
                pos: pos.to_string(),
                tense,
            },
        );
    }

    pub fn lookup(&self, surface: &str) -> Option<&LemmaEntry> {
        self.entries.get(&surface.to_lowercase())
    }

    /// True when the token is a known adverb or carries the `-mente` suffix.
    pub fn is_adverb(&self, token: &str) -> bool {
        let folded = token.to_lowercase();
        if folded.ends_with("mente") && folded.chars().count() > 5 {
            return true;
        }
        self.adverbs.contains(&folded)
            || self
                .entries
                .get(&folded)
                .is_some_and(|e| e.pos.eq_ignore_ascii_case("adv"))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn surfaces(&self) -> impl Iterator<Item = (&str, &LemmaEntry)> {
        self.entries.iter().map(|(s, e)| (s.as_str(), e))
    }
}

/// Loads a one-entry-per-line word list (stop words, keep words, spam
/// phrases, asset hashtags). Entries are folded to lowercase.
pub fn load_word_list(path: &Path) -> Result<Vec<String>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.to_lowercase())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn lexicon_lookup_is_case_folded_and_accent_sensitive() {
        let mut lex = FrequencyLexicon::default();
        lex.insert("Precaución", 10);
        assert!(lex.contains("precaución"));
        assert!(lex.contains("PRECAUCIÓN"));
        assert!(!lex.contains("precaucion"));
        assert_eq!(lex.total(), 10);
    }

    #[test]
    fn log_prob_uses_total() {
        let mut lex = FrequencyLexicon::default();
        lex.insert("a", 30);
        lex.insert("b", 10);
        let p = lex.log_prob("b").unwrap();
        assert!((p - (0.25f64).ln()).abs() < 1e-12);
        assert!(lex.log_prob("c").is_none());
    }

    #[test]
    fn lemma_file_parses_tenses() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "continúa\tcontinuar\tverb\tpresent").unwrap();
        writeln!(f, "subiendo\tsubir\tverb\tnone").unwrap();
        writeln!(f, "apenas\tapenas\tadv\tnone").unwrap();
        let dict = LemmaDictionary::load(f.path()).unwrap();
        let entry = dict.lookup("Continúa").unwrap();
        assert_eq!(entry.lemma, "continuar");
        assert_eq!(entry.tense, Tense::Present);
        assert!(dict.is_adverb("apenas"));
        assert!(dict.is_adverb("rápidamente"));
        assert!(!dict.is_adverb("subiendo"));
    }

    #[test]
    fn bad_tense_is_rejected() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "va\tir\tverb\tsometimes").unwrap();
        assert!(LemmaDictionary::load(f.path()).is_err());
    }
}
