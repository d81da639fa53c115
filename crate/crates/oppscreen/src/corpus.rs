//! Dataset handling: labels, annotated tweets, annotation ballots and
//! stratified cross-validation folds.
//!
//! Two on-disk formats are supported. JSONL holds one object per line with
//! keys `id`, `text`, `tickers` and `emotion`. CSV uses the header
//! `id,text,tickers,emotion` with RFC-4180 quoting; the ticker column is a
//! semicolon-separated list. Emotion strings are case-insensitive aliases
//! (`opportunity`/`P+`, `positive_statement`/`S+`, `neutral`/`N`,
//! `negative_awareness`/`A-`).

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::seeding;

/// The four financial emotions. The declaration order fixes the row and
/// column indexing of confusion matrices: S+, P+, N, A-.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EmotionLabel {
    /// S+: positive emotion about present events.
    PositiveStatement,
    /// P+: positive speculation that an asset's value will grow.
    Opportunity,
    /// N: no financial emotion.
    Neutral,
    /// A-: negative opinion about an asset.
    NegativeAwareness,
}

impl EmotionLabel {
    /// All labels in matrix order.
    pub const ALL: [EmotionLabel; 4] = [
        EmotionLabel::PositiveStatement,
        EmotionLabel::Opportunity,
        EmotionLabel::Neutral,
        EmotionLabel::NegativeAwareness,
    ];

    /// Matrix index of the label (S+ = 0, P+ = 1, N = 2, A- = 3).
    pub fn index(self) -> usize {
        match self {
            EmotionLabel::PositiveStatement => 0,
            EmotionLabel::Opportunity => 1,
            EmotionLabel::Neutral => 2,
            EmotionLabel::NegativeAwareness => 3,
        }
    }

    pub fn from_index(i: usize) -> Option<EmotionLabel> {
        Self::ALL.get(i).copied()
    }

    /// Short symbol used in files and reports.
    pub fn symbol(self) -> &'static str {
        match self {
            EmotionLabel::PositiveStatement => "S+",
            EmotionLabel::Opportunity => "P+",
            EmotionLabel::Neutral => "N",
            EmotionLabel::NegativeAwareness => "A-",
        }
    }
}

impl fmt::Display for EmotionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for EmotionLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let folded = s.trim().to_lowercase();
        match folded.as_str() {
            "p+" | "opportunity" => Ok(EmotionLabel::Opportunity),
            "s+" | "positive_statement" | "positive statement" => {
                Ok(EmotionLabel::PositiveStatement)
            }
            "n" | "neutral" => Ok(EmotionLabel::Neutral),
            "a-" | "a\u{2212}" | "negative_awareness" | "negative awareness" => {
                Ok(EmotionLabel::NegativeAwareness)
            }
            _ => Err(Error::UnknownLabel {
                value: s.to_string(),
            }),
        }
    }
}

impl Serialize for EmotionLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.symbol())
    }
}

impl<'de> Deserialize<'de> for EmotionLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|_| {
            D::Error::custom(format!("unknown emotion label {s:?}"))
        })
    }
}

/// A raw dataset row: tweet text with its gold annotation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnnotatedTweet {
    pub id: u64,
    pub text: String,
    #[serde(default)]
    pub tickers: Vec<String>,
    pub emotion: EmotionLabel,
}

/// Expert votes for one tweet.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnnotationBallot {
    pub tweet_id: u64,
    pub votes: Vec<EmotionLabel>,
}

/// Input file format for [`load_dataset`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DatasetFormat {
    Jsonl,
    Csv,
}

impl FromStr for DatasetFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_lowercase().as_str() {
            "jsonl" => Ok(DatasetFormat::Jsonl),
            "csv" => Ok(DatasetFormat::Csv),
            other => Err(Error::InvalidConfig(format!(
                "unknown dataset format {other:?} (expected jsonl or csv)"
            ))),
        }
    }
}

/// Loads a dataset, rejecting duplicate ids, empty texts and unknown labels.
pub fn load_dataset(path: &Path, format: DatasetFormat) -> Result<Vec<AnnotatedTweet>> {
    let rows = match format {
        DatasetFormat::Jsonl => load_jsonl(path)?,
        DatasetFormat::Csv => load_csv(path)?,
    };
    let mut seen: HashMap<u64, usize> = HashMap::new();
    for (line, tweet) in &rows {
        if tweet.text.is_empty() {
            return Err(Error::malformed(path, *line, "empty text"));
        }
        if seen.insert(tweet.id, *line).is_some() {
            return Err(Error::DuplicateId {
                path: path.to_path_buf(),
                line: *line,
                id: tweet.id,
            });
        }
    }
    Ok(rows.into_iter().map(|(_, t)| t).collect())
}

fn load_jsonl(path: &Path) -> Result<Vec<(usize, AnnotatedTweet)>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut rows = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let tweet: AnnotatedTweet = serde_json::from_str(&line)
            .map_err(|e| Error::malformed(path, i + 1, e.to_string()))?;
        rows.push((i + 1, tweet));
    }
    Ok(rows)
}

fn load_csv(path: &Path) -> Result<Vec<(usize, AnnotatedTweet)>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(file);
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let line = i + 2; // header is line 1
        let record = record.map_err(|e| Error::malformed(path, line, e.to_string()))?;
        if record.len() != 4 {
            return Err(Error::malformed(
                path,
                line,
                format!("expected 4 columns, got {}", record.len()),
            ));
        }
        let id: u64 = record[0]
            .trim()
            .parse()
            .map_err(|_| Error::malformed(path, line, format!("bad id {:?}", &record[0])))?;
        let tickers = record[2]
            .split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect();
        let emotion: EmotionLabel = record[3]
            .parse()
            .map_err(|_| Error::malformed(path, line, format!("unknown label {:?}", &record[3])))?;
        rows.push((
            line,
            AnnotatedTweet {
                id,
                text: record[1].to_string(),
                tickers,
                emotion,
            },
        ));
    }
    Ok(rows)
}

/// Writes a dataset as JSONL. Text fields round-trip byte-identically.
pub fn save_dataset_jsonl(path: &Path, dataset: &[AnnotatedTweet]) -> Result<()> {
    let mut out = Vec::new();
    for tweet in dataset {
        serde_json::to_writer(&mut out, tweet).expect("tweet serializes");
        out.push(b'\n');
    }
    std::fs::write(path, out).map_err(|e| Error::io(path, e))
}

/// Loads an annotation ballot file (JSONL with `tweet_id` and `votes`).
pub fn load_ballots(path: &Path) -> Result<Vec<AnnotationBallot>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut rows = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let ballot: AnnotationBallot = serde_json::from_str(&line)
            .map_err(|e| Error::malformed(path, i + 1, e.to_string()))?;
        if ballot.votes.is_empty() {
            return Err(Error::malformed(path, i + 1, "empty ballot"));
        }
        rows.push(ballot);
    }
    Ok(rows)
}

/// Majority vote over a ballot. Ties are broken uniformly at random among
/// the tied labels; the draw is deterministic given `(seed, tweet_id)` and
/// does not depend on the order of the votes.
pub fn aggregate_annotations(ballot: &AnnotationBallot, seed: u64) -> Result<EmotionLabel> {
    if ballot.votes.is_empty() {
        return Err(Error::EmptyInput("annotation ballot"));
    }
    let mut counts = [0usize; 4];
    for vote in &ballot.votes {
        counts[vote.index()] += 1;
    }
    let top = *counts.iter().max().expect("four classes");
    let tied: Vec<EmotionLabel> = EmotionLabel::ALL
        .iter()
        .copied()
        .filter(|l| counts[l.index()] == top)
        .collect();
    if tied.len() == 1 {
        return Ok(tied[0]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seeding::derive(seed, ballot.tweet_id));
    Ok(*tied.choose(&mut rng).expect("tied set non-empty"))
}

/// A stratified partition of tweet ids into `k` folds.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FoldAssignment {
    pub k: usize,
    pub assignment: BTreeMap<u64, usize>,
}

impl FoldAssignment {
    /// Ids assigned to fold `fold`.
    pub fn test_ids(&self, fold: usize) -> HashSet<u64> {
        self.assignment
            .iter()
            .filter(|(_, f)| **f == fold)
            .map(|(id, _)| *id)
            .collect()
    }
}

/// Stratified k-fold split over `(id, label)` pairs, deterministic given
/// the seed. Per-class fold counts differ by at most one, and so do total
/// fold sizes.
pub fn stratified_folds_by_label(
    items: &[(u64, EmotionLabel)],
    k: usize,
    seed: u64,
) -> Result<FoldAssignment> {
    if k < 2 {
        return Err(Error::InvalidConfig(format!("fold count {k} < 2")));
    }
    let mut by_class: [Vec<u64>; 4] = Default::default();
    for (id, label) in items {
        by_class[label.index()].push(*id);
    }
    for label in EmotionLabel::ALL {
        let n = by_class[label.index()].len();
        if n > 0 && n < k {
            return Err(Error::ClassTooSmall {
                label: label.symbol().to_string(),
                count: n,
                k,
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seeding::derive(seed, 0x666f_6c64));
    let mut assignment = BTreeMap::new();
    // Dealing the shuffled classes one after another keeps both per-class
    // and total fold sizes within one of each other.
    let mut cursor = 0usize;
    for label in EmotionLabel::ALL {
        let ids = &mut by_class[label.index()];
        ids.sort_unstable();
        rand::seq::SliceRandom::shuffle(ids.as_mut_slice(), &mut rng);
        for id in ids.iter() {
            assignment.insert(*id, cursor % k);
            cursor += 1;
        }
    }
    Ok(FoldAssignment { k, assignment })
}

/// Stratified k-fold split over a dataset.
pub fn stratified_folds(
    dataset: &[AnnotatedTweet],
    k: usize,
    seed: u64,
) -> Result<FoldAssignment> {
    let items: Vec<(u64, EmotionLabel)> = dataset.iter().map(|t| (t.id, t.emotion)).collect();
    stratified_folds_by_label(&items, k, seed)
}

/// Writes ballots as JSONL.
pub fn save_ballots_jsonl(path: &Path, ballots: &[AnnotationBallot]) -> Result<()> {
    let mut file = File::create(path).map_err(|e| Error::io(path, e))?;
    for ballot in ballots {
        serde_json::to_writer(&mut file, ballot).expect("ballot serializes");
        file.write_all(b"\n").map_err(|e| Error::io(path, e))?;
    }
    Ok(())
}
