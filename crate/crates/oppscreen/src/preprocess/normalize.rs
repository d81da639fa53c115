//! Quantity and laughter normalization plus tokenization.
//!
//! Signed numbers and percentages collapse to `+` / `-` tokens so that the
//! classifier sees the direction of a movement rather than its magnitude.
//! Laughing onomatopoeia (j/h interleaved with a/e/i) becomes the `LAUGH`
//! tag. Tokenization isolates punctuation, keeps `!` and `?` as tokens
//! after counting them, lowercases words and maps emoji to stable
//! codepoint names (`emoji_1f4c8`).

use serde::{Deserialize, Serialize};

/// Sign tag recorded for each quantity found in a tweet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum QuantityTag {
    Plus,
    Minus,
    PlusPct,
    MinusPct,
}

/// Token emitted for laughter runs.
pub const LAUGH_TOKEN: &str = "LAUGH";

/// True for laughing onomatopoeia: only `j`/`h` interleaved with `a`/`e`/`i`,
/// at least four characters with two consonants and two vowels.
pub fn is_laughter(core: &str) -> bool {
    let folded = core.to_lowercase();
    let chars: Vec<char> = folded.chars().collect();
    if chars.len() < 4 {
        return false;
    }
    let consonants = chars.iter().filter(|c| matches!(c, 'j' | 'h')).count();
    let vowels = chars.iter().filter(|c| matches!(c, 'a' | 'e' | 'i')).count();
    if consonants < 2 || vowels < 2 || consonants + vowels != chars.len() {
        return false;
    }
    // Shape [jh]?([aei][jh])+[aei]? — strict alternation.
    let mut i = 0;
    if matches!(chars[0], 'j' | 'h') {
        i = 1;
    }
    let mut pairs = 0;
    while i + 1 < chars.len()
        && matches!(chars[i], 'a' | 'e' | 'i')
        && matches!(chars[i + 1], 'j' | 'h')
    {
        pairs += 1;
        i += 2;
    }
    if i < chars.len() {
        if !matches!(chars[i], 'a' | 'e' | 'i') {
            return false;
        }
        i += 1;
    }
    pairs >= 1 && i == chars.len()
}

fn quantity_of(core: &str) -> Option<QuantityTag> {
    let mut chars = core.chars().peekable();
    let negative = match chars.peek() {
        Some('-') | Some('\u{2212}') => {
            chars.next();
            true
        }
        Some('+') => {
            chars.next();
            false
        }
        _ => false,
    };
    let mut digits = 0usize;
    let mut percent = false;
    let mut prev_digit = false;
    for c in chars {
        match c {
            '0'..='9' => {
                digits += 1;
                prev_digit = true;
            }
            '.' | ',' if prev_digit => {
                prev_digit = false;
            }
            '%' if prev_digit && !percent => {
                percent = true;
                prev_digit = false;
            }
            _ => return None,
        }
        if percent && c != '%' {
            return None;
        }
    }
    if digits == 0 || (!prev_digit && !percent) {
        return None;
    }
    Some(match (negative, percent) {
        (true, true) => QuantityTag::MinusPct,
        (true, false) => QuantityTag::Minus,
        (false, true) => QuantityTag::PlusPct,
        (false, false) => QuantityTag::Plus,
    })
}

/// Splits a whitespace piece into (leading punctuation, core, trailing
/// punctuation). The core keeps leading signs and interior punctuation.
fn split_piece(piece: &str) -> (&str, &str, &str) {
    let is_core_char = |c: char| c.is_alphanumeric() || c == '+' || c == '-' || c == '\u{2212}';
    let start = piece
        .char_indices()
        .find(|(_, c)| is_core_char(*c))
        .map(|(i, _)| i);
    let Some(start) = start else {
        return ("", "", piece);
    };
    let end = piece
        .char_indices()
        .rev()
        .find(|(_, c)| c.is_alphanumeric() || *c == '%')
        .map(|(i, c)| i + c.len_utf8())
        .unwrap_or(piece.len());
    if end <= start {
        return ("", "", piece);
    }
    (&piece[..start], &piece[start..end], &piece[end..])
}

/// Replaces quantities by their sign and laughter by [`LAUGH_TOKEN`].
pub fn normalize_quantities_and_laughter(text: &str) -> (String, Vec<QuantityTag>, u32) {
    let mut tags = Vec::new();
    let mut laughs = 0u32;
    let mut pieces: Vec<String> = Vec::new();
    for piece in text.split_whitespace() {
        let (pre, core, post) = split_piece(piece);
        if let Some(tag) = quantity_of(core) {
            let sign = match tag {
                QuantityTag::Minus | QuantityTag::MinusPct => "-",
                QuantityTag::Plus | QuantityTag::PlusPct => "+",
            };
            tags.push(tag);
            push_spaced(&mut pieces, pre, sign, post);
        } else if !core.is_empty() && core.chars().all(char::is_alphabetic) && is_laughter(core) {
            laughs += 1;
            push_spaced(&mut pieces, pre, LAUGH_TOKEN, post);
        } else {
            pieces.push(piece.to_string());
        }
    }
    (pieces.join(" "), tags, laughs)
}

fn push_spaced(pieces: &mut Vec<String>, pre: &str, core: &str, post: &str) {
    if !pre.is_empty() {
        pieces.push(pre.to_string());
    }
    pieces.push(core.to_string());
    if !post.is_empty() {
        pieces.push(post.to_string());
    }
}

fn is_emoji_char(c: char) -> bool {
    matches!(u32::from(c),
        0x1F000..=0x1FAFF
        | 0x2600..=0x27BF
        | 0x2190..=0x21FF
        | 0x2B00..=0x2BFF
    )
}

fn is_joiner(c: char) -> bool {
    matches!(u32::from(c), 0xFE0E | 0xFE0F | 0x200D)
}

/// Output of [`tokenize`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TokenScan {
    pub tokens: Vec<String>,
    pub exclamation_count: u32,
    pub interrogation_count: u32,
    pub emojis: Vec<String>,
}

/// Whitespace tokenization with punctuation isolation.
///
/// `!` and `?` are counted and kept as standalone tokens; the signs `+`
/// and `-` survive when they stand alone; all other punctuation is
/// dropped. Words are lowercased except the `LAUGH` tag.
pub fn tokenize(text: &str) -> TokenScan {
    let mut scan = TokenScan::default();
    for piece in text.split_whitespace() {
        if piece == "+" || piece == "-" {
            scan.tokens.push(piece.to_string());
            continue;
        }
        let mut word = String::new();
        let mut flush = |word: &mut String, scan: &mut TokenScan| {
            if word.is_empty() {
                return;
            }
            if word == LAUGH_TOKEN {
                scan.tokens.push(std::mem::take(word));
            } else {
                scan.tokens.push(std::mem::take(word).to_lowercase());
            }
        };
        for c in piece.chars() {
            if is_joiner(c) {
                continue;
            }
            if is_emoji_char(c) {
                flush(&mut word, &mut scan);
                let name = format!("emoji_{:x}", u32::from(c));
                scan.emojis.push(name.clone());
                scan.tokens.push(name);
            } else if c == '!' {
                flush(&mut word, &mut scan);
                scan.exclamation_count += 1;
                scan.tokens.push("!".to_string());
            } else if c == '?' {
                flush(&mut word, &mut scan);
                scan.interrogation_count += 1;
                scan.tokens.push("?".to_string());
            } else if c.is_alphanumeric() || c == '_' || c == '\'' {
                word.push(c);
            } else {
                flush(&mut word, &mut scan);
            }
        }
        flush(&mut word, &mut scan);
    }
    scan
}
