//! Compound splitting for hashtags and mentions.
//!
//! `acuerdocomercial` becomes `acuerdo comercial` by picking the
//! segmentation that maximizes the sum of log unigram probabilities over
//! in-lexicon words.

use super::lexicon::FrequencyLexicon;

/// Splits a compound token into lexicon words.
///
/// Tokens that are already in the lexicon come back as a single word.
/// When no full segmentation into lexicon words exists the token is
/// returned unchanged. The returned pieces are slices of the input, so
/// their concatenation reproduces it exactly.
pub fn split_compound(token: &str, lexicon: &FrequencyLexicon) -> Vec<String> {
    if token.is_empty() {
        return vec![];
    }
    if lexicon.contains(token) {
        return vec![token.to_string()];
    }
    let chars: Vec<char> = token.chars().collect();
    let n = chars.len();
    let max_len = lexicon.max_word_chars().min(n);
    // best[i] = (score, start-of-last-word) for the prefix of length i
    let mut best: Vec<Option<(f64, usize)>> = vec![None; n + 1];
    best[0] = Some((0.0, 0));
    for end in 1..=n {
        let lo = end.saturating_sub(max_len);
        for start in lo..end {
            let Some((prefix_score, _)) = best[start] else {
                continue;
            };
            let word: String = chars[start..end].iter().collect();
            let Some(log_p) = lexicon.log_prob(&word) else {
                continue;
            };
            let score = prefix_score + log_p;
            if best[end].is_none_or(|(s, _)| score > s) {
                best[end] = Some((score, start));
            }
        }
    }
    if best[n].is_none() {
        return vec![token.to_string()];
    }
    let mut bounds = vec![n];
    let mut end = n;
    while end > 0 {
        let (_, start) = best[end].expect("reachable prefix");
        bounds.push(start);
        end = start;
    }
    bounds.reverse();
    bounds
        .windows(2)
        .map(|w| chars[w[0]..w[1]].iter().collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lexicon(words: &[(&str, u64)]) -> FrequencyLexicon {
        let mut lex = FrequencyLexicon::default();
        for (w, f) in words {
            lex.insert(w, *f);
        }
        lex
    }

    #[test]
    fn splits_commercial_agreement() {
        let lex = lexicon(&[
            ("acuerdo", 900),
            ("comercial", 700),
            ("a", 90000),
            ("cuerdo", 5),
        ]);
        assert_eq!(
            split_compound("acuerdocomercial", &lex),
            vec!["acuerdo", "comercial"]
        );
    }

    #[test]
    fn in_lexicon_word_returns_itself() {
        let lex = lexicon(&[("ibex", 120), ("i", 10), ("bex", 10)]);
        assert_eq!(split_compound("ibex", &lex), vec!["ibex"]);
    }

    #[test]
    fn unsplittable_token_is_unchanged() {
        let lex = lexicon(&[("acuerdo", 900)]);
        assert_eq!(split_compound("xqzv", &lex), vec!["xqzv"]);
    }

    #[test]
    fn pieces_concatenate_back_to_the_input() {
        let lex = lexicon(&[("valencia", 40), ("plaza", 60)]);
        let parts = split_compound("ValenciaPlaza", &lex);
        assert_eq!(parts.concat(), "ValenciaPlaza");
        assert_eq!(parts.len(), 2);
    }

    #[test]
    fn prefers_likely_segmentation() {
        // "ala" could be "a la" or the word "ala"; splitting is only tried
        // for tokens that are not lexicon entries themselves.
        let lex = lexicon(&[("a", 1000), ("la", 900), ("alac", 1)]);
        assert_eq!(split_compound("ala", &lex), vec!["a", "la"]);
    }
}
