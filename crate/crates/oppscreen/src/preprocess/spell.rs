//! Frequency-guided spelling correction.

use super::lexicon::FrequencyLexicon;

/// Levenshtein distance over unicode scalars, aborting early when the
/// distance is guaranteed to exceed `max`. Accented substitutions cost one
/// edit like any other.
pub fn levenshtein_within(a: &str, b: &str, max: usize) -> Option<usize> {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    if a.len().abs_diff(b.len()) > max {
        return None;
    }
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut curr = vec![0usize; b.len() + 1];
    for (i, ca) in a.iter().enumerate() {
        curr[0] = i + 1;
        let mut row_min = curr[0];
        for (j, cb) in b.iter().enumerate() {
            let cost = usize::from(ca != cb);
            curr[j + 1] = (prev[j] + cost).min(prev[j + 1] + 1).min(curr[j] + 1);
            row_min = row_min.min(curr[j + 1]);
        }
        if row_min > max {
            return None;
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    (prev[b.len()] <= max).then_some(prev[b.len()])
}

/// Replaces an out-of-lexicon token by its most likely in-lexicon
/// candidate within `max_edit` edits.
///
/// Candidates are ranked by edit distance, then by descending frequency,
/// then lexicographically. Distance-2 candidates must share the token's
/// first character, which bounds the search without changing the behavior
/// on ordinary typos. In-lexicon tokens and tokens with no candidate are
/// returned unchanged.
pub fn correct_spelling(token: &str, lexicon: &FrequencyLexicon, max_edit: usize) -> String {
    debug_assert!(max_edit >= 1);
    if token.is_empty() || lexicon.contains(token) {
        return token.to_string();
    }
    let folded = token.to_lowercase();
    let first = folded.chars().next();
    let mut best: Option<(usize, u64, &str)> = None;
    for (word, freq) in lexicon.words() {
        let Some(dist) = levenshtein_within(&folded, word, max_edit) else {
            continue;
        };
        if dist == 0 {
            continue;
        }
        if dist >= 2 && word.chars().next() != first {
            continue;
        }
        let better = match best {
            None => true,
            Some((bd, bf, bw)) => {
                (dist, std::cmp::Reverse(freq), word) < (bd, std::cmp::Reverse(bf), bw)
            }
        };
        if better {
            best = Some((dist, freq, word));
        }
    }
    match best {
        Some((_, _, word)) => word.to_string(),
        None => token.to_string(),
    }
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
    fn distance_counts_accent_substitution_as_one() {
        assert_eq!(levenshtein_within("precausion", "precaución", 2), Some(2));
        assert_eq!(levenshtein_within("mercadp", "mercado", 2), Some(1));
        assert_eq!(levenshtein_within("abc", "xyz", 2), None);
    }

    #[test]
    fn restores_accented_word() {
        let lex = lexicon(&[("precaución", 50), ("precio", 500)]);
        assert_eq!(correct_spelling("precausion", &lex, 2), "precaución");
    }

    #[test]
    fn known_word_is_unchanged() {
        let lex = lexicon(&[("mercado", 100)]);
        assert_eq!(correct_spelling("mercado", &lex, 2), "mercado");
        assert_eq!(correct_spelling("Mercado", &lex, 2), "Mercado");
    }

    #[test]
    fn frequency_breaks_distance_ties() {
        let lex = lexicon(&[("mercado", 100), ("mercados", 10)]);
        assert_eq!(correct_spelling("mercadp", &lex, 2), "mercado");
    }

    #[test]
    fn no_candidate_leaves_token_alone() {
        let lex = lexicon(&[("mercado", 100)]);
        assert_eq!(correct_spelling("zzzzzz", &lex, 2), "zzzzzz");
    }

    #[test]
    fn distance_two_requires_shared_first_letter() {
        let lex = lexicon(&[("casa", 100)]);
        // "masa" -> "casa" is distance 1, allowed from any first letter.
        assert_eq!(correct_spelling("masa", &lex, 2), "casa");
        // "mas" -> "casa" would be distance 2 with a different first letter.
        assert_eq!(correct_spelling("masx", &lex, 2), "masx");
    }

    #[test]
    fn correction_never_leaves_the_lexicon() {
        let lex = lexicon(&[("uno", 5), ("dos", 3), ("tres", 2)]);
        for token in ["unp", "doz", "trez", "qqqq"] {
            let fixed = correct_spelling(token, &lex, 2);
            assert!(fixed == token || lex.contains(&fixed));
        }
    }
}
