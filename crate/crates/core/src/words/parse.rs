use crate::coeff::RatFunc;

use super::{Element, Gen, Word, WordError};

/// Splits `text` at top-level ` + ` / ` - ` separators (outside parentheses),
/// returning each term with its sign.
pub(crate) fn split_terms(text: &str) -> Vec<(bool, String)> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut neg = false;
    let mut i = 0;
    // leading "- "
    let trimmed = text.trim_start();
    if let Some(rest) = trimmed.strip_prefix("- ") {
        return prefix_neg(split_terms(rest));
    }
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b' ' if depth == 0
                && i + 2 < bytes.len()
                && bytes[i + 2] == b' '
                && (bytes[i + 1] == b'+' || bytes[i + 1] == b'-') =>
            {
                out.push((neg, text[start..i].to_string()));
                neg = bytes[i + 1] == b'-';
                i += 3;
                start = i;
                continue;
            }
            _ => {}
        }
        i += 1;
    }
    out.push((neg, text[start..].to_string()));
    out
}

fn prefix_neg(mut terms: Vec<(bool, String)>) -> Vec<(bool, String)> {
    if let Some(first) = terms.first_mut() {
        first.0 = !first.0;
    }
    terms
}

fn is_gen_token(tok: &str) -> bool {
    tok.parse::<Gen>().is_ok()
}

pub(crate) fn parse_element(text: &str, strands: usize) -> Result<Element, WordError> {
    let text = text.trim();
    if text == "0" {
        return Ok(Element::zero(strands));
    }
    let mut acc = Element::zero(strands);
    for (neg, term) in split_terms(text) {
        let term = term.trim();
        if term.is_empty() {
            return Err(WordError::Parse("empty term".into()));
        }
        let (coeff, word) = match find_top_level_star(term) {
            Some(k) => (term[..k].trim(), term[k + 3..].trim()),
            None if term.split_whitespace().all(is_gen_token) => ("1", term),
            None => (term, "1"),
        };
        let c: RatFunc = coeff.parse().map_err(|e| WordError::Parse(format!("{e}")))?;
        let c = if neg { c.neg() } else { c };
        let w = Word::parse(word, strands)?;
        acc = acc.add(&Element::term(c, w))?;
    }
    Ok(acc)
}

/// Last ` * ` outside parentheses; separates a coefficient from its word.
pub(crate) fn find_top_level_star(term: &str) -> Option<usize> {
    let b = term.as_bytes();
    let mut depth = 0i32;
    let mut found = None;
    for i in 0..b.len() {
        match b[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'*' if depth == 0 && i > 0 && b[i - 1] == b' ' && b.get(i + 1) == Some(&b' ') => {
                found = Some(i - 1)
            }
            _ => {}
        }
    }
    found
}
