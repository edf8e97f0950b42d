//! Text forms of words and permutations.
//!
//! Input is either a list of positive integers separated by whitespace,
//! commas or `|`, or a single compact run of digits `1`-`9` with one letter
//! per digit. Output uses single spaces between letters.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{Permutation, Word};

fn tokens(s: &str) -> Vec<&str> {
    s.split(|c: char| c.is_whitespace() || c == ',' || c == '|')
        .filter(|t| !t.is_empty())
        .collect()
}

fn parse_integer(tok: &str) -> Result<u32> {
    if tok.starts_with('-') {
        return Err(Error::Parse { token: tok.to_string(), reason: "negative value" });
    }
    let v: u32 = tok
        .parse()
        .map_err(|_| Error::Parse { token: tok.to_string(), reason: "not a positive integer" })?;
    if v == 0 {
        return Err(Error::Parse { token: tok.to_string(), reason: "zero is not a letter" });
    }
    Ok(v)
}

fn parse_values(s: &str) -> Result<Vec<u32>> {
    let trimmed = s.trim();
    if trimmed.len() > 1 && trimmed.bytes().all(|b| (b'1'..=b'9').contains(&b)) {
        return Ok(trimmed.bytes().map(|b| (b - b'0') as u32).collect());
    }
    tokens(s).into_iter().map(parse_integer).collect()
}

/// Parses `"3 2 3 1 2 3"`, `"3,2,3"` or the compact `"323123"`.
pub fn parse_word(s: &str) -> Result<Word> {
    Word::new(parse_values(s)?)
}

/// Parses a one-line permutation such as `"4321"` or `"10 2 3 4 5 6 7 8 9 1"`.
pub fn parse_permutation(s: &str) -> Result<Permutation> {
    let v = parse_values(s)?;
    if v.is_empty() {
        return Err(Error::Parse { token: s.to_string(), reason: "empty permutation" });
    }
    Permutation::new(v)
}

/// Text that [`parse_word`] reads back as `w`. A lone letter such as `31`
/// would read as the compact `3 1`, so it gets a trailing comma.
pub fn render_word(w: &Word) -> String {
    match w.letters() {
        [x] if *x >= 10 && !x.to_string().contains('0') => format!("{x},"),
        _ => w.to_string(),
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_permutation(s)
    }
}
