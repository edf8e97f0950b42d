//! Independent ground truth for reduced-word sets.
//!
//! Two enumerators that share no logic: one recurses on descents of the
//! one-line notation and never looks at braid relations, the other closes a
//! seed word under undirected braid moves and never looks at descents.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::word::{evaluate, is_reduced, Permutation, Word};
use crate::wordset::WordSet;

pub const DEFAULT_MAX_WORDS: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMethod {
    DescentRecursion,
    TitsClosure,
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub permutation: Permutation,
    pub count: usize,
    pub method: OracleMethod,
    pub words: Option<WordSet>,
}

impl OracleReport {
    pub fn run(p: &Permutation, method: OracleMethod, max_words: usize, keep_words: bool) -> Result<Self> {
        let words = match method {
            OracleMethod::DescentRecursion => enumerate_by_descents(p, max_words)?,
            OracleMethod::TitsClosure => enumerate_by_tits(&crate::word::natural_word(p), max_words)?,
        };
        Ok(OracleReport {
            permutation: p.clone(),
            count: words.len(),
            method,
            words: keep_words.then_some(words),
        })
    }
}

/// Counts reduced words through the descent recursion, memoized on one-line notation.
#[derive(Default)]
pub struct DescentCounter {
    memo: HashMap<Vec<u32>, u128>,
}

impl DescentCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&mut self, p: &Permutation) -> u128 {
        if p.is_identity() {
            return 1;
        }
        if let Some(&c) = self.memo.get(p.oneline()) {
            return c;
        }
        let descents: Vec<u32> = p.descents().collect();
        let total = descents.into_iter().map(|i| self.count(&p.swap_positions(i))).sum();
        self.memo.insert(p.oneline().to_vec(), total);
        total
    }
}

/// `Red(p) = { r·i : p(i) > p(i+1), r ∈ Red(p with positions i, i+1 swapped) }`.
///
/// Words with different last letters are distinct, so the recursion lists each
/// word once. The size is counted first and the limit enforced before any
/// word is built.
pub fn enumerate_by_descents(p: &Permutation, max_words: usize) -> Result<WordSet> {
    let total = DescentCounter::new().count(p);
    if total > max_words as u128 {
        return Err(Error::EnumerationLimit { limit: max_words });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut suffix = Vec::with_capacity(p.inversion_count());
    descend(p, &mut suffix, &mut out);
    Ok(out.into_iter().collect())
}

fn descend(p: &Permutation, suffix: &mut Vec<u32>, out: &mut Vec<Word>) {
    if p.is_identity() {
        let letters: Vec<u32> = suffix.iter().rev().copied().collect();
        out.push(Word::new(letters).expect("descent positions are positive"));
        return;
    }
    let descents: Vec<u32> = p.descents().collect();
    for i in descents {
        suffix.push(i);
        descend(&p.swap_positions(i), suffix, out);
        suffix.pop();
    }
}

/// Closure of a reduced seed under the undirected short and long braid relations.
pub fn enumerate_by_tits(seed: &Word, max_words: usize) -> Result<WordSet> {
    if !is_reduced(seed) {
        return Err(Error::NotReduced(seed.clone()));
    }
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.letters().to_vec());
    queue.push_back(seed.letters().to_vec());
    while let Some(cur) = queue.pop_front() {
        for next in braid_neighbours(&cur) {
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= max_words {
                return Err(Error::EnumerationLimit { limit: max_words });
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(seen
        .into_iter()
        .map(|v| Word::new(v).expect("braid moves keep letters positive"))
        .collect())
}

fn braid_neighbours(w: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for i in 0..w.len().saturating_sub(1) {
        if w[i].abs_diff(w[i + 1]) >= 2 {
            let mut v = w.to_vec();
            v.swap(i, i + 1);
            out.push(v);
        }
    }
    for i in 0..w.len().saturating_sub(2) {
        let (a, b, c) = (w[i], w[i + 1], w[i + 2]);
        if a == c && a.abs_diff(b) == 1 {
            let mut v = w.to_vec();
            v[i] = b;
            v[i + 1] = a;
            v[i + 2] = b;
            out.push(v);
        }
    }
    out
}

/// Standard Young tableaux of staircase shape `(n-1, n-2, ..., 1)` by the
/// hook-length formula. This is the number of reduced words of the longest
/// permutation of degree `n`.
pub fn staircase_count(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidInput("staircase count needs degree n >= 1".into()));
    }
    let rows: Vec<usize> = (1..n).rev().collect();
    let cells: usize = rows.iter().sum();
    let mut numerator = BigUint::from(1u32);
    for k in 2..=cells {
        numerator *= k;
    }
    let mut hooks = BigUint::from(1u32);
    for (i, &len) in rows.iter().enumerate() {
        for j in 0..len {
            let arm = len - j - 1;
            // column j has n-1-j cells
            let leg = (n - 1 - j) - i - 1;
            hooks *= arm + leg + 1;
        }
    }
    Ok(numerator / hooks)
}

/// Checks that every word is reduced and evaluates to `p`.
pub fn all_reduced_words_of(words: &WordSet, p: &Permutation) -> bool {
    words
        .iter()
        .all(|w| is_reduced(w) && evaluate(w, p.degree()).is_ok_and(|q| q == *p))
}
