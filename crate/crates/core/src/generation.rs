//! Generating every reduced word from the natural word.
//!
//! First the towers of the natural word pass through each other (passage
//! words) to give the basic words. Then each basic word, split into its
//! towers, is expanded by restricted shuffles.
//!
//! Passage works on a *tower factorization*: a sequence of tower words that
//! need not be maximal, so `3456 789` counts as two towers even though the
//! letters run on. A letter that has passed through becomes a tower of its
//! own and is not merged with its neighbours while further letters pass.

use std::collections::BTreeSet;
use std::fmt;

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::word::{is_reduced, natural_word, tower_decomposition, Permutation, Word};
use crate::wordset::WordSet;

/// A word split into tower words, not necessarily maximally.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TowerFactorization(Vec<Word>);

impl TowerFactorization {
    pub fn new(towers: Vec<Word>) -> Result<Self> {
        if let Some(bad) = towers.iter().find(|t| !t.is_tower()) {
            return Err(Error::InvalidInput(format!("{bad} is not a tower word")));
        }
        Ok(TowerFactorization(towers))
    }

    /// The maximal factorization.
    pub fn maximal(w: &Word) -> Self {
        TowerFactorization(tower_decomposition(w).into_towers())
    }

    pub fn towers(&self) -> &[Word] {
        &self.0
    }

    pub fn word(&self) -> Word {
        Word::concat(&self.0)
    }

    fn with_inserted(&self, at: usize, letter: u32) -> Self {
        let mut towers = self.0.clone();
        towers.insert(at, Word::new(vec![letter]).expect("letters stay positive"));
        TowerFactorization(towers)
    }
}

impl fmt::Display for TowerFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Values of a letter as it passes rightwards through successive towers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrackSequence {
    values: Vec<u32>,
}

impl TrackSequence {
    /// `b_0, b_1, ..., b_s`.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// The index `s` of the last defined term.
    pub fn defined_upto(&self) -> usize {
        self.values.len() - 1
    }
}

/// Inside a tower (`in < b <= fin`) the letter drops by one; well clear of it
/// (`b <= in - 2` or `b >= fin + 2`) it is unchanged; otherwise the track ends.
pub fn track_sequence(b: u32, a: &TowerFactorization) -> TrackSequence {
    let mut values = vec![b];
    for t in a.towers() {
        let cur = *values.last().unwrap();
        let (lo, hi) = (t.first().unwrap(), t.last().unwrap());
        let next = if lo < cur && cur <= hi {
            cur - 1
        } else if cur + 2 <= lo || cur >= hi + 2 {
            cur
        } else {
            break;
        };
        values.push(next);
    }
    TrackSequence { values }
}

/// [`passwords_letter`] keeping the factorization: `b_i` becomes a tower of
/// its own after the `i`-th tower.
pub fn passage_of_letter(b: u32, a: &TowerFactorization) -> Vec<TowerFactorization> {
    if !is_reduced(&a.word().prepend(b)) {
        return Vec::new();
    }
    let track = track_sequence(b, a);
    track.values().iter().enumerate().map(|(i, &bi)| a.with_inserted(i, bi)).collect()
}

/// [`passwords_word`] keeping the factorization.
pub fn passage_of_word(beta: &[u32], a: &TowerFactorization) -> BTreeSet<TowerFactorization> {
    let mut out = BTreeSet::new();
    let mut joined = beta.to_vec();
    joined.extend(a.word().letters());
    if !is_reduced(&Word::new(joined).expect("positive letters")) {
        return out;
    }
    let Some((&last, prefix)) = beta.split_last() else {
        out.insert(a.clone());
        return out;
    };
    for passed in passage_of_letter(last, a) {
        out.extend(passage_of_word(prefix, &passed));
    }
    out
}

/// `passwords(b, a)`: empty unless `b a` is reduced; otherwise `b a` together
/// with `b_i` inserted after the `i`-th tower for each defined track term.
pub fn passwords_letter(b: u32, a: &TowerFactorization) -> WordSet {
    let out: WordSet = passage_of_letter(b, a).iter().map(TowerFactorization::word).collect();
    debug_assert!(same_permutation(&out));
    out
}

/// `passwords(beta, a)`: the last letter of `beta` passes first, then the
/// rest of `beta` passes through each result.
pub fn passwords_word(beta: &Word, a: &TowerFactorization) -> WordSet {
    let out: WordSet = passage_of_word(beta.letters(), a).iter().map(TowerFactorization::word).collect();
    debug_assert!(same_permutation(&out));
    out
}

/// `[B, A]`: union of `passwords(beta, alpha)` over `beta` in `B`, `alpha` in
/// `A`, each `alpha` taken with its maximal factorization.
pub fn bracket(b: &WordSet, a: &WordSet) -> WordSet {
    let mut out = WordSet::new();
    for alpha in a.iter() {
        let fact = TowerFactorization::maximal(alpha);
        for beta in b.iter() {
            out.extend_from(passwords_word(beta, &fact));
        }
    }
    out
}

/// Left-nested brackets of the singleton sets of the natural word's towers.
pub fn basic_words(p: &Permutation) -> WordSet {
    let towers = tower_decomposition(&natural_word(p)).into_towers();
    let mut it = towers.into_iter();
    let Some(first) = it.next() else {
        return WordSet::singleton(Word::empty());
    };
    let mut acc = WordSet::singleton(first);
    for t in it {
        acc = bracket(&acc, &WordSet::singleton(t));
    }
    acc
}

fn interleave(
    a: &[u32],
    b: &[u32],
    need: &[usize],
    buf: &mut Vec<u32>,
    (ri, bi): (usize, usize),
    emit: &mut dyn FnMut(&[u32]),
) {
    if ri == a.len() && bi == b.len() {
        emit(buf);
        return;
    }
    if bi < b.len() && ri >= need[bi] {
        buf.push(b[bi]);
        interleave(a, b, need, buf, (ri, bi + 1), emit);
        buf.pop();
    }
    if ri < a.len() {
        buf.push(a[ri]);
        interleave(a, b, need, buf, (ri + 1, bi), emit);
        buf.pop();
    }
}

// a blue letter may precede the red suffix starting after `need` reds only
// if that suffix has no letter within distance one of it
fn blue_needs(a: &[u32], b: &[u32]) -> Vec<usize> {
    b.iter()
        .map(|&x| a.iter().rposition(|&y| y.abs_diff(x) <= 1).map_or(0, |i| i + 1))
        .collect()
}

fn shuffle_letters(a: &[u32], b: &[u32], emit: &mut dyn FnMut(&[u32])) {
    let need = blue_needs(a, b);
    let mut buf = Vec::with_capacity(a.len() + b.len());
    interleave(a, b, &need, &mut buf, (0, 0), emit);
}

// Shuffles `alpha` with the first part, then each result with the next part,
// without collecting the intermediate sets.
fn shuffle_parts(alpha: &[u32], parts: &[Word], emit: &mut dyn FnMut(&[u32])) {
    match parts.split_first() {
        None => emit(alpha),
        Some((u, rest)) => shuffle_letters(alpha, u.letters(), &mut |w| shuffle_parts(w, rest, emit)),
    }
}

// As `shuffle_parts`, skipping any (partial shuffle, remaining parts) state
// already expanded; such a state always yields the same words.
fn shuffle_parts_once(
    alpha: &[u32],
    parts: &[Word],
    expanded: &mut FxHashSet<Vec<u32>>,
    emit: &mut dyn FnMut(&[u32]),
) {
    let Some((u, rest)) = parts.split_first() else {
        emit(alpha);
        return;
    };
    let mut key = Vec::with_capacity(alpha.len() + parts.iter().map(|t| t.len() + 1).sum::<usize>());
    key.extend_from_slice(alpha);
    for t in parts {
        key.push(0);
        key.extend_from_slice(t.letters());
    }
    if !expanded.insert(key) {
        return;
    }
    shuffle_letters(alpha, u.letters(), &mut |w| shuffle_parts_once(w, rest, expanded, emit));
}

fn to_word(letters: &[u32]) -> Word {
    Word::new(letters.to_vec()).expect("positive letters")
}

/// Every restricted shuffle as a list, in generation order, duplicates kept.
pub fn restricted_shuffle_list(a: &Word, b: &Word) -> Result<Vec<Word>> {
    for (name, w) in [("first word", a), ("second word", b), ("concatenation", &Word::concat([a, b]))] {
        if !is_reduced(w) {
            return Err(Error::InvalidInput(format!("restricted shuffle needs a reduced {name}, got {w}")));
        }
    }
    let mut out = Vec::new();
    shuffle_letters(a.letters(), b.letters(), &mut |w| out.push(to_word(w)));
    Ok(out)
}

/// Interleavings of `a` (red) and `b` (blue) keeping both orders, where a blue
/// letter `x` may stand left of a red letter only if no red letter from there
/// on lies in `{x-1, x, x+1}`.
pub fn restricted_shuffle(a: &Word, b: &Word) -> Result<WordSet> {
    Ok(restricted_shuffle_list(a, b)?.into_iter().collect())
}

/// `ResSh(u_1, ..., u_n)`, folding from the left.
pub fn restricted_shuffle_multi(parts: &[Word]) -> Result<WordSet> {
    let Some((first, rest)) = parts.split_first() else {
        return Ok(WordSet::singleton(Word::empty()));
    };
    if !is_reduced(&Word::concat(parts)) {
        return Err(Error::InvalidInput("restricted shuffle needs a reduced concatenation".into()));
    }
    let mut out = WordSet::new();
    shuffle_parts(first.letters(), rest, &mut |w| {
        out.insert(to_word(w));
    });
    Ok(out)
}

/// Every reduced word of `p`: the union over basic words of the restricted
/// shuffle of their towers.
pub fn generate(p: &Permutation, max_words: usize) -> Result<WordSet> {
    let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
    let mut expanded = FxHashSet::default();
    for basic in basic_words(p).iter() {
        let towers = tower_decomposition(basic).into_towers();
        let Some((first, rest)) = towers.split_first() else {
            seen.insert(Vec::new());
            continue;
        };
        shuffle_parts_once(first.letters(), rest, &mut expanded, &mut |w| {
            if !seen.contains(w) {
                seen.insert(w.to_vec());
            }
        });
        if seen.len() > max_words {
            return Err(Error::EnumerationLimit { limit: max_words });
        }
    }
    seen.into_iter().map(Word::new).collect()
}

/// Per basic word, the number of shuffles it contributes and how many of
/// those already came from earlier basic words.
pub fn basic_overlap(p: &Permutation) -> Result<Vec<(Word, usize, usize)>> {
    let mut seen = WordSet::new();
    let mut rows = Vec::new();
    for basic in basic_words(p).iter() {
        let shuffles = restricted_shuffle_multi(tower_decomposition(basic).towers())?;
        let repeated = shuffles.intersection_len(&seen);
        rows.push((basic.clone(), shuffles.len(), repeated));
        seen.extend_from(shuffles);
    }
    Ok(rows)
}

fn same_permutation(words: &WordSet) -> bool {
    let mut it = words.iter();
    let Some(first) = it.next() else { return true };
    let n = words.iter().map(Word::min_degree).max().unwrap();
    let target = crate::word::evaluate(first, n).unwrap();
    words
        .iter()
        .all(|w| is_reduced(w) && crate::word::evaluate(w, n).unwrap() == target)
}
