use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::word::Word;

#[derive(Clone, PartialEq, Eq)]
struct ShortLex(Word);

impl Ord for ShortLex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.letters().cmp(other.0.letters()))
    }
}

impl PartialOrd for ShortLex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A deduplicated set of words, iterated by length and then lexicographically.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct WordSet {
    words: BTreeSet<ShortLex>,
}

impl WordSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(w: Word) -> Self {
        let mut s = Self::new();
        s.insert(w);
        s
    }

    /// Returns false if the word was already present.
    pub fn insert(&mut self, w: Word) -> bool {
        self.words.insert(ShortLex(w))
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(&ShortLex(w.clone()))
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &Word> + ExactSizeIterator + '_ {
        self.words.iter().map(|k| &k.0)
    }

    pub fn extend_from(&mut self, other: WordSet) {
        if self.words.is_empty() {
            self.words = other.words;
        } else {
            self.words.extend(other.words);
        }
    }

    pub fn is_subset(&self, other: &WordSet) -> bool {
        self.words.is_subset(&other.words)
    }

    pub fn intersection_len(&self, other: &WordSet) -> usize {
        self.words.intersection(&other.words).count()
    }

    pub fn difference(&self, other: &WordSet) -> WordSet {
        WordSet { words: self.words.difference(&other.words).cloned().collect() }
    }

    pub fn to_vec(&self) -> Vec<Word> {
        self.iter().cloned().collect()
    }
}

impl FromIterator<Word> for WordSet {
    fn from_iter<I: IntoIterator<Item = Word>>(iter: I) -> Self {
        WordSet { words: iter.into_iter().map(ShortLex).collect() }
    }
}

impl Extend<Word> for WordSet {
    fn extend<I: IntoIterator<Item = Word>>(&mut self, iter: I) {
        self.words.extend(iter.into_iter().map(ShortLex));
    }
}

impl IntoIterator for WordSet {
    type Item = Word;
    type IntoIter = std::vec::IntoIter<Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.into_iter().map(|k| k.0).collect::<Vec<_>>().into_iter()
    }
}

impl fmt::Debug for WordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|w| w.to_string())).finish()
    }
}
