//! Words over the adjacent transpositions of the symmetric group, permutations
//! in one-line notation, and tower decompositions.
//!
//! A letter `i` stands for the transposition `s_i = (i, i+1)`. Words act on
//! the one-line notation of the identity from left to right, each letter
//! swapping the entries at positions `i` and `i+1`. With this convention the
//! word `2 3 5 6 7 8 6 7` evaluates to `134268975`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A finite sequence of positive letters. May be empty.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    /// Smallest degree whose symmetric group contains every letter.
    pub fn min_degree(&self) -> usize {
        self.max_letter().map_or(1, |m| m as usize + 1)
    }

    /// Initial letter, `in(w)`.
    pub fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }

    /// Final letter, `fin(w)`.
    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// Every letter increased by one.
    pub fn lift(&self) -> Word {
        Word(self.0.iter().map(|&x| x + 1).collect())
    }

    /// True for a nonempty run of consecutive increasing integers.
    pub fn is_tower(&self) -> bool {
        !self.0.is_empty() && self.0.windows(2).all(|p| p[1] == p[0] + 1)
    }

    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
        Word(parts.into_iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    /// Word with the letters at `i` and `i + 1` exchanged.
    pub fn swapped(&self, i: usize) -> Word {
        let mut v = self.0.clone();
        v.swap(i, i + 1);
        Word(v)
    }

    pub fn prepend(&self, letter: u32) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(letter);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn push(&mut self, letter: u32) {
        debug_assert!(letter > 0);
        self.0.push(letter);
    }

    /// Letters joined by single spaces, towers separated by `" | "`.
    pub fn tower_string(&self) -> String {
        tower_decomposition(self).to_string()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word[{self}]")
    }
}

impl TryFrom<Vec<u32>> for Word {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Word::new(v)
    }
}

impl AsRef<[u32]> for Word {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(oneline: Vec<u32>) -> Result<Self> {
        let n = oneline.len();
        let mut seen = vec![false; n];
        for &v in &oneline {
            let v = v as usize;
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(oneline));
            }
            seen[v - 1] = true;
        }
        if n == 0 {
            return Err(Error::InvalidPermutation(oneline));
        }
        Ok(Permutation(oneline))
    }

    pub fn identity(degree: usize) -> Self {
        Permutation((1..=degree as u32).collect())
    }

    /// The order-reversing permutation `n n-1 ... 1`.
    pub fn longest(degree: usize) -> Self {
        Permutation((1..=degree as u32).rev().collect())
    }

    pub fn oneline(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Number of pairs `i < j` with `p(i) > p(j)`.
    pub fn inversion_count(&self) -> usize {
        inversion_count(self)
    }

    /// 1-based positions `i` with `p(i) > p(i+1)`.
    pub fn descents(&self) -> impl Iterator<Item = u32> + '_ {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i as u32 + 1)
    }

    /// Same permutation with the entries at 1-based positions `i` and `i+1` exchanged.
    pub fn swap_positions(&self, i: u32) -> Permutation {
        let mut v = self.0.clone();
        v.swap(i as usize - 1, i as usize);
        Permutation(v)
    }

    /// Embeds into a larger symmetric group by fixing the extra points.
    pub fn extend_to(&self, degree: usize) -> Permutation {
        let mut v = self.0.clone();
        v.extend(self.0.len() as u32 + 1..=degree as u32);
        Permutation(v)
    }

    /// Drops trailing fixed points, keeping degree at least 1.
    pub fn trimmed(&self) -> Permutation {
        let mut n = self.0.len();
        while n > 1 && self.0[n - 1] as usize == n {
            n -= 1;
        }
        Permutation(self.0[..n].to_vec())
    }

    /// All permutations of `1..=degree` in lexicographic order of one-line notation.
    pub fn all(degree: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u32> = (1..=degree as u32).collect();
        loop {
            out.push(Permutation(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1])
            else {
                break;
            };
            let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.0.iter().all(|&v| v <= 9);
        let mut first = true;
        for v in &self.0 {
            if !compact && !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

/// Maximal factorization of a word into tower words.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TowerDecomposition {
    towers: Vec<Word>,
}

impl TowerDecomposition {
    pub fn towers(&self) -> &[Word] {
        &self.towers
    }

    pub fn into_towers(self) -> Vec<Word> {
        self.towers
    }

    pub fn len(&self) -> usize {
        self.towers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.towers.is_empty()
    }

    /// Initial letters of the towers, left to right.
    pub fn initials(&self) -> Vec<u32> {
        self.towers.iter().map(|t| t.0[0]).collect()
    }

    pub fn word(&self) -> Word {
        Word::concat(&self.towers)
    }
}

impl fmt::Display for TowerDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.towers.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Applies the letters of `w`, left to right, as position swaps on the identity of degree `n`.
pub fn evaluate(w: &Word, n: usize) -> Result<Permutation> {
    let mut p: Vec<u32> = (1..=n as u32).collect();
    for &i in w.letters() {
        if i as usize >= n {
            return Err(Error::DegreeTooSmall { letter: i, degree: n });
        }
        p.swap(i as usize - 1, i as usize);
    }
    Ok(Permutation(p))
}

/// Evaluation at the minimal degree `max letter + 1`.
pub fn evaluate_min(w: &Word) -> Permutation {
    evaluate(w, w.min_degree()).expect("minimal degree always fits")
}

pub fn inversion_count(p: &Permutation) -> usize {
    let v = &p.0;
    let mut count = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                count += 1;
            }
        }
    }
    count
}

pub fn is_reduced(w: &Word) -> bool {
    w.len() == inversion_count(&evaluate_min(w))
}

pub fn tower_decomposition(w: &Word) -> TowerDecomposition {
    let mut towers: Vec<Word> = Vec::new();
    for &x in w.letters() {
        match towers.last_mut() {
            Some(t) if t.0.last() == Some(&(x - 1)) => t.0.push(x),
            _ => towers.push(Word(vec![x])),
        }
    }
    TowerDecomposition { towers }
}

/// The lexicographically largest reduced word of `p`.
///
/// Sorts the one-line notation by moving the smallest misplaced entry to its
/// place with adjacent swaps; the swap positions, read backwards, spell the word.
pub fn natural_word(p: &Permutation) -> Word {
    let mut v = p.0.clone();
    let mut swaps = Vec::with_capacity(inversion_count(p));
    for target in 0..v.len() {
        let want = target as u32 + 1;
        let mut pos = v.iter().position(|&x| x == want).expect("valid permutation");
        while pos > target {
            v.swap(pos - 1, pos);
            swaps.push(pos as u32);
            pos -= 1;
        }
    }
    swaps.reverse();
    Word(swaps)
}

/// Lexicographic order on letter sequences; a proper prefix is smaller.
pub fn lex_compare(a: &Word, b: &Word) -> Ordering {
    a.0.cmp(&b.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.replace(' ', "").parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn evaluate_matches_position_swap_convention() {
        assert_eq!(evaluate(&w("23567867"), 9).unwrap(), p("134268975"));
        assert_eq!(evaluate(&Word::empty(), 4).unwrap(), p("1234"));
        assert_eq!(evaluate(&w("432123"), 5).unwrap(), p("52314"));
    }

    #[test]
    fn evaluate_rejects_small_degree() {
        assert_eq!(
            evaluate(&w("123"), 3),
            Err(Error::DegreeTooSmall { letter: 3, degree: 3 })
        );
    }

    #[test]
    fn inversions() {
        assert_eq!(inversion_count(&p("134268975")), 8);
        assert_eq!(inversion_count(&Permutation::identity(5)), 0);
        assert_eq!(inversion_count(&p("4321")), 6);
    }

    #[test]
    fn reducedness() {
        assert!(!is_reduced(&w("11")));
        assert!(is_reduced(&w("121")));
        assert!(is_reduced(&w("23567867")));
        assert!(is_reduced(&Word::empty()));
    }

    #[test]
    fn towers_of_sample_word() {
        let d = tower_decomposition(&w("789 5 45 3456 2"));
        assert_eq!(d.to_string(), "7 8 9 | 5 | 4 5 | 3 4 5 6 | 2");
        assert!(tower_decomposition(&Word::empty()).is_empty());
        assert_eq!(tower_decomposition(&w("1234")).len(), 1);
    }

    #[test]
    fn natural_words() {
        assert_eq!(natural_word(&p("4321")), w("323123"));
        assert_eq!(natural_word(&Permutation::identity(3)), Word::empty());
        assert_eq!(natural_word(&p("52314")), w("432123"));
    }

    #[test]
    fn lex() {
        assert_eq!(lex_compare(&w("121"), &w("212")), Ordering::Less);
        assert_eq!(lex_compare(&w("124"), &w("142")), Ordering::Less);
        assert_eq!(lex_compare(&w("142"), &w("142")), Ordering::Equal);
        assert_eq!(lex_compare(&w("12"), &w("121")), Ordering::Less);
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
        assert!(Permutation::new(vec![]).is_err());
        assert!(Word::new(vec![1, 0]).is_err());
    }

    #[test]
    fn all_permutations_counts() {
        assert_eq!(Permutation::all(1).len(), 1);
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(5).len(), 120);
    }

    #[test]
    fn trimming_and_extension() {
        assert_eq!(p("21345").trimmed(), p("21"));
        assert_eq!(p("1").extend_to(3), Permutation::identity(3));
        assert_eq!(Permutation::identity(4).trimmed(), p("1"));
    }
}
