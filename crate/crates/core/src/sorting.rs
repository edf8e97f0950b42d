//! Sorting a reduced word up to the natural word.
//!
//! Selection sort moves whole towers right past larger towers (short moves)
//! until the word is natural basic. Insertion sort then lifts towers leftwards
//! (long moves) until tower initials strictly decrease.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{is_reduced, tower_decomposition, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepTag {
    Initial,
    ShortMove,
    LongMove,
}

impl fmt::Display for StepTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepTag::Initial => "start",
            StepTag::ShortMove => "<1",
            StepTag::LongMove => "<2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub word: Word,
    pub tag: StepTag,
}

impl ChainStep {
    fn new(word: Word, tag: StepTag) -> Self {
        ChainStep { word, tag }
    }
}

/// True when every adjacent tower pair satisfies `fin(left) > in(right)`.
pub fn is_natural_basic(w: &Word) -> bool {
    tower_decomposition(w)
        .towers()
        .windows(2)
        .all(|p| p[0].last().unwrap() > p[1].first().unwrap())
}

/// A reduced word known to be natural basic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalBasicWord(Word);

impl NaturalBasicWord {
    pub fn new(w: Word) -> Result<Self> {
        if !is_reduced(&w) {
            return Err(Error::NotReduced(w));
        }
        if !is_natural_basic(&w) {
            return Err(Error::NotNaturalBasic(w));
        }
        Ok(NaturalBasicWord(w))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }
}

fn move_bound(w: &Word) -> usize {
    w.len() * w.len() + 1
}

fn next_selection_move(w: &Word) -> Option<Word> {
    let towers = tower_decomposition(w).into_towers();
    let mut initials: Vec<u32> = towers.iter().map(|t| t.first().unwrap()).collect();
    initials.sort_unstable();
    initials.dedup();
    for a in initials {
        for s in (0..towers.len()).rev().filter(|&s| towers[s].first() == Some(a)) {
            let Some(next) = towers.get(s + 1) else { continue };
            if towers[s].last().unwrap() < next.first().unwrap() {
                let mut moved = towers.clone();
                moved.swap(s, s + 1);
                return Some(Word::concat(&moved));
            }
        }
    }
    None
}

/// Chain from `w` to a natural basic word. At each step the smallest initial
/// letter is tried first, and among its towers the rightmost one that can
/// pass its right neighbour moves.
pub fn selection_sort(w: &Word) -> Result<Vec<ChainStep>> {
    if !is_reduced(w) {
        return Err(Error::NotReduced(w.clone()));
    }
    let mut chain = vec![ChainStep::new(w.clone(), StepTag::Initial)];
    let bound = move_bound(w);
    while let Some(next) = next_selection_move(&chain.last().unwrap().word) {
        if chain.len() > bound {
            return Err(Error::Consistency(format!("selection sort of {w} does not terminate")));
        }
        chain.push(ChainStep::new(next, StepTag::ShortMove));
    }
    Ok(chain)
}

fn next_insertion_move(w: &Word) -> Option<Word> {
    let mut towers = tower_decomposition(w).into_towers();
    let i = (0..towers.len().saturating_sub(1))
        .rev()
        .find(|&i| towers[i].first() <= towers[i + 1].first())?;
    let lifted = towers.remove(i + 1).lift();
    let start = lifted.first().unwrap();
    let mut pos = i;
    while pos > 0 {
        let prev_fin = towers[pos - 1].last().unwrap();
        if prev_fin >= start - 1 {
            // either fin(prev) > in(lifted) or the two merge into one tower
            break;
        }
        debug_assert!(towers[pos - 1].letters().iter().all(|&x| x + 2 <= start));
        pos -= 1;
    }
    towers.insert(pos, lifted);
    Some(Word::concat(&towers))
}

/// Chain from a natural basic word to the natural word. Each step takes the
/// largest index `i` with `in(b_i) <= in(b_{i+1})`, lifts `b_{i+1}` in front
/// of `b_i`, and slides it further left while it commutes with its predecessor.
pub fn insertion_sort(w: &NaturalBasicWord) -> Result<Vec<ChainStep>> {
    let start = w.word();
    let mut chain = vec![ChainStep::new(start.clone(), StepTag::Initial)];
    let bound = move_bound(start);
    while let Some(next) = next_insertion_move(&chain.last().unwrap().word) {
        if chain.len() > bound {
            return Err(Error::Consistency(format!("insertion sort of {start} does not terminate")));
        }
        debug_assert!(is_natural_basic(&next), "{next} is not natural basic");
        chain.push(ChainStep::new(next, StepTag::LongMove));
    }
    Ok(chain)
}

/// Selection sort followed by insertion sort; ends at the natural word.
pub fn sort_to_natural(w: &Word) -> Result<Vec<ChainStep>> {
    let mut chain = selection_sort(w)?;
    let basic = NaturalBasicWord::new(chain.last().unwrap().word.clone())?;
    chain.extend(insertion_sort(&basic)?.into_iter().skip(1));
    Ok(chain)
}
