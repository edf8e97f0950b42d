use std::collections::BTreeSet;

use proptest::prelude::*;

use reduced_words::generation::{
    basic_overlap, passage_of_letter, passage_of_word, passwords_word, restricted_shuffle_list, restricted_shuffle_multi,
    TowerFactorization,
};
use reduced_words::oracle::{enumerate_by_descents, enumerate_by_tits, DEFAULT_MAX_WORDS};
use reduced_words::poset::build_poset;
use reduced_words::word::{evaluate, is_reduced, natural_word, tower_decomposition};
use reduced_words::{Permutation, Word, WordSet};

fn w(s: &str) -> Word {
    s.replace(' ', "").parse().unwrap()
}

fn permutation_of(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn reduced_word_of(degree: usize) -> impl Strategy<Value = Word> {
    (permutation_of(degree), any::<prop::sample::Index>()).prop_map(|(p, i)| {
        let words = enumerate_by_descents(&p, DEFAULT_MAX_WORDS).unwrap();
        let picked = words.iter().nth(i.index(words.len())).unwrap().clone();
        picked
    })
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #[test]
    fn towers_are_maximal_and_concatenate(letters in prop::collection::vec(1u32..8, 0..16)) {
        let word = Word::new(letters).unwrap();
        let d = tower_decomposition(&word);
        prop_assert_eq!(d.word(), word);
        prop_assert!(d.towers().iter().all(|t| t.is_tower() && !t.is_empty()));
        for pair in d.towers().windows(2) {
            prop_assert_ne!(pair[0].last().unwrap() + 1, pair[1].first().unwrap());
        }
    }

    #[test]
    fn evaluation_is_a_right_action(
        u in prop::collection::vec(1u32..6, 0..10),
        v in prop::collection::vec(1u32..6, 0..10),
    ) {
        let (u, v) = (Word::new(u).unwrap(), Word::new(v).unwrap());
        let whole = evaluate(&Word::concat([&u, &v]), 6).unwrap();
        let stepwise = v.letters().iter().fold(evaluate(&u, 6).unwrap(), |p, &i| p.swap_positions(i));
        prop_assert_eq!(whole, stepwise);
    }

    #[test]
    fn tits_closure_is_seed_independent(word in reduced_word_of(6)) {
        let p = evaluate(&word, 6).unwrap();
        let from_word = enumerate_by_tits(&word, DEFAULT_MAX_WORDS).unwrap();
        prop_assert_eq!(&from_word, &enumerate_by_tits(&natural_word(&p), DEFAULT_MAX_WORDS).unwrap());
        prop_assert_eq!(&from_word, &enumerate_by_descents(&p, DEFAULT_MAX_WORDS).unwrap());
    }

    #[test]
    fn shuffles_are_bounded_distinct_and_reduced(word in reduced_word_of(6), cut in any::<prop::sample::Index>()) {
        let k = cut.index(word.len() + 1);
        let (a, b) = word.letters().split_at(k);
        let (a, b) = (Word::new(a.to_vec()).unwrap(), Word::new(b.to_vec()).unwrap());
        let list = restricted_shuffle_list(&a, &b).unwrap();
        prop_assert!(list.len() <= binomial(a.len() + b.len(), b.len()));
        prop_assert!(list.contains(&word));
        let distinct: WordSet = list.iter().cloned().collect();
        prop_assert_eq!(distinct.len(), list.len());
        let p = evaluate(&word, 6).unwrap();
        for x in &list {
            prop_assert!(is_reduced(x));
            prop_assert_eq!(evaluate(x, 6).unwrap(), p.clone());
        }
    }
}

#[test]
fn natural_word_is_lex_largest() {
    for n in 1..=5 {
        for p in Permutation::all(n) {
            let words = enumerate_by_descents(&p, DEFAULT_MAX_WORDS).unwrap();
            let largest = words.iter().max().unwrap();
            assert_eq!(&natural_word(&p), largest, "{p}");
        }
    }
}

// Peeling the first letter of beta instead of the last gives the same
// factorizations.
#[test]
fn passage_recursion_from_either_end() {
    let cases = [
        ("96", "3456 78"),
        ("323", "123"),
        ("232", "123"),
        ("21", "345"),
        ("4", "123"),
        ("543", "12"),
        ("2143", "56"),
    ];
    for (beta, alpha) in cases {
        let beta = w(beta);
        let alpha = TowerFactorization::new(alpha.split_whitespace().map(w).collect()).unwrap();
        let direct = passage_of_word(beta.letters(), &alpha);
        let Some((&first, rest)) = beta.letters().split_first() else { continue };
        let mut peeled = BTreeSet::new();
        for f in passage_of_word(rest, &alpha) {
            peeled.extend(passage_of_letter(first, &f));
        }
        assert_eq!(direct, peeled, "{beta} through {alpha}");
        let words: WordSet = direct.iter().map(TowerFactorization::word).collect();
        assert_eq!(words, passwords_word(&beta, &alpha));
    }
}

#[test]
fn multi_shuffle_of_a_tower_split_keeps_the_word() {
    for (parts, size) in [(vec!["3", "23", "123"], Some(2)), (vec!["6", "456", "345", "23", "123456"], None)] {
        let parts: Vec<Word> = parts.iter().map(|s| w(s)).collect();
        let got = restricted_shuffle_multi(&parts).unwrap();
        assert!(got.contains(&Word::concat(&parts)));
        if let Some(n) = size {
            assert_eq!(got.len(), n);
        }
    }
}

#[test]
fn poset_52314_matches_the_drawn_diagram() {
    let g = build_poset(&"52314".parse().unwrap(), DEFAULT_MAX_WORDS).unwrap().hasse_reduction().unwrap();
    let drawn: BTreeSet<(Word, Word)> = [
        ("431231", "432123"),
        ("413231", "431231"),
        ("143231", "413231"),
        ("143213", "143231"),
        ("143213", "413213"),
        ("413213", "431213"),
        ("431213", "431231"),
        ("413213", "413231"),
        ("412321", "431231"),
        ("142321", "412321"),
        ("124321", "142321"),
        ("142321", "143231"),
    ]
    .iter()
    .map(|(a, b)| (w(a), w(b)))
    .collect();
    let got: BTreeSet<(Word, Word)> =
        g.edges().map(|e| (g.vertices()[e.from].clone(), g.vertices()[e.to].clone())).collect();
    assert_eq!(got, drawn);
}

#[test]
fn overlap_between_basic_words_up_to_degree_5() {
    let (mut perms, mut overlapping, mut repeated) = (0, 0, 0);
    for n in 1..=5 {
        for p in Permutation::all(n) {
            let rows = basic_overlap(&p).unwrap();
            let fresh: usize = rows.iter().map(|(_, total, rep)| total - rep).sum();
            assert_eq!(fresh, enumerate_by_descents(&p, DEFAULT_MAX_WORDS).unwrap().len(), "{p}");
            let rep: usize = rows.iter().map(|r| r.2).sum();
            perms += 1;
            overlapping += usize::from(rep > 0);
            repeated += rep;
        }
    }
    println!("{overlapping} of {perms} permutations have overlapping basic words, {repeated} repeats");
}
