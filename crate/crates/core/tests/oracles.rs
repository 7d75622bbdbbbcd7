mod common;

use artin_tcp::words::{dihedral_normal_form, free_reduce, pi_word, reduced_words_of_length, Budget, Certainty, Word};
use common::*;
use std::collections::HashMap;

#[test]
fn oracle_satisfies_relation() {
    for m in 3..=8 {
        let o = DihedralOracle::new(m);
        let mu = m as usize;
        assert!(o.equal(&pi_word(0, 1, mu).unwrap(), &pi_word(1, 0, mu).unwrap()), "m = {m}");
        for k in 1..mu {
            assert!(!o.equal(&pi_word(0, 1, k).unwrap(), &pi_word(1, 0, k).unwrap()), "m = {m}, k = {k}");
        }
    }
}

#[test]
fn oracle_against_engine_exhaustive_length_five() {
    for m in [3, 4, 5, 6] {
        let g = edge(m);
        let o = DihedralOracle::new(m);
        let words: Vec<Word> = (0..=5).flat_map(|l| reduced_words_of_length(2, l)).collect();
        let mut classes: HashMap<_, Vec<usize>> = HashMap::new();
        for (i, w) in words.iter().enumerate() {
            classes.entry(o.key(w)).or_default().push(i);
        }
        for members in classes.values() {
            for &i in &members[1..] {
                let c = g.equal_words(&words[members[0]], &words[i], &Budget::default()).unwrap();
                assert!(c.is_equal(), "m={m}: {:?} vs {:?}", words[members[0]], words[i]);
            }
        }
        let reps: Vec<&Word> = classes.values().map(|c| &words[c[0]]).take(200).collect();
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(matches!(g.equal_words(a, b, &Budget::default()).unwrap(), Certainty::NotEqual(_)));
            }
        }
    }
}

#[test]
fn normal_form_matches_oracle_classes() {
    for m in [3u32, 4, 7] {
        let o = DihedralOracle::new(m as i64);
        let words: Vec<Word> = (0..=6).flat_map(|l| reduced_words_of_length(2, l)).collect();
        let mut by_nf: HashMap<_, _> = HashMap::new();
        for w in &words {
            let nf = dihedral_normal_form(m, 0, 1, w).unwrap();
            let key = o.key(w);
            assert_eq!(by_nf.entry(nf).or_insert_with(|| key.clone()), &key);
        }
    }
}

#[test]
fn relator_conjugates_are_trivial() {
    let g = triangle(3, 4, 5);
    let r = pi_word(0, 1, 3).unwrap().concat(&pi_word(1, 0, 3).unwrap().inverse());
    for c in ["a", "b c^-1", "c a b^-1 a"] {
        let c = word(&g, c);
        let w = free_reduce(&c.concat(&r).concat(&c.inverse()));
        assert!(g.equal_words(&w, &Word::empty(), &Budget::default()).unwrap().is_equal());
    }
}
