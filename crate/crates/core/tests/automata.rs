//! Properties of the core automaton operations against brute-force oracles.
#![allow(clippy::needless_range_loop)]

mod common;

use proptest::prelude::*;
use ptsep::{
    parse_automaton, product, scc_content, serialize, shortest_common_word, tarjan_scc,
    AlphabetSet, Automaton, Letter, Word,
};

const NAMES: [&str; 3] = ["a", "b", "c"];

prop_compose! {
    /// Up to `max_states` states over the first `letters` of a, b, c.
    fn arb_automaton(max_states: usize, letters: usize)(n in 0..=max_states)(
        n in Just(n),
        initial in proptest::collection::vec(any::<bool>(), n),
        finals in proptest::collection::vec(any::<bool>(), n),
        edges in proptest::collection::vec(any::<bool>(), n * n * letters),
    ) -> Automaton {
        let alphabet: AlphabetSet = NAMES[..letters].iter().map(|s| Letter::new(s).unwrap()).collect();
        let pick = |bits: &[bool]| bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect::<Vec<_>>();
        let transitions = pick(&edges).into_iter().map(|i| {
            let (p, rest) = (i / (n * letters), i % (n * letters));
            (p, Letter::new(NAMES[rest / n]).unwrap(), rest % n)
        });
        Automaton::new(&alphabet, n, pick(&initial), pick(&finals), transitions).unwrap()
    }
}

fn words(letters: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut start = 0;
    for _ in 0..max_len {
        let end = out.len();
        for i in start..end {
            for name in &NAMES[..letters] {
                let mut w = out[i].clone();
                w.push(Letter::new(name).unwrap());
                out.push(w);
            }
        }
        start = end;
    }
    out
}

/// `reach[p][q]`: a path of length ≥ 0 leads from p to q.
fn reachability(a: &Automaton) -> Vec<Vec<bool>> {
    let n = a.num_states();
    let mut reach = vec![vec![false; n]; n];
    for (p, row) in reach.iter_mut().enumerate() {
        row[p] = true;
    }
    for (p, _, q) in a.transitions() {
        reach[p][q] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    reach
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn serialization_round_trips(a in arb_automaton(4, 3)) {
        let text = serialize(&a);
        let back = parse_automaton(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(serialize(&back), text);
    }

    #[test]
    fn trim_preserves_language_and_keeps_only_useful_states(a in arb_automaton(4, 2)) {
        let t = a.trim();
        for w in words(2, 6) {
            prop_assert_eq!(t.accepts(&w).unwrap(), a.accepts(&w).unwrap(), "{}", w);
        }
        let reach = reachability(&t);
        for q in 0..t.num_states() {
            prop_assert!(t.initial_states().iter().any(|&i| reach[i][q]));
            prop_assert!(t.final_states().iter().any(|&f| reach[q][f]));
        }
    }

    #[test]
    fn scc_matches_mutual_reachability(a in arb_automaton(5, 2)) {
        let scc = tarjan_scc(&a);
        let reach = reachability(&a);
        for p in 0..a.num_states() {
            for q in 0..a.num_states() {
                let same = scc.component_of(p) == scc.component_of(q);
                prop_assert_eq!(same, reach[p][q] && reach[q][p]);
            }
        }
        // reverse topological order
        for (p, _, q) in a.transitions() {
            prop_assert!(scc.component_of(p) >= scc.component_of(q));
        }
        let total: usize = scc.components().iter().map(Vec::len).sum();
        prop_assert_eq!(total, a.num_states());
    }

    #[test]
    fn scc_content_is_the_internal_labels(a in arb_automaton(4, 3)) {
        let scc = tarjan_scc(&a);
        for q in 0..a.num_states() {
            let expected: AlphabetSet = a
                .transitions()
                .filter(|(p, _, r)| scc.component_of(*p) == scc.component_of(q) && scc.component_of(*r) == scc.component_of(q))
                .map(|(_, l, _)| l.clone())
                .collect();
            prop_assert_eq!(scc_content(&a, q), expected);
        }
    }

    #[test]
    fn product_recognizes_the_intersection(a1 in arb_automaton(3, 2), a2 in arb_automaton(3, 2)) {
        let p = product(&a1, &a2);
        for w in words(2, 6) {
            prop_assert_eq!(p.accepts(&w).unwrap(), a1.accepts(&w).unwrap() && a2.accepts(&w).unwrap());
        }
        prop_assert_eq!(p.is_empty(), shortest_common_word(&a1, &a2).is_none());
    }

    #[test]
    fn shortest_common_word_is_shortest_then_least(a1 in arb_automaton(3, 2), a2 in arb_automaton(3, 2)) {
        let expected = words(2, 6)
            .into_iter()
            .find(|w| a1.accepts(w).unwrap() && a2.accepts(w).unwrap());
        let got = shortest_common_word(&a1, &a2);
        if let Some(e) = expected {
            prop_assert_eq!(got, Some(e));
        } else if let Some(g) = got {
            prop_assert!(g.len() > 6);
        }
    }

    #[test]
    fn restriction_never_reads_foreign_letters(a in arb_automaton(3, 3), keep in 0usize..8) {
        let b: AlphabetSet = (0..3).filter(|i| keep >> i & 1 == 1).map(|i| Letter::new(NAMES[i]).unwrap()).collect();
        let r = a.restrict(&b);
        prop_assert_eq!(r.alphabet_set(), a.alphabet_set());
        prop_assert!(r.content().is_subset(&b));
        for w in words(3, 4) {
            let inside = w.content().is_subset(&b);
            prop_assert_eq!(r.accepts(&w).unwrap(), inside && a.accepts(&w).unwrap());
        }
    }

    #[test]
    fn determinize_and_complement(a in arb_automaton(3, 2)) {
        let d = a.determinize();
        prop_assert!(d.is_deterministic());
        let c = d.complement().unwrap();
        prop_assert!(c.is_deterministic());
        for w in words(2, 6) {
            let inside = a.accepts(&w).unwrap();
            prop_assert_eq!(d.accepts(&w).unwrap(), inside);
            prop_assert_eq!(c.accepts(&w).unwrap(), !inside);
        }
    }

    #[test]
    fn emptiness_matches_bounded_search(a in arb_automaton(3, 2)) {
        // a shortest accepted word has length below the state count
        let found = words(2, 3).iter().any(|w| a.accepts(w).unwrap());
        prop_assert_eq!(a.is_empty(), !found);
    }
}

#[test]
fn corpus_canonicalization_counts_languages() {
    let one = common::distinct_languages(1);
    let two = common::distinct_languages(2);
    assert_eq!(one.len(), 5);
    assert_eq!(two.len(), 249);
    for nfa in &two {
        let a = nfa.to_automaton();
        for w in common::words_up_to(5) {
            assert_eq!(a.accepts(&common::word(&w)).unwrap(), nfa.accepts(&w));
        }
    }
}
