//! Test-side automata over {a, b} with an independent language
//! canonicalization, used to build deduplicated corpora.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use ptsep::{AlphabetSet, Automaton, Letter};
use rand::Rng;

/// An NFA over {a, b} with at most 8 states; sets of states are bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TinyNfa {
    pub states: usize,
    pub initial: u8,
    pub finals: u8,
    /// `delta[q][letter]` is the successor set.
    pub delta: Vec<[u8; 2]>,
}

impl TinyNfa {
    pub fn step(&self, set: u8, letter: usize) -> u8 {
        (0..self.states)
            .filter(|&q| set >> q & 1 == 1)
            .fold(0, |acc, q| acc | self.delta[q][letter])
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        let end = word.iter().fold(self.initial, |s, &l| self.step(s, l));
        end & self.finals != 0
    }

    pub fn to_automaton(&self) -> Automaton {
        let letters = [Letter::new("a").unwrap(), Letter::new("b").unwrap()];
        let alphabet: AlphabetSet = letters.iter().cloned().collect();
        let bits = |mask: u8| (0..self.states).filter(move |&q| mask >> q & 1 == 1);
        let mut transitions = Vec::new();
        for (q, row) in self.delta.iter().enumerate() {
            for (l, &succ) in row.iter().enumerate() {
                for r in bits(succ) {
                    transitions.push((q, letters[l].clone(), r));
                }
            }
        }
        Automaton::new(
            &alphabet,
            self.states,
            bits(self.initial),
            bits(self.finals),
            transitions,
        )
        .unwrap()
    }

    /// Minimal complete DFA of the language with states numbered in
    /// breadth-first order from the start (letter `a` before `b`):
    /// one `(accepting, [succ_a, succ_b])` entry per state.
    pub fn canonical(&self) -> Vec<(bool, [usize; 2])> {
        // subset construction, the empty set acting as sink
        let mut index: HashMap<u8, usize> = HashMap::new();
        let mut subsets = vec![self.initial];
        index.insert(self.initial, 0);
        let mut table: Vec<[usize; 2]> = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            let mut row = [0; 2];
            for (l, slot) in row.iter_mut().enumerate() {
                let next = self.step(subsets[i], l);
                *slot = *index.entry(next).or_insert_with(|| {
                    subsets.push(next);
                    subsets.len() - 1
                });
            }
            table.push(row);
            i += 1;
        }
        let accepting: Vec<bool> = subsets.iter().map(|&s| s & self.finals != 0).collect();

        // Moore refinement
        let mut class: Vec<usize> = accepting.iter().map(|&f| f as usize).collect();
        loop {
            let mut ids: HashMap<(usize, usize, usize), usize> = HashMap::new();
            let refined: Vec<usize> = (0..subsets.len())
                .map(|s| {
                    let key = (class[s], class[table[s][0]], class[table[s][1]]);
                    let next = ids.len();
                    *ids.entry(key).or_insert(next)
                })
                .collect();
            let before = class.iter().collect::<HashSet<_>>().len();
            class = refined;
            if ids.len() == before {
                break;
            }
        }

        // renumber classes by BFS from the start
        let mut order: HashMap<usize, usize> = HashMap::new();
        let mut rep: Vec<usize> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        order.insert(class[0], 0);
        rep.push(0);
        while let Some(s) = queue.pop_front() {
            for &t in &table[s] {
                if let std::collections::hash_map::Entry::Vacant(e) = order.entry(class[t]) {
                    e.insert(rep.len());
                    rep.push(t);
                    queue.push_back(t);
                }
            }
        }
        rep.iter()
            .map(|&s| {
                (
                    accepting[s],
                    [order[&class[table[s][0]]], order[&class[table[s][1]]]],
                )
            })
            .collect()
    }
}

/// Every NFA with `states` states (bitmask encoding enumerated in order).
pub fn all_nfas(states: usize) -> impl Iterator<Item = TinyNfa> {
    let subsets = 1u32 << states;
    let trans_bits = 2 * states * states;
    (0..subsets).flat_map(move |initial| {
        (0..subsets).flat_map(move |finals| {
            (0u64..1 << trans_bits).map(move |t| {
                let mut delta = vec![[0u8; 2]; states];
                for (q, row) in delta.iter_mut().enumerate() {
                    for (l, slot) in row.iter_mut().enumerate() {
                        let shift = (q * 2 + l) * states;
                        *slot = ((t >> shift) & ((1 << states) - 1)) as u8;
                    }
                }
                TinyNfa {
                    states,
                    initial: initial as u8,
                    finals: finals as u8,
                    delta,
                }
            })
        })
    })
}

/// One representative (the first enumerated) per language of the NFAs with
/// at most `max_states` states.
pub fn distinct_languages(max_states: usize) -> Vec<TinyNfa> {
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for n in 0..=max_states {
        for nfa in all_nfas(n) {
            if seen.insert(nfa.canonical()) {
                reps.push(nfa);
            }
        }
    }
    reps
}

pub fn random_nfa(rng: &mut impl Rng, states: usize, density: f64) -> TinyNfa {
    let mut delta = vec![[0u8; 2]; states];
    for row in delta.iter_mut() {
        for slot in row.iter_mut() {
            for r in 0..states {
                if rng.gen_bool(density) {
                    *slot |= 1 << r;
                }
            }
        }
    }
    TinyNfa {
        states,
        initial: 1,
        finals: rng.gen_range(0..1u32 << states) as u8,
        delta,
    }
}

/// `count` 3-state languages, distinct from each other and from `exclude`.
pub fn sampled_languages(rng: &mut impl Rng, count: usize, exclude: &[TinyNfa]) -> Vec<TinyNfa> {
    let mut seen: HashSet<_> = exclude.iter().map(TinyNfa::canonical).collect();
    let mut out = Vec::new();
    while out.len() < count {
        let nfa = random_nfa(rng, 3, 0.3);
        if seen.insert(nfa.canonical()) {
            out.push(nfa);
        }
    }
    out
}

/// Seed of the sampled part of the corpus.
pub const CORPUS_SEED: u64 = 0x5eed_0fc0_ffee;

/// All languages of NFAs with at most two states over {a, b} plus a fixed
/// sample of 3-state languages.
pub fn corpus_languages(sampled: usize) -> Vec<TinyNfa> {
    use rand::SeedableRng;
    let mut langs = distinct_languages(2);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let extra = sampled_languages(&mut rng, sampled, &langs);
    langs.extend(extra);
    langs
}

/// All words over {a, b} up to `max_len`, shortest first.
pub fn words_up_to(max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut start = 0;
    for _ in 0..max_len {
        let end = out.len();
        for i in start..end {
            for l in 0..2 {
                let mut w = out[i].clone();
                w.push(l);
                out.push(w);
            }
        }
        start = end;
    }
    out
}

/// Library word from letter indices.
pub fn word(letters: &[usize]) -> ptsep::Word {
    let names = ["a", "b"];
    letters
        .iter()
        .map(|&l| Letter::new(names[l]).unwrap())
        .collect()
}

/// Sorted set of scattered subwords of length ≤ n, by trying every subset of
/// positions.
pub fn naive_subwords(w: &[usize], n: usize) -> std::collections::BTreeSet<Vec<usize>> {
    let mut out = std::collections::BTreeSet::new();
    for mask in 0u32..1 << w.len() {
        if mask.count_ones() as usize <= n {
            out.insert(
                (0..w.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| w[i])
                    .collect(),
            );
        }
    }
    out
}
