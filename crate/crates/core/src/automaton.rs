//! Nondeterministic finite automata over token alphabets.
//!
//! States are the dense integers `0..n`. Transitions are kept sorted by
//! `(source, letter, target)` in a compressed adjacency layout, so the
//! outgoing edges of a state form one contiguous slice ordered by letter.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::alphabet::{AlphabetSet, Letter, Word};
use crate::error::{Error, Result};

pub type State = usize;

/// Index of a letter in an automaton's sorted alphabet.
pub(crate) type LetterId = usize;

/// Set of letter indices relative to one automaton alphabet.
pub(crate) type LetterMask = FixedBitSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Edge {
    pub src: State,
    pub letter: LetterId,
    pub dst: State,
}

/// A finite automaton `(Q, A, I, F, δ)`.
///
/// Values are immutable once built; every operation returns a new automaton.
#[derive(Clone, PartialEq, Eq)]
pub struct Automaton {
    alphabet: Vec<Letter>,
    num_states: usize,
    initial: Vec<State>,
    finals: Vec<State>,
    is_final: Vec<bool>,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
}

impl Automaton {
    /// Builds an automaton, checking that every transition uses a declared
    /// letter and every state index is in range.
    pub fn new(
        alphabet: &AlphabetSet,
        num_states: usize,
        initial: impl IntoIterator<Item = State>,
        finals: impl IntoIterator<Item = State>,
        transitions: impl IntoIterator<Item = (State, Letter, State)>,
    ) -> Result<Self> {
        let letters = alphabet.to_vec();
        let check = |state: State| {
            if state < num_states {
                Ok(state)
            } else {
                Err(Error::InvalidState {
                    state,
                    states: num_states,
                })
            }
        };
        let initial = initial.into_iter().map(check).collect::<Result<Vec<_>>>()?;
        let finals = finals.into_iter().map(check).collect::<Result<Vec<_>>>()?;
        let mut edges = Vec::new();
        for (src, letter, dst) in transitions {
            let id = letters
                .binary_search(&letter)
                .map_err(|_| Error::ForeignLetter(letter.clone()))?;
            edges.push(Edge {
                src: check(src)?,
                letter: id,
                dst: check(dst)?,
            });
        }
        Ok(Self::from_parts(
            letters, num_states, initial, finals, edges,
        ))
    }

    /// The automaton with no states over `alphabet`; it denotes ∅.
    pub fn empty(alphabet: &AlphabetSet) -> Self {
        Self::from_parts(alphabet.to_vec(), 0, vec![], vec![], vec![])
    }

    /// Assembles an automaton from already-validated parts. `alphabet` must be
    /// sorted and duplicate-free; the other collections are normalized here.
    pub(crate) fn from_parts(
        alphabet: Vec<Letter>,
        num_states: usize,
        mut initial: Vec<State>,
        mut finals: Vec<State>,
        mut edges: Vec<Edge>,
    ) -> Self {
        debug_assert!(alphabet.windows(2).all(|w| w[0] < w[1]));
        initial.sort_unstable();
        initial.dedup();
        finals.sort_unstable();
        finals.dedup();
        edges.sort_unstable();
        edges.dedup();

        let mut is_final = vec![false; num_states];
        for &f in &finals {
            is_final[f] = true;
        }
        let mut offsets = vec![0; num_states + 1];
        for e in &edges {
            offsets[e.src + 1] += 1;
        }
        for i in 0..num_states {
            offsets[i + 1] += offsets[i];
        }
        Automaton {
            alphabet,
            num_states,
            initial,
            finals,
            is_final,
            edges,
            offsets,
        }
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn num_transitions(&self) -> usize {
        self.edges.len()
    }

    /// The declared alphabet, sorted.
    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn alphabet_set(&self) -> AlphabetSet {
        self.alphabet.iter().cloned().collect()
    }

    pub fn initial_states(&self) -> &[State] {
        &self.initial
    }

    pub fn final_states(&self) -> &[State] {
        &self.finals
    }

    pub fn is_initial(&self, state: State) -> bool {
        self.initial.binary_search(&state).is_ok()
    }

    pub fn is_final(&self, state: State) -> bool {
        self.is_final[state]
    }

    /// Transitions in canonical `(source, letter, target)` order.
    pub fn transitions(&self) -> impl Iterator<Item = (State, &Letter, State)> + '_ {
        self.edges
            .iter()
            .map(move |e| (e.src, &self.alphabet[e.letter], e.dst))
    }

    /// Set of letters labelling at least one transition.
    pub fn content(&self) -> AlphabetSet {
        self.edges
            .iter()
            .map(|e| self.alphabet[e.letter].clone())
            .collect()
    }

    /// Derived on demand: at most one initial state and a functional δ.
    pub fn is_deterministic(&self) -> bool {
        self.initial.len() <= 1
            && self
                .edges
                .windows(2)
                .all(|w| (w[0].src, w[0].letter) != (w[1].src, w[1].letter))
    }

    pub(crate) fn letter(&self, id: LetterId) -> &Letter {
        &self.alphabet[id]
    }

    pub(crate) fn letter_id(&self, letter: &Letter) -> Option<LetterId> {
        self.alphabet.binary_search(letter).ok()
    }

    pub(crate) fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Outgoing edges of `state`, sorted by letter then target.
    pub(crate) fn out_edges(&self, state: State) -> &[Edge] {
        &self.edges[self.offsets[state]..self.offsets[state + 1]]
    }

    /// Outgoing edges of `state` labelled `letter`.
    pub(crate) fn out_edges_on(&self, state: State, letter: LetterId) -> &[Edge] {
        let out = self.out_edges(state);
        let lo = out.partition_point(|e| e.letter < letter);
        let hi = out.partition_point(|e| e.letter <= letter);
        &out[lo..hi]
    }

    pub(crate) fn full_mask(&self) -> LetterMask {
        let mut mask = LetterMask::with_capacity(self.alphabet.len());
        mask.insert_range(..);
        mask
    }

    pub(crate) fn mask_of(&self, letters: &AlphabetSet) -> LetterMask {
        let mut mask = LetterMask::with_capacity(self.alphabet.len());
        for letter in letters {
            if let Some(id) = self.letter_id(letter) {
                mask.insert(id);
            }
        }
        mask
    }

    pub(crate) fn set_of(&self, mask: &LetterMask) -> AlphabetSet {
        mask.ones().map(|id| self.alphabet[id].clone()).collect()
    }

    fn word_ids(&self, word: &Word) -> Result<Vec<LetterId>> {
        word.letters()
            .iter()
            .map(|l| {
                self.letter_id(l)
                    .ok_or_else(|| Error::ForeignLetter(l.clone()))
            })
            .collect()
    }

    /// Whether some path from an initial to a final state is labelled `word`.
    ///
    /// A letter outside the declared alphabet is a contract violation and
    /// reported as [`Error::ForeignLetter`].
    pub fn accepts(&self, word: &Word) -> Result<bool> {
        let ids = self.word_ids(word)?;
        let mut current = FixedBitSet::with_capacity(self.num_states);
        for &q in &self.initial {
            current.insert(q);
        }
        for id in ids {
            let mut next = FixedBitSet::with_capacity(self.num_states);
            for q in current.ones() {
                for e in self.out_edges_on(q, id) {
                    next.insert(e.dst);
                }
            }
            if next.is_clear() {
                return Ok(false);
            }
            current = next;
        }
        Ok(current.ones().any(|q| self.is_final[q]))
    }

    /// States reachable from `sources` using only letters in `mask`
    /// (all letters when `None`). Sources are included.
    pub(crate) fn forward_closure(
        &self,
        sources: impl IntoIterator<Item = State>,
        mask: Option<&LetterMask>,
    ) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.num_states);
        let mut stack: Vec<State> = Vec::new();
        for s in sources {
            if !seen.put(s) {
                stack.push(s);
            }
        }
        while let Some(p) = stack.pop() {
            for e in self.out_edges(p) {
                if mask.is_none_or(|m| m.contains(e.letter)) && !seen.put(e.dst) {
                    stack.push(e.dst);
                }
            }
        }
        seen
    }

    /// States from which some state of `targets` is reachable using only
    /// letters in `mask`. Targets are included.
    pub(crate) fn backward_closure(
        &self,
        targets: impl IntoIterator<Item = State>,
        mask: Option<&LetterMask>,
    ) -> FixedBitSet {
        let reverse = self.reverse_adjacency(mask);
        let mut seen = FixedBitSet::with_capacity(self.num_states);
        let mut stack: Vec<State> = Vec::new();
        for t in targets {
            if !seen.put(t) {
                stack.push(t);
            }
        }
        while let Some(q) = stack.pop() {
            for &p in &reverse[q] {
                if !seen.put(p) {
                    stack.push(p);
                }
            }
        }
        seen
    }

    pub(crate) fn reverse_adjacency(&self, mask: Option<&LetterMask>) -> Vec<Vec<State>> {
        let mut reverse = vec![Vec::new(); self.num_states];
        for e in &self.edges {
            if mask.is_none_or(|m| m.contains(e.letter)) {
                reverse[e.dst].push(e.src);
            }
        }
        reverse
    }

    /// Keeps exactly the states that are reachable from an initial state and
    /// co-reachable to a final state, renumbered in increasing order.
    pub fn trim(&self) -> Automaton {
        let reach = self.forward_closure(self.initial.iter().copied(), None);
        let coreach = self.backward_closure(self.finals.iter().copied(), None);
        let mut keep = reach;
        keep.intersect_with(&coreach);
        self.induced(&keep)
    }

    /// Sub-automaton on the states in `keep`, renumbered in increasing order.
    pub(crate) fn induced(&self, keep: &FixedBitSet) -> Automaton {
        let mut renumber = vec![usize::MAX; self.num_states];
        let mut count = 0;
        for q in keep.ones() {
            renumber[q] = count;
            count += 1;
        }
        let kept = |q: State| renumber[q] != usize::MAX;
        let initial = self
            .initial
            .iter()
            .filter(|&&q| kept(q))
            .map(|&q| renumber[q])
            .collect();
        let finals = self
            .finals
            .iter()
            .filter(|&&q| kept(q))
            .map(|&q| renumber[q])
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| kept(e.src) && kept(e.dst))
            .map(|e| Edge {
                src: renumber[e.src],
                letter: e.letter,
                dst: renumber[e.dst],
            })
            .collect();
        Automaton::from_parts(self.alphabet.clone(), count, initial, finals, edges)
    }

    /// Drops every transition whose label is outside `letters`. States, initial
    /// and final sets, and the declared alphabet are unchanged.
    pub fn restrict(&self, letters: &AlphabetSet) -> Automaton {
        self.restrict_mask(&self.mask_of(letters))
    }

    pub(crate) fn restrict_mask(&self, mask: &LetterMask) -> Automaton {
        let edges = self
            .edges
            .iter()
            .filter(|e| mask.contains(e.letter))
            .copied()
            .collect();
        Automaton::from_parts(
            self.alphabet.clone(),
            self.num_states,
            self.initial.clone(),
            self.finals.clone(),
            edges,
        )
    }

    /// Same automaton over the larger sorted alphabet `universe`, which must
    /// contain every declared letter.
    pub(crate) fn with_alphabet(&self, universe: &[Letter]) -> Automaton {
        let remap: Vec<LetterId> = self
            .alphabet
            .iter()
            .map(|l| {
                universe
                    .binary_search(l)
                    .expect("universe must contain the alphabet")
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                src: e.src,
                letter: remap[e.letter],
                dst: e.dst,
            })
            .collect();
        Automaton::from_parts(
            universe.to_vec(),
            self.num_states,
            self.initial.clone(),
            self.finals.clone(),
            edges,
        )
    }

    /// True iff no final state is reachable from an initial state.
    pub fn is_empty(&self) -> bool {
        let reach = self.forward_closure(self.initial.iter().copied(), None);
        !self.finals.iter().any(|&f| reach.contains(f))
    }

    /// Subset construction over the declared alphabet. Only nonempty subsets
    /// are materialized, so the result may be partial.
    pub fn determinize(&self) -> Automaton {
        let start: Vec<State> = self.initial.clone();
        if start.is_empty() {
            return Automaton::from_parts(self.alphabet.clone(), 0, vec![], vec![], vec![]);
        }
        let mut index: HashMap<Vec<State>, State> = HashMap::new();
        let mut subsets: Vec<Vec<State>> = Vec::new();
        let mut edges = Vec::new();
        index.insert(start.clone(), 0);
        subsets.push(start);
        let mut next = 0;
        while next < subsets.len() {
            let current = subsets[next].clone();
            for letter in 0..self.alphabet.len() {
                let mut target: Vec<State> = current
                    .iter()
                    .flat_map(|&q| self.out_edges_on(q, letter).iter().map(|e| e.dst))
                    .collect();
                if target.is_empty() {
                    continue;
                }
                target.sort_unstable();
                target.dedup();
                let id = match index.get(&target) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        index.insert(target.clone(), id);
                        subsets.push(target);
                        id
                    }
                };
                edges.push(Edge {
                    src: next,
                    letter,
                    dst: id,
                });
            }
            next += 1;
        }
        let finals = subsets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.iter().any(|&q| self.is_final[q]))
            .map(|(i, _)| i)
            .collect();
        Automaton::from_parts(self.alphabet.clone(), subsets.len(), vec![0], finals, edges)
    }

    /// Complement with respect to `A*` over the declared alphabet. The input
    /// is completed with a sink state before final and non-final states swap.
    pub fn complement(&self) -> Result<Automaton> {
        if !self.is_deterministic() {
            return Err(Error::NotDeterministic);
        }
        let sink = self.num_states;
        let mut edges = self.edges.clone();
        for q in 0..=sink {
            for letter in 0..self.alphabet.len() {
                if q == sink || self.out_edges_on(q, letter).is_empty() {
                    edges.push(Edge {
                        src: q,
                        letter,
                        dst: sink,
                    });
                }
            }
        }
        let initial = if self.initial.is_empty() {
            vec![sink]
        } else {
            self.initial.clone()
        };
        let finals = (0..=sink)
            .filter(|&q| q == sink || !self.is_final[q])
            .collect();
        Ok(Automaton::from_parts(
            self.alphabet.clone(),
            sink + 1,
            initial,
            finals,
            edges,
        ))
    }
}

impl fmt::Debug for Automaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::format::serialize(self))
    }
}

/// Sorted union of two alphabets.
pub(crate) fn union_alphabet(a1: &Automaton, a2: &Automaton) -> Vec<Letter> {
    let mut letters: Vec<Letter> = a1.alphabet.iter().chain(&a2.alphabet).cloned().collect();
    letters.sort();
    letters.dedup();
    letters
}

/// Rewrites both automata over their union alphabet so that letter indices
/// agree.
pub(crate) fn align(a1: &Automaton, a2: &Automaton) -> (Automaton, Automaton) {
    let universe = union_alphabet(a1, a2);
    (a1.with_alphabet(&universe), a2.with_alphabet(&universe))
}

/// Pairs `(e1, e2)` of outgoing edges of `s1` and `s2` sharing a letter, in
/// `(letter, target1, target2)` order. Both automata must be aligned.
pub(crate) fn synchronized_moves<'a>(
    a1: &'a Automaton,
    s1: State,
    a2: &'a Automaton,
    s2: State,
) -> impl Iterator<Item = (LetterId, State, State)> + 'a {
    let out1 = a1.out_edges(s1);
    let out2 = a2.out_edges(s2);
    out1.iter().flat_map(move |e1| {
        a2_edges_on(out2, e1.letter)
            .iter()
            .map(move |e2| (e1.letter, e1.dst, e2.dst))
    })
}

fn a2_edges_on(out: &[Edge], letter: LetterId) -> &[Edge] {
    let lo = out.partition_point(|e| e.letter < letter);
    let hi = out.partition_point(|e| e.letter <= letter);
    &out[lo..hi]
}

/// Product automaton over the union alphabet. Its states are the pairs
/// reachable from initial pairs, numbered in breadth-first order, and
/// `L(product) = L(a1) ∩ L(a2)`.
pub fn product(a1: &Automaton, a2: &Automaton) -> Automaton {
    product_with_pairs(a1, a2).0
}

/// [`product`] together with the state pair behind each product state.
pub fn product_with_pairs(a1: &Automaton, a2: &Automaton) -> (Automaton, Vec<(State, State)>) {
    let (a1, a2) = align(a1, a2);
    let mut index: HashMap<(State, State), State> = HashMap::new();
    let mut pairs: Vec<(State, State)> = Vec::new();
    for &i1 in &a1.initial {
        for &i2 in &a2.initial {
            index.insert((i1, i2), pairs.len());
            pairs.push((i1, i2));
        }
    }
    let initial: Vec<State> = (0..pairs.len()).collect();
    let mut edges = Vec::new();
    let mut next = 0;
    while next < pairs.len() {
        let (s1, s2) = pairs[next];
        for (letter, t1, t2) in synchronized_moves(&a1, s1, &a2, s2) {
            let id = *index.entry((t1, t2)).or_insert_with(|| {
                pairs.push((t1, t2));
                pairs.len() - 1
            });
            edges.push(Edge {
                src: next,
                letter,
                dst: id,
            });
        }
        next += 1;
    }
    let finals = pairs
        .iter()
        .enumerate()
        .filter(|(_, &(s1, s2))| a1.is_final[s1] && a2.is_final[s2])
        .map(|(i, _)| i)
        .collect();
    let n = pairs.len();
    (
        Automaton::from_parts(a1.alphabet, n, initial, finals, edges),
        pairs,
    )
}

/// A shortest word in `L(a1) ∩ L(a2)`, ties broken by lexicographic letter
/// order; `None` if the intersection is empty.
pub fn shortest_common_word(a1: &Automaton, a2: &Automaton) -> Option<Word> {
    let (a1, a2) = align(a1, a2);
    // Queue order equals (length, lexicographic) order of the discovering
    // words, so the first discovery of a pair is via its least word.
    type Pair = (State, State);
    let mut parent: HashMap<Pair, Option<(Pair, LetterId)>> = HashMap::new();
    let mut queue = VecDeque::new();
    for &i1 in &a1.initial {
        for &i2 in &a2.initial {
            parent.insert((i1, i2), None);
            queue.push_back((i1, i2));
        }
    }
    while let Some(pair) = queue.pop_front() {
        if a1.is_final[pair.0] && a2.is_final[pair.1] {
            let mut letters = Vec::new();
            let mut cur = pair;
            while let Some((prev, letter)) = parent[&cur] {
                letters.push(a1.alphabet[letter].clone());
                cur = prev;
            }
            letters.reverse();
            return Some(Word::from(letters));
        }
        for (letter, t1, t2) in synchronized_moves(&a1, pair.0, &a2, pair.1) {
            if let std::collections::hash_map::Entry::Vacant(slot) = parent.entry((t1, t2)) {
                slot.insert(Some((pair, letter)));
                queue.push_back((t1, t2));
            }
        }
    }
    None
}
