//! Separation by piecewise testable languages.
//!
//! `L(A1)` and `L(A2)` are *not* separable iff both automata have a path for
//! a common factorization pattern `(u⃗, B⃗)`. Such a pair of paths is detected
//! by shortcutting every configuration
//!
//! ```text
//! p1 --⊆B--> q1 --⊆B--> r1      q1 and q2 both on an (=B)-loop
//! p2 --⊆B--> q2 --⊆B--> r2
//! ```
//!
//! with a fresh letter shared by both automata and testing the two extended
//! automata for a common word. For each `(q1, q2)` only the largest common
//! loop alphabet matters, since it allows the most `⊆B` paths.
//!
//! [`pt_separable`] runs that test on the implicit product, firing each
//! shortcut group once; [`build_extended`] and [`pt_separable_via_extended`]
//! materialize the extended automata.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::rc::Rc;

use fixedbitset::FixedBitSet;

use crate::alphabet::{AlphabetSet, Letter, Word};
use crate::automaton::{
    align, product, shortest_common_word, synchronized_moves, Automaton, LetterMask, State,
};
use crate::error::{Error, Result};
use crate::scc::{component_contents, decompose, SccDecomposition};
use crate::subword::pattern::FactorizationPattern;

/// Prefix of the fresh letters added by [`build_extended`].
pub const PATTERN_LETTER_PREFIX: char = '@';

/// A pair of states probed for a common loop alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoopQuery {
    pub q1: State,
    pub q2: State,
}

/// A shortcut `p1 → r1` in the first automaton and `p2 → r2` in the second,
/// witnessed by `(=B)`-loops at `witness_q1` and `witness_q2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PatternTuple {
    pub p1: State,
    pub r1: State,
    pub p2: State,
    pub r2: State,
    pub witness_q1: State,
    pub witness_q2: State,
    pub witness_b: AlphabetSet,
}

/// An input automaton together with its pattern letters.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtendedAutomaton {
    base: Automaton,
    pattern_letters: BTreeMap<Letter, PatternTuple>,
}

impl ExtendedAutomaton {
    pub fn base(&self) -> &Automaton {
        &self.base
    }

    pub fn pattern_letters(&self) -> &BTreeMap<Letter, PatternTuple> {
        &self.pattern_letters
    }

    pub fn tuple(&self, letter: &Letter) -> Option<&PatternTuple> {
        self.pattern_letters.get(letter)
    }
}

/// The decreasing alphabet sequence computed for one [`LoopQuery`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopFixpoint {
    /// `C_1 ⊋ C_2 ⊋ … ⊋ C_m`, ending at the fixpoint or at ∅.
    pub chain: Vec<AlphabetSet>,
    /// Restriction rounds performed after `C_1`.
    pub iterations: usize,
    /// The largest nonempty `B` with `(=B)`-loops at both states.
    pub alphabet: Option<AlphabetSet>,
}

struct Restricted {
    scc: SccDecomposition,
    contents: Vec<LetterMask>,
}

/// States before and after a component within its restriction.
struct Closures {
    before: FixedBitSet,
    after: FixedBitSet,
}

/// One automaton with memoized restrictions to alphabets.
struct Side {
    a: Automaton,
    restricted: HashMap<LetterMask, Rc<Restricted>>,
    closures: HashMap<(LetterMask, usize), Rc<Closures>>,
}

impl Side {
    fn new(a: Automaton) -> Self {
        Side {
            a,
            restricted: HashMap::new(),
            closures: HashMap::new(),
        }
    }

    fn restricted(&mut self, mask: &LetterMask) -> Rc<Restricted> {
        if let Some(r) = self.restricted.get(mask) {
            return Rc::clone(r);
        }
        let scc = decompose(&self.a, Some(mask));
        let contents = component_contents(&self.a, &scc, Some(mask));
        let r = Rc::new(Restricted { scc, contents });
        self.restricted.insert(mask.clone(), Rc::clone(&r));
        r
    }

    /// Content of the component of `q` in the restriction to `mask`.
    fn loop_content(&mut self, q: State, mask: &LetterMask) -> LetterMask {
        let r = self.restricted(mask);
        r.contents[r.scc.component_of(q)].clone()
    }

    fn component(&mut self, q: State, mask: &LetterMask) -> usize {
        self.restricted(mask).scc.component_of(q)
    }

    fn closures(&mut self, q: State, mask: &LetterMask) -> Rc<Closures> {
        let key = (mask.clone(), self.component(q, mask));
        if let Some(c) = self.closures.get(&key) {
            return Rc::clone(c);
        }
        let c = Rc::new(Closures {
            before: self.a.backward_closure([q], Some(mask)),
            after: self.a.forward_closure([q], Some(mask)),
        });
        self.closures.insert(key, Rc::clone(&c));
        c
    }
}

struct MaskFixpoint {
    chain: Vec<LetterMask>,
    iterations: usize,
    alphabet: Option<LetterMask>,
}

fn fixpoint(s1: &mut Side, q1: State, s2: &mut Side, q2: State) -> MaskFixpoint {
    let full = s1.a.full_mask();
    let mut c = s1.loop_content(q1, &full);
    c.intersect_with(&s2.loop_content(q2, &full));
    let mut chain = vec![c.clone()];
    let mut iterations = 0;
    loop {
        if c.is_clear() {
            return MaskFixpoint {
                chain,
                iterations,
                alphabet: None,
            };
        }
        let mut next = s1.loop_content(q1, &c);
        next.intersect_with(&s2.loop_content(q2, &c));
        iterations += 1;
        if next == c {
            return MaskFixpoint {
                chain,
                iterations,
                alphabet: Some(c),
            };
        }
        chain.push(next.clone());
        c = next;
    }
}

fn check_state(a: &Automaton, q: State) {
    assert!(
        q < a.num_states(),
        "state {q} out of range (automaton has {} states)",
        a.num_states()
    );
}

/// Runs the alphabet fixpoint for `(q1, q2)` and reports every step.
///
/// # Panics
/// If a state is out of range.
pub fn loop_fixpoint(a1: &Automaton, q1: State, a2: &Automaton, q2: State) -> LoopFixpoint {
    check_state(a1, q1);
    check_state(a2, q2);
    let (b1, b2) = align(a1, a2);
    let mut s1 = Side::new(b1);
    let mut s2 = Side::new(b2);
    let fix = fixpoint(&mut s1, q1, &mut s2, q2);
    let set = |m: &LetterMask| s1.a.set_of(m);
    LoopFixpoint {
        chain: fix.chain.iter().map(set).collect(),
        iterations: fix.iterations,
        alphabet: fix.alphabet.as_ref().map(set),
    }
}

/// The largest nonempty `B` such that `q1` and `q2` both lie on an
/// `(=B)`-loop, if any.
///
/// # Panics
/// If a state is out of range.
pub fn max_common_loop_alphabet(
    a1: &Automaton,
    q1: State,
    a2: &Automaton,
    q2: State,
) -> Option<AlphabetSet> {
    loop_fixpoint(a1, q1, a2, q2).alphabet
}

/// All shortcut tuples, in `(q1, q2, p1, r1, p2, r2)` order; a tuple found
/// from several `(q1, q2)` is listed once with its first witness.
pub fn enumerate_pattern_tuples(a1: &Automaton, a2: &Automaton) -> Vec<PatternTuple> {
    let (b1, b2) = align(a1, a2);
    let mut s1 = Side::new(b1);
    let mut s2 = Side::new(b2);
    let mut groups: HashSet<(LetterMask, usize, usize)> = HashSet::new();
    let mut seen: HashSet<(State, State, State, State)> = HashSet::new();
    let mut tuples = Vec::new();
    for q1 in 0..s1.a.num_states() {
        for q2 in 0..s2.a.num_states() {
            let Some(b) = fixpoint(&mut s1, q1, &mut s2, q2).alphabet else {
                continue;
            };
            let key = (b.clone(), s1.component(q1, &b), s2.component(q2, &b));
            if !groups.insert(key) {
                continue;
            }
            let c1 = s1.closures(q1, &b);
            let c2 = s2.closures(q2, &b);
            let witness_b = s1.a.set_of(&b);
            for p1 in c1.before.ones() {
                for r1 in c1.after.ones() {
                    for p2 in c2.before.ones() {
                        for r2 in c2.after.ones() {
                            if seen.insert((p1, r1, p2, r2)) {
                                tuples.push(PatternTuple {
                                    p1,
                                    r1,
                                    p2,
                                    r2,
                                    witness_q1: q1,
                                    witness_q2: q2,
                                    witness_b: witness_b.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    tuples
}

/// Copies of `a1` and `a2` with one fresh letter `@<i>` per tuple `i` of
/// [`enumerate_pattern_tuples`], labelling `p1 → r1` and `p2 → r2`.
///
/// Fails with [`Error::ReservedLetter`] if an input letter starts with `@`.
pub fn build_extended(
    a1: &Automaton,
    a2: &Automaton,
) -> Result<(ExtendedAutomaton, ExtendedAutomaton)> {
    if let Some(l) = a1
        .alphabet()
        .iter()
        .chain(a2.alphabet())
        .find(|l| l.as_str().starts_with(PATTERN_LETTER_PREFIX))
    {
        return Err(Error::ReservedLetter(l.clone()));
    }
    let tuples = enumerate_pattern_tuples(a1, a2);
    let fresh: Vec<Letter> = (0..tuples.len())
        .map(|i| Letter::new(&format!("{PATTERN_LETTER_PREFIX}{i}")))
        .collect::<Result<_>>()?;
    let pattern_letters: BTreeMap<Letter, PatternTuple> =
        fresh.iter().cloned().zip(tuples.iter().cloned()).collect();

    let extend = |a: &Automaton, ends: &dyn Fn(&PatternTuple) -> (State, State)| {
        let alphabet = a.alphabet_set().union(&fresh.iter().cloned().collect());
        let mut transitions: Vec<(State, Letter, State)> =
            a.transitions().map(|(p, l, q)| (p, l.clone(), q)).collect();
        for (letter, t) in fresh.iter().zip(&tuples) {
            let (p, r) = ends(t);
            transitions.push((p, letter.clone(), r));
        }
        let base = Automaton::new(
            &alphabet,
            a.num_states(),
            a.initial_states().iter().copied(),
            a.final_states().iter().copied(),
            transitions,
        )?;
        Ok::<_, Error>(ExtendedAutomaton {
            base,
            pattern_letters: pattern_letters.clone(),
        })
    };
    Ok((
        extend(a1, &|t| (t.p1, t.r1))?,
        extend(a2, &|t| (t.p2, t.r2))?,
    ))
}

/// The decision through explicitly built extended automata.
pub fn pt_separable_via_extended(a1: &Automaton, a2: &Automaton) -> Result<bool> {
    let (e1, e2) = build_extended(a1, a2)?;
    Ok(product(&e1.base, &e2.base).is_empty())
}

/// All `p → r` shortcuts sharing one `(B, component of q1, component of q2)`.
struct Hub {
    after1: FixedBitSet,
    before2: FixedBitSet,
    after2: FixedBitSet,
}

/// Whether some piecewise testable language contains `L(a1)` and is
/// disjoint from `L(a2)`.
pub fn pt_separable(a1: &Automaton, a2: &Automaton) -> bool {
    // Shortcuts on an accepting run only involve useful states.
    let (b1, b2) = align(&a1.trim(), &a2.trim());
    let (n1, n2) = (b1.num_states(), b2.num_states());
    if b1.is_empty() || b2.is_empty() {
        return true;
    }
    let mut s1 = Side::new(b1);
    let mut s2 = Side::new(b2);

    let loops1 = loop_states(&mut s1);
    let loops2 = loop_states(&mut s2);
    let mut groups: HashSet<(LetterMask, usize, usize)> = HashSet::new();
    let mut hubs: Vec<Hub> = Vec::new();
    let mut hubs_at: Vec<Vec<usize>> = vec![Vec::new(); n1];
    for &q1 in &loops1 {
        for &q2 in &loops2 {
            let Some(b) = fixpoint(&mut s1, q1, &mut s2, q2).alphabet else {
                continue;
            };
            let key = (b.clone(), s1.component(q1, &b), s2.component(q2, &b));
            if !groups.insert(key) {
                continue;
            }
            let c1 = s1.closures(q1, &b);
            let c2 = s2.closures(q2, &b);
            for p1 in c1.before.ones() {
                hubs_at[p1].push(hubs.len());
            }
            hubs.push(Hub {
                after1: c1.after.clone(),
                before2: c2.before.clone(),
                after2: c2.after.clone(),
            });
        }
    }

    let (a1, a2) = (&s1.a, &s2.a);
    let mut visited = FixedBitSet::with_capacity(n1 * n2);
    let mut fired = FixedBitSet::with_capacity(hubs.len());
    let mut queue = VecDeque::new();
    let mut visit = |p: (State, State), queue: &mut VecDeque<(State, State)>| {
        if !visited.put(p.0 * n2 + p.1) {
            queue.push_back(p);
        }
    };
    for &i1 in a1.initial_states() {
        for &i2 in a2.initial_states() {
            visit((i1, i2), &mut queue);
        }
    }
    while let Some((x1, x2)) = queue.pop_front() {
        if a1.is_final(x1) && a2.is_final(x2) {
            return false;
        }
        for (_, t1, t2) in synchronized_moves(a1, x1, a2, x2) {
            visit((t1, t2), &mut queue);
        }
        for &h in &hubs_at[x1] {
            if fired.contains(h) || !hubs[h].before2.contains(x2) {
                continue;
            }
            fired.insert(h);
            for r1 in hubs[h].after1.ones() {
                for r2 in hubs[h].after2.ones() {
                    visit((r1, r2), &mut queue);
                }
            }
        }
    }
    true
}

/// States lying on some loop.
fn loop_states(s: &mut Side) -> Vec<State> {
    let full = s.a.full_mask();
    (0..s.a.num_states())
        .filter(|&q| !s.loop_content(q, &full).is_clear())
        .collect()
}

/// Decodes a shortest common word of the extended automata into a pattern:
/// runs of ordinary letters become the `u_i` and each pattern letter its
/// `B`. `None` when the languages are separable.
pub fn extract_pattern(
    e1: &ExtendedAutomaton,
    e2: &ExtendedAutomaton,
) -> Result<Option<FactorizationPattern>> {
    let Some(word) = shortest_common_word(&e1.base, &e2.base) else {
        return Ok(None);
    };
    let mut words = Vec::new();
    let mut blocks = Vec::new();
    let mut current = Word::empty();
    for letter in word.letters() {
        if letter.as_str().starts_with(PATTERN_LETTER_PREFIX) {
            let tuple = e1
                .tuple(letter)
                .filter(|t| e2.tuple(letter) == Some(*t))
                .ok_or_else(|| Error::MissingPatternLetter(letter.clone()))?;
            words.push(std::mem::replace(&mut current, Word::empty()));
            blocks.push(tuple.witness_b.clone());
        } else {
            current.push(letter.clone());
        }
    }
    words.push(current);
    FactorizationPattern::new(words, blocks).map(Some)
}

/// A common pattern of `L(a1)` and `L(a2)`, or `None` if they are separable.
pub fn common_pattern(a1: &Automaton, a2: &Automaton) -> Result<Option<FactorizationPattern>> {
    let (e1, e2) = build_extended(a1, a2)?;
    extract_pattern(&e1, &e2)
}

/// Whether the deterministic automaton `d` recognizes a piecewise testable
/// language, i.e. is separable from its complement.
pub fn is_piecewise_testable(d: &Automaton) -> Result<bool> {
    let complement = d.complement()?;
    Ok(pt_separable(d, &complement))
}
