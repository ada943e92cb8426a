//! Separation by prefix-testable languages.
//!
//! Two languages are prefix-separable iff they are disjoint and their
//! topological closures share no infinite word. The closure of `L(a)` is
//! recognized by the trimmed automaton read as a Büchi automaton with every
//! state accepting.

use fixedbitset::FixedBitSet;

use crate::alphabet::Word;
use crate::automaton::{product, Automaton};
use crate::error::{Error, Result};
use crate::scc::{component_contents, tarjan_scc};

/// An automaton read over infinite words: a run is accepting iff it visits
/// a final state infinitely often.
#[derive(Clone, Debug, PartialEq)]
pub struct BuchiAutomaton {
    automaton: Automaton,
}

impl BuchiAutomaton {
    pub fn new(automaton: Automaton) -> Self {
        BuchiAutomaton { automaton }
    }

    pub fn automaton(&self) -> &Automaton {
        &self.automaton
    }

    pub fn all_accepting(&self) -> bool {
        self.automaton.final_states().len() == self.automaton.num_states()
    }

    /// Some reachable component with a loop contains an accepting state.
    pub fn is_nonempty(&self) -> bool {
        let a = &self.automaton;
        let reach = a.forward_closure(a.initial_states().iter().copied(), None);
        let scc = tarjan_scc(a);
        let contents = component_contents(a, &scc, None);
        scc.components()
            .iter()
            .zip(&contents)
            .any(|(members, content)| {
                !content.is_clear()
                    && members.iter().any(|&q| reach.contains(q))
                    && members.iter().any(|&q| a.is_final(q))
            })
    }

    /// Whether the ultimately periodic word `prefix · period^ω` is accepted.
    /// `period` must be nonempty.
    pub fn accepts_lasso(&self, prefix: &Word, period: &Word) -> Result<bool> {
        if period.is_empty() {
            return Err(Error::EmptyWord);
        }
        let a = &self.automaton;
        let n = a.num_states();
        let step = |from: &FixedBitSet, w: &Word| -> Result<FixedBitSet> {
            let mut current = from.clone();
            for letter in w.letters() {
                let id = a
                    .letter_id(letter)
                    .ok_or_else(|| Error::ForeignLetter(letter.clone()))?;
                let mut next = FixedBitSet::with_capacity(n);
                for q in current.ones() {
                    for e in a.out_edges_on(q, id) {
                        next.insert(e.dst);
                    }
                }
                current = next;
            }
            Ok(current)
        };

        // Graph on states at period boundaries: q → q' if period leads from
        // q to q', marked when the run segment can pass an accepting state.
        let mut start = FixedBitSet::with_capacity(n);
        start.extend(a.initial_states().iter().copied());
        let entry = step(&start, prefix)?;
        let succ: Vec<Vec<(usize, bool)>> = (0..n)
            .map(|q| {
                let mut layer: Vec<(usize, bool)> = vec![(q, a.is_final(q))];
                for letter in period.letters() {
                    let id = a.letter_id(letter).expect("checked by step");
                    let mut next: Vec<Option<bool>> = vec![None; n];
                    for &(p, hit) in &layer {
                        for e in a.out_edges_on(p, id) {
                            let h = hit || a.is_final(e.dst);
                            let slot = next[e.dst].get_or_insert(h);
                            *slot |= h;
                        }
                    }
                    layer = next
                        .into_iter()
                        .enumerate()
                        .filter_map(|(s, h)| h.map(|h| (s, h)))
                        .collect();
                }
                layer
            })
            .collect();
        // Accepting iff a marked edge lies on a cycle reachable from entry.
        let reach = closure(&succ, entry.ones());
        for q in reach.ones() {
            for &(t, hit) in &succ[q] {
                if hit && closure(&succ, [t]).contains(q) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

fn closure(succ: &[Vec<(usize, bool)>], from: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut seen = FixedBitSet::with_capacity(succ.len());
    let mut stack: Vec<usize> = from.into_iter().collect();
    for &s in &stack {
        seen.insert(s);
    }
    while let Some(q) = stack.pop() {
        for &(t, _) in &succ[q] {
            if !seen.put(t) {
                stack.push(t);
            }
        }
    }
    seen
}

/// Trims `a` and makes every remaining state accepting.
pub fn closure_buchi(a: &Automaton) -> BuchiAutomaton {
    let t = a.trim();
    let all: Vec<usize> = (0..t.num_states()).collect();
    let edges: Vec<_> = t.transitions().map(|(p, l, q)| (p, l.clone(), q)).collect();
    let automaton = Automaton::new(
        &t.alphabet_set(),
        t.num_states(),
        t.initial_states().iter().copied(),
        all,
        edges,
    )
    .expect("trimmed automaton is well formed");
    BuchiAutomaton { automaton }
}

/// Whether two all-accepting Büchi automata share an infinite word: the
/// plain product then has a reachable loop.
pub fn buchi_product_nonempty(b1: &BuchiAutomaton, b2: &BuchiAutomaton) -> Result<bool> {
    if !b1.all_accepting() || !b2.all_accepting() {
        return Err(Error::NotAllAccepting);
    }
    let p = product(&b1.automaton, &b2.automaton);
    let scc = tarjan_scc(&p);
    // product states are all reachable
    Ok(component_contents(&p, &scc, None)
        .iter()
        .any(|c| !c.is_clear()))
}

/// Whether some prefix-testable language contains `L(a1)` and is disjoint
/// from `L(a2)`.
pub fn prefix_separable(a1: &Automaton, a2: &Automaton) -> bool {
    if !product(a1, a2).is_empty() {
        return false;
    }
    !buchi_product_nonempty(&closure_buchi(a1), &closure_buchi(a2))
        .expect("closures are all-accepting")
}
