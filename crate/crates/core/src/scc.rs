//! Strongly connected components and their transition content.

use crate::alphabet::AlphabetSet;
use crate::automaton::{Automaton, LetterMask, State};

/// Partition of the states into strongly connected components.
///
/// Components are listed in reverse topological order: every transition
/// between two distinct components goes from a later one to an earlier one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccDecomposition {
    component_of: Vec<usize>,
    components: Vec<Vec<State>>,
}

impl SccDecomposition {
    pub fn component_of(&self, state: State) -> usize {
        self.component_of[state]
    }

    /// Components in reverse topological order; states inside a component
    /// are sorted.
    pub fn components(&self) -> &[Vec<State>] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Tarjan's algorithm, linear in states plus transitions.
pub fn tarjan_scc(a: &Automaton) -> SccDecomposition {
    decompose(a, None)
}

/// Tarjan over the transitions whose letter lies in `mask`.
///
/// Iterative so that long chains do not exhaust the call stack.
pub(crate) fn decompose(a: &Automaton, mask: Option<&LetterMask>) -> SccDecomposition {
    const UNVISITED: usize = usize::MAX;
    let n = a.num_states();
    let mut index = vec![UNVISITED; n];
    let mut lowlink = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<State> = Vec::new();
    let mut component_of = vec![0; n];
    let mut components: Vec<Vec<State>> = Vec::new();
    let mut counter = 0;
    // (state, position in its outgoing edge slice)
    let mut call: Vec<(State, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        lowlink[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&(v, start)) = call.last() {
            let out = a.out_edges(v);
            let mut pos = start;
            let mut descend = None;
            while pos < out.len() {
                let e = out[pos];
                pos += 1;
                if mask.is_some_and(|m| !m.contains(e.letter)) {
                    continue;
                }
                let w = e.dst;
                if index[w] == UNVISITED {
                    descend = Some(w);
                    break;
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
            }
            if let Some(frame) = call.last_mut() {
                frame.1 = pos;
            }
            if let Some(w) = descend {
                index[w] = counter;
                lowlink[w] = counter;
                counter += 1;
                stack.push(w);
                on_stack[w] = true;
                call.push((w, 0));
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                lowlink[parent] = lowlink[parent].min(lowlink[v]);
            }
            if lowlink[v] == index[v] {
                let id = components.len();
                let mut members = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    component_of[w] = id;
                    members.push(w);
                    if w == v {
                        break;
                    }
                }
                members.sort_unstable();
                components.push(members);
            }
        }
    }
    SccDecomposition {
        component_of,
        components,
    }
}

/// For each component, the letters labelling transitions with both endpoints
/// inside it (restricted to `mask`).
pub(crate) fn component_contents(
    a: &Automaton,
    scc: &SccDecomposition,
    mask: Option<&LetterMask>,
) -> Vec<LetterMask> {
    let width = a.alphabet().len();
    let mut contents = vec![LetterMask::with_capacity(width); scc.len()];
    for e in a.edges() {
        if mask.is_some_and(|m| !m.contains(e.letter)) {
            continue;
        }
        let c = scc.component_of[e.src];
        if c == scc.component_of[e.dst] {
            contents[c].insert(e.letter);
        }
    }
    contents
}

/// The letters labelling transitions inside the strongly connected component
/// of `state`; empty for a trivial component without a self-loop.
pub fn scc_content(a: &Automaton, state: State) -> AlphabetSet {
    assert!(state < a.num_states(), "state {state} out of range");
    let scc = tarjan_scc(a);
    let contents = component_contents(a, &scc, None);
    a.set_of(&contents[scc.component_of(state)])
}
