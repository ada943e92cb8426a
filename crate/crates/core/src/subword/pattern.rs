//! Factorization patterns `(u⃗, B⃗)` and their witness words.
//!
//! A pattern `u0, B1, u1, …, Bp, up` stands for the words
//! `u0 · (B1-block)^n · u1 ⋯ (Bp-block)^n · up`, where a `B`-block is a word
//! whose content is exactly `B`. An automaton has a `(u⃗, B⃗)`-path when it
//! accepts `u0 x1 y1^* z1 u1 ⋯ xp yp^* zp up` with `y_i` labelling a loop of
//! content exactly `B_i` and `x_i`, `z_i` using only letters of `B_i`.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::alphabet::{AlphabetSet, Word};
use crate::automaton::{Automaton, LetterId, LetterMask, State};
use crate::error::{Error, Result};
use crate::scc::{component_contents, decompose, SccDecomposition};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FactorizationPattern {
    words: Vec<Word>,
    blocks: Vec<AlphabetSet>,
}

impl FactorizationPattern {
    /// `words` are `u0..up`, `blocks` are `B1..Bp`; every block must be
    /// nonempty and there must be exactly one more word than blocks.
    pub fn new(words: Vec<Word>, blocks: Vec<AlphabetSet>) -> Result<Self> {
        if words.len() != blocks.len() + 1 {
            return Err(Error::InvalidPattern(format!(
                "{} words for {} alphabets",
                words.len(),
                blocks.len()
            )));
        }
        if let Some(i) = blocks.iter().position(AlphabetSet::is_empty) {
            return Err(Error::InvalidPattern(format!(
                "alphabet B{} is empty",
                i + 1
            )));
        }
        Ok(FactorizationPattern { words, blocks })
    }

    /// The degenerate pattern denoting a single word.
    pub fn word(u: Word) -> Self {
        FactorizationPattern {
            words: vec![u],
            blocks: Vec::new(),
        }
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn blocks(&self) -> &[AlphabetSet] {
        &self.blocks
    }

    /// Number of alphabet blocks `p`.
    pub fn arity(&self) -> usize {
        self.blocks.len()
    }
}

/// Line format used for evidence output: `u: <word>` and `B: <letters>`
/// alternating, starting and ending with a `u` line.
impl fmt::Display for FactorizationPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, u) in self.words.iter().enumerate() {
            if i > 0 {
                let block = &self.blocks[i - 1];
                let letters: Vec<String> = block.iter().map(|l| l.to_string()).collect();
                writeln!(f, "B: {}", letters.join(" "))?;
            }
            writeln!(f, "u: {u}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FactorizationPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, u) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, ", {}, ", self.blocks[i - 1])?;
            }
            write!(f, "{u}")?;
        }
        f.write_str(")")
    }
}

/// `u0 · b1^n · u1 ⋯ bp^n · up` where `b_i` is the sorted letters of `B_i`.
pub fn pattern_witness(pat: &FactorizationPattern, n: usize) -> Result<Word> {
    if n == 0 {
        return Err(Error::LevelTooSmall { min: 1, got: 0 });
    }
    let mut out = pat.words[0].clone();
    for (block, u) in pat.blocks.iter().zip(&pat.words[1..]) {
        out.extend_from(&block.canonical_word().repeat(n));
        out.extend_from(u);
    }
    Ok(out)
}

/// No boundary letter of a fixed word can be absorbed into an adjacent
/// block, and blocks separated by an empty word have incomparable alphabets.
pub fn is_proper(pat: &FactorizationPattern) -> bool {
    let p = pat.arity();
    for i in 0..p {
        let block = &pat.blocks[i];
        if pat.words[i].last().is_some_and(|l| block.contains(l)) {
            return false;
        }
        if pat.words[i + 1].first().is_some_and(|l| block.contains(l)) {
            return false;
        }
    }
    for i in 1..p {
        if pat.words[i].is_empty() {
            let (left, right) = (&pat.blocks[i - 1], &pat.blocks[i]);
            if left.is_subset(right) || right.is_subset(left) {
                return false;
            }
        }
    }
    true
}

/// Rewrites a pattern into a proper one without shrinking its language:
/// boundary letters of `u_i` belonging to an adjacent block are absorbed,
/// and comparable blocks separated by an empty word merge into the larger.
pub fn normalize(pat: &FactorizationPattern) -> FactorizationPattern {
    let mut words: Vec<Vec<_>> = pat.words.iter().map(|w| w.letters().to_vec()).collect();
    let mut blocks = pat.blocks.clone();
    loop {
        let mut changed = false;
        for i in 0..blocks.len() {
            while words[i].last().is_some_and(|l| blocks[i].contains(l)) {
                words[i].pop();
                changed = true;
            }
            while words[i + 1].first().is_some_and(|l| blocks[i].contains(l)) {
                words[i + 1].remove(0);
                changed = true;
            }
        }
        if let Some(i) = (1..blocks.len()).find(|&i| {
            words[i].is_empty()
                && (blocks[i - 1].is_subset(&blocks[i]) || blocks[i].is_subset(&blocks[i - 1]))
        }) {
            let merged = if blocks[i - 1].is_subset(&blocks[i]) {
                blocks[i].clone()
            } else {
                blocks[i - 1].clone()
            };
            blocks[i - 1] = merged;
            blocks.remove(i);
            words.remove(i);
            changed = true;
        }
        if !changed {
            break;
        }
    }
    FactorizationPattern {
        words: words.into_iter().map(Word::from).collect(),
        blocks,
    }
}

/// How a state entered a stage of the path search.
#[derive(Clone, Copy, Debug)]
enum Link {
    /// Initial state of the automaton.
    Start,
    /// Same state at the end of the previous stage.
    Carry,
    /// Read `letter` from `from`, which was reached at the end of the
    /// previous stage.
    Step { from: State, letter: LetterId },
    /// Read `letter` from `from` inside the same stage.
    Walk { from: State, letter: LetterId },
    /// Same state as in the previous stage, after going around an
    /// exact-content loop of block `block`.
    Loop { block: usize },
}

struct Stage {
    links: Vec<Option<Link>>,
}

impl Stage {
    fn reached(&self) -> impl Iterator<Item = State> + '_ {
        self.links
            .iter()
            .enumerate()
            .filter(|(_, l)| l.is_some())
            .map(|(q, _)| q)
    }
}

struct Block {
    mask: LetterMask,
    scc: SccDecomposition,
}

/// Whether `a` has a `(u⃗, B⃗)`-path.
pub fn has_pattern_path(a: &Automaton, pat: &FactorizationPattern) -> bool {
    realize_pattern(a, pat, 1).is_some()
}

/// A word of `L(a)` of the form `u0 x1 y1^n z1 u1 ⋯ xp yp^n zp up`, where
/// each `y_i` labels a loop of content exactly `B_i` and `x_i`, `z_i` use only
/// letters of `B_i`; `None` if `a` has no `(u⃗, B⃗)`-path.
///
/// Such words all have the same `Sub_n` as [`pattern_witness`] at level `n`.
pub fn realize_pattern(a: &Automaton, pat: &FactorizationPattern, n: usize) -> Option<Word> {
    let to_ids = |w: &Word| -> Option<Vec<LetterId>> {
        w.letters().iter().map(|l| a.letter_id(l)).collect()
    };
    let words: Vec<Vec<LetterId>> = pat.words.iter().map(to_ids).collect::<Option<_>>()?;
    let mut blocks = Vec::with_capacity(pat.arity());
    for b in &pat.blocks {
        if b.iter().any(|l| a.letter_id(l).is_none()) {
            return None;
        }
        let mask = a.mask_of(b);
        let scc = decompose(a, Some(&mask));
        blocks.push(Block { mask, scc });
    }

    let n_states = a.num_states();
    let mut stages: Vec<Stage> = Vec::new();
    let mut start = vec![None; n_states];
    for &q in a.initial_states() {
        start[q] = Some(Link::Start);
    }
    stages.push(Stage { links: start });

    let read_word = |stages: &mut Vec<Stage>, word: &[LetterId]| {
        for &letter in word {
            let prev = stages.last().expect("nonempty");
            let mut links = vec![None; n_states];
            for q in prev.reached() {
                for e in a.out_edges_on(q, letter) {
                    links[e.dst].get_or_insert(Link::Step { from: q, letter });
                }
            }
            stages.push(Stage { links });
        }
    };

    read_word(&mut stages, &words[0]);
    for (i, block) in blocks.iter().enumerate() {
        let before = stages.last().expect("nonempty");
        stages.push(walk_stage(a, before, &block.mask));

        let contents = component_contents(a, &block.scc, Some(&block.mask));
        let walked = stages.last().expect("nonempty");
        let mut links = vec![None; n_states];
        for q in walked.reached() {
            if contents[block.scc.component_of(q)] == block.mask {
                links[q] = Some(Link::Loop { block: i });
            }
        }
        let looped = Stage { links };
        let after = walk_stage(a, &looped, &block.mask);
        stages.push(looped);
        stages.push(after);
        read_word(&mut stages, &words[i + 1]);
    }

    let last = stages.last().expect("nonempty");
    let accept = last.reached().find(|&q| a.is_final(q))?;

    // Walk the stages backwards, collecting letters in reverse.
    let mut reversed: Vec<LetterId> = Vec::new();
    let mut state = accept;
    for stage in stages.iter().rev() {
        loop {
            match stage.links[state].expect("backtracking follows reached states") {
                Link::Start | Link::Carry => break,
                Link::Step { from, letter } => {
                    reversed.push(letter);
                    state = from;
                    break;
                }
                Link::Walk { from, letter } => {
                    reversed.push(letter);
                    state = from;
                }
                Link::Loop { block } => {
                    let b = &blocks[block];
                    let lap = loop_word(a, state, &b.mask, &b.scc);
                    for _ in 0..n {
                        reversed.extend(lap.iter().rev());
                    }
                    break;
                }
            }
        }
    }
    reversed.reverse();
    Some(
        reversed
            .into_iter()
            .map(|id| a.letter(id).clone())
            .collect(),
    )
}

/// Breadth-first closure of the previous stage under transitions in `mask`.
fn walk_stage(a: &Automaton, before: &Stage, mask: &LetterMask) -> Stage {
    let mut links = vec![None; a.num_states()];
    let mut queue = VecDeque::new();
    for q in before.reached() {
        links[q] = Some(Link::Carry);
        queue.push_back(q);
    }
    while let Some(q) = queue.pop_front() {
        for e in a.out_edges(q) {
            if mask.contains(e.letter) && links[e.dst].is_none() {
                links[e.dst] = Some(Link::Walk {
                    from: q,
                    letter: e.letter,
                });
                queue.push_back(e.dst);
            }
        }
    }
    Stage { links }
}

/// A closed walk at `q` inside its component of `a|mask` using every letter
/// of `mask`; the component's content must equal `mask`.
fn loop_word(a: &Automaton, q: State, mask: &LetterMask, scc: &SccDecomposition) -> Vec<LetterId> {
    let comp = scc.component_of(q);
    let inside = |s: State| scc.component_of(s) == comp;
    let mut word = Vec::new();
    for letter in mask.ones() {
        let edge = a
            .edges()
            .iter()
            .find(|e| e.letter == letter && inside(e.src) && inside(e.dst))
            .expect("component content covers the mask");
        word.extend(path_within(a, q, edge.src, mask, &inside));
        word.push(letter);
        word.extend(path_within(a, edge.dst, q, mask, &inside));
    }
    word
}

fn path_within(
    a: &Automaton,
    from: State,
    to: State,
    mask: &LetterMask,
    inside: &dyn Fn(State) -> bool,
) -> Vec<LetterId> {
    let mut parent: Vec<Option<(State, LetterId)>> = vec![None; a.num_states()];
    let mut seen = FixedBitSet::with_capacity(a.num_states());
    let mut queue = VecDeque::from([from]);
    seen.insert(from);
    while let Some(q) = queue.pop_front() {
        if q == to {
            break;
        }
        for e in a.out_edges(q) {
            if mask.contains(e.letter) && inside(e.dst) && !seen.put(e.dst) {
                parent[e.dst] = Some((q, e.letter));
                queue.push_back(e.dst);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = to;
    while cur != from {
        let (prev, letter) = parent[cur].expect("strongly connected component");
        path.push(letter);
        cur = prev;
    }
    path.reverse();
    path
}
