//! Same-content path search and its reduction from 3-SAT.
//!
//! Deciding whether `u ∈ L(A1)` and `v ∈ L(A2)` exist with
//! `content(u) = content(v)` is NP-hard: [`sat_reduction`] turns a 3-CNF into
//! two chain automata over the literal alphabet such that a content-equal
//! pair exists iff the formula is satisfiable. [`same_content_witness`] is the
//! matching exhaustive search, exponential in the alphabet size.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write;

use fixedbitset::FixedBitSet;

use crate::alphabet::{AlphabetSet, Letter, Word};
use crate::automaton::{align, Automaton, State};
use crate::error::{Error, Result};

/// A CNF with at most three literals per clause. Literals are nonzero signed
/// variable indices, DIMACS style.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf3 {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl Cnf3 {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for (i, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::InvalidCnf(format!("clause {} is empty", i + 1)));
            }
            if clause.len() > 3 {
                return Err(Error::InvalidCnf(format!(
                    "clause {} has {} literals",
                    i + 1,
                    clause.len()
                )));
            }
            if let Some(&lit) = clause
                .iter()
                .find(|&&l| l == 0 || l.unsigned_abs() as usize > num_vars)
            {
                return Err(Error::InvalidCnf(format!(
                    "literal {lit} in clause {} is outside 1..={num_vars}",
                    i + 1
                )));
            }
        }
        Ok(Cnf3 { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// `valuation[i]` is the value of variable `i + 1`.
    pub fn satisfies(&self, valuation: &[bool]) -> bool {
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&l| {
                let value = valuation[l.unsigned_abs() as usize - 1];
                if l > 0 {
                    value
                } else {
                    !value
                }
            })
        })
    }

    /// First satisfying valuation in binary counting order
    /// (all false first).
    pub fn brute_force_sat(&self) -> Option<Vec<bool>> {
        assert!(self.num_vars < 32, "brute force limited to 31 variables");
        (0u32..1 << self.num_vars)
            .map(|bits| {
                (0..self.num_vars)
                    .map(|i| bits >> i & 1 == 1)
                    .collect::<Vec<_>>()
            })
            .find(|v| self.satisfies(v))
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for l in clause {
                let _ = write!(out, "{l} ");
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Reads `p cnf <vars> <clauses>` followed by zero-terminated clauses.
/// Lines starting with `c` are comments; a line starting with `%` ends the
/// input.
pub fn parse_dimacs(text: &str) -> Result<Cnf3> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut last_line = 0;
    for (number, raw) in text.lines().enumerate() {
        let line = number + 1;
        last_line = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('c') {
            continue;
        }
        if content.starts_with('%') {
            break;
        }
        let err = |message: String| Error::Dimacs { line, message };
        if content.starts_with('p') {
            if header.is_some() {
                return Err(err("duplicate problem line".into()));
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            let ["p", "cnf", vars, count] = fields.as_slice() else {
                return Err(err("expected `p cnf <vars> <clauses>`".into()));
            };
            let vars = vars
                .parse()
                .map_err(|_| err(format!("invalid variable count {vars:?}")))?;
            let count = count
                .parse()
                .map_err(|_| err(format!("invalid clause count {count:?}")))?;
            header = Some((vars, count));
            continue;
        }
        if header.is_none() {
            return Err(err("clause before the problem line".into()));
        }
        for token in content.split_whitespace() {
            let lit: i32 = token
                .parse()
                .map_err(|_| err(format!("invalid literal {token:?}")))?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(err("empty clause".into()));
                }
                if current.len() > 3 {
                    return Err(err(format!("clause with {} literals", current.len())));
                }
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    let (vars, count) = header.ok_or(Error::Dimacs {
        line: last_line.max(1),
        message: "missing problem line".into(),
    })?;
    if !current.is_empty() {
        return Err(Error::Dimacs {
            line: last_line,
            message: "last clause is not terminated by 0".into(),
        });
    }
    if clauses.len() != count {
        return Err(Error::Dimacs {
            line: last_line,
            message: format!("header declares {count} clauses, found {}", clauses.len()),
        });
    }
    Cnf3::new(vars, clauses)
}

/// Letter for a literal: `xi` or `~xi`.
pub fn literal_letter(lit: i32) -> Letter {
    let token = if lit > 0 {
        format!("x{lit}")
    } else {
        format!("~x{}", -lit)
    };
    Letter::new(&token).expect("literal tokens are valid")
}

/// `A1` chooses `xi` or `~xi` at step `i`; `A2` first reads one literal of
/// each clause, then behaves like `A1`.
pub fn sat_reduction(f: &Cnf3) -> (Automaton, Automaton) {
    let n = f.num_vars;
    let k = f.clauses.len();
    let alphabet: AlphabetSet = (1..=n as i32)
        .flat_map(|i| [literal_letter(i), literal_letter(-i)])
        .collect();
    let choice = |offset: State| {
        (1..=n as i32).flat_map(move |i| {
            let from = offset + i as usize - 1;
            [
                (from, literal_letter(i), from + 1),
                (from, literal_letter(-i), from + 1),
            ]
        })
    };
    let a1 = Automaton::new(&alphabet, n + 1, [0], [n], choice(0)).expect("valid chain");
    let clause_steps = f
        .clauses
        .iter()
        .enumerate()
        .flat_map(|(j, clause)| clause.iter().map(move |&l| (j, literal_letter(l), j + 1)));
    let a2 = Automaton::new(
        &alphabet,
        k + n + 1,
        [0],
        [k + n],
        clause_steps.chain(choice(k)),
    )
    .expect("valid chain");
    (a1, a2)
}

/// Reads a valuation off a word of the first reduction automaton.
pub fn decode_valuation(num_vars: usize, u: &Word) -> Option<Vec<bool>> {
    let mut valuation = vec![None; num_vars];
    for letter in u.letters() {
        let token = letter.as_str();
        let (value, var) = match token.strip_prefix('~') {
            Some(rest) => (false, rest),
            None => (true, token),
        };
        let i: usize = var.strip_prefix('x')?.parse().ok()?;
        if i == 0 || i > num_vars || valuation[i - 1].replace(value).is_some() {
            return None;
        }
    }
    valuation.into_iter().collect()
}

/// Outcome of [`same_content_witness`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContentSearch {
    /// `u ∈ L(a1)`, `v ∈ L(a2)` with equal content.
    Found(Word, Word),
    /// No such pair exists at any length.
    NotFound,
    /// No pair among words up to the length bound, but longer words were
    /// left unexplored.
    LengthBoundReached,
}

/// Limit on explored `(state, content)` configurations per automaton.
pub const MAX_CONTENT_CONFIGURATIONS: usize = 1 << 22;

/// Exhaustive breadth-first search over `(state, content so far)`, keeping
/// the first (shortest, then lexicographically least) word per
/// configuration. Exponential in the alphabet size.
///
/// The pair returned is `u` minimal for `a1` among contents that `a2` can
/// match, and the least `v` of that content.
pub fn same_content_witness(
    a1: &Automaton,
    a2: &Automaton,
    len_bound: usize,
) -> Result<ContentSearch> {
    let (b1, b2) = align(a1, a2);
    let (found1, cut1) = accepted_contents(&b1, len_bound)?;
    let (found2, cut2) = accepted_contents(&b2, len_bound)?;
    let by_content: HashMap<&FixedBitSet, &Word> = found2.iter().map(|(c, w)| (c, w)).collect();
    for (content, u) in &found1 {
        if let Some(v) = by_content.get(content) {
            return Ok(ContentSearch::Found(u.clone(), (*v).clone()));
        }
    }
    Ok(if cut1 || cut2 {
        ContentSearch::LengthBoundReached
    } else {
        ContentSearch::NotFound
    })
}

/// Contents of accepted words with a least witness each, in discovery order,
/// and whether the length bound cut the search short.
fn accepted_contents(a: &Automaton, len_bound: usize) -> Result<(Vec<(FixedBitSet, Word)>, bool)> {
    let width = a.alphabet().len();
    let mut seen: HashSet<(State, FixedBitSet)> = HashSet::new();
    let mut queue: VecDeque<(State, FixedBitSet, Word)> = VecDeque::new();
    for &q in a.initial_states() {
        let config = (q, FixedBitSet::with_capacity(width));
        if seen.insert(config.clone()) {
            queue.push_back((config.0, config.1, Word::empty()));
        }
    }
    let mut accepted: Vec<(FixedBitSet, Word)> = Vec::new();
    let mut contents: HashSet<FixedBitSet> = HashSet::new();
    let mut cut = false;
    while let Some((q, content, word)) = queue.pop_front() {
        if a.is_final(q) && contents.insert(content.clone()) {
            accepted.push((content.clone(), word.clone()));
        }
        for e in a.out_edges(q) {
            let mut next = content.clone();
            next.insert(e.letter);
            let config = (e.dst, next);
            if seen.contains(&config) {
                continue;
            }
            if word.len() == len_bound {
                cut = true;
                continue;
            }
            if seen.len() >= MAX_CONTENT_CONFIGURATIONS {
                return Err(Error::BoundExceeded {
                    what: "same-content search configurations",
                    limit: MAX_CONTENT_CONFIGURATIONS,
                });
            }
            seen.insert(config.clone());
            let mut longer = word.clone();
            longer.push(a.letter(e.letter).clone());
            queue.push_back((config.0, config.1, longer));
        }
    }
    Ok((accepted, cut))
}
