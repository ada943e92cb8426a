//! Scattered subwords, `∼n` classes and the brute-force separability oracle.
//!
//! `Sub_n(u)` is the set of scattered subwords of `u` of length at most `n`,
//! and `u ∼n v` iff `Sub_n(u) = Sub_n(v)`. A language is piecewise testable
//! iff it is a union of `∼n` classes for some `n`, so two languages are
//! separated at level `n` exactly when no `∼n` class meets both of them.
//!
//! Profiles are computed with the incremental rule
//! `Sub_n(ua) = Sub_n(u) ∪ { xa : x ∈ Sub_n(u), |xa| ≤ n }`.
//! Internally a profile is a bitset over all words of length `≤ n` on a
//! fixed sorted alphabet, indexed by length first and then by base-`k` rank;
//! the level-`m` profile is therefore a prefix of the level-`n` bitset.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::alphabet::{AlphabetSet, Letter, Word};
use crate::automaton::{align, Automaton, State};
use crate::error::{Error, Result};

pub mod forest;
pub mod pattern;

/// The set `Sub_n(w)`, stored as a canonically sorted word set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubwordProfile {
    n: usize,
    subwords: BTreeSet<Word>,
}

impl SubwordProfile {
    pub fn level(&self) -> usize {
        self.n
    }

    pub fn subwords(&self) -> &BTreeSet<Word> {
        &self.subwords
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.subwords.contains(word)
    }

    pub fn len(&self) -> usize {
        self.subwords.len()
    }

    /// Never true: every profile contains ε.
    pub fn is_empty(&self) -> bool {
        self.subwords.is_empty()
    }
}

impl fmt::Debug for SubwordProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sub_{}{{", self.n)?;
        for (i, w) in self.subwords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

/// Dense index of all words of length `≤ n` over a sorted alphabet.
#[derive(Clone, Debug)]
pub(crate) struct ProfileSpace {
    letters: Vec<Letter>,
    n: usize,
    // offsets[l] = index of the first word of length l; offsets[n + 1] = size
    offsets: Vec<usize>,
}

impl ProfileSpace {
    pub(crate) fn new(letters: Vec<Letter>, n: usize, max_size: usize) -> Result<Self> {
        let k = letters.len();
        let mut offsets = Vec::with_capacity(n + 2);
        let mut total = 0usize;
        let mut layer = 1usize;
        for _ in 0..=n {
            offsets.push(total);
            total = total.checked_add(layer).filter(|&t| t <= max_size).ok_or(
                Error::BoundExceeded {
                    what: "subword universe size",
                    limit: max_size,
                },
            )?;
            layer = layer.saturating_mul(k);
        }
        offsets.push(total);
        Ok(ProfileSpace {
            letters,
            n,
            offsets,
        })
    }

    pub(crate) fn size(&self) -> usize {
        self.offsets[self.n + 1]
    }

    /// The profile of ε.
    pub(crate) fn epsilon(&self) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.size());
        bits.insert(0);
        bits
    }

    /// Applies the incremental rule for appending letter `letter`.
    pub(crate) fn step(&self, bits: &mut FixedBitSet, letter: usize) {
        let k = self.letters.len();
        // Longest lengths first so that words added in this step are not
        // extended again.
        for len in (0..self.n).rev() {
            let (lo, hi) = (self.offsets[len], self.offsets[len + 1]);
            let next = self.offsets[len + 1];
            let mut set = Vec::new();
            for idx in bits.ones().skip_while(|&i| i < lo).take_while(|&i| i < hi) {
                set.push(next + (idx - lo) * k + letter);
            }
            for idx in set {
                bits.insert(idx);
            }
        }
    }

    fn decode_index(&self, idx: usize) -> Word {
        let len = self.offsets.partition_point(|&o| o <= idx) - 1;
        let mut rank = idx - self.offsets[len];
        let k = self.letters.len();
        let mut letters = Vec::with_capacity(len);
        for _ in 0..len {
            letters.push(self.letters[rank % k].clone());
            rank /= k;
        }
        letters.reverse();
        Word::from(letters)
    }

    pub(crate) fn decode(&self, bits: &FixedBitSet, level: usize) -> SubwordProfile {
        let limit = self.offsets[level + 1];
        SubwordProfile {
            n: level,
            subwords: bits
                .ones()
                .take_while(|&i| i < limit)
                .map(|i| self.decode_index(i))
                .collect(),
        }
    }

    /// The level-`level` profile as a bitset prefix.
    pub(crate) fn truncate(&self, bits: &FixedBitSet, level: usize) -> FixedBitSet {
        let limit = self.offsets[level + 1];
        let mut out = FixedBitSet::with_capacity(limit);
        for i in bits.ones().take_while(|&i| i < limit) {
            out.insert(i);
        }
        out
    }
}

/// Above this many indexed words, [`subword_profile`] falls back to
/// explicit word sets.
const DENSE_PROFILE_LIMIT: usize = 1 << 16;

/// `Sub_n(w)`.
pub fn subword_profile(w: &Word, n: usize) -> SubwordProfile {
    let letters = w.content().to_vec();
    if letters.is_empty() {
        return SubwordProfile {
            n,
            subwords: BTreeSet::from([Word::empty()]),
        };
    }
    match ProfileSpace::new(letters.clone(), n, DENSE_PROFILE_LIMIT) {
        Ok(space) => {
            let mut bits = space.epsilon();
            for letter in w.letters() {
                let id = letters.binary_search(letter).expect("letter from content");
                space.step(&mut bits, id);
            }
            space.decode(&bits, n)
        }
        Err(_) => sparse_profile(w, n),
    }
}

fn sparse_profile(w: &Word, n: usize) -> SubwordProfile {
    let mut subwords = BTreeSet::from([Word::empty()]);
    for letter in w.letters() {
        let extended: Vec<Word> = subwords
            .iter()
            .filter(|x| x.len() < n)
            .map(|x| {
                let mut y = x.clone();
                y.push(letter.clone());
                y
            })
            .collect();
        subwords.extend(extended);
    }
    SubwordProfile { n, subwords }
}

/// Resource limits for the exhaustive profile enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Maximum number of words of length `≤ n` over the alphabet.
    pub max_universe: usize,
    /// Maximum number of explored `(state, profile)` configurations.
    pub max_configurations: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_universe: 1 << 16,
            max_configurations: 1 << 21,
        }
    }
}

/// The `∼n` classes meeting `L(a)`, as dense profiles over a fixed alphabet.
#[derive(Clone, Debug)]
pub struct ProfileClasses {
    space: ProfileSpace,
    classes: HashSet<FixedBitSet>,
}

impl ProfileClasses {
    /// Explores `(state, Sub_n(w))` for all words `w` labelling a path from an
    /// initial state; the classes are the profiles reached at final states.
    ///
    /// `alphabet` fixes the profile indexing and must contain the automaton's
    /// alphabet, so that classes of different automata built over the same
    /// alphabet are comparable.
    pub fn compute(
        a: &Automaton,
        alphabet: &AlphabetSet,
        n: usize,
        limits: &OracleLimits,
    ) -> Result<Self> {
        let universe = alphabet.union(&a.alphabet_set()).to_vec();
        assert_eq!(
            universe.len(),
            alphabet.len(),
            "profile alphabet must contain the automaton alphabet"
        );
        let a = a.with_alphabet(&universe);
        let space = ProfileSpace::new(universe, n, limits.max_universe)?;

        let mut seen: HashSet<(State, FixedBitSet)> = HashSet::new();
        let mut queue: VecDeque<(State, FixedBitSet)> = VecDeque::new();
        let mut classes = HashSet::new();
        for &q in a.initial_states() {
            let start = (q, space.epsilon());
            if seen.insert(start.clone()) {
                queue.push_back(start);
            }
        }
        while let Some((q, profile)) = queue.pop_front() {
            if a.is_final(q) {
                classes.insert(profile.clone());
            }
            for e in a.out_edges(q) {
                let mut next = profile.clone();
                space.step(&mut next, e.letter);
                let config = (e.dst, next);
                if !seen.contains(&config) {
                    if seen.len() >= limits.max_configurations {
                        return Err(Error::BoundExceeded {
                            what: "oracle configurations",
                            limit: limits.max_configurations,
                        });
                    }
                    seen.insert(config.clone());
                    queue.push_back(config);
                }
            }
        }
        Ok(ProfileClasses { space, classes })
    }

    pub fn level(&self) -> usize {
        self.space.n
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// The classes at a lower level, obtained by truncating every profile.
    pub fn truncate(&self, level: usize) -> ProfileClasses {
        assert!(level <= self.space.n);
        let mut space = self.space.clone();
        space.n = level;
        space.offsets.truncate(level + 2);
        ProfileClasses {
            classes: self
                .classes
                .iter()
                .map(|bits| self.space.truncate(bits, level))
                .collect(),
            space,
        }
    }

    /// Whether some class meets both languages.
    pub fn meets(&self, other: &ProfileClasses) -> bool {
        assert_eq!(self.space.letters, other.space.letters, "alphabets differ");
        assert_eq!(self.space.n, other.space.n, "levels differ");
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.classes.iter().any(|c| large.classes.contains(c))
    }

    /// The smallest level `m ≤` both levels at which no class is shared.
    pub fn first_separating_level(&self, other: &ProfileClasses) -> Option<usize> {
        let top = self.level().min(other.level());
        (0..=top).find(|&m| !self.truncate(m).meets(&other.truncate(m)))
    }

    /// The classes as explicit profiles, canonically sorted.
    pub fn profiles(&self) -> BTreeSet<SubwordProfile> {
        self.classes
            .iter()
            .map(|bits| self.space.decode(bits, self.space.n))
            .collect()
    }
}

/// `{ Sub_n(w) : w ∈ L(a) }` under default [`OracleLimits`].
pub fn profile_set(a: &Automaton, n: usize) -> Result<BTreeSet<SubwordProfile>> {
    profile_set_with(a, n, &OracleLimits::default())
}

pub fn profile_set_with(
    a: &Automaton,
    n: usize,
    limits: &OracleLimits,
) -> Result<BTreeSet<SubwordProfile>> {
    if a.alphabet().is_empty() {
        // Only ε can be accepted; the dense space needs at least one letter.
        return Ok(if a.accepts(&Word::empty())? {
            BTreeSet::from([subword_profile(&Word::empty(), n)])
        } else {
            BTreeSet::new()
        });
    }
    Ok(ProfileClasses::compute(a, &a.alphabet_set(), n, limits)?.profiles())
}

/// Outcome of the bounded brute-force separability check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    /// No `∼n` class meets both languages at this (smallest) level.
    SeparableAt(usize),
    /// For every level up to the bound some class meets both languages.
    CommonClassUpTo(usize),
}

impl fmt::Display for OracleVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleVerdict::SeparableAt(n) => write!(f, "SEPARABLE at n={n}"),
            OracleVerdict::CommonClassUpTo(n) => write!(f, "COMMON_CLASS up to n={n}"),
        }
    }
}

pub fn oracle_pt_separable(a1: &Automaton, a2: &Automaton, n_max: usize) -> Result<OracleVerdict> {
    oracle_pt_separable_with(a1, a2, n_max, &OracleLimits::default())
}

/// Checks levels `0..=n_max` in order and reports the first one at which the
/// class sets of the two languages are disjoint.
pub fn oracle_pt_separable_with(
    a1: &Automaton,
    a2: &Automaton,
    n_max: usize,
    limits: &OracleLimits,
) -> Result<OracleVerdict> {
    let (a1, a2) = align(a1, a2);
    if a1.is_empty() || a2.is_empty() {
        return Ok(OracleVerdict::SeparableAt(0));
    }
    if a1.alphabet().is_empty() {
        // Both languages are {ε}.
        return Ok(OracleVerdict::CommonClassUpTo(n_max));
    }
    let alphabet = a1.alphabet_set();
    for n in 0..=n_max {
        let c1 = ProfileClasses::compute(&a1, &alphabet, n, limits)?;
        let c2 = ProfileClasses::compute(&a2, &alphabet, n, limits)?;
        if !c1.meets(&c2) {
            return Ok(OracleVerdict::SeparableAt(n));
        }
    }
    Ok(OracleVerdict::CommonClassUpTo(n_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_automaton;

    fn w(s: &str) -> Word {
        Word::from_chars(s).unwrap()
    }

    fn words(list: &[&str]) -> BTreeSet<Word> {
        list.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn small_profiles() {
        assert_eq!(
            subword_profile(&w("ab"), 1).subwords(),
            &words(&["", "a", "b"])
        );
        assert_eq!(
            subword_profile(&w("abab"), 2).subwords(),
            &words(&["", "a", "b", "aa", "ab", "ba", "bb"])
        );
        assert_eq!(subword_profile(&Word::empty(), 3).subwords(), &words(&[""]));
        assert_eq!(subword_profile(&w("abc"), 0).subwords(), &words(&[""]));
    }

    #[test]
    fn dense_and_sparse_profiles_agree() {
        for text in ["", "a", "abcab", "bbbaaac", "abcdabcd"] {
            for n in 0..5 {
                assert_eq!(subword_profile(&w(text), n), sparse_profile(&w(text), n));
            }
        }
    }

    const A_STAR: &str = "alphabet: a\nstates: 1\ninitial: 0\nfinal: 0\ntrans: 0 a 0";
    const AB_PLUS: &str =
        "alphabet: a b\nstates: 3\ninitial: 0\nfinal: 2\ntrans: 0 a 1\ntrans: 1 b 2\ntrans: 2 a 1";
    const BA_PLUS: &str =
        "alphabet: a b\nstates: 3\ninitial: 0\nfinal: 2\ntrans: 0 b 1\ntrans: 1 a 2\ntrans: 2 b 1";
    const B_PLUS: &str = "alphabet: b\nstates: 2\ninitial: 0\nfinal: 1\ntrans: 0 b 1\ntrans: 1 b 1";

    #[test]
    fn profile_set_of_epsilon_language() {
        let a = parse_automaton("alphabet: a\nstates: 1\ninitial: 0\nfinal: 0").unwrap();
        assert_eq!(
            profile_set(&a, 2).unwrap(),
            BTreeSet::from([subword_profile(&Word::empty(), 2)])
        );
    }

    #[test]
    fn profile_set_of_a_star() {
        let a = parse_automaton(A_STAR).unwrap();
        let expected = BTreeSet::from([
            subword_profile(&Word::empty(), 1),
            subword_profile(&w("a"), 1),
        ]);
        assert_eq!(profile_set(&a, 1).unwrap(), expected);
    }

    #[test]
    fn profile_set_of_ab_plus_contains_full_profile() {
        let a = parse_automaton(AB_PLUS).unwrap();
        let full = subword_profile(&w("abab"), 2);
        assert_eq!(full.len(), 7);
        assert!(profile_set(&a, 2).unwrap().contains(&full));
    }

    #[test]
    fn oracle_verdicts() {
        let a_star = parse_automaton(A_STAR).unwrap();
        let b_plus = parse_automaton(B_PLUS).unwrap();
        assert_eq!(
            oracle_pt_separable(&a_star, &b_plus, 4).unwrap(),
            OracleVerdict::SeparableAt(1)
        );
        let ab = parse_automaton(AB_PLUS).unwrap();
        let ba = parse_automaton(BA_PLUS).unwrap();
        assert_eq!(
            oracle_pt_separable(&ab, &ba, 4).unwrap(),
            OracleVerdict::CommonClassUpTo(4)
        );
        let empty = Automaton::empty(&ab.alphabet_set());
        assert_eq!(
            oracle_pt_separable(&empty, &ab, 4).unwrap(),
            OracleVerdict::SeparableAt(0)
        );
    }

    #[test]
    fn truncation_matches_direct_computation() {
        let ab = parse_automaton(AB_PLUS).unwrap();
        let alphabet = ab.alphabet_set();
        let limits = OracleLimits::default();
        let top = ProfileClasses::compute(&ab, &alphabet, 4, &limits).unwrap();
        for m in 0..=4 {
            let direct = ProfileClasses::compute(&ab, &alphabet, m, &limits).unwrap();
            assert_eq!(top.truncate(m).profiles(), direct.profiles());
        }
    }

    #[test]
    fn bounds_are_reported() {
        let ab = parse_automaton(AB_PLUS).unwrap();
        let tight = OracleLimits {
            max_universe: 10,
            max_configurations: 1 << 20,
        };
        assert!(matches!(
            profile_set_with(&ab, 5, &tight),
            Err(Error::BoundExceeded { .. })
        ));
        let few = OracleLimits {
            max_universe: 1 << 16,
            max_configurations: 3,
        };
        assert!(matches!(
            profile_set_with(&ab, 5, &few),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
