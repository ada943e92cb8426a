//! Deciding whether two regular languages, given as finite automata, can be
//! separated by a piecewise testable language or by a prefix-testable one.
//!
//! ```
//! use ptsep::{parse_automaton, pt_separable};
//!
//! let ab = parse_automaton(
//!     "alphabet: a b\nstates: 3\ninitial: 0\nfinal: 2\ntrans: 0 a 1\ntrans: 1 b 2\ntrans: 2 a 1",
//! )?;
//! let ba = parse_automaton(
//!     "alphabet: a b\nstates: 3\ninitial: 0\nfinal: 2\ntrans: 0 b 1\ntrans: 1 a 2\ntrans: 2 b 1",
//! )?;
//! // (ab)+ and (ba)+ share every subword class.
//! assert!(!pt_separable(&ab, &ba));
//! # Ok::<(), ptsep::Error>(())
//! ```
//!
//! The main decision procedures never determinize; the brute-force oracle in
//! [`subword`] and [`hardness::same_content_witness`] are exponential and
//! meant for small inputs.

pub mod alphabet;
pub mod automaton;
pub mod cli;
pub mod error;
pub mod format;
pub mod hardness;
pub mod prefix;
pub mod pt;
pub mod scc;
pub mod subword;

pub use alphabet::{AlphabetSet, Letter, Word};
pub use automaton::{product, product_with_pairs, shortest_common_word, Automaton, State};
pub use error::{Error, Result};
pub use format::{parse_automaton, serialize};
pub use hardness::{parse_dimacs, same_content_witness, sat_reduction, Cnf3, ContentSearch};
pub use prefix::{buchi_product_nonempty, closure_buchi, prefix_separable, BuchiAutomaton};
pub use pt::{
    build_extended, common_pattern, enumerate_pattern_tuples, extract_pattern,
    is_piecewise_testable, loop_fixpoint, max_common_loop_alphabet, pt_separable,
    pt_separable_via_extended, ExtendedAutomaton, LoopFixpoint, LoopQuery, PatternTuple,
};
pub use scc::{scc_content, tarjan_scc, SccDecomposition};
pub use subword::forest::{ramsey_factorization, FactorizationTree};
pub use subword::pattern::{
    has_pattern_path, is_proper, normalize, pattern_witness, realize_pattern, FactorizationPattern,
};
pub use subword::{
    oracle_pt_separable, profile_set, subword_profile, OracleVerdict, ProfileClasses,
    SubwordProfile,
};
