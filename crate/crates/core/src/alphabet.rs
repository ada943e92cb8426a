//! Letters, alphabets and words.
//!
//! Letters are interned tokens (cheap to clone) ordered lexicographically, so
//! every alphabet has a canonical iteration order. Automata store letters as
//! indices into their sorted alphabet; [`AlphabetSet`] is the index-free view
//! used at API boundaries.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A single alphabet symbol: a nonempty token without whitespace, `:` or `#`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(Arc<str>);

impl Letter {
    pub fn new(token: &str) -> Result<Self> {
        let valid = !token.is_empty()
            && !token
                .chars()
                .any(|c| c.is_whitespace() || c == ':' || c == '#');
        if valid {
            Ok(Letter(Arc::from(token)))
        } else {
            Err(Error::InvalidLetter(token.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Letter::new(s)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

/// A finite set of letters with exact set semantics.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlphabetSet(BTreeSet<Letter>);

impl AlphabetSet {
    pub fn new() -> Self {
        AlphabetSet(BTreeSet::new())
    }

    /// Parses whitespace-separated tokens.
    pub fn parse(text: &str) -> Result<Self> {
        text.split_whitespace().map(Letter::new).collect()
    }

    pub fn insert(&mut self, letter: Letter) -> bool {
        self.0.insert(letter)
    }

    pub fn contains(&self, letter: &Letter) -> bool {
        self.0.contains(letter)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Letter> + '_ {
        self.0.iter()
    }

    pub fn union(&self, other: &AlphabetSet) -> AlphabetSet {
        AlphabetSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &AlphabetSet) -> AlphabetSet {
        AlphabetSet(self.0.intersection(&other.0).cloned().collect())
    }

    pub fn difference(&self, other: &AlphabetSet) -> AlphabetSet {
        AlphabetSet(self.0.difference(&other.0).cloned().collect())
    }

    pub fn is_subset(&self, other: &AlphabetSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// The letters in canonical (sorted) order.
    pub fn to_vec(&self) -> Vec<Letter> {
        self.0.iter().cloned().collect()
    }

    /// The canonical content-complete word: every letter once, in sorted order.
    pub fn canonical_word(&self) -> Word {
        Word(self.to_vec())
    }
}

impl FromIterator<Letter> for AlphabetSet {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        AlphabetSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a AlphabetSet {
    type Item = &'a Letter;
    type IntoIter = std::collections::btree_set::Iter<'a, Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for AlphabetSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, letter) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{letter}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for AlphabetSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A finite (possibly empty) sequence of letters.
///
/// Words compare lexicographically letter by letter, a proper prefix sorting
/// first.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses whitespace-separated tokens; `ε` or blank text is the empty word.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim() == "ε" {
            return Ok(Word::empty());
        }
        text.split_whitespace().map(Letter::new).collect()
    }

    /// One letter per character, e.g. `"abab"`.
    pub fn from_chars(text: &str) -> Result<Self> {
        text.chars()
            .map(|c| Letter::new(c.encode_utf8(&mut [0; 4])))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn first(&self) -> Option<&Letter> {
        self.0.first()
    }

    pub fn last(&self) -> Option<&Letter> {
        self.0.last()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        out.extend_from(other);
        out
    }

    pub fn repeat(&self, times: usize) -> Word {
        Word(
            std::iter::repeat_n(self.0.iter().cloned(), times)
                .flatten()
                .collect(),
        )
    }

    /// The set of letters occurring in the word.
    pub fn content(&self) -> AlphabetSet {
        self.0.iter().cloned().collect()
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for (i, letter) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}
