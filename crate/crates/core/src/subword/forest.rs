//! Ramseyan factorization trees for the content morphism `w ↦ content(w)`
//! into the semilattice of alphabets under union.
//!
//! Every alphabet is idempotent under union, so a node may have three or more
//! children exactly when all of them have the same content.

use std::fmt;

use crate::alphabet::{AlphabetSet, Letter, Word};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct FactorizationTree {
    label: Word,
    children: Vec<FactorizationTree>,
}

impl FactorizationTree {
    fn leaf(label: Word) -> Self {
        FactorizationTree {
            label,
            children: Vec::new(),
        }
    }

    fn node(children: Vec<FactorizationTree>) -> Self {
        let mut label = Word::empty();
        for child in &children {
            label.extend_from(&child.label);
        }
        FactorizationTree { label, children }
    }

    pub fn label(&self) -> &Word {
        &self.label
    }

    pub fn children(&self) -> &[FactorizationTree] {
        &self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Edges on the longest root-to-leaf path; a leaf has height 0.
    pub fn height(&self) -> usize {
        self.children
            .iter()
            .map(|c| c.height() + 1)
            .max()
            .unwrap_or(0)
    }

    /// Checks the structural invariants, reporting the first violation.
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.is_leaf() {
            if self.label.len() != 1 {
                return Err(format!("leaf {} is not a single letter", self.label));
            }
            return Ok(());
        }
        if self.children.len() < 2 {
            return Err(format!("node {} has a single child", self.label));
        }
        let mut concat = Word::empty();
        for child in &self.children {
            concat.extend_from(&child.label);
        }
        if concat != self.label {
            return Err(format!(
                "node {} is not the concatenation of its children ({concat})",
                self.label
            ));
        }
        if self.children.len() >= 3 {
            let first = self.children[0].label.content();
            if let Some(odd) = self.children.iter().find(|c| c.label.content() != first) {
                return Err(format!(
                    "wide node {}: child {} has content {} instead of {first}",
                    self.label,
                    odd.label,
                    odd.label.content()
                ));
            }
        }
        self.children
            .iter()
            .try_for_each(FactorizationTree::validate)
    }
}

/// Indented outline, one node per line; wide nodes are tagged with their
/// common content.
impl fmt::Display for FactorizationTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn walk(t: &FactorizationTree, depth: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{:indent$}{}", "", t.label, indent = 2 * depth)?;
            if t.children.len() >= 3 {
                write!(f, "  [idempotent {}]", t.children[0].label.content())?;
            }
            writeln!(f)?;
            t.children.iter().try_for_each(|c| walk(c, depth + 1, f))
        }
        walk(self, 0, f)
    }
}

impl fmt::Debug for FactorizationTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A Ramseyan factorization tree of `w` of height at most
/// `3·|content(w)| − 2`, hence within `3·2^|content(w)|`.
///
/// `w` is cut greedily into shortest prefixes of full content followed by a
/// remainder of smaller content. Each block `v'a` has `content(v')` smaller
/// than the full content, so the recursion descends one alphabet size for at
/// most three levels of tree.
pub fn ramsey_factorization(w: &Word) -> Result<FactorizationTree> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(build(w.letters()))
}

fn build(w: &[Letter]) -> FactorizationTree {
    if w.len() == 1 {
        return FactorizationTree::leaf(Word::from(w.to_vec()));
    }
    let full: AlphabetSet = w.iter().cloned().collect();

    let mut blocks = Vec::new();
    let mut start = 0;
    let mut seen = AlphabetSet::new();
    for (i, letter) in w.iter().enumerate() {
        seen.insert(letter.clone());
        if seen.len() == full.len() {
            blocks.push(block(&w[start..=i]));
            start = i + 1;
            seen = AlphabetSet::new();
        }
    }

    let mut body = if blocks.len() == 1 {
        blocks.pop().expect("one block")
    } else {
        FactorizationTree::node(blocks)
    };
    if start < w.len() {
        body = FactorizationTree::node(vec![body, build(&w[start..])]);
    }
    body
}

/// A shortest full-content factor `v'a`: `a` occurs only at the end.
fn block(v: &[Letter]) -> FactorizationTree {
    let (last, rest) = v.split_last().expect("nonempty block");
    let leaf = FactorizationTree::leaf(Word::from(vec![last.clone()]));
    if rest.is_empty() {
        leaf
    } else {
        FactorizationTree::node(vec![build(rest), leaf])
    }
}
