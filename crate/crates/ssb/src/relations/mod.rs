//! The three relation families of `SSB_n`, single-step rewriting,
//! derivation scripts, bounded equality search, generator translation
//! and the closed-braid moves.
//!
//! Relation families:
//!
//! * `A` — the defining family (A1)-(A11) over the generators
//!   `a_i, b_i, c_i, c_i^{-1}`, with schematic letters `x_i, y_j`
//!   ranging over all four kinds.
//! * `R` — the expanded family (R1)-(R16) with a reduced number of
//!   defining relations.
//! * `m` — the family (m1)-(m16) over the reduced generating set
//!   `{a, b, c_i, c_i^{-1}}`, where `a = a_1` and `b = b_1`.
//! * `C` — the closed-braid moves (C1), (C2); these act on closed words
//!   and are applied by [`apply_closed_move`], not instantiated as word
//!   pairs.

mod chains;
mod closed;
mod rewrite;
mod schema;
mod script;
mod search;
mod translate;

pub use chains::{defining_expansion_script, reduced_relation_chains, two_vertex_induction_chains};
pub use closed::{apply_closed_move, ClosedMove};
pub use rewrite::{apply_rewrite, Direction};
pub use schema::{all_instances, instantiate, RelationInstance};
pub use script::{check_derivation, DerivationScript, Step, Verdict};
pub use search::{bounded_equal, bounded_equal_with, SearchLimits, SearchResult};
pub use translate::translate_to_reduced;

use crate::braidword::WordError;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// The relation family a relation id belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    R,
    M,
    C,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'a',
            Family::R => 'r',
            Family::M => 'm',
            Family::C => 'c',
        }
    }
}

/// Which equation of a two-sided identity an instance refers to.
/// `Std` is `c_i c_i^{-1} = 1`; `Sym` is `c_i^{-1} c_i = 1`. For all
/// other relations only `Std` exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Variant {
    #[default]
    Std,
    Sym,
}

/// Identifier of a relation schema, e.g. `r14` or `m6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelationId {
    pub family: Family,
    pub number: u8,
    pub variant: Variant,
}

impl RelationId {
    pub fn new(family: Family, number: u8) -> Self {
        RelationId { family, number, variant: Variant::Std }
    }

    pub fn sym(family: Family, number: u8) -> Self {
        RelationId { family, number, variant: Variant::Sym }
    }

    /// Parses ids like `m14`, `r1`, `a11`, `r1'` (trailing `'` selects
    /// the symmetric equation of a two-sided identity).
    pub fn parse(text: &str) -> Result<Self, RelError> {
        let text = text.trim();
        let mut chars = text.chars();
        let fam = match chars.next() {
            Some('a') | Some('A') => Family::A,
            Some('r') | Some('R') => Family::R,
            Some('m') => Family::M,
            Some('c') => Family::C,
            _ => return Err(RelError::UnknownRelation(text.into())),
        };
        let rest: String = chars.collect();
        let (digits, variant) = match rest.strip_suffix('\'') {
            Some(d) => (d, Variant::Sym),
            None => (rest.as_str(), Variant::Std),
        };
        let number: u8 = digits
            .parse()
            .map_err(|_| RelError::UnknownRelation(text.into()))?;
        let id = RelationId { family: fam, number, variant };
        schema::schema_exists(id)?;
        Ok(id)
    }
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.number)?;
        if self.variant == Variant::Sym {
            write!(f, "'")?;
        }
        Ok(())
    }
}

/// Mapping of schematic index names (`i`, `j`, `k`) to concrete strand
/// positions.
pub type IndexMap = BTreeMap<char, usize>;

/// Mapping of schematic letter names (`x`, `y`) to concrete kinds.
pub type KindMap = BTreeMap<char, crate::braidword::Kind>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelError {
    #[error("unknown relation `{0}`")]
    UnknownRelation(String),
    #[error("{id}: side condition violated: {detail}")]
    SideCondition { id: String, detail: String },
    #[error("{id}: missing index `{name}`")]
    MissingIndex { id: String, name: char },
    #[error("{id}: missing schematic kind `{name}`")]
    MissingKind { id: String, name: char },
    #[error("{id}: letter index out of range for {n} strands")]
    IndexOutOfRange { id: String, n: usize },
    #[error("no match for {id} ({side}) at position {pos} in `{word}`")]
    NoMatch { id: String, side: String, pos: usize, word: String },
    #[error("words live on different strand counts ({0} vs {1})")]
    StrandMismatch(usize, usize),
    #[error("closed move precondition failed: {0}")]
    ClosedMove(String),
    #[error("malformed script: {0}")]
    BadScript(String),
    #[error(transparent)]
    Word(#[from] WordError),
}
