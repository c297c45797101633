//! Single-step congruence rewriting.

use super::{RelError, RelationInstance};
use crate::braidword::Word;
use serde::{Deserialize, Serialize};

/// Direction of a rewrite step: `Forward` replaces the left side of the
/// relation by the right side, `Backward` the converse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "fwd")]
    Forward,
    #[serde(rename = "bwd")]
    Backward,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

/// Replaces one occurrence of a relation side by the other side.
///
/// The matched side must occur as a contiguous factor starting at
/// `pos` (0-based letter offset). Identity insertions (relations whose
/// matched side is the empty word) match at every position `0..=len`.
pub fn apply_rewrite(
    w: &Word,
    r: &RelationInstance,
    pos: usize,
    dir: Direction,
) -> Result<Word, RelError> {
    if w.strands() != r.lhs.strands() {
        return Err(RelError::StrandMismatch(w.strands(), r.lhs.strands()));
    }
    let (from, to) = match dir {
        Direction::Forward => (&r.lhs, &r.rhs),
        Direction::Backward => (&r.rhs, &r.lhs),
    };
    if pos > w.len() || !w.matches_at(pos, from.letters()) {
        return Err(RelError::NoMatch {
            id: r.id.to_string(),
            side: from.to_string(),
            pos,
            word: w.to_string(),
        });
    }
    Ok(w.splice(pos, from.len(), to.letters())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braidword::parse_word;
    use crate::relations::{instantiate, Family, IndexMap, KindMap, RelationId};

    fn m(number: u8) -> RelationInstance {
        instantiate(
            RelationId::new(Family::M, number),
            &IndexMap::new(),
            &KindMap::new(),
            2,
        )
        .unwrap()
    }

    fn m_i(number: u8, i: usize) -> RelationInstance {
        let mut ix = IndexMap::new();
        ix.insert('i', i);
        instantiate(RelationId::new(Family::M, number), &ix, &KindMap::new(), 2).unwrap()
    }

    #[test]
    fn idempotent_contraction() {
        let w = parse_word("a1 a1 b1", 2).unwrap();
        let out = apply_rewrite(&w, &m(12), 0, Direction::Forward).unwrap();
        assert_eq!(out, parse_word("a1 b1", 2).unwrap());
    }

    #[test]
    fn identity_insertion() {
        let w = parse_word("a1 b1", 2).unwrap();
        let out = apply_rewrite(&w, &m_i(1, 1), 1, Direction::Backward).unwrap();
        assert_eq!(out, parse_word("a1 c1 C1 b1", 2).unwrap());
        // insertion is valid at any position 0..=len
        let at_end = apply_rewrite(&w, &m_i(1, 1), 2, Direction::Backward).unwrap();
        assert_eq!(at_end, parse_word("a1 b1 c1 C1", 2).unwrap());
    }

    #[test]
    fn no_match_reported() {
        let w = parse_word("b1 a1", 2).unwrap();
        let err = apply_rewrite(&w, &m(12), 0, Direction::Forward).unwrap_err();
        assert!(matches!(err, RelError::NoMatch { pos: 0, .. }));
    }
}
