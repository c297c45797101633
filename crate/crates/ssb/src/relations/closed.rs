//! The closed-braid moves (C1) and (C2).
//!
//! Both moves are purely syntactic here. Whether a closed word is
//! admissible (its positive and negative smoothings are trivial links)
//! is not decided by this crate; callers attest admissibility
//! themselves, and the diagram invariants are reported as formal values
//! for arbitrary words.

use super::RelError;
use crate::braidword::{ClosedWord, Kind, Letter, Word};

/// A move on closed words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedMove {
    /// (C1): `[x S]_n = [S x]_n` — cyclic shift by one letter.
    CyclicShift,
    /// (C2), upward: `[S]_n = [S x_n]_{n+1}` — append a letter of the
    /// given kind on the new last strand pair.
    StabilizeUp(Kind),
    /// (C2), downward: remove a trailing `x_n` that is the only letter
    /// of index `n`, dropping a strand.
    StabilizeDown,
}

pub fn apply_closed_move(cw: &ClosedWord, mv: ClosedMove) -> Result<ClosedWord, RelError> {
    let word = cw.word();
    let n = cw.closure_strands();
    match mv {
        ClosedMove::CyclicShift => {
            if word.is_empty() {
                return Ok(cw.clone());
            }
            let mut letters: Vec<Letter> = word.letters().to_vec();
            let first = letters.remove(0);
            letters.push(first);
            Ok(ClosedWord::new(Word::new(n, letters)?))
        }
        ClosedMove::StabilizeUp(kind) => {
            let mut letters: Vec<Letter> = word.letters().to_vec();
            letters.push(Letter::new(kind, n));
            Ok(ClosedWord::new(Word::new(n + 1, letters)?))
        }
        ClosedMove::StabilizeDown => {
            if n < 2 {
                return Err(RelError::ClosedMove(
                    "cannot drop a strand from a closure on fewer than 2 strands".into(),
                ));
            }
            let stab = n - 1;
            let letters = word.letters();
            match letters.last() {
                Some(last) if last.index == stab => {}
                _ => {
                    return Err(RelError::ClosedMove(format!(
                        "last letter must have index {stab}"
                    )))
                }
            }
            if letters[..letters.len() - 1].iter().any(|l| l.index == stab) {
                return Err(RelError::ClosedMove(format!(
                    "another letter of index {stab} occurs before the trailing one"
                )));
            }
            let trimmed = letters[..letters.len() - 1].to_vec();
            Ok(ClosedWord::new(Word::new(stab, trimmed)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braidword::parse_closed;

    #[test]
    fn cyclic_shift() {
        let cw = parse_closed("[ a1 b1 ]_2").unwrap();
        let out = apply_closed_move(&cw, ClosedMove::CyclicShift).unwrap();
        assert_eq!(out, parse_closed("[ b1 a1 ]_2").unwrap());
    }

    #[test]
    fn stabilize_up() {
        let cw = parse_closed("[ c1 ]_2").unwrap();
        let out = apply_closed_move(&cw, ClosedMove::StabilizeUp(Kind::C)).unwrap();
        assert_eq!(out, parse_closed("[ c1 c2 ]_3").unwrap());
    }

    #[test]
    fn stabilize_down_requires_trailing_letter() {
        let cw = parse_closed("[ a1 c1 ]_2").unwrap();
        let err = apply_closed_move(&cw, ClosedMove::StabilizeDown).unwrap_err();
        assert!(matches!(err, RelError::ClosedMove(_)));
    }

    #[test]
    fn stabilize_round_trip() {
        let cw = parse_closed("[ a1 b1 ]_2").unwrap();
        let up = apply_closed_move(&cw, ClosedMove::StabilizeUp(Kind::A)).unwrap();
        assert_eq!(up, parse_closed("[ a1 b1 a2 ]_3").unwrap());
        let down = apply_closed_move(&up, ClosedMove::StabilizeDown).unwrap();
        assert_eq!(down, cw);
    }

    #[test]
    fn stabilize_down_rejects_interior_index() {
        let cw = parse_closed("[ c2 a1 c2 ]_3").unwrap();
        let err = apply_closed_move(&cw, ClosedMove::StabilizeDown).unwrap_err();
        assert!(matches!(err, RelError::ClosedMove(_)));
    }
}
