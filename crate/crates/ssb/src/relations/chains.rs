//! Built-in replayable derivation chains.
//!
//! These scripts replay the derivations that establish the expanded
//! relation family from itself at lower indices and the reduced
//! two-vertex presentation: the three chains deriving (R10), (R15),
//! (R16)-type identities among per-index generators, and the six
//! inductive chains deriving (R10)-(R16) at level `i` from level
//! `i - 1` over the reduced generating set.
//!
//! Every chain is assembled step by step against the rewriting engine,
//! so a transcription error cannot silently produce an invalid script:
//! assembly fails instead.

use super::rewrite::{apply_rewrite, Direction};
use super::schema::{instantiate, RelationInstance};
use super::script::{DerivationScript, Step};
use super::search::{bounded_equal_with, SearchLimits, SearchResult};
use super::translate::translate_to_reduced;
use super::{Family, IndexMap, KindMap, RelError, RelationId, Variant};
use crate::braidword::{Kind, Letter, Word};
use crate::util::ExecMode;

use Direction::{Backward, Forward};

/// Incrementally builds a derivation, verifying each step as it is
/// appended.
struct ChainBuilder {
    n: usize,
    start: Word,
    word: Word,
    steps: Vec<Step>,
}

impl ChainBuilder {
    fn new(start: Word) -> Self {
        ChainBuilder { n: start.strands(), start: start.clone(), word: start, steps: Vec::new() }
    }

    fn rel(&self, family: Family, number: u8, variant: Variant, ix: &[(char, usize)], xy: &[(char, Kind)]) -> Result<RelationInstance, RelError> {
        let id = RelationId { family, number, variant };
        let mut indices = IndexMap::new();
        for (name, v) in ix {
            indices.insert(*name, *v);
        }
        let mut kinds = KindMap::new();
        for (name, k) in xy {
            kinds.insert(*name, *k);
        }
        instantiate(id, &indices, &kinds, self.n)
    }

    fn push(&mut self, rel: RelationInstance, pos: usize, dir: Direction) -> Result<&mut Self, RelError> {
        self.word = apply_rewrite(&self.word, &rel, pos, dir)?;
        self.steps.push(Step { rel, pos, dir });
        Ok(self)
    }

    /// Applies an `R`-family relation indexed by `i`.
    fn r(&mut self, number: u8, i: usize, pos: usize, dir: Direction) -> Result<&mut Self, RelError> {
        let rel = self.rel(Family::R, number, Variant::Std, &[('i', i)], &[])?;
        self.push(rel, pos, dir)
    }

    /// Applies an `m`-family relation without indices.
    fn m(&mut self, number: u8, pos: usize, dir: Direction) -> Result<&mut Self, RelError> {
        let rel = self.rel(Family::M, number, Variant::Std, &[], &[])?;
        self.push(rel, pos, dir)
    }

    /// R2 commutation `x_i y_j = y_j x_i` (`|i-j| > 1`).
    fn r2(&mut self, x: (Kind, usize), y: (Kind, usize), pos: usize, dir: Direction) -> Result<&mut Self, RelError> {
        let rel = self.rel(
            Family::R,
            2,
            Variant::Std,
            &[('i', x.1), ('j', y.1)],
            &[('x', x.0), ('y', y.0)],
        )?;
        self.push(rel, pos, dir)
    }

    /// Inserts `c_i c_i^{-1}` at `pos`.
    fn ins(&mut self, i: usize, pos: usize) -> Result<&mut Self, RelError> {
        let rel = self.rel(Family::R, 1, Variant::Std, &[('i', i)], &[])?;
        self.push(rel, pos, Backward)
    }

    /// Inserts `c_i^{-1} c_i` at `pos`.
    fn ins_sym(&mut self, i: usize, pos: usize) -> Result<&mut Self, RelError> {
        let rel = self.rel(Family::R, 1, Variant::Sym, &[('i', i)], &[])?;
        self.push(rel, pos, Backward)
    }

    /// Cancels the inverse pair sitting at `pos`, picking the variant
    /// from the word.
    fn cancel(&mut self, pos: usize) -> Result<&mut Self, RelError> {
        let letters = self.word.letters();
        if pos + 1 >= letters.len() {
            return Err(RelError::BadScript(format!(
                "no inverse pair at {pos} in `{}`",
                self.word
            )));
        }
        let (x, y) = (letters[pos], letters[pos + 1]);
        let variant = match (x.kind, y.kind) {
            (Kind::C, Kind::CInv) if x.index == y.index => Variant::Std,
            (Kind::CInv, Kind::C) if x.index == y.index => Variant::Sym,
            _ => {
                return Err(RelError::BadScript(format!(
                    "letters at {pos} in `{}` are not an inverse pair",
                    self.word
                )))
            }
        };
        let rel = self.rel(Family::R, 1, variant, &[('i', x.index)], &[])?;
        self.push(rel, pos, Forward)
    }

    /// Rewrites `c_a^{-1} c_b^{-1} c_a^{-1} -> c_b^{-1} c_a^{-1} c_b^{-1}`
    /// at `pos`, where `b = a + 1` and `swap` selects the mirrored
    /// pattern instead.
    fn inv_braid(&mut self, pos: usize, a: usize, swap: bool) -> Result<&mut Self, RelError> {
        let b = a + 1;
        // roles: pattern is [C_p, C_q, C_p] -> [C_q, C_p, C_q]
        let (p, q) = if swap { (b, a) } else { (a, b) };
        self.ins(q, pos + 3)?;
        self.ins(p, pos + 4)?;
        self.ins(q, pos + 5)?;
        // the inserted plain triple is [c_q, c_p, c_q]
        if q == b {
            // [c_b, c_a, c_b] is the left side of R5
            self.r(5, a, pos + 3, Forward)?;
        } else {
            // [c_a, c_b, c_a] is the right side of R5
            self.r(5, a, pos + 3, Backward)?;
        }
        self.cancel(pos + 2)?;
        self.cancel(pos + 1)?;
        self.cancel(pos)?;
        Ok(self)
    }

    /// Rewrites `c_b^{-1} c_a^{-1} c_b -> c_a c_b^{-1} c_a^{-1}` at
    /// `pos` (`b = a + 1`).
    fn slide(&mut self, pos: usize, a: usize) -> Result<&mut Self, RelError> {
        self.ins(a, pos)?;
        self.inv_braid(pos + 1, a, false)?;
        self.cancel(pos + 3)?;
        Ok(self)
    }

    /// Moves the plain crossing sitting immediately right of a block of
    /// inverse crossings `C_top C_{top-1} ... C_bot` (at `pos`) through
    /// the whole block, conjugating its index down by one. The moved
    /// letter `c_v` (`bot < v <= top`) ends as `c_{v-1}` at `pos`, with
    /// the block shifted one slot right.
    fn conj_through_block(&mut self, pos: usize, top: usize, bot: usize) -> Result<&mut Self, RelError> {
        let k = top - bot + 1;
        let letter = self.word.letters()[pos + k];
        if letter.kind != Kind::C || letter.index <= bot || letter.index > top {
            return Err(RelError::BadScript(format!(
                "cannot conjugate `{letter}` through block [{top}..{bot}] in `{}`",
                self.word
            )));
        }
        let mut vi = letter.index;
        let mut cur = pos + k;
        let mut u = bot;
        while u <= top {
            if u + 1 == vi {
                self.slide(cur - 2, u)?;
                cur -= 2;
                vi -= 1;
                u += 2;
            } else {
                self.r2((Kind::CInv, u), (Kind::C, vi), cur - 1, Forward)?;
                cur -= 1;
                u += 1;
            }
        }
        Ok(self)
    }

    fn expect(&self, want: &Word) -> Result<(), RelError> {
        if &self.word != want {
            return Err(RelError::BadScript(format!(
                "chain reached `{}`, expected `{}`",
                self.word, want
            )));
        }
        Ok(())
    }

    fn finish(self, end: Word) -> Result<DerivationScript, RelError> {
        self.expect(&end)?;
        Ok(DerivationScript { start: self.start, end, steps: self.steps })
    }
}

fn word(n: usize, letters: Vec<Letter>) -> Result<Word, RelError> {
    Ok(Word::new(n, letters)?)
}

fn a(i: usize) -> Letter {
    Letter::a(i)
}
fn b(i: usize) -> Letter {
    Letter::b(i)
}
fn c(i: usize) -> Letter {
    Letter::c(i)
}
fn ci(i: usize) -> Letter {
    Letter::c_inv(i)
}

/// The chain `b_i a_{i+1} = a_{i+1} b_i` (requires `i + 1 <= n - 1`).
fn chain_ba_commute(i: usize, n: usize) -> Result<DerivationScript, RelError> {
    let start = word(n, vec![b(i), a(i + 1)])?;
    let end = word(n, vec![a(i + 1), b(i)])?;
    let mut cb = ChainBuilder::new(start);
    cb.ins(i, 2)?
        .ins(i + 1, 3)?
        .r(6, i, 1, Forward)?
        .r(4, i, 0, Forward)?
        .ins(i, 4)?
        .r(3, i, 3, Forward)?
        .r(9, i, 1, Forward)?
        .r(10, i, 3, Backward)?
        .r(3, i, 2, Backward)?
        .r(6, i, 0, Backward)?
        .r(9, i, 2, Backward)?
        .r(4, i, 1, Backward)?
        .cancel(4)?
        .cancel(3)?
        .cancel(2)?;
    cb.finish(end)
}

/// The chain `a_{i+1} b_i (c_i c_{i+1} c_i)^2 = a_{i+1} b_i`.
fn chain_ab_braid_square(i: usize, n: usize) -> Result<DerivationScript, RelError> {
    let start = word(
        n,
        vec![a(i + 1), b(i), c(i), c(i + 1), c(i), c(i), c(i + 1), c(i)],
    )?;
    let end = word(n, vec![a(i + 1), b(i)])?;
    let mut cb = ChainBuilder::new(start);
    cb.r(5, i, 2, Backward)?
        .r(9, i, 1, Forward)?
        .r(4, i + 1, 3, Forward)?
        .r(3, i + 1, 0, Forward)?
        .r(6, i, 1, Forward)?
        .ins(i, 8)?
        .ins(i + 1, 9)?
        .ins(i, 10)?
        .r(15, i, 3, Forward)?
        .r(6, i, 1, Backward)?
        .r(3, i + 1, 0, Backward)?
        .r(4, i + 1, 3, Backward)?
        .r(9, i, 1, Backward)?
        .r(5, i, 2, Forward)?
        .cancel(4)?
        .cancel(3)?
        .cancel(2)?;
    cb.finish(end)
}

/// The chain `a_{i+2} b_i (c_{i+1} c_i c_{i+2} c_{i+1})^2 = a_{i+2} b_i`
/// (requires `i + 2 <= n - 1`).
fn chain_ab_far_braid_square(i: usize, n: usize) -> Result<DerivationScript, RelError> {
    let x = |v: &mut Vec<Letter>| {
        v.extend([c(i + 1), c(i), c(i + 2), c(i + 1)]);
    };
    let mut letters = vec![a(i + 2), b(i)];
    x(&mut letters);
    x(&mut letters);
    let start = word(n, letters)?;
    let end = word(n, vec![a(i + 2), b(i)])?;
    let mut cb = ChainBuilder::new(start);
    cb.r(9, i, 1, Forward)?
        .r(9, i + 1, 3, Forward)?
        // move a_{i+2} through the first braid block
        .r2((Kind::C, i), (Kind::C, i + 2), 2, Forward)?
        .r(6, i + 1, 0, Forward)?
        .r(6, i, 2, Forward)?
        .r2((Kind::C, i + 2), (Kind::C, i), 1, Forward)?
        // append the square and collapse it
        .ins(i + 1, 10)?
        .ins(i, 11)?
        .ins(i + 2, 12)?
        .ins(i + 1, 13)?
        .r(16, i, 4, Forward)?
        // pull the generators back out
        .r2((Kind::C, i), (Kind::C, i + 2), 1, Forward)?
        .r(6, i, 2, Backward)?
        .r(6, i + 1, 0, Backward)?
        .r2((Kind::C, i + 2), (Kind::C, i), 2, Forward)?
        .r(9, i + 1, 3, Backward)?
        .r(9, i, 1, Backward)?
        .cancel(5)?
        .cancel(4)?
        .cancel(3)?
        .cancel(2)?;
    cb.finish(end)
}

/// The three derivation chains over the per-index generators, at base
/// index `i`. They require `i + 2 <= n - 1`.
pub fn reduced_relation_chains(i: usize, n: usize) -> Result<Vec<DerivationScript>, RelError> {
    Ok(vec![
        chain_ba_commute(i, n)?,
        chain_ab_braid_square(i, n)?,
        chain_ab_far_braid_square(i, n)?,
    ])
}

/// Inductive step for the two-vertex presentation: the relation cited
/// for the hypothesis at level `i - 1`.
fn induction_rel(cb: &ChainBuilder, number: u8, i: usize) -> Result<RelationInstance, RelError> {
    // at the bottom level the commutation and idempotent identities are
    // literally the reduced relations
    if i == 1 && matches!(number, 11 | 12 | 13) {
        return cb.rel(Family::M, number, Variant::Std, &[], &[]);
    }
    cb.rel(Family::R, number, Variant::Std, &[('i', i)], &[])
}

/// `a_i b_{i+1} = b_{i+1} a_i` from level `i - 1`.
fn induct_r10(i: usize, n: usize) -> Result<DerivationScript, RelError> {
    let start = word(n, vec![a(i), b(i + 1)])?;
    let end = word(n, vec![b(i + 1), a(i)])?;
    let mut cb = ChainBuilder::new(start);
    cb.ins(i - 1, 1)?
        .ins(i, 2)?
        .r(6, i - 1, 0, Forward)?
        .ins(i - 1, 5)?
        .r2((Kind::CInv, i - 1), (Kind::B, i + 1), 6, Forward)?
        .cancel(4)?
        .ins(i, 5)?
        .ins(i + 1, 6)?
        .r(7, i, 4, Forward)?
        .cancel(3)?
        .r2((Kind::A, i - 1), (Kind::C, i + 1), 2, Forward)?;
    let ind = induction_rel(&cb, 10, i - 1)?;
    cb.push(ind, 3, Forward)?
        .r(7, i, 1, Backward)?
        .r2((Kind::C, i - 1), (Kind::B, i + 1), 0, Forward)?
        .r2((Kind::A, i - 1), (Kind::CInv, i + 1), 4, Forward)?
        .cancel(3)?
        .r(6, i - 1, 1, Backward)?
        .cancel(3)?
        .cancel(2)?;
    cb.finish(end)
}

/// `a_i b_i = b_i a_i` from level `i - 1`.
fn induct_r11(i: usize, n: usize) -> Result<DerivationScript, RelError> {
    let start = word(n, vec![a(i), b(i)])?;
    let end = word(n, vec![b(i), a(i)])?;
    let mut cb = ChainBuilder::new(start);
    cb.ins(i - 1, 1)?
        .ins(i, 2)?
        .r(6, i - 1, 0, Forward)?
        .ins(i - 1, 6)?
        .ins(i, 7)?
        .r(7, i - 1, 5, Forward)?
        .cancel(4)?
        .cancel(3)?;
    let ind = induction_rel(&cb, 11, i - 1)?;
    cb.push(ind, 2, Forward)?
        .r(7, i - 1, 0, Backward)?
        .r(6, i - 1, 1, Backward)?
        .cancel(3)?
        .cancel(2)?;
    cb.finish(end)
}

/// `a_i a_i = a_i` from level `i - 1`.
fn induct_r12(i: usize, n: usize) -> Result<DerivationScript, RelError> {
    let start = word(n, vec![a(i), a(i)])?;
    let end = word(n, vec![a(i)])?;
    let mut cb = ChainBuilder::new(start);
    cb.ins(i - 1, 1)?
        .ins(i, 2)?
        .r(6, i - 1, 0, Forward)?
        .ins(i - 1, 6)?
        .ins(i, 7)?
        .r(6, i - 1, 5, Forward)?
        .cancel(4)?
        .cancel(3)?;
    let ind = induction_rel(&cb, 12, i - 1)?;
    cb.push(ind, 2, Forward)?
        .r(6, i - 1, 0, Backward)?
        .cancel(2)?
        .cancel(1)?;
    cb.finish(end)
}

/// `a_i b_i c_i^2 = a_i b_i` from level `i - 1`.
fn induct_r14(i: usize, n: usize) -> Result<DerivationScript, RelError> {
    let start = word(n, vec![a(i), b(i), c(i), c(i)])?;
    let end = word(n, vec![a(i), b(i)])?;
    let mut cb = ChainBuilder::new(start);
    cb.ins(i - 1, 2)?
        .ins(i, 3)?
        .r(7, i - 1, 1, Forward)?
        .r(6, i - 1, 0, Forward)?
        // slide c_i^2 through the inverse pair, conjugating down a level
        .slide(4, i - 1)?
        .slide(5, i - 1)?;
    let ind = induction_rel(&cb, 14, i - 1)?;
    cb.push(ind, 2, Forward)?
        .r(6, i - 1, 0, Backward)?
        .r(7, i - 1, 1, Backward)?
        .cancel(3)?
        .cancel(2)?;
    cb.finish(end)
}

/// `a_i b_{i+1} (c_i c_{i+1} c_i)^2 = a_i b_{i+1}` from level `i - 1`.
fn induct_r15(i: usize, n: usize) -> Result<DerivationScript, RelError> {
    let mut letters = vec![a(i), b(i + 1)];
    letters.extend([c(i), c(i + 1), c(i), c(i), c(i + 1), c(i)]);
    let start = word(n, letters)?;
    let end = word(n, vec![a(i), b(i + 1)])?;
    let mut cb = ChainBuilder::new(start);
    // expand both vertex letters one level down
    cb.ins(i - 1, 1)?
        .ins(i, 2)?
        .r(6, i - 1, 0, Forward)?
        .ins(i - 1, 5)?
        .r2((Kind::CInv, i - 1), (Kind::B, i + 1), 6, Forward)?
        .cancel(4)?
        .ins(i, 5)?
        .ins(i + 1, 6)?
        .r(7, i, 4, Forward)?
        .cancel(3)?
        .r2((Kind::A, i - 1), (Kind::C, i + 1), 2, Forward)?;
    // state: c_{i-1} c_i c_{i+1} a_{i-1} b_i C_{i+1} C_i C_{i-1} (c_i c_{i+1} c_i)^2
    // conjugate the braid square down one level through the inverses
    for t in 0..6 {
        cb.conj_through_block(5 + t, i + 1, i - 1)?;
    }
    let ind = induction_rel(&cb, 15, i - 1)?;
    cb.push(ind, 3, Forward)?;
    // state: c_{i-1} c_i c_{i+1} a_{i-1} b_i C_{i+1} C_i C_{i-1}
    cb.r2((Kind::A, i - 1), (Kind::C, i + 1), 2, Backward)?
        .ins_sym(i, 3)?
        .r(7, i, 4, Backward)?
        .cancel(6)?
        .cancel(5)?
        .ins_sym(i - 1, 4)?
        .r2((Kind::C, i - 1), (Kind::B, i + 1), 5, Forward)?
        .cancel(6)?
        .r(6, i - 1, 0, Backward)?
        .cancel(2)?
        .cancel(1)?;
    cb.finish(end)
}

/// `a_i b_{i+2} (c_{i+1} c_i c_{i+2} c_{i+1})^2 = a_i b_{i+2}` from
/// level `i - 1`.
fn induct_r16(i: usize, n: usize) -> Result<DerivationScript, RelError> {
    let x = |v: &mut Vec<Letter>| v.extend([c(i + 1), c(i), c(i + 2), c(i + 1)]);
    let mut letters = vec![a(i), b(i + 2)];
    x(&mut letters);
    x(&mut letters);
    let start = word(n, letters)?;
    let end = word(n, vec![a(i), b(i + 2)])?;
    let mut cb = ChainBuilder::new(start);
    // expand a_i, move b_{i+2} next to it, expand it one level too
    cb.ins(i - 1, 1)?
        .ins(i, 2)?
        .r(6, i - 1, 0, Forward)?
        .r2((Kind::CInv, i - 1), (Kind::B, i + 2), 4, Forward)?
        .r2((Kind::CInv, i), (Kind::B, i + 2), 3, Forward)?
        .ins(i + 1, 4)?
        .ins(i + 2, 5)?
        .r(7, i + 1, 3, Forward)?
        .r2((Kind::A, i - 1), (Kind::C, i + 1), 2, Forward)?
        .r2((Kind::A, i - 1), (Kind::C, i + 2), 3, Forward)?;
    // state: c_{i-1} c_i c_{i+1} c_{i+2} a_{i-1} b_{i+1} [C_{i+2} C_{i+1} C_i C_{i-1}] X^2
    for t in 0..8 {
        cb.conj_through_block(6 + t, i + 2, i - 1)?;
    }
    let ind = induction_rel(&cb, 16, i - 1)?;
    cb.push(ind, 4, Forward)?;
    // state: c_{i-1} c_i c_{i+1} c_{i+2} a_{i-1} b_{i+1} C_{i+2} C_{i+1} C_i C_{i-1}
    cb.r2((Kind::A, i - 1), (Kind::C, i + 2), 3, Backward)?
        .r2((Kind::A, i - 1), (Kind::C, i + 1), 2, Backward)?
        .r(7, i + 1, 3, Backward)?
        .cancel(5)?
        .cancel(4)?
        .r2((Kind::CInv, i), (Kind::B, i + 2), 3, Backward)?
        .r2((Kind::CInv, i - 1), (Kind::B, i + 2), 4, Backward)?
        .r(6, i - 1, 0, Backward)?
        .cancel(2)?
        .cancel(1)?;
    cb.finish(end)
}

/// The six inductive chains deriving the two-vertex relations at level
/// `i` from level `i - 1` (`i >= 2`; `n` must fit the widest chain,
/// `i + 3` strands for the last one).
pub fn two_vertex_induction_chains(i: usize, n: usize) -> Result<Vec<DerivationScript>, RelError> {
    assert!(i >= 2, "induction starts at level 2");
    Ok(vec![
        induct_r10(i, n)?,
        induct_r11(i, n)?,
        induct_r12(i, n)?,
        induct_r14(i, n)?,
        induct_r15(i, n)?,
        induct_r16(i, n)?,
    ])
}

/// A script witnessing that the reduced-generator expansion of a vertex
/// letter folds back to the letter itself using only the defining
/// conjugations and inverse cancellation.
pub fn defining_expansion_script(kind: Kind, i: usize, n: usize) -> Result<DerivationScript, RelError> {
    assert!(kind == Kind::A || kind == Kind::B, "only vertex letters expand");
    let target = word(n, vec![Letter::new(kind, i)])?;
    let start = translate_to_reduced(&target);
    let mut cb = ChainBuilder::new(start);
    let conj = if kind == Kind::A { 6 } else { 7 };
    for level in 1..i {
        let vpos = cb
            .word
            .letters()
            .iter()
            .position(|t| t.kind == kind)
            .expect("vertex letter present");
        // fold [c_level c_{level+1} x_level] back into x_{level+1}
        cb.r(conj, level, vpos - 2, Backward)?;
        cb.cancel(vpos)?;
        cb.cancel(vpos - 1)?;
    }
    cb.finish(target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::check_derivation;

    #[test]
    fn expanded_chains_validate_at_base_index() {
        for script in reduced_relation_chains(1, 4).unwrap() {
            assert!(check_derivation(&script).is_valid(), "chain failed: {script:?}");
        }
    }

    #[test]
    fn induction_chains_validate_at_level_two() {
        for script in two_vertex_induction_chains(2, 5).unwrap() {
            assert!(check_derivation(&script).is_valid());
        }
    }

    #[test]
    fn expansion_scripts_fold_back() {
        for i in 2..=5 {
            let n = i + 1;
            for kind in [Kind::A, Kind::B] {
                let script = defining_expansion_script(kind, i, n).unwrap();
                assert!(check_derivation(&script).is_valid());
            }
        }
    }
}
