//! Bounded equality search.
//!
//! The word problem for `SSB_n` is only semi-decided here: a breadth
//! first search over single rewrite steps either finds a replayable
//! derivation or gives up at the configured bounds. `Unknown` is never
//! a disproof.
//!
//! States are words as-is (no free-reduction shortcut), so soundness of
//! a `Proved` answer reduces to `check_derivation`. The search expands
//! from both endpoints and meets in the middle; frontier expansion can
//! run data-parallel, with results merged in input order so the found
//! script does not depend on thread scheduling.

use super::rewrite::{apply_rewrite, Direction};
use super::schema::{all_instances, RelationInstance};
use super::script::{DerivationScript, Step};
use super::translate::translate_to_reduced;
use super::{Family, RelError};
use crate::braidword::Word;
use crate::util::{map_ordered, ExecMode};
use std::collections::HashMap;

/// Search bounds: `depth` caps the total script length, `width` the
/// number of distinct words explored. `max_word_len`, when set, prunes
/// intermediate words longer than the bound (useful when the endpoints
/// are short and identity insertions would otherwise dominate).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub depth: usize,
    pub width: usize,
    pub max_word_len: Option<usize>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { depth: 16, width: 200_000, max_word_len: None }
    }
}

impl SearchLimits {
    pub fn new(depth: usize, width: usize) -> Self {
        SearchLimits { depth, width, max_word_len: None }
    }
}

/// Outcome of a bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult {
    Proved(DerivationScript),
    /// No proof within the bounds; not a disproof.
    Unknown,
}

impl SearchResult {
    pub fn proved(&self) -> Option<&DerivationScript> {
        match self {
            SearchResult::Proved(s) => Some(s),
            SearchResult::Unknown => None,
        }
    }
}

/// Searches for a derivation `w1 = w2` using every instance of the
/// given family at the shared strand count.
///
/// For the reduced family `m` both inputs are first rewritten onto the
/// reduced generating set via [`translate_to_reduced`], since the `m`
/// relations only mention `a_1`, `b_1` and crossings; the returned
/// script derives the translated words.
pub fn bounded_equal(
    w1: &Word,
    w2: &Word,
    family: Family,
    limits: SearchLimits,
    mode: ExecMode,
) -> Result<SearchResult, RelError> {
    if w1.strands() != w2.strands() {
        return Err(RelError::StrandMismatch(w1.strands(), w2.strands()));
    }
    let (s, t) = if family == Family::M {
        (translate_to_reduced(w1), translate_to_reduced(w2))
    } else {
        (w1.clone(), w2.clone())
    };
    let rels = all_instances(family, s.strands());
    Ok(bounded_equal_with(&s, &t, &rels, limits, mode))
}

struct Node {
    word_id: usize,
    parent: Option<(usize, u32, u32, Direction)>, // (node, rel index, pos, dir)
    level: usize,
}

struct Side {
    words: Vec<Word>,
    nodes: Vec<Node>,
    seen: HashMap<Word, usize>, // word -> node index
    frontier: Vec<usize>,
    levels: usize,
}

impl Side {
    fn new(root: Word) -> Self {
        let mut seen = HashMap::new();
        seen.insert(root.clone(), 0);
        Side {
            words: vec![root],
            nodes: vec![Node { word_id: 0, parent: None, level: 0 }],
            seen,
            frontier: vec![0],
            levels: 0,
        }
    }

    fn word_of(&self, node: usize) -> &Word {
        &self.words[self.nodes[node].word_id]
    }

    /// Steps from the root to `node`, in application order.
    fn path_from_root(&self, mut node: usize) -> Vec<(u32, u32, Direction)> {
        let mut rev = Vec::new();
        while let Some((parent, rel, pos, dir)) = self.nodes[node].parent {
            rev.push((rel, pos, dir));
            node = parent;
        }
        rev.reverse();
        rev
    }
}

fn neighbors(
    w: &Word,
    rels: &[RelationInstance],
    max_len: Option<usize>,
) -> Vec<(Word, u32, u32, Direction)> {
    let mut out = Vec::new();
    for (ri, rel) in rels.iter().enumerate() {
        for dir in [Direction::Forward, Direction::Backward] {
            let (from_len, to_len) = match dir {
                Direction::Forward => (rel.lhs.len(), rel.rhs.len()),
                Direction::Backward => (rel.rhs.len(), rel.lhs.len()),
            };
            if let Some(cap) = max_len {
                let grown = w.len() + to_len > from_len + cap;
                if grown && to_len > from_len {
                    continue;
                }
            }
            let max_pos = if from_len > w.len() {
                if from_len == 0 { w.len() } else { continue }
            } else {
                w.len() - from_len
            };
            for pos in 0..=max_pos {
                if let Ok(next) = apply_rewrite(w, rel, pos, dir) {
                    out.push((next, ri as u32, pos as u32, dir));
                }
            }
        }
    }
    out
}

/// Bounded bidirectional search over an explicit relation instance set.
pub fn bounded_equal_with(
    w1: &Word,
    w2: &Word,
    rels: &[RelationInstance],
    limits: SearchLimits,
    mode: ExecMode,
) -> SearchResult {
    if w1 == w2 {
        return SearchResult::Proved(DerivationScript {
            start: w1.clone(),
            end: w2.clone(),
            steps: vec![],
        });
    }
    let mut sides = [Side::new(w1.clone()), Side::new(w2.clone())];

    while sides[0].levels + sides[1].levels < limits.depth {
        // expand the smaller frontier; prefer the start side on ties
        let s = if sides[0].frontier.len() <= sides[1].frontier.len() { 0 } else { 1 };
        let o = 1 - s;
        if sides[s].frontier.is_empty() {
            return SearchResult::Unknown;
        }

        let frontier_words: Vec<Word> = sides[s]
            .frontier
            .iter()
            .map(|&nid| sides[s].word_of(nid).clone())
            .collect();
        let expansions =
            map_ordered(mode, &frontier_words, |w| neighbors(w, rels, limits.max_word_len));

        let level = sides[s].levels + 1;
        let mut next_frontier = Vec::new();
        let parent_ids: Vec<usize> = sides[s].frontier.clone();
        for (fi, neigh) in expansions.into_iter().enumerate() {
            let parent = parent_ids[fi];
            for (word, rel, pos, dir) in neigh {
                if sides[s].seen.contains_key(&word) {
                    continue;
                }
                if sides[0].seen.len() + sides[1].seen.len() >= limits.width {
                    return SearchResult::Unknown;
                }
                let word_id = sides[s].words.len();
                sides[s].words.push(word.clone());
                let node_id = sides[s].nodes.len();
                sides[s].nodes.push(Node {
                    word_id,
                    parent: Some((parent, rel, pos, dir)),
                    level,
                });
                sides[s].seen.insert(word.clone(), node_id);
                if let Some(&other_node) = sides[o].seen.get(&word) {
                    return SearchResult::Proved(assemble(
                        w1, w2, rels, &sides, s, node_id, other_node,
                    ));
                }
                next_frontier.push(node_id);
            }
        }
        sides[s].frontier = next_frontier;
        sides[s].levels = level;
    }
    SearchResult::Unknown
}

fn assemble(
    w1: &Word,
    w2: &Word,
    rels: &[RelationInstance],
    sides: &[Side; 2],
    met_side: usize,
    met_node: usize,
    other_node: usize,
) -> DerivationScript {
    let (start_node, end_node) = if met_side == 0 {
        (met_node, other_node)
    } else {
        (other_node, met_node)
    };
    let mut steps: Vec<Step> = sides[0]
        .path_from_root(start_node)
        .into_iter()
        .map(|(rel, pos, dir)| Step {
            rel: rels[rel as usize].clone(),
            pos: pos as usize,
            dir,
        })
        .collect();
    // the end-side path runs w2 -> meet; reverse and flip it
    let back = sides[1].path_from_root(end_node);
    for (rel, pos, dir) in back.into_iter().rev() {
        steps.push(Step {
            rel: rels[rel as usize].clone(),
            pos: pos as usize,
            dir: dir.flip(),
        });
    }
    DerivationScript { start: w1.clone(), end: w2.clone(), steps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braidword::parse_word;
    use crate::relations::check_derivation;

    #[test]
    fn reflexive_is_empty_proof() {
        let w = parse_word("a1 c1 b1", 2).unwrap();
        let res = bounded_equal(&w, &w, Family::M, SearchLimits::default(), ExecMode::Sequential)
            .unwrap();
        let script = res.proved().expect("w = w must be proved");
        assert!(script.steps.is_empty());
    }

    #[test]
    fn idempotent_in_one_step() {
        let w1 = parse_word("a1", 2).unwrap();
        let w2 = parse_word("a1 a1", 2).unwrap();
        let res = bounded_equal(&w1, &w2, Family::M, SearchLimits::default(), ExecMode::Sequential)
            .unwrap();
        let script = res.proved().expect("a = a a");
        assert_eq!(script.steps.len(), 1);
        assert_eq!(script.steps[0].rel.id.to_string(), "m12");
        assert!(check_derivation(script).is_valid());
    }

    #[test]
    fn commute_a_with_far_b_in_r() {
        let w1 = parse_word("a1 b2", 3).unwrap();
        let w2 = parse_word("b2 a1", 3).unwrap();
        let res = bounded_equal(&w1, &w2, Family::R, SearchLimits::default(), ExecMode::Sequential)
            .unwrap();
        let script = res.proved().expect("r10 proves this");
        assert!(check_derivation(script).is_valid());
        assert!(script.steps.iter().any(|s| s.rel.id.to_string() == "r10"));
    }

    #[test]
    fn distinct_words_stay_unknown_at_small_bounds() {
        let w1 = parse_word("a1 b1 c1", 2).unwrap();
        let w2 = parse_word("a1 b1", 2).unwrap();
        let res = bounded_equal(
            &w1,
            &w2,
            Family::M,
            SearchLimits::new(4, 3_000),
            ExecMode::Sequential,
        )
        .unwrap();
        assert_eq!(res, SearchResult::Unknown);
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let w1 = parse_word("a1 b2", 3).unwrap();
        let w2 = parse_word("b2 a1", 3).unwrap();
        let limits = SearchLimits::new(8, 50_000);
        let seq = bounded_equal(&w1, &w2, Family::M, limits, ExecMode::Sequential).unwrap();
        let par = bounded_equal(&w1, &w2, Family::M, limits, ExecMode::Parallel).unwrap();
        match (&seq, &par) {
            (SearchResult::Proved(a), SearchResult::Proved(b)) => {
                assert_eq!(a, b);
                assert!(check_derivation(a).is_valid());
            }
            other => panic!("expected proofs, got {other:?}"),
        }
    }
}
