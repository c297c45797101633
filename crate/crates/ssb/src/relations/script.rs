//! Replayable derivation scripts.
//!
//! A script claims that a sequence of single rewrite steps transforms
//! `start` into `end`. [`check_derivation`] replays it and either
//! confirms the claim or reports the first step that fails.
//!
//! Scripts serialize as JSON:
//!
//! ```json
//! {"start": "b1 a2", "end": "a2 b1", "n": 4,
//!  "steps": [{"rel": "r1", "i": 1, "pos": 2, "dir": "bwd"}]}
//! ```

use super::rewrite::{apply_rewrite, Direction};
use super::schema::{instantiate, RelationInstance};
use super::{IndexMap, KindMap, RelError, RelationId, Variant};
use crate::braidword::{parse_word, Kind, Word};
use serde::{Deserialize, Serialize};

/// One rewrite step: a relation instance, a match position and a
/// direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub rel: RelationInstance,
    pub pos: usize,
    pub dir: Direction,
}

/// A claimed derivation from `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationScript {
    pub start: Word,
    pub end: Word,
    pub steps: Vec<Step>,
}

/// Outcome of replaying a script.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// `index` is the 0-based failing step; a final-word mismatch is
    /// reported at `index == steps.len()`.
    InvalidStep { index: usize, reason: String },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Replays every step of the script. Valid iff each step matches and
/// the final word equals `end`.
pub fn check_derivation(s: &DerivationScript) -> Verdict {
    let mut current = s.start.clone();
    for (index, step) in s.steps.iter().enumerate() {
        match apply_rewrite(&current, &step.rel, step.pos, step.dir) {
            Ok(next) => current = next,
            Err(e) => {
                return Verdict::InvalidStep { index, reason: e.to_string() };
            }
        }
    }
    if current != s.end {
        return Verdict::InvalidStep {
            index: s.steps.len(),
            reason: format!("final word `{current}` differs from claimed end `{}`", s.end),
        };
    }
    Verdict::Valid
}

#[derive(Debug, Serialize, Deserialize)]
struct StepJson {
    rel: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    xy: Option<std::collections::BTreeMap<String, String>>,
    pos: usize,
    dir: Direction,
    #[serde(skip_serializing_if = "Option::is_none")]
    comment: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ScriptJson {
    start: String,
    end: String,
    n: usize,
    steps: Vec<StepJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    comment: Option<String>,
}

fn kind_from_token(tok: &str) -> Result<Kind, RelError> {
    match tok {
        "a" => Ok(Kind::A),
        "b" => Ok(Kind::B),
        "c" => Ok(Kind::C),
        "C" => Ok(Kind::CInv),
        other => Err(RelError::BadScript(format!("unknown kind token `{other}`"))),
    }
}

fn kind_token(k: Kind) -> &'static str {
    match k {
        Kind::A => "a",
        Kind::B => "b",
        Kind::C => "c",
        Kind::CInv => "C",
    }
}

impl DerivationScript {
    pub fn to_json(&self) -> serde_json::Value {
        let steps = self
            .steps
            .iter()
            .map(|s| StepJson {
                rel: s.rel.id.to_string(),
                i: s.rel.indices.get(&'i').copied(),
                j: s.rel.indices.get(&'j').copied(),
                k: s.rel.indices.get(&'k').copied(),
                xy: if s.rel.xy.is_empty() {
                    None
                } else {
                    Some(
                        s.rel
                            .xy
                            .iter()
                            .map(|(name, kind)| (name.to_string(), kind_token(*kind).to_string()))
                            .collect(),
                    )
                },
                pos: s.pos,
                dir: s.dir,
                comment: None,
            })
            .collect();
        serde_json::to_value(ScriptJson {
            start: self.start.to_string(),
            end: self.end.to_string(),
            n: self.start.strands(),
            steps,
            comment: None,
        })
        .expect("script serialization cannot fail")
    }

    pub fn from_json_str(text: &str) -> Result<Self, RelError> {
        let raw: ScriptJson = serde_json::from_str(text)
            .map_err(|e| RelError::BadScript(format!("invalid JSON: {e}")))?;
        let n = raw.n;
        let start = parse_word(&raw.start, n)?;
        let end = parse_word(&raw.end, n)?;
        let mut steps = Vec::with_capacity(raw.steps.len());
        for s in &raw.steps {
            let id = RelationId::parse(&s.rel)?;
            if id.variant == Variant::Sym {
                // already encoded in the id
            }
            let mut ix = IndexMap::new();
            if let Some(v) = s.i {
                ix.insert('i', v);
            }
            if let Some(v) = s.j {
                ix.insert('j', v);
            }
            if let Some(v) = s.k {
                ix.insert('k', v);
            }
            let mut xy = KindMap::new();
            if let Some(map) = &s.xy {
                for (name, tok) in map {
                    let mut chars = name.chars();
                    let (Some(c), None) = (chars.next(), chars.next()) else {
                        return Err(RelError::BadScript(format!(
                            "bad schematic letter name `{name}`"
                        )));
                    };
                    xy.insert(c, kind_from_token(tok)?);
                }
            }
            let rel = instantiate(id, &ix, &xy, n)?;
            steps.push(Step { rel, pos: s.pos, dir: s.dir });
        }
        Ok(DerivationScript { start, end, steps })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::Family;

    #[test]
    fn one_step_script_valid() {
        let n = 2;
        let rel = instantiate(
            RelationId::new(Family::M, 12),
            &IndexMap::new(),
            &KindMap::new(),
            n,
        )
        .unwrap();
        let script = DerivationScript {
            start: parse_word("a1 a1 b1", n).unwrap(),
            end: parse_word("a1 b1", n).unwrap(),
            steps: vec![Step { rel, pos: 0, dir: Direction::Forward }],
        };
        assert!(check_derivation(&script).is_valid());
    }

    #[test]
    fn bad_position_reported() {
        let n = 2;
        let rel = instantiate(
            RelationId::new(Family::M, 12),
            &IndexMap::new(),
            &KindMap::new(),
            n,
        )
        .unwrap();
        let script = DerivationScript {
            start: parse_word("b1 a1", n).unwrap(),
            end: parse_word("b1 a1", n).unwrap(),
            steps: vec![Step { rel, pos: 0, dir: Direction::Forward }],
        };
        match check_derivation(&script) {
            Verdict::InvalidStep { index: 0, .. } => {}
            other => panic!("expected failure at step 0, got {other:?}"),
        }
    }

    #[test]
    fn final_word_mismatch() {
        let n = 2;
        let script = DerivationScript {
            start: parse_word("a1", n).unwrap(),
            end: parse_word("b1", n).unwrap(),
            steps: vec![],
        };
        match check_derivation(&script) {
            Verdict::InvalidStep { index: 0, reason } => {
                assert!(reason.contains("differs"));
            }
            other => panic!("unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn json_round_trip() {
        let n = 2;
        let rel = instantiate(
            RelationId::new(Family::M, 14),
            &IndexMap::new(),
            &KindMap::new(),
            n,
        )
        .unwrap();
        let script = DerivationScript {
            start: parse_word("a1 c1 b1", n).unwrap(),
            end: parse_word("a1 C1 b1", n).unwrap(),
            steps: vec![Step { rel, pos: 0, dir: Direction::Forward }],
        };
        let json = serde_json::to_string(&script.to_json()).unwrap();
        let back = DerivationScript::from_json_str(&json).unwrap();
        assert_eq!(back, script);
        assert!(check_derivation(&back).is_valid());
    }
}
