//! Relation schemas and their instantiation.

use super::{Family, IndexMap, KindMap, RelError, RelationId, Variant};
use crate::braidword::{Kind, Letter, Word};
use std::collections::BTreeMap;

/// A relation instantiated at concrete indices and kinds: an ordered
/// pair of words asserted equal in `SSB_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInstance {
    pub id: RelationId,
    pub indices: IndexMap,
    pub xy: KindMap,
    pub lhs: Word,
    pub rhs: Word,
}

impl std::fmt::Display for RelationInstance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.id)?;
        let args: Vec<String> = self
            .indices
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .chain(self.xy.iter().map(|(k, v)| {
                format!("{k}={}", Letter::new(*v, 0).to_string().trim_end_matches('0'))
            }))
            .collect();
        if !args.is_empty() {
            write!(f, "[{}]", args.join(","))?;
        }
        write!(f, ": {} = {}", self.lhs, self.rhs)
    }
}

/// Index expression in a schema template.
#[derive(Debug, Clone, Copy)]
enum Ix {
    /// `i + offset`
    I(i8),
    /// `j`
    J,
    /// `k`
    K,
    /// a literal index (used by the `m` family)
    Lit(u8),
}

/// Letter kind in a schema template.
#[derive(Debug, Clone, Copy)]
enum Tk {
    A,
    B,
    C,
    CInv,
    /// schematic `x`
    X,
    /// schematic `y`
    Y,
}

type TLetter = (Tk, Ix);

struct Schema {
    /// index names this schema expects
    idx: &'static [char],
    /// schematic kind names this schema expects
    xy: &'static [char],
    lhs: Vec<TLetter>,
    rhs: Vec<TLetter>,
}

use Ix::*;
use Tk::*;

fn braid4(s: i8) -> Vec<TLetter> {
    // (c_{i+1} c_i c_{i+2} c_{i+1}) shifted by s
    vec![(C, I(1 + s)), (C, I(s)), (C, I(2 + s)), (C, I(1 + s))]
}

fn schema_for(id: RelationId) -> Result<Schema, RelError> {
    let unknown = || RelError::UnknownRelation(id.to_string());
    let two_sided = id.family != Family::A && id.number == 1;
    if id.variant == Variant::Sym && !two_sided {
        return Err(unknown());
    }
    let s = match (id.family, id.number) {
        // --- defining family -------------------------------------------------
        (Family::A, 1) => Schema {
            idx: &['i'],
            xy: &[],
            lhs: vec![(C, I(0)), (CInv, I(0))],
            rhs: vec![],
        },
        (Family::A, 2) => Schema {
            idx: &['i', 'j'],
            xy: &['x', 'y'],
            lhs: vec![(X, I(0)), (Y, J)],
            rhs: vec![(Y, J), (X, I(0))],
        },
        (Family::A, 3) => Schema {
            idx: &['i', 'k'],
            xy: &['x'],
            lhs: vec![(X, I(0)), (C, K), (C, I(0))],
            rhs: vec![(C, K), (C, I(0)), (X, K)],
        },
        (Family::A, 4) => Schema {
            idx: &['i', 'k'],
            xy: &['x'],
            lhs: vec![(X, I(0)), (CInv, K), (CInv, I(0))],
            rhs: vec![(CInv, K), (CInv, I(0)), (X, K)],
        },
        (Family::A, 5) => Schema {
            idx: &['i', 'k'],
            xy: &[],
            lhs: vec![(A, I(0)), (B, K)],
            rhs: vec![(B, K), (A, I(0))],
        },
        (Family::A, 6) | (Family::A, 7) => {
            let (u, v) = if id.number == 6 { (A, B) } else { (B, A) };
            let brd: Vec<TLetter> =
                vec![(C, I(-1)), (C, I(-2)), (C, I(0)), (C, I(-1))];
            let mut lhs = vec![(u, I(0)), (v, I(-2))];
            lhs.extend(brd.iter().cloned());
            lhs.extend(brd.iter().cloned());
            Schema { idx: &['i'], xy: &[], lhs, rhs: vec![(u, I(0)), (v, I(-2))] }
        }
        (Family::A, 8) => Schema {
            idx: &['i'],
            xy: &[],
            lhs: vec![(A, I(0)), (A, I(0))],
            rhs: vec![(A, I(0))],
        },
        (Family::A, 9) => Schema {
            idx: &['i'],
            xy: &[],
            lhs: vec![(B, I(0)), (B, I(0))],
            rhs: vec![(B, I(0))],
        },
        (Family::A, 10) => Schema {
            idx: &['i'],
            xy: &[],
            lhs: vec![(A, I(0)), (B, I(0)), (C, I(0)), (C, I(0))],
            rhs: vec![(A, I(0)), (B, I(0))],
        },
        (Family::A, 11) => Schema {
            idx: &['i', 'k'],
            xy: &[],
            lhs: vec![
                (A, I(0)),
                (B, K),
                (C, I(0)),
                (C, K),
                (C, I(0)),
                (C, I(0)),
                (C, K),
                (C, I(0)),
            ],
            rhs: vec![(A, I(0)), (B, K)],
        },

        // --- expanded family -------------------------------------------------
        (Family::R, 1) => match id.variant {
            Variant::Std => Schema {
                idx: &['i'],
                xy: &[],
                lhs: vec![(C, I(0)), (CInv, I(0))],
                rhs: vec![],
            },
            Variant::Sym => Schema {
                idx: &['i'],
                xy: &[],
                lhs: vec![(CInv, I(0)), (C, I(0))],
                rhs: vec![],
            },
        },
        (Family::R, 2) => Schema {
            idx: &['i', 'j'],
            xy: &['x', 'y'],
            lhs: vec![(X, I(0)), (Y, J)],
            rhs: vec![(Y, J), (X, I(0))],
        },
        (Family::R, 3) => Schema {
            idx: &['i'],
            xy: &[],
            lhs: vec![(A, I(0)), (C, I(0))],
            rhs: vec![(C, I(0)), (A, I(0))],
        },
        (Family::R, 4) => Schema {
            idx: &['i'],
            xy: &[],
            lhs: vec![(B, I(0)), (C, I(0))],
            rhs: vec![(C, I(0)), (B, I(0))],
        },
        (Family::R, 5) => Schema {
            idx: &['i'],
            xy: &[],
            lhs: vec![(C, I(1)), (C, I(0)), (C, I(1))],
            rhs: vec![(C, I(0)), (C, I(1)), (C, I(0))],
        },
        (Family::R, 6) | (Family::R, 7) => {
            let u = if id.number == 6 { A } else { B };
            Schema {
                idx: &['i'],
                xy: &[],
                lhs: vec![(u, I(1)), (C, I(0)), (C, I(1))],
                rhs: vec![(C, I(0)), (C, I(1)), (u, I(0))],
            }
        }
        (Family::R, 8) | (Family::R, 9) => {
            let u = if id.number == 8 { A } else { B };
            Schema {
                idx: &['i'],
                xy: &[],
                lhs: vec![(u, I(0)), (C, I(1)), (C, I(0))],
                rhs: vec![(C, I(1)), (C, I(0)), (u, I(1))],
            }
        }
        (Family::R, 10) => Schema {
            idx: &['i'],
            xy: &[],
            lhs: vec![(A, I(0)), (B, I(1))],
            rhs: vec![(B, I(1)), (A, I(0))],
        },
        (Family::R, 11) => Schema {
            idx: &['i'],
            xy: &[],
            lhs: vec![(A, I(0)), (B, I(0))],
            rhs: vec![(B, I(0)), (A, I(0))],
        },
        (Family::R, 12) => Schema {
            idx: &['i'],
            xy: &[],
            lhs: vec![(A, I(0)), (A, I(0))],
            rhs: vec![(A, I(0))],
        },
        (Family::R, 13) => Schema {
            idx: &['i'],
            xy: &[],
            lhs: vec![(B, I(0)), (B, I(0))],
            rhs: vec![(B, I(0))],
        },
        (Family::R, 14) => Schema {
            idx: &['i'],
            xy: &[],
            lhs: vec![(A, I(0)), (B, I(0)), (C, I(0)), (C, I(0))],
            rhs: vec![(A, I(0)), (B, I(0))],
        },
        (Family::R, 15) => Schema {
            idx: &['i'],
            xy: &[],
            lhs: vec![
                (A, I(0)),
                (B, I(1)),
                (C, I(0)),
                (C, I(1)),
                (C, I(0)),
                (C, I(0)),
                (C, I(1)),
                (C, I(0)),
            ],
            rhs: vec![(A, I(0)), (B, I(1))],
        },
        (Family::R, 16) => {
            let mut lhs = vec![(A, I(0)), (B, I(2))];
            lhs.extend(braid4(0));
            lhs.extend(braid4(0));
            Schema { idx: &['i'], xy: &[], lhs, rhs: vec![(A, I(0)), (B, I(2))] }
        }

        // --- reduced-generator family ---------------------------------------
        (Family::M, 1) => match id.variant {
            Variant::Std => Schema {
                idx: &['i'],
                xy: &[],
                lhs: vec![(C, I(0)), (CInv, I(0))],
                rhs: vec![],
            },
            Variant::Sym => Schema {
                idx: &['i'],
                xy: &[],
                lhs: vec![(CInv, I(0)), (C, I(0))],
                rhs: vec![],
            },
        },
        (Family::M, 2) => Schema {
            idx: &['i', 'j'],
            xy: &[],
            lhs: vec![(C, I(0)), (C, J)],
            rhs: vec![(C, J), (C, I(0))],
        },
        (Family::M, 3) => Schema {
            idx: &['i'],
            xy: &[],
            lhs: vec![(C, I(0)), (C, I(1)), (C, I(0))],
            rhs: vec![(C, I(1)), (C, I(0)), (C, I(1))],
        },
        (Family::M, 4) | (Family::M, 5) => {
            let u = if id.number == 4 { A } else { B };
            Schema {
                idx: &['i'],
                xy: &[],
                lhs: vec![(u, Lit(1)), (C, I(0))],
                rhs: vec![(C, I(0)), (u, Lit(1))],
            }
        }
        (Family::M, 6) | (Family::M, 7) => {
            let u = if id.number == 6 { A } else { B };
            let body = [(C, Lit(2)), (C, Lit(1)), (C, Lit(1)), (C, Lit(2))];
            let mut lhs = vec![(u, Lit(1))];
            lhs.extend(body.iter().cloned());
            let mut rhs: Vec<TLetter> = body.to_vec();
            rhs.push((u, Lit(1)));
            Schema { idx: &[], xy: &[], lhs, rhs }
        }
        (Family::M, 8) | (Family::M, 9) => {
            let u = if id.number == 8 { A } else { B };
            let body = [(C, Lit(2)), (C, Lit(3)), (C, Lit(1)), (C, Lit(2))];
            let mut half_l = vec![(u, Lit(1))];
            half_l.extend(body.iter().cloned());
            let mut half_r: Vec<TLetter> = body.to_vec();
            half_r.push((u, Lit(1)));
            let mut lhs = half_l.clone();
            lhs.extend(half_l);
            let mut rhs = half_r.clone();
            rhs.extend(half_r);
            Schema { idx: &[], xy: &[], lhs, rhs }
        }
        (Family::M, 10) => Schema {
            idx: &[],
            xy: &[],
            lhs: vec![(A, Lit(1)), (C, Lit(2)), (B, Lit(1)), (CInv, Lit(2))],
            rhs: vec![(C, Lit(2)), (B, Lit(1)), (CInv, Lit(2)), (A, Lit(1))],
        },
        (Family::M, 11) => Schema {
            idx: &[],
            xy: &[],
            lhs: vec![(A, Lit(1)), (B, Lit(1))],
            rhs: vec![(B, Lit(1)), (A, Lit(1))],
        },
        (Family::M, 12) => Schema {
            idx: &[],
            xy: &[],
            lhs: vec![(A, Lit(1)), (A, Lit(1))],
            rhs: vec![(A, Lit(1))],
        },
        (Family::M, 13) => Schema {
            idx: &[],
            xy: &[],
            lhs: vec![(B, Lit(1)), (B, Lit(1))],
            rhs: vec![(B, Lit(1))],
        },
        (Family::M, 14) => Schema {
            idx: &[],
            xy: &[],
            lhs: vec![(A, Lit(1)), (C, Lit(1)), (B, Lit(1))],
            rhs: vec![(A, Lit(1)), (CInv, Lit(1)), (B, Lit(1))],
        },
        (Family::M, 15) => Schema {
            idx: &[],
            xy: &[],
            lhs: vec![
                (A, Lit(1)),
                (C, Lit(1)),
                (C, Lit(2)),
                (C, Lit(1)),
                (B, Lit(1)),
            ],
            rhs: vec![
                (A, Lit(1)),
                (CInv, Lit(1)),
                (CInv, Lit(2)),
                (CInv, Lit(1)),
                (B, Lit(1)),
            ],
        },
        (Family::M, 16) => Schema {
            idx: &[],
            xy: &[],
            lhs: vec![
                (A, Lit(1)),
                (C, Lit(2)),
                (C, Lit(3)),
                (C, Lit(1)),
                (C, Lit(2)),
                (B, Lit(1)),
            ],
            rhs: vec![
                (A, Lit(1)),
                (CInv, Lit(2)),
                (CInv, Lit(1)),
                (CInv, Lit(3)),
                (CInv, Lit(2)),
                (B, Lit(1)),
            ],
        },
        _ => return Err(unknown()),
    };
    Ok(s)
}

pub(super) fn schema_exists(id: RelationId) -> Result<(), RelError> {
    if id.family == Family::C {
        if id.number == 1 || id.number == 2 {
            return Ok(());
        }
        return Err(RelError::UnknownRelation(id.to_string()));
    }
    schema_for(id).map(|_| ())
}

fn side_condition(id: RelationId, ix: &IndexMap, n: usize) -> Result<(), RelError> {
    let fail = |detail: &str| {
        Err(RelError::SideCondition { id: id.to_string(), detail: detail.into() })
    };
    let get = |name: char| ix.get(&name).copied();
    let i = get('i');
    let j = get('j');
    let k = get('k');
    match (id.family, id.number) {
        (Family::A, 2) => {
            let (i, j) = (i.unwrap(), j.unwrap());
            if i.abs_diff(j) == 1 {
                return fail("requires |i-j| != 1");
            }
        }
        (Family::A, 3) | (Family::A, 4) | (Family::A, 5) | (Family::A, 11) => {
            let (i, k) = (i.unwrap(), k.unwrap());
            if i.abs_diff(k) != 1 {
                return fail("requires |k-i| = 1");
            }
        }
        (Family::A, 6) | (Family::A, 7) => {
            if i.unwrap() <= 2 {
                return fail("requires i > 2");
            }
        }
        (Family::R, 2) => {
            let (i, j) = (i.unwrap(), j.unwrap());
            if i.abs_diff(j) <= 1 {
                return fail("requires |i-j| > 1");
            }
        }
        (Family::M, 2) => {
            let (i, j) = (i.unwrap(), j.unwrap());
            if j <= i + 1 {
                return fail("requires i+1 < j");
            }
        }
        (Family::M, 4) | (Family::M, 5) => {
            if i.unwrap() == 2 {
                return fail("requires i != 2");
            }
        }
        _ => {}
    }
    let _ = n;
    Ok(())
}

fn template_to_word(
    id: RelationId,
    tmpl: &[TLetter],
    ix: &IndexMap,
    xy: &KindMap,
    n: usize,
) -> Result<Word, RelError> {
    let mut letters = Vec::with_capacity(tmpl.len());
    for (tk, e) in tmpl {
        let kind = match tk {
            A => Kind::A,
            B => Kind::B,
            C => Kind::C,
            CInv => Kind::CInv,
            X => *xy
                .get(&'x')
                .ok_or(RelError::MissingKind { id: id.to_string(), name: 'x' })?,
            Y => *xy
                .get(&'y')
                .ok_or(RelError::MissingKind { id: id.to_string(), name: 'y' })?,
        };
        let base: i64 = match e {
            I(off) => {
                let i = *ix
                    .get(&'i')
                    .ok_or(RelError::MissingIndex { id: id.to_string(), name: 'i' })?;
                i as i64 + *off as i64
            }
            J => *ix
                .get(&'j')
                .ok_or(RelError::MissingIndex { id: id.to_string(), name: 'j' })?
                as i64,
            K => *ix
                .get(&'k')
                .ok_or(RelError::MissingIndex { id: id.to_string(), name: 'k' })?
                as i64,
            Lit(v) => *v as i64,
        };
        if base < 1 || base as usize >= n {
            return Err(RelError::IndexOutOfRange { id: id.to_string(), n });
        }
        letters.push(Letter::new(kind, base as usize));
    }
    Ok(Word::new(n, letters)?)
}

/// Instantiates a relation schema at concrete indices and kinds over
/// `n` strands, checking the schema's side conditions.
pub fn instantiate(
    id: RelationId,
    indices: &IndexMap,
    xy: &KindMap,
    n: usize,
) -> Result<RelationInstance, RelError> {
    let schema = schema_for(id)?;
    for name in schema.idx {
        if !indices.contains_key(name) {
            return Err(RelError::MissingIndex { id: id.to_string(), name: *name });
        }
    }
    for name in schema.xy {
        if !xy.contains_key(name) {
            return Err(RelError::MissingKind { id: id.to_string(), name: *name });
        }
    }
    side_condition(id, indices, n)?;
    let lhs = template_to_word(id, &schema.lhs, indices, xy, n)?;
    let rhs = template_to_word(id, &schema.rhs, indices, xy, n)?;
    let mut used_ix = IndexMap::new();
    for name in schema.idx {
        used_ix.insert(*name, indices[name]);
    }
    let mut used_xy = KindMap::new();
    for name in schema.xy {
        used_xy.insert(*name, xy[name]);
    }
    Ok(RelationInstance { id, indices: used_ix, xy: used_xy, lhs, rhs })
}

const KINDS: [Kind; 4] = [Kind::A, Kind::B, Kind::C, Kind::CInv];

/// Enumerates every instance of the family valid over `n` strands, in a
/// fixed deterministic order: by relation number, variant, then index
/// and kind assignments.
pub fn all_instances(family: Family, n: usize) -> Vec<RelationInstance> {
    assert!(n >= 2, "relation enumeration needs n >= 2");
    assert!(
        matches!(family, Family::A | Family::R | Family::M),
        "closed-braid moves are not word relations"
    );
    let numbers: &[u8] = match family {
        Family::A => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
        Family::R => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16],
        Family::M => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16],
        Family::C => unreachable!(),
    };
    let mut out = Vec::new();
    for &number in numbers {
        let variants: &[Variant] = if number == 1 && family != Family::A {
            &[Variant::Std, Variant::Sym]
        } else {
            &[Variant::Std]
        };
        for &variant in variants {
            let id = RelationId { family, number, variant };
            let schema = match schema_for(id) {
                Ok(s) => s,
                Err(_) => continue,
            };
            let idx_names = schema.idx;
            let xy_names = schema.xy;
            // iterate all index assignments in 1..n
            let mut assignments: Vec<IndexMap> = vec![IndexMap::new()];
            for name in idx_names {
                let mut next = Vec::new();
                for base in &assignments {
                    for v in 1..n {
                        let mut m = base.clone();
                        m.insert(*name, v);
                        next.push(m);
                    }
                }
                assignments = next;
            }
            for ix in &assignments {
                let mut kind_maps: Vec<KindMap> = vec![KindMap::new()];
                for name in xy_names {
                    let mut next = Vec::new();
                    for base in &kind_maps {
                        for kind in KINDS {
                            let mut m = base.clone();
                            m.insert(*name, kind);
                            next.push(m);
                        }
                    }
                    kind_maps = next;
                }
                for xy in &kind_maps {
                    if let Ok(inst) = instantiate(id, ix, xy, n) {
                        out.push(inst);
                    }
                }
            }
        }
    }
    out
}

/// Convenience constructor for instances indexed only by `i`.
pub fn instance_i(id: RelationId, i: usize, n: usize) -> Result<RelationInstance, RelError> {
    let mut ix = IndexMap::new();
    ix.insert('i', i);
    instantiate(id, &ix, &BTreeMap::new(), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braidword::parse_word;

    fn ids(insts: &[RelationInstance]) -> Vec<String> {
        let mut v: Vec<String> = insts
            .iter()
            .map(|r| {
                let mut s = r.id.to_string();
                for (k, val) in &r.indices {
                    s.push_str(&format!(",{k}{val}"));
                }
                s
            })
            .collect();
        v.sort();
        v.dedup();
        v
    }

    #[test]
    fn m14_at_two_strands() {
        let inst = instantiate(
            RelationId::new(Family::M, 14),
            &IndexMap::new(),
            &KindMap::new(),
            2,
        )
        .unwrap();
        assert_eq!(inst.lhs, parse_word("a1 c1 b1", 2).unwrap());
        assert_eq!(inst.rhs, parse_word("a1 C1 b1", 2).unwrap());
    }

    #[test]
    fn r16_at_four_strands() {
        let inst = instance_i(RelationId::new(Family::R, 16), 1, 4).unwrap();
        assert_eq!(
            inst.lhs,
            parse_word("a1 b3 c2 c1 c3 c2 c2 c1 c3 c2", 4).unwrap()
        );
        assert_eq!(inst.rhs, parse_word("a1 b3", 4).unwrap());
    }

    #[test]
    fn r2_side_condition() {
        let mut ix = IndexMap::new();
        ix.insert('i', 1);
        ix.insert('j', 2);
        let mut xy = KindMap::new();
        xy.insert('x', Kind::A);
        xy.insert('y', Kind::B);
        let err = instantiate(RelationId::new(Family::R, 2), &ix, &xy, 4).unwrap_err();
        assert!(matches!(err, RelError::SideCondition { .. }));
    }

    #[test]
    fn m_family_at_two_strands() {
        // only relations mentioning at most c1 survive
        let insts = all_instances(Family::M, 2);
        let got = ids(&insts);
        assert_eq!(
            got,
            vec!["m1',i1", "m1,i1", "m11", "m12", "m13", "m14", "m4,i1", "m5,i1"]
        );
    }

    #[test]
    fn m_family_at_three_strands() {
        let insts = all_instances(Family::M, 3);
        let got = ids(&insts);
        for present in ["m6", "m7", "m15", "m10", "m3,i1"] {
            assert!(got.iter().any(|s| s == present), "missing {present}: {got:?}");
        }
        for absent in ["m8", "m9", "m16"] {
            assert!(!got.iter().any(|s| s == absent), "unexpected {absent}");
        }
        // m4/m5 exclude i = 2
        assert!(got.iter().any(|s| s == "m4,i1"));
        assert!(!got.iter().any(|s| s == "m4,i2"));
    }

    #[test]
    fn r_family_at_two_strands() {
        let insts = all_instances(Family::R, 2);
        let got = ids(&insts);
        assert_eq!(
            got,
            vec![
                "r1',i1", "r1,i1", "r11,i1", "r12,i1", "r13,i1", "r14,i1", "r3,i1", "r4,i1",
            ]
        );
    }

    #[test]
    fn a2_includes_equal_indices() {
        // with |i-j| != 1 the schema covers i = j
        let mut ix = IndexMap::new();
        ix.insert('i', 1);
        ix.insert('j', 1);
        let mut xy = KindMap::new();
        xy.insert('x', Kind::C);
        xy.insert('y', Kind::CInv);
        let inst = instantiate(RelationId::new(Family::A, 2), &ix, &xy, 2).unwrap();
        assert_eq!(inst.lhs, parse_word("c1 C1", 2).unwrap());
        assert_eq!(inst.rhs, parse_word("C1 c1", 2).unwrap());
    }

    #[test]
    fn a6_requires_i_above_two() {
        let err = instance_i(RelationId::new(Family::A, 6), 2, 5).unwrap_err();
        assert!(matches!(err, RelError::SideCondition { .. }));
        let inst = instance_i(RelationId::new(Family::A, 6), 3, 5).unwrap();
        assert_eq!(
            inst.lhs,
            parse_word("a3 b1 c2 c1 c3 c2 c2 c1 c3 c2", 5).unwrap()
        );
    }

    #[test]
    fn every_instance_is_index_valid() {
        for family in [Family::A, Family::R, Family::M] {
            for n in 2..=6 {
                for inst in all_instances(family, n) {
                    assert_eq!(inst.lhs.strands(), n);
                    assert_eq!(inst.rhs.strands(), n);
                }
            }
        }
    }
}
