//! Translation onto the reduced generating set `{a, b, c_i}`.
//!
//! The reduced presentation uses `a = a_1` and `b = b_1` together with
//! the crossings; higher vertex letters are the conjugates
//! `a_{i+1} = c_i c_{i+1} a_i c_{i+1}^{-1} c_i^{-1}` (and likewise for
//! `b`).

use crate::braidword::{Kind, Letter, Word};

fn expand_vertex(kind: Kind, i: usize, out: &mut Vec<Letter>) {
    if i == 1 {
        out.push(Letter::new(kind, 1));
        return;
    }
    out.push(Letter::c(i - 1));
    out.push(Letter::c(i));
    expand_vertex(kind, i - 1, out);
    out.push(Letter::c_inv(i));
    out.push(Letter::c_inv(i - 1));
}

/// Rewrites every `a_i`, `b_i` with `i > 1` down to `a_1`, `b_1` via
/// the defining conjugations; crossing letters are unchanged.
pub fn translate_to_reduced(w: &Word) -> Word {
    let mut letters = Vec::with_capacity(w.len());
    for l in w.letters() {
        match l.kind {
            Kind::A | Kind::B => expand_vertex(l.kind, l.index, &mut letters),
            _ => letters.push(*l),
        }
    }
    Word::new(w.strands(), letters).expect("translation preserves index bounds")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braidword::parse_word;

    #[test]
    fn base_case_unchanged() {
        let w = parse_word("a1", 2).unwrap();
        assert_eq!(translate_to_reduced(&w), w);
    }

    #[test]
    fn single_conjugation() {
        let w = parse_word("a2", 3).unwrap();
        assert_eq!(translate_to_reduced(&w), parse_word("c1 c2 a1 C2 C1", 3).unwrap());
    }

    #[test]
    fn nested_conjugation() {
        let w = parse_word("b3", 4).unwrap();
        assert_eq!(
            translate_to_reduced(&w),
            parse_word("c2 c3 c1 c2 b1 C2 C1 C3 C2", 4).unwrap()
        );
    }

    #[test]
    fn crossings_untouched() {
        let w = parse_word("c1 a2 C2", 3).unwrap();
        assert_eq!(
            translate_to_reduced(&w),
            parse_word("c1 c1 c2 a1 C2 C1 C2", 3).unwrap()
        );
    }
}
