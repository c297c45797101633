//! Generator letters and free-monoid words of `SSB_n`.
//!
//! A word over `n` strands is a finite sequence of letters `a_i`, `b_i`,
//! `c_i`, `c_i^{-1}` with `1 <= i <= n-1`. The token alphabet is
//! `a<i>`, `b<i>`, `c<i>` and `C<i>` (for `c_i^{-1}`), whitespace
//! separated; `1` denotes the empty word. A closed word is written
//! `[ w ]_n`.

use std::fmt;
use thiserror::Error;

/// The four kinds of generators: two marked vertices and the two
/// crossings. `CInv` is the only formally inverse kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    A,
    B,
    C,
    CInv,
}

impl Kind {
    /// Vertex letters carry a marker; crossing letters do not.
    pub fn is_vertex(self) -> bool {
        matches!(self, Kind::A | Kind::B)
    }

    pub fn is_crossing(self) -> bool {
        !self.is_vertex()
    }

    /// `c <-> C`; vertex kinds have no inverse.
    pub fn inverse(self) -> Option<Kind> {
        match self {
            Kind::C => Some(Kind::CInv),
            Kind::CInv => Some(Kind::C),
            _ => None,
        }
    }

    fn token_char(self) -> char {
        match self {
            Kind::A => 'a',
            Kind::B => 'b',
            Kind::C => 'c',
            Kind::CInv => 'C',
        }
    }
}

/// A single generator letter acting on strands `index` and `index + 1`
/// (strands numbered from the top, starting at 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub kind: Kind,
    pub index: usize,
}

impl Letter {
    pub fn new(kind: Kind, index: usize) -> Self {
        Letter { kind, index }
    }

    pub fn a(index: usize) -> Self {
        Letter::new(Kind::A, index)
    }

    pub fn b(index: usize) -> Self {
        Letter::new(Kind::B, index)
    }

    pub fn c(index: usize) -> Self {
        Letter::new(Kind::C, index)
    }

    pub fn c_inv(index: usize) -> Self {
        Letter::new(Kind::CInv, index)
    }

    /// The formal inverse, defined only for crossing letters.
    pub fn inverse(self) -> Option<Letter> {
        self.kind.inverse().map(|k| Letter::new(k, self.index))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.token_char(), self.index)
    }
}

/// A word in the free monoid over the generator letters, together with
/// the strand count it lives on. The empty sequence is the identity.
///
/// Words are immutable values; rewriting always produces new words.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    strands: usize,
    letters: Vec<Letter>,
}

/// A closed braid word `[w]_n`, the closure of `w` on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClosedWord {
    word: Word,
}

/// Result of parsing input that may be either open or closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Open(Word),
    Closed(ClosedWord),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("empty input")]
    Empty,
    #[error("unknown token `{0}`")]
    UnknownToken(String),
    #[error("letter index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("letter index must be at least 1")]
    ZeroIndex,
    #[error("strand count must be at least 1")]
    ZeroStrands,
    #[error("malformed closure suffix; expected `]_<digits>`")]
    MalformedClosure,
    #[error("`1` may not be mixed with letters")]
    MisplacedOne,
    #[error("unexpected `{0}` inside a word")]
    UnexpectedBracket(char),
}

impl Word {
    /// The empty word (monoid identity) over `strands` strands.
    pub fn identity(strands: usize) -> Result<Self, WordError> {
        if strands == 0 {
            return Err(WordError::ZeroStrands);
        }
        Ok(Word { strands, letters: Vec::new() })
    }

    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, WordError> {
        if strands == 0 {
            return Err(WordError::ZeroStrands);
        }
        for l in &letters {
            if l.index == 0 {
                return Err(WordError::ZeroIndex);
            }
            if l.index >= strands {
                return Err(WordError::IndexOutOfRange { index: l.index, strands });
            }
        }
        Ok(Word { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation in the free monoid. Both words must share the
    /// strand count.
    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if self.strands != other.strands {
            return Err(WordError::IndexOutOfRange {
                index: other.strands,
                strands: self.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { strands: self.strands, letters })
    }

    /// The same letters over a different strand count. Fails if a letter
    /// index no longer fits.
    pub fn with_strands(&self, strands: usize) -> Result<Word, WordError> {
        Word::new(strands, self.letters.clone())
    }

    /// Replaces `len` letters starting at `pos` by `replacement`,
    /// returning the new word. Used by single-step rewriting.
    pub fn splice(&self, pos: usize, len: usize, replacement: &[Letter]) -> Result<Word, WordError> {
        if pos + len > self.letters.len() {
            return Err(WordError::IndexOutOfRange {
                index: pos + len,
                strands: self.strands,
            });
        }
        let mut letters = Vec::with_capacity(self.letters.len() - len + replacement.len());
        letters.extend_from_slice(&self.letters[..pos]);
        letters.extend_from_slice(replacement);
        letters.extend_from_slice(&self.letters[pos + len..]);
        Word::new(self.strands, letters)
    }

    /// Does `factor` occur as a contiguous factor starting at `pos`?
    pub fn matches_at(&self, pos: usize, factor: &[Letter]) -> bool {
        pos + factor.len() <= self.letters.len()
            && self.letters[pos..pos + factor.len()] == *factor
    }

    pub fn closed(self) -> ClosedWord {
        ClosedWord { word: self }
    }
}

impl ClosedWord {
    pub fn new(word: Word) -> Self {
        ClosedWord { word }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Strand count of the closure, the `n` in `[w]_n`.
    pub fn closure_strands(&self) -> usize {
        self.word.strands
    }

    pub fn into_word(self) -> Word {
        self.word
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Display for ClosedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[ {} ]_{}", self.word, self.word.strands)
    }
}

/// Formats a word in canonical token form. `parse_word` round-trips it.
pub fn format_word(w: &Word) -> String {
    w.to_string()
}

pub fn format_closed(cw: &ClosedWord) -> String {
    cw.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Letter(Letter),
    One,
    Open,
    Close(usize),
}

fn lex(text: &str) -> Result<Vec<Token>, WordError> {
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        match ch {
            ' ' | '\t' => i += 1,
            '[' => {
                tokens.push(Token::Open);
                i += 1;
            }
            ']' => {
                i += 1;
                if i >= bytes.len() || bytes[i] as char != '_' {
                    return Err(WordError::MalformedClosure);
                }
                i += 1;
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(WordError::MalformedClosure);
                }
                let n: usize = text[start..i].parse().map_err(|_| WordError::MalformedClosure)?;
                tokens.push(Token::Close(n));
            }
            'a' | 'b' | 'c' | 'C' => {
                let kind = match ch {
                    'a' => Kind::A,
                    'b' => Kind::B,
                    'c' => Kind::C,
                    _ => Kind::CInv,
                };
                i += 1;
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(WordError::UnknownToken(ch.to_string()));
                }
                let index: usize =
                    text[start..i].parse().map_err(|_| WordError::UnknownToken(text[start..i].into()))?;
                if index == 0 {
                    return Err(WordError::ZeroIndex);
                }
                tokens.push(Token::Letter(Letter::new(kind, index)));
            }
            '1' => {
                tokens.push(Token::One);
                i += 1;
            }
            other => {
                let rest: String = text[i..]
                    .chars()
                    .take_while(|c| !c.is_whitespace())
                    .collect();
                let _ = other;
                return Err(WordError::UnknownToken(rest));
            }
        }
    }
    Ok(tokens)
}

fn letters_from_tokens(tokens: &[Token]) -> Result<Vec<Letter>, WordError> {
    if tokens.is_empty() {
        return Err(WordError::Empty);
    }
    if tokens.len() == 1 && tokens[0] == Token::One {
        return Ok(Vec::new());
    }
    let mut letters = Vec::with_capacity(tokens.len());
    for t in tokens {
        match t {
            Token::Letter(l) => letters.push(*l),
            Token::One => return Err(WordError::MisplacedOne),
            Token::Open => return Err(WordError::UnexpectedBracket('[')),
            Token::Close(_) => return Err(WordError::UnexpectedBracket(']')),
        }
    }
    Ok(letters)
}

/// Parses an open word over `n` strands.
pub fn parse_word(text: &str, n: usize) -> Result<Word, WordError> {
    let tokens = lex(text)?;
    let letters = letters_from_tokens(&tokens)?;
    Word::new(n, letters)
}

/// Parses a closed word `[ w ]_n`; the strand count is taken from the
/// closure suffix.
pub fn parse_closed(text: &str) -> Result<ClosedWord, WordError> {
    match parse_any(text, 0)? {
        Parsed::Closed(cw) => Ok(cw),
        Parsed::Open(_) => Err(WordError::MalformedClosure),
    }
}

/// Parses either form. Open input uses `n` as the strand count;
/// bracketed input `[ w ]_n` takes its strand count from the suffix.
pub fn parse_any(text: &str, n: usize) -> Result<Parsed, WordError> {
    let tokens = lex(text)?;
    if tokens.first() == Some(&Token::Open) {
        let close = match tokens.last() {
            Some(Token::Close(m)) => *m,
            _ => return Err(WordError::MalformedClosure),
        };
        let letters = letters_from_tokens(&tokens[1..tokens.len() - 1])?;
        let word = Word::new(close, letters)?;
        return Ok(Parsed::Closed(ClosedWord::new(word)));
    }
    Ok(Parsed::Open(parse_word(text, n)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic_word() {
        let w = parse_word("a1 b1", 2).unwrap();
        assert_eq!(w.letters(), &[Letter::a(1), Letter::b(1)]);
        assert_eq!(w.strands(), 2);
    }

    #[test]
    fn parse_closed_torus_word() {
        let cw = parse_closed("[ a1 b1 ]_2").unwrap();
        assert_eq!(cw.closure_strands(), 2);
        assert_eq!(cw.word().letters(), &[Letter::a(1), Letter::b(1)]);
        // compact spelling is accepted too
        assert_eq!(parse_closed("[a1 b1]_2").unwrap(), cw);
    }

    #[test]
    fn index_out_of_range() {
        assert_eq!(
            parse_word("c3", 3),
            Err(WordError::IndexOutOfRange { index: 3, strands: 3 })
        );
    }

    #[test]
    fn empty_word_formats_as_one() {
        let w = Word::identity(2).unwrap();
        assert_eq!(format_word(&w), "1");
        assert_eq!(parse_word("1", 2).unwrap(), w);
    }

    #[test]
    fn mixed_kinds_format() {
        let w = Word::new(3, vec![Letter::a(1), Letter::c(2), Letter::c_inv(2)]).unwrap();
        assert_eq!(format_word(&w), "a1 c2 C2");
    }

    #[test]
    fn closed_word_format() {
        let cw = parse_closed("[a1 b1]_2").unwrap();
        assert_eq!(format_closed(&cw), "[ a1 b1 ]_2");
        assert_eq!(parse_closed(&format_closed(&cw)).unwrap(), cw);
    }

    #[test]
    fn unknown_token() {
        assert!(matches!(parse_word("a1 x2", 3), Err(WordError::UnknownToken(_))));
        assert!(matches!(parse_word("a", 3), Err(WordError::UnknownToken(_))));
    }

    #[test]
    fn malformed_closure() {
        assert!(matches!(parse_any("[ a1 ]", 2), Err(WordError::MalformedClosure)));
        assert!(matches!(parse_any("[ a1 ]_x", 2), Err(WordError::MalformedClosure)));
    }

    #[test]
    fn identity_closure_parses() {
        let cw = parse_closed("[1]_1").unwrap();
        assert_eq!(cw.closure_strands(), 1);
        assert!(cw.word().is_empty());
        assert_eq!(format_closed(&cw), "[ 1 ]_1");
    }
}
