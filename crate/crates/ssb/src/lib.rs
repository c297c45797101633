//! Computational toolkit for the surface singular braid monoid `SSB_n`.
//!
//! `SSB_n` is the monoid of marked graph diagrams in braid form on `n`
//! strands, generated by `a_i`, `b_i` (marked vertices) and `c_i`,
//! `c_i^{-1}` (classical crossings) for `i = 1, ..., n-1`. This crate
//! provides:
//!
//! * [`braidword`] — generator letters, free-monoid words and the closed
//!   word notation `[w]_n`, with parsing and printing.
//! * [`relations`] — the three relation families (`A`, `R`, `m`) of the
//!   monoid, single-step rewriting, replayable derivation scripts,
//!   bounded equality search and the translation onto the reduced
//!   generating set `{a, b, c_i}`.
//! * [`diagram`] — closure of a word into a marked graph diagram and its
//!   combinatorial invariants: smoothings, Euler characteristic,
//!   orientability, link group presentation and Fox colorings.
//! * [`matrep`] — exact-arithmetic matrix representations over the
//!   rationals or a prime field, relation checking, the idempotent
//!   normal form and the rank-one collapse certificate.
//! * [`certify`] — a symbolic polynomial constraint engine that replays
//!   the case analysis showing that `SSB_n` (`n >= 3`) has no faithful
//!   three-dimensional matrix representation.
//! * [`catalog`] — the table of closed-braid formulations of small
//!   knotted surfaces, the twist-spun encoder and a whole-table
//!   verification sweep.

pub mod braidword;
pub mod catalog;
pub mod certify;
pub mod diagram;
pub mod matrep;
pub mod relations;
pub mod util;

pub use braidword::{ClosedWord, Kind, Letter, Word};
