//! Words over the standard generators and the word-problem engine.

mod abelian;
mod coxeter;
mod dihedral;
mod engine;
mod quotient;
mod search;

pub use abelian::Abelianization;
pub use coxeter::{coxeter_reduce, coxeter_trivial};
pub use dihedral::{dihedral_normal_form, DihedralNormalForm};
pub use engine::{ArtinGroup, Budget, Certainty, EqualProof, Separation};
pub(crate) use engine::{Signature, Syllable};
pub use quotient::PermQuotient;
pub use search::SearchReport;

use crate::graph::{is_identifier, PresentationGraph};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("malformed token {0:?}")]
    BadToken(String),
    #[error("alternating word needs at least one letter")]
    EmptyAlternation,
    #[error("alternating word needs two distinct generators")]
    SameGenerator,
    #[error("generator #{0} is not one of the two edge generators")]
    ForeignGenerator(usize),
}

/// A generator or its inverse. Ordered `s < s^-1 < t < t^-1` following the
/// graph's vertex order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }

    pub fn neg(generator: usize) -> Self {
        Letter { generator, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub(crate) fn code(self) -> u16 {
        (self.generator as u16) << 1 | self.inverse as u16
    }

    pub(crate) fn from_code(c: u16) -> Self {
        Letter { generator: (c >> 1) as usize, inverse: c & 1 == 1 }
    }
}

/// A word in the generators and their inverses. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    /// Parses whitespace-separated tokens `name` or `name^-1`.
    pub fn parse(g: &PresentationGraph, text: &str) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (name, inverse) = match token.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (token, false),
            };
            if !is_identifier(name) {
                return Err(WordError::BadToken(token.to_string()));
            }
            let generator = g.index_of(name).ok_or_else(|| WordError::UnknownGenerator(name.to_string()))?;
            letters.push(Letter { generator, inverse });
        }
        Ok(Word(letters))
    }

    pub fn display<'a>(&'a self, g: &'a PresentationGraph) -> WordDisplay<'a> {
        WordDisplay { word: self, names: g.names() }
    }

    /// Renders with the graph's vertex names.
    pub fn render(&self, g: &PresentationGraph) -> String {
        self.display(g).to_string()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Concatenation followed by free reduction.
    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        free_reduce(&Word(out))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    /// Generators occurring in the word, as a sorted list.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.0.iter().map(|l| l.generator).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|l| l.exponent()).sum()
    }

    /// Shortlex order: length first, then letters.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }

    pub(crate) fn codes(&self) -> Vec<u16> {
        self.0.iter().map(|l| l.code()).collect()
    }

    pub(crate) fn from_codes(codes: &[u16]) -> Word {
        Word(codes.iter().map(|&c| Letter::from_code(c)).collect())
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&self.names[l.generator])?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// The alternating word `x y x y ...` with `k` letters.
pub fn pi_word(x: usize, y: usize, k: usize) -> Result<Word, WordError> {
    if k < 1 {
        return Err(WordError::EmptyAlternation);
    }
    if x == y {
        return Err(WordError::SameGenerator);
    }
    Ok(Word((0..k).map(|i| Letter::pos(if i % 2 == 0 { x } else { y })).collect()))
}

pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in &w.0 {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Word(out)
}

pub(crate) fn free_reduce_codes(w: &[u16]) -> Vec<u16> {
    let mut out: Vec<u16> = Vec::with_capacity(w.len());
    for &c in w {
        if out.last() == Some(&(c ^ 1)) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out
}

/// Splits a word as `conjugator · core · conjugator⁻¹` (freely) with a
/// cyclically reduced core. The word is freely reduced first.
pub fn cyclic_reduce(w: &Word) -> (Word, Word) {
    let r = free_reduce(w);
    let mut lo = 0;
    let mut hi = r.len();
    while hi - lo >= 2 && r.0[lo] == r.0[hi - 1].inv() {
        lo += 1;
        hi -= 1;
    }
    (Word(r.0[lo..hi].to_vec()), Word(r.0[..lo].to_vec()))
}

/// All freely reduced words of exactly `len` letters over `n` generators, in
/// lexicographic letter order.
pub fn reduced_words_of_length(n: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * (2 * n).saturating_sub(1).max(1));
        for w in &out {
            for g in 0..n {
                for inverse in [false, true] {
                    let l = Letter { generator: g, inverse };
                    if w.last() == Some(&l.inv()) {
                        continue;
                    }
                    let mut v: Vec<Letter> = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        out = next;
    }
    out.into_iter().map(Word).collect()
}
