//! Garside normal forms in the two-generator Artin group
//! `⟨s, t | Π(s,t;m) = Π(t,s;m)⟩`.
//!
//! Atoms are `s` and `t`, the Garside element is `Δ = Π(s,t;m)`. Every element
//! is uniquely `Δ^p · x_1 ⋯ x_r` with each `x_i` a proper, nonempty simple
//! element (an alternating positive word shorter than `m`). The left-greedy
//! condition reduces to: `x_i` ends with the letter `x_{i+1}` starts with.

use super::{Letter, Word, WordError};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Letters are local: `0` is `s`, `1` is `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DihedralNormalForm {
    pub m: u32,
    pub s: usize,
    pub t: usize,
    pub delta_power: i64,
    pub factors: Vec<Vec<u8>>,
}

impl DihedralNormalForm {
    pub(crate) fn identity(m: u32, s: usize, t: usize) -> Self {
        DihedralNormalForm { m, s, t, delta_power: 0, factors: Vec::new() }
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Moves a `Δ` across all factors: `x Δ = Δ τ(x)`, where `τ` swaps the
    /// atoms for odd `m` and is trivial for even `m`.
    fn twist_factors(&mut self) {
        if self.m % 2 == 1 {
            for f in &mut self.factors {
                for x in f.iter_mut() {
                    *x = 1 - *x;
                }
            }
        }
    }

    /// Right multiplication by a local letter (`0` = `s`, `1` = `t`).
    pub(crate) fn push(&mut self, a: u8, inverse: bool) {
        if inverse {
            self.right_mul_inverse_atom(a);
        } else {
            self.right_mul_atom(a);
        }
    }

    fn right_mul_atom(&mut self, a: u8) {
        let m = self.m as usize;
        match self.factors.last_mut() {
            Some(last) if *last.last().unwrap() != a => {
                last.push(a);
                if last.len() == m {
                    self.factors.pop();
                    self.delta_power += 1;
                    self.twist_factors();
                }
            }
            _ => self.factors.push(vec![a]),
        }
    }

    /// `x⁻¹ = Δ⁻¹ · c(x)` where `c(x)` is `Δ` with its final `x` removed.
    fn right_mul_inverse_atom(&mut self, a: u8) {
        self.delta_power -= 1;
        self.twist_factors();
        let m = self.m as usize;
        // Δ written to end in `a` starts with `a` if m is odd, with the other atom if even
        let start = if m % 2 == 1 { a } else { 1 - a };
        for i in 0..m - 1 {
            let x = if i % 2 == 0 { start } else { 1 - start };
            self.right_mul_atom(x);
        }
    }

    /// Canonical word: `Π(s,t;m)^p` followed by the factors.
    pub fn to_word(&self) -> Word {
        let gens = [self.s, self.t];
        let m = self.m as usize;
        let mut letters = Vec::new();
        let delta: Vec<Letter> = (0..m).map(|i| Letter::pos(gens[i % 2])).collect();
        for _ in 0..self.delta_power.max(0) {
            letters.extend_from_slice(&delta);
        }
        for _ in 0..(-self.delta_power).max(0) {
            letters.extend(delta.iter().rev().map(|l| l.inv()));
        }
        for f in &self.factors {
            letters.extend(f.iter().map(|&x| Letter::pos(gens[x as usize])));
        }
        Word(letters)
    }

    pub fn render(&self, names: &[String]) -> String {
        let gens = [&names[self.s], &names[self.t]];
        let mut parts = vec![format!("D^{}", self.delta_power)];
        for f in &self.factors {
            parts.push(f.iter().map(|&x| gens[x as usize].as_str()).collect::<Vec<_>>().join(" "));
        }
        parts.join(" | ")
    }

    /// Checks the normal-form conditions.
    pub fn is_well_formed(&self) -> bool {
        let m = self.m as usize;
        self.factors.iter().all(|f| !f.is_empty() && f.len() < m && f.windows(2).all(|w| w[0] != w[1]))
            && self.factors.windows(2).all(|w| w[0].last() == w[1].first())
    }
}

impl fmt::Display for DihedralNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.delta_power)?;
        for x in &self.factors {
            write!(f, " | ")?;
            for (i, a) in x.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", if *a == 0 { "s" } else { "t" })?;
            }
        }
        Ok(())
    }
}

/// Left-greedy normal form of `w` in the dihedral Artin group on `s, t`
/// with label `m`. Two words are equal in the group iff their forms coincide.
pub fn dihedral_normal_form(m: u32, s: usize, t: usize, w: &Word) -> Result<DihedralNormalForm, WordError> {
    assert!(m >= 2, "edge label must be at least 2");
    let mut nf = DihedralNormalForm::identity(m, s, t);
    for l in w.letters() {
        let a = if l.generator == s {
            0
        } else if l.generator == t {
            1
        } else {
            return Err(WordError::ForeignGenerator(l.generator));
        };
        nf.push(a, l.inverse);
    }
    Ok(nf)
}
