//! Automorphisms `s ↦ g · π(s)^{±1} · g⁻¹` and classes in `Out(A_Γ)`.

use crate::graph::{graph_automorphisms, lcm, Permutation, PresentationGraph};
use crate::words::{free_reduce, Letter, Word, WordError};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AutError {
    #[error("malformed automorphism field {0:?}")]
    BadField(String),
    #[error("field {0} given twice")]
    DuplicateField(String),
    #[error("vertex {0} is mapped twice or hit twice")]
    NotBijective(String),
    #[error("permutation does not preserve labelled adjacency")]
    NotGraphAutomorphism,
    #[error("automorphisms act on graphs of different sizes ({0} and {1})")]
    GraphMismatch(usize, usize),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A diagram automorphism `(π, ε)`, standing for its class in `Out`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OuterClass {
    pub perm: Permutation,
    pub inverted: bool,
}

impl OuterClass {
    pub fn identity(n: usize) -> Self {
        OuterClass { perm: Permutation::identity(n), inverted: false }
    }

    /// Least `k ≥ 1` with `(π, ε)^k` trivial.
    pub fn order(&self) -> u64 {
        let k = self.perm.order();
        if self.inverted {
            lcm(k, 2)
        } else {
            k
        }
    }

    pub fn to_automorphism(&self) -> Automorphism {
        Automorphism { inner: Word::empty(), perm: self.perm.clone(), inverted: self.inverted }
    }

    pub fn render(&self, g: &PresentationGraph) -> String {
        self.to_automorphism().render(g)
    }
}

/// `s ↦ inner · π(s)^{(−1)^ε} · inner⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Automorphism {
    pub inner: Word,
    pub perm: Permutation,
    pub inverted: bool,
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism { inner: Word::empty(), perm: Permutation::identity(n), inverted: false }
    }

    pub fn inversion(n: usize) -> Self {
        Automorphism { inverted: true, ..Self::identity(n) }
    }

    pub fn conjugation(n: usize, g: Word) -> Self {
        Automorphism { inner: free_reduce(&g), ..Self::identity(n) }
    }

    pub fn diagram(perm: Permutation, inverted: bool) -> Self {
        Automorphism { inner: Word::empty(), perm, inverted }
    }

    /// Parses `inner=<word>; perm=<a->b,...>; inv=<0|1>`. Every field is
    /// optional and vertices missing from `perm` are fixed.
    pub fn parse(g: &PresentationGraph, text: &str) -> Result<Self, AutError> {
        let n = g.len();
        let (mut inner, mut perm, mut inv) = (None, None, None);
        for field in text.split(';').map(str::trim).filter(|f| !f.is_empty()) {
            let (key, value) = field.split_once('=').ok_or_else(|| AutError::BadField(field.to_string()))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "inner" if inner.is_none() => inner = Some(Word::parse(g, value)?),
                "perm" if perm.is_none() => perm = Some(parse_permutation(g, value)?),
                "inv" if inv.is_none() => {
                    inv = Some(match value {
                        "0" => false,
                        "1" => true,
                        _ => return Err(AutError::BadField(field.to_string())),
                    })
                }
                "inner" | "perm" | "inv" => return Err(AutError::DuplicateField(key.to_string())),
                _ => return Err(AutError::BadField(field.to_string())),
            }
        }
        let a = Automorphism {
            inner: free_reduce(&inner.unwrap_or_default()),
            perm: perm.unwrap_or_else(|| Permutation::identity(n)),
            inverted: inv.unwrap_or(false),
        };
        a.validate(g)?;
        Ok(a)
    }

    pub fn render(&self, g: &PresentationGraph) -> String {
        format!("inner={}; perm={}; inv={}", self.inner.render(g), self.perm.display(g), self.inverted as u8)
    }

    pub fn validate(&self, g: &PresentationGraph) -> Result<(), AutError> {
        let n = g.len();
        if self.perm.len() != n {
            return Err(AutError::GraphMismatch(self.perm.len(), n));
        }
        if let Some(l) = self.inner.letters().iter().find(|l| l.generator >= n) {
            return Err(WordError::UnknownGenerator(format!("#{}", l.generator)).into());
        }
        for a in 0..n {
            for b in a + 1..n {
                if g.label(a, b) != g.label(self.perm.apply(a), self.perm.apply(b)) {
                    return Err(AutError::NotGraphAutomorphism);
                }
            }
        }
        Ok(())
    }

    pub fn outer(&self) -> OuterClass {
        OuterClass { perm: self.perm.clone(), inverted: self.inverted }
    }

    pub fn is_diagram(&self) -> bool {
        self.inner.is_empty()
    }

    fn diagram_letter(&self, l: Letter) -> Letter {
        Letter { generator: self.perm.apply(l.generator), inverse: l.inverse ^ self.inverted }
    }

    /// Image under the diagram part only.
    pub fn apply_diagram(&self, w: &Word) -> Word {
        free_reduce(&Word(w.letters().iter().map(|&l| self.diagram_letter(l)).collect()))
    }

    /// Letterwise image, freely reduced.
    pub fn apply(&self, w: &Word) -> Word {
        let d = self.apply_diagram(w);
        if self.inner.is_empty() {
            return d;
        }
        self.inner.concat(&d).mul(&self.inner.inverse())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism, AutError> {
        if self.perm.len() != other.perm.len() {
            return Err(AutError::GraphMismatch(self.perm.len(), other.perm.len()));
        }
        Ok(Automorphism {
            inner: self.inner.mul(&self.apply_diagram(&other.inner)),
            perm: self.perm.compose(&other.perm),
            inverted: self.inverted ^ other.inverted,
        })
    }

    pub fn invert(&self) -> Automorphism {
        let d = Automorphism::diagram(self.perm.inverse(), self.inverted);
        Automorphism { inner: d.apply_diagram(&self.inner.inverse()), ..d }
    }

    /// `k`-fold composite, `k ≥ 0`.
    pub fn power(&self, k: u64) -> Automorphism {
        let mut out = Automorphism::identity(self.perm.len());
        for _ in 0..k {
            out = self.compose(&out).expect("same size");
        }
        out
    }
}

impl fmt::Display for OuterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm={:?}; inv={}", self.perm.images(), self.inverted as u8)
    }
}

fn parse_permutation(g: &PresentationGraph, text: &str) -> Result<Permutation, AutError> {
    let n = g.len();
    let mut images: Vec<Option<usize>> = vec![None; n];
    for pair in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (a, b) = pair.split_once("->").ok_or_else(|| AutError::BadField(pair.to_string()))?;
        let (a, b) = (a.trim(), b.trim());
        let ia = g.index_of(a).ok_or_else(|| WordError::UnknownGenerator(a.to_string()))?;
        let ib = g.index_of(b).ok_or_else(|| WordError::UnknownGenerator(b.to_string()))?;
        if images[ia].is_some() {
            return Err(AutError::NotBijective(a.to_string()));
        }
        images[ia] = Some(ib);
    }
    // unspecified vertices are fixed
    let images: Vec<usize> = images.iter().enumerate().map(|(i, x)| x.unwrap_or(i)).collect();
    let mut hit = vec![false; n];
    for (i, &x) in images.iter().enumerate() {
        if hit[x] {
            return Err(AutError::NotBijective(g.name(i).to_string()));
        }
        hit[x] = true;
    }
    Ok(Permutation::from_images(images))
}

/// Every `(π, ε)` with `π` a labelled graph automorphism: identity first,
/// each permutation followed by its inverted twin.
pub fn outer_representatives(g: &PresentationGraph) -> Vec<OuterClass> {
    graph_automorphisms(g).into_iter().flat_map(|perm| [false, true].map(|inverted| OuterClass { perm: perm.clone(), inverted })).collect()
}

pub fn outer_order(c: &OuterClass) -> u64 {
    c.order()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge() -> PresentationGraph {
        PresentationGraph::new(&["s", "t"], &[("s", "t", 3)]).unwrap()
    }

    fn triangle(a: i64, b: i64, c: i64) -> PresentationGraph {
        PresentationGraph::new(&["a", "b", "c"], &[("a", "b", a), ("b", "c", b), ("a", "c", c)]).unwrap()
    }

    fn w(g: &PresentationGraph, s: &str) -> Word {
        Word::parse(g, s).unwrap()
    }

    #[test]
    fn apply_examples() {
        let g = edge();
        assert_eq!(Automorphism::inversion(2).apply(&w(&g, "s t")), w(&g, "s^-1 t^-1"));
        assert_eq!(Automorphism::identity(2).apply(&w(&g, "s t^-1 s")), w(&g, "s t^-1 s"));
        assert_eq!(Automorphism::conjugation(2, w(&g, "s")).apply(&w(&g, "t")), w(&g, "s t s^-1"));
    }

    #[test]
    fn compose_examples() {
        let g = edge();
        let i = Automorphism::inversion(2);
        assert_eq!(i.compose(&i).unwrap(), Automorphism::identity(2));
        let cs = Automorphism::conjugation(2, w(&g, "s"));
        let ct = Automorphism::conjugation(2, w(&g, "t"));
        assert_eq!(cs.compose(&ct).unwrap(), Automorphism::conjugation(2, w(&g, "s t")));
        let t = triangle(3, 3, 3);
        let rot = Automorphism::parse(&t, "perm=a->b,b->c,c->a").unwrap();
        assert_eq!(rot.power(3), Automorphism::identity(3));
    }

    #[test]
    fn invert_examples() {
        let g = edge();
        assert_eq!(Automorphism::inversion(2).invert(), Automorphism::inversion(2));
        let c = Automorphism::conjugation(2, w(&g, "s t"));
        assert_eq!(c.invert(), Automorphism::conjugation(2, w(&g, "t^-1 s^-1")));
        let t = triangle(3, 3, 3);
        let rot = Automorphism::parse(&t, "perm=a->b,b->c,c->a").unwrap();
        assert_eq!(rot.invert().perm, rot.perm.inverse());
        let mixed = Automorphism::parse(&t, "inner=a b^-1; perm=a->b,b->c,c->a; inv=1").unwrap();
        let x = w(&t, "a c b^-1 a");
        assert_eq!(mixed.invert().apply(&mixed.apply(&x)), x);
        assert_eq!(mixed.compose(&mixed.invert()).unwrap(), Automorphism::identity(3));
    }

    #[test]
    fn parse_and_render() {
        let g = edge();
        let a = Automorphism::parse(&g, "inner=s; perm=s->t,t->s; inv=1").unwrap();
        assert_eq!(a.render(&g), "inner=s; perm=s->t,t->s; inv=1");
        assert_eq!(Automorphism::parse(&g, &a.render(&g)).unwrap(), a);
        assert_eq!(Automorphism::parse(&g, "").unwrap(), Automorphism::identity(2));
        assert_eq!(Automorphism::parse(&g, "inv=1").unwrap(), Automorphism::inversion(2));
        assert!(matches!(Automorphism::parse(&g, "perm=s->t"), Err(AutError::NotBijective(_))));
        assert!(matches!(Automorphism::parse(&g, "inv=2"), Err(AutError::BadField(_))));
        let t = triangle(3, 4, 5);
        assert_eq!(Automorphism::parse(&t, "perm=a->b,b->a"), Err(AutError::NotGraphAutomorphism));
    }

    #[test]
    fn outer_counts() {
        assert_eq!(outer_representatives(&triangle(3, 4, 5)).len(), 2);
        assert_eq!(outer_representatives(&triangle(3, 3, 3)).len(), 12);
        let reps = outer_representatives(&edge());
        assert_eq!(reps.len(), 4);
        assert_eq!(reps[0], OuterClass::identity(2));
    }

    #[test]
    fn outer_orders() {
        let t = triangle(3, 3, 3);
        let rot = Automorphism::parse(&t, "perm=a->b,b->c,c->a").unwrap().outer();
        assert_eq!(outer_order(&OuterClass { inverted: true, ..OuterClass::identity(3) }), 2);
        assert_eq!(outer_order(&rot), 3);
        assert_eq!(outer_order(&OuterClass { inverted: true, ..rot }), 6);
    }
}
