use super::coxeter::coxeter_reduce_capped;
use super::dihedral::DihedralNormalForm;
use super::search::Rewriter;
use super::{free_reduce, Abelianization, Letter, PermQuotient, SearchReport, Word, WordError};
use crate::graph::PresentationGraph;
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

/// Resource limits for the bounded parts of the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Extra letters allowed above the longer input during rewriting search.
    pub padding: usize,
    /// Words visited per rewriting search.
    pub nodes: usize,
    /// Witness candidates tried per twisted query.
    pub candidates: usize,
    /// Longest enumerated witness.
    pub witness_length: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { padding: 4, nodes: 1_000_000, candidates: 20_000, witness_length: 6 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum EqualProof {
    /// Identical after free reduction.
    FreeReduction,
    /// Same normal form in a free product of vertex and edge groups.
    NormalForm { form: String },
    /// Each word follows from the previous by one relator application.
    Rewrite { trace: Vec<Word> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Separation {
    NormalForm {
        left: String,
        right: String,
    },
    Abelianization {
        left: Vec<i64>,
        right: Vec<i64>,
    },
    /// `images` define a homomorphism to `S_degree` telling the words apart.
    PermutationQuotient {
        degree: usize,
        images: Vec<Vec<u8>>,
        left: Vec<u8>,
        right: Vec<u8>,
    },
    /// Reduced word of the image of `u v⁻¹` in the Coxeter group.
    Coxeter {
        reduced: Word,
    },
}

impl Separation {
    pub fn name(&self) -> &'static str {
        match self {
            Separation::NormalForm { .. } => "normal-form",
            Separation::Abelianization { .. } => "abelianization",
            Separation::PermutationQuotient { .. } => "permutation-quotient",
            Separation::Coxeter { .. } => "coxeter",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Certainty {
    Equal(EqualProof),
    NotEqual(Separation),
    Unknown(SearchReport),
}

impl Certainty {
    pub fn is_equal(&self) -> bool {
        matches!(self, Certainty::Equal(_))
    }

    pub fn is_not_equal(&self) -> bool {
        matches!(self, Certainty::NotEqual(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Certainty::Unknown(_))
    }
}

/// One factor of the free-product normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Syllable {
    Vertex(usize, i64),
    Edge(u32, usize, usize, i64, Vec<Vec<u8>>),
}

enum Factor {
    Vertex(usize),
    Edge(usize, usize, u32),
}

/// Cheap invariants: equal elements have equal signatures.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Signature {
    pub abelian: Vec<i64>,
    pub perms: Vec<Vec<u8>>,
    pub coxeter: Option<Vec<usize>>,
}

const COXETER_CAP: usize = 20_000;

/// An Artin group with lazily computed auxiliary data.
pub struct ArtinGroup {
    graph: PresentationGraph,
    abelian: Abelianization,
    quotients: OnceLock<Vec<PermQuotient>>,
    rewriter: OnceLock<Rewriter>,
}

impl ArtinGroup {
    pub fn new(graph: PresentationGraph) -> Self {
        let abelian = Abelianization::new(&graph);
        ArtinGroup { graph, abelian, quotients: OnceLock::new(), rewriter: OnceLock::new() }
    }

    pub fn graph(&self) -> &PresentationGraph {
        &self.graph
    }

    pub fn abelianization(&self) -> &Abelianization {
        &self.abelian
    }

    pub fn abelianize(&self, w: &Word) -> Vec<i64> {
        self.abelian.image(w)
    }

    pub fn quotients(&self) -> &[PermQuotient] {
        self.quotients.get_or_init(|| PermQuotient::search(&self.graph, 5, 48, 4_000_000))
    }

    pub(crate) fn rewriter(&self) -> &Rewriter {
        self.rewriter.get_or_init(|| Rewriter::new(&self.graph))
    }

    pub fn check_word(&self, w: &Word) -> Result<(), WordError> {
        match w.letters().iter().find(|l| l.generator >= self.graph.len()) {
            Some(l) => Err(WordError::UnknownGenerator(format!("#{}", l.generator))),
            None => Ok(()),
        }
    }

    /// Components of the induced subgraph on `support`, if all have at most
    /// two vertices. Indexed by generator.
    fn factors(&self, support: &[usize]) -> Option<Vec<Option<(usize, Factor)>>> {
        let mut out: Vec<Option<(usize, Factor)>> = (0..self.graph.len()).map(|_| None).collect();
        for &v in support {
            let nbrs: Vec<usize> = support.iter().copied().filter(|&x| self.graph.adjacent(v, x)).collect();
            match nbrs.as_slice() {
                [] => out[v] = Some((v, Factor::Vertex(v))),
                [x] => {
                    let far: usize = support.iter().filter(|&&y| self.graph.adjacent(*x, y)).count();
                    if far != 1 {
                        return None;
                    }
                    let (s, t) = (v.min(*x), v.max(*x));
                    out[v] = Some((s, Factor::Edge(s, t, self.graph.label(s, t).unwrap())));
                }
                _ => return None,
            }
        }
        Some(out)
    }

    fn syllables(&self, w: &Word, factors: &[Option<(usize, Factor)>]) -> Vec<(usize, Syllable)> {
        let mut stack: Vec<(usize, Syllable)> = Vec::new();
        for &l in w.letters() {
            let (comp, factor) = factors[l.generator].as_ref().expect("letter outside support");
            if stack.last().map(|x| x.0) != Some(*comp) {
                let fresh = match factor {
                    Factor::Vertex(v) => Syllable::Vertex(*v, 0),
                    Factor::Edge(s, t, m) => Syllable::Edge(*m, *s, *t, 0, Vec::new()),
                };
                stack.push((*comp, fresh));
            }
            let top = &mut stack.last_mut().unwrap().1;
            let trivial = match top {
                Syllable::Vertex(_, e) => {
                    *e += l.exponent();
                    *e == 0
                }
                Syllable::Edge(m, s, t, p, f) => {
                    let mut nf = DihedralNormalForm { m: *m, s: *s, t: *t, delta_power: *p, factors: std::mem::take(f) };
                    nf.push((l.generator == *t) as u8, l.inverse);
                    *p = nf.delta_power;
                    *f = nf.factors;
                    *p == 0 && f.is_empty()
                }
            };
            if trivial {
                stack.pop();
            }
        }
        stack
    }

    fn render_syllables(&self, syl: &[(usize, Syllable)]) -> String {
        if syl.is_empty() {
            return "1".to_string();
        }
        let names = self.graph.names();
        let parts: Vec<String> = syl
            .iter()
            .map(|(_, s)| match s {
                Syllable::Vertex(v, e) => format!("{}^{}", names[*v], e),
                Syllable::Edge(m, s, t, p, f) => {
                    let nf = DihedralNormalForm { m: *m, s: *s, t: *t, delta_power: *p, factors: f.clone() };
                    format!("[{}]", nf.render(names))
                }
            })
            .collect();
        parts.join(" * ")
    }

    /// Exact canonical form when every component of `Γ` has at most two
    /// vertices.
    pub(crate) fn exact_key(&self, w: &Word) -> Option<Vec<Syllable>> {
        let all: Vec<usize> = (0..self.graph.len()).collect();
        let factors = self.factors(&all)?;
        Some(self.syllables(w, &factors).into_iter().map(|x| x.1).collect())
    }

    pub(crate) fn signature(&self, w: &Word) -> Signature {
        Signature {
            abelian: self.abelian.image(w),
            perms: self.quotients().iter().map(|q| q.image(w)).collect(),
            coxeter: coxeter_reduce_capped(&self.graph, w, COXETER_CAP),
        }
    }

    /// Sound invariants that tell `u` and `v` apart, without search.
    pub fn separate(&self, u: &Word, v: &Word) -> Option<Separation> {
        let (left, right) = (self.abelian.image(u), self.abelian.image(v));
        if left != right {
            return Some(Separation::Abelianization { left, right });
        }
        let w = u.mul(&v.inverse());
        if let Some(r) = coxeter_reduce_capped(&self.graph, &w, COXETER_CAP) {
            if !r.is_empty() {
                return Some(Separation::Coxeter { reduced: Word(r.into_iter().map(Letter::pos).collect()) });
            }
        }
        for q in self.quotients() {
            let (left, right) = (q.image(u), q.image(v));
            if left != right {
                return Some(Separation::PermutationQuotient { degree: q.degree, images: q.images.clone(), left, right });
            }
        }
        None
    }

    /// Decides `u = v` in the group where the certified sub-engines or the
    /// bounded search allow it.
    pub fn equal_words(&self, u: &Word, v: &Word, budget: &Budget) -> Result<Certainty, WordError> {
        self.check_word(u)?;
        self.check_word(v)?;
        let (ru, rv) = (free_reduce(u), free_reduce(v));
        if ru == rv {
            return Ok(Certainty::Equal(EqualProof::FreeReduction));
        }
        let mut support = ru.support();
        support.extend(rv.support());
        support.sort_unstable();
        support.dedup();
        if let Some(factors) = self.factors(&support) {
            let (a, b) = (self.syllables(&ru, &factors), self.syllables(&rv, &factors));
            return Ok(if a == b {
                Certainty::Equal(EqualProof::NormalForm { form: self.render_syllables(&a) })
            } else {
                Certainty::NotEqual(Separation::NormalForm { left: self.render_syllables(&a), right: self.render_syllables(&b) })
            });
        }
        if let Some(sep) = self.separate(&ru, &rv) {
            return Ok(Certainty::NotEqual(sep));
        }
        let max_len = ru.len().max(rv.len()) + budget.padding;
        Ok(match self.rewriter().connect(&ru.codes(), &rv.codes(), max_len, budget.nodes) {
            Ok(path) => Certainty::Equal(EqualProof::Rewrite { trace: path.iter().map(|c| Word::from_codes(c)).collect() }),
            Err(report) => Certainty::Unknown(report),
        })
    }

    /// Re-derives a definite verdict from its certificate alone.
    pub fn recheck(&self, u: &Word, v: &Word, verdict: &Certainty) -> bool {
        let (ru, rv) = (free_reduce(u), free_reduce(v));
        match verdict {
            Certainty::Unknown(_) => true,
            Certainty::Equal(EqualProof::FreeReduction) => ru == rv,
            Certainty::Equal(EqualProof::Rewrite { trace }) => {
                let r = self.rewriter();
                trace.first() == Some(&ru) && trace.last() == Some(&rv) && trace.windows(2).all(|w| r.is_step(&w[0].codes(), &w[1].codes()))
            }
            Certainty::Equal(EqualProof::NormalForm { .. }) | Certainty::NotEqual(Separation::NormalForm { .. }) => {
                let mut support = ru.support();
                support.extend(rv.support());
                support.sort_unstable();
                support.dedup();
                match self.factors(&support) {
                    Some(f) => (self.syllables(&ru, &f) == self.syllables(&rv, &f)) == verdict.is_equal(),
                    None => false,
                }
            }
            Certainty::NotEqual(Separation::Abelianization { .. }) => self.abelian.image(u) != self.abelian.image(v),
            Certainty::NotEqual(Separation::Coxeter { .. }) => !super::coxeter_trivial(&self.graph, &u.mul(&v.inverse())),
            Certainty::NotEqual(Separation::PermutationQuotient { degree, images, .. }) => {
                let q = PermQuotient { degree: *degree, images: images.clone() };
                q.is_homomorphism(&self.graph) && q.image(u) != q.image(v)
            }
        }
    }
}
