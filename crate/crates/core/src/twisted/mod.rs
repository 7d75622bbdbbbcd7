//! Twisted conjugacy: is there `z` with `u = φ(z) v z⁻¹`?

mod certificate;
mod extension;

pub use certificate::{recheck_certificate, twisted_ab_certificate, twisted_ab_matrix, twisted_quotient_certificate, TwistedCertificate};
pub use extension::{build_extension, ExtensionPresentation};

use crate::automorphism::{Automorphism, OuterClass};
use crate::graph::{eligibility, Route};
use crate::words::{cyclic_reduce, free_reduce, reduced_words_of_length, ArtinGroup, Budget, Certainty, Word, WordError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TwistedError {
    #[error("graph is not covered by the solvability theorem: {0}")]
    IneligibleGraph(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedQuery {
    pub phi: Automorphism,
    pub u: Word,
    pub v: Word,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub candidates: usize,
    pub max_length: usize,
    /// Candidates whose check ended without a verdict.
    pub unresolved: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "UPPERCASE")]
pub enum Verdict {
    Yes { witness: Word },
    No { certificate: TwistedCertificate },
    Unknown { report: WitnessReport },
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No { .. })
    }
}

/// Moves the inner part of `φ = conj_g ∘ ψ` onto the words: the result has
/// the same witnesses.
pub fn strip_inner(q: &TwistedQuery) -> TwistedQuery {
    let g_inv = q.phi.inner.inverse();
    TwistedQuery { phi: Automorphism::diagram(q.phi.perm.clone(), q.phi.inverted), u: g_inv.mul(&q.u), v: g_inv.mul(&q.v) }
}

/// `u` against `φ(z) v z⁻¹`.
pub fn verify_witness(
    group: &ArtinGroup,
    phi: &Automorphism,
    u: &Word,
    v: &Word,
    z: &Word,
    budget: &Budget,
) -> Result<Certainty, WordError> {
    let rhs = phi.apply(z).concat(v).mul(&z.inverse());
    group.equal_words(u, &rhs, budget)
}

/// Witness candidates: the empty word, then words read off `u` and `v`,
/// then shortlex order. No repeats.
fn candidates(group: &ArtinGroup, psi: &Automorphism, u: &Word, v: &Word, budget: &Budget) -> Vec<Word> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut push = |w: Word, out: &mut Vec<Word>| {
        let w = free_reduce(&w);
        if out.len() < budget.candidates && seen.insert(w.clone()) {
            out.push(w);
        }
    };
    push(Word::empty(), &mut out);
    let psi_inv = psi.invert();
    for x in [u, v] {
        let (core, conj) = cyclic_reduce(x);
        let mut sources = vec![x.clone()];
        let n = core.len();
        for i in 1..n {
            let rot = Word([&core.0[i..], &core.0[..i]].concat());
            sources.push(conj.concat(&rot).mul(&conj.inverse()));
        }
        for s in &sources {
            for k in 1..=s.len() {
                let suffix = Word(s.0[s.len() - k..].to_vec());
                let prefix = Word(s.0[..k].to_vec());
                push(suffix.inverse(), &mut out);
                push(psi_inv.apply(&prefix), &mut out);
            }
        }
    }
    let n = group.graph().len();
    // free cancellation against v can eat the last letters of z
    let short: Vec<Word> = (1..=2).flat_map(|l| reduced_words_of_length(n, l)).collect();
    for x in [u, v] {
        for k in 1..=x.len() {
            let head = psi_inv.apply(&Word(x.0[..k].to_vec()));
            let tail = Word(x.0[x.len() - k..].to_vec()).inverse();
            for w in &short {
                push(head.concat(w), &mut out);
                push(w.concat(&tail), &mut out);
            }
        }
    }
    for len in 1..=budget.witness_length {
        if out.len() >= budget.candidates {
            break;
        }
        for w in reduced_words_of_length(n, len) {
            push(w, &mut out);
        }
    }
    out
}

/// The twisted conjugacy pipeline on a diagram-only query, without the
/// eligibility gate.
fn decide(group: &ArtinGroup, psi: &Automorphism, u: &Word, v: &Word, budget: &Budget) -> Verdict {
    let outer = psi.outer();
    if let Some(certificate) = twisted_ab_certificate(group, &outer, u, v) {
        return Verdict::No { certificate };
    }
    let cands = candidates(group, psi, u, v, budget);
    let max_length = cands.iter().map(Word::len).max().unwrap_or(0);
    let target_ab = group.abelianize(u);
    // a cheap pass over every candidate first; only the undecided ones get
    // the full rewriting budget, and only if no finite quotient says No
    let quick = Budget { nodes: budget.nodes.min(QUICK_NODES), ..*budget };
    let (witness, open) = scan(group, psi, u, v, &cands, &target_ab, &quick);
    if let Some(z) = witness {
        return Verdict::Yes { witness: z };
    }
    if let Some(certificate) = twisted_quotient_certificate(group, &outer, u, v) {
        return Verdict::No { certificate };
    }
    let mut unresolved = open.len();
    if quick.nodes < budget.nodes {
        let (witness, still) = scan(group, psi, u, v, &open, &target_ab, budget);
        if let Some(z) = witness {
            return Verdict::Yes { witness: z };
        }
        unresolved = still.len();
    }
    Verdict::Unknown { report: WitnessReport { candidates: cands.len(), max_length, unresolved } }
}

/// Rewriting nodes per candidate in the first pass of the witness search.
const QUICK_NODES: usize = 20_000;

/// First verifying candidate in order, or the candidates left undecided.
/// Chunks keep the answer independent of scheduling.
fn scan(
    group: &ArtinGroup,
    psi: &Automorphism,
    u: &Word,
    v: &Word,
    cands: &[Word],
    target_ab: &[i64],
    budget: &Budget,
) -> (Option<Word>, Vec<Word>) {
    let mut open = Vec::new();
    for chunk in cands.chunks(256) {
        let checks: Vec<Option<Certainty>> = chunk
            .par_iter()
            .map(|z| {
                let rhs = psi.apply(z).concat(v).mul(&z.inverse());
                if group.abelianize(&rhs) != target_ab {
                    return None;
                }
                group.equal_words(u, &rhs, budget).ok()
            })
            .collect();
        if let Some(i) = checks.iter().position(|c| matches!(c, Some(c) if c.is_equal())) {
            return (Some(chunk[i].clone()), open);
        }
        open.extend(chunk.iter().zip(&checks).filter(|(_, c)| matches!(c, Some(c) if c.is_unknown())).map(|(z, _)| z.clone()));
    }
    (None, open)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TcpOutcome {
    pub route: Route,
    pub stripped: TwistedQuery,
    pub verdict: Verdict,
}

/// Decides `u ~_φ v` on eligible graphs (or any graph with `assume`).
pub fn tcp(group: &ArtinGroup, q: &TwistedQuery, budget: &Budget, assume_out_generated: bool) -> Result<TcpOutcome, TwistedError> {
    group.check_word(&q.u)?;
    group.check_word(&q.v)?;
    group.check_word(&q.phi.inner)?;
    let report = eligibility(group.graph(), assume_out_generated);
    if !report.route.is_eligible() {
        return Err(TwistedError::IneligibleGraph(report.failures.join("; ")));
    }
    let stripped = strip_inner(q);
    let verdict = decide(group, &stripped.phi, &stripped.u, &stripped.v, budget);
    Ok(TcpOutcome { route: report.route, stripped, verdict })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "UPPERCASE")]
pub enum OrbitVerdict {
    /// `ψ(u) = witness · v · witness⁻¹` for `ψ = reps[class]`.
    Yes {
        class: usize,
        witness: Word,
    },
    No {
        certificates: Vec<TwistedCertificate>,
    },
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitOutcome {
    pub verdict: OrbitVerdict,
    pub per_class: Vec<Verdict>,
}

/// Is `v` conjugate to `ψ(u)` for some `ψ` in `reps`?
pub fn orbit_decide(group: &ArtinGroup, u: &Word, v: &Word, reps: &[OuterClass], budget: &Budget) -> Result<OrbitOutcome, TwistedError> {
    group.check_word(u)?;
    group.check_word(v)?;
    let id = Automorphism::identity(group.graph().len());
    let mut per_class = Vec::new();
    for c in reps {
        let image = c.to_automorphism().apply(u);
        let verdict = decide(group, &id, &image, v, budget);
        let yes = verdict.is_yes();
        per_class.push(verdict);
        if yes {
            break;
        }
    }
    let verdict = if let Some(i) = per_class.iter().position(Verdict::is_yes) {
        let Verdict::Yes { witness } = &per_class[i] else { unreachable!() };
        OrbitVerdict::Yes { class: i, witness: witness.clone() }
    } else if per_class.iter().all(Verdict::is_no) {
        let certificates = per_class
            .iter()
            .map(|v| match v {
                Verdict::No { certificate } => certificate.clone(),
                _ => unreachable!(),
            })
            .collect();
        OrbitVerdict::No { certificates }
    } else {
        OrbitVerdict::Unknown
    };
    Ok(OrbitOutcome { verdict, per_class })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::outer_representatives;
    use crate::graph::PresentationGraph;

    fn odd_triangle() -> ArtinGroup {
        ArtinGroup::new(PresentationGraph::new(&["a", "b", "c"], &[("a", "b", 3), ("b", "c", 3), ("a", "c", 3)]).unwrap())
    }

    fn w(g: &ArtinGroup, s: &str) -> Word {
        Word::parse(g.graph(), s).unwrap()
    }

    #[test]
    fn strip_inner_examples() {
        let g = ArtinGroup::new(PresentationGraph::new(&["s", "t"], &[("s", "t", 3)]).unwrap());
        let phi = Automorphism::parse(g.graph(), "inner=s; inv=1").unwrap();
        let q = TwistedQuery { phi, u: w(&g, "s"), v: w(&g, "s") };
        let s = strip_inner(&q);
        assert_eq!(s.phi, Automorphism::inversion(2));
        assert_eq!((s.u, s.v), (Word::empty(), Word::empty()));
        let diag = TwistedQuery { phi: Automorphism::inversion(2), u: w(&g, "s t"), v: w(&g, "t") };
        assert_eq!(strip_inner(&diag), diag);
    }

    #[test]
    fn trivial_yes() {
        let g = odd_triangle();
        let q = TwistedQuery { phi: Automorphism::identity(3), u: w(&g, "a b^-1 c"), v: w(&g, "a b^-1 c") };
        let out = tcp(&g, &q, &Budget::default(), false).unwrap();
        assert_eq!(out.verdict, Verdict::Yes { witness: Word::empty() });
    }

    #[test]
    fn inversion_parity_no() {
        let g = odd_triangle();
        let q = TwistedQuery { phi: Automorphism::inversion(3), u: w(&g, "a"), v: Word::empty() };
        let out = tcp(&g, &q, &Budget::default(), false).unwrap();
        assert!(matches!(out.verdict, Verdict::No { certificate: TwistedCertificate::Abelianization { .. } }));
    }

    #[test]
    fn constructed_instance() {
        let g = odd_triangle();
        let phi = Automorphism::parse(g.graph(), "perm=a->b,b->c,c->a; inv=1").unwrap();
        let (z, v) = (w(&g, "a b^-1 c c"), w(&g, "b a"));
        let u = phi.apply(&z).concat(&v).mul(&z.inverse());
        let out = tcp(&g, &TwistedQuery { phi: phi.clone(), u: u.clone(), v: v.clone() }, &Budget::default(), false).unwrap();
        let Verdict::Yes { witness } = out.verdict else { panic!("{:?}", out.verdict) };
        assert!(verify_witness(&g, &phi, &u, &v, &witness, &Budget::default()).unwrap().is_equal());
    }

    #[test]
    fn ineligible_without_assumption() {
        let g = ArtinGroup::new(PresentationGraph::new(&["s", "t"], &[("s", "t", 3)]).unwrap());
        let q = TwistedQuery { phi: Automorphism::identity(2), u: w(&g, "s"), v: w(&g, "t") };
        assert!(matches!(tcp(&g, &q, &Budget::default(), false), Err(TwistedError::IneligibleGraph(_))));
        assert!(tcp(&g, &q, &Budget::default(), true).unwrap().verdict.is_yes());
    }

    #[test]
    fn orbit_examples() {
        let e = ArtinGroup::new(PresentationGraph::new(&["s", "t"], &[("s", "t", 3)]).unwrap());
        let reps = outer_representatives(e.graph());
        let out = orbit_decide(&e, &w(&e, "s"), &w(&e, "t"), &reps, &Budget::default()).unwrap();
        assert!(matches!(out.verdict, OrbitVerdict::Yes { .. }));
        let g = odd_triangle();
        let id = [OuterClass::identity(3)];
        let out = orbit_decide(&g, &w(&g, "a"), &w(&g, "a a"), &id, &Budget::default()).unwrap();
        assert!(matches!(out.verdict, OrbitVerdict::No { .. }));
        let out = orbit_decide(&g, &w(&g, "a b"), &w(&g, "a b"), &id, &Budget::default()).unwrap();
        assert!(matches!(out.verdict, OrbitVerdict::Yes { class: 0, .. }));
    }
}
