//! Obstructions to `u = ψ(z) v z⁻¹` in abelian and finite quotients.

use crate::automorphism::OuterClass;
use crate::snf;
use crate::words::{ArtinGroup, PermQuotient, Word};
use serde::{Deserialize, Serialize};
use std::collections::{HashSet, VecDeque};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TwistedCertificate {
    /// `difference ∉ image(matrix)` over `ℤ`, with `matrix = ψ_ab − id`.
    Abelianization { matrix: Vec<Vec<i64>>, difference: Vec<i64> },
    /// No twisted conjugator exists in the image of
    /// `w ↦ (ρ(w), ρψ(w), …, ρψ^{k−1}(w))`, on which `ψ` acts by shifting.
    PermutationQuotient { degree: usize, images: Vec<Vec<u8>>, order: u64 },
}

impl TwistedCertificate {
    pub fn name(&self) -> &'static str {
        match self {
            TwistedCertificate::Abelianization { .. } => "abelianization",
            TwistedCertificate::PermutationQuotient { .. } => "permutation-quotient",
        }
    }
}

/// `ψ_ab − id` on `H₁`.
pub fn twisted_ab_matrix(group: &ArtinGroup, psi: &OuterClass) -> Vec<Vec<i64>> {
    let mut m = group.abelianization().diagram_action(&psi.perm, psi.inverted);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= 1;
    }
    m
}

/// `No` when `ab(u) − ab(v)` is outside the image of `ψ_ab − id`.
pub fn twisted_ab_certificate(group: &ArtinGroup, psi: &OuterClass, u: &Word, v: &Word) -> Option<TwistedCertificate> {
    let matrix = twisted_ab_matrix(group, psi);
    let difference: Vec<i64> = group.abelianize(u).iter().zip(group.abelianize(v)).map(|(a, b)| a - b).collect();
    match snf::solve(&matrix, &difference) {
        Some(_) => None,
        None => Some(TwistedCertificate::Abelianization { matrix, difference }),
    }
}

type Tuple = Vec<Vec<u8>>;

fn then(p: &[u8], q: &[u8]) -> Vec<u8> {
    p.iter().map(|&x| q[x as usize]).collect()
}

fn inverse(p: &[u8]) -> Vec<u8> {
    let mut out = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        out[x as usize] = i as u8;
    }
    out
}

fn tuple_mul(a: &Tuple, b: &Tuple) -> Tuple {
    a.iter().zip(b).map(|(x, y)| then(x, y)).collect()
}

fn tuple_inv(a: &Tuple) -> Tuple {
    a.iter().map(|x| inverse(x)).collect()
}

fn shift(a: &Tuple) -> Tuple {
    let mut out = a[1..].to_vec();
    out.push(a[0].clone());
    out
}

fn tuple_image(q: &PermQuotient, psi: &OuterClass, k: u64, w: &Word) -> Tuple {
    let auto = psi.to_automorphism();
    let mut cur = w.clone();
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push(q.image(&cur));
        cur = auto.apply(&cur);
    }
    out
}

/// Whether `u` and `v` are twisted conjugate inside the finite image; `None`
/// if the image has more than `cap` elements.
pub(crate) fn quotient_twisted_conjugate(q: &PermQuotient, psi: &OuterClass, n: usize, u: &Word, v: &Word, cap: usize) -> Option<bool> {
    let k = psi.order();
    let gens: Vec<Tuple> = (0..n).map(|s| tuple_image(q, psi, k, &Word::letter(crate::words::Letter::pos(s)))).collect();
    let identity: Tuple = vec![(0..q.degree as u8).collect(); k as usize];
    let mut seen: HashSet<Tuple> = HashSet::new();
    let mut queue = VecDeque::from([identity.clone()]);
    seen.insert(identity);
    let mut elements = Vec::new();
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = tuple_mul(&x, g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return None;
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
        elements.push(x);
    }
    let (ru, rv) = (tuple_image(q, psi, k, u), tuple_image(q, psi, k, v));
    // u = ψ(y) v y⁻¹ with ψ acting by shift on the image
    Some(elements.iter().any(|y| tuple_mul(&tuple_mul(&shift(y), &rv), &tuple_inv(y)) == ru))
}

/// `No` when some permutation quotient of the group already separates the
/// twisted classes of `u` and `v`.
pub fn twisted_quotient_certificate(group: &ArtinGroup, psi: &OuterClass, u: &Word, v: &Word) -> Option<TwistedCertificate> {
    let n = group.graph().len();
    group.quotients().iter().find_map(|q| match quotient_twisted_conjugate(q, psi, n, u, v, QUOTIENT_CAP) {
        Some(false) => Some(TwistedCertificate::PermutationQuotient { degree: q.degree, images: q.images.clone(), order: psi.order() }),
        _ => None,
    })
}

pub(crate) const QUOTIENT_CAP: usize = 20_000;

/// Re-derives a certificate from scratch.
pub fn recheck_certificate(group: &ArtinGroup, psi: &OuterClass, u: &Word, v: &Word, cert: &TwistedCertificate) -> bool {
    match cert {
        TwistedCertificate::Abelianization { matrix, difference } => {
            *matrix == twisted_ab_matrix(group, psi)
                && difference.iter().zip(group.abelianize(u).iter().zip(group.abelianize(v))).all(|(d, (a, b))| *d == a - b)
                && snf::solve(matrix, difference).is_none()
        }
        TwistedCertificate::PermutationQuotient { degree, images, order } => {
            let q = PermQuotient { degree: *degree, images: images.clone() };
            *order == psi.order()
                && q.is_homomorphism(group.graph())
                && quotient_twisted_conjugate(&q, psi, group.graph().len(), u, v, usize::MAX) == Some(false)
        }
    }
}
