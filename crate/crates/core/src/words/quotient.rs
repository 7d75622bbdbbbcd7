//! Homomorphisms `A_Γ → S_n` for small `n`, used to certify that two words
//! differ.

use super::Word;
use crate::graph::PresentationGraph;
use std::collections::HashSet;

type Perm = Vec<u8>;

/// One homomorphism into `S_degree`, given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermQuotient {
    pub degree: usize,
    pub images: Vec<Perm>,
}

/// `p` then `q` (right action): `x ↦ q(p(x))`.
fn then(p: &[u8], q: &[u8]) -> Perm {
    p.iter().map(|&x| q[x as usize]).collect()
}

fn invert(p: &[u8]) -> Perm {
    let mut out = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        out[x as usize] = i as u8;
    }
    out
}

fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Perm = (0..n as u8).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

fn alternating_product(a: &[u8], b: &[u8], m: usize) -> Perm {
    let mut p: Perm = (0..a.len() as u8).collect();
    for k in 0..m {
        p = then(&p, if k % 2 == 0 { a } else { b });
    }
    p
}

fn braid_holds(a: &[u8], b: &[u8], m: usize) -> bool {
    alternating_product(a, b, m) == alternating_product(b, a, m)
}

/// Extends a partial assignment of generator images in all consistent ways.
fn extend(g: &PresentationGraph, perms: &[Perm], stack: &mut Vec<Perm>, found: &mut Vec<Vec<Perm>>, budget: &mut usize, cap: usize) {
    let v = stack.len();
    if v == g.len() {
        let abelian = stack.iter().enumerate().all(|(i, x)| stack[i + 1..].iter().all(|y| then(x, y) == then(y, x)));
        if !abelian {
            found.push(stack.clone());
        }
        return;
    }
    for cand in perms {
        if *budget == 0 || found.len() >= cap * 64 {
            return;
        }
        *budget -= 1;
        let ok = (0..v).all(|u| match g.label(u, v) {
            Some(m) => braid_holds(&stack[u], cand, m as usize),
            None => true,
        });
        if ok {
            stack.push(cand.clone());
            extend(g, perms, stack, found, budget, cap);
            stack.pop();
        }
    }
}

impl PermQuotient {
    pub fn image(&self, w: &Word) -> Vec<u8> {
        let mut p: Perm = (0..self.degree as u8).collect();
        for l in w.letters() {
            let x = &self.images[l.generator];
            p = if l.inverse { then(&p, &invert(x)) } else { then(&p, x) };
        }
        p
    }

    pub fn is_homomorphism(&self, g: &PresentationGraph) -> bool {
        g.edges().into_iter().all(|(a, b, m)| braid_holds(&self.images[a], &self.images[b], m as usize))
    }

    /// Non-abelian homomorphisms into `S_3, …, S_max_degree`, up to
    /// conjugation, at most `cap` in total. Stops early once `work` partial
    /// assignments have been tried.
    pub fn search(g: &PresentationGraph, max_degree: usize, cap: usize, work: usize) -> Vec<PermQuotient> {
        let n = g.len();
        let mut out = Vec::new();
        let mut budget = work;
        if n == 0 {
            return out;
        }
        for degree in 3..=max_degree {
            let perms = all_perms(degree);
            let inverses: Vec<Perm> = perms.iter().map(|p| invert(p)).collect();
            // first image: the least element of each conjugacy class
            let reps: Vec<&Perm> =
                perms.iter().filter(|p| perms.iter().zip(&inverses).all(|(c, ci)| then(&then(ci, p), c) >= **p)).collect();
            let mut seen: HashSet<Vec<Perm>> = HashSet::new();
            for rep in reps {
                let centralizer: Vec<(&Perm, &Perm)> =
                    perms.iter().zip(&inverses).filter(|(c, ci)| &then(&then(ci, rep), c) == rep).collect();
                let mut found = Vec::new();
                let mut stack = vec![rep.clone()];
                extend(g, &perms, &mut stack, &mut found, &mut budget, cap.saturating_sub(out.len()));
                for images in found {
                    let canon =
                        centralizer.iter().map(|(c, ci)| images.iter().map(|x| then(&then(ci, x), c)).collect::<Vec<_>>()).min().unwrap();
                    if seen.insert(canon.clone()) && out.len() < cap {
                        out.push(PermQuotient { degree, images: canon });
                    }
                }
                if budget == 0 || out.len() >= cap {
                    return out;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_enumeration() {
        assert_eq!(all_perms(3).len(), 6);
        assert_eq!(all_perms(4).len(), 24);
        assert_eq!(all_perms(1), vec![vec![0]]);
    }

    #[test]
    fn braid_group_maps_onto_s3() {
        let g = PresentationGraph::new(&["s", "t"], &[("s", "t", 3)]).unwrap();
        let qs = PermQuotient::search(&g, 3, 10, 1_000_000);
        assert!(!qs.is_empty());
        for q in &qs {
            assert!(q.is_homomorphism(&g));
        }
        let q = &qs[0];
        let w = Word::parse(&g, "s t").unwrap();
        assert_ne!(q.image(&w), vec![0, 1, 2]);
        let r = Word::parse(&g, "s t s t^-1 s^-1 t^-1").unwrap();
        assert_eq!(q.image(&r), vec![0, 1, 2]);
    }

    #[test]
    fn triangle_quotients_are_homomorphisms() {
        let g = PresentationGraph::new(&["a", "b", "c"], &[("a", "b", 3), ("b", "c", 3), ("a", "c", 3)]).unwrap();
        let qs = PermQuotient::search(&g, 5, 40, 5_000_000);
        assert!(qs.len() >= 2);
        assert!(qs.iter().all(|q| q.is_homomorphism(&g)));
    }
}
