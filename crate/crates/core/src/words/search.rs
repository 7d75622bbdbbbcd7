//! Bounded search for a chain of relator applications between two words.

use super::free_reduce_codes;
use crate::graph::PresentationGraph;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};

/// Outcome of a search that found no chain.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub visited: usize,
    pub max_length: usize,
    /// All words up to `max_length` reachable from either side were visited.
    pub exhausted: bool,
}

/// Cyclic conjugates of `Π(a,b;m) Π(b,a;m)⁻¹` and their inverses, indexed by
/// first letter.
pub(crate) struct Rewriter {
    by_first: HashMap<u16, Vec<Vec<u16>>>,
}

fn invert_codes(w: &[u16]) -> Vec<u16> {
    w.iter().rev().map(|c| c ^ 1).collect()
}

impl Rewriter {
    pub(crate) fn new(g: &PresentationGraph) -> Self {
        let mut all: Vec<Vec<u16>> = Vec::new();
        for (a, b, m) in g.edges() {
            let m = m as usize;
            let (ca, cb) = ((a as u16) << 1, (b as u16) << 1);
            let mut r: Vec<u16> = (0..m).map(|k| if k % 2 == 0 { ca } else { cb }).collect();
            let other: Vec<u16> = (0..m).map(|k| if k % 2 == 0 { cb } else { ca }).collect();
            r.extend(invert_codes(&other));
            for base in [r.clone(), invert_codes(&r)] {
                for i in 0..base.len() {
                    let mut c = base[i..].to_vec();
                    c.extend_from_slice(&base[..i]);
                    all.push(c);
                }
            }
        }
        all.sort();
        all.dedup();
        let mut by_first: HashMap<u16, Vec<Vec<u16>>> = HashMap::new();
        for r in all {
            by_first.entry(r[0]).or_default().push(r);
        }
        Rewriter { by_first }
    }

    fn all_relators(&self) -> impl Iterator<Item = &Vec<u16>> {
        let mut keys: Vec<&u16> = self.by_first.keys().collect();
        keys.sort();
        keys.into_iter().flat_map(move |k| self.by_first[k].iter())
    }

    /// Freely reduced words obtained from `w` by replacing a prefix of a
    /// relator with the inverse of the rest, capped at `max_len` letters.
    /// Deterministic order.
    pub(crate) fn neighbors(&self, w: &[u16], max_len: usize) -> Vec<Vec<u16>> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        let mut push = |v: Vec<u16>, out: &mut Vec<Vec<u16>>| {
            if v.len() <= max_len && seen.insert(v.clone()) {
                out.push(v);
            }
        };
        for i in 0..=w.len() {
            if i < w.len() {
                if let Some(rs) = self.by_first.get(&w[i]) {
                    for r in rs {
                        let mut j = 1;
                        while j <= r.len() && i + j <= w.len() && w[i + j - 1] == r[j - 1] {
                            let mut v = w[..i].to_vec();
                            v.extend(invert_codes(&r[j..]));
                            v.extend_from_slice(&w[i + j..]);
                            push(free_reduce_codes(&v), &mut out);
                            j += 1;
                        }
                    }
                }
            }
            // insertion of a whole relator; insertions with cancellation are
            // already covered by substitutions
            for r in self.all_relators() {
                if w.len() + r.len() > max_len {
                    continue;
                }
                let mut v = w[..i].to_vec();
                v.extend_from_slice(r);
                v.extend_from_slice(&w[i..]);
                push(free_reduce_codes(&v), &mut out);
            }
        }
        out
    }

    /// Whether `b` is one relator application away from `a`.
    pub(crate) fn is_step(&self, a: &[u16], b: &[u16]) -> bool {
        let bound = a.len().max(b.len());
        self.neighbors(a, bound).iter().any(|x| x == b) || self.neighbors(b, bound).iter().any(|x| x == a)
    }

    /// Bidirectional breadth-first search between freely reduced `u` and `v`
    /// over words of length at most `max_len`.
    pub(crate) fn connect(&self, u: &[u16], v: &[u16], max_len: usize, nodes: usize) -> Result<Vec<Vec<u16>>, SearchReport> {
        if u == v {
            return Ok(vec![u.to_vec()]);
        }
        let mut parents: [HashMap<Vec<u16>, Vec<u16>>; 2] = [HashMap::new(), HashMap::new()];
        parents[0].insert(u.to_vec(), Vec::new());
        parents[1].insert(v.to_vec(), Vec::new());
        let mut frontier: [Vec<Vec<u16>>; 2] = [vec![u.to_vec()], vec![v.to_vec()]];
        let mut visited = 2;
        loop {
            if frontier[0].is_empty() || frontier[1].is_empty() {
                return Err(SearchReport { visited, max_length: max_len, exhausted: true });
            }
            let side = if frontier[0].len() <= frontier[1].len() { 0 } else { 1 };
            let mut next = Vec::new();
            for w in std::mem::take(&mut frontier[side]) {
                for x in self.neighbors(&w, max_len) {
                    if parents[side].contains_key(&x) {
                        continue;
                    }
                    parents[side].insert(x.clone(), w.clone());
                    visited += 1;
                    if parents[1 - side].contains_key(&x) {
                        return Ok(self.assemble(&parents, &x, u, v));
                    }
                    if visited >= nodes {
                        return Err(SearchReport { visited, max_length: max_len, exhausted: false });
                    }
                    next.push(x);
                }
            }
            frontier[side] = next;
        }
    }

    fn assemble(&self, parents: &[HashMap<Vec<u16>, Vec<u16>>; 2], meet: &[u16], u: &[u16], v: &[u16]) -> Vec<Vec<u16>> {
        let mut left = vec![meet.to_vec()];
        let mut cur = meet.to_vec();
        while cur != u {
            cur = parents[0][&cur].clone();
            left.push(cur.clone());
        }
        left.reverse();
        let mut cur = meet.to_vec();
        while cur != v {
            cur = parents[1][&cur].clone();
            left.push(cur.clone());
        }
        left
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Word;

    fn setup() -> (PresentationGraph, Rewriter) {
        let g = PresentationGraph::new(&["s", "t"], &[("s", "t", 3)]).unwrap();
        let r = Rewriter::new(&g);
        (g, r)
    }

    #[test]
    fn braid_relation_is_one_step() {
        let (g, r) = setup();
        let a = Word::parse(&g, "s t s").unwrap().codes();
        let b = Word::parse(&g, "t s t").unwrap().codes();
        assert!(r.is_step(&a, &b));
        assert!(!r.is_step(&a, &a[..2]));
    }

    #[test]
    fn finds_chain_for_delta_conjugation() {
        let (g, r) = setup();
        let a = Word::parse(&g, "s t s s s^-1 t^-1 s^-1").unwrap();
        let a = free_reduce_codes(&a.codes());
        let b = Word::parse(&g, "t").unwrap().codes();
        let path = r.connect(&a, &b, a.len() + 4, 100_000).unwrap();
        assert_eq!(path.first().unwrap(), &a);
        assert_eq!(path.last().unwrap(), &b);
        for w in path.windows(2) {
            assert!(r.is_step(&w[0], &w[1]));
        }
    }

    #[test]
    fn distinct_elements_exhaust() {
        let (g, r) = setup();
        let a = Word::parse(&g, "s").unwrap().codes();
        let b = Word::parse(&g, "t").unwrap().codes();
        let e = r.connect(&a, &b, 3, 1_000_000).unwrap_err();
        assert!(!e.exhausted || e.visited > 0);
    }
}
