use super::PresentationGraph;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A permutation of `0..n`, stored as its image vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Panics unless `images` is a permutation of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(i < images.len() && !seen[i], "not a permutation: {images:?}");
            seen[i] = true;
        }
        Permutation(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.0.len()];
        let mut order = 1u64;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.0[v];
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    pub fn display<'a>(&'a self, g: &'a PresentationGraph) -> impl fmt::Display + 'a {
        PermDisplay(self, g)
    }
}

struct PermDisplay<'a>(&'a Permutation, &'a PresentationGraph);

impl fmt::Display for PermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let moved: Vec<String> = (0..self.0.len())
            .filter(|&v| self.0.apply(v) != v)
            .map(|v| format!("{}->{}", self.1.name(v), self.1.name(self.0.apply(v))))
            .collect();
        write!(f, "{}", moved.join(","))
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// All label-preserving automorphisms of the graph, identity first and the rest
/// in lexicographic order of their image vectors.
pub fn graph_automorphisms(g: &PresentationGraph) -> Vec<Permutation> {
    let n = g.len();
    let full = g.full_mask();
    let profile: Vec<Vec<u32>> = (0..n).map(|v| g.label_profile(v, full)).collect();
    let mut out = Vec::new();
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, &profile, 0, &mut images, &mut used, &mut out);
    out
}

fn extend(
    g: &PresentationGraph,
    profile: &[Vec<u32>],
    i: usize,
    images: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Permutation>,
) {
    let n = g.len();
    if i == n {
        out.push(Permutation(images.clone()));
        return;
    }
    for j in 0..n {
        if used[j] || profile[j] != profile[i] {
            continue;
        }
        if (0..i).any(|k| g.label(i, k) != g.label(j, images[k])) {
            continue;
        }
        images[i] = j;
        used[j] = true;
        extend(g, profile, i + 1, images, used, out);
        used[j] = false;
    }
    images[i] = usize::MAX;
}

const CANONICAL_ORDERINGS_CAP: u64 = 5040;

/// A key identifying the labelled isomorphism class of the subgraph induced on
/// `mask`, or `None` when the refined search space is too large to enumerate.
pub fn canonical_key(g: &PresentationGraph, mask: u64) -> Option<Vec<u32>> {
    let verts: Vec<usize> = (0..g.len()).filter(|&v| mask >> v & 1 == 1).collect();
    let mut inv: Vec<(Vec<u32>, usize)> = verts.iter().map(|&v| (g.label_profile(v, mask), v)).collect();
    inv.sort();
    // classes of equal invariant, in sorted order
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, (p, v)) in inv.iter().enumerate() {
        if i > 0 && inv[i - 1].0 == *p {
            classes.last_mut().unwrap().push(*v);
        } else {
            classes.push(vec![*v]);
        }
    }
    let mut count = 1u64;
    for c in &classes {
        for k in 2..=c.len() as u64 {
            count = count.saturating_mul(k);
        }
    }
    if count > CANONICAL_ORDERINGS_CAP {
        return None;
    }
    let mut header: Vec<u32> = vec![verts.len() as u32];
    for (p, _) in &inv {
        header.push(p.len() as u32);
        header.extend(p);
    }
    let mut best: Option<Vec<u32>> = None;
    let mut order = Vec::with_capacity(verts.len());
    orderings(&classes, 0, &mut order, &mut |ord| {
        let key: Vec<u32> = ord.iter().flat_map(|&a| ord.iter().map(move |&b| g.label(a, b).unwrap_or(0))).collect();
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    });
    header.extend(best.unwrap_or_default());
    Some(header)
}

fn orderings(classes: &[Vec<usize>], c: usize, order: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if c == classes.len() {
        visit(order);
        return;
    }
    let mut class = classes[c].clone();
    permute(&mut class, 0, &mut |perm| {
        let base = order.len();
        order.extend_from_slice(perm);
        orderings(classes, c + 1, order, visit);
        order.truncate(base);
    });
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}
