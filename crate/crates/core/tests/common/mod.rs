#![allow(dead_code)]

use artin_tcp::graph::{Permutation, PresentationGraph};
use artin_tcp::words::{ArtinGroup, Letter, Word};
use rand::rngs::StdRng;
use rand::Rng;

pub fn graph(vs: &[&str], es: &[(&str, &str, i64)]) -> PresentationGraph {
    PresentationGraph::new(vs, es).unwrap()
}

pub fn edge(m: i64) -> ArtinGroup {
    ArtinGroup::new(graph(&["s", "t"], &[("s", "t", m)]))
}

pub fn triangle(a: i64, b: i64, c: i64) -> ArtinGroup {
    ArtinGroup::new(graph(&["a", "b", "c"], &[("a", "b", a), ("b", "c", b), ("a", "c", c)]))
}

pub fn word(g: &ArtinGroup, s: &str) -> Word {
    Word::parse(g.graph(), s).unwrap()
}

pub fn random_word(rng: &mut StdRng, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word((0..len).map(|_| Letter { generator: rng.gen_range(0..n), inverse: rng.gen_bool(0.5) }).collect())
}

/// Element of `Z/p * Z/q` (`0` meaning infinite cyclic) as an alternating
/// list of nonzero syllables `(factor, exponent)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeProduct {
    orders: [i64; 2],
    pub syllables: Vec<(usize, i64)>,
}

impl FreeProduct {
    pub fn identity(orders: [i64; 2]) -> Self {
        FreeProduct { orders, syllables: Vec::new() }
    }

    fn norm(&self, f: usize, e: i64) -> i64 {
        match self.orders[f] {
            0 => e,
            p => e.rem_euclid(p),
        }
    }

    pub fn push(&mut self, f: usize, e: i64) {
        let e = self.norm(f, e);
        if e == 0 {
            return;
        }
        match self.syllables.last().copied() {
            Some((g, x)) if g == f => {
                let y = self.norm(f, x + e);
                self.syllables.pop();
                if y != 0 {
                    self.syllables.push((f, y));
                }
            }
            _ => self.syllables.push((f, e)),
        }
    }

    pub fn append(&mut self, other: &[(usize, i64)]) {
        for &(f, e) in other {
            self.push(f, e);
        }
    }

    pub fn inverse_of(list: &[(usize, i64)]) -> Vec<(usize, i64)> {
        list.iter().rev().map(|&(f, e)| (f, -e)).collect()
    }
}

/// Exact word problem for the dihedral Artin group of label `m`, through
/// its central quotient and the exponent sum.
///
/// For odd `m`, `A / <Δ²> = <x> * <y>` with `x = Δ` of order 2 and `y = st`
/// of order `m`; then `s = y^{-(m-1)/2} x` and `t = x y^{(m+1)/2}`.
/// For even `m`, `A / <Δ> = <s> * <y>` with `y = st` of order `m/2`, and
/// `t = s⁻¹ y`. The kernel is generated by a central element of nonzero
/// exponent sum, so the image and the exponent sum decide equality.
pub struct DihedralOracle {
    orders: [i64; 2],
    images: [Vec<(usize, i64)>; 2],
}

impl DihedralOracle {
    pub fn new(m: i64) -> Self {
        if m % 2 == 1 {
            DihedralOracle { orders: [2, m], images: [vec![(1, -(m - 1) / 2), (0, 1)], vec![(0, 1), (1, (m + 1) / 2)]] }
        } else {
            DihedralOracle { orders: [0, m / 2], images: [vec![(0, 1)], vec![(0, -1), (1, 1)]] }
        }
    }

    pub fn key(&self, w: &Word) -> (Vec<(usize, i64)>, i64) {
        let mut e = FreeProduct::identity(self.orders);
        for l in &w.0 {
            let img = &self.images[l.generator];
            if l.inverse {
                e.append(&FreeProduct::inverse_of(img));
            } else {
                e.append(img);
            }
        }
        (e.syllables, w.exponent_sum())
    }

    pub fn equal(&self, u: &Word, v: &Word) -> bool {
        self.key(u) == self.key(v)
    }
}

/// Every permutation of `0..n`, lexicographic.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for i in 0..n {
            let mut q: Vec<usize> = p.iter().map(|&x| if x >= i { x + 1 } else { x }).collect();
            q.insert(0, i);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Label-preserving permutations by filtering all `n!`.
pub fn brute_force_automorphisms(g: &PresentationGraph) -> Vec<Permutation> {
    let n = g.len();
    all_permutations(n)
        .into_iter()
        .filter(|p| (0..n).all(|a| (0..n).all(|b| a == b || g.label(a, b) == g.label(p[a], p[b]))))
        .map(Permutation::from_images)
        .collect()
}

/// Is `difference = matrix · x` for some integer `x` with entries in `[-bound, bound]`?
pub fn lattice_solvable(matrix: &[Vec<i64>], difference: &[i64], bound: i64) -> bool {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut x = vec![-bound; cols];
    loop {
        let hit = matrix.iter().zip(difference).all(|(row, &d)| row.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>() == d);
        if hit {
            return true;
        }
        let mut i = 0;
        loop {
            if i == cols {
                return false;
            }
            if x[i] < bound {
                x[i] += 1;
                break;
            }
            x[i] = -bound;
            i += 1;
        }
    }
}
