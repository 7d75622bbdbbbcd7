//! The subdivided precell disk for one edge label.
//!
//! Vertex indexing for label `m`: `0` is the source `L`, `1..m` are the top
//! side `top_k = Π(s,t;k)`, `m` is the sink `R = Δ`, `m+1..2m` are the bottom
//! side `bot_k = Π(t,s;k)` and `2m..3m−2` are the interior path
//! `i_1, …, i_{m−2}`. Interior `i_j` sees `top_j, top_{j+1}, bot_j, bot_{j+1}`;
//! `i_1` also sees `L` and `i_{m−2}` sees `R`.

use super::PatchError;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiskComplex {
    pub m: u32,
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub triangles: Vec<[usize; 3]>,
}

impl DiskComplex {
    pub fn top(&self, k: usize) -> usize {
        k
    }

    pub fn bottom(&self, k: usize) -> usize {
        let m = self.m as usize;
        match k {
            0 => 0,
            k if k == m => m,
            k => m + k,
        }
    }

    pub fn interior(&self, j: usize) -> usize {
        2 * self.m as usize + j - 1
    }

    pub fn boundary_len(&self) -> usize {
        2 * self.m as usize
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    /// Boundary cycle `L, top_1, …, R, bot_{m−1}, …, bot_1`.
    pub fn boundary_cycle(&self) -> Vec<usize> {
        let m = self.m as usize;
        let mut c: Vec<usize> = (0..=m).map(|k| self.top(k)).collect();
        c.extend((1..m).rev().map(|k| self.bottom(k)));
        c
    }
}

pub fn subdivide_precell(m: u32) -> Result<DiskComplex, PatchError> {
    if m < 3 {
        return Err(PatchError::SmallLabel(m));
    }
    let mu = m as usize;
    let mut d = DiskComplex { m, vertices: 3 * mu - 2, edges: Vec::new(), triangles: Vec::new() };
    let mut edges = Vec::new();
    let mut tris = Vec::new();
    for k in 0..mu {
        edges.push((d.top(k), d.top(k + 1)));
        edges.push((d.bottom(k), d.bottom(k + 1)));
    }
    for j in 1..=mu - 2 {
        let i = d.interior(j);
        for v in [d.top(j), d.top(j + 1), d.bottom(j), d.bottom(j + 1)] {
            edges.push((v, i));
        }
        tris.push([d.top(j), d.top(j + 1), i]);
        tris.push([d.bottom(j), d.bottom(j + 1), i]);
        if j + 2 < mu {
            let next = d.interior(j + 1);
            edges.push((i, next));
            tris.push([i, next, d.top(j + 1)]);
            tris.push([i, next, d.bottom(j + 1)]);
        }
    }
    let (first, last) = (d.interior(1), d.interior(mu - 2));
    edges.push((d.top(0), first));
    edges.push((d.top(mu), last));
    tris.push([d.top(0), d.top(1), first]);
    tris.push([d.top(0), d.bottom(1), first]);
    tris.push([d.top(mu - 1), d.top(mu), last]);
    tris.push([d.bottom(mu - 1), d.top(mu), last]);
    for e in &mut edges {
        *e = (e.0.min(e.1), e.0.max(e.1));
    }
    edges.sort_unstable();
    edges.dedup();
    for t in &mut tris {
        t.sort_unstable();
    }
    tris.sort_unstable();
    tris.dedup();
    d.edges = edges;
    d.triangles = tris;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let d = subdivide_precell(7).unwrap();
        assert_eq!(d.vertices, 19);
        assert_eq!(d.boundary_len(), 14);
        assert_eq!((d.edges.len(), d.triangles.len()), (40, 22));
        let d = subdivide_precell(3).unwrap();
        assert_eq!(d.vertices, 7);
        assert_eq!(subdivide_precell(2), Err(PatchError::SmallLabel(2)));
    }

    #[test]
    fn is_a_disk() {
        for m in 3..=9 {
            let d = subdivide_precell(m).unwrap();
            assert_eq!(d.euler_characteristic(), 1);
            // each boundary edge lies in one triangle, each interior edge in two
            let cycle = d.boundary_cycle();
            let n = cycle.len();
            let boundary: Vec<(usize, usize)> = (0..n)
                .map(|i| {
                    let (a, b) = (cycle[i], cycle[(i + 1) % n]);
                    (a.min(b), a.max(b))
                })
                .collect();
            for &(a, b) in &d.edges {
                let count = d.triangles.iter().filter(|t| t.contains(&a) && t.contains(&b)).count();
                let expected = if boundary.contains(&(a, b)) { 1 } else { 2 };
                assert_eq!(count, expected, "m={m} edge {a}-{b}");
            }
            // triangle edges are edges
            for t in &d.triangles {
                for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                    assert!(d.edges.contains(&(a, b)));
                }
            }
        }
    }
}
