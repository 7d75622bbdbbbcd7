use super::Patch;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkEntry {
    pub vertex: usize,
    pub link_size: usize,
    pub flag: bool,
    /// Induced 4- and 5-cycles, in patch vertex ids.
    pub cycles: Vec<Vec<usize>>,
}

impl LinkEntry {
    pub fn passes(&self) -> bool {
        self.flag && self.cycles.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkReport {
    pub checked: usize,
    pub failures: usize,
    pub entries: Vec<LinkEntry>,
}

impl LinkReport {
    pub fn passes(&self) -> bool {
        self.failures == 0
    }
}

/// Chordless cycles of the given lengths in a graph with sorted adjacency
/// lists, each listed once: least vertex first, then the smaller of its two
/// cycle neighbours.
pub fn induced_cycles(adj: &[Vec<usize>], lengths: &[usize]) -> Vec<Vec<usize>> {
    fn walk(adj: &[Vec<usize>], path: &mut Vec<usize>, lengths: &[usize], max: usize, out: &mut Vec<Vec<usize>>) {
        let adjacent = |a: usize, b: usize| adj[a].binary_search(&b).is_ok();
        let (start, last, k) = (path[0], path[path.len() - 1], path.len());
        for &x in &adj[last] {
            if x <= start || path.contains(&x) {
                continue;
            }
            if k >= 2 && path[1..k - 1].iter().any(|&q| adjacent(q, x)) {
                continue;
            }
            if k >= 2 && adjacent(start, x) {
                // x closes the cycle
                if lengths.contains(&(k + 1)) && path[1] < x {
                    let mut c = path.clone();
                    c.push(x);
                    out.push(c);
                }
                continue;
            }
            if k + 1 < max {
                path.push(x);
                walk(adj, path, lengths, max, out);
                path.pop();
            }
        }
    }
    let max = lengths.iter().copied().max().unwrap_or(0);
    let mut out = Vec::new();
    for v in 0..adj.len() {
        walk(adj, &mut vec![v], lengths, max, &mut out);
    }
    out.sort();
    out
}

/// Link of every patch-interior vertex: flagness and absence of induced
/// 4- and 5-cycles.
pub fn check_links_6_large(p: &Patch) -> LinkReport {
    let adj = p.adjacency();
    let simplices: HashSet<&[usize]> = p.simplices.iter().map(|s| s.as_slice()).collect();
    let entries: Vec<LinkEntry> = p
        .patch_interior_vertices()
        .par_iter()
        .map(|&v| {
            let nbrs = &adj[v];
            let local: Vec<Vec<usize>> = nbrs
                .iter()
                .map(|&a| nbrs.iter().enumerate().filter(|(_, &b)| adj[a].binary_search(&b).is_ok()).map(|(i, _)| i).collect())
                .collect();
            // every clique of the link must be a simplex together with v
            let flag = super::cliques(&local, 2, p.dimension_cap).iter().all(|c| {
                let mut s: Vec<usize> = c.iter().map(|&i| nbrs[i]).collect();
                s.push(v);
                s.sort_unstable();
                simplices.contains(s.as_slice())
            });
            let cycles = induced_cycles(&local, &[4, 5]).into_iter().map(|c| c.into_iter().map(|i| nbrs[i]).collect()).collect();
            LinkEntry { vertex: v, link_size: nbrs.len(), flag, cycles }
        })
        .collect();
    let failures = entries.iter().filter(|e| !e.passes()).count();
    LinkReport { checked: entries.len(), failures, entries }
}
