use super::{add_edge, Patch};
use std::collections::{BTreeMap, HashMap};

/// Joins interior vertices of precells that share a boundary path of two or
/// more edges.
///
/// The shared edges split into maximal directed paths `x_0 → … → x_L`. On a
/// path with `L ≥ 2`, let `R` be the precell whose source is `x_0` and `B` the
/// other one. For each shared edge `e` the interior apices `r(e)` and `b(e)`
/// are joined, and where both apices change between consecutive edges the
/// diagonal `b(e_k) – r(e_{k+1})` is added. Returns the number of new edges.
pub fn insert_zigzags(p: &mut Patch) -> usize {
    let mut apex: Vec<HashMap<(usize, usize), usize>> = Vec::with_capacity(p.cells.len());
    let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, c) in p.cells.iter().enumerate() {
        let map: HashMap<(usize, usize), usize> = c.directed_edges().into_iter().collect();
        for &e in map.keys() {
            by_edge.entry(e).or_default().push(i);
        }
        apex.push(map);
    }
    let mut pairs: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for (e, cells) in &by_edge {
        for (k, &a) in cells.iter().enumerate() {
            for &b in &cells[k + 1..] {
                pairs.entry((a.min(b), a.max(b))).or_default().push(*e);
            }
        }
    }
    let mut added = 0;
    for ((c1, c2), shared) in pairs {
        if shared.len() < 2 {
            continue;
        }
        for path in directed_paths(&shared) {
            if path.len() < 2 {
                continue;
            }
            let x0 = path[0].0;
            let (r, b) = if p.cells[c2].source == x0 && p.cells[c1].source != x0 { (c2, c1) } else { (c1, c2) };
            let rs: Vec<usize> = path.iter().map(|e| apex[r][e]).collect();
            let bs: Vec<usize> = path.iter().map(|e| apex[b][e]).collect();
            for k in 0..path.len() {
                added += add_edge(&mut p.edges, rs[k], bs[k]) as usize;
                if k + 1 < path.len() && rs[k] != rs[k + 1] && bs[k] != bs[k + 1] {
                    added += add_edge(&mut p.edges, bs[k], rs[k + 1]) as usize;
                }
            }
        }
    }
    added
}

/// Splits directed edges into maximal paths, each in order.
fn directed_paths(edges: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    let out_of: HashMap<usize, (usize, usize)> = edges.iter().map(|&e| (e.0, e)).collect();
    let heads: std::collections::HashSet<usize> = edges.iter().map(|e| e.1).collect();
    let mut paths = Vec::new();
    let mut starts: Vec<&(usize, usize)> = edges.iter().filter(|e| !heads.contains(&e.0)).collect();
    starts.sort();
    for &start in starts {
        let mut path = vec![start];
        while let Some(&next) = out_of.get(&path.last().unwrap().1) {
            path.push(next);
        }
        paths.push(path);
    }
    paths
}
