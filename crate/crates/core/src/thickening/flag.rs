use super::Patch;

pub const DEFAULT_DIMENSION_CAP: usize = 5;

/// All cliques with between `min` and `max` vertices, each sorted, in
/// lexicographic order. `adj` lists must be sorted.
pub fn cliques(adj: &[Vec<usize>], min: usize, max: usize) -> Vec<Vec<usize>> {
    fn grow(adj: &[Vec<usize>], cur: &mut Vec<usize>, cand: &[usize], min: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= min {
            out.push(cur.clone());
        }
        if cur.len() == max {
            return;
        }
        for (i, &v) in cand.iter().enumerate() {
            let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|x| adj[v].binary_search(x).is_ok()).collect();
            cur.push(v);
            grow(adj, cur, &next, min, max, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for v in 0..adj.len() {
        let cand: Vec<usize> = adj[v].iter().copied().filter(|&x| x > v).collect();
        grow(adj, &mut vec![v], &cand, min, max, &mut out);
    }
    out
}

/// Replaces the simplices by every clique of dimension `2..=cap`.
pub fn flag_complete(p: &mut Patch, cap: usize) {
    p.dimension_cap = cap;
    p.simplices = cliques(&p.adjacency(), 3, cap + 1);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adj(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut a = vec![Vec::new(); n];
        for &(x, y) in edges {
            a[x].push(y);
            a[y].push(x);
        }
        for l in &mut a {
            l.sort_unstable();
        }
        a
    }

    #[test]
    fn triangle_and_square() {
        assert_eq!(cliques(&adj(3, &[(0, 1), (1, 2), (0, 2)]), 3, 6), vec![vec![0, 1, 2]]);
        assert!(cliques(&adj(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]), 3, 6).is_empty());
    }

    #[test]
    fn tetrahedron() {
        let k4 = adj(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let c = cliques(&k4, 3, 6);
        assert_eq!(c.iter().filter(|s| s.len() == 4).count(), 1);
        assert_eq!(c.iter().filter(|s| s.len() == 3).count(), 4);
        assert_eq!(cliques(&k4, 1, 6).len(), 15);
    }
}
