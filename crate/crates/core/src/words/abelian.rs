use super::Word;
use crate::graph::{Permutation, PresentationGraph};

/// `H₁(A_Γ) ≅ ℤ^c`, one coordinate per connected component of the subgraph
/// spanned by odd-labelled edges. An odd label identifies its endpoints; an
/// even label abelianizes to a trivial relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    class: Vec<usize>,
    basis: Vec<usize>,
}

impl Abelianization {
    pub fn new(g: &PresentationGraph) -> Self {
        let n = g.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for (a, b, m) in g.edges() {
            if m % 2 == 1 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                // keep the earliest vertex as root so roots are file-order minima
                let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
                parent[hi] = lo;
            }
        }
        let roots: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
        let mut basis: Vec<usize> = roots.clone();
        basis.sort_unstable();
        basis.dedup();
        let class = roots.iter().map(|r| basis.binary_search(r).unwrap()).collect();
        Abelianization { class, basis }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// The vertex naming coordinate `i` (earliest in file order within its class).
    pub fn basis_vertex(&self, i: usize) -> usize {
        self.basis[i]
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class[v]
    }

    /// Exponent sums per odd component.
    pub fn image(&self, w: &Word) -> Vec<i64> {
        let mut out = vec![0; self.rank()];
        for l in w.letters() {
            out[self.class[l.generator]] += l.exponent();
        }
        out
    }

    /// Matrix of the diagram automorphism `(π, ε)` acting on `H₁`, row-major:
    /// column `j` is the image of basis vector `j`.
    pub fn diagram_action(&self, perm: &Permutation, inverted: bool) -> Vec<Vec<i64>> {
        let c = self.rank();
        let sign = if inverted { -1 } else { 1 };
        let mut m = vec![vec![0; c]; c];
        for (j, &v) in self.basis.iter().enumerate() {
            m[self.class[perm.apply(v)]][j] = sign;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(g: &PresentationGraph, s: &str) -> Word {
        Word::parse(g, s).unwrap()
    }

    #[test]
    fn odd_edge_has_rank_one() {
        let g = PresentationGraph::new(&["s", "t"], &[("s", "t", 3)]).unwrap();
        let ab = Abelianization::new(&g);
        assert_eq!(ab.image(&w(&g, "s t")), vec![2]);
        assert_eq!(ab.image(&Word::empty()), vec![0]);
    }

    #[test]
    fn even_edge_has_rank_two() {
        let g = PresentationGraph::new(&["s", "t"], &[("s", "t", 4)]).unwrap();
        let ab = Abelianization::new(&g);
        assert_eq!(ab.image(&w(&g, "s t^-1")), vec![1, -1]);
    }

    #[test]
    fn basis_follows_file_order() {
        let g = PresentationGraph::new(&["a", "b", "c", "d"], &[("c", "b", 3), ("a", "b", 4), ("c", "d", 4)]).unwrap();
        let ab = Abelianization::new(&g);
        assert_eq!(ab.rank(), 3);
        assert_eq!((0..3).map(|i| ab.basis_vertex(i)).collect::<Vec<_>>(), vec![0, 1, 3]);
        assert_eq!(ab.class_of(2), 1);
    }
}
