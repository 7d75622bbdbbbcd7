use super::{GraphError, PresentationGraph};
use serde::{Deserialize, Serialize};

/// Label-based classes of the Artin group.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeClass {
    pub large: bool,
    pub xl: bool,
    pub xxxl: bool,
    pub free_of_infinity: bool,
    /// The whole graph is one edge with an even label.
    pub even_edge: bool,
}

pub fn type_class(g: &PresentationGraph) -> TypeClass {
    let edges = g.edges();
    let min = edges.iter().map(|e| e.2).min().unwrap_or(u32::MAX);
    let n = g.len();
    TypeClass {
        large: min >= 3,
        xl: min >= 4,
        xxxl: min >= 6,
        free_of_infinity: edges.len() == n * (n - 1) / 2,
        even_edge: n == 2 && edges.len() == 1 && edges[0].2.is_multiple_of(2),
    }
}

/// Connectivity of the subgraph induced on `mask`. The empty set counts as connected.
pub(crate) fn mask_connected(g: &PresentationGraph, mask: u64) -> bool {
    components(g, mask).len() <= 1
}

pub(crate) fn components(g: &PresentationGraph, mask: u64) -> Vec<u64> {
    let mut seen = 0u64;
    let mut out = Vec::new();
    for start in 0..g.len() {
        if mask >> start & 1 == 0 || seen >> start & 1 == 1 {
            continue;
        }
        let mut comp = 1u64 << start;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if mask >> w & 1 == 1 && comp >> w & 1 == 0 {
                    comp |= 1 << w;
                    stack.push(w);
                }
            }
        }
        seen |= comp;
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &PresentationGraph) -> bool {
    mask_connected(g, g.full_mask())
}

fn require_connected(g: &PresentationGraph) -> Result<(), GraphError> {
    if is_connected(g) {
        Ok(())
    } else {
        Err(GraphError::DisconnectedInput)
    }
}

/// Vertices whose removal disconnects the graph.
pub fn cut_vertices(g: &PresentationGraph) -> Result<Vec<usize>, GraphError> {
    require_connected(g)?;
    let full = g.full_mask();
    Ok((0..g.len()).filter(|&v| !mask_connected(g, full & !(1 << v))).collect())
}

/// Edges `e` for which the graph is the union of two connected full subgraphs
/// meeting exactly in `e`.
///
/// A proper split exists iff removing both endpoints disconnects the rest (each
/// remaining component attaches to `e`, so both sides stay connected). A bridge
/// in a graph with at least three vertices is also reported: one side is then
/// `e` itself and the other side is everything.
pub fn separating_edges(g: &PresentationGraph) -> Result<Vec<(usize, usize)>, GraphError> {
    require_connected(g)?;
    let full = g.full_mask();
    let mut out = Vec::new();
    for (a, b, _) in g.edges() {
        let rest = full & !(1 << a) & !(1 << b);
        let split = components(g, rest).len() >= 2;
        let bridge = g.len() >= 3 && {
            let without_edge = PresentationGraph {
                names: g.names.clone(),
                labels: {
                    let mut l = g.labels.clone();
                    l[a][b] = None;
                    l[b][a] = None;
                    l
                },
            };
            !is_connected(&without_edge)
        };
        if split || bridge {
            out.push((a, b));
        }
    }
    Ok(out)
}

pub fn is_twistless(g: &PresentationGraph) -> Result<bool, GraphError> {
    Ok(cut_vertices(g)?.is_empty() && separating_edges(g)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(vs: &[&str], es: &[(&str, &str, i64)]) -> PresentationGraph {
        PresentationGraph::new(vs, es).unwrap()
    }

    #[test]
    fn type_classes() {
        let tri6 = graph(&["a", "b", "c"], &[("a", "b", 6), ("b", "c", 6), ("a", "c", 6)]);
        assert_eq!(type_class(&tri6), TypeClass { large: true, xl: true, xxxl: true, free_of_infinity: true, even_edge: false });
        let e4 = graph(&["s", "t"], &[("s", "t", 4)]);
        assert_eq!(type_class(&e4), TypeClass { large: true, xl: true, xxxl: false, free_of_infinity: true, even_edge: true });
        let e3 = graph(&["s", "t", "u"], &[("s", "t", 3)]);
        let c = type_class(&e3);
        assert!(c.large && !c.xl && !c.free_of_infinity && !c.even_edge);
    }

    #[test]
    fn path_has_cut_vertex_and_separating_edges() {
        let p = graph(&["a", "b", "c"], &[("a", "b", 3), ("b", "c", 3)]);
        assert_eq!(cut_vertices(&p).unwrap(), vec![1]);
        assert_eq!(separating_edges(&p).unwrap(), vec![(0, 1), (1, 2)]);
        assert!(!is_twistless(&p).unwrap());
    }

    #[test]
    fn triangle_and_square_are_twistless() {
        let t = graph(&["a", "b", "c"], &[("a", "b", 3), ("b", "c", 3), ("a", "c", 3)]);
        assert!(cut_vertices(&t).unwrap().is_empty());
        assert!(separating_edges(&t).unwrap().is_empty());
        assert!(is_twistless(&t).unwrap());
        let sq = graph(&["a", "b", "c", "d"], &[("a", "b", 3), ("b", "c", 3), ("c", "d", 3), ("a", "d", 3)]);
        assert!(is_twistless(&sq).unwrap());
    }

    #[test]
    fn shared_edge_of_two_triangles_separates() {
        let g = graph(&["a", "b", "c", "d"], &[("a", "b", 3), ("a", "c", 3), ("b", "c", 3), ("b", "d", 3), ("c", "d", 3)]);
        assert_eq!(separating_edges(&g).unwrap(), vec![(1, 2)]);
        assert!(!is_twistless(&g).unwrap());
    }

    #[test]
    fn single_edge_is_twistless() {
        let e = graph(&["s", "t"], &[("s", "t", 7)]);
        assert!(is_twistless(&e).unwrap());
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = graph(&["a", "b", "c"], &[("a", "b", 3)]);
        assert!(matches!(cut_vertices(&g), Err(GraphError::DisconnectedInput)));
        assert!(matches!(is_twistless(&g), Err(GraphError::DisconnectedInput)));
    }
}
