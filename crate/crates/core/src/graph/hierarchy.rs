use super::structure::{is_twistless, mask_connected};
use super::symmetry::canonical_key;
use super::{mask_of, vertices_of, GraphError, PresentationGraph, MAX_SEARCH_VERTICES};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Two full subgraphs covering the graph. Vertex lists are sorted indices into
/// the root graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub part1: Vec<usize>,
    pub part2: Vec<usize>,
    pub intersection: Vec<usize>,
    /// Intersection is not empty, a single vertex or a single edge.
    pub twistless: bool,
}

impl Decomposition {
    /// Re-checks the covering conditions against `g` restricted to `whole`.
    pub fn is_valid_for(&self, g: &PresentationGraph, whole: &[usize]) -> bool {
        let a = mask_of(&self.part1);
        let b = mask_of(&self.part2);
        let w = mask_of(whole);
        if a | b != w || a == w || b == w || a & b != mask_of(&self.intersection) {
            return false;
        }
        let only_a = vertices_of(a & !b);
        let only_b = vertices_of(b & !a);
        let crossing = only_a.iter().any(|&x| only_b.iter().any(|&y| g.adjacent(x, y)));
        !crossing && self.twistless == intersection_is_twistless(g, &self.intersection)
    }
}

fn intersection_is_twistless(g: &PresentationGraph, inter: &[usize]) -> bool {
    match inter {
        [] | [_] => false,
        [x, y] => !g.adjacent(*x, *y),
        _ => true,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HierarchyTree {
    Leaf { vertices: Vec<usize> },
    Split { vertices: Vec<usize>, decomposition: Decomposition, left: Box<HierarchyTree>, right: Box<HierarchyTree> },
}

impl HierarchyTree {
    pub fn vertices(&self) -> &[usize] {
        match self {
            HierarchyTree::Leaf { vertices } | HierarchyTree::Split { vertices, .. } => vertices,
        }
    }

    pub fn leaves(&self) -> Vec<&[usize]> {
        match self {
            HierarchyTree::Leaf { vertices } => vec![vertices.as_slice()],
            HierarchyTree::Split { left, right, .. } => {
                let mut out = left.leaves();
                out.extend(right.leaves());
                out
            }
        }
    }

    pub fn decomposition_count(&self) -> usize {
        match self {
            HierarchyTree::Leaf { .. } => 0,
            HierarchyTree::Split { left, right, .. } => 1 + left.decomposition_count() + right.decomposition_count(),
        }
    }

    /// Multi-line rendering with vertex names.
    pub fn render(&self, g: &PresentationGraph) -> String {
        let mut out = String::new();
        self.render_into(g, 0, &mut out);
        out
    }

    fn render_into(&self, g: &PresentationGraph, depth: usize, out: &mut String) {
        let names = |vs: &[usize]| vs.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join(",");
        let pad = "  ".repeat(depth);
        match self {
            HierarchyTree::Leaf { vertices } => {
                out.push_str(&format!("{pad}star {{{}}}\n", names(vertices)));
            }
            HierarchyTree::Split { vertices, decomposition, left, right } => {
                out.push_str(&format!("{pad}split {{{}}} along {{{}}}\n", names(vertices), names(&decomposition.intersection)));
                left.render_into(g, depth + 1, out);
                right.render_into(g, depth + 1, out);
            }
        }
    }
}

fn check_size(n: usize) -> Result<(), GraphError> {
    if n > MAX_SEARCH_VERTICES {
        Err(GraphError::TooLarge(n, MAX_SEARCH_VERTICES))
    } else {
        Ok(())
    }
}

/// All unordered twistless decompositions of the whole graph, sorted
/// lexicographically by `(part1, part2)` with `part1 < part2`.
pub fn twistless_decompositions(g: &PresentationGraph) -> Result<Vec<Decomposition>, GraphError> {
    check_size(g.len())?;
    Ok(decompositions_of(g, g.full_mask()))
}

pub(crate) fn decompositions_of(g: &PresentationGraph, whole: u64) -> Vec<Decomposition> {
    let verts = vertices_of(whole);
    let k = verts.len();
    let total = 3usize.pow(k as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let (mut a, mut b) = (0u64, 0u64);
        let mut c = code;
        for &v in &verts {
            match c % 3 {
                0 => a |= 1 << v,
                1 => b |= 1 << v,
                _ => {
                    a |= 1 << v;
                    b |= 1 << v;
                }
            }
            c /= 3;
        }
        if a == whole || b == whole {
            continue;
        }
        let part1 = vertices_of(a);
        let part2 = vertices_of(b);
        if part1 >= part2 {
            continue;
        }
        let intersection = vertices_of(a & b);
        if !intersection_is_twistless(g, &intersection) {
            continue;
        }
        let only_a = vertices_of(a & !b);
        let only_b = vertices_of(b & !a);
        if only_a.iter().any(|&x| only_b.iter().any(|&y| g.adjacent(x, y))) {
            continue;
        }
        out.push(Decomposition { part1, part2, intersection, twistless: true });
    }
    out.sort_by(|x, y| (&x.part1, &x.part2).cmp(&(&y.part1, &y.part2)));
    out
}

/// Connected, at least three vertices, a hub adjacent to every other vertex,
/// and twistless.
pub fn is_twistless_star(g: &PresentationGraph, vertices: &[usize]) -> bool {
    if vertices.len() < 3 || !mask_connected(g, mask_of(vertices)) {
        return false;
    }
    let has_hub = vertices.iter().any(|&h| vertices.iter().all(|&v| v == h || g.adjacent(h, v)));
    has_hub && is_twistless(&g.induced(vertices)).unwrap_or(false)
}

/// Depth-first search for a twistless hierarchy whose leaves are twistless
/// stars, iteratively deepened so the returned tree has minimum depth.
/// Decompositions are tried in canonical order. Failures are memoized by
/// vertex set and, where a canonical key is affordable, by labelled
/// isomorphism class.
pub fn find_twistless_hierarchy(g: &PresentationGraph) -> Result<Option<HierarchyTree>, GraphError> {
    check_size(g.len())?;
    let mut search = HierarchySearch { g, failed_sets: HashMap::new(), failed_shapes: HashMap::new() };
    // a split strictly shrinks both parts, so depth never exceeds the vertex count
    for depth in 0..=g.len() {
        if let Some(tree) = search.run(g.full_mask(), depth) {
            return Ok(Some(tree));
        }
    }
    Ok(None)
}

struct HierarchySearch<'a> {
    g: &'a PresentationGraph,
    /// largest depth budget known to fail
    failed_sets: HashMap<u64, usize>,
    failed_shapes: HashMap<Vec<u32>, usize>,
}

impl HierarchySearch<'_> {
    fn run(&mut self, mask: u64, depth: usize) -> Option<HierarchyTree> {
        let vertices = vertices_of(mask);
        if is_twistless_star(self.g, &vertices) {
            return Some(HierarchyTree::Leaf { vertices });
        }
        if depth == 0 || self.failed_sets.get(&mask).is_some_and(|&d| d >= depth) {
            return None;
        }
        let shape = canonical_key(self.g, mask);
        if shape.as_ref().and_then(|s| self.failed_shapes.get(s)).is_some_and(|&d| d >= depth) {
            return None;
        }
        for d in decompositions_of(self.g, mask) {
            let Some(left) = self.run(mask_of(&d.part1), depth - 1) else { continue };
            let Some(right) = self.run(mask_of(&d.part2), depth - 1) else { continue };
            return Some(HierarchyTree::Split { vertices, decomposition: d, left: Box::new(left), right: Box::new(right) });
        }
        self.failed_sets.insert(mask, depth);
        if let Some(s) = shape {
            self.failed_shapes.insert(s, depth);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(vs: &[&str], es: &[(&str, &str, i64)]) -> PresentationGraph {
        PresentationGraph::new(vs, es).unwrap()
    }

    fn wheel(m: i64) -> PresentationGraph {
        graph(
            &["h", "a", "b", "c", "d"],
            &[("h", "a", m), ("h", "b", m), ("h", "c", m), ("h", "d", m), ("a", "b", m), ("b", "c", m), ("c", "d", m), ("d", "a", m)],
        )
    }

    /// Two wheels with hubs h1, h2 sharing the rim path a-b-c.
    fn glued_wheels() -> PresentationGraph {
        graph(
            &["h1", "h2", "a", "b", "c", "x", "y"],
            &[
                ("h1", "a", 3),
                ("h1", "b", 3),
                ("h1", "c", 3),
                ("h1", "x", 3),
                ("a", "b", 3),
                ("b", "c", 3),
                ("c", "x", 3),
                ("x", "a", 3),
                ("h2", "a", 3),
                ("h2", "b", 3),
                ("h2", "c", 3),
                ("h2", "y", 3),
                ("c", "y", 3),
                ("y", "a", 3),
            ],
        )
    }

    #[test]
    fn small_graphs_have_no_decompositions() {
        let tri = graph(&["a", "b", "c"], &[("a", "b", 3), ("b", "c", 3), ("a", "c", 3)]);
        assert!(twistless_decompositions(&tri).unwrap().is_empty());
        let e = graph(&["s", "t"], &[("s", "t", 3)]);
        assert!(twistless_decompositions(&e).unwrap().is_empty());
    }

    #[test]
    fn glued_squares_split_along_shared_path() {
        // 4-cycles a-b-c-x and a-b-c-y glued along a-b-c
        let g =
            graph(&["a", "b", "c", "x", "y"], &[("a", "b", 3), ("b", "c", 3), ("c", "x", 3), ("x", "a", 3), ("c", "y", 3), ("y", "a", 3)]);
        let ds = twistless_decompositions(&g).unwrap();
        let want = Decomposition { part1: vec![0, 1, 2, 3], part2: vec![0, 1, 2, 4], intersection: vec![0, 1, 2], twistless: true };
        assert!(ds.contains(&want));
        for d in &ds {
            assert!(d.is_valid_for(&g, &[0, 1, 2, 3, 4]));
        }
    }

    #[test]
    fn wheel_is_a_star_leaf() {
        let w = wheel(3);
        let t = find_twistless_hierarchy(&w).unwrap().unwrap();
        assert_eq!(t.decomposition_count(), 0);
        assert!(is_twistless_star(&w, &[0, 1, 2, 3, 4]));
    }

    #[test]
    fn single_edge_has_no_hierarchy() {
        let e = graph(&["s", "t"], &[("s", "t", 3)]);
        assert!(!is_twistless_star(&e, &[0, 1]));
        assert_eq!(find_twistless_hierarchy(&e).unwrap(), None);
    }

    #[test]
    fn glued_wheels_need_one_split() {
        let g = glued_wheels();
        assert!(!is_twistless_star(&g, &(0..7).collect::<Vec<_>>()));
        let t = find_twistless_hierarchy(&g).unwrap().expect("hierarchy exists");
        assert_eq!(t.decomposition_count(), 1);
        for leaf in t.leaves() {
            assert!(is_twistless_star(&g, leaf));
        }
        // the hand-enumerated split: {h1,a,b,c,x} and {h2,a,b,c,y}
        let HierarchyTree::Split { decomposition, .. } = &t else { panic!() };
        assert_eq!(decomposition.intersection, vec![2, 3, 4]);
        assert!(decomposition.is_valid_for(&g, &(0..7).collect::<Vec<_>>()));
    }

    #[test]
    fn oversized_graphs_are_refused() {
        let names: Vec<String> = (0..13).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String, i64)> = (0..12).map(|i| (names[i].clone(), names[i + 1].clone(), 3)).collect();
        let g = PresentationGraph::new(&names, &edges).unwrap();
        assert!(matches!(find_twistless_hierarchy(&g), Err(GraphError::TooLarge(13, 12))));
    }
}
