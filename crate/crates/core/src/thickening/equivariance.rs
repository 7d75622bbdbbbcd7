use super::{Patch, PatchError};
use crate::automorphism::OuterClass;
use crate::words::ArtinGroup;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivarianceReport {
    pub automorphism: String,
    /// Image of each vertex; `None` where it leaves the patch.
    pub map: Vec<Option<usize>>,
    pub outside: usize,
    pub injective: bool,
    pub edges_checked: usize,
    pub edge_violations: Vec<[usize; 2]>,
    pub simplices_checked: usize,
    pub simplex_violations: Vec<Vec<usize>>,
    pub order: u64,
    /// Vertices whose full orbit stays inside the patch.
    pub orbit_checked: usize,
    /// Those among them not returned to themselves after `order` steps.
    pub order_violations: Vec<usize>,
}

impl EquivarianceReport {
    pub fn violations(&self) -> usize {
        self.edge_violations.len() + self.simplex_violations.len() + self.order_violations.len() + (!self.injective) as usize
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// The simplicial map a diagram automorphism induces on the patch, checked
/// where images stay inside.
pub fn induced_automorphism(p: &Patch, group: &ArtinGroup, psi: &OuterClass) -> Result<EquivarianceReport, PatchError> {
    let g = group.graph();
    if psi.perm.len() != g.len() {
        return Err(PatchError::Malformed(format!("automorphism acts on {} generators, graph has {}", psi.perm.len(), g.len())));
    }
    let aut = psi.to_automorphism();
    let mut map = vec![None; p.vertices.len()];
    for (v, slot) in map.iter_mut().enumerate().take(p.group_vertices) {
        let w = p.word(v).ok_or_else(|| PatchError::Malformed("patch has no element index; rebuild it from the graph".into()))?;
        *slot = p.locate(group, &aut.apply_diagram(w))?;
    }
    let by_boundary: HashMap<Vec<usize>, usize> = p.cells.iter().enumerate().map(|(i, c)| (sorted(c.boundary()), i)).collect();
    for c in &p.cells {
        let image: Option<Vec<usize>> = c.boundary().iter().map(|&b| map[b]).collect();
        let Some(&target) = image.and_then(|b| by_boundary.get(&sorted(b))) else {
            continue;
        };
        let d = &p.cells[target];
        for j in 1..=c.interior.len() {
            let want: Option<Vec<usize>> = c.interior_neighbors(j).iter().map(|&b| map[b]).collect();
            let want = sorted(want.expect("boundary mapped"));
            map[c.interior[j - 1]] = (1..=d.interior.len()).find(|&k| d.interior_neighbors(k) == want).map(|k| d.interior[k - 1]);
        }
    }
    let outside = map.iter().filter(|x| x.is_none()).count();
    let mut seen = HashSet::new();
    let injective = map.iter().flatten().all(|&x| seen.insert(x));

    let mut edges_checked = 0;
    let mut edge_violations = Vec::new();
    for &(a, b) in &p.edges {
        if let (Some(x), Some(y)) = (map[a], map[b]) {
            edges_checked += 1;
            if !p.has_edge(x, y) {
                edge_violations.push([a, b]);
            }
        }
    }
    let simplices: HashSet<&[usize]> = p.simplices.iter().map(|s| s.as_slice()).collect();
    let mut simplices_checked = 0;
    let mut simplex_violations = Vec::new();
    for s in &p.simplices {
        let Some(image) = s.iter().map(|&v| map[v]).collect::<Option<Vec<usize>>>() else {
            continue;
        };
        simplices_checked += 1;
        if !simplices.contains(sorted(image).as_slice()) {
            simplex_violations.push(s.clone());
        }
    }

    let order = psi.order();
    let mut orbit_checked = 0;
    let mut order_violations = Vec::new();
    'vertices: for v in 0..map.len() {
        let mut x = v;
        for _ in 0..order {
            match map[x] {
                Some(y) => x = y,
                None => continue 'vertices,
            }
        }
        orbit_checked += 1;
        if x != v {
            order_violations.push(v);
        }
    }

    Ok(EquivarianceReport {
        automorphism: psi.render(g),
        map,
        outside,
        injective,
        edges_checked,
        edge_violations,
        simplices_checked,
        simplex_violations,
        order,
        orbit_checked,
        order_violations,
    })
}
