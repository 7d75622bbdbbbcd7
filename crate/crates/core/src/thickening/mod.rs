//! Finite patches of the thickened Cayley complex: subdivided precells,
//! zigzags between precells sharing a path, flag completion, and local checks.

mod ball;
mod equivariance;
mod flag;
mod links;
mod precell;
mod zigzag;

pub use equivariance::{induced_automorphism, EquivarianceReport};
pub use flag::{cliques, flag_complete, DEFAULT_DIMENSION_CAP};
pub use links::{check_links_6_large, induced_cycles, LinkEntry, LinkReport};
pub use precell::{subdivide_precell, DiskComplex};
pub use zigzag::insert_zigzags;

use crate::graph::PresentationGraph;
use crate::words::{pi_word, ArtinGroup, Budget, Letter, Word, WordError};
use ball::Ball;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatchError {
    #[error("edge label {0} is below 3; precells need large type")]
    SmallLabel(u32),
    #[error("could not decide whether {0} and {1} are equal within the budget")]
    Unresolved(String, String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("malformed patch: {0}")]
    Malformed(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "kebab-case")]
pub enum VertexTag {
    Group {
        word: String,
    },
    /// Interior vertex `i_index` of precell `cell`.
    Interior {
        cell: usize,
        index: usize,
    },
}

/// A subdivided lift of the relator of edge `{s, t}` based at `source`.
/// `top[k]` is `source · Π(s,t;k)` and `bottom[k]` is `source · Π(t,s;k)`, so
/// both sides share their ends.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Precell {
    pub source: usize,
    pub edge: (usize, usize),
    pub m: u32,
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
    pub interior: Vec<usize>,
}

impl Precell {
    pub fn sink(&self) -> usize {
        self.top[self.m as usize]
    }

    /// The `2m` boundary vertices in cyclic order.
    pub fn boundary(&self) -> Vec<usize> {
        let m = self.m as usize;
        let mut c = self.top.clone();
        c.extend((1..m).rev().map(|k| self.bottom[k]));
        c
    }

    /// Boundary edges oriented along the positive generator, with the
    /// interior vertex each one spans a triangle with.
    pub fn directed_edges(&self) -> Vec<((usize, usize), usize)> {
        let m = self.m as usize;
        let mut out = Vec::with_capacity(2 * m);
        for side in [&self.top, &self.bottom] {
            for k in 0..m {
                let j = k.clamp(1, m - 2);
                out.push(((side[k], side[k + 1]), self.interior[j - 1]));
            }
        }
        out
    }

    /// Group vertices adjacent to interior vertex `i_j`.
    pub fn interior_neighbors(&self, j: usize) -> Vec<usize> {
        let m = self.m as usize;
        let mut out = vec![self.top[j], self.top[j + 1], self.bottom[j], self.bottom[j + 1]];
        if j == 1 {
            out.push(self.top[0]);
        }
        if j == m - 2 {
            out.push(self.top[m]);
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

pub struct Patch {
    pub names: Vec<String>,
    pub radius: usize,
    pub group_vertices: usize,
    pub vertices: Vec<VertexTag>,
    pub edges: BTreeSet<(usize, usize)>,
    /// Flag simplices of dimension at least 2.
    pub simplices: Vec<Vec<usize>>,
    pub dimension_cap: usize,
    pub cells: Vec<Precell>,
    pub patch_interior: Vec<bool>,
    pub log: Vec<String>,
    ball: Option<Ball>,
}

fn add_edge(edges: &mut BTreeSet<(usize, usize)>, a: usize, b: usize) -> bool {
    edges.insert((a.min(b), a.max(b)))
}

impl Patch {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Index of the precell with this source and edge.
    pub fn cell_at(&self, source: usize, edge: (usize, usize)) -> Option<usize> {
        self.cells.iter().position(|c| c.source == source && c.edge == edge)
    }

    pub fn word(&self, v: usize) -> Option<&Word> {
        self.ball.as_ref().and_then(|b| b.words.get(v))
    }

    pub(crate) fn locate(&self, group: &ArtinGroup, w: &Word) -> Result<Option<usize>, PatchError> {
        match &self.ball {
            Some(b) => b.locate(group, w),
            None => Err(PatchError::Malformed("patch has no element index; rebuild it from the graph".into())),
        }
    }

    pub fn patch_interior_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.patch_interior[v]).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PatchJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Patch, PatchError> {
        let j: PatchJson = serde_json::from_str(text).map_err(|e| PatchError::Malformed(e.to_string()))?;
        j.into_patch()
    }
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: usize,
    #[serde(flatten)]
    tag: VertexTag,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    patch_interior: bool,
}

#[derive(Serialize, Deserialize)]
struct CellJson {
    source: usize,
    edge: [String; 2],
    m: u32,
    top: Vec<usize>,
    bottom: Vec<usize>,
    interior: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PatchJson {
    generators: Vec<String>,
    radius: usize,
    dimension_cap: usize,
    vertices: Vec<VertexJson>,
    edges: Vec<[usize; 2]>,
    simplices: Vec<Vec<usize>>,
    cells: Vec<CellJson>,
}

impl From<&Patch> for PatchJson {
    fn from(p: &Patch) -> Self {
        PatchJson {
            generators: p.names.clone(),
            radius: p.radius,
            dimension_cap: p.dimension_cap,
            vertices: p
                .vertices
                .iter()
                .enumerate()
                .map(|(id, tag)| VertexJson { id, tag: tag.clone(), patch_interior: p.patch_interior[id] })
                .collect(),
            edges: p.edges.iter().map(|&(a, b)| [a, b]).collect(),
            simplices: p.simplices.clone(),
            cells: p
                .cells
                .iter()
                .map(|c| CellJson {
                    source: c.source,
                    edge: [p.names[c.edge.0].clone(), p.names[c.edge.1].clone()],
                    m: c.m,
                    top: c.top.clone(),
                    bottom: c.bottom.clone(),
                    interior: c.interior.clone(),
                })
                .collect(),
        }
    }
}

impl PatchJson {
    fn into_patch(self) -> Result<Patch, PatchError> {
        let n = self.vertices.len();
        if self.vertices.iter().enumerate().any(|(i, v)| v.id != i) {
            return Err(PatchError::Malformed("vertex ids must be 0, 1, 2, ... in order".into()));
        }
        let bad = |i: &usize| *i >= n;
        if self.edges.iter().flatten().any(bad) || self.simplices.iter().flatten().any(bad) {
            return Err(PatchError::Malformed("reference to a missing vertex".into()));
        }
        let index = |name: &str| {
            self.generators.iter().position(|g| g == name).ok_or_else(|| PatchError::Malformed(format!("unknown generator {name}")))
        };
        let mut cells = Vec::new();
        for c in &self.cells {
            let m = c.m as usize;
            if c.top.len() != m + 1 || c.bottom.len() != m + 1 || c.interior.len() + 2 != m {
                return Err(PatchError::Malformed("precell sizes do not match its label".into()));
            }
            cells.push(Precell {
                source: c.source,
                edge: (index(&c.edge[0])?, index(&c.edge[1])?),
                m: c.m,
                top: c.top.clone(),
                bottom: c.bottom.clone(),
                interior: c.interior.clone(),
            });
        }
        Ok(Patch {
            group_vertices: self.vertices.iter().filter(|v| matches!(v.tag, VertexTag::Group { .. })).count(),
            patch_interior: self.vertices.iter().map(|v| v.patch_interior).collect(),
            vertices: self.vertices.into_iter().map(|v| v.tag).collect(),
            edges: self.edges.iter().map(|e| (e[0].min(e[1]), e[0].max(e[1]))).collect(),
            names: self.generators,
            radius: self.radius,
            simplices: self.simplices,
            dimension_cap: self.dimension_cap,
            cells,
            log: Vec::new(),
            ball: None,
        })
    }
}

fn letter_word(g: usize, inverse: bool) -> Word {
    Word::letter(Letter { generator: g, inverse })
}

/// Locates the boundary of the precell of `edge` based at `base`; `None` if
/// some boundary vertex leaves the ball.
fn precell_boundary(
    group: &ArtinGroup,
    ball: &Ball,
    base: &Word,
    (s, t, m): (usize, usize, u32),
) -> Result<Option<(Vec<usize>, Vec<usize>)>, PatchError> {
    let m = m as usize;
    let mut sides = Vec::new();
    for (x, y) in [(s, t), (t, s)] {
        let mut side = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let w = if k == 0 { base.clone() } else { base.concat(&pi_word(x, y, k)?) };
            match ball.locate(group, &w)? {
                Some(i) => side.push(i),
                None => return Ok(None),
            }
        }
        sides.push(side);
    }
    let bottom = sides.pop().unwrap();
    Ok(Some((sides.pop().unwrap(), bottom)))
}

/// Every cell containing the group element `w`, as (source word, edge).
fn cells_through(g: &PresentationGraph, w: &Word) -> Vec<(Word, (usize, usize, u32))> {
    let mut out = Vec::new();
    for (s, t, m) in g.edges() {
        let mu = m as usize;
        out.push((w.clone(), (s, t, m)));
        for k in 1..=mu {
            out.push((w.mul(&pi_word(s, t, k).unwrap().inverse()), (s, t, m)));
        }
        for k in 1..mu {
            out.push((w.mul(&pi_word(t, s, k).unwrap().inverse()), (s, t, m)));
        }
    }
    out
}

/// Enumerates the ball of radius `radius`, lifts every relator whose
/// boundary lies in it, subdivides, adds zigzags and flag-completes.
pub fn build_cayley_patch(group: &ArtinGroup, radius: usize, budget: &Budget) -> Result<Patch, PatchError> {
    let g = group.graph();
    if let Some((_, _, m)) = g.edges().into_iter().find(|e| e.2 < 3) {
        return Err(PatchError::SmallLabel(m));
    }
    let ball = Ball::build(group, radius, budget)?;
    let n = ball.len();
    let mut log = vec![format!("ball of radius {radius}: {n} elements")];
    let mut edges = BTreeSet::new();
    for i in 0..n {
        for s in 0..g.len() {
            if let Some(j) = ball.locate(group, &ball.words[i].concat(&letter_word(s, false)))? {
                add_edge(&mut edges, i, j);
            }
        }
    }
    let mut vertices: Vec<VertexTag> = ball.words.iter().map(|w| VertexTag::Group { word: w.render(g) }).collect();
    let mut cells = Vec::new();
    for i in 0..n {
        for (s, t, m) in g.edges() {
            let Some((top, bottom)) = precell_boundary(group, &ball, &ball.words[i], (s, t, m))? else {
                continue;
            };
            let disk = subdivide_precell(m)?;
            let first = vertices.len();
            let cell = cells.len();
            for j in 1..=m as usize - 2 {
                vertices.push(VertexTag::Interior { cell, index: j });
            }
            let interior: Vec<usize> = (first..vertices.len()).collect();
            let mu = m as usize;
            let global = |d: usize| -> usize {
                if d <= mu {
                    top[d]
                } else if d < 2 * mu {
                    bottom[d - mu]
                } else {
                    interior[d - 2 * mu]
                }
            };
            for &(a, b) in &disk.edges {
                add_edge(&mut edges, global(a), global(b));
            }
            cells.push(Precell { source: i, edge: (s, t), m, top, bottom, interior });
        }
    }
    log.push(format!("{} precells", cells.len()));
    let mut patch = Patch {
        names: g.names().to_vec(),
        radius,
        group_vertices: n,
        patch_interior: vec![false; vertices.len()],
        vertices,
        edges,
        simplices: Vec::new(),
        dimension_cap: DEFAULT_DIMENSION_CAP,
        cells,
        log,
        ball: Some(ball),
    };
    let added = insert_zigzags(&mut patch);
    patch.log.push(format!("zigzags: {added} edges"));
    flag_complete(&mut patch, DEFAULT_DIMENSION_CAP);
    patch.log.push(format!("flag completion: {} simplices of dimension 2..={}", patch.simplices.len(), DEFAULT_DIMENSION_CAP));
    mark_patch_interior(&mut patch, group)?;
    Ok(patch)
}

fn mark_patch_interior(p: &mut Patch, group: &ArtinGroup) -> Result<(), PatchError> {
    let g = group.graph();
    let ball = p.ball.as_ref().unwrap();
    let cell_index: HashMap<(usize, (usize, usize)), usize> = p.cells.iter().enumerate().map(|(i, c)| ((c.source, c.edge), i)).collect();
    let present = |src: &Word, (s, t, _): (usize, usize, u32)| -> Result<bool, PatchError> {
        Ok(match ball.locate(group, src)? {
            Some(i) => cell_index.contains_key(&(i, (s, t))),
            None => false,
        })
    };
    let mut flags = vec![false; p.vertices.len()];
    for v in 0..p.group_vertices {
        let w = &ball.words[v];
        let mut ok = true;
        for s in 0..g.len() {
            for inverse in [false, true] {
                ok &= ball.locate(group, &w.concat(&letter_word(s, inverse)))?.is_some();
            }
        }
        if ok {
            for (src, e) in cells_through(g, w) {
                if !present(&src, e)? {
                    ok = false;
                    break;
                }
            }
        }
        flags[v] = ok;
    }
    // an interior vertex needs its own cell and every cell meeting it in two
    // or more edges
    for c in &p.cells {
        let own: BTreeSet<(usize, usize)> = c.directed_edges().iter().map(|e| e.0).collect();
        let mut ok = true;
        'edges: for &(x, _) in &own {
            let w = &ball.words[x];
            for (src, (s, t, m)) in cells_through(g, w) {
                if present(&src, (s, t, m))? {
                    continue;
                }
                // absent cell: count its located boundary edges shared with c
                let mu = m as usize;
                let mut shared = 0;
                for (a, b) in [(s, t), (t, s)] {
                    let mut prev = ball.locate(group, &src)?;
                    for k in 1..=mu {
                        let cur = ball.locate(group, &src.concat(&pi_word(a, b, k)?))?;
                        if let (Some(p0), Some(p1)) = (prev, cur) {
                            shared += own.contains(&(p0, p1)) as usize;
                        }
                        prev = cur;
                    }
                }
                if shared >= 2 {
                    ok = false;
                    break 'edges;
                }
            }
        }
        for &i in &c.interior {
            flags[i] = ok;
        }
    }
    p.patch_interior = flags;
    Ok(())
}
