//! Topological crystal structure: a finite base graph with a `Z^d` action
//! encoded by per-edge lattice indices, periodic measure and potential,
//! lifting to the infinite cover, cubic truncations, and finitely supported
//! cochains on the cover.

use crate::graph::{Measure, OrientedEdge, OrientedGraph, Potential};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CrystalError {
    #[error("descriptor field `{field}`: {reason}")]
    Validation { field: String, reason: String },
    #[error("unknown catalog lattice `{0}` (known: z1, z2, hexagonal, ladder)")]
    UnknownLattice(String),
    #[error("truncation radius must be >= 0")]
    NegativeRadius,
    #[error("descriptor parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}

/// A point of the translation lattice `Z^d`, written additively.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn zero(dim: usize) -> Self {
        LatticePoint(vec![0; dim])
    }

    /// The standard basis vector `δ_axis`.
    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = vec![0; dim];
        v[axis] = 1;
        LatticePoint(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| -a).collect())
    }

    pub fn sup_norm(&self) -> i64 {
        self.0.iter().map(|a| a.abs()).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Serialized form of a crystal: base graph, per-edge lattice indices and
/// the periodic data. Vertex references in edges are 1-based.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrystalDescriptor {
    pub dimension: usize,
    pub vertices: Vec<VertexSpec>,
    pub edges: Vec<EdgeSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexSpec {
    pub name: String,
    pub measure: f64,
    #[serde(default)]
    pub potential: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeSpec {
    pub from: usize,
    pub to: usize,
    pub eta: Vec<i64>,
    pub measure: f64,
    #[serde(default)]
    pub potential: f64,
}

impl CrystalDescriptor {
    pub fn from_json(text: &str) -> Result<Self, CrystalError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serializes")
    }
}

/// A vertex `μ·x̂_j` of the cover.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrystalVertex {
    pub base: usize,
    pub cell: LatticePoint,
}

/// An oriented edge of the cover, as the translate `μ·ê` of a fundamental
/// domain edge. `cell` is the entire part, which coincides with the entire
/// part of the origin vertex for either orientation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrystalEdge {
    pub base: usize,
    pub cell: LatticePoint,
    pub reversed: bool,
}

/// A validated topological crystal over `Z^d`.
#[derive(Debug, Clone)]
pub struct Crystal {
    descriptor: CrystalDescriptor,
    base: OrientedGraph,
    measure: Measure,
    potential: Potential,
    eta: Vec<LatticePoint>,
    paths_to_vertex: Vec<Option<Vec<CrystalEdge>>>,
    paths_along_axis: Vec<Option<Vec<CrystalEdge>>>,
}

pub fn build_crystal(descriptor: CrystalDescriptor) -> Result<Crystal, CrystalError> {
    Crystal::new(descriptor)
}

impl Crystal {
    pub fn new(descriptor: CrystalDescriptor) -> Result<Self, CrystalError> {
        let d = descriptor.dimension;
        if d < 1 {
            return Err(CrystalError::Validation {
                field: "dimension".into(),
                reason: "must be >= 1".into(),
            });
        }
        let n = descriptor.vertices.len();
        if n < 1 {
            return Err(CrystalError::Validation {
                field: "vertices".into(),
                reason: "at least one base vertex required".into(),
            });
        }
        if descriptor.edges.is_empty() {
            return Err(CrystalError::Validation {
                field: "edges".into(),
                reason: "at least one base edge required".into(),
            });
        }
        for (i, v) in descriptor.vertices.iter().enumerate() {
            if !(v.measure > 0.0) || !v.measure.is_finite() {
                return Err(CrystalError::Validation {
                    field: format!("vertices[{i}].measure"),
                    reason: format!("must be strictly positive, got {}", v.measure),
                });
            }
        }
        let mut ends = Vec::with_capacity(descriptor.edges.len());
        let mut eta = Vec::with_capacity(descriptor.edges.len());
        for (i, e) in descriptor.edges.iter().enumerate() {
            if !(e.measure > 0.0) || !e.measure.is_finite() {
                return Err(CrystalError::Validation {
                    field: format!("edges[{i}].measure"),
                    reason: format!("must be strictly positive, got {}", e.measure),
                });
            }
            if e.from < 1 || e.from > n {
                return Err(CrystalError::Validation {
                    field: format!("edges[{i}].from"),
                    reason: format!("vertex index {} out of range 1..={n}", e.from),
                });
            }
            if e.to < 1 || e.to > n {
                return Err(CrystalError::Validation {
                    field: format!("edges[{i}].to"),
                    reason: format!("vertex index {} out of range 1..={n}", e.to),
                });
            }
            if e.eta.len() != d {
                return Err(CrystalError::Validation {
                    field: format!("edges[{i}].eta"),
                    reason: format!("has {} components, expected dimension {d}", e.eta.len()),
                });
            }
            ends.push((e.from - 1, e.to - 1));
            eta.push(LatticePoint(e.eta.clone()));
        }
        let base = OrientedGraph::new(n, ends)?;
        let measure = Measure::new(
            &base,
            descriptor.vertices.iter().map(|v| v.measure).collect(),
            descriptor.edges.iter().map(|e| e.measure).collect(),
        )?;
        let potential = Potential {
            vertex: descriptor.vertices.iter().map(|v| v.potential).collect(),
            edge: descriptor.edges.iter().map(|e| e.potential).collect(),
        };
        let mut crystal = Crystal {
            descriptor,
            base,
            measure,
            potential,
            eta,
            paths_to_vertex: Vec::new(),
            paths_along_axis: Vec::new(),
        };
        crystal.paths_to_vertex = (0..n)
            .map(|j| crystal.bfs_path(0, &CrystalVertex { base: j, cell: LatticePoint::zero(d) }))
            .collect();
        crystal.paths_along_axis = (0..d)
            .map(|axis| {
                crystal.bfs_path(
                    0,
                    &CrystalVertex {
                        base: 0,
                        cell: LatticePoint::unit(d, axis),
                    },
                )
            })
            .collect();
        Ok(crystal)
    }

    pub fn descriptor(&self) -> &CrystalDescriptor {
        &self.descriptor
    }

    pub fn base(&self) -> &OrientedGraph {
        &self.base
    }

    /// The periodic measure, one value per base element.
    pub fn measure(&self) -> &Measure {
        &self.measure
    }

    /// The periodic potential `R_Γ`.
    pub fn potential(&self) -> &Potential {
        &self.potential
    }

    pub fn dimension(&self) -> usize {
        self.descriptor.dimension
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.base.edge_count()
    }

    /// Fiber dimension `n + l` of the Bloch matrices.
    pub fn fiber_dim(&self) -> usize {
        self.vertex_count() + self.edge_count()
    }

    /// The index `η(ê_k)` of a canonical base edge.
    pub fn base_eta(&self, k: usize) -> &LatticePoint {
        &self.eta[k]
    }

    /// The index of any lifted edge: `η(ē) = -η(e)` and translation leaves
    /// the index unchanged.
    pub fn edge_index(&self, e: &CrystalEdge) -> LatticePoint {
        if e.reversed {
            self.eta[e.base].neg()
        } else {
            self.eta[e.base].clone()
        }
    }

    pub fn lift_vertex(&self, cell: &LatticePoint, base: usize) -> CrystalVertex {
        CrystalVertex {
            base,
            cell: cell.clone(),
        }
    }

    pub fn lift_edge(&self, cell: &LatticePoint, base: OrientedEdge) -> CrystalEdge {
        CrystalEdge {
            base: base.index,
            cell: cell.clone(),
            reversed: base.reversed,
        }
    }

    pub fn entire_part_vertex(&self, v: &CrystalVertex) -> (LatticePoint, usize) {
        (v.cell.clone(), v.base)
    }

    pub fn entire_part_edge(&self, e: &CrystalEdge) -> (LatticePoint, OrientedEdge) {
        (
            e.cell.clone(),
            OrientedEdge {
                index: e.base,
                reversed: e.reversed,
            },
        )
    }

    pub fn origin(&self, e: &CrystalEdge) -> CrystalVertex {
        let ends = self.base.edge(e.base);
        if e.reversed {
            CrystalVertex {
                base: ends.terminus,
                cell: e.cell.clone(),
            }
        } else {
            CrystalVertex {
                base: ends.origin,
                cell: e.cell.clone(),
            }
        }
    }

    pub fn terminus(&self, e: &CrystalEdge) -> CrystalVertex {
        let ends = self.base.edge(e.base);
        if e.reversed {
            CrystalVertex {
                base: ends.origin,
                cell: e.cell.sub(&self.eta[e.base]),
            }
        } else {
            CrystalVertex {
                base: ends.terminus,
                cell: e.cell.add(&self.eta[e.base]),
            }
        }
    }

    pub fn reverse(&self, e: &CrystalEdge) -> CrystalEdge {
        if e.reversed {
            CrystalEdge {
                base: e.base,
                cell: e.cell.sub(&self.eta[e.base]),
                reversed: false,
            }
        } else {
            CrystalEdge {
                base: e.base,
                cell: e.cell.add(&self.eta[e.base]),
                reversed: true,
            }
        }
    }

    /// The underlying unoriented edge as `(base index, cell of the canonical
    /// orientation)`.
    pub fn unoriented(&self, e: &CrystalEdge) -> (usize, LatticePoint) {
        if e.reversed {
            (e.base, e.cell.sub(&self.eta[e.base]))
        } else {
            (e.base, e.cell.clone())
        }
    }

    /// The lifted outgoing star of a cover vertex. Both orientations of a
    /// lifted edge with origin here carry the cell of this vertex.
    pub fn outgoing_lifted(&self, v: &CrystalVertex) -> Vec<CrystalEdge> {
        self.base
            .outgoing(v.base)
            .iter()
            .map(|oe| CrystalEdge {
                base: oe.index,
                cell: v.cell.clone(),
                reversed: oe.reversed,
            })
            .collect()
    }

    pub fn translate_vertex(&self, v: &CrystalVertex, mu: &LatticePoint) -> CrystalVertex {
        CrystalVertex {
            base: v.base,
            cell: v.cell.add(mu),
        }
    }

    pub fn translate_edge(&self, e: &CrystalEdge, mu: &LatticePoint) -> CrystalEdge {
        CrystalEdge {
            base: e.base,
            cell: e.cell.add(mu),
            reversed: e.reversed,
        }
    }

    /// Breadth-first path between two cover vertices, as a list of lifted
    /// oriented edges to traverse. Search is capped at a cell radius
    /// proportional to the crystal size; `None` when unreachable within it.
    pub fn bfs_path(&self, from_base: usize, to: &CrystalVertex) -> Option<Vec<CrystalEdge>> {
        let d = self.dimension();
        let start = CrystalVertex {
            base: from_base,
            cell: LatticePoint::zero(d),
        };
        if start == *to {
            return Some(Vec::new());
        }
        let radius_cap = 2 * (self.vertex_count() as i64 + d as i64) + to.cell.sup_norm() + 2;
        let mut prev: BTreeMap<CrystalVertex, CrystalEdge> = BTreeMap::new();
        let mut queue = VecDeque::new();
        queue.push_back(start.clone());
        prev.insert(start.clone(), CrystalEdge {
            base: 0,
            cell: LatticePoint::zero(d),
            reversed: false,
        });
        while let Some(v) = queue.pop_front() {
            for e in self.outgoing_lifted(&v) {
                let w = self.terminus(&e);
                if w.cell.sup_norm() > radius_cap || prev.contains_key(&w) {
                    continue;
                }
                prev.insert(w.clone(), e.clone());
                if w == *to {
                    let mut path = Vec::new();
                    let mut cur = w;
                    while cur != start {
                        let pe = prev.get(&cur).expect("backtrack chain").clone();
                        cur = self.origin(&pe);
                        path.push(pe);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(w);
            }
        }
        None
    }

    /// Precomputed path from the anchor vertex `x̂_1` to `x̂_j`.
    pub fn path_to_vertex(&self, j: usize) -> Option<&[CrystalEdge]> {
        self.paths_to_vertex.get(j).and_then(|p| p.as_deref())
    }

    /// Precomputed path from `x̂_1` to its lattice neighbor `δ_axis · x̂_1`.
    pub fn path_along_axis(&self, axis: usize) -> Option<&[CrystalEdge]> {
        self.paths_along_axis.get(axis).and_then(|p| p.as_deref())
    }

    /// Induced weighted subgraph on the sup-norm ball `|cell| <= radius`.
    /// Edges crossing the boundary are dropped.
    pub fn truncate(&self, radius: i64) -> Result<Truncation, CrystalError> {
        if radius < 0 {
            return Err(CrystalError::NegativeRadius);
        }
        let d = self.dimension();
        let n = self.vertex_count();
        let mut vertices = Vec::new();
        let mut vertex_index = BTreeMap::new();
        for cell in ball_cells(d, radius) {
            for j in 0..n {
                let v = CrystalVertex {
                    base: j,
                    cell: cell.clone(),
                };
                vertex_index.insert(v.clone(), vertices.len());
                vertices.push(v);
            }
        }
        let mut edges = Vec::new();
        let mut ends = Vec::new();
        for cell in ball_cells(d, radius) {
            for k in 0..self.edge_count() {
                let e = CrystalEdge {
                    base: k,
                    cell: cell.clone(),
                    reversed: false,
                };
                let o = self.origin(&e);
                let t = self.terminus(&e);
                if t.cell.sup_norm() > radius {
                    continue;
                }
                ends.push((vertex_index[&o], vertex_index[&t]));
                edges.push((k, cell.clone()));
            }
        }
        let graph = OrientedGraph::new(vertices.len(), ends)?;
        let measure = Measure::new(
            &graph,
            vertices.iter().map(|v| self.measure.vertex[v.base]).collect(),
            edges.iter().map(|(k, _)| self.measure.edge[*k]).collect(),
        )?;
        let potential = Potential {
            vertex: vertices
                .iter()
                .map(|v| self.potential.vertex[v.base])
                .collect(),
            edge: edges.iter().map(|(k, _)| self.potential.edge[*k]).collect(),
        };
        Ok(Truncation {
            radius,
            graph,
            measure,
            potential,
            vertices,
            edges,
            vertex_index,
        })
    }
}

/// Cells of the sup-norm ball in lexicographic order.
pub fn ball_cells(dim: usize, radius: i64) -> Vec<LatticePoint> {
    let mut cells = Vec::new();
    let mut cur = vec![-radius; dim];
    loop {
        cells.push(LatticePoint(cur.clone()));
        let mut axis = dim;
        while axis > 0 {
            axis -= 1;
            if cur[axis] < radius {
                cur[axis] += 1;
                for c in cur.iter_mut().skip(axis + 1) {
                    *c = -radius;
                }
                break;
            }
            if axis == 0 {
                return cells;
            }
        }
    }
}

/// A finite truncation of the cover, with maps back to crystal coordinates.
#[derive(Debug, Clone)]
pub struct Truncation {
    pub radius: i64,
    pub graph: OrientedGraph,
    pub measure: Measure,
    pub potential: Potential,
    pub vertices: Vec<CrystalVertex>,
    pub edges: Vec<(usize, LatticePoint)>,
    vertex_index: BTreeMap<CrystalVertex, usize>,
}

impl Truncation {
    pub fn vertex_position(&self, v: &CrystalVertex) -> Option<usize> {
        self.vertex_index.get(v).copied()
    }

    /// True when every lifted neighbor of the vertex stays inside the ball.
    pub fn is_interior(&self, crystal: &Crystal, v: &CrystalVertex) -> bool {
        crystal
            .outgoing_lifted(v)
            .iter()
            .all(|e| crystal.terminus(e).cell.sup_norm() <= self.radius)
    }
}

/// A finitely supported cochain on the cover. Edge values are stored on the
/// canonical orientation, keyed by `(base, cell)`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LiftedCochain {
    pub vertex: BTreeMap<(usize, LatticePoint), Complex64>,
    pub edge: BTreeMap<(usize, LatticePoint), Complex64>,
}

impl LiftedCochain {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex_value(&self, v: &CrystalVertex) -> Complex64 {
        self.vertex
            .get(&(v.base, v.cell.clone()))
            .copied()
            .unwrap_or(Complex64::ZERO)
    }

    pub fn set_vertex(&mut self, v: &CrystalVertex, value: Complex64) {
        self.vertex.insert((v.base, v.cell.clone()), value);
    }

    pub fn add_vertex(&mut self, v: &CrystalVertex, value: Complex64) {
        *self
            .vertex
            .entry((v.base, v.cell.clone()))
            .or_insert(Complex64::ZERO) += value;
    }

    /// Oriented read with `f(ē) = -f(e)`.
    pub fn edge_value(&self, crystal: &Crystal, e: &CrystalEdge) -> Complex64 {
        let (k, cell) = crystal.unoriented(e);
        let v = self.edge.get(&(k, cell)).copied().unwrap_or(Complex64::ZERO);
        if e.reversed {
            -v
        } else {
            v
        }
    }

    pub fn set_edge(&mut self, crystal: &Crystal, e: &CrystalEdge, value: Complex64) {
        let (k, cell) = crystal.unoriented(e);
        let v = if e.reversed { -value } else { value };
        self.edge.insert((k, cell), v);
    }

    pub fn add_edge(&mut self, crystal: &Crystal, e: &CrystalEdge, value: Complex64) {
        let (k, cell) = crystal.unoriented(e);
        let v = if e.reversed { -value } else { value };
        *self.edge.entry((k, cell)).or_insert(Complex64::ZERO) += v;
    }

    pub fn is_empty(&self) -> bool {
        self.vertex.is_empty() && self.edge.is_empty()
    }

    /// Largest cell sup-norm touched by the support, including edge termini.
    pub fn support_radius(&self, crystal: &Crystal) -> i64 {
        let mut r = 0;
        for (_, cell) in self.vertex.keys() {
            r = r.max(cell.sup_norm());
        }
        for (k, cell) in self.edge.keys() {
            r = r.max(cell.sup_norm());
            r = r.max(cell.add(crystal.base_eta(*k)).sup_norm());
        }
        r
    }

    pub fn sub(&self, other: &LiftedCochain) -> LiftedCochain {
        let mut out = self.clone();
        for (k, v) in &other.vertex {
            *out.vertex.entry(k.clone()).or_insert(Complex64::ZERO) -= v;
        }
        for (k, v) in &other.edge {
            *out.edge.entry(k.clone()).or_insert(Complex64::ZERO) -= v;
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.vertex
            .values()
            .chain(self.edge.values())
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Norm in `l²(X, m_Γ)`.
    pub fn norm(&self, crystal: &Crystal) -> f64 {
        let m = crystal.measure();
        let mut acc = 0.0;
        for ((j, _), z) in &self.vertex {
            acc += m.vertex[*j] * z.norm_sqr();
        }
        for ((k, _), z) in &self.edge {
            acc += m.edge[*k] * z.norm_sqr();
        }
        acc.sqrt()
    }
}

/// The built-in descriptor catalog.
pub const CATALOG: [&str; 4] = ["z1", "z2", "hexagonal", "ladder"];

/// Descriptors for a few standard lattices: `z1` is the integer line as a
/// one-vertex loop, `z2` its square analogue, `hexagonal` the honeycomb
/// quotient (two vertices, three edges), `ladder` two coupled rails over `Z`.
pub fn standard_lattice(name: &str) -> Result<CrystalDescriptor, CrystalError> {
    let v = |name: &str| VertexSpec {
        name: name.to_owned(),
        measure: 1.0,
        potential: 0.0,
    };
    let e = |from: usize, to: usize, eta: Vec<i64>| EdgeSpec {
        from,
        to,
        eta,
        measure: 1.0,
        potential: 0.0,
    };
    match name {
        "z1" => Ok(CrystalDescriptor {
            dimension: 1,
            vertices: vec![v("x1")],
            edges: vec![e(1, 1, vec![1])],
        }),
        "z2" => Ok(CrystalDescriptor {
            dimension: 2,
            vertices: vec![v("x1")],
            edges: vec![e(1, 1, vec![1, 0]), e(1, 1, vec![0, 1])],
        }),
        "hexagonal" => Ok(CrystalDescriptor {
            dimension: 2,
            vertices: vec![v("a"), v("b")],
            edges: vec![
                e(1, 2, vec![0, 0]),
                e(1, 2, vec![1, 0]),
                e(1, 2, vec![0, 1]),
            ],
        }),
        "ladder" => Ok(CrystalDescriptor {
            dimension: 1,
            vertices: vec![v("bottom"), v("top")],
            edges: vec![e(1, 2, vec![0]), e(1, 1, vec![1]), e(2, 2, vec![1])],
        }),
        other => Err(CrystalError::UnknownLattice(other.to_owned())),
    }
}
