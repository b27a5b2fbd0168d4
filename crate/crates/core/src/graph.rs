//! Finite weighted graphs, cochain spaces and the discrete operators
//! `d`, `d*`, the Gauss-Bonnet operator `D = d + d*` and the two Hodge
//! Laplacians `Δ0 = -d*d`, `Δ1 = -dd*`.
//!
//! Oriented edges come in reversal pairs; only one representative per pair
//! (the *canonical* orientation) is stored. A 1-cochain keeps a single value
//! per pair and reconstructs `f(ē) = -f(e)` on read, so edge antisymmetry
//! cannot be violated by construction.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex {index} out of range (graph has {count} vertices)")]
    UnknownVertex { index: usize, count: usize },
    #[error("edge {index} out of range (graph has {count} edge pairs)")]
    UnknownEdge { index: usize, count: usize },
    #[error("edge {edge} references vertex {vertex}, but the graph has {count} vertices")]
    BadEndpoint {
        edge: usize,
        vertex: usize,
        count: usize,
    },
    #[error("{what}: got {got} entries, expected {expected}")]
    ShapeMismatch {
        what: &'static str,
        got: usize,
        expected: usize,
    },
    #[error("{what} {index} must be strictly positive, got {value}")]
    NonPositive {
        what: &'static str,
        index: usize,
        value: f64,
    },
}

/// One oriented edge: the canonical representative `index` taken either
/// forwards (`reversed = false`) or backwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedEdge {
    pub index: usize,
    pub reversed: bool,
}

impl OrientedEdge {
    pub fn forward(index: usize) -> Self {
        OrientedEdge {
            index,
            reversed: false,
        }
    }

    /// The reversal partner `ē`; an involution.
    pub fn reversal(self) -> Self {
        OrientedEdge {
            index: self.index,
            reversed: !self.reversed,
        }
    }
}

/// Endpoints of a canonical edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeEnds {
    pub origin: usize,
    pub terminus: usize,
}

/// A finite graph with a chosen orientation. Loops and multi-edges are
/// allowed; a loop appears twice in the outgoing star of its vertex (once
/// per orientation).
#[derive(Debug, Clone)]
pub struct OrientedGraph {
    vertex_count: usize,
    edges: Vec<EdgeEnds>,
    outgoing: Vec<Vec<OrientedEdge>>,
}

impl OrientedGraph {
    pub fn new(vertex_count: usize, ends: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(ends.len());
        for (k, &(o, t)) in ends.iter().enumerate() {
            for v in [o, t] {
                if v >= vertex_count {
                    return Err(GraphError::BadEndpoint {
                        edge: k,
                        vertex: v,
                        count: vertex_count,
                    });
                }
            }
            edges.push(EdgeEnds {
                origin: o,
                terminus: t,
            });
        }
        let mut outgoing = vec![Vec::new(); vertex_count];
        for (k, e) in edges.iter().enumerate() {
            outgoing[e.origin].push(OrientedEdge::forward(k));
            outgoing[e.terminus].push(OrientedEdge::forward(k).reversal());
        }
        Ok(OrientedGraph {
            vertex_count,
            edges,
            outgoing,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of edge pairs (unoriented edges).
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, index: usize) -> EdgeEnds {
        self.edges[index]
    }

    pub fn origin(&self, e: OrientedEdge) -> usize {
        let ends = self.edges[e.index];
        if e.reversed {
            ends.terminus
        } else {
            ends.origin
        }
    }

    pub fn terminus(&self, e: OrientedEdge) -> usize {
        let ends = self.edges[e.index];
        if e.reversed {
            ends.origin
        } else {
            ends.terminus
        }
    }

    /// The outgoing star `A_x`. Loops at `x` contribute both orientations.
    pub fn outgoing(&self, x: usize) -> &[OrientedEdge] {
        &self.outgoing[x]
    }

    fn check_vertex(&self, x: usize) -> Result<(), GraphError> {
        if x >= self.vertex_count {
            Err(GraphError::UnknownVertex {
                index: x,
                count: self.vertex_count,
            })
        } else {
            Ok(())
        }
    }
}

/// Positive weights on vertices and unoriented edges (full support).
#[derive(Debug, Clone)]
pub struct Measure {
    pub vertex: Vec<f64>,
    pub edge: Vec<f64>,
}

impl Measure {
    pub fn new(graph: &OrientedGraph, vertex: Vec<f64>, edge: Vec<f64>) -> Result<Self, GraphError> {
        if vertex.len() != graph.vertex_count() {
            return Err(GraphError::ShapeMismatch {
                what: "vertex measure",
                got: vertex.len(),
                expected: graph.vertex_count(),
            });
        }
        if edge.len() != graph.edge_count() {
            return Err(GraphError::ShapeMismatch {
                what: "edge measure",
                got: edge.len(),
                expected: graph.edge_count(),
            });
        }
        for (i, &v) in vertex.iter().enumerate() {
            if !(v > 0.0) || !v.is_finite() {
                return Err(GraphError::NonPositive {
                    what: "vertex measure",
                    index: i,
                    value: v,
                });
            }
        }
        for (i, &v) in edge.iter().enumerate() {
            if !(v > 0.0) || !v.is_finite() {
                return Err(GraphError::NonPositive {
                    what: "edge measure",
                    index: i,
                    value: v,
                });
            }
        }
        Ok(Measure { vertex, edge })
    }

    pub fn unit(graph: &OrientedGraph) -> Self {
        Measure {
            vertex: vec![1.0; graph.vertex_count()],
            edge: vec![1.0; graph.edge_count()],
        }
    }
}

/// A real potential on vertices and unoriented edges; `R(e) = R(ē)` holds by
/// storing one value per pair.
#[derive(Debug, Clone)]
pub struct Potential {
    pub vertex: Vec<f64>,
    pub edge: Vec<f64>,
}

impl Potential {
    pub fn zero(graph: &OrientedGraph) -> Self {
        Potential {
            vertex: vec![0.0; graph.vertex_count()],
            edge: vec![0.0; graph.edge_count()],
        }
    }
}

/// A cochain `f = f0 ⊕ f1`: complex values on vertices plus one value per
/// edge pair on the canonical orientation.
#[derive(Debug, Clone, PartialEq)]
pub struct Cochain {
    pub vertex: Vec<Complex64>,
    pub edge: Vec<Complex64>,
}

impl Cochain {
    pub fn zeros(graph: &OrientedGraph) -> Self {
        Cochain {
            vertex: vec![Complex64::ZERO; graph.vertex_count()],
            edge: vec![Complex64::ZERO; graph.edge_count()],
        }
    }

    /// Indicator of a single vertex.
    pub fn vertex_indicator(graph: &OrientedGraph, x: usize) -> Self {
        let mut f = Self::zeros(graph);
        f.vertex[x] = Complex64::ONE;
        f
    }

    /// Value on an oriented edge, with `f(ē) = -f(e)`.
    pub fn edge_value(&self, e: OrientedEdge) -> Complex64 {
        if e.reversed {
            -self.edge[e.index]
        } else {
            self.edge[e.index]
        }
    }

    /// Assign the value seen from orientation `e`.
    pub fn set_edge_value(&mut self, e: OrientedEdge, v: Complex64) {
        self.edge[e.index] = if e.reversed { -v } else { v };
    }

    pub fn vertex_part(&self) -> Cochain {
        Cochain {
            vertex: self.vertex.clone(),
            edge: vec![Complex64::ZERO; self.edge.len()],
        }
    }

    pub fn edge_part(&self) -> Cochain {
        Cochain {
            vertex: vec![Complex64::ZERO; self.vertex.len()],
            edge: self.edge.clone(),
        }
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        Cochain {
            vertex: self
                .vertex
                .iter()
                .zip(&other.vertex)
                .map(|(a, b)| a + b)
                .collect(),
            edge: self
                .edge
                .iter()
                .zip(&other.edge)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        Cochain {
            vertex: self
                .vertex
                .iter()
                .zip(&other.vertex)
                .map(|(a, b)| a - b)
                .collect(),
            edge: self
                .edge
                .iter()
                .zip(&other.edge)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Unweighted max-norm, handy for residual checks.
    pub fn max_abs(&self) -> f64 {
        self.vertex
            .iter()
            .chain(self.edge.iter())
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    fn check_shape(&self, graph: &OrientedGraph) -> Result<(), GraphError> {
        if self.vertex.len() != graph.vertex_count() {
            return Err(GraphError::ShapeMismatch {
                what: "cochain vertex part",
                got: self.vertex.len(),
                expected: graph.vertex_count(),
            });
        }
        if self.edge.len() != graph.edge_count() {
            return Err(GraphError::ShapeMismatch {
                what: "cochain edge part",
                got: self.edge.len(),
                expected: graph.edge_count(),
            });
        }
        Ok(())
    }
}

/// Weighted degree `deg_m(x) = Σ_{e ∈ A_x} m(e)/m(x)`.
pub fn degree(graph: &OrientedGraph, m: &Measure, x: usize) -> Result<f64, GraphError> {
    graph.check_vertex(x)?;
    let sum: f64 = graph.outgoing(x).iter().map(|e| m.edge[e.index]).sum();
    Ok(sum / m.vertex[x])
}

/// `⟨f,g⟩ = Σ_x m(x) f(x) conj(g(x)) + ½ Σ_{e ∈ A(X)} m(e) f(e) conj(g(e))`.
///
/// The half cancels the double count over orientations, so the edge sum runs
/// once over canonical representatives.
pub fn inner_product(
    graph: &OrientedGraph,
    m: &Measure,
    f: &Cochain,
    g: &Cochain,
) -> Result<Complex64, GraphError> {
    f.check_shape(graph)?;
    g.check_shape(graph)?;
    let mut acc = Complex64::ZERO;
    for x in 0..graph.vertex_count() {
        acc += m.vertex[x] * f.vertex[x] * g.vertex[x].conj();
    }
    for k in 0..graph.edge_count() {
        acc += m.edge[k] * f.edge[k] * g.edge[k].conj();
    }
    Ok(acc)
}

pub fn norm(graph: &OrientedGraph, m: &Measure, f: &Cochain) -> Result<f64, GraphError> {
    Ok(inner_product(graph, m, f, f)?.re.max(0.0).sqrt())
}

/// Coboundary: `(df)(e) = f(t(e)) - f(o(e))` applied to the 0-part.
pub fn apply_d(graph: &OrientedGraph, f: &Cochain) -> Result<Cochain, GraphError> {
    f.check_shape(graph)?;
    let mut out = Cochain::zeros(graph);
    for k in 0..graph.edge_count() {
        let ends = graph.edge(k);
        out.edge[k] = f.vertex[ends.terminus] - f.vertex[ends.origin];
    }
    Ok(out)
}

/// Boundary: `(d*f)(x) = -Σ_{e ∈ A_x} (m(e)/m(x)) f(e)` applied to the 1-part.
pub fn apply_d_star(graph: &OrientedGraph, m: &Measure, f: &Cochain) -> Result<Cochain, GraphError> {
    f.check_shape(graph)?;
    let mut out = Cochain::zeros(graph);
    for x in 0..graph.vertex_count() {
        let mut acc = Complex64::ZERO;
        for &e in graph.outgoing(x) {
            acc += m.edge[e.index] * f.edge_value(e);
        }
        out.vertex[x] = -acc / m.vertex[x];
    }
    Ok(out)
}

/// Gauss-Bonnet operator `D f = d(f0) + d*(f1)` assembled as a full cochain.
pub fn apply_gauss_bonnet(
    graph: &OrientedGraph,
    m: &Measure,
    f: &Cochain,
) -> Result<Cochain, GraphError> {
    let d = apply_d(graph, f)?;
    let ds = apply_d_star(graph, m, f)?;
    Ok(Cochain {
        vertex: ds.vertex,
        edge: d.edge,
    })
}

/// Vertex Laplacian stencil `(Δ0 f)(x) = Σ_{e ∈ A_x} (m(e)/m(x)) (f(t(e)) - f(x))`.
///
/// Assembled independently of `d`/`d*` so it can serve as an oracle for the
/// factorization `D² = (-Δ0) ⊕ (-Δ1)`.
pub fn apply_laplacian0(
    graph: &OrientedGraph,
    m: &Measure,
    f: &Cochain,
) -> Result<Cochain, GraphError> {
    f.check_shape(graph)?;
    let mut out = Cochain::zeros(graph);
    for x in 0..graph.vertex_count() {
        let mut acc = Complex64::ZERO;
        for &e in graph.outgoing(x) {
            acc += m.edge[e.index] * (f.vertex[graph.terminus(e)] - f.vertex[x]);
        }
        out.vertex[x] = acc / m.vertex[x];
    }
    Ok(out)
}

/// Edge Laplacian stencil
/// `(Δ1 f)(e) = Σ_{e' ∈ A_{t(e)}} (m(e')/m(t(e))) f(e') - Σ_{e' ∈ A_{o(e)}} (m(e')/m(o(e))) f(e')`,
/// equal to `-dd*` on 1-cochains.
pub fn apply_laplacian1(
    graph: &OrientedGraph,
    m: &Measure,
    f: &Cochain,
) -> Result<Cochain, GraphError> {
    f.check_shape(graph)?;
    let star_sum = |x: usize| -> Complex64 {
        let mut acc = Complex64::ZERO;
        for &e in graph.outgoing(x) {
            acc += m.edge[e.index] * f.edge_value(e);
        }
        acc / m.vertex[x]
    };
    let mut out = Cochain::zeros(graph);
    for k in 0..graph.edge_count() {
        let ends = graph.edge(k);
        out.edge[k] = star_sum(ends.terminus) - star_sum(ends.origin);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{random_cochain, random_weighted_graph};
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Path graph on `n` vertices with unit weights.
    fn z_path(n: usize) -> (OrientedGraph, Measure) {
        let ends = (0..n - 1).map(|i| (i, i + 1)).collect();
        let g = OrientedGraph::new(n, ends).unwrap();
        let m = Measure::unit(&g);
        (g, m)
    }

    #[test]
    fn degree_on_z_path_interior_vertex() {
        let (g, m) = z_path(5);
        assert_abs_diff_eq!(degree(&g, &m, 2).unwrap(), 2.0);
    }

    #[test]
    fn degree_isolated_vertex() {
        let g = OrientedGraph::new(1, vec![]).unwrap();
        let m = Measure::unit(&g);
        assert_abs_diff_eq!(degree(&g, &m, 0).unwrap(), 0.0);
    }

    #[test]
    fn degree_counts_loop_twice() {
        let g = OrientedGraph::new(1, vec![(0, 0)]).unwrap();
        let m = Measure::unit(&g);
        assert_eq!(g.outgoing(0).len(), 2);
        assert_abs_diff_eq!(degree(&g, &m, 0).unwrap(), 2.0);
    }

    #[test]
    fn degree_unknown_vertex_is_error() {
        let (g, m) = z_path(3);
        assert!(matches!(
            degree(&g, &m, 7),
            Err(GraphError::UnknownVertex { index: 7, .. })
        ));
    }

    #[test]
    fn inner_product_vertex_indicator() {
        let (g, mut m) = z_path(3);
        m.vertex[1] = 2.0;
        let f = Cochain::vertex_indicator(&g, 1);
        let ip = inner_product(&g, &m, &f, &f).unwrap();
        assert_abs_diff_eq!(ip.re, 2.0, epsilon = 0.0);
        assert_abs_diff_eq!(ip.im, 0.0, epsilon = 0.0);
    }

    #[test]
    fn inner_product_edge_half_cancels_double_count() {
        let (g, m) = z_path(2);
        let mut f = Cochain::zeros(&g);
        f.edge[0] = Complex64::ONE;
        assert_abs_diff_eq!(f.edge_value(OrientedEdge::forward(0).reversal()).re, -1.0);
        let ip = inner_product(&g, &m, &f, &f).unwrap();
        assert_abs_diff_eq!(ip.re, 1.0, epsilon = 0.0);
    }

    #[test]
    fn inner_product_disjoint_supports() {
        let (g, m) = z_path(4);
        let f = Cochain::vertex_indicator(&g, 0);
        let h = Cochain::vertex_indicator(&g, 3);
        assert_eq!(inner_product(&g, &m, &f, &h).unwrap(), Complex64::ZERO);
    }

    #[test]
    fn inner_product_shape_mismatch() {
        let (g, m) = z_path(3);
        let (g2, _) = z_path(4);
        let f = Cochain::zeros(&g);
        let h = Cochain::zeros(&g2);
        assert!(matches!(
            inner_product(&g, &m, &f, &h),
            Err(GraphError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn d_of_constant_vanishes() {
        let (g, _) = z_path(6);
        let mut f = Cochain::zeros(&g);
        for v in f.vertex.iter_mut() {
            *v = Complex64::new(3.5, -1.0);
        }
        let df = apply_d(&g, &f).unwrap();
        assert_abs_diff_eq!(df.max_abs(), 0.0);
    }

    #[test]
    fn d_of_vertex_indicator_on_forward_edge() {
        // e leaves x = vertex 2 forwards; (d δ_x)(e) = -1.
        let (g, _) = z_path(5);
        let f = Cochain::vertex_indicator(&g, 2);
        let df = apply_d(&g, &f).unwrap();
        assert_abs_diff_eq!(df.edge[2].re, -1.0);
        assert_abs_diff_eq!(df.edge[1].re, 1.0);
    }

    #[test]
    fn d_on_loop_edge_vanishes() {
        let g = OrientedGraph::new(1, vec![(0, 0)]).unwrap();
        let mut f = Cochain::zeros(&g);
        f.vertex[0] = Complex64::new(2.0, 0.0);
        let df = apply_d(&g, &f).unwrap();
        assert_abs_diff_eq!(df.edge[0].norm(), 0.0);
    }

    #[test]
    fn d_star_d_matches_laplacian_stencil_on_z() {
        let (g, m) = z_path(7);
        let f = Cochain::vertex_indicator(&g, 3);
        let dsd = apply_d_star(&g, &m, &apply_d(&g, &f).unwrap()).unwrap();
        assert_abs_diff_eq!(dsd.vertex[3].re, 2.0);
        assert_abs_diff_eq!(dsd.vertex[2].re, -1.0);
        assert_abs_diff_eq!(dsd.vertex[4].re, -1.0);
    }

    #[test]
    fn d_star_of_zero_is_zero() {
        let (g, m) = z_path(4);
        let f = Cochain::zeros(&g);
        let out = apply_d_star(&g, &m, &f).unwrap();
        assert_abs_diff_eq!(out.max_abs(), 0.0);
    }

    #[test]
    fn adjointness_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let (g, m) = random_weighted_graph(&mut rng, 20);
            let f = random_cochain(&g, &mut rng);
            let gg = random_cochain(&g, &mut rng);
            let lhs = inner_product(&g, &m, &apply_d(&g, &f).unwrap(), &gg).unwrap();
            let rhs = inner_product(&g, &m, &f, &apply_d_star(&g, &m, &gg).unwrap()).unwrap();
            let scale = norm(&g, &m, &f).unwrap() * norm(&g, &m, &gg).unwrap() + 1.0;
            assert!((lhs - rhs).norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn gauss_bonnet_swaps_parts() {
        let (g, m) = z_path(5);
        let f = Cochain::vertex_indicator(&g, 2);
        let out = apply_gauss_bonnet(&g, &m, &f).unwrap();
        assert_abs_diff_eq!(out.vertex.iter().map(|z| z.norm()).sum::<f64>(), 0.0);
        assert!(out.edge.iter().map(|z| z.norm()).sum::<f64>() > 0.0);

        let out2 = apply_gauss_bonnet(&g, &m, &out).unwrap();
        assert_abs_diff_eq!(out2.edge.iter().map(|z| z.norm()).sum::<f64>(), 0.0);
    }

    #[test]
    fn d_squared_is_hodge_laplacian() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let (g, m) = random_weighted_graph(&mut rng, 16);
            let f = random_cochain(&g, &mut rng);
            let df = apply_gauss_bonnet(&g, &m, &f).unwrap();
            let ddf = apply_gauss_bonnet(&g, &m, &df).unwrap();
            let l0 = apply_laplacian0(&g, &m, &f).unwrap();
            let l1 = apply_laplacian1(&g, &m, &f).unwrap();
            let mut expect = Cochain {
                vertex: l0.vertex,
                edge: l1.edge,
            };
            for v in expect.vertex.iter_mut() {
                *v = -*v;
            }
            for e in expect.edge.iter_mut() {
                *e = -*e;
            }
            let resid = ddf.sub(&expect);
            let scale = norm(&g, &m, &f).unwrap() + 1.0;
            assert!(
                norm(&g, &m, &resid).unwrap() <= 1e-12 * scale,
                "residual {}",
                norm(&g, &m, &resid).unwrap()
            );
        }
    }

    #[test]
    fn symmetry_of_gauss_bonnet() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..50 {
            let (g, m) = random_weighted_graph(&mut rng, 16);
            let f = random_cochain(&g, &mut rng);
            let h = random_cochain(&g, &mut rng);
            let lhs = inner_product(&g, &m, &apply_gauss_bonnet(&g, &m, &f).unwrap(), &h).unwrap();
            let rhs = inner_product(&g, &m, &f, &apply_gauss_bonnet(&g, &m, &h).unwrap()).unwrap();
            let scale = norm(&g, &m, &f).unwrap() * norm(&g, &m, &h).unwrap() + 1.0;
            assert!((lhs - rhs).norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn laplacian1_on_z_is_path_laplacian_on_edge_midpoints() {
        let (g, m) = z_path(7);
        let mut f = Cochain::zeros(&g);
        f.edge[3] = Complex64::ONE;
        let l1 = apply_laplacian1(&g, &m, &f).unwrap();
        // -Δ1 f = 2 f(e) - f(left) - f(right)
        assert_abs_diff_eq!(-l1.edge[3].re, 2.0);
        assert_abs_diff_eq!(-l1.edge[2].re, -1.0);
        assert_abs_diff_eq!(-l1.edge[4].re, -1.0);
    }

    #[test]
    fn laplacian1_vanishes_on_oriented_cycle() {
        // 4-cycle, edges oriented head-to-tail; the constant-on-orientation
        // cochain telescopes to zero.
        let g = OrientedGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let m = Measure::unit(&g);
        let mut f = Cochain::zeros(&g);
        for e in f.edge.iter_mut() {
            *e = Complex64::ONE;
        }
        let l1 = apply_laplacian1(&g, &m, &f).unwrap();
        assert_abs_diff_eq!(l1.max_abs(), 0.0);
    }

    #[test]
    fn laplacian1_equals_minus_d_d_star() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..50 {
            let (g, m) = random_weighted_graph(&mut rng, 16);
            let f = random_cochain(&g, &mut rng).edge_part();
            let l1 = apply_laplacian1(&g, &m, &f).unwrap();
            let dds = apply_d(&g, &apply_d_star(&g, &m, &f).unwrap()).unwrap();
            let mut expect = dds;
            for e in expect.edge.iter_mut() {
                *e = -*e;
            }
            let resid = l1.sub(&expect);
            assert!(norm(&g, &m, &resid).unwrap() <= 1e-12 * (norm(&g, &m, &f).unwrap() + 1.0));
        }
    }

    #[test]
    fn operator_norm_bound_from_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..100 {
            let (g, m) = random_weighted_graph(&mut rng, 24);
            let sup_deg = (0..g.vertex_count())
                .map(|x| degree(&g, &m, x).unwrap())
                .fold(0.0, f64::max);
            let bound = 2.0 * sup_deg.sqrt();
            let f = random_cochain(&g, &mut rng);
            let df = apply_gauss_bonnet(&g, &m, &f).unwrap();
            let nf = norm(&g, &m, &f).unwrap();
            let ndf = norm(&g, &m, &df).unwrap();
            assert!(ndf <= bound * nf + 1e-12, "{ndf} > {bound} * {nf}");
        }
    }
}
