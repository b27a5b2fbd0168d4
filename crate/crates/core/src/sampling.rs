//! Seeded random instances for the self-check suites: weighted graphs,
//! cochains, fluxes. Everything is driven by a caller-supplied RNG so the
//! verification reports stay reproducible.

use crate::graph::{Cochain, Measure, OrientedGraph};
use num_complex::Complex64;
use rand::Rng;

/// A random graph with at most `max_vertices` vertices and roughly twice as
/// many edges, loops and multi-edges included. Isolated vertices can occur.
pub fn random_weighted_graph<R: Rng>(rng: &mut R, max_vertices: usize) -> (OrientedGraph, Measure) {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let e_count = rng.gen_range(0..=2 * n);
    let ends = (0..e_count)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    let graph = OrientedGraph::new(n, ends).expect("endpoints generated in range");
    let vertex = (0..n).map(|_| rng.gen_range(0.1..10.0)).collect();
    let edge = (0..e_count).map(|_| rng.gen_range(0.1..10.0)).collect();
    let measure = Measure::new(&graph, vertex, edge).expect("weights are positive");
    (graph, measure)
}

pub fn random_complex<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_cochain<R: Rng>(graph: &OrientedGraph, rng: &mut R) -> Cochain {
    let mut f = Cochain::zeros(graph);
    for v in f.vertex.iter_mut() {
        *v = random_complex(rng);
    }
    for e in f.edge.iter_mut() {
        *e = random_complex(rng);
    }
    f
}

/// Unit-modulus flux values, one per edge pair.
pub fn random_flux_values<R: Rng>(graph: &OrientedGraph, rng: &mut R) -> Vec<Complex64> {
    (0..graph.edge_count())
        .map(|_| {
            let phi = rng.gen_range(0.0..std::f64::consts::TAU);
            Complex64::new(phi.cos(), phi.sin())
        })
        .collect()
}
