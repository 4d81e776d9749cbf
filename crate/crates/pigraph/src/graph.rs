//! Graphs derived from a subgroup lattice: the prime index graph, the
//! index-weighted digraph, the subgroup graph, and Cartesian products of
//! paths.

use crate::arith::is_prime;
use crate::lattice::Lattice;

/// A simple undirected graph on lattice ids. Edges are stored with `a < b`
/// in a deterministic order; prime index edges carry their prime as label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    pub vertex_count: usize,
    pub edges: Vec<Edge>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub label: Option<usize>,
}

impl Graph {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertex_count];
        for e in &self.edges {
            deg[e.a] += 1;
            deg[e.b] += 1;
        }
        deg
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.a, e.b)).collect()
    }
}

/// Arc-weighted digraph: one arc H -> K of weight [K : H] for every strict
/// containment H ⊂ K. The vertices of the graph are distinct subgroups, so
/// containment is taken strictly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDigraph {
    pub vertex_count: usize,
    /// (from, to, weight), weight >= 2.
    pub arcs: Vec<(usize, usize, usize)>,
}

/// Edge {H, K} labeled p exactly when one subgroup contains the other with
/// prime index p.
pub fn build_prime_index_graph(lattice: &Lattice) -> Graph {
    let n = lattice.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            // Canonical order is ascending, so containment can only be i ⊆ j.
            let (oi, oj) = (lattice.subgroup(i).order, lattice.subgroup(j).order);
            if oi == oj || oj % oi != 0 {
                continue;
            }
            let index = oj / oi;
            if is_prime(index) && lattice.leq(i, j) {
                edges.push(Edge {
                    a: i,
                    b: j,
                    label: Some(index),
                });
            }
        }
    }
    Graph {
        vertex_count: n,
        edges,
    }
}

pub fn build_index_digraph(lattice: &Lattice) -> WeightedDigraph {
    let n = lattice.len();
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if lattice.leq(i, j) {
                let w = lattice.subgroup(j).order / lattice.subgroup(i).order;
                arcs.push((i, j, w));
            }
        }
    }
    WeightedDigraph {
        vertex_count: n,
        arcs,
    }
}

/// Edge {H, K} exactly when one subgroup is maximal in the other, i.e. the
/// containment admits no intermediate subgroup.
pub fn build_subgroup_graph(lattice: &Lattice) -> Graph {
    let n = lattice.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if !lattice.leq(i, j) || i == j {
                continue;
            }
            let between = lattice.supersets(i).intersection(lattice.subsets(j));
            let maximal = between.iter().all(|k| k == i || k == j);
            if maximal {
                edges.push(Edge {
                    a: i,
                    b: j,
                    label: None,
                });
            }
        }
    }
    Graph {
        vertex_count: n,
        edges,
    }
}

/// Cartesian product of paths P_{n1+1} □ … □ P_{ns+1}: vertices are integer
/// vectors with 0 <= v_i <= n_i, adjacent when they differ by exactly 1 in
/// exactly one coordinate. Vertices are numbered in lexicographic order with
/// the last coordinate varying fastest. An empty dimension list yields the
/// one-vertex graph.
pub fn path_product_graph(dims: &[usize]) -> Graph {
    debug_assert!(dims.iter().all(|&d| d >= 1));
    let vertex_count: usize = dims.iter().map(|&d| d + 1).product();
    let mut strides = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * (dims[i + 1] + 1);
    }
    let mut edges = Vec::new();
    let mut coords = vec![0usize; dims.len()];
    for v in 0..vertex_count {
        for (axis, &d) in dims.iter().enumerate() {
            if coords[axis] < d {
                edges.push(Edge {
                    a: v,
                    b: v + strides[axis],
                    label: None,
                });
            }
        }
        for axis in (0..dims.len()).rev() {
            coords[axis] += 1;
            if coords[axis] <= dims[axis] {
                break;
            }
            coords[axis] = 0;
        }
    }
    edges.sort_by_key(|e| (e.a, e.b));
    Graph {
        vertex_count,
        edges,
    }
}

/// Vertex index of a coordinate vector in `path_product_graph(dims)`.
pub fn path_product_vertex(dims: &[usize], coords: &[usize]) -> usize {
    debug_assert_eq!(dims.len(), coords.len());
    let mut idx = 0;
    for (i, &c) in coords.iter().enumerate() {
        debug_assert!(c <= dims[i]);
        idx = idx * (dims[i] + 1) + c;
    }
    idx
}
