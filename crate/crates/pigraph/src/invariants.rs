//! Graph invariants: bipartiteness, girth, connectivity, regularity, the
//! cycle weight balance of the index digraph, and the explicit isomorphism
//! between the prime index graph of a cyclic group and a product of paths.

use serde::Serialize;

use crate::arith::factorize;
use crate::graph::{path_product_graph, path_product_vertex, Graph, WeightedDigraph};
use crate::group::Group;
use crate::lattice::Lattice;

#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub bipartite: bool,
    /// A 2-coloring when bipartite.
    pub two_coloring: Option<Vec<u8>>,
    /// An odd cycle (vertex sequence) when not bipartite.
    pub odd_cycle: Option<Vec<usize>>,
    /// None encodes an acyclic graph (infinite girth).
    pub girth: Option<usize>,
    pub component_count: usize,
    pub component_of: Vec<usize>,
    /// Sorted ascending.
    pub degree_sequence: Vec<usize>,
    pub regular_k: Option<usize>,
    pub is_forest: bool,
    pub is_complete_bipartite: bool,
    pub isolated_vertices: Vec<usize>,
}

impl InvariantReport {
    pub fn connected(&self) -> bool {
        self.component_count <= 1
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub fn compute_invariants(graph: &Graph) -> InvariantReport {
    let n = graph.vertex_count;
    let adj = graph.adjacency();

    // Components via union-find, labeled by first-seen order.
    let mut uf = UnionFind::new(n);
    for e in &graph.edges {
        uf.union(e.a, e.b);
    }
    let mut component_of = vec![usize::MAX; n];
    let mut component_count = 0;
    for v in 0..n {
        let root = uf.find(v);
        if component_of[root] == usize::MAX {
            component_of[root] = component_count;
            component_count += 1;
        }
        component_of[v] = component_of[root];
    }

    let (two_coloring, odd_cycle) = two_color(n, &adj);
    let bipartite = two_coloring.is_some();

    let degrees = graph.degrees();
    let mut degree_sequence = degrees.clone();
    degree_sequence.sort();
    let regular_k = match degree_sequence.as_slice() {
        [] => None,
        [first, .., last] if first != last => None,
        seq => Some(seq[0]),
    };
    let isolated_vertices: Vec<usize> = (0..n).filter(|&v| degrees[v] == 0).collect();

    let is_forest = graph.edges.len() == n - component_count;
    let girth = if is_forest { None } else { Some(girth(&adj)) };

    let is_complete_bipartite = match &two_coloring {
        Some(colors) if component_count == 1 => {
            let a = colors.iter().filter(|&&c| c == 0).count();
            let b = n - a;
            a > 0 && b > 0 && graph.edges.len() == a * b
        }
        _ => false,
    };

    InvariantReport {
        bipartite,
        two_coloring,
        odd_cycle,
        girth,
        component_count,
        component_of,
        degree_sequence,
        regular_k,
        is_forest,
        is_complete_bipartite,
        isolated_vertices,
    }
}

/// BFS 2-coloring per component; on failure returns an odd cycle built from
/// the two parent chains of the offending edge.
fn two_color(n: usize, adj: &[Vec<usize>]) -> (Option<Vec<u8>>, Option<Vec<usize>>) {
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    parent[y] = x;
                    queue.push_back(y);
                } else if color[y] == color[x] {
                    return (None, Some(odd_cycle_witness(x, y, &parent)));
                }
            }
        }
    }
    (Some(color), None)
}

fn odd_cycle_witness(x: usize, y: usize, parent: &[usize]) -> Vec<usize> {
    let chain = |mut v: usize| {
        let mut path = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            path.push(v);
        }
        path
    };
    let (px, py) = (chain(x), chain(y));
    // Strip the common tail above the lowest common ancestor.
    let mut ix = px.len();
    let mut iy = py.len();
    while ix > 0 && iy > 0 && px[ix - 1] == py[iy - 1] {
        ix -= 1;
        iy -= 1;
    }
    let mut cycle: Vec<usize> = px[..=ix.min(px.len() - 1)].to_vec();
    for v in py[..iy].iter().rev() {
        cycle.push(*v);
    }
    cycle
}

/// Length of a shortest cycle: the minimum over all vertices of the shortest
/// cycle seen from a BFS rooted at that vertex. Callers skip forests.
fn girth(adj: &[Vec<usize>]) -> usize {
    let n = adj.len();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            if 2 * dist[x] >= best {
                break;
            }
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if y != parent[x] {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }
    assert_ne!(best, usize::MAX, "girth requested on an acyclic graph");
    best
}

/// One step of a fundamental cycle: an arc traversed with or against its
/// direction.
#[derive(Debug, Clone, Serialize)]
pub struct CycleStep {
    pub from: usize,
    pub to: usize,
    pub weight: usize,
    pub forward: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CycleViolation {
    pub steps: Vec<CycleStep>,
    /// Nonzero signed prime exponents of forward/backward weight products.
    pub imbalance: Vec<(usize, i64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CycleWeightCheck {
    pub cycles_checked: usize,
    pub violation: Option<CycleViolation>,
}

impl CycleWeightCheck {
    pub fn balanced(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks that around every cycle of the digraph the product of weights of
/// arcs traversed forwards equals the product of weights traversed
/// backwards. Only a fundamental cycle basis of a spanning forest is
/// checked: signed log-weight sums are linear over the cycle space, so
/// balance on a basis implies balance on every cycle.
pub fn check_cycle_weight_invariant(digraph: &WeightedDigraph) -> CycleWeightCheck {
    let n = digraph.vertex_count;
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (idx, &(from, to, _)) in digraph.arcs.iter().enumerate() {
        adj[from].push((to, idx));
        adj[to].push((from, idx));
    }

    // BFS spanning forest.
    let mut parent_arc = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut tree_arc = vec![false; digraph.arcs.len()];
    for start in 0..n {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &(y, arc) in &adj[x] {
                if !visited[y] {
                    visited[y] = true;
                    parent[y] = x;
                    parent_arc[y] = arc;
                    depth[y] = depth[x] + 1;
                    tree_arc[arc] = true;
                    queue.push_back(y);
                }
            }
        }
    }

    let mut cycles_checked = 0;
    for (idx, &(from, to, weight)) in digraph.arcs.iter().enumerate() {
        if tree_arc[idx] {
            continue;
        }
        cycles_checked += 1;
        // Tree path from `from` up and from `to` up, spliced at the LCA,
        // then closed with the non-tree arc.
        let mut steps: Vec<CycleStep> = Vec::new();
        let (mut x, mut y) = (from, to);
        let mut up_from: Vec<CycleStep> = Vec::new();
        let mut up_to: Vec<CycleStep> = Vec::new();
        while depth[x] > depth[y] {
            up_from.push(step_along(digraph, parent_arc[x], x, parent[x]));
            x = parent[x];
        }
        while depth[y] > depth[x] {
            up_to.push(step_along(digraph, parent_arc[y], parent[y], y));
            y = parent[y];
        }
        while x != y {
            up_from.push(step_along(digraph, parent_arc[x], x, parent[x]));
            up_to.push(step_along(digraph, parent_arc[y], parent[y], y));
            x = parent[x];
            y = parent[y];
        }
        steps.append(&mut up_from);
        up_to.reverse();
        steps.append(&mut up_to);
        steps.push(CycleStep {
            from: to,
            to: from,
            weight,
            forward: false,
        });

        let mut exps: std::collections::BTreeMap<usize, i64> = std::collections::BTreeMap::new();
        for s in &steps {
            let sign = if s.forward { 1 } else { -1 };
            for (p, e) in factorize(s.weight) {
                *exps.entry(p).or_insert(0) += sign * e as i64;
            }
        }
        let imbalance: Vec<(usize, i64)> =
            exps.into_iter().filter(|&(_, e)| e != 0).collect();
        if !imbalance.is_empty() {
            return CycleWeightCheck {
                cycles_checked,
                violation: Some(CycleViolation { steps, imbalance }),
            };
        }
    }
    CycleWeightCheck {
        cycles_checked,
        violation: None,
    }
}

fn step_along(digraph: &WeightedDigraph, arc: usize, from: usize, to: usize) -> CycleStep {
    let (af, _at, w) = digraph.arcs[arc];
    CycleStep {
        from,
        to,
        weight: w,
        forward: af == from,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("group is not cyclic: no element has full order")]
    NotCyclic,
}

/// Checks the explicit isomorphism between the prime index graph of a cyclic
/// group and the Cartesian product of paths given by the exponent vector of
/// the group order: each subgroup maps to the exponent vector of its order,
/// and adjacency must transfer exactly.
pub fn verify_cyclic_isomorphism(
    group: &Group,
    lattice: &Lattice,
    pi: &Graph,
) -> Result<bool, InvariantError> {
    if !group.is_cyclic() {
        return Err(InvariantError::NotCyclic);
    }
    let factors = factorize(group.order());
    let primes: Vec<usize> = factors.iter().map(|&(p, _)| p).collect();
    let dims: Vec<usize> = factors.iter().map(|&(_, e)| e as usize).collect();
    let product = path_product_graph(&dims);
    if lattice.len() != product.vertex_count {
        return Ok(false);
    }

    // Subgroup id -> product graph vertex, via the exponent vector.
    let mut image = vec![usize::MAX; lattice.len()];
    let mut hit = vec![false; product.vertex_count];
    for (id, slot) in image.iter_mut().enumerate() {
        let order_factors = factorize(lattice.subgroup(id).order);
        let mut coords = vec![0usize; dims.len()];
        for (p, e) in order_factors {
            match primes.iter().position(|&q| q == p) {
                Some(axis) => coords[axis] = e as usize,
                None => return Ok(false),
            }
        }
        let v = path_product_vertex(&dims, &coords);
        if hit[v] {
            return Ok(false);
        }
        hit[v] = true;
        *slot = v;
    }

    let mut mapped: Vec<(usize, usize)> = pi
        .edges
        .iter()
        .map(|e| {
            let (a, b) = (image[e.a], image[e.b]);
            (a.min(b), a.max(b))
        })
        .collect();
    mapped.sort();
    let mut expected = product.edge_pairs();
    expected.sort();
    Ok(mapped == expected)
}

/// Number of lattice members of order exactly p.
pub fn count_order_p_subgroups(lattice: &Lattice, p: usize) -> usize {
    debug_assert!(crate::arith::is_prime(p));
    lattice
        .subgroups()
        .iter()
        .filter(|s| s.order == p)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_index_digraph, build_prime_index_graph, Edge};
    use crate::group::{Group, DEFAULT_CAP};
    use crate::groupdef::parse_group_definition;
    use std::sync::Arc;

    fn pipeline(text: &str) -> (Arc<Group>, Lattice, Graph) {
        let spec = parse_group_definition(text).unwrap();
        let group = Arc::new(Group::construct(&spec, DEFAULT_CAP).unwrap());
        let lat = Lattice::enumerate(&group);
        let pi = build_prime_index_graph(&lat);
        (group, lat, pi)
    }

    #[test]
    fn sym3_invariants() {
        let (_, _, pi) = pipeline("sym 3");
        let inv = compute_invariants(&pi);
        assert!(inv.bipartite);
        assert_eq!(inv.girth, Some(4));
        assert!(inv.connected());
        assert!(inv.is_complete_bipartite);
        assert_eq!(inv.regular_k, None);
        assert_eq!(inv.degree_sequence, vec![2, 2, 2, 2, 4, 4]);
    }

    #[test]
    fn cyclic8_is_a_path() {
        let (_, _, pi) = pipeline("cyclic 8");
        let inv = compute_invariants(&pi);
        assert_eq!(inv.girth, None);
        assert!(inv.is_forest);
        assert!(inv.connected());
        assert_eq!(inv.degree_sequence, vec![1, 1, 2, 2]);
    }

    #[test]
    fn cyclic30_is_three_regular() {
        let (_, lat, pi) = pipeline("cyclic 30");
        // Independent oracle: the divisor lattice of 30.
        let divisors: Vec<usize> = (1..=30).filter(|d| 30 % d == 0).collect();
        let mut expected_edges = 0;
        for &d in &divisors {
            for &e in &divisors {
                if e > d && e % d == 0 && crate::arith::is_prime(e / d) {
                    expected_edges += 1;
                }
            }
        }
        assert_eq!(lat.len(), divisors.len());
        assert_eq!(pi.vertex_count, 8);
        assert_eq!(pi.edges.len(), expected_edges);
        assert_eq!(pi.edges.len(), 12);
        let inv = compute_invariants(&pi);
        assert_eq!(inv.regular_k, Some(3));
    }

    #[test]
    fn single_vertex_graph_conventions() {
        let g = Graph {
            vertex_count: 1,
            edges: vec![],
        };
        let inv = compute_invariants(&g);
        assert!(inv.bipartite);
        assert!(inv.is_forest);
        assert_eq!(inv.girth, None);
        assert_eq!(inv.regular_k, Some(0));
        assert!(!inv.is_complete_bipartite);
        assert_eq!(inv.isolated_vertices, vec![0]);
    }

    #[test]
    fn odd_cycle_witness_on_triangle() {
        let g = Graph {
            vertex_count: 3,
            edges: vec![
                Edge { a: 0, b: 1, label: None },
                Edge { a: 1, b: 2, label: None },
                Edge { a: 0, b: 2, label: None },
            ],
        };
        let inv = compute_invariants(&g);
        assert!(!inv.bipartite);
        let cycle = inv.odd_cycle.unwrap();
        assert_eq!(cycle.len() % 2, 1);
        assert_eq!(inv.girth, Some(3));
    }

    #[test]
    fn disconnected_components_counted() {
        let g = Graph {
            vertex_count: 5,
            edges: vec![
                Edge { a: 0, b: 1, label: None },
                Edge { a: 2, b: 3, label: None },
            ],
        };
        let inv = compute_invariants(&g);
        assert_eq!(inv.component_count, 3);
        assert_eq!(inv.component_of[0], inv.component_of[1]);
        assert_ne!(inv.component_of[0], inv.component_of[2]);
        assert_eq!(inv.isolated_vertices, vec![4]);
    }

    #[test]
    fn cycle_weights_balance_on_sym3() {
        let (_, lat, _) = pipeline("sym 3");
        let d = build_index_digraph(&lat);
        let check = check_cycle_weight_invariant(&d);
        assert!(check.balanced());
        // The quadrilateral through a transposition subgroup and the
        // three-cycle subgroup: 2 * 3 on one side equals 3 * 2 on the other.
        let z2 = (0..lat.len()).find(|&i| lat.subgroup(i).order == 2).unwrap();
        let z3 = (0..lat.len()).find(|&i| lat.subgroup(i).order == 3).unwrap();
        let weight = |f: usize, t: usize| {
            d.arcs
                .iter()
                .find(|&&(a, b, _)| a == f && b == t)
                .map(|&(_, _, w)| w)
                .unwrap()
        };
        let clockwise = weight(lat.trivial_id(), z2) * weight(z2, lat.whole_id());
        let counter = weight(lat.trivial_id(), z3) * weight(z3, lat.whole_id());
        assert_eq!(clockwise, counter);
        assert_eq!(clockwise, 6);
    }

    #[test]
    fn cyclic12_has_seven_fundamental_cycles() {
        let (_, lat, _) = pipeline("cyclic 12");
        let d = build_index_digraph(&lat);
        let check = check_cycle_weight_invariant(&d);
        assert!(check.balanced());
        assert_eq!(check.cycles_checked, 7);
    }

    #[test]
    fn tree_digraph_is_vacuously_balanced() {
        let d = WeightedDigraph {
            vertex_count: 4,
            arcs: vec![(0, 1, 2), (1, 2, 3), (1, 3, 5)],
        };
        let check = check_cycle_weight_invariant(&d);
        assert!(check.balanced());
        assert_eq!(check.cycles_checked, 0);
    }

    #[test]
    fn unbalanced_digraph_is_caught() {
        let d = WeightedDigraph {
            vertex_count: 3,
            arcs: vec![(0, 1, 2), (1, 2, 3), (0, 2, 7)],
        };
        let check = check_cycle_weight_invariant(&d);
        assert!(!check.balanced());
        let violation = check.violation.unwrap();
        assert!(!violation.imbalance.is_empty());
    }

    #[test]
    fn cyclic_isomorphism_holds() {
        for (text, expected_dims) in [
            ("cyclic 12", vec![2usize, 1]),
            ("cyclic 7", vec![1]),
            ("cyclic 30", vec![1, 1, 1]),
            ("cyclic 1", vec![]),
        ] {
            let (group, lat, pi) = pipeline(text);
            assert_eq!(
                factorize(group.order())
                    .iter()
                    .map(|&(_, e)| e as usize)
                    .collect::<Vec<_>>(),
                expected_dims
            );
            assert_eq!(
                verify_cyclic_isomorphism(&group, &lat, &pi),
                Ok(true),
                "{text}"
            );
        }
    }

    #[test]
    fn cyclic_isomorphism_rejects_non_cyclic() {
        let (group, lat, pi) = pipeline("abelian 2 2");
        assert_eq!(
            verify_cyclic_isomorphism(&group, &lat, &pi),
            Err(InvariantError::NotCyclic)
        );
    }

    #[test]
    fn order_p_counts_match_the_projective_formula() {
        for (p, k) in [(2usize, 2u32), (2, 3), (3, 2), (3, 3)] {
            let factors = vec![p; k as usize];
            let spec = crate::groupdef::GroupSpec::Abelian(factors);
            let group = Arc::new(Group::construct(&spec, DEFAULT_CAP).unwrap());
            let lat = Lattice::enumerate(&group);
            let expected = (p.pow(k) - 1) / (p - 1);
            assert_eq!(count_order_p_subgroups(&lat, p), expected, "p={p} k={k}");
        }
        let (_, lat, _) = pipeline("cyclic 9");
        assert_eq!(count_order_p_subgroups(&lat, 3), 1);
    }
}
