//! Theorem verification harness: pipelines a group through lattice and
//! graph construction, runs a fixed suite of structural checks, and drives
//! a curated corpus plus the connectivity-converse prober.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::factorize;
use crate::bitset::BitSet;
use crate::export::SCHEMA_VERSION;
use crate::graph::{
    build_index_digraph, build_prime_index_graph, build_subgroup_graph, Graph, WeightedDigraph,
};
use crate::group::{is_nilpotent, is_solvable, quotient, Group, GroupError};
use crate::groupdef::GroupSpec;
use crate::invariants::{
    check_cycle_weight_invariant, compute_invariants, verify_cyclic_isomorphism, InvariantReport,
};
use crate::lattice::Lattice;
use crate::perm::Permutation;

/// Everything derived from one group: lattice, graphs, and invariants.
pub struct Analysis {
    pub spec: GroupSpec,
    pub group: Arc<Group>,
    pub lattice: Lattice,
    pub pi: Graph,
    pub digraph: WeightedDigraph,
    pub subgroup_graph: Graph,
    pub invariants: InvariantReport,
}

pub fn analyze_spec(spec: &GroupSpec, cap: usize) -> Result<Analysis, GroupError> {
    let group = Arc::new(Group::construct(spec, cap)?);
    Ok(analyze_group(spec.clone(), group))
}

pub fn analyze_group(spec: GroupSpec, group: Arc<Group>) -> Analysis {
    let lattice = Lattice::enumerate(&group);
    let pi = build_prime_index_graph(&lattice);
    let digraph = build_index_digraph(&lattice);
    let subgroup_graph = build_subgroup_graph(&lattice);
    let invariants = compute_invariants(&pi);
    Analysis {
        spec,
        group,
        lattice,
        pi,
        digraph,
        subgroup_graph,
        invariants,
    }
}

/// Connectivity facts for one proper nontrivial normal subgroup N: the
/// standalone rebuild of N, its agreement with the parent-lattice
/// restriction, and the quotient G/N.
pub struct NormalAnalysis {
    pub id: usize,
    pub order: usize,
    pub standalone_connected: bool,
    /// Standalone lattice of N equals the restriction of the parent lattice
    /// to subgroups of N, and both routes agree on connectivity.
    pub restriction_consistent: bool,
    pub quotient_connected: bool,
    /// Every subgroup of G/N spans a connected piece of the quotient's
    /// prime index graph.
    pub quotient_subs_all_connected: bool,
}

fn connected_within(adj: &[Vec<usize>], keep: &[bool]) -> bool {
    let total = keep.iter().filter(|&&k| k).count();
    if total <= 1 {
        return true;
    }
    let start = keep.iter().position(|&k| k).unwrap();
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut reached = 1;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if keep[y] && !seen[y] {
                seen[y] = true;
                reached += 1;
                queue.push_back(y);
            }
        }
    }
    reached == total
}

fn analyze_normal(analysis: &Analysis, parent_adj: &[Vec<usize>], nid: usize) -> NormalAnalysis {
    let group = &analysis.group;
    let lattice = &analysis.lattice;
    let n = lattice.subgroup(nid);

    let gens: Vec<Permutation> = n.witness.iter().map(|&i| group.element(i).clone()).collect();
    let standalone = Arc::new(
        Group::from_generators(group.degree(), gens, group.order())
            .expect("subgroup rebuild stays within the parent order"),
    );
    assert_eq!(standalone.order(), n.order);
    let sub_lattice = Lattice::enumerate(&standalone);
    let sub_pi = build_prime_index_graph(&sub_lattice);
    let sub_connected = compute_invariants(&sub_pi).connected();

    // Transport the standalone lattice into parent element indices and
    // compare with the parent lattice restricted to subgroups of N.
    let to_parent: Vec<usize> = standalone
        .elements()
        .iter()
        .map(|p| group.index_of(p).expect("subgroup element lives in parent"))
        .collect();
    let mut transported: Vec<BitSet> = sub_lattice
        .subgroups()
        .iter()
        .map(|s| {
            let mut bits = BitSet::new(group.order());
            for i in s.members.iter() {
                bits.insert(to_parent[i]);
            }
            bits
        })
        .collect();
    transported.sort_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(a.cmp_members(b)));
    let restriction: Vec<BitSet> = lattice
        .subsets(nid)
        .iter()
        .map(|id| lattice.subgroup(id).members.clone())
        .collect();
    let keep: Vec<bool> = (0..lattice.len()).map(|id| lattice.leq(id, nid)).collect();
    let restriction_connected = connected_within(parent_adj, &keep);
    let restriction_consistent =
        transported == restriction && restriction_connected == sub_connected;

    let q = quotient(group, n).expect("kernel is normal");
    let q_lattice = Lattice::enumerate(&q.group);
    let q_pi = build_prime_index_graph(&q_lattice);
    let q_connected = compute_invariants(&q_pi).connected();
    let q_adj = q_pi.adjacency();
    let quotient_subs_all_connected = (0..q_lattice.len()).all(|sid| {
        let keep: Vec<bool> = (0..q_lattice.len()).map(|t| q_lattice.leq(t, sid)).collect();
        connected_within(&q_adj, &keep)
    });

    NormalAnalysis {
        id: nid,
        order: n.order,
        standalone_connected: sub_connected,
        restriction_consistent,
        quotient_connected: q_connected,
        quotient_subs_all_connected,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub status: CheckStatus,
    pub witness: Option<String>,
}

impl CheckResult {
    fn pass(id: &'static str) -> Self {
        Self {
            id,
            status: CheckStatus::Pass,
            witness: None,
        }
    }

    fn pass_with(id: &'static str, note: String) -> Self {
        Self {
            id,
            status: CheckStatus::Pass,
            witness: Some(note),
        }
    }

    fn fail(id: &'static str, witness: String) -> Self {
        Self {
            id,
            status: CheckStatus::Fail,
            witness: Some(witness),
        }
    }

    fn not_applicable(id: &'static str, reason: String) -> Self {
        Self {
            id,
            status: CheckStatus::NotApplicable,
            witness: Some(reason),
        }
    }
}

/// The fixed check suite; every report carries each id exactly once, in
/// this order.
pub const CHECK_IDS: [&str; 14] = [
    "bipartite",
    "girth-four-or-infinite",
    "forest-iff-cyclic-prime-power",
    "complete-bipartite-orders",
    "subgraph-coincidence",
    "solvable-connected",
    "two-regular-c4",
    "regular-abelian-hypercube",
    "cyclic-path-product",
    "cycle-weight-balance",
    "inheritance-connectivity",
    "lifting-connected",
    "edge-projection",
    "le500-connected-spot",
];

const EDGE_PROJECTION_ORDER_LIMIT: usize = 200;
const SPOT_CHECK_ORDER_LIMIT: usize = 500;

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub schema: u32,
    pub group: String,
    pub order: usize,
    pub subgroup_count: usize,
    pub edge_count: usize,
    pub girth: Option<usize>,
    pub component_count: usize,
    pub invariants: InvariantReport,
    pub checks: Vec<CheckResult>,
    pub all_pass: bool,
    /// Per-phase wall-clock seconds; excluded from the canonical body.
    #[serde(skip)]
    pub timings: Vec<(&'static str, f64)>,
}

impl TheoremReport {
    pub fn check(&self, id: &str) -> &CheckResult {
        self.checks.iter().find(|c| c.id == id).unwrap()
    }

    /// Deterministic serialized form, timings excluded.
    pub fn canonical_body(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).unwrap();
        out.push('\n');
        out
    }
}

pub struct SuiteOutcome {
    pub report: TheoremReport,
    pub analysis: Analysis,
    pub normals: Vec<NormalAnalysis>,
}

/// Runs construct → enumerate → graphs → invariants → checks for one spec.
pub fn run_theorem_suite(spec: &GroupSpec, cap: usize) -> Result<SuiteOutcome, GroupError> {
    let mut timings = Vec::new();

    let t0 = Instant::now();
    let group = Arc::new(Group::construct(spec, cap)?);
    timings.push(("construct", t0.elapsed().as_secs_f64()));

    let t1 = Instant::now();
    let analysis = analyze_group(spec.clone(), group);
    timings.push(("lattice-and-graphs", t1.elapsed().as_secs_f64()));

    let t2 = Instant::now();
    let parent_adj = analysis.pi.adjacency();
    let normals: Vec<NormalAnalysis> = analysis
        .lattice
        .proper_nontrivial_normal_ids()
        .into_iter()
        .map(|nid| analyze_normal(&analysis, &parent_adj, nid))
        .collect();
    timings.push(("normal-subgroup-analysis", t2.elapsed().as_secs_f64()));

    let t3 = Instant::now();
    let checks = run_checks(&analysis, &normals);
    timings.push(("checks", t3.elapsed().as_secs_f64()));

    debug_assert_eq!(
        checks.iter().map(|c| c.id).collect::<Vec<_>>(),
        CHECK_IDS.to_vec()
    );
    let all_pass = checks.iter().all(|c| c.status != CheckStatus::Fail);
    let report = TheoremReport {
        schema: SCHEMA_VERSION,
        group: spec.to_string(),
        order: analysis.group.order(),
        subgroup_count: analysis.lattice.len(),
        edge_count: analysis.pi.edges.len(),
        girth: analysis.invariants.girth,
        component_count: analysis.invariants.component_count,
        invariants: analysis.invariants.clone(),
        checks,
        all_pass,
        timings,
    };
    Ok(SuiteOutcome {
        report,
        analysis,
        normals,
    })
}

fn run_checks(a: &Analysis, normals: &[NormalAnalysis]) -> Vec<CheckResult> {
    let order = a.group.order();
    let inv = &a.invariants;
    let mut checks = Vec::with_capacity(CHECK_IDS.len());

    // bipartite
    checks.push(match &inv.odd_cycle {
        None => CheckResult::pass("bipartite"),
        Some(cycle) => CheckResult::fail("bipartite", format!("odd cycle through ids {cycle:?}")),
    });

    // girth-four-or-infinite
    checks.push(match inv.girth {
        None => CheckResult::pass_with("girth-four-or-infinite", "acyclic".into()),
        Some(4) => CheckResult::pass("girth-four-or-infinite"),
        Some(g) => CheckResult::fail("girth-four-or-infinite", format!("girth is {g}")),
    });

    // forest-iff-cyclic-prime-power
    let prime_power_cyclic = a.group.is_cyclic() && factorize(order).len() <= 1;
    checks.push(if inv.is_forest == prime_power_cyclic {
        CheckResult::pass("forest-iff-cyclic-prime-power")
    } else {
        CheckResult::fail(
            "forest-iff-cyclic-prime-power",
            format!(
                "forest={} but cyclic-prime-power={prime_power_cyclic}",
                inv.is_forest
            ),
        )
    });

    // complete-bipartite-orders: the order-side condition reads |G| = p or
    // |G| = pq for primes p, q. With p = q allowed the biconditional is the
    // one the detector satisfies (a 3-vertex path is K_{1,2}); the
    // distinct-primes reading is reported alongside.
    let omega: u32 = factorize(order).iter().map(|&(_, e)| e).sum();
    let inclusive = omega == 1 || omega == 2;
    let distinct = omega == 1 || (omega == 2 && factorize(order).len() == 2);
    let agrees_inclusive = inv.is_complete_bipartite == inclusive;
    let agrees_distinct = inv.is_complete_bipartite == distinct;
    let note = format!(
        "inclusive reading (p=q allowed): {}; distinct-primes reading: {}",
        if agrees_inclusive { "agrees" } else { "disagrees" },
        if agrees_distinct { "agrees" } else { "disagrees" },
    );
    checks.push(if agrees_inclusive {
        CheckResult::pass_with("complete-bipartite-orders", note)
    } else {
        CheckResult::fail("complete-bipartite-orders", note)
    });

    // subgraph-coincidence
    let pi_pairs = a.pi.edge_pairs();
    let sg_pairs = a.subgroup_graph.edge_pairs();
    let missing = pi_pairs.iter().find(|p| !sg_pairs.contains(p));
    let nilpotent = is_nilpotent(&a.group, &a.lattice);
    checks.push(if let Some(&(x, y)) = missing {
        CheckResult::fail(
            "subgraph-coincidence",
            format!("prime index edge ({x},{y}) missing from the subgroup graph"),
        )
    } else if nilpotent && pi_pairs.len() != sg_pairs.len() {
        let extra = sg_pairs.iter().find(|p| !pi_pairs.contains(p)).unwrap();
        CheckResult::fail(
            "subgraph-coincidence",
            format!("nilpotent group but subgroup-graph edge {extra:?} is not a prime index edge"),
        )
    } else if nilpotent {
        CheckResult::pass_with("subgraph-coincidence", "nilpotent: edge sets coincide".into())
    } else {
        CheckResult::pass("subgraph-coincidence")
    });

    // solvable-connected
    checks.push(if !is_solvable(&a.group) {
        CheckResult::not_applicable("solvable-connected", "group is not solvable".into())
    } else if inv.connected() {
        CheckResult::pass("solvable-connected")
    } else {
        CheckResult::fail(
            "solvable-connected",
            format!("solvable group with {} components", inv.component_count),
        )
    });

    // two-regular-c4
    checks.push(if inv.regular_k != Some(2) {
        CheckResult::not_applicable("two-regular-c4", "graph is not 2-regular".into())
    } else {
        let factors = factorize(order);
        let squarefree_semiprime = factors.len() == 2 && factors.iter().all(|&(_, e)| e == 1);
        if a.pi.vertex_count == 4
            && a.pi.edges.len() == 4
            && inv.connected()
            && squarefree_semiprime
        {
            CheckResult::pass("two-regular-c4")
        } else {
            CheckResult::fail(
                "two-regular-c4",
                format!(
                    "2-regular but vertices={}, edges={}, components={}, order={order}",
                    a.pi.vertex_count,
                    a.pi.edges.len(),
                    inv.component_count
                ),
            )
        }
    });

    // regular-abelian-hypercube
    checks.push(if !a.group.is_abelian() {
        CheckResult::not_applicable("regular-abelian-hypercube", "group is not abelian".into())
    } else if inv.regular_k.is_none() {
        CheckResult::not_applicable("regular-abelian-hypercube", "graph is not regular".into())
    } else {
        let squarefree = factorize(order).iter().all(|&(_, e)| e == 1);
        if !squarefree {
            CheckResult::fail(
                "regular-abelian-hypercube",
                format!("regular abelian group of non-squarefree order {order}"),
            )
        } else {
            match verify_cyclic_isomorphism(&a.group, &a.lattice, &a.pi) {
                Ok(true) => CheckResult::pass("regular-abelian-hypercube"),
                Ok(false) => CheckResult::fail(
                    "regular-abelian-hypercube",
                    "exponent-vector map is not a hypercube isomorphism".into(),
                ),
                Err(e) => CheckResult::fail("regular-abelian-hypercube", e.to_string()),
            }
        }
    });

    // cyclic-path-product
    checks.push(if !a.group.is_cyclic() {
        CheckResult::not_applicable("cyclic-path-product", "group is not cyclic".into())
    } else {
        match verify_cyclic_isomorphism(&a.group, &a.lattice, &a.pi) {
            Ok(true) => CheckResult::pass("cyclic-path-product"),
            Ok(false) => CheckResult::fail(
                "cyclic-path-product",
                "exponent-vector map is not a path-product isomorphism".into(),
            ),
            Err(e) => CheckResult::fail("cyclic-path-product", e.to_string()),
        }
    });

    // cycle-weight-balance
    let weight_check = check_cycle_weight_invariant(&a.digraph);
    checks.push(match &weight_check.violation {
        None => CheckResult::pass_with(
            "cycle-weight-balance",
            format!("{} fundamental cycles balanced", weight_check.cycles_checked),
        ),
        Some(v) => CheckResult::fail(
            "cycle-weight-balance",
            format!("unbalanced cycle with prime imbalance {:?}", v.imbalance),
        ),
    });

    // inheritance-connectivity
    checks.push(if !inv.connected() {
        CheckResult::not_applicable(
            "inheritance-connectivity",
            "prime index graph is not connected".into(),
        )
    } else if normals.is_empty() {
        CheckResult::pass_with(
            "inheritance-connectivity",
            "no proper nontrivial normal subgroups".into(),
        )
    } else {
        match normals.iter().find(|n| {
            !n.restriction_consistent || !n.standalone_connected || !n.quotient_connected
        }) {
            None => CheckResult::pass_with(
                "inheritance-connectivity",
                format!("{} normal subgroups verified", normals.len()),
            ),
            Some(n) => CheckResult::fail(
                "inheritance-connectivity",
                format!(
                    "normal subgroup id {} (order {}): restriction-consistent={}, \
                     sub-connected={}, quotient-connected={}",
                    n.id,
                    n.order,
                    n.restriction_consistent,
                    n.standalone_connected,
                    n.quotient_connected
                ),
            ),
        }
    });

    // lifting-connected
    let lifting_witnesses: Vec<&NormalAnalysis> = normals
        .iter()
        .filter(|n| n.standalone_connected && n.quotient_subs_all_connected)
        .collect();
    checks.push(if lifting_witnesses.is_empty() {
        CheckResult::not_applicable(
            "lifting-connected",
            "hypothesis holds for no proper nontrivial normal subgroup".into(),
        )
    } else if inv.connected() {
        CheckResult::pass_with(
            "lifting-connected",
            format!(
                "hypothesis held for {} normal subgroups",
                lifting_witnesses.len()
            ),
        )
    } else {
        let n = lifting_witnesses[0];
        CheckResult::fail(
            "lifting-connected",
            format!(
                "normal subgroup id {} (order {}) satisfies the hypothesis but the graph is \
                 disconnected",
                n.id, n.order
            ),
        )
    });

    // edge-projection
    checks.push(if order > EDGE_PROJECTION_ORDER_LIMIT {
        CheckResult::not_applicable(
            "edge-projection",
            format!("order {order} exceeds the {EDGE_PROJECTION_ORDER_LIMIT} limit"),
        )
    } else {
        let (pairs, violation) = edge_projection_check(a);
        match violation {
            None => CheckResult::pass_with(
                "edge-projection",
                format!("{pairs} (edge, normal) pairs verified"),
            ),
            Some(witness) => CheckResult::fail("edge-projection", witness),
        }
    });

    // le500-connected-spot
    checks.push(if order > SPOT_CHECK_ORDER_LIMIT {
        CheckResult::not_applicable(
            "le500-connected-spot",
            format!("order {order} exceeds {SPOT_CHECK_ORDER_LIMIT}"),
        )
    } else if inv.connected() {
        CheckResult::pass("le500-connected-spot")
    } else {
        let whole_isolated = inv.isolated_vertices.contains(&a.lattice.whole_id());
        if order == 360 && normals.is_empty() && whole_isolated {
            CheckResult::pass_with(
                "le500-connected-spot",
                "disconnected, but the group is the simple order-360 exception with the whole \
                 group isolated"
                    .into(),
            )
        } else {
            CheckResult::fail(
                "le500-connected-spot",
                format!(
                    "disconnected graph for order {order} (simple={}, whole isolated={})",
                    normals.is_empty(),
                    whole_isolated
                ),
            )
        }
    });

    checks
}

/// For every prime index edge H ⊂ K and every normal subgroup N, exactly one
/// of [K∩N : H∩N] and [KN : HN] equals the prime and the other is 1, with
/// the degenerate side an actual set equality. Product sets are formed
/// explicitly and must themselves appear in the lattice.
fn edge_projection_check(a: &Analysis) -> (usize, Option<String>) {
    let group = &a.group;
    let lattice = &a.lattice;
    let normal_ids: Vec<usize> = (0..lattice.len())
        .filter(|&i| lattice.is_normal_id(i))
        .collect();
    let mut memo: HashMap<(usize, usize), BitSet> = HashMap::new();
    let mut checked = 0;

    for e in &a.pi.edges {
        let (h, k, p) = (e.a, e.b, e.label.unwrap());
        for &nid in &normal_ids {
            checked += 1;
            let hn = product_set(group, lattice, &mut memo, h, nid).clone();
            let kn = product_set(group, lattice, &mut memo, k, nid).clone();
            if lattice.id_of(&hn).is_none() || lattice.id_of(&kn).is_none() {
                return (
                    checked,
                    Some(format!(
                        "product set of edge ({h},{k}) with normal {nid} is not in the lattice"
                    )),
                );
            }
            let (hn_order, kn_order) = (hn.count_ones(), kn.count_ones());

            let n_members = &lattice.subgroup(nid).members;
            let h_cap = lattice.subgroup(h).members.intersection(n_members);
            let k_cap = lattice.subgroup(k).members.intersection(n_members);
            let (hc, kc) = (h_cap.count_ones(), k_cap.count_ones());
            if kc % hc != 0 || kn_order % hn_order != 0 {
                return (
                    checked,
                    Some(format!("non-integral index at edge ({h},{k}), normal {nid}")),
                );
            }
            let cap_index = kc / hc;
            let prod_index = kn_order / hn_order;
            let balanced = cap_index * prod_index == p
                && ((cap_index == 1 && h_cap == k_cap) || (prod_index == 1 && hn == kn));
            if !balanced {
                return (
                    checked,
                    Some(format!(
                        "edge ({h},{k}) prime {p}, normal {nid}: intersection index {cap_index}, \
                         product index {prod_index}"
                    )),
                );
            }
        }
    }
    (checked, None)
}

fn product_set<'a>(
    group: &Group,
    lattice: &Lattice,
    memo: &'a mut HashMap<(usize, usize), BitSet>,
    h: usize,
    nid: usize,
) -> &'a BitSet {
    memo.entry((h, nid)).or_insert_with(|| {
        let mut out = BitSet::new(group.order());
        for x in lattice.subgroup(h).members.iter() {
            for y in lattice.subgroup(nid).members.iter() {
                out.insert(group.mul(x, y));
            }
        }
        out
    })
}

#[derive(Debug, Clone)]
pub struct CorpusConfig {
    pub entries: Vec<GroupSpec>,
    pub cap: usize,
    pub parallel: bool,
    pub out_dir: Option<PathBuf>,
}

impl CorpusConfig {
    pub fn with_default_entries(cap: usize) -> Self {
        Self {
            entries: default_corpus(),
            cap,
            parallel: false,
            out_dir: None,
        }
    }
}

/// The curated default corpus: cyclic groups to order 64, abelian groups
/// with up to three factors and order up to 128, dihedral groups to 24, the
/// quaternion group, symmetric and alternating groups to degree 6, two
/// projective specials, and assorted direct products.
pub fn default_corpus() -> Vec<GroupSpec> {
    let mut list = Vec::new();
    for n in 1..=64 {
        list.push(GroupSpec::Cyclic(n));
    }
    for a in 2..=5 {
        for b in a..=16 {
            if a * b <= 32 {
                list.push(GroupSpec::Abelian(vec![a, b]));
            }
        }
    }
    for (a, b) in [
        (2, 32),
        (4, 16),
        (8, 8),
        (2, 64),
        (4, 32),
        (8, 16),
        (3, 27),
        (9, 9),
        (5, 25),
    ] {
        list.push(GroupSpec::Abelian(vec![a, b]));
    }
    for a in 2..=3usize {
        for b in a..=4 {
            for c in b..=6 {
                if a * b * c <= 24 {
                    list.push(GroupSpec::Abelian(vec![a, b, c]));
                }
            }
        }
    }
    for factors in [
        vec![3, 3, 3],
        vec![5, 5, 5],
        vec![2, 4, 8],
        vec![4, 4, 8],
        vec![2, 4, 16],
    ] {
        list.push(GroupSpec::Abelian(factors));
    }
    for n in 1..=24 {
        list.push(GroupSpec::Dihedral(n));
    }
    list.push(GroupSpec::Quaternion8);
    for n in 1..=6 {
        list.push(GroupSpec::Sym(n));
    }
    for n in 1..=6 {
        list.push(GroupSpec::Alt(n));
    }
    list.push(GroupSpec::Psl2(5));
    list.push(GroupSpec::Psl2(7));
    for (p, q) in [
        (2, 3),
        (2, 5),
        (3, 5),
        (2, 7),
        (3, 7),
        (5, 7),
        (2, 2),
        (3, 3),
        (2, 11),
        (2, 13),
    ] {
        list.push(GroupSpec::Product(
            Box::new(GroupSpec::Cyclic(p)),
            Box::new(GroupSpec::Cyclic(q)),
        ));
    }
    list.push(GroupSpec::Product(
        Box::new(GroupSpec::Sym(3)),
        Box::new(GroupSpec::Cyclic(4)),
    ));
    list.push(GroupSpec::Product(
        Box::new(GroupSpec::Alt(4)),
        Box::new(GroupSpec::Cyclic(2)),
    ));
    list
}

#[derive(Debug, Clone, Serialize)]
pub struct SummaryRow {
    pub group: String,
    pub order: Option<usize>,
    pub subgroups: Option<usize>,
    pub edges: Option<usize>,
    pub girth: Option<usize>,
    pub components: Option<usize>,
    pub all_pass: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusSummary {
    pub schema: u32,
    pub entries: Vec<SummaryRow>,
}

pub struct CorpusOutcome {
    pub reports: Vec<Result<TheoremReport, String>>,
    pub summary: CorpusSummary,
    pub all_pass: bool,
}

impl CorpusOutcome {
    /// Concatenation of every canonical report body plus the summary, used
    /// for byte-level determinism comparisons.
    pub fn canonical_body(&self) -> String {
        let mut out = String::new();
        for report in self.reports.iter().flatten() {
            out.push_str(&report.canonical_body());
        }
        out.push_str(&serde_json::to_string_pretty(&self.summary).unwrap());
        out.push('\n');
        out
    }
}

/// Runs the theorem suite for every corpus entry; per-entry errors are
/// recorded in the summary without halting the rest.
pub fn run_corpus(config: &CorpusConfig) -> std::io::Result<CorpusOutcome> {
    let run_one = |spec: &GroupSpec| -> Result<TheoremReport, String> {
        run_theorem_suite(spec, config.cap)
            .map(|outcome| outcome.report)
            .map_err(|e| e.to_string())
    };
    let reports: Vec<Result<TheoremReport, String>> = if config.parallel {
        config.entries.par_iter().map(run_one).collect()
    } else {
        config.entries.iter().map(run_one).collect()
    };

    let rows: Vec<SummaryRow> = config
        .entries
        .iter()
        .zip(&reports)
        .map(|(spec, result)| match result {
            Ok(r) => SummaryRow {
                group: spec.to_string(),
                order: Some(r.order),
                subgroups: Some(r.subgroup_count),
                edges: Some(r.edge_count),
                girth: r.girth,
                components: Some(r.component_count),
                all_pass: r.all_pass,
                error: None,
            },
            Err(e) => SummaryRow {
                group: spec.to_string(),
                order: None,
                subgroups: None,
                edges: None,
                girth: None,
                components: None,
                all_pass: false,
                error: Some(e.clone()),
            },
        })
        .collect();
    let all_pass = rows.iter().all(|r| r.all_pass);
    let summary = CorpusSummary {
        schema: SCHEMA_VERSION,
        entries: rows,
    };
    let outcome = CorpusOutcome {
        reports,
        summary,
        all_pass,
    };

    if let Some(dir) = &config.out_dir {
        std::fs::create_dir_all(dir)?;
        for (i, (spec, report)) in config.entries.iter().zip(&outcome.reports).enumerate() {
            if let Ok(report) = report {
                let path = dir.join(format!("{i:03}_{}.json", slug(&spec.to_string())));
                std::fs::write(path, report.canonical_body())?;
            }
        }
        std::fs::write(
            dir.join("summary.json"),
            format!(
                "{}\n",
                serde_json::to_string_pretty(&outcome.summary).unwrap()
            ),
        )?;
    }
    Ok(outcome)
}

fn slug(text: &str) -> String {
    let mut out = String::new();
    let mut last_underscore = true;
    for c in text.chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c);
            last_underscore = false;
        } else if !last_underscore {
            out.push('_');
            last_underscore = true;
        }
    }
    out.trim_end_matches('_').to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeCandidate {
    pub group: String,
    pub normal_id: usize,
    pub normal_order: usize,
}

/// Scans the corpus for the converse of connectivity inheritance: a pair
/// (G, N) with both the normal subgroup and the quotient connected while
/// the group itself is not. Purely exploratory; candidates are reported,
/// never asserted against.
pub fn probe_open_problem(config: &CorpusConfig) -> Result<Vec<ProbeCandidate>, GroupError> {
    let probe_one = |spec: &GroupSpec| -> Result<Vec<ProbeCandidate>, GroupError> {
        let outcome = run_theorem_suite(spec, config.cap)?;
        let connected = outcome.analysis.invariants.connected();
        Ok(outcome
            .normals
            .iter()
            .filter(|n| n.standalone_connected && n.quotient_connected && !connected)
            .map(|n| ProbeCandidate {
                group: spec.to_string(),
                normal_id: n.id,
                normal_order: n.order,
            })
            .collect())
    };
    let nested: Result<Vec<Vec<ProbeCandidate>>, GroupError> = if config.parallel {
        config.entries.par_iter().map(probe_one).collect()
    } else {
        config.entries.iter().map(probe_one).collect()
    };
    Ok(nested?.into_iter().flatten().collect())
}
