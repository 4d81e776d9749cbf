//! Complete subgroup lattice enumeration with a closure certificate, plus
//! index, normality, core, and conjugacy queries.

use std::collections::HashMap;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::group::{close_over, Group};

/// A subgroup of a fixed parent group, held as a membership bitset over the
/// parent's element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub members: BitSet,
    pub order: usize,
    /// Greedily chosen minimal generating element indices: repeatedly adjoin
    /// the smallest member outside the span until the span is the subgroup.
    pub witness: Vec<usize>,
}

impl Subgroup {
    /// Wraps a membership bitset that is already closed. Panics if the
    /// greedy witness closure does not reproduce the set exactly, so a
    /// non-subgroup bitset cannot sneak in.
    pub fn from_members(group: &Group, members: BitSet) -> Subgroup {
        let order = members.count_ones();
        let mut span = BitSet::singleton(group.order(), 0);
        let mut witness = Vec::new();
        while let Some(x) = members.difference_min(&span) {
            witness.push(x);
            let mut seed = span.clone();
            seed.insert(x);
            span = close_over(group, &seed);
        }
        assert!(
            span == members,
            "membership bitset is not closed under the group operation"
        );
        Subgroup {
            members,
            order,
            witness,
        }
    }

    pub fn trivial(group: &Group) -> Subgroup {
        Subgroup::from_members(group, BitSet::singleton(group.order(), 0))
    }

    pub fn whole(group: &Group) -> Subgroup {
        let mut members = BitSet::new(group.order());
        for i in 0..group.order() {
            members.insert(i);
        }
        Subgroup::from_members(group, members)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("subgroup {h} is not contained in subgroup {k}")]
    NotContained { h: usize, k: usize },
}

/// Violation of the closure certificate: `⟨subgroup(h), g⟩` is missing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("closure certificate violated: extension of subgroup {h} by element {g} is missing")]
pub struct CertificateViolation {
    pub h: usize,
    pub g: usize,
}

/// The complete family of subgroups of a group, canonically ordered by
/// ascending order and then member-list lexicographic order.
pub struct Lattice {
    group: Arc<Group>,
    subgroups: Vec<Subgroup>,
    id_by_members: HashMap<BitSet, usize>,
    /// sup[i] = ids of subgroups containing subgroup i (including i).
    sup: Vec<BitSet>,
    /// sub[i] = ids of subgroups contained in subgroup i (including i).
    sub: Vec<BitSet>,
    normal: Vec<bool>,
}

impl Lattice {
    /// Enumerates every subgroup by breadth-first closure: seed with the
    /// trivial subgroup and keep adjoining single elements until no
    /// extension `⟨H, g⟩` produces a new subgroup. Any subgroup K is reached
    /// by adjoining its elements one at a time, so the fixpoint is complete.
    pub fn enumerate(group: &Arc<Group>) -> Lattice {
        let order = group.order();
        let trivial = BitSet::singleton(order, 0);
        let mut found: Vec<(BitSet, Vec<usize>)> = vec![(trivial.clone(), Vec::new())];
        let mut member_lists: Vec<Vec<usize>> = vec![vec![0]];
        let mut seen: HashMap<BitSet, usize> = HashMap::new();
        seen.insert(trivial, 0);

        let mut cursor = 0;
        while cursor < found.len() {
            let (h_bits, h_gens) = found[cursor].clone();
            let h_elems = member_lists[cursor].clone();
            let mut kgens = h_gens;
            kgens.push(usize::MAX);
            for g in 0..order {
                if h_bits.contains(g) {
                    continue;
                }
                *kgens.last_mut().unwrap() = g;
                let k_bits = extend_subgroup(group, &h_bits, &h_elems, &kgens);
                if !seen.contains_key(&k_bits) {
                    let k_order = k_bits.count_ones();
                    assert_eq!(order % k_order, 0, "Lagrange violated during enumeration");
                    seen.insert(k_bits.clone(), found.len());
                    member_lists.push(k_bits.iter().collect());
                    found.push((k_bits, kgens.clone()));
                }
            }
            cursor += 1;
        }

        let mut bitsets: Vec<BitSet> = found.into_iter().map(|(bits, _)| bits).collect();
        bitsets.sort_by(|a, b| {
            a.count_ones()
                .cmp(&b.count_ones())
                .then_with(|| a.cmp_members(b))
        });
        let subgroups: Vec<Subgroup> = bitsets
            .into_iter()
            .map(|bits| Subgroup::from_members(group, bits))
            .collect();

        let n = subgroups.len();
        let mut id_by_members = HashMap::with_capacity(n);
        for (id, s) in subgroups.iter().enumerate() {
            let fresh = id_by_members.insert(s.members.clone(), id).is_none();
            assert!(fresh, "duplicate subgroup bitset after canonical sort");
        }

        let mut sup = vec![BitSet::new(n); n];
        let mut sub = vec![BitSet::new(n); n];
        for i in 0..n {
            for j in 0..n {
                if subgroups[i].members.is_subset(&subgroups[j].members) {
                    sup[i].insert(j);
                    sub[j].insert(i);
                }
            }
        }

        let normal = subgroups
            .iter()
            .map(|s| is_normal(group, s))
            .collect();

        let lattice = Lattice {
            group: Arc::clone(group),
            subgroups,
            id_by_members,
            sup,
            sub,
            normal,
        };
        debug_assert!(lattice.verify_closure_certificate().is_ok());
        lattice
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    /// A lattice always contains the trivial subgroup.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn subgroup(&self, id: usize) -> &Subgroup {
        &self.subgroups[id]
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn id_of(&self, members: &BitSet) -> Option<usize> {
        self.id_by_members.get(members).copied()
    }

    /// True when subgroup `a` is contained in subgroup `b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.sup[a].contains(b)
    }

    /// Ids of subgroups containing `id`, including `id` itself.
    pub fn supersets(&self, id: usize) -> &BitSet {
        &self.sup[id]
    }

    /// Ids of subgroups contained in `id`, including `id` itself.
    pub fn subsets(&self, id: usize) -> &BitSet {
        &self.sub[id]
    }

    /// The index [K : H]; requires H ⊆ K.
    pub fn index(&self, k: usize, h: usize) -> Result<usize, LatticeError> {
        if !self.leq(h, k) {
            return Err(LatticeError::NotContained { h, k });
        }
        Ok(self.subgroup(k).order / self.subgroup(h).order)
    }

    pub fn is_normal_id(&self, id: usize) -> bool {
        self.normal[id]
    }

    pub fn trivial_id(&self) -> usize {
        0
    }

    pub fn whole_id(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// Ids of the proper nontrivial normal subgroups, ascending.
    pub fn proper_nontrivial_normal_ids(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&id| {
                self.normal[id] && id != self.trivial_id() && id != self.whole_id()
            })
            .collect()
    }

    /// Re-checks the completeness certificate: for every listed subgroup H
    /// and every group element g, the extension ⟨H, g⟩ is also listed.
    pub fn verify_closure_certificate(&self) -> Result<(), CertificateViolation> {
        let order = self.group.order();
        for (id, s) in self.subgroups.iter().enumerate() {
            let elems: Vec<usize> = s.members.iter().collect();
            let mut kgens = s.witness.clone();
            kgens.push(usize::MAX);
            for g in 0..order {
                if s.members.contains(g) {
                    continue;
                }
                *kgens.last_mut().unwrap() = g;
                let k = extend_subgroup(&self.group, &s.members, &elems, &kgens);
                if !self.id_by_members.contains_key(&k) {
                    return Err(CertificateViolation { h: id, g });
                }
            }
        }
        Ok(())
    }
}

/// Closure ⟨kgens⟩ ⊇ H computed coset by coset: starting from H itself,
/// right-multiply known coset representatives by the generators and absorb
/// each newly reached coset of H wholesale.
fn extend_subgroup(
    group: &Group,
    h_members: &BitSet,
    h_elems: &[usize],
    kgens: &[usize],
) -> BitSet {
    let mut k = h_members.clone();
    let mut reps = vec![0usize];
    let mut cursor = 0;
    while cursor < reps.len() {
        let t = reps[cursor];
        cursor += 1;
        for &s in kgens {
            let ts = group.mul(t, s);
            if !k.contains(ts) {
                for &h in h_elems {
                    k.insert(group.mul(h, ts));
                }
                reps.push(ts);
            }
        }
    }
    k
}

/// True when every generator of the group conjugates `h` onto itself.
pub fn is_normal(group: &Group, h: &Subgroup) -> bool {
    group.generator_indices().iter().all(|&g| {
        let ginv = group.inv(g);
        h.members
            .iter()
            .all(|m| h.members.contains(group.mul(group.mul(g, m), ginv)))
    })
}

/// All distinct conjugates gHg⁻¹, in canonical member-list order.
pub fn conjugates(group: &Group, h: &Subgroup) -> Vec<Subgroup> {
    let mut seen: Vec<BitSet> = Vec::new();
    for g in 0..group.order() {
        let ginv = group.inv(g);
        let mut conj = BitSet::new(group.order());
        for m in h.members.iter() {
            conj.insert(group.mul(group.mul(g, m), ginv));
        }
        if !seen.contains(&conj) {
            seen.push(conj);
        }
    }
    seen.sort_by(|a, b| a.cmp_members(b));
    seen.into_iter()
        .map(|bits| Subgroup::from_members(group, bits))
        .collect()
}

/// Core of H in G: the intersection of all conjugates of H.
pub fn core(group: &Group, h: &Subgroup) -> Subgroup {
    let mut acc = h.members.clone();
    for conj in conjugates(group, h) {
        acc = acc.intersection(&conj.members);
    }
    Subgroup::from_members(group, acc)
}
