//! Concrete finite groups: construction from specs, canonical element
//! enumeration, quotients, derived series, solvability and nilpotency.

use std::collections::HashMap;
use std::sync::Arc;

use crate::arith::{factorize, is_prime, mod_pow};
use crate::bitset::BitSet;
use crate::groupdef::GroupSpec;
use crate::lattice::{Lattice, Subgroup};
use crate::perm::Permutation;

pub const DEFAULT_CAP: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group order exceeds the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("psl2 parameter {0} is not prime")]
    NotPrime(usize),
    #[error("generator degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("subgroup is not normal in its parent")]
    NotNormal,
}

/// A finite permutation group with a fully enumerated element table.
///
/// Element index 0 is the identity. The table order is deterministic:
/// breadth-first closure from the generators, each new level sorted by
/// image-array lexicographic order.
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    gen_indices: Vec<usize>,
    elements: Vec<Permutation>,
    index_of: HashMap<Permutation, usize>,
    mul_table: Vec<u32>,
    inv_table: Vec<u32>,
}

impl Group {
    pub fn from_generators(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Group, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }

        let mut elements = vec![Permutation::identity(degree)];
        let mut index_of = HashMap::new();
        index_of.insert(elements[0].clone(), 0usize);
        let mut level: Vec<usize> = vec![0];
        while !level.is_empty() {
            let mut fresh: Vec<Permutation> = Vec::new();
            for &i in &level {
                for g in &generators {
                    let next = elements[i].compose(g);
                    if !index_of.contains_key(&next) && !fresh.contains(&next) {
                        fresh.push(next);
                    }
                }
            }
            fresh.sort();
            level.clear();
            for p in fresh {
                if elements.len() >= cap {
                    return Err(GroupError::CapExceeded { cap });
                }
                let idx = elements.len();
                index_of.insert(p.clone(), idx);
                elements.push(p);
                level.push(idx);
            }
        }

        let order = elements.len();
        assert!(order <= u32::MAX as usize);
        let mut mul_table = vec![0u32; order * order];
        for i in 0..order {
            for j in 0..order {
                let prod = elements[i].compose(&elements[j]);
                mul_table[i * order + j] = index_of[&prod] as u32;
            }
        }
        let inv_table = elements
            .iter()
            .map(|p| index_of[&p.inverse()] as u32)
            .collect();
        let gen_indices = generators.iter().map(|g| index_of[g]).collect();

        Ok(Group {
            degree,
            generators,
            gen_indices,
            elements,
            index_of,
            mul_table,
            inv_table,
        })
    }

    /// Builds the faithful permutation representation described by a spec.
    pub fn construct(spec: &GroupSpec, cap: usize) -> Result<Group, GroupError> {
        let (degree, generators) = spec_generators(spec)?;
        Group::from_generators(degree, generators, cap)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Indices of the generators in the element table.
    pub fn generator_indices(&self) -> &[usize] {
        &self.gen_indices
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index_of.get(p).copied()
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul_table[i * self.elements.len() + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv_table[i] as usize
    }

    pub fn is_abelian(&self) -> bool {
        self.gen_indices.iter().all(|&a| {
            self.gen_indices
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    /// Least k >= 1 with x^k = e.
    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut x = i;
        while x != 0 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    /// True if some element generates the whole group.
    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        (0..n).any(|i| self.element_order(i) == n)
    }
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

fn spec_generators(spec: &GroupSpec) -> Result<(usize, Vec<Permutation>), GroupError> {
    fn full_cycle(degree: usize, from: usize, to: usize) -> Permutation {
        Permutation::from_cycles(degree, &[(from..to).collect()])
    }

    Ok(match spec {
        GroupSpec::Cyclic(n) => (*n, vec![full_cycle(*n, 0, *n)]),
        GroupSpec::Abelian(factors) => {
            let degree = factors.iter().sum();
            let mut generators = Vec::new();
            let mut offset = 0;
            for &n in factors {
                generators.push(full_cycle(degree, offset, offset + n));
                offset += n;
            }
            (degree, generators)
        }
        GroupSpec::Sym(n) => {
            if *n == 1 {
                (1, vec![Permutation::identity(1)])
            } else {
                (
                    *n,
                    vec![
                        Permutation::from_cycles(*n, &[vec![0, 1]]),
                        full_cycle(*n, 0, *n),
                    ],
                )
            }
        }
        GroupSpec::Alt(n) => match *n {
            1 | 2 => (*n, vec![Permutation::identity(*n)]),
            3 => (3, vec![Permutation::from_cycles(3, &[vec![0, 1, 2]])]),
            n => {
                let three = Permutation::from_cycles(n, &[vec![0, 1, 2]]);
                // An even long cycle: the n-cycle when n is odd, else the
                // (n-1)-cycle fixing point 0.
                let long = if n % 2 == 1 {
                    full_cycle(n, 0, n)
                } else {
                    full_cycle(n, 1, n)
                };
                (n, vec![three, long])
            }
        },
        GroupSpec::Dihedral(n) => match *n {
            // Orders 2 and 4 have no faithful action on 1 or 2 points, so the
            // degenerate cases get one extra transposition block each.
            1 => (2, vec![Permutation::from_cycles(2, &[vec![0, 1]])]),
            2 => (
                4,
                vec![
                    Permutation::from_cycles(4, &[vec![0, 1]]),
                    Permutation::from_cycles(4, &[vec![2, 3]]),
                ],
            ),
            n => {
                let rotation = full_cycle(n, 0, n);
                let reflection =
                    Permutation::from_images((0..n).map(|i| (n - i) % n).collect());
                (n, vec![rotation, reflection])
            }
        },
        GroupSpec::Quaternion8 => {
            // Left multiplication by i and j on {1, -1, i, -i, j, -j, k, -k}.
            let i = Permutation::from_images(vec![2, 3, 1, 0, 6, 7, 5, 4]);
            let j = Permutation::from_images(vec![4, 5, 7, 6, 1, 0, 2, 3]);
            (8, vec![i, j])
        }
        GroupSpec::Psl2(p) => {
            if !is_prime(*p) {
                return Err(GroupError::NotPrime(*p));
            }
            (*p + 1, psl2_generators(*p))
        }
        GroupSpec::Product(a, b) => {
            let (da, gens_a) = spec_generators(a)?;
            let (db, gens_b) = spec_generators(b)?;
            let degree = da + db;
            let mut generators: Vec<Permutation> =
                gens_a.iter().map(|g| g.embedded(degree, 0)).collect();
            generators.extend(gens_b.iter().map(|g| g.embedded(degree, da)));
            (degree, generators)
        }
        GroupSpec::Perm { degree, generators } => (*degree, generators.clone()),
    })
}

/// Generators of the Möbius action on the projective line over Z_p:
/// points 0..p-1 are the affine line, point p is infinity.
fn psl2_generators(p: usize) -> Vec<Permutation> {
    let degree = p + 1;
    // x -> x + 1
    let mut shift: Vec<usize> = (0..degree).collect();
    for (x, img) in shift.iter_mut().enumerate().take(p) {
        *img = (x + 1) % p;
    }
    // x -> -1/x
    let mut neg_inv: Vec<usize> = (0..degree).collect();
    neg_inv[0] = p;
    neg_inv[p] = 0;
    for (x, img) in neg_inv.iter_mut().enumerate().take(p).skip(1) {
        let inverse = mod_pow(x as u64, (p - 2) as u64, p as u64) as usize;
        *img = (p - inverse) % p;
    }
    vec![
        Permutation::from_images(shift),
        Permutation::from_images(neg_inv),
    ]
}

/// Subgroup generated by a seed set of element indices: plain worklist
/// closure over the multiplication table.
pub fn close_over(group: &Group, seed: &BitSet) -> BitSet {
    let mut members = seed.clone();
    members.insert(0);
    let mut list: Vec<usize> = members.iter().collect();
    let mut cursor = 0;
    while cursor < list.len() {
        let x = list[cursor];
        cursor += 1;
        for k in 0..list.len() {
            let y = list[k];
            for prod in [group.mul(x, y), group.mul(y, x)] {
                if members.insert(prod) {
                    list.push(prod);
                }
            }
        }
    }
    members
}

/// Subgroup generated by all commutators of pairs of members of `h`.
pub fn derived_subgroup(group: &Group, h: &Subgroup) -> Subgroup {
    let members: Vec<usize> = h.members.iter().collect();
    let mut seeds = BitSet::new(group.order());
    for &x in &members {
        let xinv = group.inv(x);
        for &y in &members {
            let commutator = group.mul(group.mul(xinv, group.inv(y)), group.mul(x, y));
            seeds.insert(commutator);
        }
    }
    Subgroup::from_members(group, close_over(group, &seeds))
}

/// The derived series G ⊇ G' ⊇ G'' ⊇ …, computed until it stabilizes.
#[derive(Debug)]
pub struct DerivedSeries {
    pub series: Vec<Subgroup>,
    pub solvable: bool,
}

pub fn derived_series(group: &Group) -> DerivedSeries {
    let mut series = vec![Subgroup::whole(group)];
    loop {
        let last = series.last().unwrap();
        if last.order == 1 {
            return DerivedSeries {
                series,
                solvable: true,
            };
        }
        let next = derived_subgroup(group, last);
        if next.order == last.order {
            return DerivedSeries {
                series,
                solvable: false,
            };
        }
        series.push(next);
    }
}

pub fn is_solvable(group: &Group) -> bool {
    derived_series(group).solvable
}

/// Nilpotency via the normal-Sylow criterion: a finite group is nilpotent
/// exactly when every Sylow subgroup is normal, which the complete lattice
/// makes directly checkable.
pub fn is_nilpotent(group: &Group, lattice: &Lattice) -> bool {
    factorize(group.order()).into_iter().all(|(p, e)| {
        let target = p.pow(e);
        (0..lattice.len())
            .filter(|&id| lattice.subgroup(id).order == target)
            .all(|id| lattice.is_normal_id(id))
    })
}

/// A quotient G/N realized as a fresh permutation group acting on the left
/// cosets of N. Coset labels are assigned by minimal member element index,
/// so the coset of the identity is always label 0.
#[derive(Debug)]
pub struct Quotient {
    pub parent: Arc<Group>,
    pub kernel: Subgroup,
    pub group: Arc<Group>,
    /// Parent element index -> coset label.
    pub coset_map: Vec<usize>,
    /// Coset label -> element index in the quotient group.
    coset_elem: Vec<usize>,
}

pub fn quotient(parent: &Arc<Group>, kernel: &Subgroup) -> Result<Quotient, GroupError> {
    if !crate::lattice::is_normal(parent, kernel) {
        return Err(GroupError::NotNormal);
    }
    let order = parent.order();
    let members: Vec<usize> = kernel.members.iter().collect();
    let mut coset_map = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for i in 0..order {
        if coset_map[i] != usize::MAX {
            continue;
        }
        let label = reps.len();
        reps.push(i);
        for &n in &members {
            coset_map[parent.mul(i, n)] = label;
        }
    }

    let coset_count = reps.len();
    let gens: Vec<Permutation> = parent
        .generator_indices()
        .iter()
        .map(|&g| {
            Permutation::from_images(
                reps.iter().map(|&rep| coset_map[parent.mul(g, rep)]).collect(),
            )
        })
        .collect();
    let group = Group::from_generators(coset_count, gens, coset_count)?;
    assert_eq!(
        group.order() * kernel.order,
        parent.order(),
        "coset action must realize the quotient faithfully"
    );

    // The quotient element acting as left multiplication by coset c sends
    // label 0 to c, which recovers the label <-> element bijection.
    let mut coset_elem = vec![usize::MAX; coset_count];
    for (idx, perm) in group.elements().iter().enumerate() {
        coset_elem[perm.apply(0)] = idx;
    }
    assert!(coset_elem.iter().all(|&e| e != usize::MAX));

    Ok(Quotient {
        parent: Arc::clone(parent),
        kernel: kernel.clone(),
        group: Arc::new(group),
        coset_map,
        coset_elem,
    })
}

impl Quotient {
    pub fn coset_count(&self) -> usize {
        self.coset_elem.len()
    }

    /// Quotient group element index carrying a given coset label.
    pub fn element_of_coset(&self, label: usize) -> usize {
        self.coset_elem[label]
    }

    /// Product of two cosets, as labels.
    pub fn coset_mul(&self, a: usize, b: usize) -> usize {
        let prod = self
            .group
            .mul(self.coset_elem[a], self.coset_elem[b]);
        self.group.element(prod).apply(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupdef::parse_group_definition;
    use crate::lattice::Lattice;

    fn build(text: &str) -> Arc<Group> {
        let spec = parse_group_definition(text).unwrap();
        Arc::new(Group::construct(&spec, DEFAULT_CAP).unwrap())
    }

    #[test]
    fn constructs_basic_orders() {
        assert_eq!(build("cyclic 12").order(), 12);
        assert_eq!(build("cyclic 12").degree(), 12);
        assert_eq!(build("sym 4").order(), 24);
        assert_eq!(build("alt 4").order(), 12);
        assert_eq!(build("dihedral 6").order(), 12);
        assert_eq!(build("dihedral 1").order(), 2);
        assert_eq!(build("dihedral 2").order(), 4);
        assert_eq!(build("quaternion8").order(), 8);
        assert_eq!(build("abelian 2 3").order(), 6);
        assert_eq!(build("product { cyclic 2 ; cyclic 2 }").order(), 4);
        assert_eq!(build("product { sym 3 ; cyclic 4 }").order(), 24);
        assert_eq!(build("sym 1").order(), 1);
        assert_eq!(build("alt 2").order(), 1);
        assert_eq!(build("alt 3").order(), 3);
    }

    #[test]
    fn alternating_orders_match_half_factorial() {
        for n in 3..=6usize {
            let expected: usize = (1..=n).product::<usize>() / 2;
            assert_eq!(build(&format!("alt {n}")).order(), expected, "alt {n}");
        }
        assert_eq!(build("alt 5").order(), 60);
        assert_eq!(build("alt 6").order(), 360);
    }

    #[test]
    fn symmetric_orders_match_factorial() {
        for n in 2..=5usize {
            let expected: usize = (1..=n).product();
            assert_eq!(build(&format!("sym {n}")).order(), expected, "sym {n}");
        }
    }

    #[test]
    fn psl2_orders_match_formula() {
        // |PSL(2, p)| = p(p^2 - 1)/gcd(2, p - 1)
        for (p, expected) in [(2, 6), (3, 12), (5, 60), (7, 168)] {
            let g = build(&format!("psl2 {p}"));
            assert_eq!(g.order(), expected, "psl2 {p}");
            assert_eq!(g.degree(), p + 1);
        }
    }

    #[test]
    fn psl2_requires_prime() {
        let err = Group::construct(&GroupSpec::Psl2(9), DEFAULT_CAP).unwrap_err();
        assert_eq!(err, GroupError::NotPrime(9));
    }

    #[test]
    fn cap_is_enforced() {
        let spec = parse_group_definition("sym 5").unwrap();
        let err = Group::construct(&spec, 100).unwrap_err();
        assert_eq!(err, GroupError::CapExceeded { cap: 100 });
    }

    #[test]
    fn element_table_is_deterministic() {
        let a = build("sym 4");
        let b = build("sym 4");
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn identity_sits_at_index_zero() {
        for text in ["sym 3", "cyclic 8", "quaternion8", "psl2 5"] {
            let g = build(text);
            assert!(g.element(0).is_identity(), "{text}");
            assert_eq!(g.inv(0), 0);
        }
    }

    #[test]
    fn element_orders() {
        let s3 = build("sym 3");
        assert_eq!(s3.element_order(0), 1);
        let three_cycle = s3
            .index_of(&Permutation::from_cycles(3, &[vec![0, 1, 2]]))
            .unwrap();
        assert_eq!(s3.element_order(three_cycle), 3);

        // The element combining both component generators of Z2 x Z3 has
        // order lcm(2, 3) = 6.
        let z6 = build("abelian 2 3");
        let gens = z6.generator_indices();
        let mixed = z6.mul(gens[0], gens[1]);
        assert_eq!(z6.element_order(mixed), 6);
    }

    #[test]
    fn abelian_detection() {
        assert!(build("cyclic 12").is_abelian());
        assert!(build("abelian 2 2 2").is_abelian());
        assert!(!build("sym 3").is_abelian());
        assert!(!build("quaternion8").is_abelian());
    }

    #[test]
    fn cyclic_detection() {
        assert!(build("cyclic 12").is_cyclic());
        assert!(build("abelian 2 3").is_cyclic());
        assert!(!build("abelian 2 2").is_cyclic());
        assert!(!build("sym 3").is_cyclic());
    }

    #[test]
    fn derived_subgroup_of_abelian_is_trivial() {
        let g = build("abelian 4 9");
        let whole = Subgroup::whole(&g);
        assert_eq!(derived_subgroup(&g, &whole).order, 1);
    }

    #[test]
    fn derived_subgroup_of_sym3_is_alt3() {
        let g = build("sym 3");
        let derived = derived_subgroup(&g, &Subgroup::whole(&g));
        assert_eq!(derived.order, 3);
        // It is exactly the set of even permutations.
        for i in 0..g.order() {
            let transpositions: usize = g.element(i).cycles().iter().map(|c| c.len() - 1).sum();
            assert_eq!(derived.members.contains(i), transpositions.is_multiple_of(2));
        }
    }

    #[test]
    fn derived_subgroup_is_normal_in_its_argument() {
        // Exhaustive conjugation check, for the whole group and for every
        // proper subgroup in the lattice.
        for text in ["sym 3", "sym 4", "alt 4", "dihedral 6", "quaternion8"] {
            let g = build(text);
            let lat = Lattice::enumerate(&g);
            for h in lat.subgroups() {
                let derived = derived_subgroup(&g, h);
                for x in h.members.iter() {
                    let xinv = g.inv(x);
                    for m in derived.members.iter() {
                        let conj = g.mul(g.mul(x, m), xinv);
                        assert!(derived.members.contains(conj), "{text}");
                    }
                }
            }
        }
    }

    #[test]
    fn derived_series_of_sym4() {
        let g = build("sym 4");
        let ds = derived_series(&g);
        assert!(ds.solvable);
        let orders: Vec<usize> = ds.series.iter().map(|s| s.order).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
    }

    #[test]
    fn abelian_series_has_length_two() {
        let ds = derived_series(&build("cyclic 12"));
        assert!(ds.solvable);
        assert_eq!(ds.series.len(), 2);
    }

    #[test]
    fn alt5_is_perfect_and_unsolvable() {
        let g = build("alt 5");
        let derived = derived_subgroup(&g, &Subgroup::whole(&g));
        assert_eq!(derived.order, 60);
        assert!(!is_solvable(&g));
    }

    #[test]
    fn nilpotency_examples() {
        for (text, expected) in [
            ("cyclic 12", true),
            ("quaternion8", true),
            ("abelian 2 2 3", true),
            ("sym 3", false),
            ("alt 4", false),
            ("dihedral 6", false),
        ] {
            let g = build(text);
            let lat = Lattice::enumerate(&g);
            assert_eq!(is_nilpotent(&g, &lat), expected, "{text}");
        }
    }

    #[test]
    fn quotient_sym3_by_alt3() {
        let g = build("sym 3");
        let lat = Lattice::enumerate(&g);
        let alt3 = (0..lat.len())
            .find(|&i| lat.subgroup(i).order == 3)
            .unwrap();
        let q = quotient(&g, lat.subgroup(alt3)).unwrap();
        assert_eq!(q.group.order(), 2);
    }

    #[test]
    fn quotient_alt4_by_klein_four() {
        let g = build("alt 4");
        let lat = Lattice::enumerate(&g);
        let v4 = (0..lat.len())
            .find(|&i| lat.subgroup(i).order == 4)
            .unwrap();
        let q = quotient(&g, lat.subgroup(v4)).unwrap();
        assert_eq!(q.group.order(), 3);
    }

    #[test]
    fn quotient_cyclic12_by_order3() {
        let g = build("cyclic 12");
        let lat = Lattice::enumerate(&g);
        let n = (0..lat.len())
            .find(|&i| lat.subgroup(i).order == 3)
            .unwrap();
        let q = quotient(&g, lat.subgroup(n)).unwrap();
        assert_eq!(q.group.order(), 4);
        assert!(q.group.is_cyclic());
    }

    #[test]
    fn quotient_rejects_non_normal_kernel() {
        let g = build("sym 3");
        let lat = Lattice::enumerate(&g);
        let z2 = (0..lat.len())
            .find(|&i| lat.subgroup(i).order == 2)
            .unwrap();
        assert_eq!(
            quotient(&g, lat.subgroup(z2)).unwrap_err(),
            GroupError::NotNormal
        );
    }

    #[test]
    fn coset_map_is_a_homomorphism() {
        for (text, kernel_order) in [("sym 3", 3), ("alt 4", 4), ("cyclic 12", 3)] {
            let g = build(text);
            let lat = Lattice::enumerate(&g);
            let n = (0..lat.len())
                .find(|&i| lat.subgroup(i).order == kernel_order && lat.is_normal_id(i))
                .unwrap();
            let q = quotient(&g, lat.subgroup(n)).unwrap();
            // The identity's coset always carries the canonical label 0.
            assert_eq!(q.coset_map[0], 0);
            // Exhaustive over all element pairs.
            for x in 0..g.order() {
                for y in 0..g.order() {
                    assert_eq!(
                        q.coset_map[g.mul(x, y)],
                        q.coset_mul(q.coset_map[x], q.coset_map[y]),
                        "{text}"
                    );
                }
            }
            // Surjective onto the coset labels.
            let mut hit = vec![false; q.coset_count()];
            for &label in &q.coset_map {
                hit[label] = true;
            }
            assert!(hit.iter().all(|&h| h));
        }
    }
}
