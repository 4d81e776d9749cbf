//! Permutations of `{0..degree-1}`, the element representation for all groups.

use std::fmt;

/// A bijection on `{0..degree-1}` stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    /// Builds from an image array. Panics if it is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &img in &images {
            assert!(img < images.len() && !seen[img], "not a bijection");
            seen[img] = true;
        }
        Self { images }
    }

    /// Product of pairwise disjoint cycles given with 0-based points.
    /// `(a b c)` maps a to b, b to c, c to a; unlisted points are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&p| self.images[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Canonical disjoint-cycle decomposition: fixed points omitted, each
    /// cycle starts at its smallest point, cycles sorted by smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    /// Embeds into a larger degree, acting on `offset..offset+degree` and
    /// fixing everything else. Used for direct products on disjoint points.
    pub fn embedded(&self, total_degree: usize, offset: usize) -> Permutation {
        debug_assert!(offset + self.degree() <= total_degree);
        let mut images: Vec<usize> = (0..total_degree).collect();
        for (i, &img) in self.images.iter().enumerate() {
            images[offset + i] = offset + img;
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Permutation::from_cycles(3, &[vec![0, 1]]);
        let b = Permutation::from_cycles(3, &[vec![0, 2]]);
        // b first: 0 -> 2, then a fixes 2.
        assert_eq!(a.compose(&b).apply(0), 2);
        assert_eq!(a.compose(&b).images(), &[2, 0, 1]);
    }

    #[test]
    fn inverse_cancels() {
        let p = Permutation::from_cycles(6, &[vec![0, 3, 4], vec![1, 5]]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn cycle_decomposition_is_canonical() {
        let p = Permutation::from_cycles(6, &[vec![4, 5], vec![0, 2, 1]]);
        assert_eq!(p.cycles(), vec![vec![0, 2, 1], vec![4, 5]]);
        assert_eq!(p.to_string(), "(1 3 2)(5 6)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }

    #[test]
    fn embedding_fixes_outside_points() {
        let p = Permutation::from_cycles(2, &[vec![0, 1]]);
        let e = p.embedded(5, 3);
        assert_eq!(e.images(), &[0, 1, 2, 4, 3]);
    }
}
