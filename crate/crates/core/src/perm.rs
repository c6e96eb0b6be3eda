//! Permutations of `{0, …, degree-1}`, the concrete carrier for group elements.

use std::fmt;

use crate::error::GroupError;

/// A permutation stored as its image array: point `i` maps to `images[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from an image array, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(GroupError::NotABijection);
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Convenience constructor from disjoint cycles; points not mentioned are fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                images[cycle[w]] = cycle[(w + 1) % cycle.len()];
            }
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// Functional composition `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
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
}

impl fmt::Debug for Permutation {
    /// Cycle notation, e.g. `(0 1)(2 3)`; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            loop {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.images[p];
                if p == start {
                    break;
                }
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijection() {
        assert_eq!(
            Permutation::from_images(vec![0, 0, 1]),
            Err(GroupError::NotABijection)
        );
        assert_eq!(
            Permutation::from_images(vec![0, 3]),
            Err(GroupError::NotABijection)
        );
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]);
        let b = Permutation::from_cycles(3, &[&[1, 2]]);
        // (a ∘ b)(1) = a(b(1)) = a(2) = 2
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(b.compose(&a).apply(1), 0);
    }

    #[test]
    fn inverse_roundtrip() {
        let p = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }
}
