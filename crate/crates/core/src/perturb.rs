//! Deterministic perturbation of a complex by inner automorphisms.
//!
//! Each inclusion in the quotient data is only canonical up to
//! post-composition with an inner automorphism of its codomain, so every
//! computed invariant must be unchanged under random such twists. This
//! module provides the twist; the invariance checks live in the test suites.

use crate::complex::{Incidence, OrbitComplex};

/// Splitmix-style generator; deterministic across platforms.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

/// Rebuilds the complex with every inclusion post-composed by conjugation
/// with a pseudo-random element of its codomain (about half the records are
/// twisted). The result is a valid complex describing the same quotient.
pub fn inner_twist(c: &OrbitComplex, seed: u64) -> OrbitComplex {
    let mut rng = Rng(seed);
    let incidences = c
        .incidences()
        .iter()
        .map(|inc| {
            let order = inc.inclusion.codomain().order();
            if order > 1 && rng.next().is_multiple_of(2) {
                let k = rng.below(order);
                Incidence {
                    cell: inc.cell.clone(),
                    face: inc.face.clone(),
                    degree: inc.degree,
                    inclusion: inc.inclusion.post_compose_inner(k),
                }
            } else {
                inc.clone()
            }
        })
        .collect();
    OrbitComplex::new(c.cells().to_vec(), incidences)
        .expect("twisted complex stays structurally valid")
}
