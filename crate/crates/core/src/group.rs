//! Finite permutation groups, their conjugacy classes, and homomorphisms.
//!
//! Groups are enumerated breadth-first over generator words so that element
//! indices, class representatives and matrix layouts are reproducible
//! byte-for-byte across runs. Element 0 is always the identity.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::GroupError;
use crate::linalg::RationalMatrix;
use crate::perm::Permutation;

/// Default cap on group order; guards `generate` against malformed input.
/// Every stabilizer arising from a cocompact 3-orbifold quotient in practice
/// has order well below 100.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// A finite permutation group with cached element list and conjugacy classes.
#[derive(Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    /// For each element: `(parent, generator)` with `element = parent ∘ gen`,
    /// `None` for the identity. Used to push homomorphisms along words.
    derivations: Vec<Option<(usize, usize)>>,
    /// `class_of[e]` is the conjugacy class index of element `e`.
    class_of: Vec<usize>,
    /// Classes in order of their least member; `classes[k][0]` is the
    /// canonical representative.
    classes: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Closure of the generators under composition, breadth-first over
    /// generator words with the given cap on the order.
    pub fn generate_with_cap(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Arc<FiniteGroup>, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0usize);
        let mut derivations: Vec<Option<(usize, usize)>> = vec![None];
        let mut queue = VecDeque::from([0usize]);
        while let Some(current) = queue.pop_front() {
            for (gi, gen) in generators.iter().enumerate() {
                let candidate = elements[current].compose(gen);
                if !index.contains_key(&candidate) {
                    if elements.len() >= cap {
                        return Err(GroupError::GroupTooLarge { cap });
                    }
                    let id = elements.len();
                    index.insert(candidate.clone(), id);
                    elements.push(candidate);
                    derivations.push(Some((current, gi)));
                    queue.push_back(id);
                }
            }
        }

        let inverses = elements
            .iter()
            .map(|e| index[&e.inverse()])
            .collect::<Vec<_>>();

        // Conjugation orbits by closure under generator conjugation (the
        // inner automorphisms of the generators generate all of them).
        // Scanning start points in element order makes the least element of
        // each class its representative.
        let n = elements.len();
        let gen_ids: Vec<usize> = generators.iter().map(|g| index[g]).collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let k = classes.len();
            class_of[start] = k;
            let mut members = vec![start];
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &g in &gen_ids {
                    let conj = elements[g]
                        .compose(&elements[x])
                        .compose(&elements[inverses[g]]);
                    let e = index[&conj];
                    if class_of[e] == usize::MAX {
                        class_of[e] = k;
                        members.push(e);
                        stack.push(e);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }

        Ok(Arc::new(FiniteGroup {
            degree,
            generators,
            elements,
            index,
            inverses,
            derivations,
            class_of,
            classes,
        }))
    }

    pub fn generate(
        degree: usize,
        generators: Vec<Permutation>,
    ) -> Result<Arc<FiniteGroup>, GroupError> {
        Self::generate_with_cap(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inverse_of(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Identity as an enumerated group: same degree and the same generator
    /// list, which forces the same element enumeration, conjugacy classes
    /// and matrix layouts. Sharing one `Arc` is sufficient but not required.
    pub fn same_group(&self, other: &FiniteGroup) -> bool {
        std::ptr::eq(self, other)
            || (self.degree == other.degree && self.generators == other.generators)
    }

    /// Number of conjugacy classes, `c(G)`.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Conjugacy classes as sorted element-index lists, ordered by least member.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn class_representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    pub fn element_order(&self, e: usize) -> usize {
        let mut order = 1;
        let mut acc = e;
        while acc != 0 {
            acc = self.multiply(acc, e);
            order += 1;
        }
        order
    }

    pub fn is_abelian(&self) -> bool {
        self.class_count() == self.order()
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        (0..n).any(|e| self.element_order(e) == n)
    }

    /// Brute-force test for a dihedral presentation: a cyclic subgroup ⟨r⟩ of
    /// index 2 plus an involution inverting it. Accepts the degenerate cases
    /// D1 ≅ Z2 and D2 ≅ Klein four.
    pub fn is_dihedral(&self) -> bool {
        let n = self.order();
        if !n.is_multiple_of(2) {
            return false;
        }
        let half = n / 2;
        for r in 0..n {
            if self.element_order(r) != half && !(half == 1 && r == 0) {
                continue;
            }
            // Powers of r.
            let mut cyc = Vec::with_capacity(half);
            let mut acc = 0usize;
            loop {
                cyc.push(acc);
                acc = self.multiply(acc, r);
                if acc == 0 {
                    break;
                }
            }
            if cyc.len() != half {
                continue;
            }
            let rinv = self.inverse_of(r);
            for s in 0..n {
                if cyc.contains(&s) || self.multiply(s, s) != 0 {
                    continue;
                }
                let conj = self.multiply(self.multiply(s, r), self.inverse_of(s));
                if conj == rinv {
                    return true;
                }
            }
        }
        false
    }

    // Named constructors for the stabilizers that actually occur.

    pub fn trivial() -> Arc<FiniteGroup> {
        Self::generate(1, vec![]).expect("trivial group")
    }

    pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
        assert!(n >= 1);
        if n == 1 {
            return Self::trivial();
        }
        let rot = Permutation::from_cycles(n, &[&(0..n).collect::<Vec<_>>()]);
        Self::generate(n, vec![rot]).expect("cyclic group")
    }

    /// Klein four group on 4 points, generated by (0 1) and (2 3).
    pub fn klein() -> Arc<FiniteGroup> {
        let a = Permutation::from_cycles(4, &[&[0, 1]]);
        let b = Permutation::from_cycles(4, &[&[2, 3]]);
        Self::generate(4, vec![a, b]).expect("klein group")
    }

    pub fn symmetric4() -> Arc<FiniteGroup> {
        let t = Permutation::from_cycles(4, &[&[0, 1]]);
        let c = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]);
        Self::generate(4, vec![t, c]).expect("symmetric group S4")
    }

    /// Dihedral group of order 2n generated by two reflections.
    ///
    /// For n ≥ 3 the group acts on the n vertices of a regular n-gon:
    /// generator 0 is the reflection fixing vertex 0, generator 1 the
    /// reflection through the midpoint of side {0, 1}; their product is the
    /// rotation by one step. For n = 2 the action on 2 points is not
    /// faithful, so the Klein four group on 4 points is used instead.
    pub fn dihedral(n: usize) -> Result<Arc<FiniteGroup>, GroupError> {
        if n < 2 {
            return Err(GroupError::DihedralTooSmall(n));
        }
        if n == 2 {
            return Ok(Self::klein());
        }
        let r0 = Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
        let r1 = Permutation::from_images((0..n).map(|i| (n + 1 - i) % n).collect()).unwrap();
        Self::generate(n, vec![r0, r1])
    }

    /// Direct product D_n × Z2 on n + 2 points (4 + 2 points when n = 2);
    /// generators are the two dihedral reflections followed by the central
    /// involution swapping the last two points.
    pub fn dihedral_times_z2(n: usize) -> Result<Arc<FiniteGroup>, GroupError> {
        if n < 2 {
            return Err(GroupError::DihedralTooSmall(n));
        }
        let base = if n == 2 { 4 } else { n };
        let degree = base + 2;
        let pad = |p: &Permutation| {
            let mut images: Vec<usize> = p.images().to_vec();
            images.push(base);
            images.push(base + 1);
            Permutation::from_images(images).unwrap()
        };
        let dn = Self::dihedral(n)?;
        let mut gens: Vec<Permutation> = dn.generators().iter().map(pad).collect();
        gens.push(Permutation::from_cycles(degree, &[&[base, base + 1]]));
        Self::generate(degree, gens)
    }
}

/// Free-function alias for `FiniteGroup::generate`.
pub fn generate_group(
    degree: usize,
    generators: Vec<Permutation>,
) -> Result<Arc<FiniteGroup>, GroupError> {
    FiniteGroup::generate(degree, generators)
}

/// Matrix of a linear map between class-function spaces in the
/// class-indicator basis; entries are exact rationals.
pub type ClassMatrix = RationalMatrix;

/// An injective homomorphism between finite groups, given by generator
/// images and validated over the full multiplication table.
#[derive(Debug, Clone)]
pub struct GroupHom {
    domain: Arc<FiniteGroup>,
    codomain: Arc<FiniteGroup>,
    gen_images: Vec<usize>,
    element_map: Vec<usize>,
}

impl GroupHom {
    /// Builds the homomorphism sending `domain` generator `i` to the codomain
    /// element `gen_images[i]`, extends it along generator words, and rejects
    /// the input unless the extension is a well-defined injective
    /// homomorphism (checked by a full `f(xy) = f(x) f(y)` table scan).
    pub fn new(
        domain: Arc<FiniteGroup>,
        codomain: Arc<FiniteGroup>,
        gen_images: Vec<usize>,
    ) -> Result<GroupHom, GroupError> {
        if gen_images.len() != domain.generators().len() {
            return Err(GroupError::GeneratorCountMismatch {
                expected: domain.generators().len(),
                got: gen_images.len(),
            });
        }
        if gen_images.iter().any(|&g| g >= codomain.order()) {
            return Err(GroupError::NotAnElement);
        }
        let mut element_map = vec![0usize; domain.order()];
        for e in 1..domain.order() {
            let (parent, gen) =
                domain.derivations[e].expect("non-identity element has a derivation");
            element_map[e] = codomain.multiply(element_map[parent], gen_images[gen]);
        }
        let hom = GroupHom {
            domain,
            codomain,
            gen_images,
            element_map,
        };
        hom.check_homomorphism()?;
        hom.check_injective()?;
        Ok(hom)
    }

    /// Same, with generator images given as permutations of the codomain.
    pub fn from_perms(
        domain: Arc<FiniteGroup>,
        codomain: Arc<FiniteGroup>,
        images: &[Permutation],
    ) -> Result<GroupHom, GroupError> {
        let gen_images = images
            .iter()
            .map(|p| codomain.index_of(p).ok_or(GroupError::NotAnElement))
            .collect::<Result<Vec<_>, _>>()?;
        GroupHom::new(domain, codomain, gen_images)
    }

    pub fn identity(group: Arc<FiniteGroup>) -> GroupHom {
        let gen_images = group
            .generators()
            .iter()
            .map(|g| group.index_of(g).unwrap())
            .collect();
        GroupHom::new(group.clone(), group, gen_images).expect("identity hom")
    }

    pub fn from_trivial(codomain: Arc<FiniteGroup>) -> GroupHom {
        GroupHom::new(FiniteGroup::trivial(), codomain, vec![]).expect("trivial inclusion")
    }

    fn check_homomorphism(&self) -> Result<(), GroupError> {
        let n = self.domain.order();
        for x in 0..n {
            for y in 0..n {
                let xy = self.domain.multiply(x, y);
                let lhs = self.element_map[xy];
                let rhs = self
                    .codomain
                    .multiply(self.element_map[x], self.element_map[y]);
                if lhs != rhs {
                    return Err(GroupError::NotAHomomorphism);
                }
            }
        }
        Ok(())
    }

    fn check_injective(&self) -> Result<(), GroupError> {
        let mut seen = vec![false; self.codomain.order()];
        for &img in &self.element_map {
            if seen[img] {
                return Err(GroupError::NotInjective);
            }
            seen[img] = true;
        }
        Ok(())
    }

    pub fn domain(&self) -> &Arc<FiniteGroup> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteGroup> {
        &self.codomain
    }

    pub fn gen_images(&self) -> &[usize] {
        &self.gen_images
    }

    pub fn apply(&self, element: usize) -> usize {
        self.element_map[element]
    }

    /// Post-composition with the inner automorphism `x ↦ k x k⁻¹` of the
    /// codomain. Class maps and induction matrices are invariant under this.
    pub fn post_compose_inner(&self, k: usize) -> GroupHom {
        let kinv = self.codomain.inverse_of(k);
        let gen_images = self
            .gen_images
            .iter()
            .map(|&g| self.codomain.multiply(self.codomain.multiply(k, g), kinv))
            .collect();
        GroupHom::new(self.domain.clone(), self.codomain.clone(), gen_images)
            .expect("conjugate of a valid hom is valid")
    }

    /// Composition `other ∘ self` (apply `self` first).
    pub fn then(&self, other: &GroupHom) -> GroupHom {
        let gen_images = self.gen_images.iter().map(|&g| other.apply(g)).collect();
        GroupHom::new(self.domain.clone(), other.codomain.clone(), gen_images)
            .expect("composite of injective homs is valid")
    }

    /// Maps each conjugacy class of the domain to the class of the image of
    /// its representative; independent of the representative choice.
    pub fn class_map(&self) -> Vec<usize> {
        (0..self.domain.class_count())
            .map(|k| {
                self.codomain
                    .class_of(self.element_map[self.domain.class_representative(k)])
            })
            .collect()
    }

    /// Frobenius induction of class functions in the class-indicator bases:
    /// column `j` is `Ind` of the indicator of domain class `j`, with
    /// `(Ind u)(g) = (1/|H|) · #{ x in G : x⁻¹ g x in f(C_j) }` on each
    /// codomain class. Over Q its rank equals the rank of the induced map on
    /// representation rings (invertible character-table change of basis).
    pub fn induction_matrix(&self) -> ClassMatrix {
        let g = &self.codomain;
        let h = &self.domain;
        // Domain class index of each codomain element in the image, if any.
        let mut image_class = vec![None; g.order()];
        for e in 0..h.order() {
            image_class[self.element_map[e]] = Some(h.class_of(e));
        }
        let h_order = BigInt::from(h.order());
        let mut m = RationalMatrix::zeros(g.class_count(), h.class_count());
        for gi in 0..g.class_count() {
            let rep = g.class_representative(gi);
            let mut counts = vec![0i64; h.class_count()];
            for x in 0..g.order() {
                let conj = g.multiply(g.multiply(g.inverse_of(x), rep), x);
                if let Some(j) = image_class[conj] {
                    counts[j] += 1;
                }
            }
            for (j, &c) in counts.iter().enumerate() {
                if c != 0 {
                    m.set(gi, j, BigRational::new(BigInt::from(c), h_order.clone()));
                }
            }
        }
        m
    }
}

/// Free-function aliases over the methods above.
pub fn class_map(f: &GroupHom) -> Vec<usize> {
    f.class_map()
}

pub fn induction_matrix(f: &GroupHom) -> ClassMatrix {
    f.induction_matrix()
}

/// True when two homs with the same domain and codomain agree up to an inner
/// automorphism of the codomain, i.e. define the same map on class functions.
pub fn conjugate_homs(a: &GroupHom, b: &GroupHom) -> bool {
    if !Arc::ptr_eq(a.domain(), b.domain()) || !Arc::ptr_eq(a.codomain(), b.codomain()) {
        return false;
    }
    let g = a.codomain();
    (0..g.order()).any(|k| {
        let kinv = g.inverse_of(k);
        a.gen_images
            .iter()
            .zip(&b.gen_images)
            .all(|(&ga, &gb)| g.multiply(g.multiply(k, ga), kinv) == gb)
    })
}

/// `Σ |class| = |G|` and class sizes divide `|G|`; used by tests and the
/// validator as a cheap structural self-check.
pub fn class_equation_holds(g: &FiniteGroup) -> bool {
    let total: usize = g.conjugacy_classes().iter().map(|c| c.len()).sum();
    total == g.order()
        && g.conjugacy_classes()
            .iter()
            .all(|c| !c.is_empty() && g.order().is_multiple_of(c.len()))
}
