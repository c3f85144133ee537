//! Exact arithmetic for finite groups.
//!
//! A [`FiniteGroup`] is a complete multiplication table on element indices
//! `0..order`, with the identity pinned at index `0`. Everything downstream
//! (cosets, normal cores, quotients, regular representations, co-sofic
//! chains) is computed exhaustively from the table, so every answer is exact
//! and reproducible.

mod chain;
mod perm;

pub use chain::{ChainContext, CoSoficChain};
pub use perm::{hamming, Permutation};

use crate::caps::Caps;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("group too large: closure reached {0} elements (cap {1})")]
    GroupTooLarge(usize, usize),
    #[error("permutation degree {0} exceeds cap {1}")]
    DegreeTooLarge(usize, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("generator degree {0} does not match requested degree {1}")]
    GeneratorDegree(usize, usize),
    #[error("not a permutation: images are not a bijection of 0..{0}")]
    NotBijective(usize),
    #[error("malformed multiplication table: {0}")]
    MalformedTable(String),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("index 0 is not a two-sided identity (fails at {0})")]
    BadIdentity(usize),
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("subgroup not closed: {0} * {1} = {2} escapes the element set")]
    NotClosed(usize, usize, usize),
    #[error("subgroup must contain the identity (index 0)")]
    MissingIdentity,
    #[error("element index {0} out of range for group of order {1}")]
    IndexOutOfRange(usize, usize),
    #[error("not normal: conjugate {0} of kernel element {1} escapes the kernel")]
    NotNormal(usize, usize),
    #[error("subgroup belongs to a group of order {0}, expected {1}")]
    ParentMismatch(usize, usize),
    #[error("invalid stage index {0}: chain has {1} stages")]
    BadStage(usize, usize),
    #[error("co-sofic chain invariant violated: {0}")]
    BadChain(String),
}

/// Exact finite group: a multiplication table on indices `0..order` with the
/// identity at index `0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
    order: usize,
    /// Flattened row-major table: `mul[a * order + b] = a * b`.
    mul: Vec<u32>,
    inv: Vec<u32>,
    /// Optional display names per element.
    pub labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Build from an explicit table, validating every group axiom
    /// exhaustively (identity at index 0, associativity on all triples,
    /// two-sided inverses). Intended for untrusted desk-scale input.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::MalformedTable("empty table".into()));
        }
        let mut mul = Vec::with_capacity(order * order);
        for row in &table {
            if row.len() != order {
                return Err(GroupError::MalformedTable(format!(
                    "row length {} != order {}",
                    row.len(),
                    order
                )));
            }
            for &v in row {
                if v >= order {
                    return Err(GroupError::IndexOutOfRange(v, order));
                }
                mul.push(v as u32);
            }
        }
        let mut g = FiniteGroup {
            order,
            mul,
            inv: vec![0; order],
            labels: None,
        };
        g.fill_inverses()?;
        g.check_axioms()?;
        Ok(g)
    }

    /// Trusted constructor for tables that are correct by construction
    /// (closures of permutations, direct products, quotients). Inverses are
    /// computed; the axioms are not re-verified.
    fn from_table_unchecked(order: usize, mul: Vec<u32>) -> Result<Self, GroupError> {
        let mut g = FiniteGroup {
            order,
            mul,
            inv: vec![0; order],
            labels: None,
        };
        g.fill_inverses()?;
        Ok(g)
    }

    fn fill_inverses(&mut self) -> Result<(), GroupError> {
        for a in 0..self.order {
            let mut found = None;
            for b in 0..self.order {
                if self.mul(a, b) == 0 && self.mul(b, a) == 0 {
                    found = Some(b);
                    break;
                }
            }
            self.inv[a] = found.ok_or(GroupError::NoInverse(a))? as u32;
        }
        Ok(())
    }

    /// Exhaustive identity / associativity / inverse check.
    pub fn check_axioms(&self) -> Result<(), GroupError> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(GroupError::BadIdentity(a));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        for a in 0..n {
            let i = self.inv(a);
            if self.mul(a, i) != 0 || self.mul(i, a) != 0 {
                return Err(GroupError::NoInverse(a));
            }
        }
        Ok(())
    }

    /// Closure of a generator list under composition. Element `0` is the
    /// identity; also returns the faithful permutation image of each element
    /// in discovery order.
    pub fn from_permutation_generators(
        gens: &[Permutation],
        degree: usize,
        caps: &Caps,
    ) -> Result<(Self, Vec<Permutation>), GroupError> {
        if degree > caps.max_perm_degree {
            return Err(GroupError::DegreeTooLarge(degree, caps.max_perm_degree));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::GeneratorDegree(g.degree(), degree));
            }
        }
        let identity = Permutation::identity(degree);
        let mut elems: Vec<Permutation> = vec![identity.clone()];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut next = 0;
        while next < elems.len() {
            let base = elems[next].clone();
            next += 1;
            for g in gens {
                let prod = base.compose(g);
                if !index.contains_key(&prod) {
                    if elems.len() >= caps.max_group_order {
                        return Err(GroupError::GroupTooLarge(
                            elems.len() + 1,
                            caps.max_group_order,
                        ));
                    }
                    index.insert(prod.clone(), elems.len());
                    elems.push(prod);
                }
            }
        }
        let order = elems.len();
        let mut mul = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                let prod = elems[a].compose(&elems[b]);
                mul[a * order + b] = index[&prod] as u32;
            }
        }
        let g = FiniteGroup::from_table_unchecked(order, mul)?;
        Ok((g, elems))
    }

    /// Cyclic group of order `n` (index arithmetic mod `n`).
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = ((a + b) % n) as u32;
            }
        }
        FiniteGroup::from_table_unchecked(n, mul).expect("cyclic table is a group")
    }

    /// Trivial group.
    pub fn trivial() -> Self {
        FiniteGroup::cyclic(1)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn check_index(&self, a: usize) -> Result<(), GroupError> {
        if a < self.order {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange(a, self.order))
        }
    }

    /// Order of a single element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Left regular representation: `g ↦ (x ↦ g·x)`, one permutation of
    /// degree `order` per element. Faithful, and fixed-point-free off the
    /// identity.
    pub fn left_regular_rep(&self) -> Vec<Permutation> {
        (0..self.order)
            .map(|g| {
                Permutation::from_images((0..self.order).map(|x| self.mul(g, x) as u32).collect())
                    .expect("rows of a group table are bijections")
            })
            .collect()
    }

    /// Direct product with coordinate projections. Element `(a, b)` has
    /// index `a * |G2| + b`.
    pub fn direct_product(
        &self,
        other: &FiniteGroup,
        caps: &Caps,
    ) -> Result<DirectProduct, GroupError> {
        let n1 = self.order;
        let n2 = other.order;
        let order = n1.checked_mul(n2).ok_or(GroupError::GroupTooLarge(
            usize::MAX,
            caps.max_group_order,
        ))?;
        if order > caps.max_group_order {
            return Err(GroupError::GroupTooLarge(order, caps.max_group_order));
        }
        let mut mul = vec![0u32; order * order];
        for a1 in 0..n1 {
            for b1 in 0..n2 {
                let x = a1 * n2 + b1;
                for a2 in 0..n1 {
                    for b2 in 0..n2 {
                        let y = a2 * n2 + b2;
                        mul[x * order + y] =
                            (self.mul(a1, a2) * n2 + other.mul(b1, b2)) as u32;
                    }
                }
            }
        }
        let group = FiniteGroup::from_table_unchecked(order, mul)?;
        let left = (0..order).map(|x| (x / n2) as u32).collect();
        let right = (0..order).map(|x| (x % n2) as u32).collect();
        Ok(DirectProduct {
            group,
            right_order: n2,
            left,
            right,
        })
    }

    /// Right coset transversal of `h` in `self`: one representative per
    /// coset `Hg`, the minimal element index in each coset, listed in
    /// ascending order (so the identity, representing `H` itself, is first).
    pub fn right_coset_transversal(&self, h: &Subgroup) -> Result<Vec<usize>, GroupError> {
        h.check_parent(self)?;
        let mut seen = vec![false; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if seen[g] {
                continue;
            }
            reps.push(g);
            for &x in &h.elements {
                seen[self.mul(x as usize, g)] = true;
            }
        }
        Ok(reps)
    }

    /// Normal core of `h` in `self`: the intersection of all conjugates
    /// `g·H·g⁻¹`, i.e. the largest subgroup of `H` normal in `self`.
    pub fn normal_core(&self, h: &Subgroup) -> Result<Subgroup, GroupError> {
        h.check_parent(self)?;
        let in_h = h.membership_mask(self.order);
        let core: Vec<usize> = (0..self.order)
            .filter(|&x| {
                (0..self.order).all(|g| {
                    let conj = self.mul(self.mul(self.inv(g), x), g);
                    in_h[conj]
                })
            })
            .collect();
        Subgroup::new(self, core)
    }

    /// Quotient by a normal subgroup. The target group's elements are the
    /// cosets of `kernel`, indexed in ascending order of their minimal
    /// element (so the kernel itself, containing `0`, is the identity).
    pub fn quotient(&self, kernel: &Subgroup) -> Result<QuotientMap, GroupError> {
        kernel.check_parent(self)?;
        let in_n = kernel.membership_mask(self.order);
        for g in 0..self.order {
            for &x in &kernel.elements {
                let conj = self.mul(self.mul(g, x as usize), self.inv(g));
                if !in_n[conj] {
                    return Err(GroupError::NotNormal(conj, x as usize));
                }
            }
        }
        // cosets in ascending order of minimal element
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &x in &kernel.elements {
                coset_of[self.mul(x as usize, g)] = id;
            }
        }
        let m = reps.len();
        let mut mul = vec![0u32; m * m];
        for a in 0..m {
            for b in 0..m {
                mul[a * m + b] = coset_of[self.mul(reps[a], reps[b])] as u32;
            }
        }
        let target = FiniteGroup::from_table_unchecked(m, mul)?;
        Ok(QuotientMap {
            source_order: self.order,
            kernel: kernel.clone(),
            target,
            table: coset_of.iter().map(|&c| c as u32).collect(),
            section: reps.iter().map(|&r| r as u32).collect(),
        })
    }

    /// All subgroups, enumerated deterministically by closing generator sets
    /// (breadth-first over generated subgroups, smallest generators first).
    /// Exponential in the worst case; intended for desk-scale groups.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let mut found: Vec<Vec<u32>> = vec![vec![0]];
        let mut frontier: Vec<Vec<u32>> = vec![vec![0]];
        while let Some(base) = frontier.pop() {
            for g in 1..self.order {
                if base.binary_search(&(g as u32)).is_ok() {
                    continue;
                }
                let mut gens: Vec<usize> = base.iter().map(|&x| x as usize).collect();
                gens.push(g);
                let closed = self.close_under_mul(&gens);
                if !found.contains(&closed) {
                    found.push(closed.clone());
                    frontier.push(closed);
                }
            }
            frontier.sort();
            frontier.dedup();
        }
        found.sort_by_key(|s| (s.len(), s.clone()));
        found
            .into_iter()
            .map(|elements| Subgroup {
                parent_order: self.order,
                elements,
            })
            .collect()
    }

    fn close_under_mul(&self, gens: &[usize]) -> Vec<u32> {
        let mut mask = vec![false; self.order];
        mask[0] = true;
        let mut elems = vec![0usize];
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                for y in [self.mul(x, g), self.mul(g, x), self.inv(g)] {
                    if !mask[y] {
                        mask[y] = true;
                        elems.push(y);
                        frontier.push(y);
                    }
                }
            }
        }
        let mut out: Vec<u32> = elems.into_iter().map(|x| x as u32).collect();
        out.sort_unstable();
        out
    }

    /// Serializable table form.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }
}

/// A direct product `G1 × G2` together with its coordinate projections
/// (`left[x]`, `right[x]` are the components of element `x`).
#[derive(Debug, Clone)]
pub struct DirectProduct {
    pub group: FiniteGroup,
    right_order: usize,
    pub left: Vec<u32>,
    pub right: Vec<u32>,
}

impl DirectProduct {
    /// Index of the pair `(a, b)`.
    #[inline]
    pub fn pair(&self, a: usize, b: usize) -> usize {
        a * self.right_order + b
    }

    #[inline]
    pub fn left_of(&self, x: usize) -> usize {
        self.left[x] as usize
    }

    #[inline]
    pub fn right_of(&self, x: usize) -> usize {
        self.right[x] as usize
    }
}

/// A subgroup given by its sorted element set (always containing index 0).
/// The parent is identified by order only; operations re-validate against
/// the group they are handed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subgroup {
    parent_order: usize,
    elements: Vec<u32>,
}

impl Subgroup {
    /// Validating constructor: the element set must contain the identity and
    /// be closed under multiplication and inverse.
    pub fn new(parent: &FiniteGroup, elements: impl IntoIterator<Item = usize>) -> Result<Self, GroupError> {
        let mut elems: Vec<usize> = elements.into_iter().collect();
        elems.sort_unstable();
        elems.dedup();
        for &x in &elems {
            parent.check_index(x)?;
        }
        if elems.first() != Some(&0) {
            return Err(GroupError::MissingIdentity);
        }
        let mask = {
            let mut m = vec![false; parent.order()];
            for &x in &elems {
                m[x] = true;
            }
            m
        };
        for &a in &elems {
            for &b in &elems {
                let p = parent.mul(a, b);
                if !mask[p] {
                    return Err(GroupError::NotClosed(a, b, p));
                }
            }
            if !mask[parent.inv(a)] {
                return Err(GroupError::NotClosed(a, parent.inv(a), 0));
            }
        }
        Ok(Subgroup {
            parent_order: parent.order(),
            elements: elems.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Subgroup generated by `gens` (closed internally).
    pub fn generated(parent: &FiniteGroup, gens: &[usize]) -> Result<Self, GroupError> {
        for &g in gens {
            parent.check_index(g)?;
        }
        let elements = parent.close_under_mul(gens);
        Ok(Subgroup {
            parent_order: parent.order(),
            elements,
        })
    }

    /// The whole group as a subgroup of itself.
    pub fn full(parent: &FiniteGroup) -> Self {
        Subgroup {
            parent_order: parent.order(),
            elements: (0..parent.order() as u32).collect(),
        }
    }

    /// The trivial subgroup.
    pub fn trivial(parent: &FiniteGroup) -> Self {
        Subgroup {
            parent_order: parent.order(),
            elements: vec![0],
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().map(|&x| x as usize)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&(x as u32)).is_ok()
    }

    pub fn check_parent(&self, parent: &FiniteGroup) -> Result<(), GroupError> {
        if self.parent_order == parent.order() {
            Ok(())
        } else {
            Err(GroupError::ParentMismatch(self.parent_order, parent.order()))
        }
    }

    /// Is `self` a subset of `other` (both under the same parent)?
    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x as usize))
    }

    /// Is `self` normal in `parent`?
    pub fn is_normal_in(&self, parent: &FiniteGroup) -> bool {
        self.elements().all(|x| {
            (0..parent.order()).all(|g| self.contains(parent.mul(parent.mul(g, x), parent.inv(g))))
        })
    }

    fn membership_mask(&self, order: usize) -> Vec<bool> {
        let mut m = vec![false; order];
        for &x in &self.elements {
            m[x as usize] = true;
        }
        m
    }

    /// Materialize the subgroup as a standalone [`FiniteGroup`] with its
    /// identity at index 0, plus the inclusion map back into the parent.
    pub fn as_group(&self, parent: &FiniteGroup) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        self.check_parent(parent)?;
        let to_parent: Vec<usize> = self.elements().collect();
        let mut back = HashMap::new();
        for (i, &p) in to_parent.iter().enumerate() {
            back.insert(p, i);
        }
        let n = to_parent.len();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = back[&parent.mul(to_parent[a], to_parent[b])] as u32;
            }
        }
        let g = FiniteGroup::from_table_unchecked(n, mul)?;
        Ok((g, to_parent))
    }

    /// Elementwise direct product `self × other` inside `product`
    /// (constructed by [`FiniteGroup::direct_product`] of the parents).
    pub fn product_with(
        &self,
        other: &Subgroup,
        right_order: usize,
        product: &FiniteGroup,
    ) -> Result<Subgroup, GroupError> {
        let elems = self
            .elements()
            .flat_map(|a| other.elements().map(move |b| a * right_order + b));
        Subgroup::new(product, elems)
    }
}

/// A surjective homomorphism `source → target` with the stated kernel.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuotientMap {
    pub source_order: usize,
    pub kernel: Subgroup,
    pub target: FiniteGroup,
    /// `table[g]` is the image of `g`.
    table: Vec<u32>,
    /// Minimal-element section: `section[c]` is the least preimage of `c`.
    section: Vec<u32>,
}

impl QuotientMap {
    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.table[g] as usize
    }

    #[inline]
    pub fn section(&self, c: usize) -> usize {
        self.section[c] as usize
    }

    /// Image of a subgroup of the source.
    pub fn image_of(&self, sub: &Subgroup) -> Vec<usize> {
        let mut out: Vec<usize> = sub.elements().map(|x| self.apply(x)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[cfg(test)]
mod tests;
