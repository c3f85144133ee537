//! `(F, ε)`-approximation data and its verifier.
//!
//! An [`ApproxMap`] is a finite-support map from group elements to
//! permutations of a fixed finite set. The verifier checks, in exact
//! rational arithmetic, that the map is unital, almost multiplicative, and
//! almost free in normalized Hamming distance, and reports worst-case
//! defects with witnesses.
//!
//! The verifier never computes group products itself: the caller supplies a
//! product resolver over support indices, which keeps the verifier
//! group-agnostic and auditable.

use crate::caps::Caps;
use crate::exec;
use crate::frac::Frac;
use crate::group::{hamming, GroupError, Permutation};
use num_traits::{One, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ApproxError {
    #[error("element not in support: {0}")]
    NotInSupport(String),
    #[error("unresolved product: support is not closed over F·F at ({0}, {1})")]
    UnresolvedProduct(usize, usize),
    #[error("support mismatch between the two maps")]
    SupportMismatch,
    #[error("degree {0} exceeds cap {1}")]
    DegreeTooLarge(usize, usize),
    #[error("table length {0} does not match support length {1}")]
    TableLength(usize, usize),
    #[error("stage conditions violated: condition ({0}) fails at {1}")]
    StageCondition(usize, String),
    #[error("invalid corruption rate: {0}")]
    Corruption(String),
    #[error("group error: {0}")]
    Group(#[from] GroupError),
}

/// Finite-support map into a symmetric group. By convention `support[0]` is
/// the identity element of the group being approximated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxMap<K> {
    support: Vec<K>,
    degree: usize,
    table: Vec<Permutation>,
    index: HashMap<K, usize>,
}

impl<K: Clone + Eq + Hash + Debug> ApproxMap<K> {
    pub fn new(
        support: Vec<K>,
        degree: usize,
        table: Vec<Permutation>,
    ) -> Result<Self, ApproxError> {
        if table.len() != support.len() {
            return Err(ApproxError::TableLength(table.len(), support.len()));
        }
        for p in &table {
            if p.degree() != degree {
                return Err(ApproxError::Group(GroupError::DegreeMismatch(
                    p.degree(),
                    degree,
                )));
            }
        }
        let mut index = HashMap::with_capacity(support.len());
        for (i, k) in support.iter().enumerate() {
            if index.insert(k.clone(), i).is_some() {
                return Err(ApproxError::NotInSupport(format!(
                    "duplicate support element {k:?}"
                )));
            }
        }
        Ok(ApproxMap {
            support,
            degree,
            table,
            index,
        })
    }

    pub fn support(&self) -> &[K] {
        &self.support
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn perm(&self, i: usize) -> &Permutation {
        &self.table[i]
    }

    pub fn table(&self) -> &[Permutation] {
        &self.table
    }

    pub fn support_index(&self, k: &K) -> Option<usize> {
        self.index.get(k).copied()
    }

    /// Verify the Definition-style conditions over `f` at threshold
    /// `epsilon`, resolving products of support indices through `resolve`.
    /// `f` must be a subset of the support with `f[0]` the identity.
    pub fn verify<R>(
        &self,
        f: &[K],
        epsilon: Frac,
        resolve: R,
    ) -> Result<DefectReport<K>, ApproxError>
    where
        R: Fn(usize, usize) -> Option<usize> + Sync + Send,
        K: Sync + Send,
    {
        let f_idx: Vec<usize> = f
            .iter()
            .map(|k| {
                self.support_index(k)
                    .ok_or_else(|| ApproxError::NotInSupport(format!("{k:?}")))
            })
            .collect::<Result<_, _>>()?;
        let unital = self.table[0].is_identity();

        // multiplicativity: max over ordered pairs of d(φ(gh), φ(g)φ(h))
        let pairs: Vec<(usize, usize)> = f_idx
            .iter()
            .flat_map(|&a| f_idx.iter().map(move |&b| (a, b)))
            .collect();
        let defects: Vec<Result<Frac, ApproxError>> = exec::map_collect(&pairs, |&(a, b)| {
            let ab = resolve(a, b).ok_or(ApproxError::UnresolvedProduct(a, b))?;
            let composed = self.table[a].compose(&self.table[b]);
            Ok(hamming(&self.table[ab], &composed)?)
        });
        let mut mult_defect = Frac::zero();
        let mut mult_witness = None;
        for (i, d) in defects.into_iter().enumerate() {
            let d = d?;
            if mult_witness.is_none() || d > mult_defect {
                mult_defect = d;
                let (a, b) = pairs[i];
                mult_witness = Some((self.support[a].clone(), self.support[b].clone()));
            }
        }

        // freeness: max fixed-point fraction over non-identity elements of F
        let mut free_defect = Frac::zero();
        let mut free_witness = None;
        for &g in f_idx.iter().filter(|&&g| g != 0) {
            let fixed = Frac::new(self.table[g].fixed_points() as u64, self.degree as u64);
            if free_witness.is_none() || fixed > free_defect {
                free_defect = fixed;
                free_witness = Some(self.support[g].clone());
            }
        }

        let pass = unital && mult_defect < epsilon && free_defect < epsilon;
        Ok(DefectReport {
            unital,
            mult_defect,
            free_defect,
            mult_witness,
            free_witness,
            epsilon,
            pass,
        })
    }

    /// Coordinatewise product of two maps over identical supports: degree
    /// `n1·n2`, with `φ1` acting on the first coordinate and `φ2` on the
    /// second.
    pub fn product(&self, other: &ApproxMap<K>, caps: &Caps) -> Result<ApproxMap<K>, ApproxError> {
        if self.support != other.support {
            return Err(ApproxError::SupportMismatch);
        }
        let degree = self.degree.checked_mul(other.degree).ok_or(
            ApproxError::DegreeTooLarge(usize::MAX, caps.max_perm_degree),
        )?;
        if degree > caps.max_perm_degree {
            return Err(ApproxError::DegreeTooLarge(degree, caps.max_perm_degree));
        }
        let n2 = other.degree;
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(p, q)| {
                let mut images = Vec::with_capacity(degree);
                for x in 0..self.degree {
                    let px = p.apply(x);
                    for y in 0..n2 {
                        images.push((px * n2 + q.apply(y)) as u32);
                    }
                }
                Permutation::from_images(images).expect("product of bijections is a bijection")
            })
            .collect();
        ApproxMap::new(self.support.clone(), degree, table)
    }

    /// Seeded corruption for verifier calibration: compose the image of
    /// every non-identity support element with a random cycle displacing
    /// exactly `⌈δ·degree⌉` points. The identity image is untouched.
    pub fn corrupt(&self, delta: Frac, seed: u64) -> Result<ApproxMap<K>, ApproxError> {
        if delta > Frac::one() {
            return Err(ApproxError::Corruption(format!(
                "rate {delta} exceeds 1"
            )));
        }
        let k_frac = delta * Frac::new(self.degree as u64, 1);
        let k = k_frac.ceil().to_integer() as usize;
        if k == 0 {
            return Ok(self.clone());
        }
        if k == 1 {
            return Err(ApproxError::Corruption(
                "no permutation displaces exactly one point".into(),
            ));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut table = self.table.clone();
        for entry in table.iter_mut().skip(1) {
            let chosen = sample_distinct(&mut rng, self.degree, k);
            // a k-cycle on the chosen points displaces exactly k points
            let mut images: Vec<u32> = (0..self.degree as u32).collect();
            for w in 0..k {
                images[chosen[w]] = chosen[(w + 1) % k] as u32;
            }
            let cycle = Permutation::from_images(images).expect("cycle is a bijection");
            *entry = cycle.compose(entry);
        }
        ApproxMap::new(self.support.clone(), self.degree, table)
    }
}

/// Draw `k` distinct points of `0..n` by partial Fisher–Yates; the order of
/// the sample is part of the draw (it fixes the cycle).
fn sample_distinct(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    for i in 0..k {
        // rejection-free bounded draw keeps the stream platform-stable
        let j = i + (rng.next_u64() % (n - i) as u64) as usize;
        pool.swap(i, j);
    }
    pool.truncate(k);
    pool
}

/// Exact worst-case defect report for one verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DefectReport<K> {
    pub unital: bool,
    #[serde(with = "crate::frac::as_string")]
    pub mult_defect: Frac,
    #[serde(with = "crate::frac::as_string")]
    pub free_defect: Frac,
    pub mult_witness: Option<(K, K)>,
    pub free_witness: Option<K>,
    #[serde(with = "crate::frac::as_string")]
    pub epsilon: Frac,
    pub pass: bool,
}

/// Outcome of a pullback: the pulled-back map plus the resolved product
/// table over `F × F` (row-major support indices), so the result can be
/// re-verified without any group arithmetic.
#[derive(Debug, Clone)]
pub struct PulledBack<K> {
    pub map: ApproxMap<K>,
    pub f_len: usize,
    pub products: Vec<usize>,
}

impl<K: Clone + Eq + Hash + Debug> PulledBack<K> {
    pub fn resolver(&self) -> impl Fn(usize, usize) -> Option<usize> + Sync + Send + '_ {
        move |a, b| {
            if a < self.f_len && b < self.f_len {
                Some(self.products[a * self.f_len + b])
            } else {
                None
            }
        }
    }
}

/// Pull an approximation of a stage group `L` back along a stage assignment
/// `a: F·F → L` (given as a function on domain elements, with `L` elements
/// as indices and the group law supplied by `l_mul`).
///
/// The three proof conditions are verified on `F` before anything is built:
/// (1) products map to products, (2) non-identity maps to non-identity,
/// (3) the identity maps to the identity. `f[0]` must be the domain
/// identity.
pub fn pullback<K, A, M, L>(
    phi0: &ApproxMap<usize>,
    l_mul: L,
    f: &[K],
    assign: A,
    k_mul: M,
) -> Result<PulledBack<K>, ApproxError>
where
    K: Clone + Eq + Hash + Debug,
    A: Fn(&K) -> Option<usize>,
    M: Fn(&K, &K) -> K,
    L: Fn(usize, usize) -> usize,
{
    if f.is_empty() {
        return Err(ApproxError::NotInSupport("empty F".into()));
    }
    let resolve_assign = |k: &K| -> Result<usize, ApproxError> {
        assign(k).ok_or_else(|| ApproxError::NotInSupport(format!("unassigned element {k:?}")))
    };
    // condition (3): identity maps to identity
    let id_image = resolve_assign(&f[0])?;
    if id_image != 0 {
        return Err(ApproxError::StageCondition(
            3,
            format!("identity {:?} maps to stage element {id_image}", f[0]),
        ));
    }
    // condition (2): non-identity maps to non-identity
    for g in &f[1..] {
        if resolve_assign(g)? == 0 {
            return Err(ApproxError::StageCondition(
                2,
                format!("non-identity {g:?} maps to the stage identity"),
            ));
        }
    }
    // condition (1): products map to products, on F·F
    for g in f {
        for h in f {
            let gh = k_mul(g, h);
            let lhs = resolve_assign(&gh)?;
            let rhs = l_mul(resolve_assign(g)?, resolve_assign(h)?);
            if lhs != rhs {
                return Err(ApproxError::StageCondition(
                    1,
                    format!("a({g:?})·a({h:?}) = {rhs} but a({g:?}·{h:?}) = {lhs}"),
                ));
            }
        }
    }
    // support: F followed by the products of F·F not already present
    let mut support: Vec<K> = Vec::with_capacity(f.len());
    let mut index: HashMap<K, usize> = HashMap::new();
    for g in f {
        if index.insert(g.clone(), support.len()).is_some() {
            return Err(ApproxError::NotInSupport(format!(
                "duplicate element {g:?} in F"
            )));
        }
        support.push(g.clone());
    }
    let f_len = f.len();
    let mut products = vec![0usize; f_len * f_len];
    for a in 0..f_len {
        for b in 0..f_len {
            let gh = k_mul(&support[a], &support[b]);
            let idx = match index.get(&gh) {
                Some(&i) => i,
                None => {
                    index.insert(gh.clone(), support.len());
                    support.push(gh);
                    support.len() - 1
                }
            };
            products[a * f_len + b] = idx;
        }
    }
    let table: Vec<Permutation> = support
        .iter()
        .map(|k| {
            let stage = resolve_assign(k)?;
            let i = phi0
                .support_index(&stage)
                .ok_or_else(|| ApproxError::NotInSupport(format!("stage element {stage}")))?;
            Ok(phi0.perm(i).clone())
        })
        .collect::<Result<_, ApproxError>>()?;
    let map = ApproxMap::new(support, phi0.degree(), table)?;
    Ok(PulledBack {
        map,
        f_len,
        products,
    })
}

#[cfg(test)]
mod tests;
