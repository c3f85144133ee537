//! Finite-stage witnesses of co-soficity.
//!
//! A chain holds decreasing sequences `(G_i, H_i)` of subgroups of a parent
//! group with each `H_i` normal in the parent and the intersection of the
//! `G_i` equal to a designated target subgroup `H`. All groups here are
//! finite, so the amenability of the stage quotients `G_i / H_i` is
//! automatic.

use super::{FiniteGroup, GroupError, QuotientMap, Subgroup};
use crate::caps::Caps;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoSoficChain {
    pub parent: FiniteGroup,
    /// The designated target subgroup `H = ∩ G_i`.
    pub target: Subgroup,
    /// Stage pairs `(G_i, H_i)`.
    pub stages: Vec<(Subgroup, Subgroup)>,
}

impl CoSoficChain {
    /// Validating constructor.
    pub fn new(
        parent: FiniteGroup,
        target: Subgroup,
        stages: Vec<(Subgroup, Subgroup)>,
    ) -> Result<Self, GroupError> {
        let chain = CoSoficChain {
            parent,
            target,
            stages,
        };
        chain.validate()?;
        Ok(chain)
    }

    /// Check every chain invariant: containments, normality, monotonicity,
    /// and that the stage intersection equals the target.
    pub fn validate(&self) -> Result<(), GroupError> {
        if self.stages.is_empty() {
            return Err(GroupError::BadChain("chain has no stages".into()));
        }
        self.target.check_parent(&self.parent)?;
        for (i, (g_i, h_i)) in self.stages.iter().enumerate() {
            g_i.check_parent(&self.parent)?;
            h_i.check_parent(&self.parent)?;
            if !h_i.is_subset_of(g_i) {
                return Err(GroupError::BadChain(format!("H_{i} ⊄ G_{i}")));
            }
            if !h_i.is_normal_in(&self.parent) {
                return Err(GroupError::BadChain(format!("H_{i} not normal in parent")));
            }
            if i > 0 {
                let (prev_g, prev_h) = &self.stages[i - 1];
                if !g_i.is_subset_of(prev_g) {
                    return Err(GroupError::BadChain(format!("G_{i} ⊄ G_{}", i - 1)));
                }
                if !h_i.is_subset_of(prev_h) {
                    return Err(GroupError::BadChain(format!("H_{i} ⊄ H_{}", i - 1)));
                }
            }
        }
        // intersection of all stage G_i equals the target
        let inter: Vec<usize> = (0..self.parent.order())
            .filter(|&x| self.stages.iter().all(|(g_i, _)| g_i.contains(x)))
            .collect();
        let target: Vec<usize> = self.target.elements().collect();
        if inter != target {
            return Err(GroupError::BadChain(
                "intersection of stage groups differs from target".into(),
            ));
        }
        Ok(())
    }

    /// The constant chain witnessing co-soficity of a finite-index subgroup:
    /// every stage is `(H, core_G(H))`.
    pub fn normal_core_chain(
        parent: &FiniteGroup,
        h: &Subgroup,
        len: usize,
    ) -> Result<Self, GroupError> {
        let core = parent.normal_core(h)?;
        let stages = vec![(h.clone(), core); len.max(1)];
        CoSoficChain::new(parent.clone(), h.clone(), stages)
    }

    /// Stagewise product of two chains inside the direct product of the
    /// parents. Shorter chains are padded by repeating their last stage.
    pub fn product(&self, other: &CoSoficChain, caps: &Caps) -> Result<CoSoficChain, GroupError> {
        let prod = self.parent.direct_product(&other.parent, caps)?;
        let n2 = other.parent.order();
        let len = self.stages.len().max(other.stages.len());
        let stage = |chain: &CoSoficChain, i: usize| -> (Subgroup, Subgroup) {
            chain.stages[i.min(chain.stages.len() - 1)].clone()
        };
        let mut stages = Vec::with_capacity(len);
        for i in 0..len {
            let (g1, h1) = stage(self, i);
            let (g2, h2) = stage(other, i);
            stages.push((
                g1.product_with(&g2, n2, &prod.group)?,
                h1.product_with(&h2, n2, &prod.group)?,
            ));
        }
        let target = self.target.product_with(&other.target, n2, &prod.group)?;
        CoSoficChain::new(prod.group, target, stages)
    }

    /// Precompute the stage quotient maps for [`ChainContext`] queries.
    pub fn context(&self) -> Result<ChainContext, GroupError> {
        let mut quotients = Vec::with_capacity(self.stages.len());
        let mut stage_images = Vec::with_capacity(self.stages.len());
        for (g_i, h_i) in &self.stages {
            let q = self.parent.quotient(h_i)?;
            stage_images.push(q.image_of(g_i));
            quotients.push(q);
        }
        Ok(ChainContext {
            quotients,
            stage_images,
        })
    }
}

/// Cached stage quotients of a chain: the maps `G → G/H_k` together with the
/// image sets `G_k / H_k`.
#[derive(Debug, Clone)]
pub struct ChainContext {
    quotients: Vec<QuotientMap>,
    stage_images: Vec<Vec<usize>>,
}

impl ChainContext {
    pub fn stage_count(&self) -> usize {
        self.quotients.len()
    }

    pub fn quotient(&self, k: usize) -> Result<&QuotientMap, GroupError> {
        self.quotients
            .get(k)
            .ok_or(GroupError::BadStage(k, self.quotients.len()))
    }

    /// The stage map of an element: the pair `(gH_k, g)`.
    pub fn stage_pair(&self, g: usize, k: usize) -> Result<(usize, usize), GroupError> {
        Ok((self.quotient(k)?.apply(g), g))
    }

    /// Does the coset `gH_k` lie inside `G_k / H_k` at stage `k`?
    pub fn coset_in_stage(&self, g: usize, k: usize) -> Result<bool, GroupError> {
        let image = self.quotient(k)?.apply(g);
        Ok(self.stage_images[k].binary_search(&image).is_ok())
    }

    /// Membership predicate: `g` belongs to the target subgroup iff its
    /// coset stays inside `G_k / H_k` at every stage. For an element outside
    /// the target this must fail at some finite stage.
    pub fn membership(&self, g: usize) -> Result<bool, GroupError> {
        for k in 0..self.stage_count() {
            if !self.coset_in_stage(g, k)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
