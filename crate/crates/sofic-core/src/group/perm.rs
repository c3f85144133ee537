//! Permutations of `0..degree` and the normalized Hamming distance.

use super::GroupError;
use crate::frac::Frac;
use serde::{Deserialize, Serialize};

/// A permutation stored by its image vector: `images[x]` is the image of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Validating constructor: `images` must be a bijection of `0..len`.
    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if (x as usize) >= n || seen[x as usize] {
                return Err(GroupError::NotBijective(n));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn from_usize_images(images: Vec<usize>) -> Result<Self, GroupError> {
        Self::from_images(images.into_iter().map(|x| x as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Composition `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y as usize)
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(x, &y)| x == y as usize)
            .count()
    }

    /// Build from cycle notation over `0..degree`; points not mentioned are
    /// fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if from >= degree || to >= degree {
                    return Err(GroupError::NotBijective(degree));
                }
                images[from] = to as u32;
            }
        }
        Self::from_images(images)
    }
}

/// Normalized Hamming distance: the fraction of points on which `p` and `q`
/// differ, as an exact rational in `[0, 1]`.
pub fn hamming(p: &Permutation, q: &Permutation) -> Result<Frac, GroupError> {
    if p.degree() != q.degree() {
        return Err(GroupError::DegreeMismatch(p.degree(), q.degree()));
    }
    if p.degree() == 0 {
        return Ok(Frac::new(0, 1));
    }
    let diff = p
        .images
        .iter()
        .zip(&q.images)
        .filter(|(a, b)| a != b)
        .count();
    Ok(Frac::new(diff as u64, p.degree() as u64))
}
