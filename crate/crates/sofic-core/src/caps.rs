//! Configurable size caps.
//!
//! Every operation that can grow an object checks the relevant cap and
//! reports an error when it is exceeded; nothing is ever silently truncated.

use serde::{Deserialize, Serialize};

/// Size limits shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    /// Largest allowed order of a materialized finite group.
    pub max_group_order: usize,
    /// Largest allowed permutation degree.
    pub max_perm_degree: usize,
    /// Largest allowed number of elements in an enumerated ball.
    pub max_ball: usize,
    /// Largest allowed order of the combined quotient image (this is the
    /// acting degree of its left regular representation).
    pub max_combined_order: usize,
    /// Largest acting degree tried by the separation search.
    pub max_search_degree: usize,
    /// Largest number of candidate homomorphisms enumerated per factor and
    /// degree during the separation search.
    pub max_homs_per_factor: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_group_order: 20_000,
            max_perm_degree: 100_000,
            max_ball: 200_000,
            max_combined_order: 10_000_000,
            max_search_degree: 16,
            max_homs_per_factor: 512,
        }
    }
}
