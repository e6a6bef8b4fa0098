use serde::{Deserialize, Serialize};

/// Effort bounds shared by every search loop in the crate.
///
/// Bounded loops give reproducible failure modes instead of hangs; a run is
/// fully determined by its input points, seed and this record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EffortConfig {
    /// Largest specialization value tried when searching for an irreducible
    /// interpolant (y = 1, 2, ...).
    pub max_y: u64,
    /// How many primes from the 5 mod 12 class are tried before giving up.
    pub max_ell_candidates: u64,
    /// Witness primes for mod-p irreducibility certificates stay below this.
    pub witness_prime_bound: u64,
    /// Trial-division bound used by `radical` and by divisor enumeration in
    /// the rational-root check.
    pub trial_division_bound: u64,
    /// Attempts per box size in the randomized coordinate-change search.
    pub matrix_attempts_per_box: u32,
    /// The coordinate-change box doubles this many times before giving up.
    pub max_box_doublings: u32,
    /// Seed for every randomized search (coordinate changes, chart rows).
    pub seed: u64,
}

impl Default for EffortConfig {
    fn default() -> Self {
        EffortConfig {
            max_y: 200,
            max_ell_candidates: 500,
            witness_prime_bound: 1000,
            trial_division_bound: 1_000_000,
            matrix_attempts_per_box: 64,
            max_box_doublings: 16,
            seed: 0,
        }
    }
}
