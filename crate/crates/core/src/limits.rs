//! Size bounds for the exhaustive searches.

use crate::error::{Error, Result};

/// Environment variable that overrides every default bound at once.
pub const MAX_ORDER_ENV: &str = "BRACOID_MAX_ORDER";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group whose automorphism group is enumerated.
    pub automorphism_order: usize,
    /// Largest group whose subgroups are enumerated.
    pub subgroup_order: usize,
    /// Largest coset space on which Hopf-Galois structures are enumerated.
    pub hgs_degree: usize,
    /// Largest group searched exhaustively for homomorphisms or brace structures.
    pub exhaustive_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            automorphism_order: 24,
            subgroup_order: 48,
            hgs_degree: 8,
            exhaustive_order: 16,
        }
    }
}

impl Limits {
    /// Every bound set to `n`.
    pub fn uniform(n: usize) -> Self {
        Limits {
            automorphism_order: n,
            subgroup_order: n,
            hgs_degree: n,
            exhaustive_order: n,
        }
    }

    /// Defaults, or [`Limits::uniform`] if `BRACOID_MAX_ORDER` holds a number.
    pub fn from_env() -> Self {
        std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Limits::uniform)
            .unwrap_or_default()
    }

    /// Bounds wide enough for every order-8 holomorph (the largest is `Hol(C_2^3)`, order 1344).
    pub fn order_eight() -> Self {
        Limits {
            subgroup_order: 1344,
            ..Limits::default()
        }
    }

    fn check(what: &'static str, size: usize, bound: usize) -> Result<()> {
        if size > bound {
            Err(Error::BoundExceeded { what, size, bound })
        } else {
            Ok(())
        }
    }

    pub fn check_automorphisms(&self, order: usize) -> Result<()> {
        Self::check("automorphism search", order, self.automorphism_order)
    }

    pub fn check_subgroup_search(&self, order: usize) -> Result<()> {
        Self::check("subgroup search", order, self.subgroup_order)
    }

    pub fn check_hgs(&self, degree: usize) -> Result<()> {
        Self::check("Hopf-Galois enumeration", degree, self.hgs_degree)
    }

    pub fn check_exhaustive(&self, order: usize) -> Result<()> {
        Self::check("exhaustive search", order, self.exhaustive_order)
    }
}
