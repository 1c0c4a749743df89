//! Resource guards for the brute-force enumerations.
//!
//! Every limit is multiplied by the integer in `FATDIAG_GUARD_SCALE` (default 1)
//! so slow runs can opt into larger instances without recompiling.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const ENV_VAR: &str = "FATDIAG_GUARD_SCALE";

/// Largest `n` for set-partition enumeration (Bell(12) is about 4.2M).
pub const SET_PARTITION_DEGREE: u128 = 12;
/// Largest group order produced by closure enumeration.
pub const GROUP_ORDER: u128 = 1_000_000;
/// Largest `d` for d-transitivity checks.
pub const TRANSITIVITY_DEGREE: u128 = 4;
/// Largest degree accepted by the depth computation.
pub const DEPTH_DEGREE: u128 = 9;
/// Largest group order accepted by the subgroup-chain search.
pub const SUBGROUP_SEARCH_ORDER: u128 = 120;
/// Largest `n` for the brute-force Euler characteristic oracles.
pub const ORACLE_DEGREE: u128 = 10;
/// Largest `n` for which the conjugacy classes of S_n are listed.
pub const SYMMETRIC_CLASSES_DEGREE: u128 = 20;

fn scale() -> u128 {
    static SCALE: OnceLock<u128> = OnceLock::new();
    *SCALE.get_or_init(|| {
        std::env::var(ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse::<u128>().ok())
            .filter(|&s| s >= 1)
            .unwrap_or(1)
    })
}

/// Fails with [`Error::ResourceGuard`] when `requested` exceeds `base * scale`.
pub fn check(what: &'static str, requested: u128, base: u128) -> Result<()> {
    let limit = base.saturating_mul(scale());
    if requested > limit {
        Err(Error::ResourceGuard {
            what,
            requested,
            limit,
        })
    } else {
        Ok(())
    }
}
