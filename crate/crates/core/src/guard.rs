//! Size guards for the exponential-time routines.
//!
//! Every guarded operation has a default ceiling. The environment variable
//! `REDEI_GUARD_OVERRIDE` raises them: an integer `k` adds `k` to every
//! ceiling, and `unlimited` disables the guards altogether.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const PARTITIONS: usize = 25;
pub const SYMFUN_DEGREE: usize = 14;
pub const LR_WEIGHT: usize = 12;
pub const ENUMERATION: usize = 8;
pub const FUNDAMENTAL_ROUTE: usize = 7;
pub const SUBSET_ROUTE: usize = 7;
pub const MATRIX_ROUTE: usize = 6;
pub const IMMANANT_ROUTE: usize = 6;
pub const SCHUR_JT: usize = 7;
pub const CHOW: usize = 6;
pub const CHOW_IDENTITIES: usize = 5;
pub const IMMANANT: usize = 9;
pub const RYSER: usize = 20;
pub const HAM_DETPER: usize = 18;
pub const HAM_DP: usize = 22;
pub const HAM_CYCLES: usize = 16;
pub const HAM_BRUTE: usize = 11;
pub const PARITY: usize = 12;
pub const WALK_LENGTH: usize = 12;
pub const WALK_VERTICES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Override {
    Raise(usize),
    Unlimited,
}

fn override_setting() -> Override {
    static SETTING: OnceLock<Override> = OnceLock::new();
    *SETTING.get_or_init(|| match std::env::var("REDEI_GUARD_OVERRIDE") {
        Ok(v) if v.trim().eq_ignore_ascii_case("unlimited") => Override::Unlimited,
        Ok(v) => Override::Raise(v.trim().parse().unwrap_or(0)),
        Err(_) => Override::Raise(0),
    })
}

/// Effective ceiling for a guard after applying the environment override.
pub fn limit(default: usize) -> usize {
    match override_setting() {
        Override::Unlimited => usize::MAX,
        Override::Raise(k) => default.saturating_add(k),
    }
}

pub fn check(name: &'static str, value: usize, default: usize) -> Result<()> {
    let limit = limit(default);
    if value > limit {
        return Err(Error::Guard { name, value, limit });
    }
    Ok(())
}
