//! Size caps on the exhaustive suites.

use std::fmt;

pub const MAX_N_COMBINATORIAL: usize = 5;
pub const MAX_N_KL: usize = 4;
pub const MAXN_ENV: &str = "DOMINO_CELLS_MAXN";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Workload {
    Combinatorial,
    KazhdanLusztig,
}

impl Workload {
    pub fn default_cap(self) -> usize {
        match self {
            Workload::Combinatorial => MAX_N_COMBINATORIAL,
            Workload::KazhdanLusztig => MAX_N_KL,
        }
    }
}

impl fmt::Display for Workload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Workload::Combinatorial => "combinatorial",
            Workload::KazhdanLusztig => "Kazhdan-Lusztig",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapExceeded {
    pub workload: Workload,
    pub n: usize,
    pub cap: usize,
}

impl fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n = {} exceeds the {} cap of {}; set {MAXN_ENV} to raise it",
            self.n, self.workload, self.cap
        )
    }
}

impl std::error::Error for CapExceeded {}

/// The override from the environment, if set to a number.
pub fn env_override() -> Option<usize> {
    std::env::var(MAXN_ENV).ok()?.trim().parse().ok()
}

/// Checks `n` against the cap. Returns a warning when only the override allows it.
pub fn check(workload: Workload, n: usize) -> Result<Option<String>, CapExceeded> {
    check_with(workload, n, env_override())
}

pub fn check_with(workload: Workload, n: usize, over: Option<usize>) -> Result<Option<String>, CapExceeded> {
    let cap = workload.default_cap();
    if n <= cap {
        return Ok(None);
    }
    match over {
        Some(m) if n <= m => Ok(Some(format!(
            "warning: n = {n} is above the default {workload} cap of {cap} ({MAXN_ENV}={m}); this may take a long time"
        ))),
        _ => Err(CapExceeded { workload, n, cap: over.unwrap_or(cap).max(cap) }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps() {
        assert_eq!(check_with(Workload::KazhdanLusztig, 4, None), Ok(None));
        assert!(check_with(Workload::KazhdanLusztig, 5, None).is_err());
        assert!(check_with(Workload::KazhdanLusztig, 5, Some(5)).unwrap().is_some());
        assert!(check_with(Workload::Combinatorial, 7, Some(6)).is_err());
    }
}
