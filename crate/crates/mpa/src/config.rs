//! Size caps and run configuration shared by the CLI and the verifier.

/// Caps keep every computation at desk scale; callers get a resource error
/// instead of an unbounded allocation.
#[derive(Clone, Debug)]
pub struct Config {
    /// Maximum dense matrix dimension (rows = columns).
    pub matrix_cap: usize,
    /// Maximum number of basis elements any enumeration may return.
    pub enumeration_cap: usize,
    /// Seed for randomized property checks.
    pub seed: u64,
    /// Worker threads; 0 means "let the runtime decide".
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            matrix_cap: 20_000,
            enumeration_cap: 1_000_000,
            seed: 0x6d70_6131,
            threads: 0,
        }
    }
}

impl Config {
    /// Apply the MPA_THREADS environment override.
    pub fn from_env() -> Self {
        let mut cfg = Config::default();
        if let Ok(v) = std::env::var("MPA_THREADS") {
            if let Ok(t) = v.parse() {
                cfg.threads = t;
            }
        }
        cfg
    }
}
