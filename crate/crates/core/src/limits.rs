/// Size caps for the exact algorithms.
///
/// Everything in this crate is exhaustive or exact, so runaway inputs are
/// rejected up front instead of silently degrading. The CLI exposes each cap
/// as a flag; the `FRACDIM_MAX_N` environment variable overrides the graph
/// size cap. Flags win over the environment.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Largest vertex count for which a distance matrix is materialized.
    pub max_graph_n: usize,
    /// Largest vertex count for exact metric dimension (branch and bound).
    pub max_dim_n: usize,
    /// Largest vertex count for the exhaustive subset check of
    /// [`check_lemma_3_1`](crate::resolve::check_lemma_3_1).
    pub max_subset_check_n: usize,
    /// Largest vertex count for the automorphism orbit search.
    pub max_orbit_n: usize,
    /// Largest number of covering rows accepted by the LP solver.
    pub max_lp_rows: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_graph_n: 4096,
            max_dim_n: 64,
            max_subset_check_n: 12,
            max_orbit_n: 128,
            max_lp_rows: 100_000,
        }
    }
}

impl Limits {
    /// Defaults with `FRACDIM_MAX_N` (when set and parseable) applied to the
    /// graph size cap.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var("FRACDIM_MAX_N") {
            if let Ok(n) = raw.trim().parse::<usize>() {
                limits.max_graph_n = n;
            }
        }
        limits
    }
}
