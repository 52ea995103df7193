/// Ceilings that keep exhaustive searches at desk scale.
///
/// Exceeding one is an explicit error (or a "skipped" marker in reports),
/// never a silently partial answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Sentence ceiling for subset enumeration (kernels, conglomerates,
    /// local conglomerates, admissible sets).
    pub max_sentences: usize,
    /// Sink ceiling for ground-base enumeration.
    pub max_sinks: usize,
    /// Sentence ceiling for the consistent fixed-point scan.
    pub max_fixed_point_sentences: usize,
    /// Sentence ceiling for the scan that also admits inconsistent pairs.
    pub max_inconsistent_fixed_point_sentences: usize,
    /// Cap on collected labellings.
    pub labelling_limit: usize,
    pub max_cycle_len: usize,
    pub max_cycles: usize,
    /// Bound on depth-first steps during cycle and path enumeration.
    pub max_search_steps: usize,
}

/// Environment variable overriding [`Limits::max_sentences`].
pub const MAX_SENTENCES_ENV: &str = "FSYS_MAX_SENTENCES";

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_sentences: 24,
            max_sinks: 20,
            max_fixed_point_sentences: 12,
            max_inconsistent_fixed_point_sentences: 8,
            labelling_limit: crate::labelling::DEFAULT_LABELLING_LIMIT,
            max_cycle_len: 12,
            max_cycles: 10_000,
            max_search_steps: 5_000_000,
        }
    }
}

impl Limits {
    /// Defaults, with `FSYS_MAX_SENTENCES` applied when it holds a number.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = std::env::var(MAX_SENTENCES_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            limits.max_sentences = n;
        }
        limits
    }
}
