//! Bounds on the brute-force searches.

pub const MAX_POINTS_ENV: &str = "SCATTERKIT_MAX_POINTS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest space handed to the homeomorphism search.
    pub homeo_points: usize,
    /// Largest group materialised element by element.
    pub group_order: usize,
    /// Largest space whose group is scanned for normal subgroups or
    /// checked for full transitivity tuple by tuple.
    pub normal_points: usize,
    /// Largest `n` for which all linear orders are enumerated.
    pub lo_points: usize,
    /// Largest `n` for the all-pairs simple transitivity check.
    pub transitivity_points: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            homeo_points: 12,
            group_order: 362_880,
            normal_points: 8,
            lo_points: 8,
            transitivity_points: 7,
        }
    }
}

impl Limits {
    /// Defaults, with the point bound taken from `SCATTERKIT_MAX_POINTS` when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = std::env::var(MAX_POINTS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            limits = limits.with_max_points(n);
        }
        limits
    }

    /// Sets the point bound of the homeomorphism search and of the
    /// normal subgroup and full transitivity checks.
    pub fn with_max_points(mut self, n: usize) -> Self {
        self.homeo_points = n;
        self.normal_points = n;
        self
    }

    pub(crate) fn check(&self, what: &'static str, limit: usize, actual: usize) -> crate::Result<()> {
        if actual > limit {
            Err(crate::Error::SizeBound { what, limit, actual })
        } else {
            Ok(())
        }
    }
}
