//! Enumeration caps keeping every exhaustive search at desk scale.

/// Limits for the exhaustive enumerations used across the crate. All caps can
/// be overridden at once through the `QORDER_CAP` environment variable, which
/// scales the powerset cap and leaves the ratios intact.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    /// Upper bound on `Σ_q Π_x |D(|x|,q)|` when enumerating a powerset.
    pub powerset: usize,
    /// Upper bound on `|Q|^|X|` when scanning membership maps.
    pub membership_scan: usize,
    /// Upper bound on `Π_y |X_{|y|}|` when searching for adjoint maps.
    pub adjoint_search: usize,
    /// Upper bound on `|X_q|` when checking joins per degree.
    pub degree_subset: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            powerset: 100_000,
            membership_scan: 1_000_000,
            adjoint_search: 1_000_000,
            degree_subset: 12,
        }
    }
}

impl Caps {
    /// Default caps, with the powerset cap replaced by `QORDER_CAP` when the
    /// variable is set to a positive integer.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Ok(v) = std::env::var("QORDER_CAP") {
            if let Ok(n) = v.trim().parse::<usize>() {
                if n > 0 {
                    caps.powerset = n;
                    caps.membership_scan = n.saturating_mul(10);
                    caps.adjoint_search = n.saturating_mul(10);
                }
            }
        }
        caps
    }
}
