/// Computational bounds shared by the enumeration-based operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest order for which element lists are materialized.
    pub element_listing: u64,
    /// Largest order for which BSGS results are cross-checked by closure.
    pub cross_validation: u64,
    /// Subgroups up to this order compare by sorted element set.
    pub subgroup_key: u64,
    pub hom_source: u64,
    pub hom_target: u64,
    pub family_cap: usize,
    /// Maximum number of live cosets during enumeration.
    pub coset_budget: usize,
}

pub const DEFAULT_COSET_BUDGET: usize = 1_000_000;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            element_listing: 100_000,
            cross_validation: 5_000,
            subgroup_key: 10_000,
            hom_source: 100,
            hom_target: 2_000,
            family_cap: 10_000,
            coset_budget: DEFAULT_COSET_BUDGET,
        }
    }
}
