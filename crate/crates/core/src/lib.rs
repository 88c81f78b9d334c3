//! Active sums of conjugation-closed subgroup families in finite permutation
//! groups, with `C_n`-cellularity certificates.

#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod bsgs;
pub mod catalog;
pub mod cellularity;
pub mod coxeter;
pub mod error;
pub mod family;
pub mod fp;
pub mod group;
pub mod hom;
pub mod io;
pub mod limits;
pub mod perm;
pub mod sl;
pub mod subgroup;
pub mod sweep;

pub use catalog::{named_group, small_catalog};
pub use cellularity::{
    certify_theorem2, is_cn_equivalence, is_cn_generated, is_cn_injection, is_cn_trivial,
    verify_certificate, CellularityCertificate, SchurData,
};
pub use coxeter::{coxeter_reflection_family, CoxeterMatrix};
pub use error::{Error, Hypothesis, Result};
pub use family::{conjugation_closure, cyclic_family, SubgroupFamily};
pub use fp::{
    realize_active_sum, todd_coxeter, ActiveSumResult, Encoding, EnumerationOptions, Presentation,
};
pub use group::{PermGroup, TorsionSet};
pub use hom::{enumerate_homs, Homomorphism};
pub use limits::Limits;
pub use perm::Perm;
pub use sl::sl_to_perm;
pub use subgroup::Subgroup;
pub use sweep::{property_sweep, SweepReport};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/permutation-groups.md")]
    mod permutation_groups {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/active-sums.md")]
    mod active_sums {}
    #[doc = include_str!("../../../book/src/torsion.md")]
    mod torsion {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/sweep.md")]
    mod sweep {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
