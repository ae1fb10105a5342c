//! Executable hardness reductions and the exhaustive solvers that check them.

pub mod cov;
pub mod rdbp;
pub mod sat;
pub mod sum;

pub use cov::{
    cov_brute_force, cov_to_one_bridge, cov_to_one_bridge_with, lemma1_holds, path_depth, sat_to_cov,
    verify_one_bridge_iff, CovInstance, IffReport, Layout, OneBridgeReductionParams, TernaryVector,
};
pub use rdbp::{rdbp_brute_force, rdbp_min_budget, vc_to_rdbp, vertex_cover_brute_force, RdbpInstance};
pub use sat::{one_in_three_sat_brute_force, OneInThreeSat};
pub use sum::{
    carry_demo, ksum_brute_force, sat_to_ksum, sat_to_threesum, threesum_brute_force, KSumInstance, ThreeSumInstance,
};
