//! Independent ground truth and the block-wide verification harness.

mod independent;
mod verify;

pub use independent::{
    brute_force_bruhat, brute_force_bruhat_table, dihedral_kl_oracle, sl2_block_oracle,
    DihedralKlTable, Sl2Dataset, WordFlag, WordLayers,
};
pub use verify::{verify_block, CheckResult, Status, VerificationReport, Witness};
