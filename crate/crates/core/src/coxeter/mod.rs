//! Finite Weyl groups: enumeration, Bruhat order and parabolic cosets.

mod bitset;
mod cartan;
mod group;
mod parabolic;

pub use bitset::BitSet;
pub use cartan::{CartanDatum, SimpleType};
pub use group::{Elem, GroupTable, DEFAULT_ELEMENT_CAP};
pub use parabolic::{
    coset_reps_longest, longest_in_coset, parabolic_elements, parabolic_longest, wall_mask,
};
