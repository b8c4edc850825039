//! Standard parabolic subgroups and their longest coset representatives.
//!
//! Cosets are `W_S * w` (the parabolic factor on the left). The longest
//! representative `x` of such a coset is characterised by `S` being
//! contained in its left descent set, and factors as `x = w0_S * m` with
//! `m` the minimal representative and lengths adding.

use super::group::{Elem, GroupTable};
use crate::error::{Error, Result};

/// Bitmask of a wall set, validating indices (0-based).
pub fn wall_mask(g: &GroupTable, walls: &[usize]) -> Result<u64> {
    walls.iter().try_fold(0u64, |mask, &s| {
        if s >= g.rank() {
            Err(Error::IndexOutOfRange {
                index: s + 1,
                rank: g.rank(),
            })
        } else {
            Ok(mask | 1 << s)
        }
    })
}

/// Longest element of the standard parabolic subgroup generated by `mask`.
///
/// Ascends greedily: an element of `W_S` with every `s` in `S` as a right
/// descent is the longest element of `W_S`.
pub fn parabolic_longest(g: &GroupTable, mask: u64) -> Elem {
    let mut w = g.identity();
    'ascend: loop {
        for s in 0..g.rank() {
            if mask >> s & 1 == 1 && !g.is_right_descent(w, s) {
                w = g.right_mul_simple(w, s);
                continue 'ascend;
            }
        }
        return w;
    }
}

/// All elements of `W_S`, in enumeration order. This is the Bruhat interval
/// below its longest element.
pub fn parabolic_elements(g: &GroupTable, mask: u64) -> Vec<Elem> {
    let top = parabolic_longest(g, mask);
    g.lower_interval(top)
        .iter()
        .map(|i| g.elem(i).expect("interval index in range"))
        .collect()
}

/// `X_S`: longest representatives of the cosets `W_S * w`, ordered by
/// length then ShortLex.
pub fn coset_reps_longest(g: &GroupTable, mask: u64) -> Vec<Elem> {
    g.elements()
        .filter(|&w| g.left_descents(w) & mask == mask)
        .collect()
}

/// Longest representative of the coset `W_S * w`.
pub fn longest_in_coset(g: &GroupTable, mask: u64, w: Elem) -> Elem {
    let mut x = w;
    'ascend: loop {
        for s in 0..g.rank() {
            if mask >> s & 1 == 1 && !g.is_left_descent(x, s) {
                x = g.left_mul_simple(s, x);
                continue 'ascend;
            }
        }
        return x;
    }
}
