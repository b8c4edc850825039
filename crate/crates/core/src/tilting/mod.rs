//! Tilting modules: graded Verma flags, grading layers, Loewy lengths,
//! socles, the layer-balancing algorithm and rigidity verdicts.
//!
//! Normalization: `Delta(x)<0>` sits inside `T(x)` with its head in degree
//! 0, so `T(x)` lives in degrees `-l(w0 x) ..= l(w0 x)` and its graded
//! self-duality is the symmetry `m -> -m`. Every other flag entry
//! `Delta(y)<l>` has `y > x` in the Bruhat order and `l < 0`.

mod hazi;
mod rigidity;

use serde::{Deserialize, Serialize};

pub use hazi::{balance, hazi_layers, HaziStep, HaziTrace, TieBreak};
pub use rigidity::{rigidity_report, RigidityReport};

use crate::block::{to_mult, Block, GradedFlag, LayeredCharacter};
use crate::coxeter::Elem;
use crate::error::{Error, Result};
use crate::poly::LaurentV;

/// Graded Verma flag of `T(x)`.
///
/// The primary route is Ringel self-duality,
/// `(T(x) : Delta(y)<-j>) = (P(r(x)) : Delta(r(y))<j>)` with
/// `r = Block::ringel_twist`. When the block cross-checks, the flag is also
/// obtained by translating the regular tilting module `T(w0_S x)` onto the
/// wall and the two results must coincide.
pub fn tilting_flag(b: &Block, x: Elem) -> Result<GradedFlag> {
    b.ensure(x)?;
    let flag = ringel_route(b, x)?;
    if b.cross_check() && !b.is_regular() {
        let translated = translation_route(b, x)?;
        if translated != flag {
            return Err(Error::invariant(
                "tilting.route_agreement",
                format!(
                    "Ringel and translation routes disagree for T({}) in {} walls {:?}",
                    b.group().format_word(x),
                    b.group().label(),
                    b.walls_one_based()
                ),
            ));
        }
    }
    Ok(flag)
}

pub fn ringel_route(b: &Block, x: Elem) -> Result<GradedFlag> {
    b.ensure(x)?;
    let rx = b.ringel_twist(x);
    let mut flag = GradedFlag::new();
    for &y in b.reps() {
        let ry = b.ringel_twist(y);
        for (j, m) in b.d(ry, rx).terms() {
            flag.add(y, -j, to_mult(m)?);
        }
    }
    Ok(flag)
}

/// Graded flag of the regular tilting module `T(z)` from KL polynomials:
/// `(T(z) : Delta(y)<-j>) = [v^j] v^(l(zw0)-l(yw0)) P_{yw0, zw0}(v^-2)`.
pub fn regular_tilting_flag(b: &Block, z: Elem) -> Result<GradedFlag> {
    let g = b.group();
    let zw0 = g.mul(z, g.w0());
    let mut flag = GradedFlag::new();
    for y in g.elements() {
        let yw0 = g.mul(y, g.w0());
        if g.length(yw0) > g.length(zw0) {
            continue;
        }
        let gap = (g.length(zw0) - g.length(yw0)) as i32;
        let d = LaurentV::from_kl(b.kl().polynomial(yw0, zw0), gap);
        for (j, m) in d.terms() {
            flag.add(y, -j, to_mult(m)?);
        }
    }
    Ok(flag)
}

/// Singular flag read off the regular tilting module `T(w0_S x)`.
///
/// Translation out of the wall sends `T(x)` to `T(w0_S x)<l(w0_S)>` and
/// `Delta(y)` to a module filtered by `Delta(u y)<l(u)>`, `u` in `W_S`,
/// each once. The `u = e` components give the singular flag; the full
/// regular flag must then be exactly the image of that flag.
pub fn translation_route(b: &Block, x: Elem) -> Result<GradedFlag> {
    b.ensure(x)?;
    let g = b.group();
    let shift = g.length(b.w0_lambda()) as i32;
    let minimal = g.mul(b.w0_lambda(), x);
    let regular = regular_tilting_flag(b, minimal)?;

    let mut singular = GradedFlag::new();
    for (y, l, m) in regular.iter() {
        if b.contains(y) {
            singular.add(y, l + shift, m);
        }
    }

    let mut image = GradedFlag::new();
    for (y, l, m) in singular.iter() {
        for &u in b.stabiliser() {
            image.add(g.mul(u, y), l + g.length(u) as i32 - shift, m);
        }
    }
    if image != regular {
        return Err(Error::invariant(
            "tilting.translation",
            format!(
                "flag of T({}) in the regular block is not the translate of a singular flag",
                g.format_word(minimal)
            ),
        ));
    }
    Ok(singular)
}

/// Grading layers of `T(x)`:
/// `C(z, m) = sum over entries (y, -j) of [Delta(y) : L(z)<m + j>]`.
pub fn tilting_character(b: &Block, x: Elem) -> Result<LayeredCharacter> {
    let flag = tilting_flag(b, x)?;
    b.flag_character(&flag)
}

/// Loewy length of `T(x)`, read as its number of grading layers, checked
/// against `2 l(w0 x) + 1`.
pub fn loewy_length_tilting(b: &Block, x: Elem) -> Result<usize> {
    let c = tilting_character(b, x)?;
    let expected = 2 * b.colength(x) + 1;
    if c.layer_count() != expected || c.graded_length() != expected {
        return Err(Error::invariant(
            "tilting.loewy_length",
            format!(
                "T({}) has {} nonzero layers over {} degrees, expected {expected}",
                b.group().format_word(x),
                c.layer_count(),
                c.graded_length()
            ),
        ));
    }
    Ok(expected)
}

/// Number of copies of `L(w0)` in the socle of `T(x)`, which equals the
/// flag multiplicity `(T(x) : Delta(w0))` since `Delta(w0)` is simple.
pub fn socle_multiplicity(b: &Block, x: Elem) -> Result<u64> {
    Ok(tilting_flag(b, x)?.ungraded(b.group().w0()))
}

/// `dim End(T(x)) = sum_y (T(x) : Delta(y))^2`, checked against
/// `dim End(P(r(x)))`.
pub fn dim_end_tilting(b: &Block, x: Elem) -> Result<u64> {
    let flag = tilting_flag(b, x)?;
    let dim: u64 = flag.ungraded_all().values().map(|m| m * m).sum();
    let proj = b.dim_end_projective(b.ringel_twist(x))?;
    if dim != proj {
        return Err(Error::invariant(
            "tilting.ringel_dimension",
            format!(
                "dim End T({}) = {dim} but dim End P({}) = {proj}",
                b.group().format_word(x),
                b.group().format_word(b.ringel_twist(x))
            ),
        ));
    }
    Ok(dim)
}

/// Comparison of the composition multiplicities of `T(x)` against those of
/// the projective `P(r(x))` containing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Domination {
    /// `[T(x) : L(z)] <= [P(r(x)) : L(z)]` for all `z`.
    pub ungraded: bool,
    /// Equality for every `z` (expected exactly when `r(x) = w0`).
    pub equal: bool,
    /// Graded comparison after shifting `T(x)` up by `l(w0 x)`; observed,
    /// not asserted.
    pub graded: bool,
    /// First simple where the ungraded inequality fails, if any.
    pub witness: Option<Elem>,
}

pub fn trace_domination(b: &Block, x: Elem) -> Result<Domination> {
    let t = tilting_character(b, x)?;
    let p = b.projective_character(b.ringel_twist(x))?;
    let mut ungraded = true;
    let mut equal = true;
    let mut witness = None;
    for &z in b.reps() {
        let (tz, pz) = (t.ungraded(z), p.ungraded(z));
        if tz > pz {
            ungraded = false;
            witness.get_or_insert(z);
        }
        if tz != pz {
            equal = false;
        }
    }
    // Both socles are a single L(w0) in the top degree.
    let shift = p.max_degree().unwrap_or(0) - t.max_degree().unwrap_or(0);
    let graded = t
        .layers()
        .all(|(d, layer)| layer.iter().all(|(&z, &m)| m <= p.mult(z, d + shift)));
    Ok(Domination {
        ungraded,
        equal,
        graded,
        witness,
    })
}
