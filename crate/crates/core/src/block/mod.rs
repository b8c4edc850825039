//! A block of category O described by its wall set, and the graded
//! multiplicities of Verma and projective modules in it.
//!
//! Simples of the block are indexed by `X_S`, the longest representatives
//! of the cosets `W_S * w` (see [`crate::coxeter::coset_reps_longest`]).
//! Graded Verma multiplicities use
//!
//! `[Delta(x) : L(y)<k>] = coefficient of v^k in v^(l(y)-l(x)) P_{x,y}(v^-2)`,
//!
//! so `Delta(x)` has its head in degree 0 and its socle `L(w0)` in degree
//! `l(w0) - l(x)`. Singular blocks reuse the regular numbers for `x, y` in
//! `X_S`.

mod modules;

use std::sync::{Arc, OnceLock};

pub use modules::{GradedFlag, LayeredCharacter};

use crate::coxeter::{
    coset_reps_longest, longest_in_coset, parabolic_elements, parabolic_longest, wall_mask,
    CartanDatum, Elem, GroupTable,
};
use crate::error::{Error, Result};
use crate::kl::KlEngine;
use crate::poly::LaurentV;

pub struct Block {
    group: Arc<GroupTable>,
    kl: Arc<KlEngine>,
    walls: Vec<usize>,
    mask: u64,
    w0_lambda: Elem,
    parabolic: Vec<Elem>,
    reps: Vec<Elem>,
    position: Vec<Option<u32>>,
    rows: Vec<OnceLock<Vec<LaurentV>>>,
    cross_check: bool,
}

impl std::fmt::Debug for Block {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Block")
            .field("type", &self.group.label())
            .field("walls", &self.walls_one_based())
            .field("simples", &self.reps.len())
            .finish()
    }
}

/// Builds the group, a fresh KL engine and the block for `walls`
/// (0-based simple indices).
pub fn make_block(cartan: CartanDatum, walls: &[usize]) -> Result<Block> {
    let group = Arc::new(GroupTable::build(cartan)?);
    Block::new(Arc::new(KlEngine::new(group)), walls)
}

impl Block {
    pub fn new(kl: Arc<KlEngine>, walls: &[usize]) -> Result<Self> {
        let group = kl.group().clone();
        let mask = wall_mask(&group, walls)?;
        let mut walls = walls.to_vec();
        walls.sort_unstable();
        walls.dedup();
        let w0_lambda = parabolic_longest(&group, mask);
        let parabolic = parabolic_elements(&group, mask);
        let reps = coset_reps_longest(&group, mask);
        let mut position = vec![None; group.order()];
        for (i, x) in reps.iter().enumerate() {
            position[x.index()] = Some(i as u32);
        }
        let rows = (0..reps.len()).map(|_| OnceLock::new()).collect();
        Ok(Block {
            group,
            kl,
            walls,
            mask,
            w0_lambda,
            parabolic,
            reps,
            position,
            rows,
            cross_check: true,
        })
    }

    /// Whether tilting flags are computed by both routes and compared.
    pub fn cross_check(&self) -> bool {
        self.cross_check
    }

    pub fn set_cross_check(&mut self, on: bool) {
        self.cross_check = on;
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn kl(&self) -> &Arc<KlEngine> {
        &self.kl
    }

    /// Wall set, 0-based.
    pub fn walls(&self) -> &[usize] {
        &self.walls
    }

    pub fn walls_one_based(&self) -> Vec<usize> {
        self.walls.iter().map(|s| s + 1).collect()
    }

    pub fn wall_mask(&self) -> u64 {
        self.mask
    }

    pub fn is_regular(&self) -> bool {
        self.walls.is_empty()
    }

    /// Longest element of the stabiliser `W_S`.
    pub fn w0_lambda(&self) -> Elem {
        self.w0_lambda
    }

    /// Elements of `W_S` in enumeration order.
    pub fn stabiliser(&self) -> &[Elem] {
        &self.parabolic
    }

    /// `X_S`, ordered by length then ShortLex.
    pub fn reps(&self) -> &[Elem] {
        &self.reps
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.position[x.index()].is_some()
    }

    pub fn position(&self, x: Elem) -> Option<usize> {
        self.position[x.index()].map(|p| p as usize)
    }

    pub fn ensure(&self, x: Elem) -> Result<()> {
        if self.contains(x) {
            return Ok(());
        }
        Err(Error::NotInBlock {
            element: self.group.format_word(x),
            representative: self
                .group
                .format_word(longest_in_coset(&self.group, self.mask, x)),
        })
    }

    /// `l(w0 x)`, the Loewy length of `Delta(x)` minus one.
    pub fn colength(&self, x: Elem) -> usize {
        self.group.length(self.group.w0()) - self.group.length(x)
    }

    /// The permutation of `X_S` underlying Ringel self-duality,
    /// `x -> w0_S x w0` for cosets with the parabolic factor on the left.
    pub fn ringel_twist(&self, x: Elem) -> Elem {
        let g = &self.group;
        g.mul(g.mul(self.w0_lambda, x), g.w0())
    }

    /// `d_{x,y}(v) = sum_k [Delta(x) : L(y)<k>] v^k`.
    pub fn graded_verma_multiplicity(&self, x: Elem, y: Elem) -> Result<LaurentV> {
        self.ensure(x)?;
        self.ensure(y)?;
        Ok(self.d(x, y).clone())
    }

    /// Row `d_{x, .}` indexed by position in [`Block::reps`]; `x` must lie
    /// in the block.
    pub(crate) fn row(&self, x: Elem) -> &[LaurentV] {
        let px = self.position(x).expect("element of the block");
        self.rows[px].get_or_init(|| {
            let g = &self.group;
            self.reps
                .iter()
                .map(|&y| {
                    if g.length(y) < g.length(x) {
                        return LaurentV::zero();
                    }
                    let gap = (g.length(y) - g.length(x)) as i32;
                    LaurentV::from_kl(self.kl.polynomial(x, y), gap)
                })
                .collect()
        })
    }

    pub(crate) fn d(&self, x: Elem, y: Elem) -> &LaurentV {
        &self.row(x)[self.position(y).expect("element of the block")]
    }

    /// Grading layers of `Delta(x)`: degree `k` holds `L(y)` with
    /// multiplicity `[Delta(x) : L(y)<k>]`.
    pub fn verma_layers(&self, x: Elem) -> Result<LayeredCharacter> {
        self.ensure(x)?;
        let mut c = LayeredCharacter::new();
        for (y, d) in self.reps.iter().zip(self.row(x)) {
            for (k, m) in d.terms() {
                c.add(k, *y, to_mult(m)?);
            }
        }
        Ok(c)
    }

    /// Graded Verma flag of `P(y)` by graded BGG reciprocity:
    /// `(P(y) : Delta(z)<j>) = [Delta(z) : L(y)<j>]`.
    pub fn projective_flag(&self, y: Elem) -> Result<GradedFlag> {
        self.ensure(y)?;
        let mut flag = GradedFlag::new();
        for &z in &self.reps {
            for (j, m) in self.d(z, y).terms() {
                flag.add(z, j, to_mult(m)?);
            }
        }
        Ok(flag)
    }

    /// `dim End(P(y)) = sum_z [Delta(z) : L(y)]^2`.
    pub fn dim_end_projective(&self, y: Elem) -> Result<u64> {
        self.ensure(y)?;
        self.reps
            .iter()
            .map(|&z| to_mult(self.d(z, y).at_one()).map(|m| m * m))
            .sum()
    }

    /// Graded character of `P(y)`: `sum_z sum_j (P(y):Delta(z)<j>) ch Delta(z)<j>`.
    pub fn projective_character(&self, y: Elem) -> Result<LayeredCharacter> {
        let flag = self.projective_flag(y)?;
        self.flag_character(&flag)
    }

    /// Character of a module with the given graded Verma flag.
    pub fn flag_character(&self, flag: &GradedFlag) -> Result<LayeredCharacter> {
        let mut c = LayeredCharacter::new();
        for (y, shift, mult) in flag.iter() {
            self.ensure(y)?;
            for (z, d) in self.reps.iter().zip(self.row(y)) {
                for (k, m) in d.terms() {
                    c.add(k + shift, *z, mult * to_mult(m)?);
                }
            }
        }
        Ok(c)
    }
}

pub(crate) fn to_mult(m: i64) -> Result<u64> {
    u64::try_from(m).map_err(|_| {
        Error::invariant(
            "kl.nonnegative",
            format!("negative multiplicity {m} from a KL coefficient"),
        )
    })
}
