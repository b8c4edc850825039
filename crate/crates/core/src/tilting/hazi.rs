//! Layer balancing: builds the grading layers of `T(x)` from those of
//! Verma modules alone.
//!
//! Start from the layers of `Delta(x)` in degrees `0..=l(w0 x)`, reflected
//! about degree 0. While some simple `L(y)` occurs more often in a degree
//! `m > 0` than in `-m`, take the highest such weight (shortest `y`) and
//! add the missing copies of `Delta(y)` with their heads in degree `-m`.

use serde::{Deserialize, Serialize};

use super::{tilting_character, tilting_flag};
use crate::block::{to_mult, Block, GradedFlag, LayeredCharacter};
use crate::coxeter::Elem;
use crate::error::{Error, Result};

/// Order among unbalanced simples of equal length.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum TieBreak {
    /// ShortLex on reduced words.
    Forward,
    /// Reversed ShortLex.
    Reverse,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HaziStep {
    /// Verma module added.
    pub element: Elem,
    /// Degree of its head (`-m`).
    pub shift: i32,
    pub copies: u64,
    /// The layer `m > 0` where the deficiency was seen.
    pub witness_degree: i32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HaziTrace {
    pub steps: Vec<HaziStep>,
    pub layers: LayeredCharacter,
    /// Seed `Delta(x)<0>` plus every added Verma module.
    pub flag: GradedFlag,
}

/// Runs the balancing algorithm and checks its result against
/// [`tilting_character`] and [`tilting_flag`].
pub fn hazi_layers(b: &Block, x: Elem, tie: TieBreak) -> Result<HaziTrace> {
    let trace = balance(b, x, tie)?;
    let g = b.group();
    if trace.layers != tilting_character(b, x)? {
        return Err(Error::invariant(
            "tilting.hazi_character",
            format!(
                "balanced layers of T({}) differ from its character",
                g.format_word(x)
            ),
        ));
    }
    if trace.flag != tilting_flag(b, x)? {
        return Err(Error::invariant(
            "tilting.hazi_flag",
            format!(
                "Vermas added while balancing T({}) differ from its flag",
                g.format_word(x)
            ),
        ));
    }
    Ok(trace)
}

/// The algorithm itself, without comparison to the flag-based results.
pub fn balance(b: &Block, x: Elem, tie: TieBreak) -> Result<HaziTrace> {
    b.ensure(x)?;
    let g = b.group();
    let mut layers = b.verma_layers(x)?;
    let mut flag = GradedFlag::new();
    flag.add(x, 0, 1);
    let mut steps = Vec::new();

    let bound: usize = b.reps().iter().map(|&y| b.colength(y)).sum::<usize>() * g.order();
    while let Some((y, m, copies)) = most_urgent_deficiency(b, &layers, tie) {
        if steps.len() >= bound.max(1) {
            return Err(Error::invariant(
                "tilting.hazi_termination",
                format!(
                    "balancing T({}) did not stop after {bound} steps",
                    g.format_word(x)
                ),
            ));
        }
        for (z, d) in b.reps().iter().zip(b.row(y)) {
            for (k, c) in d.terms() {
                layers.add(k - m, *z, copies * to_mult(c)?);
            }
        }
        flag.add(y, -m, copies);
        steps.push(HaziStep {
            element: y,
            shift: -m,
            copies,
            witness_degree: m,
        });
    }
    if let Some((z, d)) = layers.asymmetry_witness() {
        return Err(Error::invariant(
            "tilting.hazi_balanced",
            format!(
                "balancing T({}) stopped with L({}) unbalanced in degree {d}",
                g.format_word(x),
                g.format_word(z)
            ),
        ));
    }
    Ok(HaziTrace {
        steps,
        layers,
        flag,
    })
}

/// Shortest `y` with a positive degree `m` where `L(y)` is more frequent
/// than in `-m`; ties by `tie`, then the smallest such `m`.
fn most_urgent_deficiency(
    b: &Block,
    layers: &LayeredCharacter,
    tie: TieBreak,
) -> Option<(Elem, i32, u64)> {
    let g = b.group();
    let key = |y: Elem| {
        let rank = match tie {
            TieBreak::Forward => y.index() as i64,
            TieBreak::Reverse => -(y.index() as i64),
        };
        (g.length(y), rank)
    };
    let mut best: Option<(Elem, i32, u64)> = None;
    for (m, layer) in layers.layers() {
        if m <= 0 {
            continue;
        }
        for (&y, &count) in layer {
            let mirrored = layers.mult(y, -m);
            if count <= mirrored {
                continue;
            }
            let better = match best {
                None => true,
                Some((by, bm, _)) => (key(y), m) < (key(by), bm),
            };
            if better {
                best = Some((y, m, count - mirrored));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::make_block;
    use crate::coxeter::CartanDatum;

    fn block(label: &str, walls: &[usize]) -> Block {
        make_block(CartanDatum::parse(label).unwrap(), walls).unwrap()
    }

    #[test]
    fn a1_one_step() {
        let b = block("A1", &[]);
        let (e, s) = (b.group().identity(), b.group().w0());
        let t = hazi_layers(&b, e, TieBreak::Forward).unwrap();
        assert_eq!(
            t.steps,
            vec![HaziStep {
                element: s,
                shift: -1,
                copies: 1,
                witness_degree: 1
            }]
        );
        assert_eq!(t.layers.mult(s, -1), 1);
        assert_eq!(t.layers.mult(e, 0), 1);
        assert_eq!(t.layers.mult(s, 1), 1);
    }

    #[test]
    fn a2_regular_steps() {
        let b = block("A2", &[]);
        let g = b.group().clone();
        let t = hazi_layers(&b, g.identity(), TieBreak::Forward).unwrap();
        let got: Vec<(String, i32)> = t
            .steps
            .iter()
            .map(|s| (g.format_word(s.element), s.shift))
            .collect();
        let expect: Vec<(String, i32)> = [
            ("1", -1),
            ("2", -1),
            ("1,2", -2),
            ("2,1", -2),
            ("1,2,1", -3),
        ]
        .iter()
        .map(|&(w, l)| (w.to_string(), l))
        .collect();
        assert_eq!(got, expect);
        assert_eq!(t.flag.total(), 6);
    }

    #[test]
    fn top_element_needs_no_steps() {
        for b in [block("A3", &[]), block("B2", &[1])] {
            let t = hazi_layers(&b, b.group().w0(), TieBreak::Reverse).unwrap();
            assert!(t.steps.is_empty());
        }
    }

    #[test]
    fn tie_break_does_not_change_result() {
        let b = block("A3", &[]);
        for &x in b.reps() {
            let f = hazi_layers(&b, x, TieBreak::Forward).unwrap();
            let r = hazi_layers(&b, x, TieBreak::Reverse).unwrap();
            assert_eq!(f.layers, r.layers);
            assert_eq!(f.flag, r.flag);
        }
    }
}
