use serde::{Deserialize, Serialize};

use super::tilting_flag;
use crate::block::Block;
use crate::coxeter::Elem;
use crate::error::{Error, Result};

/// The three independently computed criteria for rigidity of `T(x)`.
///
/// They are equivalent to each other and to: `T(x)` rigid, `P(y)` rigid,
/// `P(y)` with simple socle, where `y` is the Ringel twist of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityReport {
    pub x: Elem,
    pub y: Elem,
    /// `T(x)` has simple socle.
    pub cond_socle: bool,
    /// The Verma flag of `T(x)` is multiplicity free.
    pub cond_multfree: bool,
    /// `[Delta(lambda) : L(y)] = 1`, with `Delta(lambda) = Delta(w0_S)`.
    pub cond_dominant: bool,
    pub agreement: bool,
    /// Common value of the three conditions; `None` if they disagree.
    pub verdict: Option<bool>,
    pub socle_multiplicity: u64,
    pub max_flag_multiplicity: u64,
    pub dominant_multiplicity: u64,
}

/// Computes the report and fails if the three conditions disagree.
pub fn rigidity_report(b: &Block, x: Elem) -> Result<RigidityReport> {
    let report = evaluate(b, x)?;
    if !report.agreement {
        let g = b.group();
        return Err(Error::invariant(
            "tilting.rigidity_criteria",
            format!(
                "rigidity criteria disagree for T({}): socle {}, multiplicity free {}, dominant {}",
                g.format_word(x),
                report.cond_socle,
                report.cond_multfree,
                report.cond_dominant
            ),
        ));
    }
    Ok(report)
}

pub(crate) fn evaluate(b: &Block, x: Elem) -> Result<RigidityReport> {
    let flag = tilting_flag(b, x)?;
    let g = b.group();
    let y = b.ringel_twist(x);

    let socle_multiplicity = flag.ungraded(g.w0());
    let max_flag_multiplicity = flag.ungraded_all().values().copied().max().unwrap_or(0);
    let dominant = b.graded_verma_multiplicity(b.w0_lambda(), y)?.at_one();
    let dominant_multiplicity = u64::try_from(dominant).unwrap_or(0);

    let cond_socle = socle_multiplicity == 1;
    let cond_multfree = max_flag_multiplicity <= 1;
    let cond_dominant = dominant_multiplicity == 1;
    let agreement = cond_socle == cond_multfree && cond_multfree == cond_dominant;
    Ok(RigidityReport {
        x,
        y,
        cond_socle,
        cond_multfree,
        cond_dominant,
        agreement,
        verdict: agreement.then_some(cond_socle),
        socle_multiplicity,
        max_flag_multiplicity,
        dominant_multiplicity,
    })
}
