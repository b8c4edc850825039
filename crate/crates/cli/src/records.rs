//! Serializable output records. Elements are always reduced words.

use serde::{Deserialize, Serialize};

use oblock::block::{Block, GradedFlag, LayeredCharacter};
use oblock::oracle::VerificationReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockInfo {
    #[serde(rename = "type")]
    pub cartan: String,
    /// 1-based simple indices.
    pub walls: Vec<usize>,
    pub w0_lambda: String,
    pub simples: usize,
}

impl BlockInfo {
    pub fn of(b: &Block) -> Self {
        BlockInfo {
            cartan: b.group().label().to_string(),
            walls: b.walls_one_based(),
            w0_lambda: b.group().format_word(b.w0_lambda()),
            simples: b.reps().len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Simple {
    pub element: String,
    pub mult: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layer {
    pub degree: i32,
    pub simples: Vec<Simple>,
}

pub fn layers_of(b: &Block, ch: &LayeredCharacter) -> Vec<Layer> {
    let g = b.group();
    ch.layers()
        .map(|(degree, layer)| Layer {
            degree,
            simples: layer
                .iter()
                .map(|(&z, &mult)| Simple {
                    element: g.format_word(z),
                    mult,
                })
                .collect(),
        })
        .collect()
}

/// One Verma subquotient `Delta(element)<shift>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagEntry {
    pub element: String,
    pub shift: i32,
    pub mult: u64,
}

pub fn flag_of(b: &Block, f: &GradedFlag) -> Vec<FlagEntry> {
    let g = b.group();
    f.iter()
        .map(|(y, shift, mult)| FlagEntry {
            element: g.format_word(y),
            shift,
            mult,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRow {
    pub element: String,
    pub length: usize,
    /// `l(w0 x)`.
    pub colength: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub block: BlockInfo,
    pub rank: usize,
    pub order: usize,
    pub w0: String,
    pub w0_length: usize,
    pub enumeration_hash: String,
    /// The block's simples, longest coset representatives in ShortLex order.
    pub elements: Vec<ElementRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlPair {
    #[serde(rename = "type")]
    pub cartan: String,
    pub x: String,
    pub y: String,
    pub bruhat_leq: bool,
    /// Coefficients of `q^0, q^1, ...`.
    pub coeffs: Vec<i64>,
    pub mu: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlEntry {
    pub x: String,
    pub y: String,
    pub coeffs: Vec<i64>,
}

/// Every pair `x <= y` with `P(x, y) != 1`; all other comparable pairs have
/// polynomial 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlDump {
    #[serde(rename = "type")]
    pub cartan: String,
    pub order: usize,
    pub enumeration_hash: String,
    pub entries: Vec<KlEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VermaRecord {
    pub block: BlockInfo,
    pub element: String,
    pub layers: Vec<Layer>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectiveRecord {
    pub block: BlockInfo,
    pub element: String,
    pub flag: Vec<FlagEntry>,
    pub dim_end: u64,
    pub layers: Vec<Layer>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingRecord {
    pub block: BlockInfo,
    pub element: String,
    pub colength: usize,
    pub loewy_length: usize,
    pub socle_multiplicity: u64,
    pub dim_end: u64,
    pub flag: Vec<FlagEntry>,
    pub layers: Vec<Layer>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HaziStepRecord {
    pub element: String,
    pub shift: i32,
    pub copies: u64,
    /// Positive degree where the deficiency was found.
    pub degree: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HaziRecord {
    pub block: BlockInfo,
    pub element: String,
    pub tie_break: String,
    pub steps: Vec<HaziStepRecord>,
    pub flag: Vec<FlagEntry>,
    pub layers: Vec<Layer>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityRow {
    pub element: String,
    pub colength: usize,
    pub loewy_length: usize,
    pub flag: Vec<FlagEntry>,
    /// Ringel twist of the element; `P(ringel)` is rigid iff `T(element)` is.
    pub ringel: String,
    pub socle_multiplicity: u64,
    pub max_flag_multiplicity: u64,
    pub dominant_multiplicity: u64,
    pub rigid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityRecord {
    pub block: BlockInfo,
    pub rows: Vec<RigidityRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub passed: bool,
    pub reports: Vec<VerificationReport>,
}
