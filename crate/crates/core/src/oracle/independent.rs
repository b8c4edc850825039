//! Ground truth that shares no code path with the engine: Bruhat order from
//! the subword property over freshly multiplied reflection matrices, the
//! dihedral closed form for KL polynomials, and literal sl2 data.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::coxeter::{Elem, GroupTable};
use crate::error::{Error, Result};
use crate::poly::PolynomialQ;

/// Products of simple reflection matrices, built from the Cartan matrix
/// directly rather than from the group tables.
struct Reflections {
    rank: usize,
    gens: Vec<Vec<i64>>,
}

impl Reflections {
    fn new(g: &GroupTable) -> Self {
        let a = g.cartan().cartan_matrix();
        let rank = g.rank();
        let gens = (0..rank)
            .map(|s| {
                // s(alpha_j) = alpha_j - a[s][j] alpha_s
                let mut m = vec![0i64; rank * rank];
                for j in 0..rank {
                    m[j * rank + j] = 1;
                    m[s * rank + j] -= a[s][j];
                }
                m
            })
            .collect();
        Reflections { rank, gens }
    }

    fn identity(&self) -> Vec<i64> {
        let mut m = vec![0i64; self.rank * self.rank];
        for i in 0..self.rank {
            m[i * self.rank + i] = 1;
        }
        m
    }

    fn times(&self, m: &[i64], s: usize) -> Vec<i64> {
        let r = self.rank;
        let gen = &self.gens[s];
        let mut out = vec![0i64; r * r];
        for i in 0..r {
            for k in 0..r {
                let a = m[i * r + k];
                if a == 0 {
                    continue;
                }
                for j in 0..r {
                    out[i * r + j] += a * gen[k * r + j];
                }
            }
        }
        out
    }

    fn of_word(&self, word: &[u8]) -> Vec<i64> {
        word.iter()
            .fold(self.identity(), |m, &s| self.times(&m, s as usize))
    }

    /// Matrices of all subwords of `word`.
    fn subword_products(&self, word: &[u8]) -> HashSet<Vec<i64>> {
        let mut set = HashSet::new();
        set.insert(self.identity());
        for &s in word {
            let extended: Vec<Vec<i64>> = set.iter().map(|m| self.times(m, s as usize)).collect();
            set.extend(extended);
        }
        set
    }
}

/// Subword criterion: `x <= y` iff some subword of a fixed reduced word of
/// `y` multiplies to `x`.
pub fn brute_force_bruhat(g: &GroupTable, x: Elem, y: Elem) -> bool {
    let r = Reflections::new(g);
    let target = r.of_word(g.word(x));
    r.subword_products(g.word(y)).contains(&target)
}

/// `result[y][x] = (x <= y)` for all pairs by the subword criterion.
pub fn brute_force_bruhat_table(g: &GroupTable) -> Vec<Vec<bool>> {
    let r = Reflections::new(g);
    let mats: Vec<Vec<i64>> = g.elements().map(|x| r.of_word(g.word(x))).collect();
    g.elements()
        .map(|y| {
            let below = r.subword_products(g.word(y));
            mats.iter().map(|m| below.contains(m)).collect()
        })
        .collect()
}

/// KL polynomials of a dihedral group (rank at most 2): 1 on comparable
/// pairs, 0 elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralKlTable {
    pub label: String,
    /// `polys[y][x]`.
    pub polys: Vec<Vec<PolynomialQ>>,
}

impl DihedralKlTable {
    pub fn get(&self, x: Elem, y: Elem) -> &PolynomialQ {
        &self.polys[y.index()][x.index()]
    }
}

pub fn dihedral_kl_oracle(g: &GroupTable) -> Result<DihedralKlTable> {
    if g.rank() > 2 {
        return Err(Error::Unsupported(format!(
            "dihedral KL oracle needs rank <= 2, {} has rank {}",
            g.label(),
            g.rank()
        )));
    }
    let below = brute_force_bruhat_table(g);
    let polys = below
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|le| {
                    if le {
                        PolynomialQ::one()
                    } else {
                        PolynomialQ::zero()
                    }
                })
                .collect()
        })
        .collect();
    Ok(DihedralKlTable {
        label: g.label().to_string(),
        polys,
    })
}

/// `(element, shift, mult)` with elements as words.
pub type WordFlag = Vec<(String, i32, u64)>;
/// `(degree, [(element, mult)])` in increasing degree.
pub type WordLayers = Vec<(i32, Vec<(String, u64)>)>;

/// Hand-computed data for the regular block of sl2, simples `L(e)`
/// (dominant) and `L(s)` (antidominant).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sl2Dataset {
    pub verma_layers: Vec<(String, WordLayers)>,
    pub projective_flags: Vec<(String, WordFlag)>,
    pub tilting_flags: Vec<(String, WordFlag)>,
    pub tilting_layers: Vec<(String, WordLayers)>,
    pub loewy_lengths: Vec<(String, usize)>,
    pub rigid: Vec<(String, bool)>,
}

pub fn sl2_block_oracle() -> Sl2Dataset {
    let s = |t: &str| t.to_string();
    Sl2Dataset {
        verma_layers: vec![
            (s("e"), vec![(0, vec![(s("e"), 1)]), (1, vec![(s("1"), 1)])]),
            (s("1"), vec![(0, vec![(s("1"), 1)])]),
        ],
        projective_flags: vec![
            (s("e"), vec![(s("e"), 0, 1)]),
            (s("1"), vec![(s("e"), 1, 1), (s("1"), 0, 1)]),
        ],
        tilting_flags: vec![
            (s("e"), vec![(s("e"), 0, 1), (s("1"), -1, 1)]),
            (s("1"), vec![(s("1"), 0, 1)]),
        ],
        tilting_layers: vec![
            (
                s("e"),
                vec![
                    (-1, vec![(s("1"), 1)]),
                    (0, vec![(s("e"), 1)]),
                    (1, vec![(s("1"), 1)]),
                ],
            ),
            (s("1"), vec![(0, vec![(s("1"), 1)])]),
        ],
        loewy_lengths: vec![(s("e"), 3), (s("1"), 1)],
        rigid: vec![(s("e"), true), (s("1"), true)],
    }
}
