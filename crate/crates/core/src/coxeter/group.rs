use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::bitset::BitSet;
use super::cartan::CartanDatum;
use crate::error::{Error, Result};

/// Default upper bound on the number of enumerated elements.
pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

/// Index of an element in the enumeration of its [`GroupTable`].
///
/// Indices are assigned breadth-first by length with ShortLex tie-break, so
/// comparing two `Elem`s of one group compares them in ShortLex order.
#[derive(Debug, Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const IDENTITY: Elem = Elem(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A finite Weyl group, fully enumerated.
///
/// Elements are stored as integer matrices of the reflection representation
/// on the root lattice: column `j` of `w` holds the coordinates of
/// `w(alpha_j)` in the basis of simple roots.
pub struct GroupTable {
    cartan: CartanDatum,
    rank: usize,
    words: Vec<Vec<u8>>,
    lengths: Vec<u32>,
    matrices: Vec<Box<[i64]>>,
    index: HashMap<Box<[i64]>, Elem>,
    right: Vec<u32>,
    left: Vec<u32>,
    right_desc: Vec<u64>,
    left_desc: Vec<u64>,
    inverse: Vec<u32>,
    w0: Elem,
    hash: String,
    intervals: Vec<OnceLock<BitSet>>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("cartan", &self.cartan.label())
            .field("order", &self.order())
            .field("w0_length", &self.length(self.w0))
            .finish()
    }
}

impl GroupTable {
    pub fn build(cartan: CartanDatum) -> Result<Self> {
        Self::build_with_cap(cartan, DEFAULT_ELEMENT_CAP)
    }

    /// Enumerates the group breadth-first by length. Within a length the
    /// elements are discovered in ShortLex order of their minimal words:
    /// the lexicographically least reduced word of `u*s` extends the least
    /// word of some shorter `u`, and parents are visited in ShortLex order.
    pub fn build_with_cap(cartan: CartanDatum, cap: usize) -> Result<Self> {
        let rank = cartan.rank();
        if rank > 64 {
            return Err(Error::Unsupported(format!("rank {rank} exceeds 64")));
        }
        let a = cartan.cartan_matrix().to_vec();

        let mut identity = vec![0i64; rank * rank].into_boxed_slice();
        for i in 0..rank {
            identity[i * rank + i] = 1;
        }

        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut lengths = vec![0u32];
        let mut matrices = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, Elem(0));

        let mut layer_start = 0;
        loop {
            let layer_end = words.len();
            if layer_start == layer_end {
                break;
            }
            for w in layer_start..layer_end {
                for s in 0..rank {
                    if !column_positive(&matrices[w], rank, s) {
                        continue;
                    }
                    let m = right_reflect(&matrices[w], rank, &a, s);
                    if index.contains_key(&m) {
                        continue;
                    }
                    if words.len() >= cap {
                        return Err(Error::TooLarge {
                            label: cartan.label().to_string(),
                            cap,
                        });
                    }
                    let id = Elem(words.len() as u32);
                    let mut word = words[w].clone();
                    word.push(s as u8);
                    words.push(word);
                    lengths.push(lengths[w] + 1);
                    index.insert(m.clone(), id);
                    matrices.push(m);
                }
            }
            layer_start = layer_end;
        }

        let n = words.len();
        let mut right = vec![0u32; n * rank];
        let mut left = vec![0u32; n * rank];
        for w in 0..n {
            for s in 0..rank {
                let r = right_reflect(&matrices[w], rank, &a, s);
                right[w * rank + s] = index[&r].0;
                let l = left_reflect(&matrices[w], rank, &a, s);
                left[w * rank + s] = index[&l].0;
            }
        }
        let mut right_desc = vec![0u64; n];
        let mut left_desc = vec![0u64; n];
        for w in 0..n {
            for s in 0..rank {
                if lengths[right[w * rank + s] as usize] < lengths[w] {
                    right_desc[w] |= 1 << s;
                }
                if lengths[left[w * rank + s] as usize] < lengths[w] {
                    left_desc[w] |= 1 << s;
                }
            }
        }
        let mut inverse = vec![0u32; n];
        for w in 0..n {
            let mut cur = 0u32;
            for &s in words[w].iter().rev() {
                cur = right[cur as usize * rank + s as usize];
            }
            inverse[w] = cur;
        }
        let w0 = Elem((n - 1) as u32);

        let mut hasher = Sha256::new();
        hasher.update(cartan.label().as_bytes());
        for row in cartan.cartan_matrix() {
            for v in row {
                hasher.update(v.to_le_bytes());
            }
        }
        for word in &words {
            hasher.update([word.len() as u8]);
            hasher.update(word);
        }
        let hash = format!("{:x}", hasher.finalize());

        let intervals = (0..n).map(|_| OnceLock::new()).collect();
        Ok(GroupTable {
            cartan,
            rank,
            words,
            lengths,
            matrices,
            index,
            right,
            left,
            right_desc,
            left_desc,
            inverse,
            w0,
            hash,
            intervals,
        })
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn label(&self) -> &str {
        self.cartan.label()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    /// The longest element; always the last in the enumeration.
    pub fn w0(&self) -> Elem {
        self.w0
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Elem> + ExactSizeIterator {
        (0..self.words.len() as u32).map(Elem)
    }

    pub fn elem(&self, index: usize) -> Option<Elem> {
        (index < self.order()).then_some(Elem(index as u32))
    }

    pub fn length(&self, w: Elem) -> usize {
        self.lengths[w.index()] as usize
    }

    /// ShortLex-minimal reduced word, 0-based simple indices.
    pub fn word(&self, w: Elem) -> &[u8] {
        &self.words[w.index()]
    }

    pub fn matrix(&self, w: Elem) -> &[i64] {
        &self.matrices[w.index()]
    }

    pub fn find_matrix(&self, m: &[i64]) -> Option<Elem> {
        self.index.get(m).copied()
    }

    /// SHA-256 over the label, Cartan matrix and enumerated words.
    pub fn enumeration_hash(&self) -> &str {
        &self.hash
    }

    pub fn right_mul_simple(&self, w: Elem, s: usize) -> Elem {
        Elem(self.right[w.index() * self.rank + s])
    }

    pub fn left_mul_simple(&self, s: usize, w: Elem) -> Elem {
        Elem(self.left[w.index() * self.rank + s])
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.word(b)
            .iter()
            .fold(a, |acc, &s| self.right_mul_simple(acc, s as usize))
    }

    pub fn inverse(&self, w: Elem) -> Elem {
        Elem(self.inverse[w.index()])
    }

    pub fn right_descents(&self, w: Elem) -> u64 {
        self.right_desc[w.index()]
    }

    pub fn left_descents(&self, w: Elem) -> u64 {
        self.left_desc[w.index()]
    }

    pub fn is_left_descent(&self, w: Elem, s: usize) -> bool {
        self.left_desc[w.index()] >> s & 1 == 1
    }

    pub fn is_right_descent(&self, w: Elem, s: usize) -> bool {
        self.right_desc[w.index()] >> s & 1 == 1
    }

    /// Smallest-index left descent of `w`, if any.
    pub fn first_left_descent(&self, w: Elem) -> Option<usize> {
        let d = self.left_desc[w.index()];
        (d != 0).then(|| d.trailing_zeros() as usize)
    }

    /// Product of the simple reflections in `word` (0-based), reduced or not.
    pub fn normalize_word(&self, word: &[usize]) -> Result<Elem> {
        let mut cur = Elem::IDENTITY;
        for &s in word {
            if s >= self.rank {
                return Err(Error::IndexOutOfRange {
                    index: s + 1,
                    rank: self.rank,
                });
            }
            cur = self.right_mul_simple(cur, s);
        }
        Ok(cur)
    }

    /// Parses the external element syntax: 1-based simple indices separated
    /// by commas or `*`, e.g. `1,2,1` or `s1*s2`. `e` or an empty string is
    /// the identity.
    pub fn parse_word(&self, text: &str) -> Result<Elem> {
        let word = parse_word_indices(text)?;
        let zero_based = word
            .into_iter()
            .map(|i| {
                if i == 0 || i > self.rank {
                    Err(Error::IndexOutOfRange {
                        index: i,
                        rank: self.rank,
                    })
                } else {
                    Ok(i - 1)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        self.normalize_word(&zero_based)
    }

    /// ShortLex reduced word in the external syntax (`1,2,1`, or `e`).
    pub fn format_word(&self, w: Elem) -> String {
        format_word(self.word(w))
    }

    /// Lower Bruhat interval `[e, y]` as a bitset over element indices.
    ///
    /// Filled lazily with the descent recursion: for a left descent `s` of
    /// `y`, `x <= y` iff `x <= sy` or `sx <= sy`.
    pub fn lower_interval(&self, y: Elem) -> &BitSet {
        if let Some(set) = self.intervals[y.index()].get() {
            return set;
        }
        let set = match self.first_left_descent(y) {
            None => {
                let mut set = BitSet::new(self.order());
                set.insert(y.index());
                set
            }
            Some(s) => {
                let v = self.left_mul_simple(s, y);
                let below = self.lower_interval(v);
                let mut set = below.clone();
                for x in below.iter() {
                    set.insert(self.left_mul_simple(s, Elem(x as u32)).index());
                }
                set
            }
        };
        self.intervals[y.index()].get_or_init(|| set)
    }

    /// Bruhat order with the identity minimal.
    pub fn bruhat_leq(&self, x: Elem, y: Elem) -> bool {
        if x == y {
            return true;
        }
        if self.length(x) >= self.length(y) {
            return false;
        }
        self.lower_interval(y).contains(x.index())
    }

    pub fn bruhat_lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.bruhat_leq(x, y)
    }
}

pub(crate) fn parse_word_indices(text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    if t.is_empty() || t == "e" || t == "1_W" {
        return Ok(Vec::new());
    }
    t.split([',', '*', ' '])
        .filter(|p| !p.is_empty())
        .map(|p| {
            let p = p.trim();
            let digits = p.strip_prefix('s').unwrap_or(p);
            digits
                .parse::<usize>()
                .map_err(|_| Error::BadWord(text.to_string()))
        })
        .collect()
}

pub(crate) fn format_word(word: &[u8]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter()
        .map(|&s| (s as usize + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn column_positive(m: &[i64], rank: usize, s: usize) -> bool {
    (0..rank).all(|k| m[k * rank + s] >= 0)
}

/// `w * s_s`: column j becomes `w(alpha_j) - a[s][j] * w(alpha_s)`.
fn right_reflect(m: &[i64], rank: usize, a: &[Vec<i64>], s: usize) -> Box<[i64]> {
    let mut out: Box<[i64]> = m.into();
    for j in 0..rank {
        let c = a[s][j];
        if c == 0 {
            continue;
        }
        for k in 0..rank {
            out[k * rank + j] -= c * m[k * rank + s];
        }
    }
    out
}

/// `s_s * w`: only row s changes, to `row_s - sum_k a[s][k] * row_k`.
fn left_reflect(m: &[i64], rank: usize, a: &[Vec<i64>], s: usize) -> Box<[i64]> {
    let mut out: Box<[i64]> = m.into();
    for j in 0..rank {
        let mut acc = 0;
        for k in 0..rank {
            acc += a[s][k] * m[k * rank + j];
        }
        out[s * rank + j] -= acc;
    }
    out
}
