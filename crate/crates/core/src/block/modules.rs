use std::collections::BTreeMap;

use crate::coxeter::Elem;

/// A graded (dual) Verma flag: multiset of `(element, shift)` pairs, where
/// `(y, l)` stands for a subquotient `Delta(y)<l>`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedFlag {
    entries: BTreeMap<(Elem, i32), u64>,
}

impl GradedFlag {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, element: Elem, shift: i32, mult: u64) {
        if mult > 0 {
            *self.entries.entry((element, shift)).or_insert(0) += mult;
        }
    }

    pub fn mult(&self, element: Elem, shift: i32) -> u64 {
        self.entries.get(&(element, shift)).copied().unwrap_or(0)
    }

    /// Ungraded flag multiplicity of `Delta(element)`.
    pub fn ungraded(&self, element: Elem) -> u64 {
        self.entries
            .range((element, i32::MIN)..=(element, i32::MAX))
            .map(|(_, &m)| m)
            .sum()
    }

    /// `(element, shift, mult)` in element order, then shift.
    pub fn iter(&self) -> impl Iterator<Item = (Elem, i32, u64)> + '_ {
        self.entries.iter().map(|(&(e, s), &m)| (e, s, m))
    }

    /// Ungraded multiplicities per element.
    pub fn ungraded_all(&self) -> BTreeMap<Elem, u64> {
        let mut out = BTreeMap::new();
        for (e, _, m) in self.iter() {
            *out.entry(e).or_insert(0) += m;
        }
        out
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Graded composition multiplicities, one semisimple layer per degree.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LayeredCharacter {
    layers: BTreeMap<i32, BTreeMap<Elem, u64>>,
}

impl LayeredCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, degree: i32, element: Elem, mult: u64) {
        if mult > 0 {
            *self
                .layers
                .entry(degree)
                .or_default()
                .entry(element)
                .or_insert(0) += mult;
        }
    }

    pub fn mult(&self, element: Elem, degree: i32) -> u64 {
        self.layers
            .get(&degree)
            .and_then(|l| l.get(&element))
            .copied()
            .unwrap_or(0)
    }

    pub fn layer(&self, degree: i32) -> Option<&BTreeMap<Elem, u64>> {
        self.layers.get(&degree)
    }

    /// Nonzero layers in increasing degree.
    pub fn layers(&self) -> impl Iterator<Item = (i32, &BTreeMap<Elem, u64>)> + '_ {
        self.layers.iter().map(|(&d, l)| (d, l))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.layers.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.layers.keys().next_back().copied()
    }

    /// Number of nonzero layers.
    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    /// Number of degrees from the lowest to the highest nonzero layer.
    pub fn graded_length(&self) -> usize {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => (hi - lo + 1) as usize,
            _ => 0,
        }
    }

    /// Ungraded composition multiplicity `[M : L(element)]`.
    pub fn ungraded(&self, element: Elem) -> u64 {
        self.layers.values().filter_map(|l| l.get(&element)).sum()
    }

    /// `C(z, m) == C(z, -m)` for every simple and degree.
    pub fn is_symmetric(&self) -> bool {
        self.layers
            .iter()
            .all(|(&d, layer)| self.layers.get(&-d) == Some(layer))
    }

    /// First `(element, degree)` where `C(z, m) != C(z, -m)`.
    pub fn asymmetry_witness(&self) -> Option<(Elem, i32)> {
        for (&d, layer) in &self.layers {
            for (&z, &m) in layer {
                if self.mult(z, -d) != m {
                    return Some((z, d));
                }
            }
        }
        None
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }
}
