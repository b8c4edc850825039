//! Exact integer polynomials in `q` and Laurent polynomials in `v`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Polynomial in `q` with integer coefficients; `coeffs[k]` multiplies `q^k`.
/// Never carries trailing zeros, so the zero polynomial is the empty vector.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolynomialQ {
    coeffs: Vec<i64>,
}

impl PolynomialQ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        PolynomialQ { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolynomialQ { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    /// `self += scale * q^shift * other`.
    pub fn add_scaled_shifted(&mut self, other: &PolynomialQ, scale: i64, shift: usize) {
        if other.is_zero() || scale == 0 {
            return;
        }
        let needed = other.coeffs.len() + shift;
        if self.coeffs.len() < needed {
            self.coeffs.resize(needed, 0);
        }
        for (k, &c) in other.coeffs.iter().enumerate() {
            self.coeffs[k + shift] += scale * c;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }
}

impl fmt::Display for PolynomialQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(k, &c)| (k as i64, c)),
            "q",
        )
    }
}

/// Laurent polynomial in the grading shift `v`, stored sparsely.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentV {
    terms: BTreeMap<i32, i64>,
}

impl LaurentV {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exp: i32, coeff: i64) -> Self {
        let mut l = Self::zero();
        l.add_term(exp, coeff);
        l
    }

    /// `v^gap * p(v^-2)`, the graded shadow of a KL polynomial across a
    /// length gap.
    pub fn from_kl(p: &PolynomialQ, gap: i32) -> Self {
        let mut l = Self::zero();
        for (k, &c) in p.coeffs().iter().enumerate() {
            l.add_term(gap - 2 * k as i32, c);
        }
        l
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry(exp).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `v = 1`: the ungraded multiplicity.
    pub fn at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by `v^k`.
    pub fn shifted(&self, k: i32) -> Self {
        LaurentV {
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }
}

impl fmt::Display for LaurentV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms().map(|(e, c)| (e as i64, c)), "v")
    }
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, i64)>,
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let sign = if c < 0 { "-" } else { "+" };
        if first {
            if c < 0 {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        let a = c.abs();
        match e {
            0 => write!(f, "{a}")?,
            _ => {
                if a != 1 {
                    write!(f, "{a}")?;
                }
                if e == 1 {
                    f.write_str(var)?;
                } else {
                    write!(f, "{var}^{e}")?;
                }
            }
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalization_strips_trailing_zeros() {
        assert!(PolynomialQ::from_coeffs(vec![0, 0]).is_zero());
        assert_eq!(PolynomialQ::from_coeffs(vec![1, 1, 0]).degree(), Some(1));
        let mut p = PolynomialQ::from_coeffs(vec![1, 2]);
        p.add_scaled_shifted(&PolynomialQ::from_coeffs(vec![0, 2]), -1, 0);
        assert!(p.is_one());
    }

    #[test]
    fn display() {
        assert_eq!(PolynomialQ::from_coeffs(vec![1, 1]).to_string(), "1 + q");
        assert_eq!(
            PolynomialQ::from_coeffs(vec![1, 0, 3]).to_string(),
            "1 + 3q^2"
        );
        assert_eq!(PolynomialQ::zero().to_string(), "0");
        let l = LaurentV::from_kl(&PolynomialQ::from_coeffs(vec![1, 1]), 4);
        assert_eq!(l.to_string(), "v^2 + v^4");
        assert_eq!(LaurentV::monomial(-1, 2).to_string(), "2v^-1");
    }

    #[test]
    fn kl_shadow() {
        let l = LaurentV::from_kl(&PolynomialQ::from_coeffs(vec![1, 1]), 4);
        assert_eq!(l.coeff(2), 1);
        assert_eq!(l.coeff(4), 1);
        assert_eq!(l.at_one(), 2);
        assert_eq!(l.min_degree(), Some(2));
        assert_eq!(l.shifted(-2).max_degree(), Some(2));
    }

    proptest! {
        #[test]
        fn shifted_add_matches_eval(a in prop::collection::vec(-5i64..5, 0..6),
                                    b in prop::collection::vec(-5i64..5, 0..6),
                                    scale in -3i64..3, shift in 0usize..4, q in -3i64..4) {
            let pa = PolynomialQ::from_coeffs(a);
            let pb = PolynomialQ::from_coeffs(b);
            let mut sum = pa.clone();
            sum.add_scaled_shifted(&pb, scale, shift);
            prop_assert_eq!(sum.eval(q), pa.eval(q) + scale * q.pow(shift as u32) * pb.eval(q));
            prop_assert!(sum.coeffs().last() != Some(&0));
        }
    }
}
