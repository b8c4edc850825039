use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An irreducible finite crystallographic Cartan type.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
pub enum SimpleType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl SimpleType {
    pub fn rank(self) -> usize {
        match self {
            SimpleType::A(n)
            | SimpleType::B(n)
            | SimpleType::C(n)
            | SimpleType::D(n)
            | SimpleType::E(n) => n,
            SimpleType::F4 => 4,
            SimpleType::G2 => 2,
        }
    }

    fn parse(s: &str) -> Result<Self> {
        let bad = || Error::UnknownType(s.to_string());
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let ty = match (letter, n) {
            ('A', n) if n >= 1 => SimpleType::A(n),
            ('B', n) if n >= 2 => SimpleType::B(n),
            ('C', n) if n >= 2 => SimpleType::C(n),
            ('D', n) if n >= 4 => SimpleType::D(n),
            ('E', n) if (6..=8).contains(&n) => SimpleType::E(n),
            ('F', 4) => SimpleType::F4,
            ('G', 2) => SimpleType::G2,
            _ => return Err(bad()),
        };
        Ok(ty)
    }

    /// Cartan matrix in Bourbaki numbering, `a[i][j] = <alpha_i^vee, alpha_j>`.
    fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self {
            SimpleType::A(n) => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
            SimpleType::B(n) => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -1, -2);
            }
            SimpleType::C(n) => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -2, -1);
            }
            SimpleType::D(n) => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 3, n - 1, -1, -1);
            }
            SimpleType::E(n) => {
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            }
            SimpleType::F4 => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            SimpleType::G2 => link(0, 1, -3, -1),
        }
        a
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleType::A(n) => write!(f, "A{n}"),
            SimpleType::B(n) => write!(f, "B{n}"),
            SimpleType::C(n) => write!(f, "C{n}"),
            SimpleType::D(n) => write!(f, "D{n}"),
            SimpleType::E(n) => write!(f, "E{n}"),
            SimpleType::F4 => write!(f, "F4"),
            SimpleType::G2 => write!(f, "G2"),
        }
    }
}

/// A finite crystallographic Cartan datum, possibly reducible.
///
/// Only the Weyl group is ever used downstream; the Cartan matrix is kept
/// because its reflection representation gives exact integer matrices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanDatum {
    label: String,
    coxeter: Vec<Vec<u32>>,
    cartan: Vec<Vec<i64>>,
}

impl CartanDatum {
    /// Parses labels such as `A3`, `G2` or products `A1xA1` (also `A1*A1`,
    /// `A1×A1`). Simple indices of later factors follow those of earlier ones.
    pub fn parse(label: &str) -> Result<Self> {
        let trimmed = label.trim();
        let parts: Vec<&str> = trimmed.split(['x', 'X', '*', '×']).map(str::trim).collect();
        if parts.iter().any(|p| p.is_empty()) {
            return Err(Error::UnknownType(label.to_string()));
        }
        let types = parts
            .iter()
            .map(|p| SimpleType::parse(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::product(&types))
    }

    pub fn product(types: &[SimpleType]) -> Self {
        let rank: usize = types.iter().map(|t| t.rank()).sum();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut offset = 0;
        for t in types {
            let block = t.cartan_matrix();
            for (i, row) in block.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    cartan[offset + i][offset + j] = v;
                }
            }
            offset += t.rank();
        }
        let label = types
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("x");
        let coxeter = coxeter_from_cartan(&cartan);
        CartanDatum {
            label,
            coxeter,
            cartan,
        }
    }

    /// Builds a datum from a Coxeter matrix. Entries must be 2, 3, 4 or 6
    /// off the diagonal (crystallographic) and the group must be finite.
    pub fn from_coxeter_matrix(label: &str, coxeter: Vec<Vec<u32>>) -> Result<Self> {
        let n = coxeter.len();
        if n == 0 {
            return Err(Error::InvalidCoxeterMatrix("empty matrix".into()));
        }
        for (i, row) in coxeter.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCoxeterMatrix(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &m) in row.iter().enumerate() {
                if i == j && m != 1 {
                    return Err(Error::InvalidCoxeterMatrix(format!(
                        "diagonal entry m({0},{0}) = {m}, expected 1",
                        i + 1
                    )));
                }
                if i != j {
                    if m != coxeter[j][i] {
                        return Err(Error::InvalidCoxeterMatrix(format!(
                            "m({},{}) != m({},{})",
                            i + 1,
                            j + 1,
                            j + 1,
                            i + 1
                        )));
                    }
                    if m == 0 || m == 1 {
                        return Err(Error::InfiniteType(format!(
                            "m({},{}) = {m} (0 encodes infinity)",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        if !gram_positive_definite(&coxeter) {
            return Err(Error::InfiniteType(format!(
                "Coxeter matrix of {label} has a non positive definite Tits form"
            )));
        }
        let mut cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            cartan[i][i] = 2;
            for j in i + 1..n {
                let (aij, aji) = match coxeter[i][j] {
                    2 => (0, 0),
                    3 => (-1, -1),
                    4 => (-1, -2),
                    6 => (-1, -3),
                    m => {
                        return Err(Error::NonCrystallographic(format!(
                            "m({},{}) = {m}",
                            i + 1,
                            j + 1
                        )))
                    }
                };
                cartan[i][j] = aij;
                cartan[j][i] = aji;
            }
        }
        Ok(CartanDatum {
            label: label.to_string(),
            coxeter,
            cartan,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

fn coxeter_from_cartan(a: &[Vec<i64>]) -> Vec<Vec<u32>> {
    let n = a.len();
    let mut m = vec![vec![1u32; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m[i][j] = match a[i][j] * a[j][i] {
                    0 => 2,
                    1 => 3,
                    2 => 4,
                    3 => 6,
                    p => unreachable!("product {p} of Cartan entries in a finite type"),
                };
            }
        }
    }
    m
}

/// Tits form `B(i,j) = -cos(pi / m(i,j))`; finite iff positive definite.
#[allow(clippy::needless_range_loop)]
fn gram_positive_definite(m: &[Vec<u32>]) -> bool {
    let n = m.len();
    let mut g: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| -(std::f64::consts::PI / m[i][j] as f64).cos())
                .collect()
        })
        .collect();
    // Cholesky in place.
    for k in 0..n {
        let mut d = g[k][k];
        for p in 0..k {
            d -= g[k][p] * g[k][p];
        }
        if d <= 1e-9 {
            return false;
        }
        let d = d.sqrt();
        g[k][k] = d;
        for i in k + 1..n {
            let mut s = g[i][k];
            for p in 0..k {
                s -= g[i][p] * g[k][p];
            }
            g[i][k] = s / d;
        }
    }
    true
}
