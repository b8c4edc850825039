use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::coxeter::{Elem, GroupTable};
use crate::poly::PolynomialQ;

/// One column `y` of the KL table: `P_{x,y}` for every `x` (zero when
/// `x` is not below `y`) and the nonzero `mu(z, y)` for `z < y`.
#[derive(Debug)]
pub(crate) struct Column {
    pub(crate) polys: Vec<PolynomialQ>,
    pub(crate) mu: Vec<(Elem, i64)>,
}

impl Column {
    pub(crate) fn new(g: &GroupTable, y: Elem, polys: Vec<PolynomialQ>) -> Self {
        let ly = g.length(y);
        let mut mu = Vec::new();
        for z in g.lower_interval(y).iter() {
            let ze = g.elem(z).expect("index in range");
            let gap = ly - g.length(ze);
            if gap % 2 == 1 {
                let c = polys[z].coeff((gap - 1) / 2);
                if c != 0 {
                    mu.push((ze, c));
                }
            }
        }
        Column { polys, mu }
    }
}

/// Kazhdan-Lusztig polynomials of a finite Weyl group, computed column by
/// column on demand and memoized.
///
/// Columns live in `OnceLock`s, so concurrent readers share finished columns
/// and a column is inserted exactly once. Every column is a pure function of
/// the group, hence the table does not depend on evaluation order.
pub struct KlEngine {
    group: Arc<GroupTable>,
    columns: Vec<OnceLock<Column>>,
}

impl std::fmt::Debug for KlEngine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("KlEngine")
            .field("group", &self.group.label())
            .field(
                "computed_columns",
                &self.columns.iter().filter(|c| c.get().is_some()).count(),
            )
            .finish()
    }
}

impl KlEngine {
    pub fn new(group: Arc<GroupTable>) -> Self {
        let columns = (0..group.order()).map(|_| OnceLock::new()).collect();
        KlEngine { group, columns }
    }

    pub(crate) fn with_columns(group: Arc<GroupTable>, columns: Vec<Column>) -> Self {
        let columns = columns
            .into_iter()
            .map(|c| {
                let cell = OnceLock::new();
                let _ = cell.set(c);
                cell
            })
            .collect();
        KlEngine { group, columns }
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    /// `P_{x,y}`; the zero polynomial when `x` is not below `y`.
    pub fn polynomial(&self, x: Elem, y: Elem) -> &PolynomialQ {
        &self.column(y).polys[x.index()]
    }

    /// Coefficient of `q^((l(y)-l(x)-1)/2)` in `P_{x,y}` for an odd length
    /// gap, zero otherwise.
    pub fn mu(&self, x: Elem, y: Elem) -> i64 {
        let g = &self.group;
        let (lx, ly) = (g.length(x), g.length(y));
        if ly <= lx || (ly - lx) % 2 == 0 {
            return 0;
        }
        self.polynomial(x, y).coeff((ly - lx - 1) / 2)
    }

    /// Forces every column, fanning out across threads. Columns are
    /// visited from the top of the enumeration down so long columns start
    /// early; the result is identical to a sequential fill.
    pub fn fill(&self, parallel: bool) {
        let n = self.group.order();
        if parallel {
            (0..n).into_par_iter().rev().for_each(|y| {
                self.column(Elem(y as u32));
            });
        } else {
            for y in 0..n {
                self.column(Elem(y as u32));
            }
        }
    }

    pub(crate) fn column(&self, y: Elem) -> &Column {
        if let Some(c) = self.columns[y.index()].get() {
            return c;
        }
        let col = self.compute_column(y);
        self.columns[y.index()].get_or_init(|| col)
    }

    /// The classical recursion. With `s` a left descent of `y`, `v = sy`,
    /// `c = [sx < x]`:
    ///
    /// `P_{x,y} = q^(1-c) P_{sx,v} + q^c P_{x,v}
    ///            - sum_{z < v, sz < z} mu(z,v) q^((l(y)-l(z))/2) P_{x,z}`.
    fn compute_column(&self, y: Elem) -> Column {
        let g = &*self.group;
        let n = g.order();
        let mut polys = vec![PolynomialQ::zero(); n];
        let Some(s) = g.first_left_descent(y) else {
            polys[y.index()] = PolynomialQ::one();
            return Column::new(g, y, polys);
        };
        let v = g.left_mul_simple(s, y);
        let ly = g.length(y);
        let col_v = self.column(v);
        let correction: Vec<(&Column, i64, usize)> = col_v
            .mu
            .iter()
            .filter(|&&(z, _)| g.is_left_descent(z, s))
            .map(|&(z, m)| (self.column(z), m, (ly - g.length(z)) / 2))
            .collect();

        for xi in g.lower_interval(y).iter() {
            let x = Elem(xi as u32);
            if ly - g.length(x) <= 2 {
                polys[xi] = PolynomialQ::one();
                continue;
            }
            let sx = g.left_mul_simple(s, x);
            let c = usize::from(g.is_left_descent(x, s));
            let mut p = PolynomialQ::zero();
            p.add_scaled_shifted(&col_v.polys[sx.index()], 1, 1 - c);
            p.add_scaled_shifted(&col_v.polys[xi], 1, c);
            for &(col_z, m, shift) in &correction {
                p.add_scaled_shifted(&col_z.polys[xi], -m, shift);
            }
            polys[xi] = p;
        }
        Column::new(g, y, polys)
    }
}
