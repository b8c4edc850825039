//! Helpers shared by the integration tests.

#![allow(dead_code)]

use std::collections::HashMap;

use oblock::block::make_block;
use oblock::{Block, CartanDatum, Elem, GroupTable};

pub const SWEEP: [&str; 7] = ["A1", "A2", "A3", "B2", "B3", "G2", "A1xA1"];

/// Every block of the type, one per subset of walls.
pub fn blocks(label: &str) -> Vec<Block> {
    let c = CartanDatum::parse(label).unwrap();
    let r = c.rank();
    (0u32..1 << r)
        .map(|mask| {
            let walls: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).collect();
            make_block(c.clone(), &walls).unwrap()
        })
        .collect()
}

pub fn sweep() -> Vec<Block> {
    SWEEP.iter().flat_map(|l| blocks(l)).collect()
}

/// KL polynomials by the right-descent recursion, written against nothing
/// but the multiplication table.
pub struct NaiveKl {
    polys: HashMap<(usize, usize), Vec<i64>>,
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add_shifted(acc: &mut Vec<i64>, p: &[i64], scale: i64, shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, &c) in p.iter().enumerate() {
        acc[i + shift] += scale * c;
    }
}

impl NaiveKl {
    pub fn new(g: &GroupTable) -> Self {
        let mut polys: HashMap<(usize, usize), Vec<i64>> = HashMap::new();
        let mut order: Vec<Elem> = g.elements().collect();
        order.sort_by_key(|&w| g.length(w));
        for &w in &order {
            if w == g.identity() {
                for x in g.elements() {
                    polys.insert(
                        (x.index(), w.index()),
                        if x == w { vec![1] } else { vec![] },
                    );
                }
                continue;
            }
            let s = (0..g.rank()).find(|&s| g.is_right_descent(w, s)).unwrap();
            let v = g.right_mul_simple(w, s);
            let get = |a: Elem, b: Elem, polys: &HashMap<(usize, usize), Vec<i64>>| {
                polys[&(a.index(), b.index())].clone()
            };
            for x in g.elements() {
                let xs = g.right_mul_simple(x, s);
                let c = usize::from(g.length(xs) < g.length(x));
                let mut p = Vec::new();
                add_shifted(&mut p, &get(xs, v, &polys), 1, 1 - c);
                add_shifted(&mut p, &get(x, v, &polys), 1, c);
                for z in g.elements() {
                    if z == v || g.length(z) >= g.length(v) || !g.is_right_descent(z, s) {
                        continue;
                    }
                    let gap = g.length(v) - g.length(z);
                    if gap.is_multiple_of(2) {
                        continue;
                    }
                    let mu = get(z, v, &polys).get((gap - 1) / 2).copied().unwrap_or(0);
                    if mu != 0 {
                        let shift = (g.length(w) - g.length(z)) / 2;
                        add_shifted(&mut p, &get(x, z, &polys), -mu, shift);
                    }
                }
                polys.insert((x.index(), w.index()), trim(p));
            }
        }
        NaiveKl { polys }
    }

    pub fn get(&self, x: Elem, y: Elem) -> &[i64] {
        &self.polys[&(x.index(), y.index())]
    }
}
