mod common;

use std::sync::Arc;

use proptest::prelude::*;

use common::{blocks, sweep, NaiveKl, SWEEP};
use oblock::block::make_block;
use oblock::kl::{cache_file, kl_table, KlTable};
use oblock::oracle::{brute_force_bruhat, verify_block, Status};
use oblock::tilting::{tilting_character, tilting_flag};
use oblock::{CartanDatum, Elem, GroupTable, KlEngine};

fn group(label: &str) -> Arc<GroupTable> {
    Arc::new(GroupTable::build(CartanDatum::parse(label).unwrap()).unwrap())
}

#[test]
fn verify_passes_on_the_sweep() {
    for b in sweep() {
        let r = verify_block(&b);
        let failures: Vec<_> = r.failures().collect();
        assert!(
            failures.is_empty(),
            "{} {:?}: {failures:?}",
            r.cartan,
            r.walls
        );
        assert!(r.checks.windows(2).all(|w| w[0].id < w[1].id));
    }
}

#[test]
fn verify_report_round_trips() {
    let b = make_block(CartanDatum::parse("A2").unwrap(), &[0]).unwrap();
    let r = verify_block(&b);
    assert_eq!(r.walls, vec![1]);
    let text = serde_json::to_string(&r).unwrap();
    let back: oblock::oracle::VerificationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    assert_eq!(
        r.check("tilting.route_agreement").unwrap().status,
        Status::Pass
    );
}

#[test]
fn engine_matches_naive_recursion() {
    for label in SWEEP.iter().chain(&["A1xA2", "C3"]) {
        let g = group(label);
        let naive = NaiveKl::new(&g);
        let kl = KlEngine::new(g.clone());
        for y in g.elements() {
            for x in g.elements() {
                assert_eq!(
                    kl.polynomial(x, y).coeffs(),
                    naive.get(x, y),
                    "{label}: P({}, {})",
                    g.format_word(x),
                    g.format_word(y)
                );
            }
        }
    }
}

#[test]
fn bruhat_matches_subwords_exhaustively() {
    for label in ["A3", "B3", "C3", "A1xA2"] {
        let g = group(label);
        for y in g.elements() {
            for x in g.elements() {
                assert_eq!(g.bruhat_leq(x, y), brute_force_bruhat(&g, x, y));
            }
        }
    }
}

#[test]
fn parallel_and_sequential_fill_agree() {
    let g = group("B3");
    let a = KlEngine::new(g.clone());
    a.fill(true);
    let b = KlEngine::new(g.clone());
    b.fill(false);
    let doc = |e: KlEngine| {
        serde_json::to_string(&KlTable::from_engine(Arc::new(e)).to_document()).unwrap()
    };
    assert_eq!(doc(a), doc(b));
}

#[test]
fn cache_reload_is_identical() {
    let dir = tempfile::tempdir().unwrap();
    let g = group("A3");
    let path = cache_file(dir.path(), &g);
    let first = kl_table(g.clone(), Some(&path)).unwrap();
    let bytes = std::fs::read(&path).unwrap();
    let second = kl_table(g.clone(), Some(&path)).unwrap();
    assert_eq!(std::fs::read(&path).unwrap(), bytes);
    for y in g.elements() {
        for x in g.elements() {
            assert_eq!(first.get(x, y), second.get(x, y));
        }
    }
}

#[test]
fn degenerate_blocks_are_trivial() {
    for label in SWEEP {
        let all = blocks(label).pop().unwrap();
        assert_eq!(all.reps().len(), 1);
        let w0 = all.group().w0();
        assert_eq!(all.reps()[0], w0);
        let f = tilting_flag(&all, w0).unwrap();
        assert_eq!(f.iter().collect::<Vec<_>>(), vec![(w0, 0, 1)]);
    }
}

fn block_strategy() -> impl Strategy<Value = (&'static str, u32, usize)> {
    (
        prop::sample::select(SWEEP.to_vec()),
        any::<u32>(),
        any::<usize>(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tilting_shape((label, mask, pick) in block_strategy()) {
        let c = CartanDatum::parse(label).unwrap();
        let walls: Vec<usize> = (0..c.rank()).filter(|i| mask >> i & 1 == 1).collect();
        let b = make_block(c, &walls).unwrap();
        let x = b.reps()[pick % b.reps().len()];
        let g = b.group();
        let f = tilting_flag(&b, x).unwrap();
        prop_assert_eq!(f.mult(x, 0), 1);
        for (y, l, _) in f.iter() {
            prop_assert!(y == x || (g.bruhat_lt(x, y) && l <= -1));
            prop_assert!(b.contains(y));
        }
        let ch = tilting_character(&b, x).unwrap();
        let l = b.colength(x) as i32;
        prop_assert!(ch.is_symmetric());
        prop_assert_eq!(ch.min_degree(), Some(-l));
        prop_assert_eq!(ch.max_degree(), Some(l));
        prop_assert_eq!(ch.mult(g.w0(), l), 1);
    }

    #[test]
    fn words_round_trip((label, _mask, pick) in block_strategy()) {
        let g = group(label);
        let w = g.elem(pick % g.order()).unwrap();
        let text = g.format_word(w);
        prop_assert_eq!(g.parse_word(&text).unwrap(), w);
        let word: Vec<usize> = g.word(w).iter().map(|&s| s as usize).collect();
        prop_assert_eq!(word.len(), g.length(w));
        prop_assert_eq!(g.normalize_word(&word).unwrap(), w);
    }

    #[test]
    fn multiplication_is_associative(label in prop::sample::select(SWEEP.to_vec()), a: usize, b: usize, c: usize) {
        let g = group(label);
        let n = g.order();
        let (a, b, c) = (g.elem(a % n).unwrap(), g.elem(b % n).unwrap(), g.elem(c % n).unwrap());
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inverse(a)), Elem::IDENTITY);
    }
}
