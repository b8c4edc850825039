//! Acceptance suite: one PASS/FAIL line per criterion. Every tolerance is
//! exact equality; criterion 10 is a stretch goal and never gates.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use common::{sweep, NaiveKl};
use oblock::block::make_block;
use oblock::coxeter::GroupTable;
use oblock::oracle::{brute_force_bruhat_table, dihedral_kl_oracle, verify_block, Status};
use oblock::tilting::{
    dim_end_tilting, hazi_layers, loewy_length_tilting, rigidity_report, ringel_route,
    tilting_character, trace_domination, translation_route, TieBreak,
};
use oblock::{Block, CartanDatum, Elem, KlEngine};

/// Time budget for criterion 1.
const LOEWY_BUDGET: Duration = Duration::from_secs(120);
const STRETCH_SAMPLE: usize = 20;
const STRETCH_SEED: u64 = 0x0b10c;
const STRETCH_BUDGET: Duration = Duration::from_secs(600);

type Verdict = Result<String, String>;
type Criterion<'a> = (&'static str, bool, Box<dyn Fn() -> Verdict + 'a>);

fn first_failure<'a, T>(
    blocks: impl IntoIterator<Item = &'a Block>,
    mut f: impl FnMut(&Block, Elem) -> Result<Option<T>, String>,
) -> Option<(String, T)>
where
    T: std::fmt::Debug,
{
    for b in blocks {
        for &x in b.reps() {
            match f(b, x) {
                Ok(None) => {}
                Ok(Some(t)) => return Some((describe(b, x), t)),
                Err(e) => panic!("{}: {e}", describe(b, x)),
            }
        }
    }
    None
}

fn describe(b: &Block, x: Elem) -> String {
    format!(
        "{} walls {:?} x = {}",
        b.group().label(),
        b.walls_one_based(),
        b.group().format_word(x)
    )
}

fn count<'a>(blocks: impl IntoIterator<Item = &'a Block>) -> usize {
    blocks.into_iter().map(|b| b.reps().len()).sum()
}

fn loewy(blocks: &[Block]) -> Verdict {
    let start = Instant::now();
    let bad = first_failure(blocks, |b, x| {
        let ll = loewy_length_tilting(b, x).map_err(|e| e.to_string())?;
        let expect = 2 * b.colength(x) + 1;
        Ok((ll != expect).then_some((expect, ll)))
    });
    let elapsed = start.elapsed();
    match bad {
        Some((at, (e, a))) => Err(format!("{at}: expected {e}, got {a}")),
        None if elapsed > LOEWY_BUDGET => Err(format!("exact on the sweep but took {elapsed:?}")),
        None => Ok(format!("{} tilting modules in {elapsed:?}", count(blocks))),
    }
}

fn verma_length(blocks: &[Block]) -> Verdict {
    let bad = first_failure(blocks, |b, x| {
        let layers = b.verma_layers(x).map_err(|e| e.to_string())?;
        let expect = b.colength(x) + 1;
        let got = (layers.layer_count(), layers.graded_length());
        Ok((got != (expect, expect)).then_some((expect, got)))
    });
    match bad {
        Some((at, (e, a))) => Err(format!("{at}: expected {e}, got {a:?}")),
        None => Ok(format!("{} Verma modules", count(blocks))),
    }
}

fn rigidity_criteria(blocks: &[Block]) -> Verdict {
    let bad = first_failure(blocks, |b, x| {
        let r = rigidity_report(b, x).map_err(|e| e.to_string())?;
        if !r.agreement {
            return Ok(Some(format!(
                "conditions socle {} multfree {} dominant {}",
                r.cond_socle, r.cond_multfree, r.cond_dominant
            )));
        }
        let t = dim_end_tilting(b, x).map_err(|e| e.to_string())?;
        let p = b
            .dim_end_projective(b.ringel_twist(x))
            .map_err(|e| e.to_string())?;
        Ok((t != p).then(|| format!("dim End T = {t}, dim End P = {p}")))
    });
    match bad {
        Some((at, what)) => Err(format!("{at}: {what}")),
        None => Ok(format!(
            "{} elements, three conditions and Ringel dimensions agree",
            count(blocks)
        )),
    }
}

fn rigidity_landscape() -> Verdict {
    for label in ["A1", "A2", "B2", "G2"] {
        let b = make_block(CartanDatum::parse(label).unwrap(), &[]).unwrap();
        for &x in b.reps() {
            let r = rigidity_report(&b, x).map_err(|e| e.to_string())?;
            if r.verdict != Some(true) {
                return Err(format!("{} not rigid", describe(&b, x)));
            }
        }
    }
    let b = make_block(CartanDatum::parse("A3").unwrap(), &[]).unwrap();
    let g = b.group().clone();
    let naive = NaiveKl::new(&g);
    let mut computed = Vec::new();
    let mut predicted = Vec::new();
    for &x in b.reps() {
        if rigidity_report(&b, x).map_err(|e| e.to_string())?.verdict != Some(true) {
            computed.push(x);
        }
        let p: i64 = naive.get(g.identity(), g.mul(g.w0(), x)).iter().sum();
        if p > 1 {
            predicted.push(x);
        }
    }
    let words = |v: &[Elem]| v.iter().map(|&x| g.format_word(x)).collect::<Vec<_>>();
    let witness = g.mul(g.w0(), g.parse_word("2,1,3,2").unwrap());
    let socle = rigidity_report(&b, witness)
        .map_err(|e| e.to_string())?
        .socle_multiplicity;
    if computed.is_empty() || computed != predicted {
        return Err(format!(
            "non-rigid {:?}, predicted {:?}",
            words(&computed),
            words(&predicted)
        ));
    }
    if !computed.contains(&witness) || socle != 2 {
        return Err(format!(
            "w0*2132 = {} missing or socle {socle}",
            g.format_word(witness)
        ));
    }
    Ok(format!(
        "A3 non-rigid set {:?} equals the KL prediction",
        words(&computed)
    ))
}

fn hazi(blocks: &[Block]) -> Verdict {
    for tie in [TieBreak::Forward, TieBreak::Reverse] {
        let bad = first_failure(blocks, |b, x| {
            let ch = tilting_character(b, x).map_err(|e| e.to_string())?;
            Ok(match oblock::tilting::balance(b, x, tie) {
                Ok(trace) => (trace.layers != ch).then(|| "layers differ".to_string()),
                Err(e) => Some(e.to_string()),
            })
        });
        if let Some((at, what)) = bad {
            return Err(format!("{tie:?}: {at}: {what}"));
        }
    }
    // The checked entry point also compares the added Vermas with the flag.
    let bad = first_failure(blocks, |b, x| {
        Ok(hazi_layers(b, x, TieBreak::Forward)
            .err()
            .map(|e| e.to_string()))
    });
    match bad {
        Some((at, what)) => Err(format!("{at}: {what}")),
        None => Ok(format!(
            "{} tilting modules, both tie-breaks",
            count(blocks)
        )),
    }
}

fn self_duality(blocks: &[Block]) -> Verdict {
    let bad = first_failure(blocks, |b, x| {
        let ch = tilting_character(b, x).map_err(|e| e.to_string())?;
        Ok(ch.asymmetry_witness().map(|(z, d)| {
            format!(
                "L({}) {} times in degree {d}, {} in {}",
                b.group().format_word(z),
                ch.mult(z, d),
                ch.mult(z, -d),
                -d
            )
        }))
    });
    match bad {
        Some((at, what)) => Err(format!("{at}: {what}")),
        None => Ok(format!("{} tilting characters symmetric", count(blocks))),
    }
}

fn translation(blocks: &[Block]) -> Verdict {
    let singular: Vec<&Block> = blocks.iter().filter(|b| !b.is_regular()).collect();
    let bad = first_failure(singular.iter().copied(), |b, x| {
        let r = ringel_route(b, x).map_err(|e| e.to_string())?;
        let t = translation_route(b, x).map_err(|e| e.to_string())?;
        Ok((r != t).then_some(()))
    });
    match bad {
        Some((at, ())) => Err(format!("{at}: routes differ")),
        None => Ok(format!(
            "{} singular blocks, {} flags",
            singular.len(),
            count(singular.iter().copied())
        )),
    }
}

fn oracles() -> Verdict {
    let a1 = make_block(CartanDatum::parse("A1").unwrap(), &[]).unwrap();
    let sl2 = verify_block(&a1);
    match sl2.check("sl2.oracle") {
        Some(c) if c.status == Status::Pass => {}
        other => return Err(format!("sl2 dataset: {other:?}")),
    }
    let mut dihedral = 0;
    for label in ["A1", "A2", "B2", "G2", "A1xA1"] {
        let g = Arc::new(GroupTable::build(CartanDatum::parse(label).unwrap()).unwrap());
        let kl = KlEngine::new(g.clone());
        let oracle = dihedral_kl_oracle(&g).map_err(|e| e.to_string())?;
        for y in g.elements() {
            for x in g.elements() {
                if kl.polynomial(x, y) != oracle.get(x, y) {
                    return Err(format!(
                        "{label}: P({}, {}) = {}, closed form {}",
                        g.format_word(x),
                        g.format_word(y),
                        kl.polynomial(x, y),
                        oracle.get(x, y)
                    ));
                }
                dihedral += 1;
            }
        }
    }
    let mut bruhat = 0;
    for label in [
        "A1", "A2", "A3", "B2", "B3", "G2", "A1xA1", "A1xA2", "A1xA1xA1",
    ] {
        let g = GroupTable::build(CartanDatum::parse(label).unwrap()).unwrap();
        let table = brute_force_bruhat_table(&g);
        for y in g.elements() {
            for x in g.elements() {
                if table[y.index()][x.index()] != g.bruhat_leq(x, y) {
                    return Err(format!(
                        "{label}: Bruhat disagrees on ({}, {})",
                        g.format_word(x),
                        g.format_word(y)
                    ));
                }
                bruhat += 1;
            }
        }
    }
    Ok(format!(
        "sl2 exact, {dihedral} dihedral KL entries, {bruhat} Bruhat pairs"
    ))
}

fn trace(blocks: &[Block]) -> Verdict {
    let bad = first_failure(blocks, |b, x| {
        let d = trace_domination(b, x).map_err(|e| e.to_string())?;
        if !d.ungraded {
            let z = d.witness.unwrap();
            return Ok(Some(format!("exceeds at L({})", b.group().format_word(z))));
        }
        let top = b.ringel_twist(x) == b.group().w0();
        Ok((top && !d.equal).then(|| "T(x) and P(w0) differ".to_string()))
    });
    match bad {
        Some((at, what)) => Err(format!("{at}: {what}")),
        None => Ok(format!("{} tilting modules dominated", count(blocks))),
    }
}

fn f4_stretch() -> Verdict {
    let start = Instant::now();
    let c = CartanDatum::parse("F4").unwrap();
    let g = Arc::new(GroupTable::build(c).map_err(|e| e.to_string())?);
    let kl = Arc::new(KlEngine::new(g.clone()));
    kl.fill(true);
    let table_time = start.elapsed();
    let b = Block::new(kl, &[]).map_err(|e| e.to_string())?;
    let mut rng = StdRng::seed_from_u64(STRETCH_SEED);
    let sample: Vec<Elem> = b
        .reps()
        .choose_multiple(&mut rng, STRETCH_SAMPLE)
        .copied()
        .collect();
    for &x in &sample {
        let at = || describe(&b, x);
        let ll = loewy_length_tilting(&b, x).map_err(|e| format!("{}: {e}", at()))?;
        if ll != 2 * b.colength(x) + 1 {
            return Err(format!("{}: Loewy length {ll}", at()));
        }
        let v = b.verma_layers(x).map_err(|e| e.to_string())?;
        if v.layer_count() != b.colength(x) + 1 {
            return Err(format!("{}: Verma layers {}", at(), v.layer_count()));
        }
        rigidity_report(&b, x).map_err(|e| format!("{}: {e}", at()))?;
        if dim_end_tilting(&b, x).map_err(|e| e.to_string())?
            != b.dim_end_projective(b.ringel_twist(x))
                .map_err(|e| e.to_string())?
        {
            return Err(format!("{}: Ringel dimensions differ", at()));
        }
        let ch = tilting_character(&b, x).map_err(|e| e.to_string())?;
        if !ch.is_symmetric() {
            return Err(format!("{}: not self-dual", at()));
        }
        for tie in [TieBreak::Forward, TieBreak::Reverse] {
            hazi_layers(&b, x, tie).map_err(|e| format!("{}: {e}", at()))?;
        }
    }
    let elapsed = start.elapsed();
    if elapsed > STRETCH_BUDGET {
        return Err(format!("passed but took {elapsed:?}"));
    }
    Ok(format!(
        "KL table of {} elements in {table_time:?}, {} sampled x in {elapsed:?}",
        g.order(),
        sample.len()
    ))
}

fn main() {
    let blocks = sweep();
    let criteria: Vec<Criterion> = vec![
        (
            "1 Loewy length of tilting modules",
            true,
            Box::new(|| loewy(&blocks)),
        ),
        (
            "2 graded length of Verma modules",
            true,
            Box::new(|| verma_length(&blocks)),
        ),
        (
            "3 rigidity criteria agree",
            true,
            Box::new(|| rigidity_criteria(&blocks)),
        ),
        ("4 rigidity landscape", true, Box::new(rigidity_landscape)),
        ("5 layer balancing", true, Box::new(|| hazi(&blocks))),
        (
            "6 graded self-duality",
            true,
            Box::new(|| self_duality(&blocks)),
        ),
        (
            "7 translation consistency",
            true,
            Box::new(|| translation(&blocks)),
        ),
        ("8 oracle equality", true, Box::new(oracles)),
        ("9 trace domination", true, Box::new(|| trace(&blocks))),
        ("10 F4 stretch", false, Box::new(f4_stretch)),
    ];
    let skip_stretch = std::env::var_os("OBLOCK_SKIP_STRETCH").is_some();
    let mut failed = 0;
    for (name, gating, run) in &criteria {
        if !gating && skip_stretch {
            println!("SKIP criterion {name}: OBLOCK_SKIP_STRETCH set");
            continue;
        }
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                let tag = if *gating { "FAIL" } else { "FAIL (not gating)" };
                println!("{tag} criterion {name}: {detail}");
                if *gating {
                    failed += 1;
                }
            }
        }
    }
    println!(
        "acceptance: {} gating criteria, {failed} failed; sweep {} blocks of {}",
        criteria.iter().filter(|c| c.1).count(),
        blocks.len(),
        common::SWEEP.join(", ")
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
