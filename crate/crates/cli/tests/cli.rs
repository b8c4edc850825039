use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde::de::DeserializeOwned;

use oblock_cli::records::*;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn oblock_in(cache: &Path, args: &[&str]) -> Run {
    let out: Output = Command::new(env!("CARGO_BIN_EXE_oblock"))
        .args(args)
        .env("OBLOCK_CACHE_DIR", cache)
        .env_remove("RUST_LOG")
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn oblock(args: &[&str]) -> Run {
    let dir = tempfile::tempdir().unwrap();
    oblock_in(dir.path(), args)
}

fn ok(args: &[&str]) -> String {
    let r = oblock(args);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
    r.stdout
}

fn json<T: DeserializeOwned + serde::Serialize>(args: &[&str]) -> T {
    let text = ok(args);
    let record: T = serde_json::from_str(&text).unwrap();
    // Re-serializing gives back the exact output.
    assert_eq!(serde_json::to_string_pretty(&record).unwrap() + "\n", text);
    record
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn golden(name: &str, args: &[&str]) {
    let got = ok(args);
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::create_dir_all(golden_dir()).unwrap();
        fs::write(&path, &got).unwrap();
    }
    let want = fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(
        got,
        want,
        "output of {args:?} differs from {}",
        path.display()
    );
}

#[test]
fn golden_outputs() {
    let cases: &[(&str, &[&str])] = &[
        (
            "tilting_A2_w1_x1.json",
            &["tilting", "--type", "A2", "--walls", "1", "--x", "1"],
        ),
        (
            "tilting_A2_w1_x1.md",
            &[
                "tilting", "--type", "A2", "--walls", "1", "--x", "1", "--format", "md",
            ],
        ),
        (
            "tilting_A2_w1_x1.tex",
            &[
                "tilting", "--type", "A2", "--walls", "1", "--x", "1", "--format", "tex",
            ],
        ),
        ("rigidity_A3.json", &["rigidity", "--type", "A3", "--all"]),
        (
            "rigidity_A3.md",
            &["rigidity", "--type", "A3", "--all", "--format", "md"],
        ),
        (
            "rigidity_A3.tex",
            &["rigidity", "--type", "A3", "--all", "--format", "tex"],
        ),
        (
            "verma_A2_e.md",
            &["verma", "--type", "A2", "--x", "e", "--format", "md"],
        ),
        (
            "verma_A2_e.tex",
            &["verma", "--type", "A2", "--x", "e", "--format", "tex"],
        ),
        (
            "projective_A1_1.md",
            &["projective", "--type", "A1", "--x", "1", "--format", "md"],
        ),
        (
            "hazi_A2_e.md",
            &["hazi", "--type", "A2", "--x", "e", "--format", "md"],
        ),
        ("kl_A3.md", &["kl", "--type", "A3", "--format", "md"]),
        (
            "group_B2_w1.md",
            &["group", "--type", "B2", "--walls", "1", "--format", "md"],
        ),
    ];
    for (name, args) in cases {
        golden(name, args);
    }
}

#[test]
fn md_and_tex_carry_the_json_numbers() {
    let base = ["tilting", "--type", "A3", "--walls", "2", "--x", "2,1"];
    let t: TiltingRecord = json(&base);
    let md = ok(&[&base[..], &["--format", "md"]].concat());
    let tex = ok(&[&base[..], &["--format", "tex"]].concat());
    for e in &t.flag {
        assert!(md.contains(&format!(
            "| Delta({}) | {} | {} |",
            e.element, e.shift, e.mult
        )));
        let sub: String = e.element.split(',').map(|s| format!("s_{{{s}}}")).collect();
        assert!(tex.contains(&format!(
            "$\\Delta_{{{sub}}}$ & ${}$ & ${}$",
            e.shift, e.mult
        )));
    }
    for l in &t.layers {
        assert!(md.contains(&format!("\n| {} | ", l.degree)));
        assert!(tex.contains(&format!("\n${}$ & ", l.degree)));
    }
    assert!(md.contains(&format!("Loewy length: {}", t.loewy_length)));
    assert!(tex.contains(&format!("Loewy length ${}$", t.loewy_length)));

    let r: RigidityRecord = json(&["rigidity", "--type", "B2", "--all"]);
    let md = ok(&["rigidity", "--type", "B2", "--all", "--format", "md"]);
    let tex = ok(&["rigidity", "--type", "B2", "--all", "--format", "tex"]);
    assert_eq!(
        md.lines()
            .filter(|l| l.starts_with("| ") && !l.starts_with("| x "))
            .count(),
        r.rows.len()
    );
    assert_eq!(
        tex.lines()
            .filter(|l| l.ends_with("\\\\") && l.starts_with('$') && !l.starts_with("$x$"))
            .count(),
        r.rows.len()
    );
    for row in &r.rows {
        let verdict = if row.rigid { "yes" } else { "no" };
        assert!(md.contains(&format!(
            "| {} | {} | {} |",
            row.element, row.colength, row.loewy_length
        )));
        assert!(md
            .lines()
            .any(|l| l.starts_with(&format!("| {} |", row.element))
                && l.ends_with(&format!("| {verdict} |"))));
    }
}

#[test]
fn json_round_trips() {
    let g: GroupRecord = json(&["group", "--type", "A2", "--walls", "1"]);
    assert_eq!(g.order, 6);
    assert_eq!(g.block.simples, 3);
    let _: KlPair = json(&["kl", "--type", "A3", "--x", "2", "--y", "2,1,3,2"]);
    let dump: KlDump = json(&["kl", "--type", "B3"]);
    assert_eq!(dump.order, 48);
    let v: VermaRecord = json(&["verma", "--type", "A1", "--x", "e"]);
    assert_eq!(v.layers.len(), 2);
    let _: ProjectiveRecord = json(&["projective", "--type", "G2", "--walls", "2", "--x", "2,1"]);
    let h: HaziRecord = json(&["hazi", "--type", "A2", "--x", "e", "--tie", "reverse"]);
    assert_eq!(h.steps.len(), 5);
    let r: VerifyRecord = json::<VerifyRecord>(&["verify", "--type", "A1"]);
    assert!(r.passed);
}

#[test]
fn spec_examples() {
    let r: RigidityRecord = json(&["rigidity", "--type", "A2", "--all"]);
    assert_eq!(r.rows.len(), 6);
    assert!(r.rows.iter().all(|row| row.rigid));

    let t: TiltingRecord = json(&["tilting", "--type", "A1", "--x", "1"]);
    assert_eq!(
        t.flag,
        vec![FlagEntry {
            element: "1".into(),
            shift: 0,
            mult: 1
        }]
    );
    assert_eq!(t.loewy_length, 1);

    let v: VerifyRecord = json(&["verify", "--type", "A3"]);
    assert!(v.passed);
    assert_eq!(v.reports.len(), 1);

    let r: RigidityRecord = json(&["rigidity", "--type", "A3", "--x", "1,3"]);
    assert_eq!(r.rows.len(), 1);
    assert!(!r.rows[0].rigid);
    assert_eq!(r.rows[0].ringel, "2,1,3,2");
    assert_eq!(r.rows[0].socle_multiplicity, 2);
}

#[test]
fn verify_all_wall_subsets() {
    let v: VerifyRecord = json(&["verify", "--type", "B2", "--all"]);
    assert!(v.passed);
    let walls: Vec<Vec<usize>> = v.reports.iter().map(|r| r.walls.clone()).collect();
    assert_eq!(walls, vec![vec![], vec![1], vec![2], vec![1, 2]]);
}

#[test]
fn fast_mode_gives_the_same_flags() {
    let args = ["rigidity", "--type", "B3", "--walls", "1,3", "--all"];
    assert_eq!(ok(&args), ok(&[&args[..], &["--fast"]].concat()));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["tilting", "--type", "Z3", "--x", "1"][..],
        &["frobnicate"],
        &["tilting", "--type", "A2"],
        &["tilting", "--type", "A2", "--x", "1", "--format", "pdf"],
        &["tilting", "--type", "A2", "--walls", "4", "--x", "1"],
        &["tilting", "--type", "A2", "--walls", "a", "--x", "1"],
        &["tilting", "--type", "A2", "--x", "1,7"],
        &["tilting", "--type", "A2", "--x", "one"],
        &["kl", "--type", "A2", "--x", "1"],
        &["rigidity", "--type", "A2"],
    ] {
        let r = oblock(args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stderr);
        assert!(r.stdout.is_empty());
    }
}

#[test]
fn element_outside_the_block_names_its_representative() {
    let r = oblock(&["tilting", "--type", "A2", "--walls", "1", "--x", "2"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("1,2"), "{}", r.stderr);
}

#[test]
fn corrupt_cache_exits_1_with_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("kl-A2.json");
    fs::write(&path, "{ not json").unwrap();
    let r = oblock_in(dir.path(), &["tilting", "--type", "A2", "--x", "1"]);
    assert_eq!(r.code, 1);
    assert!(
        r.stderr.contains(&path.display().to_string()),
        "{}",
        r.stderr
    );
}

#[test]
fn stale_cache_is_recomputed_with_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let first = oblock_in(dir.path(), &["kl", "--type", "A3"]);
    assert_eq!(first.code, 0);
    let path = dir.path().join("kl-A3.json");
    let fresh = fs::read_to_string(&path).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&fresh).unwrap();
    doc["tool_version"] = "0.0.0-old".into();
    fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let second = oblock_in(dir.path(), &["kl", "--type", "A3"]);
    assert_eq!(second.code, 0);
    assert!(second.stderr.contains("recomputing"), "{}", second.stderr);
    assert_eq!(second.stdout, first.stdout);
    assert_eq!(fs::read_to_string(&path).unwrap(), fresh);
}

#[test]
fn cache_dir_flag_and_no_cache() {
    let dir = tempfile::tempdir().unwrap();
    let explicit = dir.path().join("explicit");
    let d = explicit.to_str().unwrap();
    let r = oblock(&["group", "--type", "G2", "--cache-dir", d]);
    assert_eq!(r.code, 0);
    assert!(explicit.join("kl-G2.json").exists());

    let unused = tempfile::tempdir().unwrap();
    let r = oblock_in(unused.path(), &["group", "--type", "G2", "--no-cache"]);
    assert_eq!(r.code, 0);
    assert_eq!(fs::read_dir(unused.path()).unwrap().count(), 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["rigidity", "--type", "B3", "--all", "--format", "md"];
    assert_eq!(ok(&args), ok(&args));
}

#[test]
fn schemas_list_the_emitted_fields() {
    let schemas = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas");
    let cases: &[(&str, &[&str])] = &[
        ("group", &["group", "--type", "B2"]),
        ("kl-pair", &["kl", "--type", "A2", "--x", "1", "--y", "1,2"]),
        ("kl-table", &["kl", "--type", "A3"]),
        ("verma", &["verma", "--type", "A2", "--x", "1"]),
        ("projective", &["projective", "--type", "A2", "--x", "1"]),
        ("tilting", &["tilting", "--type", "A2", "--x", "1"]),
        ("hazi", &["hazi", "--type", "A2", "--x", "1"]),
        ("rigidity", &["rigidity", "--type", "A2", "--all"]),
        ("verify", &["verify", "--type", "A1"]),
    ];
    for (name, args) in cases {
        let path = schemas.join(format!("{name}.schema.json"));
        let schema: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        let mut required: Vec<String> = schema["required"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap().to_string())
            .collect();
        let out: serde_json::Value = serde_json::from_str(&ok(args)).unwrap();
        let mut keys: Vec<String> = out.as_object().unwrap().keys().cloned().collect();
        required.sort();
        keys.sort();
        assert_eq!(required, keys, "{}", path.display());
    }
}
