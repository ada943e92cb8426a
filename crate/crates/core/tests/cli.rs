//! Command-line behaviour on the bundled data files.

use std::path::PathBuf;
use std::process::Command;

use ptsep::cli::{run, Outcome};

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn ptsep(args: &[&str]) -> Outcome {
    run(std::iter::once("ptsep").chain(args.iter().copied()))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ptsep-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

const AUTOMATA: [&str; 9] = [
    "ab_plus",
    "ba_plus",
    "astar",
    "bplus",
    "aAstar",
    "bAstar",
    "astar_bstar",
    "aa_star",
    "astar_b",
];

#[test]
fn separate_reference_answers() {
    let out = ptsep(&[
        "separate",
        "--method",
        "pt",
        &data("ab_plus.aut"),
        &data("ba_plus.aut"),
    ]);
    assert_eq!((out.code, out.stdout.as_str()), (1, "NOT_SEPARABLE\n"));
    let out = ptsep(&[
        "separate",
        "--method",
        "prefix",
        &data("aAstar.aut"),
        &data("bAstar.aut"),
    ]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "SEPARABLE\n"));
    let out = ptsep(&["separate", &data("astar.aut"), &data("bplus.aut")]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "SEPARABLE\n"));
}

#[test]
fn separate_with_evidence() {
    let out = ptsep(&[
        "separate",
        "--evidence",
        &data("ab_plus.aut"),
        &data("ba_plus.aut"),
    ]);
    assert_eq!(out.code, 1);
    assert_eq!(out.stdout, "NOT_SEPARABLE\nu: ε\nB: a b\nu: ε\n");
    let out = ptsep(&[
        "separate",
        "--evidence",
        &data("astar.aut"),
        &data("bplus.aut"),
    ]);
    assert_eq!(
        (out.code, out.stdout.as_str()),
        (0, "SEPARABLE\nlevel: 1\n")
    );
}

#[test]
fn errors_exit_with_two() {
    let out = ptsep(&["separate", &data("missing.aut"), &data("astar.aut")]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("missing.aut"));
    assert_eq!(
        ptsep(&[
            "separate",
            "--method",
            "regex",
            &data("astar.aut"),
            &data("astar.aut")
        ])
        .code,
        2
    );
    assert_eq!(ptsep(&["frobnicate"]).code, 2);

    let dir = scratch("errors");
    let nfa = dir.join("nfa.aut");
    std::fs::write(
        &nfa,
        "alphabet: a\nstates: 2\ninitial: 0\nfinal: 1\ntrans: 0 a 0\ntrans: 0 a 1\n",
    )
    .unwrap();
    assert_eq!(ptsep(&["is-pt", nfa.to_str().unwrap()]).code, 2);
    let broken = dir.join("broken.aut");
    std::fs::write(&broken, "alphabet: a\nstates: 1\ninitial: 3\n").unwrap();
    assert_eq!(
        ptsep(&["separate", broken.to_str().unwrap(), &data("astar.aut")]).code,
        2
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn piecewise_testability_of_bundled_automata() {
    let expected = [
        ("ab_plus", false),
        ("ba_plus", false),
        ("astar", true),
        ("bplus", true),
        ("aAstar", false),
        ("bAstar", false),
        ("astar_bstar", true),
        ("aa_star", false),
        ("astar_b", true),
    ];
    for (name, pt) in expected {
        let out = ptsep(&["is-pt", &data(&format!("{name}.aut"))]);
        let line = if pt {
            "PIECEWISE_TESTABLE\n"
        } else {
            "NOT_PIECEWISE_TESTABLE\n"
        };
        assert_eq!(
            (out.code, out.stdout.as_str()),
            (!pt as i32, line),
            "{name}"
        );
    }
}

#[test]
fn oracle_reference_answers() {
    let out = ptsep(&[
        "oracle",
        "--max-n",
        "4",
        &data("ab_plus.aut"),
        &data("ba_plus.aut"),
    ]);
    assert_eq!(
        (out.code, out.stdout.as_str()),
        (1, "COMMON_CLASS up to n=4\n")
    );
    let out = ptsep(&["oracle", &data("astar.aut"), &data("bplus.aut")]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "SEPARABLE at n=1\n"));
}

#[test]
fn pt_answers_agree_with_the_oracle_on_bundled_pairs() {
    for f1 in AUTOMATA {
        for f2 in AUTOMATA {
            let (p1, p2) = (data(&format!("{f1}.aut")), data(&format!("{f2}.aut")));
            let decided = ptsep(&["separate", &p1, &p2]);
            let oracle = ptsep(&["oracle", "--max-n", "6", &p1, &p2]);
            assert_eq!(
                decided.code, oracle.code,
                "{f1} {f2}: {} / {}",
                decided.stdout, oracle.stdout
            );
        }
    }
}

#[test]
fn witness_words_share_their_profile() {
    let out = ptsep(&[
        "witness",
        "--n",
        "2",
        &data("ab_plus.aut"),
        &data("ba_plus.aut"),
    ]);
    assert_eq!(out.code, 0);
    let line = |key: &str| {
        out.stdout
            .lines()
            .find_map(|l| l.strip_prefix(key))
            .map(|s| {
                s.split(' ')
                    .map(|t| ptsep::Letter::new(t).unwrap())
                    .collect::<ptsep::Word>()
            })
            .unwrap()
    };
    let (v, w) = (line("v: "), line("w: "));
    assert_eq!(ptsep::subword_profile(&v, 2), ptsep::subword_profile(&w, 2));
    let out = ptsep(&["witness", &data("astar.aut"), &data("bplus.aut")]);
    assert_eq!((out.code, out.stdout.as_str()), (1, "SEPARABLE\n"));
}

#[test]
fn gen_sat_round_trip() {
    let dir = scratch("gen-sat");
    let prefix = dir.join("sample");
    let out = ptsep(&["gen-sat", &data("sample.cnf"), prefix.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let a1 = dir.join("sample.A1.aut");
    let a2 = dir.join("sample.A2.aut");
    assert_eq!(
        out.stdout,
        format!("wrote {}\nwrote {}\n", a1.display(), a2.display())
    );
    let found = ptsep(&["same-content", a1.to_str().unwrap(), a2.to_str().unwrap()]);
    assert_eq!(found.code, 0);
    assert!(found.stdout.starts_with("FOUND\nu: "));

    let out = ptsep(&[
        "gen-sat",
        &data("unsat.cnf"),
        dir.join("unsat").to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0);
    let none = ptsep(&[
        "same-content",
        dir.join("unsat.A1.aut").to_str().unwrap(),
        dir.join("unsat.A2.aut").to_str().unwrap(),
    ]);
    assert_eq!((none.code, none.stdout.as_str()), (1, "NOT_FOUND\n"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn forest_output() {
    let out = ptsep(&["forest", "--chars", "aab"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "height: 2\na a b\n  a a\n    a\n    a\n  b\n");
    assert_eq!(ptsep(&["forest"]).code, 2);
}

#[test]
fn output_is_stable_across_runs() {
    let cases: [&[&str]; 3] = [
        &["separate", "--evidence", "AB", "BA"],
        &["witness", "--n", "3", "AB", "BA"],
        &["oracle", "--max-n", "5", "AB", "BA"],
    ];
    let (ab, ba) = (data("ab_plus.aut"), data("ba_plus.aut"));
    for case in cases {
        let args: Vec<&str> = case
            .iter()
            .map(|&a| match a {
                "AB" => ab.as_str(),
                "BA" => ba.as_str(),
                other => other,
            })
            .collect();
        let first = ptsep(&args);
        for _ in 0..3 {
            assert_eq!(ptsep(&args), first);
        }
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ptsep");
    let out = Command::new(bin)
        .args([
            "separate",
            "--method",
            "prefix",
            &data("aAstar.aut"),
            &data("bAstar.aut"),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "SEPARABLE\n");
    let out = Command::new(bin)
        .args(["separate", &data("ab_plus.aut"), &data("ba_plus.aut")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(bin)
        .args(["is-pt", &data("missing.aut")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}
