use std::path::PathBuf;
use std::process::Command;

use cocycle_cli::{parse_cochain, serialize_cochain};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cocycle")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn fx(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn exit_codes_over_the_corpus() {
    let cases: &[(&[&str], i32)] = &[
        (&["validate", "z2_zero.coc"], 0),
        (&["validate", "z2_indicator.coc"], 0),
        (&["validate", "z3_coboundary.coc"], 0),
        (&["validate", "z4_cocycle.coc"], 0),
        (&["validate", "z3_four_coboundary.coc"], 0),
        (&["validate", "trilinear_witness.coc"], 0),
        (&["validate", "z3_not_cocycle.coc"], 1),
        (&["validate", "bad_duplicate.coc"], 2),
        (&["validate", "bad_range.coc"], 2),
        (&["validate", "bad_key.coc"], 2),
        (&["validate", "bad_normalization.coc"], 2),
        (&["derive", "commutator", "z3_coboundary.coc"], 0),
        (&["derive", "commutator", "z3_not_cocycle.coc"], 1),
        (&["derive", "trilinear", "trilinear_witness.coc"], 0),
        (&["derive", "triext", "z3_four_coboundary.coc"], 0),
        (&["derive", "families", "z3_four_coboundary.coc"], 0),
        (&["derive", "triext", "z3_coboundary.coc"], 2),
        (&["solve", "braiding", "z2_indicator.coc"], 1),
        (&["solve", "braiding", "z2_zero.coc"], 0),
        (&["solve", "braiding", "z3_coboundary.coc"], 0),
        (&["solve", "biext-triv", "z2_indicator.coc"], 1),
        (&["solve", "biext-triv", "z3_coboundary.coc"], 0),
        (&["solve", "alt-triv", "z2_indicator.coc"], 1),
        (&["solve", "alt-triv", "z3_coboundary.coc"], 0),
        (&["solve", "alt-triv", "trilinear_witness.coc"], 1),
        (&["solve", "theta", "z3_four_coboundary.coc"], 0),
        (&["solve", "theta", "z3_four_coboundary.coc", "z2_zero.coc"], 2),
    ];
    for (args, want) in cases {
        let args: Vec<String> = args.iter().map(|a| if a.ends_with(".coc") { fx(a) } else { a.to_string() }).collect();
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, out, err) = run(&refs);
        assert_eq!(code, *want, "{args:?}\nstdout: {out}\nstderr: {err}");
    }
}

#[test]
fn braiding_report_names_the_forced_equation() {
    let (code, out, _) = run(&["solve", "braiding", &fx("z2_indicator.coc")]);
    assert_eq!(code, 1);
    assert!(out.contains("no braiding: forced 1 = 0 at (1,1,1)"), "{out}");
}

#[test]
fn cohomology_prints_invariant_factors() {
    let (code, out, _) = run(&["cohomology", "--B", "2", "--A", "2", "--degree", "3", "--method", "enumerate"]);
    assert_eq!((code, out.trim()), (0, "2"));
    let (code, out, _) = run(&["cohomology", "--B", "2,2", "--A", "2", "--degree", "2"]);
    assert_eq!((code, out.trim()), (0, "2,2,2"));
    let (code, out, _) = run(&["cohomology", "--B", "2", "--A", "3", "--degree", "2"]);
    assert_eq!((code, out.trim()), (0, "1"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["cohomology", "--B", "2"]).0, 2);
    assert_eq!(run(&["cohomology", "--B", "x", "--A", "2", "--degree", "1"]).0, 2);
    assert_eq!(run(&["validate", "/nonexistent/file.coc"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn random_is_deterministic_and_valid() {
    let args = ["random", "--degree", "3", "--B", "2,2", "--A", "2", "--seed", "7", "--class", "any"];
    let (c1, o1, _) = run(&args);
    let (c2, o2, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(o1, o2);
    let c = parse_cochain(&o1).unwrap();
    assert!(c.is_cocycle().passed());
    assert_eq!(serialize_cochain(&c), o1.trim_end().to_string() + "\n");
}

#[test]
fn derived_files_feed_the_checkers() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_string_lossy().into_owned();
    let (code, _, err) = run(&["derive", "commutator", &fx("z3_coboundary.coc"), "--out-dir", &d]);
    assert_eq!(code, 0, "{err}");
    let g = format!("{d}/g.coc");
    let h = format!("{d}/h.coc");
    assert_eq!(run(&["check", "biext", &g, &h]).0, 0);

    let (code, _, _) = run(&["solve", "biext-triv", &g, &h, "--out-dir", &d]);
    assert_eq!(code, 0);
    assert!(parse_cochain(&std::fs::read_to_string(format!("{d}/k.coc")).unwrap()).is_ok());

    let (code, out, _) = run(&["derive", "triext", &fx("z3_four_coboundary.coc"), "--out-dir", &d]);
    assert_eq!(code, 0, "{out}");
    let gs: Vec<String> = ["G1", "G2", "G3"].iter().map(|n| format!("{d}/{n}.coc")).collect();
    let (code, out, _) = run(&["check", "triext", &gs[0], &gs[1], &gs[2]]);
    assert_eq!(code, 0, "{out}");
    let (code, _, _) = run(&["solve", "theta", &gs[0], &gs[1], &gs[2], "--out-dir", &d]);
    assert_eq!(code, 0);
    let (code, out, _) = run(&["check", "picard-family", &fx("z3_four_coboundary.coc"), &format!("{d}/theta.coc")]);
    assert_eq!(code, 0, "{out}");
    // a wrong theta fails the family check with a located violation
    let (code, out, _) = run(&["check", "picard-family", &fx("z3_four_coboundary.coc"), &fx("z3_not_cocycle.coc")]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL at ("), "{out}");
}

#[test]
fn picard_split_of_the_trivial_braiding() {
    let dir = tempfile::tempdir().unwrap();
    let g2 = dir.path().join("g2.coc");
    std::fs::write(&g2, "B = 2\nA = 2\narity = 2\n").unwrap();
    let g2 = g2.to_string_lossy().into_owned();
    assert_eq!(run(&["check", "braiding", &fx("z2_zero.coc"), &g2]).0, 0);
    let (code, out, _) = run(&["solve", "picard-split", &fx("z2_zero.coc"), &g2]);
    assert_eq!(code, 0, "{out}");

    // the symmetric, non-strict braiding is rejected before solving
    std::fs::write(dir.path().join("g2.coc"), "B = 2\nA = 2\narity = 2\n(1,1) : 1\n").unwrap();
    let (code, out, _) = run(&["solve", "picard-split", &fx("z2_zero.coc"), &g2]);
    assert_eq!(code, 1);
    assert!(out.contains("strict: FAIL"), "{out}");
}

#[test]
fn quadralinear_obstruction_is_printed() {
    let mut text = String::from("B = 2,2,2,2\nA = 2\narity = 4\n");
    let els: Vec<[u64; 4]> = (0..16u64).map(|i| [(i >> 3) & 1, (i >> 2) & 1, (i >> 1) & 1, i & 1]).collect();
    for x in &els {
        for y in &els {
            for z in &els {
                for w in &els {
                    if x[0] * y[1] * z[2] * w[3] == 1 {
                        let s = |e: &[u64; 4]| format!("({},{},{},{})", e[0], e[1], e[2], e[3]);
                        text.push_str(&format!("({},{},{},{}) : 1\n", s(x), s(y), s(z), s(w)));
                    }
                }
            }
        }
    }
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("w.coc");
    std::fs::write(&f, text).unwrap();
    let (code, out, _) = run(&["derive", "triext", &f.to_string_lossy()]);
    assert_eq!(code, 1);
    assert!(out.starts_with("obstruction: quadralinear map is nonzero"), "{}", &out[..80.min(out.len())]);
    let body = out.split_once("# obstruction\n").unwrap().1;
    let ell = parse_cochain(body).unwrap();
    let e = |i: usize| {
        let mut c = vec![0; 4];
        c[i] = 1;
        ell.domain().element(c).unwrap()
    };
    assert_eq!(ell.eval(&[e(0), e(1), e(2), e(3)]).unwrap().coords(), &[1]);
}
