use std::path::{Path, PathBuf};
use std::process::Command;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn legcob(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_legcob"))
        .current_dir(root())
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn value<'a>(report: &'a str, key: &str) -> Option<&'a str> {
    report
        .lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix(' '))
}

#[test]
fn tb_of_eye() {
    assert_eq!(legcob(&["tb", "L1 R1"]).0, 0);
    assert_eq!(legcob(&["tb", "L1 R1"]).1, "tb -1\n");
}

#[test]
fn invariants_of_trefoil() {
    let (code, out, _) = legcob(&["invariants", "L1 L1 X2 X2 X2 R1 R1"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "tb"), Some("1"));
    assert_eq!(value(&out, "rot"), Some("0"));
    assert_eq!(value(&out, "components"), Some("1"));
}

#[test]
fn qp_disk_is_non_collarable() {
    let (code, out, _) = legcob(&["obstruct", "qp-disk", "fixtures/m820.qp"]);
    assert_eq!(code, 1);
    assert_eq!(value(&out, "status"), Some("NonCollarable"));
    assert_eq!(value(&out, "tb_bound"), Some("-2"));
    assert_eq!(value(&out, "reason"), Some("tb bound −2 < −1 = 2·0−1"));
}

#[test]
fn missing_file_is_exit_two() {
    let (code, _, err) = legcob(&["poly", "tb-bound", "fixtures/nope.pd"]);
    assert_eq!(code, 2);
    assert!(err.contains("nope.pd"));
}

#[test]
fn usage_errors_are_exit_two() {
    assert_eq!(legcob(&[]).0, 2);
    assert_eq!(legcob(&["frobnicate"]).0, 2);
    assert_eq!(legcob(&["moves", "apply", "L1 R1", "Twist", "0"]).0, 2);
}

#[test]
fn every_subcommand_help_names_its_module() {
    let cases: &[(&[&str], &str)] = &[
        (&["tb"], "[front]"),
        (&["invariants"], "[front]"),
        (&["pd"], "[front]"),
        (&["render"], "[render]"),
        (&["moves", "list"], "[moves]"),
        (&["moves", "apply"], "[moves]"),
        (&["cobordism", "verify"], "[moves]"),
        (&["cobordism", "search"], "[moves]"),
        (&["braid", "expand"], "[braid]"),
        (&["braid", "surface"], "[braid]"),
        (&["braid", "closure-pd"], "[braid]"),
        (&["poly", "jones"], "[polys]"),
        (&["poly", "kauffman"], "[polys]"),
        (&["poly", "tb-bound"], "[polys]"),
        (&["obstruct", "filling"], "[obstruct]"),
        (&["obstruct", "collar"], "[obstruct]"),
        (&["obstruct", "qp-disk"], "[obstruct]"),
        (&["genfam", "slice"], "[genfam]"),
        (&["genfam", "sympcheck"], "[genfam]"),
        (&["table", "list"], "[knot table]"),
        (&["table", "check"], "[knot table]"),
        (&["table", "pd"], "[knot table]"),
    ];
    for (path, tag) in cases {
        let mut args = path.to_vec();
        args.push("--help");
        let (code, out, _) = legcob(&args);
        assert_eq!(code, 0, "{path:?}");
        assert!(out.contains(tag), "{path:?} help lacks {tag}:\n{out}");
    }
}

#[test]
fn braid_pipeline() {
    let (code, out, _) = legcob(&["braid", "expand", "fixtures/m820.qp"]);
    assert_eq!(code, 0);
    assert_eq!(out, "B3\n-1 -1 -1 2 1 1 1 2\n");

    let (_, out, _) = legcob(&["braid", "surface", "fixtures/m820.qp"]);
    assert_eq!(value(&out, "chi"), Some("1"));
    assert_eq!(value(&out, "permutation"), Some("2 3 1"));
    assert_eq!(value(&out, "is_disk"), Some("true"));

    let (code, out, _) = legcob(&["braid", "closure-pd", "fixtures/m820.braid"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        std::fs::read_to_string(root().join("fixtures/m820_closure.pd")).unwrap()
    );
}

#[test]
fn polynomials_of_trefoil() {
    let (_, out, _) = legcob(&["poly", "jones", "--t", "fixtures/trefoil.pd"]);
    assert_eq!(out, "1:1\n3:1\n4:-1\n");
    let (_, out, _) = legcob(&["poly", "tb-bound", "fixtures/trefoil.pd"]);
    assert_eq!(out, "tb_bound 1\n");
    let (_, out, _) = legcob(&["poly", "tb-bound", "fixtures/unknot.pd"]);
    assert_eq!(out, "tb_bound -1\n");
    let (code, out, _) = legcob(&["poly", "kauffman", "--table", "fixtures/trefoil.pd"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 6);
}

#[test]
fn obstruct_verdicts() {
    let (code, out, _) = legcob(&[
        "obstruct", "filling", "--tb", "1", "--rot", "0", "--genus", "1", "--gs", "0",
    ]);
    assert_eq!(code, 1);
    assert_eq!(value(&out, "status"), Some("Violation"));

    let (code, out, _) = legcob(&[
        "obstruct", "filling", "--tb", "-1", "--rot", "0", "--genus", "0",
    ]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "status"), Some("Consistent"));

    let (code, out, _) = legcob(&["obstruct", "collar", "--genus", "1", "--concave-genus", "0"]);
    assert_eq!(code, 1);
    assert_eq!(value(&out, "reason"), Some("4-ball genus mismatch: 0 ≠ 1"));
}

#[test]
fn scripts_verify() {
    let (code, out, _) = legcob(&["cobordism", "verify", "fixtures/birth.script"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "chi"), Some("1"));
    assert_eq!(value(&out, "tb_top"), Some("-1"));

    let (code, out, _) = legcob(&["cobordism", "verify", "fixtures/genus_one.script"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "genus"), Some("1"));
    assert_eq!(value(&out, "tb_top"), Some("1"));
    assert_eq!(value(&out, "ok"), Some("true"));
}

#[test]
fn bad_script_step_is_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.script");
    std::fs::write(&path, "FRONT L1 R1\nMOVE SaddleUp 0 0\n").unwrap();
    let (code, _, err) = legcob(&["cobordism", "verify", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("step 0"), "{err}");
}

#[test]
fn search_finds_a_merge() {
    let (code, out, _) = legcob(&[
        "cobordism",
        "search",
        "L1 R1 L1 R1",
        "L1 R1",
        "--max-depth",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "status"), Some("found"));
    assert!(out.contains("MOVE SaddleUp"));

    let (code, out, _) = legcob(&["cobordism", "search", "L1 R1", "", "--max-depth", "2"]);
    assert_eq!(code, 1);
    assert_eq!(value(&out, "status"), Some("not-found-within-budget"));
}

#[test]
fn moves_listing() {
    let (code, out, _) = legcob(&["moves", "list", "L1 R1 L1 R1"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "SaddleUp 1 0"));
    assert!(!legcob(&["moves", "list", "L1 R1"]).1.contains("SaddleUp"));
}

#[test]
fn render_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.svg");
    let (code, out, _) = legcob(&[
        "render",
        "L1 L1 X2 X2 X2 R1 R1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!((code, out.as_str()), (0, ""));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches(r#"class="crossing""#).count(), 3);
    let (_, ascii, _) = legcob(&["render", "L1 R1", "--format", "ascii"]);
    assert_eq!(ascii, "    /---\\\n   <     >\n    \\---/\n");
}

#[test]
fn genfam_slice_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("slice.csv");
    let (code, out, _) = legcob(&[
        "genfam",
        "slice",
        "--s",
        "0.9",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "cusps"), Some("-1 1"));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("t,z,branch\n"));
    let (_, out, _) = legcob(&["genfam", "slice", "--s", "0.5"]);
    assert_eq!(value(&out, "birth_moment"), Some("true"));
    assert_eq!(legcob(&["genfam", "slice", "--s", "0"]).0, 2);
}

#[test]
fn genfam_sympcheck_exit_codes() {
    let (code, out, _) = legcob(&["genfam", "sympcheck", "--map", "rescaled"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "ordering"), Some("x y t z"));
    assert_eq!(legcob(&["genfam", "sympcheck"]).0, 1);
}

#[test]
fn table_commands() {
    let (code, out, _) = legcob(&["table", "check"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().count(), 7);
    let (code, out, _) = legcob(&["table", "pd", "8_20", "--mirror"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 8);
    assert_eq!(legcob(&["table", "pd", "9_42"]).0, 2);
    let (code, _, _) = legcob(&["--fixtures", "nowhere", "table", "list"]);
    assert_eq!(code, 2);
}

#[test]
fn crossing_cap_is_enforced() {
    let (code, _, err) = legcob(&[
        "--crossing-cap",
        "4",
        "poly",
        "jones",
        "fixtures/m820_closure.pd",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("cap"));
}
