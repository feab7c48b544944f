use std::process::Command;

fn sikorski(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sikorski"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn entails(sequent: &str, extra: &[&str]) -> (i32, String, String) {
    let mut args = vec![
        "entails",
        "--lattice",
        "corpus/c3.json",
        "--algebra",
        "powerset:1",
        "--sequent",
        sequent,
    ];
    args.extend_from_slice(extra);
    sikorski(&args)
}

#[test]
fn exit_codes_follow_the_verdict() {
    let (code, out, _) = entails("corpus/c3-up.seq.json", &[]);
    assert_eq!(code, 0);
    assert!(out.starts_with("entailed: yes\n"));

    let (code, out, _) = entails("corpus/c3-down.seq.json", &[]);
    assert_eq!(code, 1);
    assert_eq!(out, "entailed: no\n");
}

#[test]
fn input_errors_exit_two_with_a_message() {
    let (code, out, err) = entails("corpus/c3-foreign.seq.json", &[]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.starts_with("error: ") && err.contains("`z`"), "{err}");

    let (code, _, err) = sikorski(&["validate", "corpus/pentagon.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("not distributive"));

    let (code, _, _) = sikorski(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = sikorski(&["--help"]);
    assert_eq!(code, 0);
    for sub in [
        "validate",
        "entails",
        "models",
        "extend",
        "booleanize",
        "generate",
        "counterexample",
    ] {
        assert!(out.contains(sub), "help lacks {sub}");
    }
}

#[test]
fn heyting_flavor_changes_the_verdict() {
    let base = [
        "entails",
        "--lattice",
        "corpus/lam.json",
        "--algebra",
        "powerset:1",
        "--sequent",
        "corpus/lam-regular.seq.json",
    ];
    let (plain, _, _) = sikorski(&base);
    let mut heyting = base.to_vec();
    heyting.extend_from_slice(&["--flavor", "heyting"]);
    let (code, out, _) = sikorski(&heyting);
    assert_eq!((plain, code), (1, 0));
    assert_eq!(out, "entailed: yes\ntuple=() atom=e1 lhs=1 rhs=1\n");
}

#[test]
fn models_count_matches_list() {
    let args = [
        "models",
        "--lattice",
        "corpus/sq.json",
        "--algebra",
        "powerset:2",
    ];
    let (_, count, _) = sikorski(&[&args[..], &["--count"]].concat());
    let (_, list, _) = sikorski(&[&args[..], &["--list"]].concat());
    assert_eq!(count.trim().parse::<usize>().unwrap(), list.lines().count());
}
