use zhuind::cli::run_cli;

fn run(args: &[&str]) -> (i32, String) {
    run_cli(std::iter::once("zhuind").chain(args.iter().copied()))
}

const CATALOG_FILE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/catalog.zh");

#[test]
fn normal_form() {
    assert_eq!(run(&["nf", "a_va1", "h h h"]), (0, "h\n".into()));
    assert_eq!(run(&["nf", "a_va1", "f e"]).1, "1/2 h h - 1/2 h\n");
}

#[test]
fn induce_trivial_into_a2() {
    let (code, out) = run(&["induce", "--via", "va1_to_va2", "--module", "va1_trivial"]);
    assert_eq!(code, 0);
    assert!(out.contains("dim 7"), "{out}");
    assert!(out.contains("decomposition: L(0):1 + L(λ_α):1 + L(λ_β):1"), "{out}");
    assert!(out.contains("label: V_{A2} ⊕ V_{A2+λα} ⊕ V_{A2+λβ}"), "{out}");

    let (_, js) = run(&["--json", "induce", "--via", "va1_to_va2", "--module", "va1_trivial"]);
    let v: serde_json::Value = serde_json::from_str(&js).unwrap();
    assert_eq!(v["dim"], 7);
    assert_eq!(v["voa_label"], "V_{A2} ⊕ V_{A2+λα} ⊕ V_{A2+λβ}");
}

#[test]
fn parametrised_family() {
    let (code, out) = run(&["--json", "induce", "--via", "heis_to_va1", "--module", "heis_mod(-1)"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["voa_label"], "V_{A1+½α}");
    let (_, out) = run(&["--json", "induce", "--via", "heis_to_va1", "--module", "heis_mod(s=5/2)"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 0);
    assert_eq!(v["voa_label"], "0");
}

#[test]
fn restrict_and_char() {
    let (code, out) = run(&["restrict", "--via", "va1_to_va2", "--module", "va2_L_beta"]);
    assert_eq!(code, 0);
    assert!(out.contains("decomposition: trivial:1 + L_half:1"), "{out}");
    let (_, out) = run(&["--json", "char", "--module", "va1_L_half"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["values"]["1"], "2");
    assert_eq!(v["values"]["h h"], "2");
    assert_eq!(v["values"]["h"], "0");
}

#[test]
fn kernel_and_artin() {
    let (code, out) = run(&["--json", "kernel", "--via", "vir_to_va1"]);
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "Exact");
    let (code, out) = run(&["--json", "kernel", "--via", "va1_to_va2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["kernel_dim"], 0);
    let (code, out) = run(&["--json", "artin", "--target", "a_va1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["coefficients"]["trivial"], serde_json::json!(["1", "0"]));
    assert_eq!(v["coefficients"]["L_half"], serde_json::json!(["0", "1/2"]));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["dim", "nosuch"]).0, 2);
    assert_eq!(run(&["kernel", "--via", "nosuch"]).0, 2);
    assert_eq!(run(&["induce", "--via", "heis_to_va1", "--module", "nosuch(1)"]).0, 2);
    assert_eq!(run(&["verify", "ac99"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["nf", "a_va1", "e q"]).0, 2);
    assert_eq!(run(&["artin", "--target", "a_va2"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["verify", "ac01"]).0, 0);
}

#[test]
fn failed_checks_exit_one() {
    let dir = std::env::temp_dir().join(format!("zhuind-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.zh");
    std::fs::write(&bad, "algebra t gens h rel h h - h end\nmodule m over t dim 1 act h = [2] end\n").unwrap();
    let (code, out) = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("module m: violation"), "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn catalog_file_checks() {
    let (code, out) = run(&["check", CATALOG_FILE]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("algebra a_va2: 60 rules"), "{out}");
    let (code, out) = run(&["dim", &format!("{CATALOG_FILE}#a_va1")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("a_va1: 5"), "{out}");
    assert_eq!(run(&["dim", &format!("{CATALOG_FILE}#nosuch")]).0, 2);
}

#[test]
fn json_is_deterministic() {
    for args in [&["--json", "verify", "ac07"][..], &["--json", "dim", "a_va2"], &["--json", "check", CATALOG_FILE]] {
        assert_eq!(run(args), run(args));
    }
    let (_, out) = run(&["--json", "verify", "ac08"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<_> = v[0].as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["actual", "case", "expected", "provenance", "status"]);
}
