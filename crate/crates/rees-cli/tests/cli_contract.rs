//! Command-line contract tests: JSON round-trips for every payload kind,
//! canonical-output determinism, exit codes, and input normalization.

use rees_cli::{to_canonical_json, OutputDocument, Payload};

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["rees"];
    argv.extend_from_slice(args);
    let code = rees_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("stdout is UTF-8"),
        String::from_utf8(err).expect("stderr is UTF-8"),
    )
}

/// Parse a JSON document, re-serialize canonically, and require a fixed
/// point: parse(serialize(x)) = x and serialize(parse(text)) = text.
fn assert_round_trip(text: &str) -> OutputDocument {
    let doc: OutputDocument = serde_json::from_str(text).expect("document parses");
    let again = to_canonical_json(&doc);
    assert_eq!(again, text, "canonical serialization is a fixed point");
    let reparsed: OutputDocument = serde_json::from_str(&again).expect("reparses");
    assert_eq!(reparsed, doc, "round-trip preserves the document");
    doc
}

type KindCheck = fn(&Payload) -> bool;

#[test]
fn json_round_trip_every_payload_kind() {
    let cases: [(&[&str], KindCheck); 8] = [
        (&["euclid", "10", "3", "--format", "json"], |p| {
            matches!(p, Payload::Euclid(_))
        }),
        (
            &["generators", "10", "3", "--format", "json"],
            |p| matches!(p, Payload::Families(f) if f.level == 0),
        ),
        (
            &["syzygies", "10", "3", "--level", "2", "--format", "json"],
            |p| matches!(p, Payload::Families(f) if f.level == 2),
        ),
        (&["resolution", "10", "3", "--format", "json"], |p| {
            matches!(p, Payload::Resolution(_))
        }),
        (&["betti", "14", "3", "--format", "json"], |p| {
            matches!(p, Payload::Betti(_))
        }),
        (
            &["verify", "7", "2", "--format", "json"],
            |p| matches!(p, Payload::VerifyReport(v) if v.pair_count == 1),
        ),
        (&["adjoint", "10", "3", "--format", "json"], |p| {
            matches!(p, Payload::AdjointReport(_))
        }),
        (
            &["sweep", "--dmax", "8", "--format", "json"],
            |p| matches!(p, Payload::VerifyReport(v) if v.pair_count > 1),
        ),
    ];
    for (args, is_kind) in cases {
        let (code, out, err) = run_cli(args);
        assert_eq!(code, 0, "{args:?} stderr: {err}");
        let doc = assert_round_trip(&out);
        assert_eq!(doc.schema_version, "1");
        assert!(is_kind(&doc.payload), "payload kind for {args:?}");
        if args[0] == "sweep" {
            assert!(doc.input.is_none(), "sweep reports carry no single input");
        } else {
            let input = doc.input.expect("pair commands echo their input");
            assert_eq!(input.d.to_string(), args[1]);
            assert_eq!(input.u.to_string(), args[2]);
        }
    }
}

#[test]
fn json_oracle_flag_round_trips_optional_field() {
    let (code, with_oracle, _) = run_cli(&["verify", "5", "2", "--oracle", "--format", "json"]);
    assert_eq!(code, 0);
    let doc = assert_round_trip(&with_oracle);
    let Payload::VerifyReport(v) = &doc.payload else {
        panic!("verify payload expected");
    };
    assert!(v.pairs[0].oracle_checks.is_some());

    let (code, without, _) = run_cli(&["verify", "5", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let doc = assert_round_trip(&without);
    let Payload::VerifyReport(v) = &doc.payload else {
        panic!("verify payload expected");
    };
    assert!(v.pairs[0].oracle_checks.is_none());
}

#[test]
fn cas_script_is_deterministic_and_guarded() {
    for subcommand in ["generators", "syzygies", "resolution"] {
        let (code1, first, _) = run_cli(&[subcommand, "5", "2", "--format", "cas-script"]);
        let (code2, second, _) = run_cli(&[subcommand, "5", "2", "--format", "cas-script"]);
        assert_eq!((code1, code2), (0, 0));
        assert_eq!(first, second, "{subcommand} script regeneration");
        assert!(first.contains("R = QQ[T0, T1, X0, X1, X2];"));
        assert!(first.contains("I = ker phi;"));
        assert!(first.trim_end().ends_with("print \"all checks passed\";"));
    }
    // The script format exists only for the three family commands.
    for subcommand in ["euclid", "betti", "adjoint"] {
        let (code, out, err) = run_cli(&[subcommand, "5", "2", "--format", "cas-script"]);
        assert_eq!(code, 1, "{subcommand} must reject cas-script");
        assert!(out.is_empty());
        assert!(err.contains("cas-script"), "stderr: {err}");
    }
}

#[test]
fn exit_codes_follow_the_contract() {
    // 0: success.
    let (code, out, _) = run_cli(&["betti", "10", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("ranks: 1, 7, 10, 4"));

    // 1: validation errors (non-coprime, u out of range, u = 1 adjoint).
    let (code, _, err) = run_cli(&["generators", "10", "4"]);
    assert_eq!(code, 1);
    assert!(err.contains("coprime"), "stderr: {err}");
    let (code, _, _) = run_cli(&["generators", "10", "7"]);
    assert_eq!(code, 1, "2u >= d without --allow-swap");
    let (code, _, err) = run_cli(&["adjoint", "7", "1"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());

    // 1: usage errors from the argument parser.
    let (code, _, err) = run_cli(&["no-such-command"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
    let (code, _, _) = run_cli(&["syzygies", "10", "3", "--level", "3"]);
    assert_eq!(code, 1, "level beyond 2 is a usage error");

    // 3: cooperative deadline expired.
    let (code, _, err) = run_cli(&["verify", "10", "3", "--oracle", "--deadline", "0"]);
    assert_eq!(code, 3);
    assert!(err.contains("deadline"), "stderr: {err}");

    // 0: help and version escape through stdout.
    let (code, out, _) = run_cli(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
    let (code, _, _) = run_cli(&["--version"]);
    assert_eq!(code, 0);
}

#[test]
fn allow_swap_normalizes_the_mirror_pair() {
    let (code_plain, normal, _) = run_cli(&["generators", "10", "3"]);
    let (code_swap, swapped, _) = run_cli(&["generators", "10", "7", "--allow-swap"]);
    assert_eq!((code_plain, code_swap), (0, 0));
    assert_eq!(normal, swapped, "(10,7) normalizes to (10,3)");

    // The JSON document echoes the normalized input.
    let (code, out, _) = run_cli(&["euclid", "14", "11", "--allow-swap", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: OutputDocument = serde_json::from_str(&out).expect("parses");
    let input = doc.input.expect("echo");
    assert_eq!((input.d, input.u), (14, 3));
}

#[test]
fn text_and_json_carry_the_same_families() {
    for (d, u) in [(5u64, 2u64), (8, 3), (12, 5)] {
        let ds = d.to_string();
        let us = u.to_string();
        let (_, text, _) = run_cli(&["generators", &ds, &us]);
        let (_, json, _) = run_cli(&["generators", &ds, &us, "--format", "json"]);
        let doc: OutputDocument = serde_json::from_str(&json).expect("parses");
        let Payload::Families(f) = doc.payload else {
            panic!("families payload expected");
        };
        let text_lines: Vec<&str> = text.lines().collect();
        let json_texts: Vec<&str> = f.elements.iter().map(|e| e.text.as_str()).collect();
        assert_eq!(text_lines, json_texts, "({d},{u}) generators");
    }
}
