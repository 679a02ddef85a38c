use std::process::Command;

use serde_json::Value;
use signed_descent::cli::{run, EXIT_DOMAIN, EXIT_OK, EXIT_PARSE, EXIT_RESOURCE};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn sdesc(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("sdesc").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn ok(args: &[&str]) -> String {
    let r = sdesc(args);
    assert_eq!(r.code, EXIT_OK, "{args:?}: {}", r.stderr);
    r.stdout
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&ok(&full)).unwrap()
}

macro_rules! golden {
    ($file:literal) => {
        include_str!(concat!("golden/", $file))
    };
}

#[test]
fn golden_text_outputs() {
    assert_eq!(
        ok(&["stats", "--perm", "-3,4,-1,-5,2"]),
        golden!("stats_signed.txt")
    );
    assert_eq!(
        ok(&["poly", "--family", "B", "--n", "4", "--k", "2", "--method", "all"]),
        golden!("poly_all_b42.txt")
    );
    assert_eq!(
        ok(&["table", "--qk", "--max-k", "4"]),
        golden!("table_qk4.txt")
    );
    assert_eq!(
        ok(&["table", "--pk", "--max-k", "4"]),
        golden!("table_pk4.txt")
    );
    assert_eq!(
        ok(&["sort", "--perm", "-3,4,-1,-5,2", "--complexity"]),
        golden!("sort_complexity.txt")
    );
    assert_eq!(
        ok(&["juggle", "--render", "ascii", "--seq", "4,6,3,0,2,3,3"]),
        golden!("diagram_4630233.txt")
    );
    assert_eq!(
        ok(&[
            "juggle",
            "--render",
            "svg",
            "--seq",
            "+5,-2,0,-1,-5,+2,0,+1"
        ]),
        golden!("diagram_psi_example.svg")
    );
}

#[test]
fn golden_json_outputs() {
    assert_eq!(
        ok(&["--json", "stats", "--perm", "-3,4,-1,-5,2"]),
        golden!("stats_signed.json")
    );
    assert_eq!(
        ok(&["--json", "poly", "--family", "B", "--n", "4", "--k", "2", "--method", "all"]),
        golden!("poly_all_b42.json")
    );
}

#[test]
fn worked_examples() {
    let stats = json(&["stats", "--perm", "-3,4,-1,-5,2"]);
    assert_eq!(stats["des_b"], 3);
    assert_eq!(stats["maxdrop_b"], 4);
    assert_eq!(stats["descent_set_b"], serde_json::json!([0, 2, 3]));

    let poly = json(&[
        "poly", "--family", "B", "--n", "4", "--k", "2", "--method", "all",
    ]);
    assert_eq!(poly["agree"], true);
    for route in ["brute", "recurrence", "explicit", "series"] {
        assert_eq!(
            poly["routes"][route],
            serde_json::json!(["1", "32", "35", "4"])
        );
    }

    assert_eq!(
        ok(&["juggle", "--psi", "--perm", "4,-2,1,3", "--k", "2"]),
        "+5,-2,0,-1,-5,+2,0,+1\n"
    );
    assert_eq!(
        ok(&["juggle", "--landing", "--seq", "4,6,3,0,2,3,3", "--k", "3"]),
        "3,1,2\n"
    );
    assert_eq!(
        ok(&[
            "juggle",
            "--psi-inverse",
            "--seq",
            "+5,-2,0,-1,-5,+2,0,+1",
            "--n",
            "4",
            "--k",
            "2"
        ]),
        "4,-2,1,3\n"
    );
    assert_eq!(
        ok(&["juggle", "--phi", "--perm", "4,2,1,3", "--k", "2"]),
        "5,2,0,1\n"
    );
    assert_eq!(
        ok(&["juggle", "--phi-inverse", "--seq", "5,2,0,1", "--k", "2"]),
        "4,2,1,3\n"
    );
    assert_eq!(
        ok(&[
            "bijection",
            "--f",
            "--perm",
            "-6,2,-1,-3,8,7,5,4",
            "--k",
            "5",
            "--set",
            "0,2,6,7"
        ]),
        "alpha  -4,2,-1,-3,5\nX      {4,5,7}\n"
    );
    assert_eq!(
        ok(&[
            "bijection",
            "--g",
            "--perm",
            "-3,1,-4,2,5",
            "--x",
            "4,5,7",
            "--n",
            "8",
            "--k",
            "4"
        ]),
        "-3,1,-6,2,8,7,5,4\n"
    );
    assert_eq!(
        ok(&["setcount", "--n", "4", "--k", "2", "--set", "{}"]),
        "b_{4,2}({}) = 72\n"
    );
    assert_eq!(ok(&["sort", "--perm", "-3,1,4,-5,2"]), "1,3,-5,2,4\n");
    assert_eq!(
        ok(&["sort", "--perm", "-3,1,4,-5,2", "--recursive"]),
        "1,3,-5,2,4\n"
    );
}

#[test]
fn table_rows() {
    let table = json(&["table", "--qk", "--max-k", "3"]);
    let rows = table["rows"].as_array().unwrap();
    assert_eq!(rows[0]["coefficients"], serde_json::json!(["1"]));
    assert_eq!(rows[1]["coefficients"], serde_json::json!(["1", "2", "1"]));
    assert_eq!(rows[3]["log_concave"]["verdict"], "fails");
    assert_eq!(
        rows[3]["log_concave"]["witnesses"],
        serde_json::json!([4, 9])
    );
}

#[test]
fn checkseq_flags() {
    assert_eq!(
        ok(&["checkseq", "--seq", "1,3,2,3", "--unimodal"]),
        "unimodal  no (at 3)\n"
    );
    let all = json(&["checkseq", "--seq", "1,2,1"]);
    assert_eq!(all["symmetric"]["verdict"], "holds");
    assert_eq!(all["log_concave"]["verdict"], "holds");
    assert_eq!(all.as_object().unwrap().len(), 3);
}

#[test]
fn json_round_trips_byte_identically() {
    let cases: &[&[&str]] = &[
        &["stats", "--perm", "3,4,1,5,2"],
        &[
            "poly", "--family", "A", "--n", "6", "--k", "3", "--method", "all",
        ],
        &[
            "setcount", "--n", "5", "--k", "2", "--set", "0,4", "--method", "all",
        ],
        &["juggle", "--validate", "--seq", "4,6,3,0,2,3,3"],
        &["juggle", "--render", "svg", "--seq", "5,2,0,1"],
        &["table", "--bnk-grid", "--max-n", "4"],
        &["checkseq", "--seq", "1,8,12,18,23,32,32,28,23,8,4,2,1"],
        &["verify", "--suite", "regression"],
    ];
    for args in cases {
        let mut full = vec!["--json"];
        full.extend_from_slice(args);
        let first = ok(&full);
        let value: Value = serde_json::from_str(&first).unwrap();
        let again = serde_json::to_string_pretty(&value).unwrap() + "\n";
        assert_eq!(first, again, "{args:?}");
        assert_eq!(ok(&full), first, "{args:?} is not deterministic");
    }
}

#[test]
fn exit_codes() {
    let r = sdesc(&["stats", "--perm", "1,1,2"]);
    assert_eq!(r.code, EXIT_DOMAIN);
    assert!(r.stdout.is_empty());
    assert!(r.stderr.starts_with("error: "));

    assert_eq!(sdesc(&["stats", "--perm", "1,two"]).code, EXIT_PARSE);
    assert_eq!(sdesc(&["nonsense"]).code, EXIT_PARSE);
    assert_eq!(sdesc(&["poly", "--n", "4"]).code, EXIT_PARSE);
    assert_eq!(
        sdesc(&["poly", "--family", "C", "--n", "4", "--k", "1"]).code,
        EXIT_PARSE
    );
    assert_eq!(
        sdesc(&["juggle", "--psi", "--phi", "--perm", "1", "--k", "1"]).code,
        EXIT_PARSE,
        "modes are mutually exclusive"
    );
    assert_eq!(
        sdesc(&["bijection", "--perm", "1", "--k", "0"]).code,
        EXIT_PARSE
    );
    assert_eq!(
        sdesc(&["juggle", "--validate", "--seq", "2,1"]).code,
        EXIT_DOMAIN
    );
    assert_eq!(
        sdesc(&["juggle", "--psi", "--perm", "4,-2,1,3", "--k", "1"]).code,
        EXIT_DOMAIN
    );

    let r = sdesc(&["poly", "--n", "12", "--k", "3", "--method", "brute"]);
    assert_eq!(r.code, EXIT_RESOURCE);
    assert!(r.stderr.contains("cap"));
    assert_eq!(
        sdesc(&["juggle", "--psi", "--perm", "1,2,3,4,5,6,7", "--k", "7"]).code,
        EXIT_RESOURCE
    );
    assert_eq!(
        sdesc(&["table", "--qk", "--max-k", "13"]).code,
        EXIT_RESOURCE
    );
    assert_eq!(sdesc(&["--help"]).code, EXIT_OK);
}

#[test]
fn cap_override_warns() {
    let r = sdesc(&["table", "--qk", "--max-k", "13", "--cap", "13"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r
        .stderr
        .starts_with("warning: table cap raised from 12 to 13"));
    assert_eq!(r.stdout.lines().count(), 15);

    let r = sdesc(&["poly", "--n", "12", "--k", "2", "--method", "all"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.contains("brute       skipped"));
    assert!(r.stdout.ends_with("agree: true\n"));
}

#[test]
fn binary_runs_verify_headlessly() {
    let output = Command::new(env!("CARGO_BIN_EXE_sdesc"))
        .args(["--json", "verify", "--quick"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["suites"].as_array().unwrap().len(), 7);
}
