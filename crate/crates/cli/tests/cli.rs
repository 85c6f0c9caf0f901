use hcmod_cli::{run, ComponentGroupReport, Failure};
use hcmod_core::classify::ClassificationReport;
use hcmod_core::exceptional::{ExceptionalEntry, ExceptionalVerdict};
use hcmod_core::Error;

struct Output {
    code: i32,
    out: String,
    err: String,
}

fn hcmod(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hcmod").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn ok(args: &[&str]) -> String {
    let o = hcmod(args);
    assert_eq!(o.code, 0, "{args:?}: {}", o.err);
    o.out
}

#[test]
fn classify_sl3_json() {
    let out = ok(&["classify", "--tau", "2,1", "--pair", "spin", "--lambda", "0,0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["counts"]["local_systems"], 4);
    assert_eq!(v["counts"]["hc_modules"], 3);
    assert_eq!(v["component_group"]["label"], "Z4");
}

#[test]
fn component_group_text() {
    let out = ok(&["component-group", "--tau", "3,2,1"]);
    assert_eq!(out.lines().next(), Some("Z4xZ2 (order 8, extension model)"));
}

#[test]
fn exceptional_split() {
    let out = ok(&["exceptional", "verdict", "--form", "E7(7)", "--orbit", "50"]);
    assert!(out.contains("16 -> 4/4/4/4 (none/K/Kbar/Ktilde)"), "{out}");
    let list = ok(&["exceptional", "list"]);
    assert_eq!(list.lines().count(), 15);
    let e6 = ok(&["exceptional", "verdict", "--form", "e6(6)", "--orbit", "10"]);
    assert!(e6.contains("4 local systems, 3 Harish-Chandra modules"), "{e6}");
}

#[test]
fn roots_eval() {
    let out = ok(&["roots", "eval", "--type", "E6", "--theta", "1,0,0,-2,0,1", "--datum", "e6_6"]);
    assert!(out.contains("e6_6 weights: (0,1,0,-2)"), "{out}");
    assert!(out.contains("cover order: 1"), "{out}");
    let out = ok(&["roots", "eval", "--type", "E6", "--theta", "0,0,1,-1,1,0", "--basis", "coweight", "--datum", "e6_6"]);
    assert!(out.contains("e6_6 weights: (-1/2,0,1/2,0)"), "{out}");
    assert!(out.contains("cover order: 2"), "{out}");
    let cartan = ok(&["roots", "cartan", "--type", "E8"]);
    assert!(cartan.contains("determinant 1"), "{cartan}");
}

#[test]
fn slices() {
    assert_eq!(ok(&["slices", "list"]).lines().filter(|l| !l.starts_with(' ')).count(), 5);
    let v = ok(&["slices", "verdict", "--period", "2", "--scalar", "i"]);
    assert!(v.starts_with("period 2, scalar i: quantizable"), "{v}");
    let v = ok(&["slices", "verdict", "--period", "0", "--scalar", "-i"]);
    assert!(v.contains("not_quantizable"), "{v}");
    let u = ok(&["--format", "json", "slices", "unobstructive", "--kind", "a2", "--involution", "inner"]);
    let u: serde_json::Value = serde_json::from_str(&u).unwrap();
    assert_eq!(u["unobstructive"], true);
}

#[test]
fn ab_diagrams() {
    let out = ok(&["ab-diagrams", "--tau", "3,2,1", "--k", "3"]);
    assert!(out.starts_with("4 ab-diagrams"), "{out}");
    assert_eq!(hcmod(&["ab-diagrams", "--tau", "3,2,1", "--k", "6"]).code, 2);
}

#[test]
fn exit_codes() {
    let bad = hcmod(&["classify", "--tau", "3,2"]);
    assert_eq!(bad.code, 2);
    assert!(bad.err.starts_with("error:"), "{}", bad.err);
    assert_eq!(hcmod(&["classify", "--tau", "2,1", "--nonintegral", "2"]).code, 2);
    assert_eq!(hcmod(&["classify", "--tau", "2,1", "--lambda", "0"]).code, 2);
    assert_eq!(hcmod(&["classify", "--tau", "2,1", "--jobs", "0"]).code, 2);
    assert_eq!(hcmod(&["frobnicate"]).code, 2);
    assert_eq!(hcmod(&["exceptional", "verdict", "--form", "E9", "--orbit", "1"]).code, 2);
    assert_eq!(hcmod(&["--help"]).code, 0);
    assert_eq!(hcmod(&["selftest", "--seed", "7", "--cases", "40"]).code, 0);
    assert_eq!(Failure::from(Error::Catalog("x".into())).code, 1);
    assert_eq!(Failure::from(Error::CharacterTable("x".into())).code, 1);
}

#[test]
fn selftest_json() {
    let out = ok(&["--format", "json", "selftest", "--seed", "3", "--cases", "30"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["seed"], 3);
}

#[test]
fn json_round_trips() {
    for (tau, lambda) in [("2,1", "1/2,0"), ("3,2,1", "1/2,-1,2"), ("3,3,2,1", "0,0,1/3"), ("4,3,2,1", "1,2,3,-1/2")] {
        let out = ok(&["--format", "json", "classify", "--tau", tau, "--lambda", lambda, "--nonintegral", "1"]);
        let r: ClassificationReport = serde_json::from_str(&out).unwrap();
        assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", out);

        let out = ok(&["--format", "json", "component-group", "--tau", tau, "--census"]);
        let r: ComponentGroupReport = serde_json::from_str(&out).unwrap();
        assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", out);
    }
    let out = ok(&["--format", "json", "exceptional", "verdict", "--form", "E8(8)", "--orbit", "44"]);
    let v: ExceptionalVerdict = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", out);
    let out = ok(&["--format", "json", "exceptional", "list"]);
    let list: Vec<ExceptionalEntry> = serde_json::from_str(&out).unwrap();
    assert_eq!(list.len(), 14);
}

#[test]
fn jobs_keep_input_order() {
    let taus = ["4,3,2,1", "2,1", "3,2,1,1", "1", "3,3,2,1", "2,1,1,1", "5,4,3,2,1", "3,2,1"];
    let mut args = vec!["--format", "json", "classify"];
    for t in taus {
        args.extend(["--tau", t]);
    }
    let serial = ok(&args);
    args.extend(["--jobs", "4"]);
    let parallel = ok(&args);
    assert_eq!(serial, parallel);
    let reports: Vec<ClassificationReport> = serde_json::from_str(&parallel).unwrap();
    let got: Vec<String> = reports.iter().map(|r| r.input.tau.to_string()).collect();
    assert_eq!(got, taus);
}

#[test]
fn deterministic() {
    let args = ["classify", "--tau", "3,2,1", "--lambda", "1,1/2,-3"];
    assert_eq!(ok(&args), ok(&args));
    assert_eq!(ok(&["selftest", "--seed", "11", "--cases", "20"]), ok(&["selftest", "--seed", "11", "--cases", "20"]));
}
