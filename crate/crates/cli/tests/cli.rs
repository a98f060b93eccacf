use lagcheck::params::{parse_number, Params};
use lagcheck::registry::{registry, Ctx};
use lagcheck::report::{Report, Status};
use lagcheck::{parse_range, resolve, run_ids};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lagcheck"))
}

fn ids(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

#[test]
fn registry_is_sorted_unique_and_large() {
    let reg = registry();
    assert!(reg.len() >= 40, "{} checks", reg.len());
    for w in reg.windows(2) {
        assert!(w[0].id < w[1].id, "{} / {}", w[0].id, w[1].id);
    }
    assert!(reg.iter().any(|d| d.id == "floer.enumerate-cp3"));
}

#[test]
fn instances_resolve() {
    let reg = registry();
    let all = resolve(&reg, &ids(&["all"])).unwrap();
    assert!(all.len() > reg.len());
    let one = resolve(&reg, &ids(&["radius.quadric?m=2"])).unwrap();
    assert_eq!(one[0].id, "radius.quadric?k=0&m=2");
}

#[test]
fn unknown_ids_and_params_are_usage_errors() {
    let reg = registry();
    assert!(resolve(&reg, &ids(&["no.such.check"])).is_err());
    assert!(resolve(&reg, &ids(&["radius.quadric?q=1"])).is_err());
    assert!(resolve(&reg, &ids(&["radius.quadric?k"])).is_err());
    assert!(resolve(&reg, &ids(&["symplecto.phi1", "bogus"])).is_err());
}

#[test]
fn radius_example() {
    let r = run_ids(&Ctx::default(), &ids(&["radius.quadric?k=0&m=1"])).unwrap();
    assert_eq!(r.checks[0].status, Status::Pass);
    assert!(r.checks[0].notes.contains("r = 1/2"));
}

#[test]
fn level_curve_example() {
    let r = run_ids(&Ctx::default(), &ids(&["area.level-curve?alpha=0.25"])).unwrap();
    assert_eq!(r.checks[0].status, Status::Pass);
    assert!(r.checks[0].metric <= 1e-6);
}

#[test]
fn invalid_parameters_are_errors_not_passes() {
    let r = run_ids(&Ctx::default(), &ids(&["radius.quadric?k=2&m=1", "area.level-curve?alpha=1.5"])).unwrap();
    assert!(r.checks.iter().all(|c| c.status == Status::Error));
    assert!(!r.all_pass());
}

#[test]
fn tolerance_override_applies_to_numeric_checks() {
    let ctx = Ctx { tol: Some(1e-300), ..Ctx::default() };
    let r = run_ids(&ctx, &ids(&["symplecto.PsiQ", "radius.quadric"])).unwrap();
    let by_id = |id: &str| r.checks.iter().find(|c| c.id.starts_with(id)).unwrap().status;
    assert_eq!(by_id("symplecto.PsiQ"), Status::Fail);
    assert_eq!(by_id("radius.quadric"), Status::Pass);
}

#[test]
fn report_json_round_trips() {
    let r = run_ids(&Ctx::default(), &ids(&["symplecto.phi1", "floer.n-parity", "isotopy.refused"])).unwrap();
    assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
}

#[test]
fn deterministic_across_parallelism() {
    let pick = ids(&["symplecto.PsiP", "torus.af-ep", "moment.norms", "maslov.u1"]);
    let strip = |mut r: Report| {
        r.checks.iter_mut().for_each(|c| c.elapsed_ms = 0);
        r.to_json()
    };
    let a = strip(run_ids(&Ctx { parallel: true, ..Ctx::default() }, &pick).unwrap());
    let b = strip(run_ids(&Ctx { parallel: false, ..Ctx::default() }, &pick).unwrap());
    let c = strip(run_ids(&Ctx::default(), &pick).unwrap());
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn ranges() {
    assert_eq!(parse_range("0.1:0.9:0.1").unwrap().len(), 9);
    assert!(parse_range("1:0:0.1").unwrap().is_empty());
    assert!(parse_range("0:1:0").is_err());
    assert!(parse_range("0:1").is_err());
    assert_eq!(parse_number("1/4"), Some(0.25));
    assert!(Params::parse("a=1&a=2").is_err());
}

#[test]
fn cli_unknown_id_exits_2_without_output() {
    let out = bin().args(["run", "symplecto.phi1", "unknown-id"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn cli_run_writes_json_and_exits_0() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = bin().args(["run", "radius.projective?k=1&m=2", "--json"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS"));
    let r = Report::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r.run_seed, 7);
    assert_eq!(r.checks[0].id, "radius.projective?k=1&m=2");
}

#[test]
fn cli_failure_exits_1() {
    let out = bin().args(["run", "symplecto.PsiQ", "--tol", "1e-300"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("FAIL"));
}

#[test]
fn cli_json_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let mut docs = Vec::new();
    for (i, par) in ["on", "off"].iter().enumerate() {
        let p = dir.path().join(format!("{i}.json"));
        let out = bin().args(["run", "torus.bc-ep", "symplecto.ThetaQ", "--parallel", par, "--json"]).arg(&p).output().unwrap();
        assert!(out.status.success());
        let mut r = Report::from_json(&std::fs::read_to_string(&p).unwrap()).unwrap();
        r.checks.iter_mut().for_each(|c| c.elapsed_ms = 0);
        docs.push(r.to_json());
    }
    assert_eq!(docs[0], docs[1]);
}

#[test]
fn cli_sweep_level_curve() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("s.csv");
    let st = bin().args(["sweep", "area.level-curve", "--param", "alpha", "--range", "0.1:0.9:0.1", "--out"]).arg(&p).status().unwrap();
    assert!(st.success());
    let mut rd = csv::Reader::from_path(&p).unwrap();
    assert_eq!(rd.headers().unwrap(), vec!["parameter", "value", "expected", "abs_error"]);
    let rows: Vec<csv::StringRecord> = rd.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 9);
    for r in rows {
        assert!(r[3].parse::<f64>().unwrap() <= 1e-6);
    }
}

#[test]
fn cli_sweep_omega_prime() {
    let out = bin().args(["sweep", "area.omega-prime-disk", "--param", "a", "--range", "0.1:0.9:0.2"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    for line in text.lines().skip(1) {
        let err: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
        assert!(err <= 1e-6, "{line}");
    }
}

#[test]
fn cli_empty_sweep_is_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("e.csv");
    let st = bin().args(["sweep", "area.level-curve", "--param", "alpha", "--range", "0.5:0.1:0.1", "--out"]).arg(&p).status().unwrap();
    assert!(st.success());
    assert_eq!(std::fs::read_to_string(&p).unwrap(), "parameter,value,expected,abs_error\n");
}

#[test]
fn cli_sweep_usage_errors() {
    let wrong_param = bin().args(["sweep", "area.level-curve", "--param", "a", "--range", "0:1:0.5"]).output().unwrap();
    assert_eq!(wrong_param.status.code(), Some(2));
    let not_sweepable = bin().args(["sweep", "symplecto.phi1", "--param", "a", "--range", "0:1:0.5"]).output().unwrap();
    assert_eq!(not_sweepable.status.code(), Some(2));
}

#[test]
fn cli_sweep_unwritable_path_fails() {
    let out = bin().args(["sweep", "area.level-curve", "--param", "alpha", "--range", "0.1:0.2:0.1", "--out", "/nonexistent-dir/x.csv"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cli_list() {
    let out = bin().arg("list").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().count() >= 40);
    assert!(text.contains("floer.enumerate-cp3"));
    assert_eq!(text, String::from_utf8(bin().arg("list").output().unwrap().stdout).unwrap());
}
