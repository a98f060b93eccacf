//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use lagcheck::registry::Ctx;
use lagcheck::report::{CheckReport, Status};
use lagcheck::run_ids;
use lagcore::invariants::{projective_monotone_radius, quadric_monotone_radius};
use std::process::ExitCode;
use std::time::{Duration, Instant};

struct Verdict {
    ok: bool,
    detail: String,
}

fn run(ids: &[&str]) -> (Vec<CheckReport>, Duration) {
    let ctx = Ctx::default();
    let ids: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
    let start = Instant::now();
    let rep = run_ids(&ctx, &ids).expect("acceptance ids resolve");
    (rep.checks, start.elapsed())
}

fn all_pass(checks: &[CheckReport]) -> Verdict {
    let bad: Vec<String> = checks
        .iter()
        .filter(|c| c.status != Status::Pass)
        .map(|c| format!("{} {} metric {:e}: {}", c.id, c.status.label(), c.metric, c.notes))
        .collect();
    let worst = checks.iter().map(|c| c.metric).fold(0.0, f64::max);
    if bad.is_empty() {
        Verdict { ok: true, detail: format!("{} checks, max metric {worst:.2e}", checks.len()) }
    } else {
        Verdict { ok: false, detail: bad.join(" | ") }
    }
}

fn with_tolerance(checks: &[CheckReport], max_tol: f64) -> Verdict {
    let mut v = all_pass(checks);
    if let Some(c) = checks.iter().find(|c| c.tolerance > max_tol) {
        v.ok = false;
        v.detail = format!("{} uses tolerance {:e} above {max_tol:e}", c.id, c.tolerance);
    }
    v
}

fn symplecto() -> Verdict {
    let ids = ["phi1", "Phi2", "PsiP", "Phi1bar", "psi", "psiP", "ThetaDelta", "ThetaQ", "Thetap", "PsiQ", "h1"];
    let ids: Vec<String> = ids.iter().map(|m| format!("symplecto.{m}")).collect();
    let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
    let (checks, t) = run(&ids);
    let mut v = with_tolerance(&checks, 1e-5);
    if checks.len() != 11 || checks.iter().any(|c| c.samples < 1000) {
        v.ok = false;
        v.detail = "expected 11 maps with at least 1000 samples each".into();
    }
    if t > Duration::from_secs(60) {
        v.ok = false;
    }
    v.detail = format!("{}; {:.2} s", v.detail, t.as_secs_f64());
    v
}

fn tori() -> Verdict {
    let (checks, _) = run(&[
        "torus.af-ep",
        "torus.bc-ep",
        "torus.fooo-ep",
        "torus.cs-ep",
        "torus.w-p01",
        "torus.csp-p01",
        "lift.quadric?k=0&m=1",
        "lift.quadric?k=1&m=1",
        "lift.quadric?k=0&m=2",
        "lift.quadric?k=1&m=2",
        "lift.projective?k=0&m=1",
        "lift.projective?k=1&m=1",
        "lift.projective?k=0&m=2",
        "lift.projective?k=1&m=2",
    ]);
    with_tolerance(&checks, 1e-10)
}

fn areas() -> Verdict {
    let (checks, _) = run(&[
        "area.level-curve?alpha=1/4",
        "area.level-curve?alpha=1/3",
        "area.level-curve?alpha=1/2",
        "area.gamma-prime",
        "area.omega-prime-disk?a=0.2",
        "area.omega-prime-disk?a=0.4",
        "area.omega-prime-disk?a=0.5",
        "area.omega-prime-disk?a=0.7",
        "area.omega-prime-disk?a=0.9",
        "area.u1?k=0&m=1",
        "area.u1?k=1&m=1",
        "area.u1?k=0&m=2",
    ]);
    with_tolerance(&checks, 1e-6)
}

fn maslov() -> Verdict {
    let (checks, _) = run(&[
        "maslov.u1?k=0&m=1",
        "maslov.u1?k=1&m=1",
        "maslov.u1?k=0&m=2",
        "maslov.u2?k=1&m=1",
        "maslov.u3?k=0&m=1",
        "maslov.u3?k=1&m=1",
        "maslov.u3?k=0&m=2",
        "maslov.torus-oracle",
    ]);
    with_tolerance(&checks, 0.0)
}

fn radii() -> Verdict {
    let mut ids = Vec::new();
    for m in 1..=3 {
        for k in 0..=m {
            for fam in ["radius.quadric", "radius.projective", "maslov.minimal"] {
                ids.push(format!("{fam}?k={k}&m={m}"));
            }
        }
    }
    let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
    let (checks, _) = run(&ids);
    let mut v = with_tolerance(&checks, 0.0);
    // (k, m) = (0, 0) is outside the construction: the radius would be 0.
    let degenerate_refused = quadric_monotone_radius(0, 0).is_err() && projective_monotone_radius(0, 0).is_err();
    if !degenerate_refused {
        v.ok = false;
    }
    v.detail = format!("{}; (0,0) refused as out of domain: {degenerate_refused}", v.detail);
    v
}

fn displaceability() -> Verdict {
    let (checks, _) = run(&[
        "displace.criterion",
        "isotopy.quadric?m=2",
        "isotopy.quadric?m=3",
        "isotopy.projective?k=1&m=2",
        "isotopy.projective?k=0&m=3",
        "isotopy.refused",
    ]);
    with_tolerance(&checks, 1e-6)
}

fn floer() -> Verdict {
    let (checks, _) = run(&[
        "floer.enumerate-cp3",
        "floer.enumerate-cpm?m=2",
        "floer.enumerate-cpm?m=3",
        "floer.critical-all-signs",
        "floer.no-critical?m=2",
        "floer.n-parity",
    ]);
    with_tolerance(&checks, 1e-12)
}

fn moments() -> Verdict {
    let (a, _) = run(&["moment.quadric", "moment.projective", "moment.norms"]);
    let (b, _) = run(&["identity.cross-product", "identity.helper-f", "identity.psiP-image"]);
    let va = with_tolerance(&a, 1e-10);
    let vb = with_tolerance(&b, 1e-12);
    Verdict { ok: va.ok && vb.ok, detail: format!("moment maps: {}; identities: {}", va.detail, vb.detail) }
}

fn full_run() -> Verdict {
    let (checks, t) = run(&["all"]);
    let mut v = all_pass(&checks);
    if t > Duration::from_secs(300) {
        v.ok = false;
    }
    v.detail = format!("{}; {:.1} s", v.detail, t.as_secs_f64());
    v
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 9] = [
        ("1 symplectomorphism pullbacks", symplecto),
        ("2 torus and circle-bundle equalities", tori),
        ("3 areas", areas),
        ("4 Maslov indices", maslov),
        ("5 monotone radii and minimal Maslov numbers", radii),
        ("6 displaceability", displaceability),
        ("7 disk classes and superpotential", floer),
        ("8 moment maps and identities", moments),
        ("9 full run with seed 7", full_run),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let v = f();
        println!("{} criterion {name}: {}", if v.ok { "PASS" } else { "FAIL" }, v.detail);
        failed += usize::from(!v.ok);
    }
    println!("acceptance: {} of 9 criteria pass", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
