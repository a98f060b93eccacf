//! Check runner behind the `lagcheck` binary.

pub mod params;
pub mod registry;
pub mod report;

use anyhow::Result;
use params::{split_id, Params, UsageError};
use registry::{registry, CheckDescriptor, Ctx, Outcome};
use report::{CheckReport, Report, Status};
use std::time::Instant;

/// A check id resolved against the registry, with all parameters filled in.
pub struct Instance {
    pub index: usize,
    pub params: Params,
    pub id: String,
}

fn canonical_id(d: &CheckDescriptor, p: &Params) -> String {
    if d.params.is_empty() {
        return d.id.to_string();
    }
    let q: Vec<String> = d.params.iter().map(|(k, _)| format!("{k}={}", p.raw(k).unwrap_or(""))).collect();
    format!("{}?{}", d.id, q.join("&"))
}

fn instantiate(reg: &[CheckDescriptor], index: usize, query: &str) -> Result<Instance, UsageError> {
    let d = &reg[index];
    let given = Params::parse(query)?;
    for k in given.0.keys() {
        if !d.params.iter().any(|(n, _)| n == k) {
            return Err(UsageError(format!("check {} has no parameter '{k}'", d.id)));
        }
    }
    let mut p = Params::default();
    for (k, default) in d.params {
        p.0.insert(k.to_string(), given.raw(k).unwrap_or(default).to_string());
    }
    Ok(Instance { index, id: canonical_id(d, &p), params: p })
}

/// Resolve `ids` (or `all`) into instances. Fails before anything runs.
pub fn resolve(reg: &[CheckDescriptor], ids: &[String]) -> Result<Vec<Instance>, UsageError> {
    if ids.is_empty() {
        return Err(UsageError("no check ids given".into()));
    }
    let mut out = Vec::new();
    for id in ids {
        if id == "all" {
            for (i, d) in reg.iter().enumerate() {
                if d.instances.is_empty() {
                    out.push(instantiate(reg, i, "")?);
                } else {
                    for q in d.instances {
                        out.push(instantiate(reg, i, q)?);
                    }
                }
            }
            continue;
        }
        let (base, query) = split_id(id);
        let index = reg
            .iter()
            .position(|d| d.id == base)
            .ok_or_else(|| UsageError(format!("unknown check id '{base}'; see `lagcheck list`")))?;
        out.push(instantiate(reg, index, query)?);
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out.dedup_by(|a, b| a.id == b.id);
    Ok(out)
}

fn finite(x: f64) -> f64 {
    if x.is_finite() {
        x
    } else {
        f64::MAX
    }
}

fn to_report(ctx: &Ctx, id: String, res: Result<Outcome>, elapsed_ms: u64) -> CheckReport {
    match res {
        Ok(o) => {
            let tolerance = match (o.overridable, ctx.tol) {
                (true, Some(t)) => t,
                _ => o.tolerance,
            };
            let metric = finite(o.metric);
            let status = if metric <= tolerance && o.metric.is_finite() { Status::Pass } else { Status::Fail };
            CheckReport { id, status, metric, tolerance, samples: o.samples, seed: ctx.seed, elapsed_ms, notes: o.notes }
        }
        Err(e) => CheckReport {
            id,
            status: Status::Error,
            metric: f64::MAX,
            tolerance: 0.0,
            samples: 0,
            seed: ctx.seed,
            elapsed_ms,
            notes: format!("{e:#}"),
        },
    }
}

/// Run resolved instances. Reports come back sorted by id.
pub fn run(ctx: &Ctx, instances: &[Instance]) -> Report {
    let reg = registry();
    let checks = lagcore::par::par_map(instances.len(), ctx.parallel, |i| {
        let inst = &instances[i];
        let start = Instant::now();
        let res = (reg[inst.index].run)(ctx, &inst.params);
        to_report(ctx, inst.id.clone(), res, start.elapsed().as_millis() as u64)
    });
    Report { run_seed: ctx.seed, version: env!("CARGO_PKG_VERSION").to_string(), checks }
}

/// Resolve and run in one step.
pub fn run_ids(ctx: &Ctx, ids: &[String]) -> Result<Report, UsageError> {
    let reg = registry();
    let inst = resolve(&reg, ids)?;
    Ok(run(ctx, &inst))
}

/// Parse `start:stop:step` into an inclusive grid.
pub fn parse_range(s: &str) -> Result<Vec<f64>, UsageError> {
    let bad = || UsageError(format!("malformed range '{s}', expected start:stop:step"));
    let parts: Vec<f64> = s.split(':').map(|p| params::parse_number(p).ok_or_else(bad)).collect::<Result<_, _>>()?;
    let [start, stop, step] = parts[..] else { return Err(bad()) };
    if step.is_nan() || step <= 0.0 || !start.is_finite() || !stop.is_finite() {
        return Err(UsageError(format!("range '{s}' needs a positive step and finite bounds")));
    }
    let mut out = Vec::new();
    let mut i = 0usize;
    loop {
        let v = start + step * i as f64;
        if v > stop + step * 1e-9 {
            break;
        }
        out.push(v);
        i += 1;
    }
    Ok(out)
}

/// One CSV row of a sweep.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct SweepRow {
    pub parameter: f64,
    pub value: f64,
    pub expected: f64,
    pub abs_error: f64,
}

/// Evaluate a sweepable check over a grid.
pub fn sweep(ctx: &Ctx, id: &str, param: &str, grid: &[f64]) -> Result<Result<Vec<SweepRow>>, UsageError> {
    let reg = registry();
    let d = reg.iter().find(|d| d.id == id).ok_or_else(|| UsageError(format!("unknown check id '{id}'")))?;
    let (name, f) = d.sweep.ok_or_else(|| UsageError(format!("check {id} is not sweepable")))?;
    if name != param {
        return Err(UsageError(format!("check {id} sweeps over '{name}', not '{param}'")));
    }
    let rows = lagcore::par::par_map(grid.len(), ctx.parallel, |i| {
        f(ctx, grid[i]).map(|(value, expected)| SweepRow { parameter: grid[i], value, expected, abs_error: (value - expected).abs() })
    });
    Ok(rows.into_iter().collect())
}

/// Write sweep rows as CSV; an empty sweep still gets the header.
pub fn write_sweep_csv<W: std::io::Write>(w: W, rows: &[SweepRow]) -> Result<()> {
    let mut wr = csv::WriterBuilder::new().has_headers(false).from_writer(w);
    wr.write_record(["parameter", "value", "expected", "abs_error"])?;
    for r in rows {
        wr.serialize(r)?;
    }
    wr.flush()?;
    Ok(())
}
