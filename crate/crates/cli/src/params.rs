use std::collections::BTreeMap;
use std::fmt;

/// Usage errors: unknown ids, unknown parameters, malformed values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Query parameters of a check instance, e.g. `k=0&m=2`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Params(pub BTreeMap<String, String>);

impl Params {
    pub fn parse(query: &str) -> Result<Self, UsageError> {
        let mut map = BTreeMap::new();
        for part in query.split('&').filter(|s| !s.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| UsageError(format!("malformed parameter '{part}', expected key=value")))?;
            if map.insert(k.to_string(), v.to_string()).is_some() {
                return Err(UsageError(format!("parameter '{k}' given twice")));
            }
        }
        Ok(Params(map))
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    pub fn usize(&self, key: &str) -> anyhow::Result<usize> {
        let v = self.raw(key).ok_or_else(|| anyhow::anyhow!("missing parameter {key}"))?;
        v.parse().map_err(|_| anyhow::anyhow!("parameter {key}={v} is not a nonnegative integer"))
    }

    pub fn f64(&self, key: &str) -> anyhow::Result<f64> {
        let v = self.raw(key).ok_or_else(|| anyhow::anyhow!("missing parameter {key}"))?;
        parse_number(v).ok_or_else(|| anyhow::anyhow!("parameter {key}={v} is not a number"))
    }

    pub fn str(&self, key: &str) -> anyhow::Result<&str> {
        self.raw(key).ok_or_else(|| anyhow::anyhow!("missing parameter {key}"))
    }
}

/// Decimal or `p/q` rational literal.
pub fn parse_number(s: &str) -> Option<f64> {
    match s.split_once('/') {
        Some((a, b)) => Some(a.trim().parse::<f64>().ok()? / b.trim().parse::<f64>().ok()?),
        None => s.trim().parse().ok(),
    }
}

/// Split `base?query` into its parts.
pub fn split_id(id: &str) -> (&str, &str) {
    id.split_once('?').unwrap_or((id, ""))
}
