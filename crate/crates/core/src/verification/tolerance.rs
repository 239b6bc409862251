//! Per-claim tolerances, resolved by longest claim-id prefix.

use std::collections::BTreeMap;

/// Default entries. Values are absolute unless the claim scales them:
/// `T2c.asym` holds `C` in `C/ν²` and `T1.limit` holds `C` in `C/ν`.
const DEFAULTS: &[(&str, f64)] = &[
    ("", 0.0),
    ("T1.sums", 1e-12),
    ("T2.sums", 1e-12),
    ("T3.sums", 1e-12),
    ("T4.sums", 1e-12),
    ("T5.sums", 1e-12),
    ("T6.sums", 1e-12),
    ("T1b.chain", 1e-14),
    ("T2b.chain", 1e-14),
    ("T3b.chain", 1e-14),
    ("T4b.chain", 1e-14),
    ("T5b.chain", 1e-14),
    ("T6b.chain", 1e-14),
    ("T1a.residual", 1e-10),
    ("T2a.residual", 1e-10),
    ("T3a.residual", 1e-10),
    ("T4a.residual", 1e-10),
    ("T5a.residual", 1e-10),
    ("T6a.residual", 1e-10),
    ("T1.const.r_half", 1e-10),
    ("T3.const.nu_star", 1e-9),
    ("T3.const.r_half", 1e-7),
    ("T3.const.r_minus_half", 1e-10),
    ("T2c.asym", 10.0),
    ("T1.limit", 10.0),
    ("T2.zerosum.gap", 0.05),
    ("T4.zerosum.gap", 0.05),
    ("T6.zerosum.gap", 0.05),
    ("T3b.mle", 0.02),
];

#[derive(Debug, Clone, PartialEq)]
pub struct ToleranceTable {
    defaults: BTreeMap<String, f64>,
    overrides: BTreeMap<String, f64>,
}

impl Default for ToleranceTable {
    fn default() -> Self {
        ToleranceTable {
            defaults: DEFAULTS.iter().map(|&(k, v)| (k.to_owned(), v)).collect(),
            overrides: BTreeMap::new(),
        }
    }
}

impl ToleranceTable {
    /// Adds an override. Any matching override beats every default.
    pub fn set(&mut self, prefix: &str, value: f64) {
        self.overrides.insert(prefix.to_owned(), value);
    }

    /// Tolerance of the longest matching override, else of the longest
    /// matching default. Prefixes match on whole dot-separated segments.
    pub fn get(&self, claim_id: &str) -> f64 {
        longest(&self.overrides, claim_id)
            .or_else(|| longest(&self.defaults, claim_id))
            .unwrap_or(0.0)
    }

    pub fn overrides(&self) -> impl Iterator<Item = (&str, f64)> {
        self.overrides.iter().map(|(k, &v)| (k.as_str(), v))
    }
}

fn longest(map: &BTreeMap<String, f64>, claim_id: &str) -> Option<f64> {
    map.iter()
        .filter(|(k, _)| prefix_matches(k, claim_id))
        .max_by_key(|(k, _)| k.len())
        .map(|(_, &v)| v)
}

/// True when `prefix` is empty, equal to `id`, or a leading run of its
/// dot-separated segments.
pub fn prefix_matches(prefix: &str, id: &str) -> bool {
    prefix.is_empty()
        || id == prefix
        || (id.starts_with(prefix) && id[prefix.len()..].starts_with('.'))
}
