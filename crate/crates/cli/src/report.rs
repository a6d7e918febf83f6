use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use zeta4::ZetaLinearForm;

pub const TOOL_VERSION: &str = concat!("zeta4 ", env!("CARGO_PKG_VERSION"));

/// Flag values echoed into a report. Job count and output paths are left
/// out so reports stay identical across them.
pub type ConfigEcho = BTreeMap<&'static str, serde_json::Value>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn from_flags(flags: impl IntoIterator<Item = bool>) -> Self {
        let mut s = Summary::default();
        for ok in flags {
            s.total += 1;
            if ok {
                s.passed += 1;
            } else {
                s.failed += 1;
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CellReport {
    pub n: u32,
    pub m: u32,
    pub zl: ZetaLinearForm,
    pub zr: ZetaLinearForm,
    pub identity_pass: bool,
    /// `None` where the `m`-recurrence does not apply (`m > n - 2`) or its
    /// cells were not computed.
    pub recurrence_pass: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub tool_version: &'static str,
    pub config_echo: ConfigEcho,
    pub cells: Vec<CellReport>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Sorts cells by `(n, m)` and recomputes the summary from them.
    pub fn new(config_echo: ConfigEcho, mut cells: Vec<CellReport>) -> Self {
        cells.sort_by_key(|c| (c.n, c.m));
        let summary = Summary::from_flags(cells.iter().map(|c| c.identity_pass && c.recurrence_pass != Some(false)));
        VerificationReport { tool_version: TOOL_VERSION, config_echo, cells, summary }
    }

    /// `n,m,c0,c4,identity_pass,recurrence_pass` rows; the ζ(4) column is
    /// taken from `zl`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,m,c0,c4,identity_pass,recurrence_pass\n");
        for c in &self.cells {
            let rec = c.recurrence_pass.map_or("na".to_string(), |b| b.to_string());
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                c.n,
                c.m,
                c.zl.constant_term(),
                c.zl.zeta_coeff(4),
                c.identity_pass,
                rec
            ));
        }
        out
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// Writes `text` to `path`, or to stdout when `path` is `None`.
pub fn emit(text: &str, path: Option<&Path>) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use zeta4::Rational;

    fn cell(n: u32, m: u32, ok: bool) -> CellReport {
        let z = ZetaLinearForm::from_zeta4(Rational::frac(277, 16), Rational::from(-16));
        CellReport { n, m, zl: z.clone(), zr: z, identity_pass: ok, recurrence_pass: None, elapsed_ms: None }
    }

    #[test]
    fn cells_are_sorted_and_counted() {
        let r = VerificationReport::new(ConfigEcho::new(), vec![cell(1, 1, true), cell(0, 0, false), cell(1, 0, true)]);
        let order: Vec<_> = r.cells.iter().map(|c| (c.n, c.m)).collect();
        assert_eq!(order, vec![(0, 0), (1, 0), (1, 1)]);
        assert_eq!(r.summary, Summary { total: 3, passed: 2, failed: 1 });
    }

    #[test]
    fn json_and_csv_shapes() {
        let r = VerificationReport::new(ConfigEcho::new(), vec![cell(1, 0, true)]);
        let v: serde_json::Value = serde_json::from_str(&to_json(&r)).unwrap();
        assert_eq!(v["cells"][0]["zl"]["c0"], "277/16");
        assert_eq!(v["cells"][0]["identityPass"], true);
        assert!(v["cells"][0]["recurrencePass"].is_null());
        assert!(v["cells"][0].get("elapsedMs").is_none());
        assert_eq!(r.to_csv(), "n,m,c0,c4,identity_pass,recurrence_pass\n1,0,277/16,-16,true,na\n");
    }
}
