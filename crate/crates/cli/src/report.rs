//! Machine-readable reports: a uniform row model serialized to JSON or to
//! fixed-column CSV (`check,t,p,n_m,value,lower,upper,tol,pass`).

use std::time::{SystemTime, UNIX_EPOCH};

use cesaro_core::Exponent;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub command: String,
    pub t_values: Vec<f64>,
    pub p_values: Vec<Exponent>,
    pub degree: usize,
    pub seed: u64,
    pub format: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output_path: Option<String>,
}

/// One measured quantity with the interval it is asserted to lie in.
/// `pass` means `lower − tol ≤ value ≤ upper + tol` for the bounds present;
/// rows without bounds are informational and always pass.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub check: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<Exponent>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_m: Option<usize>,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<f64>,
    pub tol: f64,
    pub pass: bool,
}

impl ReportRow {
    pub fn new(check: &'static str, value: f64) -> Self {
        ReportRow {
            check,
            t: None,
            p: None,
            n_m: None,
            value,
            lower: None,
            upper: None,
            tol: 0.0,
            pass: true,
        }
    }

    pub fn with_t(mut self, t: f64) -> Self {
        self.t = Some(t);
        self
    }

    pub fn with_p(mut self, p: Exponent) -> Self {
        self.p = Some(p);
        self
    }

    pub fn with_index(mut self, n_m: usize) -> Self {
        self.n_m = Some(n_m);
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self.recheck()
    }

    pub fn below(mut self, upper: f64) -> Self {
        self.upper = Some(upper);
        self.recheck()
    }

    pub fn above(mut self, lower: f64) -> Self {
        self.lower = Some(lower);
        self.recheck()
    }

    /// Marks the row as a plain boolean assertion.
    pub fn flag(mut self, ok: bool) -> Self {
        self.pass = ok;
        self
    }

    fn recheck(mut self) -> Self {
        let lo_ok = self.lower.is_none_or(|lo| self.value >= lo - self.tol);
        let hi_ok = self.upper.is_none_or(|hi| self.value <= hi + self.tol);
        self.pass = lo_ok && hi_ok;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: &'static str,
    /// Wall-clock stamp; the one field excluded from determinism
    /// comparisons.
    pub generated_unix: u64,
    pub config: ConfigEcho,
    pub passed: usize,
    pub failed: usize,
    pub rows: Vec<ReportRow>,
}

impl Report {
    pub fn new(config: ConfigEcho, rows: Vec<ReportRow>) -> Self {
        let passed = rows.iter().filter(|r| r.pass).count();
        let failed = rows.len() - passed;
        Report {
            version: env!("CARGO_PKG_VERSION"),
            generated_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            config,
            passed,
            failed,
            rows,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,t,p,n_m,value,lower,upper,tol,pass\n");
        for row in &self.rows {
            let opt_f = |v: &Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                row.check,
                opt_f(&row.t),
                row.p.map(|p| p.to_string()).unwrap_or_default(),
                row.n_m.map(|n| n.to_string()).unwrap_or_default(),
                row.value,
                opt_f(&row.lower),
                opt_f(&row.upper),
                row.tol,
                row.pass,
            ));
        }
        out
    }

    pub fn render(&self, format: crate::Format) -> String {
        match format {
            crate::Format::Json => self.to_json(),
            crate::Format::Csv => self.to_csv(),
        }
    }
}

/// Merges several command reports into one, keeping row order.
pub fn merge(mut config: ConfigEcho, reports: Vec<Report>) -> Report {
    config.command = "all".into();
    let rows = reports.into_iter().flat_map(|r| r.rows).collect();
    Report::new(config, rows)
}
