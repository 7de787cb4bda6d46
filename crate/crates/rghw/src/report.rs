//! JSON, CSV and plain-text renderings of per-`j` results.
//!
//! JSON layout:
//!
//! ```text
//! {"spec": {"q", "k1", "k2", "e1", "e2", "n1", "n2", "n"},
//!  "results": [{"j", "routes": {..}, "n_j", "argmax", "agree", "millis"}]}
//! ```
//!
//! `routes` has one key per requested route; a closed form that does not
//! apply is `null`. `millis` is `null` unless timing was requested, so
//! untimed output is byte-stable.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rghw_core::rghw::{RghwReport, Route, SpecSummary};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecDto {
    pub q: u32,
    pub k1: u32,
    pub k2: u32,
    pub e1: u64,
    pub e2: u64,
    pub n1: u64,
    pub n2: u64,
    pub n: usize,
}

impl From<SpecSummary> for SpecDto {
    fn from(s: SpecSummary) -> SpecDto {
        SpecDto { q: s.q, k1: s.k1, k2: s.k2, e1: s.e1, e2: s.e2, n1: s.n1, n2: s.n2, n: s.n }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDto {
    pub j: usize,
    pub routes: BTreeMap<String, Value>,
    pub n_j: Option<usize>,
    /// RREF rows of the first maximizing subspace on the dual side.
    pub argmax: Option<Vec<Vec<u32>>>,
    pub agree: bool,
    pub millis: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route_millis: Option<BTreeMap<String, u64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableDocument {
    pub spec: SpecDto,
    pub results: Vec<ResultDto>,
}

fn big_to_json(v: &num_bigint::BigInt) -> Value {
    match u64::try_from(v) {
        Ok(x) => Value::from(x),
        Err(_) => Value::String(v.to_string()),
    }
}

impl TableDocument {
    pub fn new(summary: SpecSummary, reports: &[RghwReport], routes: &[Route], timing: bool) -> TableDocument {
        let results = reports
            .iter()
            .map(|r| {
                let mut map = BTreeMap::new();
                for &route in routes {
                    let v = match route {
                        Route::BruteForce => r.bruteforce.map(Value::from).unwrap_or(Value::Null),
                        Route::Theorem1 => r.theorem1.as_ref().map(|t| Value::from(t.m_j)).unwrap_or(Value::Null),
                        Route::ClosedForm => r.closed_form.as_ref().map(|c| big_to_json(&c.m_j)).unwrap_or(Value::Null),
                    };
                    map.insert(route.name().to_string(), v);
                }
                let per_route: BTreeMap<String, u64> =
                    r.timings.iter().map(|&(route, ms)| (route.name().to_string(), ms)).collect();
                ResultDto {
                    j: r.j,
                    routes: map,
                    n_j: r.n_j(),
                    argmax: r.theorem1.as_ref().map(|t| t.argmax.rows_vec()),
                    agree: r.agree(),
                    millis: timing.then(|| per_route.values().sum()),
                    route_millis: timing.then_some(per_route),
                }
            })
            .collect();
        TableDocument { spec: summary.into(), results }
    }

    pub fn all_agree(&self) -> bool {
        self.results.iter().all(|r| r.agree)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Pretty => self.to_pretty(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.results {
            w.serialize(CsvRow::from_result(&self.spec, r)).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
    }

    pub fn to_pretty(&self) -> String {
        let s = &self.spec;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "q={} k1={} k2={} e1={} e2={}  n1={} n2={} n={}",
            s.q, s.k1, s.k2, s.e1, s.e2, s.n1, s.n2, s.n
        );
        let cols: Vec<String> = self.results.first().map(|r| r.routes.keys().cloned().collect()).unwrap_or_default();
        let mut header = format!("{:>3}", "j");
        for c in &cols {
            let _ = write!(header, "  {c:>11}");
        }
        let _ = write!(header, "  {:>6}  {:>5}", "N_j", "agree");
        if self.results.iter().any(|r| r.millis.is_some()) {
            let _ = write!(header, "  {:>8}", "millis");
        }
        let _ = writeln!(out, "{header}");
        for r in &self.results {
            let mut line = format!("{:>3}", r.j);
            for c in &cols {
                let cell = match r.routes.get(c) {
                    Some(Value::Null) | None => "-".to_string(),
                    Some(Value::String(x)) => x.clone(),
                    Some(v) => v.to_string(),
                };
                let _ = write!(line, "  {cell:>11}");
            }
            let nj = r.n_j.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
            let _ = write!(line, "  {:>6}  {:>5}", nj, if r.agree { "yes" } else { "NO" });
            if let Some(ms) = r.millis {
                let _ = write!(line, "  {ms:>8}");
            }
            let _ = writeln!(out, "{line}");
        }
        out
    }
}

/// One CSV line per `j`; route cells are empty when not requested or not
/// applicable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub q: u32,
    pub k1: u32,
    pub k2: u32,
    pub e1: u64,
    pub e2: u64,
    pub n: usize,
    pub j: usize,
    pub bruteforce: Option<String>,
    pub theorem1: Option<String>,
    pub closed_form: Option<String>,
    pub n_j: Option<usize>,
    pub agree: bool,
    pub millis: Option<u64>,
}

impl CsvRow {
    fn from_result(s: &SpecDto, r: &ResultDto) -> CsvRow {
        let cell = |name: &str| match r.routes.get(name) {
            None | Some(Value::Null) => None,
            Some(Value::String(x)) => Some(x.clone()),
            Some(v) => Some(v.to_string()),
        };
        CsvRow {
            q: s.q,
            k1: s.k1,
            k2: s.k2,
            e1: s.e1,
            e2: s.e2,
            n: s.n,
            j: r.j,
            bruteforce: cell(Route::BruteForce.name()),
            theorem1: cell(Route::Theorem1.name()),
            closed_form: cell(Route::ClosedForm.name()),
            n_j: r.n_j,
            agree: r.agree,
            millis: r.millis,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rghw_core::codes::build_code;
    use rghw_core::rghw::compute_report;

    fn doc(timing: bool) -> TableDocument {
        let spec = build_code(2, 2, 3, 1, 1).unwrap();
        let reports: Vec<_> = (1..=2).map(|j| compute_report(&spec, j, &Route::ALL, crate::DEFAULT_CAP).unwrap()).collect();
        TableDocument::new(SpecSummary::of(&spec), &reports, &Route::ALL, timing)
    }

    #[test]
    fn json_schema() {
        let v: Value = serde_json::from_str(&doc(false).to_json()).unwrap();
        assert_eq!(v["spec"]["n"], 21);
        assert_eq!(v["results"][0]["routes"]["bruteforce"], 10);
        assert_eq!(v["results"][1]["routes"]["closed_form"], 15);
        assert_eq!(v["results"][1]["agree"], true);
        assert!(v["results"][0]["millis"].is_null());
        assert!(v["results"][0].get("route_millis").is_none());
    }

    #[test]
    fn timing_fills_millis() {
        let d = doc(true);
        assert!(d.results.iter().all(|r| r.millis.is_some()));
    }

    #[test]
    fn csv_and_pretty() {
        let d = doc(false);
        let csv = d.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "q,k1,k2,e1,e2,n,j,bruteforce,theorem1,closed_form,n_j,agree,millis");
        assert_eq!(lines.next().unwrap(), "2,2,3,1,1,21,1,10,10,10,11,true,");
        let pretty = d.to_pretty();
        assert!(pretty.contains("n=21"));
        assert_eq!(pretty.lines().count(), 4);
    }
}
