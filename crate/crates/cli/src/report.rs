//! Serializable run reports. Counts are decimal strings so that arbitrary
//! precision survives JSON round trips unharmed.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct InstanceSummary {
    pub d: usize,
    pub m: usize,
    pub k: usize,
    pub t: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct Timing {
    pub parse_ms: f64,
    pub count_ms: f64,
    pub total_ms: f64,
}

/// Report for the `count` and `candidates` commands. The failure and
/// witness sections are absent when only candidates were requested.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct RunReport {
    pub instance: InstanceSummary,
    pub cand: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fail: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wit: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cumulative_wit: Option<Vec<String>>,
    pub ops: u64,
    pub timing: Timing,
}

/// Report for the `matchings` command.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct MatchingReport {
    pub n: usize,
    pub l: usize,
    pub edges: usize,
    pub matchings: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub ops: u64,
    pub timing: Timing,
}

pub fn decimal_strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

impl RunReport {
    pub fn render_plain(&self) -> String {
        let mut out = format!(
            "instance: d={} m={} k={} t={}\n",
            self.instance.d, self.instance.m, self.instance.k, self.instance.t
        );
        out.push_str(&format!("cand: {}\n", self.cand.join(" ")));
        if let Some(fail) = &self.fail {
            out.push_str(&format!("fail: {}\n", fail.join(" ")));
        }
        if let Some(wit) = &self.wit {
            out.push_str(&format!("wit: {}\n", wit.join(" ")));
        }
        if let Some(cumulative) = &self.cumulative_wit {
            out.push_str(&format!("cumulative: {}\n", cumulative.join(" ")));
        }
        out.push_str(&format!("ops: {}\n", self.ops));
        out.push_str(&render_timing(&self.timing));
        out
    }
}

impl MatchingReport {
    pub fn render_plain(&self) -> String {
        let mut out = format!("hypergraph: n={} l={} edges={}\n", self.n, self.l, self.edges);
        out.push_str(&format!("matchings: {}\n", self.matchings));
        if let Some(reason) = &self.reason {
            out.push_str(&format!("reason: {reason}\n"));
        }
        out.push_str(&format!("ops: {}\n", self.ops));
        out.push_str(&render_timing(&self.timing));
        out
    }
}

fn render_timing(t: &Timing) -> String {
    format!(
        "time: parse {:.3} ms + count {:.3} ms = {:.3} ms total\n",
        t.parse_ms, t.count_ms, t.total_ms
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_report() -> RunReport {
        RunReport {
            instance: InstanceSummary {
                d: 2,
                m: 3,
                k: 3,
                t: "00".into(),
            },
            cand: vec!["1".into(), "0".into(), "3".into(), "6".into()],
            fail: Some(vec!["0".into(), "0".into(), "3".into(), "0".into()]),
            wit: Some(vec!["1".into(), "0".into(), "0".into(), "6".into()]),
            cumulative_wit: None,
            ops: 246,
            timing: Timing {
                parse_ms: 0.05,
                count_ms: 0.2,
                total_ms: 0.25,
            },
        }
    }

    #[test]
    fn json_round_trips() {
        let report = sample_report();
        let json = serde_json::to_string_pretty(&report).unwrap();
        let back: RunReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn optional_sections_are_omitted() {
        let mut report = sample_report();
        report.fail = None;
        report.wit = None;
        let json = serde_json::to_string(&report).unwrap();
        assert!(!json.contains("\"fail\""));
        assert!(!json.contains("\"wit\""));
        assert!(json.contains("\"cand\""));
    }

    #[test]
    fn plain_rendering_lists_sections_in_order() {
        let text = sample_report().render_plain();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "instance: d=2 m=3 k=3 t=00");
        assert_eq!(lines[1], "cand: 1 0 3 6");
        assert_eq!(lines[2], "fail: 0 0 3 0");
        assert_eq!(lines[3], "wit: 1 0 0 6");
        assert_eq!(lines[4], "ops: 246");
        assert!(lines[5].starts_with("time: parse"));
    }
}
