//! Scenario reports and their renderings.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

/// One computed-versus-expected comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub computed: Value,
    pub expected: Value,
    pub pass: bool,
    /// Where the expected value comes from.
    pub citation: String,
}

impl Check {
    /// Passes when both sides serialize to the same JSON value.
    pub fn compare(name: &str, computed: impl Serialize, expected: impl Serialize, citation: &str) -> Self {
        let computed = serde_json::to_value(computed).expect("serializable");
        let expected = serde_json::to_value(expected).expect("serializable");
        Check { name: name.into(), pass: computed == expected, computed, expected, citation: citation.into() }
    }

    /// A property that must hold, with a computed detail for the record.
    pub fn holds(name: &str, holds: bool, detail: impl Serialize, citation: &str) -> Self {
        Check {
            name: name.into(),
            computed: serde_json::json!({ "holds": holds, "detail": detail }),
            expected: serde_json::json!({ "holds": true }),
            pass: holds,
            citation: citation.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub scenario: String,
    pub pass: bool,
    pub checks: Vec<Check>,
    pub seed: u64,
    pub d_poly: String,
    pub max_degree: Option<u32>,
    pub version: String,
    pub elapsed_ms: u128,
}

impl Report {
    /// The report as a JSON value without the timing field, for
    /// reproducibility comparisons.
    pub fn without_timings(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        v.as_object_mut().expect("object").remove("elapsed_ms");
        v
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        let status = if self.pass { "PASS" } else { "FAIL" };
        writeln!(out, "{status}  {}  (seed {}, D {}, {} ms)", self.scenario, self.seed, self.d_poly, self.elapsed_ms)
            .unwrap();
        for c in &self.checks {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            writeln!(out, "  [{mark}] {}", c.name).unwrap();
            writeln!(out, "         computed: {}", c.computed).unwrap();
            if !c.pass {
                writeln!(out, "         expected: {}", c.expected).unwrap();
            }
            writeln!(out, "         source:   {}", c.citation).unwrap();
        }
        out
    }
}
