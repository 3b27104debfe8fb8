//! Assertion outcome records and per-scenario reports. Field order here is
//! the serialized JSON field order.

use serde::Serialize;

/// One evaluated assertion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssertionRecord {
    pub file: String,
    pub line: u32,
    pub col: u32,
    pub desc: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

/// Pass/fail totals for one scenario.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

/// All assertion outcomes of one scenario file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub assertions: Vec<AssertionRecord>,
    pub summary: Summary,
}

impl ScenarioReport {
    pub fn new(scenario: &str, assertions: Vec<AssertionRecord>) -> ScenarioReport {
        let passed = assertions.iter().filter(|a| a.pass).count();
        let failed = assertions.len() - passed;
        ScenarioReport {
            scenario: scenario.to_owned(),
            assertions,
            summary: Summary { passed, failed },
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }
}
