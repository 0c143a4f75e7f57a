//! Verification records and their JSON form.

use serde::Serialize;

/// One verified identity. For positive checks `pass` means `residual < tolerance`;
/// negative controls (names ending in `-flagged`) pass when the residual exceeds it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub instance: String,
    pub check: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckRecord {
    pub fn below(instance: impl Into<String>, check: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self {
            instance: instance.into(),
            check: check.into(),
            residual,
            tolerance,
            pass: residual < tolerance,
            witness: None,
        }
    }

    pub fn flagged(instance: impl Into<String>, check: impl Into<String>, residual: f64, threshold: f64) -> Self {
        Self {
            instance: instance.into(),
            check: format!("{}-flagged", check.into()),
            residual,
            tolerance: threshold,
            pass: residual > threshold,
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub pass: bool,
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new(suite: impl Into<String>, seed: u64, records: Vec<CheckRecord>) -> Self {
        let pass = records.iter().all(|r| r.pass);
        Self { suite: suite.into(), seed, pass, records }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.pass)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_order_is_stable() {
        let r = CheckRecord::below("z2", "unit", 0.0, 1e-8).with_witness("(0,1)");
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"instance":"z2","check":"unit","residual":0.0,"tolerance":1e-8,"pass":true,"witness":"(0,1)"}"#);
    }

    #[test]
    fn negative_controls_invert_the_comparison() {
        assert!(CheckRecord::flagged("s3", "corrupted", 0.7, 1e-2).pass);
        assert!(!CheckRecord::flagged("s3", "corrupted", 1e-5, 1e-2).pass);
    }
}
