//! Structured pass/fail records for verifier runs.

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Refused because the instance exceeds the size budget.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: Map<String, Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// Number of individual instances examined.
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            params: Map::new(),
            status: Status::Pass,
            counterexample: None,
            checked: 0,
            detail: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Records a failure; only the first counterexample is kept.
    pub fn fail(
        &mut self,
        input: impl ToString,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        self.status = Status::Fail;
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                input: input.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    pub fn skip(mut self, why: impl Into<String>) -> Self {
        self.status = Status::Skipped;
        self.detail = Some(why.into());
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// One human-readable line, e.g. `dodgson l=2 k=3: pass (1 checked)`.
    pub fn summary_line(&self) -> String {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect();
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        };
        let mut line = format!("{} {}: {} ({} checked)", self.suite, params.join(" "), status, self.checked);
        if let Some(c) = &self.counterexample {
            line.push_str(&format!(
                "; input {} expected {} got {}",
                c.input, c.expected, c.actual
            ));
        }
        line
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_schema() {
        let mut r = VerificationReport::new("theorem-a").param("l", 2).param("k", 3);
        r.checked = 1;
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"suite":"theorem-a","params":{"k":3,"l":2},"status":"pass","checked":1}"#
        );
        r.fail("(0..1)", "1", "2");
        r.fail("ignored", "x", "y");
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(j["status"], "fail");
        assert_eq!(j["counterexample"]["input"], "(0..1)");
        let s = VerificationReport::new("theorem-i").skip("support 20 > budget 18");
        assert_eq!(serde_json::to_value(&s).unwrap()["status"], "skipped");
    }
}
