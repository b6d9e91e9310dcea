use serde::{Deserialize, Serialize};

/// Outcome of one named verification, with a concrete counterexample when
/// it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, witness: Option<String>) -> Self {
        CheckResult { name: name.into(), passed: witness.is_none(), witness }
    }

    pub fn pass(name: impl Into<String>) -> Self {
        Self::new(name, None)
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Self::new(name, Some(witness.into()))
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, witness())
        }
    }
}

pub fn all_passed(checks: &[CheckResult]) -> bool {
    checks.iter().all(|c| c.passed)
}
