//! Replayable record of a pipeline run.

use serde::{Deserialize, Serialize};

use crate::colouring::EdgeColouring;

use super::pipeline::target_graph;
use super::{MonoEmbedding, StepFailure};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    pub step: String,
    pub detail: serde_json::Value,
}

impl TraceStep {
    pub(crate) fn new(step: &str, detail: serde_json::Value) -> Self {
        Self {
            step: step.to_string(),
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum TraceOutcome {
    Embedding(MonoEmbedding),
    Failure(StepFailure),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Trace {
    pub case: u8,
    pub t: usize,
    pub n: usize,
    /// Host colouring in text form.
    pub colouring: String,
    pub steps: Vec<TraceStep>,
    pub outcome: TraceOutcome,
}

impl Trace {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serialises")
    }

    pub fn from_json(s: &str) -> Result<Self, String> {
        serde_json::from_str(s).map_err(|e| e.to_string())
    }

    /// Re-checks the outcome against the recorded colouring.
    pub fn verify(&self) -> Result<(), String> {
        let c: EdgeColouring = self.colouring.parse().map_err(|e| format!("colouring: {e}"))?;
        let target = target_graph(self.case, self.t, self.n).ok_or_else(|| format!("bad case/t/n: {} {} {}", self.case, self.t, self.n))?;
        match &self.outcome {
            TraceOutcome::Embedding(m) if m.verify(&c, &target) => Ok(()),
            TraceOutcome::Embedding(_) => Err("embedding does not verify".into()),
            TraceOutcome::Failure(f) if f.verify(&c, self.t) => Ok(()),
            TraceOutcome::Failure(f) => Err(format!("{} payload does not verify", f.name())),
        }
    }
}
