use serde_json::{json, Value};
use workbench_core::groebner::inconclusive_of;
use workbench_core::{Field, Result as CoreResult};

use crate::config::RunConfig;
use crate::report::Status;
use crate::CliError;

mod algebra;
mod charts;
mod props;

pub use algebra::{conjecture, fibre, gb, kernel, minors, pi};
pub use charts::{charts, cover, smooth};
pub use props::props;

/// Result of one command before it is wrapped into a report.
#[derive(Debug)]
pub struct CommandOutput {
    pub status: Status,
    pub field: Option<Field>,
    pub summary: Value,
    pub items: Vec<Value>,
    pub lines: Vec<String>,
}

impl CommandOutput {
    pub fn inconclusive(reason: String) -> CommandOutput {
        CommandOutput {
            status: Status::Inconclusive,
            field: None,
            summary: json!({ "reason": reason }),
            items: Vec::new(),
            lines: vec![reason],
        }
    }
}

pub fn dispatch(name: &str, cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    match name {
        "charts" => charts(cfg),
        "smooth" => smooth(cfg),
        "cover" => cover(cfg),
        "fibre" => fibre(cfg),
        "pi" => pi(cfg),
        "minors" => minors(cfg),
        "kernel" => kernel(cfg),
        "conjecture" => conjecture(cfg),
        "gb" => gb(cfg),
        "props" => props(cfg),
        other => Err(CliError::Usage(format!("unknown command `{other}`"))),
    }
}

/// Budget exhaustion becomes `None`; other errors propagate.
pub(crate) fn settle<T>(r: CoreResult<T>) -> Result<Option<T>, CliError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if inconclusive_of(&e).is_some() => Ok(None),
        Err(e) => Err(e.into()),
    }
}

pub(crate) fn verdict_word(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "ok",
        Some(false) => "FAILED",
        None => "inconclusive",
    }
}
