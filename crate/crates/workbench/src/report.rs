use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Success,
    Inconclusive,
    Failure,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Success => 0,
            Status::Failure => 1,
            Status::Inconclusive => 2,
        }
    }

    /// A counterexample outranks an unfinished computation.
    pub fn combine(self, other: Status) -> Status {
        self.max(other)
    }

    pub fn from_verdict(v: Option<bool>) -> Status {
        match v {
            Some(true) => Status::Success,
            Some(false) => Status::Failure,
            None => Status::Inconclusive,
        }
    }

    pub fn all(items: impl IntoIterator<Item = Status>) -> Status {
        items.into_iter().fold(Status::Success, Status::combine)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Timings {
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub config: Value,
    pub status: Status,
    pub exit_code: i32,
    pub summary: Value,
    pub items: Vec<Value>,
    pub timings: Timings,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_precedence() {
        assert_eq!(Status::all([Status::Success, Status::Inconclusive]), Status::Inconclusive);
        assert_eq!(Status::all([Status::Inconclusive, Status::Failure, Status::Success]), Status::Failure);
        assert_eq!(Status::all([]), Status::Success);
        assert_eq!(Status::from_verdict(None).exit_code(), 2);
    }
}
