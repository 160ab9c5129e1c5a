use serde::Serialize;

use crate::bounds::BoundVerdict;

/// A tagged justification attached to a table row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reason {
    pub tag: String,
    pub detail: String,
}

impl Reason {
    pub fn new(tag: impl Into<String>, detail: impl Into<String>) -> Self {
        Self { tag: tag.into(), detail: detail.into() }
    }

    pub(crate) fn from_bound(v: &BoundVerdict, relation: &str) -> Self {
        let status = if v.holds { "holds" } else { "fails" };
        Self::new(v.name, format!("{status}: {} {relation} {}", v.witness.0, v.witness.1))
    }
}

/// Compact `tag;tag;...` form used by the table and CSV emitters.
pub fn join_tags(reasons: &[Reason]) -> String {
    reasons.iter().map(|r| r.tag.as_str()).collect::<Vec<_>>().join(";")
}
