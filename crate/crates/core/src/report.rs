//! Verification reports. Failures are data, not panics.

use std::fmt;

use serde::Serialize;

/// Number of failure witnesses kept per report.
pub const MAX_WITNESSES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Preconditions of the checked statement are not met.
    OutOfScope,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub witnesses: Vec<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            checked: 0,
            failed: 0,
            witnesses: Vec::new(),
            status: Status::Pass,
            note: None,
        }
    }

    pub fn out_of_scope(name: impl Into<String>, why: impl Into<String>) -> Self {
        Report {
            status: Status::OutOfScope,
            note: Some(why.into()),
            ..Report::new(name)
        }
    }

    /// Records one check; `witness` is only rendered on failure.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(witness());
        }
    }

    pub fn fail(&mut self, witness: String) {
        self.failed += 1;
        self.status = Status::Fail;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Combines two reports on the same statement.
    pub fn merge(mut self, other: Report) -> Report {
        self.checked += other.checked;
        self.failed += other.failed;
        for w in other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
        self.status = match (self.status, other.status) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::OutOfScope, Status::OutOfScope) => Status::OutOfScope,
            _ => Status::Pass,
        };
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::OutOfScope => "OUT-OF-SCOPE",
        };
        write!(f, "{tag:<12} {:<48} checked={}", self.name, self.checked)?;
        if self.failed > 0 {
            write!(f, " failed={}", self.failed)?;
        }
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        for w in &self.witnesses {
            write!(f, "\n    witness: {w}")?;
        }
        Ok(())
    }
}
