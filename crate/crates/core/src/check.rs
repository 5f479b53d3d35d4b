//! Named inequality checks with exact values, used in feasibility traces.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::rat::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Lt,
    Le,
    Eq,
    Ne,
    Ge,
    Gt,
}

impl Rel {
    pub fn holds(self, lhs: Rat, rhs: Rat) -> bool {
        match self {
            Rel::Lt => lhs < rhs,
            Rel::Le => lhs <= rhs,
            Rel::Eq => lhs == rhs,
            Rel::Ne => lhs != rhs,
            Rel::Ge => lhs >= rhs,
            Rel::Gt => lhs > rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Lt => "<",
            Rel::Le => "<=",
            Rel::Eq => "=",
            Rel::Ne => "!=",
            Rel::Ge => ">=",
            Rel::Gt => ">",
        }
    }
}

impl Serialize for Rel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: Rat,
    pub rel: Rel,
    pub rhs: Rat,
    pub pass: bool,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        lhs: impl Into<Rat>,
        rel: Rel,
        rhs: impl Into<Rat>,
    ) -> Check {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        Check {
            name: name.into(),
            lhs,
            rel,
            rhs,
            pass: rel.holds(lhs, rhs),
        }
    }

    /// A yes/no condition, recorded as `value = 1`.
    pub fn flag(name: impl Into<String>, ok: bool) -> Check {
        Check::new(name, i64::from(ok), Rel::Eq, 1)
    }

    /// Why a failed check failed.
    pub fn reason(&self) -> String {
        if self.lhs == self.rhs && !self.pass {
            format!("{} fails at equality", self.name)
        } else {
            format!(
                "{} fails ({} {} {} is false)",
                self.name,
                self.lhs,
                self.rel.symbol(),
                self.rhs
            )
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.pass { "ok" } else { "FAIL" };
        write!(
            f,
            "{}: {} {} {} [{mark}]",
            self.name,
            self.lhs,
            self.rel.symbol(),
            self.rhs
        )
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}
