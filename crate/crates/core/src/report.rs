//! Verification reports.
//!
//! Every checker returns a [`Report`]: one entry per named condition, each
//! either passing or carrying the first violating argument tuple (in
//! lexicographic enumeration order) and the residual `lhs - rhs`.

use std::fmt;

use crate::abelian::{FinAbGroup, GroupElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub args: Vec<GroupElem>,
    pub residual: GroupElem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub violation: Option<Violation>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    checks: Vec<CheckResult>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, violation: Option<Violation>) {
        self.checks.push(CheckResult { name: name.into(), violation });
    }

    /// Appends another report, prefixing each check name.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            let name = if prefix.is_empty() { c.name } else { format!("{prefix}{}", c.name) };
            self.checks.push(CheckResult { name, violation: c.violation });
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.violation.is_none())
    }

    pub fn checks(&self) -> &[CheckResult] {
        &self.checks
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// True when the named check exists and passed.
    pub fn holds(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.violation.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.violation.is_some())
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.failures().next()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.violation {
                None => writeln!(f, "{}: ok", c.name)?,
                Some(v) => {
                    let args: Vec<String> = v.args.iter().map(ToString::to_string).collect();
                    writeln!(
                        f,
                        "{}: FAIL at ({}) residual {}",
                        c.name,
                        args.join(","),
                        v.residual
                    )?
                }
            }
        }
        Ok(())
    }
}

/// Walks `B^k` in enumeration order and returns the first tuple whose
/// residual (written by `residual` into a zeroed buffer) is nonzero.
pub(crate) fn scan(
    domain: &FinAbGroup,
    codomain: &FinAbGroup,
    k: usize,
    mut residual: impl FnMut(&[usize], &mut [u64]),
) -> Option<Violation> {
    let n = domain.order();
    let width = codomain.num_factors();
    let mut args = vec![0usize; k];
    let mut buf = vec![0u64; width];
    let total = n.checked_pow(k as u32).expect("tuple count overflows");
    for _ in 0..total {
        buf.iter_mut().for_each(|x| *x = 0);
        residual(&args, &mut buf);
        if buf.iter().any(|&x| x != 0) {
            return Some(Violation {
                args: args.iter().map(|&i| domain.element_at(i)).collect(),
                residual: codomain.element(buf.clone()).expect("residual is reduced"),
            });
        }
        // odometer, last slot fastest
        for slot in (0..k).rev() {
            args[slot] += 1;
            if args[slot] < n {
                break;
            }
            args[slot] = 0;
        }
    }
    None
}
