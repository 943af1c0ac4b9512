//! Line-oriented text for traces, audits and violations.

use std::fmt::Write as _;

use lfec_core::discharge::{Audit, TransferLog};
use lfec_core::facial::Violation;
use lfec_core::reduce::Construction;

/// One line per trace event, then one per list-size shortfall met while
/// extending.
pub fn trace_text(c: &Construction) -> String {
    let mut out = String::new();
    for line in &c.trace {
        writeln!(out, "{line}").unwrap();
    }
    for s in &c.shortfalls {
        writeln!(out, "shortfall kind={} edge={} expected={} found={}", s.kind, s.edge, s.expected, s.found).unwrap();
    }
    out
}

/// The audit as `key value` lines, charges written as exact `p/q`. With a
/// log, every transfer is listed after the totals.
pub fn audit_text(a: &Audit, log: Option<&TransferLog>) -> String {
    let mut out = String::new();
    writeln!(out, "initial {}", a.initial_total).unwrap();
    writeln!(out, "final {}", a.final_total).unwrap();
    if let Some(log) = log {
        for t in &log.transfers {
            writeln!(out, "transfer {} {} {} {}", t.rule, t.from, t.to, t.amount).unwrap();
        }
    }
    for (x, ch) in &a.negative {
        writeln!(out, "negative {x} {ch}").unwrap();
    }
    match &a.detected {
        Some(c) => writeln!(out, "detect {} witness={}", c.kind, c.witness).unwrap(),
        None => writeln!(out, "detect none").unwrap(),
    }
    writeln!(out, "r4-below-2 {}", a.small_r4.len()).unwrap();
    out
}

pub fn violation_line(v: &Violation) -> String {
    format!("violation {} {} face={} distance={}", v.e, v.f, v.face, v.distance)
}
