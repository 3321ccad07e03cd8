//! The verification routines behind `operad-forge verify`, shared with the
//! acceptance suite.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Result};
use operad_forge_core::{associator, check_pre_lie_relation, find_collision, AxiomReport, PreLie, SetOperad, Tree};

use crate::parallel;

/// Outcome of one verification: pass or fail plus the lines to print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub ok: bool,
    pub lines: Vec<String>,
}

impl Check {
    fn new(ok: bool, lines: Vec<String>) -> Check {
        Check { ok, lines }
    }
}

/// Any of the four operads the CLI knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperadKind {
    PreLie,
    Set(SetOperad),
}

impl FromStr for OperadKind {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<OperadKind> {
        match s {
            "pl" => Ok(OperadKind::PreLie),
            other => match other.parse() {
                Ok(kind) => Ok(OperadKind::Set(kind)),
                Err(_) => bail!("unknown operad {other:?}; expected pl, max, min or nap"),
            },
        }
    }
}

impl fmt::Display for OperadKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperadKind::PreLie => f.write_str("pl"),
            OperadKind::Set(kind) => write!(f, "{kind}"),
        }
    }
}

fn axiom_check(report: AxiomReport, what: String) -> Check {
    let mut lines: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
    if report.is_ok() {
        lines.push(format!("OK {what}: {} instances", report.instances));
    } else {
        lines.push(format!("FAIL {what}: {} violations in {} instances", report.violations.len(), report.instances));
    }
    Check::new(report.is_ok(), lines)
}

/// Sequential, parallel and unit axioms over every basis element of arity
/// at most `max_arity`.
pub fn axioms(kind: OperadKind, max_arity: usize) -> Check {
    let report = match kind {
        OperadKind::PreLie => parallel::check_axioms(&PreLie, max_arity),
        OperadKind::Set(k) => parallel::check_axioms(&k, max_arity),
    };
    axiom_check(report, format!("{kind} axioms up to arity {max_arity}"))
}

/// Unit laws alone, which stay cheap at larger arities.
pub fn unit_laws(kind: OperadKind, max_arity: usize) -> Check {
    let report = match kind {
        OperadKind::PreLie => parallel::check_unit_laws_up_to(&PreLie, max_arity),
        OperadKind::Set(k) => parallel::check_unit_laws_up_to(&k, max_arity),
    };
    axiom_check(report, format!("{kind} unit laws up to arity {max_arity}"))
}

pub fn freeness(n: usize) -> Result<Check> {
    let report = parallel::verify_freeness(n)?;
    Ok(Check::new(report.is_free(), vec![report.to_string()]))
}

pub fn minmax(max_arity: usize) -> Check {
    let report = parallel::verify_minmax(max_arity);
    let mut lines = report.failures.clone();
    if report.is_ok() {
        lines.push(format!("OK {} compositions up to arity {max_arity}", report.compositions));
    } else {
        lines.push(format!("FAIL {} of {} compositions", report.failures.len(), report.compositions));
    }
    Check::new(report.is_ok(), lines)
}

/// The associator of `1(2)` must be the single tree `1(2,3)`, which is
/// symmetric in its last two inputs.
pub fn prelie() -> Check {
    let mu: Tree = "1(2)".parse().expect("literal tree");
    let assoc = associator(&mu).expect("binary tree");
    let single: Tree = "1(2,3)".parse().expect("literal tree");
    let expected = operad_forge_core::TreeSum::from_tree(single);
    let ok = check_pre_lie_relation() && assoc == expected;
    let verdict = if ok { "OK" } else { "FAIL" };
    Check::new(ok, vec![format!("associator(1(2)) = {assoc}"), format!("{verdict} pre-Lie relation")])
}

/// Two operation trees with equal evaluation show that `kind` is not free
/// on its indecomposables; finding one is success.
pub fn collisions(kind: SetOperad, n: usize) -> Result<Check> {
    Ok(match find_collision(kind, n)? {
        Some((w1, w2)) => {
            let x = w1.evaluate_in(kind);
            Check::new(true, vec![format!("COLLISION {w1} | {w2} -> {x}")])
        }
        None => Check::new(false, vec![format!("NONE no collision for {kind} at arity {n}")]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_parse() {
        assert_eq!("pl".parse::<OperadKind>().unwrap(), OperadKind::PreLie);
        assert_eq!("nap".parse::<OperadKind>().unwrap(), OperadKind::Set(SetOperad::Nap));
        assert!("lie".parse::<OperadKind>().is_err());
    }

    #[test]
    fn small_checks() {
        assert!(axioms(OperadKind::Set(SetOperad::Max), 2).ok);
        assert!(unit_laws(OperadKind::PreLie, 3).ok);
        assert_eq!(freeness(3).unwrap().lines, ["OK 9 trees, 9 constructions"]);
        assert!(prelie().ok);
        assert_eq!(
            collisions(SetOperad::Min, 3).unwrap().lines,
            ["COLLISION 1(2)[1(2), _] | 1(2)[_, 1(2)] -> 1(2(3))"]
        );
        assert!(!collisions(SetOperad::Max, 3).unwrap().ok);
    }
}
