//! Registry of exhaustive checks, one per identity. Checks run in a rayon
//! pool and are reported in id order.

mod checks;

use std::fmt::Display;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::dist::dist_poly;
use crate::error::{Error, Result};
use crate::pattern::{ClassSpec, Enumerator};
use crate::perm::Statistic;
use crate::QPoly;

/// Witnesses kept per check; the total is noted when more exist.
const WITNESS_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A non-gating check found a counterexample.
    Finding,
}

/// What a check enumerates, which fixes its default bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    /// Fixed examples; no bound.
    Fixed,
    /// Sweeps all of `S_n`.
    Full,
    /// Enumerates restricted classes only.
    Class,
    /// Closed forms and recurrences, no enumeration.
    Closed,
}

impl Scale {
    pub fn default_bound(self) -> Option<usize> {
        match self {
            Scale::Fixed => None,
            Scale::Full => Some(8),
            Scale::Class => Some(10),
            Scale::Closed => Some(12),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub title: String,
    /// Inclusive range of `n` exercised, absent for fixed examples.
    pub bound: Option<[usize; 2]>,
    pub status: Status,
    pub gating: bool,
    pub witnesses: Vec<Value>,
    pub notes: Vec<String>,
    pub runtime_ms: u64,
}

impl CheckResult {
    pub fn blocks(&self) -> bool {
        self.gating && self.status == Status::Fail
    }
}

pub struct Check {
    pub id: &'static str,
    pub title: &'static str,
    pub scale: Scale,
    /// Largest bound the check accepts.
    pub max_bound: usize,
    pub gating: bool,
    run: fn(&mut Ctx) -> Result<()>,
}

impl Check {
    pub fn default_bound(&self) -> Option<usize> {
        self.scale.default_bound().map(|b| b.min(self.max_bound))
    }

    fn resolve_bound(&self, requested: Option<usize>) -> Result<usize> {
        match (self.scale, requested) {
            (Scale::Fixed, _) => Ok(0),
            (_, Some(n)) if n > self.max_bound => Err(Error::BoundExceeded {
                n,
                bound: self.max_bound,
            }),
            (_, Some(n)) => Ok(n),
            (_, None) => Ok(self.default_bound().unwrap_or(0)),
        }
    }

    pub fn run(&self, bound: Option<usize>) -> Result<CheckResult> {
        let n = self.resolve_bound(bound)?;
        let mut ctx = Ctx::new(n);
        let start = Instant::now();
        (self.run)(&mut ctx)?;
        let runtime_ms = start.elapsed().as_millis() as u64;
        Ok(ctx.finish(self, runtime_ms))
    }
}

/// State threaded through one check.
pub struct Ctx {
    /// Upper end of the size range.
    pub n: usize,
    /// Lower end of the size range, set by the check.
    pub lo: usize,
    pub e: Enumerator,
    witnesses: Vec<Value>,
    mismatches: usize,
    notes: Vec<String>,
}

impl Ctx {
    fn new(n: usize) -> Self {
        Ctx {
            n,
            lo: 1,
            e: Enumerator::default(),
            witnesses: Vec::new(),
            mismatches: 0,
            notes: Vec::new(),
        }
    }

    /// Records a failure with its witness.
    pub fn fail(&mut self, witness: Value) {
        self.mismatches += 1;
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(witness);
        }
    }

    pub fn expect(&mut self, case: impl Display, ok: bool) {
        if !ok {
            self.fail(json!({ "case": case.to_string() }));
        }
    }

    pub fn expect_eq<T: PartialEq + Display>(&mut self, case: impl Display, expected: &T, actual: &T) {
        if expected != actual {
            self.fail(json!({
                "case": case.to_string(),
                "expected": expected.to_string(),
                "actual": actual.to_string(),
            }));
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn crs(&self, spec: &ClassSpec) -> Result<QPoly> {
        dist_poly(&self.e, spec, Statistic::Crs)
    }

    fn finish(mut self, check: &Check, runtime_ms: u64) -> CheckResult {
        if self.mismatches > self.witnesses.len() {
            self.notes.push(format!(
                "{} mismatches, first {} shown",
                self.mismatches,
                self.witnesses.len()
            ));
        }
        let status = match (self.mismatches, check.gating) {
            (0, _) => Status::Pass,
            (_, true) => Status::Fail,
            (_, false) => Status::Finding,
        };
        CheckResult {
            check_id: check.id.to_string(),
            title: check.title.to_string(),
            bound: (check.scale != Scale::Fixed).then_some([self.lo.min(self.n), self.n]),
            status,
            gating: check.gating,
            witnesses: self.witnesses,
            notes: self.notes,
            runtime_ms,
        }
    }
}

pub fn registry() -> &'static [Check] {
    checks::REGISTRY
}

pub fn find(id: &str) -> Result<&'static Check> {
    registry().iter().find(|c| c.id == id).ok_or_else(|| Error::Unknown {
        kind: "check",
        name: id.to_string(),
    })
}

pub fn run_check(id: &str, bound: Option<usize>) -> Result<CheckResult> {
    find(id)?.run(bound)
}

/// Runs the named checks (`"all"` expands to the registry) in parallel and
/// returns their results sorted by id. Ids and bounds are validated before
/// anything runs.
pub fn run_checks(ids: &[&str], bound: Option<usize>) -> Result<Vec<CheckResult>> {
    let mut selected: Vec<&'static Check> = Vec::new();
    for id in ids {
        if *id == "all" {
            selected.extend(registry());
        } else {
            selected.push(find(id)?);
        }
    }
    selected.sort_by_key(|c| c.id);
    selected.dedup_by_key(|c| c.id);
    for c in &selected {
        c.resolve_bound(bound)?;
    }
    let mut results = selected
        .par_iter()
        .map(|c| c.run(bound))
        .collect::<Result<Vec<_>>>()?;
    results.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    Ok(results)
}

/// Whether no gating check failed.
pub fn suite_passed(results: &[CheckResult]) -> bool {
    !results.iter().any(CheckResult::blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every in-scope statement, definition, and worked example with a
    /// check of its own.
    const IN_SCOPE: &[&str] = &[
        "fig-1", "occ-example", "dihedral", "sym-transport", "rci-crs", "catalan", "eq-1",
        "cfrac-321", "thm-1.1", "table-1", "thm-1.2", "rel-3", "insert-op", "lem-2.1", "lem-2.2",
        "lem-2.4", "phi-psi", "prop-2.5", "thm-2.6", "conj-2.7", "thm-2.8", "thm-3.1", "cor-3.2",
        "cor-3.4", "eq-4-6", "eq-7", "prop-4.1", "lem-4.2", "cor-4.3", "skew-sum", "prop-4.4",
        "eq-8", "cor-4.5", "thm-4.6", "prop-5.1", "eq-chung", "eq-dokos", "thm-5.2", "cor-5.3",
        "cor-5.4", "inv-exc-crs",
    ];

    #[test]
    fn registry_is_complete_and_unique() {
        for id in IN_SCOPE {
            assert!(find(id).is_ok(), "missing check {id}");
        }
        let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        let before = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), before, "duplicate ids");
        assert_eq!(before, IN_SCOPE.len(), "unlisted check in registry");
    }

    #[test]
    fn only_the_conjecture_is_non_gating() {
        for c in registry() {
            assert_eq!(c.gating, c.id != "conj-2.7", "{}", c.id);
            if let Some(b) = c.default_bound() {
                assert!(b <= c.max_bound);
            }
        }
    }

    #[test]
    fn unknown_ids_and_oversized_bounds_are_errors() {
        assert!(matches!(run_checks(&["nope"], None), Err(Error::Unknown { .. })));
        assert!(matches!(
            run_checks(&["conj-2.7"], Some(40)),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn fixed_checks_pass() {
        let results = run_checks(&["fig-1", "occ-example", "insert-op", "skew-sum"], Some(4)).unwrap();
        let ids: Vec<&str> = results.iter().map(|r| r.check_id.as_str()).collect();
        assert_eq!(ids, ["fig-1", "insert-op", "occ-example", "skew-sum"]);
        for r in &results {
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
    }

    #[test]
    fn failures_carry_witnesses() {
        let mut ctx = Ctx::new(3);
        ctx.expect_eq("x", &1, &2);
        let check = find("fig-1").unwrap();
        let r = ctx.finish(check, 0);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witnesses.len(), 1);
        assert!(r.blocks());
    }

    #[test]
    fn every_check_passes_at_a_small_bound() {
        let results = run_checks(&["all"], Some(5)).unwrap();
        for r in &results {
            assert_eq!(r.status, Status::Pass, "{}: {:?}", r.check_id, r.witnesses);
        }
        assert!(suite_passed(&results));
    }
}
