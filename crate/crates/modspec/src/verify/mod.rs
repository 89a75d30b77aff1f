//! Executable checks over generated instances, with vacuity accounting.

mod catalog;
mod context;

pub use catalog::{catalog, unattainable_reason, CheckDescriptor};
pub use context::{Ctx, EXHAUSTIVE_SUBSETS, SAMPLED_SUBSETS};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Lattice, LatticeBudget, Ring, Shape, SubId};
use crate::spectra::{Module, Side};
use crate::topology::{variety_family, Variant};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("invalid budget: {0}")]
    InvalidBudget(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InstanceBudget {
    pub max_modulus: u64,
    pub max_order: usize,
    pub max_lattice: usize,
    pub max_rank: usize,
}

impl Default for InstanceBudget {
    fn default() -> Self {
        InstanceBudget {
            max_modulus: 60,
            max_order: 128,
            max_lattice: 5000,
            max_rank: 4,
        }
    }
}

impl InstanceBudget {
    /// Every bound must admit at least the module Z/2 over Z/2.
    pub fn validate(&self) -> Result<(), VerifyError> {
        let bad = |what: &str| Err(VerifyError::InvalidBudget(what.to_string()));
        if self.max_modulus < 2 {
            return bad("max modulus must be at least 2");
        }
        if self.max_order < 2 {
            return bad("max order must be at least 2");
        }
        if self.max_lattice < 2 {
            return bad("max lattice size must be at least 2");
        }
        if self.max_rank < 1 {
            return bad("max rank must be at least 1");
        }
        Ok(())
    }
}

/// A generated module with the hypothesis classes readable off its shape.
#[derive(Debug, Clone)]
pub struct Instance {
    pub shape: Shape,
    pub tags: Vec<&'static str>,
}

fn shape_tags(s: &Shape) -> Vec<&'static str> {
    let mut tags = Vec::new();
    if s.is_cyclic() {
        tags.extend(["cyclic", "multiplication", "comultiplication"]);
    }
    if s.is_uniserial() {
        tags.push("uniserial");
    }
    if s.is_semisimple() {
        tags.push("semisimple");
    }
    if s.is_homogeneous_semisimple() {
        tags.push("homogeneous-semisimple");
    }
    if s.is_faithful() {
        tags.push("faithful");
    }
    tags
}

/// All modules ⊕ Z/d_i over Z/n within the budget, ordered by n, then rank, then the factor list.
pub fn enumerate_instances(budget: &InstanceBudget) -> Result<Vec<Instance>, VerifyError> {
    budget.validate()?;
    let mut out = Vec::new();
    for n in 2..=budget.max_modulus {
        let ring = Ring::new(n).expect("n ≥ 2");
        let divisors: Vec<u64> = ring.divisors().iter().copied().filter(|&d| d >= 2).collect();
        for k in 1..=budget.max_rank {
            let mut chains = Vec::new();
            extend_chains(&divisors, k, budget.max_order, &mut Vec::new(), 1, &mut chains);
            for chain in chains {
                let shape = Shape::new(ring.clone(), chain).expect("valid chain");
                out.push(Instance {
                    tags: shape_tags(&shape),
                    shape,
                });
            }
        }
    }
    Ok(out)
}

fn extend_chains(
    divisors: &[u64],
    k: usize,
    max_order: usize,
    prefix: &mut Vec<u64>,
    order: usize,
    out: &mut Vec<Vec<u64>>,
) {
    if prefix.len() == k {
        out.push(prefix.clone());
        return;
    }
    for &d in divisors {
        if prefix.last().is_some_and(|&p| d % p != 0) {
            continue;
        }
        let next = order.saturating_mul(d as usize);
        if next > max_order {
            continue;
        }
        prefix.push(d);
        extend_chains(divisors, k, max_order, prefix, next, out);
        prefix.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub reason: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub submodules: Vec<SubId>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ideals: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Vacuous,
    Fail(Witness),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Vacuous,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check_id: &'static str,
    pub instance: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckResult {
    fn new(check_id: &'static str, instance: &str, outcome: Outcome) -> Self {
        let (status, witness) = match outcome {
            Outcome::Pass => (Status::Pass, None),
            Outcome::Vacuous => (Status::Vacuous, None),
            Outcome::Fail(w) => (Status::Fail, Some(w)),
        };
        CheckResult {
            check_id,
            instance: instance.to_string(),
            status,
            witness,
        }
    }
}

/// Runs one check on one module.
pub fn run_check(check: &CheckDescriptor, ctx: &Ctx) -> CheckResult {
    CheckResult::new(check.id, &ctx.instance, (check.run)(ctx))
}

/// Selects checks by exact id; `None` or an empty list selects the whole catalog.
pub fn select_checks(filter: Option<&[String]>) -> Result<Vec<&'static CheckDescriptor>, VerifyError> {
    let all = catalog();
    match filter {
        None => Ok(all.iter().collect()),
        Some([]) => Ok(all.iter().collect()),
        Some(ids) => {
            for id in ids {
                if !all.iter().any(|c| c.id == id) {
                    return Err(VerifyError::UnknownCheck(id.clone()));
                }
            }
            Ok(all.iter().filter(|c| ids.iter().any(|i| i == c.id)).collect())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub id: &'static str,
    pub statement: &'static str,
    pub pass: usize,
    pub vacuous: usize,
    pub fail: usize,
    pub skipped: usize,
    pub covered: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unattainable: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedInstance {
    pub instance: String,
    pub reason: String,
}

/// Tallies over evaluated instances that bear on questions the checks leave open.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Observations {
    pub top_s: usize,
    pub top_s_restricted_same_closed_sets: usize,
    pub top_c: usize,
    pub top_c_restricted_same_closed_sets: usize,
    pub distributive: usize,
    pub completely_distributive: usize,
    pub distributive_not_completely_distributive: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub evaluated: usize,
    pub skipped: Vec<SkippedInstance>,
    pub pass: usize,
    pub vacuous: usize,
    pub fail: usize,
    pub checks: Vec<CheckSummary>,
    /// Checks vacuous on every instance without a recorded reason.
    pub uncovered: Vec<&'static str>,
    pub observations: Observations,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub budget: InstanceBudget,
    pub summary: Summary,
    pub results: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }
}

struct InstanceRun {
    results: Vec<CheckResult>,
    skipped: Option<SkippedInstance>,
    observations: Observations,
}

fn observe(ctx: &Ctx) -> Observations {
    let m = &ctx.m;
    let same = |side: Side| {
        let closed = |variant| {
            let mut v: Vec<_> = variety_family(m, side, variant).into_iter().map(|(_, b)| b).collect();
            v.sort_by(|a, b| a.canonical_cmp(b));
            v.dedup();
            v
        };
        usize::from(closed(Variant::Full) == closed(Variant::Restricted))
    };
    let s = ctx.structure();
    let mut o = Observations {
        distributive: usize::from(s.distributive),
        completely_distributive: usize::from(s.completely_distributive),
        distributive_not_completely_distributive: usize::from(s.distributive && !s.completely_distributive),
        ..Observations::default()
    };
    if ctx.is_top(Side::Second) {
        o.top_s = 1;
        o.top_s_restricted_same_closed_sets = same(Side::Second);
    }
    if ctx.is_top(Side::Coprime) {
        o.top_c = 1;
        o.top_c_restricted_same_closed_sets = same(Side::Coprime);
    }
    o
}

fn run_instance(inst: &Instance, budget: &InstanceBudget, checks: &[&'static CheckDescriptor]) -> InstanceRun {
    let name = inst.shape.instance();
    let lb = LatticeBudget {
        max_members: budget.max_lattice,
        max_order: budget.max_order,
    };
    let lattice = match Lattice::enumerate(&inst.shape, lb) {
        Ok(l) => l,
        Err(e) => {
            return InstanceRun {
                results: checks
                    .iter()
                    .map(|c| CheckResult {
                        check_id: c.id,
                        instance: name.clone(),
                        status: Status::Skipped,
                        witness: None,
                    })
                    .collect(),
                skipped: Some(SkippedInstance {
                    instance: name,
                    reason: e.to_string(),
                }),
                observations: Observations::default(),
            };
        }
    };
    let ctx = Ctx::new(Module::from_lattice(lattice));
    InstanceRun {
        results: checks.iter().map(|c| run_check(c, &ctx)).collect(),
        skipped: None,
        observations: observe(&ctx),
    }
}

/// Runs the selected checks over every instance in the budget. Results are ordered by instance,
/// then by catalog order, independent of scheduling.
pub fn run_suite(budget: &InstanceBudget, filter: Option<&[String]>) -> Result<SuiteReport, VerifyError> {
    let checks = select_checks(filter)?;
    let instances = enumerate_instances(budget)?;
    let runs: Vec<InstanceRun> = instances
        .par_iter()
        .map(|inst| run_instance(inst, budget, &checks))
        .collect();

    let mut per_check: BTreeMap<&'static str, CheckSummary> = BTreeMap::new();
    let order: Vec<&'static str> = checks.iter().map(|c| c.id).collect();
    for c in &checks {
        per_check.insert(
            c.id,
            CheckSummary {
                id: c.id,
                statement: c.statement,
                pass: 0,
                vacuous: 0,
                fail: 0,
                skipped: 0,
                covered: false,
                unattainable: None,
            },
        );
    }
    let mut results = Vec::new();
    let mut skipped = Vec::new();
    let mut obs = Observations::default();
    for run in runs {
        for r in &run.results {
            let s = per_check.get_mut(r.check_id).expect("selected check");
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Vacuous => s.vacuous += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        results.extend(run.results);
        skipped.extend(run.skipped);
        let o = run.observations;
        obs.top_s += o.top_s;
        obs.top_s_restricted_same_closed_sets += o.top_s_restricted_same_closed_sets;
        obs.top_c += o.top_c;
        obs.top_c_restricted_same_closed_sets += o.top_c_restricted_same_closed_sets;
        obs.distributive += o.distributive;
        obs.completely_distributive += o.completely_distributive;
        obs.distributive_not_completely_distributive += o.distributive_not_completely_distributive;
    }
    let mut summaries = Vec::new();
    let mut uncovered = Vec::new();
    for id in order {
        let mut s = per_check.remove(id).expect("selected check");
        s.covered = s.pass + s.fail > 0;
        if !s.covered {
            s.unattainable = unattainable_reason(id);
            if s.unattainable.is_none() {
                uncovered.push(id);
            }
        }
        summaries.push(s);
    }
    let summary = Summary {
        instances: instances.len(),
        evaluated: instances.len() - skipped.len(),
        skipped,
        pass: summaries.iter().map(|s| s.pass).sum(),
        vacuous: summaries.iter().map(|s| s.vacuous).sum(),
        fail: summaries.iter().map(|s| s.fail).sum(),
        checks: summaries,
        uncovered,
        observations: obs,
    };
    Ok(SuiteReport {
        budget: *budget,
        summary,
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(b: InstanceBudget) -> Vec<String> {
        enumerate_instances(&b)
            .unwrap()
            .iter()
            .map(|i| i.shape.instance())
            .collect()
    }

    #[test]
    fn small_budget_listing() {
        let b = InstanceBudget {
            max_modulus: 6,
            max_order: 8,
            ..InstanceBudget::default()
        };
        let got = names(b);
        for want in ["n=6;M=6", "n=4;M=2,4", "n=2;M=2,2,2", "n=6;M=2"] {
            assert!(got.contains(&want.to_string()), "{want}");
        }
        assert!(!got.contains(&"n=4;M=4,4".to_string()));
        assert_eq!(got[0], "n=2;M=2");
    }

    #[test]
    fn rank_one_gives_cyclic_modules() {
        let b = InstanceBudget {
            max_modulus: 12,
            max_rank: 1,
            ..InstanceBudget::default()
        };
        let got = names(b);
        let want: usize = (2..=12u64)
            .map(|n| (2..=n).filter(|d| n % d == 0).count())
            .sum();
        assert_eq!(got.len(), want);
        assert!(got.iter().all(|s| !s.contains(',')));
    }

    #[test]
    fn order_two_gives_z2_only() {
        let b = InstanceBudget {
            max_order: 2,
            ..InstanceBudget::default()
        };
        assert!(names(b).iter().all(|s| s.ends_with(";M=2")));
    }

    #[test]
    fn invalid_budgets() {
        for b in [
            InstanceBudget { max_modulus: 1, ..Default::default() },
            InstanceBudget { max_order: 1, ..Default::default() },
            InstanceBudget { max_rank: 0, ..Default::default() },
            InstanceBudget { max_lattice: 0, ..Default::default() },
        ] {
            assert!(matches!(run_suite(&b, None), Err(VerifyError::InvalidBudget(_))));
        }
    }

    #[test]
    fn unknown_check_is_rejected() {
        let f = vec!["no-such-check".to_string()];
        assert_eq!(
            select_checks(Some(&f)).unwrap_err(),
            VerifyError::UnknownCheck("no-such-check".into())
        );
    }

    #[test]
    fn filter_runs_one_check() {
        let b = InstanceBudget {
            max_modulus: 12,
            max_order: 16,
            ..Default::default()
        };
        let f = vec!["thm-T2".to_string()];
        let r = run_suite(&b, Some(&f)).unwrap();
        assert!(r.results.iter().all(|x| x.check_id == "thm-T2"));
        assert_eq!(r.summary.checks.len(), 1);
        assert!(r.all_passed());
    }

    #[test]
    fn lattice_budget_skips() {
        let b = InstanceBudget {
            max_modulus: 4,
            max_order: 64,
            max_lattice: 4,
            max_rank: 3,
        };
        let r = run_suite(&b, Some(&["prop-IM".to_string()])).unwrap();
        assert!(r.summary.skipped.iter().any(|s| s.instance == "n=2;M=2,2"));
        assert!(r.results.iter().any(|x| x.status == Status::Skipped));
    }
}
