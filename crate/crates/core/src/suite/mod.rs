//! Seeded verification harness.
//!
//! [`run_suite`] runs every registered law of the selected tiers across
//! randomized algebras, module lengths, sets, operators and semi-norms, and
//! produces a [`Report`] with one record per law: case count, failures,
//! worst observed slack and replay seeds. Known-open statements run in a
//! verdict-exempt exploration tier. Reports are deterministic per
//! configuration (timings are kept out of the serialized form).

mod generators;
mod laws;
mod report;

pub use generators::{golden_splitting_set, random_expr, random_operator, random_vector};
pub use report::{fmt_sig, ExplorationRecord, FailureDetail, LawRecord, Report};

use crate::algebra::AlgebraDesc;
use crate::error::{Error, Result};
use crate::sets::EvalParams;

/// Cases generated per law, by tier.
#[derive(Debug, Clone, Copy)]
pub struct CaseCounts {
    pub core: usize,
    pub seminorm: usize,
    pub operator: usize,
    pub witness: usize,
    pub exploration: usize,
}

impl Default for CaseCounts {
    fn default() -> Self {
        Self { core: 200, seminorm: 60, operator: 200, witness: 12, exploration: 8 }
    }
}

/// Suite configuration: master seed, the algebra and length pools, case
/// counts and tail-evaluation parameters.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub algebras: Vec<AlgebraDesc>,
    pub lengths: Vec<usize>,
    pub counts: CaseCounts,
    pub eval: EvalParams,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 7,
            algebras: default_algebra_pool(),
            lengths: vec![4, 6, 8],
            counts: CaseCounts::default(),
            eval: EvalParams { refine_samples: 48, seed: 0x00c0_ffee },
        }
    }
}

pub fn default_algebra_pool() -> Vec<AlgebraDesc> {
    vec![
        AlgebraDesc::scalar(),
        AlgebraDesc::full(2).expect("valid"),
        AlgebraDesc::new(vec![1, 1]).expect("valid"),
        AlgebraDesc::new(vec![2, 1]).expect("valid"),
        AlgebraDesc::full(3).expect("valid"),
    ]
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.algebras.is_empty() || self.lengths.is_empty() {
            return Err(Error::InvalidParam("algebra and length pools must be nonempty".into()));
        }
        if self.lengths.iter().any(|&n| n < 2) {
            return Err(Error::InvalidParam("module lengths must be >= 2".into()));
        }
        let c = &self.counts;
        if c.core == 0 || c.seminorm == 0 || c.operator == 0 || c.witness == 0 {
            return Err(Error::InvalidParam("case counts must be >= 1".into()));
        }
        Ok(())
    }
}

/// Law tiers; `All` also runs the exploration tier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    Core,
    Seminorm,
    Operator,
    Witness,
    All,
}

impl std::str::FromStr for Selection {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "core" => Ok(Self::Core),
            "seminorm" => Ok(Self::Seminorm),
            "operator" => Ok(Self::Operator),
            "witness" => Ok(Self::Witness),
            "all" => Ok(Self::All),
            other => Err(Error::InvalidParam(format!("unknown suite selection '{other}'"))),
        }
    }
}

impl std::fmt::Display for Selection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Self::Core => "core",
            Self::Seminorm => "seminorm",
            Self::Operator => "operator",
            Self::Witness => "witness",
            Self::All => "all",
        };
        f.write_str(s)
    }
}

/// Run the selected tiers and audit coverage. The verdict is `pass` exactly
/// when every selected law ran with zero failures and the law table covers
/// the registry for the selection.
pub fn run_suite(config: &SuiteConfig, selection: Selection) -> Result<Report> {
    config.validate()?;
    let mut laws = Vec::new();
    for def in laws::registry() {
        if !selection_includes(selection, def.tier) {
            continue;
        }
        let mut rec = LawRecord::new(def.id, def.statement, def.slack);
        let start = std::time::Instant::now();
        (def.run)(config, &mut rec);
        rec.elapsed_ms = start.elapsed().as_millis();
        laws.push(rec);
    }
    let exploration = if selection == Selection::All {
        laws::run_exploration(config)
    } else {
        Vec::new()
    };

    // coverage self-audit: every registered law of the selection must have
    // produced a record with at least one case
    let mut audit = Vec::new();
    for def in laws::registry() {
        if !selection_includes(selection, def.tier) {
            continue;
        }
        match laws.iter().find(|r| r.id == def.id) {
            None => audit.push(format!("law '{}' missing from the report", def.id)),
            Some(r) if r.cases == 0 => audit.push(format!("law '{}' ran zero cases", def.id)),
            _ => {}
        }
    }
    let pass = audit.is_empty() && laws.iter().all(|l| l.passed());
    Ok(Report {
        suite: selection.to_string(),
        seed: config.seed,
        laws,
        exploration,
        audit,
        verdict: if pass { "pass".into() } else { "fail".into() },
    })
}

fn selection_includes(sel: Selection, tier: laws::Tier) -> bool {
    matches!(
        (sel, tier),
        (Selection::All, _)
            | (Selection::Core, laws::Tier::Core)
            | (Selection::Seminorm, laws::Tier::Seminorm)
            | (Selection::Operator, laws::Tier::Operator)
            | (Selection::Witness, laws::Tier::Witness)
    )
}
