use serde::Serialize;

/// One failed check, replayable from its seed and case index.
#[derive(Debug, Clone, Serialize)]
pub struct FailureDetail {
    pub case_index: usize,
    pub case_seed: u64,
    pub message: String,
}

/// Outcome of one law across its generated cases. `worst_slack` is the
/// largest observed margin `lhs − rhs` over all inequality checks; the law
/// passes when it stays at or below `allowed_slack`.
#[derive(Debug, Clone, Serialize)]
pub struct LawRecord {
    pub id: String,
    pub statement: String,
    pub cases: usize,
    pub failures: usize,
    pub worst_slack: f64,
    pub allowed_slack: f64,
    pub failure_details: Vec<FailureDetail>,
    /// Wall time; excluded from serialized output so reports are
    /// byte-identical per seed.
    #[serde(skip)]
    pub elapsed_ms: u128,
}

const DETAIL_CAP: usize = 5;

impl LawRecord {
    pub(crate) fn new(id: &str, statement: &str, allowed_slack: f64) -> Self {
        Self {
            id: id.to_string(),
            statement: statement.to_string(),
            cases: 0,
            failures: 0,
            worst_slack: f64::NEG_INFINITY,
            allowed_slack,
            failure_details: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub(crate) fn observe(&mut self, margin: f64) {
        if margin > self.worst_slack {
            self.worst_slack = margin;
        }
    }

    pub(crate) fn fail(&mut self, case_index: usize, case_seed: u64, message: String) {
        self.failures += 1;
        if self.failure_details.len() < DETAIL_CAP {
            self.failure_details.push(FailureDetail { case_index, case_seed, message });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Outcome of a verdict-exempt exploration of a statement that is open;
/// observations are recorded, never judged.
#[derive(Debug, Clone, Serialize)]
pub struct ExplorationRecord {
    pub id: String,
    pub label: String,
    pub cases: usize,
    pub observations: Vec<String>,
}

/// Full suite report. Serialization omits timings, so two runs with the
/// same configuration produce byte-identical output.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub laws: Vec<LawRecord>,
    pub exploration: Vec<ExplorationRecord>,
    pub audit: Vec<String>,
    pub verdict: String,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,cases,failures,worst_slack,allowed_slack\n");
        for l in &self.laws {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                l.id,
                l.cases,
                l.failures,
                fmt_sig(l.worst_slack),
                fmt_sig(l.allowed_slack)
            ));
        }
        out
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite: {}   seed: {}\n", self.suite, self.seed));
        out.push_str(&format!(
            "{:<28} {:>6} {:>6} {:>20} {:>12} {:>8}\n",
            "law", "cases", "fail", "worst slack", "allowed", "ms"
        ));
        for l in &self.laws {
            out.push_str(&format!(
                "{:<28} {:>6} {:>6} {:>20} {:>12} {:>8}\n",
                l.id,
                l.cases,
                l.failures,
                fmt_sig(l.worst_slack),
                format!("{:.1e}", l.allowed_slack),
                l.elapsed_ms
            ));
        }
        for e in &self.exploration {
            out.push_str(&format!("{:<28} {:>6}  [{}]\n", e.id, e.cases, e.label));
            for o in &e.observations {
                out.push_str(&format!("    {o}\n"));
            }
        }
        for a in &self.audit {
            out.push_str(&format!("audit: {a}\n"));
        }
        for l in &self.laws {
            for d in &l.failure_details {
                out.push_str(&format!(
                    "FAIL {} case {} (replay seed={} case={}): {}\n",
                    l.id, d.case_index, d.case_seed, d.case_index, d.message
                ));
            }
        }
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out
    }
}

/// 12 significant digits, scientific.
pub fn fmt_sig(v: f64) -> String {
    if v == f64::NEG_INFINITY {
        return "-inf".into();
    }
    format!("{v:.11e}")
}
