//! Command reports: a JSON form that round-trips and an aligned text form.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use qta_core::cochain::Witness;
use qta_core::MultilinearMap;
use serde::{Deserialize, Serialize};

use crate::document::{Frac, MatrixValues, TableValues};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
        }
    }
}

/// First nonzero coefficient of a residual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessOut {
    pub tuple: Vec<usize>,
    pub output: usize,
    pub value: Frac,
}

impl From<Witness> for WitnessOut {
    fn from(w: Witness) -> Self {
        WitnessOut { tuple: w.tuple, output: w.output, value: Frac(w.value) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    /// Passes iff `residual` vanishes.
    pub fn zero(name: impl Into<String>, residual: &MultilinearMap) -> Self {
        let witness = residual.witness().map(WitnessOut::from);
        Check { name: name.into(), passed: witness.is_none(), witness, note: None }
    }

    pub fn flag(name: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), passed, witness: None, note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CohomologyRow {
    pub degree: usize,
    pub cochains: usize,
    pub cycles: usize,
    pub boundaries: usize,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CohomologyTable {
    pub rows: Vec<CohomologyRow>,
    /// `differentials[n]` is the matrix of `d: C^n → C^{n+1}`.
    pub differentials: Vec<MatrixValues>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Output {
    Text(String),
    Table(TableValues),
    Matrix(MatrixValues),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub command: String,
    pub verdict: Verdict,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub outputs: BTreeMap<String, Output>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<CohomologyTable>,
    pub elapsed_us: u64,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            verdict: Verdict::Pass,
            checks: Vec::new(),
            outputs: BTreeMap::new(),
            cohomology: None,
            elapsed_us: 0,
        }
    }

    pub fn push(&mut self, check: Check) {
        if !check.passed {
            self.verdict = Verdict::Fail;
        }
        self.checks.push(check);
    }

    pub fn output(&mut self, name: impl Into<String>, value: Output) {
        self.outputs.insert(name.into(), value);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let verdict = match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        };
        let _ = writeln!(s, "command  {}", self.command);
        let _ = writeln!(s, "verdict  {verdict}");
        if !self.checks.is_empty() {
            let _ = writeln!(s, "checks");
        }
        for c in &self.checks {
            let _ = write!(s, "  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name);
            if let Some(w) = &c.witness {
                let _ = write!(s, "  (nonzero at {:?} -> e{}: {})", w.tuple, w.output, w.value.0);
            }
            if let Some(note) = &c.note {
                let _ = write!(s, "  {note}");
            }
            s.push('\n');
        }
        for (name, out) in &self.outputs {
            match out {
                Output::Text(t) => {
                    let _ = writeln!(s, "{name}  {t}");
                }
                Output::Table(t) => {
                    let _ = writeln!(s, "{name}");
                    for (i, row) in t.iter().enumerate() {
                        for (j, v) in row.iter().enumerate() {
                            let v: Vec<String> = v.iter().map(|x| x.0.to_string()).collect();
                            let _ = writeln!(s, "  ({i},{j}) -> [{}]", v.join(", "));
                        }
                    }
                }
                Output::Matrix(m) => {
                    let _ = writeln!(s, "{name}");
                    for row in m {
                        let v: Vec<String> = row.iter().map(|x| format!("{:>6}", x.0.to_string())).collect();
                        let _ = writeln!(s, "  {}", v.join(" "));
                    }
                }
            }
        }
        if let Some(table) = &self.cohomology {
            let _ = writeln!(s, "{:<6}{:>8}{:>8}{:>8}{:>8}", "", "dim C", "dim Z", "dim B", "dim H");
            for r in &table.rows {
                let _ = writeln!(
                    s,
                    "{:<6}{:>8}{:>8}{:>8}{:>8}",
                    format!("H{}", r.degree),
                    r.cochains,
                    r.cycles,
                    r.boundaries,
                    r.dim
                );
            }
        }
        let _ = writeln!(s, "elapsed  {} us", self.elapsed_us);
        s
    }
}
