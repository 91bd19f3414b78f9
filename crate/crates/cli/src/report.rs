//! Report data model and emission.
//!
//! JSON output is deterministic byte-for-byte for a fixed configuration:
//! struct fields serialize in declaration order, every collection is built
//! in a fixed order, rationals are rendered as exact `p/q` strings, and
//! timings stay out of the serialized form.

use serde::Serialize;
use std::time::Duration;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "SAMPLED")]
    Sampled,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Status {
    pub fn combine(self, other: Status) -> Status {
        use Status::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Sampled, _) | (_, Sampled) => Sampled,
            _ => Pass,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Sampled => "SAMPLED",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteRecord {
    pub id: String,
    pub case: String,
    pub params: Vec<String>,
    pub status: Status,
    pub details: Vec<String>,
    #[serde(skip)]
    pub timing: Duration,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table1Row {
    pub case: String,
    pub families: Vec<String>,
    pub holonomy_dims: Vec<String>,
    pub isometry_algebra_dim: u32,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table2Row {
    pub family: String,
    pub isometry_group: String,
    pub decomposition_case: String,
    pub c_value: String,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table34Row {
    pub structure: String,
    pub compatible: String,
    pub metric_condition: String,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table5Row {
    pub case: String,
    pub isometry_group: String,
    pub contact_pair: String,
    pub paracontact_pair: String,
    pub status: Status,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Tables {
    pub table1: Vec<Table1Row>,
    pub table2: Vec<Table2Row>,
    pub table3: Vec<Table34Row>,
    pub table4: Vec<Table34Row>,
    pub table5: Vec<Table5Row>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub cases: Vec<String>,
    pub samples_per_case: usize,
    pub identity_sample_count: usize,
    pub seed: u64,
    pub perfect_square_only: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: u32,
    pub config: ConfigEcho,
    pub suites: Vec<SuiteRecord>,
    pub tables: Tables,
}

impl Report {
    pub fn overall(&self) -> Status {
        let mut s = Status::Pass;
        for rec in &self.suites {
            s = s.combine(rec.status);
        }
        for row in &self.tables.table1 {
            s = s.combine(row.status);
        }
        s
    }

    pub fn is_fail(&self) -> bool {
        self.suites.iter().any(|r| r.status == Status::Fail)
            || self.tables.table1.iter().any(|r| r.status == Status::Fail)
            || self.tables.table2.iter().any(|r| r.status == Status::Fail)
            || self.tables.table3.iter().any(|r| r.status == Status::Fail)
            || self.tables.table4.iter().any(|r| r.status == Status::Fail)
            || self.tables.table5.iter().any(|r| r.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("# Verification report\n\n");
        out.push_str(&format!(
            "Seed {}, {} samples per case, {} identity samples.\n\n",
            self.config.seed, self.config.samples_per_case, self.config.identity_sample_count
        ));
        out.push_str("## Suites\n\n");
        out.push_str("| suite | case | status |\n|---|---|---|\n");
        for s in &self.suites {
            out.push_str(&format!("| {} | {} | **{}** |\n", s.id, s.case, s.status.label()));
        }
        out.push_str("\n## Coset classification (five metric cases)\n\n");
        out.push_str("| metric case | structures | holonomy dims | isometry dim | status |\n|---|---|---|---|---|\n");
        for r in &self.tables.table1 {
            out.push_str(&format!(
                "| {} | {} | {} | {} | **{}** |\n",
                r.case,
                r.families.join(", "),
                r.holonomy_dims.join(", "),
                r.isometry_algebra_dim,
                r.status.label()
            ));
        }
        out.push_str("\n## Homothetic-case structures and reductive decompositions\n\n");
        out.push_str("| structure | isometry group | case | c | status |\n|---|---|---|---|---|\n");
        for r in &self.tables.table2 {
            out.push_str(&format!(
                "| {} | {} | {} | {} | **{}** |\n",
                r.family, r.isometry_group, r.decomposition_case, r.c_value, r.status.label()
            ));
        }
        for (title, rows) in [
            ("Almost contact structures", &self.tables.table3),
            ("Almost paracontact structures", &self.tables.table4),
        ] {
            out.push_str(&format!("\n## {}\n\n", title));
            out.push_str("| structure | compatible | metric condition | status |\n|---|---|---|---|\n");
            for r in rows {
                out.push_str(&format!(
                    "| {} | {} | {} | **{}** |\n",
                    r.structure, r.compatible, r.metric_condition, r.status.label()
                ));
            }
        }
        out.push_str("\n## Parallel structure pairs\n\n");
        out.push_str("| metric case | isometry group | contact | paracontact | status |\n|---|---|---|---|---|\n");
        for r in &self.tables.table5 {
            out.push_str(&format!(
                "| {} | {} | {} | {} | **{}** |\n",
                r.case, r.isometry_group, r.contact_pair, r.paracontact_pair, r.status.label()
            ));
        }
        out.push_str(&format!("\nOverall: **{}**\n", self.overall().label()));
        out
    }
}
