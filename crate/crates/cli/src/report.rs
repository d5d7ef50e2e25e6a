//! Report rendering.
//!
//! The machine format is a list of `key=value` lines headed by a version
//! line. Keys appear in a fixed order and keys that do not apply are left
//! out. Rationals are always written as `p/q`, vectors as space-separated
//! entries and matrices as rows separated by `;`.

use std::fmt::Write as _;

use stratzero::gamegen::BenchRecord;
use stratzero::nash::{MixedProfile, SolveOutcome, SolveStatus};
use stratzero::ser0::{EquivalenceReport, RankCase, Refusal, Verdict};
use stratzero::{GameMatrix, Rational};

/// First line of every machine document.
pub const MACHINE_VERSION: &str = "stratzero-report 1";

pub const CSV_HEADER: &str = "m,n,family,seed,wall_time_s,verdict,mode";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Human,
    Machine,
}

/// Everything a report can show.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportDocument {
    pub m: usize,
    pub n: usize,
    pub verdict: Verdict,
    pub gamma: Option<Rational>,
    pub rank_case: Option<RankCase>,
    pub reason: Option<Refusal>,
    pub strictly_competitive: Option<bool>,
    pub a_hat: Option<GameMatrix>,
    pub b_hat: Option<GameMatrix>,
    pub status: Option<SolveStatus>,
    pub profile: Option<MixedProfile>,
    pub zero_sum_value: Option<Rational>,
}

impl ReportDocument {
    /// Classification only; the strictly competitive flag is left out.
    pub fn from_report(report: &EquivalenceReport) -> Self {
        let (m, n) = report.membership_a.dims();
        let (a_hat, b_hat) = match report.equivalent_game() {
            Some((a, b)) => (Some(a.clone()), Some(b.clone())),
            None => (None, None),
        };
        ReportDocument {
            m,
            n,
            verdict: report.verdict(),
            gamma: report.gamma().cloned(),
            rank_case: report.rank_case(),
            reason: report.reason(),
            strictly_competitive: None,
            a_hat,
            b_hat,
            status: None,
            profile: None,
            zero_sum_value: None,
        }
    }

    pub fn with_strictly_competitive(mut self, flag: bool) -> Self {
        self.strictly_competitive = Some(flag);
        self
    }

    pub fn from_outcome(outcome: &SolveOutcome) -> Self {
        ReportDocument {
            status: Some(outcome.status),
            profile: outcome.profile.clone(),
            zero_sum_value: outcome.zero_sum_value.clone(),
            ..ReportDocument::from_report(&outcome.report)
        }
    }
}

fn vector(xs: &[Rational]) -> String {
    xs.iter().map(Rational::to_fraction_string).collect::<Vec<_>>().join(" ")
}

fn matrix(f: &GameMatrix) -> String {
    f.row_iter().map(vector).collect::<Vec<_>>().join(";")
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

pub fn emit_report(doc: &ReportDocument, format: ReportFormat) -> String {
    match format {
        ReportFormat::Machine => emit_machine(doc),
        ReportFormat::Human => emit_human(doc),
    }
}

fn emit_machine(doc: &ReportDocument) -> String {
    let mut lines = vec![
        MACHINE_VERSION.to_string(),
        format!("m={}", doc.m),
        format!("n={}", doc.n),
        format!("verdict={}", doc.verdict.token()),
    ];
    let mut push = |key: &str, value: Option<String>| {
        if let Some(v) = value {
            lines.push(format!("{key}={v}"));
        }
    };
    push("gamma", doc.gamma.as_ref().map(Rational::to_fraction_string));
    push("rank_case", doc.rank_case.map(|c| c.token().to_string()));
    push("reason", doc.reason.map(|r| r.token().to_string()));
    push("strictly_competitive", doc.strictly_competitive.map(|f| f.to_string()));
    push("a_hat", doc.a_hat.as_ref().map(matrix));
    push("b_hat", doc.b_hat.as_ref().map(matrix));
    push("status", doc.status.map(|s| s.token().to_string()));
    push("p", doc.profile.as_ref().map(|p| vector(&p.p)));
    push("q", doc.profile.as_ref().map(|p| vector(&p.q)));
    push("value", doc.profile.as_ref().map(|p| p.value.to_fraction_string()));
    push("zero_sum_value", doc.zero_sum_value.as_ref().map(Rational::to_fraction_string));
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("    {l}\n")).collect()
}

fn emit_human(doc: &ReportDocument) -> String {
    let mut rows: Vec<(&str, String)> = vec![
        ("game", format!("{}x{}", doc.m, doc.n)),
        ("verdict", doc.verdict.token().to_string()),
    ];
    if let Some(g) = &doc.gamma {
        rows.push(("gamma", g.to_string()));
    }
    if let Some(c) = doc.rank_case {
        rows.push(("rank case", c.token().to_string()));
    }
    if let Some(r) = doc.reason {
        rows.push(("reason", r.token().to_string()));
    }
    if let Some(f) = doc.strictly_competitive {
        rows.push(("strictly competitive", yes_no(f).to_string()));
    }
    if let Some(s) = doc.status {
        rows.push(("status", s.token().to_string()));
    }
    if let Some(p) = &doc.profile {
        let show = |xs: &[Rational]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        rows.push(("row strategy", show(&p.p)));
        rows.push(("column strategy", show(&p.q)));
        rows.push(("row payoff", p.value.to_string()));
    }
    if let Some(v) = &doc.zero_sum_value {
        rows.push(("zero-sum value", v.to_string()));
    }

    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (key, value) in &rows {
        writeln!(out, "{key:<width$}  {value}").expect("writing to a String");
    }
    if let (Some(a), Some(b)) = (&doc.a_hat, &doc.b_hat) {
        out.push_str("equivalent zero-sum game, row payoffs:\n");
        out.push_str(&indent(&a.to_string()));
        out.push_str("equivalent zero-sum game, column payoffs:\n");
        out.push_str(&indent(&b.to_string()));
    }
    out
}

/// Equilibria listed by the support enumeration oracle.
pub fn emit_equilibria(m: usize, n: usize, found: &[MixedProfile], format: ReportFormat) -> String {
    let mut out = String::new();
    match format {
        ReportFormat::Machine => {
            writeln!(out, "{MACHINE_VERSION}\nm={m}\nn={n}\nequilibria={}", found.len()).unwrap();
            for (idx, prof) in found.iter().enumerate() {
                let k = idx + 1;
                writeln!(out, "p.{k}={}", vector(&prof.p)).unwrap();
                writeln!(out, "q.{k}={}", vector(&prof.q)).unwrap();
                writeln!(out, "value.{k}={}", prof.value.to_fraction_string()).unwrap();
            }
        }
        ReportFormat::Human => {
            writeln!(out, "{m}x{n} game, {} equilibria found", found.len()).unwrap();
            for (idx, prof) in found.iter().enumerate() {
                let show = |xs: &[Rational]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                writeln!(out, "#{}  p = ({})  q = ({})  row payoff {}", idx + 1, show(&prof.p), show(&prof.q), prof.value)
                    .unwrap();
            }
        }
    }
    out
}

/// One line per record after the fixed header.
pub fn emit_bench_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{:.9},{},{}",
            r.m,
            r.n,
            r.family.token(),
            r.seed,
            r.wall_time,
            r.verdict.token(),
            r.mode.token()
        )
        .expect("writing to a String");
    }
    out
}
