//! Report rendering in the three output formats. JSON output is a single
//! envelope object; for `check` the elapsed fields are omitted/null so
//! reports are byte-identical across runs. CSV carries the documented
//! fixed header per command.

use serde::Serialize;

use sdstab_core::claims::{ClaimReport, ClaimStatus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

impl OutputFormat {
    pub fn name(&self) -> &'static str {
        match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        }
    }
}

/// Echo of the global flags, embedded in every JSON envelope.
#[derive(Clone, Debug, Serialize)]
pub struct GlobalEcho {
    pub format: &'static str,
    pub witness: bool,
    pub oracle: bool,
    pub jobs: Option<usize>,
    pub time_limit_secs: Option<f64>,
}

#[derive(Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub command: &'a str,
    pub input: &'a str,
    pub result: &'a T,
    pub config: &'a GlobalEcho,
    /// None renders as null; used by `check` to keep reports
    /// byte-identical across runs.
    pub elapsed_ms: Option<f64>,
}

pub fn to_json<T: Serialize>(envelope: &Envelope<T>) -> String {
    let mut s = serde_json::to_string_pretty(envelope).expect("serializable report");
    s.push('\n');
    s
}

/// CSV field quoting: wrap when the field contains a comma, quote, or
/// newline, doubling inner quotes.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Serialize)]
pub struct GammaOutput {
    pub order: usize,
    pub gamma_st: usize,
    pub witness: Vec<usize>,
}

pub fn gamma_text(input: &str, out: &GammaOutput, show_witness: bool) -> String {
    let mut s = format!("gamma_st({input}) = {}\n", out.gamma_st);
    if show_witness {
        let w: Vec<String> = out.witness.iter().map(|v| v.to_string()).collect();
        s.push_str(&format!("witness: {{{}}}\n", w.join(", ")));
    }
    s
}

pub fn gamma_csv(input: &str, out: &GammaOutput) -> String {
    let w: Vec<String> = out.witness.iter().map(|v| v.to_string()).collect();
    format!(
        "input,order,gamma_st,witness\n{},{},{},{}\n",
        csv_field(input),
        out.order,
        out.gamma_st,
        csv_field(&w.join(" "))
    )
}

#[derive(Serialize)]
pub struct StabilityOutput {
    pub order: usize,
    pub gamma_st: usize,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conventional_value: Option<usize>,
    pub witness: Vec<usize>,
    pub critical: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_after: Option<usize>,
}

pub fn stability_text(input: &str, out: &StabilityOutput, show_witness: bool) -> String {
    let mut s = match out.outcome {
        "finite" => {
            let dir = if out.critical { "increases" } else { "decreases" };
            format!(
                "stability({input}): st = {} (gamma_st {} -> {}, {dir})\n",
                out.k.unwrap_or(0),
                out.gamma_st,
                out.gamma_after.unwrap_or(0),
            )
        }
        _ => format!(
            "stability({input}): unbounded, conventional value {} (gamma_st = {})\n",
            out.conventional_value.unwrap_or(0),
            out.gamma_st
        ),
    };
    if show_witness && !out.witness.is_empty() {
        let w: Vec<String> = out.witness.iter().map(|v| v.to_string()).collect();
        s.push_str(&format!("removal witness: {{{}}}\n", w.join(", ")));
    }
    s
}

pub fn stability_csv(input: &str, out: &StabilityOutput) -> String {
    let w: Vec<String> = out.witness.iter().map(|v| v.to_string()).collect();
    format!(
        "input,order,gamma_st,outcome,value,critical,witness\n{},{},{},{},{},{},{}\n",
        csv_field(input),
        out.order,
        out.gamma_st,
        out.outcome,
        out.k.or(out.conventional_value).unwrap_or(0),
        out.critical,
        csv_field(&w.join(" "))
    )
}

#[derive(Serialize)]
pub struct DistEntry {
    pub value: String,
    pub count: u64,
}

#[derive(Serialize)]
pub struct EnumerateOutput {
    pub order: usize,
    pub invariant: String,
    pub total: u64,
    pub distribution: Vec<DistEntry>,
}

pub fn enumerate_text(out: &EnumerateOutput) -> String {
    let mut s = format!(
        "{} over all {} labeled graphs of order {}\n",
        out.invariant, out.total, out.order
    );
    for e in &out.distribution {
        s.push_str(&format!("  {} = {}: {} graphs\n", out.invariant, e.value, e.count));
    }
    s
}

pub fn enumerate_csv(out: &EnumerateOutput) -> String {
    let mut s = String::from("invariant,value,count\n");
    for e in &out.distribution {
        s.push_str(&format!("{},{},{}\n", out.invariant, csv_field(&e.value), e.count));
    }
    s
}

#[derive(Serialize)]
pub struct FamilyHelp {
    pub syntax: &'static str,
    pub description: &'static str,
}

pub fn family_help() -> Vec<FamilyHelp> {
    vec![
        FamilyHelp { syntax: "P(n)", description: "path of order n (n >= 1)" },
        FamilyHelp { syntax: "C(n)", description: "cycle of order n (n >= 3)" },
        FamilyHelp { syntax: "W(n)", description: "wheel of order n: hub joined to C_{n-1} (n >= 4)" },
        FamilyHelp { syntax: "K(n)", description: "complete graph of order n" },
        FamilyHelp { syntax: "S(n)", description: "star K_{1,n} of order n+1" },
        FamilyHelp { syntax: "Kb(m,n)", description: "complete bipartite graph with parts m, n" },
        FamilyHelp { syntax: "Km(s1,s2,...)", description: "complete multipartite graph (>= 2 parts)" },
        FamilyHelp { syntax: "CP(n)", description: "cocktail party graph: n parts of size 2" },
        FamilyHelp { syntax: "F(n)", description: "friendship graph: n triangles sharing a vertex" },
        FamilyHelp { syntax: "B(n)", description: "book graph: star K_{1,n} times P_2" },
        FamilyHelp { syntax: "E(n)", description: "empty graph of order n" },
        FamilyHelp { syntax: "M(m)", description: "matching: m disjoint edges" },
        FamilyHelp { syntax: "join(A,B)", description: "join of two specs" },
        FamilyHelp { syntax: "corona(A,B)", description: "corona of two specs" },
        FamilyHelp { syntax: "cart(A,B)", description: "Cartesian product of two specs" },
        FamilyHelp { syntax: "union(A,B)", description: "disjoint union of two specs" },
        FamilyHelp { syntax: "comp(A)", description: "complement of a spec" },
    ]
}

pub fn families_text(help: &[FamilyHelp]) -> String {
    let mut s = String::new();
    for h in help {
        s.push_str(&format!("{:<16} {}\n", h.syntax, h.description));
    }
    s
}

pub fn families_csv(help: &[FamilyHelp]) -> String {
    let mut s = String::from("syntax,description\n");
    for h in help {
        s.push_str(&format!("{},{}\n", csv_field(h.syntax), csv_field(h.description)));
    }
    s
}

pub fn check_text(report: &ClaimReport) -> String {
    let mut s = String::new();
    for v in &report.verdicts {
        s.push_str(&format!(
            "{:<9} {:<32} {:>4} violation(s)  {:.1} ms\n",
            v.status.to_string(),
            v.claim_id,
            v.total_violations,
            v.elapsed.as_secs_f64() * 1e3
        ));
        s.push_str(&format!("          scope: {}\n", v.scope));
        if let Some(d) = &v.detail {
            s.push_str(&format!("          detail: {d}\n"));
        }
        for ce in &v.counterexamples {
            s.push_str(&format!(
                "          counterexample: {} | claimed {} | computed {}{}\n",
                ce.graph,
                ce.claimed,
                ce.computed,
                if ce.oracle_verified { " (oracle-verified)" } else { "" }
            ));
        }
        for note in &v.notes {
            s.push_str(&format!("          note: {note}\n"));
        }
    }
    s.push_str(&format!(
        "summary: {} claims, {} pass, {} mismatch, {} skipped, {} error\n",
        report.summary.total,
        report.summary.pass,
        report.summary.mismatch,
        report.summary.skipped,
        report.summary.error
    ));
    s
}

pub fn check_csv(report: &ClaimReport) -> String {
    let mut s = String::from("claim_id,scope,status,counterexample_count,elapsed_ms\n");
    for v in &report.verdicts {
        s.push_str(&format!(
            "{},{},{},{},{:.3}\n",
            csv_field(&v.claim_id),
            csv_field(&v.scope),
            v.status,
            v.total_violations,
            v.elapsed.as_secs_f64() * 1e3
        ));
    }
    s
}

/// Exit code for a completed check run.
pub fn check_exit_code(report: &ClaimReport) -> i32 {
    if report.timed_out {
        3
    } else if report.has_mismatch() {
        2
    } else if report.verdicts.iter().any(|v| v.status == ClaimStatus::Error) {
        1
    } else {
        0
    }
}
