//! Text and JSON rendering of command results.
//!
//! JSON goes through `serde_json::Value`, whose maps are ordered by key, so
//! output is stable. Rationals are always `"p/q"` strings.

use cremona_core::certificates::{CheckOutcome, RandomizedCheck, Witness};
use cremona_core::elementary::LinearizationCheck;
use cremona_core::finite_obstruction::MonomialRelations;
use cremona_core::{
    ClassCertificate, GroupProfile, JonqElement, Matrix, NonlinearityReport, SolvabilityCertificate,
};
use serde_json::{json, Value};
use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A rendered command result: exit code plus both renderings.
#[derive(Clone, Debug)]
pub struct Report {
    pub code: i32,
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).unwrap() + "\n",
        }
    }
}

pub fn element_text(e: &JonqElement) -> String {
    format!("{e}\n(t, g, f) = ({}, {}, {})\n", e.t(), e.g(), e.f())
}

fn status(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn witness_line(out: &mut String, label: &str, w: &Witness) {
    writeln!(out, "  {label}: {}", w.value).unwrap();
    writeln!(out, "    {} = {}", w.expression, w.value).unwrap();
}

fn randomized_lines(out: &mut String, checks: &[RandomizedCheck]) {
    for c in checks {
        writeln!(
            out,
            "  check: {} (seed {}, {} trials) {}",
            c.name,
            c.seed,
            c.trials,
            status(c.all_passed)
        )
        .unwrap();
    }
}

fn outcome_lines(out: &mut String, outcome: &CheckOutcome) {
    if outcome.passed() {
        out.push_str("  verdict: verified\n");
    } else {
        out.push_str("  verdict: FAILED\n");
        for f in &outcome.failures {
            writeln!(out, "    - {f}").unwrap();
        }
    }
}

pub fn class_text(cert: &ClassCertificate, outcome: &CheckOutcome) -> String {
    let mut out = String::new();
    writeln!(out, "Gamma_{}: nilpotency class {}", cert.n, cert.claimed_class).unwrap();
    witness_line(&mut out, "lower witness", &cert.lower_witness);
    witness_line(&mut out, "vanishing witness", &cert.vanishing_witness);
    for c in &cert.filtration_checks {
        writeln!(out, "  filtration: deg(Delta X^{}) = {} {}", c.j, c.j - 1, status(c.verified)).unwrap();
    }
    randomized_lines(&mut out, &cert.randomized_checks);
    outcome_lines(&mut out, outcome);
    out
}

pub fn solvability_text(cert: &SolvabilityCertificate, outcome: &CheckOutcome) -> String {
    let mut out = String::new();
    writeln!(out, "G = <s(1), a(1), m(X)>: derived length {}", cert.claimed_length).unwrap();
    witness_line(&mut out, "first commutator", &cert.first_commutator);
    witness_line(&mut out, "second commutator", &cert.second_commutator);
    witness_line(&mut out, "lower witness", &cert.lower_witness);
    randomized_lines(&mut out, &cert.upper_checks);
    outcome_lines(&mut out, outcome);
    out
}

pub fn nonlinearity_text(report: &NonlinearityReport, outcome: &CheckOutcome) -> String {
    let mut out = String::new();
    writeln!(out, "{:>4} {:>6} {:>12}", "n", "class", "dim >=").unwrap();
    for r in &report.rows {
        writeln!(out, "{:>4} {:>6} {:>12}", r.n, r.class, r.dim_lower_bound).unwrap();
    }
    witness_line(&mut out, "Gamma_2 nonabelian", &report.gamma2_nonabelian);
    for (g, o) in &report.gamma2_generator_orders {
        writeln!(out, "  order of {g}: {o}").unwrap();
    }
    for fact in &report.cited_facts {
        writeln!(out, "  cited: {fact}").unwrap();
    }
    writeln!(out, "  {}", report.verdict).unwrap();
    outcome_lines(&mut out, outcome);
    out
}

pub fn profile_text(p: &GroupProfile, min_dim: Option<u64>) -> String {
    let mut out = String::new();
    let mut dims = p.irrep_dims.clone();
    dims.dedup();
    let multiset: Vec<String> = dims
        .iter()
        .map(|d| format!("{}x{}", d, p.irrep_dims.iter().filter(|&&e| e == *d).count()))
        .collect();
    writeln!(out, "Heisenberg group mod {}", p.p).unwrap();
    writeln!(out, "  order: {}", p.order).unwrap();
    writeln!(out, "  conjugacy classes: {}", p.num_classes).unwrap();
    writeln!(out, "  center: {}, derived subgroup: {}, equal: {}", p.center_size, p.derived_size, p.derived_equals_center).unwrap();
    writeln!(out, "  linear characters: {}", p.num_linear).unwrap();
    writeln!(out, "  irreducible dimensions: {{{}}}", multiset.join(", ")).unwrap();
    writeln!(
        out,
        "  uniqueness search: {} solution(s), transcript length {}",
        p.search_solutions, p.search_transcript_len
    )
    .unwrap();
    if let Some(d) = min_dim {
        writeln!(out, "  minimal dimension nontrivial on the center: {d}").unwrap();
    }
    out
}

pub fn monomial_text(r: &MonomialRelations) -> String {
    let mut out = String::new();
    writeln!(out, "monomial maps mod {}", r.p).unwrap();
    writeln!(out, "  sigma*alpha*sigma^-1*alpha^-1 = beta: {}", status(r.commutator_is_beta)).unwrap();
    writeln!(out, "  [beta, sigma] = 1: {}", status(r.beta_commutes_with_sigma)).unwrap();
    writeln!(out, "  [beta, alpha] = 1: {}", status(r.beta_commutes_with_alpha)).unwrap();
    writeln!(out, "  alpha has order {}: {}", r.p, status(r.alpha_has_order_p)).unwrap();
    out
}

pub fn matrix_text(out: &mut String, m: &Matrix) {
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        writeln!(out, "    [{}]", cells.join(", ")).unwrap();
    }
}

pub fn linearization_json(degree: usize, mats: &[Matrix], check: &LinearizationCheck) -> Value {
    json!({
        "degree": degree,
        "size": degree + 3,
        "basis": basis_names(degree),
        "matrices": mats.iter().map(Matrix::to_json).collect::<Vec<_>>(),
        "check": check,
        "passed": check.passed(),
    })
}

pub fn basis_names(degree: usize) -> Vec<String> {
    let mut names = vec!["x".to_string(), "1".to_string()];
    names.extend((1..=degree + 1).map(|k| if k == 1 { "y".to_string() } else { format!("y^{k}") }));
    names
}
