use std::fmt::Write;

use serde::de::DeserializeOwned;

use super::{AbelianizeOutcome, ArcRun, Check, JordanOutcome, PbpRun, Pi1Outcome, PushoutOutcome, Report, Status};
use crate::groupoid::{render_word, GroupWord};

fn typed<T: DeserializeOwned>(report: &Report) -> Option<T> {
    serde_json::from_value(report.result.clone()?).ok()
}

/// Human-readable form of a report. Presentations are written
/// `⟨gens | relators⟩` with exponents collapsed.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    if let Some(e) = &report.error {
        let _ = writeln!(out, "error ({}): {}", e.kind, e.message.trim_end());
        return out;
    }
    if report.subcommand == "help" {
        if let Some(serde_json::Value::String(s)) = &report.result {
            out.push_str(s);
        }
        return out;
    }
    match report.subcommand.as_str() {
        "pushout" => {
            if let Some(r) = typed::<PushoutOutcome>(report) {
                pushout(&mut out, &r);
            }
        }
        "pi1" => {
            if let Some(r) = typed::<Pi1Outcome>(report) {
                let _ = writeln!(out, "π₁ at {}", r.basepoint);
                let _ = writeln!(out, "euler characteristic: {}", r.euler_characteristic);
                let _ = writeln!(out, "presentation: {}", r.presentation);
                let _ = writeln!(out, "simplified:   {}", r.simplified);
                let _ = writeln!(out, "abelianization: {}", r.abelianization);
                let _ = writeln!(out, "retract onto Z: {}", retract(r.retract));
                checks(&mut out, &r.checks);
            }
        }
        "abelianize" => {
            if let Some(r) = typed::<AbelianizeOutcome>(report) {
                let _ = writeln!(out, "presentation: {}", r.presentation);
                let _ = writeln!(out, "simplified:   {}", r.simplified);
                let _ = writeln!(out, "abelianization: {}", r.abelianization);
                let _ = writeln!(out, "retract onto Z: {}", retract(r.retract));
            }
        }
        "jordan" => {
            if let Some(r) = typed::<JordanOutcome>(report) {
                jordan(&mut out, &r);
            }
        }
        "pbp" => {
            if let Some(r) = typed::<PbpRun>(report) {
                for (k, inst) in r.instances.iter().enumerate() {
                    let _ = writeln!(
                        out,
                        "#{k}: D = {}, E = {}, a = {}, b = {}: {:?} (D {}, E {}, D ∪ E {})",
                        names(&inst.d.vertices, &inst.d.edges),
                        names(&inst.e.vertices, &inst.e.edges),
                        inst.a,
                        inst.b,
                        inst.outcome.verdict,
                        sep(inst.outcome.d_separates),
                        sep(inst.outcome.e_separates),
                        sep(inst.outcome.union_separates),
                    );
                }
                let _ = writeln!(out, "{} instances, {} violations", r.instances.len(), r.violations);
                checks(&mut out, &r.checks);
            }
        }
        "arc" => {
            if let Some(r) = typed::<ArcRun>(report) {
                for (k, arc) in r.arcs.iter().enumerate() {
                    let _ = write!(
                        out,
                        "#{k}: {} ({} edges): complement {}",
                        arc.vertices.join("-"),
                        arc.edges.len(),
                        if arc.complement_connected {
                            "connected"
                        } else {
                            "disconnected"
                        }
                    );
                    if let (Some(a), Some(b), Some(s)) = (&arc.a, &arc.b, arc.separates) {
                        let _ = write!(out, "; {a} | {b}: {}", sep(s));
                    }
                    if let Some(found) = &arc.bisection {
                        let _ = write!(
                            out,
                            "; separating piece {} after {} halvings",
                            found.vertices.join("-"),
                            found.depth
                        );
                    }
                    out.push('\n');
                }
                checks(&mut out, &r.checks);
            }
        }
        _ => {}
    }
    let _ = writeln!(
        out,
        "status: {}",
        match report.status {
            Status::Ok => "ok",
            Status::Violation => "violation",
            Status::Error => "error",
        }
    );
    out
}

fn pushout(out: &mut String, r: &PushoutOutcome) {
    let j: Vec<&str> = r.base_points.iter().map(|o| o.as_str()).collect();
    let _ = writeln!(out, "G({}) over J = {{{}}}", r.basepoint, j.join(", "));
    let _ = writeln!(out, "presentation: {}", r.presentation);
    let _ = writeln!(out, "simplified:   {}", r.simplified);
    for f in &r.f_generators {
        let body = render_word(&GroupWord(f.definition.letters.clone()));
        let _ = writeln!(out, "  {} = {}", f.name, body);
    }
    let _ = writeln!(out, "abelianization: {}", r.abelianization);
    let _ = writeln!(out, "groupoid route: {}", r.groupoid_route);
    let c = &r.certificate;
    let _ = writeln!(out, "certificate: {:?}", c.kind);
    for (w, img) in c.witnesses.iter().zip(&c.rho_images) {
        let _ = writeln!(out, "  ρ({}) = {}", render_word(w), render_word(img));
    }
    checks(out, &r.checks);
}

fn jordan(out: &mut String, r: &JordanOutcome) {
    for (k, c) in r.curves.iter().enumerate() {
        let rep = &c.report;
        let _ = write!(
            out,
            "#{k}: length {}, {} components {:?}, boundaries {}",
            rep.curve_length,
            rep.component_count,
            rep.component_sizes,
            if rep.boundaries_equal_curve.iter().all(|&b| b) {
                "= C"
            } else {
                "≠ C"
            }
        );
        if let Some(p) = &rep.pipeline {
            let _ = write!(
                out,
                "; split {} | {}, |J| = {}, π₁(U) {}, π₁(V) {}, pushout {}, direct {}, certificate {:?}",
                p.a,
                p.b,
                p.base_points.len(),
                p.pi1_u,
                p.pi1_v,
                p.pushout,
                p.direct,
                p.certificate
            );
        }
        if let Some(e) = &c.pipeline_error {
            let _ = write!(out, "; {e}");
        }
        out.push('\n');
    }
    checks(out, &r.checks);
}

fn checks(out: &mut String, checks: &[Check]) {
    for c in checks {
        let _ = write!(out, "[{}] {}", if c.holds { "ok" } else { "FAILED" }, c.property);
        if !c.detail.is_empty() {
            let _ = write!(out, " ({})", c.detail);
        }
        out.push('\n');
    }
}

fn names(vertices: &[String], edges: &[String]) -> String {
    let all: Vec<&str> = vertices.iter().chain(edges).map(String::as_str).collect();
    format!("{{{}}}", all.join(", "))
}

fn sep(s: bool) -> &'static str {
    if s {
        "separates"
    } else {
        "does not separate"
    }
}

fn retract(v: crate::analysis::RetractVerdict) -> &'static str {
    match v {
        crate::analysis::RetractVerdict::CertifiedNoZRetract => "ruled out (free rank 0)",
        crate::analysis::RetractVerdict::Inconclusive => "inconclusive",
    }
}
