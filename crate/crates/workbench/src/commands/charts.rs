use rayon::prelude::*;
use serde_json::{json, Value};
use workbench_core::charts::{
    chart_by_substitution, dictionary_consistent, fibre_chart, presentations_agree, scan_supports, smoothness_certificate,
    total_space_chart, CertificateStatus, ChartKind, ChartPresentation, CoverReport, DEFAULT_ENUMERATION_CAP,
};
use workbench_core::quiver::{ChartId, StarQuiver, Support};
use workbench_core::reconstruction::DeformParams;
use workbench_core::{Budget, Error, Field, MonomialOrder};

use super::{settle, verdict_word, CommandOutput};
use crate::config::{GammaJson, RunConfig};
use crate::report::Status;
use crate::CliError;

fn certificate_status(s: CertificateStatus) -> Status {
    match s {
        CertificateStatus::Smooth => Status::Success,
        CertificateStatus::Singular | CertificateStatus::DimensionMismatch => Status::Failure,
        CertificateStatus::Inconclusive => Status::Inconclusive,
    }
}

struct ChartOutcome {
    status: Status,
    item: Value,
    line: String,
    smooth: bool,
}

fn chart_outcome(
    q: &StarQuiver,
    gamma: &DeformParams,
    pres: &ChartPresentation,
    expected: i64,
    budget: &Budget,
) -> Result<ChartOutcome, CliError> {
    let cert = smoothness_certificate(pres, Some(expected), budget)?;
    let field = pres.ring.field();
    let oracle = match settle(chart_by_substitution(q, gamma, &pres.id, pres.kind, field, budget))? {
        Some(other) => settle(presentations_agree(pres, &other, budget))?,
        None => None,
    };
    let dictionary = settle(dictionary_consistent(q, gamma, pres, budget))?;
    let status = Status::all([certificate_status(cert.status), Status::from_verdict(oracle), Status::from_verdict(dictionary)]);
    let dimension = cert.dimension.as_ref().map(|d| d.dimension);
    let mut item = json!({
        "id": pres.id.to_string(),
        "variables": pres.variables(),
        "relations": pres.relations.iter().map(|f| f.to_text(&MonomialOrder::GrevLex)).collect::<Vec<_>>(),
        "certificate": {
            "one_in_jacobian": cert.one_in_jacobian,
            "dimension": dimension,
            "expected_dimension": expected,
            "status": cert.status.as_str(),
        },
        "oracle_match": oracle,
        "dictionary_consistent": dictionary,
    });
    if pres.kind == ChartKind::TotalSpace {
        item["certificate"]["dimension_check"] = json!("added");
    }
    let line = format!(
        "{:<10} {:<18} dim {:<4} oracle {:<12} dictionary {}",
        pres.id.to_string(),
        cert.status.as_str(),
        dimension.map_or("?".to_string(), |d| d.to_string()),
        verdict_word(oracle),
        verdict_word(dictionary),
    );
    Ok(ChartOutcome { status, item, line, smooth: cert.status == CertificateStatus::Smooth })
}

fn run_charts(
    cfg: &RunConfig,
    kind: ChartKind,
    gamma: &DeformParams,
    field: Field,
    budget: &Budget,
) -> Result<Vec<ChartOutcome>, CliError> {
    let q = StarQuiver::new(cfg.p);
    let expected = match kind {
        ChartKind::Fibre => 2,
        ChartKind::TotalSpace => cfg.p.total() as i64 + 1,
    };
    ChartId::all(&cfg.p)
        .par_iter()
        .map(|c| {
            let pres = match kind {
                ChartKind::Fibre => fibre_chart(&cfg.p, gamma, c, field)?,
                ChartKind::TotalSpace => total_space_chart(&cfg.p, c, field)?,
            };
            chart_outcome(&q, gamma, &pres, expected, budget)
        })
        .collect()
}

fn chart_output(cfg: &RunConfig, kind: ChartKind, gamma: &DeformParams, field: Field, outcomes: Vec<ChartOutcome>) -> CommandOutput {
    let status = Status::all(outcomes.iter().map(|o| o.status));
    let smooth = outcomes.iter().filter(|o| o.smooth).count();
    let label = match kind {
        ChartKind::Fibre => "fibre",
        ChartKind::TotalSpace => "total-space",
    };
    let mut lines = vec![format!("{} {label} charts at p = ({}), {smooth} smooth", outcomes.len(), cfg.p)];
    lines.extend(outcomes.iter().map(|o| o.line.clone()));
    let mut summary = json!({
        "p": cfg.p.to_string(),
        "kind": label,
        "charts": outcomes.len(),
        "smooth": smooth,
        "all_passed": status == Status::Success,
    });
    if kind == ChartKind::Fibre {
        summary["gamma"] = serde_json::to_value(GammaJson::from_params(gamma)).expect("gamma serializes");
    }
    CommandOutput { status, field: Some(field), summary, items: outcomes.into_iter().map(|o| o.item).collect(), lines }
}

pub fn charts(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let field = cfg.field_or(Field::Rationals);
    let gamma = cfg.gamma_params()?;
    if !gamma.in_delta() {
        return Err(CliError::Usage("γ is not in Δ, so there are no fibre charts; see `workbench fibre`".into()));
    }
    let deadline = cfg.deadline();
    let stop = move || deadline.expired();
    let budget = cfg.budget(&stop);
    let outcomes = run_charts(cfg, ChartKind::Fibre, &gamma, field, &budget)?;
    Ok(chart_output(cfg, ChartKind::Fibre, &gamma, field, outcomes))
}

pub fn smooth(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let field = cfg.field_or(Field::Rationals);
    let gamma = DeformParams::zero(&cfg.p);
    let deadline = cfg.deadline();
    let stop = move || deadline.expired();
    let budget = cfg.budget(&stop);
    let outcomes = run_charts(cfg, ChartKind::TotalSpace, &gamma, field, &budget)?;
    Ok(chart_output(cfg, ChartKind::TotalSpace, &gamma, field, outcomes))
}

fn support_text(q: &StarQuiver, s: &Support) -> String {
    let names: Vec<&str> = q.arrows().iter().zip(&s.0).filter(|(_, &on)| on).map(|(a, _)| a.name.as_str()).collect();
    names.join(",")
}

pub fn cover(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let q = StarQuiver::new(cfg.p);
    let n = q.arrows().len();
    if n > DEFAULT_ENUMERATION_CAP {
        return Err(Error::EnumerationCap { arrows: n, cap: DEFAULT_ENUMERATION_CAP }.into());
    }
    let total = 1u64 << n;
    let chunks = (cfg.jobs as u64 * 8).clamp(1, total);
    let step = total.div_ceil(chunks);
    let parts: Vec<CoverReport> = (0..chunks)
        .into_par_iter()
        .map(|c| scan_supports(&q, c * step..((c + 1) * step).min(total)))
        .collect();
    let mut report = CoverReport { supports: 0, stable: 0, compatible: 0, covered: 0, counterexamples: Vec::new() };
    for part in parts {
        report.supports += part.supports;
        report.stable += part.stable;
        report.compatible += part.compatible;
        report.covered += part.covered;
        report.counterexamples.extend(part.counterexamples);
    }
    let status = if report.counterexamples.is_empty() { Status::Success } else { Status::Failure };
    let counterexamples: Vec<String> = report.counterexamples.iter().map(|s| support_text(&q, s)).collect();
    let mut lines = vec![format!(
        "{} supports at p = ({}): {} stable, {} relation-compatible, {} covered, {} counterexamples",
        report.supports,
        cfg.p,
        report.stable,
        report.compatible,
        report.covered,
        counterexamples.len()
    )];
    lines.extend(counterexamples.iter().take(20).map(|c| format!("  uncovered: {c}")));
    Ok(CommandOutput {
        status,
        field: None,
        summary: json!({
            "p": cfg.p.to_string(),
            "arrows": n,
            "supports": report.supports,
            "stable": report.stable,
            "compatible": report.compatible,
            "covered": report.covered,
            "counterexamples": counterexamples.len(),
        }),
        items: counterexamples.into_iter().map(|c| json!({ "support": c })).collect(),
        lines,
    })
}
