use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};
use workbench_core::groebner::{parse_ideal_text, write_ideal_text};
use workbench_core::invariants::{
    determinantal_minors, fibre_relations_vanish, fibre_zero_presentation, phi_apply, phi_images, pi_lands_in_delta_symbolically, pi_map,
    verify_conjecture, verify_generating_equivalence, verify_minors_vanish, ConjectureReport, ConjectureStatus, WVPoint,
};
use workbench_core::quiver::{ArmParams, StarQuiver};
use workbench_core::reconstruction::{deformed_relations, negated_constant, rep_ideal, telescoping_sums, DeformParams};
use workbench_core::{rat, Budget, Field, Ideal, MonomialOrder, Poly, Rational};

use super::{settle, verdict_word, CommandOutput};
use crate::config::{field_label, parse_rational, rng, GammaJson, RunConfig, DEFAULT_KERNEL_FIELD};
use crate::report::Status;
use crate::CliError;

fn texts(ps: &[Poly]) -> Vec<String> {
    ps.iter().map(|f| f.to_text(&MonomialOrder::GrevLex)).collect()
}

fn fibre_item(q: &StarQuiver, gamma: &DeformParams, field: Field, budget: &Budget) -> Result<(Status, Value, String), CliError> {
    let in_delta = gamma.in_delta();
    let (f1, f2) = gamma.delta_forms();
    let sys = deformed_relations(q, gamma, field)?;
    let (s1, s2) = telescoping_sums(&sys);
    let telescoping = s1 == negated_constant(&sys.ring, &f1)? && s2 == negated_constant(&sys.ring, &f2)?;
    let unit = settle(rep_ideal(q, gamma, field)?.contains_one(budget))?;
    let expected = !in_delta;
    let status = Status::all([
        Status::from_verdict(unit.map(|u| u == expected)),
        Status::from_verdict(Some(telescoping)),
        Status::from_verdict(Some(!in_delta || gamma.third_form() == Rational::from_integer(0.into()))),
    ]);
    let item = json!({
        "gamma": GammaJson::from_params(gamma),
        "in_delta": in_delta,
        "delta_forms": [f1.to_string(), f2.to_string()],
        "third_form": gamma.third_form().to_string(),
        "telescoping": telescoping,
        "rep_ideal_unit": unit,
        "expected_unit": expected,
    });
    let line = format!(
        "γ {} Δ: 1 ∈ rep ideal = {}, expected {}, telescoping {}",
        if in_delta { "in" } else { "off" },
        unit.map_or("?".to_string(), |u| u.to_string()),
        expected,
        verdict_word(Some(telescoping)),
    );
    Ok((status, item, line))
}

pub fn fibre(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let field = cfg.field_or(Field::Rationals);
    let q = StarQuiver::new(cfg.p);
    let mut gammas = vec![cfg.gamma_params()?];
    let mut r = rng(cfg.seed);
    gammas.extend((0..cfg.samples).map(|_| DeformParams::random_not_in_delta(&cfg.p, &mut r, cfg.height)));
    let deadline = cfg.deadline();
    let stop = move || deadline.expired();
    let budget = cfg.budget(&stop);
    let results: Vec<(Status, Value, String)> =
        gammas.par_iter().map(|g| fibre_item(&q, g, field, &budget)).collect::<Result<_, _>>()?;
    let status = Status::all(results.iter().map(|r| r.0));
    let mut lines = vec![format!("representation spaces at p = ({}): {} samples", cfg.p, results.len())];
    lines.extend(results.iter().map(|r| r.2.clone()));
    Ok(CommandOutput {
        status,
        field: Some(field),
        summary: json!({ "p": cfg.p.to_string(), "samples": results.len(), "off_delta_samples": cfg.samples }),
        items: results.into_iter().map(|r| r.1).collect(),
        lines,
    })
}

fn parse_point(p: &ArmParams, text: Option<&str>) -> Result<WVPoint, CliError> {
    let values: Vec<Rational> = match text {
        Some(t) => t.split(',').map(parse_rational).collect::<Result<_, _>>()?,
        None => {
            let mut v = vec![rat(1, 1); 3];
            v.extend((1..=p.total() as i64).map(|n| rat(n, 1)));
            v
        }
    };
    if values.len() != 3 + p.total() {
        return Err(CliError::Usage(format!("--point needs {} values (β₁, β₂, β₃ then the α's), got {}", 3 + p.total(), values.len())));
    }
    let mut it = values.into_iter();
    let beta = [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()];
    let alpha = [1, 2, 3].map(|arm| it.by_ref().take(p.p(arm)).collect::<Vec<_>>());
    Ok(WVPoint { beta, alpha })
}

pub fn pi(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let pt = parse_point(&cfg.p, cfg.point.as_deref())?;
    let gamma = pi_map(&pt, &cfg.p)?;
    let in_delta = gamma.in_delta();
    let vanish = fibre_relations_vanish(&pt, &cfg.p)?;
    let symbolic = pi_lands_in_delta_symbolically(&cfg.p)?;
    let status = Status::from_verdict(Some(in_delta && vanish && symbolic));
    let gamma_json = GammaJson::from_params(&gamma);
    let lines = vec![
        format!("π at p = ({}): {}", cfg.p, serde_json::to_string(&gamma_json).expect("gamma serializes")),
        format!("in Δ: {in_delta}; fibre relations vanish: {vanish}; symbolic telescoping: {symbolic}"),
    ];
    let alpha: Vec<Vec<String>> = pt.alpha.iter().map(|a| a.iter().map(|x| x.to_string()).collect()).collect();
    Ok(CommandOutput {
        status,
        field: Some(Field::Rationals),
        summary: json!({ "p": cfg.p.to_string(), "in_delta": in_delta, "fibre_relations_vanish": vanish, "symbolic_in_delta": symbolic }),
        items: vec![json!({
            "beta": pt.beta.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "alpha": alpha,
            "gamma": gamma_json,
        })],
        lines,
    })
}

pub fn minors(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let q = StarQuiver::new(cfg.p);
    let minors = determinantal_minors(&cfg.p, Field::Rationals)?;
    let vanish = verify_minors_vanish(&cfg.p)?;
    let generating = verify_generating_equivalence(&q)?;
    let ring = q.arrow_ring(Field::Rationals);
    let weight_zero = phi_images(&q, &ring)
        .iter()
        .all(|(_, f)| q.poly_weights(f).map(|w| w.iter().flatten().all(|&x| x == 0)).unwrap_or(false));
    let names = ["m12", "m13", "m23"];
    let mut items = Vec::new();
    let mut lines = vec![format!("minors at p = ({})", cfg.p)];
    for ((name, m), ok) in names.iter().zip(&minors).zip(&vanish) {
        let image = phi_apply(&q, m)?;
        items.push(json!({
            "name": name,
            "minor": m.to_text(&MonomialOrder::GrevLex),
            "phi_image_is_zero": image.is_zero(),
            "reduces_to_zero": ok,
        }));
        lines.push(format!("{name} = {}  →  {}", m.to_text(&MonomialOrder::GrevLex), verdict_word(Some(*ok))));
    }
    lines.push(format!("generating-set identities: {}; φ images weight zero: {}", verdict_word(Some(generating)), verdict_word(Some(weight_zero))));
    let all_vanish = vanish.iter().all(|&v| v);
    Ok(CommandOutput {
        status: Status::from_verdict(Some(all_vanish && generating && weight_zero)),
        field: Some(Field::Rationals),
        summary: json!({
            "p": cfg.p.to_string(),
            "all_vanish": all_vanish,
            "generating_equivalence": generating,
            "phi_weight_zero": weight_zero,
        }),
        items,
        lines,
    })
}

fn conjecture_status(r: &ConjectureReport) -> Status {
    let base = match r.status {
        ConjectureStatus::Confirmed => Status::Success,
        ConjectureStatus::Refuted => Status::Failure,
        ConjectureStatus::Inconclusive => Status::Inconclusive,
    };
    let containment = Status::from_verdict(Some(r.minors_vanish_exact)).combine(match r.minors_in_kernel {
        Some(false) => Status::Failure,
        _ => Status::Success,
    });
    base.combine(containment)
}

fn kernel_item(r: &ConjectureReport, elapsed_ms: u128) -> Value {
    json!({
        "p": r.p.to_string(),
        "field": field_label(r.field),
        "kernel_generators": r.kernel.as_ref().map(|k| texts(k.generators())),
        "minors": texts(&r.minors),
        "containment_minors_in_kernel": r.minors_in_kernel,
        "equal": r.equal,
        "status": r.status.as_str(),
        "probabilistic": r.probabilistic && r.status == ConjectureStatus::Confirmed,
        "elapsed_ms": elapsed_ms,
    })
}

fn kernel_lines(r: &ConjectureReport) -> Vec<String> {
    let mut lines = vec![format!(
        "ker φ at p = ({}) over {}: {}{}",
        r.p,
        field_label(r.field),
        r.status.as_str(),
        if r.probabilistic && r.status == ConjectureStatus::Confirmed { " (probabilistic)" } else { "" }
    )];
    if let Some(k) = &r.kernel {
        lines.extend(texts(k.generators()).into_iter().map(|g| format!("  {g}")));
    }
    lines.push(format!(
        "minors in kernel: {}; minors vanish over ℚ: {}",
        verdict_word(r.minors_in_kernel),
        verdict_word(Some(r.minors_vanish_exact))
    ));
    lines
}

pub fn kernel(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let field = cfg.field_or(DEFAULT_KERNEL_FIELD);
    let deadline = cfg.deadline();
    let stop = move || deadline.expired();
    let budget = cfg.budget(&stop);
    let start = Instant::now();
    let r = verify_conjecture(&cfg.p, field, &budget)?;
    let elapsed = start.elapsed().as_millis();
    Ok(CommandOutput {
        status: conjecture_status(&r),
        field: Some(field),
        summary: json!({ "p": cfg.p.to_string(), "status": r.status.as_str() }),
        items: vec![kernel_item(&r, elapsed)],
        lines: kernel_lines(&r),
    })
}

pub fn conjecture(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let field = cfg.field_or(DEFAULT_KERNEL_FIELD);
    let deadline = cfg.deadline();
    let stop = move || deadline.expired();
    let budget = cfg.budget(&stop);
    let start = Instant::now();
    let r = verify_conjecture(&cfg.p, field, &budget)?;
    let elapsed = start.elapsed().as_millis();
    let mut status = conjecture_status(&r);
    let mut lines = kernel_lines(&r);
    let origin = match &r.kernel {
        Some(k) => Some(fibre_zero_presentation(&cfg.p, k, &budget)?),
        None => None,
    };
    let origin_equal = origin.as_ref().and_then(|o| o.equal);
    status = status.combine(Status::from_verdict(origin_equal));
    lines.push(format!("fibre over the origin (conditional on kernel computation): {}", verdict_word(origin_equal)));
    let origin_item = json!({
        "conditional_on": "kernel computation",
        "generators": origin.as_ref().map(|o| texts(&o.generators)),
        "target_minors": origin.as_ref().map(|o| texts(&o.target)),
        "equal": origin_equal,
    });
    Ok(CommandOutput {
        status,
        field: Some(field),
        summary: json!({
            "p": cfg.p.to_string(),
            "status": r.status.as_str(),
            "probabilistic": r.probabilistic,
            "minors_vanish_exact": r.minors_vanish_exact,
            "fibre_over_origin": origin_equal,
        }),
        items: vec![kernel_item(&r, elapsed), origin_item],
        lines,
    })
}

pub fn gb(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let path = cfg.ideal.as_ref().ok_or_else(|| CliError::Usage("gb needs --ideal PATH".into()))?;
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let field = cfg.field_or(Field::Rationals);
    let parsed = parse_ideal_text(&text, field)?;
    let deadline = cfg.deadline();
    let stop = move || deadline.expired();
    let budget = cfg.budget(&stop);
    let ideal = Ideal::new(&parsed.ring, parsed.order.clone(), parsed.generators.clone())?;
    let Some(dim) = settle(ideal.krull_dimension(&budget))? else {
        return Ok(CommandOutput { field: Some(field), ..CommandOutput::inconclusive("Gröbner basis budget exhausted".into()) });
    };
    let basis = ideal.cached_basis().expect("dimension computes the basis");
    let rendered = write_ideal_text(&parsed.ring, &parsed.order, basis.polys());
    let stats = basis.stats();
    let mut lines = vec![format!("reduced basis with {} elements, dimension {}", basis.len(), dim.dimension)];
    lines.extend(rendered.lines().map(str::to_string));
    Ok(CommandOutput {
        status: Status::Success,
        field: Some(field),
        summary: json!({
            "variables": parsed.ring.vars().names(),
            "basis_size": basis.len(),
            "is_unit": basis.is_unit(),
            "dimension": dim.dimension,
            "independent_set": dim.witness,
            "pairs_processed": stats.pairs_processed,
            "zero_reductions": stats.zero_reductions,
            "ideal_text": rendered,
        }),
        items: basis.polys().iter().map(|f| json!(f.to_text(&parsed.order))).collect(),
        lines,
    })
}
