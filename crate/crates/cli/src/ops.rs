//! Subcommand implementations. Every command builds one machine report
//! and renders the plain-text view from the same data, so the JSON
//! output carries every number the text shows.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;

use liealg_catalog::{
    algebra_digest, catalog_get, catalog_list, random_metabelian_split, random_nilpotent,
    random_supersolvable, CatalogError,
};
use liealg_core::frattini::frattini_subalgebra;
use liealg_core::nilradical::nilradical;
use liealg_core::structure::{center, series};
use liealg_core::{
    format_combination, parse_subspace, AlgebraDocument, AnyAlgebra, Budget, CoreError, Field,
    FieldSpec, LieAlgebra, Subspace, DEFAULT_BUDGET,
};
use liealg_invariants::{
    alpha_exact, beta_exact, bounds, classify_codim2, BetaPrediction, Case, InvariantsError,
    Strategy, Witnesses,
};
use liealg_verify::fuzz::{counterexample_search, default_generators, FuzzQuestion};
use liealg_verify::{run_suite, PropertyId, PropertyResult, Status, SuiteConfig};
use serde_json::{json, Value};

use crate::Command;

pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Self {
        Outcome { json, text, code: 0 }
    }
}

pub enum CliError {
    /// Bad usage or bad input data.
    Input(String),
    /// The operation is not available over the given field or input class.
    Unsupported(String),
    /// An enumeration refused to start or aborted on its visit budget.
    Budget(String),
}

impl CliError {
    pub fn message(&self) -> String {
        match self {
            CliError::Input(m) => format!("error: {m}"),
            CliError::Unsupported(m) => format!("unsupported: {m}"),
            CliError::Budget(m) => format!("budget exceeded: {m}"),
        }
    }

    pub fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Unsupported(_) => 2,
            CliError::Budget(_) => 4,
        }
    }
}

fn core_error(e: CoreError) -> CliError {
    match e {
        CoreError::Unsupported(m) => CliError::Unsupported(m),
        CoreError::BudgetExceeded { budget } => {
            CliError::Budget(format!("{budget} subspace visits"))
        }
        other => CliError::Input(other.to_string()),
    }
}

fn catalog_error(e: CatalogError) -> CliError {
    match e {
        CatalogError::IncompatibleField(m) => CliError::Unsupported(m),
        CatalogError::Core(c) => core_error(c),
        other => CliError::Input(other.to_string()),
    }
}

/// Run the closure on whichever field the algebra lives over.
macro_rules! with_algebra {
    ($any:expr, |$l:ident| $body:expr) => {
        match $any {
            AnyAlgebra::Q($l) => $body,
            AnyAlgebra::Fp($l) => $body,
        }
    };
}

pub fn dispatch(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Validate { file } => validate(file),
        Command::Info { file } => info(file),
        Command::Invariants {
            file,
            exact,
            bounds,
            strategy,
            budget,
        } => invariants(file, *exact, *bounds, strategy, *budget),
        Command::Classify {
            file,
            witness,
            budget,
        } => classify(file, witness, *budget),
        Command::Verify {
            file,
            props,
            suite,
            witness,
            seed,
            budget,
            samples,
        } => verify(
            file,
            props.as_deref(),
            suite.as_deref(),
            witness.as_deref(),
            *seed,
            *budget,
            *samples,
        ),
        Command::Catalog {
            list,
            emit,
            field,
            params,
        } => catalog(*list, emit.as_deref(), field, params),
        Command::Random {
            kind,
            dim,
            p,
            seed,
            split,
            emit,
        } => random(kind, *dim, *p, *seed, *split, *emit),
        Command::Fuzz {
            question,
            trials,
            budget,
            seed,
            samples,
        } => fuzz(question, *trials, *budget, *seed, *samples),
    }
}

fn load(path: &str) -> Result<AnyAlgebra, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?;
    let doc = AlgebraDocument::from_json(&text).map_err(core_error)?;
    doc.build().map_err(core_error)
}

/// Load and insist on a valid bracket table; commands other than
/// `validate` refuse to operate on a non-Lie table.
fn load_valid(path: &str) -> Result<AnyAlgebra, CliError> {
    let alg = load(path)?;
    let failures = with_algebra!(&alg, |l| l.validate().jacobi_failures.len());
    if failures > 0 {
        return Err(CliError::Input(format!(
            "{path} fails the Jacobi identity on {failures} basis triples; run validate for details"
        )));
    }
    Ok(alg)
}

fn field_name(spec: &FieldSpec) -> String {
    match spec {
        FieldSpec::Rationals => "Q".to_string(),
        FieldSpec::Prime { p } => format!("F_{p}"),
    }
}

fn span_text<F: Field>(s: &Subspace<F>) -> String {
    if s.rows().is_empty() {
        return "0".to_string();
    }
    s.rows()
        .iter()
        .map(|r| format_combination::<F>(r))
        .collect::<Vec<_>>()
        .join(", ")
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn chain_text(dims: &[usize]) -> String {
    dims.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" > ")
}

// ---------------------------------------------------------------- validate

fn validate(path: &str) -> Result<Outcome, CliError> {
    let alg = load(path)?;
    let (valid, failures) = with_algebra!(&alg, |l| {
        let report = l.validate();
        let rows: Vec<((usize, usize, usize), String)> = report
            .jacobi_failures
            .iter()
            .map(|jf| (jf.triple, jf.defect.clone()))
            .collect();
        (report.is_ok(), rows)
    });
    let spec = alg.field_spec();

    let json = json!({
        "name": alg.name(),
        "dim": alg.dim(),
        "field": spec,
        "valid": valid,
        "jacobi_failures": failures
            .iter()
            .map(|(t, d)| json!({"triple": [t.0, t.1, t.2], "defect": d}))
            .collect::<Vec<_>>(),
    });

    let mut text = String::new();
    let _ = writeln!(text, "name = {}", alg.name());
    let _ = writeln!(text, "dim = {}", alg.dim());
    let _ = writeln!(text, "field = {}", field_name(&spec));
    let _ = writeln!(text, "valid = {}", yn(valid));
    for (t, d) in &failures {
        let _ = writeln!(
            text,
            "  jacobi failure at (e{}, e{}, e{}): {}",
            t.0, t.1, t.2, d
        );
    }

    Ok(Outcome {
        json,
        text,
        code: if valid { 0 } else { 1 },
    })
}

// -------------------------------------------------------------------- info

struct InfoData {
    abelian: bool,
    nilpotent: bool,
    solvable: bool,
    supersolvable: Option<bool>,
    metabelian: bool,
    completely_solvable: bool,
    derived_length: Option<usize>,
    derived_dims: Vec<usize>,
    lower_central_dims: Vec<usize>,
    center_dim: usize,
    nilradical_dim: Option<usize>,
    frattini_dim: Option<usize>,
}

fn info_data<F: Field>(l: &LieAlgebra<F>) -> InfoData {
    let report = series(l);
    InfoData {
        abelian: report.abelian,
        nilpotent: report.nilpotent,
        solvable: report.solvable,
        supersolvable: report.supersolvable,
        metabelian: report.metabelian,
        completely_solvable: report.completely_solvable,
        derived_length: report.derived_length,
        derived_dims: report.derived.iter().map(|s| s.dim()).collect(),
        lower_central_dims: report.lower_central.iter().map(|s| s.dim()).collect(),
        center_dim: center(l).dim(),
        nilradical_dim: nilradical(l, &Budget::new(DEFAULT_BUDGET))
            .ok()
            .map(|(s, _)| s.dim()),
        frattini_dim: frattini_subalgebra(l, &Budget::new(DEFAULT_BUDGET))
            .ok()
            .map(|(s, _)| s.dim()),
    }
}

fn info(path: &str) -> Result<Outcome, CliError> {
    let alg = load_valid(path)?;
    let d = with_algebra!(&alg, |l| info_data(l));
    let spec = alg.field_spec();

    let json = json!({
        "name": alg.name(),
        "dim": alg.dim(),
        "field": spec,
        "abelian": d.abelian,
        "nilpotent": d.nilpotent,
        "solvable": d.solvable,
        "supersolvable": d.supersolvable,
        "metabelian": d.metabelian,
        "completely_solvable": d.completely_solvable,
        "derived_length": d.derived_length,
        "derived_series_dims": d.derived_dims,
        "lower_central_series_dims": d.lower_central_dims,
        "center_dim": d.center_dim,
        "nilradical_dim": d.nilradical_dim,
        "frattini_dim": d.frattini_dim,
    });

    let mut text = String::new();
    let _ = writeln!(text, "name = {}", alg.name());
    let _ = writeln!(text, "dim = {}", alg.dim());
    let _ = writeln!(text, "field = {}", field_name(&spec));
    let _ = writeln!(text, "abelian = {}", yn(d.abelian));
    let _ = writeln!(text, "nilpotent = {}", yn(d.nilpotent));
    let _ = writeln!(text, "solvable = {}", yn(d.solvable));
    let ss = match d.supersolvable {
        Some(b) => yn(b).to_string(),
        None => "undetermined".to_string(),
    };
    let _ = writeln!(text, "supersolvable = {ss}");
    let _ = writeln!(text, "metabelian = {}", yn(d.metabelian));
    let _ = writeln!(text, "completely solvable = {}", yn(d.completely_solvable));
    match d.derived_length {
        Some(k) => {
            let _ = writeln!(text, "derived length = {k}");
        }
        None => {
            let _ = writeln!(text, "derived length = none");
        }
    }
    let _ = writeln!(text, "derived series dims = {}", chain_text(&d.derived_dims));
    let _ = writeln!(
        text,
        "lower central series dims = {}",
        chain_text(&d.lower_central_dims)
    );
    let _ = writeln!(text, "center dim = {}", d.center_dim);
    match d.nilradical_dim {
        Some(k) => {
            let _ = writeln!(text, "nilradical dim = {k}");
        }
        None => {
            let _ = writeln!(text, "nilradical dim = unavailable");
        }
    }
    match d.frattini_dim {
        Some(k) => {
            let _ = writeln!(text, "frattini dim = {k}");
        }
        None => {
            let _ = writeln!(text, "frattini dim = unavailable");
        }
    }

    Ok(Outcome::ok(json, text))
}

// -------------------------------------------------------------- invariants

struct ExactData {
    alpha: usize,
    alpha_witness: String,
    beta: usize,
    beta_witness: String,
}

fn exact_data<F: Field>(
    l: &LieAlgebra<F>,
    strategy: Strategy,
    budget: u64,
) -> Result<ExactData, InvariantsError> {
    let a = alpha_exact(l, strategy, &Budget::new(budget))?;
    let b = beta_exact(l, strategy, &Budget::new(budget))?;
    Ok(ExactData {
        alpha: a.value,
        alpha_witness: span_text(&a.witness),
        beta: b.value,
        beta_witness: span_text(&b.witness),
    })
}

struct BoundsData {
    alpha_lo: usize,
    alpha_hi: usize,
    beta_lo: usize,
    beta_hi: usize,
    rows: Vec<(String, Value)>,
    exact: Option<ExactData>,
}

fn bounds_data<F: Field>(l: &LieAlgebra<F>, budget: u64) -> BoundsData {
    let b = bounds(l, &Budget::new(budget));
    BoundsData {
        alpha_lo: b.alpha_lo,
        alpha_hi: b.alpha_hi,
        beta_lo: b.beta_lo,
        beta_hi: b.beta_hi,
        rows: b
            .rows
            .iter()
            .map(|row| {
                (
                    row.text.clone(),
                    serde_json::to_value(row.source).expect("serializable"),
                )
            })
            .collect(),
        exact: b.exact.map(|(a, bb)| ExactData {
            alpha: a.value,
            alpha_witness: span_text(&a.witness),
            beta: bb.value,
            beta_witness: span_text(&bb.witness),
        }),
    }
}

fn exact_json(d: &ExactData) -> Value {
    json!({
        "alpha": {"value": d.alpha, "witness": d.alpha_witness},
        "beta": {"value": d.beta, "witness": d.beta_witness},
    })
}

fn bounds_json(d: &BoundsData) -> Value {
    json!({
        "alpha_lo": d.alpha_lo,
        "alpha_hi": d.alpha_hi,
        "beta_lo": d.beta_lo,
        "beta_hi": d.beta_hi,
        "rows": d.rows.iter().map(|(t, s)| json!({"text": t, "source": s})).collect::<Vec<_>>(),
        "exact": d.exact.as_ref().map(exact_json),
    })
}

fn bounds_text(d: &BoundsData, text: &mut String) {
    let _ = writeln!(text, "alpha in [{}, {}]", d.alpha_lo, d.alpha_hi);
    let _ = writeln!(text, "beta in [{}, {}]", d.beta_lo, d.beta_hi);
    if let Some(e) = &d.exact {
        let _ = writeln!(text, "alpha = {}", e.alpha);
        let _ = writeln!(text, "  witness: {}", e.alpha_witness);
        let _ = writeln!(text, "beta = {}", e.beta);
        let _ = writeln!(text, "  witness: {}", e.beta_witness);
    }
    if !d.rows.is_empty() {
        let _ = writeln!(text, "evidence:");
        for (row, source) in &d.rows {
            let tag = source.as_str().unwrap_or("?");
            let _ = writeln!(text, "  - {row}  [{tag}]");
        }
    }
}

fn invariants(
    path: &str,
    exact_flag: bool,
    bounds_flag: bool,
    strategy: &str,
    budget: u64,
) -> Result<Outcome, CliError> {
    let alg = load_valid(path)?;
    let spec = alg.field_spec();
    let finite = matches!(spec, FieldSpec::Prime { .. });
    let want_exact = exact_flag || (!bounds_flag && finite);
    let strat = if strategy == "exhaustive" {
        Strategy::Exhaustive
    } else {
        Strategy::BranchBound
    };

    let head = json!({
        "name": alg.name(),
        "dim": alg.dim(),
        "field": spec,
        "strategy": strategy,
        "budget": budget,
    });
    let merge = |mode: &str, body: Value| {
        let mut obj = head.as_object().cloned().expect("object");
        obj.insert("mode".into(), json!(mode));
        for (k, v) in body.as_object().cloned().expect("object") {
            obj.insert(k, v);
        }
        Value::Object(obj)
    };

    if !want_exact {
        let d = with_algebra!(&alg, |l| bounds_data(l, budget));
        let mut text = String::new();
        bounds_text(&d, &mut text);
        return Ok(Outcome::ok(merge("bounds", json!({"bounds": bounds_json(&d)})), text));
    }

    match with_algebra!(&alg, |l| exact_data(l, strat, budget)) {
        Ok(d) => {
            let mut text = String::new();
            let _ = writeln!(text, "alpha = {}", d.alpha);
            let _ = writeln!(text, "  witness: {}", d.alpha_witness);
            let _ = writeln!(text, "beta = {}", d.beta);
            let _ = writeln!(text, "  witness: {}", d.beta_witness);
            Ok(Outcome::ok(merge("exact", exact_json(&d)), text))
        }
        Err(InvariantsError::Core(CoreError::BudgetExceeded { .. })) => {
            // Exit 4, but print what the cheap structural machinery can
            // still certify.
            let d = with_algebra!(&alg, |l| bounds_data(l, budget));
            let mut text = String::new();
            let _ = writeln!(
                text,
                "budget of {budget} subspace visits exceeded; certified bounds:"
            );
            bounds_text(&d, &mut text);
            Ok(Outcome {
                json: merge("budget-exceeded", json!({"bounds": bounds_json(&d)})),
                text,
                code: 4,
            })
        }
        Err(InvariantsError::Core(CoreError::Unsupported(m))) => Err(CliError::Unsupported(m)),
        Err(e) => Err(CliError::Input(e.to_string())),
    }
}

// ---------------------------------------------------------------- classify

fn case_name(c: Case) -> &'static str {
    match c {
        Case::I => "i",
        Case::II => "ii",
        Case::III => "iii",
    }
}

struct ClassifyData {
    case: &'static str,
    prediction: BetaPrediction,
    alpha_certified: bool,
    witnesses: Vec<(String, String)>,
    diagnostics: Vec<String>,
}

fn classify_data<F: Field>(
    l: &LieAlgebra<F>,
    witness: &str,
    budget: u64,
) -> Result<ClassifyData, InvariantsError> {
    let a = parse_subspace(l.field(), l.dim(), witness).map_err(InvariantsError::Core)?;
    let r = classify_codim2(l, &a, &Budget::new(budget))?;
    let witnesses = match &r.witnesses {
        Witnesses::AbelianIdeal { ideal } => vec![("abelian ideal".to_string(), span_text(ideal))],
        Witnesses::HeisenbergSplit {
            derived,
            center,
            complement,
        } => vec![
            ("derived subalgebra".to_string(), span_text(derived)),
            ("center".to_string(), span_text(center)),
            ("complement".to_string(), span_text(complement)),
        ],
        Witnesses::NilradicalChain {
            nilradical,
            nilradical_center,
            chain,
        } => {
            let mut rows = vec![
                ("nilradical".to_string(), span_text(nilradical)),
                ("nilradical center".to_string(), span_text(nilradical_center)),
            ];
            for (i, step) in chain.iter().enumerate() {
                rows.push((format!("chain step {}", i + 1), span_text(step)));
            }
            rows
        }
    };
    Ok(ClassifyData {
        case: case_name(r.case),
        prediction: r.beta_prediction,
        alpha_certified: r.alpha_certified,
        witnesses,
        diagnostics: r.diagnostics,
    })
}

fn prediction_text(p: BetaPrediction) -> String {
    match p {
        BetaPrediction::Exact(v) => format!("beta = {v} exactly"),
        BetaPrediction::AtMost(v) => format!("beta <= {v}"),
    }
}

fn classify(path: &str, witness: &str, budget: u64) -> Result<Outcome, CliError> {
    let alg = load_valid(path)?;
    let spec = alg.field_spec();
    let head = json!({
        "name": alg.name(),
        "dim": alg.dim(),
        "field": spec,
        "witness": witness,
    });

    match with_algebra!(&alg, |l| classify_data(l, witness, budget)) {
        Ok(d) => {
            let mut obj = head.as_object().cloned().expect("object");
            obj.insert("case".into(), json!(d.case));
            obj.insert(
                "beta_prediction".into(),
                serde_json::to_value(d.prediction).expect("serializable"),
            );
            obj.insert("alpha_certified".into(), json!(d.alpha_certified));
            obj.insert(
                "witnesses".into(),
                json!(d
                    .witnesses
                    .iter()
                    .map(|(label, span)| json!({"label": label, "span": span}))
                    .collect::<Vec<_>>()),
            );
            obj.insert("diagnostics".into(), json!(d.diagnostics));

            let mut text = String::new();
            let _ = writeln!(text, "case = {}", d.case);
            let _ = writeln!(text, "beta prediction: {}", prediction_text(d.prediction));
            let _ = writeln!(text, "alpha certified = {}", yn(d.alpha_certified));
            let _ = writeln!(text, "witnesses:");
            for (label, span) in &d.witnesses {
                let _ = writeln!(text, "  {label}: {span}");
            }
            if !d.diagnostics.is_empty() {
                let _ = writeln!(text, "diagnostics:");
                for line in &d.diagnostics {
                    let _ = writeln!(text, "  - {line}");
                }
            }
            Ok(Outcome::ok(Value::Object(obj), text))
        }
        Err(InvariantsError::TheoremViolation { details }) => {
            let mut obj = head.as_object().cloned().expect("object");
            obj.insert("violation".into(), json!(details));
            let mut text = String::new();
            let _ = writeln!(text, "theorem violation: no classification case matched");
            for line in &details {
                let _ = writeln!(text, "  - {line}");
            }
            Ok(Outcome {
                json: Value::Object(obj),
                text,
                code: 3,
            })
        }
        Err(InvariantsError::Core(CoreError::Unsupported(m))) => Err(CliError::Unsupported(m)),
        Err(InvariantsError::Core(CoreError::BudgetExceeded { budget })) => Err(CliError::Budget(
            format!("{budget} subspace visits during classification"),
        )),
        Err(e) => Err(CliError::Input(e.to_string())),
    }
}

// ------------------------------------------------------------------ verify

fn parse_props(list: &str) -> Result<Vec<PropertyId>, CliError> {
    let mut props = Vec::new();
    for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let p: PropertyId = token
            .parse()
            .map_err(|e: liealg_verify::ParsePropertyError| CliError::Input(e.to_string()))?;
        if !props.contains(&p) {
            props.push(p);
        }
    }
    if props.is_empty() {
        return Err(CliError::Input("no properties requested".to_string()));
    }
    Ok(props)
}

/// Classification panel for one supplied witness, reported in the same
/// shape as a suite result so text and JSON stay uniform.
fn witness_result<F: Field>(
    l: &LieAlgebra<F>,
    algebra: String,
    witness: &str,
    budget: u64,
) -> Result<PropertyResult, CliError> {
    match classify_data(l, witness, budget) {
        Ok(d) => {
            let mut details = vec![
                format!("case = {}", d.case),
                format!("beta prediction: {}", prediction_text(d.prediction)),
                format!("alpha certified = {}", yn(d.alpha_certified)),
            ];
            for (label, span) in &d.witnesses {
                details.push(format!("{label}: {span}"));
            }
            details.extend(d.diagnostics);
            Ok(PropertyResult {
                property: PropertyId::T3_5,
                algebra,
                status: Status::Pass,
                details,
            })
        }
        Err(InvariantsError::TheoremViolation { details }) => Ok(PropertyResult {
            property: PropertyId::T3_5,
            algebra,
            status: Status::Fail,
            details,
        }),
        Err(InvariantsError::Core(CoreError::Unsupported(m))) => Err(CliError::Unsupported(m)),
        Err(e) => Err(CliError::Input(e.to_string())),
    }
}

fn verify(
    path: &str,
    props: Option<&str>,
    suite: Option<&str>,
    witness: Option<&str>,
    seed: u64,
    budget: u64,
    samples: usize,
) -> Result<Outcome, CliError> {
    let alg = load_valid(path)?;
    let props = match (props, suite) {
        (Some(list), None) => parse_props(list)?,
        (None, Some("all")) => PropertyId::ALL.to_vec(),
        (None, Some(other)) => {
            return Err(CliError::Input(format!(
                "unknown suite {other:?}; only \"all\" is available"
            )))
        }
        _ => {
            return Err(CliError::Input(
                "pass exactly one of --props LIST or --suite all".to_string(),
            ))
        }
    };

    let config = SuiteConfig {
        seed,
        budget,
        samples,
    };
    let name = alg.name().to_string();

    let results: Vec<PropertyResult> = if let Some(w) = witness {
        let position = props
            .iter()
            .position(|p| *p == PropertyId::T3_5)
            .ok_or_else(|| {
                CliError::Input("--witness needs T3.5 among the requested properties".to_string())
            })?;
        let rest: Vec<PropertyId> = props
            .iter()
            .copied()
            .filter(|p| *p != PropertyId::T3_5)
            .collect();
        let classified = with_algebra!(&alg, |l| witness_result(l, name.clone(), w, budget))?;
        let mut rows = run_suite(std::slice::from_ref(&alg), &rest, &config).results;
        rows.insert(position, classified);
        rows
    } else {
        run_suite(std::slice::from_ref(&alg), &props, &config).results
    };

    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    let counts = [
        ("pass", count(Status::Pass)),
        ("fail", count(Status::Fail)),
        ("inapplicable", count(Status::Inapplicable)),
        ("probe-pass", count(Status::ProbePass)),
        ("probe-fail", count(Status::ProbeFail)),
    ];

    let json = json!({
        "algebra": name,
        "seed": seed,
        "results": results,
        "counts": counts.iter().cloned().collect::<BTreeMap<&str, usize>>(),
    });

    let mut text = String::new();
    let _ = writeln!(text, "algebra = {name}");
    let _ = writeln!(text, "seed = {seed}");
    for r in &results {
        let _ = writeln!(text, "{:<7} {}", r.property.token(), r.status);
        for d in &r.details {
            let _ = writeln!(text, "        {d}");
        }
    }
    let tally = counts
        .iter()
        .map(|(k, v)| format!("{k} = {v}"))
        .collect::<Vec<_>>()
        .join(", ");
    let _ = writeln!(text, "counts: {tally}");

    let code = if count(Status::Fail) > 0 { 3 } else { 0 };
    Ok(Outcome { json, text, code })
}

// ----------------------------------------------------------------- catalog

fn parse_field(text: &str) -> Result<FieldSpec, CliError> {
    if text.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(rest) = text
        .strip_prefix("Fp:")
        .or_else(|| text.strip_prefix("fp:"))
        .or_else(|| text.strip_prefix("FP:"))
    {
        let p: u64 = rest
            .parse()
            .map_err(|_| CliError::Input(format!("bad prime in field spec {text:?}")))?;
        return Ok(FieldSpec::Prime { p });
    }
    Err(CliError::Input(format!(
        "unrecognized field {text:?}; use Q or Fp:P"
    )))
}

fn parse_params(items: &[String]) -> Result<BTreeMap<String, u64>, CliError> {
    let mut map = BTreeMap::new();
    for item in items {
        for piece in item.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = piece.split_once('=').ok_or_else(|| {
                CliError::Input(format!("bad parameter {piece:?}; use key=value"))
            })?;
            let n: u64 = v
                .trim()
                .parse()
                .map_err(|_| CliError::Input(format!("bad parameter value in {piece:?}")))?;
            map.insert(k.trim().to_string(), n);
        }
    }
    Ok(map)
}

fn catalog(
    list: bool,
    emit: Option<&str>,
    field: &str,
    params: &[String],
) -> Result<Outcome, CliError> {
    match (list, emit) {
        (true, None) => {
            let rows = catalog_list();
            let json = json!(rows
                .iter()
                .map(|r| json!({"name": r.name, "params": r.params, "note": r.note}))
                .collect::<Vec<_>>());
            let mut text = String::new();
            for r in &rows {
                let _ = writeln!(text, "{:<22} {:<8} {}", r.name, r.params, r.note);
            }
            Ok(Outcome::ok(json, text))
        }
        (false, Some(name)) => {
            let spec = parse_field(field)?;
            let params = parse_params(params)?;
            let alg = catalog_get(name, spec, &params).map_err(catalog_error)?;
            let doc = alg.document();
            let json = serde_json::to_value(&doc).expect("serializable");
            let text = format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
            Ok(Outcome::ok(json, text))
        }
        _ => Err(CliError::Input(
            "pass exactly one of --list or --emit NAME".to_string(),
        )),
    }
}

// ------------------------------------------------------------------ random

fn random(
    kind: &str,
    dim: usize,
    p: u64,
    seed: u64,
    split: Option<usize>,
    emit: bool,
) -> Result<Outcome, CliError> {
    if split.is_some() && kind != "metabelian-split" {
        return Err(CliError::Input(
            "--split only applies to --type metabelian-split".to_string(),
        ));
    }
    let (l, used_split) = match kind {
        "nilpotent" => (random_nilpotent(dim, p, seed).map_err(catalog_error)?, None),
        "supersolvable" => (
            random_supersolvable(dim, p, seed).map_err(catalog_error)?.0,
            None,
        ),
        "metabelian-split" => {
            let k = split.unwrap_or(dim / 2);
            (
                random_metabelian_split(dim, k, p, seed).map_err(catalog_error)?,
                Some(k),
            )
        }
        other => return Err(CliError::Input(format!("unknown type {other:?}"))),
    };

    let digest = algebra_digest(&l);
    let doc = AlgebraDocument::from_algebra(&l);
    let json = json!({
        "name": l.name(),
        "type": kind,
        "dim": dim,
        "p": p,
        "seed": seed,
        "split": used_split,
        "digest": digest,
        "document": if emit { serde_json::to_value(&doc).expect("serializable") } else { Value::Null },
    });

    let text = if emit {
        format!(
            "{}\n",
            serde_json::to_string_pretty(&doc).expect("serializable")
        )
    } else {
        let mut t = String::new();
        let _ = writeln!(t, "name = {}", l.name());
        let _ = writeln!(t, "dim = {dim}");
        let _ = writeln!(t, "field = F_{p}");
        if let Some(k) = used_split {
            let _ = writeln!(t, "split = {k}");
        }
        let _ = writeln!(t, "digest = {digest}");
        t
    };

    Ok(Outcome::ok(json, text))
}

// -------------------------------------------------------------------- fuzz

fn fuzz(
    question: &str,
    trials: u64,
    budget: u64,
    seed: u64,
    samples: usize,
) -> Result<Outcome, CliError> {
    let q: FuzzQuestion = question
        .parse()
        .map_err(|e: liealg_verify::ParsePropertyError| CliError::Input(e.to_string()))?;
    let generators = default_generators(q);
    let outcome = counterexample_search(&generators, q, trials, seed, budget, samples);

    let json = serde_json::to_value(&outcome).expect("serializable");

    let mut text = String::new();
    let _ = writeln!(text, "question = {q}");
    let _ = writeln!(text, "trials = {}", outcome.trials);
    let _ = writeln!(text, "base seed = {seed}");
    let _ = writeln!(text, "statuses:");
    for (status, n) in &outcome.statuses {
        let _ = writeln!(text, "  {status} = {n}");
    }
    match &outcome.counterexample {
        None => {
            let _ = writeln!(text, "counterexample: none");
        }
        Some(hit) => {
            let _ = writeln!(text, "counterexample:");
            let _ = writeln!(text, "  trial = {}", hit.trial);
            let _ = writeln!(text, "  seed = {}", hit.seed);
            let _ = writeln!(text, "  generator = {}", hit.generator);
            let _ = writeln!(text, "  algebra = {}", hit.algebra);
            let _ = writeln!(text, "  details:");
            for d in &hit.details {
                let _ = writeln!(text, "    - {d}");
            }
        }
    }

    Ok(Outcome::ok(json, text))
}
