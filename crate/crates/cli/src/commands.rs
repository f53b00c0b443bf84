//! Drivers for each subcommand. All output is built in memory so that it can
//! be cached and compared byte for byte.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use flagk::pieri::{expand, path_rows, restricted_paths, ExpansionRecord};
use flagk::suites::{run_suite, SuiteOptions};
use flagk::weyl::bruhat_leq;
use flagk::{CartanType, LaurentPoly, PathModel, RootSystem, WeylElt, WeylGroup};
use serde::Serialize;
use serde_json::json;

use crate::{CliError, Format, JobSpec, Outcome};

pub fn dispatch(spec: &JobSpec) -> Result<Outcome, CliError> {
    match spec.command.as_str() {
        "roots" => ok(cmd_roots(spec)),
        "weyl" => ok(cmd_weyl(spec)),
        "paths" => ok(cmd_paths(spec)),
        "character" => ok(cmd_character(spec)),
        "expand" => ok(cmd_expand(spec)),
        "verify" => cmd_verify(spec),
        other => Err(CliError::Usage(format!("unknown command {other}"))),
    }
}

fn ok(r: Result<String, CliError>) -> Result<Outcome, CliError> {
    r.map(|stdout| Outcome { stdout, exit_code: 0 })
}

fn root_system(spec: &JobSpec) -> Result<RootSystem, CliError> {
    let name = spec.cartan_type.as_deref().ok_or_else(|| CliError::Usage("--type is required".into()))?;
    Ok(RootSystem::new(CartanType::parse(name, spec.rank)?))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output values serialize");
    s.push('\n');
    s
}

fn word_of(w: &WeylElt) -> Vec<usize> {
    w.word().to_vec()
}

fn element(rs: &RootSystem, spec: &JobSpec) -> Result<Option<WeylElt>, CliError> {
    match &spec.word {
        Some(word) => Ok(Some(WeylElt::from_word(rs, word)?)),
        None => Ok(None),
    }
}

pub fn cmd_roots(spec: &JobSpec) -> Result<String, CliError> {
    let rs = root_system(spec)?;
    let roots: Vec<_> = rs
        .positive_roots()
        .iter()
        .map(|r| json!({"root": r.root_coords, "weight": r.weight, "coroot": r.coroot_coords, "height": r.height()}))
        .collect();
    if spec.format == Format::Json {
        return Ok(to_json(&json!({
            "type": rs.cartan_type().to_string(),
            "rank": rs.rank(),
            "cartan_matrix": rs.cartan_matrix(),
            "rho": rs.rho(),
            "positive_roots": roots,
        })));
    }
    let mut s = String::new();
    let _ = writeln!(s, "type {} (rank {})", rs.cartan_type(), rs.rank());
    let _ = writeln!(s, "cartan matrix:");
    for row in rs.cartan_matrix() {
        let _ = writeln!(s, "  {row:?}");
    }
    let _ = writeln!(s, "rho = {:?}", rs.rho());
    let _ = writeln!(s, "{} positive roots (root coords | weight | coroot):", rs.num_positive_roots());
    for r in rs.positive_roots() {
        let _ = writeln!(s, "  {:?} | {:?} | {:?}", r.root_coords, r.weight, r.coroot_coords);
    }
    Ok(s)
}

pub fn cmd_weyl(spec: &JobSpec) -> Result<String, CliError> {
    let rs = root_system(spec)?;
    let group = WeylGroup::new(&rs)?;
    let w0 = group.longest();
    let Some(w) = element(&rs, spec)? else {
        if spec.format == Format::Json {
            return Ok(to_json(&json!({
                "type": rs.cartan_type().to_string(),
                "order": group.order(),
                "longest": word_of(w0),
                "length_of_longest": w0.length(),
            })));
        }
        return Ok(format!(
            "type {}: |W| = {}, w0 = {} (length {})\n",
            rs.cartan_type(),
            group.order(),
            w0,
            w0.length()
        ));
    };
    let inv = w.inverse(&rs);
    let left: Vec<usize> = (1..=rs.rank()).filter(|&i| w.has_left_descent(i)).collect();
    let right: Vec<usize> = (1..=rs.rank()).filter(|&i| w.has_right_descent(&rs, i)).collect();
    let reduced = group.reduced_words(&w).len();
    let below = group.elements().iter().filter(|v| bruhat_leq(&rs, v, &w)).count();
    if spec.format == Format::Json {
        return Ok(to_json(&json!({
            "type": rs.cartan_type().to_string(),
            "word": word_of(&w),
            "length": w.length(),
            "inverse": word_of(&inv),
            "left_descents": left,
            "right_descents": right,
            "reduced_words": reduced,
            "bruhat_interval_size": below,
        })));
    }
    let mut s = String::new();
    let _ = writeln!(s, "w = {w} (length {})", w.length());
    let _ = writeln!(s, "w^-1 = {inv}");
    let _ = writeln!(s, "left descents {left:?}, right descents {right:?}");
    let _ = writeln!(s, "{reduced} reduced words, {below} elements in [1, w]");
    Ok(s)
}

pub fn cmd_paths(spec: &JobSpec) -> Result<String, CliError> {
    let rs = root_system(spec)?;
    let pm = PathModel::new(&rs, &spec.lambda)?;
    if spec.dot {
        return Ok(pm.crystal_dot()?);
    }
    let w = element(&rs, spec)?;
    let paths = match &w {
        Some(w) => restricted_paths(&pm, w)?,
        None => pm.generate()?,
    };
    let rows = match &w {
        Some(w) => Some(path_rows(&pm, &paths, w)?),
        None => None,
    };
    if spec.format == Format::Json {
        let items: Vec<_> = paths
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let mut v = json!({
                    "path": p.to_record(),
                    "endpoint": p.endpoint(),
                });
                if let Some(rows) = &rows {
                    v["lift"] = json!(rows[i].lift.iter().map(word_of).collect::<Vec<_>>());
                    v["final_direction"] = json!(word_of(&rows[i].final_direction));
                }
                v
            })
            .collect();
        return Ok(to_json(&json!({
            "type": rs.cartan_type().to_string(),
            "lambda": spec.lambda,
            "word": w.as_ref().map(word_of),
            "count": paths.len(),
            "paths": items,
        })));
    }
    let mut s = String::new();
    match &w {
        Some(w) => {
            let _ = writeln!(s, "{} paths of shape {:?} with initial direction ≤ {w}", paths.len(), spec.lambda);
        }
        None => {
            let _ = writeln!(s, "{} paths of shape {:?}", paths.len(), spec.lambda);
        }
    }
    for (i, p) in paths.iter().enumerate() {
        let cosets: Vec<String> = p.cosets().iter().map(|c| c.to_string()).collect();
        let breaks: Vec<String> = p.breaks().iter().map(|b| b.to_string()).collect();
        let _ = write!(s, "  ({}; {})  endpoint {:?}", cosets.join(" > "), breaks.join(", "), p.endpoint());
        if let Some(rows) = &rows {
            let lift: Vec<String> = rows[i].lift.iter().map(|t| t.to_string()).collect();
            let _ = write!(s, "  lift ({})  v = {}", lift.join(" > "), rows[i].final_direction);
        }
        s.push('\n');
    }
    Ok(s)
}

pub fn cmd_character(spec: &JobSpec) -> Result<String, CliError> {
    let rs = root_system(spec)?;
    let pm = PathModel::new(&rs, &spec.lambda)?;
    let chi: LaurentPoly = pm.character()?;
    let dim = chi.epsilon();
    if spec.format == Format::Json {
        return Ok(to_json(&json!({
            "type": rs.cartan_type().to_string(),
            "lambda": spec.lambda,
            "dimension": dim.to_string(),
            "character": chi,
        })));
    }
    let mut s = String::new();
    let _ = writeln!(s, "character of V({:?}) for {}: dimension {dim}", spec.lambda, rs.cartan_type());
    for (mu, c) in chi.terms() {
        let _ = writeln!(s, "  e^{mu:?}  {c}");
    }
    Ok(s)
}

pub fn cmd_expand(spec: &JobSpec) -> Result<String, CliError> {
    let rs = root_system(spec)?;
    let pm = PathModel::new(&rs, &spec.lambda)?;
    let word = spec.word.clone().unwrap_or_default();
    let w = WeylElt::from_reduced_word(&rs, &word)?;
    let e = expand(&pm, &w)?;
    e.check_invariants(&rs)?;
    let rec: ExpansionRecord = e.to_record(&rs);
    if spec.format == Format::Json {
        return Ok(to_json(&rec));
    }
    let mut s = String::new();
    let _ = writeln!(
        s,
        "e^{:?} [O_X({})] in type {}: {} paths, {} classes",
        spec.lambda,
        e.w,
        rs.cartan_type(),
        e.path_count,
        e.coeffs.len()
    );
    let _ = writeln!(s, "  {:<16} {:<16} mult", "v", "v^-1");
    for (v, c) in &e.coeffs {
        let _ = writeln!(s, "  {:<16} {:<16} {c}", v.to_string(), v.inverse(&rs).to_string());
    }
    Ok(s)
}

pub fn cmd_verify(spec: &JobSpec) -> Result<Outcome, CliError> {
    let suite = spec.suite.as_deref().unwrap_or_default();
    let mut opts = SuiteOptions { seed: spec.seed.unwrap_or(crate::DEFAULT_SEED), ..SuiteOptions::default() };
    if let Some(name) = &spec.cartan_type {
        opts.types = vec![CartanType::parse(name, spec.rank)?];
    }
    if suite == "point-classes" && spec.cartan_type.is_none() {
        opts.types = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"].iter().map(|s| s.parse().unwrap()).collect();
    }
    let report = run_suite(suite, &opts)?;
    let exit_code = if report.passed() { 0 } else { 1 };
    let stdout = if spec.format == Format::Json {
        to_json(&json!({"suite": report.suite, "passed": report.passed(), "checks": report.checks, "failures": report.failures, "notes": report.notes}))
    } else {
        let mut s = String::new();
        let types: BTreeSet<String> = opts.types.iter().map(|t| t.to_string()).collect();
        let scope = if suite == "g2golden" { "G2".to_string() } else { types.into_iter().collect::<Vec<_>>().join(", ") };
        let verdict = if report.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "suite {} [{scope}]: {verdict} ({} checks, {} failures)", report.suite, report.checks, report.failures.len());
        for f in &report.failures {
            let _ = writeln!(s, "  failure: {f}");
        }
        for n in &report.notes {
            let _ = writeln!(s, "  note: {n}");
        }
        s
    };
    Ok(Outcome { stdout, exit_code })
}
