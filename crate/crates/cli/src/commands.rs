//! The subcommands. Each returns its exit status; errors are mapped to
//! status 2, or 3 for construction preconditions, by the caller.

use std::fmt;
use std::path::Path;

use anyhow::{anyhow, bail, Context};
use serde_json::{json, Value};
use wardforge::classes::{
    double_ward_points, is_double_ward_at, modular_unipotent_point, ward_dual_point, ward_point,
};
use wardforge::constructions::{
    affine, enumerate_quasigroups, from_translatable, parastrophe, translatability, ward,
    TranslatableSpec,
};
use wardforge::double::{classify_pair, Law};
use wardforge::props::{check_basic, classify_group, is_quasigroup, unipotency, units, Line};
use wardforge::suite::{run_all, run_check, Quantifier, SuiteConfig, TheoremCheck, Verdict};
use wardforge::term::{
    catalog, holds_universally, parse_identity, Const, Identity, Interpretation, Op,
};
use wardforge::{BasicProperty, Magma, PointedMagma};

use crate::report::{label, labels, rows, set, tuple, yes_no, Report};
use crate::source;
use crate::tablefile::TableFile;

/// A construction refused its input; reported with exit status 3.
#[derive(Debug)]
pub struct PreconditionFailed(pub String);

impl fmt::Display for PreconditionFailed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for PreconditionFailed {}

/// Re-renders a library error with external labels. Precondition failures
/// become [`PreconditionFailed`]; other errors pass through.
fn external(err: wardforge::Error) -> anyhow::Error {
    match err {
        wardforge::Error::Precondition {
            construction,
            property,
            witness,
        } => {
            let at = match witness {
                // Latin violations are (flag, line, value).
                Some(w) if property == "QUASIGROUP" && w.len() == 3 => {
                    let line = if w[0] == 0 { "row" } else { "column" };
                    format!(" ({line} {} duplicates {})", label(w[1]), label(w[2]))
                }
                Some(w) => format!(" at witness {}", tuple(&w)),
                None => String::new(),
            };
            anyhow!(PreconditionFailed(format!(
                "{construction}: input fails {property}{at}"
            )))
        }
        other => anyhow!(other),
    }
}

fn witness_json(w: Option<&Vec<usize>>) -> Value {
    w.map_or(Value::Null, |w| Value::from(labels(w)))
}

fn verdict_line(name: &str, witness: Option<&Vec<usize>>) -> String {
    match witness {
        None => format!("{name}: yes"),
        Some(w) => format!("{name}: no (witness {})", tuple(w)),
    }
}

// ---------------------------------------------------------------- check

pub fn check(src: &str, pointed: Option<usize>, json: bool) -> anyhow::Result<u8> {
    let file = source::load(src)?;
    let m = &file.magma;
    let n = m.order();
    let point = match pointed {
        Some(k) => Some(source::point(k, n, "--pointed")?),
        None => file.point,
    };
    let mut report = Report::new(
        "check",
        json!({"source": src, "order": n, "point": point.map(label)}),
    );

    let latin = is_quasigroup(m).into_witness();
    let quasigroup = latin.is_none();
    let text = match &latin {
        None => "quasigroup: yes".to_string(),
        Some(v) => {
            let line = match v.line {
                Line::Row => "row",
                Line::Column => "column",
            };
            format!("quasigroup: NO ({line} {} duplicates {})", label(v.index), label(v.value))
        }
    };
    let violation = latin.map(|v| {
        json!({
            "line": if v.line == Line::Row { "row" } else { "column" },
            "index": label(v.index),
            "value": label(v.value),
        })
    });
    report.push(
        text,
        json!({"property": "quasigroup", "holds": quasigroup, "violation": violation}),
    );

    for prop in BasicProperty::ALL {
        let result = check_basic(m, prop);
        report.push(
            verdict_line(prop.name(), result.witness()),
            json!({"property": prop.name(), "holds": result.holds(), "witness": witness_json(result.witness())}),
        );
    }

    let u = units(m);
    let two_sided = u.two_sided();
    report.push(
        format!(
            "units: left {}, right {}, two-sided {}",
            set(&u.left),
            set(&u.right),
            two_sided.map_or("none".to_string(), |e| label(e).to_string())
        ),
        json!({"property": "units", "left": labels(&u.left), "right": labels(&u.right), "two_sided": two_sided.map(label)}),
    );

    let uni = unipotency(m);
    report.push(
        match uni {
            Some(r) => format!("unipotent: yes (x.x = {})", label(r)),
            None => "unipotent: no".to_string(),
        },
        json!({"property": "unipotent", "holds": uni.is_some(), "value": uni.map(label)}),
    );

    let g = classify_group(m);
    let text = if g.is_group {
        format!(
            "group: yes ({}, {}, unit {})",
            if g.is_abelian_group() { "abelian" } else { "non-abelian" },
            if g.is_boolean_group() { "boolean" } else { "not boolean" },
            label(g.unit.expect("groups have a unit"))
        )
    } else {
        "group: no".to_string()
    };
    report.push(
        text,
        json!({"property": "group", "holds": g.is_group, "abelian": g.is_abelian, "boolean": g.is_boolean, "unit": g.unit.map(label)}),
    );

    let membership = |name: &str, found: Option<usize>| -> (String, Value) {
        let holds = match point {
            Some(p) => found == Some(p),
            None => found.is_some(),
        };
        let text = match (holds, point) {
            (true, _) => format!("{name}: yes (e={})", label(found.unwrap())),
            (false, Some(p)) => format!("{name}: no (at e={})", label(p)),
            (false, None) => format!("{name}: no"),
        };
        let points: Vec<usize> = found.filter(|_| holds).map(label).into_iter().collect();
        (text, json!({"property": name, "holds": holds, "points": points}))
    };
    let (text, value) = membership("ward", ward_point(m));
    report.push(text, value);
    let (text, value) = membership("ward dual", ward_dual_point(m));
    report.push(text, value);

    let dw: Vec<usize> = match point {
        Some(p) => Some(p).filter(|&p| is_double_ward_at(m, p)).into_iter().collect(),
        None => double_ward_points(m),
    };
    let text = match (dw.is_empty(), point) {
        (false, _) => {
            let ps: Vec<String> = labels(&dw).iter().map(|x| x.to_string()).collect();
            format!("double ward: yes (e={})", ps.join(", "))
        }
        (true, Some(p)) => format!("double ward: no (at e={})", label(p)),
        (true, None) => "double ward: no".to_string(),
    };
    report.push(
        text,
        json!({"property": "double ward", "holds": !dw.is_empty(), "points": labels(&dw)}),
    );

    // Shifts are amounts, not elements, so they are shown as they are.
    let ks = translatability(m);
    let text = if ks.is_empty() {
        "translatable: no".to_string()
    } else {
        let parts: Vec<String> = ks.iter().map(|k| k.to_string()).collect();
        format!("translatable: yes (k = {})", parts.join(", "))
    };
    report.push(text, json!({"property": "translatable", "holds": !ks.is_empty(), "k": ks}));

    report.print(json);
    Ok(0)
}

// ---------------------------------------------------------------- derive

/// The point a construction starts from: the file's header when present,
/// otherwise the point the construction's input class determines.
fn default_point(name: &str, m: &Magma) -> usize {
    let found = match name {
        "der" | "Der" | "derbar" => classify_group(m).unit,
        "ret" => unipotency(m),
        "Ret" => double_ward_points(m).first().copied(),
        "D" => ward_point(m).or_else(|| double_ward_points(m).first().copied()),
        "retbar" => modular_unipotent_point(m).or_else(|| units(m).left.first().copied()),
        _ => None,
    };
    found.unwrap_or(0)
}

fn parse_parts<const N: usize>(spec: &str, args: &str) -> anyhow::Result<[i64; N]> {
    let parts: Vec<&str> = args.split(':').collect();
    if parts.len() != N {
        bail!("{spec}: expected {N} numbers after the construction name");
    }
    let mut out = [0i64; N];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = part
            .trim()
            .parse()
            .with_context(|| format!("{spec}: {part:?} is not an integer"))?;
    }
    Ok(out)
}

fn construct(name: &str, src: Option<&str>) -> anyhow::Result<TableFile> {
    let (base, args) = match name.split_once(':') {
        Some((b, a)) => (b, Some(a)),
        None => (name, None),
    };
    if base == "affine" {
        if src.is_some() {
            bail!("affine takes no source");
        }
        let [n, a, b, c] = parse_parts::<4>(name, args.unwrap_or(""))?;
        if n < 1 {
            bail!("affine: the modulus must be at least 1");
        }
        return Ok(TableFile::new(affine(n as usize, a, b, c).map_err(external)?, None));
    }
    let src = src.ok_or_else(|| anyhow!("{name} needs a source table or group spec"))?;
    let file = source::load(src)?;
    let m = file.magma;
    let p = file.point.unwrap_or_else(|| default_point(base, &m));
    let input = PointedMagma::new(m.clone(), p).map_err(external)?;
    let pointed = |r: wardforge::Result<PointedMagma>| -> anyhow::Result<TableFile> {
        let r = r.map_err(external)?;
        Ok(TableFile::new(r.magma().clone(), Some(r.point())))
    };
    match (base, args) {
        ("der", None) => pointed(ward::der(&input)),
        ("ret", None) => pointed(ward::ret(&input)),
        ("Der", None) => pointed(ward::double_der(&input)),
        ("Ret", None) => pointed(ward::double_ret(&input)),
        ("D", None) if ward_point(&m) == Some(p) => pointed(ward::d_of_ward(&input)),
        ("D", None) => pointed(ward::d_of_dward(&input)),
        ("derbar", None) => pointed(ward::derbar(&input)),
        ("retbar", None) => pointed(ward::retbar(&input)),
        ("dual", None) => Ok(TableFile::new(m.dual(), file.point)),
        ("parastrophe", Some(a)) => {
            let [i] = parse_parts::<1>(name, a)?;
            let i = usize::try_from(i).map_err(|_| anyhow!("{name}: index must be in 1..=5"))?;
            Ok(TableFile::new(parastrophe(&m, i).map_err(external)?, None))
        }
        ("translatable", Some(a)) => {
            // The source's first row is the sequence; k is a shift amount.
            let [k] = parse_parts::<1>(name, a)?;
            let k = usize::try_from(k).map_err(|_| anyhow!("{name}: k must be positive"))?;
            let spec = TranslatableSpec::new(m.row(0).to_vec(), k).map_err(external)?;
            Ok(TableFile::new(from_translatable(&spec), None))
        }
        _ => bail!(
            "unknown construction {name:?}; expected der, ret, Der, Ret, D, dual, derbar, retbar, \
             parastrophe:I, affine:N:A:B:C or translatable:K"
        ),
    }
}

pub fn derive(name: &str, src: Option<&str>, out: Option<&Path>) -> anyhow::Result<u8> {
    let result = construct(name, src)?;
    match out {
        Some(path) => result.write(path)?,
        None => print!("{result}"),
    }
    Ok(0)
}

// ---------------------------------------------------------------- identity

/// The identities named by `expr` (a catalog name) or parsed from it, with
/// literals converted from 1-based labels.
fn identities(expr: &str) -> anyhow::Result<Vec<Identity>> {
    if !expr.contains('=') {
        if let Ok(ids) = catalog(expr.trim()) {
            return Ok(ids);
        }
    }
    let id = parse_identity(expr).map_err(|e| anyhow!("cannot parse identity: {e}"))?;
    let mut zero = false;
    let id = id.map_literals(|k| {
        zero |= k == 0;
        k.saturating_sub(1)
    });
    if zero {
        bail!("literal 0 is not an element; labels start at 1");
    }
    Ok(vec![id])
}

fn check_literals(ids: &[Identity], order: usize) -> anyhow::Result<()> {
    if let Some(max) = ids.iter().filter_map(|id| id.max_literal()).max() {
        if max >= order {
            bail!("literal {} is out of range for order {order}", label(max));
        }
    }
    Ok(())
}

fn assignment_text(bindings: &[(wardforge::term::Var, usize)]) -> String {
    let parts: Vec<String> = bindings
        .iter()
        .map(|(v, x)| format!("{}={}", v.as_char(), label(*x)))
        .collect();
    parts.join(" ")
}

pub fn identity(
    expr: &str,
    table: &str,
    table2: Option<&str>,
    e: Option<usize>,
    f: Option<usize>,
    json: bool,
) -> anyhow::Result<u8> {
    let ids = identities(expr)?;
    let dot = source::load(table)?.magma;
    let n = dot.order();
    check_literals(&ids, n)?;
    let star = table2.map(source::load).transpose()?.map(|t| t.magma);
    if ids.iter().any(|id| id.uses(Op::Star)) && star.is_none() {
        bail!("the identity uses '*' but no --table2 was given");
    }
    let mut interp = Interpretation::new(&dot);
    if let Some(s) = &star {
        interp = interp.with_star(s);
    }
    if let Some(k) = e {
        interp = interp.with_e(source::point(k, n, "--e")?);
    }
    if let Some(k) = f {
        interp = interp.with_f(source::point(k, n, "--f")?);
    }
    let mut report = Report::new(
        "identity",
        json!({"expr": expr, "table": table, "table2": table2, "e": e, "f": f}),
    );
    for id in &ids {
        let printed = id.map_literals(label).to_string();
        let result = holds_universally(id, &interp).map_err(|err| anyhow!("{err}"))?;
        match &result.witness {
            None => report.push(
                format!("{printed}: holds"),
                json!({"identity": printed, "holds": true, "witness": null}),
            ),
            Some(w) => {
                let bindings = w.bindings();
                let map: serde_json::Map<String, Value> = bindings
                    .iter()
                    .map(|(v, x)| (v.as_char().to_string(), Value::from(label(*x))))
                    .collect();
                report.push(
                    format!("{printed}: fails, witness {}", assignment_text(&bindings)),
                    json!({"identity": printed, "holds": false, "witness": map}),
                );
            }
        }
    }
    report.print(json);
    Ok(0)
}

// ---------------------------------------------------------------- pair

pub fn pair(first: &str, second: &str, json: bool) -> anyhow::Result<u8> {
    let a = source::load(first)?.magma;
    let b = source::load(second)?.magma;
    let r = classify_pair(&a, &b).map_err(external)?;
    let mut report = Report::new("pair", json!({"first": first, "second": second}));
    let mut parts = Vec::new();
    let mut laws = Vec::new();
    for law in Law::ALL {
        let name = match law {
            Law::Plain => "plain",
            Law::Lateral => "lateral",
            Law::Reversible => "reversible",
        };
        let result = r.law(law);
        parts.push(verdict_line(name, result.witness()));
        laws.push(json!({"law": name, "holds": result.holds(), "witness": witness_json(result.witness())}));
    }
    parts.push(format!("proper: {}", yes_no(r.proper)));
    report.push(parts.join(", "), json!({"laws": laws, "proper": r.proper}));
    report.print(json);
    Ok(0)
}

// ---------------------------------------------------------------- verify

fn check_json(r: &TheoremCheck) -> Value {
    let counterexample = r.counterexample.as_ref().map(|cx| {
        json!({
            "instance": cx.instance.label,
            "reason": cx.failure.reason,
            // Suite reports keep the library's 0-based labels.
            "witness_0based": cx.failure.witness,
        })
    });
    json!({
        "id": r.id,
        "description": r.description,
        "family": r.family,
        "quantifier": match r.quantifier { Quantifier::Universal => "universal", Quantifier::Existential => "existential" },
        "verdict": r.verdict.name(),
        "instances": r.instances,
        "failures": r.failures,
        "max_order": r.max_order,
        "seconds": r.elapsed.as_secs_f64(),
        "known_discrepancy": r.known_discrepancy,
        "as_expected": r.as_expected(),
        "notes": r.notes,
        "counterexample": counterexample,
    })
}

pub fn verify(
    target: &str,
    max_order: usize,
    extended: bool,
    strict: bool,
    json: bool,
) -> anyhow::Result<u8> {
    if max_order == 0 {
        bail!("--max-order must be at least 1");
    }
    let config = SuiteConfig::new(max_order).with_extended(extended);
    let reports = if target.eq_ignore_ascii_case("all") {
        run_all(&config)
    } else {
        vec![run_check(target, &config).map_err(external)?]
    };
    let mut report = Report::new(
        "verify",
        json!({"target": target, "max_order": max_order, "extended": extended, "strict": strict}),
    );
    for r in &reports {
        let flag = if r.known_discrepancy { "  [known discrepancy]" } else { "" };
        let mut text = format!(
            "{:<12} {:<9} {:>7} instances  {:>8.3}s{flag}",
            r.id,
            r.verdict.name(),
            r.instances,
            r.elapsed.as_secs_f64()
        );
        if let Some(cx) = &r.counterexample {
            let kind = match (r.quantifier, r.verdict) {
                (Quantifier::Existential, _) => "found",
                (_, Verdict::Refuted) => "counterexample",
                _ => "failure",
            };
            text.push_str(&format!(
                "\n    {kind} ({}; 0-based labels): {}",
                cx.instance.label, cx.failure
            ));
        }
        report.push(text, check_json(r));
    }
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    let unexpected: Vec<&str> = reports.iter().filter(|r| !r.as_expected()).map(|r| r.id).collect();
    report.line(format!(
        "{} confirmed, {} refuted, {} skipped; {} unexpected",
        count(Verdict::Confirmed),
        count(Verdict::Refuted),
        count(Verdict::Skipped),
        unexpected.len()
    ));
    report.print(json);
    Ok(if strict && !unexpected.is_empty() { 1 } else { 0 })
}

// ---------------------------------------------------------------- enumerate

/// The first `(e, f)` binding under which every identity holds; constants
/// that do not occur are left unbound.
fn satisfying_binding(ids: &[Identity], m: &Magma) -> Option<(Option<usize>, Option<usize>)> {
    let candidates = |c: Const| -> Vec<Option<usize>> {
        if ids.iter().any(|id| id.uses_const(c)) {
            m.elements().map(Some).collect()
        } else {
            vec![None]
        }
    };
    for e in candidates(Const::E) {
        for f in candidates(Const::F) {
            let mut interp = Interpretation::new(m);
            if let Some(e) = e {
                interp = interp.with_e(e);
            }
            if let Some(f) = f {
                interp = interp.with_f(f);
            }
            let ok = ids.iter().all(|id| {
                holds_universally(id, &interp).is_ok_and(|r| r.holds())
            });
            if ok {
                return Some((e, f));
            }
        }
    }
    None
}

pub fn enumerate(
    order: usize,
    filter: Option<&str>,
    limit: Option<usize>,
    out: Option<&Path>,
    json: bool,
) -> anyhow::Result<u8> {
    if order == 0 {
        bail!("--order must be at least 1");
    }
    let ids = filter.map(identities).transpose()?.unwrap_or_default();
    if ids.iter().any(|id| id.uses(Op::Star)) {
        bail!("a filter may only use the operation '.'");
    }
    check_literals(&ids, order)?;
    let squares = enumerate_quasigroups(order).map_err(external)?;
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    }
    let mut report = Report::new(
        "enumerate",
        json!({"order": order, "filter": filter, "limit": limit, "out": out.map(|p| p.display().to_string())}),
    );
    let (mut seen, mut matched) = (0usize, 0usize);
    for (index, q) in squares.enumerate() {
        if limit.is_some_and(|l| matched >= l) {
            break;
        }
        seen += 1;
        let Some((e, _)) = satisfying_binding(&ids, &q) else {
            continue;
        };
        matched += 1;
        let file = TableFile::new(q, e);
        let path = out.map(|dir| dir.join(format!("q{order}-{matched:04}.tbl")));
        let text = match &path {
            Some(p) => {
                file.write(p)?;
                p.display().to_string()
            }
            None => format!("# quasigroup {} of order {order}\n{file}", index + 1),
        };
        report.push(
            text,
            json!({
                "index": index + 1,
                "point": e.map(label),
                "rows": rows(&file.magma),
                "file": path.map(|p| p.display().to_string()),
            }),
        );
    }
    report.line(format!(
        "# {matched} of {seen} quasigroups of order {order} pass{}",
        if filter.is_some() { " the filter" } else { "" }
    ));
    report.print(json);
    Ok(0)
}
