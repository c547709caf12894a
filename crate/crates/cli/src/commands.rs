use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use sturmian::christoffel::{
    christoffel_by_directive, christoffel_by_slope, lyndon_factorization, ChristoffelWord,
};
use sturmian::distribution::{histogram_with, summarize_histogram, HistogramOptions};
use sturmian::palindrome::{self, pal_closure, period_pair, psi_inverse, psi_with_budget};
use sturmian::stern::{
    self, noncommutative_cw, stern_via_christoffel, stern_via_subwords, stern_via_zeta,
};
use sturmian::tree::{path_of_fraction, Flavor, TreeNode};
use sturmian::verify::{run_all, run_named, CheckResult, VerifyConfig, CHECKS};
use sturmian::word::{Letter, Word};
use sturmian::Frac;

use crate::error::CliError;
use crate::output::{parse_word, Format, Output};
use crate::{FlavorArg, SternMethod};

/// Rows of the occurrence table printed in text mode.
const OCC_TEXT_ROWS: usize = 100_000;
/// Rows of the occurrence table emitted as json or csv.
const OCC_DATA_ROWS: usize = 10_000_000;
/// Largest argument of the ζ-continuant evaluator, which is linear in `n`.
const ZETA_LIMIT: u64 = 1 << 22;
/// Largest exponent accepted in `base^exp` arguments.
const MAX_EXPONENT: u32 = 1 << 16;

pub fn psi(out: &mut Output, word: &str, budget: usize) -> Result<(), CliError> {
    out.require_not_csv("psi")?;
    let v = parse_word(word)?;
    let w = psi_with_budget(&v, budget)?;
    let pp = period_pair(&v);
    match out.format {
        Format::Json => out.json(&json!({
            "directive": out.word(&v),
            "psi": out.word(&w),
            "length": w.len(),
            "p_a": pp.p_a.to_string(),
            "p_b": pp.p_b.to_string(),
        })),
        _ => {
            let line = format!(
                "{} (|.|={}, p_a={}, p_b={})",
                out.word(&w),
                w.len(),
                pp.p_a,
                pp.p_b
            );
            out.line(line)
        }
    }
}

pub fn closure(out: &mut Output, word: &str) -> Result<(), CliError> {
    out.require_not_csv("closure")?;
    let w = parse_word(word)?;
    let c = pal_closure(&w);
    match out.format {
        Format::Json => out.json(&json!({ "word": out.word(&w), "closure": out.word(&c) })),
        _ => {
            let line = out.word(&c);
            out.line(line)
        }
    }
}

pub fn directive(out: &mut Output, word: &str) -> Result<(), CliError> {
    out.require_not_csv("directive")?;
    let w = parse_word(word)?;
    let v = psi_inverse(&w)?;
    match out.format {
        Format::Json => out.json(&json!({ "word": out.word(&w), "directive": out.word(&v) })),
        _ => {
            let line = out.word(&v);
            out.line(line)
        }
    }
}

pub fn christoffel(
    out: &mut Output,
    slope: Option<&str>,
    directive: Option<&str>,
) -> Result<(), CliError> {
    out.require_not_csv("christoffel")?;
    let cw = match (slope, directive) {
        (Some(s), _) => {
            let f: Frac = s.parse()?;
            match (f.num().to_u64(), f.den().to_u64()) {
                (Some(p), Some(q)) => christoffel_by_slope(p, q)?,
                _ => {
                    return Err(CliError::Budget(format!(
                        "the Christoffel word of slope {f} is too long to print"
                    )))
                }
            }
        }
        (None, Some(v)) => christoffel_by_directive(&parse_word(v)?)?,
        (None, None) => return Err(CliError::Parse("give --slope or --directive".into())),
    };
    let factors = if cw.is_proper() {
        Some(lyndon_factorization(&cw)?)
    } else {
        None
    };
    let inverse_ok = factors.as_ref().map(|f| inverse_check(&cw, f));
    if out.format == Format::Json {
        let factorization = factors.as_ref().map(|(w1, w2)| {
            json!({
                "w1": out.word(&w1.word),
                "w2": out.word(&w2.word),
                "lengths": [w1.len(), w2.len()],
            })
        });
        out.json(&json!({
            "word": out.word(&cw.word),
            "slope": cw.slope.to_string(),
            "length": cw.len(),
            "order": cw.order(),
            "directive": cw.directive.as_ref().map(|v| out.word(v)),
            "factorization": factorization,
            "inverse_check": inverse_ok,
        }))?;
    } else {
        let mut lines = vec![
            format!("word:          {}", out.word(&cw.word)),
            format!("slope:         {}", cw.slope),
            format!("length:        {}", cw.len()),
        ];
        match (&cw.directive, cw.order()) {
            (Some(v), Some(order)) => {
                lines.push(format!("order:         {order}"));
                lines.push(format!("directive:     {}", out.word(v)));
            }
            _ => lines.push("order:         - (one-letter word)".into()),
        }
        if let (Some((w1, w2)), Some(ok)) = (&factors, inverse_ok) {
            lines.push(format!(
                "factorization: ({}, {}) with lengths ({}, {})",
                out.word(&w1.word),
                out.word(&w2.word),
                w1.len(),
                w2.len()
            ));
            lines.push(format!(
                "inverse check: |w|_b*|w1| = 1 and |w|_a*|w2| = 1 (mod {}): {}",
                cw.len(),
                if ok { "ok" } else { "FAILED" }
            ));
        }
        for l in lines {
            out.line(l)?;
        }
    }
    match inverse_ok {
        Some(false) => Err(CliError::Disagreement(
            "factor lengths are not the modular inverses of the letter counts".into(),
        )),
        _ => Ok(()),
    }
}

fn inverse_check(cw: &ChristoffelWord, (w1, w2): &(ChristoffelWord, ChristoffelWord)) -> bool {
    let n = cw.len() as u128;
    let b = cw.word.count(Letter::B) as u128;
    let a = cw.word.count(Letter::A) as u128;
    (b * w1.len() as u128) % n == 1 % n && (a * w2.len() as u128) % n == 1 % n
}

/// Parses a natural number written in decimal or as `base^exp`.
pub fn parse_natural(s: &str) -> Result<BigUint, CliError> {
    let bad = || CliError::Parse(format!("not a natural number: {s:?}"));
    let s = s.trim();
    if let Some((base, exp)) = s.split_once('^') {
        let base: BigUint = base.trim().parse().map_err(|_| bad())?;
        let exp: u32 = exp.trim().parse().map_err(|_| bad())?;
        if exp > MAX_EXPONENT {
            return Err(CliError::Budget(format!(
                "exponent {exp} exceeds {MAX_EXPONENT}"
            )));
        }
        return Ok(num_traits::pow(base, exp as usize));
    }
    s.parse().map_err(|_| bad())
}

pub fn stern(out: &mut Output, n: &str, method: SternMethod) -> Result<(), CliError> {
    out.require_not_csv("stern")?;
    let n = parse_natural(n)?;
    let small = n.to_u64().filter(|&m| (2..=ZETA_LIMIT).contains(&m));
    let methods: Vec<SternMethod> = match method {
        SternMethod::All => {
            let mut all = vec![
                SternMethod::Recurrence,
                SternMethod::Christoffel,
                SternMethod::Subwords,
            ];
            if small.is_some() {
                all.push(SternMethod::Zeta);
            }
            all
        }
        m => vec![m],
    };
    let mut values = Vec::with_capacity(methods.len());
    for m in methods {
        let value = match m {
            SternMethod::Recurrence | SternMethod::All => stern::stern(&n),
            SternMethod::Christoffel => stern_via_christoffel(&n),
            SternMethod::Subwords => stern_via_subwords(&n),
            SternMethod::Zeta => zeta_value(&n, small)?,
        };
        values.push((method_name(m), value));
    }
    let first = values[0].1.clone();
    let agree = values.iter().all(|(_, v)| *v == first);
    if out.format == Format::Json {
        let mut by_method = Map::new();
        for (name, v) in &values {
            by_method.insert(name.to_string(), Value::String(v.to_string()));
        }
        out.json(&json!({
            "n": n.to_string(),
            "value": first.to_string(),
            "methods": by_method,
            "agree": agree,
        }))?;
    } else if method == SternMethod::All {
        for (name, v) in &values {
            out.line(format!("{name:<12}{v}"))?;
        }
        let verdict = if agree { "agree" } else { "DISAGREE" };
        out.line(format!(
            "s({n}) = {first}: {} methods {verdict}",
            values.len()
        ))?;
    } else {
        out.line(first.to_string())?;
    }
    if agree {
        Ok(())
    } else {
        Err(CliError::Disagreement(format!(
            "evaluators of s({n}) disagree"
        )))
    }
}

fn zeta_value(n: &BigUint, small: Option<u64>) -> Result<BigUint, CliError> {
    let Some(m) = small else {
        if *n < BigUint::from(2u8) {
            return Err(CliError::Arithmetic(
                "the zeta evaluator needs n >= 2".into(),
            ));
        }
        return Err(CliError::Budget(format!(
            "the zeta evaluator is limited to n <= {ZETA_LIMIT}"
        )));
    };
    stern_via_zeta(m)?
        .to_biguint()
        .ok_or_else(|| CliError::Disagreement(format!("negative value for s({m})")))
}

fn method_name(m: SternMethod) -> &'static str {
    match m {
        SternMethod::All | SternMethod::Recurrence => "recurrence",
        SternMethod::Christoffel => "christoffel",
        SternMethod::Subwords => "subwords",
        SternMethod::Zeta => "zeta",
    }
}

pub fn occ(out: &mut Output, word: &str) -> Result<(), CliError> {
    let w = parse_word(word)?;
    let cap = if out.format == Format::Text {
        OCC_TEXT_ROWS
    } else {
        OCC_DATA_ROWS
    };
    let (marker_word, rows) = noncommutative_cw(&w, cap)?;
    let expected = palindrome::psi(&w)?.concat(&Word::from_letters(vec![Letter::B, Letter::A]));
    let host = w.wrap(Letter::B, Letter::B);
    match out.format {
        Format::Json => {
            let table: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "positions": r.occurrence.positions,
                        "reversed": r.reversed_key,
                        "marker": out.letter(r.marker).to_string(),
                    })
                })
                .collect();
            out.json(&json!({
                "word": out.word(&w),
                "host": out.word(&host),
                "occurrences": table,
                "marker_word": out.word(&marker_word),
            }))?;
        }
        Format::Csv => {
            let records: Vec<[String; 4]> = rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    [
                        (i + 1).to_string(),
                        join(&r.occurrence.positions),
                        join(&r.reversed_key),
                        out.letter(r.marker).to_string(),
                    ]
                })
                .collect();
            let mut csv = out.csv();
            csv.write_record(["index", "positions", "reversed", "marker"])
                .map_err(csv_error)?;
            for record in records {
                csv.write_record(&record).map_err(csv_error)?;
            }
            csv.flush()?;
        }
        Format::Text => {
            out.line(format!("host: {}", out.word(&host)))?;
            let width = rows.len().to_string().len();
            for (i, r) in rows.iter().enumerate() {
                let line = format!(
                    "{:>width$}  {:<16} {}",
                    i + 1,
                    r.occurrence.to_string(),
                    out.letter(r.marker)
                );
                out.line(line)?;
            }
            let line = format!("marker word: {}", out.word(&marker_word));
            out.line(line)?;
        }
    }
    if marker_word == expected {
        Ok(())
    } else {
        Err(CliError::Disagreement(format!(
            "marker word {marker_word} differs from psi(w)ba = {expected}"
        )))
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Io(std::io::Error::other(e))
}

pub fn tree(
    out: &mut Output,
    path: Option<&str>,
    fraction: Option<&str>,
    flavor: FlavorArg,
) -> Result<(), CliError> {
    out.require_not_csv("tree")?;
    let path = match (path, fraction) {
        (Some(p), _) => parse_word(p)?,
        (None, Some(f)) => {
            let f: Frac = f.parse()?;
            let flavor = match flavor {
                FlavorArg::Raney => Flavor::Raney,
                FlavorArg::Sternbrocot => Flavor::SternBrocot,
            };
            path_of_fraction(&f, flavor)?
        }
        (None, None) => return Err(CliError::Parse("give a path or --fraction".into())),
    };
    let node = TreeNode::new(path);
    match out.format {
        Format::Json => out.json(&json!({
            "path": out.word(&node.path),
            "nu": node.number.to_string(),
            "raney": node.raney.to_string(),
            "sternbrocot": node.sternbrocot.to_string(),
        })),
        _ => {
            let lines = [
                format!("path:        {}", out.word(&node.path)),
                format!("nu:          {}", node.number),
                format!("raney:       {}", node.raney),
                format!("sternbrocot: {}", node.sternbrocot),
            ];
            for l in lines {
                out.line(l)?;
            }
            Ok(())
        }
    }
}

pub fn dist(out: &mut Output, k: u32, symmetry: bool, max_order: u32) -> Result<(), CliError> {
    let options = HistogramOptions {
        max_order,
        complement_symmetry: symmetry,
    };
    let h = histogram_with(k, options)?;
    let summary = summarize_histogram(&h);
    match out.format {
        Format::Csv => {
            let mut csv = out.csv();
            csv.write_record(["k", "n", "C_k(n)"]).map_err(csv_error)?;
            for (n, c) in &h.counts {
                csv.write_record([k.to_string(), n.to_string(), c.to_string()])
                    .map_err(csv_error)?;
            }
            csv.flush()?;
            Ok(())
        }
        Format::Json => {
            let histogram: Vec<Value> = h
                .counts
                .iter()
                .map(|(n, c)| json!({ "n": n, "count": c }))
                .collect();
            out.json(&json!({
                "k": summary.k,
                "M_k": summary.m_k,
                "argmax": summary.argmax,
                "missing": summary.missing,
                "missing_count": summary.missing_count,
                "total": h.total(),
                "average": h.average().to_string(),
                "histogram": histogram,
            }))
        }
        Format::Text => {
            let list = |xs: &[u64]| {
                xs.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let lines = [
                format!("k:             {k}"),
                format!("words:         {}", h.total()),
                format!("average:       {}", h.average()),
                format!("M_k:           {}", summary.m_k),
                format!("argmax:        {}", list(&summary.argmax)),
                format!(
                    "missing ({}): {}",
                    summary.missing_count,
                    list(&summary.missing)
                ),
            ];
            for l in lines {
                out.line(l)?;
            }
            out.line("n C_k(n)")?;
            for (n, c) in &h.counts {
                out.line(format!("{n} {c}"))?;
            }
            Ok(())
        }
    }
}

pub fn verify(
    out: &mut Output,
    max_k: u32,
    max_n: u64,
    extended: bool,
    check: Option<&str>,
) -> Result<(), CliError> {
    let config = VerifyConfig {
        max_k,
        max_n,
        extended,
    };
    let results: Vec<CheckResult> = match check {
        Some(name) => vec![run_named(name, &config).ok_or_else(|| {
            let known: Vec<&str> = CHECKS.iter().map(|(n, _)| *n).collect();
            CliError::Parse(format!(
                "unknown check {name:?}; known: {}",
                known.join(", ")
            ))
        })?],
        None => run_all(&config),
    };
    let failed = results.iter().filter(|r| !r.passed).count();
    match out.format {
        Format::Json => out.json(&json!({
            "config": { "max_k": max_k, "max_n": max_n, "extended": extended },
            "results": results,
            "passed": failed == 0,
        }))?,
        Format::Csv => {
            let mut csv = out.csv();
            csv.write_record(["check", "passed", "millis", "detail"])
                .map_err(csv_error)?;
            for r in &results {
                csv.write_record([
                    r.name.to_string(),
                    r.passed.to_string(),
                    r.millis.to_string(),
                    r.detail.clone(),
                ])
                .map_err(csv_error)?;
            }
            csv.flush()?;
        }
        Format::Text => {
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                out.line(format!(
                    "{status} {} ({} ms) {}",
                    r.name, r.millis, r.detail
                ))?;
            }
            out.line(format!(
                "{} of {} checks passed",
                results.len() - failed,
                results.len()
            ))?;
        }
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(CliError::Disagreement(format!("{failed} check(s) failed")))
    }
}
