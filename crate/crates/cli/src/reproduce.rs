use std::process::ExitCode;

use anyhow::Result;
use serde_json::{json, Value};

use cega::algebra::GroupAlgebra;
use cega::catalog;
use cega::decision::{self, enumeration_size, Method, Options, Strategy, DEFAULT_ORACLE_BUDGET};
use cega::field::FieldSpec;

use crate::Target;

struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    json: Vec<Value>,
    failures: Vec<String>,
    summary: String,
}

impl Table {
    fn new(header: &[&'static str]) -> Self {
        Table {
            header: header.to_vec(),
            rows: Vec::new(),
            json: Vec::new(),
            failures: Vec::new(),
            summary: String::new(),
        }
    }

    fn render(&self) -> String {
        let widths: Vec<usize> = (0..self.header.len())
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r[c].chars().count())
                    .chain([self.header[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: Vec<&str>| {
            cells
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        let mut out = vec![line(self.header.clone())];
        for r in &self.rows {
            out.push(line(r.iter().map(String::as_str).collect()));
        }
        out.push(self.summary.clone());
        out.join("\n") + "\n"
    }
}

fn gf(p: u32) -> FieldSpec {
    FieldSpec::new(p, 1).expect("prime field")
}

fn class_text(c: Option<usize>) -> String {
    c.map_or("-".into(), |c| c.to_string())
}

fn order16() -> Result<Table> {
    let mut t = Table::new(&[
        "#",
        "group",
        "class",
        "method",
        "reason",
        "verdict",
        "cross-checks",
    ]);
    let opts = Options {
        crossvalidate: true,
        budget: DEFAULT_ORACLE_BUDGET,
    };
    for (i, g) in catalog::order16_all()?.into_iter().enumerate() {
        let name = g.name().to_string();
        let class = g.nilpotency_class();
        let r = match decision::check(g, &gf(2), Strategy::Auto, &opts) {
            Ok(r) => r,
            Err(e) => {
                t.failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        if !r.verdict.is_essential() {
            t.failures.push(format!("{name}: {}", r.verdict));
        }
        if (r.method == Method::Socle) != (class == Some(3)) {
            t.failures
                .push(format!("{name}: class {class:?} decided by {}", r.method));
        }
        let checks: Vec<String> = r
            .cross_checks
            .iter()
            .map(|c| format!("{}={}", c.method, c.verdict))
            .collect();
        t.rows.push(vec![
            (i + 1).to_string(),
            name.clone(),
            class_text(class),
            r.method.to_string(),
            r.reason.as_str().to_string(),
            r.verdict.to_string(),
            checks.join(" "),
        ]);
        t.json.push(json!({
            "index": i + 1,
            "group": name,
            "nilpotency_class": class,
            "method": r.method,
            "reason": r.reason,
            "verdict": r.verdict,
            "cross_checks": r.cross_checks,
        }));
    }
    let essential = t
        .rows
        .iter()
        .filter(|r| r[5] == "centrally_essential")
        .count();
    t.summary = format!(
        "{essential}/{} centrally essential over GF(2)",
        t.rows.len()
    );
    Ok(t)
}

fn counterexamples(with_p5: bool) -> Result<Table> {
    let mut t = Table::new(&[
        "p", "group", "order", "|Z_i|", "method", "reason", "verdict", "g",
    ]);
    let primes: &[u32] = if with_p5 { &[2, 3, 5] } else { &[2, 3] };
    for &p in primes {
        let g = catalog::order_p5_counterexample(p as usize)?;
        let name = g.name().to_string();
        let sizes = g.upper_central_series().sizes();
        let r = match decision::check(g, &gf(p), Strategy::Auto, &Options::default()) {
            Ok(r) => r,
            Err(e) => {
                t.failures.push(format!("p = {p}: {e}"));
                continue;
            }
        };
        if r.verdict.is_essential() {
            t.failures.push(format!("p = {p}: {}", r.verdict));
        }
        let witness = r.witness("element_times_center_sum");
        if witness.is_none() {
            t.failures.push(format!("p = {p}: no g·Σ_Z witness"));
        }
        let g_label = witness
            .and_then(|w| w.terms.first())
            .map_or("-".to_string(), |(l, _)| l.clone());
        let sizes_text = sizes
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" < ");
        t.rows.push(vec![
            p.to_string(),
            name.clone(),
            r.group.order.to_string(),
            sizes_text,
            r.method.to_string(),
            r.reason.as_str().to_string(),
            r.verdict.to_string(),
            g_label,
        ]);
        t.json.push(json!({
            "p": p,
            "group": name,
            "order": r.group.order,
            "upper_central_series": sizes,
            "method": r.method,
            "reason": r.reason,
            "verdict": r.verdict,
            "witnesses": r.witnesses,
        }));
    }
    t.summary = format!("{} groups checked", t.rows.len());
    Ok(t)
}

fn agreement() -> Result<Table> {
    let mut t = Table::new(&["group", "field", "decide", "via", "oracle", "agree"]);
    let mut mismatches = 0;
    for entry in catalog::entries() {
        let g = entry.build()?;
        if g.order() > 16 {
            continue;
        }
        for p in [2, 3] {
            let alg = GroupAlgebra::new(g.clone(), gf(p));
            if enumeration_size(&alg, DEFAULT_ORACLE_BUDGET).is_err() {
                continue;
            }
            let d = decision::decide(alg.group_arc().clone(), alg.field(), &Options::default());
            let o = decision::oracle(&alg, DEFAULT_ORACLE_BUDGET);
            let (d, o) = match (d, o) {
                (Ok(d), Ok(o)) => (d, o),
                (Err(e), _) | (_, Err(e)) => {
                    t.failures.push(format!("{} over GF({p}): {e}", entry.spec));
                    continue;
                }
            };
            let agree = d.verdict == o.verdict;
            if !agree {
                mismatches += 1;
                t.failures.push(format!(
                    "{} over GF({p}): decide {} but oracle {}",
                    entry.spec, d.verdict, o.verdict
                ));
            }
            t.rows.push(vec![
                entry.spec.clone(),
                format!("GF({p})"),
                d.verdict.to_string(),
                d.reason.as_str().to_string(),
                o.verdict.to_string(),
                if agree { "yes" } else { "NO" }.to_string(),
            ]);
            t.json.push(json!({
                "group": entry.spec,
                "p": p,
                "decide": d.verdict,
                "reason": d.reason,
                "oracle": o.verdict,
                "agree": agree,
            }));
        }
    }
    t.summary = format!("{} cases, {mismatches} mismatches", t.rows.len());
    Ok(t)
}

pub fn run(target: Target, with_p5: bool, json: bool) -> Result<ExitCode> {
    let table = match target {
        Target::Remark31 => order16()?,
        Target::Prop29 => counterexamples(with_p5)?,
        Target::Thm11 => agreement()?,
    };
    if json {
        let doc = json!({
            "rows": table.json,
            "summary": table.summary,
            "failures": table.failures,
        });
        crate::write_stdout(&(serde_json::to_string_pretty(&doc)? + "\n"))?;
    } else {
        crate::write_stdout(&table.render())?;
    }
    if table.failures.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        for f in &table.failures {
            eprintln!("assertion failed: {f}");
        }
        Ok(ExitCode::from(3))
    }
}
