//! One function per subcommand; each returns the full payload so that
//! the caller owns all I/O.

use std::fmt::Write as _;

use anyhow::Result;
use clap::ValueEnum;
use i2gr_core::classical::{pairing_matrix, ring_check_i2gr26};
use i2gr_core::classes::lefschetz_crosscheck;
use i2gr_core::{
    betti_direct, build_graph, chevalley_table, codim, degree_table, enumerate_admissible, structure_constants_classical,
    verify_gkm, ClassTable, GrassmannianSpec,
};
use serde::Serialize;
use serde_json::json;

use crate::Report;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

impl std::fmt::Display for Format {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn csv<R: IntoIterator<Item = Vec<String>>>(header: &[&str], rows: R) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn unsupported(format: Format, command: &str) -> Result<String> {
    Err(crate::Usage(format!("--format {format} is not available for {command}")).into())
}

pub fn fixed_points(spec: &GrassmannianSpec, format: Format) -> Result<Report> {
    let points = enumerate_admissible(spec);
    let rows = points.iter().map(|p| (p, codim(p, spec)));
    let body = match format {
        Format::Json => json(&json!({
            "spec": spec,
            "count": points.len().to_string(),
            "points": rows.map(|(p, c)| json!({"subset": p, "codim": c.to_string()})).collect::<Vec<_>>(),
        }))?,
        Format::Csv => csv(&["subset", "codim"], rows.map(|(p, c)| vec![p.to_string(), c.to_string()]))?,
        Format::Text => rows.map(|(p, c)| format!("{p:?}\t{c}\n")).collect(),
        Format::Dot => unsupported(format, "fixed-points")?,
    };
    Ok(Report::ok(body))
}

pub fn betti(spec: &GrassmannianSpec, format: Format) -> Result<Report> {
    let b = betti_direct(spec);
    let body = match format {
        Format::Json => json(&json!({
            "spec": spec,
            "betti": b.values().iter().map(u64::to_string).collect::<Vec<_>>(),
        }))?,
        Format::Csv => csv(
            &["codim", "rank"],
            b.values().iter().enumerate().map(|(c, r)| vec![c.to_string(), r.to_string()]),
        )?,
        Format::Text => format!("{b}\n"),
        Format::Dot => unsupported(format, "betti")?,
    };
    Ok(Report::ok(body))
}

pub fn gkm(spec: &GrassmannianSpec, format: Format) -> Result<Report> {
    let g = build_graph(spec);
    let v = g.vertices();
    let body = match format {
        Format::Json => json(&g.to_json())?,
        Format::Dot => g.to_dot(),
        Format::Csv => csv(
            &["upper", "lower", "weight", "kind"],
            g.edges().iter().map(|e| {
                vec![
                    v[e.upper].to_string(),
                    v[e.lower].to_string(),
                    e.weight.to_string(),
                    format!("{:?}", e.kind).to_lowercase(),
                ]
            }),
        )?,
        Format::Text => g
            .edges()
            .iter()
            .map(|e| format!("{:?} -- {:?}\t{}\n", v[e.upper], v[e.lower], e.weight))
            .collect(),
    };
    Ok(Report::ok(body))
}

pub fn chevalley(spec: &GrassmannianSpec, format: Format) -> Result<Report> {
    let table = chevalley_table(spec)?;
    let body = match format {
        Format::Json => json(&json!({"spec": spec, "coefficients": table}))?,
        Format::Csv => csv(
            &["source", "target", "value"],
            table
                .iter()
                .map(|c| vec![c.source.to_string(), c.target.to_string(), c.value.to_string()]),
        )?,
        Format::Dot => {
            let points = enumerate_admissible(spec);
            let index = |p| points.iter().position(|q| q == p).expect("fixed point");
            let mut out = format!("digraph \"chevalley_{}_{}_{}\" {{\n", spec.geometry(), spec.k(), spec.n());
            for (i, p) in points.iter().enumerate() {
                writeln!(out, "  v{i} [label=\"{p:?}\"];")?;
            }
            for c in &table {
                writeln!(out, "  v{} -> v{} [label=\"{}\"];", index(&c.source), index(&c.target), c.value)?;
            }
            out.push_str("}\n");
            out
        }
        Format::Text => table
            .iter()
            .map(|c| format!("{:?} -> {:?}\t{}\n", c.source, c.target, c.value))
            .collect(),
    };
    Ok(Report::ok(body))
}

pub fn classes(table: &ClassTable, format: Format) -> Result<Report> {
    let points = table.points();
    let body = match format {
        Format::Json => {
            let mut s = table.to_json_string();
            s.push('\n');
            s
        }
        Format::Csv => csv(
            &["class", "point", "value"],
            table.classes().iter().zip(points).flat_map(|(class, i)| {
                points
                    .iter()
                    .zip(class.values())
                    .filter(|(_, v)| !v.is_zero())
                    .map(move |(p, v)| vec![i.to_string(), p.to_string(), v.to_string()])
            }),
        )?,
        Format::Text => {
            let mut out = String::new();
            for (class, i) in table.classes().iter().zip(points) {
                writeln!(out, "f{i:?}")?;
                for (p, v) in points.iter().zip(class.values()) {
                    if !v.is_zero() {
                        writeln!(out, "  {p:?}\t{v}")?;
                    }
                }
            }
            out
        }
        Format::Dot => unsupported(format, "classes")?,
    };
    Ok(Report::ok(body))
}

pub fn verify(table: &ClassTable, format: Format) -> Result<Report> {
    let violations = verify_gkm(table);
    let lines: Vec<String> = violations
        .iter()
        .map(|v| format!("f{:?}: {:?} at {:?}: {}", v.class, v.kind, v.points, v.detail))
        .collect();
    let body = match format {
        Format::Json => json(&json!({
            "spec": table.spec(),
            "classes": table.classes().len().to_string(),
            "violations": violations,
        }))?,
        _ => {
            let verdict = if lines.is_empty() { "certified" } else { "FAILED" };
            let mut out = format!(
                "{} classes, {} violations: {verdict}\n",
                table.classes().len(),
                lines.len()
            );
            for l in &lines {
                writeln!(out, "{l}")?;
            }
            out
        }
    };
    Ok(Report { body, violations: lines })
}

pub fn degrees(spec: &GrassmannianSpec, format: Format) -> Result<Report> {
    let rows = degree_table(spec)?;
    let body = match format {
        Format::Json => json(&json!({"spec": spec, "degrees": rows}))?,
        Format::Csv => csv(
            &["subset", "codim", "degree"],
            rows.iter()
                .map(|r| vec![r.subset.to_string(), r.codim.to_string(), r.degree.to_string()]),
        )?,
        Format::Dot => i2gr_core::classical_chevalley(spec)?.to_dot(),
        Format::Text => rows
            .iter()
            .map(|r| format!("{:?}\t{}\t{}\n", r.subset, r.codim, r.degree))
            .collect(),
    };
    Ok(Report::ok(body))
}

fn det(m: &i2gr_core::PairingMatrix) -> String {
    m.determinant().map_or_else(|| "undefined (not square)".to_owned(), |d| d.to_string())
}

pub fn pairing(table: &ClassTable, format: Format) -> Result<Report> {
    let ring = structure_constants_classical(table)?;
    let matrices: Vec<_> = (0..=table.spec().dimension()).map(|c| pairing_matrix(&ring, c)).collect();
    let failures: Vec<String> = matrices
        .iter()
        .filter(|m| !m.is_unimodular())
        .map(|m| format!("codimension {} pairing has determinant {}", m.codim, det(m)))
        .collect();
    let body = match format {
        Format::Json => json(&json!({"spec": table.spec(), "matrices": matrices}))?,
        Format::Csv => csv(
            &["codim", "row", "col", "value"],
            matrices.iter().flat_map(|m| {
                m.rows.iter().zip(&m.entries).flat_map(move |(r, line)| {
                    m.cols
                        .iter()
                        .zip(line)
                        .map(move |(c, v)| vec![m.codim.to_string(), r.to_string(), c.to_string(), v.to_string()])
                })
            }),
        )?,
        _ => {
            let mut out = String::new();
            for m in &matrices {
                writeln!(out, "codim {}: det {}", m.codim, det(m))?;
                for (r, line) in m.rows.iter().zip(&m.entries) {
                    let cells: Vec<String> = line.iter().map(ToString::to_string).collect();
                    writeln!(out, "  {r:?}\t{}", cells.join("\t"))?;
                }
            }
            out
        }
    };
    Ok(Report { body, violations: failures })
}

pub fn ring_check(table: &ClassTable, format: Format) -> Result<Report> {
    let ring = structure_constants_classical(table)?;
    let report = ring_check_i2gr26(&ring);
    let mut failures: Vec<String> = report
        .ideal
        .iter()
        .chain(&report.substitutions)
        .filter(|r| !r.holds())
        .map(|r| format!("{} leaves {}", r.relation, serde_json::to_string(&r.residual).expect("serializes")))
        .collect();
    failures.extend(report.unreached.iter().map(|p| format!("σ{p:?} is not generated")));
    let body = match format {
        Format::Json => json(&report)?,
        _ => {
            let mut out = format!("rank {}\n", report.rank);
            for r in report.ideal.iter().chain(&report.substitutions) {
                writeln!(out, "{}\t{}", if r.holds() { "ok" } else { "FAIL" }, r.relation)?;
            }
            writeln!(out, "unreached: {}", report.unreached.len())?;
            out
        }
    };
    Ok(Report { body, violations: failures })
}

pub fn lefschetz(n: usize, format: Format) -> Result<Report> {
    let report = lefschetz_crosscheck(n)?;
    let mut failures: Vec<String> = report
        .class_mismatches
        .iter()
        .map(|p| format!("class f{p:?} differs"))
        .collect();
    failures.extend(
        report
            .constant_mismatches
            .iter()
            .map(|(i, j, l)| format!("constant {i:?} * {j:?} -> {l:?} differs")),
    );
    let body = match format {
        Format::Json => json(&report)?,
        _ => format!(
            "n = {n}: {} classes, {} structure constants compared, {} mismatches\n",
            report.classes_checked,
            report.constants_checked,
            failures.len()
        ),
    };
    Ok(Report { body, violations: failures })
}
