//! Command-line front end: scenario checking, the bundled verification
//! suite, pairing tables, one-off evaluations, cone queries, and catalog
//! dumps. Output is deterministic — identical inputs produce byte-identical
//! bytes on standard output; wall time is reported on standard error only.
//!
//! Exit codes: 0 when every assertion passes, 1 when at least one assertion
//! fails, 2 on usage, parse, or evaluation errors.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra_core::rat::{fmt_rat, Rat};
use crate::cone_lab::{dual_cone, is_extremal_generator, is_simplicial, membership, Cone,
    MembershipCertificate};
use crate::moduli_models::{build_space, SpaceModel};
use crate::scenario_dsl::{
    evaluate, parse, parse_cone_text, parse_expr_text, Evaluator, ScenarioReport,
};

/// Scenarios compiled into the binary, in lexicographic filename order.
const BUNDLED_SCENARIOS: &[(&str, &str)] = &[
    (
        "010_elliptic_surface.isl",
        include_str!("../scenarios/010_elliptic_surface.isl"),
    ),
    (
        "020_genus_two.isl",
        include_str!("../scenarios/020_genus_two.isl"),
    ),
    (
        "030_product_pullback.isl",
        include_str!("../scenarios/030_product_pullback.isl"),
    ),
    (
        "040_five_surfaces.isl",
        include_str!("../scenarios/040_five_surfaces.isl"),
    ),
    (
        "050_cone_geometry.isl",
        include_str!("../scenarios/050_cone_geometry.isl"),
    ),
    (
        "060_kummer_cover.isl",
        include_str!("../scenarios/060_kummer_cover.isl"),
    ),
    (
        "070_small_resolution.isl",
        include_str!("../scenarios/070_small_resolution.isl"),
    ),
    (
        "080_level_cover.isl",
        include_str!("../scenarios/080_level_cover.isl"),
    ),
];

/// Environment variable that overrides the bundled scenario set with a
/// directory of `.isl` files.
const SCENARIO_DIR_VAR: &str = "INTERSECT_LAB_SCENARIOS";

#[derive(Parser)]
#[command(
    name = "intersect-lab",
    version,
    about = "Exact-rational intersection-number toolkit"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    format: Format,
    /// Write the output to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and evaluate scenario files, reporting every assertion.
    Check {
        /// Scenario files to evaluate.
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Evaluate the bundled verification suite.
    Repro,
    /// Print a pairing table for a space.
    Table {
        /// Space name.
        space: String,
        /// Row class names, comma separated.
        #[arg(long, value_delimiter = ',')]
        rows: Vec<String>,
        /// Column class names, comma separated.
        #[arg(long, value_delimiter = ',')]
        cols: Vec<String>,
    },
    /// Evaluate one expression in a space and print its value.
    Eval {
        /// Space name.
        space: String,
        /// Expression in the scenario language.
        expr: String,
    },
    /// Cone computations over a pairing space.
    Cone {
        #[command(subcommand)]
        query: ConeQuery,
    },
    /// List the named classes of a space.
    Catalog {
        /// Space name.
        space: String,
    },
}

#[derive(Subcommand)]
enum ConeQuery {
    /// Print the rays of the dual cone.
    Dual {
        /// Cone expression, e.g. "cone(SA, SF, SD, C4, K31)".
        cone: String,
    },
    /// Decide membership of a class in a cone, with certificate.
    Member {
        /// Element expression.
        element: String,
        /// Cone expression.
        cone: String,
    },
    /// Decide whether a class spans an extremal ray of a cone.
    Extremal {
        /// Element expression.
        element: String,
        /// Cone expression.
        cone: String,
    },
    /// Decide whether a cone is simplicial.
    Simplicial {
        /// Cone expression.
        cone: String,
    },
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((output, all_pass)) => {
            if let Err(e) = write_output(cli.out.as_deref(), &output) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes())
                .and_then(|()| lock.flush())
                .map_err(|e| e.to_string())
        }
    }
}

/// Runs one command; returns the formatted output and whether every
/// assertion passed (non-report commands always pass).
fn run(cli: &Cli) -> Result<(String, bool), String> {
    match &cli.command {
        Command::Check { files } => {
            let started = Instant::now();
            let mut reports = Vec::new();
            for path in files {
                reports.push(check_file(path)?);
            }
            reports.sort_by(|a, b| a.scenario.cmp(&b.scenario));
            let all_pass = reports.iter().all(ScenarioReport::all_pass);
            let output = render_reports(&reports, cli.format)?;
            eprintln!("wall time: {} ms", started.elapsed().as_millis());
            Ok((output, all_pass))
        }
        Command::Repro => {
            let started = Instant::now();
            let reports = run_repro()?;
            let all_pass = reports.iter().all(ScenarioReport::all_pass);
            let output = render_reports(&reports, cli.format)?;
            eprintln!("wall time: {} ms", started.elapsed().as_millis());
            Ok((output, all_pass))
        }
        Command::Table { space, rows, cols } => {
            Ok((run_table(space, rows, cols, cli.format)?, true))
        }
        Command::Eval { space, expr } => Ok((run_eval(space, expr, cli.format)?, true)),
        Command::Cone { query } => Ok((run_cone(query, cli.format)?, true)),
        Command::Catalog { space } => Ok((run_catalog(space, cli.format)?, true)),
    }
}

// --------------------------------------------------------------- check/repro

fn check_file(path: &Path) -> Result<ScenarioReport, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let label = path.display().to_string();
    let ast = parse(&text).map_err(|e| format!("{label}: {e}"))?;
    evaluate(&label, &ast).map_err(|e| format!("{label}: {e}"))
}

fn run_repro() -> Result<Vec<ScenarioReport>, String> {
    if let Ok(dir) = std::env::var(SCENARIO_DIR_VAR) {
        let mut paths: Vec<PathBuf> = fs::read_dir(&dir)
            .map_err(|e| format!("{dir}: {e}"))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|ext| ext == "isl"))
            .collect();
        paths.sort();
        if paths.is_empty() {
            return Err(format!("{dir}: no .isl scenario files found"));
        }
        let mut reports = Vec::new();
        for path in &paths {
            let text =
                fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let label = path
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            let ast = parse(&text).map_err(|e| format!("{label}: {e}"))?;
            reports.push(evaluate(&label, &ast).map_err(|e| format!("{label}: {e}"))?);
        }
        return Ok(reports);
    }
    let mut reports = Vec::new();
    for (name, text) in BUNDLED_SCENARIOS {
        let ast = parse(text).map_err(|e| format!("{name}: {e}"))?;
        reports.push(evaluate(name, &ast).map_err(|e| format!("{name}: {e}"))?);
    }
    Ok(reports)
}

fn render_reports(reports: &[ScenarioReport], format: Format) -> Result<String, String> {
    match format {
        Format::Md => {
            let mut out = String::new();
            for report in reports {
                out.push_str(&format!("## {}\n\n", report.scenario));
                out.push_str("| line | assertion | expected | computed | pass |\n");
                out.push_str("| --- | --- | --- | --- | --- |\n");
                for a in &report.assertions {
                    out.push_str(&format!(
                        "| {}:{} | {} | {} | {} | {} |\n",
                        a.line,
                        a.col,
                        md_cell(&a.desc),
                        md_cell(&a.expected),
                        md_cell(&a.computed),
                        a.pass
                    ));
                }
                out.push_str(&format!(
                    "\n{} passed, {} failed\n\n",
                    report.summary.passed, report.summary.failed
                ));
            }
            if reports.len() > 1 {
                let passed: usize = reports.iter().map(|r| r.summary.passed).sum();
                let failed: usize = reports.iter().map(|r| r.summary.failed).sum();
                out.push_str(&format!(
                    "total: {} scenarios, {passed} passed, {failed} failed\n",
                    reports.len()
                ));
            }
            Ok(out)
        }
        Format::Csv => {
            let mut out = String::from("file,line,col,desc,expected,computed,pass\n");
            for report in reports {
                for a in &report.assertions {
                    out.push_str(&format!(
                        "{},{},{},{},{},{},{}\n",
                        csv_cell(&a.file),
                        a.line,
                        a.col,
                        csv_cell(&a.desc),
                        csv_cell(&a.expected),
                        csv_cell(&a.computed),
                        a.pass
                    ));
                }
            }
            Ok(out)
        }
        Format::Json => {
            let text = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0])
            } else {
                serde_json::to_string_pretty(&reports)
            }
            .map_err(|e| e.to_string())?;
            Ok(text + "\n")
        }
    }
}

// --------------------------------------------------------------------- table

fn run_table(
    space: &str,
    rows: &[String],
    cols: &[String],
    format: Format,
) -> Result<String, String> {
    let model = build_space(space).map_err(|e| e.to_string())?;
    let (row_names, col_names): (Vec<String>, Vec<String>) = match &model {
        SpaceModel::Pairing(p) => (
            if rows.is_empty() {
                p.row_names().iter().map(|s| s.to_string()).collect()
            } else {
                rows.to_vec()
            },
            if cols.is_empty() {
                p.col_names().iter().map(|s| s.to_string()).collect()
            } else {
                cols.to_vec()
            },
        ),
        _ => {
            if rows.is_empty() || cols.is_empty() {
                return Err(format!(
                    "space '{space}' needs explicit --rows and --cols class lists"
                ));
            }
            (rows.to_vec(), cols.to_vec())
        }
    };

    let mut cells: Vec<Vec<Rat>> = Vec::with_capacity(row_names.len());
    for r in &row_names {
        let mut line = Vec::with_capacity(col_names.len());
        for c in &col_names {
            line.push(table_entry(&model, space, r, c)?);
        }
        cells.push(line);
    }
    render_table(space, &row_names, &col_names, &cells, format)
}

/// One table entry: the pairing of a row class with a column class, with
/// the space-appropriate meaning of "pairing".
fn table_entry(model: &SpaceModel, space: &str, row: &str, col: &str) -> Result<Rat, String> {
    let unknown = |name: &str| format!("unknown class '{name}' in space '{space}'");
    match model {
        SpaceModel::Pairing(p) => p.pair(row, col).map_err(|e| e.to_string()),
        SpaceModel::Ring(s) => {
            let r = s.resolve(row).ok_or_else(|| unknown(row))?;
            let c = s.resolve(col).ok_or_else(|| unknown(col))?;
            s.algebra()
                .intersection_number(&[r, c])
                .map_err(|e| e.to_string())
        }
        SpaceModel::Trilinear(t) => {
            let r = t.resolve(row).ok_or_else(|| unknown(row))?;
            let c = t.resolve(col).ok_or_else(|| unknown(col))?;
            // A table entry contracts a quadratic against a divisor.
            if let Ok(value) = t.pair_quadratic(&r, &c, false) {
                return Ok(value);
            }
            t.pair_quadratic(&c, &r, false).map_err(|_| {
                format!(
                    "'{row}' and '{col}' do not pair to a number; use one quadratic and one divisor class"
                )
            })
        }
        SpaceModel::LevelParam(l) => {
            let r = l.resolve(row).ok_or_else(|| unknown(row))?;
            let c = l.resolve(col).ok_or_else(|| unknown(col))?;
            l.normalized_value(&r.mul(c)).map_err(|e| e.to_string())
        }
    }
}

fn render_table(
    space: &str,
    rows: &[String],
    cols: &[String],
    cells: &[Vec<Rat>],
    format: Format,
) -> Result<String, String> {
    match format {
        Format::Md => {
            let mut out = String::new();
            out.push_str(&format!("| {space} |"));
            for c in cols {
                out.push_str(&format!(" {} |", md_cell(c)));
            }
            out.push('\n');
            out.push_str("| --- |");
            for _ in cols {
                out.push_str(" --- |");
            }
            out.push('\n');
            for (r, line) in rows.iter().zip(cells) {
                out.push_str(&format!("| {} |", md_cell(r)));
                for v in line {
                    out.push_str(&format!(" {} |", fmt_rat(v)));
                }
                out.push('\n');
            }
            Ok(out)
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str(&csv_cell(space));
            for c in cols {
                out.push(',');
                out.push_str(&csv_cell(c));
            }
            out.push('\n');
            for (r, line) in rows.iter().zip(cells) {
                out.push_str(&csv_cell(r));
                for v in line {
                    out.push(',');
                    out.push_str(&csv_cell(&fmt_rat(v)));
                }
                out.push('\n');
            }
            Ok(out)
        }
        Format::Json => {
            let entries: Vec<Vec<String>> = cells
                .iter()
                .map(|line| line.iter().map(fmt_rat).collect())
                .collect();
            let value = serde_json::json!({
                "space": space,
                "rows": rows,
                "cols": cols,
                "entries": entries,
            });
            serde_json::to_string_pretty(&value)
                .map(|s| s + "\n")
                .map_err(|e| e.to_string())
        }
    }
}

// ---------------------------------------------------------------------- eval

fn run_eval(space: &str, expr_text: &str, format: Format) -> Result<String, String> {
    let expr = parse_expr_text(expr_text).map_err(|e| e.to_string())?;
    let evaluator = Evaluator::new();
    let value = evaluator
        .display_value(space, &expr)
        .map_err(|e| e.to_string())?;
    match format {
        Format::Md | Format::Csv => Ok(value + "\n"),
        Format::Json => {
            let v = serde_json::json!({
                "space": space,
                "expr": expr_text,
                "value": value,
            });
            serde_json::to_string_pretty(&v)
                .map(|s| s + "\n")
                .map_err(|e| e.to_string())
        }
    }
}

// ---------------------------------------------------------------------- cone

fn rays_as_strings(cone: &Cone) -> Vec<String> {
    cone.rays().iter().map(|r| r.to_string()).collect()
}

fn coords_line(coords: &[Rat]) -> String {
    let body: Vec<String> = coords.iter().map(fmt_rat).collect();
    format!("({})", body.join(", "))
}

fn run_cone(query: &ConeQuery, format: Format) -> Result<String, String> {
    let evaluator = Evaluator::new();
    let tagged = |text: &str| -> Result<crate::scenario_dsl::TaggedCone, String> {
        let cone_expr = parse_cone_text(text).map_err(|e| e.to_string())?;
        evaluator.eval_cone_expr(&cone_expr).map_err(|e| e.to_string())
    };
    let element_coords = |tagged: &crate::scenario_dsl::TaggedCone,
                          text: &str|
     -> Result<Vec<Rat>, String> {
        let expr = parse_expr_text(text).map_err(|e| e.to_string())?;
        evaluator.vector_in(tagged, &expr).map_err(|e| e.to_string())
    };

    match query {
        ConeQuery::Dual { cone } => {
            let t = tagged(cone)?;
            let dual = dual_cone(&t.cone);
            let rays = rays_as_strings(&dual);
            match format {
                Format::Md | Format::Csv => {
                    let mut out = String::new();
                    for r in &rays {
                        out.push_str(&format!("ray {r}\n"));
                    }
                    Ok(out)
                }
                Format::Json => {
                    let v = serde_json::json!({
                        "query": "dual",
                        "space": t.space,
                        "rays": rays,
                    });
                    serde_json::to_string_pretty(&v)
                        .map(|s| s + "\n")
                        .map_err(|e| e.to_string())
                }
            }
        }
        ConeQuery::Member { element, cone } => {
            let t = tagged(cone)?;
            let coords = element_coords(&t, element)?;
            let certificate = membership(&t.cone, &coords).map_err(|e| e.to_string())?;
            match format {
                Format::Md | Format::Csv => Ok(match &certificate {
                    MembershipCertificate::Inside { coefficients } => format!(
                        "member: true\ncoefficients: {}\n",
                        coords_line(coefficients)
                    ),
                    MembershipCertificate::Outside { separator } => {
                        format!("member: false\nseparator: {}\n", coords_line(separator))
                    }
                }),
                Format::Json => {
                    let v = match &certificate {
                        MembershipCertificate::Inside { coefficients } => serde_json::json!({
                            "query": "member",
                            "space": t.space,
                            "member": true,
                            "coefficients": coefficients.iter().map(fmt_rat).collect::<Vec<_>>(),
                        }),
                        MembershipCertificate::Outside { separator } => serde_json::json!({
                            "query": "member",
                            "space": t.space,
                            "member": false,
                            "separator": separator.iter().map(fmt_rat).collect::<Vec<_>>(),
                        }),
                    };
                    serde_json::to_string_pretty(&v)
                        .map(|s| s + "\n")
                        .map_err(|e| e.to_string())
                }
            }
        }
        ConeQuery::Extremal { element, cone } => {
            let t = tagged(cone)?;
            let coords = element_coords(&t, element)?;
            let ray = crate::cone_lab::canonicalize_ray(&coords).map_err(|e| e.to_string())?;
            let index = t.cone.rays().iter().position(|r| *r == ray);
            let (extremal, detail) = match index {
                Some(i) => {
                    let report =
                        is_extremal_generator(&t.cone, i).map_err(|e| e.to_string())?;
                    let detail = match &report.certificate {
                        MembershipCertificate::Inside { coefficients } => format!(
                            "decomposition over the remaining rays: {}",
                            coords_line(coefficients)
                        ),
                        MembershipCertificate::Outside { separator } => format!(
                            "separating functional against the remaining rays: {}",
                            coords_line(separator)
                        ),
                    };
                    (report.extremal, detail)
                }
                None => (
                    false,
                    "not parallel to any generator of the cone".to_owned(),
                ),
            };
            match format {
                Format::Md | Format::Csv => {
                    Ok(format!("extremal: {extremal}\n{detail}\n"))
                }
                Format::Json => {
                    let v = serde_json::json!({
                        "query": "extremal",
                        "space": t.space,
                        "extremal": extremal,
                        "detail": detail,
                    });
                    serde_json::to_string_pretty(&v)
                        .map(|s| s + "\n")
                        .map_err(|e| e.to_string())
                }
            }
        }
        ConeQuery::Simplicial { cone } => {
            let t = tagged(cone)?;
            let simplicial = is_simplicial(&t.cone);
            match format {
                Format::Md | Format::Csv => Ok(format!("simplicial: {simplicial}\n")),
                Format::Json => {
                    let v = serde_json::json!({
                        "query": "simplicial",
                        "space": t.space,
                        "simplicial": simplicial,
                    });
                    serde_json::to_string_pretty(&v)
                        .map(|s| s + "\n")
                        .map_err(|e| e.to_string())
                }
            }
        }
    }
}

// ------------------------------------------------------------------- catalog

fn run_catalog(space: &str, format: Format) -> Result<String, String> {
    let model = build_space(space).map_err(|e| e.to_string())?;
    let entries = model.catalog_entries();
    match format {
        Format::Md => {
            let mut out = String::new();
            out.push_str("| name | degree | expression | description |\n");
            out.push_str("| --- | --- | --- | --- |\n");
            for e in &entries {
                out.push_str(&format!(
                    "| {} | {} | {} | {} |\n",
                    md_cell(&e.name),
                    e.degree,
                    md_cell(&e.expression),
                    md_cell(&e.description)
                ));
            }
            Ok(out)
        }
        Format::Csv => {
            let mut out = String::from("name,degree,expression,description\n");
            for e in &entries {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    csv_cell(&e.name),
                    e.degree,
                    csv_cell(&e.expression),
                    csv_cell(&e.description)
                ));
            }
            Ok(out)
        }
        Format::Json => serde_json::to_string_pretty(&entries)
            .map(|s| s + "\n")
            .map_err(|e| e.to_string()),
    }
}

// ------------------------------------------------------------------- helpers

/// Escapes a markdown table cell (pipes would break the row).
fn md_cell(text: &str) -> String {
    text.replace('|', "\\|")
}

/// Quotes a CSV field when it contains a comma, quote, or newline.
fn csv_cell(text: &str) -> String {
    if text.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_owned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_scenarios_all_pass() {
        let reports = run_repro().expect("bundled scenarios evaluate");
        assert_eq!(reports.len(), BUNDLED_SCENARIOS.len());
        for report in &reports {
            assert!(
                report.all_pass(),
                "{} has failures: {:?}",
                report.scenario,
                report
                    .assertions
                    .iter()
                    .filter(|a| !a.pass)
                    .collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn eval_integrates_top_products() {
        let out = run_eval("A2", "D2^3", Format::Md).unwrap();
        assert_eq!(out, "-11/12\n");
    }

    #[test]
    fn eval_renders_vectors_and_levels() {
        let out = run_eval("A3_H4", "2*SA", Format::Md).unwrap();
        assert_eq!(out, "(1/576, 0, 0, 1/8)\n");
        let out = run_eval("SP_level", "L*D", Format::Md).unwrap();
        assert_eq!(out, "-1/96\n");
    }

    #[test]
    fn table_defaults_cover_the_pairing_space() {
        let out = run_table("A3_H4", &[], &[], Format::Csv).unwrap();
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("A3_H4,L2,LM,M2,B2,F1,F2"));
        let first = lines.next().unwrap();
        assert!(first.starts_with("SA,1/1152,0,0,1/16,"), "{first}");
    }

    #[test]
    fn table_on_ring_spaces_requires_explicit_classes() {
        let err = run_table("A2", &[], &[], Format::Md).unwrap_err();
        assert!(err.contains("--rows"), "{err}");
        let out = run_table(
            "A2",
            &["CA".to_owned(), "CF".to_owned()],
            &["L2".to_owned(), "D2".to_owned(), "M2".to_owned()],
            Format::Md,
        )
        .unwrap();
        assert!(out.contains("| CA | 1/24 | 1/2 | 0 |"), "{out}");
        assert!(out.contains("| CF | 0 | -1/2 | 1/2 |"), "{out}");
    }

    #[test]
    fn cone_queries_report_certificates() {
        let out = run_cone(
            &ConeQuery::Member {
                element: "12*C4 + 3*K31".to_owned(),
                cone: "cone(C4, K31)".to_owned(),
            },
            Format::Md,
        )
        .unwrap();
        assert!(out.starts_with("member: true\n"), "{out}");
        let out = run_cone(
            &ConeQuery::Member {
                element: "SA".to_owned(),
                cone: "cone(C4, K31)".to_owned(),
            },
            Format::Md,
        )
        .unwrap();
        assert!(out.starts_with("member: false\nseparator:"), "{out}");
        let out = run_cone(
            &ConeQuery::Simplicial {
                cone: "cone(SA, SF, SD, C4, K31)".to_owned(),
            },
            Format::Md,
        )
        .unwrap();
        assert_eq!(out, "simplicial: false\n");
    }

    #[test]
    fn dual_of_the_five_ray_cone_has_five_rays() {
        let out = run_cone(
            &ConeQuery::Dual {
                cone: "cone(SA, SF, SD, C4, K31)".to_owned(),
            },
            Format::Md,
        )
        .unwrap();
        assert_eq!(out.lines().count(), 5, "{out}");
        assert!(out.contains("(72, -12, 3, -1)"), "{out}");
    }

    #[test]
    fn csv_quoting_follows_rfc_4180() {
        assert_eq!(csv_cell("plain"), "plain");
        assert_eq!(csv_cell("a,b"), "\"a,b\"");
        assert_eq!(csv_cell("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn report_rendering_is_deterministic() {
        let reports = run_repro().unwrap();
        let a = render_reports(&reports, Format::Json).unwrap();
        let b = render_reports(&run_repro().unwrap(), Format::Json).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with('['), "multiple scenarios render as an array");
    }
}
