use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use wmfposet::gradings::{parse_vertices, periodic_grading, periodic_report, z_grading, z_report, GradingReport};
use wmfposet::iso::poset_isomorphism;
use wmfposet::report::{render_reports, Format as ReportFormat, VerificationReport};
use wmfposet::verify::{catalog_stats, reproduce_table1, verify_all, verify_theorem, Scope};
use wmfposet::weight_poset::{fmt_ratio, HasseStats};
use wmfposet::{CoveringPolynomial, Direction, Error, IrrepLabel, RootSystem, SimpleType, Weight, WeightPoset};

#[derive(Parser)]
#[command(name = "wmfposet", version, about = "Weight posets, root systems and gradings of simple Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots, Coxeter numbers and Hasse edges of Δ⁺.
    Roots { stype: String },
    /// Weight poset of an irreducible module: `poset C3 0,0,1` or `poset C3:0,0,1xA2:1,0`.
    Poset { stype: String, weight: Option<String> },
    /// Z-grading from a coloured usual diagram.
    Grading {
        stype: String,
        #[arg(long)]
        color: String,
    },
    /// Periodic grading from a coloured extended diagram; vertex 0 is α₀.
    Periodic {
        stype: String,
        #[arg(long)]
        color: String,
    },
    /// Poset isomorphism of two modules or grading pieces (`usual:E7:4`, `extended:E7:7`).
    Iso { a: String, b: String },
    /// The edge table of the wmf catalog.
    Table1 {
        #[arg(long, default_value_t = 12)]
        max_rank: usize,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 12)]
        max_rank: usize,
    },
}

enum Failure {
    Domain(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn csv_rows<I, R>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable") + "\n"
}

#[derive(Serialize)]
struct RootsOut {
    stype: SimpleType,
    coxeter_number: usize,
    dual_coxeter_number: usize,
    positive_roots: Vec<Vec<i64>>,
    edges: usize,
    edges_by_label: BTreeMap<usize, usize>,
    upper_covering: CoveringPolynomial,
}

fn roots(t: &str, fmt: Format) -> Result<String, Failure> {
    let rs = RootSystem::build(t.parse()?);
    let edges = rs.root_order_edges();
    let mut by_label = BTreeMap::new();
    let mut below = vec![0usize; rs.positive_roots().len()];
    for e in &edges {
        *by_label.entry(e.label).or_insert(0) += 1;
        below[e.upper] += 1;
    }
    let mut k = vec![0u64; 1 + below.iter().max().copied().unwrap_or(0)];
    for d in below {
        k[d] += 1;
    }
    let out = RootsOut {
        stype: rs.stype(),
        coxeter_number: rs.coxeter_number(),
        dual_coxeter_number: rs.dual_coxeter_number(),
        positive_roots: rs.positive_roots().iter().map(|r| r.0.clone()).collect(),
        edges: edges.len(),
        edges_by_label: by_label,
        upper_covering: CoveringPolynomial::new(k),
    };
    Ok(match fmt {
        Format::Json => json(&out),
        Format::Csv => csv_rows(
            &["root", "height"],
            rs.positive_roots().iter().map(|r| vec![Weight(r.0.clone()).to_string(), r.height().to_string()]),
        ),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{}: {} positive roots, h = {}, h* = {}", out.stype, out.positive_roots.len(), out.coxeter_number, out.dual_coxeter_number);
            let _ = writeln!(s, "edges: {} {:?}", out.edges, out.edges_by_label);
            let _ = writeln!(s, "K(t) = {}", out.upper_covering);
            for r in rs.positive_roots() {
                let _ = writeln!(s, "  {}  ht {}", Weight(r.0.clone()), r.height());
            }
            s
        }
    })
}

#[derive(Serialize)]
struct PosetOut {
    label: IrrepLabel,
    wmf: bool,
    weyl_dimension: u128,
    dim: usize,
    edges: usize,
    edges_by_label: BTreeMap<usize, usize>,
    ratio: String,
    upper_covering: CoveringPolynomial,
    lower_covering: CoveringPolynomial,
    poset: WeightPoset,
}

fn parse_label(stype: &str, weight: Option<&str>) -> Result<IrrepLabel, Failure> {
    match weight {
        Some(w) => {
            let t: SimpleType = stype.parse()?;
            let lambda = Weight::parse(w)?;
            if lambda.rank() != t.rank() {
                return Err(Error::WrongLength { token: w.to_string(), expected: t.rank(), got: lambda.rank() }.into());
            }
            Ok(IrrepLabel::simple(t, lambda))
        }
        None if stype.contains(':') => Ok(IrrepLabel::parse(stype)?),
        None => {
            // surface a rank or type error before complaining about the weight
            let _: SimpleType = stype.parse()?;
            Err(Failure::Domain(format!("missing weight for `{stype}`")))
        }
    }
}

fn poset(stype: &str, weight: Option<&str>, fmt: Format) -> Result<String, Failure> {
    let label = parse_label(stype, weight)?;
    let p = label.poset()?;
    let out = PosetOut {
        wmf: label.is_wmf()?,
        weyl_dimension: label.dimension()?,
        dim: p.len(),
        edges: p.edge_count(),
        edges_by_label: p.edge_count_by_label(),
        ratio: fmt_ratio(&p.ratio()),
        upper_covering: p.covering_polynomial(Direction::Upper),
        lower_covering: p.covering_polynomial(Direction::Lower),
        label,
        poset: p,
    };
    Ok(match fmt {
        Format::Json => json(&out),
        Format::Csv => {
            let mut below = vec![Vec::new(); out.poset.len()];
            for e in out.poset.edges() {
                below[e.upper].push(format!("{}:{}", e.label, out.poset.elements()[e.lower]));
            }
            csv_rows(
                &["weight", "covers"],
                out.poset.elements().iter().zip(below).map(|(w, c)| vec![w.to_string(), c.join(" ")]),
            )
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{}: dim {}, weights {}, wmf {}", out.label, out.weyl_dimension, out.dim, out.wmf);
            let _ = writeln!(s, "edges: {}, by label {:?}, #ℰ/dim = {}", out.edges, out.edges_by_label, out.ratio);
            let _ = writeln!(s, "K_upper(t) = {}", out.upper_covering);
            let _ = writeln!(s, "K_lower(t) = {}", out.lower_covering);
            s
        }
    })
}

fn render_grading(r: &GradingReport, fmt: Format) -> String {
    match fmt {
        Format::Json => json(r),
        Format::Csv => csv_rows(
            &["degree", "dim", "edges", "defect", "covering"],
            r.degrees.iter().map(|d| vec![d.degree.to_string(), d.dim.to_string(), d.edges.to_string(), d.defect.to_string(), d.covering.to_string()]),
        ),
        Format::Text => {
            let mut s = String::new();
            let g0: Vec<String> = r.g0.iter().map(|i| i.to_string()).collect();
            let _ = writeln!(
                s,
                "{} {} {:?}: order {}, 𝔤₀ ideals {}",
                r.source.kind,
                r.source.base,
                r.source.colored,
                r.order,
                if g0.is_empty() { "none".to_string() } else { g0.join(" × ") }
            );
            let _ = writeln!(s, "{:>6} {:>6} {:>6} {:>7}  K(t)", "degree", "dim", "edges", "defect");
            for d in &r.degrees {
                let _ = writeln!(s, "{:>6} {:>6} {:>6} {:>7}  {}", d.degree, d.dim, d.edges, d.defect, d.covering);
            }
            for i in &r.identities {
                let mark = if i.pass { "ok  " } else { "FAIL" };
                let _ = writeln!(s, "  {mark} {}: expected {}, got {}", i.name, i.expected, i.actual);
            }
            s
        }
    }
}

fn grading(stype: &str, color: &str, periodic: bool, fmt: Format) -> Result<(String, bool), Failure> {
    let rs = RootSystem::build(stype.parse()?);
    let colored = parse_vertices(color)?;
    let r = if periodic {
        periodic_report(&rs, &periodic_grading(&rs, &colored)?)
    } else {
        z_report(&rs, &z_grading(&rs, &colored)?)
    };
    Ok((render_grading(&r, fmt), r.pass()))
}

/// Module label, `usual:T:i,j` for Δ(1) or `extended:T:i,j` for Δ₁.
fn spec_poset(spec: &str) -> Result<WeightPoset, Failure> {
    let mut parts = spec.splitn(3, ':');
    let kind = parts.next().unwrap_or_default();
    if kind == "usual" || kind == "extended" {
        let (t, color) = match (parts.next(), parts.next()) {
            (Some(t), Some(c)) => (t, c),
            _ => return Err(Error::MalformedColoring(spec.to_string()).into()),
        };
        let rs = RootSystem::build(t.parse()?);
        let colored = parse_vertices(color)?;
        return Ok(if kind == "usual" {
            z_grading(&rs, &colored)?.piece(1).cloned().unwrap_or_else(|| WeightPoset::from_steps(vec![rs.stype()], vec![], &[]))
        } else {
            periodic_grading(&rs, &colored)?.g1
        });
    }
    Ok(IrrepLabel::parse(spec)?.poset()?)
}

#[derive(Serialize)]
struct IsoOut {
    a: String,
    b: String,
    isomorphic: bool,
    map: Option<Vec<usize>>,
}

fn iso(a: &str, b: &str, fmt: Format) -> Result<String, Failure> {
    let (p, q) = (spec_poset(a)?, spec_poset(b)?);
    let map = poset_isomorphism(&p, &q);
    let out = IsoOut { a: a.into(), b: b.into(), isomorphic: map.is_some(), map };
    Ok(match fmt {
        Format::Json => json(&out),
        Format::Csv => csv_rows(&["a", "b", "isomorphic"], [vec![out.a, out.b, out.isomorphic.to_string()]]),
        Format::Text => format!(
            "{} ({}, {}) {} {} ({}, {})\n",
            a,
            p.len(),
            p.edge_count(),
            if out.isomorphic { "≅" } else { "≇" },
            b,
            q.len(),
            q.edge_count()
        ),
    })
}

#[derive(Serialize)]
struct TableRow {
    row: String,
    label: IrrepLabel,
    dim: u128,
    edges: u128,
    printed_ratio: String,
    computed_dim: usize,
    computed_edges: usize,
    computed_ratio: String,
}

fn table1(max_rank: usize, fmt: Format) -> (String, bool) {
    let report = reproduce_table1(max_rank);
    let rows: Vec<TableRow> = catalog_stats(max_rank)
        .iter()
        .map(|(e, s): &(_, HasseStats)| TableRow {
            row: e.row.clone(),
            label: e.label.clone(),
            dim: e.dim,
            edges: e.edges,
            printed_ratio: fmt_ratio(&e.printed_ratio),
            computed_dim: s.elements,
            computed_edges: s.edges,
            computed_ratio: fmt_ratio(&num_ratio(s.edges, s.elements)),
        })
        .collect();
    let out = match fmt {
        Format::Json => json(&rows),
        Format::Csv => csv_rows(
            &["row", "label", "dim", "edges", "printed_ratio", "computed_dim", "computed_edges", "computed_ratio"],
            rows.iter().map(|r| {
                vec![
                    r.row.clone(),
                    r.label.to_string(),
                    r.dim.to_string(),
                    r.edges.to_string(),
                    r.printed_ratio.clone(),
                    r.computed_dim.to_string(),
                    r.computed_edges.to_string(),
                    r.computed_ratio.clone(),
                ]
            }),
        ),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{:<14} {:<22} {:>8} {:>9} {:>9}", "row", "label", "dim", "#ℰ", "#ℰ/dim");
            for r in &rows {
                let mut ratio = r.computed_ratio.clone();
                if r.printed_ratio != r.computed_ratio {
                    ratio = format!("{ratio} (printed {})", r.printed_ratio);
                }
                let _ = writeln!(s, "{:<14} {:<22} {:>8} {:>9} {:>9}", r.row, r.label.to_string(), r.computed_dim, r.computed_edges, ratio);
            }
            s
        }
    };
    (out, report.pass)
}

fn num_ratio(a: usize, b: usize) -> num_rational::Ratio<i64> {
    num_rational::Ratio::new(a as i64, b as i64)
}

fn verify(suite: &str, max_rank: usize, fmt: Format) -> Result<(String, bool), Failure> {
    let scope = Scope::new(max_rank);
    let reports: Vec<VerificationReport> = if suite == "all" { verify_all(&scope) } else { vec![verify_theorem(suite, &scope)?] };
    let rf = match fmt {
        Format::Text => ReportFormat::Text,
        Format::Json => ReportFormat::Json,
        Format::Csv => ReportFormat::Csv,
    };
    let mut out = render_reports(&reports, rf);
    if !out.ends_with('\n') {
        out.push('\n');
    }
    Ok((out, reports.iter().all(|r| r.pass)))
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    let fmt = cli.format;
    match cli.command {
        Command::Roots { stype } => roots(&stype, fmt).map(|s| (s, true)),
        Command::Poset { stype, weight } => poset(&stype, weight.as_deref(), fmt).map(|s| (s, true)),
        Command::Grading { stype, color } => grading(&stype, &color, false, fmt),
        Command::Periodic { stype, color } => grading(&stype, &color, true, fmt),
        Command::Iso { a, b } => iso(&a, &b, fmt).map(|s| (s, true)),
        Command::Table1 { max_rank } => Ok(table1(max_rank, fmt)),
        Command::Verify { suite, max_rank } => verify(&suite, max_rank, fmt),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    let result = run(cli).and_then(|(text, pass)| {
        match &output {
            Some(path) => std::fs::write(path, &text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?,
            None => {
                let mut out = std::io::stdout().lock();
                match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
                    Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => return Err(Failure::Domain(format!("stdout: {e}"))),
                    _ => {}
                }
            }
        }
        if pass {
            Ok(())
        } else {
            Err(Failure::Verification)
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
