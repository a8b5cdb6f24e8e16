//! One line per acceptance criterion. Exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use wmfposet::report::VerificationReport;
use wmfposet::verify::{classical_defect_formulas, verify_theorem, Scope};

const MAX_RANK: usize = 12;

struct Outcome {
    pass: bool,
    detail: String,
}

fn suite(id: &str) -> VerificationReport {
    verify_theorem(id, &Scope::new(MAX_RANK)).expect("known suite")
}

fn failures(r: &VerificationReport) -> Option<String> {
    let f: Vec<String> = r.failures().take(3).map(|c| format!("{}: expected {}, got {}", c.name, c.expected, c.actual)).collect();
    (!f.is_empty()).then(|| format!("{}: {}", r.suite, f.join("; ")))
}

fn all_pass(reports: &[VerificationReport]) -> Outcome {
    let bad: Vec<String> = reports.iter().filter_map(failures).collect();
    let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
    if bad.is_empty() {
        Outcome { pass: true, detail: format!("{checks} checks") }
    } else {
        Outcome { pass: false, detail: bad.join(" | ") }
    }
}

fn with_values(reports: &[VerificationReport], want: &[(&str, &str)]) -> Outcome {
    let mut out = all_pass(reports);
    for (name, value) in want {
        let got = reports.iter().find_map(|r| r.check(name));
        match got {
            Some(c) if c.actual == *value && c.pass => {}
            Some(c) => {
                out.pass = false;
                out.detail.push_str(&format!(" | {name}: got {}", c.actual));
            }
            None => {
                out.pass = false;
                out.detail.push_str(&format!(" | {name}: missing"));
            }
        }
    }
    out
}

fn table_rows() -> Outcome {
    let r = suite("table1");
    let want = [("C3:0,0,1", "(14, 17)"), ("E6:1,0,0,0,0,0", "(27, 36)"), ("E7:1,0,0,0,0,0,0", "(56, 84)"), ("G2:1,0", "(7, 6)")];
    let mut out = all_pass(std::slice::from_ref(&r));
    for (label, value) in want {
        let hit = r.checks.iter().find(|c| c.name.starts_with(&format!("{label} (")) && c.name.ends_with("(dim, #ℰ)"));
        if hit.map(|c| c.actual.as_str()) != Some(value) {
            out.pass = false;
            out.detail.push_str(&format!(" | {label}: {:?}", hit.map(|c| &c.actual)));
        }
    }
    out
}

fn defect_table() -> Outcome {
    let want = [
        ("E6: defects by vertex", "[12, 6, 3, 6, 12, 10]"),
        ("E7: defects by vertex", "[18, 8, 4, 2, 5, 16, 10]"),
        ("E8: defects by vertex", "[28, 9, 4, 2, 1, 3, 16, 7]"),
        ("F4: defects by vertex", "[8, 5, 6, 11]"),
        ("G2: defects by vertex", "[3, 5]"),
    ];
    let r = verify_theorem("z-defect-bounds", &Scope::new(2)).expect("known suite");
    with_values(&[r], &want)
}

fn f4_sums() -> Outcome {
    let r = verify_theorem("sum-identity", &Scope::new(2)).expect("known suite");
    let mut want = Vec::new();
    let names: Vec<String> = (1..=4).map(|i| format!("F4 {{{i}}}: Σ defects")).collect();
    for (n, v) in names.iter().zip(["16", "18", "15", "13"]) {
        want.push((n.as_str(), v));
    }
    let mut out = with_values(std::slice::from_ref(&r), &want);
    let above = r.checks.iter().filter(|c| c.name.starts_with("F4 {") && c.name.ends_with("> h")).count();
    if above != 4 {
        out.pass = false;
        out.detail.push_str(&format!(" | {above} of 4 '> h' checks"));
    }
    out
}

fn errata() -> Outcome {
    let table = suite("table1");
    let cov = suite("covering-closed-forms");
    let mut found = Vec::new();
    for f in table.flags.iter().chain(&cov.flags) {
        found.push(format!("{} → {}", f.printed, f.recomputed));
    }
    let g2 = table.flags.iter().any(|f| f.name.starts_with("G_2") && f.recomputed == "6/7");
    let w = cov.flags.iter().any(|f| f.printed == "(1258)" && f.recomputed == "(1358)");
    Outcome { pass: table.pass && cov.pass && g2 && w, detail: found.join(", ") }
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);
    let criteria: Vec<Criterion> = vec![
        ("table reproduction, rank <= 12", Box::new(table_rows)),
        ("exceptional defect table", Box::new(defect_table)),
        ("F4 1-standard sums", Box::new(f4_sums)),
        ("sum identity k·h", Box::new(|| all_pass(&[suite("sum-identity")]))),
        ("defect bounds and classical formulas", Box::new(|| all_pass(&[suite("z-defect-bounds"), classical_defect_formulas(MAX_RANK)]))),
        ("periodic gradings", Box::new(|| all_pass(&[suite("periodic-equality"), suite("periodic-bound")]))),
        ("covering polynomials", Box::new(|| all_pass(&[suite("covering-closed-forms"), suite("grading-coveri-degree")]))),
        ("poset isomorphisms", Box::new(|| all_pass(&[suite("poset-isoms")]))),
        (
            "property suites",
            Box::new(|| {
                let ids = ["upper-lower-coincide", "wmf-edge-uniformity", "weight-models", "edge-filter", "tensor-edges", "product-polynomial"];
                all_pass(&ids.map(suite))
            }),
        ),
        ("classification", Box::new(|| all_pass(&[suite("classification")]))),
        ("errata flagged", Box::new(errata)),
    ];
    let mut ok = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        ok &= o.pass;
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("{status} {:>2} {name} ({:.1}s): {}", i + 1, start.elapsed().as_secs_f64(), o.detail);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
