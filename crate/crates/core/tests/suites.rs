use wmfposet::report::{render_reports, Format};
use wmfposet::verify::{
    candidates, classical_defect_formulas, first_list, ratio_classification, verify_all, verify_theorem, Scope,
    SUITES,
};
use wmfposet::Error;

#[test]
fn every_suite_passes_at_small_rank() {
    let scope = Scope::new(3);
    let reports = verify_all(&scope);
    assert_eq!(reports.len(), SUITES.len());
    for r in &reports {
        let failed: Vec<_> = r.failures().map(|c| format!("{}: {} vs {}", c.name, c.expected, c.actual)).collect();
        assert!(r.pass, "{}: {:?}", r.suite, failed);
        assert!(!r.checks.is_empty(), "{} checked nothing", r.suite);
    }
    let again = verify_theorem("classification", &scope).unwrap();
    let first = reports.iter().find(|r| r.suite == "classification").unwrap();
    assert_eq!(render_reports(std::slice::from_ref(first), Format::Json), render_reports(&[again], Format::Json));
}

#[test]
fn unknown_suite() {
    assert!(matches!(verify_theorem("no-such-suite", &Scope::default()), Err(Error::UnknownSuite(_))));
}

#[test]
fn exceptional_defect_table() {
    let r = verify_theorem("z-defect-bounds", &Scope::new(2)).unwrap();
    assert!(r.pass);
    let e8 = r.check("E8: defects by vertex").unwrap();
    assert_eq!(e8.actual, "[28, 9, 4, 2, 1, 3, 16, 7]");
    assert_eq!(r.check("G2: defects by vertex").unwrap().actual, "[3, 5]");
}

#[test]
fn f4_sums() {
    let r = verify_theorem("sum-identity", &Scope::new(2)).unwrap();
    let sums: Vec<&str> = (1..=4)
        .map(|i| r.check(&format!("F4 {{{i}}}: Σ defects")).unwrap().actual.as_str())
        .collect();
    assert_eq!(sums, ["16", "18", "15", "13"]);
}

#[test]
fn classical_formulas_spot_values() {
    let r = classical_defect_formulas(6);
    assert!(r.pass);
    assert_eq!(r.check("C5 α5: Z").unwrap().actual, "10");
    assert_eq!(r.check("D6 α2: Z").unwrap().actual, "8");
    assert_eq!(r.check("A4 α3: Z").unwrap().actual, "5");
}

#[test]
fn errata_are_flagged_not_failed() {
    let cov = verify_theorem("covering-closed-forms", &Scope::new(3)).unwrap();
    assert!(cov.pass);
    assert_eq!(cov.flags.len(), 1);
    assert_eq!((cov.flags[0].printed.as_str(), cov.flags[0].recomputed.as_str()), ("(1258)", "(1358)"));

    let roots = verify_theorem("coveri-degree", &Scope::new(4)).unwrap();
    assert!(roots.pass);
    assert!(roots.flags.iter().all(|f| f.name.starts_with("F4")));
    assert_eq!(roots.flags.len(), 1);
}

#[test]
fn first_list_members() {
    let list = first_list(4);
    let names: Vec<String> = list.members.iter().map(|m| m.name()).collect();
    assert!(names.contains(&"(D4, α2)".to_string()));
    assert!(names.contains(&"(D\u{303}4, α2)".to_string()));
    // α_0 has mark 1 and is never a member on its own
    assert!(!names.iter().any(|n| n.contains("α0")));
    let a3 = list.members.iter().find(|m| m.name() == "(A3, α2)").unwrap();
    assert_eq!(a3.signature.vertices, 4);
}

#[test]
fn candidates_respect_caps() {
    let two = num_rational::Ratio::from_integer(2);
    for c in candidates(5) {
        assert!(c.ratio <= two);
        assert!(c.label.factors().len() <= 4);
        assert!(c.rank_hint + usize::from(c.ratio < two) <= 5, "{}", c.label);
    }
}

#[test]
fn ratio_classification_rows() {
    let r = ratio_classification(3, 4);
    assert!(r.pass, "{:?}", r.failures().collect::<Vec<_>>());
    assert_eq!(r.check("A3:1,0,0: R < 2").unwrap().actual, "true");
    assert!(r.check("A7:0,0,0,1,0,0,0 ≅ (E\u{303}7, α7)").unwrap().pass);
    assert!(r.check("A1:1xA1:1xA1:1xA1:1 ≅ (D\u{303}4, α2)").unwrap().pass);
}
