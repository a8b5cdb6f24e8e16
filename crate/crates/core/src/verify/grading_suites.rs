//! Suites on Z-gradings and periodic gradings.

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use crate::gradings::{
    ideal_product, minimal_nilpotent_grading, periodic_grading, periodic_report, z_grading,
    z_report, GradingReport, ZGrading,
};
use crate::report::{Check, VerificationReport};
use crate::root_system::{Family, RootSystem, SimpleType};
use crate::weight_poset::Direction;

use super::{cached, types, Cache, Scope};

/// Rank cap for suites over all colorings of simply-laced types.
const ALL_COLORINGS_CAP: usize = 6;
/// Rank cap for the defect bounds and the periodic scans.
const BOUNDS_CAP: usize = 8;

pub(super) struct ZEntry {
    pub grading: ZGrading,
    pub report: GradingReport,
}

fn nonempty_subsets(vertices: &[usize]) -> Vec<Vec<usize>> {
    (1u32..1 << vertices.len())
        .map(|mask| {
            vertices
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

fn z_entries(types: &[SimpleType], colorings: impl Fn(usize) -> Vec<Vec<usize>>) -> Vec<ZEntry> {
    let mut out = Vec::new();
    for &t in types {
        let rs = RootSystem::build(t);
        for c in colorings(t.rank()) {
            let grading = z_grading(&rs, &c).expect("valid coloring");
            let report = z_report(&rs, &grading);
            out.push(ZEntry { grading, report });
        }
    }
    out
}

/// Every 1-standard grading of every type in scope.
fn one_standard(max_rank: usize) -> Arc<Vec<ZEntry>> {
    static CACHE: Cache<Vec<ZEntry>> = OnceLock::new();
    cached(&CACHE, max_rank, || z_entries(&types(max_rank), |n| (1..=n).map(|i| vec![i]).collect()))
}

/// Every coloring with at least two vertices of simply-laced types of small rank.
fn multi_colorings(max_rank: usize) -> Arc<Vec<ZEntry>> {
    static CACHE: Cache<Vec<ZEntry>> = OnceLock::new();
    let cap = max_rank.min(ALL_COLORINGS_CAP);
    cached(&CACHE, cap, || {
        let ts: Vec<SimpleType> = types(cap)
            .into_iter()
            .filter(|t| t.is_simply_laced() && t.rank() <= cap)
            .collect();
        z_entries(&ts, |n| {
            let v: Vec<usize> = (1..=n).collect();
            nonempty_subsets(&v).into_iter().filter(|c| c.len() > 1).collect()
        })
    })
}

/// All Z-gradings in scope: 1-standard ones and multi-vertex colorings.
fn all_z(max_rank: usize) -> Vec<Arc<Vec<ZEntry>>> {
    vec![one_standard(max_rank), multi_colorings(max_rank)]
}

fn z_scope(scope: &Scope) -> String {
    format!(
        "1-standard gradings with classical rank <= {} and exceptional types; all colorings of simply-laced types of rank <= {}",
        scope.max_rank,
        scope.capped(ALL_COLORINGS_CAP)
    )
}

fn name(e: &ZEntry) -> String {
    let c: Vec<String> = e.grading.source.colored.iter().map(|v| v.to_string()).collect();
    format!("{} {{{}}}", e.grading.source.base, c.join(","))
}

/// Checks of `z_report` whose names satisfy `keep`, prefixed with the grading.
fn report_checks(entries: &[Arc<Vec<ZEntry>>], keep: impl Fn(&str) -> bool) -> Vec<Check> {
    let mut checks = Vec::new();
    for e in entries.iter().flat_map(|v| v.iter()) {
        for id in e.report.identities.iter().filter(|i| keep(&i.name)) {
            checks.push(Check { name: format!("{}: {}", name(e), id.name), ..id.clone() });
        }
    }
    checks
}

pub(super) fn sum_identity(scope: &Scope) -> VerificationReport {
    let mut checks = Vec::new();
    for e in all_z(scope.max_rank).iter().flat_map(|v| v.iter()) {
        let t = e.grading.source.base;
        if !t.is_simply_laced() {
            continue;
        }
        let g = &e.grading;
        let h = RootSystem::build(t).coxeter_number() as i64;
        let k = g.k() as i64;
        checks.push(Check::eq(&format!("{}: Σ defects = k·h", name(e)), k * h, g.grading_sum()));
        let levi: i64 = g
            .ideals
            .iter()
            .map(|i| {
                let hj = RootSystem::build(i.stype).coxeter_number() as i64;
                i.stype.rank() as i64 * (h - hj)
            })
            .sum();
        let dims: i64 = g.pieces.values().map(|p| p.len() as i64).sum();
        let edges: i64 = g.pieces.values().map(|p| p.edge_count() as i64).sum();
        checks.push(Check::eq(&format!("{}: 2 Σ dim 𝔤(i) = kh + Σ n_j(h − h_j)", name(e)), k * h + levi, 2 * dims));
        checks.push(Check::eq(&format!("{}: Σ #ℰ(i) = Σ n_j(h − h_j)", name(e)), levi, edges));
    }
    let f4 = RootSystem::build("F4".parse().unwrap());
    let h = f4.coxeter_number() as i64;
    for (i, printed) in [(1, 16), (2, 18), (3, 15), (4, 13)] {
        let s = z_grading(&f4, &[i]).expect("valid vertex").grading_sum();
        checks.push(Check::eq(&format!("F4 {{{i}}}: Σ defects"), printed, s));
        checks.push(Check::holds(&format!("F4 {{{i}}}: Σ defects > h"), format!("> {h}"), s, s > h));
    }
    VerificationReport::new("sum-identity", z_scope(scope), checks, vec![])
}

pub(super) fn short_defect(scope: &Scope) -> VerificationReport {
    let mut checks = Vec::new();
    for e in one_standard(scope.max_rank).iter().filter(|e| e.grading.max_degree == 1) {
        let h = RootSystem::build(e.grading.source.base).coxeter_number() as i64;
        checks.push(Check::eq(&format!("{}: defect = h", name(e)), h, e.grading.defect(1)));
    }
    VerificationReport::new(
        "short-defect",
        format!("short 1-standard gradings, classical rank <= {} and exceptional types", scope.max_rank),
        checks,
        vec![],
    )
}

/// 1-standard defects of the exceptional types, by vertex.
const EXCEPTIONAL_DEFECTS: &[(&str, &[i64])] = &[
    ("E6", &[12, 6, 3, 6, 12, 10]),
    ("E7", &[18, 8, 4, 2, 5, 16, 10]),
    ("E8", &[28, 9, 4, 2, 1, 3, 16, 7]),
    ("F4", &[8, 5, 6, 11]),
    ("G2", &[3, 5]),
];

pub(super) fn z_defect_bounds(scope: &Scope) -> VerificationReport {
    let cap = scope.capped(BOUNDS_CAP);
    let mut checks = Vec::new();
    for e in one_standard(scope.max_rank).iter() {
        if e.grading.source.base.rank() > cap && !e.grading.source.base.is_exceptional() {
            continue;
        }
        for id in e.report.identities.iter().filter(|i| i.name == "defect bound") {
            checks.push(Check { name: format!("{}: {}", name(e), id.name), ..id.clone() });
        }
    }
    for (t, printed) in EXCEPTIONAL_DEFECTS {
        let rs = RootSystem::build(t.parse().unwrap());
        let got: Vec<i64> = (1..=rs.rank()).map(|i| z_grading(&rs, &[i]).expect("valid vertex").defect(1)).collect();
        checks.push(Check::eq(&format!("{t}: defects by vertex"), format!("{printed:?}"), format!("{got:?}")));
    }
    VerificationReport::new(
        "z-defect-bounds",
        format!("1-standard gradings, classical rank <= {cap} and exceptional types"),
        checks,
        vec![],
    )
}

/// The classical 1-standard defects against their closed forms.
pub fn classical_defect_formulas(n_max: usize) -> VerificationReport {
    let mut checks = Vec::new();
    for t in SimpleType::all_up_to(n_max).into_iter().filter(|t| !t.is_exceptional()) {
        let n = t.rank() as i64;
        let rs = RootSystem::build(t);
        for k in 1..=n {
            let expected = match t.family() {
                Family::A => n + 1,
                Family::B => 2 * n - k + 1,
                Family::C if k < n => 2 * n - k,
                Family::C => 2 * n,
                Family::D if k <= n - 2 => 2 * n - 2 * k,
                Family::D => 2 * n - 2,
                _ => unreachable!(),
            };
            let z = z_grading(&rs, &[k as usize]).expect("valid vertex").defect(1);
            checks.push(Check::eq(&format!("{t} α{k}: Z"), expected, z));
        }
    }
    VerificationReport::new("classical-defects", format!("classical types of rank <= {n_max}"), checks, vec![])
}

pub(super) fn minimal_nilpotent(scope: &Scope) -> VerificationReport {
    let mut checks = Vec::new();
    for t in types(scope.max_rank) {
        let rs = RootSystem::build(t);
        let g = minimal_nilpotent_grading(&rs);
        let theta = rs.highest_root();
        let hd = rs.dual_coxeter_number() as i64;
        let top: Vec<_> = g.piece_roots.get(&2).cloned().unwrap_or_default();
        checks.push(Check::eq(&format!("{t}: Δ(2) = {{θ}}"), true, top.len() == 1 && &top[0] == theta));
        let by_pairing = rs.positive_roots().iter().all(|r| {
            let d = rs.theta_pairing(r);
            let found = if d == 0 { g.zero_part.contains(r) } else { g.piece_roots.get(&(d as usize)).is_some_and(|v| v.contains(r)) };
            found
        });
        checks.push(Check::eq(&format!("{t}: deg γ = ⟨γ, θ^∨⟩"), true, by_pairing));
        let positive = rs.positive_roots().iter().filter(|r| rs.inner(r, theta) > 0).count() as i64;
        checks.push(Check::eq(&format!("{t}: #{{γ : (γ, θ) > 0}} = 2h* − 3"), 2 * hd - 3, positive));
        if t.is_simply_laced() && t.rank() > 1 {
            let h = rs.coxeter_number() as i64;
            let k = g.k() as i64;
            checks.push(Check::eq(&format!("{t}: dim 𝔤(1) = 2h − 4"), 2 * h - 4, g.dim(1) as i64));
            checks.push(Check::eq(&format!("{t}: #ℰ(1) = (4 − k)h − 6"), (4 - k) * h - 6, g.edges(1) as i64));
        }
    }
    let e8 = minimal_nilpotent_grading(&RootSystem::build("E8".parse().unwrap()));
    checks.push(Check::eq("E8: (dim 𝔤(1), #ℰ(1))", "(56, 84)".to_string(), format!("({}, {})", e8.dim(1), e8.edges(1))));
    let d4 = minimal_nilpotent_grading(&RootSystem::build("D4".parse().unwrap()));
    checks.push(Check::eq("D4: (dim 𝔤(1), #ℰ(1))", "(8, 12)".to_string(), format!("({}, {})", d4.dim(1), d4.edges(1))));
    VerificationReport::new(
        "minimal-nilpotent",
        format!("classical rank <= {}, E6, E7, E8, F4, G2", scope.max_rank),
        checks,
        vec![],
    )
}

pub(super) fn dimension_accounting(scope: &Scope) -> VerificationReport {
    let keep = ["dimension accounting", "θ in top degree", "components of Δ(1)", "minimal elements of Δ(1) are the coloured roots", "max degree = [θ:α_i]"];
    let checks = report_checks(&all_z(scope.max_rank), |n| keep.contains(&n));
    VerificationReport::new("dimension-accounting", z_scope(scope), checks, vec![])
}

/// Hasse edges of `roots` under the order `β ≤ γ` iff `γ − β` is a
/// non-negative combination of uncoloured simple roots.
fn intrinsic_edges(roots: &[Vec<i64>], colored: &[usize]) -> BTreeSet<(usize, usize)> {
    let below = |g: &[i64], b: &[i64]| {
        g != b && g.iter().zip(b).enumerate().all(|(i, (x, y))| x >= y && (x == y || !colored.contains(&(i + 1))))
    };
    let mut out = BTreeSet::new();
    for (u, g) in roots.iter().enumerate() {
        for (v, b) in roots.iter().enumerate() {
            if below(g, b) && !roots.iter().any(|d| below(g, d) && below(d, b)) {
                out.insert((u, v));
            }
        }
    }
    out
}

pub(super) fn edge_filter(scope: &Scope) -> VerificationReport {
    let mut checks = Vec::new();
    let mut systems: Vec<(SimpleType, RootSystem)> = Vec::new();
    for e in all_z(scope.max_rank).iter().flat_map(|v| v.iter()) {
        let t = e.grading.source.base;
        if systems.last().is_none_or(|(s, _)| *s != t) {
            systems.push((t, RootSystem::build(t)));
        }
        let rs = &systems.last().unwrap().1;
        let colored = &e.grading.source.colored;
        let filtered: BTreeSet<(Vec<i64>, Vec<i64>)> = rs
            .root_order_edges()
            .into_iter()
            .filter(|x| !colored.contains(&x.label))
            .map(|x| (rs.positive_roots()[x.upper].0.clone(), rs.positive_roots()[x.lower].0.clone()))
            .collect();
        for (&d, p) in &e.grading.pieces {
            let roots: Vec<Vec<i64>> = p
                .elements()
                .iter()
                .map(|w| rs.weight_to_root(w).expect("root").0)
                .collect();
            let stepped: BTreeSet<(usize, usize)> = p.edges().iter().map(|x| (x.upper, x.lower)).collect();
            let intrinsic = intrinsic_edges(&roots, colored);
            let restricted: BTreeSet<(usize, usize)> = (0..roots.len())
                .flat_map(|u| (0..roots.len()).map(move |v| (u, v)))
                .filter(|(u, v)| filtered.contains(&(roots[*u].clone(), roots[*v].clone())))
                .collect();
            let ok = stepped == intrinsic && intrinsic == restricted;
            checks.push(Check::holds(
                &format!("{}: Δ({d}) edges intrinsic = filtered", name(e)),
                format!("{} edges", restricted.len()),
                format!("{} intrinsic, {} stepped", intrinsic.len(), stepped.len()),
                ok,
            ));
        }
    }
    VerificationReport::new("edge-filter", z_scope(scope), checks, vec![])
}

pub(super) fn grading_coveri_degree(scope: &Scope) -> VerificationReport {
    let mut checks = report_checks(&all_z(scope.max_rank), |n| n.starts_with("deg K(Δ(") || n == "defect = 2a0 + a1 - a3");
    for e in all_z(scope.max_rank).iter().flat_map(|v| v.iter()) {
        if let Some(p) = e.grading.piece(1) {
            let k = p.covering_polynomial(Direction::Upper);
            if e.grading.weights.iter().all(|&w| w <= 1) {
                checks.push(Check::eq(&format!("{}: a0 = k", name(e)), e.grading.k() as u64, k.coeff(0)));
            }
            if e.grading.k() == 1 {
                checks.push(Check::eq(
                    &format!("{}: defect = 2 + a1 − a3", name(e)),
                    2 + k.coeff(1) as i64 - k.coeff(3) as i64,
                    e.grading.defect(1),
                ));
            }
        }
    }
    VerificationReport::new("grading-coveri-degree", z_scope(scope), checks, vec![])
}

/// A periodic grading summarized for the scans.
struct PEntry {
    name: String,
    single: bool,
    simply_laced: bool,
    report: GradingReport,
}

fn periodic_scan(max_rank: usize) -> Arc<Vec<PEntry>> {
    static CACHE: Cache<Vec<PEntry>> = OnceLock::new();
    let cap = max_rank.min(BOUNDS_CAP);
    cached(&CACHE, cap, || {
        let mut out = Vec::new();
        for t in types(cap) {
            let rs = RootSystem::build(t);
            let v: Vec<usize> = (0..=rs.rank()).collect();
            for c in nonempty_subsets(&v) {
                let Ok(pg) = periodic_grading(&rs, &c) else { continue };
                let vs: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                out.push(PEntry {
                    name: format!("{t}~ {{{}}}", vs.join(",")),
                    single: c.len() == 1,
                    simply_laced: t.is_simply_laced(),
                    report: periodic_report(&rs, &pg),
                });
            }
        }
        out
    })
}

fn periodic_scope(scope: &Scope) -> String {
    format!(
        "extended-diagram colorings with m >= 2, classical rank <= {} and exceptional types",
        scope.capped(BOUNDS_CAP)
    )
}

fn parse_type(s: &str) -> RootSystem {
    RootSystem::build(s.parse().expect("valid type"))
}

fn periodic_spot(checks: &mut Vec<Check>, t: &str, v: usize, order: usize, g0: &str, dim: usize, edges: usize) {
    let pg = periodic_grading(&parse_type(t), &[v]).expect("valid coloring");
    let got = format!("m = {}, 𝔤₀ = {}, ({}, {})", pg.order, ideal_product(&pg.g0_ideals), pg.g1.len(), pg.g1.edge_count());
    let expected = format!("m = {order}, 𝔤₀ = {g0}, ({dim}, {edges})");
    checks.push(Check::eq(&format!("{t}~ {{{v}}}: order, 𝔤₀, (dim 𝔤₁, #ℰ₁)"), expected, got));
}

/// `D_k` with the low-rank coincidences `D_2 = A_1×A_1`, `D_3 = A_3`.
fn d_factor(k: usize) -> Vec<String> {
    match k {
        2 => vec!["A1".into(), "A1".into()],
        3 => vec!["A3".into()],
        _ => vec![format!("D{k}")],
    }
}

pub(super) fn periodic_equality(scope: &Scope) -> VerificationReport {
    let mut checks = Vec::new();
    for e in periodic_scan(scope.max_rank).iter().filter(|e| e.single && e.simply_laced) {
        let z = e.report.degrees[0].defect;
        checks.push(Check::eq(&format!("{}: 2·dim 𝔤₁ = #ℰ₁", e.name), 0, z));
        if let Some(id) = e.report.identities.iter().find(|i| i.name.starts_with("𝔤₀ semisimple")) {
            checks.push(Check { name: format!("{}: {}", e.name, id.name), ..id.clone() });
        }
    }
    periodic_spot(&mut checks, "E8", 4, 5, "A4×A4", 50, 100);
    for n in 4..=scope.capped(BOUNDS_CAP) {
        for k in 2..=n - 2 {
            let mut g0 = d_factor(k);
            g0.extend(d_factor(n - k));
            g0.sort();
            let t = format!("D{n}");
            periodic_spot(&mut checks, &t, k, 2, &g0.join("×"), 4 * k * (n - k), 8 * k * (n - k));
        }
    }
    VerificationReport::new(
        "periodic-equality",
        format!("single-vertex colorings of simply-laced extended diagrams, rank <= {}", scope.capped(BOUNDS_CAP)),
        checks,
        vec![],
    )
}

pub(super) fn periodic_bound(scope: &Scope) -> VerificationReport {
    let keep = ["2·dim 𝔤₁ >= #ℰ₁", "equality iff simply-laced with one coloured vertex", "1 + Σ a_i = h", "roots partitioned by residue", "Δ₀ matches the ideals of 𝔤₀"];
    let mut checks = Vec::new();
    for e in periodic_scan(scope.max_rank).iter() {
        for id in e.report.identities.iter().filter(|i| keep.contains(&i.name.as_str())) {
            checks.push(Check { name: format!("{}: {}", e.name, id.name), ..id.clone() });
        }
    }
    let cap = scope.capped(BOUNDS_CAP);
    for n in 2..=cap {
        for k in 1..n {
            let pg = periodic_grading(&parse_type(&format!("C{n}")), &[k]).expect("valid coloring");
            checks.push(Check::eq(&format!("C{n}~ {{{k}}}: defect = 2n"), 2 * n as i64, pg.defect()));
        }
        for k in 2..=n {
            let pg = periodic_grading(&parse_type(&format!("B{n}")), &[k]).expect("valid coloring");
            checks.push(Check::eq(&format!("B{n}~ {{{k}}}: defect = 2k"), 2 * k as i64, pg.defect()));
        }
    }
    periodic_spot(&mut checks, "F4", 3, 3, "A2×A2", 18, 30);
    VerificationReport::new("periodic-bound", periodic_scope(scope), checks, vec![])
}
