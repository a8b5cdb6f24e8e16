//! Suites on the root poset `Δ⁺` itself.

use crate::gradings::z_grading;
use crate::report::{Check, Flag, VerificationReport};
use crate::root_system::{cartan_determinant, Family, RootLength, RootSystem};
use crate::weight_poset::{Edge, HasseStats};

use super::{types, Scope};

fn label_counts(rs: &RootSystem) -> Vec<usize> {
    let mut counts = vec![0; rs.rank() + 1];
    for e in rs.root_order_edges() {
        counts[e.label] += 1;
    }
    counts
}

pub(super) fn edges_positive_roots(scope: &Scope) -> VerificationReport {
    let mut checks = Vec::new();
    for t in types(scope.max_rank) {
        let rs = RootSystem::build(t);
        let n = rs.rank();
        let h = rs.coxeter_number();
        let hd = rs.dual_coxeter_number();
        checks.push(Check::eq(&format!("{t}: #Δ⁺ = nh/2"), n * h / 2, rs.positive_roots().len()));
        checks.push(Check::eq(&format!("{t}: ht θ = h − 1"), h as i64 - 1, rs.highest_root().height()));
        checks.push(Check::eq(&format!("{t}: h = h* iff simply-laced"), t.is_simply_laced(), h == hd));
        let counts = label_counts(&rs);
        for (i, &c) in counts.iter().enumerate().skip(1) {
            if rs.length(i) == RootLength::Long {
                checks.push(Check::eq(&format!("{t}: edges labeled α{i} (long) = h* − 2"), hd - 2, c));
            }
        }
        let short: Vec<usize> = (1..=n).filter(|&i| rs.length(i) == RootLength::Short).map(|i| counts[i]).collect();
        if !short.is_empty() {
            let uniform = short.iter().all(|&c| c == short[0]);
            checks.push(Check::holds(&format!("{t}: short labels uniform"), "equal counts", format!("{short:?}"), uniform));
        }
        if t.is_simply_laced() {
            let total: usize = counts.iter().sum();
            checks.push(Check::eq(&format!("{t}: #edges = n(h − 2)"), n * (h - 2), total));
        }
    }
    VerificationReport::new(
        "edges-positive-roots",
        format!("classical rank <= {}, E6, E7, E8, F4, G2", scope.max_rank),
        checks,
        vec![],
    )
}

/// A non-simply-laced type whose triple covers are not orthogonal is
/// flagged rather than failed.
pub(super) fn coveri_degree(scope: &Scope) -> VerificationReport {
    let mut checks = Vec::new();
    let mut flags = Vec::new();
    for t in types(scope.max_rank) {
        let rs = RootSystem::build(t);
        let redges = rs.root_order_edges();
        let edges: Vec<Edge> = redges.iter().map(|e| Edge { upper: e.upper, lower: e.lower, label: e.label }).collect();
        let stats = HasseStats::of(rs.positive_roots().len(), &edges);
        let deg = stats.upper.degree();
        checks.push(Check::holds(&format!("{t}: deg K(Δ⁺) <= 3"), "<= 3", deg, deg <= 3));
        let three = matches!(t.family(), Family::D | Family::E | Family::F);
        checks.push(Check::eq(&format!("{t}: deg K(Δ⁺) = 3 iff D, E or F4"), three, deg == 3));

        let mut below: Vec<Vec<usize>> = vec![Vec::new(); rs.positive_roots().len()];
        for e in &redges {
            below[e.upper].push(e.label);
        }
        let orthogonal = |labels: &[usize]| {
            labels.iter().all(|&i| labels.iter().all(|&j| i == j || rs.cartan().get(i - 1, j - 1) == 0))
        };
        let triples: Vec<usize> = (0..below.len()).filter(|&u| below[u].len() >= 3).collect();
        let bad: Vec<usize> = triples.iter().copied().filter(|&u| !orthogonal(&below[u])).collect();
        if bad.is_empty() || t.is_simply_laced() {
            checks.push(Check::holds(
                &format!("{t}: labels below a triple cover are orthogonal"),
                "pairwise orthogonal",
                format!("{} triple covers, {} not orthogonal", triples.len(), bad.len()),
                bad.is_empty(),
            ));
        } else {
            for u in bad {
                let labels: Vec<String> = below[u].iter().map(|i| format!("α{i}")).collect();
                flags.push(Flag {
                    name: format!("{t}: labels below a triple cover"),
                    printed: "pairwise orthogonal".into(),
                    recomputed: format!("{:?} covers via {}, not orthogonal", rs.positive_roots()[u].0, labels.join(", ")),
                });
            }
        }
    }
    VerificationReport::new(
        "coveri-degree",
        format!("classical rank <= {}, E6, E7, E8, F4, G2", scope.max_rank),
        checks,
        flags,
    )
}

/// Defect of the 1-standard grading at `α_i` equals the Cartan determinant
/// at every `A_n` vertex and at the branch vertex of `D_n` and `E_n`.
pub(super) fn cartan_determinant_suite(scope: &Scope) -> VerificationReport {
    let mut checks = Vec::new();
    for t in types(scope.max_rank) {
        let rs = RootSystem::build(t);
        let n = t.rank();
        let det = cartan_determinant(t);
        let vertices: Vec<usize> = match t.family() {
            Family::A => (1..=n).collect(),
            Family::D => vec![n - 2],
            Family::E => vec![n - 3],
            _ => continue,
        };
        for i in vertices {
            let z = z_grading(&rs, &[i]).expect("valid vertex").defect(1);
            checks.push(Check::eq(&format!("{t} α{i}: Z = det Cartan"), det, z));
        }
    }
    VerificationReport::new(
        "cartan-determinant",
        format!("A_n vertices and D_n, E_n branch vertices, rank <= {}", scope.max_rank),
        checks,
        vec![],
    )
}
