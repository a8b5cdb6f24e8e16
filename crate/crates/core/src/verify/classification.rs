//! Which weight posets with `R ≤ 2` occur as `Δ(1)` or `Δ₁`.

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::Serialize;

use crate::gradings::{periodic_grading, z_grading, ColoredDiagram, DiagramKind, ExtendedDiagram};
use crate::iso::{are_isomorphic, find_isomorphism, Digraph, Signature};
use crate::report::{Check, VerificationReport};
use crate::root_system::{RootSystem, SimpleType, Weight};
use crate::weight_poset::{fmt_ratio, ratio_sum, IrrepLabel, WeightPoset};

use super::{catalog_stats, Scope};
use crate::catalog::howe_catalog;

/// Rank cap of the first list and of the candidate products.
pub const CLASSIFICATION_RANK: usize = 8;
/// Largest dimension of a candidate product.
pub const CANDIDATE_DIM_CAP: u128 = 4096;
/// Largest number of tensor factors of a candidate.
pub const MAX_FACTORS: usize = 4;

/// One `Δ(1)` or `Δ₁` of a single-vertex coloring.
#[derive(Clone, Debug)]
pub struct FirstListMember {
    pub source: ColoredDiagram,
    pub ratio: Ratio<i64>,
    pub graph: Digraph,
    pub signature: Signature,
}

impl FirstListMember {
    fn new(source: ColoredDiagram, poset: &WeightPoset) -> FirstListMember {
        let graph = Digraph::from(poset);
        FirstListMember { source, ratio: poset.ratio(), signature: graph.signature(), graph }
    }

    /// `(E7, α4)` or `(Ẽ7, α7)`.
    pub fn name(&self) -> String {
        let t = self.source.base;
        let v = self.source.colored[0];
        match self.source.kind {
            DiagramKind::Usual => format!("({t}, α{v})"),
            DiagramKind::Extended => {
                let s = t.to_string();
                format!("({}\u{303}{}, α{v})", &s[..1], &s[1..])
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct FirstList {
    pub max_rank: usize,
    pub members: Vec<FirstListMember>,
}

impl FirstList {
    /// Members whose Hasse diagram is isomorphic to that of `p`.
    pub fn matches(&self, p: &WeightPoset) -> Vec<&FirstListMember> {
        let g = Digraph::from(p);
        let sig = g.signature();
        self.members
            .iter()
            .filter(|m| m.signature == sig && find_isomorphism(&g, &m.graph).is_some())
            .collect()
    }
}

/// `Δ(1)` for every vertex and `Δ₁` for every vertex of mark at least 2,
/// over all types of rank at most `max_rank`.
pub fn first_list(max_rank: usize) -> FirstList {
    let mut members = Vec::new();
    for t in SimpleType::all_up_to(max_rank) {
        let rs = RootSystem::build(t);
        for v in 1..=rs.rank() {
            let zg = z_grading(&rs, &[v]).expect("valid vertex");
            let p = zg.piece(1).expect("coloured root has degree 1");
            members.push(FirstListMember::new(zg.source.clone(), p));
        }
        let marks = ExtendedDiagram::new(&rs).all_marks();
        for (v, &mark) in marks.iter().enumerate() {
            if mark >= 2 {
                let pg = periodic_grading(&rs, &[v]).expect("order at least 2");
                members.push(FirstListMember::new(pg.source.clone(), &pg.g1));
            }
        }
    }
    FirstList { max_rank, members }
}

/// A product of catalog posets considered by the classification.
#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub label: IrrepLabel,
    pub ratio: Ratio<i64>,
    pub rank_hint: usize,
}

/// Products of at most [`MAX_FACTORS`] simply-laced catalog posets with
/// `R ≤ 2`, dimension at most [`CANDIDATE_DIM_CAP`], and rank hints summing
/// to at most `max_rank − [R < 2]`.
pub fn candidates(max_rank: usize) -> Vec<Candidate> {
    let pool: Vec<(IrrepLabel, u128, Ratio<i64>, usize)> = howe_catalog(max_rank)
        .into_iter()
        .filter(|e| e.stype().is_simply_laced() && e.rank_hint <= max_rank)
        .map(|e| {
            let s = e.stats();
            (e.label, e.dim, Ratio::new(s.edges as i64, s.elements as i64), e.rank_hint)
        })
        .collect();
    let two = Ratio::from_integer(2);
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn walk(
        pool: &[(IrrepLabel, u128, Ratio<i64>, usize)],
        start: usize,
        stack: &mut Vec<usize>,
        dim: u128,
        ratio: Ratio<i64>,
        hint: usize,
        max_rank: usize,
        two: Ratio<i64>,
        out: &mut Vec<Candidate>,
    ) {
        if !stack.is_empty() && hint + usize::from(ratio < two) <= max_rank {
            let factors = stack.iter().flat_map(|&i| pool[i].0.factors().iter().cloned()).collect();
            out.push(Candidate { label: IrrepLabel(factors), ratio, rank_hint: hint });
        }
        if stack.len() == MAX_FACTORS {
            return;
        }
        for i in start..pool.len() {
            let (_, d, r, h) = &pool[i];
            if dim * d > CANDIDATE_DIM_CAP || ratio + r > two || hint + h > max_rank {
                continue;
            }
            stack.push(i);
            walk(pool, i, stack, dim * d, ratio + r, hint + h, max_rank, two, out);
            stack.pop();
        }
    }
    walk(&pool, 0, &mut stack, 1, Ratio::from_integer(0), 0, max_rank, two, &mut out);
    out
}

pub(super) fn classification(scope: &Scope) -> VerificationReport {
    let cap = scope.capped(CLASSIFICATION_RANK);
    let list = first_list(cap);
    let two = Ratio::from_integer(2);
    let mut checks = Vec::new();
    for m in &list.members {
        checks.push(Check::holds(&format!("{}: R <= 2", m.name()), "<= 2", fmt_ratio(&m.ratio), m.ratio <= two));
    }
    let cands = candidates(cap);
    for c in &cands {
        let p = c.label.poset().expect("dominant weights");
        let hits = list.matches(&p);
        let usual: Vec<String> = hits.iter().filter(|m| m.source.kind == DiagramKind::Usual).map(|m| m.name()).collect();
        let extended: Vec<String> = hits.iter().filter(|m| m.source.kind == DiagramKind::Extended).map(|m| m.name()).collect();
        let actual = if hits.is_empty() {
            "none".to_string()
        } else {
            hits.iter().map(|m| m.name()).collect::<Vec<_>>().join(" ")
        };
        if c.ratio < two {
            checks.push(Check::holds(
                &format!("{} (R = {}): occurs as Δ(1)", c.label, fmt_ratio(&c.ratio)),
                "a usual coloring",
                actual,
                !usual.is_empty(),
            ));
        } else {
            checks.push(Check::holds(
                &format!("{} (R = 2): occurs as Δ₁ only", c.label),
                "extended colorings only",
                actual,
                !extended.is_empty() && usual.is_empty(),
            ));
        }
    }
    let c3a2 = IrrepLabel::parse("C3:0,0,1xA2:1,0").expect("valid label");
    let p = c3a2.poset().expect("dominant weights");
    checks.push(Check::eq("C3:0,0,1xA2:1,0: R", "79/42".to_string(), fmt_ratio(&p.ratio())));
    let hits: Vec<String> = list.matches(&p).iter().map(|m| m.name()).collect();
    checks.push(Check::holds(
        "C3:0,0,1xA2:1,0: occurs in no grading",
        "none",
        if hits.is_empty() { "none".to_string() } else { hits.join(" ") },
        hits.is_empty(),
    ));
    VerificationReport::new(
        "classification",
        format!(
            "{} first-list posets of rank <= {cap}; {} products of <= {MAX_FACTORS} simply-laced catalog posets, dim <= {CANDIDATE_DIM_CAP}, rank hints <= {cap}",
            list.members.len(),
            cands.len()
        ),
        checks,
        vec![],
    )
}

fn label(t: &str, w: Weight) -> String {
    format!("{t}:{w}")
}

/// `A_{k−1} ϖ_1`, the `k`-element chain.
fn chain(k: usize) -> String {
    label(&format!("A{}", k - 1), Weight::fundamental(k - 1, 1))
}

fn product_digraph(parts: &[String]) -> Digraph {
    let l = IrrepLabel::parse(&parts.join("x")).expect("valid label");
    Digraph::from(&l.poset().expect("dominant weights"))
}

fn usual_piece(t: &str, v: usize) -> Digraph {
    let rs = RootSystem::build(t.parse().expect("valid type"));
    let zg = z_grading(&rs, &[v]).expect("valid vertex");
    Digraph::from(zg.piece(1).expect("degree 1"))
}

fn extended_piece(t: &str, v: usize) -> Digraph {
    let rs = RootSystem::build(t.parse().expect("valid type"));
    Digraph::from(&periodic_grading(&rs, &[v]).expect("order at least 2").g1)
}

/// Which catalog posets have `R < 2`, `R = 2`, and where they occur.
pub fn ratio_classification(max_rank: usize, max_factors: usize) -> VerificationReport {
    let stats = catalog_stats(max_rank);
    let two = Ratio::from_integer(2);
    let mut checks = Vec::new();
    let ratio = |spec: &str| -> Ratio<i64> {
        let (_, s) = stats.iter().find(|(e, _)| e.label.to_string() == spec).expect("catalog label");
        Ratio::new(s.edges as i64, s.elements as i64)
    };
    let record = |checks: &mut Vec<Check>, name: String, r: Ratio<i64>, below: bool, equal: bool| {
        checks.push(Check::eq(&format!("{name}: R < 2"), below, r < two));
        checks.push(Check::eq(&format!("{name}: R = 2"), equal, r == two));
    };
    for n in 1..=max_rank {
        for m in 1..=n.div_ceil(2) {
            let spec = label(&format!("A{n}"), Weight::fundamental(n, m));
            let below = m <= 2 || (m == 3 && (5..=7).contains(&n));
            let equal = matches!((n, m), (7, 4) | (8, 3));
            record(&mut checks, spec.clone(), ratio(&spec), below, equal);
        }
    }
    for n in 4..=max_rank {
        let spec = label(&format!("D{n}"), Weight::fundamental(n, n));
        record(&mut checks, spec.clone(), ratio(&spec), n <= 7, n == 8);
        let spec = label(&format!("D{n}"), Weight::fundamental(n, 1));
        checks.push(Check::eq(&format!("{spec}: R"), "1".to_string(), fmt_ratio(&ratio(&spec))));
    }

    // Where each poset occurs.
    let mut rows: Vec<(String, Digraph, String, Digraph)> = Vec::new();
    let fund = |t: &str, n: usize, m: usize| label(&format!("{t}{n}"), Weight::fundamental(n, m));
    let single = |s: &str| product_digraph(&[s.to_string()]);
    for n in 1..max_rank {
        let s = fund("A", n, 1);
        rows.push((s.clone(), single(&s), format!("(A{}, α1)", n + 1), usual_piece(&format!("A{}", n + 1), 1)));
        if n >= 3 {
            let s = fund("A", n, 2);
            let d = format!("D{}", n + 1);
            rows.push((s.clone(), single(&s), format!("({d}, α{})", n + 1), usual_piece(&d, n + 1)));
        }
        if n >= 4 {
            let s = fund("D", n, 1);
            let d = format!("D{}", n + 1);
            rows.push((s.clone(), single(&s), format!("({d}, α1)"), usual_piece(&d, 1)));
        }
    }
    for n in 5..=7 {
        let e = format!("E{}", n + 1);
        let s = fund("A", n, 3);
        rows.push((s.clone(), single(&s), format!("({e}, α{})", n + 1), usual_piece(&e, n + 1)));
        let s = fund("D", n, n);
        rows.push((s.clone(), single(&s), format!("({e}, α{n})"), usual_piece(&e, n)));
    }
    for (s, t, v) in [(fund("A", 7, 4), "E7", 7), (fund("A", 8, 3), "E8", 8), (fund("D", 8, 8), "E8", 7)] {
        rows.push((s.clone(), single(&s), format!("({}\u{303}{}, α{v})", &t[..1], &t[1..]), extended_piece(t, v)));
    }

    // Chains: 1/n₁ + 1/n₂ + 1/n₃ against the star-shaped diagrams.
    let bound = 2 * max_rank.max(8);
    let mut above = BTreeSet::new();
    let mut at_one = BTreeSet::new();
    for a in 2..=bound {
        for b in a..=bound {
            for c in b..=bound {
                let s = ratio_sum([Ratio::new(1, a as i64), Ratio::new(1, b as i64), Ratio::new(1, c as i64)]);
                if s > Ratio::from_integer(1) {
                    above.insert((a, b, c));
                } else if s == Ratio::from_integer(1) {
                    at_one.insert((a, b, c));
                }
            }
        }
    }
    let mut expect_above: BTreeSet<(usize, usize, usize)> = (2..=bound).map(|c| (2, 2, c)).collect();
    expect_above.extend([(2, 3, 3), (2, 3, 4), (2, 3, 5)]);
    let expect_one: BTreeSet<(usize, usize, usize)> = [(3, 3, 3), (2, 4, 4), (2, 3, 6)].into_iter().collect();
    checks.push(Check::eq(&format!("triples <= {bound}: Σ 1/n_i > 1"), format!("{expect_above:?}"), format!("{above:?}")));
    checks.push(Check::eq(&format!("triples <= {bound}: Σ 1/n_i = 1"), format!("{expect_one:?}"), format!("{at_one:?}")));

    let mut stars: Vec<(Vec<usize>, String, Digraph)> = Vec::new();
    for n in 2..=max_rank.saturating_sub(2) {
        let d = format!("D{}", n + 2);
        stars.push((vec![2, 2, n], format!("({d}, α{n})"), usual_piece(&d, n)));
    }
    for (triple, t, v) in [([2, 3, 3], "E6", 3), ([2, 3, 4], "E7", 4), ([2, 3, 5], "E8", 5)] {
        stars.push((triple.to_vec(), format!("({t}, α{v})"), usual_piece(t, v)));
    }
    for (triple, t, v) in [([3, 3, 3], "E6", 3), ([2, 4, 4], "E7", 4), ([2, 3, 6], "E8", 5)] {
        stars.push((triple.to_vec(), format!("({}\u{303}{}, α{v})", &t[..1], &t[1..]), extended_piece(t, v)));
    }
    if max_factors >= 4 {
        let mut quads = Vec::new();
        for a in 2..=bound {
            for b in a..=bound {
                for c in b..=bound {
                    for d in c..=bound {
                        let r = ratio_sum([a, b, c, d].map(|x| Ratio::new(x as i64 - 1, x as i64)));
                        if r <= two {
                            quads.push((a, b, c, d));
                        }
                    }
                }
            }
        }
        checks.push(Check::eq(&format!("quadruples <= {bound}: R <= 2"), "[(2, 2, 2, 2)]".to_string(), format!("{quads:?}")));
        stars.push((vec![2, 2, 2, 2], "(D\u{303}4, α2)".into(), extended_piece("D4", 2)));
    }
    for (ns, grading, g) in stars {
        let parts: Vec<String> = ns.iter().map(|&k| chain(k)).collect();
        rows.push((parts.join("x"), product_digraph(&parts), grading, g));
    }
    for (spec, p, grading, g) in rows {
        checks.push(Check::eq(&format!("{spec} ≅ {grading}"), true, are_isomorphic(&p, &g)));
    }
    VerificationReport::new(
        "ratio-classification",
        format!("catalog rank <= {max_rank}, chains <= {bound}, <= {max_factors} factors"),
        checks,
        vec![],
    )
}
