//! Z-gradings from coloured Dynkin diagrams and periodic gradings from
//! coloured extended Dynkin diagrams.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{CartanMatrix, Family, Root, RootSystem, SimpleType, Weight};
use crate::weight_poset::{CoveringPolynomial, Direction, WeightPoset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagramKind {
    Usual,
    Extended,
}

impl fmt::Display for DiagramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagramKind::Usual => "usual",
            DiagramKind::Extended => "extended",
        })
    }
}

/// A diagram with a set of coloured vertices; vertex 0 is `α_0 = -θ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredDiagram {
    pub kind: DiagramKind,
    #[serde(rename = "type")]
    pub base: SimpleType,
    pub colored: Vec<usize>,
}

impl ColoredDiagram {
    pub fn new(kind: DiagramKind, base: SimpleType, colored: &[usize]) -> Result<ColoredDiagram> {
        if colored.is_empty() {
            return Err(Error::EmptyColoring);
        }
        let lo = match kind {
            DiagramKind::Usual => 1,
            DiagramKind::Extended => 0,
        };
        let mut set = BTreeSet::new();
        for &v in colored {
            if v < lo || v > base.rank() {
                return Err(Error::VertexOutOfRange { vertex: v, stype: base.to_string() });
            }
            if !set.insert(v) {
                return Err(Error::MalformedColoring(format!("vertex {v} repeated")));
            }
        }
        Ok(ColoredDiagram { kind, base, colored: set.into_iter().collect() })
    }

    /// Parses `kind`, `type` and a comma-separated vertex list.
    pub fn parse(kind: DiagramKind, base: &str, colored: &str) -> Result<ColoredDiagram> {
        let base: SimpleType = base.parse()?;
        ColoredDiagram::new(kind, base, &parse_vertices(colored)?)
    }

    pub fn is_colored(&self, v: usize) -> bool {
        self.colored.contains(&v)
    }
}

pub fn parse_vertices(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Err(Error::EmptyColoring);
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::MalformedColoring(t.trim().to_string())))
        .collect()
}

/// The extended diagram: marks `a_i = [θ:α_i]` and `⟨θ, α_j^∨⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedDiagram {
    pub base: SimpleType,
    pub marks: Vec<i64>,
    pub attachments: Vec<i64>,
    cartan: CartanMatrix,
}

impl ExtendedDiagram {
    pub fn new(rs: &RootSystem) -> ExtendedDiagram {
        let n = rs.rank();
        let theta = rs.highest_root().clone();
        let attachments = rs.root_to_weight(&theta).0;
        let tt = rs.inner(&theta, &theta);
        let mut rows = vec![vec![0i64; n + 1]; n + 1];
        rows[0][0] = 2;
        for j in 0..n {
            let aj = rs.simple_root(j + 1);
            // ⟨α_j, α_0^∨⟩ = -2(α_j, θ)/(θ, θ)
            rows[0][j + 1] = -2 * rs.inner(&aj, &theta) / tt;
            rows[j + 1][0] = -attachments[j];
            for i in 0..n {
                rows[i + 1][j + 1] = rs.cartan().get(i, j);
            }
        }
        ExtendedDiagram {
            base: rs.stype(),
            marks: theta.0,
            attachments,
            cartan: CartanMatrix::from_rows(&rows),
        }
    }

    /// `a_0 = 1` followed by `a_1..a_n`.
    pub fn all_marks(&self) -> Vec<i64> {
        let mut v = vec![1];
        v.extend_from_slice(&self.marks);
        v
    }

    /// Cartan matrix on vertices `0..=n`.
    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }
}

/// A simple ideal of the degree-zero subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ideal {
    #[serde(rename = "type")]
    pub stype: SimpleType,
    pub vertices: Vec<usize>,
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.vertices.iter().map(|x| x.to_string()).collect();
        write!(f, "{}{{{}}}", self.stype, v.join(","))
    }
}

/// Types of the ideals, e.g. `A3×A4`, or `0` when there are none.
pub fn ideal_product(ideals: &[Ideal]) -> String {
    if ideals.is_empty() {
        return "0".into();
    }
    let mut names: Vec<String> = ideals.iter().map(|i| i.stype.to_string()).collect();
    names.sort();
    names.join("×")
}

/// Connected components of the diagram of `cartan` restricted to `vertices`,
/// each identified with a simple type. `labels[k]` names matrix row `k`.
pub fn ideals_of(cartan: &CartanMatrix, vertices: &[usize], labels: &[usize]) -> Vec<Ideal> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &s in vertices {
        if !seen.insert(s) {
            continue;
        }
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in vertices {
                if cartan.get(u, v) != 0 && u != v && seen.insert(v) {
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        let sub = cartan.submatrix(&comp);
        out.push(Ideal {
            stype: identify_cartan(&sub).expect("component of a finite-type diagram"),
            vertices: comp.iter().map(|&k| labels[k]).collect(),
        });
    }
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    out
}

/// The simple type whose Cartan matrix equals `c` up to simultaneous
/// permutation of rows and columns. Types are tried in family order.
pub fn identify_cartan(c: &CartanMatrix) -> Option<SimpleType> {
    let r = c.size();
    for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
        let Ok(t) = SimpleType::new(family, r) else { continue };
        let target = t.cartan_matrix();
        let mut perm = vec![usize::MAX; r];
        let mut used = vec![false; r];
        if match_perm(c, &target, 0, &mut perm, &mut used) {
            return Some(t);
        }
    }
    None
}

fn match_perm(c: &CartanMatrix, t: &CartanMatrix, i: usize, perm: &mut [usize], used: &mut [bool]) -> bool {
    let r = c.size();
    if i == r {
        return true;
    }
    for p in 0..r {
        if used[p] {
            continue;
        }
        let ok = (0..i).all(|j| c.get(i, j) == t.get(p, perm[j]) && c.get(j, i) == t.get(perm[j], p));
        if ok {
            perm[i] = p;
            used[p] = true;
            if match_perm(c, t, i + 1, perm, used) {
                return true;
            }
            used[p] = false;
        }
    }
    false
}

/// A Z-grading `deg γ = Σ s_i [γ:α_i]` with non-negative integer `s`.
#[derive(Clone, Debug)]
pub struct ZGrading {
    pub source: ColoredDiagram,
    pub weights: Vec<i64>,
    /// Δ(i) for `i ≥ 1`, as posets of root pairings with labels in Π(0).
    pub pieces: BTreeMap<usize, WeightPoset>,
    /// Δ(i) for `i ≥ 1`, as roots in simple-root coordinates.
    pub piece_roots: BTreeMap<usize, Vec<Root>>,
    pub zero_part: Vec<Root>,
    pub zero_simple: Vec<usize>,
    pub ideals: Vec<Ideal>,
    pub max_degree: usize,
}

/// Z-grading of a coloured usual diagram: `s_i = 1` on coloured vertices.
pub fn z_grading(rs: &RootSystem, colored: &[usize]) -> Result<ZGrading> {
    let source = ColoredDiagram::new(DiagramKind::Usual, rs.stype(), colored)?;
    let mut s = vec![0; rs.rank()];
    for &v in &source.colored {
        s[v - 1] = 1;
    }
    Ok(weighted_grading(rs, source, s))
}

fn weighted_grading(rs: &RootSystem, source: ColoredDiagram, s: Vec<i64>) -> ZGrading {
    let n = rs.rank();
    let mut piece_roots: BTreeMap<usize, Vec<Root>> = BTreeMap::new();
    let mut zero_part = Vec::new();
    for g in rs.positive_roots() {
        let d: i64 = g.0.iter().zip(&s).map(|(c, w)| c * w).sum();
        if d == 0 {
            zero_part.push(g.clone());
        } else {
            piece_roots.entry(d as usize).or_default().push(g.clone());
        }
    }
    let zero_simple: Vec<usize> = (1..=n).filter(|&i| s[i - 1] == 0).collect();
    let steps: Vec<(usize, Vec<i64>)> = zero_simple.iter().map(|&j| (j, rs.cartan().column(j - 1))).collect();
    let pieces = piece_roots
        .iter()
        .map(|(&d, roots)| {
            let elements = roots.iter().map(|r| rs.root_to_weight(r)).collect();
            (d, WeightPoset::from_steps(vec![rs.stype()], elements, &steps))
        })
        .collect();
    let idx: Vec<usize> = zero_simple.iter().map(|&j| j - 1).collect();
    let labels: Vec<usize> = (1..=n).collect();
    let ideals = ideals_of(rs.cartan(), &idx, &labels);
    let max_degree = piece_roots.keys().copied().max().unwrap_or(0);
    ZGrading {
        source,
        weights: s,
        pieces,
        piece_roots,
        zero_part,
        zero_simple,
        ideals,
        max_degree,
    }
}

/// The grading by `⟨γ, θ^∨⟩` attached to the minimal nilpotent orbit.
pub fn minimal_nilpotent_grading(rs: &RootSystem) -> ZGrading {
    let theta = rs.highest_root().clone();
    let tt = rs.inner(&theta, &theta);
    let s: Vec<i64> = (1..=rs.rank())
        .map(|i| 2 * rs.inner(&rs.simple_root(i), &theta) / tt)
        .collect();
    let colored: Vec<usize> = (1..=rs.rank()).filter(|&i| s[i - 1] != 0).collect();
    let source = ColoredDiagram::new(DiagramKind::Usual, rs.stype(), &colored).expect("θ pairs with some simple root");
    weighted_grading(rs, source, s)
}

impl ZGrading {
    pub fn k(&self) -> usize {
        self.source.colored.len()
    }

    pub fn piece(&self, i: usize) -> Option<&WeightPoset> {
        self.pieces.get(&i)
    }

    pub fn dim(&self, i: usize) -> usize {
        self.pieces.get(&i).map_or(0, |p| p.len())
    }

    pub fn edges(&self, i: usize) -> usize {
        self.pieces.get(&i).map_or(0, |p| p.edge_count())
    }

    /// `2·dim 𝔤(i) − #ℰ(i)`.
    pub fn defect(&self, i: usize) -> i64 {
        2 * self.dim(i) as i64 - self.edges(i) as i64
    }

    /// `Σ_{i≥1} (2·dim 𝔤(i) − #ℰ(i))`.
    pub fn grading_sum(&self) -> i64 {
        self.pieces.keys().map(|&i| self.defect(i)).sum()
    }

    pub fn component_posets(&self, i: usize) -> Vec<WeightPoset> {
        self.pieces.get(&i).map_or_else(Vec::new, |p| p.components())
    }

    /// `dim 𝔤(0) = n + 2·#Δ(0)⁺`.
    pub fn zero_dim(&self) -> usize {
        self.source.base.rank() + 2 * self.zero_part.len()
    }
}

/// A periodic grading from a coloured extended diagram.
#[derive(Clone, Debug)]
pub struct PeriodicGrading {
    pub source: ColoredDiagram,
    pub diagram: ExtendedDiagram,
    pub order: usize,
    /// Roots (positive and negative) by residue class.
    pub residues: Vec<Vec<Root>>,
    /// Δ₁ with labels on uncoloured vertices, `0` for `α_0`.
    pub g1: WeightPoset,
    pub g0_ideals: Vec<Ideal>,
}

pub fn periodic_grading(rs: &RootSystem, colored: &[usize]) -> Result<PeriodicGrading> {
    let source = ColoredDiagram::new(DiagramKind::Extended, rs.stype(), colored)?;
    let diagram = ExtendedDiagram::new(rs);
    let marks = diagram.all_marks();
    let m: i64 = source.colored.iter().map(|&v| marks[v]).sum();
    if m < 2 {
        return Err(Error::TrivialOrder(m as usize));
    }
    let n = rs.rank();
    let mut residues = vec![Vec::new(); m as usize];
    for g in rs.positive_roots() {
        for r in [g.clone(), g.negated()] {
            let d: i64 = source.colored.iter().filter(|&&v| v >= 1).map(|&v| r.0[v - 1]).sum();
            residues[d.rem_euclid(m) as usize].push(r);
        }
    }
    let uncolored: Vec<usize> = (0..=n).filter(|v| !source.is_colored(*v)).collect();
    let theta_w = rs.root_to_weight(rs.highest_root());
    let steps: Vec<(usize, Vec<i64>)> = uncolored
        .iter()
        .map(|&v| {
            let step = if v == 0 {
                theta_w.0.iter().map(|x| -x).collect()
            } else {
                rs.cartan().column(v - 1)
            };
            (v, step)
        })
        .collect();
    let elements: Vec<Weight> = residues[1].iter().map(|r| rs.root_to_weight(r)).collect();
    let g1 = WeightPoset::from_steps(vec![rs.stype()], elements, &steps);
    let labels: Vec<usize> = (0..=n).collect();
    let g0_ideals = ideals_of(diagram.cartan(), &uncolored, &labels);
    Ok(PeriodicGrading {
        source,
        diagram,
        order: m as usize,
        residues,
        g1,
        g0_ideals,
    })
}

impl PeriodicGrading {
    pub fn dim(&self, i: usize) -> usize {
        let roots = self.residues[i % self.order].len();
        if i.is_multiple_of(self.order) {
            roots + self.source.base.rank()
        } else {
            roots
        }
    }

    pub fn defect(&self) -> i64 {
        2 * self.g1.len() as i64 - self.g1.edge_count() as i64
    }

    /// `𝔤₀` is semisimple iff its ideals have total rank `n`.
    pub fn g0_is_semisimple(&self) -> bool {
        self.g0_ideals.iter().map(|i| i.stype.rank()).sum::<usize>() == self.source.base.rank()
    }
}

/// Statistics of one graded piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub degree: usize,
    pub dim: usize,
    pub edges: usize,
    pub defect: i64,
    pub covering: CoveringPolynomial,
}

impl DegreeReport {
    pub fn of(degree: usize, p: &WeightPoset) -> DegreeReport {
        DegreeReport {
            degree,
            dim: p.len(),
            edges: p.edge_count(),
            defect: 2 * p.len() as i64 - p.edge_count() as i64,
            covering: p.covering_polynomial(Direction::Upper),
        }
    }
}

/// A named numerical claim and its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identity {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Identity {
    pub fn eq<T: PartialEq + fmt::Display>(name: &str, expected: T, actual: T) -> Identity {
        Identity {
            name: name.into(),
            pass: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn holds(name: &str, expected: impl Into<String>, actual: impl fmt::Display, pass: bool) -> Identity {
        Identity { name: name.into(), expected: expected.into(), actual: actual.to_string(), pass }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingReport {
    pub source: ColoredDiagram,
    /// Largest degree for Z-gradings, the order `m` for periodic ones.
    pub order: usize,
    pub g0: Vec<Ideal>,
    pub degrees: Vec<DegreeReport>,
    pub identities: Vec<Identity>,
}

impl GradingReport {
    pub fn pass(&self) -> bool {
        self.identities.iter().all(|i| i.pass)
    }
}

/// `2a₀ + a₁ − a₃` for a covering polynomial of degree at most 3.
pub fn covering_defect(k: &CoveringPolynomial) -> i64 {
    2 * k.coeff(0) as i64 + k.coeff(1) as i64 - k.coeff(3) as i64
}

pub fn z_report(rs: &RootSystem, zg: &ZGrading) -> GradingReport {
    let n = rs.rank();
    let h = rs.coxeter_number() as i64;
    let k = zg.k();
    let degrees: Vec<DegreeReport> = zg.pieces.iter().map(|(&d, p)| DegreeReport::of(d, p)).collect();
    let mut ids = Vec::new();

    let graded: usize = zg.pieces.values().map(|p| p.len()).sum();
    ids.push(Identity::eq(
        "dimension accounting",
        n + 2 * rs.positive_roots().len(),
        n + 2 * graded + 2 * zg.zero_part.len(),
    ));
    let theta_deg = zg
        .piece_roots
        .get(&zg.max_degree)
        .is_some_and(|v| v.contains(rs.highest_root()));
    ids.push(Identity::holds("θ in top degree", "true", theta_deg, theta_deg));

    for d in &degrees {
        ids.push(Identity::holds(
            &format!("deg K(Δ({})) <= 3", d.degree),
            "<= 3",
            d.covering.degree(),
            d.covering.degree() <= 3,
        ));
    }
    if let Some(d1) = degrees.iter().find(|d| d.degree == 1) {
        ids.push(Identity::eq("defect = 2a0 + a1 - a3", covering_defect(&d1.covering), d1.defect));
    }
    if zg.weights.iter().all(|&w| w <= 1) {
        let p1 = zg.piece(1);
        let comps = zg.component_posets(1).len();
        ids.push(Identity::eq("components of Δ(1)", k, comps));
        let minimal: BTreeSet<Root> = p1
            .map(|p| {
                p.minimal_elements()
                    .into_iter()
                    .map(|i| rs.weight_to_root(&p.elements()[i]).expect("root"))
                    .collect()
            })
            .unwrap_or_default();
        let colored: BTreeSet<Root> = zg.source.colored.iter().map(|&i| rs.simple_root(i)).collect();
        ids.push(Identity::holds("minimal elements of Δ(1) are the coloured roots", "true", minimal == colored, minimal == colored));
        if rs.stype().is_simply_laced() {
            ids.push(Identity::eq("Σ defects = k·h", k as i64 * h, zg.grading_sum()));
        }
        if k == 1 {
            let i = zg.source.colored[0];
            let mark = rs.highest_root().0[i - 1] as usize;
            ids.push(Identity::eq("max degree = [θ:α_i]", mark, zg.max_degree));
            let z = zg.defect(1);
            let ok = if zg.max_degree > 1 { 0 < z && z < h } else { 0 < z && z <= h };
            let bound = if zg.max_degree > 1 { format!("0 < x < {h}") } else { format!("0 < x <= {h}") };
            ids.push(Identity::holds("defect bound", bound, z, ok));
        }
        if zg.max_degree == 1 {
            ids.push(Identity::eq("short grading defect = h", h, zg.defect(1)));
        }
    }
    GradingReport {
        source: zg.source.clone(),
        order: zg.max_degree,
        g0: zg.ideals.clone(),
        degrees,
        identities: ids,
    }
}

pub fn periodic_report(rs: &RootSystem, pg: &PeriodicGrading) -> GradingReport {
    let mut ids = Vec::new();
    let marks_sum: i64 = pg.diagram.all_marks().iter().sum();
    ids.push(Identity::eq("1 + Σ a_i = h", rs.coxeter_number() as i64, marks_sum));
    let total: usize = pg.residues.iter().map(|r| r.len()).sum();
    ids.push(Identity::eq("roots partitioned by residue", 2 * rs.positive_roots().len(), total));
    let single = pg.source.colored.len() == 1;
    ids.push(Identity::eq("𝔤₀ semisimple iff one coloured vertex", single, pg.g0_is_semisimple()));
    let z = pg.defect();
    ids.push(Identity::holds("2·dim 𝔤₁ >= #ℰ₁", ">= 0", z, z >= 0));
    let equality_expected = single && rs.stype().is_simply_laced();
    ids.push(Identity::eq("equality iff simply-laced with one coloured vertex", equality_expected, z == 0));
    let d1 = DegreeReport::of(1, &pg.g1);
    let g0_roots: usize = pg
        .g0_ideals
        .iter()
        .map(|i| 2 * RootSystem::build(i.stype).positive_roots().len())
        .sum();
    ids.push(Identity::eq("Δ₀ matches the ideals of 𝔤₀", g0_roots, pg.residues[0].len()));
    GradingReport {
        source: pg.source.clone(),
        order: pg.order,
        g0: pg.g0_ideals.clone(),
        degrees: vec![d1],
        identities: ids,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    #[test]
    fn e8_alpha4() {
        let e8 = rs("E8");
        let zg = z_grading(&e8, &[4]).unwrap();
        assert_eq!((zg.dim(1), zg.edges(1)), (40, 78));
        assert_eq!(ideal_product(&zg.ideals), "A3×A4");
        assert_eq!(zg.component_posets(1).len(), 1);
        assert!(z_report(&e8, &zg).pass());
    }

    #[test]
    fn short_c_grading() {
        for n in 2..=6usize {
            let c = rs(&format!("C{n}"));
            let zg = z_grading(&c, &[n]).unwrap();
            assert_eq!(zg.max_degree, 1);
            assert_eq!(zg.dim(1), n * (n + 1) / 2);
            assert_eq!(zg.edges(1), n * (n - 1));
            assert!(z_report(&c, &zg).pass());
        }
    }

    #[test]
    fn full_coloring_is_height() {
        let a2 = rs("A2");
        let zg = z_grading(&a2, &[1, 2]).unwrap();
        assert_eq!((zg.dim(1), zg.edges(1), zg.dim(2)), (2, 0, 1));
        assert_eq!(zg.component_posets(1).len(), 2);
        let a3 = rs("A3");
        assert_eq!(z_grading(&a3, &[1, 3]).unwrap().component_posets(1).len(), 2);
        assert!(matches!(z_grading(&a3, &[]), Err(Error::EmptyColoring)));
        assert!(matches!(z_grading(&a3, &[4]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn sums_and_defects() {
        let f4 = rs("F4");
        let sums: Vec<i64> = (1..=4).map(|i| z_grading(&f4, &[i]).unwrap().grading_sum()).collect();
        assert_eq!(sums, vec![16, 18, 15, 13]);
        let defects: Vec<i64> = (1..=4).map(|i| z_grading(&f4, &[i]).unwrap().defect(1)).collect();
        assert_eq!(defects, vec![8, 5, 6, 11]);
        assert_eq!(z_grading(&rs("E6"), &[3]).unwrap().grading_sum(), 12);
        assert_eq!(z_grading(&rs("D4"), &[1, 2]).unwrap().grading_sum(), 12);
        assert_eq!(z_grading(&rs("E8"), &[5]).unwrap().defect(1), 1);
        assert_eq!(z_grading(&rs("G2"), &[1]).unwrap().defect(1), 3);
    }

    #[test]
    fn periodic_examples() {
        let e8 = rs("E8");
        let pg = periodic_grading(&e8, &[4]).unwrap();
        assert_eq!(pg.order, 5);
        assert_eq!(ideal_product(&pg.g0_ideals), "A4×A4");
        assert_eq!((pg.g1.len(), pg.g1.edge_count()), (50, 100));
        for n in 4..=7usize {
            let d = rs(&format!("D{n}"));
            for k in 2..=n - 2 {
                let pg = periodic_grading(&d, &[k]).unwrap();
                assert_eq!(pg.order, 2);
                assert_eq!((pg.g1.len(), pg.g1.edge_count()), (4 * k * (n - k), 8 * k * (n - k)));
                assert_eq!(ideal_product(&pg.g0_ideals), d_pair(k, n - k));
            }
        }
        let f4 = rs("F4");
        let pg = periodic_grading(&f4, &[3]).unwrap();
        assert_eq!(pg.order, 3);
        assert_eq!(ideal_product(&pg.g0_ideals), "A2×A2");
        assert_eq!((pg.g1.len(), pg.g1.edge_count()), (18, 30));
        assert!(periodic_report(&f4, &pg).pass());
        assert!(matches!(periodic_grading(&f4, &[0]), Err(Error::TrivialOrder(1))));
    }

    fn d_pair(a: usize, b: usize) -> String {
        let name = |k: usize| match k {
            2 => vec!["A1".to_string(), "A1".to_string()],
            3 => vec!["A3".to_string()],
            _ => vec![format!("D{k}")],
        };
        let mut v = name(a);
        v.extend(name(b));
        v.sort();
        v.join("×")
    }

    #[test]
    fn minimal_nilpotent() {
        let e8 = rs("E8");
        let zg = minimal_nilpotent_grading(&e8);
        assert_eq!((zg.dim(1), zg.edges(1), zg.dim(2)), (56, 84, 1));
        let d4 = minimal_nilpotent_grading(&rs("D4"));
        assert_eq!((d4.dim(1), d4.edges(1)), (8, 12));
        let a2 = minimal_nilpotent_grading(&rs("A2"));
        assert_eq!(a2.source.colored, vec![1, 2]);
        let a1 = minimal_nilpotent_grading(&rs("A1"));
        assert_eq!((a1.dim(1), a1.dim(2)), (0, 1));
    }

    #[test]
    fn identification() {
        assert_eq!(identify_cartan(&rs("B2").cartan().clone()).unwrap().to_string(), "B2");
        assert_eq!(identify_cartan(&rs("C3").cartan().clone()).unwrap().to_string(), "C3");
        let ext = ExtendedDiagram::new(&rs("B3"));
        let sub = ext.cartan().submatrix(&[0, 1, 2]);
        assert_eq!(identify_cartan(&sub).unwrap().to_string(), "A3");
        let ext = ExtendedDiagram::new(&rs("E8"));
        assert_eq!(ext.attachments, vec![1, 0, 0, 0, 0, 0, 0, 0]);
        let sub = ext.cartan().submatrix(&[0, 1, 2, 3, 4, 5, 6, 8]);
        assert_eq!(identify_cartan(&sub).unwrap().to_string(), "D8");
    }
}
