//! Weight posets, their Hasse diagrams and covering statistics.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};
use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{RootSystem, SimpleType, Weight};

/// Hasse edge `upper → lower` with `upper - lower = α_label`.
///
/// Labels are 1-based; label 0 stands for `α_0 = -θ` in periodic gradings.
/// In a product poset, the labels of factor `k` are shifted by the total rank
/// of the factors before it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize, usize)", into = "(usize, usize, usize)")]
pub struct Edge {
    pub upper: usize,
    pub lower: usize,
    pub label: usize,
}

impl From<(usize, usize, usize)> for Edge {
    fn from((upper, lower, label): (usize, usize, usize)) -> Self {
        Edge { upper, lower, label }
    }
}

impl From<Edge> for (usize, usize, usize) {
    fn from(e: Edge) -> Self {
        (e.upper, e.lower, e.label)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Count the elements each element covers.
    Upper,
    /// Count the elements each element is covered by.
    Lower,
}

/// `K(t) = Σ_j #{elements covering exactly j others} t^j` (or the lower
/// analogue), stored lowest degree first without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoveringPolynomial(Vec<u64>);

impl CoveringPolynomial {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        CoveringPolynomial(coeffs)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn coeff(&self, j: usize) -> u64 {
        self.0.get(j).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    /// `K(1)`.
    pub fn value_at_one(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `K'(1)`.
    pub fn derivative_at_one(&self) -> u64 {
        self.0.iter().enumerate().map(|(j, c)| j as u64 * c).sum()
    }

    pub fn mul(&self, other: &CoveringPolynomial) -> CoveringPolynomial {
        let mut out = vec![0u64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CoveringPolynomial::new(out)
    }
}

impl fmt::Display for CoveringPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (j, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            terms.push(match j {
                0 => c.to_string(),
                1 => format!("{c}t"),
                _ => format!("{c}t^{j}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// A finite set of weights with the Hasse diagram of the root order.
///
/// Elements are sorted by (depth from the top, lexicographic pairings); the
/// edge list is sorted. Weights of a product poset are the concatenations of
/// the factor pairings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightPoset {
    ambient: Vec<SimpleType>,
    elements: Vec<Weight>,
    edges: Vec<Edge>,
}

impl WeightPoset {
    /// Builds the Hasse diagram where `u → v` is an edge of label `l` iff
    /// `elements[u] - elements[v]` equals the step vector of `l`.
    pub fn from_steps(ambient: Vec<SimpleType>, elements: Vec<Weight>, steps: &[(usize, Vec<i64>)]) -> Self {
        let edges = hasse_edges(&elements, steps);
        WeightPoset::canonical(ambient, elements, edges)
    }

    /// Reorders elements deterministically and renumbers the edges.
    fn canonical(ambient: Vec<SimpleType>, elements: Vec<Weight>, edges: Vec<Edge>) -> Self {
        let n = elements.len();
        let depth = depth_from_top(n, &edges);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| depth[a].cmp(&depth[b]).then_with(|| elements[a].cmp(&elements[b])));
        let mut pos = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let mut slots: Vec<Option<Weight>> = elements.into_iter().map(Some).collect();
        let elements: Vec<Weight> = order.iter().map(|&old| slots[old].take().unwrap()).collect();
        let mut edges: Vec<Edge> = edges
            .into_iter()
            .map(|e| Edge { upper: pos[e.upper], lower: pos[e.lower], label: e.label })
            .collect();
        edges.sort();
        WeightPoset { ambient, elements, edges }
    }

    pub fn ambient(&self) -> &[SimpleType] {
        &self.ambient
    }

    pub fn elements(&self) -> &[Weight] {
        &self.elements
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.elements.iter().position(|x| x == w)
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.len()];
        for e in &self.edges {
            d[e.upper] += 1;
        }
        d
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.len()];
        for e in &self.edges {
            d[e.lower] += 1;
        }
        d
    }

    /// Elements covering nothing.
    pub fn minimal_elements(&self) -> Vec<usize> {
        let d = self.out_degrees();
        (0..self.len()).filter(|&i| d[i] == 0).collect()
    }

    /// Elements covered by nothing.
    pub fn maximal_elements(&self) -> Vec<usize> {
        let d = self.in_degrees();
        (0..self.len()).filter(|&i| d[i] == 0).collect()
    }

    pub fn edge_count_by_label(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for e in &self.edges {
            *m.entry(e.label).or_insert(0) += 1;
        }
        m
    }

    pub fn covering_polynomial(&self, direction: Direction) -> CoveringPolynomial {
        let degrees = match direction {
            Direction::Upper => self.out_degrees(),
            Direction::Lower => self.in_degrees(),
        };
        let max = degrees.iter().copied().max().unwrap_or(0);
        let mut coeffs = vec![0u64; max + 1];
        for d in degrees {
            coeffs[d] += 1;
        }
        CoveringPolynomial::new(coeffs)
    }

    pub fn stats(&self) -> HasseStats {
        HasseStats::of(self.len(), &self.edges)
    }

    /// `#ℰ / #𝒫`.
    pub fn ratio(&self) -> Ratio<i64> {
        Ratio::new(self.edge_count() as i64, self.len() as i64)
    }

    /// Cartesian product: `(a₁,b₁) → (a₂,b₂)` is an edge iff `a₁ = a₂` and
    /// `b₁ → b₂` is an edge, or `b₁ = b₂` and `a₁ → a₂` is an edge.
    pub fn cartesian_product(&self, other: &WeightPoset) -> WeightPoset {
        let shift: usize = self.ambient.iter().map(|t| t.rank()).sum();
        let m = other.len();
        let id = |a: usize, b: usize| a * m + b;
        let mut elements = Vec::with_capacity(self.len() * m);
        for a in &self.elements {
            for b in &other.elements {
                let mut w = a.0.clone();
                w.extend_from_slice(&b.0);
                elements.push(Weight(w));
            }
        }
        let mut edges = Vec::with_capacity(self.edge_count() * m + other.edge_count() * self.len());
        for e in &self.edges {
            for b in 0..m {
                edges.push(Edge { upper: id(e.upper, b), lower: id(e.lower, b), label: e.label });
            }
        }
        for e in &other.edges {
            for a in 0..self.len() {
                edges.push(Edge {
                    upper: id(a, e.upper),
                    lower: id(a, e.lower),
                    label: e.label + shift,
                });
            }
        }
        let mut ambient = self.ambient.clone();
        ambient.extend_from_slice(&other.ambient);
        WeightPoset::canonical(ambient, elements, edges)
    }

    /// Connected components of the Hasse diagram, ordered by smallest element.
    pub fn components(&self) -> Vec<WeightPoset> {
        let n = self.len();
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.upper].push(e.lower);
            adj[e.lower].push(e.upper);
        }
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([s]);
            comp[s] = count;
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = count;
                        queue.push_back(v);
                    }
                }
            }
            count += 1;
        }
        (0..count)
            .map(|c| {
                let members: Vec<usize> = (0..n).filter(|&i| comp[i] == c).collect();
                let local: HashMap<usize, usize> = members.iter().enumerate().map(|(k, &i)| (i, k)).collect();
                let elements = members.iter().map(|&i| self.elements[i].clone()).collect();
                let edges = self
                    .edges
                    .iter()
                    .filter(|e| comp[e.upper] == c)
                    .map(|e| Edge { upper: local[&e.upper], lower: local[&e.lower], label: e.label })
                    .collect();
                WeightPoset::canonical(self.ambient.clone(), elements, edges)
            })
            .collect()
    }

    /// Checks the structural invariants: edge endpoints in range, no
    /// duplicates, acyclic, and edges exactly the single-step differences.
    pub fn validate(&self, steps: &[(usize, Vec<i64>)]) -> bool {
        let rebuilt = WeightPoset::from_steps(self.ambient.clone(), self.elements.clone(), steps);
        rebuilt == *self
    }
}

/// Weights of one width stored row-major in a single buffer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightTable {
    width: usize,
    data: Vec<i64>,
}

impl WeightTable {
    pub fn new(width: usize) -> WeightTable {
        WeightTable { width, data: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.data.len().checked_div(self.width).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.width..(i + 1) * self.width]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.data.chunks_exact(self.width.max(1))
    }

    pub fn push(&mut self, row: &[i64]) {
        assert_eq!(row.len(), self.width);
        self.data.extend_from_slice(row);
    }

    pub fn from_weights(ws: &[Weight]) -> WeightTable {
        let mut t = WeightTable::new(ws.first().map_or(0, |w| w.rank()));
        for w in ws {
            t.push(w.pairings());
        }
        t
    }

    pub fn to_weights(&self) -> Vec<Weight> {
        self.rows().map(|r| Weight(r.to_vec())).collect()
    }

    /// Concatenated rows, first factor major.
    pub fn product(a: &WeightTable, b: &WeightTable) -> WeightTable {
        let mut t = WeightTable::new(a.width + b.width);
        t.data.reserve(a.len() * b.len() * t.width);
        for x in a.rows() {
            for y in b.rows() {
                t.data.extend_from_slice(x);
                t.data.extend_from_slice(y);
            }
        }
        t
    }
}

/// A hash linear in the weight, so that `key(μ − s) = key(μ) − key(s)`.
struct LinearKey(Vec<u64>);

impl LinearKey {
    fn new(width: usize) -> LinearKey {
        LinearKey((0..width as u64).map(splitmix).collect())
    }

    fn of(&self, v: &[i64]) -> u64 {
        v.iter()
            .zip(&self.0)
            .fold(0u64, |acc, (&x, &m)| acc.wrapping_add((x as u64).wrapping_mul(m)))
    }
}

fn splitmix(i: u64) -> u64 {
    let mut z = i.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Calls `f(upper, lower, label)` for every Hasse edge of the table. Returns
/// `false`, without calling `f`, if two rows share a linear key.
fn for_each_edge(t: &WeightTable, steps: &[(usize, Vec<i64>)], mut f: impl FnMut(usize, usize, usize)) -> bool {
    let key = LinearKey::new(t.width());
    let keys: Vec<u64> = t.rows().map(|r| key.of(r)).collect();
    let mut index: FxHashMap<u64, usize> = FxHashMap::default();
    index.reserve(keys.len());
    for (i, &k) in keys.iter().enumerate() {
        if index.insert(k, i).is_some() {
            return false;
        }
    }
    let step_keys: Vec<u64> = steps.iter().map(|(_, s)| key.of(s)).collect();
    for (u, w) in t.rows().enumerate() {
        for ((label, step), sk) in steps.iter().zip(&step_keys) {
            if let Some(&v) = index.get(&keys[u].wrapping_sub(*sk)) {
                if t.row(v).iter().zip(w).zip(step).all(|((l, a), b)| *l == a - b) {
                    f(u, v, *label);
                }
            }
        }
    }
    true
}

/// Edges `u → v` with `elements[u] - elements[v]` equal to a step vector.
pub fn hasse_edges(elements: &[Weight], steps: &[(usize, Vec<i64>)]) -> Vec<Edge> {
    hasse_edges_table(&WeightTable::from_weights(elements), steps)
}

pub fn hasse_edges_table(t: &WeightTable, steps: &[(usize, Vec<i64>)]) -> Vec<Edge> {
    let mut edges = Vec::new();
    let hashed = for_each_edge(t, steps, |upper, lower, label| edges.push(Edge { upper, lower, label }));
    if hashed {
        edges
    } else {
        hasse_edges_by_slice(t, steps)
    }
}

/// Fallback of [`hasse_edges_table`] when two weights share a linear key.
fn hasse_edges_by_slice(t: &WeightTable, steps: &[(usize, Vec<i64>)]) -> Vec<Edge> {
    let mut index: FxHashMap<&[i64], usize> = FxHashMap::default();
    index.reserve(t.len());
    for (i, w) in t.rows().enumerate() {
        index.insert(w, i);
    }
    let mut edges = Vec::new();
    let mut scratch = Vec::new();
    for (u, w) in t.rows().enumerate() {
        for (label, step) in steps {
            scratch.clear();
            scratch.extend(w.iter().zip(step).map(|(a, b)| a - b));
            if let Some(&v) = index.get(scratch.as_slice()) {
                edges.push(Edge { upper: u, lower: v, label: *label });
            }
        }
    }
    edges
}

/// Order-independent statistics of a Hasse diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseStats {
    pub elements: usize,
    pub edges: usize,
    pub by_label: BTreeMap<usize, usize>,
    pub upper: CoveringPolynomial,
    pub lower: CoveringPolynomial,
}

impl HasseStats {
    pub fn of(n: usize, edges: &[Edge]) -> HasseStats {
        let mut out = vec![0usize; n];
        let mut inn = vec![0usize; n];
        let mut by_label = BTreeMap::new();
        for e in edges {
            out[e.upper] += 1;
            inn[e.lower] += 1;
            *by_label.entry(e.label).or_insert(0) += 1;
        }
        HasseStats {
            elements: n,
            edges: edges.len(),
            by_label,
            upper: degree_polynomial(&out),
            lower: degree_polynomial(&inn),
        }
    }

    /// Statistics of the weight set without building a canonical poset.
    pub fn from_weights(elements: &[Weight], steps: &[(usize, Vec<i64>)]) -> HasseStats {
        HasseStats::from_table(&WeightTable::from_weights(elements), steps)
    }

    pub fn from_table(t: &WeightTable, steps: &[(usize, Vec<i64>)]) -> HasseStats {
        let n = t.len();
        let mut out = vec![0usize; n];
        let mut inn = vec![0usize; n];
        let mut labels: FxHashMap<usize, usize> = FxHashMap::default();
        let mut edges = 0;
        let hashed = for_each_edge(t, steps, |u, v, label| {
            out[u] += 1;
            inn[v] += 1;
            *labels.entry(label).or_insert(0) += 1;
            edges += 1;
        });
        if !hashed {
            return HasseStats::of(n, &hasse_edges_by_slice(t, steps));
        }
        HasseStats {
            elements: n,
            edges,
            by_label: labels.into_iter().collect(),
            upper: degree_polynomial(&out),
            lower: degree_polynomial(&inn),
        }
    }
}

/// `Σ_j #{x : d(x) = j} t^j`.
fn degree_polynomial(d: &[usize]) -> CoveringPolynomial {
    let mut c = vec![0u64; d.iter().copied().max().unwrap_or(0) + 1];
    for &x in d {
        c[x] += 1;
    }
    CoveringPolynomial::new(c)
}

/// Concatenated weights of a tensor product, first factor major.
pub fn product_weights(a: &[Weight], b: &[Weight]) -> Vec<Weight> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            let mut w = Vec::with_capacity(x.rank() + y.rank());
            w.extend_from_slice(&x.0);
            w.extend_from_slice(&y.0);
            out.push(Weight(w));
        }
    }
    out
}

/// Block-diagonal steps of a product; labels of later factors are shifted.
pub fn product_steps(factors: &[&[(usize, Vec<i64>)]]) -> Vec<(usize, Vec<i64>)> {
    let widths: Vec<usize> = factors.iter().map(|f| f.first().map_or(0, |s| s.1.len())).collect();
    let total: usize = widths.iter().sum();
    let mut out = Vec::new();
    let mut offset = 0;
    for (f, w) in factors.iter().zip(&widths) {
        for (label, step) in f.iter() {
            let mut v = vec![0; total];
            v[offset..offset + w].copy_from_slice(step);
            out.push((label + offset, v));
        }
        offset += w;
    }
    out
}

/// Longest-path distance from a maximal element, following edges downwards.
fn depth_from_top(n: usize, edges: &[Edge]) -> Vec<usize> {
    let mut indeg = vec![0usize; n];
    let mut down = vec![Vec::new(); n];
    for e in edges {
        indeg[e.lower] += 1;
        down[e.upper].push(e.lower);
    }
    let mut depth = vec![0usize; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut seen = 0;
    while let Some(u) = queue.pop_front() {
        seen += 1;
        for &v in &down[u] {
            depth[v] = depth[v].max(depth[u] + 1);
            indeg[v] -= 1;
            if indeg[v] == 0 {
                queue.push_back(v);
            }
        }
    }
    assert_eq!(seen, n, "Hasse diagram has a cycle");
    depth
}

/// Step vectors `(label, column of the Cartan matrix)` for all simple roots.
pub fn simple_steps(rs: &RootSystem) -> Vec<(usize, Vec<i64>)> {
    (0..rs.rank()).map(|j| (j + 1, rs.cartan().column(j))).collect()
}

/// Hasse diagram of a weight set under the root order of `rs`.
pub fn build_poset(rs: &RootSystem, weights: Vec<Weight>) -> WeightPoset {
    WeightPoset::from_steps(vec![rs.stype()], weights, &simple_steps(rs))
}

fn check_weight(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if lambda.rank() != rs.rank() {
        return Err(Error::WrongLength {
            token: lambda.to_string(),
            expected: rs.rank(),
            got: lambda.rank(),
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// The weight set of the simple module with highest weight `λ`.
///
/// Saturated closure: for each `μ` and each `i` with `k = <μ, α_i^∨> > 0`,
/// the weights `μ - jα_i`, `j = 1..k`, are added. Strings are unbroken, so
/// only a weight with `μ + α_i` not yet seen needs to walk its string.
pub fn irrep_weights(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    Ok(irrep_weight_table(rs, lambda)?.to_weights())
}

/// [`irrep_weights`] in a flat table, in the same order.
pub fn irrep_weight_table(rs: &RootSystem, lambda: &Weight) -> Result<WeightTable> {
    check_weight(rs, lambda)?;
    let keyed = KeyedSet { key: LinearKey::new(rs.rank()), seen: FxHashMap::default() };
    if let Some(t) = closure(rs, lambda, keyed) {
        return Ok(t);
    }
    Ok(closure(rs, lambda, FxHashSet::default()).expect("slice keys never collide"))
}

/// Membership during the closure; `None` aborts it.
trait SeenSet {
    fn contains(&self, t: &WeightTable, probe: &[i64]) -> Option<bool>;
    fn insert(&mut self, t: &WeightTable, row: &[i64]);
}

/// Rows by linear key; a key hit on a different row is a collision.
struct KeyedSet {
    key: LinearKey,
    seen: FxHashMap<u64, usize>,
}

impl SeenSet for KeyedSet {
    fn contains(&self, t: &WeightTable, probe: &[i64]) -> Option<bool> {
        match self.seen.get(&self.key.of(probe)) {
            Some(&i) if t.row(i) == probe => Some(true),
            Some(_) => None,
            None => Some(false),
        }
    }

    fn insert(&mut self, t: &WeightTable, row: &[i64]) {
        self.seen.insert(self.key.of(row), t.len());
    }
}

impl SeenSet for FxHashSet<Vec<i64>> {
    fn contains(&self, _: &WeightTable, probe: &[i64]) -> Option<bool> {
        Some(FxHashSet::contains(self, probe))
    }

    fn insert(&mut self, _: &WeightTable, row: &[i64]) {
        FxHashSet::insert(self, row.to_vec());
    }
}

/// Saturated closure of `λ`; `seen.insert` is called before a row is appended.
fn closure(rs: &RootSystem, lambda: &Weight, mut seen: impl SeenSet) -> Option<WeightTable> {
    let n = rs.rank();
    let cols: Vec<Vec<i64>> = (0..n).map(|j| rs.cartan().column(j)).collect();
    let mut out = WeightTable::new(n);
    seen.insert(&out, lambda.pairings());
    out.push(lambda.pairings());
    let mut probe = Vec::with_capacity(n);
    let mut current = Vec::with_capacity(n);
    let mut head = 0;
    while head < out.len() {
        current.clear();
        current.extend_from_slice(out.row(head));
        for i in 0..n {
            let k = current[i];
            if k <= 0 {
                continue;
            }
            // the top of the α_i-string walks the whole string
            probe.clear();
            probe.extend(current.iter().zip(&cols[i]).map(|(a, b)| a + b));
            if seen.contains(&out, &probe)? {
                continue;
            }
            probe.clear();
            probe.extend_from_slice(&current);
            for _ in 0..k {
                for (c, s) in probe.iter_mut().zip(&cols[i]) {
                    *c -= s;
                }
                if !seen.contains(&out, &probe)? {
                    seen.insert(&out, &probe);
                    out.push(&probe);
                }
            }
        }
        head += 1;
    }
    Some(out)
}

/// Weyl dimension formula `Π_{γ>0} <λ+ρ, γ^∨> / <ρ, γ^∨>` in exact arithmetic.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<u128> {
    check_weight(rs, lambda)?;
    let n = rs.rank();
    let rho = Weight(vec![1; n]);
    let shifted = Weight(lambda.0.iter().map(|p| p + 1).collect());
    let mut acc = BigRational::one();
    for gamma in rs.positive_roots() {
        let num = rs.coroot_pairing(&shifted, gamma);
        let den = rs.coroot_pairing(&rho, gamma);
        acc *= to_big(num) / to_big(den);
    }
    assert!(acc.is_integer(), "Weyl dimension is not integral");
    acc.to_integer()
        .to_u128()
        .ok_or_else(|| Error::DimensionOverflow(lambda.to_string()))
}

fn to_big(r: Ratio<i64>) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// `dim V(λ) = #𝒫(λ)`.
pub fn is_wmf(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    let weights = irrep_weights(rs, lambda)?;
    let dim = weyl_dimension(rs, lambda)?;
    Ok(dim == weights.len() as u128)
}

/// One simple factor `(type, highest weight)` of an irreducible module of a
/// semisimple algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IrrepFactor {
    pub stype: SimpleType,
    pub highest_weight: Weight,
}

/// Irreducible module of a product of simple algebras, e.g. `C3:0,0,1xA2:1,0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IrrepLabel(pub Vec<IrrepFactor>);

impl IrrepLabel {
    pub fn simple(stype: SimpleType, highest_weight: Weight) -> IrrepLabel {
        IrrepLabel(vec![IrrepFactor { stype, highest_weight }])
    }

    pub fn factors(&self) -> &[IrrepFactor] {
        &self.0
    }

    pub fn parse(spec: &str) -> Result<IrrepLabel> {
        let mut factors = Vec::new();
        for part in spec.split('x') {
            let (ty, w) = part
                .split_once(':')
                .ok_or_else(|| Error::MalformedWeight(part.to_string()))?;
            let stype: SimpleType = ty.parse()?;
            let highest_weight = Weight::parse(w)?;
            if highest_weight.rank() != stype.rank() {
                return Err(Error::WrongLength {
                    token: w.to_string(),
                    expected: stype.rank(),
                    got: highest_weight.rank(),
                });
            }
            factors.push(IrrepFactor { stype, highest_weight });
        }
        Ok(IrrepLabel(factors))
    }

    /// Weight poset of the tensor product of the factors.
    pub fn poset(&self) -> Result<WeightPoset> {
        let mut acc: Option<WeightPoset> = None;
        for f in &self.0 {
            let rs = RootSystem::build(f.stype);
            let p = build_poset(&rs, irrep_weights(&rs, &f.highest_weight)?);
            acc = Some(match acc {
                None => p,
                Some(q) => q.cartesian_product(&p),
            });
        }
        Ok(acc.expect("at least one factor"))
    }

    /// Product of the factor dimensions.
    pub fn dimension(&self) -> Result<u128> {
        self.0.iter().try_fold(1u128, |acc, f| {
            let d = weyl_dimension(&RootSystem::build(f.stype), &f.highest_weight)?;
            acc.checked_mul(d).ok_or_else(|| Error::DimensionOverflow(self.to_string()))
        })
    }

    pub fn is_wmf(&self) -> Result<bool> {
        for f in &self.0 {
            if !is_wmf(&RootSystem::build(f.stype), &f.highest_weight)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn total_rank(&self) -> usize {
        self.0.iter().map(|f| f.stype.rank()).sum()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.0.iter().all(|f| f.stype.is_simply_laced())
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|x| format!("{}:{}", x.stype, x.highest_weight))
            .collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// Exact rational as `p/q` (or `p` when integral).
pub fn fmt_ratio(r: &Ratio<i64>) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Inverse of [`fmt_ratio`].
pub fn parse_ratio(s: &str) -> Option<Ratio<i64>> {
    match s.split_once('/') {
        Some((p, q)) => {
            let q: i64 = q.trim().parse().ok()?;
            (q != 0).then_some(())?;
            Some(Ratio::new(p.trim().parse().ok()?, q))
        }
        None => Some(Ratio::from_integer(s.trim().parse().ok()?)),
    }
}

/// Sum of ratios in lowest terms; zero for an empty iterator.
pub fn ratio_sum<I: IntoIterator<Item = Ratio<i64>>>(it: I) -> Ratio<i64> {
    it.into_iter().fold(Ratio::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    fn poset(t: &str, w: &str) -> WeightPoset {
        IrrepLabel::parse(&format!("{t}:{w}")).unwrap().poset().unwrap()
    }

    #[test]
    fn irrep_weight_counts() {
        let c3 = rs("C3");
        assert_eq!(irrep_weights(&c3, &Weight(vec![0, 0, 1])).unwrap().len(), 14);
        let a1 = rs("A1");
        assert_eq!(irrep_weights(&a1, &Weight(vec![0])).unwrap(), vec![Weight(vec![0])]);
        for n in 1..=7usize {
            let a = rs(&format!("A{n}"));
            for m in 1..=n {
                let got = irrep_weights(&a, &Weight::fundamental(n, m)).unwrap().len();
                assert_eq!(got as u64, binom(n as u64 + 1, m as u64));
            }
        }
        assert!(matches!(
            irrep_weights(&c3, &Weight(vec![0, -1, 1])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dimension(&rs("E6"), &Weight::fundamental(6, 1)).unwrap(), 27);
        assert_eq!(weyl_dimension(&rs("E7"), &Weight::fundamental(7, 1)).unwrap(), 56);
        assert_eq!(weyl_dimension(&rs("E8"), &Weight::zero(8)).unwrap(), 1);
        assert_eq!(weyl_dimension(&rs("A3"), &Weight(vec![1, 0, 1])).unwrap(), 15);
        assert_eq!(weyl_dimension(&rs("G2"), &Weight(vec![1, 0])).unwrap(), 7);
        assert_eq!(weyl_dimension(&rs("G2"), &Weight(vec![0, 1])).unwrap(), 14);
        assert_eq!(weyl_dimension(&rs("E8"), &Weight::fundamental(8, 1)).unwrap(), 248);
        assert_eq!(weyl_dimension(&rs("E8"), &Weight::fundamental(8, 7)).unwrap(), 3875);
    }

    #[test]
    fn wmf_certification() {
        assert!(is_wmf(&rs("C3"), &Weight(vec![0, 0, 1])).unwrap());
        assert!(!is_wmf(&rs("A3"), &Weight(vec![1, 0, 1])).unwrap());
        assert_eq!(irrep_weights(&rs("A3"), &Weight(vec![1, 0, 1])).unwrap().len(), 13);
        assert!(is_wmf(&rs("D5"), &Weight::fundamental(5, 5)).unwrap());
    }

    #[test]
    fn build_examples() {
        let d4 = poset("D4", "0,0,0,1");
        assert_eq!((d4.len(), d4.edge_count()), (8, 8));
        let e6 = poset("E6", "1,0,0,0,0,0");
        assert_eq!((e6.len(), e6.edge_count()), (27, 36));
        for n in 1..=6 {
            let mut w = vec![0; n];
            w[0] = 1;
            let p = IrrepLabel::simple(SimpleType::new(crate::root_system::Family::A, n).unwrap(), Weight(w))
                .poset()
                .unwrap();
            assert_eq!((p.len(), p.edge_count()), (n + 1, n));
        }
    }

    #[test]
    fn label_counts() {
        let p = poset("A4", "0,1,0,0");
        assert_eq!(p.edge_count(), 12);
        assert!(p.edge_count_by_label().values().all(|&c| c == 3));
        let b3 = poset("B3", "0,0,1");
        let by = b3.edge_count_by_label();
        assert_eq!(by[&1], by[&2]);
        assert_eq!(by.values().sum::<usize>(), 4 * 2);
        let g2 = poset("G2", "1,0");
        assert_eq!(g2.edge_count_by_label().values().sum::<usize>(), 6);
        assert_eq!(g2.edge_count_by_label()[&1], 4);
        assert_eq!(g2.edge_count_by_label()[&2], 2);
    }

    #[test]
    fn covering_polynomials() {
        let e7 = poset("E7", "1,0,0,0,0,0,0");
        assert_eq!(e7.covering_polynomial(Direction::Upper).coeffs(), &[1, 27, 27, 1]);
        let c3 = poset("C3", "0,0,1");
        assert_eq!(c3.covering_polynomial(Direction::Upper).coeffs(), &[1, 9, 4]);
        let chain = poset("A5", "1,0,0,0,0");
        assert_eq!(chain.covering_polynomial(Direction::Upper).coeffs(), &[1, 5]);
        let k = c3.covering_polynomial(Direction::Lower);
        assert_eq!(k.value_at_one(), 14);
        assert_eq!(k.derivative_at_one(), 17);
    }

    #[test]
    fn products() {
        let a3 = poset("A3", "1,0,0");
        let a4 = poset("A4", "0,1,0,0");
        let p = a3.cartesian_product(&a4);
        assert_eq!((p.len(), p.edge_count()), (40, 78));
        let q = poset("A4", "1,0,0,0").cartesian_product(&a4);
        assert_eq!((q.len(), q.edge_count()), (50, 100));
        let point = poset("A1", "0");
        let r = a4.cartesian_product(&point);
        assert_eq!(r.edges(), a4.edges());
        assert_eq!(r.len(), a4.len());
    }

    #[test]
    fn product_matches_direct_construction() {
        let label = IrrepLabel::parse("A2:1,0xB2:0,1").unwrap();
        let product = label.poset().unwrap();
        // build directly from concatenated weights with block-diagonal steps
        let a2 = rs("A2");
        let b2 = rs("B2");
        let mut elements = Vec::new();
        for x in irrep_weights(&a2, &Weight(vec![1, 0])).unwrap() {
            for y in irrep_weights(&b2, &Weight(vec![0, 1])).unwrap() {
                let mut w = x.0.clone();
                w.extend(y.0);
                elements.push(Weight(w));
            }
        }
        let mut steps = Vec::new();
        for j in 0..2 {
            let mut s = a2.cartan().column(j);
            s.extend([0, 0]);
            steps.push((j + 1, s));
        }
        for j in 0..2 {
            let mut s = vec![0, 0];
            s.extend(b2.cartan().column(j));
            steps.push((j + 3, s));
        }
        let direct = WeightPoset::from_steps(product.ambient().to_vec(), elements, &steps);
        assert_eq!(direct, product);
        assert!(product.validate(&steps));
    }

    #[test]
    fn ratios() {
        assert_eq!(poset("E7", "1,0,0,0,0,0,0").ratio(), Ratio::new(3, 2));
        assert_eq!(poset("D6", "1,0,0,0,0,0").ratio(), Ratio::from_integer(1));
        let p = IrrepLabel::parse("C3:0,0,1xA2:1,0").unwrap().poset().unwrap();
        assert_eq!(p.ratio(), Ratio::new(17, 14) + Ratio::new(2, 3));
        assert_eq!(fmt_ratio(&p.ratio()), "79/42");
    }

    #[test]
    fn label_parse_errors() {
        assert!(matches!(IrrepLabel::parse("A0:0"), Err(Error::InadmissibleRank(..))));
        assert!(matches!(IrrepLabel::parse("A2:1"), Err(Error::WrongLength { .. })));
        assert!(matches!(IrrepLabel::parse("A2:1,x"), Err(Error::MalformedWeight(_))));
        assert!(matches!(IrrepLabel::parse("A2"), Err(Error::MalformedWeight(_))));
    }

    #[test]
    fn json_shape() {
        let p = poset("A2", "1,0");
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v["elements"], serde_json::json!([[1, 0], [-1, 1], [0, -1]]));
        assert_eq!(v["edges"], serde_json::json!([[0, 1, 1], [1, 2, 2]]));
        let back: WeightPoset = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
}
