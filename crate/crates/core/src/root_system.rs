//! Simple root systems built from Cartan data.
//!
//! Simple roots are numbered as in the Onishchik–Vinberg tables: `B_n` has
//! `α_n` short, `C_n` has `α_n` long, `E_n` is the chain `α_1 … α_{n-1}` with
//! `α_n` attached to the branch node (`α_3`, `α_4`, `α_5` for `E_6`, `E_7`,
//! `E_8`), `F_4` is `α_1 - α_2 => α_3 - α_4` with `α_1, α_2` short, and `G_2`
//! has `α_1` short. [`SimpleType::bourbaki_index`] maps to Bourbaki labels.
//!
//! Vertex and label indices are 1-based everywhere in the public API; vectors
//! are 0-based, so entry `i` of a [`Root`] is the coefficient of `α_{i+1}`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// Cartan type `X_n` of a simple Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            let why = match family {
                Family::A => "A_n needs n >= 1",
                Family::B => "B_n needs n >= 2",
                Family::C => "C_n needs n >= 2",
                Family::D => "D_n needs n >= 4",
                Family::E => "E_n needs n in {6, 7, 8}",
                Family::F => "F_n needs n = 4",
                Family::G => "G_n needs n = 2",
            };
            Err(Error::InadmissibleRank(format!("{}{}", family.letter(), rank), why))
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    pub fn is_exceptional(self) -> bool {
        matches!(self.family, Family::E | Family::F | Family::G)
    }

    /// Every admissible type of rank at most `max_rank`, in (family, rank) order.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        let families = [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ];
        let mut out = Vec::new();
        for family in families {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Classical types up to `max_rank` plus all five exceptional types.
    pub fn all_with_exceptionals(max_rank: usize) -> Vec<SimpleType> {
        let mut out: Vec<SimpleType> = SimpleType::all_up_to(max_rank)
            .into_iter()
            .filter(|t| !t.is_exceptional())
            .collect();
        for (f, n) in [(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)] {
            out.push(SimpleType { family: f, rank: n });
        }
        out
    }

    /// Bourbaki label of the simple root numbered `i` here (both 1-based).
    pub fn bourbaki_index(self, i: usize) -> usize {
        assert!((1..=self.rank).contains(&i), "vertex {i} out of range for {self}");
        match (self.family, self.rank) {
            (Family::E, 6) => [1, 3, 4, 5, 6, 2][i - 1],
            (Family::E, 7) => [7, 6, 5, 4, 3, 1, 2][i - 1],
            (Family::E, 8) => [8, 7, 6, 5, 4, 3, 1, 2][i - 1],
            (Family::F, 4) => 5 - i,
            _ => i,
        }
    }

    /// Inverse of [`SimpleType::bourbaki_index`].
    pub fn from_bourbaki_index(self, b: usize) -> usize {
        (1..=self.rank)
            .find(|&i| self.bourbaki_index(i) == b)
            .unwrap_or_else(|| panic!("Bourbaki vertex {b} out of range for {self}"))
    }

    /// Bonds `(i, j, C_ij, C_ji)`, 1-based, with `C_ij = <α_j, α_i^∨>`.
    fn bonds(self) -> Vec<(usize, usize, i64, i64)> {
        let n = self.rank;
        let chain = |len: usize| (1..len).map(|i| (i, i + 1, -1, -1)).collect::<Vec<_>>();
        match self.family {
            Family::A => chain(n),
            Family::B => {
                let mut b = chain(n - 1);
                b.push((n - 1, n, -1, -2));
                b
            }
            Family::C => {
                let mut b = chain(n - 1);
                b.push((n - 1, n, -2, -1));
                b
            }
            Family::D => {
                let mut b = chain(n - 1);
                b.push((n - 2, n, -1, -1));
                b
            }
            Family::E => {
                let mut b = chain(n - 1);
                let branch = n - 3;
                b.push((branch, n, -1, -1));
                b
            }
            Family::F => vec![(1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)],
            Family::G => vec![(1, 2, -3, -1)],
        }
    }

    pub fn cartan_matrix(self) -> CartanMatrix {
        let n = self.rank;
        let mut m = CartanMatrix::identity_times_two(n);
        for (i, j, cij, cji) in self.bonds() {
            m.set(i - 1, j - 1, cij);
            m.set(j - 1, i - 1, cji);
        }
        m
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnknownType(t.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(t.to_string()))?;
        SimpleType::new(family, rank)
    }
}

impl TryFrom<String> for SimpleType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SimpleType> for String {
    fn from(t: SimpleType) -> String {
        t.to_string()
    }
}

/// Square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    fn identity_times_two(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 2;
        }
        CartanMatrix { n, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n, "matrix must be square");
            entries.extend_from_slice(r);
        }
        CartanMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    /// Column `j` (0-based): the pairings of `α_{j+1}`.
    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    /// Principal submatrix on the given (0-based) indices.
    pub fn submatrix(&self, idx: &[usize]) -> CartanMatrix {
        let rows: Vec<Vec<i64>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| self.get(i, j)).collect())
            .collect();
        CartanMatrix::from_rows(&rows)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> i64 {
        let n = self.n;
        if n == 0 {
            return 1;
        }
        let mut a: Vec<Vec<i128>> = self
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(i128::from).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&r| a[r][k] != 0) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        i64::try_from(sign * a[n - 1][n - 1]).expect("determinant overflow")
    }

    /// `M · v`.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// Exact solution of `M x = b` over the rationals; `None` if singular.
    pub fn solve(&self, b: &[i64]) -> Option<Vec<Ratio<i64>>> {
        let n = self.n;
        let mut a: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| {
                let mut row: Vec<Ratio<i64>> = (0..n).map(|j| Ratio::from_integer(self.get(i, j))).collect();
                row.push(Ratio::from_integer(b[i]));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r][col] != Ratio::from_integer(0))?;
            a.swap(col, piv);
            let p = a[col][col];
            for x in a[col].iter_mut() {
                *x /= p;
            }
            let pivot_row = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != col && row[col] != Ratio::from_integer(0) {
                    let f = row[col];
                    for (x, v) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                        *x -= f * v;
                    }
                }
            }
        }
        Some(a.into_iter().map(|row| row[n]).collect())
    }
}

/// A root in simple-root coordinates: entry `i` is `[γ : α_{i+1}]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }
}

/// An integral weight given by its pairings `<μ, α_i^∨>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight(vec![0; rank])
    }

    /// Fundamental weight `ϖ_i` (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Weight {
        let mut w = vec![0; rank];
        w[i - 1] = 1;
        Weight(w)
    }

    pub fn pairings(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&p| p >= 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|p| p * k).collect())
    }

    /// Parse a comma-separated pairing list such as `0,0,1`.
    pub fn parse(s: &str) -> Result<Weight> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::MalformedWeight(s.to_string()));
        }
        t.split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|_| Error::MalformedWeight(s.to_string())))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

impl std::borrow::Borrow<[i64]> for Weight {
    fn borrow(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootLength {
    Long,
    Short,
}

/// Covering pair in `Δ⁺`: `positive_roots[upper] - positive_roots[lower] = α_label`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootEdge {
    pub upper: usize,
    pub lower: usize,
    pub label: usize,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    stype: SimpleType,
    cartan: CartanMatrix,
    /// `d_i = (α_i, α_i) / 2`, normalized so that short roots have `d = 1`.
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    index: HashMap<Root, usize>,
    highest_root: Root,
    coxeter: usize,
    dual_coxeter: usize,
    lengths: Vec<RootLength>,
}

impl RootSystem {
    /// Builds `Δ⁺` by height, admitting `γ + α_i` exactly when
    /// `<γ, α_i^∨> - p < 0`, `p` being the length of the descending
    /// `α_i`-string through `γ`.
    pub fn build(stype: SimpleType) -> RootSystem {
        let cartan = stype.cartan_matrix();
        let n = stype.rank();
        let symmetrizer = symmetrizer(&cartan);
        let dmax = *symmetrizer.iter().max().unwrap();
        let lengths = symmetrizer
            .iter()
            .map(|&d| if d == dmax { RootLength::Long } else { RootLength::Short })
            .collect();

        let mut positive_roots: Vec<Root> = Vec::new();
        let mut index: HashMap<Root, usize> = HashMap::new();
        let mut layer: BTreeSet<Root> = (0..n)
            .map(|i| {
                let mut c = vec![0; n];
                c[i] = 1;
                Root(c)
            })
            .collect();
        while !layer.is_empty() {
            for r in &layer {
                index.insert(r.clone(), positive_roots.len());
                positive_roots.push(r.clone());
            }
            let mut next = BTreeSet::new();
            for gamma in &layer {
                let pair = cartan.apply(&gamma.0);
                for i in 0..n {
                    let mut p = 0;
                    let mut down = gamma.0.clone();
                    loop {
                        down[i] -= 1;
                        if index.contains_key(&Root(down.clone())) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if pair[i] - p < 0 {
                        let mut up = gamma.0.clone();
                        up[i] += 1;
                        next.insert(Root(up));
                    }
                }
            }
            layer = next;
        }

        let highest_root = positive_roots.last().cloned().expect("nonempty root system");
        let coxeter = highest_root.height() as usize + 1;
        let coroot_sum: i64 = highest_root
            .0
            .iter()
            .zip(&symmetrizer)
            .map(|(&a, &d)| {
                assert_eq!((a * d) % dmax, 0, "non-integral coroot coordinate");
                a * d / dmax
            })
            .sum();
        let dual_coxeter = 1 + coroot_sum as usize;

        RootSystem {
            stype,
            cartan,
            symmetrizer,
            positive_roots,
            index,
            highest_root,
            coxeter,
            dual_coxeter,
            lengths,
        }
    }

    pub fn stype(&self) -> SimpleType {
        self.stype
    }

    pub fn rank(&self) -> usize {
        self.stype.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Sorted by (height, lexicographic coordinates).
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_positive_root(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest_root
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter
    }

    pub fn dual_coxeter_number(&self) -> usize {
        self.dual_coxeter
    }

    pub fn lengths(&self) -> &[RootLength] {
        &self.lengths
    }

    /// Length class of `α_i` (1-based).
    pub fn length(&self, i: usize) -> RootLength {
        self.lengths[i - 1]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut c = vec![0; self.rank()];
        c[i - 1] = 1;
        Root(c)
    }

    /// Every covering pair of the root order on `Δ⁺`, labeled by simple root.
    pub fn root_order_edges(&self) -> Vec<RootEdge> {
        let mut edges = Vec::new();
        for (u, gamma) in self.positive_roots.iter().enumerate() {
            for i in 0..self.rank() {
                let mut down = gamma.0.clone();
                down[i] -= 1;
                if let Some(&v) = self.index.get(&Root(down)) {
                    edges.push(RootEdge { upper: u, lower: v, label: i + 1 });
                }
            }
        }
        edges
    }

    pub fn root_to_weight(&self, r: &Root) -> Weight {
        Weight(self.cartan.apply(&r.0))
    }

    /// Inverse of [`RootSystem::root_to_weight`]; fails off the root lattice.
    pub fn weight_to_root(&self, w: &Weight) -> Result<Root> {
        self.weight_to_rational_coords(w)?
            .into_iter()
            .map(|x| {
                if x.is_integer() {
                    Ok(x.to_integer())
                } else {
                    Err(Error::NotInRootLattice(w.to_string()))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Root)
    }

    /// Coordinates of `w` in the simple-root basis, over the rationals.
    pub fn weight_to_rational_coords(&self, w: &Weight) -> Result<Vec<Ratio<i64>>> {
        if w.rank() != self.rank() {
            return Err(Error::WrongLength {
                token: w.to_string(),
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(self.cartan.solve(&w.0).expect("Cartan matrix is nonsingular"))
    }

    /// `(β, γ)` for roots in simple-root coordinates, short roots having
    /// squared length 2.
    pub fn inner(&self, beta: &Root, gamma: &Root) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if beta.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += beta.0[i] * gamma.0[j] * self.symmetrizer[i] * self.cartan.get(i, j);
            }
        }
        s
    }

    /// `<μ, γ^∨>` for a weight `μ` and a root `γ`.
    pub fn coroot_pairing(&self, mu: &Weight, gamma: &Root) -> Ratio<i64> {
        let num: i64 = (0..self.rank())
            .map(|j| 2 * gamma.0[j] * self.symmetrizer[j] * mu.0[j])
            .sum();
        Ratio::new(num, self.inner(gamma, gamma))
    }

    /// `<γ, θ^∨>` for a root `γ`.
    pub fn theta_pairing(&self, gamma: &Root) -> i64 {
        let theta = &self.highest_root;
        let two_inner = 2 * self.inner(gamma, theta);
        let norm = self.inner(theta, theta);
        assert_eq!(two_inner % norm, 0);
        two_inner / norm
    }
}

/// Integer `d` with `d_i C_ij = d_j C_ji`, smallest entry 1.
fn symmetrizer(c: &CartanMatrix) -> Vec<i64> {
    let n = c.size();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    d[0] = Some(Ratio::from_integer(1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && c.get(i, j) != 0 && d[j].is_none() {
                let di = d[i].unwrap();
                d[j] = Some(di * Ratio::new(c.get(i, j), c.get(j, i)));
                stack.push(j);
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let min = *d.iter().min().unwrap();
    d.into_iter()
        .map(|x| {
            let y = x / min;
            assert!(y.is_integer());
            y.to_integer()
        })
        .collect()
}

/// Determinant of the Cartan matrix of `stype`.
pub fn cartan_determinant(stype: SimpleType) -> i64 {
    stype.cartan_matrix().determinant()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn admissible_ranks() {
        for bad in ["A0", "B1", "C1", "D2", "D3", "E5", "E9", "F3", "G3"] {
            assert!(matches!(bad.parse::<SimpleType>(), Err(Error::InadmissibleRank(..))), "{bad}");
        }
        assert!(matches!("X3".parse::<SimpleType>(), Err(Error::UnknownType(_))));
        assert!(matches!("A".parse::<SimpleType>(), Err(Error::UnknownType(_))));
        assert_eq!(t("B2").cartan_matrix().rows(), vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(t("C2").cartan_matrix().rows(), vec![vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn a2_closure() {
        let rs = RootSystem::build(t("A2"));
        let roots: Vec<Vec<i64>> = rs.positive_roots().iter().map(|r| r.0.clone()).collect();
        assert_eq!(roots, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(rs.coxeter_number(), 3);
        assert_eq!(rs.root_order_edges().len(), 2);
    }

    #[test]
    fn e8_and_g2() {
        let e8 = RootSystem::build(t("E8"));
        assert_eq!(e8.positive_roots().len(), 120);
        assert_eq!(e8.coxeter_number(), 30);
        assert_eq!(e8.highest_root().height(), 29);
        assert_eq!(e8.root_order_edges().len(), 224);
        // [θ:α_4] = 5 with the branch node α_8 attached to α_5
        assert_eq!(e8.highest_root().0, vec![2, 3, 4, 5, 6, 4, 2, 3]);

        let g2 = RootSystem::build(t("G2"));
        assert_eq!(g2.positive_roots().len(), 6);
        assert_eq!(g2.highest_root().0, vec![3, 2]);
        assert_eq!(g2.coxeter_number(), 6);
        assert_eq!(g2.dual_coxeter_number(), 4);
        assert_eq!(g2.length(1), RootLength::Short);
    }

    #[test]
    fn f4_long_labels_have_dual_coxeter_edges() {
        let rs = RootSystem::build(t("F4"));
        assert_eq!(rs.dual_coxeter_number(), 9);
        assert_eq!(rs.highest_root().0, vec![2, 4, 3, 2]);
        let edges = rs.root_order_edges();
        for i in [3, 4] {
            assert_eq!(rs.length(i), RootLength::Long);
            assert_eq!(edges.iter().filter(|e| e.label == i).count(), 7);
        }
    }

    #[test]
    fn determinants() {
        for n in 1..=12 {
            assert_eq!(cartan_determinant(SimpleType::new(Family::A, n).unwrap()), n as i64 + 1);
        }
        for n in 4..=12 {
            assert_eq!(cartan_determinant(SimpleType::new(Family::D, n).unwrap()), 4);
        }
        assert_eq!(cartan_determinant(t("E6")), 3);
        assert_eq!(cartan_determinant(t("E7")), 2);
        assert_eq!(cartan_determinant(t("E8")), 1);
        assert_eq!(cartan_determinant(t("F4")), 1);
        assert_eq!(cartan_determinant(t("G2")), 1);
    }

    #[test]
    fn conversions() {
        let a2 = RootSystem::build(t("A2"));
        assert_eq!(a2.root_to_weight(&Root(vec![1, 0])).0, vec![2, -1]);
        // α_1 + α_2 = ε_1 = ϖ_1 in B2 (α_2 short)
        let b2 = RootSystem::build(t("B2"));
        assert_eq!(b2.root_to_weight(&Root(vec![1, 1])).0, vec![1, 0]);
        assert_eq!(b2.weight_to_root(&Weight(vec![1, 0])).unwrap().0, vec![1, 1]);
        assert!(matches!(
            a2.weight_to_root(&Weight(vec![1, 0])),
            Err(Error::NotInRootLattice(_))
        ));
        for st in SimpleType::all_with_exceptionals(6) {
            let rs = RootSystem::build(st);
            assert!(rs.root_to_weight(rs.highest_root()).is_dominant(), "{st}");
        }
    }

    #[test]
    fn bourbaki_alias_roundtrip() {
        for st in SimpleType::all_with_exceptionals(5) {
            for i in 1..=st.rank() {
                assert_eq!(st.from_bourbaki_index(st.bourbaki_index(i)), i);
            }
        }
        // branch nodes
        assert_eq!(t("E8").bourbaki_index(5), 4);
        assert_eq!(t("E7").bourbaki_index(4), 4);
        assert_eq!(t("E6").bourbaki_index(3), 4);
    }

    #[test]
    fn closure_is_idempotent() {
        for st in SimpleType::all_with_exceptionals(7) {
            let rs = RootSystem::build(st);
            let set: std::collections::HashSet<&Root> = rs.positive_roots().iter().collect();
            for gamma in rs.positive_roots() {
                let pair = rs.root_to_weight(gamma);
                for i in 0..rs.rank() {
                    let mut p = 0;
                    let mut down = gamma.0.clone();
                    loop {
                        down[i] -= 1;
                        if set.contains(&Root(down.clone())) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let mut up = gamma.0.clone();
                    up[i] += 1;
                    let admitted = pair.0[i] - p < 0;
                    assert_eq!(admitted, set.contains(&Root(up)), "{st} {gamma:?} +α{}", i + 1);
                }
            }
        }
    }
}
