//! Isomorphism of unlabeled Hasse digraphs.
//!
//! Colour refinement seeded with (level from the top, out-degree, in-degree),
//! then individualization with backtracking to produce an explicit vertex
//! bijection. Any bijection returned is checked edge by edge.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::weight_poset::WeightPoset;

/// A directed graph on `0..n` with edges pointing downwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Digraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Digraph {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            out[u].push(v);
            inn[v].push(u);
            edge_count += 1;
        }
        for l in out.iter_mut().chain(inn.iter_mut()) {
            l.sort_unstable();
        }
        Digraph { out, inn, edge_count }
    }

    pub fn len(&self) -> usize {
        self.out.len()
    }

    pub fn is_empty(&self) -> bool {
        self.out.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let pos: HashMap<usize, usize> = vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let edges = self
            .edges()
            .filter_map(|(u, v)| Some((*pos.get(&u)?, *pos.get(&v)?)))
            .collect::<Vec<_>>();
        Digraph::new(vertices.len(), edges)
    }

    /// Longest path from a source (a vertex without in-edges).
    pub fn levels(&self) -> Vec<usize> {
        let n = self.len();
        let mut indeg: Vec<usize> = self.inn.iter().map(|l| l.len()).collect();
        let mut level = vec![0; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        while let Some(u) = queue.pop_front() {
            for &v in &self.out[u] {
                level[v] = level[v].max(level[u] + 1);
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        level
    }

    fn initial_colors(&self) -> Vec<u64> {
        let levels = self.levels();
        (0..self.len())
            .map(|v| hash_of(&(levels[v], self.out[v].len(), self.inn[v].len())))
            .collect()
    }

    /// One refinement round; colours are graph invariants.
    fn refine_once(&self, colors: &[u64]) -> Vec<u64> {
        let mut outs = Vec::new();
        let mut ins = Vec::new();
        (0..self.len())
            .map(|v| {
                outs.clear();
                outs.extend(self.out[v].iter().map(|&w| colors[w]));
                outs.sort_unstable();
                ins.clear();
                ins.extend(self.inn[v].iter().map(|&w| colors[w]));
                ins.sort_unstable();
                hash_of(&(colors[v], &outs, &ins))
            })
            .collect()
    }

    /// Iterates refinement until the number of colour classes stops growing.
    fn refine(&self, mut colors: Vec<u64>) -> Vec<u64> {
        let mut classes = class_count(&colors);
        loop {
            let next = self.refine_once(&colors);
            let c = class_count(&next);
            colors = next;
            if c <= classes {
                return colors;
            }
            classes = c;
        }
    }

    pub fn stable_colors(&self) -> Vec<u64> {
        self.refine(self.initial_colors())
    }

    /// Isomorphism invariant used as a bucketing key.
    pub fn signature(&self) -> Signature {
        let mut colors = self.stable_colors();
        colors.sort_unstable();
        Signature {
            vertices: self.len(),
            edges: self.edge_count,
            colors,
        }
    }
}

impl From<&WeightPoset> for Digraph {
    fn from(p: &WeightPoset) -> Digraph {
        Digraph::new(p.len(), p.edges().iter().map(|e| (e.upper, e.lower)))
    }
}

/// Vertex count, edge count and the sorted multiset of stable colours.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub vertices: usize,
    pub edges: usize,
    pub colors: Vec<u64>,
}

fn hash_of<T: Hash>(t: &T) -> u64 {
    let mut h = DefaultHasher::new();
    t.hash(&mut h);
    h.finish()
}

fn class_count(colors: &[u64]) -> usize {
    colors.iter().collect::<HashSet<_>>().len()
}

fn histogram(colors: &[u64]) -> HashMap<u64, usize> {
    let mut m = HashMap::new();
    for &c in colors {
        *m.entry(c).or_insert(0) += 1;
    }
    m
}

/// Returns `map` with `map[u]` the image in `b` of vertex `u` of `a`, if the
/// digraphs are isomorphic.
pub fn find_isomorphism(a: &Digraph, b: &Digraph) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.edge_count() != b.edge_count() {
        return None;
    }
    let ca = a.stable_colors();
    let cb = b.stable_colors();
    if histogram(&ca) != histogram(&cb) {
        return None;
    }
    let map = search(a, b, ca, cb, 0)?;
    debug_assert!(is_isomorphism(a, b, &map));
    Some(map)
}

pub fn are_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Convenience wrapper on weight posets.
pub fn poset_isomorphism(p: &WeightPoset, q: &WeightPoset) -> Option<Vec<usize>> {
    find_isomorphism(&Digraph::from(p), &Digraph::from(q))
}

/// True iff `map` is a bijection carrying the edges of `a` onto those of `b`.
pub fn is_isomorphism(a: &Digraph, b: &Digraph, map: &[usize]) -> bool {
    if a.len() != b.len() || map.len() != a.len() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut hit = vec![false; b.len()];
    for &x in map {
        if x >= b.len() || std::mem::replace(&mut hit[x], true) {
            return false;
        }
    }
    a.edges().all(|(u, v)| b.has_edge(map[u], map[v]))
}

fn search(a: &Digraph, b: &Digraph, ca: Vec<u64>, cb: Vec<u64>, depth: u64) -> Option<Vec<usize>> {
    let hist = histogram(&ca);
    // smallest non-singleton class, ties broken by colour value
    let target = hist
        .iter()
        .filter(|(_, &k)| k > 1)
        .min_by_key(|(&c, &k)| (k, c))
        .map(|(&c, _)| c);
    let Some(color) = target else {
        let pos: HashMap<u64, usize> = cb.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let map: Vec<usize> = ca.iter().map(|c| pos[c]).collect();
        return is_isomorphism(a, b, &map).then_some(map);
    };
    let v = ca.iter().position(|&c| c == color).unwrap();
    let mark = hash_of(&(color, u64::MAX - depth));
    let mut fa = ca.clone();
    fa[v] = mark;
    let fa = a.refine(fa);
    let ha = histogram(&fa);
    for w in (0..b.len()).filter(|&w| cb[w] == color) {
        let mut fb = cb.clone();
        fb[w] = mark;
        let fb = b.refine(fb);
        if histogram(&fb) != ha {
            continue;
        }
        if let Some(map) = search(a, b, fa.clone(), fb, depth + 1) {
            return Some(map);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight_poset::IrrepLabel;

    fn g(spec: &str) -> Digraph {
        Digraph::from(&IrrepLabel::parse(spec).unwrap().poset().unwrap())
    }

    fn chain(n: usize) -> Digraph {
        Digraph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    #[test]
    fn spin_b_vs_d() {
        let a = g("B4:0,0,0,1");
        let b = g("D5:0,0,0,0,1");
        let map = find_isomorphism(&a, &b).unwrap();
        assert!(is_isomorphism(&a, &b, &map));
    }

    #[test]
    fn kind_a() {
        assert!(are_isomorphic(&g("A5:0,0,1,0,0"), &g("A3:3,0,0")));
        assert!(are_isomorphic(&g("A3:3,0,0"), &g("A3:0,0,3")));
    }

    #[test]
    fn chain_vs_diamond() {
        let d4 = g("D4:1,0,0,0");
        let levels = d4.levels();
        let top: Vec<usize> = (0..d4.len()).filter(|&v| levels[v] < 4).collect();
        let sub = d4.induced(&top);
        assert_eq!(sub.len(), 5);
        assert!(!are_isomorphic(&chain(5), &sub));
    }

    #[test]
    fn non_isomorphic_same_counts() {
        // two posets with 4 vertices and 3 edges
        let star = Digraph::new(4, [(0, 1), (0, 2), (0, 3)]);
        let path = chain(4);
        assert!(!are_isomorphic(&star, &path));
        assert_ne!(star.signature(), path.signature());
    }

    #[test]
    fn reversed_direction_matters() {
        let down = Digraph::new(3, [(0, 1), (0, 2)]);
        let up = Digraph::new(3, [(1, 0), (2, 0)]);
        assert!(!are_isomorphic(&down, &up));
    }

    #[test]
    fn symmetric_graph_backtracks() {
        // boolean lattice of rank 3, every vertex at a level is equivalent
        let cube = g("A1:1xA1:1xA1:1");
        let perm: Vec<usize> = (0..8).rev().collect();
        let edges: Vec<(usize, usize)> = cube.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        let shuffled = Digraph::new(8, edges);
        let map = find_isomorphism(&cube, &shuffled).unwrap();
        assert!(is_isomorphism(&cube, &shuffled, &map));
    }

    #[test]
    fn witness_checker_rejects_bad_maps() {
        let a = chain(3);
        assert!(is_isomorphism(&a, &a, &[0, 1, 2]));
        assert!(!is_isomorphism(&a, &a, &[0, 0, 2]));
        assert!(!is_isomorphism(&a, &a, &[2, 1, 0]));
    }
}
