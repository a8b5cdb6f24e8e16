//! Combinatorial models of small weight posets and the explicit bijections
//! between them.
//!
//! Subsets and compositions are read in the `ε`-basis of `gl_{n+1}`; sign
//! vectors `σ ∈ {±1}^n` stand for `Σ σ_i ε_i / 2`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::iso::Digraph;
use crate::root_system::{Family, SimpleType, Weight};
use crate::weight_poset::{IrrepLabel, WeightPoset};

/// A family of weight posets with an explicit description of its elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Model {
    /// `(A_n, ϖ_m)`: `m`-subsets of `[n+1]`.
    Subsets { n: usize, m: usize },
    /// `(A_n, mϖ_1)`: compositions of `m` into `n+1` parts.
    Compositions { n: usize, m: usize },
    /// `(B_n, ϖ_n)`: all sign vectors.
    BSpin { n: usize },
    /// `(D_n, ϖ_n)`: sign vectors with an even number of minus signs.
    DSpin { n: usize },
    /// `(C_n, ϖ_1)`: `±ε_i`.
    CVector { n: usize },
    /// `(B_n, ϖ_1)`: `±ε_i` and `0`.
    BVector { n: usize },
}

impl Model {
    pub fn stype(self) -> Result<SimpleType> {
        match self {
            Model::Subsets { n, .. } | Model::Compositions { n, .. } => SimpleType::new(Family::A, n),
            Model::BSpin { n } | Model::BVector { n } => SimpleType::new(Family::B, n),
            Model::DSpin { n } => SimpleType::new(Family::D, n),
            Model::CVector { n } => SimpleType::new(Family::C, n),
        }
    }

    pub fn highest_weight(self) -> Result<Weight> {
        let st = self.stype()?;
        let r = st.rank();
        Ok(match self {
            Model::Subsets { m, .. } => Weight::fundamental(r, m),
            Model::Compositions { m, .. } => Weight::fundamental(r, 1).scaled(m as i64),
            Model::BSpin { .. } | Model::DSpin { .. } => Weight::fundamental(r, r),
            Model::CVector { .. } | Model::BVector { .. } => Weight::fundamental(r, 1),
        })
    }

    pub fn label(self) -> Result<IrrepLabel> {
        Ok(IrrepLabel::simple(self.stype()?, self.highest_weight()?))
    }

    /// The weights of the model, as pairings with simple coroots.
    pub fn weights(self) -> Vec<Weight> {
        match self {
            Model::Subsets { n, m } => subsets(n + 1, m).iter().map(|s| subset_weight(n, s)).collect(),
            Model::Compositions { n, m } => compositions(m, n + 1).iter().map(|c| composition_weight(c)).collect(),
            Model::BSpin { n } => sign_vectors(n).iter().map(|s| b_spin_weight(s)).collect(),
            Model::DSpin { n } => sign_vectors(n)
                .into_iter()
                .filter(|s| s.iter().filter(|&&x| x < 0).count() % 2 == 0)
                .map(|s| d_spin_weight(&s))
                .collect(),
            Model::CVector { n } => signed_units(n).iter().map(|x| c_vector_weight(x)).collect(),
            Model::BVector { n } => {
                let mut v: Vec<Weight> = signed_units(n).iter().map(|x| b_vector_weight(x)).collect();
                v.push(Weight::zero(n));
                v
            }
        }
    }
}

/// All `m`-subsets of `{1..=total}`, each strictly increasing.
pub fn subsets(total: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, total: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..=total {
            if total - i + 1 < m - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, total, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, total, m, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `m` into `parts` non-negative parts.
pub fn compositions(m: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![m]];
    }
    let mut out = Vec::new();
    for first in (0..=m).rev() {
        for mut rest in compositions(m - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn sign_vectors(n: usize) -> Vec<Vec<i64>> {
    (0..1u64 << n)
        .map(|bits| (0..n).map(|i| if bits >> i & 1 == 1 { -1 } else { 1 }).collect())
        .collect()
}

fn signed_units(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for s in [1, -1] {
            let mut x = vec![0; n];
            x[i] = s;
            out.push(x);
        }
    }
    out
}

/// Pairings of `Σ_{i∈S} ε_i` for `A_n`.
pub fn subset_weight(n: usize, s: &[usize]) -> Weight {
    let ind = |i: usize| s.contains(&i) as i64;
    Weight((1..=n).map(|i| ind(i) - ind(i + 1)).collect())
}

/// Pairings of `Σ j_k ε_k` for `A_n`, `n + 1 = j.len()`.
pub fn composition_weight(j: &[usize]) -> Weight {
    Weight(j.windows(2).map(|w| w[0] as i64 - w[1] as i64).collect())
}

pub fn b_spin_weight(s: &[i64]) -> Weight {
    let n = s.len();
    let mut p: Vec<i64> = s.windows(2).map(|w| (w[0] - w[1]) / 2).collect();
    p.push(s[n - 1]);
    Weight(p)
}

pub fn d_spin_weight(s: &[i64]) -> Weight {
    let n = s.len();
    let mut p: Vec<i64> = s.windows(2).map(|w| (w[0] - w[1]) / 2).collect();
    p.push((s[n - 2] + s[n - 1]) / 2);
    Weight(p)
}

fn c_vector_weight(x: &[i64]) -> Weight {
    let n = x.len();
    let mut p: Vec<i64> = x.windows(2).map(|w| w[0] - w[1]).collect();
    p.push(x[n - 1]);
    Weight(p)
}

fn b_vector_weight(x: &[i64]) -> Weight {
    let n = x.len();
    let mut p: Vec<i64> = x.windows(2).map(|w| w[0] - w[1]).collect();
    p.push(2 * x[n - 1]);
    Weight(p)
}

/// `(i_1,…,i_n) ↦ (n+m−i_n, i_n−i_{n−1}−1, …, i_2−i_1−1, i_1−1)`, carrying
/// `n`-subsets of `[n+m]` to compositions of `m` into `n+1` parts.
pub fn a_duality(m: usize, seq: &[usize]) -> Result<Vec<usize>> {
    let n = seq.len();
    let bad = || Error::MalformedSequence(format!("{seq:?}"));
    if n == 0 || seq[0] < 1 || seq[n - 1] > n + m || seq.windows(2).any(|w| w[0] >= w[1]) {
        return Err(bad());
    }
    let mut out = Vec::with_capacity(n + 1);
    out.push(n + m - seq[n - 1]);
    for k in (1..n).rev() {
        out.push(seq[k] - seq[k - 1] - 1);
    }
    out.push(seq[0] - 1);
    Ok(out)
}

/// Appends the sign that makes the number of minus signs even.
pub fn b_to_d(signs: &[i64]) -> Result<Vec<i64>> {
    if signs.is_empty() || signs.iter().any(|&s| s != 1 && s != -1) {
        return Err(Error::MalformedSequence(format!("{signs:?}")));
    }
    let minus = signs.iter().filter(|&&s| s < 0).count();
    let mut out = signs.to_vec();
    out.push(if minus % 2 == 0 { 1 } else { -1 });
    Ok(out)
}

/// `S ↦ {total+1−i : i ∉ S}`, an order isomorphism between the subset
/// models of `ϖ_k` and `ϖ_{total−k}` of `A_{total−1}`.
pub fn complement_reflection(total: usize, s: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = (1..=total).filter(|i| !s.contains(i)).map(|i| total + 1 - i).collect();
    out.sort_unstable();
    out
}

/// Checks that `f` is a bijection `elements(p) → elements(q)` mapping the
/// Hasse diagram of `p` onto that of `q`.
pub fn certify_map(p: &WeightPoset, q: &WeightPoset, f: impl Fn(&Weight) -> Option<Weight>) -> bool {
    let index: HashMap<&Weight, usize> = q.elements().iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut map = Vec::with_capacity(p.len());
    for w in p.elements() {
        match f(w).and_then(|img| index.get(&img).copied()) {
            Some(i) => map.push(i),
            None => return false,
        }
    }
    crate::iso::is_isomorphism(&Digraph::from(p), &Digraph::from(q), &map)
}

/// Exhaustively certifies `a_duality` between `(A_{n+m−1}, ϖ_n)` and
/// `(A_n, mϖ_1)`.
pub fn certify_a_duality(n: usize, m: usize) -> Result<bool> {
    let p = Model::Subsets { n: n + m - 1, m: n }.label()?.poset()?;
    let q = Model::Compositions { n, m }.label()?.poset()?;
    let table: HashMap<Weight, Weight> = subsets(n + m, n)
        .into_iter()
        .map(|s| {
            let c = a_duality(m, &s)?;
            Ok((subset_weight(n + m - 1, &s), composition_weight(&c)))
        })
        .collect::<Result<_>>()?;
    Ok(certify_map(&p, &q, |w| table.get(w).cloned()))
}

/// Exhaustively certifies `complement_reflection` between `(A_{n+m−1}, ϖ_n)`
/// and `(A_{n+m−1}, ϖ_m)`.
pub fn certify_complement(n: usize, m: usize) -> Result<bool> {
    let p = Model::Subsets { n: n + m - 1, m: n }.label()?.poset()?;
    let q = Model::Subsets { n: n + m - 1, m }.label()?.poset()?;
    let table: HashMap<Weight, Weight> = subsets(n + m, n)
        .into_iter()
        .map(|s| {
            let t = complement_reflection(n + m, &s);
            (subset_weight(n + m - 1, &s), subset_weight(n + m - 1, &t))
        })
        .collect();
    Ok(certify_map(&p, &q, |w| table.get(w).cloned()))
}

/// Exhaustively certifies `b_to_d` between `(B_n, ϖ_n)` and `(D_{n+1}, ϖ_{n+1})`.
pub fn certify_b_to_d(n: usize) -> Result<bool> {
    let p = Model::BSpin { n }.label()?.poset()?;
    let q = Model::DSpin { n: n + 1 }.label()?.poset()?;
    let table: HashMap<Weight, Weight> = sign_vectors(n)
        .into_iter()
        .map(|s| {
            let t = b_to_d(&s)?;
            Ok((b_spin_weight(&s), d_spin_weight(&t)))
        })
        .collect::<Result<_>>()?;
    Ok(certify_map(&p, &q, |w| table.get(w).cloned()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::RootSystem;
    use crate::weight_poset::irrep_weights;
    use std::collections::BTreeSet;

    #[test]
    fn duality_examples() {
        assert_eq!(a_duality(2, &[1, 3]).unwrap(), vec![1, 1, 0]);
        assert_eq!(a_duality(4, &[1, 2, 3]).unwrap(), vec![4, 0, 0, 0]);
        assert!(a_duality(2, &[3, 1]).is_err());
        assert!(a_duality(2, &[1, 5]).is_err());
        assert!(a_duality(2, &[]).is_err());
    }

    #[test]
    fn b_to_d_parity() {
        assert_eq!(b_to_d(&[1, 1, 1]).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(b_to_d(&[1, -1, 1]).unwrap(), vec![1, -1, 1, -1]);
        assert!(b_to_d(&[1, 0]).is_err());
    }

    #[test]
    fn models_match_generic_enumeration() {
        let models = [
            Model::Subsets { n: 5, m: 2 },
            Model::Compositions { n: 3, m: 3 },
            Model::BSpin { n: 4 },
            Model::DSpin { n: 5 },
            Model::CVector { n: 4 },
            Model::BVector { n: 3 },
        ];
        for model in models {
            let rs = RootSystem::build(model.stype().unwrap());
            let generic: BTreeSet<Weight> = irrep_weights(&rs, &model.highest_weight().unwrap())
                .unwrap()
                .into_iter()
                .collect();
            let listed = model.weights();
            let set: BTreeSet<Weight> = listed.iter().cloned().collect();
            assert_eq!(set.len(), listed.len(), "{model:?}");
            assert_eq!(set, generic, "{model:?}");
        }
    }

    #[test]
    fn certified_maps() {
        assert!(certify_a_duality(2, 2).unwrap());
        assert!(certify_a_duality(3, 4).unwrap());
        assert!(certify_complement(3, 4).unwrap());
        assert!(certify_b_to_d(4).unwrap());
    }
}
