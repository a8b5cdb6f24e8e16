//! Howe's list of weight-multiplicity-free irreducible representations of
//! simple Lie algebras, with the closed forms of the edge table.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::root_system::{Family, RootSystem, SimpleType, Weight};
use crate::weight_poset::{fmt_ratio, irrep_weight_table, simple_steps, HasseStats, IrrepLabel, WeightPoset, WeightTable};

/// Largest dimension admitted for the `mϖ_1`, `mϖ_n` rows.
pub const SYMMETRIC_DIM_CAP: u128 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub label: IrrepLabel,
    /// Row of the edge table, e.g. `A_n ϖ_m`.
    pub row: String,
    pub dim: u128,
    pub edges: u128,
    /// Last column of the edge table as printed.
    #[serde(with = "ratio_string")]
    pub printed_ratio: Ratio<i64>,
    /// Rank of the smallest simple algebra among the poset's presentations
    /// used as a Levi factor; bounds the classification scope.
    pub rank_hint: usize,
}

mod ratio_string {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_ratio(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<i64>, D::Error> {
        let s = String::deserialize(d)?;
        crate::weight_poset::parse_ratio(&s).ok_or_else(|| serde::de::Error::custom(format!("bad ratio `{s}`")))
    }
}

impl CatalogEntry {
    pub fn stype(&self) -> SimpleType {
        self.label.factors()[0].stype
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.label.factors()[0].highest_weight
    }

    pub fn weights(&self) -> Vec<Weight> {
        self.weight_table().to_weights()
    }

    pub fn weight_table(&self) -> WeightTable {
        let rs = RootSystem::build(self.stype());
        irrep_weight_table(&rs, self.highest_weight()).expect("catalog weights are dominant")
    }

    pub fn poset(&self) -> WeightPoset {
        self.label.poset().expect("catalog weights are dominant")
    }

    pub fn stats(&self) -> HasseStats {
        let rs = RootSystem::build(self.stype());
        HasseStats::from_table(&self.weight_table(), &simple_steps(&rs))
    }

    /// `#ℰ / dim` from the closed forms.
    pub fn closed_ratio(&self) -> Ratio<i64> {
        Ratio::new(self.edges as i64, self.dim as i64)
    }
}

pub fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn entry(t: SimpleType, w: Weight, row: &str, dim: u128, edges: u128, ratio: Ratio<i64>, hint: usize) -> CatalogEntry {
    CatalogEntry {
        label: IrrepLabel::simple(t, w),
        row: row.into(),
        dim,
        edges,
        printed_ratio: ratio,
        rank_hint: hint,
    }
}

fn ty(f: Family, n: usize) -> SimpleType {
    SimpleType::new(f, n).expect("admissible")
}

/// Every row of the edge table instantiated for ranks up to `max_rank`;
/// the exceptional rows are always included. A label occurs once.
pub fn howe_catalog(max_rank: usize) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        let a = ty(Family::A, n);
        let nn = n as u128;
        for m in 1..=n {
            let mm = m as u128;
            out.push(entry(
                a,
                Weight::fundamental(n, m),
                "A_n ϖ_m",
                binom(nn + 1, mm),
                mm * binom(nn, mm),
                Ratio::new((m * (n + 1 - m)) as i64, (n + 1) as i64),
                n,
            ));
        }
        for m in 2u128.. {
            let dim = binom(nn + m, m);
            if dim > SYMMETRIC_DIM_CAP {
                break;
            }
            let edges = m * binom(nn + m - 1, m);
            let ratio = Ratio::new((nn * m) as i64, (nn + m) as i64);
            let hint = n + m as usize - 1;
            out.push(entry(a, Weight::fundamental(n, 1).scaled(m as i64), "A_n mϖ_1", dim, edges, ratio, hint));
            if n > 1 {
                out.push(entry(a, Weight::fundamental(n, n).scaled(m as i64), "A_n mϖ_n", dim, edges, ratio, hint));
            }
        }
        if n >= 2 {
            let b = ty(Family::B, n);
            out.push(entry(
                b,
                Weight::fundamental(n, n),
                "B_n ϖ_n",
                1 << n,
                (nn + 1) << (n - 2),
                Ratio::new(n as i64 + 1, 4),
                n,
            ));
            out.push(entry(
                b,
                Weight::fundamental(n, 1),
                "B_n ϖ_1",
                2 * nn + 1,
                2 * nn,
                Ratio::from_integer(1) - Ratio::new(1, 2 * n as i64 + 1),
                n,
            ));
            out.push(entry(
                ty(Family::C, n),
                Weight::fundamental(n, 1),
                "C_n ϖ_1",
                2 * nn,
                2 * nn - 1,
                Ratio::from_integer(1) - Ratio::new(1, 2 * n as i64),
                n,
            ));
        }
        if n == 3 {
            out.push(entry(ty(Family::C, 3), Weight::fundamental(3, 3), "C_3 ϖ_3", 14, 17, Ratio::new(17, 14), 3));
        }
        if n >= 4 {
            let d = ty(Family::D, n);
            out.push(entry(d, Weight::fundamental(n, 1), "D_n ϖ_1", 2 * nn, 2 * nn, Ratio::from_integer(1), n));
            for k in [n - 1, n] {
                out.push(entry(
                    d,
                    Weight::fundamental(n, k),
                    if k == n { "D_n ϖ_n" } else { "D_n ϖ_{n-1}" },
                    1 << (n - 1),
                    nn << (n - 3),
                    Ratio::new(n as i64, 4),
                    n,
                ));
            }
        }
    }
    out.push(entry(ty(Family::E, 6), Weight::fundamental(6, 1), "E_6 ϖ_1", 27, 36, Ratio::new(4, 3), 6));
    out.push(entry(ty(Family::E, 7), Weight::fundamental(7, 1), "E_7 ϖ_1", 56, 84, Ratio::new(3, 2), 7));
    out.push(entry(ty(Family::G, 2), Weight::fundamental(2, 1), "G_2 ϖ_1", 7, 6, Ratio::new(7, 6), 2));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn rows_present() {
        let cat = howe_catalog(12);
        let labels: HashSet<String> = cat.iter().map(|e| e.label.to_string()).collect();
        assert_eq!(labels.len(), cat.len());
        for l in ["C3:0,0,1", "E6:1,0,0,0,0,0", "E7:1,0,0,0,0,0,0", "G2:1,0", "D12:0,0,0,0,0,0,0,0,0,0,0,1"] {
            assert!(labels.contains(l), "{l}");
        }
        assert!(cat.iter().all(|e| e.row != "A_n mϖ_1" || e.dim <= SYMMETRIC_DIM_CAP));
        assert!(labels.contains("A1:9999"));
        assert!(!labels.contains("A1:10000"));
    }

    #[test]
    fn small_rows_match_closed_forms() {
        for e in howe_catalog(5).iter().filter(|e| e.dim <= 500) {
            let s = e.stats();
            assert_eq!((s.elements as u128, s.edges as u128), (e.dim, e.edges), "{}", e.label);
        }
    }

    #[test]
    fn g2_printed_ratio_differs() {
        let cat = howe_catalog(2);
        let g2 = cat.iter().find(|e| e.row == "G_2 ϖ_1").unwrap();
        assert_eq!(g2.closed_ratio(), Ratio::new(6, 7));
        assert_ne!(g2.printed_ratio, g2.closed_ratio());
    }

    #[test]
    fn entry_json_round_trip() {
        let e = &howe_catalog(3)[0];
        let s = serde_json::to_string(e).unwrap();
        assert_eq!(&serde_json::from_str::<CatalogEntry>(&s).unwrap(), e);
    }
}
