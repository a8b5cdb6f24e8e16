use std::collections::BTreeSet;

use proptest::prelude::*;
use wmfposet::catalog::howe_catalog;
use wmfposet::weight_poset::{
    hasse_edges, irrep_weights, product_steps, product_weights, simple_steps, weyl_dimension, HasseStats, WeightTable,
};
use wmfposet::{CoveringPolynomial, Direction, IrrepLabel, RootSystem, SimpleType, Weight};

fn small_type() -> impl Strategy<Value = SimpleType> {
    prop::sample::select(vec!["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"])
        .prop_map(|s| s.parse().unwrap())
}

fn dominant(t: SimpleType) -> impl Strategy<Value = (SimpleType, Weight)> {
    prop::collection::vec(0i64..3, t.rank()).prop_map(move |v| (t, Weight(v)))
}

fn small_catalog() -> Vec<IrrepLabel> {
    howe_catalog(3)
        .into_iter()
        .filter(|e| e.dim <= 40)
        .map(|e| e.label)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_is_saturated((t, lambda) in small_type().prop_flat_map(dominant)) {
        let rs = RootSystem::build(t);
        prop_assume!(weyl_dimension(&rs, &lambda).unwrap() <= 3000);
        let ws = irrep_weights(&rs, &lambda).unwrap();
        let set: BTreeSet<Weight> = ws.iter().cloned().collect();
        prop_assert_eq!(set.len(), ws.len());
        prop_assert!(set.contains(&lambda));
        for mu in &ws {
            for i in 0..rs.rank() {
                let k = mu.0[i];
                let col = rs.cartan().column(i);
                // the α_i-string through μ is symmetric about the wall
                for j in 1..=k.abs() {
                    let sign = if k > 0 { -1 } else { 1 };
                    let nu = Weight(mu.0.iter().zip(&col).map(|(a, c)| a + sign * j * c).collect());
                    prop_assert!(set.contains(&nu), "{} missing from {}", nu, mu);
                }
            }
        }
        // closing a dominant member adds nothing
        for mu in ws.iter().filter(|m| m.is_dominant()) {
            for nu in irrep_weights(&rs, mu).unwrap() {
                prop_assert!(set.contains(&nu));
            }
        }
    }

    #[test]
    fn hashed_edges_match_brute_force(
        rows in prop::collection::btree_set(prop::collection::vec(-3i64..4, 3), 1..40),
        steps in prop::collection::vec(prop::collection::vec(-2i64..3, 3), 1..4),
    ) {
        let ws: Vec<Weight> = rows.into_iter().map(Weight).collect();
        let steps: Vec<(usize, Vec<i64>)> = steps.into_iter().enumerate().map(|(i, s)| (i + 1, s)).collect();
        let got: BTreeSet<(usize, usize, usize)> =
            hasse_edges(&ws, &steps).into_iter().map(|e| (e.upper, e.lower, e.label)).collect();
        let mut want = BTreeSet::new();
        for (u, a) in ws.iter().enumerate() {
            for (v, b) in ws.iter().enumerate() {
                for (l, s) in &steps {
                    if a.0.iter().zip(&b.0).zip(s).all(|((x, y), z)| x - y == *z) {
                        want.insert((u, v, *l));
                    }
                }
            }
        }
        prop_assert_eq!(got, want);
    }

    #[test]
    fn weight_text_round_trip(v in prop::collection::vec(-50i64..50, 1..9)) {
        let w = Weight(v);
        prop_assert_eq!(Weight::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn label_round_trips(picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        let cat = small_catalog();
        let factors = picks.iter().flat_map(|i| cat[i.index(cat.len())].factors().to_vec()).collect();
        let label = IrrepLabel(factors);
        prop_assert_eq!(&IrrepLabel::parse(&label.to_string()).unwrap(), &label);
        let json = serde_json::to_string(&label).unwrap();
        prop_assert_eq!(&serde_json::from_str::<IrrepLabel>(&json).unwrap(), &label);
    }

    #[test]
    fn product_invariants(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let cat = small_catalog();
        let (a, b) = (&cat[i.index(cat.len())], &cat[j.index(cat.len())]);
        let (pa, pb) = (a.poset().unwrap(), b.poset().unwrap());
        let prod = pa.cartesian_product(&pb);
        prop_assert_eq!(prod.len(), pa.len() * pb.len());
        prop_assert_eq!(prod.edge_count(), pa.len() * pb.edge_count() + pb.len() * pa.edge_count());
        prop_assert_eq!(
            prod.covering_polynomial(Direction::Upper),
            pa.covering_polynomial(Direction::Upper).mul(&pb.covering_polynomial(Direction::Upper))
        );
        prop_assert_eq!(prod.ratio(), pa.ratio() + pb.ratio());

        let fa = &a.factors()[0];
        let fb = &b.factors()[0];
        let (ra, rb) = (RootSystem::build(fa.stype), RootSystem::build(fb.stype));
        let wa = irrep_weights(&ra, &fa.highest_weight).unwrap();
        let wb = irrep_weights(&rb, &fb.highest_weight).unwrap();
        let steps = product_steps(&[&simple_steps(&ra), &simple_steps(&rb)]);
        let flat = WeightTable::product(&WeightTable::from_weights(&wa), &WeightTable::from_weights(&wb));
        prop_assert_eq!(flat.to_weights(), product_weights(&wa, &wb));
        prop_assert_eq!(HasseStats::from_table(&flat, &steps), prod.stats());

        let joint = IrrepLabel(vec![fa.clone(), fb.clone()]).poset().unwrap();
        prop_assert_eq!(joint, prod);
    }

    #[test]
    fn polynomial_product_rule(
        a in prop::collection::vec(0u64..20, 1..5),
        b in prop::collection::vec(0u64..20, 1..5),
    ) {
        let (p, q) = (CoveringPolynomial::new(a), CoveringPolynomial::new(b));
        let pq = p.mul(&q);
        prop_assert_eq!(pq.value_at_one(), p.value_at_one() * q.value_at_one());
        prop_assert_eq!(
            pq.derivative_at_one(),
            p.derivative_at_one() * q.value_at_one() + p.value_at_one() * q.derivative_at_one()
        );
    }
}

#[test]
fn wmf_catalog_matches_weyl() {
    for e in howe_catalog(4).into_iter().filter(|e| e.dim <= 500) {
        let f = &e.label.factors()[0];
        let rs = RootSystem::build(f.stype);
        assert_eq!(weyl_dimension(&rs, &f.highest_weight).unwrap(), e.dim, "{}", e.label);
        assert_eq!(irrep_weights(&rs, &f.highest_weight).unwrap().len() as u128, e.dim);
    }
}
