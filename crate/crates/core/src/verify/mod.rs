//! Bounded exhaustive verification suites.
//!
//! Each suite returns a [`VerificationReport`] listing every instance it
//! checked. Suites are deterministic: running one twice yields identical
//! reports.

mod classification;
mod grading_suites;
mod posets;
mod roots;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::catalog::{howe_catalog, CatalogEntry};
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::root_system::SimpleType;
use crate::weight_poset::HasseStats;

pub use classification::{candidates, first_list, ratio_classification, Candidate, FirstList, FirstListMember};
pub use grading_suites::classical_defect_formulas;
pub use posets::reproduce_table1;

/// Rank caps of a verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scope {
    /// Cap for the classical series; exceptional types are always included.
    pub max_rank: usize,
}

impl Default for Scope {
    fn default() -> Self {
        Scope { max_rank: 12 }
    }
}

impl Scope {
    pub fn new(max_rank: usize) -> Scope {
        Scope { max_rank }
    }

    /// `min(cap, max_rank)`.
    pub fn capped(&self, cap: usize) -> usize {
        self.max_rank.min(cap)
    }
}

/// Suite identifiers accepted by [`verify_theorem`], in running order.
pub const SUITES: &[&str] = &[
    "edges-positive-roots",
    "coveri-degree",
    "cartan-determinant",
    "table1",
    "wmf-edge-uniformity",
    "upper-lower-coincide",
    "weight-models",
    "poset-isoms",
    "edge-formulas",
    "tensor-edges",
    "product-polynomial",
    "covering-closed-forms",
    "sum-identity",
    "short-defect",
    "z-defect-bounds",
    "classical-defects",
    "minimal-nilpotent",
    "dimension-accounting",
    "edge-filter",
    "grading-coveri-degree",
    "periodic-equality",
    "periodic-bound",
    "ratio-classification",
    "classification",
];

pub fn verify_theorem(id: &str, scope: &Scope) -> Result<VerificationReport> {
    Ok(match id {
        "edges-positive-roots" => roots::edges_positive_roots(scope),
        "coveri-degree" => roots::coveri_degree(scope),
        "cartan-determinant" => roots::cartan_determinant_suite(scope),
        "table1" => posets::reproduce_table1(scope.max_rank),
        "wmf-edge-uniformity" => posets::wmf_edge_uniformity(scope),
        "upper-lower-coincide" => posets::upper_lower_coincide(scope),
        "weight-models" => posets::weight_models(scope),
        "poset-isoms" => posets::poset_isoms(scope),
        "edge-formulas" => posets::edge_formulas(scope),
        "tensor-edges" => posets::tensor_edges(scope),
        "product-polynomial" => posets::product_polynomial(scope),
        "covering-closed-forms" => posets::covering_closed_forms(scope),
        "sum-identity" => grading_suites::sum_identity(scope),
        "short-defect" => grading_suites::short_defect(scope),
        "z-defect-bounds" => grading_suites::z_defect_bounds(scope),
        "classical-defects" => grading_suites::classical_defect_formulas(scope.max_rank),
        "minimal-nilpotent" => grading_suites::minimal_nilpotent(scope),
        "dimension-accounting" => grading_suites::dimension_accounting(scope),
        "edge-filter" => grading_suites::edge_filter(scope),
        "grading-coveri-degree" => grading_suites::grading_coveri_degree(scope),
        "periodic-equality" => grading_suites::periodic_equality(scope),
        "periodic-bound" => grading_suites::periodic_bound(scope),
        "ratio-classification" => classification::ratio_classification(scope.max_rank, classification::MAX_FACTORS),
        "classification" => classification::classification(scope),
        other => return Err(Error::UnknownSuite(other.to_string())),
    })
}

/// Runs every suite in [`SUITES`] order.
pub fn verify_all(scope: &Scope) -> Vec<VerificationReport> {
    SUITES
        .iter()
        .map(|id| verify_theorem(id, scope).expect("known suite"))
        .collect()
}

/// Types with classical rank at most `cap`, plus all exceptional types.
fn types(cap: usize) -> Vec<SimpleType> {
    SimpleType::all_with_exceptionals(cap)
}

type Cache<T> = OnceLock<Mutex<HashMap<usize, Arc<T>>>>;

fn cached<T>(cache: &'static Cache<T>, key: usize, build: impl FnOnce() -> T) -> Arc<T> {
    let map = cache.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = map.lock().unwrap().get(&key) {
        return Arc::clone(v);
    }
    let v = Arc::new(build());
    map.lock().unwrap().entry(key).or_insert(v).clone()
}

/// Catalog entries with their computed Hasse statistics.
pub fn catalog_stats(max_rank: usize) -> Arc<Vec<(CatalogEntry, HasseStats)>> {
    static CACHE: Cache<Vec<(CatalogEntry, HasseStats)>> = OnceLock::new();
    cached(&CACHE, max_rank, || {
        howe_catalog(max_rank)
            .into_iter()
            .map(|e| {
                let s = e.stats();
                (e, s)
            })
            .collect()
    })
}
