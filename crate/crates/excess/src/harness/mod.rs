//! Theorem-check harness: executable structural laws, seeded corpora, and
//! pass/fail/vacuous reporting.

mod checks;
mod corpus;
mod suite;

pub use checks::{builtin_checks, CheckMode, CheckOutcome, TheoremCheck};
pub use corpus::{default_fixtures, generate_corpus, CorpusMember, CorpusSpec, GenerationLog};
pub use suite::{corpus_fingerprint, run_suite, suite_items, CheckReport, SuiteItem, SuiteReport};

use std::collections::HashMap;
use std::sync::Arc;

use crate::analysis::{classify_with, excess_profile, ExcessProfile, StructureReport};
use crate::bitset::BitSet;
use crate::error::Result;
use crate::lattice::{face_lattice, FaceLattice};
use crate::polytope::IncidencePolytope;

/// Everything the checks consume, computed once per polytope.
pub struct Analysis {
    pub polytope: IncidencePolytope,
    pub lattice: FaceLattice,
    pub profile: ExcessProfile,
    pub report: StructureReport,
    pub adjacency: Vec<BitSet>,
}

impl Analysis {
    pub fn compute(p: &IncidencePolytope) -> Result<Analysis> {
        let lattice = face_lattice(p)?;
        let profile = excess_profile(p)?;
        let report = classify_with(p, &lattice, &profile);
        let adjacency = p.adjacency();
        Ok(Analysis {
            polytope: p.clone(),
            lattice,
            profile,
            report,
            adjacency,
        })
    }

    pub fn dim(&self) -> i64 {
        self.polytope.dim() as i64
    }

    pub fn f0(&self) -> i64 {
        self.polytope.n_vertices() as i64
    }

    /// Number of nonsimple neighbours of `v`.
    pub fn nonsimple_neighbours(&self, v: usize) -> usize {
        self.adjacency[v]
            .iter()
            .filter(|&u| self.profile.excesses[u] > 0)
            .count()
    }
}

/// Memoizes analyses by exact incidence data, so repeated corpus members and
/// fixture reuse hit the cache.
#[derive(Default)]
pub struct Analyzer {
    cache: HashMap<(usize, usize, Vec<BitSet>), Arc<Analysis>>,
}

impl Analyzer {
    pub fn new() -> Self {
        Analyzer::default()
    }

    pub fn analyze(&mut self, p: &IncidencePolytope) -> Result<Arc<Analysis>> {
        let key = (p.dim(), p.n_vertices(), p.facets().to_vec());
        if let Some(a) = self.cache.get(&key) {
            return Ok(a.clone());
        }
        let a = Arc::new(Analysis::compute(p)?);
        self.cache.insert(key, a.clone());
        Ok(a)
    }
}
