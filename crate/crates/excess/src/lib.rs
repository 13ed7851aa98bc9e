//! A combinatorial polytope engine.
//!
//! Polytopes are given purely combinatorially, by a claimed dimension and
//! the vertex sets of their facets. From that single description the crate
//! derives face lattices, graphs, duals, vertex and face figures, excess
//! degrees (`xi = 2 f1 - d f0`), and structural classifications such as
//! semisimplicity and the super-Kirkman property. A construction language
//! builds the classical families (simplices, cyclic polytopes, products,
//! free joins, wedges, truncations, graph-connected sums), and a theorem
//! harness checks a battery of structural laws over seeded random corpora.
//!
//! Start with the `examples/` directory: each example exercises one major
//! capability. The `excess` binary exposes the same functionality as a
//! small CLI (`build`, `analyze`, `verify`, `corpus`, `identify`).

pub mod analysis;
pub mod bitset;
pub mod canonical;
pub mod cli;
pub mod construct;
pub mod dsl;
pub mod error;
pub mod family;
pub mod figures;
pub mod format;
pub mod harness;
pub mod lattice;
pub mod polytope;
pub mod sanity;

pub use analysis::{classify, excess_profile, ExcessProfile, StructureReport};
pub use bitset::BitSet;
pub use canonical::{canonical_form, is_isomorphic};
pub use construct::FaceSelector;
pub use dsl::{eval, parse, Expr};
pub use error::{Error, Result};
pub use family::{identify_family, FamilyTag};
pub use figures::{face_as_polytope, face_figure, vertex_figure};
pub use lattice::{f_vector, face_lattice, FaceLattice};
pub use polytope::{IncidencePolytope, Realizability};
pub use sanity::{sanity_check, SanityReport};

#[cfg(test)]
mod send_sync_tests {
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_types_are_shareable() {
        assert_send_sync::<crate::IncidencePolytope>();
        assert_send_sync::<crate::FaceLattice>();
        assert_send_sync::<crate::ExcessProfile>();
        assert_send_sync::<crate::StructureReport>();
        assert_send_sync::<crate::BitSet>();
    }
}
