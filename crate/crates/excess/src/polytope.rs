//! Polytopes given combinatorially by vertex–facet incidences.
//!
//! An [`IncidencePolytope`] is the universal currency of the crate: a claimed
//! dimension plus the list of facet vertex sets. Everything else — the face
//! lattice, graphs, duals, figures, excess profiles — is derived from it by
//! the facet-intersection closure operator.

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Hard cap on the number of vertices of a single polytope.
///
/// Vertex sets are fixed-capacity bitsets sized when the polytope is built;
/// this cap keeps them small and every documented example far below it.
pub const MAX_VERTICES: usize = 64;

/// Whether the combinatorial structure comes with a geometric realization
/// guarantee.
///
/// `Constructed` marks outputs of operations that always yield genuine
/// polytopes. `Asserted` marks glue results whose realizability rests on
/// arguments outside this crate; they still pass every necessary-condition
/// check, but the flag is propagated so downstream consumers can tell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Realizability {
    Constructed,
    Asserted,
}

impl Realizability {
    pub fn combine(self, other: Realizability) -> Realizability {
        if self == Realizability::Asserted || other == Realizability::Asserted {
            Realizability::Asserted
        } else {
            Realizability::Constructed
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Realizability::Constructed => "constructed",
            Realizability::Asserted => "asserted",
        }
    }
}

/// A polytope described by its claimed dimension and facet vertex sets.
///
/// Immutable after construction. Facets are stored sorted lexicographically
/// (by ascending vertex lists), and that order is the facet indexing used by
/// selectors and the file format.
#[derive(Clone, Debug)]
pub struct IncidencePolytope {
    dim: usize,
    n_vertices: usize,
    facets: Vec<BitSet>,
    /// For each vertex, the set of facet indices containing it.
    vertex_masks: Vec<BitSet>,
    pub vertex_labels: Option<Vec<String>>,
    pub realizability: Realizability,
    /// Construction-expression string recording how this polytope was built.
    pub provenance: Option<String>,
}

impl PartialEq for IncidencePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.n_vertices == other.n_vertices
            && self.facets == other.facets
    }
}
impl Eq for IncidencePolytope {}

impl IncidencePolytope {
    /// Builds a polytope from facet vertex lists, validating the incidence
    /// invariants.
    pub fn new(
        dim: usize,
        n_vertices: usize,
        facet_lists: Vec<Vec<usize>>,
        realizability: Realizability,
    ) -> Result<Self> {
        let p = Self::new_unchecked(dim, n_vertices, facet_lists, realizability)?;
        p.validate_incidence().map_err(Error::input)?;
        Ok(p)
    }

    /// Builds without checking the semantic invariants (still validates
    /// index ranges and the vertex cap). Intended for diagnostics: it lets
    /// [`crate::sanity::sanity_check`] report on deliberately broken input.
    pub fn new_unchecked(
        dim: usize,
        n_vertices: usize,
        facet_lists: Vec<Vec<usize>>,
        realizability: Realizability,
    ) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::input("a polytope needs at least one vertex"));
        }
        if n_vertices > MAX_VERTICES {
            return Err(Error::resource(format!(
                "{n_vertices} vertices exceeds the cap of {MAX_VERTICES}"
            )));
        }
        let mut facets = Vec::with_capacity(facet_lists.len());
        for list in &facet_lists {
            for &v in list {
                if v >= n_vertices {
                    return Err(Error::input(format!(
                        "facet vertex index {v} out of range (n_vertices = {n_vertices})"
                    )));
                }
            }
            facets.push(BitSet::from_indices(n_vertices, list));
        }
        facets.sort();
        let mut vertex_masks = vec![BitSet::empty(facets.len()); n_vertices];
        for (j, f) in facets.iter().enumerate() {
            for v in f.iter() {
                vertex_masks[v].insert(j);
            }
        }
        Ok(IncidencePolytope {
            dim,
            n_vertices,
            facets,
            vertex_masks,
            vertex_labels: None,
            realizability,
            provenance: None,
        })
    }

    /// Checks the incidence invariants without consulting the face lattice.
    pub fn validate_incidence(&self) -> std::result::Result<(), String> {
        let d = self.dim;
        let n = self.n_vertices;
        let m = self.facets.len();
        if d == 0 {
            if n != 1 || m != 0 {
                return Err("a 0-polytope is a single vertex with no facets".into());
            }
            return Ok(());
        }
        if d == 1 {
            let ok = n == 2
                && m == 2
                && self.facets[0].to_vec() == [0]
                && self.facets[1].to_vec() == [1];
            if !ok {
                return Err("a 1-polytope is two vertices with two singleton facets".into());
            }
            return Ok(());
        }
        for (i, f) in self.facets.iter().enumerate() {
            if f.len() < d {
                return Err(format!(
                    "facet {i} has {} vertices, fewer than the dimension {d}",
                    f.len()
                ));
            }
            for (j, g) in self.facets.iter().enumerate() {
                if i != j && f.is_subset(g) {
                    return Err(format!("facet {i} is contained in facet {j}"));
                }
            }
        }
        let mut union = BitSet::empty(n);
        let mut inter = BitSet::full(n);
        for f in &self.facets {
            union.union_with(f);
            inter.intersect_with(f);
        }
        if union.len() != n {
            return Err("some vertex lies in no facet".into());
        }
        if !inter.is_empty() {
            return Err("a vertex lies in every facet".into());
        }
        for (v, mask) in self.vertex_masks.iter().enumerate() {
            if mask.len() < d {
                return Err(format!(
                    "vertex {v} lies in only {} facets, fewer than the dimension {d}",
                    mask.len()
                ));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    #[inline]
    pub fn facets(&self) -> &[BitSet] {
        &self.facets
    }

    #[inline]
    pub fn n_facets(&self) -> usize {
        self.facets.len()
    }

    /// The facet indices containing vertex `v`.
    #[inline]
    pub fn facets_containing(&self, v: usize) -> &BitSet {
        &self.vertex_masks[v]
    }

    pub fn full_set(&self) -> BitSet {
        BitSet::full(self.n_vertices)
    }

    pub fn empty_set(&self) -> BitSet {
        BitSet::empty(self.n_vertices)
    }

    /// Builds a vertex set of this polytope's capacity from indices.
    pub fn vertex_set(&self, indices: &[usize]) -> Result<BitSet> {
        for &v in indices {
            if v >= self.n_vertices {
                return Err(Error::input(format!(
                    "vertex index {v} out of range (n_vertices = {})",
                    self.n_vertices
                )));
            }
        }
        Ok(BitSet::from_indices(self.n_vertices, indices))
    }

    /// Smallest-face operator: the intersection of all facets containing `s`,
    /// or the full vertex set when no facet contains `s`.
    ///
    /// Extensive, monotone and idempotent; a set is (the vertex set of) a
    /// face exactly when it is its own closure.
    pub fn closure(&self, s: &BitSet) -> BitSet {
        let mut mask = BitSet::full(self.facets.len());
        for v in s.iter() {
            mask.intersect_with(&self.vertex_masks[v]);
        }
        if mask.is_empty() {
            return self.full_set();
        }
        let mut acc = self.full_set();
        for j in mask.iter() {
            acc.intersect_with(&self.facets[j]);
            if acc == *s {
                break; // remaining facets all contain s, so the meet is s
            }
        }
        acc
    }

    /// Index-based convenience wrapper around [`Self::closure`].
    pub fn closure_of(&self, indices: &[usize]) -> Result<Vec<usize>> {
        let s = self.vertex_set(indices)?;
        Ok(self.closure(&s).to_vec())
    }

    pub fn is_face(&self, s: &BitSet) -> bool {
        self.closure(s) == *s
    }

    /// Edge list, sorted; `{u,v}` is an edge iff its closure is itself.
    pub fn graph(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        if self.dim == 1 {
            return vec![(0, 1)];
        }
        for u in 0..self.n_vertices {
            for v in (u + 1)..self.n_vertices {
                let s = BitSet::from_indices(self.n_vertices, &[u, v]);
                if self.closure(&s) == s {
                    edges.push((u, v));
                }
            }
        }
        edges
    }

    /// Adjacency as one bitset per vertex.
    pub fn adjacency(&self) -> Vec<BitSet> {
        let mut adj = vec![BitSet::empty(self.n_vertices); self.n_vertices];
        for (u, v) in self.graph() {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        adj
    }

    /// The combinatorial dual: vertices correspond to facets and vice versa,
    /// with incidence transposed.
    pub fn dual(&self) -> Result<IncidencePolytope> {
        if self.dim == 0 {
            return Err(Error::precondition("dual requires dimension >= 1"));
        }
        let m = self.facets.len();
        if m > MAX_VERTICES {
            return Err(Error::resource(format!(
                "dual would have {m} vertices, exceeding the cap of {MAX_VERTICES}"
            )));
        }
        let lists: Vec<Vec<usize>> = (0..self.n_vertices)
            .map(|v| self.vertex_masks[v].to_vec())
            .collect();
        let mut dual = IncidencePolytope::new(self.dim, m, lists, self.realizability)?;
        dual.provenance = self
            .provenance
            .as_ref()
            .map(|p| format!("dual({p})"));
        Ok(dual)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<IncidencePolytope> {
        if perm.len() != self.n_vertices {
            return Err(Error::input("permutation length mismatch"));
        }
        let mut seen = vec![false; self.n_vertices];
        for &p in perm {
            if p >= self.n_vertices || seen[p] {
                return Err(Error::input("not a permutation"));
            }
            seen[p] = true;
        }
        let lists: Vec<Vec<usize>> = self
            .facets
            .iter()
            .map(|f| f.iter().map(|v| perm[v]).collect())
            .collect();
        let mut q = IncidencePolytope::new(self.dim, self.n_vertices, lists, self.realizability)?;
        q.provenance = self.provenance.clone();
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn point_and_segment() {
        let point = IncidencePolytope::new(0, 1, vec![], Realizability::Constructed).unwrap();
        assert_eq!(point.dim(), 0);
        let seg =
            IncidencePolytope::new(1, 2, vec![vec![0], vec![1]], Realizability::Constructed)
                .unwrap();
        assert_eq!(seg.graph(), vec![(0, 1)]);
        assert!(IncidencePolytope::new(1, 3, vec![vec![0], vec![1]], Realizability::Constructed)
            .is_err());
    }

    #[test]
    fn rejects_duplicate_and_nested_facets() {
        let dup = IncidencePolytope::new(
            2,
            3,
            vec![vec![0, 1], vec![0, 1], vec![1, 2], vec![0, 2]],
            Realizability::Constructed,
        );
        assert!(dup.is_err());
        let nested = IncidencePolytope::new(
            3,
            5,
            vec![vec![0, 1, 2, 3], vec![0, 1, 2], vec![3, 4, 0], vec![1, 2, 4], vec![2, 3, 4]],
            Realizability::Constructed,
        );
        assert!(nested.is_err());
    }

    #[test]
    fn closure_on_simplex_and_square() {
        let s3 = construct::simplex(3).unwrap();
        let pair = s3.vertex_set(&[0, 1]).unwrap();
        assert_eq!(s3.closure(&pair), pair); // every pair is an edge of a simplex

        let sq = construct::polygon(4).unwrap();
        let diag = sq.vertex_set(&[0, 2]).unwrap();
        assert_eq!(sq.closure(&diag), sq.full_set()); // no facet holds a diagonal
    }

    #[test]
    fn closure_is_total_on_out_of_range_input() {
        let s3 = construct::simplex(3).unwrap();
        assert!(s3.closure_of(&[0, 9]).is_err());
    }

    #[test]
    fn graph_counts() {
        assert_eq!(construct::polygon(6).unwrap().graph().len(), 6);
        assert_eq!(construct::simplex(5).unwrap().graph().len(), 15);
    }

    #[test]
    fn dual_involution_and_octahedron() {
        let cube = construct::prism(&construct::polygon(4).unwrap()).unwrap();
        let oct = cube.dual().unwrap();
        assert_eq!(oct.n_vertices(), 6);
        assert_eq!(oct.n_facets(), 8);
        assert!(oct.facets().iter().all(|f| f.len() == 3));
        let back = oct.dual().unwrap();
        assert_eq!(back.n_vertices(), cube.n_vertices());
        assert_eq!(back.n_facets(), cube.n_facets());
    }
}
