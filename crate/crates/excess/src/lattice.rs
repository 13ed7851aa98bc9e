//! Face lattice enumeration from vertex–facet incidences.
//!
//! The faces of a polytope are exactly the intersections of facet subsets,
//! together with the improper top face (all vertices) and the bottom (the
//! empty set). We enumerate that intersection-closed family, compute ranks
//! as longest-chain lengths from the bottom, derive the Hasse diagram, and
//! only then *verify* that the result is graded with the diamond property —
//! nothing is assumed about the input beyond the incidence invariants.

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::polytope::IncidencePolytope;

/// Cap on the total number of faces enumerated for one polytope.
pub const MAX_FACES: usize = 1 << 20;

/// A face, identified with its vertex set; rank −1 is the empty face and
/// rank `dim` the improper top face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub vertices: BitSet,
    pub rank: i32,
}

pub type FaceId = u32;

/// The graded lattice of all faces, with cover relations and the f-vector.
///
/// Faces are stored sorted by rank and, within a rank, lexicographically by
/// their vertex lists, so ids and reports are reproducible byte-for-byte.
pub struct FaceLattice {
    dim: usize,
    faces: Vec<Face>,
    /// Start offset of each rank slab; index `r + 1` for rank `r`.
    rank_offsets: Vec<usize>,
    index: HashMap<BitSet, FaceId>,
    upper: Vec<Vec<FaceId>>,
    lower: Vec<Vec<FaceId>>,
    f_vector: Vec<usize>,
}

impl FaceLattice {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id as usize]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Faces of rank `r`, for `r` in `-1 ..= dim`.
    pub fn faces_of_rank(&self, r: i32) -> &[Face] {
        let i = (r + 1) as usize;
        if i + 2 > self.rank_offsets.len() {
            return &[];
        }
        &self.faces[self.rank_offsets[i]..self.rank_offsets[i + 1]]
    }

    pub fn ids_of_rank(&self, r: i32) -> std::ops::Range<FaceId> {
        let i = (r + 1) as usize;
        if i + 2 > self.rank_offsets.len() {
            return 0..0;
        }
        self.rank_offsets[i] as FaceId..self.rank_offsets[i + 1] as FaceId
    }

    pub fn face_id(&self, vertices: &BitSet) -> Option<FaceId> {
        self.index.get(vertices).copied()
    }

    /// Rank of the face on `vertices`, or `None` when it is not a face.
    pub fn rank_of(&self, vertices: &BitSet) -> Option<i32> {
        self.face_id(vertices).map(|id| self.face(id).rank)
    }

    pub fn upper_covers(&self, id: FaceId) -> &[FaceId] {
        &self.upper[id as usize]
    }

    pub fn lower_covers(&self, id: FaceId) -> &[FaceId] {
        &self.lower[id as usize]
    }

    /// Face counts for ranks `0 ..= dim-1` (proper nonempty faces only).
    pub fn f_vector(&self) -> &[usize] {
        &self.f_vector
    }

    pub fn euler_characteristic_ok(&self) -> bool {
        let mut alt: i64 = 0;
        for (k, &count) in self.f_vector.iter().enumerate() {
            let term = count as i64;
            alt += if k % 2 == 0 { term } else { -term };
        }
        let expected = 1 - if self.dim.is_multiple_of(2) { 1 } else { -1 };
        alt == expected
    }
}

/// Unvalidated enumeration output: faces with longest-chain ranks and covers.
pub(crate) struct RawLattice {
    pub dim: usize,
    pub faces: Vec<Face>,
    pub upper: Vec<Vec<FaceId>>,
    pub lower: Vec<Vec<FaceId>>,
    pub top: FaceId,
}

pub(crate) fn enumerate(p: &IncidencePolytope) -> Result<RawLattice> {
    let n = p.n_vertices();
    let full = p.full_set();

    // All intersections of facet subsets, found by iterated single
    // intersections, plus top and bottom.
    let mut index: HashMap<BitSet, FaceId> = HashMap::new();
    let mut sets: Vec<BitSet> = Vec::new();
    let push = |index: &mut HashMap<BitSet, FaceId>, sets: &mut Vec<BitSet>, s: BitSet| {
        if !index.contains_key(&s) {
            index.insert(s.clone(), sets.len() as FaceId);
            sets.push(s);
        }
    };
    push(&mut index, &mut sets, full.clone());
    let mut head = 0;
    while head < sets.len() {
        let current = sets[head].clone();
        head += 1;
        for f in p.facets() {
            let t = current.intersection(f);
            if !index.contains_key(&t) {
                if sets.len() >= MAX_FACES {
                    return Err(Error::resource(format!(
                        "face lattice exceeds {MAX_FACES} faces"
                    )));
                }
                push(&mut index, &mut sets, t);
            }
        }
    }
    let empty = p.empty_set();
    push(&mut index, &mut sets, empty.clone());

    // Sort by (size, lex) so that proper subsets precede supersets, and
    // rebuild ids in that order.
    let mut order: Vec<FaceId> = (0..sets.len() as FaceId).collect();
    order.sort_by(|&a, &b| {
        let (sa, sb) = (&sets[a as usize], &sets[b as usize]);
        sa.len().cmp(&sb.len()).then_with(|| sa.cmp(sb))
    });
    let sets: Vec<BitSet> = order.iter().map(|&i| sets[i as usize].clone()).collect();
    let mut index: HashMap<BitSet, FaceId> = HashMap::new();
    for (i, s) in sets.iter().enumerate() {
        index.insert(s.clone(), i as FaceId);
    }

    // Upper covers of S: minimal elements of { closure(S + v) : v outside S }.
    let count = sets.len();
    let mut upper: Vec<Vec<FaceId>> = vec![Vec::new(); count];
    let mut lower: Vec<Vec<FaceId>> = vec![Vec::new(); count];
    let mut candidates: Vec<BitSet> = Vec::with_capacity(n);
    for (i, s) in sets.iter().enumerate() {
        if *s == full {
            continue;
        }
        candidates.clear();
        let mut facet_mask = BitSet::full(p.n_facets());
        for v in s.iter() {
            facet_mask.intersect_with(p.facets_containing(v));
        }
        for v in s.complement().iter() {
            let fm = facet_mask.intersection(p.facets_containing(v));
            let c = if fm.is_empty() {
                full.clone()
            } else {
                let mut acc = full.clone();
                for j in fm.iter() {
                    acc.intersect_with(&p.facets()[j]);
                }
                acc
            };
            if !candidates.contains(&c) {
                candidates.push(c);
            }
        }
        let mut minimal: Vec<&BitSet> = Vec::new();
        'cand: for c in &candidates {
            let mut kept: Vec<&BitSet> = Vec::new();
            for &m in &minimal {
                if m.is_subset(c) {
                    continue 'cand;
                }
                if !c.is_subset(m) {
                    kept.push(m);
                }
            }
            kept.push(c);
            minimal = kept;
        }
        minimal.sort();
        for c in minimal {
            let j = index[c];
            upper[i].push(j);
            lower[j as usize].push(i as FaceId);
        }
    }

    // Longest chain from the bottom; sets are in increasing-size order.
    let mut faces: Vec<Face> = Vec::with_capacity(count);
    let mut ranks: Vec<i32> = vec![-1; count];
    for i in 0..count {
        let r = lower[i]
            .iter()
            .map(|&j| ranks[j as usize] + 1)
            .max()
            .unwrap_or(-1);
        ranks[i] = r;
        faces.push(Face {
            vertices: sets[i].clone(),
            rank: r,
        });
    }
    let top = index[&full];

    Ok(RawLattice {
        dim: p.dim(),
        faces,
        upper,
        lower,
        top,
    })
}

impl RawLattice {
    /// Graded: the top face has rank `dim` and every cover step raises the
    /// longest-chain rank by exactly one.
    pub fn check_graded(&self) -> std::result::Result<(), String> {
        let top_rank = self.faces[self.top as usize].rank;
        if top_rank != self.dim as i32 {
            return Err(format!(
                "maximal chains have length {}, expected dimension {}",
                top_rank + 1,
                self.dim
            ));
        }
        for (i, ups) in self.upper.iter().enumerate() {
            for &j in ups {
                if self.faces[j as usize].rank != self.faces[i].rank + 1 {
                    return Err(format!(
                        "cover {:?} < {:?} skips rank {} to {}",
                        self.faces[i].vertices,
                        self.faces[j as usize].vertices,
                        self.faces[i].rank,
                        self.faces[j as usize].rank
                    ));
                }
            }
        }
        Ok(())
    }

    /// Diamond property: every rank-2 interval has exactly two interior
    /// elements. Counts length-2 cover paths locally per bottom face.
    pub fn check_diamond(&self) -> std::result::Result<(), String> {
        let count = self.faces.len();
        let mut path_count: Vec<u8> = vec![0; count];
        let mut touched: Vec<FaceId> = Vec::new();
        for i in 0..count {
            touched.clear();
            for &mid in &self.upper[i] {
                for &top in &self.upper[mid as usize] {
                    let c = &mut path_count[top as usize];
                    if *c == 0 {
                        touched.push(top);
                    }
                    *c = c.saturating_add(1);
                }
            }
            for &top in &touched {
                let c = path_count[top as usize];
                path_count[top as usize] = 0;
                if c != 2 {
                    return Err(format!(
                        "interval [{:?}, {:?}] contains {} faces, expected 2",
                        self.faces[i].vertices,
                        self.faces[top as usize].vertices,
                        c
                    ));
                }
            }
        }
        Ok(())
    }

    /// Every ridge (rank dim−2) lies in exactly two facets.
    pub fn check_ridges(&self) -> std::result::Result<(), String> {
        if self.dim < 1 {
            return Ok(());
        }
        let ridge_rank = self.dim as i32 - 2;
        for (i, face) in self.faces.iter().enumerate() {
            if face.rank == ridge_rank && self.upper[i].len() != 2 {
                return Err(format!(
                    "ridge {:?} lies in {} facets",
                    face.vertices,
                    self.upper[i].len()
                ));
            }
        }
        Ok(())
    }

    /// Finalizes into a [`FaceLattice`], re-sorting faces by `(rank, lex)`.
    pub fn into_lattice(self) -> FaceLattice {
        let count = self.faces.len();
        let mut order: Vec<FaceId> = (0..count as FaceId).collect();
        order.sort_by(|&a, &b| {
            let (fa, fb) = (&self.faces[a as usize], &self.faces[b as usize]);
            fa.rank
                .cmp(&fb.rank)
                .then_with(|| fa.vertices.cmp(&fb.vertices))
        });
        let mut renumber: Vec<FaceId> = vec![0; count];
        for (new, &old) in order.iter().enumerate() {
            renumber[old as usize] = new as FaceId;
        }
        let faces: Vec<Face> = order
            .iter()
            .map(|&old| self.faces[old as usize].clone())
            .collect();
        let mut index = HashMap::with_capacity(count);
        for (i, f) in faces.iter().enumerate() {
            index.insert(f.vertices.clone(), i as FaceId);
        }
        let remap = |ids: &[FaceId]| -> Vec<FaceId> {
            let mut v: Vec<FaceId> = ids.iter().map(|&i| renumber[i as usize]).collect();
            v.sort_unstable();
            v
        };
        let mut upper = vec![Vec::new(); count];
        let mut lower = vec![Vec::new(); count];
        for old in 0..count {
            upper[renumber[old] as usize] = remap(&self.upper[old]);
            lower[renumber[old] as usize] = remap(&self.lower[old]);
        }
        let dim = self.dim;
        // Broken inputs can have chains longer than the claimed dimension;
        // size the rank slabs by what is actually there.
        let max_rank = faces.iter().map(|f| f.rank).max().unwrap_or(-1);
        let slabs = (dim as i32).max(max_rank) as usize + 3;
        let mut rank_offsets = vec![0usize; slabs];
        for f in &faces {
            rank_offsets[(f.rank + 2) as usize] += 1;
        }
        for i in 1..rank_offsets.len() {
            rank_offsets[i] += rank_offsets[i - 1];
        }
        let mut f_vector = vec![0usize; dim];
        for f in &faces {
            if f.rank >= 0 && (f.rank as usize) < dim {
                f_vector[f.rank as usize] += 1;
            }
        }
        FaceLattice {
            dim,
            faces,
            rank_offsets,
            index,
            upper,
            lower,
            f_vector,
        }
    }
}

/// Enumerates and validates the face lattice of `p`.
///
/// Fails with [`Error::NonPolytopal`] when the closure family is not graded
/// or violates the diamond property — that outcome is a verdict about the
/// input, not a computation failure.
pub fn face_lattice(p: &IncidencePolytope) -> Result<FaceLattice> {
    let raw = enumerate(p)?;
    raw.check_graded().map_err(Error::non_polytopal)?;
    raw.check_diamond().map_err(Error::non_polytopal)?;
    Ok(raw.into_lattice())
}

/// Face counts per rank `0 ..= dim-1`.
pub fn f_vector(p: &IncidencePolytope) -> Result<Vec<usize>> {
    Ok(face_lattice(p)?.f_vector().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::polytope::Realizability;

    #[test]
    fn simplex_f_vector() {
        let p = construct::simplex(3).unwrap();
        assert_eq!(f_vector(&p).unwrap(), vec![4, 6, 4]);
    }

    #[test]
    fn polygon_f_vector() {
        let p = construct::polygon(5).unwrap();
        assert_eq!(f_vector(&p).unwrap(), vec![5, 5]);
    }

    #[test]
    fn product_of_triangles() {
        // Cross-check against the product rule for face counts.
        let p = construct::delta(2, 2).unwrap();
        assert_eq!(f_vector(&p).unwrap(), vec![9, 18, 15, 6]);
    }

    #[test]
    fn lattice_is_atomic_and_coatomic() {
        let p = construct::prism(&construct::simplex(3).unwrap()).unwrap();
        let lat = face_lattice(&p).unwrap();
        let atoms = lat.faces_of_rank(0);
        assert_eq!(atoms.len(), p.n_vertices());
        assert!(atoms.iter().all(|f| f.vertices.len() == 1));
        let coatoms = lat.faces_of_rank(lat.dim() as i32 - 1);
        assert_eq!(coatoms.len(), p.n_facets());
        for c in coatoms {
            assert!(p.facets().contains(&c.vertices));
        }
    }

    #[test]
    fn euler_relation_small_fixtures() {
        for p in [
            construct::simplex(4).unwrap(),
            construct::polygon(7).unwrap(),
            construct::prism(&construct::polygon(4).unwrap()).unwrap(),
            construct::cyclic(4, 7).unwrap(),
        ] {
            let lat = face_lattice(&p).unwrap();
            assert!(lat.euler_characteristic_ok(), "euler failed: {p:?}");
        }
    }

    #[test]
    fn ungraded_input_is_non_polytopal() {
        // Claimed dimension 3 but the structure is a square (dimension 2).
        let p = IncidencePolytope::new_unchecked(
            3,
            4,
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
            Realizability::Asserted,
        )
        .unwrap();
        match face_lattice(&p) {
            Err(crate::error::Error::NonPolytopal(_)) => {}
            Err(other) => panic!("expected NonPolytopal, got {other:?}"),
            Ok(_) => panic!("expected NonPolytopal, got a lattice"),
        }
    }

    #[test]
    fn diamond_violation_detected() {
        // Two squares sharing an edge, with the shared edge kept as a facet:
        // vertex 0 then lies in three "facets", breaking the diamond.
        let p = IncidencePolytope::new_unchecked(
            2,
            6,
            vec![
                vec![0, 1],
                vec![1, 2],
                vec![2, 3],
                vec![0, 3],
                vec![1, 4],
                vec![4, 5],
                vec![0, 5],
            ],
            Realizability::Asserted,
        )
        .unwrap();
        let raw = enumerate(&p).unwrap();
        assert!(raw.check_graded().is_ok());
        assert!(raw.check_diamond().is_err());
    }
}
