//! Vertex figures, face figures, and faces as standalone polytopes.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::lattice::{face_lattice, FaceLattice};
use crate::polytope::IncidencePolytope;

/// The vertex figure `P/v`: vertices correspond to the edges of `P` at `v`,
/// facets to the facets of `P` containing `v`, with the edge toward `u`
/// incident to the image of a facet `G` iff `u` lies in `G`.
pub fn vertex_figure(p: &IncidencePolytope, v: usize) -> Result<IncidencePolytope> {
    if v >= p.n_vertices() {
        return Err(Error::input(format!("vertex {v} out of range")));
    }
    if p.dim() < 1 {
        return Err(Error::precondition("vertex figure requires dimension >= 1"));
    }
    if p.dim() == 1 {
        let mut fig = IncidencePolytope::new(0, 1, vec![], p.realizability)?;
        fig.provenance = None;
        return Ok(fig);
    }
    let mut neighbours: Vec<usize> = Vec::new();
    for u in 0..p.n_vertices() {
        if u == v {
            continue;
        }
        let s = p.vertex_set(&[u, v])?;
        if p.closure(&s) == s {
            neighbours.push(u);
        }
    }
    let facet_lists: Vec<Vec<usize>> = p
        .facets_containing(v)
        .iter()
        .map(|j| {
            let g = &p.facets()[j];
            neighbours
                .iter()
                .enumerate()
                .filter(|(_, &u)| g.contains(u))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    IncidencePolytope::new(p.dim() - 1, neighbours.len(), facet_lists, p.realizability)
}

/// The face figure `P/F` built from the lattice interval `[F, top]`:
/// vertices correspond to the faces covering `F`, facets to the facets of
/// `P` containing `F`, with incidence by containment.
pub fn face_figure(p: &IncidencePolytope, face: &BitSet) -> Result<IncidencePolytope> {
    let lat = face_lattice(p)?;
    face_figure_with(p, &lat, face)
}

/// As [`face_figure`] but reusing an already computed lattice.
pub fn face_figure_with(
    p: &IncidencePolytope,
    lat: &FaceLattice,
    face: &BitSet,
) -> Result<IncidencePolytope> {
    let id = lat
        .face_id(face)
        .ok_or_else(|| Error::input(format!("{face:?} is not a face")))?;
    let rank = lat.face(id).rank;
    if rank < 0 || rank >= p.dim() as i32 {
        return Err(Error::precondition(
            "face figure requires a proper nonempty face",
        ));
    }
    let covers = lat.upper_covers(id);
    let out_dim = p.dim() - rank as usize - 1;
    if out_dim == 0 {
        return IncidencePolytope::new(0, 1, vec![], p.realizability);
    }
    let containing: Vec<&BitSet> = p
        .facets()
        .iter()
        .filter(|g| face.is_subset(g))
        .collect();
    let facet_lists: Vec<Vec<usize>> = containing
        .iter()
        .map(|g| {
            covers
                .iter()
                .enumerate()
                .filter(|(_, &c)| lat.face(c).vertices.is_subset(g))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    IncidencePolytope::new(out_dim, covers.len(), facet_lists, p.realizability)
}

/// A proper nonempty face of `P`, as a polytope in its own right: its
/// vertices are the face's vertices and its facets the maximal proper
/// subfaces.
pub fn face_as_polytope(p: &IncidencePolytope, face: &BitSet) -> Result<IncidencePolytope> {
    let lat = face_lattice(p)?;
    face_as_polytope_with(p, &lat, face)
}

pub fn face_as_polytope_with(
    p: &IncidencePolytope,
    lat: &FaceLattice,
    face: &BitSet,
) -> Result<IncidencePolytope> {
    let id = lat
        .face_id(face)
        .ok_or_else(|| Error::input(format!("{face:?} is not a face")))?;
    let rank = lat.face(id).rank;
    if rank < 0 || rank >= p.dim() as i32 {
        return Err(Error::precondition(
            "expected a proper nonempty face",
        ));
    }
    let verts = face.to_vec();
    let pos: std::collections::HashMap<usize, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let facet_lists: Vec<Vec<usize>> = lat
        .ids_of_rank(rank - 1)
        .filter(|&sub| lat.face(sub).vertices.is_subset(face))
        .map(|sub| {
            lat.face(sub)
                .vertices
                .iter()
                .map(|v| pos[&v])
                .collect()
        })
        .collect();
    IncidencePolytope::new(rank as usize, verts.len(), facet_lists, p.realizability)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::is_isomorphic;
    use crate::construct;

    #[test]
    fn apex_figure_of_a_pyramid_is_the_base() {
        for base in [construct::polygon(5).unwrap(), construct::delta(2, 2).unwrap()] {
            let pyr = construct::pyramid(&base, 1).unwrap();
            let apex = pyr.n_vertices() - 1;
            let fig = vertex_figure(&pyr, apex).unwrap();
            assert!(is_isomorphic(&fig, &base).unwrap());
        }
    }

    #[test]
    fn cube_vertex_figure_is_a_triangle() {
        let cube = construct::prism(&construct::polygon(4).unwrap()).unwrap();
        let fig = vertex_figure(&cube, 0).unwrap();
        assert!(is_isomorphic(&fig, &construct::simplex(2).unwrap()).unwrap());
    }

    #[test]
    fn face_figure_of_a_vertex_matches_vertex_figure() {
        let p = construct::prism(&construct::simplex(3).unwrap()).unwrap();
        for v in 0..p.n_vertices() {
            let a = vertex_figure(&p, v).unwrap();
            let b = face_figure(&p, &p.vertex_set(&[v]).unwrap()).unwrap();
            assert!(is_isomorphic(&a, &b).unwrap());
        }
    }

    #[test]
    fn face_figure_of_a_ridge_is_a_segment() {
        let p = construct::simplex(4).unwrap();
        let ridge = p.vertex_set(&[0, 1, 2]).unwrap();
        let fig = face_figure(&p, &ridge).unwrap();
        assert_eq!(fig.dim(), 1);
    }

    #[test]
    fn facet_as_polytope_roundtrip() {
        let p = construct::prism(&construct::polygon(4).unwrap()).unwrap();
        let facet = p.facets()[0].clone();
        let q = face_as_polytope(&p, &facet).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(is_isomorphic(&q, &construct::polygon(4).unwrap()).unwrap());
    }
}
