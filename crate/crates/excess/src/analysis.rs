//! Excess-degree analysis and structural classification.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::lattice::{face_lattice, FaceLattice};
use crate::polytope::IncidencePolytope;

/// Largest nonsimple vertex set for which the exhaustive missing-face test
/// is attempted.
pub const MISSING_FACE_CAP: usize = 16;

/// Per-vertex degrees and excesses, the total excess, and the nonsimple set.
#[derive(Clone, Debug, Serialize)]
pub struct ExcessProfile {
    pub degrees: Vec<usize>,
    pub excesses: Vec<i64>,
    pub xi: i64,
    pub nonsimple: Vec<usize>,
}

impl ExcessProfile {
    pub fn is_simple(&self) -> bool {
        self.nonsimple.is_empty()
    }

    pub fn excess_of(&self, v: usize) -> i64 {
        self.excesses[v]
    }
}

/// Computes the excess profile and cross-checks the edge-count identity
/// `xi = 2 f1 - d f0`.
pub fn excess_profile(p: &IncidencePolytope) -> Result<ExcessProfile> {
    let d = p.dim() as i64;
    let edges = p.graph();
    let mut degrees = vec![0usize; p.n_vertices()];
    for &(u, v) in &edges {
        degrees[u] += 1;
        degrees[v] += 1;
    }
    let excesses: Vec<i64> = degrees.iter().map(|&deg| deg as i64 - d).collect();
    let xi: i64 = excesses.iter().sum();
    let identity = 2 * edges.len() as i64 - d * p.n_vertices() as i64;
    debug_assert_eq!(xi, identity);
    if xi != identity {
        return Err(Error::input(
            "excess sum disagrees with 2*f1 - d*f0; corrupt incidence data",
        ));
    }
    let nonsimple = (0..p.n_vertices())
        .filter(|&v| excesses[v] > 0)
        .collect();
    Ok(ExcessProfile {
        degrees,
        excesses,
        xi,
        nonsimple,
    })
}

/// One unordered facet pair and the rank of the face they meet in
/// (−1 when disjoint).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FacetPairMeet {
    pub a: usize,
    pub b: usize,
    pub rank: i32,
}

/// For every unordered facet pair, the face on the common vertex set and its
/// rank. The common vertex set is itself an intersection of facets, hence
/// always closed; the lattice lookup is asserted to succeed.
pub fn facet_intersection_spectrum(
    p: &IncidencePolytope,
    lat: &FaceLattice,
) -> Vec<FacetPairMeet> {
    let m = p.n_facets();
    let mut out = Vec::with_capacity(m * (m.saturating_sub(1)) / 2);
    for a in 0..m {
        for b in (a + 1)..m {
            let meet = p.facets()[a].intersection(&p.facets()[b]);
            debug_assert_eq!(p.closure(&meet), meet);
            let rank = lat
                .rank_of(&meet)
                .expect("facet intersections are closed sets");
            out.push(FacetPairMeet { a, b, rank });
        }
    }
    out
}

/// The induced structure on the nonsimple vertex set.
#[derive(Clone, Debug, Serialize)]
pub struct NonsimpleSubgraph {
    pub same_degree: bool,
    pub component_count: usize,
    pub is_face: bool,
    /// `None` when the nonsimple set exceeds [`MISSING_FACE_CAP`] and the
    /// exhaustive subset test was skipped.
    pub is_missing_face: Option<bool>,
    pub is_phantom_simplex: bool,
}

pub(crate) fn nonsimple_structure_capped(
    p: &IncidencePolytope,
    profile: &ExcessProfile,
) -> NonsimpleSubgraph {
    let nonsimple = &profile.nonsimple;
    let set = BitSet::from_indices(p.n_vertices(), nonsimple);
    let adj = p.adjacency();

    let same_degree = nonsimple
        .windows(2)
        .all(|w| profile.degrees[w[0]] == profile.degrees[w[1]]);

    // Connected components of the induced subgraph.
    let mut component_count = 0;
    let mut seen = BitSet::empty(p.n_vertices());
    for &v in nonsimple {
        if seen.contains(v) {
            continue;
        }
        component_count += 1;
        let mut stack = vec![v];
        seen.insert(v);
        while let Some(u) = stack.pop() {
            for w in adj[u].intersection(&set).iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
    }

    let is_face = !nonsimple.is_empty() && p.closure(&set) == set;

    let pairwise_adjacent = nonsimple.iter().enumerate().all(|(i, &u)| {
        nonsimple[i + 1..]
            .iter()
            .all(|&v| adj[u].contains(v))
    });
    let is_phantom_simplex = nonsimple.len() >= 2 && pairwise_adjacent && !is_face;

    let is_missing_face = if nonsimple.len() > MISSING_FACE_CAP {
        None
    } else if is_face || nonsimple.is_empty() {
        Some(false)
    } else {
        // Every proper subset must be a face.
        Some(proper_subsets_all_faces(p, nonsimple))
    };

    NonsimpleSubgraph {
        same_degree,
        component_count,
        is_face,
        is_missing_face,
        is_phantom_simplex,
    }
}

fn proper_subsets_all_faces(p: &IncidencePolytope, members: &[usize]) -> bool {
    let k = members.len();
    for mask in 0..(1u32 << k) - 1 {
        let subset: Vec<usize> = (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| members[i])
            .collect();
        let s = BitSet::from_indices(p.n_vertices(), &subset);
        if p.closure(&s) != s {
            return false;
        }
    }
    true
}

/// Induced subgraph report for the nonsimple vertices. Errors with a
/// resource limit when the set exceeds [`MISSING_FACE_CAP`], since the
/// missing-face test enumerates all subsets.
pub fn nonsimple_structure(p: &IncidencePolytope) -> Result<NonsimpleSubgraph> {
    let profile = excess_profile(p)?;
    let record = nonsimple_structure_capped(p, &profile);
    if record.is_missing_face.is_none() {
        return Err(Error::resource(format!(
            "{} nonsimple vertices exceed the missing-face cap of {MISSING_FACE_CAP}",
            profile.nonsimple.len()
        )));
    }
    Ok(record)
}

/// Facet-pair spectrum plus the boolean classification.
#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub facet_pair_dims: Vec<FacetPairMeet>,
    pub is_simple: bool,
    pub is_semisimple: bool,
    pub is_super_kirkman: bool,
    #[serde(rename = "is_2_neighbourly")]
    pub is_two_neighbourly: bool,
    pub is_pyramidal: bool,
    pub nonsimple_subgraph: NonsimpleSubgraph,
}

/// Classifies `p`: semisimple means every facet pair is disjoint or meets in
/// a ridge, super-Kirkman forbids the disjoint case, 2-neighbourly means the
/// graph is complete, pyramidal that some facet misses exactly one vertex.
/// Requires dimension at least 2; below that the notions degenerate.
pub fn classify(p: &IncidencePolytope) -> Result<StructureReport> {
    if p.dim() < 2 {
        return Err(Error::precondition("classification requires dimension >= 2"));
    }
    let lat = face_lattice(p)?;
    let profile = excess_profile(p)?;
    Ok(classify_with(p, &lat, &profile))
}

pub fn classify_with(
    p: &IncidencePolytope,
    lat: &FaceLattice,
    profile: &ExcessProfile,
) -> StructureReport {
    let d = p.dim() as i32;
    let spectrum = facet_intersection_spectrum(p, lat);
    let is_semisimple = spectrum
        .iter()
        .all(|m| m.rank == -1 || m.rank == d - 2);
    let is_super_kirkman = spectrum.iter().all(|m| m.rank == d - 2);
    let n = p.n_vertices();
    let is_two_neighbourly = p.graph().len() == n * (n - 1) / 2;
    let is_pyramidal = p.facets().iter().any(|f| f.len() == n - 1);
    StructureReport {
        facet_pair_dims: spectrum,
        is_simple: profile.is_simple(),
        is_semisimple,
        is_super_kirkman,
        is_two_neighbourly,
        is_pyramidal,
        nonsimple_subgraph: nonsimple_structure_capped(p, profile),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{self, FaceSelector};

    #[test]
    fn profile_of_m34() {
        let p = construct::m_poly(3, 4).unwrap();
        let prof = excess_profile(&p).unwrap();
        assert_eq!(prof.xi, 8);
        assert_eq!(prof.nonsimple.len(), 4);
        assert!(prof.nonsimple.iter().all(|&v| prof.excesses[v] == 2));
    }

    #[test]
    fn profile_of_pyramid_over_delta24() {
        let p = construct::pyramid(&construct::delta(2, 4).unwrap(), 1).unwrap();
        let prof = excess_profile(&p).unwrap();
        assert_eq!(p.dim(), 7);
        assert_eq!(prof.xi, 8);
        assert_eq!(prof.nonsimple.len(), 1);
        assert_eq!(prof.excesses[prof.nonsimple[0]], 8);
    }

    #[test]
    fn spectrum_cases() {
        let s = construct::simplex(4).unwrap();
        let lat = face_lattice(&s).unwrap();
        assert!(facet_intersection_spectrum(&s, &lat)
            .iter()
            .all(|m| m.rank == 2));

        let pr = construct::prism(&construct::simplex(4).unwrap()).unwrap();
        let lat = face_lattice(&pr).unwrap();
        assert!(facet_intersection_spectrum(&pr, &lat)
            .iter()
            .any(|m| m.rank == -1));

        // Bipyramid: some facet pairs meet in a single vertex.
        let bi = construct::stack(&construct::simplex(3).unwrap(), &FaceSelector::Facet(0)).unwrap();
        let lat = face_lattice(&bi).unwrap();
        assert!(facet_intersection_spectrum(&bi, &lat)
            .iter()
            .any(|m| m.rank == 0));
    }

    #[test]
    fn classification_trio() {
        let a = construct::prism(&construct::simplex(3).unwrap()).unwrap();
        let ra = classify(&a).unwrap();
        assert!(ra.is_simple && ra.is_semisimple && !ra.is_super_kirkman);

        let b = construct::pyramid(&construct::delta(2, 2).unwrap(), 1).unwrap();
        let rb = classify(&b).unwrap();
        assert!(!rb.is_simple && rb.is_super_kirkman && rb.is_semisimple);

        let c = construct::prism(&b).unwrap();
        let rc = classify(&c).unwrap();
        assert!(rc.is_semisimple && !rc.is_super_kirkman && !rc.is_simple);
    }

    #[test]
    fn nonsimple_records() {
        // Apexes of M(3,4) form a simplex face.
        let p = construct::m_poly(3, 4).unwrap();
        let rec = nonsimple_structure(&p).unwrap();
        assert!(rec.same_degree && rec.is_face && !rec.is_phantom_simplex);
        assert_eq!(rec.component_count, 1);
        assert_eq!(rec.is_missing_face, Some(false));

        // Capped prism: a phantom simplex, not a face.
        let base = construct::prism(&construct::simplex(6).unwrap()).unwrap();
        let idx = construct::simplex_facet_indices(&base)[0];
        let capped = construct::stack(&base, &FaceSelector::Facet(idx)).unwrap();
        let rec = nonsimple_structure(&capped).unwrap();
        assert!(rec.is_phantom_simplex && !rec.is_face && rec.same_degree);

        // A single nonsimple vertex is trivially a face.
        let q = construct::pyramid(&construct::delta(2, 4).unwrap(), 1).unwrap();
        let rec = nonsimple_structure(&q).unwrap();
        assert!(rec.is_face);
        assert_eq!(rec.component_count, 1);
    }

    #[test]
    fn pyramidal_flag() {
        let p = construct::pyramid(&construct::polygon(5).unwrap(), 1).unwrap();
        assert!(classify(&p).unwrap().is_pyramidal);
        let q = construct::prism(&construct::polygon(5).unwrap()).unwrap();
        assert!(!classify(&q).unwrap().is_pyramidal);
    }

    #[test]
    fn report_serialization_has_fixed_field_order() {
        let report = classify(&construct::m_poly(2, 2).unwrap()).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let keys = [
            "\"facet_pair_dims\"",
            "\"is_simple\"",
            "\"is_semisimple\"",
            "\"is_super_kirkman\"",
            "\"is_2_neighbourly\"",
            "\"is_pyramidal\"",
            "\"nonsimple_subgraph\"",
            "\"same_degree\"",
            "\"component_count\"",
            "\"is_face\"",
            "\"is_missing_face\"",
            "\"is_phantom_simplex\"",
        ];
        let mut last = 0;
        for key in keys {
            let at = json.find(key).unwrap_or_else(|| panic!("{key} missing: {json}"));
            assert!(at > last || last == 0, "{key} out of order: {json}");
            last = at;
        }
        assert!(json.contains("\"is_simple\":false"));
    }
}
