//! Recognition of the named catalogue families by canonical-form matching.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::canonical::{canonical_key, CanonicalKey};
use crate::construct::{self, FaceSelector};
use crate::error::Result;
use crate::polytope::IncidencePolytope;

/// A catalogue family tag. `Unknown` means no template matched.
///
/// Some catalogue entries coincide: the 5-wedge (wedge of a pentagon over an
/// edge) is combinatorially J(3), and the pentagon is J(2). Matching runs in
/// a fixed priority order, so coinciding polytopes always get the same tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    Simplex(usize),
    Polygon(usize),
    Delta(usize, usize),
    MPoly(usize, usize),
    JPoly(usize),
    Cube,
    FiveWedge,
    CappedPrism(usize),
    Unknown,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Simplex(d) => write!(f, "simplex({d})"),
            FamilyTag::Polygon(n) => write!(f, "polygon({n})"),
            FamilyTag::Delta(m, n) => write!(f, "delta({m},{n})"),
            FamilyTag::MPoly(k, m) => write!(f, "M({k},{m})"),
            FamilyTag::JPoly(d) => write!(f, "J({d})"),
            FamilyTag::Cube => write!(f, "cube"),
            FamilyTag::FiveWedge => write!(f, "5-wedge"),
            FamilyTag::CappedPrism(d) => write!(f, "capped-prism({d})"),
            FamilyTag::Unknown => write!(f, "unknown"),
        }
    }
}

impl FamilyTag {
    /// Builds the template polytope for this tag.
    pub fn build(&self) -> Result<IncidencePolytope> {
        match *self {
            FamilyTag::Simplex(d) => construct::simplex(d),
            FamilyTag::Polygon(n) => construct::polygon(n),
            FamilyTag::Delta(m, n) => construct::delta(m, n),
            FamilyTag::MPoly(k, m) => construct::m_poly(k, m),
            FamilyTag::JPoly(d) => construct::j_poly(d),
            FamilyTag::Cube => construct::prism(&construct::polygon(4)?),
            FamilyTag::FiveWedge => construct::wedge(&construct::polygon(5)?, &FaceSelector::Edge(0, 1)),
            FamilyTag::CappedPrism(d) => {
                let base = construct::prism(&construct::simplex(d - 1)?)?;
                let idx = construct::simplex_facet_indices(&base)[0];
                construct::stack(&base, &FaceSelector::Facet(idx))
            }
            FamilyTag::Unknown => Err(crate::error::Error::input("cannot build unknown family")),
        }
    }
}

fn template_key(tag: FamilyTag) -> Result<CanonicalKey> {
    static CACHE: OnceLock<Mutex<HashMap<FamilyTag, CanonicalKey>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(key) = cache.lock().unwrap().get(&tag) {
        return Ok(key.clone());
    }
    let key = canonical_key(&tag.build()?)?;
    cache.lock().unwrap().insert(tag, key.clone());
    Ok(key)
}

/// Candidate tags matching `p`'s dimension, vertex count and facet count.
fn candidates(p: &IncidencePolytope) -> Vec<FamilyTag> {
    let d = p.dim();
    let f0 = p.n_vertices();
    let mut out = Vec::new();
    if f0 == d + 1 {
        out.push(FamilyTag::Simplex(d));
    }
    if d == 2 {
        out.push(FamilyTag::Polygon(f0));
    }
    for m in 1..=d / 2 {
        let n = d - m;
        if n >= 1 && (m + 1) * (n + 1) == f0 {
            out.push(FamilyTag::Delta(m, n));
        }
    }
    if f0 > d && f0 <= 2 * d {
        let k = f0 - d;
        if k >= 1 {
            out.push(FamilyTag::MPoly(k, d - k));
        }
    }
    if d >= 2 && f0 == 3 * d - 1 {
        out.push(FamilyTag::JPoly(d));
    }
    if d == 3 && f0 == 8 {
        out.push(FamilyTag::Cube);
        out.push(FamilyTag::FiveWedge);
    }
    if d >= 2 && f0 == 2 * d + 1 {
        out.push(FamilyTag::CappedPrism(d));
    }
    out
}

/// Identifies `p` as a catalogue family or `Unknown`, by canonical-form
/// comparison against templates with matching counts.
pub fn identify_family(p: &IncidencePolytope) -> Result<FamilyTag> {
    let mut key: Option<CanonicalKey> = None;
    for tag in candidates(p) {
        let template = tag.build()?;
        if template.n_facets() != p.n_facets() || template.dim() != p.dim() {
            continue;
        }
        let mut sizes_p: Vec<usize> = p.facets().iter().map(|f| f.len()).collect();
        let mut sizes_t: Vec<usize> = template.facets().iter().map(|f| f.len()).collect();
        sizes_p.sort_unstable();
        sizes_t.sort_unstable();
        if sizes_p != sizes_t {
            continue;
        }
        if key.is_none() {
            key = Some(canonical_key(p)?);
        }
        if key.as_ref() == Some(&template_key(tag)?) {
            return Ok(tag);
        }
    }
    Ok(FamilyTag::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognises_prisms_as_delta() {
        let p = construct::prism(&construct::simplex(2).unwrap()).unwrap();
        assert_eq!(identify_family(&p).unwrap(), FamilyTag::Delta(1, 2));
    }

    #[test]
    fn five_simple_polytopes_with_d_plus_5_vertices() {
        // Heptagon, cube, 5-wedge, delta(2,2), 5-prism.
        let fixtures: Vec<(IncidencePolytope, FamilyTag)> = vec![
            (construct::polygon(7).unwrap(), FamilyTag::Polygon(7)),
            (
                construct::prism(&construct::polygon(4).unwrap()).unwrap(),
                FamilyTag::Cube,
            ),
            (
                // The 5-wedge coincides with J(3), which wins on priority.
                construct::wedge(&construct::polygon(5).unwrap(), &FaceSelector::Edge(0, 1))
                    .unwrap(),
                FamilyTag::JPoly(3),
            ),
            (construct::delta(2, 2).unwrap(), FamilyTag::Delta(2, 2)),
            (construct::delta(1, 4).unwrap(), FamilyTag::Delta(1, 4)),
        ];
        for (p, expected) in fixtures {
            assert_eq!(p.n_vertices(), p.dim() + 5);
            assert_eq!(identify_family(&p).unwrap(), expected);
        }
    }

    #[test]
    fn recognises_capped_prism_from_glue() {
        let base = construct::prism(&construct::simplex(5).unwrap()).unwrap();
        let idx = construct::simplex_facet_indices(&base)[0];
        let apex = construct::simplex(6).unwrap();
        let glued = construct::glue(
            &base,
            &FaceSelector::Facet(idx),
            &apex,
            &FaceSelector::Facet(0),
            None,
            &[],
        )
        .unwrap();
        assert_eq!(identify_family(&glued).unwrap(), FamilyTag::CappedPrism(6));
    }

    #[test]
    fn unknown_for_off_catalogue() {
        let p = construct::pyramid(&construct::polygon(5).unwrap(), 1).unwrap();
        assert_eq!(identify_family(&p).unwrap(), FamilyTag::Unknown);
    }
}
