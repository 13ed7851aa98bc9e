//! Combinatorial constructions: base families and the operations that
//! combine them, all as pure rules on vertex–facet incidences.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::polytope::{IncidencePolytope, Realizability};
use crate::sanity::sanity_check;

/// Ways of naming a face of a polytope. Selectors resolve through the
/// closure operator, so callers can address faces by vertex lists without
/// knowing lattice internals; `face(...)` must name the exact closed set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FaceSelector {
    Facet(usize),
    Vertex(usize),
    Edge(usize, usize),
    Face(Vec<usize>),
}

impl FaceSelector {
    pub fn resolve(&self, p: &IncidencePolytope) -> Result<BitSet> {
        match self {
            FaceSelector::Facet(i) => p
                .facets()
                .get(*i)
                .cloned()
                .ok_or_else(|| {
                    Error::input(format!("facet index {i} out of range (0..{})", p.n_facets()))
                }),
            FaceSelector::Vertex(v) => {
                let s = p.vertex_set(&[*v])?;
                if p.closure(&s) == s {
                    Ok(s)
                } else {
                    Err(Error::input(format!("vertex({v}) is not a face")))
                }
            }
            FaceSelector::Edge(u, v) => {
                let s = p.vertex_set(&[*u, *v])?;
                if p.closure(&s) == s {
                    Ok(s)
                } else {
                    Err(Error::input(format!("edge({u},{v}) is not an edge")))
                }
            }
            FaceSelector::Face(list) => {
                let s = p.vertex_set(list)?;
                if p.closure(&s) == s {
                    Ok(s)
                } else {
                    Err(Error::input(format!(
                        "face({list:?}) is not closed; its smallest face is {:?}",
                        p.closure(&s)
                    )))
                }
            }
        }
    }

    pub fn to_expr_string(&self) -> String {
        match self {
            FaceSelector::Facet(i) => format!("facet({i})"),
            FaceSelector::Vertex(v) => format!("vertex({v})"),
            FaceSelector::Edge(u, v) => format!("edge({u},{v})"),
            FaceSelector::Face(list) => format!(
                "face({})",
                list.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        }
    }
}

fn compose1(name: &str, a: &IncidencePolytope, rest: &str) -> Option<String> {
    a.provenance
        .as_ref()
        .map(|pa| format!("{name}({pa}{rest})"))
}

fn compose2(name: &str, a: &IncidencePolytope, b: &IncidencePolytope) -> Option<String> {
    match (&a.provenance, &b.provenance) {
        (Some(pa), Some(pb)) => Some(format!("{name}({pa},{pb})")),
        _ => None,
    }
}

/// The d-simplex: d+1 vertices, facets are all d-subsets.
pub fn simplex(d: usize) -> Result<IncidencePolytope> {
    let n = d + 1;
    let facets: Vec<Vec<usize>> = if d == 0 {
        vec![]
    } else {
        (0..n)
            .map(|skip| (0..n).filter(|&v| v != skip).collect())
            .collect()
    };
    let mut p = IncidencePolytope::new(d, n, facets, Realizability::Constructed)?;
    p.provenance = Some(format!("simplex({d})"));
    Ok(p)
}

/// The n-gon.
pub fn polygon(n: usize) -> Result<IncidencePolytope> {
    if n < 3 {
        return Err(Error::precondition("polygon requires n >= 3"));
    }
    let facets = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
    let mut p = IncidencePolytope::new(2, n, facets, Realizability::Constructed)?;
    p.provenance = Some(format!("polygon({n})"));
    Ok(p)
}

/// The cyclic polytope C(d, n): facets are the d-subsets of n points on the
/// moment curve picked out by Gale's evenness condition — every maximal run
/// of chosen positions not touching either end has even length.
pub fn cyclic(d: usize, n: usize) -> Result<IncidencePolytope> {
    if d < 2 || n < d + 1 {
        return Err(Error::precondition("cyclic requires n >= d+1 >= 3"));
    }
    let mut facets: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::with_capacity(d);
    fn place(
        start: usize,
        remaining: usize,
        n: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for p in start..n {
            if n - p < remaining {
                break;
            }
            let max_len = remaining.min(n - p);
            for len in 1..=max_len {
                let interior = p > 0 && p + len < n;
                if interior && len % 2 == 1 {
                    continue;
                }
                current.extend(p..p + len);
                if remaining == len {
                    out.push(current.clone());
                } else {
                    place(p + len + 1, remaining - len, n, current, out);
                }
                current.truncate(current.len() - len);
            }
        }
    }
    place(0, d, n, &mut current, &mut facets);
    let mut p = IncidencePolytope::new(d, n, facets, Realizability::Constructed)?;
    p.provenance = Some(format!("cyclic({d},{n})"));
    Ok(p)
}

/// Cartesian product. Vertex (u, v) gets index `u * n_q + v`.
pub fn product(p: &IncidencePolytope, q: &IncidencePolytope) -> Result<IncidencePolytope> {
    if p.dim() < 1 || q.dim() < 1 {
        return Err(Error::precondition("product requires dimensions >= 1"));
    }
    let (np, nq) = (p.n_vertices(), q.n_vertices());
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for f in p.facets() {
        facets.push(
            f.iter()
                .flat_map(|u| (0..nq).map(move |v| u * nq + v))
                .collect(),
        );
    }
    for g in q.facets() {
        facets.push(
            (0..np)
                .flat_map(|u| g.iter().map(move |v| u * nq + v))
                .collect(),
        );
    }
    let mut out = IncidencePolytope::new(
        p.dim() + q.dim(),
        np * nq,
        facets,
        p.realizability.combine(q.realizability),
    )?;
    out.provenance = compose2("product", p, q);
    Ok(out)
}

/// Free join: vertex sets disjoint, each facet of one side joined to the
/// whole of the other; dimension is the sum plus one. A point contributes
/// the empty set as its sole facet, so the join of a point is a pyramid.
pub fn free_join(p: &IncidencePolytope, q: &IncidencePolytope) -> Result<IncidencePolytope> {
    let (np, nq) = (p.n_vertices(), q.n_vertices());
    let effective = |poly: &IncidencePolytope| -> Vec<Vec<usize>> {
        if poly.dim() == 0 {
            vec![vec![]]
        } else {
            poly.facets().iter().map(|f| f.to_vec()).collect()
        }
    };
    let all_p: Vec<usize> = (0..np).collect();
    let all_q: Vec<usize> = (np..np + nq).collect();
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for f in effective(p) {
        let mut list = f;
        list.extend(&all_q);
        facets.push(list);
    }
    for g in effective(q) {
        let mut list: Vec<usize> = g.iter().map(|v| v + np).collect();
        list.extend(&all_p);
        facets.push(list);
    }
    let mut out = IncidencePolytope::new(
        p.dim() + q.dim() + 1,
        np + nq,
        facets,
        p.realizability.combine(q.realizability),
    )?;
    out.provenance = compose2("free_join", p, q);
    Ok(out)
}

/// k-fold pyramid: the free join with a (k−1)-simplex; base vertices keep
/// their indices and the k apexes come last.
pub fn pyramid(p: &IncidencePolytope, k: usize) -> Result<IncidencePolytope> {
    if k < 1 {
        return Err(Error::precondition("pyramid requires k >= 1"));
    }
    let apex = simplex(k - 1)?;
    let mut out = free_join(p, &apex)?;
    out.provenance = compose1("pyramid", p, &format!(",{k}"));
    Ok(out)
}

/// Prism: the product with a segment. Copies of base vertex `u` get indices
/// `2u` and `2u+1`.
pub fn prism(p: &IncidencePolytope) -> Result<IncidencePolytope> {
    if p.dim() < 1 {
        return Err(Error::precondition("prism requires dimension >= 1"));
    }
    let mut out = product(p, &simplex(1)?)?;
    out.provenance = compose1("prism", p, "");
    Ok(out)
}

/// Product of an m-simplex and an n-simplex; simple, with (m+1)(n+1)
/// vertices in dimension m+n.
pub fn delta(m: usize, n: usize) -> Result<IncidencePolytope> {
    if m < 1 || n < 1 {
        return Err(Error::precondition("delta requires m, n >= 1"));
    }
    let mut out = product(&simplex(m)?, &simplex(n)?)?;
    out.provenance = Some(format!("delta({m},{n})"));
    Ok(out)
}

/// The (m)-fold pyramid over the simplicial k-prism; 2k+m vertices in
/// dimension k+m.
pub fn m_poly(k: usize, m: usize) -> Result<IncidencePolytope> {
    if k < 1 {
        return Err(Error::precondition("M(k,m) requires k >= 1"));
    }
    let base = if k == 1 {
        simplex(1)?
    } else {
        prism(&simplex(k - 1)?)?
    };
    let mut out = if m == 0 { base } else { pyramid(&base, m)? };
    out.provenance = Some(format!("M({k},{m})"));
    Ok(out)
}

/// The simple polytope obtained by truncating one vertex of the simplicial
/// d-prism; 3d−1 vertices.
pub fn j_poly(d: usize) -> Result<IncidencePolytope> {
    if d < 2 {
        return Err(Error::precondition("J(d) requires d >= 2"));
    }
    let base = prism(&simplex(d - 1)?)?;
    let mut out = truncate(&base, &FaceSelector::Vertex(0))?;
    out.provenance = Some(format!("J({d})"));
    Ok(out)
}

/// Wedge of `p` over a proper nonempty face: two copies of `p` glued along
/// the face, one vertical facet per non-selected facet; dimension d+1 and
/// 2·f0(p) − f0(face) vertices.
pub fn wedge(p: &IncidencePolytope, selector: &FaceSelector) -> Result<IncidencePolytope> {
    let face = selector.resolve(p)?;
    let n = p.n_vertices();
    if face.is_empty() || face.len() == n {
        return Err(Error::precondition("wedge requires a proper nonempty face"));
    }
    // Copy 1 keeps original indices; copy 2 renumbers vertices outside the
    // face to n, n+1, ... in ascending order.
    let mut second = vec![usize::MAX; n];
    let mut next = n;
    for (v, slot) in second.iter_mut().enumerate() {
        *slot = if face.contains(v) {
            v
        } else {
            let idx = next;
            next += 1;
            idx
        };
    }
    let total = next;
    let mut facets: Vec<Vec<usize>> = Vec::new();
    facets.push((0..n).collect());
    facets.push((0..n).map(|v| second[v]).collect());
    for g in p.facets() {
        if *g == face {
            continue;
        }
        let mut list: Vec<usize> = Vec::new();
        for v in g.iter() {
            list.push(v);
            if !face.contains(v) {
                list.push(second[v]);
            }
        }
        facets.push(list);
    }
    let mut out = IncidencePolytope::new(p.dim() + 1, total, facets, p.realizability)?;
    out.provenance = compose1("wedge", p, &format!(",{}", selector.to_expr_string()));
    Ok(out)
}

/// Truncation of a proper nonempty face: a hyperplane strictly separates the
/// face's vertices from the rest, new vertices are the crossed edges, and a
/// transformed facet is dropped when its vertex set ends up inside another's.
pub fn truncate(p: &IncidencePolytope, selector: &FaceSelector) -> Result<IncidencePolytope> {
    let face = selector.resolve(p)?;
    let n = p.n_vertices();
    if face.is_empty() || face.len() == n {
        return Err(Error::precondition(
            "truncate requires a proper nonempty face",
        ));
    }
    let survivors: Vec<usize> = (0..n).filter(|&v| !face.contains(v)).collect();
    let rank: std::collections::HashMap<usize, usize> = survivors
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    // Crossings (u, w): u inside the face, w outside, {u,w} an edge.
    let mut crossings: Vec<(usize, usize)> = Vec::new();
    for (a, b) in p.graph() {
        match (face.contains(a), face.contains(b)) {
            (true, false) => crossings.push((a, b)),
            (false, true) => crossings.push((b, a)),
            _ => {}
        }
    }
    crossings.sort_unstable();
    let crossing_index: std::collections::HashMap<(usize, usize), usize> = crossings
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, survivors.len() + i))
        .collect();
    let total = survivors.len() + crossings.len();

    let mut facet_sets: Vec<BitSet> = Vec::new();
    facet_sets.push(BitSet::from_indices(
        total,
        &(survivors.len()..total).collect::<Vec<_>>(),
    ));
    for g in p.facets() {
        if g.is_subset(&face) {
            continue;
        }
        let mut list: Vec<usize> = g
            .iter()
            .filter(|v| !face.contains(*v))
            .map(|v| rank[&v])
            .collect();
        for (&(u, w), &idx) in &crossing_index {
            if g.contains(u) && g.contains(w) {
                list.push(idx);
            }
        }
        facet_sets.push(BitSet::from_indices(total, &list));
    }
    facet_sets.sort();
    facet_sets.dedup();
    let kept: Vec<Vec<usize>> = facet_sets
        .iter()
        .filter(|f| {
            !facet_sets
                .iter()
                .any(|g| *f != g && f.is_subset(g))
        })
        .map(|f| f.to_vec())
        .collect();
    let mut out = IncidencePolytope::new(p.dim(), total, kept, p.realizability)?;
    out.provenance = compose1("truncate", p, &format!(",{}", selector.to_expr_string()));
    Ok(out)
}

/// Graph-connected sum: glues `p2` onto `p1` along simplex facets.
///
/// `map`, when given, lists the image of the i-th smallest vertex of the
/// first glued facet; omitted, vertices are identified in sorted order.
/// Each `merge` pair names facet indices (into each operand's sorted facet
/// list) that meet the shared simplex in the same ridge; the pair is folded
/// into a single facet of the sum. The result is flagged `Asserted` and
/// must pass the sanity battery.
pub fn glue(
    p1: &IncidencePolytope,
    sel1: &FaceSelector,
    p2: &IncidencePolytope,
    sel2: &FaceSelector,
    map: Option<&[usize]>,
    merges: &[(usize, usize)],
) -> Result<IncidencePolytope> {
    let d = p1.dim();
    if d != p2.dim() {
        return Err(Error::precondition("glue requires equal dimensions"));
    }
    if d < 2 {
        return Err(Error::precondition("glue requires dimension >= 2"));
    }
    let f1 = sel1.resolve(p1)?;
    let f2 = sel2.resolve(p2)?;
    for (poly, f, which) in [(p1, &f1, "first"), (p2, &f2, "second")] {
        if !poly.facets().contains(f) {
            return Err(Error::precondition(format!(
                "{which} selector does not name a facet"
            )));
        }
        if f.len() != d {
            return Err(Error::precondition(format!(
                "{which} glued facet has {} vertices; a simplex facet needs exactly {d}",
                f.len()
            )));
        }
    }
    let f1_list = f1.to_vec();
    let f2_list = f2.to_vec();
    let image: Vec<usize> = match map {
        None => f2_list.clone(),
        Some(m) => {
            if m.len() != d {
                return Err(Error::precondition("map length must equal the dimension"));
            }
            let mut sorted = m.to_vec();
            sorted.sort_unstable();
            if sorted != f2_list {
                return Err(Error::precondition(
                    "map must be a bijection onto the second glued facet",
                ));
            }
            m.to_vec()
        }
    };
    // trans[v2] = result index of the vertex v2 of p2.
    let n1 = p1.n_vertices();
    let n2 = p2.n_vertices();
    let mut trans = vec![usize::MAX; n2];
    for (i, &v2) in image.iter().enumerate() {
        trans[v2] = f1_list[i];
    }
    let mut next = n1;
    for slot in trans.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    let total = next;

    let translate = |g: &BitSet| -> BitSet {
        let list: Vec<usize> = g.iter().map(|v| trans[v]).collect();
        BitSet::from_indices(total, &list)
    };
    let widen = |g: &BitSet| -> BitSet { BitSet::from_indices(total, &g.to_vec()) };

    let mut from1: Vec<Option<BitSet>> = p1
        .facets()
        .iter()
        .map(|g| if g == &f1 { None } else { Some(widen(g)) })
        .collect();
    let mut from2: Vec<Option<BitSet>> = p2
        .facets()
        .iter()
        .map(|g| if g == &f2 { None } else { Some(translate(g)) })
        .collect();

    let shared = widen(&f1);
    let mut merged: Vec<BitSet> = Vec::new();
    for &(i1, i2) in merges {
        let g1 = from1
            .get(i1)
            .and_then(|g| g.clone())
            .ok_or_else(|| Error::precondition(format!("merge facet {i1} unavailable")))?;
        let g2 = from2
            .get(i2)
            .and_then(|g| g.clone())
            .ok_or_else(|| Error::precondition(format!("merge facet {i2} unavailable")))?;
        let r1 = g1.intersection(&shared);
        let r2 = g2.intersection(&shared);
        if r1.len() != d - 1 || r1 != r2 {
            return Err(Error::precondition(format!(
                "merge pair ({i1},{i2}) does not share a ridge of the glued simplex"
            )));
        }
        merged.push(g1.union(&g2));
        from1[i1] = None;
        from2[i2] = None;
    }

    let mut facets: Vec<Vec<usize>> = Vec::new();
    for g in from1.into_iter().chain(from2).flatten() {
        facets.push(g.to_vec());
    }
    for g in merged {
        facets.push(g.to_vec());
    }
    let mut out = IncidencePolytope::new(d, total, facets, Realizability::Asserted)?;
    let report = sanity_check(&out)?;
    if !report.passed() {
        return Err(Error::non_polytopal(format!(
            "glue result fails sanity checks: {}",
            report.failures().join("; ")
        )));
    }
    out.provenance = match (&p1.provenance, &p2.provenance) {
        (Some(a), Some(b)) => {
            let mut s = format!(
                "glue({a},{},{b},{}",
                sel1.to_expr_string(),
                sel2.to_expr_string()
            );
            if let Some(m) = map {
                s.push_str(&format!(
                    ",map=[{}]",
                    m.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
                ));
            }
            if !merges.is_empty() {
                s.push_str(&format!(
                    ",merge=[{}]",
                    merges
                        .iter()
                        .map(|(a, b)| format!("({a},{b})"))
                        .collect::<Vec<_>>()
                        .join(",")
                ));
            }
            s.push(')');
            Some(s)
        }
        _ => None,
    };
    Ok(out)
}

/// Stacks a single apex on a simplex facet. Stacking a vertex beyond a facet
/// is always geometrically realizable, so the result stays `Constructed`.
pub fn stack(p: &IncidencePolytope, selector: &FaceSelector) -> Result<IncidencePolytope> {
    let d = p.dim();
    let apex_simplex = simplex(d)?;
    let mut out = glue(
        p,
        selector,
        &apex_simplex,
        &FaceSelector::Facet(0),
        None,
        &[],
    )?;
    out.realizability = p.realizability;
    out.provenance = compose1("stack", p, &format!(",{}", selector.to_expr_string()));
    Ok(out)
}

/// Indices of the simplex facets of `p` (facets with exactly `dim` vertices).
pub fn simplex_facet_indices(p: &IncidencePolytope) -> Vec<usize> {
    p.facets()
        .iter()
        .enumerate()
        .filter(|(_, f)| f.len() == p.dim())
        .map(|(i, _)| i)
        .collect()
}
