//! The built-in structural checks.
//!
//! Each check is a hypothesis/conclusion pair over a precomputed
//! [`Analysis`]. Evaluation yields `Vacuous` when the hypothesis misses,
//! otherwise `Pass` or `Fail` with a reason. `Observe`-mode checks record
//! outcomes but never fail a suite: they cover statements the source
//! material poses as expectations rather than theorems.

use super::Analysis;
use crate::canonical::is_isomorphic;
use crate::construct;
use crate::family::{identify_family, FamilyTag};
use crate::figures;
use crate::polytope::IncidencePolytope;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Assert,
    Observe,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail(String),
    Vacuous,
}

type Conclusion = std::result::Result<(), String>;

pub struct TheoremCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub mode: CheckMode,
    /// A suite fails if a must-hit check is vacuous on every member.
    pub must_hit: bool,
    hypothesis: fn(&Analysis) -> bool,
    conclusion: fn(&Analysis) -> Conclusion,
}

impl TheoremCheck {
    pub fn evaluate(&self, a: &Analysis) -> CheckOutcome {
        if !(self.hypothesis)(a) {
            return CheckOutcome::Vacuous;
        }
        match (self.conclusion)(a) {
            Ok(()) => CheckOutcome::Pass,
            Err(reason) => CheckOutcome::Fail(reason),
        }
    }
}

fn fail(msg: String) -> Conclusion {
    Err(msg)
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Conclusion {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn iso(a: &IncidencePolytope, b: &IncidencePolytope, what: &str) -> Conclusion {
    match is_isomorphic(a, b) {
        Ok(true) => Ok(()),
        Ok(false) => fail(format!("{what}: not isomorphic")),
        Err(e) => fail(format!("{what}: {e}")),
    }
}

fn nonsimple(a: &Analysis) -> bool {
    a.profile.xi > 0
}

fn all_nonsimple_excess_are(a: &Analysis, k: i64) -> bool {
    a.profile
        .nonsimple
        .iter()
        .all(|&v| a.profile.excesses[v] == k)
}

fn pairwise_adjacent(a: &Analysis, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &u)| {
        set[i + 1..].iter().all(|&v| a.adjacency[u].contains(v))
    })
}

fn nonsimple_set(a: &Analysis) -> crate::bitset::BitSet {
    crate::bitset::BitSet::from_indices(a.polytope.n_vertices(), &a.profile.nonsimple)
}

/// A facet is simple (as a (d−1)-polytope) iff each of its vertices has
/// exactly d−1 neighbours inside it.
fn facet_is_simple(a: &Analysis, facet: usize) -> bool {
    let d = a.polytope.dim();
    let f = &a.polytope.facets()[facet];
    f.iter()
        .all(|v| a.adjacency[v].intersection(f).len() == d - 1)
}

// --- individual conclusions -------------------------------------------------

fn excess_lower(a: &Analysis) -> Conclusion {
    require(a.profile.xi >= a.dim() - 2, || {
        format!("xi = {} < d-2 = {}", a.profile.xi, a.dim() - 2)
    })
}

fn excess_parity(a: &Analysis) -> Conclusion {
    require(a.profile.xi % 2 == 0, || {
        format!("odd xi = {} in even dimension {}", a.profile.xi, a.dim())
    })
}

fn forbidden_range(a: &Analysis) -> Conclusion {
    fail(format!(
        "xi = {} lies in a forbidden range for d = {}",
        a.profile.xi,
        a.dim()
    ))
}

fn nonsimple_neighbour_bound(a: &Analysis) -> Conclusion {
    let d = a.dim();
    for &v in &a.profile.nonsimple {
        let k = a.profile.excesses[v];
        let need = d - k - 2;
        let have = a.nonsimple_neighbours(v) as i64;
        if have < need {
            return fail(format!(
                "vertex {v} (excess {k}) has {have} nonsimple neighbours, needs {need}"
            ));
        }
    }
    Ok(())
}

fn facet_pair_bound(a: &Analysis) -> Conclusion {
    let d = a.dim();
    for meet in &a.report.facet_pair_dims {
        if meet.rank < 0 {
            continue;
        }
        let j = meet.rank as i64;
        let common = a.polytope.facets()[meet.a].intersection(&a.polytope.facets()[meet.b]);
        for v in common.iter() {
            if a.profile.excesses[v] < d - 2 - j {
                return fail(format!(
                    "vertex {v} in facets {}∩{} (dim {j}) has excess {} < {}",
                    meet.a,
                    meet.b,
                    a.profile.excesses[v],
                    d - 2 - j
                ));
            }
        }
    }
    Ok(())
}

fn semisimple_min_excess_4(a: &Analysis) -> Conclusion {
    for &v in &a.profile.nonsimple {
        if a.profile.excesses[v] < 4 {
            return fail(format!(
                "semisimple with nonsimple vertex {v} of excess {}",
                a.profile.excesses[v]
            ));
        }
    }
    Ok(())
}

fn semisimple_k_bounds(a: &Analysis) -> Conclusion {
    let d = a.dim();
    let k = a.profile.nonsimple.len() as i64;
    let floor = 2 * (d - k - 2);
    for &v in &a.profile.nonsimple {
        if a.profile.excesses[v] < floor {
            return fail(format!(
                "vertex {v} has excess {} < 2(d-k-2) = {floor}",
                a.profile.excesses[v]
            ));
        }
    }
    require(a.f0() >= 3 * d - 2 * k - 3, || {
        format!("f0 = {} < 3d-2k-3 = {}", a.f0(), 3 * d - 2 * k - 3)
    })
}

fn semisimple_two_nonsimple(a: &Analysis) -> Conclusion {
    require(a.profile.xi >= 4 * a.dim() - 16, || {
        format!("xi = {} < 4d-16 = {}", a.profile.xi, 4 * a.dim() - 16)
    })
}

fn simple_vertex_counts(a: &Analysis) -> Conclusion {
    let d = a.dim();
    let f0 = a.f0();
    let ok = f0 == d + 1
        || f0 == 2 * d
        || f0 == 3 * d - 3
        || f0 == 3 * d - 1
        || f0 >= 4 * d - 8;
    require(ok, || format!("simple with f0 = {f0}, d = {d}"))
}

fn simple_catalogue(a: &Analysis) -> Conclusion {
    let d = a.polytope.dim();
    let tag = match identify_family(&a.polytope) {
        Ok(t) => t,
        Err(e) => return fail(format!("family identification failed: {e}")),
    };
    let ok = matches!(
        tag,
        FamilyTag::Simplex(_)
            | FamilyTag::JPoly(_)
            | FamilyTag::Cube
            | FamilyTag::Delta(1, _)
            | FamilyTag::Delta(2, _)
            | FamilyTag::Delta(3, 3)
            | FamilyTag::Delta(3, 4)
    ) || (d == 2 && matches!(tag, FamilyTag::Polygon(n) if n <= 5));
    require(ok, || {
        format!("simple polytope with f0 < 3d identified as {tag}")
    })
}

fn super_kirkman_small_is_simplex(a: &Analysis) -> Conclusion {
    let d = a.polytope.dim();
    if a.f0() != a.dim() + 1 {
        return fail(format!("super-Kirkman with f0 = {} <= d+4", a.f0()));
    }
    let simplex = construct::simplex(d).map_err(|e| e.to_string())?;
    iso(&a.polytope, &simplex, "super-Kirkman small polytope vs simplex")
}

fn super_kirkman_d_plus_5(a: &Analysis) -> Conclusion {
    let d = a.polytope.dim();
    if d < 4 {
        return fail(format!("super-Kirkman with d+5 vertices in dimension {d}"));
    }
    let template = if d == 4 {
        construct::delta(2, 2)
    } else {
        construct::pyramid(&construct::delta(2, 2).map_err(|e| e.to_string())?, d - 4)
    }
    .map_err(|e| e.to_string())?;
    iso(&a.polytope, &template, "vs multifold pyramid over delta(2,2)")
}

fn xi_d_minus_2_structure(a: &Analysis) -> Conclusion {
    let d = a.dim();
    let ns = &a.profile.nonsimple;
    if ns.len() == 1 && a.profile.excesses[ns[0]] == d - 2 {
        return Ok(());
    }
    if ns.len() as i64 == d - 2 && all_nonsimple_excess_are(a, 1) {
        let set = nonsimple_set(a);
        let rank = a.lattice.rank_of(&set);
        if rank == Some(ns.len() as i32 - 1) {
            return Ok(());
        }
        return fail(format!(
            "d-2 excess-1 vertices whose set has rank {rank:?}, not a simplex face"
        ));
    }
    fail(format!(
        "xi = d-2 with excess distribution {:?}",
        ns.iter().map(|&v| a.profile.excesses[v]).collect::<Vec<_>>()
    ))
}

fn xi_d_minus_1_dimensions(a: &Analysis) -> Conclusion {
    require(matches!(a.dim(), 3 | 5), || {
        format!("xi = d-1 in dimension {}", a.dim())
    })
}

fn xi_d_structure(a: &Analysis) -> Conclusion {
    let d = a.dim();
    let f0 = a.f0();
    if !(f0 == d + 2 || f0 == 2 * d + 1 || f0 >= 3 * d) {
        return fail(format!("xi = d with f0 = {f0}"));
    }
    if a.profile.nonsimple.len() as i64 != d || !all_nonsimple_excess_are(a, 1) {
        return fail("xi = d without d excess-1 vertices".into());
    }
    require(pairwise_adjacent(a, &a.profile.nonsimple), || {
        "nonsimple vertices not pairwise adjacent".into()
    })
}

fn xi_5_in_dim_5(a: &Analysis) -> Conclusion {
    let f0 = a.f0();
    if a.profile.nonsimple.len() != 5 || !all_nonsimple_excess_are(a, 1) {
        return fail("5-polytope with xi = 5 lacking five excess-1 vertices".into());
    }
    require(f0 == 7 || f0 == 11 || (f0 >= 15 && f0 % 2 == 1), || {
        format!("xi = 5, d = 5, f0 = {f0}")
    })
}

fn xi_d_plus_1_dimensions(a: &Analysis) -> Conclusion {
    require(matches!(a.dim(), 3 | 5 | 7), || {
        format!("xi = d+1 in dimension {}", a.dim())
    })
}

fn xi_d_plus_2_neighbourly(a: &Analysis) -> Conclusion {
    require(
        a.report.is_two_neighbourly && a.f0() == a.dim() + 2,
        || {
            format!(
                "xi = d+2, d >= 9 but f0 = {} / 2-neighbourly = {}",
                a.f0(),
                a.report.is_two_neighbourly
            )
        },
    )
}

fn xi_2d_minus_6_structure(a: &Analysis) -> Conclusion {
    let d = a.polytope.dim();
    let di = d as i64;
    let ns = &a.profile.nonsimple;
    if !a.report.nonsimple_subgraph.same_degree {
        return fail("nonsimple vertices have different degrees".into());
    }
    let set = nonsimple_set(a);
    if a.polytope.closure(&set) != set {
        return fail("nonsimple vertices do not form a face".into());
    }
    let p = &a.polytope;
    match ns.len() as i64 {
        1 => {
            let v = ns[0];
            if a.profile.excesses[v] != 2 * di - 6 {
                return fail("single nonsimple vertex with wrong excess".into());
            }
            let fig = figures::vertex_figure(p, v).map_err(|e| e.to_string())?;
            let template = construct::delta(2, d - 3).map_err(|e| e.to_string())?;
            iso(&fig, &template, "vertex figure vs delta(2,d-3)")
        }
        2 => {
            if !all_nonsimple_excess_are(a, di - 3) {
                return fail("two nonsimple vertices with wrong excesses".into());
            }
            if a.lattice.rank_of(&set) != Some(1) {
                return fail("the two nonsimple vertices are not an edge face".into());
            }
            let fig =
                figures::face_figure_with(p, &a.lattice, &set).map_err(|e| e.to_string())?;
            let template = construct::delta(1, d - 3).map_err(|e| e.to_string())?;
            iso(&fig, &template, "edge face figure vs the (d-2)-prism")
        }
        k if k == di - 3 => {
            if !all_nonsimple_excess_are(a, 2) {
                return fail("d-3 nonsimple vertices with wrong excesses".into());
            }
            if a.lattice.rank_of(&set) != Some((d - 4) as i32) {
                return fail("nonsimple set is not a (d-4)-face".into());
            }
            // A (d-4)-face on d-3 vertices is a simplex.
            let fig =
                figures::face_figure_with(p, &a.lattice, &set).map_err(|e| e.to_string())?;
            let template = construct::delta(1, 2).map_err(|e| e.to_string())?;
            iso(&fig, &template, "simplex face figure vs the 3-prism")
        }
        k if k == 2 * di - 6 => {
            if !all_nonsimple_excess_are(a, 1) {
                return fail("2d-6 nonsimple vertices with wrong excesses".into());
            }
            if a.lattice.rank_of(&set) != Some((d - 3) as i32) {
                return fail("nonsimple set is not a (d-3)-face".into());
            }
            let as_poly = figures::face_as_polytope_with(p, &a.lattice, &set)
                .map_err(|e| e.to_string())?;
            let prism_template = construct::delta(1, d - 4).map_err(|e| e.to_string())?;
            iso(&as_poly, &prism_template, "nonsimple face vs the (d-3)-prism")?;
            let fig =
                figures::face_figure_with(p, &a.lattice, &set).map_err(|e| e.to_string())?;
            let quad = construct::polygon(4).map_err(|e| e.to_string())?;
            iso(&fig, &quad, "prism face figure vs a quadrilateral")
        }
        k => fail(format!("xi = 2d-6 with {k} nonsimple vertices")),
    }
}

fn no_point_meet(a: &Analysis) -> Conclusion {
    for meet in &a.report.facet_pair_dims {
        if meet.rank == 0 {
            return fail(format!(
                "facets {} and {} intersect in a single vertex",
                meet.a, meet.b
            ));
        }
    }
    Ok(())
}

fn subridge_structure(a: &Analysis) -> Conclusion {
    let p = &a.polytope;
    let d = p.dim();
    let di = d as i64;
    let subridge_rank = d as i32 - 3;
    for meet in &a.report.facet_pair_dims {
        if meet.rank != subridge_rank {
            continue;
        }
        let (fa, fb) = (&p.facets()[meet.a], &p.facets()[meet.b]);
        let s = fa.intersection(fb);
        if s.len() != d - 2 {
            return fail(format!(
                "subridge on {} vertices is not a simplex",
                s.len()
            ));
        }
        for idx in [meet.a, meet.b] {
            if !facet_is_simple(a, idx) {
                return fail(format!("facet {idx} meeting in a subridge is not simple"));
            }
        }
        let union = fa.union(fb);
        for v in s.iter() {
            if a.profile.excesses[v] != 1 {
                return fail(format!(
                    "subridge vertex {v} has excess {}",
                    a.profile.excesses[v]
                ));
            }
            if !a.adjacency[v].is_subset(&union) {
                return fail(format!(
                    "subridge vertex {v} has neighbours outside the two facets"
                ));
            }
        }
        for &v in &a.profile.nonsimple {
            if !union.contains(v) {
                return fail(format!(
                    "nonsimple vertex {v} lies outside the subridge facets"
                ));
            }
            if a.profile.excesses[v] != 1 {
                return fail(format!(
                    "nonsimple vertex {v} has excess {} != 1 (xi in [d-1, 2d-7])",
                    a.profile.excesses[v]
                ));
            }
        }
        let _ = di;
    }
    Ok(())
}

fn observed_2d_minus_5(a: &Analysis) -> Conclusion {
    require(matches!(a.dim(), 3 | 5 | 7), || {
        format!("xi = 2d-5 observed in dimension {}", a.dim())
    })
}

fn observed_connected_nonsimple(a: &Analysis) -> Conclusion {
    require(a.report.nonsimple_subgraph.component_count == 1, || {
        format!(
            "nonsimple subgraph has {} components",
            a.report.nonsimple_subgraph.component_count
        )
    })
}

fn observed_semisimple_shape(a: &Analysis) -> Conclusion {
    // Coverage statistic: is every semisimple non-simple member a multifold
    // pyramid over a product of simplices?
    let p = &a.polytope;
    let d = p.dim();
    let f0 = p.n_vertices();
    for m in 2..d {
        for n in m..d {
            if m + n > d {
                break;
            }
            let k = d - m - n;
            if (m + 1) * (n + 1) + k != f0 {
                continue;
            }
            let base = construct::delta(m, n).map_err(|e| e.to_string())?;
            let template = if k == 0 {
                base
            } else {
                construct::pyramid(&base, k).map_err(|e| e.to_string())?
            };
            if let Ok(true) = is_isomorphic(p, &template) {
                return Ok(());
            }
        }
    }
    fail("semisimple non-simple member outside the pyramid-over-delta families".into())
}

// --- the registry -----------------------------------------------------------

macro_rules! check {
    ($id:literal, $statement:literal, $mode:expr, $must:expr, $hyp:expr, $concl:expr) => {
        TheoremCheck {
            id: $id,
            statement: $statement,
            mode: $mode,
            must_hit: $must,
            hypothesis: $hyp,
            conclusion: $concl,
        }
    };
}

/// The fixed list of built-in checks.
pub fn builtin_checks() -> Vec<TheoremCheck> {
    use CheckMode::*;
    vec![
        check!(
            "EXC-LOWER",
            "a nonsimple d-polytope has excess degree at least d-2",
            Assert,
            false,
            nonsimple,
            excess_lower
        ),
        check!(
            "EXC-PARITY",
            "the excess degree is even when d is even",
            Assert,
            false,
            |a| a.dim() % 2 == 0,
            excess_parity
        ),
        check!(
            "EXC-GAP-LOW",
            "no polytope has excess degree in [1, d-3]",
            Assert,
            false,
            |a| (1..=a.dim() - 3).contains(&a.profile.xi),
            forbidden_range
        ),
        check!(
            "EXC-GAP-HIGH",
            "no polytope has excess degree in [d+3, 2d-7]",
            Assert,
            false,
            |a| (a.dim() + 3..=2 * a.dim() - 7).contains(&a.profile.xi),
            forbidden_range
        ),
        check!(
            "NSV-NEIGHBOURS",
            "a vertex of excess k has at least d-k-2 nonsimple neighbours",
            Assert,
            false,
            nonsimple,
            nonsimple_neighbour_bound
        ),
        check!(
            "FACETPAIR",
            "a vertex in a facet intersection of dimension j has excess at least d-2-j",
            Assert,
            false,
            |a| a.report.facet_pair_dims.iter().any(|m| m.rank >= 0),
            facet_pair_bound
        ),
        check!(
            "SEMI-MIN4",
            "in a semisimple nonsimple polytope every nonsimple vertex has excess at least 4",
            Assert,
            false,
            |a| a.report.is_semisimple && nonsimple(a),
            semisimple_min_excess_4
        ),
        check!(
            "SEMI-K",
            "semisimple with k nonsimple vertices: each excess >= 2(d-k-2) and f0 >= 3d-2k-3",
            Assert,
            false,
            |a| a.report.is_semisimple && nonsimple(a),
            semisimple_k_bounds
        ),
        check!(
            "SEMI-TWO",
            "a semisimple polytope with two or more nonsimple vertices has excess at least 4d-16",
            Assert,
            false,
            |a| a.report.is_semisimple && a.profile.nonsimple.len() >= 2,
            semisimple_two_nonsimple
        ),
        check!(
            "SIMPLE-F0",
            "a simple polytope has f0 in {d+1, 2d, 3d-3, 3d-1} or f0 >= 4d-8",
            Assert,
            false,
            |a| a.profile.is_simple(),
            simple_vertex_counts
        ),
        check!(
            "SIMPLE-CAT",
            "a simple polytope with fewer than 3d vertices is a simplex, a prism, delta(2,d-2), delta(3,3), delta(3,4) or J(d)",
            Assert,
            false,
            |a| a.profile.is_simple() && a.f0() < 3 * a.dim(),
            simple_catalogue
        ),
        check!(
            "SK-SMALL",
            "a super-Kirkman polytope with at most d+4 vertices is a simplex",
            Assert,
            false,
            |a| a.report.is_super_kirkman && a.f0() <= a.dim() + 4,
            super_kirkman_small_is_simplex
        ),
        check!(
            "SK-D5",
            "a super-Kirkman polytope with d+5 vertices is a multifold pyramid over delta(2,2)",
            Assert,
            false,
            |a| a.report.is_super_kirkman && a.f0() == a.dim() + 5,
            super_kirkman_d_plus_5
        ),
        check!(
            "SK-D6",
            "no super-Kirkman polytope has d+6 vertices",
            Assert,
            false,
            |a| a.report.is_super_kirkman && a.f0() == a.dim() + 6,
            forbidden_range
        ),
        check!(
            "XI-D-2",
            "excess d-2 concentrates in one vertex or d-2 excess-1 vertices forming a simplex face",
            Assert,
            false,
            |a| a.profile.xi > 0 && a.profile.xi == a.dim() - 2,
            xi_d_minus_2_structure
        ),
        check!(
            "XI-D-1",
            "excess degree d-1 occurs only in dimensions 3 and 5",
            Assert,
            false,
            |a| a.profile.xi > 0 && a.profile.xi == a.dim() - 1,
            xi_d_minus_1_dimensions
        ),
        check!(
            "XI-D",
            "excess d with d >= 7: f0 in {d+2, 2d+1} or >= 3d, with d pairwise-adjacent excess-1 vertices",
            Assert,
            false,
            |a| a.profile.xi == a.dim() && a.dim() >= 7,
            xi_d_structure
        ),
        check!(
            "XI-D5",
            "a 5-polytope with excess 5 has five excess-1 vertices and f0 in {7, 11} or odd >= 15",
            Assert,
            false,
            |a| a.dim() == 5 && a.profile.xi == 5,
            xi_5_in_dim_5
        ),
        check!(
            "XI-D+1",
            "excess degree d+1 occurs only in dimensions 3, 5 and 7",
            Assert,
            false,
            |a| a.profile.xi == a.dim() + 1,
            xi_d_plus_1_dimensions
        ),
        check!(
            "XI-D+2",
            "excess d+2 with d >= 9 forces a 2-neighbourly polytope with d+2 vertices",
            Assert,
            true,
            |a| a.profile.xi == a.dim() + 2 && a.dim() >= 9,
            xi_d_plus_2_neighbourly
        ),
        check!(
            "XI-2D-6",
            "excess 2d-6 with d >= 9: nonsimple vertices share a degree, form a face, and the face figures match",
            Assert,
            true,
            |a| a.profile.xi == 2 * a.dim() - 6 && a.dim() >= 9,
            xi_2d_minus_6_structure
        ),
        check!(
            "NO-POINT-MEET",
            "with excess in [d-1, 2d-6] no two facets intersect in a single vertex",
            Assert,
            false,
            |a| (a.dim() - 1..=2 * a.dim() - 6).contains(&a.profile.xi),
            no_point_meet
        ),
        check!(
            "SUBRIDGE-STRUCT",
            "with excess in [d-1, 2d-7], a facet pair meeting in a subridge forces a simplex subridge of excess-1 vertices inside two simple facets",
            Assert,
            false,
            |a| {
                (a.dim() - 1..=2 * a.dim() - 7).contains(&a.profile.xi)
                    && a.report
                        .facet_pair_dims
                        .iter()
                        .any(|m| m.rank == a.polytope.dim() as i32 - 3)
            },
            subridge_structure
        ),
        check!(
            "OBS-XI-2D-5",
            "observed: excess 2d-5 occurs only in dimensions 3, 5 and 7",
            Observe,
            false,
            |a| a.profile.xi > 0 && a.profile.xi == 2 * a.dim() - 5,
            observed_2d_minus_5
        ),
        check!(
            "OBS-NSG-CONNECTED",
            "observed: the subgraph of nonsimple vertices is connected",
            Observe,
            false,
            nonsimple,
            observed_connected_nonsimple
        ),
        check!(
            "OBS-SEMI-SHAPE",
            "observed: semisimple non-simple members are multifold pyramids over products of simplices",
            Observe,
            false,
            |a| a.report.is_semisimple && nonsimple(a),
            observed_semisimple_shape
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{self, FaceSelector};

    fn analyze(p: &IncidencePolytope) -> Analysis {
        Analysis::compute(p).unwrap()
    }

    fn outcome(id: &str, a: &Analysis) -> CheckOutcome {
        builtin_checks()
            .iter()
            .find(|c| c.id == id)
            .unwrap()
            .evaluate(a)
    }

    #[test]
    fn registry_exposes_the_fixed_check_ids() {
        let ids: Vec<&str> = builtin_checks().iter().map(|c| c.id).collect();
        for expected in [
            "EXC-LOWER",
            "EXC-PARITY",
            "EXC-GAP-LOW",
            "EXC-GAP-HIGH",
            "NSV-NEIGHBOURS",
            "FACETPAIR",
            "SEMI-MIN4",
            "SEMI-K",
            "SEMI-TWO",
            "SIMPLE-F0",
            "SIMPLE-CAT",
            "SK-SMALL",
            "SK-D5",
            "SK-D6",
            "XI-D-2",
            "XI-D-1",
            "XI-D",
            "XI-D5",
            "XI-D+1",
            "XI-D+2",
            "XI-2D-6",
            "NO-POINT-MEET",
            "SUBRIDGE-STRUCT",
        ] {
            assert!(ids.contains(&expected), "missing check {expected}");
        }
        let unique: std::collections::BTreeSet<&str> = ids.iter().copied().collect();
        assert_eq!(unique.len(), ids.len(), "duplicate check ids");
        // Observe-mode checks never fail a suite and are marked by prefix.
        for c in builtin_checks() {
            assert_eq!(c.mode == CheckMode::Observe, c.id.starts_with("OBS-"), "{}", c.id);
        }
    }

    #[test]
    fn excess_lower_on_m23() {
        let a = analyze(&construct::m_poly(2, 3).unwrap());
        assert_eq!(a.profile.xi, 3);
        assert_eq!(outcome("EXC-LOWER", &a), CheckOutcome::Pass);
    }

    #[test]
    fn gap_high_vacuous_on_simple() {
        let a = analyze(&construct::delta(3, 4).unwrap());
        assert_eq!(outcome("EXC-GAP-HIGH", &a), CheckOutcome::Vacuous);
    }

    #[test]
    fn xi_d_plus_2_on_cyclic() {
        let a = analyze(&construct::cyclic(9, 11).unwrap());
        assert_eq!(a.profile.xi, 11);
        assert_eq!(outcome("XI-D+2", &a), CheckOutcome::Pass);
    }

    #[test]
    fn xi_d_on_glued_simplices() {
        let s = construct::simplex(7).unwrap();
        let g = construct::glue(
            &s,
            &FaceSelector::Facet(0),
            &s,
            &FaceSelector::Facet(0),
            None,
            &[],
        )
        .unwrap();
        let a = analyze(&g);
        assert_eq!(outcome("XI-D", &a), CheckOutcome::Pass);
    }

    #[test]
    fn every_check_passes_on_a_mixed_bag() {
        let fixtures = vec![
            construct::simplex(6).unwrap(),
            construct::m_poly(3, 4).unwrap(),
            construct::j_poly(5).unwrap(),
            construct::delta(2, 5).unwrap(),
            construct::pyramid(&construct::delta(2, 6).unwrap(), 1).unwrap(),
            construct::prism(&construct::m_poly(2, 6).unwrap()).unwrap(),
            construct::m_poly(7, 2).unwrap(),
            construct::cyclic(10, 12).unwrap(),
        ];
        for p in &fixtures {
            let a = analyze(p);
            for c in builtin_checks() {
                if c.mode == CheckMode::Assert {
                    let o = c.evaluate(&a);
                    assert!(
                        !matches!(o, CheckOutcome::Fail(_)),
                        "{} failed on {:?}: {:?}",
                        c.id,
                        p.provenance,
                        o
                    );
                }
            }
        }
    }
}
