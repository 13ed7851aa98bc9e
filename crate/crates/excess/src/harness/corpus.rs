//! Seeded random corpora of constructed polytopes, plus the deterministic
//! fixture families the suite always includes.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::construct::{self, FaceSelector};
use crate::dsl::{eval, parse, Expr};
use crate::error::{Error, Result};
use crate::polytope::IncidencePolytope;
use crate::sanity::sanity_check;

/// Corpus members have dimension at least 3 and at most `max_dim`.
pub const MIN_DIM: usize = 3;

/// Parameters of a deterministic corpus: identical specs produce identical
/// corpora, member for member.
#[derive(Clone, Debug)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub max_dim: usize,
    pub max_vertices: usize,
    /// Per-construction weights; names as in the expression language.
    /// Missing names take their default weight, zero disables.
    pub weights: BTreeMap<String, u32>,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            seed: 0xC0FFEE,
            count: 2000,
            max_dim: 12,
            max_vertices: 48,
            weights: BTreeMap::new(),
        }
    }
}

impl CorpusSpec {
    pub fn new(seed: u64, count: usize) -> Self {
        CorpusSpec {
            seed,
            count,
            ..CorpusSpec::default()
        }
    }
}

/// A corpus entry: the construction expression and its value.
#[derive(Clone, Debug)]
pub struct CorpusMember {
    pub expr: Expr,
    pub polytope: IncidencePolytope,
}

impl CorpusMember {
    pub fn provenance(&self) -> String {
        self.expr.to_string()
    }
}

/// Rejection bookkeeping, kept so a corpus is honest about its coverage
/// envelope.
#[derive(Clone, Debug, Default, Serialize)]
pub struct GenerationLog {
    pub attempts: usize,
    pub dead_ends: usize,
    pub rejected_dim: usize,
    pub rejected_vertices: usize,
    pub rejected_resource: usize,
    pub rejected_sanity: usize,
}

const LEAF_NAMES: [(&str, u32); 6] = [
    ("simplex", 10),
    ("polygon", 6),
    ("cyclic", 8),
    ("delta", 12),
    ("M", 12),
    ("J", 8),
];

const COMBINATOR_NAMES: [(&str, u32); 9] = [
    ("pyramid", 10),
    ("prism", 10),
    ("product", 6),
    ("free_join", 6),
    ("wedge", 8),
    ("truncate", 8),
    ("stack", 8),
    ("glue", 8),
    ("dual", 3),
];

fn weight_table(spec: &CorpusSpec, names: &[(&'static str, u32)]) -> Result<Vec<(&'static str, u32)>> {
    for name in spec.weights.keys() {
        let known = LEAF_NAMES
            .iter()
            .chain(COMBINATOR_NAMES.iter())
            .any(|(n, _)| n == name);
        if !known {
            return Err(Error::input(format!("unknown construction weight `{name}`")));
        }
    }
    Ok(names
        .iter()
        .map(|&(n, w)| (n, spec.weights.get(n).copied().unwrap_or(w)))
        .collect())
}

fn pick<'a>(rng: &mut ChaCha8Rng, table: &'a [(&'static str, u32)]) -> Option<&'a str> {
    let total: u64 = table.iter().map(|&(_, w)| w as u64).sum();
    if total == 0 {
        return None;
    }
    let mut roll = rng.gen_range(0..total);
    for &(name, w) in table {
        if roll < w as u64 {
            return Some(name);
        }
        roll -= w as u64;
    }
    None
}

/// Generates a deterministic corpus: random construction expressions,
/// rejected and resampled when they leave the dimension/vertex envelope or
/// fail the sanity battery.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<(Vec<CorpusMember>, GenerationLog)> {
    if spec.max_dim < MIN_DIM {
        return Err(Error::input("max_dim must be at least 3"));
    }
    if spec.count == 0 {
        return Ok((Vec::new(), GenerationLog::default()));
    }
    let leaves = weight_table(spec, &LEAF_NAMES)?;
    let combinators = weight_table(spec, &COMBINATOR_NAMES)?;
    if leaves.iter().all(|&(_, w)| w == 0) {
        return Err(Error::input("all leaf weights are zero"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut members = Vec::with_capacity(spec.count);
    let mut log = GenerationLog::default();
    let attempt_cap = spec.count.saturating_mul(1000);
    while members.len() < spec.count {
        if log.attempts >= attempt_cap {
            return Err(Error::resource(format!(
                "corpus generation exceeded {attempt_cap} attempts"
            )));
        }
        log.attempts += 1;
        let Some((expr, polytope)) = sample(&mut rng, spec, &leaves, &combinators, 0) else {
            log.dead_ends += 1;
            continue;
        };
        let d = polytope.dim();
        if d < MIN_DIM || d > spec.max_dim {
            log.rejected_dim += 1;
            continue;
        }
        if polytope.n_vertices() > spec.max_vertices {
            log.rejected_vertices += 1;
            continue;
        }
        match sanity_check(&polytope) {
            Ok(report) if report.passed() => {}
            Ok(_) => {
                log.rejected_sanity += 1;
                continue;
            }
            Err(Error::Resource(_)) => {
                log.rejected_resource += 1;
                continue;
            }
            Err(e) => return Err(e),
        }
        let mut polytope = polytope;
        polytope.provenance = Some(expr.to_string());
        members.push(CorpusMember { expr, polytope });
    }
    Ok((members, log))
}

fn sample(
    rng: &mut ChaCha8Rng,
    spec: &CorpusSpec,
    leaves: &[(&'static str, u32)],
    combinators: &[(&'static str, u32)],
    depth: usize,
) -> Option<(Expr, IncidencePolytope)> {
    let leaf_prob = [35, 55, 80, 100][depth.min(3)];
    let leaf = rng.gen_range(0..100) < leaf_prob
        || combinators.iter().all(|&(_, w)| w == 0);
    if leaf {
        return sample_leaf(rng, spec, leaves);
    }
    let name = pick(rng, combinators)?;
    let (child_expr, child) = sample(rng, spec, leaves, combinators, depth + 1)?;
    let built: Result<(Expr, IncidencePolytope)> = match name {
        "pyramid" => {
            let k = *[1, 1, 1, 2, 2, 3].get(rng.gen_range(0..6)).unwrap();
            construct::pyramid(&child, k)
                .map(|p| (Expr::Pyramid(Box::new(child_expr), k), p))
        }
        "prism" => construct::prism(&child).map(|p| (Expr::Prism(Box::new(child_expr)), p)),
        "product" | "free_join" => {
            let (other_expr, other) = sample(rng, spec, leaves, combinators, depth + 1)?;
            if name == "product" {
                construct::product(&child, &other)
                    .map(|p| (Expr::Product(Box::new(child_expr), Box::new(other_expr)), p))
            } else {
                construct::free_join(&child, &other)
                    .map(|p| (Expr::FreeJoin(Box::new(child_expr), Box::new(other_expr)), p))
            }
        }
        "wedge" => {
            let sel = random_selector(rng, &child, true)?;
            construct::wedge(&child, &sel)
                .map(|p| (Expr::Wedge(Box::new(child_expr), sel), p))
        }
        "truncate" => {
            let sel = random_selector(rng, &child, false)?;
            construct::truncate(&child, &sel)
                .map(|p| (Expr::Truncate(Box::new(child_expr), sel), p))
        }
        "stack" => {
            let simplex_facets = construct::simplex_facet_indices(&child);
            if simplex_facets.is_empty() || child.dim() < 2 {
                return None;
            }
            let idx = simplex_facets[rng.gen_range(0..simplex_facets.len())];
            let sel = FaceSelector::Facet(idx);
            construct::stack(&child, &sel)
                .map(|p| (Expr::Stack(Box::new(child_expr), sel), p))
        }
        "glue" => return sample_glue(rng, child_expr, &child),
        "dual" => {
            if child.n_facets() > crate::polytope::MAX_VERTICES {
                return None;
            }
            child.dual().map(|p| (Expr::Dual(Box::new(child_expr)), p))
        }
        _ => unreachable!(),
    };
    built.ok()
}

fn sample_leaf(
    rng: &mut ChaCha8Rng,
    spec: &CorpusSpec,
    leaves: &[(&'static str, u32)],
) -> Option<(Expr, IncidencePolytope)> {
    let name = pick(rng, leaves)?;
    let expr = match name {
        "simplex" => Expr::Simplex(rng.gen_range(1..=spec.max_dim)),
        "polygon" => Expr::Polygon(rng.gen_range(3..=9)),
        "cyclic" => {
            let d = rng.gen_range(4..=spec.max_dim);
            Expr::Cyclic(d, d + rng.gen_range(1..=3))
        }
        "delta" => Expr::Delta(rng.gen_range(1..=6), rng.gen_range(1..=6)),
        "M" => {
            let k = rng.gen_range(1..=8.min(spec.max_dim));
            Expr::MPoly(k, rng.gen_range(0..=spec.max_dim - k))
        }
        "J" => Expr::JPoly(rng.gen_range(2..=spec.max_dim)),
        _ => unreachable!(),
    };
    eval(&expr).ok().map(|p| (expr, p))
}

fn random_selector(
    rng: &mut ChaCha8Rng,
    p: &IncidencePolytope,
    _for_wedge: bool,
) -> Option<FaceSelector> {
    if p.dim() < 2 {
        return Some(FaceSelector::Vertex(rng.gen_range(0..p.n_vertices())));
    }
    let roll = rng.gen_range(0..100);
    if roll < 40 {
        Some(FaceSelector::Facet(rng.gen_range(0..p.n_facets())))
    } else if roll < 70 {
        Some(FaceSelector::Vertex(rng.gen_range(0..p.n_vertices())))
    } else {
        let edges = p.graph();
        if edges.is_empty() {
            return None;
        }
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        Some(FaceSelector::Edge(u, v))
    }
}

/// The unique facet other than `p.facets()[skip]` containing the given ridge.
fn other_facet_over(p: &IncidencePolytope, skip: usize, ridge: &crate::bitset::BitSet) -> Option<usize> {
    let mut found = None;
    for (i, g) in p.facets().iter().enumerate() {
        if i != skip && ridge.is_subset(g) {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        }
    }
    found
}

fn sample_glue(
    rng: &mut ChaCha8Rng,
    child_expr: Expr,
    child: &IncidencePolytope,
) -> Option<(Expr, IncidencePolytope)> {
    let d = child.dim();
    if d < 2 {
        return None;
    }
    let simplex_facets = construct::simplex_facet_indices(child);
    if simplex_facets.is_empty() {
        return None;
    }
    let i1 = simplex_facets[rng.gen_range(0..simplex_facets.len())];
    let (other_expr, other) = match rng.gen_range(0..100) {
        0..=59 => (Expr::Simplex(d), construct::simplex(d).ok()?),
        60..=84 => {
            let pr = construct::prism(&construct::simplex(d - 1).ok()?).ok()?;
            (Expr::Prism(Box::new(Expr::Simplex(d - 1))), pr)
        }
        _ => (Expr::JPoly(d), construct::j_poly(d).ok()?),
    };
    let other_simplex_facets = construct::simplex_facet_indices(&other);
    let i2 = *other_simplex_facets.first()?;
    let f1 = child.facets()[i1].clone();
    let f2 = other.facets()[i2].clone();

    let map = if rng.gen_range(0..100) < 30 {
        let mut image = f2.to_vec();
        for i in (1..image.len()).rev() {
            image.swap(i, rng.gen_range(0..=i));
        }
        Some(image)
    } else {
        None
    };
    let image: Vec<usize> = map.clone().unwrap_or_else(|| f2.to_vec());

    let mut merges: Vec<(usize, usize)> = Vec::new();
    if d >= 4 && rng.gen_range(0..100) < 35 {
        let f1_list = f1.to_vec();
        let count = rng.gen_range(1..=3.min(d - 3));
        let mut chosen: Vec<usize> = (0..f1_list.len()).collect();
        for i in (1..chosen.len()).rev() {
            chosen.swap(i, rng.gen_range(0..=i));
        }
        for &pos in chosen.iter().take(count) {
            let s1 = f1_list[pos];
            let mut r1 = f1.clone();
            r1.remove(s1);
            let mut r2 = f2.clone();
            r2.remove(image[pos]);
            let g1 = other_facet_over(child, i1, &r1)?;
            let g2 = other_facet_over(&other, i2, &r2)?;
            merges.push((g1, g2));
        }
        merges.sort_unstable();
        merges.dedup();
    }

    let expr = Expr::Glue {
        p1: Box::new(child_expr),
        f1: FaceSelector::Facet(i1),
        p2: Box::new(other_expr),
        f2: FaceSelector::Facet(i2),
        map: map.clone(),
        merges: merges.clone(),
    };
    construct::glue(
        child,
        &FaceSelector::Facet(i1),
        &other,
        &FaceSelector::Facet(i2),
        map.as_deref(),
        &merges,
    )
    .ok()
    .map(|p| (expr, p))
}

/// The deterministic fixture families: the named small polytopes and the
/// parameterised families the structural checks quantify over. Every member
/// carries its construction expression.
pub fn default_fixtures() -> Result<Vec<CorpusMember>> {
    let mut out: Vec<CorpusMember> = Vec::new();
    let push_str = |out: &mut Vec<CorpusMember>, text: &str| -> Result<()> {
        let expr = parse(text)?;
        let polytope = eval(&expr)?;
        out.push(CorpusMember { expr, polytope });
        Ok(())
    };

    for d in 3..=8 {
        push_str(&mut out, &format!("simplex({d})"))?;
    }
    push_str(&mut out, "polygon(5)")?;
    push_str(&mut out, "polygon(7)")?;
    for d in 3..=10usize {
        for k in 2..d {
            push_str(&mut out, &format!("M({k},{})", d - k))?;
        }
    }
    for d in 3..=8 {
        push_str(&mut out, &format!("J({d})"))?;
    }
    for (m, n) in [
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 6),
        (2, 2),
        (2, 3),
        (2, 4),
        (2, 6),
        (2, 7),
        (3, 3),
        (3, 4),
        (3, 5),
        (4, 4),
        (4, 5),
    ] {
        push_str(&mut out, &format!("delta({m},{n})"))?;
    }
    for (d, n) in [(4, 6), (4, 7), (5, 8), (6, 9), (9, 11), (10, 12), (11, 13)] {
        push_str(&mut out, &format!("cyclic({d},{n})"))?;
    }
    for d in 6..=10 {
        push_str(&mut out, &format!("pyramid(delta(2,{}),1)", d - 3))?;
        push_str(&mut out, &format!("prism(M(2,{}))", d - 3))?;
    }
    for k in 1..=5 {
        push_str(&mut out, &format!("pyramid(delta(2,2),{k})"))?;
    }
    push_str(&mut out, "prism(pyramid(delta(2,2),1))")?;
    push_str(&mut out, "product(delta(2,2),simplex(2))")?;
    push_str(&mut out, "free_join(delta(3,3),delta(2,2))")?;
    push_str(&mut out, "free_join(delta(3,3),delta(2,3))")?;
    for d in 4..=8 {
        push_str(&mut out, &format!("glue(simplex({d}),facet(0),simplex({d}),facet(0))"))?;
    }
    // Merged glueings of two 7-simplices: the other combinatorial types of
    // 9-vertex polytopes with excess 7.
    push_str(&mut out, "glue(simplex(7),facet(0),simplex(7),facet(0),merge=[(1,1)])")?;
    push_str(
        &mut out,
        "glue(simplex(7),facet(0),simplex(7),facet(0),merge=[(1,1),(2,2)])",
    )?;
    push_str(
        &mut out,
        "glue(simplex(7),facet(0),simplex(7),facet(0),merge=[(1,1),(2,2),(3,3)])",
    )?;
    push_str(&mut out, "pyramid(J(4),1)")?;
    push_str(&mut out, "pyramid(polygon(5),3)")?;
    push_str(&mut out, "pyramid(polygon(5),6)")?;
    push_str(&mut out, "truncate(simplex(4),edge(0,1))")?;
    push_str(&mut out, "dual(J(3))")?;
    push_str(&mut out, "stack(simplex(3),facet(0))")?;
    push_str(&mut out, "wedge(polygon(5),edge(0,1))")?;
    push_str(&mut out, "wedge(delta(2,2),facet(0))")?;
    push_str(&mut out, "wedge(polygon(4),vertex(0))")?;

    // Capped prisms.
    for d in 4..=8usize {
        let base = construct::prism(&construct::simplex(d - 1)?)?;
        let idx = construct::simplex_facet_indices(&base)[0];
        let expr = Expr::Stack(
            Box::new(Expr::Prism(Box::new(Expr::Simplex(d - 1)))),
            FaceSelector::Facet(idx),
        );
        let polytope = eval(&expr)?;
        out.push(CorpusMember { expr, polytope });
    }

    // Graph-connected sum of J(7) with a simplex over a simplex facet.
    {
        let j7 = construct::j_poly(7)?;
        let idx = construct::simplex_facet_indices(&j7)[0];
        let expr = Expr::Glue {
            p1: Box::new(Expr::JPoly(7)),
            f1: FaceSelector::Facet(idx),
            p2: Box::new(Expr::Simplex(7)),
            f2: FaceSelector::Facet(0),
            map: None,
            merges: vec![],
        };
        let polytope = eval(&expr)?;
        out.push(CorpusMember { expr, polytope });
    }

    // Wedge of J(4) over a pentagonal 2-face.
    {
        let j4 = construct::j_poly(4)?;
        let lat = crate::lattice::face_lattice(&j4)?;
        let pentagon = lat
            .faces_of_rank(2)
            .iter()
            .find(|f| f.vertices.len() == 5)
            .expect("J(4) has a pentagonal 2-face")
            .vertices
            .to_vec();
        let expr = Expr::Wedge(Box::new(Expr::JPoly(4)), FaceSelector::Face(pentagon));
        let polytope = eval(&expr)?;
        out.push(CorpusMember { expr, polytope });
    }

    // Truncating a simple vertex of M(5,2) preserves the excess.
    {
        let m52 = construct::m_poly(5, 2)?;
        let profile = crate::analysis::excess_profile(&m52)?;
        let v = (0..m52.n_vertices())
            .find(|&v| profile.excesses[v] == 0)
            .expect("M(5,2) has simple vertices");
        let expr = Expr::Truncate(Box::new(Expr::MPoly(5, 2)), FaceSelector::Vertex(v));
        let polytope = eval(&expr)?;
        out.push(CorpusMember { expr, polytope });
    }

    Ok(out)
}
