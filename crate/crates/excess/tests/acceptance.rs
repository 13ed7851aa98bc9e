//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Run with `cargo test -p excess --test acceptance -- --nocapture` to see
//! the per-criterion lines. The random corpus is the default one (seed
//! 0xC0FFEE, 2000 members, dimensions 3..=12, at most 48 vertices) and is
//! generated once and shared across criteria.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use excess::analysis::excess_profile;
use excess::canonical::is_isomorphic;
use excess::construct::{self, FaceSelector};
use excess::dsl::{eval, parse};
use excess::family::FamilyTag;
use excess::figures;
use excess::harness::{
    builtin_checks, default_fixtures, generate_corpus, Analysis, CheckMode, CheckOutcome,
    CorpusMember, CorpusSpec,
};
use excess::polytope::IncidencePolytope;
use excess::sanity::sanity_check;

fn corpus() -> &'static [CorpusMember] {
    static CORPUS: OnceLock<Vec<CorpusMember>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        generate_corpus(&CorpusSpec::default())
            .expect("default corpus generation")
            .0
    })
}

fn corpus_analyses() -> &'static [Analysis] {
    static ANALYSES: OnceLock<Vec<Analysis>> = OnceLock::new();
    ANALYSES.get_or_init(|| {
        corpus()
            .iter()
            .map(|m| Analysis::compute(&m.polytope).expect("corpus member analysis"))
            .collect()
    })
}

fn fixtures() -> &'static [CorpusMember] {
    static FIXTURES: OnceLock<Vec<CorpusMember>> = OnceLock::new();
    FIXTURES.get_or_init(|| default_fixtures().expect("fixtures"))
}

fn build(text: &str) -> IncidencePolytope {
    eval(&parse(text).expect(text)).expect(text)
}

fn pass(line: &str) {
    println!("criterion {line}: PASS");
}

// --- criterion 1: face lattice vs exhaustive subset closure -----------------

/// Independent oracle: enumerate all 2^n subsets with plain integer masks,
/// keep the closure-fixed ones, and rank them by longest chains.
mod oracle {
    pub struct OracleFace {
        pub vertices: Vec<usize>,
        pub rank: i32,
    }

    pub fn enumerate(n: usize, facet_lists: &[Vec<usize>]) -> Vec<OracleFace> {
        assert!(n <= 16);
        let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
        let facets: Vec<u32> = facet_lists
            .iter()
            .map(|f| f.iter().fold(0u32, |m, &v| m | (1 << v)))
            .collect();
        let closure = |s: u32| -> u32 {
            let mut acc = full;
            let mut any = false;
            for &f in &facets {
                if s & !f == 0 {
                    acc &= f;
                    any = true;
                }
            }
            if any {
                acc
            } else {
                full
            }
        };
        let mut closed: Vec<u32> = (0..=full).filter(|&s| closure(s) == s).collect();
        closed.sort_by_key(|s| (s.count_ones(), *s));
        let mut ranks: Vec<i32> = vec![-1; closed.len()];
        for i in 0..closed.len() {
            let mut best = -1;
            for j in 0..i {
                if closed[j] != closed[i] && closed[j] & !closed[i] == 0 {
                    best = best.max(ranks[j] + 1);
                }
            }
            ranks[i] = best;
        }
        closed
            .into_iter()
            .zip(ranks)
            .map(|(s, rank)| OracleFace {
                vertices: (0..n).filter(|&v| s >> v & 1 == 1).collect(),
                rank,
            })
            .collect()
    }
}

#[test]
fn criterion_01_lattice_matches_subset_oracle() {
    let small: Vec<&CorpusMember> = fixtures()
        .iter()
        .filter(|m| m.polytope.n_vertices() <= 12)
        .collect();
    assert!(
        small.len() >= 20,
        "need at least 20 small fixtures, have {}",
        small.len()
    );
    for m in &small {
        let p = &m.polytope;
        let lat = excess::face_lattice(p).unwrap_or_else(|e| panic!("{}: {e}", m.provenance()));
        let facet_lists: Vec<Vec<usize>> = p.facets().iter().map(|f| f.to_vec()).collect();
        let expected = oracle::enumerate(p.n_vertices(), &facet_lists);
        assert_eq!(
            lat.n_faces(),
            expected.len(),
            "face count mismatch for {}",
            m.provenance()
        );
        let got: BTreeSet<(Vec<usize>, i32)> = lat
            .faces()
            .iter()
            .map(|f| (f.vertices.to_vec(), f.rank))
            .collect();
        for f in &expected {
            assert!(
                got.contains(&(f.vertices.clone(), f.rank)),
                "{}: oracle face {:?} rank {} missing or misranked",
                m.provenance(),
                f.vertices,
                f.rank
            );
        }
    }
    pass(&format!(
        "01 (oracle equivalence on {} fixtures with n <= 12)",
        small.len()
    ));
}

// --- criterion 2: the excess identity ----------------------------------------

#[test]
fn criterion_02_excess_identity_on_corpus() {
    for m in corpus() {
        let p = &m.polytope;
        let profile = excess_profile(p).unwrap();
        let f1 = p.graph().len() as i64;
        let identity = 2 * f1 - (p.dim() as i64) * (p.n_vertices() as i64);
        assert_eq!(
            profile.xi,
            identity,
            "excess identity fails for {}",
            m.provenance()
        );
    }
    pass(&format!(
        "02 (excess identity xi = 2*f1 - d*f0 on {} corpus members)",
        corpus().len()
    ));
}

// --- criterion 3: minimisers -------------------------------------------------

#[test]
fn criterion_03_m_family_excess_equality() {
    let mut cases = 0;
    for d in 3..=10usize {
        for k in 2..d {
            let p = construct::m_poly(k, d - k).unwrap();
            let profile = excess_profile(&p).unwrap();
            assert_eq!(
                profile.xi,
                ((k - 1) * (d - k)) as i64,
                "xi(M({k},{}))",
                d - k
            );
            assert_eq!(
                profile.nonsimple.len(),
                d - k,
                "nonsimple count of M({k},{})",
                d - k
            );
            cases += 1;
        }
    }
    pass(&format!("03 (xi(M(k,d-k)) = (k-1)(d-k) on {cases} cases)"));
}

// --- criterion 4 --------------------------------------------------------------

#[test]
fn criterion_04_j_family_regression() {
    for d in 3..=8usize {
        let j = construct::j_poly(d).unwrap();
        assert_eq!(j.n_vertices(), 3 * d - 1, "f0(J({d}))");
        assert_eq!(excess_profile(&j).unwrap().xi, 0, "xi(J({d}))");
    }
    pass("04 (J(d) has 3d-1 vertices and excess 0 for d in 3..=8)");
}

// --- criterion 5: wedge vertex arithmetic -------------------------------------

#[test]
fn criterion_05_wedge_vertex_arithmetic() {
    let mut cases: Vec<(IncidencePolytope, FaceSelector)> = vec![
        (build("polygon(5)"), FaceSelector::Edge(0, 1)),
        (build("polygon(6)"), FaceSelector::Vertex(0)),
        (build("polygon(4)"), FaceSelector::Facet(0)),
        (build("simplex(4)"), FaceSelector::Facet(0)),
        (build("simplex(4)"), FaceSelector::Edge(0, 1)),
        (build("delta(2,2)"), FaceSelector::Facet(0)),
        (build("delta(1,3)"), FaceSelector::Vertex(2)),
        (build("prism(polygon(4))"), FaceSelector::Facet(1)),
        (build("M(2,3)"), FaceSelector::Vertex(6)),
        (build("J(3)"), FaceSelector::Facet(0)),
        (build("cyclic(4,7)"), FaceSelector::Facet(0)),
    ];
    // The wedge of J(4) over a pentagonal 2-face.
    let j4 = build("J(4)");
    let lat = excess::face_lattice(&j4).unwrap();
    let pentagon = lat
        .faces_of_rank(2)
        .iter()
        .find(|f| f.vertices.len() == 5)
        .expect("J(4) has a pentagonal 2-face")
        .vertices
        .to_vec();
    cases.push((j4, FaceSelector::Face(pentagon)));
    assert!(cases.len() >= 10);

    for (p, sel) in &cases {
        let face = sel.resolve(p).unwrap();
        let w = construct::wedge(p, sel).unwrap();
        assert_eq!(
            w.n_vertices(),
            2 * p.n_vertices() - face.len(),
            "wedge arithmetic for {:?} over {sel:?}",
            p.provenance
        );
        assert_eq!(w.dim(), p.dim() + 1);
    }
    // The pentagonal wedge of J(4) is a 5-polytope with excess 5.
    let (j4, sel) = cases.last().unwrap();
    let w = construct::wedge(j4, sel).unwrap();
    assert_eq!(w.dim(), 5);
    assert_eq!(excess_profile(&w).unwrap().xi, 5);
    pass(&format!(
        "05 (f0(W(P,F)) = 2 f0(P) - f0(F) on {} wedge fixtures)",
        cases.len()
    ));
}

// --- criterion 6: the two excess gaps -----------------------------------------

#[test]
fn criterion_06_excess_gaps_on_corpus() {
    for (m, a) in corpus().iter().zip(corpus_analyses()) {
        let d = a.dim();
        let xi = a.profile.xi;
        assert!(
            !(1..=d - 3).contains(&xi),
            "{} has xi = {xi} in [1, d-3]",
            m.provenance()
        );
        assert!(
            !(d + 3..=2 * d - 7).contains(&xi),
            "{} has xi = {xi} in [d+3, 2d-7]",
            m.provenance()
        );
    }
    pass(&format!(
        "06 (no corpus member with xi in [1,d-3] or [d+3,2d-7], {} members)",
        corpus().len()
    ));
}

// --- criterion 7: structure at excess 2d-6, d = 9 ------------------------------

#[test]
fn criterion_07_excess_2d_minus_6_structure_at_d9() {
    // Unique nonsimple vertex whose figure is delta(2,6).
    let p = build("pyramid(delta(2,6),1)");
    let profile = excess_profile(&p).unwrap();
    assert_eq!(p.dim(), 9);
    assert_eq!(profile.xi, 12);
    assert_eq!(profile.nonsimple.len(), 1);
    let v = profile.nonsimple[0];
    assert_eq!(profile.excesses[v], 12);
    let fig = figures::vertex_figure(&p, v).unwrap();
    assert!(is_isomorphic(&fig, &build("delta(2,6)")).unwrap());

    // Two excess-6 vertices whose edge has a 7-prism face figure.
    let p = build("M(7,2)");
    let profile = excess_profile(&p).unwrap();
    assert_eq!(p.dim(), 9);
    assert_eq!(profile.nonsimple.len(), 2);
    assert!(profile.nonsimple.iter().all(|&v| profile.excesses[v] == 6));
    let edge = p.vertex_set(&profile.nonsimple).unwrap();
    assert_eq!(p.closure(&edge), edge, "the two apexes form an edge");
    let fig = figures::face_figure(&p, &edge).unwrap();
    assert!(is_isomorphic(&fig, &build("delta(1,6)")).unwrap());

    // Twelve excess-1 vertices forming a 6-prism face with quadrilateral figure.
    let p = build("prism(M(2,6))");
    let profile = excess_profile(&p).unwrap();
    assert_eq!(p.dim(), 9);
    assert_eq!(profile.nonsimple.len(), 12);
    assert!(profile.nonsimple.iter().all(|&v| profile.excesses[v] == 1));
    let set = p.vertex_set(&profile.nonsimple).unwrap();
    let lat = excess::face_lattice(&p).unwrap();
    assert_eq!(lat.rank_of(&set), Some(6), "nonsimple set is a 6-face");
    let as_poly = figures::face_as_polytope(&p, &set).unwrap();
    assert!(is_isomorphic(&as_poly, &build("delta(1,5)")).unwrap());
    let fig = figures::face_figure(&p, &set).unwrap();
    assert!(is_isomorphic(&fig, &build("polygon(4)")).unwrap());

    pass("07 (excess 2d-6 structure for the three d = 9 families)");
}

// --- criterion 8: the excess-d family ------------------------------------------

#[test]
fn criterion_08_excess_d_family() {
    let d = 7usize;
    let two_simplices = build("glue(simplex(7),facet(0),simplex(7),facet(0))");
    let capped = {
        let base = build("prism(simplex(6))");
        let idx = construct::simplex_facet_indices(&base)[0];
        construct::stack(&base, &FaceSelector::Facet(idx)).unwrap()
    };
    let j_glued = {
        let j = build("J(7)");
        let idx = construct::simplex_facet_indices(&j)[0];
        construct::glue(
            &j,
            &FaceSelector::Facet(idx),
            &build("simplex(7)"),
            &FaceSelector::Facet(0),
            None,
            &[],
        )
        .unwrap()
    };
    for (p, expected_f0) in [
        (&two_simplices, d + 2),
        (&capped, 2 * d + 1),
        (&j_glued, 3 * d),
    ] {
        assert_eq!(p.n_vertices(), expected_f0);
        let profile = excess_profile(p).unwrap();
        assert_eq!(profile.xi, d as i64);
        assert_eq!(profile.nonsimple.len(), d);
        assert!(profile.nonsimple.iter().all(|&v| profile.excesses[v] == 1));
        let record = excess::analysis::nonsimple_structure(p).unwrap();
        assert!(record.is_phantom_simplex, "phantom simplex flag");
        assert!(!record.is_face, "nonsimple set must not be a face");
    }
    pass("08 (excess-d family realises f0 = d+2, 2d+1, 3d with phantom simplices)");
}

// --- criterion 9: the semisimple bounds -----------------------------------------

#[test]
fn criterion_09_semisimple_bounds() {
    let mut hits = 0;
    let fixture_analyses: Vec<Analysis> = fixtures()
        .iter()
        .map(|m| Analysis::compute(&m.polytope).unwrap())
        .collect();
    for a in corpus_analyses().iter().chain(fixture_analyses.iter()) {
        if !a.report.is_semisimple || a.profile.is_simple() {
            continue;
        }
        hits += 1;
        let d = a.dim();
        let k = a.profile.nonsimple.len() as i64;
        for &v in &a.profile.nonsimple {
            assert!(
                a.profile.excesses[v] >= 4,
                "{:?}: semisimple nonsimple vertex with excess {}",
                a.polytope.provenance,
                a.profile.excesses[v]
            );
        }
        assert!(
            a.f0() >= 3 * d - 2 * k - 3,
            "{:?}: f0 = {} < 3d-2k-3",
            a.polytope.provenance,
            a.f0()
        );
    }
    assert!(hits > 0, "no semisimple non-simple members at all");
    pass(&format!(
        "09 (semisimple bounds: excess >= 4 and f0 >= 3d-2k-3 on {hits} members)"
    ));
}

// --- criterion 10: the simple catalogue ------------------------------------------

#[test]
fn criterion_10_simple_catalogue() {
    let mut small = 0;
    let mut simple = 0;
    for (m, a) in corpus().iter().zip(corpus_analyses()) {
        if !a.profile.is_simple() {
            continue;
        }
        simple += 1;
        let d = a.dim();
        let f0 = a.f0();
        let allowed =
            f0 == d + 1 || f0 == 2 * d || f0 == 3 * d - 3 || f0 == 3 * d - 1 || f0 >= 4 * d - 8;
        assert!(allowed, "{}: simple with f0 = {f0}", m.provenance());
        if f0 < 3 * d {
            small += 1;
            let tag = excess::identify_family(&m.polytope).unwrap();
            let listed = matches!(
                tag,
                FamilyTag::Simplex(_)
                    | FamilyTag::JPoly(_)
                    | FamilyTag::Cube
                    | FamilyTag::Delta(1, _)
                    | FamilyTag::Delta(2, _)
                    | FamilyTag::Delta(3, 3)
                    | FamilyTag::Delta(3, 4)
            );
            assert!(
                listed,
                "{}: simple with f0 < 3d identified as {tag}",
                m.provenance()
            );
        }
    }
    assert!(small > 0, "no simple corpus members below 3d vertices");
    pass(&format!(
        "10 (simple catalogue: {simple} simple members, {small} identified below 3d vertices)"
    ));
}

// --- criterion 11: the sanity battery ---------------------------------------------

#[test]
fn criterion_11_sanity_battery() {
    for m in corpus() {
        let report = sanity_check(&m.polytope).unwrap();
        assert!(
            report.passed(),
            "{}: {:?}",
            m.provenance(),
            report.failures()
        );
    }
    pass(&format!(
        "11 (Euler, diamond, ridge and connectivity checks on {} members)",
        corpus().len()
    ));
}

// --- criterion 12: byte determinism -------------------------------------------------

#[test]
fn criterion_12_cli_determinism() {
    let bin = env!("CARGO_BIN_EXE_excess");
    let dir = tempfile::tempdir().unwrap();
    let out_a = dir.path().join("a");
    let out_b = dir.path().join("b");
    for out in [&out_a, &out_b] {
        let status = std::process::Command::new(bin)
            .args([
                "corpus",
                "--seed",
                "1",
                "--count",
                "200",
                "--out",
                out.to_str().unwrap(),
            ])
            .stdout(std::process::Stdio::null())
            .status()
            .unwrap();
        assert!(status.success());
    }
    let mut names_a: Vec<String> = std::fs::read_dir(&out_a)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names_a.sort();
    let mut names_b: Vec<String> = std::fs::read_dir(&out_b)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names_b.sort();
    assert_eq!(names_a, names_b);
    assert_eq!(names_a.len(), 201); // 200 polytopes + manifest
    for name in &names_a {
        let a = std::fs::read(out_a.join(name)).unwrap();
        let b = std::fs::read(out_b.join(name)).unwrap();
        assert_eq!(a, b, "{name} differs between runs");
    }
    let verify = |target: &std::path::Path| -> Vec<u8> {
        let output = std::process::Command::new(bin)
            .args(["verify", target.to_str().unwrap(), "--json"])
            .output()
            .unwrap();
        assert!(output.status.success(), "verify failed on {target:?}");
        output.stdout
    };
    let report_a = verify(&out_a);
    let report_b = verify(&out_b);
    assert!(!report_a.is_empty());
    assert_eq!(report_a, report_b, "suite reports differ between runs");
    pass("12 (corpus --seed 1 --count 200 is byte-deterministic, reports included)");
}

// --- the harness invariant: zero failures, full coverage ------------------------------

#[test]
fn default_suite_has_zero_failures_and_hits_every_mandatory_check() {
    let checks = builtin_checks();
    let fixture_analyses: Vec<Analysis> = fixtures()
        .iter()
        .map(|m| Analysis::compute(&m.polytope).unwrap())
        .collect();
    let mut pass_counts = vec![0usize; checks.len()];
    for a in corpus_analyses().iter().chain(fixture_analyses.iter()) {
        for (i, c) in checks.iter().enumerate() {
            match c.evaluate(a) {
                CheckOutcome::Fail(reason) if c.mode == CheckMode::Assert => {
                    panic!("{} failed on {:?}: {reason}", c.id, a.polytope.provenance);
                }
                CheckOutcome::Pass => pass_counts[i] += 1,
                _ => {}
            }
        }
    }
    for (i, c) in checks.iter().enumerate() {
        if c.must_hit {
            assert!(pass_counts[i] > 0, "{} vacuous on the default suite", c.id);
        }
    }
    println!("default suite: zero failures across corpus and fixtures");
}
