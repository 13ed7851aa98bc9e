//! Excess degrees: per-vertex excesses, the identity xi = 2 f1 - d f0, and
//! the families that realise the smallest possible excess for their vertex
//! count.

use excess::analysis::nonsimple_structure;
use excess::construct::{self, FaceSelector};
use excess::excess_profile;

fn main() {
    // xi(M(k, d-k)) = (k-1)(d-k): the minimum excess of a d-polytope with
    // d+k vertices, attained exactly by these pyramids over prisms.
    println!("excess of the minimisers M(k, d-k):");
    for d in 4..=9usize {
        let row: Vec<String> = (2..d)
            .map(|k| {
                let p = construct::m_poly(k, d - k).unwrap();
                format!("M({k},{}) -> {:2}", d - k, excess_profile(&p).unwrap().xi)
            })
            .collect();
        println!("  d={d}: {}", row.join("   "));
    }

    // A pyramid concentrates all excess in one apex; a glued pair of
    // simplices spreads excess 1 over d vertices.
    println!("\nexcess distributions:");
    let pyr = construct::pyramid(&construct::delta(2, 4).unwrap(), 1).unwrap();
    let profile = excess_profile(&pyr).unwrap();
    println!(
        "  pyramid(delta(2,4),1): xi={} nonsimple={:?} excesses={:?}",
        profile.xi,
        profile.nonsimple,
        profile.nonsimple.iter().map(|&v| profile.excesses[v]).collect::<Vec<_>>()
    );

    let s = construct::simplex(6).unwrap();
    let glued = construct::glue(
        &s,
        &FaceSelector::Facet(0),
        &s,
        &FaceSelector::Facet(0),
        None,
        &[],
    )
    .unwrap();
    let profile = excess_profile(&glued).unwrap();
    println!(
        "  glued 6-simplices:    xi={} nonsimple={:?} (each excess 1)",
        profile.xi, profile.nonsimple
    );

    // The nonsimple vertices of the glued pair are pairwise adjacent but do
    // not form a face: a phantom simplex.
    let record = nonsimple_structure(&glued).unwrap();
    println!(
        "  phantom simplex: {}   face: {}   missing face: {}",
        record.is_phantom_simplex,
        record.is_face,
        record
            .is_missing_face
            .map(|b| b.to_string())
            .unwrap_or_else(|| "skipped".into())
    );

    // The identity xi = 2 f1 - d f0, checked by hand.
    println!("\nthe identity xi = 2*f1 - d*f0:");
    for p in [
        construct::j_poly(5).unwrap(),
        construct::cyclic(9, 11).unwrap(),
        glued,
    ] {
        let profile = excess_profile(&p).unwrap();
        let f1 = p.graph().len() as i64;
        println!(
            "  {:40} xi={:3} = 2*{f1} - {}*{}",
            p.provenance.as_deref().unwrap_or("?"),
            profile.xi,
            p.dim(),
            p.n_vertices()
        );
    }
}
