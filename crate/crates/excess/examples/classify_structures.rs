//! Structural classification: the facet-pair intersection spectrum and the
//! semisimple / super-Kirkman / 2-neighbourly / pyramidal flags.

use excess::analysis::facet_intersection_spectrum;
use excess::construct;
use excess::{classify, face_lattice};

fn flags(name: &str, p: &excess::IncidencePolytope) {
    let report = classify(p).unwrap();
    println!(
        "{name:32} simple={:5} semisimple={:5} super-Kirkman={:5} 2-neighbourly={:5} pyramidal={}",
        report.is_simple,
        report.is_semisimple,
        report.is_super_kirkman,
        report.is_two_neighbourly,
        report.is_pyramidal
    );
}

fn main() {
    // Semisimple: every two facets are disjoint or meet in a ridge.
    // Super-Kirkman: every two facets meet in a ridge (disjointness barred).
    flags("simplex(4)", &construct::simplex(4).unwrap());
    flags("prism(simplex(3))", &construct::prism(&construct::simplex(3).unwrap()).unwrap());
    flags(
        "pyramid(delta(2,2),1)",
        &construct::pyramid(&construct::delta(2, 2).unwrap(), 1).unwrap(),
    );
    flags(
        "prism(pyramid(delta(2,2),1))",
        &construct::prism(&construct::pyramid(&construct::delta(2, 2).unwrap(), 1).unwrap())
            .unwrap(),
    );
    flags("J(5)", &construct::j_poly(5).unwrap());
    flags("cyclic(9,11)", &construct::cyclic(9, 11).unwrap());
    flags("delta(2,3)", &construct::delta(2, 3).unwrap());

    // The spectrum behind the flags: how each facet pair meets.
    let p = construct::prism(&construct::simplex(3).unwrap()).unwrap();
    let lattice = face_lattice(&p).unwrap();
    println!("\nfacet-pair intersection spectrum of prism(simplex(3)):");
    for meet in facet_intersection_spectrum(&p, &lattice) {
        println!(
            "  facets {} and {} meet in a face of dimension {}",
            meet.a, meet.b, meet.rank
        );
    }
    println!("(dimension -1 means disjoint; d-2 = 2 is a ridge)");

    // Serialized reports have a fixed field order for reproducible diffs.
    let report = classify(&construct::m_poly(3, 3).unwrap()).unwrap();
    println!(
        "\nstructure report of M(3,3) as JSON:\n{}",
        serde_json::to_string_pretty(&report).unwrap()
    );
}
