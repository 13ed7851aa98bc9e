//! Tour of the construction families: build the classical polytopes and
//! print their basic combinatorial data.

use excess::construct::{self, FaceSelector};
use excess::{excess_profile, f_vector};

fn describe(name: &str, p: &excess::IncidencePolytope) {
    let profile = excess_profile(p).unwrap();
    println!(
        "{name:28} dim={:2}  f0={:3}  facets={:3}  xi={:3}  f-vector={:?}",
        p.dim(),
        p.n_vertices(),
        p.n_facets(),
        profile.xi,
        f_vector(p).unwrap()
    );
}

fn main() {
    describe("simplex(4)", &construct::simplex(4).unwrap());
    describe("polygon(7)", &construct::polygon(7).unwrap());
    describe("cyclic(4,8)", &construct::cyclic(4, 8).unwrap());
    describe("delta(2,2)", &construct::delta(2, 2).unwrap());
    describe("delta(3,5)", &construct::delta(3, 5).unwrap());

    // The d-dimensional minimisers with d+k vertices: M(k, d-k) is the
    // (d-k)-fold pyramid over the simplicial k-prism.
    for (k, m) in [(2, 3), (3, 4), (5, 2)] {
        describe(
            &format!("M({k},{m})"),
            &construct::m_poly(k, m).unwrap(),
        );
    }

    // J(d): truncate one vertex of the simplicial d-prism. Simple, 3d-1
    // vertices.
    for d in 3..=6 {
        describe(&format!("J({d})"), &construct::j_poly(d).unwrap());
    }

    // Operations compose; provenance records the whole expression.
    let base = construct::polygon(5).unwrap();
    let wedge = construct::wedge(&base, &FaceSelector::Edge(0, 1)).unwrap();
    describe("wedge(polygon(5),edge)", &wedge);
    println!("   provenance: {}", wedge.provenance.as_deref().unwrap());

    let pyr = construct::pyramid(&construct::delta(2, 4).unwrap(), 1).unwrap();
    describe("pyramid(delta(2,4),1)", &pyr);

    let capped = {
        let prism = construct::prism(&construct::simplex(5).unwrap()).unwrap();
        let simplex_base = construct::simplex_facet_indices(&prism)[0];
        construct::stack(&prism, &FaceSelector::Facet(simplex_base)).unwrap()
    };
    describe("capped 6-prism", &capped);
    println!("   provenance: {}", capped.provenance.as_deref().unwrap());
}
