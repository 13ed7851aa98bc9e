//! Vertex figures, face figures, duals, isomorphism testing and family
//! identification.

use excess::canonical::{canonical_form, is_isomorphic};
use excess::construct;
use excess::figures::{face_as_polytope, face_figure, vertex_figure};
use excess::{excess_profile, identify_family};

fn main() {
    // The vertex figure at the apex of a pyramid is the base.
    let base = excess::parse("delta(2,4)").and_then(|e| excess::eval(&e)).unwrap();
    let pyr = construct::pyramid(&base, 1).unwrap();
    let apex = pyr.n_vertices() - 1;
    let figure = vertex_figure(&pyr, apex).unwrap();
    println!(
        "apex figure of pyramid(delta(2,4)) is delta(2,4): {}",
        is_isomorphic(&figure, &base).unwrap()
    );

    // Face figures read off the lattice interval above a face. In M(7,2)
    // the two apexes form an edge whose figure is the simplicial 7-prism.
    let m72 = construct::m_poly(7, 2).unwrap();
    let profile = excess_profile(&m72).unwrap();
    let edge = m72.vertex_set(&profile.nonsimple).unwrap();
    let figure = face_figure(&m72, &edge).unwrap();
    println!(
        "face figure of the apex edge of M(7,2): dim={} f0={} (7-prism: {})",
        figure.dim(),
        figure.n_vertices(),
        is_isomorphic(&figure, &construct::delta(1, 6).unwrap()).unwrap()
    );

    // A face can also be extracted as a polytope in its own right.
    let p = construct::prism(&construct::m_poly(2, 6).unwrap()).unwrap();
    let profile = excess_profile(&p).unwrap();
    let set = p.vertex_set(&profile.nonsimple).unwrap();
    let face = face_as_polytope(&p, &set).unwrap();
    println!(
        "nonsimple vertices of prism(M(2,6)) span a face: dim={} f0={} (6-prism: {})",
        face.dim(),
        face.n_vertices(),
        is_isomorphic(&face, &construct::delta(1, 5).unwrap()).unwrap()
    );

    // Duality transposes the incidence relation.
    let cube = construct::prism(&construct::polygon(4).unwrap()).unwrap();
    let oct = cube.dual().unwrap();
    println!(
        "\ndual of the cube: f0={} facets={} (all triangles: {})",
        oct.n_vertices(),
        oct.n_facets(),
        oct.facets().iter().all(|f| f.len() == 3)
    );
    println!(
        "dual(dual(cube)) is the cube again: {}",
        is_isomorphic(&oct.dual().unwrap(), &cube).unwrap()
    );

    // Canonical forms are invariant under relabelling, so they decide
    // combinatorial equivalence.
    let a = construct::prism(&construct::simplex(2).unwrap()).unwrap();
    let b = construct::delta(1, 2).unwrap();
    println!("\ncanonical form of the 3-prism: {}", canonical_form(&a).unwrap());
    println!("prism(simplex(2)) == delta(1,2): {}", is_isomorphic(&a, &b).unwrap());

    // Catalogue identification.
    for text in ["prism(simplex(2))", "J(3)", "wedge(polygon(5),edge(0,1))", "prism(polygon(4))", "pyramid(polygon(6),1)"] {
        let p = excess::eval(&excess::parse(text).unwrap()).unwrap();
        println!("identify {text:32} -> {}", identify_family(&p).unwrap());
    }
}
