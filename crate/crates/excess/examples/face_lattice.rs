//! The face lattice of a cube: closure operator, ranks, cover relations,
//! f-vector and the Euler relation.

use excess::construct;
use excess::face_lattice;

fn main() {
    let cube = construct::prism(&construct::polygon(4).unwrap()).unwrap();
    println!("cube facets: {:?}\n", cube.facets());

    // The closure of a vertex set is the smallest face containing it.
    for set in [vec![0], vec![0, 1], vec![0, 3], vec![0, 1, 2]] {
        let closure = cube.closure_of(&set).unwrap();
        let is_face = closure == set;
        println!("closure({set:?}) = {closure:?}   face: {is_face}");
    }
    println!();

    let lattice = face_lattice(&cube).unwrap();
    println!("faces by rank (rank -1 is the empty face, rank 3 the cube itself):");
    for rank in -1..=(lattice.dim() as i32) {
        let faces = lattice.faces_of_rank(rank);
        let preview: Vec<String> = faces
            .iter()
            .take(4)
            .map(|f| format!("{:?}", f.vertices))
            .collect();
        println!(
            "  rank {rank:2}: {:2} faces   {}{}",
            faces.len(),
            preview.join(" "),
            if faces.len() > 4 { " ..." } else { "" }
        );
    }

    println!("\nf-vector: {:?}", lattice.f_vector());
    println!("Euler relation holds: {}", lattice.euler_characteristic_ok());

    // Cover relations form the Hasse diagram; every ridge (rank d-2 face)
    // lies in exactly two facets.
    let edge = cube.vertex_set(&[0, 1]).unwrap();
    let id = lattice.face_id(&edge).unwrap();
    let covering: Vec<_> = lattice
        .upper_covers(id)
        .iter()
        .map(|&c| format!("{:?}", lattice.face(c).vertices))
        .collect();
    println!("\nfacets over the edge {{0,1}}: {}", covering.join(" "));

    // The graph read off the lattice: rank-1 faces are the edges.
    println!("edges: {:?}", cube.graph());
}
