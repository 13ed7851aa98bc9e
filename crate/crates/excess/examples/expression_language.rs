//! The construction-expression language: parsing, evaluation, printing,
//! selectors and error reporting.

use excess::{eval, excess_profile, parse};

fn main() {
    // Expressions compose constructions; selectors name faces.
    let text = "wedge(J(4),face(0,1,2,7,8))"; // a pentagonal 2-face of J(4)
    let expr = parse(text).unwrap();
    println!("parsed:   {expr:?}");
    println!("printed:  {expr}");

    // Round trip: parse(print(e)) == e.
    assert_eq!(parse(&expr.to_string()).unwrap(), expr);

    // Evaluation produces a polytope carrying its provenance string.
    let p = eval(&parse("glue(simplex(5),facet(0),simplex(5),facet(0))").unwrap()).unwrap();
    println!(
        "\nglued simplices: f0={} xi={} provenance={}",
        p.n_vertices(),
        excess_profile(&p).unwrap().xi,
        p.provenance.as_deref().unwrap()
    );

    // Merge options fold facet pairs of a glueing across the shared simplex;
    // different merge sets give different combinatorial types with the same
    // counts.
    let plain = eval(&parse("glue(simplex(7),facet(0),simplex(7),facet(0))").unwrap()).unwrap();
    let merged =
        eval(&parse("glue(simplex(7),facet(0),simplex(7),facet(0),merge=[(1,1),(2,2)])").unwrap())
            .unwrap();
    println!(
        "plain glue:  f0={} facets={} xi={}",
        plain.n_vertices(),
        plain.n_facets(),
        excess_profile(&plain).unwrap().xi
    );
    println!(
        "merged glue: f0={} facets={} xi={}",
        merged.n_vertices(),
        merged.n_facets(),
        excess_profile(&merged).unwrap().xi
    );
    println!(
        "isomorphic: {}",
        excess::is_isomorphic(&plain, &merged).unwrap()
    );

    // Parse errors carry exact positions and what was expected.
    for bad in ["delta(2,)", "simplexx(3)", "wedge(J(4))", "M(3 4)"] {
        match parse(bad) {
            Err(e) => println!("parse {bad:20} -> {e}"),
            Ok(_) => println!("parse {bad:20} -> unexpectedly ok"),
        }
    }

    // Evaluation errors name the offending sub-expression.
    let e = parse("prism(wedge(polygon(2),vertex(0)))").unwrap();
    match eval(&e) {
        Err(err) => println!("eval error: {err}"),
        Ok(_) => unreachable!(),
    }
}
