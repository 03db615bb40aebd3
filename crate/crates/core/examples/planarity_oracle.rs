// The classical planarity test, used to check certificates from outside.

use coxeter_l2::fixtures::{complete, cycle, k33, octahedron};
use coxeter_l2::planarity::{faces_from_rotation, planar_embedding, Graph};
use coxeter_l2::{brute_force_planar, build_nerve};

fn k5_minus_edge() -> coxeter_l2::CoxeterSpec {
    let names: Vec<String> = "abcde".chars().map(String::from).collect();
    let edges: Vec<_> = (0..5)
        .flat_map(|i| (i + 1..5).map(move |j| (i, j, 2)))
        .filter(|&(i, j, _)| (i, j) != (0, 1))
        .collect();
    coxeter_l2::fixtures::labeled_graph(&names, &edges)
}

pub fn run_example() -> Vec<(String, bool, Option<usize>)> {
    let specs = [
        ("K4", complete(4, 2)),
        ("K5", complete(5, 2)),
        ("K3,3", k33()),
        ("octahedron", octahedron()),
        ("hexagon", cycle(6)),
        ("K5 minus an edge", k5_minus_edge()),
    ];
    specs
        .into_iter()
        .map(|(name, spec)| {
            let g = Graph::from_nerve(&build_nerve(&spec).unwrap());
            let planar = brute_force_planar(&g).unwrap();
            // A planar verdict comes with an embedding; count its faces.
            let faces = planar_embedding(&g).map(|rot| faces_from_rotation(&g, &rot).unwrap().len());
            (name.to_string(), planar, faces)
        })
        .collect()
}

fn main() {
    for (name, planar, faces) in run_example() {
        match faces {
            Some(f) => println!("{name:>12}  planar, {f} faces"),
            None => println!("{name:>12}  {}", if planar { "planar" } else { "not planar" }),
        }
    }
}
