// Orbifold Euler characteristic of a few nerves, two ways.

use coxeter_l2::fixtures::{cycle, k33, k5, octahedron, points};
use coxeter_l2::{build_nerve, chi_orb, chi_orb_chain_sum, ExactRational};

pub fn run_example() -> Vec<(String, ExactRational)> {
    let specs = [
        ("K5 @ 3", k5(3)),
        ("K3,3 @ 2", k33()),
        ("hexagon @ 2", cycle(6)),
        ("octahedron @ 2", octahedron()),
        ("three points", points(3)),
    ];
    specs
        .into_iter()
        .map(|(name, spec)| {
            let nerve = build_nerve(&spec).expect("small nerve");
            let chi = chi_orb(&nerve);
            // The chain sum over the poset of spherical subsets is an
            // independent evaluation of the same number.
            assert_eq!(chi_orb_chain_sum(&nerve), Ok(chi.clone()));
            (name.to_string(), chi)
        })
        .collect()
}

fn main() {
    for (name, chi) in run_example() {
        println!("{name:>16}  chi_orb = {chi}");
    }
}
