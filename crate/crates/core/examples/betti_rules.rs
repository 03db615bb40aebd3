// The rule engine on small nerves, with the rule behind every entry.

use coxeter_l2::fixtures::{k33, octahedron, points};
use coxeter_l2::{betti, build_nerve, BettiVector, RuleContext};

pub fn run_example() -> Vec<(String, BettiVector)> {
    let specs = [
        ("point", points(1)),
        ("three points", points(3)),
        ("K3,3 @ 2", k33()),
        ("octahedron @ 2", octahedron()),
    ];
    specs
        .into_iter()
        .map(|(name, spec)| {
            let nerve = build_nerve(&spec).unwrap();
            (name.to_string(), betti(&nerve, &RuleContext::default()).unwrap())
        })
        .collect()
}

fn main() {
    for (name, b) in run_example() {
        println!("{name}: {b}");
        for (i, p) in b.provenance.iter().enumerate() {
            if let Some(p) = p {
                println!("  beta_{i} by {}: {}", p.rule.id(), p.witness);
            }
        }
    }
}
