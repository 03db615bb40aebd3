// K3,3 with labels 2 is the right-angled join of two copies of three
// points, so its Betti numbers multiply. Any valid grouping of the join
// factors gives the same answer.

use coxeter_l2::fixtures::k33;
use coxeter_l2::{betti, build_nerve, detect_join2, BettiVector, RuleContext, VertexSubset};

pub fn run_example() -> (Vec<String>, BettiVector, BettiVector) {
    let nerve = build_nerve(&k33()).unwrap();
    let spec = nerve.spec();
    let factors = detect_join2(&nerve).expect("K3,3 is a join");
    let names = factors.iter().map(|f| spec.format_subset(f)).collect();

    let finest = betti(&nerve, &RuleContext::default()).unwrap();
    // Same split, stated explicitly through the context.
    let a: VertexSubset = spec.subset(&["a1", "a2", "a3"]).unwrap();
    let b = spec.all().difference(&a);
    let ctx = RuleContext::default().with_join_factors(&nerve, vec![b, a]).unwrap();
    let grouped = betti(&nerve, &ctx).unwrap();
    assert_eq!(finest.entries, grouped.entries);
    (names, finest, grouped)
}

fn main() {
    let (factors, finest, grouped) = run_example();
    println!("factors: {}", factors.join(" * "));
    println!("betti (finest factors): {finest}");
    println!("betti (explicit grouping): {grouped}");
}
