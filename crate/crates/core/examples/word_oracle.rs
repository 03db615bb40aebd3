// Counts finite Coxeter groups by enumerating matrices of the reflection
// representation and compares with the classification table.

use coxeter_l2::fixtures::{complete, path_diagram};
use coxeter_l2::word_oracle::EnumerationResult;
use coxeter_l2::{classify, enumerate_order};

pub fn run_example() -> Vec<(String, EnumerationResult)> {
    let cases = [
        ("A2", path_diagram(&[3])),
        ("B3", path_diagram(&[3, 4])),
        ("H3", path_diagram(&[3, 5])),
        ("F4", path_diagram(&[3, 4, 3])),
        ("H4", path_diagram(&[5, 3, 3])),
        ("affine A2", complete(3, 3)),
    ];
    cases
        .into_iter()
        .map(|(name, spec)| {
            let all = spec.all();
            let r = enumerate_order(&spec, &all, 50_000).unwrap();
            let v = classify(&spec, &all);
            match r {
                EnumerationResult::Order(n) => assert_eq!(v.order, n.into()),
                EnumerationResult::ExceedsCap => assert!(!v.spherical),
            }
            (name.to_string(), r)
        })
        .collect()
}

fn main() {
    for (name, r) in run_example() {
        println!("{name:>10}  {r:?}");
    }
}
