// chi_orb is multiplicative under right-angled joins and halves under
// the right-angled cone.

use coxeter_l2::fixtures::{cycle, k5, points};
use coxeter_l2::{build_nerve, chi_orb, cone2, join2, ExactRational};

pub fn run_example() -> Vec<(String, ExactRational, ExactRational)> {
    let p3 = build_nerve(&points(3)).unwrap();
    let hex = build_nerve(&cycle(6)).unwrap();
    let k = build_nerve(&k5(3)).unwrap();
    vec![
        ("P3 * P3".into(), chi_orb(&join2(&p3, &p3)), chi_orb(&p3) * chi_orb(&p3)),
        ("hexagon * P3".into(), chi_orb(&join2(&hex, &p3)), chi_orb(&hex) * chi_orb(&p3)),
        ("cone(K5)".into(), chi_orb(&cone2(&k)), chi_orb(&k).half()),
        ("cone(P3)".into(), chi_orb(&cone2(&p3)), chi_orb(&p3).half()),
    ]
}

fn main() {
    for (name, got, want) in run_example() {
        println!("{name:>14}  {got} (expected {want})");
    }
}
