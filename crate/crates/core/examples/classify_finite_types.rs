// Recognizes finite Coxeter types from diagrams and cross-checks the
// numeric cosine-matrix test.

use coxeter_l2::classify::cosine_matrix_test_resolved;
use coxeter_l2::fixtures::{complete, dynkin, path_diagram};
use coxeter_l2::{classify, CoxeterSpec};

pub fn run_example() -> Vec<(String, String)> {
    let cases: Vec<(&str, CoxeterSpec)> = vec![
        ("path 3,4", path_diagram(&[3, 4])),
        ("path 3,5", path_diagram(&[3, 5])),
        ("path 3,4,3", path_diagram(&[3, 4, 3])),
        ("path 5,3,3", path_diagram(&[5, 3, 3])),
        ("star 1,1,1", dynkin(4, &[(0, 1, 3), (0, 2, 3), (0, 3, 3)])),
        ("pair 7", path_diagram(&[7])),
        ("triangle 2,2,3", dynkin(3, &[(1, 2, 3)])),
        ("triangle 3,3,3", complete(3, 3)),
    ];
    let mut out = Vec::new();
    for (name, spec) in cases {
        let all = spec.all();
        let v = classify(&spec, &all);
        let summary = if v.spherical {
            format!("{} (order {})", v.type_name(), v.order)
        } else {
            "infinite".to_string()
        };
        assert_eq!(cosine_matrix_test_resolved(&spec, &all), Ok(v.spherical));
        out.push((name.to_string(), summary));
    }
    out
}

fn main() {
    for (name, summary) in run_example() {
        println!("{name:>16}  {summary}");
    }
}
