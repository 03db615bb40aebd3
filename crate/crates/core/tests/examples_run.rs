//! Runs every example's `run_example` and checks its headline values.

#![allow(dead_code)]

use coxeter_l2::word_oracle::EnumerationResult;
use coxeter_l2::ExactRational;

mod betti_rules {
    include!("../examples/betti_rules.rs");
}
mod chi_orb {
    include!("../examples/chi_orb.rs");
}
mod classify_finite_types {
    include!("../examples/classify_finite_types.rs");
}
mod cone_and_trace {
    include!("../examples/cone_and_trace.rs");
}
mod join_and_cone {
    include!("../examples/join_and_cone.rs");
}
mod k33_join {
    include!("../examples/k33_join.rs");
}
mod k5_certificate {
    include!("../examples/k5_certificate.rs");
}
mod planarity_oracle {
    include!("../examples/planarity_oracle.rs");
}
mod word_oracle {
    include!("../examples/word_oracle.rs");
}

fn r(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n, d)
}

#[test]
fn betti_rules_example() {
    let out = betti_rules::run_example();
    let rendered: Vec<String> = out.iter().map(|(_, b)| b.to_string()).collect();
    assert_eq!(rendered, ["(1/2, 0)", "(0, 1/2)", "(0, 0, 1/4)", "(0, 0, 0, 0)"]);
}

#[test]
fn chi_orb_example() {
    let values: Vec<ExactRational> = chi_orb::run_example().into_iter().map(|(_, c)| c).collect();
    assert_eq!(values, [r(1, 6), r(1, 4), r(-1, 2), r(0, 1), r(-1, 2)]);
}

#[test]
fn classify_example() {
    let out = classify_finite_types::run_example();
    let names: Vec<&str> = out.iter().map(|(_, s)| s.as_str()).collect();
    assert_eq!(names[0], "B3 (order 48)");
    assert_eq!(names[3], "H4 (order 14400)");
    assert_eq!(names[4], "D4 (order 192)");
    assert_eq!(names[6], "A1 x A2 (order 12)");
    assert_eq!(names[7], "infinite");
}

#[test]
fn cone_and_trace_example() {
    let out = cone_and_trace::run_example();
    let counts: Vec<usize> = out.iter().map(|(_, done, _)| done.cone_vertices.len()).collect();
    assert_eq!(counts, [2, 4]);
}

#[test]
fn join_and_cone_example() {
    for (name, got, want) in join_and_cone::run_example() {
        assert_eq!(got, want, "{name}");
    }
}

#[test]
fn k33_join_example() {
    let (factors, finest, _) = k33_join::run_example();
    assert_eq!(factors.len(), 2);
    assert_eq!(finest.to_string(), "(0, 0, 1/4)");
}

#[test]
fn k5_certificate_example() {
    let cert = k5_certificate::run_example();
    assert_eq!(cert.beta2_lower_bound, r(1, 6));
    assert!(cert.to_json().contains("\"bound\": \"1/6\""));
}

#[test]
fn planarity_oracle_example() {
    let verdicts: Vec<bool> = planarity_oracle::run_example().into_iter().map(|(_, p, _)| p).collect();
    assert_eq!(verdicts, [true, false, false, true, true, true]);
}

#[test]
fn word_oracle_example() {
    let orders: Vec<EnumerationResult> = word_oracle::run_example().into_iter().map(|(_, r)| r).collect();
    use EnumerationResult::*;
    assert_eq!(orders, [Order(6), Order(48), Order(120), Order(1152), Order(14400), ExceedsCap]);
}
