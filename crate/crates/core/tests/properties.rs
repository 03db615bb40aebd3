mod common;

use coxeter_l2::classify::{cosine_matrix_test_resolved, is_spherical};
use coxeter_l2::fixtures::octahedron;
use coxeter_l2::planarity::{verify_certificate, Verdict};
use coxeter_l2::word_oracle::EnumerationResult;
use coxeter_l2::{
    atiyah_check, betti, build_nerve, certify_nonplanar, chi_orb, chi_orb_chain_sum, classify, enumerate_order,
    full_subcomplex, join2, parse_spec, trace_vanishing, Error, RuleContext, VertexSubset,
};
use proptest::prelude::*;

fn label() -> impl Strategy<Value = Option<u32>> {
    prop_oneof![Just(None), (2u32..=5).prop_map(Some)]
}

/// Vertex count and one label per unordered pair.
fn spec_strategy(max: usize) -> impl Strategy<Value = (usize, Vec<Option<u32>>)> {
    (1..=max).prop_flat_map(|n| (Just(n), proptest::collection::vec(label(), n * (n - 1) / 2)))
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSubset> {
    (0u32..1 << n).map(move |mask| VertexSubset::from_indices((0..n).filter(|&i| mask >> i & 1 == 1)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn spec_documents_round_trip((n, labels) in spec_strategy(7)) {
        let spec = common::spec_from_labels(n, &labels);
        let back = parse_spec(&spec.to_json()).unwrap();
        prop_assert!(back.same_matrix(&spec));
        prop_assert_eq!(back.to_json(), spec.to_json());
    }

    #[test]
    fn corrupted_documents_are_rejected((n, labels) in spec_strategy(5), bad in 0i64..2) {
        let spec = common::spec_from_labels(n, &labels);
        let mut doc: serde_json::Value = serde_json::from_str(&spec.to_json()).unwrap();
        let first = doc["vertices"][0].clone();
        let mut dup = doc.clone();
        dup["vertices"].as_array_mut().unwrap().push(first.clone());
        prop_assert!(matches!(parse_spec(&dup.to_string()), Err(Error::DuplicateVertex(_))));
        let mut unknown = doc.clone();
        unknown["edges"].as_array_mut().unwrap().push(serde_json::json!({"u": first, "v": "nowhere", "m": 2}));
        prop_assert!(matches!(parse_spec(&unknown.to_string()), Err(Error::UnknownVertex(_))));
        if n >= 2 {
            doc["edges"] = serde_json::json!([{"u": doc["vertices"][0], "v": doc["vertices"][1], "m": bad}]);
            prop_assert_eq!(parse_spec(&doc.to_string()).unwrap_err(), Error::LabelOutOfRange(bad));
        }
    }

    #[test]
    fn nerve_is_exactly_the_spherical_subsets((n, labels) in spec_strategy(6)) {
        let spec = common::spec_from_labels(n, &labels);
        let nerve = build_nerve(&spec).unwrap();
        for t in subsets(n).filter(|t| !t.is_empty()) {
            prop_assert_eq!(nerve.complex().contains(&t), classify(&spec, &t).spherical);
        }
        for s in nerve.complex().all_simplices() {
            for v in s.iter() {
                let face = s.without(v);
                prop_assert!(face.is_empty() || nerve.complex().contains(&face));
            }
        }
    }

    #[test]
    fn full_subcomplex_matches_induced_spec((n, labels) in spec_strategy(6), mask in 0u32..64) {
        let spec = common::spec_from_labels(n, &labels);
        let nerve = build_nerve(&spec).unwrap();
        let a = VertexSubset::from_indices((0..n).filter(|&i| mask >> i & 1 == 1));
        let (sub, witness) = full_subcomplex(&nerve, &a).unwrap();
        let direct = build_nerve(&spec.induced_subspec(&a).unwrap()).unwrap();
        prop_assert!(witness.full);
        prop_assert!(sub.spec().same_matrix(direct.spec()));
        prop_assert_eq!(sub.complex().simplex_count(), direct.complex().simplex_count());
        prop_assert_eq!(chi_orb(&sub), chi_orb(&direct));
    }

    #[test]
    fn cosine_test_agrees_with_classification((n, labels) in spec_strategy(6)) {
        let spec = common::spec_from_labels(n, &labels);
        for t in subsets(n) {
            prop_assert_eq!(cosine_matrix_test_resolved(&spec, &t), Ok(is_spherical(&spec, &t)));
        }
    }

    #[test]
    fn chain_sum_equals_collapsed_sum((n, labels) in spec_strategy(6)) {
        let nerve = build_nerve(&common::spec_from_labels(n, &labels)).unwrap();
        prop_assert_eq!(chi_orb_chain_sum(&nerve).unwrap(), chi_orb(&nerve));
    }

    #[test]
    fn complete_betti_vectors_satisfy_atiyah((n, labels) in spec_strategy(6)) {
        let nerve = build_nerve(&common::spec_from_labels(n, &labels)).unwrap();
        let b = betti(&nerve, &RuleContext::default()).unwrap();
        if b.is_complete() {
            prop_assert_eq!(atiyah_check(&nerve, &b), Ok(true));
        }
        for i in 0..b.len() {
            if let Some(v) = b.get(i) {
                prop_assert!(!v.is_negative());
            }
        }
    }

    #[test]
    fn join_is_associative(
        (na, la) in spec_strategy(3),
        (nb, lb) in spec_strategy(3),
        (nc, lc) in spec_strategy(3),
    ) {
        let a = build_nerve(&common::spec_from_labels(na, &la)).unwrap();
        let b = build_nerve(&common::spec_from_labels(nb, &lb)).unwrap();
        let c = build_nerve(&common::spec_from_labels(nc, &lc)).unwrap();
        let left = join2(&join2(&a, &b), &c);
        let right = join2(&a, &join2(&b, &c));
        prop_assert_eq!(left.complex().simplex_count(), right.complex().simplex_count());
        prop_assert_eq!(left.dimension(), right.dimension());
        prop_assert_eq!(chi_orb(&left), chi_orb(&right));
    }

    #[test]
    fn certificates_are_reproducible((n, labels) in spec_strategy(6)) {
        let cert = certify_nonplanar(&common::spec_from_labels(n, &labels));
        prop_assert_eq!(verify_certificate(&cert), Ok(true));
        if cert.verdict == Verdict::NotPlanar {
            prop_assert!(cert.beta2_lower_bound.is_positive());
        }
    }

    #[test]
    fn octahedron_subsets_trace_cleanly(mask in 0u32..64) {
        let oct = build_nerve(&octahedron()).unwrap();
        let a = VertexSubset::from_indices((0..6).filter(|&i| mask >> i & 1 == 1));
        let trace = trace_vanishing(&oct, &a).unwrap();
        prop_assert_eq!(trace.steps.len(), 6 - a.len());
        prop_assert!(trace.steps.iter().all(|s| s.link_full && s.link_in_circle));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn enumeration_matches_table((n, labels) in spec_strategy(4)) {
        let spec = common::spec_from_labels(n, &labels);
        let all = spec.all();
        let v = classify(&spec, &all);
        let e = enumerate_order(&spec, &all, 20_000).unwrap();
        if v.spherical {
            prop_assert_eq!(e, EnumerationResult::Order(v.order.try_into().unwrap()));
        } else {
            prop_assert_eq!(e, EnumerationResult::ExceedsCap);
        }
    }
}
