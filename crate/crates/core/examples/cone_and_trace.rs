// Completes planar complexes to 2-spheres by coning off faces, then walks
// the vertex-removal argument back down to the original complex.

use coxeter_l2::fixtures::{cycle, k4};
use coxeter_l2::planarity::{ConeCompletion, ProofTrace};
use coxeter_l2::{build_nerve, chi_orb, cone_construction, trace_vanishing, RotationSystem, SphereKind};

fn hexagon() -> (coxeter_l2::Nerve, RotationSystem) {
    let n = build_nerve(&cycle(6)).unwrap();
    let rot = RotationSystem::new((0..6).map(|i| vec![(i + 5) % 6, (i + 1) % 6]).collect());
    (n, rot)
}

fn tetrahedron() -> (coxeter_l2::Nerve, RotationSystem) {
    let n = build_nerve(&k4(3)).unwrap();
    let rot = RotationSystem::new(vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]);
    (n, rot)
}

pub fn run_example() -> Vec<(String, ConeCompletion, ProofTrace)> {
    let mut out = Vec::new();
    for (name, (n, rot)) in [("hexagon @ 2", hexagon()), ("K4 @ 3", tetrahedron())] {
        let done = cone_construction(&n, &rot).unwrap();
        assert_eq!(done.nerve.recognize_sphere(), SphereKind::TwoSphere);
        assert!(chi_orb(&done.nerve).is_zero());
        let trace = trace_vanishing(&done.nerve, &done.witness.vertices).unwrap();
        assert_eq!(trace.steps.len(), done.cone_vertices.len());
        out.push((name.to_string(), done, trace));
    }
    out
}

fn main() {
    for (name, done, trace) in run_example() {
        println!("{name}: coned {} faces", done.cone_vertices.len());
        for step in &trace.steps {
            println!("  remove {}: link {{{}}}", step.removed, step.link.vertices.join(", "));
        }
        println!("  {}", trace.conclusion);
    }
}
