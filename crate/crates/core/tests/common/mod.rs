#![allow(dead_code)]

use coxeter_l2::fixtures::{labeled_graph, octahedron_edges, octahedron_labeled};
use coxeter_l2::CoxeterSpec;
use rand::seq::SliceRandom;
use rand::Rng;

/// Labels drawn from {2, 3, 4, 5, inf}; `None` is infinity.
pub fn random_label<R: Rng>(rng: &mut R) -> Option<u32> {
    match rng.gen_range(0..5) {
        4 => None,
        k => Some(k + 2),
    }
}

/// Random spec on `n` vertices named `s0..`.
pub fn random_spec<R: Rng>(rng: &mut R, n: usize) -> CoxeterSpec {
    let names: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if let Some(m) = random_label(rng) {
                edges.push((i, j, m));
            }
        }
    }
    labeled_graph(&names, &edges)
}

/// Random spec given as a proptest-friendly label vector over pairs.
pub fn spec_from_labels(n: usize, labels: &[Option<u32>]) -> CoxeterSpec {
    let names: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if let Some(m) = labels[k] {
                edges.push((i, j, m));
            }
            k += 1;
        }
    }
    labeled_graph(&names, &edges)
}

/// Random planar triangulation by repeated face subdivision, with
/// `n >= 3` vertices. Returns the edge list.
pub fn stacked_triangulation<R: Rng>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut faces = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        let f = faces.swap_remove(rng.gen_range(0..faces.len()));
        for &u in &f {
            edges.push((u, v));
        }
        faces.push([f[0], f[1], v]);
        faces.push([f[1], f[2], v]);
        faces.push([f[0], f[2], v]);
    }
    edges
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            let w = if a == u { b } else if b == u { a } else { continue };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Random connected planar graph on `n` vertices: a stacked triangulation
/// with some edges removed.
pub fn random_planar_graph<R: Rng>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    let mut edges = stacked_triangulation(rng, n);
    edges.shuffle(rng);
    let drop = rng.gen_range(0..=edges.len() / 2);
    let mut kept = edges.clone();
    for e in edges.iter().take(drop) {
        let trial: Vec<_> = kept.iter().copied().filter(|x| x != e).collect();
        if connected(n, &trial) {
            kept = trial;
        }
    }
    kept
}

/// Spec whose finite edges are `edges` with labels drawn from 2..=5.
pub fn labeled_planar_spec<R: Rng>(rng: &mut R, n: usize, edges: &[(usize, usize)]) -> CoxeterSpec {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let labeled: Vec<_> = edges.iter().map(|&(u, v)| (u, v, rng.gen_range(2..=5))).collect();
    labeled_graph(&names, &labeled)
}

fn spherical_triangle(a: u32, b: u32, c: u32) -> bool {
    // 1/a + 1/b + 1/c > 1
    b * c + a * c + a * b > a * b * c
}

/// Octahedra with random edge labels whose eight faces are all spherical.
pub fn octahedron_variants<R: Rng>(rng: &mut R, count: usize) -> Vec<CoxeterSpec> {
    let edges = octahedron_edges();
    let mut out: Vec<CoxeterSpec> = Vec::new();
    let mut guard = 0;
    while out.len() < count && guard < 100_000 {
        guard += 1;
        let labels: Vec<u32> = (0..edges.len()).map(|_| if rng.gen_bool(0.7) { 2 } else { rng.gen_range(3..=5) }).collect();
        let label = |u: usize, v: usize| {
            let i = edges.iter().position(|&e| e == (u.min(v), u.max(v))).expect("edge");
            labels[i]
        };
        let ok = (0..2).all(|a| {
            (0..2).all(|b| {
                (0..2).all(|c| {
                    let (x, y, z) = (a, 2 + b, 4 + c);
                    spherical_triangle(label(x, y), label(y, z), label(x, z))
                })
            })
        });
        let labels: [u32; 12] = labels.try_into().expect("12 edges");
        let spec = octahedron_labeled(&labels);
        if ok && !out.iter().any(|s| s.same_matrix(&spec)) {
            out.push(spec);
        }
    }
    out
}
