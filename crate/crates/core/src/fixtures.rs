//! Named Coxeter systems used throughout the examples and tests.
//!
//! Graph builders return specs whose unlisted pairs are labeled infinity, so
//! the nerve's 1-skeleton is exactly the listed graph. Diagram builders
//! ([`dynkin`], [`path_diagram`]) use the opposite convention.

use crate::coxeter::CoxeterSpec;

/// Spec whose finite labels are the given graph edges.
pub fn labeled_graph(names: &[String], edges: &[(usize, usize, u32)]) -> CoxeterSpec {
    let e: Vec<(String, String, u32)> = edges
        .iter()
        .map(|&(i, j, m)| (names[i].clone(), names[j].clone(), m))
        .collect();
    CoxeterSpec::from_finite_edges(names.to_vec(), &e).expect("fixture graphs are valid")
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("{prefix}{i:0width$}")).collect()
}

/// Coxeter diagram on `s0, s1, ...`: listed pairs carry their label and
/// every unlisted pair commutes (label 2), the usual diagram convention.
pub fn dynkin(n: usize, edges: &[(usize, usize, u32)]) -> CoxeterSpec {
    let mut all = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let m = edges
                .iter()
                .find(|&&(a, b, _)| (a, b) == (i, j) || (b, a) == (i, j))
                .map_or(2, |e| e.2);
            all.push((i, j, m));
        }
    }
    labeled_graph(&numbered("s", n), &all)
}

/// Linear diagram `s0 - s1 - ...` with the given consecutive labels.
pub fn path_diagram(labels: &[u32]) -> CoxeterSpec {
    let edges: Vec<_> = labels.iter().enumerate().map(|(i, &m)| (i, i + 1, m)).collect();
    dynkin(labels.len() + 1, &edges)
}

/// `n` disjoint points (pairwise infinity).
pub fn points(n: usize) -> CoxeterSpec {
    labeled_graph(&numbered("p", n), &[])
}

/// Cycle of length `n` with every edge labeled 2.
pub fn cycle(n: usize) -> CoxeterSpec {
    cycle_labeled(&vec![2; n])
}

/// Cycle whose `i`-th edge joins vertex `i` to `i + 1`.
pub fn cycle_labeled(labels: &[u32]) -> CoxeterSpec {
    let n = labels.len();
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, labels[i])).collect();
    labeled_graph(&numbered("v", n), &edges)
}

/// Complete graph with every edge labeled `m`.
pub fn complete(n: usize, m: u32) -> CoxeterSpec {
    let names: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j, m)))
        .collect();
    labeled_graph(&names, &edges)
}

pub fn k5(m: u32) -> CoxeterSpec {
    complete(5, m)
}

pub fn k4(m: u32) -> CoxeterSpec {
    complete(4, m)
}

/// `K_{3,3}` with all edges labeled 2; sides `a1..a3` and `b1..b3`.
pub fn k33() -> CoxeterSpec {
    let names: Vec<String> = ["a1", "a2", "a3", "b1", "b2", "b3"].map(String::from).to_vec();
    let edges: Vec<_> = (0..3)
        .flat_map(|i| (3..6).map(move |j| (i, j, 2)))
        .collect();
    labeled_graph(&names, &edges)
}

/// Edges of the octahedron on `x0 x1 y0 y1 z0 z1`; antipodes are `x0/x1` etc.
pub fn octahedron_edges() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            if i / 2 != j / 2 {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn octahedron() -> CoxeterSpec {
    octahedron_labeled(&[2; 12])
}

/// Octahedron with the `k`-th edge of [`octahedron_edges`] labeled `labels[k]`.
pub fn octahedron_labeled(labels: &[u32]) -> CoxeterSpec {
    let names: Vec<String> = ["x0", "x1", "y0", "y1", "z0", "z1"].map(String::from).to_vec();
    let edges: Vec<_> = octahedron_edges()
        .into_iter()
        .zip(labels)
        .map(|((i, j), &m)| (i, j, m))
        .collect();
    labeled_graph(&names, &edges)
}

/// Edges of the icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10,
/// apex 11.
pub fn icosahedron_edges() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..5 {
        let up = 1 + i;
        let up_next = 1 + (i + 1) % 5;
        let low = 6 + i;
        let low_next = 6 + (i + 1) % 5;
        out.push((0, up));
        out.push((up, up_next));
        out.push((up, low));
        out.push((up, low_next));
        out.push((low, low_next));
        out.push((low, 11));
    }
    out
}

pub fn icosahedron() -> CoxeterSpec {
    let edges: Vec<_> = icosahedron_edges().into_iter().map(|(i, j)| (i, j, 2)).collect();
    labeled_graph(&numbered("i", 12), &edges)
}
