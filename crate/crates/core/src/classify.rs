//! Finite-type recognition for parabolic subgroups `W_T`.
//!
//! A subset is spherical exactly when every connected component of its
//! Coxeter diagram is one of the finite types A, B, D, E, F, H or I2. The
//! primary decision is made by matching diagram shapes; the numeric cosine
//! test below is a cross-check only.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::coxeter::{CoxeterSpec, Label, VertexSubset};
use crate::error::{Error, Result};

/// Finite irreducible Coxeter types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteKind {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

impl FiniteKind {
    pub fn rank(self) -> usize {
        match self {
            FiniteKind::A(n) | FiniteKind::B(n) | FiniteKind::D(n) => n,
            FiniteKind::E6 => 6,
            FiniteKind::E7 => 7,
            FiniteKind::E8 => 8,
            FiniteKind::F4 | FiniteKind::H4 => 4,
            FiniteKind::H3 => 3,
            FiniteKind::I2(_) => 2,
        }
    }

    /// Group order from the classification table.
    pub fn order(self) -> BigUint {
        fn factorial(n: usize) -> BigUint {
            (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
        }
        match self {
            FiniteKind::A(n) => factorial(n + 1),
            FiniteKind::B(n) => (BigUint::one() << n) * factorial(n),
            FiniteKind::D(n) => (BigUint::one() << (n - 1)) * factorial(n),
            FiniteKind::E6 => BigUint::from(51_840u32),
            FiniteKind::E7 => BigUint::from(2_903_040u32),
            FiniteKind::E8 => BigUint::from(696_729_600u32),
            FiniteKind::F4 => BigUint::from(1_152u32),
            FiniteKind::H3 => BigUint::from(120u32),
            FiniteKind::H4 => BigUint::from(14_400u32),
            FiniteKind::I2(m) => BigUint::from(2 * m as u64),
        }
    }
}

impl fmt::Display for FiniteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteKind::A(n) => write!(f, "A{n}"),
            FiniteKind::B(n) => write!(f, "B{n}"),
            FiniteKind::D(n) => write!(f, "D{n}"),
            FiniteKind::E6 => f.write_str("E6"),
            FiniteKind::E7 => f.write_str("E7"),
            FiniteKind::E8 => f.write_str("E8"),
            FiniteKind::F4 => f.write_str("F4"),
            FiniteKind::H3 => f.write_str("H3"),
            FiniteKind::H4 => f.write_str("H4"),
            FiniteKind::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl Serialize for FiniteKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteTypeComponent {
    pub kind: FiniteKind,
    #[serde(skip)]
    pub vertices: VertexSubset,
    pub rank: usize,
    #[serde(serialize_with = "serialize_biguint")]
    pub order: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphericalVerdict {
    pub spherical: bool,
    pub components: Vec<FiniteTypeComponent>,
    #[serde(serialize_with = "serialize_biguint")]
    pub order: BigUint,
}

fn serialize_biguint<S: Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

impl SphericalVerdict {
    fn infinite() -> Self {
        SphericalVerdict {
            spherical: false,
            components: Vec::new(),
            order: BigUint::one(),
        }
    }

    /// `A1 x I2(5)`-style product name; `1` for the trivial group.
    pub fn type_name(&self) -> String {
        if self.components.is_empty() {
            return if self.spherical { "1".into() } else { "infinite".into() };
        }
        self.components
            .iter()
            .map(|c| c.kind.to_string())
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

/// Partition of `t` into connected components of the Coxeter diagram.
///
/// Diagram edges are the pairs with label 3 or more, including infinity.
pub fn diagram_components(spec: &CoxeterSpec, t: &VertexSubset) -> Vec<VertexSubset> {
    let idx = t.indices();
    let mut seen = vec![false; idx.len()];
    let mut out = Vec::new();
    for start in 0..idx.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![idx[start]];
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            for q in 0..idx.len() {
                if !seen[q] && q != p && spec.label(idx[p], idx[q]) != Label::Finite(2) {
                    seen[q] = true;
                    comp.push(idx[q]);
                    queue.push_back(q);
                }
            }
        }
        out.push(VertexSubset::from_indices(comp));
    }
    // Components are discovered in order of their least vertex.
    out
}

/// Decides whether `W_T` is finite and, if so, its type and order.
pub fn classify(spec: &CoxeterSpec, t: &VertexSubset) -> SphericalVerdict {
    let mut components = Vec::new();
    let mut order = BigUint::one();
    for comp in diagram_components(spec, t) {
        match classify_connected(spec, &comp) {
            Some(kind) => {
                order *= kind.order();
                components.push(FiniteTypeComponent {
                    kind,
                    rank: kind.rank(),
                    order: kind.order(),
                    vertices: comp,
                });
            }
            None => return SphericalVerdict::infinite(),
        }
    }
    SphericalVerdict {
        spherical: true,
        components,
        order,
    }
}

/// Shorthand for `classify(spec, t).spherical`.
pub fn is_spherical(spec: &CoxeterSpec, t: &VertexSubset) -> bool {
    diagram_components(spec, t)
        .iter()
        .all(|c| classify_connected(spec, c).is_some())
}

/// Recognizes a connected diagram; `None` means the group is infinite.
fn classify_connected(spec: &CoxeterSpec, comp: &VertexSubset) -> Option<FiniteKind> {
    let v = comp.indices();
    let n = v.len();
    if n == 1 {
        return Some(FiniteKind::A(1));
    }
    // Local adjacency restricted to diagram edges.
    let mut adj: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
    let mut edges = 0usize;
    for p in 0..n {
        for q in p + 1..n {
            match spec.label(v[p], v[q]) {
                Label::Infinity => return None,
                Label::Finite(2) => {}
                Label::Finite(m) => {
                    adj[p].push((q, m));
                    adj[q].push((p, m));
                    edges += 1;
                }
            }
        }
    }
    // Every finite connected diagram is a tree.
    if edges != n - 1 {
        return None;
    }
    if n == 2 {
        let m = adj[0][0].1;
        return Some(match m {
            3 => FiniteKind::A(2),
            4 => FiniteKind::B(2),
            m => FiniteKind::I2(m),
        });
    }
    // Rank >= 3: labels are drawn from {3, 4, 5}.
    if adj.iter().flatten().any(|&(_, m)| m > 5) {
        return None;
    }
    let max_deg = adj.iter().map(Vec::len).max().unwrap_or(0);
    match max_deg {
        2 => classify_path(&adj),
        3 => classify_branched(&adj),
        _ => None,
    }
}

fn classify_path(adj: &[Vec<(usize, u32)>]) -> Option<FiniteKind> {
    let n = adj.len();
    let start = (0..n).find(|&p| adj[p].len() == 1)?;
    // Walk the path collecting edge labels in order.
    let mut labels = Vec::with_capacity(n - 1);
    let (mut prev, mut cur) = (usize::MAX, start);
    loop {
        let next = adj[cur].iter().find(|&&(q, _)| q != prev);
        match next {
            Some(&(q, m)) => {
                labels.push(m);
                prev = cur;
                cur = q;
            }
            None => break,
        }
    }
    let special: Vec<(usize, u32)> = labels
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, m)| m != 3)
        .collect();
    let last = labels.len() - 1;
    match special.as_slice() {
        [] => Some(FiniteKind::A(n)),
        [(pos, 4)] if *pos == 0 || *pos == last => Some(FiniteKind::B(n)),
        [(1, 4)] if n == 4 => Some(FiniteKind::F4),
        [(pos, 5)] if *pos == 0 || *pos == last => match n {
            3 => Some(FiniteKind::H3),
            4 => Some(FiniteKind::H4),
            _ => None,
        },
        _ => None,
    }
}

fn classify_branched(adj: &[Vec<(usize, u32)>]) -> Option<FiniteKind> {
    if adj.iter().flatten().any(|&(_, m)| m != 3) {
        return None;
    }
    let branch: Vec<usize> = (0..adj.len()).filter(|&p| adj[p].len() == 3).collect();
    if branch.len() != 1 {
        return None;
    }
    let center = branch[0];
    let mut arms: Vec<usize> = adj[center]
        .iter()
        .map(|&(first, _)| {
            let (mut prev, mut cur, mut len) = (center, first, 1);
            while let Some(&(q, _)) = adj[cur].iter().find(|&&(q, _)| q != prev) {
                prev = cur;
                cur = q;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort_unstable();
    let n = adj.len();
    match arms.as_slice() {
        [1, 1, _] => Some(FiniteKind::D(n)),
        [1, 2, 2] => Some(FiniteKind::E6),
        [1, 2, 3] => Some(FiniteKind::E7),
        [1, 2, 4] => Some(FiniteKind::E8),
        _ => None,
    }
}

/// Default bound on `|T|` for the numeric cross-check.
pub const COSINE_TEST_BOUND: usize = 12;
/// Leading minors within this distance of zero are indeterminate.
pub const COSINE_EPSILON: f64 = 1e-9;

/// Positive-definiteness of the cosine matrix `c_st = -cos(pi / m_st)`.
///
/// Infinite labels contribute `-1`. Returns
/// [`Error::IndeterminateNumeric`] when a leading minor is too close to zero
/// to decide; use [`cosine_matrix_test_resolved`] to fall back on [`classify`].
pub fn cosine_matrix_test(spec: &CoxeterSpec, t: &VertexSubset) -> Result<bool> {
    cosine_matrix_test_bounded(spec, t, COSINE_TEST_BOUND)
}

pub fn cosine_matrix_test_bounded(spec: &CoxeterSpec, t: &VertexSubset, bound: usize) -> Result<bool> {
    spec.check_subset(t)?;
    let n = t.len();
    if n > bound {
        return Err(Error::SubsetTooLarge { size: n, bound });
    }
    let idx = t.indices();
    let mut a = vec![0.0f64; n * n];
    for p in 0..n {
        for q in 0..n {
            a[p * n + q] = if p == q {
                1.0
            } else {
                match spec.label(idx[p], idx[q]) {
                    Label::Finite(m) => -(std::f64::consts::PI / m as f64).cos(),
                    Label::Infinity => -1.0,
                }
            };
        }
    }
    // Gaussian elimination without pivoting: the k-th leading minor is the
    // product of the first k pivots.
    let mut minor = 1.0f64;
    for k in 0..n {
        let pivot = a[k * n + k];
        minor *= pivot;
        if minor.abs() <= COSINE_EPSILON {
            return Err(Error::IndeterminateNumeric {
                size: k + 1,
                minor: format!("{minor:e}"),
            });
        }
        if minor < 0.0 {
            return Ok(false);
        }
        for r in k + 1..n {
            let f = a[r * n + k] / pivot;
            for c in k..n {
                a[r * n + c] -= f * a[k * n + c];
            }
        }
    }
    Ok(true)
}

/// [`cosine_matrix_test`] with indeterminate cases adjudicated exactly.
pub fn cosine_matrix_test_resolved(spec: &CoxeterSpec, t: &VertexSubset) -> Result<bool> {
    match cosine_matrix_test(spec, t) {
        Err(Error::IndeterminateNumeric { .. }) => Ok(is_spherical(spec, t)),
        other => other,
    }
}
