//! Brute-force group orders by enumerating elements of the geometric
//! reflection representation.
//!
//! This is a desk-scale oracle, independent of the classification table.
//! Matrices are floating point; two matrices are identified when their
//! entries land in the same cells of a `1e-8` grid. The enumeration is run a
//! second time on a shifted grid, and the two counts must agree.
//!
//! The shift is not a simple fraction of a cell. Half a cell puts exact
//! entries such as 0 and 1 on cell boundaries, and a quarter cell does the
//! same to some entries of H4, which lie in `Z[(1 + sqrt 5)/2]` and whose
//! decimal expansions have structured fractional parts.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::f64::consts::PI;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::classify;
use crate::coxeter::{CoxeterSpec, Label, VertexSubset};
use crate::error::{Error, Result};

/// Grid cell for identifying matrices.
pub const GRID: f64 = 1e-8;
/// Tolerance for the construction-time relation checks.
pub const RELATION_TOLERANCE: f64 = 1e-6;
pub const MAX_RANK: usize = 8;
/// Offset of the verification grid, in cells. Chosen so that entries of
/// every finite group of rank at most 4 (and I2(m), m <= 12, and E6) stay
/// at least 0.03 cells from a boundary on both grids.
pub const SHIFT: f64 = 0.4142;
pub const MAX_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EnumerationResult {
    Order(usize),
    ExceedsCap,
}

type Matrix = Vec<f64>;

fn mul(a: &[f64], b: &[f64], k: usize) -> Matrix {
    let mut c = vec![0.0; k * k];
    for i in 0..k {
        for l in 0..k {
            let x = a[i * k + l];
            if x != 0.0 {
                for j in 0..k {
                    c[i * k + j] += x * b[l * k + j];
                }
            }
        }
    }
    c
}

fn identity(k: usize) -> Matrix {
    let mut m = vec![0.0; k * k];
    for i in 0..k {
        m[i * k + i] = 1.0;
    }
    m
}

fn close_to_identity(m: &[f64], k: usize) -> bool {
    let id = identity(k);
    m.iter().zip(&id).all(|(a, b)| (a - b).abs() <= RELATION_TOLERANCE)
}

/// Generators of `W_T` acting on `R^|T|`.
#[derive(Debug, Clone)]
pub struct ReflectionMatrixGroup {
    rank: usize,
    generators: Vec<Matrix>,
}

impl ReflectionMatrixGroup {
    /// Builds the representation and checks `s^2 = 1` and `(st)^m = 1`.
    /// All labels within `t` must be finite.
    pub fn new(spec: &CoxeterSpec, t: &VertexSubset) -> Result<Self> {
        spec.check_subset(t)?;
        let idx = t.indices();
        let k = idx.len();
        let mut generators = Vec::with_capacity(k);
        for s in 0..k {
            // Row-vector convention: row t of the matrix is the image of e_t.
            let mut g = identity(k);
            g[s * k + s] = -1.0;
            for u in 0..k {
                if u == s {
                    continue;
                }
                let m = match spec.label(idx[s], idx[u]) {
                    Label::Finite(m) => m,
                    Label::Infinity => {
                        return Err(Error::BadRepresentation(
                            spec.name(idx[s]).into(),
                            spec.name(idx[u]).into(),
                        ))
                    }
                };
                g[u * k + s] = 2.0 * (PI / f64::from(m)).cos();
            }
            generators.push(g);
        }
        let group = ReflectionMatrixGroup { rank: k, generators };
        group.check_relations(spec, idx)?;
        Ok(group)
    }

    fn check_relations(&self, spec: &CoxeterSpec, idx: &[usize]) -> Result<()> {
        let k = self.rank;
        let bad = |a: usize, b: usize| Error::BadRepresentation(spec.name(idx[a]).into(), spec.name(idx[b]).into());
        for s in 0..k {
            let g = &self.generators[s];
            if !close_to_identity(&mul(g, g, k), k) {
                return Err(bad(s, s));
            }
            for u in s + 1..k {
                let m = spec.label(idx[s], idx[u]).finite().expect("finite");
                let st = mul(g, &self.generators[u], k);
                let mut p = identity(k);
                for i in 1..=m {
                    p = mul(&p, &st, k);
                    // The order must be exactly m, not a proper divisor.
                    if close_to_identity(&p, k) != (i == m) {
                        return Err(bad(s, u));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[Vec<f64>] {
        &self.generators
    }

    /// Entries rounded to the grid, shifted by `offset` cells, hashed to a
    /// 128-bit fingerprint so the element store stays small.
    fn key(m: &[f64], offset: f64) -> u128 {
        let cells: Vec<i64> = m.iter().map(|x| (x / GRID + offset).round() as i64).collect();
        let mut h1 = DefaultHasher::new();
        (0u8, &cells).hash(&mut h1);
        let mut h2 = DefaultHasher::new();
        (1u8, &cells).hash(&mut h2);
        (u128::from(h1.finish()) << 64) | u128::from(h2.finish())
    }

    /// Breadth-first closure from the identity. Each frontier is multiplied
    /// out in parallel; insertion into the store is sequential and in
    /// frontier order, so the count does not depend on scheduling.
    fn closure(&self, cap: usize, offset: f64) -> EnumerationResult {
        let k = self.rank;
        let id = identity(k);
        let mut seen: HashSet<u128> = HashSet::from([Self::key(&id, offset)]);
        let mut frontier = vec![id];
        while !frontier.is_empty() {
            let products: Vec<(u128, Matrix)> = frontier
                .par_iter()
                .flat_map_iter(|m| {
                    self.generators.iter().map(move |g| {
                        let p = mul(m, g, k);
                        (Self::key(&p, offset), p)
                    })
                })
                .collect();
            let mut next = Vec::new();
            for (key, p) in products {
                if seen.insert(key) {
                    if seen.len() > cap {
                        return EnumerationResult::ExceedsCap;
                    }
                    next.push(p);
                }
            }
            frontier = next;
        }
        EnumerationResult::Order(seen.len())
    }
}

/// Order of `W_T` by enumeration, or [`EnumerationResult::ExceedsCap`].
///
/// An infinity label inside `t` answers `ExceedsCap` at once: that pair
/// already generates an infinite dihedral group.
pub fn enumerate_order(spec: &CoxeterSpec, t: &VertexSubset, cap: usize) -> Result<EnumerationResult> {
    spec.check_subset(t)?;
    if t.len() > MAX_RANK {
        return Err(Error::SubsetTooLarge {
            size: t.len(),
            bound: MAX_RANK,
        });
    }
    if cap == 0 || cap > MAX_CAP {
        return Err(Error::CapExceeded(cap));
    }
    let idx = t.indices();
    let has_infinity = idx
        .iter()
        .enumerate()
        .any(|(a, &i)| idx[a + 1..].iter().any(|&j| !spec.label(i, j).is_finite()));
    if has_infinity {
        return Ok(EnumerationResult::ExceedsCap);
    }
    let group = ReflectionMatrixGroup::new(spec, t)?;
    let first = group.closure(cap, 0.0);
    let EnumerationResult::Order(n) = first else {
        return Ok(first);
    };
    match group.closure(cap, SHIFT) {
        EnumerationResult::Order(m) if m == n => Ok(first),
        EnumerationResult::Order(m) => Err(Error::NumericCollision { first: n, second: m }),
        EnumerationResult::ExceedsCap => Err(Error::NumericCollision {
            first: n,
            second: cap + 1,
        }),
    }
}

/// Compares the classification table with enumeration. Spherical subsets
/// are enumerated with cap `2 * order`; others with `cap`.
pub fn verify_classification_with_cap(spec: &CoxeterSpec, t: &VertexSubset, cap: usize) -> Result<bool> {
    let verdict = classify(spec, t);
    if verdict.spherical {
        let claimed = verdict.order.to_usize().filter(|&n| n <= MAX_CAP).ok_or(Error::CapExceeded(MAX_CAP))?;
        let cap = (2 * claimed).min(MAX_CAP);
        Ok(enumerate_order(spec, t, cap)? == EnumerationResult::Order(claimed))
    } else {
        Ok(enumerate_order(spec, t, cap)? == EnumerationResult::ExceedsCap)
    }
}

/// [`verify_classification_with_cap`] at the maximum cap.
pub fn verify_classification(spec: &CoxeterSpec, t: &VertexSubset) -> Result<bool> {
    verify_classification_with_cap(spec, t, MAX_CAP)
}

/// Order as a `BigUint`, for comparison with the classification table.
pub fn order_as_biguint(r: EnumerationResult) -> Option<BigUint> {
    match r {
        EnumerationResult::Order(n) => Some(BigUint::from(n)),
        EnumerationResult::ExceedsCap => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn path(labels: &[u32]) -> CoxeterSpec {
        path_diagram(labels)
    }

    fn order(spec: &CoxeterSpec, cap: usize) -> EnumerationResult {
        enumerate_order(spec, &spec.all(), cap).unwrap()
    }

    #[test]
    fn small_groups() {
        assert_eq!(order(&path(&[3]), 100), EnumerationResult::Order(6));
        assert_eq!(order(&path(&[3, 4]), 1000), EnumerationResult::Order(48));
        assert_eq!(order(&path(&[3, 5]), 1000), EnumerationResult::Order(120));
        assert_eq!(order(&path(&[3, 4, 3]), 10_000), EnumerationResult::Order(1152));
        assert_eq!(order(&complete(3, 2), 100), EnumerationResult::Order(8));
    }

    #[test]
    fn euclidean_triangle_does_not_close() {
        assert_eq!(order(&complete(3, 3), 20_000), EnumerationResult::ExceedsCap);
    }

    #[test]
    fn infinity_short_circuits() {
        let spec = CoxeterSpec::new(&["a", "b"], &[]).unwrap();
        assert_eq!(order(&spec, 10), EnumerationResult::ExceedsCap);
    }

    #[test]
    fn cap_is_respected() {
        assert_eq!(order(&path(&[3, 4]), 47), EnumerationResult::ExceedsCap);
        assert_eq!(order(&path(&[3, 4]), 48), EnumerationResult::Order(48));
        assert!(enumerate_order(&path(&[3]), &path(&[3]).all(), MAX_CAP + 1).is_err());
    }

    #[test]
    fn relations_hold() {
        let spec = path(&[3, 5]);
        let g = ReflectionMatrixGroup::new(&spec, &spec.all()).unwrap();
        assert_eq!(g.rank(), 3);
        assert_eq!(g.generators().len(), 3);
    }

    #[test]
    fn k5_pairs_verify() {
        let spec = k5(3);
        for i in 0..5 {
            for j in i + 1..5 {
                let t = VertexSubset::from_indices([i, j]);
                assert_eq!(enumerate_order(&spec, &t, 100).unwrap(), EnumerationResult::Order(6));
                assert!(verify_classification(&spec, &t).unwrap());
            }
        }
    }

    #[test]
    fn verification_agrees_on_infinite_subsets() {
        assert!(verify_classification_with_cap(&complete(3, 3), &complete(3, 3).all(), 5_000).unwrap());
    }
}
