//! The nerve of a Coxeter system and the subcomplex calculus used by the
//! vanishing arguments: full subcomplexes, links, right-angled joins and
//! cones, and sphere recognition in dimensions 1 and 2.
//!
//! Simplices are stored per dimension in canonical order. Edge labels live in
//! the owning [`CoxeterSpec`]; no metric geometry is computed.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::classify;
use crate::coxeter::{CoxeterSpec, Label, SpecDocument, VertexSubset};
use crate::error::{Error, Result};

/// Default cap on the number of simplices [`build_nerve`] will enumerate.
pub const DEFAULT_SIMPLEX_CAP: usize = 1_000_000;

/// A finite abstract simplicial complex on spec vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Complex {
    vertices: VertexSubset,
    simplices: Vec<Vec<VertexSubset>>,
}

impl Complex {
    /// Builds a complex from a list of simplices, closing it downward.
    pub fn from_simplices<I: IntoIterator<Item = VertexSubset>>(simplices: I) -> Complex {
        let mut buckets: Vec<Vec<VertexSubset>> = Vec::new();
        let mut stack: Vec<VertexSubset> = simplices.into_iter().filter(|s| !s.is_empty()).collect();
        let mut seen = std::collections::HashSet::new();
        while let Some(s) = stack.pop() {
            if !seen.insert(s.clone()) {
                continue;
            }
            if s.len() > 1 {
                for v in s.iter() {
                    stack.push(s.without(v));
                }
            }
            let d = s.len() - 1;
            if buckets.len() <= d {
                buckets.resize(d + 1, Vec::new());
            }
            buckets[d].push(s);
        }
        Self::from_buckets(buckets)
    }

    fn from_buckets(mut buckets: Vec<Vec<VertexSubset>>) -> Complex {
        for b in &mut buckets {
            b.sort();
            b.dedup();
        }
        while buckets.last().is_some_and(|b| b.is_empty()) {
            buckets.pop();
        }
        let vertices = buckets
            .first()
            .map(|vs| vs.iter().filter_map(|s| s.max()).collect())
            .unwrap_or_default();
        Complex {
            vertices,
            simplices: buckets,
        }
    }

    pub fn vertices(&self) -> &VertexSubset {
        &self.vertices
    }

    /// Dimension, `-1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.simplices.len() as isize - 1
    }

    /// Simplices of dimension `d`, canonically ordered.
    pub fn simplices(&self, d: usize) -> &[VertexSubset] {
        self.simplices.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &VertexSubset> {
        self.simplices.iter().flatten()
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> &[VertexSubset] {
        self.simplices(1)
    }

    pub fn triangles(&self) -> &[VertexSubset] {
        self.simplices(2)
    }

    pub fn contains(&self, s: &VertexSubset) -> bool {
        if s.is_empty() {
            return false;
        }
        self.simplices(s.len() - 1).binary_search(s).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges()
            .iter()
            .filter(|e| e.contains(v))
            .flat_map(|e| e.iter().filter(move |&u| u != v))
            .collect()
    }

    /// Simplices whose vertices all lie in `a`.
    pub fn restrict(&self, a: &VertexSubset) -> Complex {
        Self::from_buckets(
            self.simplices
                .iter()
                .map(|b| b.iter().filter(|s| s.is_subset_of(a)).cloned().collect())
                .collect(),
        )
    }

    /// `{ T : T + v is a simplex, v not in T }`.
    pub fn link(&self, v: usize) -> Complex {
        Self::from_buckets(
            self.simplices
                .iter()
                .skip(1)
                .map(|b| b.iter().filter(|s| s.contains(v)).map(|s| s.without(v)).collect())
                .collect(),
        )
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Vertex sets of the connected components of the 1-skeleton.
    pub fn components(&self) -> Vec<VertexSubset> {
        let verts = self.vertices.indices();
        let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
        for e in self.edges() {
            let (a, b) = (e.indices()[0], e.indices()[1]);
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for &s in verts {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in adj.get(&u).into_iter().flatten() {
                    if seen.insert(w) {
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(VertexSubset::from_indices(comp));
        }
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, b)| if d % 2 == 0 { b.len() as i64 } else { -(b.len() as i64) })
            .sum()
    }

    /// Recognizes combinatorial circles and 2-spheres.
    pub fn recognize_sphere(&self) -> SphereKind {
        if !self.is_connected() {
            return SphereKind::Neither;
        }
        match self.dimension() {
            1 => {
                if self.vertices.iter().all(|v| self.neighbors(v).len() == 2) {
                    SphereKind::Circle
                } else {
                    SphereKind::Neither
                }
            }
            2 => {
                let mut per_edge: HashMap<VertexSubset, usize> = HashMap::new();
                for t in self.triangles() {
                    for v in t.iter() {
                        *per_edge.entry(t.without(v)).or_default() += 1;
                    }
                }
                let edges_ok = self.edges().iter().all(|e| per_edge.get(e) == Some(&2));
                let links_ok = self
                    .vertices
                    .iter()
                    .all(|v| self.link(v).recognize_sphere() == SphereKind::Circle);
                if edges_ok && links_ok && self.euler_characteristic() == 2 {
                    SphereKind::TwoSphere
                } else {
                    SphereKind::Neither
                }
            }
            _ => SphereKind::Neither,
        }
    }

    /// True for `S^0`: two vertices and nothing else.
    pub fn is_zero_sphere(&self) -> bool {
        self.dimension() == 0 && self.vertices.len() == 2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SphereKind {
    Circle,
    TwoSphere,
    Neither,
}

/// The nerve `L` of a Coxeter system: its simplices are the nonempty
/// spherical subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nerve {
    spec: CoxeterSpec,
    complex: Complex,
    orders: HashMap<VertexSubset, BigUint>,
}

impl Nerve {
    pub fn spec(&self) -> &CoxeterSpec {
        &self.spec
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn dimension(&self) -> isize {
        self.complex.dimension()
    }

    /// `|W_T|` for a simplex `T`; `None` if `T` is not a simplex.
    pub fn order(&self, t: &VertexSubset) -> Option<&BigUint> {
        self.orders.get(t)
    }

    /// True when the whole generating set is spherical, i.e. `W` is finite.
    pub fn group_is_finite(&self) -> bool {
        self.spec.is_empty() || self.complex.contains(&self.spec.all())
    }

    /// `|W|` when finite.
    pub fn group_order(&self) -> Option<BigUint> {
        if self.spec.is_empty() {
            Some(BigUint::from(1u32))
        } else {
            self.orders.get(&self.spec.all()).cloned()
        }
    }

    pub fn recognize_sphere(&self) -> SphereKind {
        self.complex.recognize_sphere()
    }

    pub fn to_document(&self) -> NerveDocument {
        NerveDocument {
            spec: self.spec.to_document(),
            dimension: self.dimension(),
            simplices: self
                .complex
                .simplices
                .iter()
                .map(|b| b.iter().map(|s| self.spec.subset_names(s)).collect())
                .collect(),
        }
    }
}

/// Serialized nerve: the spec plus simplices by dimension.
#[derive(Debug, Clone, Serialize)]
pub struct NerveDocument {
    pub spec: SpecDocument,
    pub dimension: isize,
    pub simplices: Vec<Vec<Vec<String>>>,
}

pub fn build_nerve(spec: &CoxeterSpec) -> Result<Nerve> {
    build_nerve_with_cap(spec, DEFAULT_SIMPLEX_CAP)
}

/// Enumerates spherical subsets by extending cliques of the finite-label
/// graph one vertex at a time.
///
/// A candidate is tested only when all of its facets are already simplices,
/// which is sound because sphericity is inherited by subsets.
pub fn build_nerve_with_cap(spec: &CoxeterSpec, cap: usize) -> Result<Nerve> {
    let n = spec.len();
    let mut orders = HashMap::new();
    let mut buckets: Vec<Vec<VertexSubset>> = Vec::new();
    if n == 0 {
        return Ok(Nerve {
            spec: spec.clone(),
            complex: Complex::default(),
            orders,
        });
    }
    let mut level: Vec<(VertexSubset, BigUint)> = (0..n)
        .map(|i| (VertexSubset::singleton(i), BigUint::from(2u32)))
        .collect();
    let mut count = level.len();
    if count > cap {
        return Err(Error::CapExceeded(cap));
    }
    while !level.is_empty() {
        let members: std::collections::HashSet<&VertexSubset> = level.iter().map(|(s, _)| s).collect();
        let mut next: Vec<(VertexSubset, BigUint)> = level
            .par_iter()
            .flat_map_iter(|(t, _)| {
                let start = t.max().map_or(0, |m| m + 1);
                let members = &members;
                (start..n).filter_map(move |v| {
                    if !t.iter().all(|u| spec.label(u, v).is_finite()) {
                        return None;
                    }
                    let cand = t.with(v);
                    if !t.iter().all(|u| members.contains(&cand.without(u))) {
                        return None;
                    }
                    let verdict = classify(spec, &cand);
                    verdict.spherical.then_some((cand, verdict.order))
                })
            })
            .collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        count += next.len();
        if count > cap {
            return Err(Error::CapExceeded(cap));
        }
        let mut bucket = Vec::with_capacity(level.len());
        for (s, o) in level {
            orders.insert(s.clone(), o);
            bucket.push(s);
        }
        buckets.push(bucket);
        level = next;
    }
    Ok(Nerve {
        spec: spec.clone(),
        complex: Complex::from_buckets(buckets),
        orders,
    })
}

/// Records how a vertex set sits inside an ambient nerve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubcomplexWitness {
    pub vertex_set: Vec<String>,
    #[serde(skip)]
    pub vertices: VertexSubset,
    pub full: bool,
    pub right_angled_complement: bool,
    /// Infinity-labeled pairs with an endpoint outside the set. These are not
    /// edges of the nerve, so they do not break the right-angled complement.
    pub infinite_pairs_leaving: usize,
}

/// The nerve of `W_A` together with a witness that it sits fully in `nerve`.
pub fn full_subcomplex(nerve: &Nerve, a: &VertexSubset) -> Result<(Nerve, SubcomplexWitness)> {
    let sub_spec = nerve.spec.induced_subspec(a)?;
    let idx = a.indices();
    let relabel = |s: &VertexSubset| -> VertexSubset {
        s.iter()
            .map(|i| idx.binary_search(&i).expect("restricted to a"))
            .collect()
    };
    let restricted = nerve.complex.restrict(a);
    let buckets = restricted
        .simplices
        .iter()
        .map(|b| b.iter().map(relabel).collect())
        .collect();
    let orders = restricted
        .all_simplices()
        .map(|s| (relabel(s), nerve.orders[s].clone()))
        .collect();
    let sub = Nerve {
        spec: sub_spec,
        complex: Complex::from_buckets(buckets),
        orders,
    };
    let witness = SubcomplexWitness {
        vertex_set: nerve.spec.subset_names(a),
        vertices: a.clone(),
        full: is_full(nerve, &restricted),
        right_angled_complement: has_right_angled_complement(nerve, a),
        infinite_pairs_leaving: infinite_pairs_leaving(&nerve.spec, a),
    };
    Ok((sub, witness))
}

/// True when every simplex of `nerve` spanned by vertices of `sub` is in `sub`.
pub fn is_full(nerve: &Nerve, sub: &Complex) -> bool {
    nerve
        .complex
        .all_simplices()
        .filter(|s| s.is_subset_of(&sub.vertices))
        .all(|s| sub.contains(s))
}

/// Every edge of the nerve not contained in `a` carries label 2.
pub fn has_right_angled_complement(nerve: &Nerve, a: &VertexSubset) -> bool {
    nerve.spec.finite_edges().into_iter().all(|(i, j, m)| m == 2 || (a.contains(i) && a.contains(j)))
}

fn infinite_pairs_leaving(spec: &CoxeterSpec, a: &VertexSubset) -> usize {
    let n = spec.len();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !(a.contains(i) && a.contains(j)) && spec.label(i, j) == Label::Infinity)
        .count()
}

/// Link of a vertex, with its fullness in the ambient nerve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Link {
    pub vertex: usize,
    pub complex: Complex,
    pub full_in_ambient: bool,
}

pub fn link(nerve: &Nerve, v: usize) -> Link {
    link_in(nerve, &nerve.spec.all(), v)
}

/// Link of `v` inside the full subcomplex spanned by `b`.
pub fn link_in(nerve: &Nerve, b: &VertexSubset, v: usize) -> Link {
    let complex = nerve.complex.restrict(b).link(v);
    Link {
        vertex: v,
        full_in_ambient: is_full(nerve, &complex),
        complex,
    }
}

fn fresh_name(base: &str, taken: &dyn Fn(&str) -> bool) -> String {
    let mut name = base.to_string();
    while taken(&name) {
        name.push('\'');
    }
    name
}

/// Right-angled join: every pair across the factors gets label 2.
///
/// Vertices of `b` whose names collide with `a` are renamed by appending `'`.
pub fn join2(a: &Nerve, b: &Nerve) -> Nerve {
    let mut names: Vec<String> = a.spec.document_order().map(str::to_string).collect();
    let mut b_names = Vec::with_capacity(b.spec.len());
    for i in 0..b.spec.len() {
        let name = fresh_name(b.spec.name(i), &|s| {
            a.spec.index_of(s).is_some() || b_names.iter().any(|x: &String| x == s)
        });
        b_names.push(name);
    }
    names.extend(b.spec.document_order().map(|n| b_names[b.spec.index_of(n).unwrap()].clone()));

    let mut edges: Vec<(String, String, u32)> = a
        .spec
        .finite_edges()
        .into_iter()
        .map(|(i, j, m)| (a.spec.name(i).to_string(), a.spec.name(j).to_string(), m))
        .collect();
    edges.extend(
        b.spec
            .finite_edges()
            .into_iter()
            .map(|(i, j, m)| (b_names[i].clone(), b_names[j].clone(), m)),
    );
    for i in 0..a.spec.len() {
        for bn in &b_names {
            edges.push((a.spec.name(i).to_string(), bn.clone(), 2));
        }
    }
    let spec = CoxeterSpec::from_finite_edges(names, &edges).expect("join of valid specs is valid");

    let map_a: Vec<usize> = (0..a.spec.len()).map(|i| spec.index_of(a.spec.name(i)).unwrap()).collect();
    let map_b: Vec<usize> = b_names.iter().map(|n| spec.index_of(n).unwrap()).collect();
    let one = BigUint::from(1u32);
    let empty = VertexSubset::empty();
    let side = |n: &Nerve| -> Vec<(VertexSubset, BigUint)> {
        std::iter::once((empty.clone(), one.clone()))
            .chain(n.complex.all_simplices().map(|s| (s.clone(), n.orders[s].clone())))
            .collect()
    };
    let (sa, sb) = (side(a), side(b));
    let mut orders = HashMap::new();
    let mut buckets: Vec<Vec<VertexSubset>> = Vec::new();
    for (s1, o1) in &sa {
        for (s2, o2) in &sb {
            if s1.is_empty() && s2.is_empty() {
                continue;
            }
            let s: VertexSubset = s1.iter().map(|i| map_a[i]).chain(s2.iter().map(|j| map_b[j])).collect();
            let d = s.len() - 1;
            if buckets.len() <= d {
                buckets.resize(d + 1, Vec::new());
            }
            buckets[d].push(s.clone());
            orders.insert(s, o1 * o2);
        }
    }
    Nerve {
        spec,
        complex: Complex::from_buckets(buckets),
        orders,
    }
}

/// Right-angled cone: join with one fresh vertex named `P` (primed on
/// collision).
pub fn cone2(n: &Nerve) -> Nerve {
    let apex = fresh_name("P", &|s| n.spec.index_of(s).is_some());
    let point = CoxeterSpec::new(&[apex], &[]).expect("single vertex");
    join2(n, &build_nerve(&point).expect("single vertex"))
}

/// Finest right-angled join decomposition.
///
/// Factors are the components of the graph joining pairs whose label is not
/// 2 (infinity included). Returns `None` unless there are at least two.
pub fn detect_join2(nerve: &Nerve) -> Option<Vec<VertexSubset>> {
    let spec = &nerve.spec;
    if spec.len() < 2 {
        return None;
    }
    let n = spec.len();
    let mut seen = vec![false; n];
    let mut factors = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for (w, flag) in seen.iter_mut().enumerate() {
                if !*flag && w != u && spec.label(u, w) != Label::Finite(2) {
                    *flag = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        factors.push(VertexSubset::from_indices(comp));
    }
    (factors.len() >= 2).then_some(factors)
}

/// Checks that `groups` partition the vertices and that all cross pairs are
/// labeled 2.
pub fn is_join_grouping(nerve: &Nerve, groups: &[VertexSubset]) -> bool {
    let spec = &nerve.spec;
    let mut owner = vec![usize::MAX; spec.len()];
    for (g, group) in groups.iter().enumerate() {
        for v in group.iter() {
            if v >= spec.len() || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = g;
        }
    }
    if groups.len() < 2 || owner.contains(&usize::MAX) || groups.iter().any(VertexSubset::is_empty) {
        return false;
    }
    (0..spec.len()).all(|i| {
        (i + 1..spec.len()).all(|j| owner[i] == owner[j] || spec.label(i, j) == Label::Finite(2))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Label::Finite;
    use crate::fixtures::*;

    #[test]
    fn k5_nerve() {
        let n = build_nerve(&k5(3)).unwrap();
        assert_eq!(n.complex().simplices(0).len(), 5);
        assert_eq!(n.complex().edges().len(), 10);
        assert_eq!(n.dimension(), 1);
        assert!(!n.group_is_finite());
    }

    #[test]
    fn k33_nerve() {
        let n = build_nerve(&k33()).unwrap();
        assert_eq!(n.complex().simplices(0).len(), 6);
        assert_eq!(n.complex().edges().len(), 9);
        assert_eq!(n.dimension(), 1);
    }

    #[test]
    fn octahedron_nerve() {
        let n = build_nerve(&octahedron()).unwrap();
        assert_eq!(n.complex().simplices(0).len(), 6);
        assert_eq!(n.complex().edges().len(), 12);
        assert_eq!(n.complex().triangles().len(), 8);
        assert_eq!(n.dimension(), 2);
        for t in n.complex().triangles() {
            assert_eq!(n.order(t), Some(&BigUint::from(8u32)));
        }
    }

    #[test]
    fn cap_aborts() {
        assert_eq!(build_nerve_with_cap(&octahedron(), 10), Err(Error::CapExceeded(10)));
    }

    #[test]
    fn empty_spec_nerve() {
        let n = build_nerve(&CoxeterSpec::empty()).unwrap();
        assert_eq!(n.dimension(), -1);
        assert!(n.group_is_finite());
        assert_eq!(n.group_order(), Some(BigUint::from(1u32)));
    }

    #[test]
    fn sphere_recognition() {
        assert_eq!(build_nerve(&cycle(6)).unwrap().recognize_sphere(), SphereKind::Circle);
        assert_eq!(build_nerve(&octahedron()).unwrap().recognize_sphere(), SphereKind::TwoSphere);
        assert_eq!(build_nerve(&icosahedron()).unwrap().recognize_sphere(), SphereKind::TwoSphere);
        assert_eq!(build_nerve(&k5(3)).unwrap().recognize_sphere(), SphereKind::Neither);
        assert_eq!(build_nerve(&points(3)).unwrap().recognize_sphere(), SphereKind::Neither);
        assert!(build_nerve(&points(2)).unwrap().complex().is_zero_sphere());
    }

    #[test]
    fn octahedron_links_are_squares() {
        let n = build_nerve(&octahedron()).unwrap();
        for v in 0..6 {
            let l = link(&n, v);
            assert_eq!(l.complex.vertices().len(), 4);
            assert_eq!(l.complex.edges().len(), 4);
            assert_eq!(l.complex.recognize_sphere(), SphereKind::Circle);
        }
    }

    #[test]
    fn k5_links_are_points() {
        let n = build_nerve(&k5(3)).unwrap();
        let l = link(&n, 0);
        assert_eq!(l.complex.dimension(), 0);
        assert_eq!(l.complex.vertices().len(), 4);
    }

    #[test]
    fn cone_point_link_is_base() {
        let base = build_nerve(&cycle(4)).unwrap();
        let c = cone2(&base);
        let apex = c.spec().index_of("P").unwrap();
        let l = link(&c, apex);
        let rest = c.spec().all().without(apex);
        assert_eq!(l.complex, c.complex().restrict(&rest));
        assert!(l.full_in_ambient);
    }

    #[test]
    fn join_of_three_points_is_k33() {
        let p3 = build_nerve(&points(3)).unwrap();
        let j = join2(&p3, &p3);
        assert_eq!(j.spec().names(), &["p0", "p0'", "p1", "p1'", "p2", "p2'"]);
        let direct = build_nerve(j.spec()).unwrap();
        assert_eq!(j, direct);
        assert_eq!(j.complex().edges().len(), 9);
    }

    #[test]
    fn join_with_empty_is_identity() {
        let e = build_nerve(&CoxeterSpec::empty()).unwrap();
        let h = build_nerve(&cycle(6)).unwrap();
        assert_eq!(join2(&e, &h), h);
        assert_eq!(join2(&h, &e), h);
    }

    #[test]
    fn cone_of_square_is_pyramid() {
        let c = cone2(&build_nerve(&cycle(4)).unwrap());
        assert_eq!(c.complex().simplices(0).len(), 5);
        assert_eq!(c.complex().edges().len(), 8);
        assert_eq!(c.complex().triangles().len(), 4);
        let factors = detect_join2(&c).unwrap();
        // apex, then the square splits as S0 * S0
        assert_eq!(factors.len(), 3);
        assert!(factors.contains(&VertexSubset::singleton(c.spec().index_of("P").unwrap())));
    }

    #[test]
    fn detect_join_examples() {
        let k = build_nerve(&k33()).unwrap();
        let f = detect_join2(&k).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].len(), 3);
        assert!(detect_join2(&build_nerve(&k5(3)).unwrap()).is_none());
        assert!(detect_join2(&build_nerve(&points(1)).unwrap()).is_none());
        assert!(is_join_grouping(&k, &f));
        assert!(!is_join_grouping(&k, &[k.spec().all()]));
    }

    #[test]
    fn full_subcomplex_examples() {
        let k = build_nerve(&k33()).unwrap();
        let side = k.spec().subset(&["a1", "a2", "a3"]).unwrap();
        let (sub, w) = full_subcomplex(&k, &side).unwrap();
        assert_eq!(sub.complex().simplices(0).len(), 3);
        assert_eq!(sub.dimension(), 0);
        assert!(w.full);
        assert!(w.right_angled_complement);

        let (same, w) = full_subcomplex(&k, &k.spec().all()).unwrap();
        assert_eq!(same, k);
        assert!(w.full && w.right_angled_complement);
    }

    #[test]
    fn right_angled_complement_detects_odd_edge() {
        let spec = CoxeterSpec::new(
            &["a", "b", "c"],
            &[("a", "b", Finite(3)), ("b", "c", Finite(3)), ("a", "c", Finite(2))],
        )
        .unwrap();
        let n = build_nerve(&spec).unwrap();
        let a = spec.subset(&["a", "b"]).unwrap();
        assert!(!has_right_angled_complement(&n, &a));
        assert!(has_right_angled_complement(&n, &spec.all()));
    }

    #[test]
    fn restrict_is_not_full_for_external_sets() {
        let n = build_nerve(&octahedron()).unwrap();
        // The boundary of one triangle, missing its 2-simplex.
        let t = n.complex().triangles()[0].clone();
        let hollow = Complex::from_simplices(t.iter().map(|v| t.without(v)));
        assert!(!is_full(&n, &hollow));
        assert!(is_full(&n, &n.complex().restrict(&t)));
    }
}
