//! Coxeter matrices, their document format, and induced sub-systems.
//!
//! Vertices are opaque strings. Internally a spec keeps them sorted
//! lexicographically, so a vertex index doubles as its canonical rank; the
//! order in which the document listed them is kept separately and used only
//! for serialization.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

/// Off-diagonal entry of a Coxeter matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

/// A set of vertices of some spec, as sorted indices.
///
/// Because spec indices follow lexicographic order of the names, the sorted
/// index list is also the canonical name order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSubset(Vec<usize>);

impl VertexSubset {
    pub fn empty() -> Self {
        VertexSubset(Vec::new())
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut v: Vec<usize> = it.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSubset(v)
    }

    pub fn singleton(i: usize) -> Self {
        VertexSubset(vec![i])
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &VertexSubset) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn with(&self, i: usize) -> VertexSubset {
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&i) {
            v.insert(pos, i);
        }
        VertexSubset(v)
    }

    pub fn without(&self, i: usize) -> VertexSubset {
        VertexSubset(self.0.iter().copied().filter(|&j| j != i).collect())
    }

    pub fn union(&self, other: &VertexSubset) -> VertexSubset {
        VertexSubset::from_indices(self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &VertexSubset) -> VertexSubset {
        VertexSubset(self.iter().filter(|&i| !other.contains(i)).collect())
    }

    pub fn intersection(&self, other: &VertexSubset) -> VertexSubset {
        VertexSubset(self.iter().filter(|&i| other.contains(i)).collect())
    }
}

impl FromIterator<usize> for VertexSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSubset::from_indices(iter)
    }
}

/// A Coxeter system given by its vertex set and symmetric label map.
///
/// Pairs without a stored label carry [`Label::Infinity`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterSpec {
    names: Vec<String>,
    doc_order: Vec<usize>,
    labels: Vec<Option<u32>>,
}

impl CoxeterSpec {
    /// The trivial Coxeter system with no generators.
    pub fn empty() -> Self {
        CoxeterSpec {
            names: Vec::new(),
            doc_order: Vec::new(),
            labels: Vec::new(),
        }
    }

    /// Builds a spec from vertex names and finite-labeled edges.
    ///
    /// Applies the same validation as [`parse_spec`].
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(&str, &str, Label)]) -> Result<Self> {
        let mut b = SpecBuilder::new(vertices.iter().map(|s| s.as_ref().to_string()))?;
        for &(u, v, m) in edges {
            b.add_edge(u, v, m)?;
        }
        Ok(b.finish())
    }

    /// Like [`CoxeterSpec::new`] with owned names and finite labels only.
    pub fn from_finite_edges(vertices: Vec<String>, edges: &[(String, String, u32)]) -> Result<Self> {
        let mut b = SpecBuilder::new(vertices)?;
        for (u, v, m) in edges {
            b.add_edge(u, v, Label::Finite(*m))?;
        }
        Ok(b.finish())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Vertex names in canonical (lexicographic) order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// Vertex names in the order the document listed them.
    pub fn document_order(&self) -> impl Iterator<Item = &str> + '_ {
        self.doc_order.iter().map(|&i| self.names[i].as_str())
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(name))
            .ok()
    }

    /// Label of the pair `{i, j}`; `i != j`.
    pub fn label(&self, i: usize, j: usize) -> Label {
        debug_assert_ne!(i, j);
        match self.labels[i * self.len() + j] {
            Some(m) => Label::Finite(m),
            None => Label::Infinity,
        }
    }

    pub fn label_by_name(&self, u: &str, v: &str) -> Option<Label> {
        let i = self.index_of(u)?;
        let j = self.index_of(v)?;
        (i != j).then(|| self.label(i, j))
    }

    /// Same vertex names and labels, ignoring document order.
    pub fn same_matrix(&self, other: &CoxeterSpec) -> bool {
        self.names == other.names && self.labels == other.labels
    }

    pub fn all(&self) -> VertexSubset {
        VertexSubset::from_indices(0..self.len())
    }

    /// Finite-labeled pairs `(i, j, m)` with `i < j`.
    pub fn finite_edges(&self) -> Vec<(usize, usize, u32)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if let Some(m) = self.labels[i * n + j] {
                    out.push((i, j, m));
                }
            }
        }
        out
    }

    /// True when some pair carries the label infinity.
    pub fn has_infinite_pairs(&self) -> bool {
        let n = self.len();
        (0..n).any(|i| (i + 1..n).any(|j| self.labels[i * n + j].is_none()))
    }

    /// Resolves vertex names into a subset.
    pub fn subset<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSubset> {
        names
            .iter()
            .map(|s| {
                self.index_of(s.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(s.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(VertexSubset::from_indices)
    }

    pub fn subset_names(&self, t: &VertexSubset) -> Vec<String> {
        t.iter().map(|i| self.names[i].clone()).collect()
    }

    /// `{a, b, c}` rendering of a subset.
    pub fn format_subset(&self, t: &VertexSubset) -> String {
        format!("{{{}}}", self.subset_names(t).join(", "))
    }

    pub(crate) fn check_subset(&self, t: &VertexSubset) -> Result<()> {
        match t.iter().find(|&i| i >= self.len()) {
            Some(i) => Err(Error::UnknownVertex(format!("#{i}"))),
            None => Ok(()),
        }
    }

    /// Restricts the system to the vertices of `a`, keeping their labels.
    pub fn induced_subspec(&self, a: &VertexSubset) -> Result<CoxeterSpec> {
        self.check_subset(a)?;
        let idx = a.indices();
        let n = self.len();
        let k = idx.len();
        let mut labels = vec![None; k * k];
        for (p, &i) in idx.iter().enumerate() {
            for (q, &j) in idx.iter().enumerate() {
                if p != q {
                    labels[p * k + q] = self.labels[i * n + j];
                }
            }
        }
        let doc_order = self
            .doc_order
            .iter()
            .filter_map(|&i| idx.binary_search(&i).ok())
            .collect();
        Ok(CoxeterSpec {
            names: idx.iter().map(|&i| self.names[i].clone()).collect(),
            doc_order,
            labels,
        })
    }

    /// Maps a subset of `sub`'s vertices (where `sub` was induced from `self`)
    /// back to indices of `self`.
    pub fn lift_subset(&self, sub: &CoxeterSpec, t: &VertexSubset) -> Result<VertexSubset> {
        t.iter()
            .map(|i| {
                self.index_of(sub.name(i))
                    .ok_or_else(|| Error::UnknownVertex(sub.name(i).to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(VertexSubset::from_indices)
    }

    pub fn to_document(&self) -> SpecDocument {
        let edges = self
            .finite_edges()
            .into_iter()
            .map(|(i, j, m)| EdgeRecord {
                u: self.names[i].clone(),
                v: self.names[j].clone(),
                m: Value::from(m),
            })
            .collect();
        SpecDocument {
            vertices: self.document_order().map(str::to_string).collect(),
            edges,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("spec documents always serialize")
    }
}

/// One `{u, v, m}` record of the input document.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub u: String,
    pub v: String,
    pub m: Value,
}

/// Serialized form of a [`CoxeterSpec`].
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq, Default)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeRecord>,
}

impl SpecDocument {
    pub fn into_spec(self) -> Result<CoxeterSpec> {
        let mut b = SpecBuilder::new(self.vertices)?;
        for e in &self.edges {
            let m = parse_label(&e.m)?;
            b.add_edge(&e.u, &e.v, m)?;
        }
        Ok(b.finish())
    }
}

fn parse_label(v: &Value) -> Result<Label> {
    match v {
        Value::String(s) if s == "inf" => Ok(Label::Infinity),
        Value::Number(n) => {
            if let Some(m) = n.as_u64() {
                if m < 2 {
                    Err(Error::LabelOutOfRange(m as i64))
                } else {
                    u32::try_from(m)
                        .map(Label::Finite)
                        .map_err(|_| Error::InvalidLabel(n.to_string()))
                }
            } else if let Some(m) = n.as_i64() {
                Err(Error::LabelOutOfRange(m))
            } else {
                Err(Error::InvalidLabel(n.to_string()))
            }
        }
        other => Err(Error::InvalidLabel(other.to_string())),
    }
}

/// Parses the JSON document form of a Coxeter spec.
pub fn parse_spec(document: &str) -> Result<CoxeterSpec> {
    let doc: SpecDocument =
        serde_json::from_str(document).map_err(|e| Error::Malformed(e.to_string()))?;
    doc.into_spec()
}

struct SpecBuilder {
    names: Vec<String>,
    doc_order: Vec<usize>,
    edges: BTreeMap<(usize, usize), Label>,
}

impl SpecBuilder {
    fn new<I: IntoIterator<Item = String>>(vertices: I) -> Result<Self> {
        let given: Vec<String> = vertices.into_iter().collect();
        let mut names = given.clone();
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].clone()));
        }
        let doc_order = given
            .iter()
            .map(|g| names.binary_search(g).expect("present"))
            .collect();
        Ok(SpecBuilder {
            names,
            doc_order,
            edges: BTreeMap::new(),
        })
    }

    fn index(&self, name: &str) -> Result<usize> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(name))
            .map_err(|_| Error::UnknownVertex(name.to_string()))
    }

    fn add_edge(&mut self, u: &str, v: &str, m: Label) -> Result<()> {
        if let Label::Finite(k) = m {
            if k < 2 {
                return Err(Error::LabelOutOfRange(k as i64));
            }
        }
        let i = self.index(u)?;
        let j = self.index(v)?;
        if i == j {
            return Err(Error::SelfLoop(u.to_string()));
        }
        let key = (i.min(j), i.max(j));
        match self.edges.get(&key) {
            Some(&old) if old != m => {
                Err(Error::ConflictingEdge(self.names[key.0].clone(), self.names[key.1].clone()))
            }
            _ => {
                self.edges.insert(key, m);
                Ok(())
            }
        }
    }

    fn finish(self) -> CoxeterSpec {
        let n = self.names.len();
        let mut labels = vec![None; n * n];
        for (&(i, j), &m) in &self.edges {
            if let Label::Finite(k) = m {
                labels[i * n + j] = Some(k);
                labels[j * n + i] = Some(k);
            }
        }
        CoxeterSpec {
            names: self.names,
            doc_order: self.doc_order,
            labels,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k5_doc() -> String {
        let vs = ["a", "b", "c", "d", "e"];
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                edges.push(format!(r#"{{"u":"{}","v":"{}","m":3}}"#, vs[i], vs[j]));
            }
        }
        format!(
            r#"{{"vertices":["a","b","c","d","e"],"edges":[{}]}}"#,
            edges.join(",")
        )
    }

    #[test]
    fn parses_k5() {
        let spec = parse_spec(&k5_doc()).unwrap();
        assert_eq!(spec.len(), 5);
        assert_eq!(spec.finite_edges().len(), 10);
        assert!(spec.finite_edges().iter().all(|&(_, _, m)| m == 3));
    }

    #[test]
    fn rejects_label_one() {
        let doc = r#"{"vertices":["s","t"],"edges":[{"u":"s","v":"t","m":1}]}"#;
        assert_eq!(parse_spec(doc), Err(Error::LabelOutOfRange(1)));
    }

    #[test]
    fn empty_document_is_trivial_group() {
        let spec = parse_spec(r#"{"vertices":[],"edges":[]}"#).unwrap();
        assert!(spec.is_empty());
        assert_eq!(spec, CoxeterSpec::empty());
    }

    #[test]
    fn error_paths() {
        let cases = [
            (r#"{"vertices":["a","a"]}"#, Error::DuplicateVertex("a".into())),
            (
                r#"{"vertices":["a","b"],"edges":[{"u":"a","v":"c","m":3}]}"#,
                Error::UnknownVertex("c".into()),
            ),
            (
                r#"{"vertices":["a","b"],"edges":[{"u":"a","v":"b","m":3},{"u":"b","v":"a","m":4}]}"#,
                Error::ConflictingEdge("a".into(), "b".into()),
            ),
            (
                r#"{"vertices":["a","b"],"edges":[{"u":"a","v":"b","m":"infinity"}]}"#,
                Error::InvalidLabel("\"infinity\"".into()),
            ),
            (
                r#"{"vertices":["a","b"],"edges":[{"u":"a","v":"b","m":2.5}]}"#,
                Error::InvalidLabel("2.5".into()),
            ),
            (
                r#"{"vertices":["a","b"],"edges":[{"u":"a","v":"b","m":-3}]}"#,
                Error::LabelOutOfRange(-3),
            ),
            (
                r#"{"vertices":["a"],"edges":[{"u":"a","v":"a","m":3}]}"#,
                Error::SelfLoop("a".into()),
            ),
        ];
        for (doc, err) in cases {
            assert_eq!(parse_spec(doc), Err(err), "{doc}");
        }
        assert!(matches!(parse_spec("{"), Err(Error::Malformed(_))));
    }

    #[test]
    fn repeated_edge_with_same_label_is_fine() {
        let doc = r#"{"vertices":["a","b"],"edges":[{"u":"a","v":"b","m":3},{"u":"b","v":"a","m":3}]}"#;
        let spec = parse_spec(doc).unwrap();
        assert_eq!(spec.label(0, 1), Label::Finite(3));
    }

    #[test]
    fn inf_is_omission() {
        let a = parse_spec(r#"{"vertices":["a","b"],"edges":[{"u":"a","v":"b","m":"inf"}]}"#).unwrap();
        let b = parse_spec(r#"{"vertices":["a","b"]}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.label(0, 1), Label::Infinity);
        assert_eq!(a.label(1, 0), Label::Infinity);
    }

    #[test]
    fn serialization_sorts_edges_and_keeps_vertex_order() {
        let doc = r#"{"vertices":["z","a","m"],"edges":[{"u":"z","v":"a","m":4},{"u":"m","v":"a","m":2}]}"#;
        let spec = parse_spec(doc).unwrap();
        let out = spec.to_document();
        assert_eq!(out.vertices, vec!["z", "a", "m"]);
        let pairs: Vec<_> = out.edges.iter().map(|e| (e.u.as_str(), e.v.as_str())).collect();
        assert_eq!(pairs, vec![("a", "m"), ("a", "z")]);
        assert_eq!(parse_spec(&spec.to_json()).unwrap(), spec);
    }

    #[test]
    fn induced_triangle_of_k5() {
        let spec = parse_spec(&k5_doc()).unwrap();
        let t = spec.subset(&["b", "d", "e"]).unwrap();
        let sub = spec.induced_subspec(&t).unwrap();
        assert_eq!(sub.names(), &["b", "d", "e"]);
        assert_eq!(sub.finite_edges().len(), 3);
        assert!(sub.finite_edges().iter().all(|&(_, _, m)| m == 3));
        assert_eq!(spec.induced_subspec(&spec.all()).unwrap(), spec);
    }

    #[test]
    fn induced_side_of_k33_is_three_points() {
        let mut edges = Vec::new();
        for a in ["a1", "a2", "a3"] {
            for b in ["b1", "b2", "b3"] {
                edges.push((a, b, Label::Finite(2)));
            }
        }
        let spec = CoxeterSpec::new(&["a1", "a2", "a3", "b1", "b2", "b3"], &edges).unwrap();
        let side = spec.subset(&["a1", "a2", "a3"]).unwrap();
        let p3 = spec.induced_subspec(&side).unwrap();
        assert_eq!(p3.len(), 3);
        assert!(p3.finite_edges().is_empty());
    }

    #[test]
    fn induced_rejects_foreign_vertex() {
        let spec = CoxeterSpec::new(&["a"], &[]).unwrap();
        assert!(spec.induced_subspec(&VertexSubset::singleton(3)).is_err());
    }
}
