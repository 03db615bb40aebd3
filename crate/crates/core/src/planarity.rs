//! Planar embeddings, face coning, and non-planarity certificates.
//!
//! Embeddings are purely combinatorial: a [`RotationSystem`] fixes a cyclic
//! order of neighbors at each vertex, faces are traced from it, and Euler's
//! formula decides whether the surface is a sphere.
//!
//! The certificate logic runs one way only. A positive lower bound on
//! `beta_2` contradicts the vanishing of `beta_2` for planar metric flag
//! complexes of dimension at most 2, so the graph is not planar; a silent
//! obstruction proves nothing.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::coxeter::{CoxeterSpec, SpecDocument, VertexSubset};
use crate::error::{Error, Result};
use crate::l2::{betti_lower_bound_dim2, chi_orb, BoundSource, LowerBound, Rule, RuleContext};
use crate::nerve::{
    build_nerve, detect_join2, full_subcomplex, has_right_angled_complement, link, link_in, Nerve,
    SphereKind, SubcomplexWitness,
};
use crate::rational::ExactRational;

/// Simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u != v && !adj[u].contains(&v) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { adj }
    }

    /// The 1-skeleton of a nerve, on the spec's vertex indices.
    pub fn from_nerve(nerve: &Nerve) -> Self {
        let edges: Vec<(usize, usize)> = nerve
            .complex()
            .edges()
            .iter()
            .map(|e| (e.indices()[0], e.indices()[1]))
            .collect();
        Graph::new(nerve.spec().len(), &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.adj.len())
            .flat_map(|u| self.adj[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Induced subgraph on `vertices`, relabeled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let pos: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter_map(|(u, v)| Some((*pos.get(&u)?, *pos.get(&v)?)))
            .collect();
        Graph::new(vertices.len(), &edges)
    }
}

/// Cyclic order of neighbors at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    order: Vec<Vec<usize>>,
}

/// Document form: vertex name to cyclic neighbor list.
pub type RotationDocument = BTreeMap<String, Vec<String>>;

impl RotationSystem {
    pub fn new(order: Vec<Vec<usize>>) -> Self {
        RotationSystem { order }
    }

    /// Neighbors in increasing order at every vertex.
    pub fn sorted(graph: &Graph) -> Self {
        RotationSystem {
            order: graph.adj.clone(),
        }
    }

    pub fn at(&self, v: usize) -> &[usize] {
        &self.order[v]
    }

    /// The neighbor following `u` around `v`.
    pub fn succ(&self, v: usize, u: usize) -> usize {
        let r = &self.order[v];
        let p = r.iter().position(|&x| x == u).expect("u is a neighbor of v");
        r[(p + 1) % r.len()]
    }

    pub fn from_document(spec: &CoxeterSpec, doc: &RotationDocument) -> Result<Self> {
        let mut order = vec![Vec::new(); spec.len()];
        for (v, nbrs) in doc {
            let i = spec.index_of(v).ok_or_else(|| Error::UnknownVertex(v.clone()))?;
            order[i] = nbrs
                .iter()
                .map(|u| spec.index_of(u).ok_or_else(|| Error::UnknownVertex(u.clone())))
                .collect::<Result<_>>()?;
        }
        Ok(RotationSystem { order })
    }

    pub fn parse(spec: &CoxeterSpec, json: &str) -> Result<Self> {
        let doc: RotationDocument = serde_json::from_str(json).map_err(|e| Error::Malformed(e.to_string()))?;
        Self::from_document(spec, &doc)
    }

    pub fn to_document(&self, spec: &CoxeterSpec) -> RotationDocument {
        self.order
            .iter()
            .enumerate()
            .map(|(v, r)| (spec.name(v).to_string(), r.iter().map(|&u| spec.name(u).to_string()).collect()))
            .collect()
    }

    /// Every vertex's rotation is a permutation of its neighbors.
    pub fn validate(&self, graph: &Graph) -> Result<()> {
        if self.order.len() != graph.vertex_count() {
            return Err(Error::InvalidRotation(format!(
                "{} rotations for {} vertices",
                self.order.len(),
                graph.vertex_count()
            )));
        }
        for (v, r) in self.order.iter().enumerate() {
            let mut sorted = r.clone();
            sorted.sort_unstable();
            if sorted != graph.adj[v] {
                return Err(Error::InvalidRotation(format!(
                    "rotation at vertex #{v} does not list exactly its neighbors"
                )));
            }
        }
        Ok(())
    }
}

/// Boundary walks of the faces of an embedding, as vertex sequences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceSet {
    pub faces: Vec<Vec<usize>>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Vertex sets of the faces bounded by three distinct vertices.
    pub fn triangles(&self) -> Vec<VertexSubset> {
        self.faces
            .iter()
            .filter(|f| f.len() == 3)
            .map(|f| VertexSubset::from_indices(f.iter().copied()))
            .filter(|s| s.len() == 3)
            .collect()
    }
}

/// Traces faces: from the dart `u -> v` continue with `v -> succ_v(u)`.
/// Isolated vertices contribute one face each.
fn trace_faces(graph: &Graph, rot: &RotationSystem) -> FaceSet {
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut faces = Vec::new();
    for a in 0..graph.vertex_count() {
        if graph.adj[a].is_empty() {
            faces.push(vec![a]);
            continue;
        }
        for &b in &graph.adj[a] {
            if seen.contains(&(a, b)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut u, mut v) = (a, b);
            while seen.insert((u, v)) {
                walk.push(u);
                let w = rot.succ(v, u);
                u = v;
                v = w;
            }
            faces.push(walk);
        }
    }
    FaceSet { faces }
}

/// Faces of a connected graph under `rot`, checked against `V - E + F = 2`.
pub fn faces_from_rotation(graph: &Graph, rot: &RotationSystem) -> Result<FaceSet> {
    rot.validate(graph)?;
    if graph.vertex_count() == 0 || !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let faces = trace_faces(graph, rot);
    let euler = graph.vertex_count() as i64 - graph.edge_count() as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(Error::NotSpherical(euler));
    }
    Ok(faces)
}

/// Checks that `rot` embeds the nerve's 1-skeleton in the sphere with every
/// 2-simplex bounding a face, i.e. that the complex itself is planar.
pub fn check_complex_embedding(nerve: &Nerve, rot: &RotationSystem) -> Result<FaceSet> {
    if nerve.dimension() > 2 {
        return Err(Error::DimensionTooHigh(nerve.dimension() as usize));
    }
    let faces = faces_from_rotation(&Graph::from_nerve(nerve), rot)?;
    let tri: HashSet<VertexSubset> = faces.triangles().into_iter().collect();
    if let Some(t) = nerve.complex().triangles().iter().find(|t| !tri.contains(*t)) {
        return Err(Error::HypothesisViolated(format!(
            "2-simplex {} is not a face of the embedding",
            nerve.spec().format_subset(t)
        )));
    }
    Ok(faces)
}

/// Result of coning off the faces of an embedded complex.
#[derive(Debug, Clone)]
pub struct ConeCompletion {
    /// The 2-sphere nerve containing the original complex.
    pub nerve: Nerve,
    /// Where the original complex sits inside it.
    pub witness: SubcomplexWitness,
    /// Names of the added cone vertices, one per coned face.
    pub cone_vertices: Vec<String>,
    /// Faces of the original embedding, in the order they were processed.
    pub faces: FaceSet,
}

/// Completes a planar metric flag complex to a 2-sphere by adding one vertex
/// per complementary region, joined to the region's boundary by edges
/// labeled 2 (and by infinity to everything else).
///
/// Triangular faces that are already 2-simplices are kept; every other face,
/// empty triangles included, gets a cone point. Face boundaries that are not
/// simple cycles are rejected rather than subdivided.
pub fn cone_construction(a: &Nerve, rot: &RotationSystem) -> Result<ConeCompletion> {
    let spec = a.spec();
    let faces = check_complex_embedding(a, rot)?;
    for f in &faces.faces {
        let distinct: HashSet<usize> = f.iter().copied().collect();
        if f.len() < 3 || distinct.len() != f.len() {
            let names: Vec<&str> = f.iter().map(|&v| spec.name(v)).collect();
            return Err(Error::NonSimpleFaceBoundary(names.join(" ")));
        }
    }

    let mut filled: HashSet<VertexSubset> = HashSet::new();
    let mut names: Vec<String> = spec.document_order().map(str::to_string).collect();
    let mut edges: Vec<(String, String, u32)> = spec
        .finite_edges()
        .into_iter()
        .map(|(i, j, m)| (spec.name(i).to_string(), spec.name(j).to_string(), m))
        .collect();
    let mut cone_vertices = Vec::new();
    for f in &faces.faces {
        let set = VertexSubset::from_indices(f.iter().copied());
        if f.len() == 3 && a.complex().contains(&set) && filled.insert(set) {
            continue;
        }
        let mut name = format!("c{}", cone_vertices.len());
        while spec.index_of(&name).is_some() || names.contains(&name) {
            name.push('\'');
        }
        for &v in f {
            edges.push((name.clone(), spec.name(v).to_string(), 2));
        }
        names.push(name.clone());
        cone_vertices.push(name);
    }

    let coned = CoxeterSpec::from_finite_edges(names, &edges)?;
    let nerve = build_nerve(&coned)?;
    if nerve.recognize_sphere() != SphereKind::TwoSphere {
        return Err(Error::HypothesisViolated(
            "coning the faces did not produce a 2-sphere".into(),
        ));
    }
    let a_in_l = coned.subset(spec.names())?;
    let (_, witness) = full_subcomplex(&nerve, &a_in_l)?;
    if !(witness.full && witness.right_angled_complement) {
        return Err(Error::HypothesisViolated(
            "original complex is not full with right-angled complement".into(),
        ));
    }
    Ok(ConeCompletion {
        nerve,
        witness,
        cone_vertices,
        faces,
    })
}

/// A link recorded in a proof trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkRecord {
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
}

/// One vertex removal `B = B' u C_2 B_v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub removed: String,
    pub b: Vec<String>,
    pub b_prime: Vec<String>,
    pub link: LinkRecord,
    pub link_full: bool,
    pub link_in_circle: bool,
    pub fullness: String,
    pub mayer_vietoris: String,
}

/// Inductive proof that `beta_i(A) = 0` for `i > 1` when `A` is full with
/// right-angled complement in a 2-sphere nerve `L`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofTrace {
    pub ambient: SpecDocument,
    pub target: Vec<String>,
    pub base: String,
    pub steps: Vec<TraceStep>,
    pub conclusion: String,
    pub notes: Vec<String>,
}

/// Removes the vertices of `L - A` one at a time in lexicographic order,
/// recording at each step the link `B_v`, its fullness in `L`, and the
/// Mayer-Vietoris step that carries vanishing from `B` to `B - v`.
pub fn trace_vanishing(l: &Nerve, a: &VertexSubset) -> Result<ProofTrace> {
    let spec = l.spec();
    spec.check_subset(a)?;
    if l.recognize_sphere() != SphereKind::TwoSphere {
        return Err(Error::HypothesisViolated("ambient nerve is not a 2-sphere".into()));
    }
    if !has_right_angled_complement(l, a) {
        return Err(Error::HypothesisViolated(format!(
            "{} does not have right-angled complement",
            spec.format_subset(a)
        )));
    }
    let names = |s: &VertexSubset| spec.subset_names(s);
    let mut b = spec.all();
    let mut steps = Vec::new();
    for v in spec.all().difference(a).iter() {
        let bv = link_in(l, &b, v);
        if !bv.full_in_ambient {
            return Err(Error::HypothesisViolated(format!(
                "link of {} in {} is not full",
                spec.name(v),
                spec.format_subset(&b)
            )));
        }
        let b_prime = b.without(v);
        if !has_right_angled_complement(l, &b_prime) {
            return Err(Error::HypothesisViolated(format!(
                "{} lost its right-angled complement",
                spec.format_subset(&b_prime)
            )));
        }
        let in_circle = link(l, v).complex.recognize_sphere() == SphereKind::Circle;
        let link_set = bv.complex.vertices().clone();
        let vn = spec.name(v);
        steps.push(TraceStep {
            removed: vn.to_string(),
            b: names(&b),
            b_prime: names(&b_prime),
            link: LinkRecord {
                vertices: names(&link_set),
                edges: bv.complex.edges().iter().map(&names).collect(),
            },
            link_full: true,
            link_in_circle: in_circle,
            fullness: format!(
                "{vn} is outside the target, so every edge at {vn} is labeled 2; a simplex of L spanned by \
                 vertices of the link extends by {vn} and so lies in the link: the link is full in L"
            ),
            mayer_vietoris: format!(
                "B = B' u C_2(B_{vn}) with B' n C_2(B_{vn}) = B_{vn}: \
                 h_i(B_{vn}) -> h_i(B') + h_i(C_2 B_{vn}) -> h_i(B) -> h_(i-1)(B_{vn}). \
                 B_{vn} is full in the circle L_{vn}, so h_i(B_{vn}) = 0 and h_i(C_2 B_{vn}) = 0 for i > 1; \
                 with h_i(B) = 0 for i > 1, exactness gives h_i(B') = 0 for i > 1"
            ),
        });
        b = b_prime;
    }
    let mut notes = Vec::new();
    let leaving = full_subcomplex(l, a)?.1.infinite_pairs_leaving;
    if leaving > 0 {
        notes.push(format!(
            "{leaving} infinity-labeled pair(s) have an endpoint outside the target; they are not edges \
             of L, so they do not violate the right-angled complement"
        ));
    }
    Ok(ProofTrace {
        ambient: spec.to_document(),
        target: names(a),
        base: "L is a metric flag 2-sphere, so h_i(L) = 0 for every i".into(),
        steps,
        conclusion: format!("beta_i({}) = 0 for i > 1", spec.format_subset(a)),
        notes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    NotPlanar,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum InconclusiveReason {
    DimensionTooHigh,
    FiniteGroup,
    ObstructionSilent,
    NerveTooLarge,
}

/// One deduction in a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Citation {
    pub statement: String,
    pub applied_to: String,
    pub values: BTreeMap<String, String>,
}

impl Citation {
    fn new(statement: &str, applied_to: &str, values: &[(&str, String)]) -> Self {
        Citation {
            statement: statement.to_string(),
            applied_to: applied_to.to_string(),
            values: values.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        }
    }
}

/// Statement ids used in certificate chains.
pub mod statement {
    pub const CHI_ORB: &str = "orbifold-euler-characteristic";
    pub const BETA0: &str = "infinite-group-beta0";
    pub const ATIYAH: &str = "atiyah-formula";
    pub const JOIN_DECOMPOSITION: &str = "right-angled-join-decomposition";
    pub const FACTOR_BETTI: &str = "factor-betti";
    pub const KUNNETH: &str = "right-angled-join-kunneth";
    pub const EXACT_BETA2: &str = "exact-beta2";
    pub const DISCONNECTED: &str = "disconnected-union";
    pub const PLANAR_VANISHING: &str = "planar-beta2-vanishing";
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub vertices: Vec<String>,
    pub verdict: Verdict,
    pub bound: ExactRational,
}

/// Machine-checkable record of a non-planarity deduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<InconclusiveReason>,
    pub subject: SpecDocument,
    #[serde(rename = "bound")]
    pub beta2_lower_bound: ExactRational,
    pub citations: Vec<Citation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<ComponentReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Certificate {
    fn inconclusive(spec: &CoxeterSpec, reason: InconclusiveReason, bound: ExactRational) -> Self {
        Certificate {
            verdict: Verdict::Inconclusive,
            reason: Some(reason),
            subject: spec.to_document(),
            beta2_lower_bound: bound,
            citations: Vec::new(),
            components: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates always serialize")
    }
}

/// Attempts to prove that the nerve of `spec` is not planar.
///
/// Never answers "planar": every failure mode is an inconclusive verdict.
pub fn certify_nonplanar(spec: &CoxeterSpec) -> Certificate {
    let nerve = match build_nerve(spec) {
        Ok(n) => n,
        Err(_) => {
            return Certificate::inconclusive(spec, InconclusiveReason::NerveTooLarge, ExactRational::zero())
        }
    };
    if nerve.dimension() > 2 {
        return Certificate::inconclusive(spec, InconclusiveReason::DimensionTooHigh, ExactRational::zero());
    }
    if nerve.group_is_finite() {
        return Certificate::inconclusive(spec, InconclusiveReason::FiniteGroup, ExactRational::zero());
    }
    let components = nerve.complex().components();
    if components.len() > 1 {
        return certify_disconnected(&nerve, &components);
    }
    certify_connected(&nerve)
}

fn certify_connected(nerve: &Nerve) -> Certificate {
    let spec = nerve.spec();
    let subject = spec.format_subset(&spec.all());
    let bound = match betti_lower_bound_dim2(nerve) {
        Ok(b) => b,
        Err(e) => {
            let mut c = Certificate::inconclusive(spec, InconclusiveReason::ObstructionSilent, ExactRational::zero());
            c.notes.push(format!("rule engine failed: {e}"));
            return c;
        }
    };
    if !bound.value.is_positive() {
        let mut c = Certificate::inconclusive(spec, InconclusiveReason::ObstructionSilent, bound.value.clone());
        c.notes.push(format!(
            "chi_orb = {} and no rule gives beta_2 > 0; the obstruction is one-directional",
            bound.chi_orb
        ));
        return c;
    }

    let mut citations = Vec::new();
    match bound.source {
        BoundSource::Exact(Rule::Join) => citations.extend(join_citations(nerve, &subject)),
        BoundSource::Exact(rule) => citations.push(Citation::new(
            statement::EXACT_BETA2,
            &subject,
            &[
                ("beta_2", bound.value.to_string()),
                ("rule", rule.id().to_string()),
            ],
        )),
        _ => {}
    }
    citations.push(chi_citation(nerve, &subject));
    citations.push(Citation::new(
        statement::BETA0,
        &subject,
        &[("beta_0", "0".into()), ("reason", "W is infinite".into())],
    ));
    citations.push(atiyah_citation(&bound, &subject));
    citations.push(Citation::new(
        statement::PLANAR_VANISHING,
        &subject,
        &[
            (
                "claim",
                "a planar metric flag complex of dimension <= 2 has beta_2 = 0".into(),
            ),
            ("contradiction", format!("beta_2 >= {} > 0", bound.value)),
            ("dimension", nerve.dimension().to_string()),
        ],
    ));
    Certificate {
        verdict: Verdict::NotPlanar,
        reason: None,
        subject: spec.to_document(),
        beta2_lower_bound: bound.value,
        citations,
        components: Vec::new(),
        notes: Vec::new(),
    }
}

fn chi_citation(nerve: &Nerve, subject: &str) -> Citation {
    let mut terms = vec!["1".to_string()];
    let mut counts = Vec::new();
    for d in 0..=nerve.dimension().max(-1) {
        let d = d as usize;
        let simplices = nerve.complex().simplices(d);
        counts.push(simplices.len().to_string());
        let s: ExactRational = simplices
            .iter()
            .map(|t| ExactRational::recip_of(nerve.order(t).expect("order")))
            .sum();
        terms.push(format!("{} {s}", if d.is_multiple_of(2) { "-" } else { "+" }));
    }
    Citation::new(
        statement::CHI_ORB,
        subject,
        &[
            ("chi_orb", chi_orb(nerve).to_string()),
            ("terms", terms.join(" ")),
            ("simplices_by_dimension", counts.join(", ")),
        ],
    )
}

fn atiyah_citation(bound: &LowerBound, subject: &str) -> Citation {
    Citation::new(
        statement::ATIYAH,
        subject,
        &[
            ("identity", "chi_orb = beta_0 - beta_1 + beta_2 - beta_3".into()),
            ("chi_orb", bound.chi_orb.to_string()),
            ("consequence", format!("beta_2 >= {}", bound.value)),
        ],
    )
}

fn join_citations(nerve: &Nerve, subject: &str) -> Vec<Citation> {
    let spec = nerve.spec();
    let factors = detect_join2(nerve).expect("join rule fired");
    let mut out = vec![Citation::new(
        statement::JOIN_DECOMPOSITION,
        subject,
        &[(
            "factors",
            factors.iter().map(|f| spec.format_subset(f)).collect::<Vec<_>>().join(" * "),
        )],
    )];
    for f in &factors {
        let (sub, _) = full_subcomplex(nerve, f).expect("factor is a subset");
        let b = crate::l2::betti(&sub, &RuleContext::default()).expect("factor betti");
        let rules: Vec<String> = b
            .provenance
            .iter()
            .map(|p| p.as_ref().map_or("?".to_string(), |p| p.rule.id().to_string()))
            .collect();
        out.push(Citation::new(
            statement::FACTOR_BETTI,
            &spec.format_subset(f),
            &[
                ("betti", b.to_string()),
                ("chi_orb", chi_orb(&sub).to_string()),
                ("rules", rules.join(", ")),
            ],
        ));
    }
    let b = crate::l2::betti(nerve, &RuleContext::default()).expect("betti");
    out.push(Citation::new(
        statement::KUNNETH,
        subject,
        &[("betti", b.to_string()), ("beta_2", b.get(2).unwrap_or_default().to_string())],
    ));
    out
}

fn certify_disconnected(nerve: &Nerve, components: &[VertexSubset]) -> Certificate {
    let spec = nerve.spec();
    let mut reports = Vec::new();
    let mut witness: Option<(VertexSubset, Certificate)> = None;
    for comp in components {
        let (sub, _) = full_subcomplex(nerve, comp).expect("component");
        let cert = if sub.group_is_finite() {
            Certificate::inconclusive(sub.spec(), InconclusiveReason::FiniteGroup, ExactRational::zero())
        } else {
            certify_connected(&sub)
        };
        reports.push(ComponentReport {
            vertices: spec.subset_names(comp),
            verdict: cert.verdict,
            bound: cert.beta2_lower_bound.clone(),
        });
        if witness.is_none() && cert.verdict == Verdict::NotPlanar {
            witness = Some((comp.clone(), cert));
        }
    }
    let note = "the complex is disconnected; bounds are reported per component, not combined".to_string();
    match witness {
        Some((comp, cert)) => {
            let mut citations = vec![Citation::new(
                statement::DISCONNECTED,
                &spec.format_subset(&spec.all()),
                &[
                    ("component", spec.format_subset(&comp)),
                    ("reason", "a graph is planar only if each component is planar".into()),
                ],
            )];
            citations.extend(cert.citations);
            Certificate {
                verdict: Verdict::NotPlanar,
                reason: None,
                subject: spec.to_document(),
                beta2_lower_bound: cert.beta2_lower_bound,
                citations,
                components: reports,
                notes: vec![note],
            }
        }
        None => {
            let mut c = Certificate::inconclusive(spec, InconclusiveReason::ObstructionSilent, ExactRational::zero());
            c.components = reports;
            c.notes.push(note);
            c
        }
    }
}

/// Recomputes a certificate from its subject and compares.
pub fn verify_certificate(cert: &Certificate) -> Result<bool> {
    let spec = cert.subject.clone().into_spec()?;
    let fresh = certify_nonplanar(&spec);
    Ok(fresh == *cert && (cert.verdict != Verdict::NotPlanar || cert.beta2_lower_bound.is_positive()))
}

/// Largest graph the brute-force oracle accepts.
pub const BRUTE_FORCE_MAX_VERTICES: usize = 10;

/// Classical planarity test for small graphs, independent of the L2 rules.
///
/// Each component is first screened by `E <= 3V - 6`, then embedded by
/// path addition into faces; the resulting rotation system must pass the
/// Euler check.
pub fn brute_force_planar(graph: &Graph) -> Result<bool> {
    if graph.vertex_count() > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::TooLarge(graph.vertex_count()));
    }
    Ok(planar_embedding(graph).is_some())
}

/// A sphere embedding of every component, if the graph is planar.
pub fn planar_embedding(graph: &Graph) -> Option<RotationSystem> {
    let mut order = vec![Vec::new(); graph.vertex_count()];
    for comp in graph.components() {
        let sub = graph.induced(&comp);
        let (v, e) = (sub.vertex_count(), sub.edge_count());
        if v >= 3 && e > 3 * v - 6 {
            return None;
        }
        let rot = embed_connected(&sub)?;
        faces_from_rotation(&sub, &rot).ok()?;
        for (i, r) in rot.order.into_iter().enumerate() {
            order[comp[i]] = r.into_iter().map(|u| comp[u]).collect();
        }
    }
    Some(RotationSystem { order })
}

fn embed_connected(graph: &Graph) -> Option<RotationSystem> {
    let n = graph.vertex_count();
    let mut order: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(graph) {
        if block.len() == 1 {
            let (u, v) = block[0];
            order[u].push(v);
            order[v].push(u);
            continue;
        }
        let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let pos: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let local: Vec<(usize, usize)> = block.iter().map(|&(u, v)| (pos[&u], pos[&v])).collect();
        let sub = Graph::new(verts.len(), &local);
        let faces = embed_biconnected(&sub)?;
        let rot = rotation_from_faces(&sub, &faces)?;
        // Blocks meet only at cut vertices; appending each block's rotation
        // as a contiguous run keeps the embedding planar.
        for (i, r) in rot.into_iter().enumerate() {
            order[verts[i]].extend(r.into_iter().map(|u| verts[u]));
        }
    }
    Some(RotationSystem { order })
}

/// Edge sets of the biconnected components.
fn biconnected_blocks(graph: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }
    impl State<'_> {
        fn dfs(&mut self, u: usize, parent: usize) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            for &w in &self.g.adj[u] {
                if self.disc[w] == 0 {
                    self.stack.push((u, w));
                    self.dfs(w, u);
                    self.low[u] = self.low[u].min(self.low[w]);
                    if self.low[w] >= self.disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = self.stack.pop() {
                            block.push(e);
                            if e == (u, w) {
                                break;
                            }
                        }
                        self.blocks.push(block);
                    }
                } else if w != parent && self.disc[w] < self.disc[u] {
                    self.stack.push((u, w));
                    self.low[u] = self.low[u].min(self.disc[w]);
                }
            }
        }
    }
    let n = graph.vertex_count();
    let mut st = State {
        g: graph,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if st.disc[v] == 0 {
            st.dfs(v, usize::MAX);
        }
    }
    st.blocks
}

fn find_cycle(graph: &Graph) -> Vec<usize> {
    let n = graph.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    // Iterative DFS; the first non-tree edge closes a cycle.
    while let Some(&mut (u, ref mut next)) = stack.last_mut() {
        if *next == graph.adj[u].len() {
            stack.pop();
            continue;
        }
        let w = graph.adj[u][*next];
        *next += 1;
        if depth[w] == usize::MAX {
            depth[w] = depth[u] + 1;
            parent[w] = u;
            stack.push((w, 0));
        } else if w != parent[u] && depth[w] < depth[u] {
            let mut cycle = vec![u];
            let mut x = u;
            while x != w {
                x = parent[x];
                cycle.push(x);
            }
            return cycle;
        }
    }
    Vec::new()
}

/// Path-addition embedding of a 2-connected graph; `None` if non-planar.
/// Faces are returned as consistently oriented vertex cycles.
fn embed_biconnected(graph: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = graph.vertex_count();
    let m = graph.edge_count();
    let cycle = find_cycle(graph);
    let mut emb_v = vec![false; n];
    let mut emb_e: HashSet<(usize, usize)> = HashSet::new();
    let key = |u: usize, v: usize| (u.min(v), u.max(v));
    for i in 0..cycle.len() {
        emb_v[cycle[i]] = true;
        emb_e.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];

    while emb_e.len() < m {
        // Fragments: unembedded edges between embedded vertices, and
        // components of the unembedded vertices with their attachments.
        let mut fragments: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for (u, v) in graph.edges() {
            if emb_v[u] && emb_v[v] && !emb_e.contains(&(u, v)) {
                fragments.push((vec![u, v], vec![u, v]));
            }
        }
        let mut seen = emb_v.clone();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut contacts = Vec::new();
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &graph.adj[u] {
                    if emb_v[w] {
                        contacts.push(w);
                    } else if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            contacts.sort_unstable();
            contacts.dedup();
            let path = fragment_path(graph, &emb_v, &comp, &contacts)?;
            fragments.push((contacts, path));
        }

        let admissible: Vec<Vec<usize>> = fragments
            .iter()
            .map(|(contacts, _)| {
                (0..faces.len())
                    .filter(|&f| contacts.iter().all(|c| faces[f].contains(c)))
                    .collect()
            })
            .collect();
        if admissible.iter().any(Vec::is_empty) {
            return None;
        }
        let pick = admissible.iter().position(|a| a.len() == 1).unwrap_or(0);
        let face_idx = admissible[pick][0];
        let path = &fragments[pick].1;

        let face = &faces[face_idx];
        let (a, b) = (path[0], *path.last().expect("path"));
        let ia = face.iter().position(|&x| x == a)?;
        let seq: Vec<usize> = face[ia..].iter().chain(&face[..ia]).copied().collect();
        let jb = seq.iter().position(|&x| x == b)?;
        let inner = &path[1..path.len() - 1];
        let mut f1: Vec<usize> = seq[..=jb].to_vec();
        f1.extend(inner.iter().rev());
        let mut f2: Vec<usize> = seq[jb..].to_vec();
        f2.push(a);
        f2.extend(inner.iter());
        faces[face_idx] = f1;
        faces.push(f2);

        for w in path.windows(2) {
            emb_e.insert(key(w[0], w[1]));
        }
        for &x in path {
            emb_v[x] = true;
        }
    }
    Some(faces)
}

/// A path through `comp` joining two distinct contacts.
fn fragment_path(graph: &Graph, emb_v: &[bool], comp: &[usize], contacts: &[usize]) -> Option<Vec<usize>> {
    let a = *contacts.first()?;
    let in_comp: HashSet<usize> = comp.iter().copied().collect();
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &x in &graph.adj[a] {
        if in_comp.contains(&x) && !prev.contains_key(&x) {
            prev.insert(x, a);
            queue.push_back(x);
        }
    }
    while let Some(u) = queue.pop_front() {
        if let Some(&b) = graph.adj[u].iter().find(|&&w| emb_v[w] && w != a) {
            let mut path = vec![b, u];
            let mut x = u;
            while let Some(&p) = prev.get(&x) {
                path.push(p);
                if p == a {
                    break;
                }
                x = p;
            }
            path.reverse();
            return Some(path);
        }
        for &w in &graph.adj[u] {
            if in_comp.contains(&w) && !prev.contains_key(&w) {
                prev.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    None
}

/// Recovers the rotation at each vertex from oriented face cycles: the walk
/// `u -> v -> w` means `w` follows `u` around `v`.
fn rotation_from_faces(graph: &Graph, faces: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = graph.vertex_count();
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
            succ[v].insert(u, w);
        }
    }
    let mut out = Vec::with_capacity(n);
    for (nbrs, around) in graph.adj.iter().zip(&succ) {
        let mut r = Vec::with_capacity(nbrs.len());
        let mut cur = *nbrs.first()?;
        for _ in 0..nbrs.len() {
            r.push(cur);
            cur = *around.get(&cur)?;
        }
        if cur != nbrs[0] || r.iter().collect::<HashSet<_>>().len() != nbrs.len() {
            return None;
        }
        out.push(r);
    }
    Some(out)
}

/// Tries every rotation system of a connected graph until one passes the
/// Euler check. Aborts with [`Error::CapExceeded`] past `budget` systems.
pub fn exhaustive_rotation_search(graph: &Graph, budget: usize) -> Result<Option<RotationSystem>> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    // Fix the first neighbor at each vertex; permute the rest.
    let choices: Vec<Vec<Vec<usize>>> = graph
        .adj
        .iter()
        .map(|nbrs| match nbrs.split_first() {
            None => vec![Vec::new()],
            Some((&first, rest)) => permutations(rest)
                .into_iter()
                .map(|p| std::iter::once(first).chain(p).collect())
                .collect(),
        })
        .collect();
    let total = choices
        .iter()
        .try_fold(1usize, |acc, c| acc.checked_mul(c.len()))
        .unwrap_or(usize::MAX);
    if total > budget {
        return Err(Error::CapExceeded(budget));
    }
    let target = 2 + graph.edge_count() as i64 - graph.vertex_count() as i64;
    let mut idx = vec![0usize; choices.len()];
    loop {
        let rot = RotationSystem {
            order: idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect(),
        };
        if trace_faces(graph, &rot).len() as i64 == target {
            return Ok(Some(rot));
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(None);
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}
