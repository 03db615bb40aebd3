//! Orbifold Euler characteristics and the L2-Betti rule engine.
//!
//! Nothing here computes homology. Betti numbers come only from the rules
//! listed on [`Rule`], each of which encodes a vanishing, duality or product
//! theorem under stated hypotheses; everything else stays
//! [`BettiEntry::Unknown`]. All arithmetic is exact.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::coxeter::VertexSubset;
use crate::error::{Error, Result};
use crate::nerve::{
    detect_join2, full_subcomplex, is_join_grouping, Nerve, SphereKind, SubcomplexWitness,
};
use crate::planarity::{check_complex_embedding, RotationSystem};
use crate::rational::ExactRational;

/// Default cap on the number of chains [`chi_orb_chain_sum`] enumerates.
pub const DEFAULT_CHAIN_CAP: usize = 10_000_000;

/// `sum over spherical T (including the empty set) of (-1)^|T| / |W_T|`.
pub fn chi_orb(nerve: &Nerve) -> ExactRational {
    let mut sum = ExactRational::one();
    for s in nerve.complex().all_simplices() {
        let term = ExactRational::recip_of(nerve.order(s).expect("simplices carry orders"));
        if s.len() % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

pub fn chi_orb_chain_sum(nerve: &Nerve) -> Result<ExactRational> {
    chi_orb_chain_sum_with_cap(nerve, DEFAULT_CHAIN_CAP)
}

/// The orbifold Euler characteristic summed over the simplices of the
/// realization of the poset of spherical subsets.
///
/// A simplex is a chain `T0 < T1 < ... < Tk` (the empty set included as a
/// poset element); it has dimension `k` and stabilizer `W_T0`.
pub fn chi_orb_chain_sum_with_cap(nerve: &Nerve, cap: usize) -> Result<ExactRational> {
    let mut poset: Vec<&VertexSubset> = Vec::new();
    let empty = VertexSubset::empty();
    poset.push(&empty);
    poset.extend(nerve.complex().all_simplices());
    let above: Vec<Vec<usize>> = poset
        .iter()
        .map(|a| {
            (0..poset.len())
                .filter(|&j| poset[j].len() > a.len() && a.is_subset_of(poset[j]))
                .collect()
        })
        .collect();

    struct Walk<'a> {
        above: &'a [Vec<usize>],
        count: usize,
        cap: usize,
    }
    impl Walk<'_> {
        /// Signed number of chains starting at `top` with `len` elements so far.
        fn extend(&mut self, top: usize, len: usize) -> Result<i64> {
            self.count += 1;
            if self.count > self.cap {
                return Err(Error::CapExceeded(self.cap));
            }
            let mut net = if len % 2 == 1 { 1 } else { -1 };
            for &next in &self.above[top] {
                net += self.extend(next, len + 1)?;
            }
            Ok(net)
        }
    }

    let mut walk = Walk { above: &above, count: 0, cap };
    let mut sum = ExactRational::zero();
    for (i, t) in poset.iter().enumerate() {
        let net = walk.extend(i, 1)?;
        let order = if t.is_empty() {
            num_bigint::BigUint::from(1u32)
        } else {
            nerve.order(t).expect("simplices carry orders").clone()
        };
        sum += ExactRational::from_integer(net) * ExactRational::recip_of(&order);
    }
    Ok(sum)
}

/// Identifiers of the rules the engine applies, in application order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `W` finite: `beta_0 = 1/|W|`, higher entries vanish.
    FiniteGroup,
    /// `W` infinite: `beta_0 = 0`.
    InfiniteBeta0,
    /// Nerve is `S^0` or a circle: the top entry vanishes by Poincare duality.
    LowSphere,
    /// Nerve is a 2-sphere: every entry vanishes.
    TwoSphere,
    /// Full subcomplex of a circle: entries above 1 vanish.
    SubcomplexOfCircle,
    /// Full subcomplex with right-angled complement in a 2-sphere: entries
    /// above 1 vanish.
    SubcomplexOfTwoSphere,
    /// Planar complex of dimension at most 2: entries above 1 vanish.
    Planar,
    /// Right-angled join: Kunneth product of the factor vectors.
    Join,
    /// The one remaining entry solved from the Euler characteristic.
    Atiyah,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::FiniteGroup => "R-fin",
            Rule::InfiniteBeta0 => "R-beta0",
            Rule::LowSphere => "R-S0/S1",
            Rule::TwoSphere => "R-S2",
            Rule::SubcomplexOfCircle => "R-sub1",
            Rule::SubcomplexOfTwoSphere => "R-sub2",
            Rule::Planar => "R-planar",
            Rule::Join => "R-join",
            Rule::Atiyah => "R-atiyah",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Rule {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub rule: Rule,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BettiEntry {
    Known(ExactRational),
    Unknown,
}

impl fmt::Display for BettiEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BettiEntry::Known(r) => write!(f, "{r}"),
            BettiEntry::Unknown => f.write_str("?"),
        }
    }
}

impl Serialize for BettiEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// L2-Betti numbers `beta_0 ..= beta_{dim L + 1}` with provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    pub entries: Vec<BettiEntry>,
    pub provenance: Vec<Option<Provenance>>,
}

impl BettiVector {
    fn unknown(len: usize) -> Self {
        BettiVector {
            entries: vec![BettiEntry::Unknown; len],
            provenance: vec![None; len],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Value of `beta_i`. Indices above the top dimension are zero.
    pub fn get(&self, i: usize) -> Option<ExactRational> {
        match self.entries.get(i) {
            Some(BettiEntry::Known(r)) => Some(r.clone()),
            Some(BettiEntry::Unknown) => None,
            None => Some(ExactRational::zero()),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.entries.iter().all(|e| matches!(e, BettiEntry::Known(_)))
    }

    pub fn known(&self) -> Option<Vec<ExactRational>> {
        self.entries
            .iter()
            .map(|e| match e {
                BettiEntry::Known(r) => Some(r.clone()),
                BettiEntry::Unknown => None,
            })
            .collect()
    }

    /// Compares against `values`, treating missing trailing entries on either
    /// side as zero.
    pub fn matches(&self, values: &[ExactRational]) -> bool {
        (0..self.len().max(values.len())).all(|i| {
            let want = values.get(i).cloned().unwrap_or_else(ExactRational::zero);
            self.get(i) == Some(want)
        })
    }

    pub fn alternating_sum(&self) -> Option<ExactRational> {
        let vals = self.known()?;
        Some(
            vals.into_iter()
                .enumerate()
                .map(|(i, v)| if i % 2 == 0 { v } else { -v })
                .sum(),
        )
    }

    pub fn rule_of(&self, i: usize) -> Option<Rule> {
        self.provenance.get(i)?.as_ref().map(|p| p.rule)
    }

    fn set(&mut self, i: usize, value: ExactRational, rule: Rule, witness: &str) -> Result<()> {
        if i >= self.len() {
            return Ok(());
        }
        match &self.entries[i] {
            BettiEntry::Known(old) if *old != value => Err(Error::ContradictoryRules {
                dim: i,
                first: old.to_string(),
                first_rule: self.rule_of(i).map_or("?", Rule::id).to_string(),
                second: value.to_string(),
                second_rule: rule.id().to_string(),
            }),
            BettiEntry::Known(_) => Ok(()),
            BettiEntry::Unknown => {
                self.entries[i] = BettiEntry::Known(value);
                self.provenance[i] = Some(Provenance {
                    rule,
                    witness: witness.to_string(),
                });
                Ok(())
            }
        }
    }

    /// Solves entry `i` from the Euler characteristic when every other entry
    /// is known.
    fn solve(&mut self, i: usize, chi: &ExactRational, rule: Rule, witness: &str) -> Result<bool> {
        if i >= self.len() {
            return Ok(false);
        }
        let mut rest = ExactRational::zero();
        for (j, e) in self.entries.iter().enumerate() {
            if j == i {
                continue;
            }
            match e {
                BettiEntry::Known(r) if j % 2 == 0 => rest += r.clone(),
                BettiEntry::Known(r) => rest -= r.clone(),
                BettiEntry::Unknown => return Ok(false),
            }
        }
        // chi = rest + (-1)^i beta_i
        let value = if i.is_multiple_of(2) { chi - &rest } else { &rest - chi };
        self.set(i, value, rule, witness)?;
        Ok(true)
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Hypotheses available to the rule engine beyond the nerve itself.
///
/// Every witness is checked against the target nerve when it is attached.
#[derive(Debug, Clone, Default)]
pub struct RuleContext {
    ambient: Option<(Nerve, SubcomplexWitness)>,
    embedding: Option<RotationSystem>,
    join_factors: Option<Vec<VertexSubset>>,
}

impl RuleContext {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares `target` to be the full subcomplex of `ambient` spanned by
    /// `subset` (indices of `ambient`).
    pub fn with_ambient(mut self, target: &Nerve, ambient: Nerve, subset: &VertexSubset) -> Result<Self> {
        let (induced, witness) = full_subcomplex(&ambient, subset)?;
        if !induced.spec().same_matrix(target.spec()) {
            return Err(Error::InvalidContext(
                "target is not the full subcomplex of the ambient nerve on the given subset".into(),
            ));
        }
        self.ambient = Some((ambient, witness));
        Ok(self)
    }

    /// Attaches a sphere embedding of the target's 1-skeleton in which every
    /// 2-simplex bounds a face.
    pub fn with_embedding(mut self, target: &Nerve, rot: RotationSystem) -> Result<Self> {
        if target.dimension() > 2 {
            return Err(Error::InvalidContext("planar witness needs dimension <= 2".into()));
        }
        check_complex_embedding(target, &rot)?;
        self.embedding = Some(rot);
        Ok(self)
    }

    /// Uses `groups` as the join factorization instead of the finest one.
    pub fn with_join_factors(mut self, target: &Nerve, groups: Vec<VertexSubset>) -> Result<Self> {
        if !is_join_grouping(target, &groups) {
            return Err(Error::InvalidContext(
                "groups do not form a right-angled join decomposition".into(),
            ));
        }
        self.join_factors = Some(groups);
        Ok(self)
    }

    pub fn ambient(&self) -> Option<&(Nerve, SubcomplexWitness)> {
        self.ambient.as_ref()
    }
}

/// Fills in L2-Betti numbers by applying the rules in order.
///
/// Two rules assigning different values to the same entry abort with
/// [`Error::ContradictoryRules`]; so does a negative entry or a complete
/// vector failing the Euler characteristic identity.
pub fn betti(nerve: &Nerve, ctx: &RuleContext) -> Result<BettiVector> {
    let spec = nerve.spec();
    let chi = chi_orb(nerve);
    let top = (nerve.dimension() + 1) as usize;
    let mut b = BettiVector::unknown(top + 1);
    let zero = ExactRational::zero;
    let sphere = nerve.recognize_sphere();

    if nerve.group_is_finite() {
        let order = nerve.group_order().expect("finite");
        let w = format!("W finite of order {order}");
        b.set(0, ExactRational::recip_of(&order), Rule::FiniteGroup, &w)?;
        for i in 1..=top {
            b.set(i, zero(), Rule::FiniteGroup, &w)?;
        }
    } else {
        b.set(0, zero(), Rule::InfiniteBeta0, "W infinite, so the 0-skeleton of the Davis complex is infinite")?;
        if nerve.complex().is_zero_sphere() {
            b.set(1, zero(), Rule::LowSphere, "nerve is S^0; top entry vanishes by duality")?;
        } else if sphere == SphereKind::Circle {
            let w = "nerve is a circle; top entry vanishes by duality";
            b.set(2, zero(), Rule::LowSphere, w)?;
            b.solve(1, &chi, Rule::LowSphere, w)?;
        }
    }

    if sphere == SphereKind::TwoSphere {
        for i in 0..=top {
            b.set(i, zero(), Rule::TwoSphere, "nerve is a 2-sphere; every entry vanishes")?;
        }
    }

    if let Some((ambient, witness)) = &ctx.ambient {
        let set = ambient.spec().format_subset(&witness.vertices);
        let rule = match ambient.recognize_sphere() {
            SphereKind::Circle => Some((
                Rule::SubcomplexOfCircle,
                format!("full subcomplex {set} of a circle"),
            )),
            SphereKind::TwoSphere if witness.right_angled_complement => Some((
                Rule::SubcomplexOfTwoSphere,
                format!("full subcomplex {set} with right-angled complement in a 2-sphere"),
            )),
            _ => None,
        };
        if let Some((rule, w)) = rule {
            for i in 2..=top {
                b.set(i, zero(), rule, &w)?;
            }
            b.solve(1, &chi, rule, &w)?;
        }
    }

    if ctx.embedding.is_some() {
        let w = "embedded in the 2-sphere with every 2-simplex a face";
        for i in 2..=top {
            b.set(i, zero(), Rule::Planar, w)?;
        }
        b.solve(1, &chi, Rule::Planar, w)?;
    }

    let factors = ctx.join_factors.clone().or_else(|| detect_join2(nerve));
    if let Some(groups) = factors {
        let mut product = vec![ExactRational::one()];
        let mut parts = Vec::new();
        let mut complete = true;
        for g in &groups {
            let (sub, _) = full_subcomplex(nerve, g)?;
            let v = betti(&sub, &RuleContext::default())?;
            parts.push(format!("{} {}", spec.format_subset(g), v));
            match v.known() {
                Some(vals) => product = convolve(&product, &vals),
                None => complete = false,
            }
        }
        if complete {
            debug_assert_eq!(product.len(), top + 1);
            let w = format!("right-angled join of {}", parts.join(" * "));
            for (i, v) in product.into_iter().enumerate() {
                b.set(i, v, Rule::Join, &w)?;
            }
        }
    }

    let unknown: Vec<usize> = (0..b.len())
        .filter(|&i| b.entries[i] == BettiEntry::Unknown)
        .collect();
    if let [i] = unknown[..] {
        b.solve(i, &chi, Rule::Atiyah, &format!("alternating sum equals chi_orb = {chi}"))?;
    }

    if let Some(i) = (0..b.len()).find(|&i| b.get(i).is_some_and(|r| r.is_negative())) {
        return Err(Error::ContradictoryRules {
            dim: i,
            first: b.entries[i].to_string(),
            first_rule: b.rule_of(i).map_or("?", Rule::id).to_string(),
            second: "a nonnegative value".into(),
            second_rule: "nonnegativity".into(),
        });
    }
    if let Some(sum) = b.alternating_sum() {
        if sum != chi {
            return Err(Error::ContradictoryRules {
                dim: 0,
                first: sum.to_string(),
                first_rule: "alternating sum".into(),
                second: chi.to_string(),
                second_rule: "chi_orb".into(),
            });
        }
    }
    Ok(b)
}

fn convolve(a: &[ExactRational], b: &[ExactRational]) -> Vec<ExactRational> {
    let mut out = vec![ExactRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Checks `chi_orb = sum (-1)^i beta_i`.
pub fn atiyah_check(nerve: &Nerve, b: &BettiVector) -> Result<bool> {
    let sum = b.alternating_sum().ok_or(Error::UnknownEntries)?;
    Ok(sum == chi_orb(nerve))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundSource {
    /// `beta_2 >= chi_orb`, from `beta_0 = 0` and the Euler characteristic.
    ChiOrb,
    /// An exact `beta_2` from the rule engine.
    Exact(Rule),
    /// Nothing better than the trivial bound.
    Trivial,
}

/// Certified lower bound on `beta_2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub value: ExactRational,
    pub source: BoundSource,
    pub chi_orb: ExactRational,
    pub betti: BettiVector,
}

/// Lower bound on `beta_2` for an infinite group with nerve of dimension at
/// most 2.
///
/// With `beta_0 = 0` the Euler characteristic reads
/// `chi = -beta_1 + beta_2 - beta_3`, so `beta_2 >= chi`. An exact `beta_2`
/// from the rule engine is preferred when it is at least as large.
pub fn betti_lower_bound_dim2(nerve: &Nerve) -> Result<LowerBound> {
    if nerve.group_is_finite() {
        return Err(Error::FiniteGroup);
    }
    if nerve.dimension() > 2 {
        return Err(Error::DimensionTooHigh(nerve.dimension() as usize));
    }
    let chi = chi_orb(nerve);
    let b = betti(nerve, &RuleContext::default())?;
    let exact = match (b.get(2), b.rule_of(2)) {
        (Some(v), Some(rule)) if b.len() > 2 => Some((v, rule)),
        _ => None,
    };
    let (value, source) = match exact {
        Some((v, rule)) if v >= chi && v.is_positive() => (v, BoundSource::Exact(rule)),
        _ if chi.is_positive() => (chi.clone(), BoundSource::ChiOrb),
        _ => (ExactRational::zero(), BoundSource::Trivial),
    };
    Ok(LowerBound {
        value,
        source,
        chi_orb: chi,
        betti: b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::nerve::{build_nerve, cone2, join2};

    fn r(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d)
    }

    fn nerve(spec: crate::CoxeterSpec) -> Nerve {
        build_nerve(&spec).unwrap()
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_orb(&nerve(k5(3))), r(1, 6));
        assert_eq!(chi_orb(&nerve(points(1))), r(1, 2));
        assert_eq!(chi_orb(&nerve(points(3))), r(-1, 2));
        assert_eq!(chi_orb(&nerve(k33())), r(1, 4));
        assert_eq!(chi_orb(&nerve(octahedron())), r(0, 1));
        assert_eq!(chi_orb(&nerve(cycle(6))), r(-1, 2));
        assert_eq!(chi_orb(&nerve(crate::CoxeterSpec::empty())), r(1, 1));
    }

    #[test]
    fn chain_sum_examples() {
        for spec in [points(1), points(3), k5(3), k33(), octahedron(), cycle(6)] {
            let n = nerve(spec);
            assert_eq!(chi_orb_chain_sum(&n).unwrap(), chi_orb(&n));
        }
        assert_eq!(chi_orb_chain_sum(&nerve(points(1))).unwrap(), r(1, 2));
        assert_eq!(chi_orb_chain_sum(&nerve(points(3))).unwrap(), r(-1, 2));
    }

    #[test]
    fn chain_cap() {
        // P3 has 7 chains.
        assert!(chi_orb_chain_sum_with_cap(&nerve(points(3)), 7).is_ok());
        assert_eq!(
            chi_orb_chain_sum_with_cap(&nerve(points(3)), 6),
            Err(Error::CapExceeded(6))
        );
    }

    #[test]
    fn betti_single_point() {
        let b = betti(&nerve(points(1)), &RuleContext::new()).unwrap();
        assert_eq!(b.to_string(), "(1/2, 0)");
        assert!(b.matches(&[r(1, 2)]));
        assert_eq!(b.rule_of(0), Some(Rule::FiniteGroup));
    }

    #[test]
    fn betti_three_points() {
        let b = betti(&nerve(points(3)), &RuleContext::new()).unwrap();
        assert!(b.matches(&[r(0, 1), r(1, 2), r(0, 1)]));
        assert_eq!(b.rule_of(0), Some(Rule::InfiniteBeta0));
        assert_eq!(b.rule_of(1), Some(Rule::Atiyah));
    }

    #[test]
    fn betti_three_points_inside_hexagon() {
        let hex = nerve(cycle(6));
        let alt = hex.spec().subset(&["v0", "v2", "v4"]).unwrap();
        let (p3, _) = full_subcomplex(&hex, &alt).unwrap();
        let ctx = RuleContext::new().with_ambient(&p3, hex.clone(), &alt).unwrap();
        let b = betti(&p3, &ctx).unwrap();
        assert!(b.matches(&[r(0, 1), r(1, 2)]));
        assert_eq!(b.rule_of(1), Some(Rule::SubcomplexOfCircle));
    }

    #[test]
    fn betti_k33_by_join() {
        let b = betti(&nerve(k33()), &RuleContext::new()).unwrap();
        assert_eq!(b.to_string(), "(0, 0, 1/4)");
        assert_eq!(b.rule_of(2), Some(Rule::Join));
    }

    #[test]
    fn betti_octahedron_vanishes() {
        let b = betti(&nerve(octahedron()), &RuleContext::new()).unwrap();
        assert_eq!(b.to_string(), "(0, 0, 0, 0)");
        assert_eq!(b.rule_of(1), Some(Rule::TwoSphere));
    }

    #[test]
    fn betti_hexagon() {
        let b = betti(&nerve(cycle(6)), &RuleContext::new()).unwrap();
        assert_eq!(b.to_string(), "(0, 1/2, 0)");
        assert_eq!(b.rule_of(1), Some(Rule::LowSphere));
    }

    #[test]
    fn k5_is_left_partly_unknown() {
        let b = betti(&nerve(k5(3)), &RuleContext::new()).unwrap();
        assert_eq!(b.to_string(), "(0, ?, ?)");
    }

    #[test]
    fn cone_halves() {
        let p3 = nerve(points(3));
        let c = cone2(&p3);
        let b = betti(&c, &RuleContext::new()).unwrap();
        assert!(b.matches(&[r(0, 1), r(1, 4), r(0, 1)]));
        assert_eq!(chi_orb(&c), r(-1, 4));
    }

    #[test]
    fn contradiction_from_bad_planar_witness_is_impossible_to_attach() {
        // K5 has no sphere embedding, so no witness can be attached.
        let k = nerve(k5(3));
        let rot = crate::planarity::RotationSystem::sorted(&crate::planarity::Graph::from_nerve(&k));
        assert!(RuleContext::new().with_embedding(&k, rot).is_err());
    }

    #[test]
    fn join_grouping_must_be_right_angled() {
        let k = nerve(k5(3));
        let groups = vec![VertexSubset::from_indices([0, 1]), VertexSubset::from_indices([2, 3, 4])];
        assert!(RuleContext::new().with_join_factors(&k, groups).is_err());
    }

    #[test]
    fn atiyah_examples() {
        let k = nerve(k33());
        let b = betti(&k, &RuleContext::new()).unwrap();
        assert_eq!(atiyah_check(&k, &b), Ok(true));
        let hex = nerve(cycle(6));
        let mut zero = betti(&hex, &RuleContext::new()).unwrap();
        zero.entries[1] = BettiEntry::Known(ExactRational::zero());
        assert_eq!(atiyah_check(&hex, &zero), Ok(false));
        let partial = betti(&nerve(k5(3)), &RuleContext::new()).unwrap();
        assert_eq!(atiyah_check(&nerve(k5(3)), &partial), Err(Error::UnknownEntries));
    }

    #[test]
    fn lower_bounds() {
        let k = betti_lower_bound_dim2(&nerve(k5(3))).unwrap();
        assert_eq!(k.value, r(1, 6));
        assert_eq!(k.source, BoundSource::ChiOrb);
        let k = betti_lower_bound_dim2(&nerve(k33())).unwrap();
        assert_eq!(k.value, r(1, 4));
        assert_eq!(k.source, BoundSource::Exact(Rule::Join));
        let h = betti_lower_bound_dim2(&nerve(cycle(6))).unwrap();
        assert_eq!(h.value, r(0, 1));
        assert_eq!(betti_lower_bound_dim2(&nerve(points(1))).unwrap_err(), Error::FiniteGroup);
        let big = join2(&nerve(octahedron()), &nerve(points(2)));
        assert_eq!(betti_lower_bound_dim2(&big).unwrap_err(), Error::DimensionTooHigh(3));
    }
}
