//! Validators that check statements about Cohen–Macaulay cones on finite data
//! and emit replayable certificates.
//!
//! Every validator returns a [`TheoremReport`]. A `violated` verdict always
//! carries the concrete witness (a point, direction, index or relation) that
//! can be re-checked with the operations of [`crate::cone`] and
//! [`crate::classes`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::classes::{
    canonical_dual_class, complexity_lower_bound, dual_class, kernel_of_divisor,
    nu_involution_matrix, syzygy_rank_profile, BettiSequence, Complexity, ModuleClass,
    RingDescriptor, RingFlag,
};
use crate::cone::{LevelSet, RationalCone};
use crate::error::{Error, Result};
use crate::format::format_integer_list;
use crate::lattice::{realify, GroupElement, GroupPresentation};
use crate::linalg::RationalVector;

pub const DEFAULT_HORIZON: u64 = 1000;
pub const DEFAULT_BOUND: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Violated,
    NotApplicable,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::NotApplicable => "not_applicable",
        }
    }

    /// Process exit status for this verdict.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Violated => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub verdict: Verdict,
    pub conclusion: String,
    pub citation: String,
    #[serde(default)]
    pub parameters: BTreeMap<String, String>,
    #[serde(default)]
    pub certificate: Vec<Witness>,
}

impl TheoremReport {
    pub fn new(theorem_id: &str, citation: &str) -> Self {
        TheoremReport {
            theorem_id: theorem_id.to_string(),
            verdict: Verdict::Holds,
            conclusion: String::new(),
            citation: citation.to_string(),
            parameters: BTreeMap::new(),
            certificate: Vec::new(),
        }
    }

    pub fn witness(&mut self, name: &str, value: impl ToString) -> &mut Self {
        self.certificate.push(Witness {
            name: name.to_string(),
            value: value.to_string(),
        });
        self
    }

    pub fn parameter(&mut self, name: &str, value: impl ToString) -> &mut Self {
        self.parameters.insert(name.to_string(), value.to_string());
        self
    }

    fn finish(mut self, verdict: Verdict, conclusion: impl Into<String>) -> Self {
        self.verdict = verdict;
        self.conclusion = conclusion.into();
        self
    }

    /// First witness with this name.
    pub fn get(&self, name: &str) -> Option<&str> {
        self.certificate
            .iter()
            .find(|w| w.name == name)
            .map(|w| w.value.as_str())
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "check:      {}", self.theorem_id);
        let _ = writeln!(out, "statement:  {}", self.citation);
        let _ = writeln!(out, "verdict:    {}", self.verdict);
        let _ = writeln!(out, "conclusion: {}", self.conclusion);
        if !self.parameters.is_empty() {
            let _ = writeln!(out, "parameters:");
            for (k, v) in &self.parameters {
                let _ = writeln!(out, "  {k} = {v}");
            }
        }
        if !self.certificate.is_empty() {
            let _ = writeln!(out, "certificate:");
            for w in &self.certificate {
                let _ = writeln!(out, "  {}: {}", w.name, w.value);
            }
        }
        out
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    format_integer_list(items)
}

fn rank_axis(dim: usize) -> RationalVector {
    RationalVector::unit(dim, 0)
}

fn big(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

// ---------------------------------------------------------------------------
// Fixed-rank cone chain

const CHAIN_STATEMENT: &str = "for a finite set of rank-r maximal Cohen-Macaulay classes the \
    spanned cone is polyhedral and closed, meets the rank-zero hyperplane only in 0 exactly when \
    its rank-r slice is bounded, and is then strongly convex";

/// Conditions of the fixed-rank equivalence chain evaluated on one cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainConditions {
    /// Generators of `C ∩ {x_rank = 0}`.
    pub rank_zero_section: Vec<RationalVector>,
    pub slice: LevelSet,
    pub lineality: Vec<RationalVector>,
}

impl ChainConditions {
    /// `C ∩ {rank = 0} = {0}`, decided through the double description.
    pub fn section_trivial(&self) -> bool {
        self.rank_zero_section.is_empty()
    }

    /// Slice at the chosen level bounded, decided from the generators.
    pub fn slice_bounded(&self) -> bool {
        self.slice.is_bounded()
    }

    pub fn strongly_convex(&self) -> bool {
        self.lineality.is_empty()
    }

    /// The two routes agree and boundedness forces strong convexity. Both
    /// implications assume every generator has nonnegative rank and at least
    /// one has positive rank.
    pub fn consistent(&self) -> bool {
        self.section_trivial() == self.slice_bounded()
            && (!self.slice_bounded() || self.strongly_convex())
    }
}

/// Evaluates the finite-data chain on `cone` with the rank in `rank_coord`.
pub fn chain_conditions(cone: &RationalCone, rank_coord: usize, level: &BigRational) -> Result<ChainConditions> {
    if rank_coord >= cone.ambient_dim() {
        return Err(Error::InvalidArgument(format!(
            "rank coordinate {rank_coord} outside dimension {}",
            cone.ambient_dim()
        )));
    }
    if !level.is_positive() {
        return Err(Error::InvalidArgument(format!("slice level must be positive, got {level}")));
    }
    let axis = RationalVector::unit(cone.ambient_dim(), rank_coord);
    let section = cone.intersect_subspace(&[axis])?;
    Ok(ChainConditions {
        rank_zero_section: section.generators().to_vec(),
        slice: cone.level_set(rank_coord, level)?,
        lineality: cone.lineality_space(),
    })
}

fn vector_list(vs: &[RationalVector]) -> String {
    let items: Vec<String> = vs.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

/// Checks the finite-data chain for the cone spanned by `classes`, all of
/// rank `r` and declared maximal Cohen–Macaulay.
pub fn chain_report(classes: &[ModuleClass], r: u64, ring: &RingDescriptor) -> Result<TheoremReport> {
    if r == 0 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    let dim = ring.real_dim();
    let mut points = Vec::with_capacity(classes.len());
    for m in classes {
        if m.rank != r {
            return Err(Error::RankMismatch {
                label: m.label.clone(),
                expected: r,
                found: m.rank,
            });
        }
        if m.mcm != Some(true) {
            return Err(Error::NotDeclaredMcm(m.label.clone()));
        }
        let x = m.realify();
        x.check_dim(dim)?;
        points.push(x);
    }
    let cone = RationalCone::new(dim, points)?;
    let chain = chain_conditions(&cone, 0, &big(r))?;

    let mut report = TheoremReport::new("t1", CHAIN_STATEMENT);
    report.parameter("rank", r).parameter("ring", &ring.name);
    let labels: Vec<&str> = classes.iter().map(|m| m.label.as_str()).collect();
    report
        .witness("classes", labels.join(", "))
        .witness("generators", vector_list(cone.generators()))
        .witness("facet_normals", vector_list(&cone.facets().normals))
        .witness("span_equations", vector_list(&cone.facets().equations))
        .witness("polyhedral", "holds: finitely many generators")
        .witness("closed", "holds: finitely generated cones are closed");
    report.witness(
        "rank_zero_section_trivial",
        if chain.section_trivial() {
            "holds".to_string()
        } else {
            format!("violated: section spanned by {}", vector_list(&chain.rank_zero_section))
        },
    );
    match &chain.slice {
        LevelSet::Bounded { vertices, diameter_sq } => {
            report
                .witness("slice_bounded", "holds")
                .witness("slice_vertices", vector_list(vertices))
                .witness("slice_diameter_sq", diameter_sq);
        }
        LevelSet::Unbounded { direction } => {
            report
                .witness("slice_bounded", "violated")
                .witness("recession_direction", direction);
        }
    }
    report.witness(
        "strongly_convex",
        if chain.strongly_convex() {
            "holds".to_string()
        } else {
            format!("violated: lineality {}", vector_list(&chain.lineality))
        },
    );
    let all = chain.section_trivial() && chain.slice_bounded() && chain.strongly_convex();
    Ok(if all && chain.consistent() {
        report.finish(Verdict::Holds, format!("all chain conditions hold at rank {r}"))
    } else if !chain.consistent() {
        report.finish(
            Verdict::Violated,
            "rank-zero section and slice boundedness disagree; the witnesses above replay the mismatch",
        )
    } else {
        report.finish(Verdict::Violated, "chain conditions fail for this generator set")
    })
}

// ---------------------------------------------------------------------------
// Streams

/// A reproducible sequence of classes indexed by `n ≥ 0`.
pub trait ClassStream {
    fn class_at(&self, n: u64) -> Result<ModuleClass>;
    fn description(&self) -> String;
}

/// `base + n · step`.
#[derive(Clone, Debug)]
pub struct LinearStream {
    pub base: ModuleClass,
    pub step: GroupElement,
    pub group: GroupPresentation,
}

impl ClassStream for LinearStream {
    fn class_at(&self, n: u64) -> Result<ModuleClass> {
        let shift = self.group.scale(&BigInt::from(n), &self.step)?;
        Ok(ModuleClass::new(
            format!("{}[{n}]", self.base.label),
            self.base.rank,
            self.group.add(&self.base.kernel_part, &shift)?,
        ))
    }

    fn description(&self) -> String {
        format!("{} + n * {}", self.base.label, self.step)
    }
}

/// `base + (-1)^n · step`.
#[derive(Clone, Debug)]
pub struct AlternatingStream {
    pub base: ModuleClass,
    pub step: GroupElement,
    pub group: GroupPresentation,
}

impl ClassStream for AlternatingStream {
    fn class_at(&self, n: u64) -> Result<ModuleClass> {
        let step = if n.is_multiple_of(2) {
            self.step.clone()
        } else {
            self.group.negate(&self.step)?
        };
        Ok(ModuleClass::new(
            format!("{}[{n}]", self.base.label),
            self.base.rank,
            self.group.add(&self.base.kernel_part, &step)?,
        ))
    }

    fn description(&self) -> String {
        format!("{} + (-1)^n * {}", self.base.label, self.step)
    }
}

/// Scans `n = 0 .. horizon-1` for a class on the rank-`r` slice whose squared
/// norm exceeds `bound²`. Finding none is not a proof of boundedness.
pub fn stream_divergence_monitor(
    stream: &dyn ClassStream,
    r: u64,
    horizon: u64,
    bound: &BigRational,
) -> Result<TheoremReport> {
    if horizon == 0 {
        return Err(Error::InvalidArgument("horizon must be at least 1".into()));
    }
    if bound.is_negative() {
        return Err(Error::InvalidArgument(format!("bound must be nonnegative, got {bound}")));
    }
    let limit = bound * bound;
    let mut report = TheoremReport::new(
        "stream",
        "a sequence of rank-r classes with unbounded norm certifies an unbounded rank-r slice",
    );
    report
        .parameter("stream", stream.description())
        .parameter("rank", r)
        .parameter("horizon", horizon)
        .parameter("bound", bound);

    let mut max_sq = BigRational::zero();
    let mut argmax = 0;
    for n in 0..horizon {
        let m = stream.class_at(n)?;
        if m.rank != r {
            return Err(Error::RankMismatch {
                label: m.label,
                expected: r,
                found: m.rank,
            });
        }
        let x = m.realify();
        let norm_sq = x.squared_norm();
        if norm_sq > limit {
            // τ is the offset from r·[R] inside the rank-zero hyperplane.
            let tau = x.add_scaled(&-big(r), &rank_axis(x.dim()));
            let delta_sq = tau.squared_norm();
            report
                .witness("index", n)
                .witness("point", &x)
                .witness("squared_norm", &norm_sq)
                .witness("tau", &tau)
                .witness("delta_sq", &delta_sq)
                .witness("direction", tau.primitive());
            return Ok(report.finish(
                Verdict::Violated,
                format!("normalized classes leave the ball of radius {bound} at n = {n}"),
            ));
        }
        if norm_sq > max_sq {
            max_sq = norm_sq;
            argmax = n;
        }
    }
    report
        .witness("max_squared_norm", &max_sq)
        .witness("argmax", argmax);
    Ok(report.finish(
        Verdict::Holds,
        format!("bounded up to horizon {horizon}; this does not prove the slice is bounded"),
    ))
}

// ---------------------------------------------------------------------------
// Lattice separation

/// Distinct integral points of `h(R)_R` are at squared distance at least 1.
/// Classes that differ only by torsion collapse to the same real point and
/// are reported, not flagged.
pub fn lattice_separation(classes: &[ModuleClass]) -> Result<TheoremReport> {
    let mut report = TheoremReport::new(
        "p16",
        "the closed unit ball around a class meets the image of h(R) only in that class's point",
    );
    report.parameter("classes", classes.len());
    let points: Vec<RationalVector> = classes.iter().map(ModuleClass::realify).collect();
    let one = BigRational::one();
    let mut min_sq: Option<BigRational> = None;
    let mut collapses = Vec::new();
    let mut violations = Vec::new();
    let mut pairs = 0usize;
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            if classes[i].same_class(&classes[j]) {
                continue;
            }
            if points[i].dim() != points[j].dim() {
                return Err(Error::dim(points[i].dim(), points[j].dim()));
            }
            if points[i] == points[j] {
                collapses.push(format!("{} ~ {}", classes[i].label, classes[j].label));
                continue;
            }
            pairs += 1;
            let d = points[i].squared_distance(&points[j]);
            if d < one {
                violations.push(format!("{} / {}: {}", classes[i].label, classes[j].label, d));
            }
            if min_sq.as_ref().is_none_or(|m| &d < m) {
                min_sq = Some(d);
            }
        }
    }
    report.witness("separated_pairs", pairs);
    if let Some(m) = &min_sq {
        report.witness("min_squared_distance", m);
    }
    if !collapses.is_empty() {
        report.witness("torsion_collapse", collapses.join("; "));
    }
    Ok(if violations.is_empty() {
        report.finish(
            Verdict::Holds,
            "every pair with distinct real images is at squared distance >= 1",
        )
    } else {
        report.witness("too_close", violations.join("; "));
        report.finish(Verdict::Violated, "some distinct real images are closer than 1")
    })
}

// ---------------------------------------------------------------------------
// Symmetry under the canonical involution

pub fn symmetry_check(classes: &[ModuleClass], ring: &RingDescriptor) -> Result<TheoremReport> {
    let mut report = TheoremReport::new(
        "sym",
        "the cone of a dual-closed class list is symmetric under the canonical involution",
    );
    report.parameter("ring", &ring.name).parameter("classes", classes.len());
    let nu = nu_involution_matrix(ring)?;
    let mut missing = Vec::new();
    for m in classes {
        let dual = canonical_dual_class(m, ring)?;
        if !classes.iter().any(|c| c.same_class(&dual)) {
            missing.push(format!("{} (needed by {})", dual, m.label));
        }
    }
    if !missing.is_empty() {
        report.witness("missing_duals", missing.join("; "));
        return Ok(report.finish(Verdict::NotApplicable, "class list is not closed under canonical duals"));
    }
    let dim = ring.real_dim();
    let cone = RationalCone::new(dim, classes.iter().map(ModuleClass::realify).collect())?;
    let image = cone.image(&nu)?;
    report
        .witness("involution", &nu)
        .witness("cone_generators", vector_list(cone.generators()))
        .witness("image_generators", vector_list(image.generators()));
    if let Some(g) = image.generators().iter().find(|g| !cone.contains(g).unwrap_or(false)) {
        report.witness("image_outside_cone", g);
        return Ok(report.finish(Verdict::Violated, "involution moves a generator outside the cone"));
    }
    if let Some(g) = cone.generators().iter().find(|g| !image.contains(g).unwrap_or(false)) {
        report.witness("cone_outside_image", g);
        return Ok(report.finish(Verdict::Violated, "cone is not contained in its involution image"));
    }
    Ok(report.finish(Verdict::Holds, "cone equals its image under the involution"))
}

// ---------------------------------------------------------------------------
// Syzygy rank criterion for boundary points

/// Necessary condition for `[M]` or `[M*]` on the cone boundary: every
/// (co)syzygy has rank at least `rank`. A dip certifies both classes are
/// interior. Holding is inconclusive.
pub fn syzygy_boundary_check(rank: u64, betti: &BettiSequence, upto: usize) -> Result<TheoremReport> {
    let mut report = TheoremReport::new(
        "p44",
        "if a totally reflexive class or its dual lies on the cone boundary then every syzygy \
         and cosyzygy has rank at least the rank of the module",
    );
    report.parameter("rank", rank).parameter("range", upto);
    let profile = syzygy_rank_profile(rank, betti, upto)?;
    let syz_tail = &profile.syzygy[1..];
    if rank == 0 || syz_tail.iter().all(Zero::is_zero) && !syz_tail.is_empty() {
        report.witness("syzygy_ranks", join(&profile.syzygy));
        return Ok(report.finish(
            Verdict::NotApplicable,
            "free or zero module: syzygies vanish and the boundary question is vacuous",
        ));
    }
    report.witness("syzygy_ranks", join(&profile.syzygy));
    match &profile.cosyzygy {
        Some(c) => report.witness("cosyzygy_ranks", join(c)),
        None => report.witness("cosyzygy_ranks", "not supplied; only syzygies checked"),
    };
    let dip = |ranks: &[u64]| ranks.iter().position(|&x| x < rank);
    let found = dip(&profile.syzygy)
        .map(|i| ("syzygy", i, profile.syzygy[i]))
        .or_else(|| {
            profile
                .cosyzygy
                .as_ref()
                .and_then(|c| dip(c).map(|i| ("cosyzygy", i, c[i])))
        });
    Ok(match found {
        Some((side, i, r)) => {
            report
                .witness("first_dip_side", side)
                .witness("first_dip_index", i)
                .witness("first_dip_rank", r);
            report.finish(
                Verdict::Holds,
                format!(
                    "necessary boundary condition fails at {side} {i} (rank {r} < {rank}): \
                     [M] and [M*] are interior points"
                ),
            )
        }
        None => report.finish(
            Verdict::Holds,
            "necessary condition holds (inconclusive for boundary membership)",
        ),
    })
}

// ---------------------------------------------------------------------------
// Syzygies entering a subcone

/// Outcome of the syzygy membership scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyMembership {
    /// `rk syz^n M` for the scanned indices.
    pub ranks: Vec<u64>,
    /// Whether `[syz^n M] ∈ V`.
    pub members: Vec<bool>,
    /// Least rank that puts the class in `V`, for even and odd `n`;
    /// `None` when no rank suffices.
    pub threshold_rank: [Option<BigRational>; 2],
}

/// `[syz^n M] = r_n[R] + (-1)^n C` is in `V` iff `r_n ≥ 1/λ_max`, where
/// `λ_max = min { n·[R] / (-s n·C) : n a facet normal with s n·C < 0 }`.
pub fn syzygy_membership(
    m: &ModuleClass,
    betti: &BettiSequence,
    v: &RationalCone,
    horizon: usize,
) -> Result<SyzygyMembership> {
    let dim = v.ambient_dim();
    let x = m.realify();
    x.check_dim(dim)?;
    let c = x.add_scaled(&-big(m.rank), &rank_axis(dim));
    let ranks = syzygy_rank_profile(m.rank, betti, horizon.saturating_sub(1))?.syzygy;
    let ranks: Vec<u64> = ranks.into_iter().take(horizon).collect();
    let mut members = Vec::with_capacity(ranks.len());
    for (n, &r) in ranks.iter().enumerate() {
        let point = if n % 2 == 0 {
            c.add_scaled(&big(r), &rank_axis(dim))
        } else {
            (-&c).add_scaled(&big(r), &rank_axis(dim))
        };
        members.push(v.contains(&point)?);
    }
    let normals = &v.facets().normals;
    let threshold = |sign: i64| -> Option<BigRational> {
        let s = BigRational::from_integer(sign.into());
        let mut lambda: Option<BigRational> = None;
        for nrm in normals {
            let sc = &s * nrm.dot(&c);
            if sc.is_negative() {
                let l = nrm.coords()[0].clone() / -sc;
                if lambda.as_ref().is_none_or(|cur| &l < cur) {
                    lambda = Some(l);
                }
            }
        }
        match lambda {
            None => Some(BigRational::zero()),
            Some(l) if l.is_positive() => Some(l.recip()),
            Some(_) => None,
        }
    };
    Ok(SyzygyMembership {
        ranks,
        members,
        threshold_rank: [threshold(1), threshold(-1)],
    })
}

/// Renders index sets as maximal runs, e.g. `{2..=9, 12}`.
pub fn format_index_runs(indices: &[usize]) -> String {
    let mut runs: Vec<String> = Vec::new();
    let mut i = 0;
    while i < indices.len() {
        let start = indices[i];
        let mut end = start;
        while i + 1 < indices.len() && indices[i + 1] == end + 1 {
            i += 1;
            end = indices[i];
        }
        runs.push(if start == end {
            start.to_string()
        } else {
            format!("{start}..={end}")
        });
        i += 1;
    }
    format!("{{{}}}", runs.join(", "))
}

pub fn syzygy_entry_indices(
    m: &ModuleClass,
    betti: &BettiSequence,
    v: &RationalCone,
    horizon: usize,
) -> Result<TheoremReport> {
    let mut report = TheoremReport::new(
        "t11",
        "when [R] is interior to a polyhedral subcone V and the syzygy ranks are unbounded, \
         infinitely many syzygy classes lie in V",
    );
    report
        .parameter("class", &m.label)
        .parameter("horizon", horizon)
        .parameter("subcone", vector_list(v.generators()));
    let dim = v.ambient_dim();
    if !v.interior_contains(&rank_axis(dim))? {
        return Ok(report.finish(Verdict::NotApplicable, "[R] is not an interior point of V"));
    }
    let cx = complexity_lower_bound(betti);
    report.witness("complexity", &cx);
    if let Complexity::Exact(c) = cx {
        if c < 2 {
            return Ok(report.finish(
                Verdict::NotApplicable,
                "syzygy ranks stay bounded (complexity below 2)",
            ));
        }
    }
    let scan = syzygy_membership(m, betti, v, horizon)?;
    let members: Vec<usize> = (0..scan.members.len()).filter(|&n| scan.members[n]).collect();
    report
        .witness("membership", format_index_runs(&members))
        .witness("scanned", scan.members.len());
    for (parity, t) in ["even", "odd"].iter().zip(&scan.threshold_rank) {
        report.witness(
            &format!("threshold_rank_{parity}"),
            t.as_ref().map_or_else(|| "none".to_string(), ToString::to_string),
        );
    }
    // Replay: the facet threshold must predict every membership bit.
    for (n, (&r, &inside)) in scan.ranks.iter().zip(&scan.members).enumerate() {
        let predicted = r == 0
            || scan.threshold_rank[n % 2]
                .as_ref()
                .is_some_and(|t| big(r) >= *t);
        if predicted != inside {
            report.witness("mismatch_index", n);
            return Ok(report.finish(
                Verdict::Violated,
                format!("facet threshold and direct membership disagree at n = {n}"),
            ));
        }
    }
    for parity in 0..2 {
        let entry = (0..scan.members.len())
            .filter(|n| n % 2 == parity)
            .rev()
            .take_while(|&n| scan.members[n])
            .last();
        let name = if parity == 0 { "entry_index_even" } else { "entry_index_odd" };
        report.witness(name, entry.map_or_else(|| "none".to_string(), |n| n.to_string()));
    }
    Ok(if members.is_empty() {
        report.finish(
            Verdict::NotApplicable,
            "threshold rank not reached within the horizon",
        )
    } else {
        report.finish(
            Verdict::Holds,
            format!(
                "syzygy classes lie in V at indices {}; ranks grow without bound so the set is infinite",
                format_index_runs(&members)
            ),
        )
    })
}

// ---------------------------------------------------------------------------
// Divisor lines

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Assumption {
    GorensteinIdeal,
    HeightOne,
    Rigid,
    NonPrincipal,
    LocallyFreePunctured,
    DimensionAtLeastThree,
}

impl Assumption {
    pub fn name(self) -> &'static str {
        match self {
            Assumption::GorensteinIdeal => "gorenstein_ideal",
            Assumption::HeightOne => "height_one",
            Assumption::Rigid => "rigid",
            Assumption::NonPrincipal => "non_principal",
            Assumption::LocallyFreePunctured => "locally_free_punctured",
            Assumption::DimensionAtLeastThree => "dimension_at_least_three",
        }
    }
}

/// The points `J + nI` of the class group, with the `n` declared MCM.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorLine {
    pub name: String,
    /// `J`, a divisor class.
    pub base: GroupElement,
    /// `I`, a divisor class.
    pub direction: GroupElement,
    pub declared_mcm: BTreeSet<i64>,
    #[serde(default)]
    pub assumptions: BTreeSet<Assumption>,
    #[serde(default)]
    pub provenance: String,
}

impl DivisorLine {
    fn missing(&self, needed: &[Assumption]) -> Vec<&'static str> {
        needed
            .iter()
            .filter(|a| !self.assumptions.contains(a))
            .map(|a| a.name())
            .collect()
    }
}

/// One relation `[(1)] + [(-n)] = [(0)] + [(-n+1)]` where `(k)` is the rank
/// one reflexive module of class `kI`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkRelation {
    pub n: i64,
    pub lhs: ModuleClass,
    pub rhs: ModuleClass,
}

/// Class of the rank-one reflexive module with divisor class `k · I`.
pub fn divisor_point_class(k: i64, direction: &GroupElement, ring: &RingDescriptor) -> Result<ModuleClass> {
    let group = ring.kernel_group()?;
    let divisor = group.scale(&BigInt::from(k), direction)?;
    Ok(ModuleClass::new(format!("({k})"), 1, kernel_of_divisor(&divisor, ring)?))
}

pub fn walk_relations(line: &DivisorLine, ring: &RingDescriptor, depth: u64) -> Result<Vec<WalkRelation>> {
    let group = ring.kernel_group()?;
    let one = divisor_point_class(1, &line.direction, ring)?;
    let zero = divisor_point_class(0, &line.direction, ring)?;
    (1..=depth as i64)
        .map(|n| {
            let minus_n = divisor_point_class(-n, &line.direction, ring)?;
            let minus_n1 = divisor_point_class(1 - n, &line.direction, ring)?;
            Ok(WalkRelation {
                n,
                lhs: one.direct_sum(&minus_n, &group)?,
                rhs: zero.direct_sum(&minus_n1, &group)?,
            })
        })
        .collect()
}

pub const WALK_CONCLUSION: [i64; 3] = [-1, 0, 1];

/// Walk depth reaching every declared point, and at least 2.
pub fn walk_depth(line: &DivisorLine) -> u64 {
    line.declared_mcm.iter().map(|n| n.unsigned_abs()).max().unwrap_or(0).max(2)
}

pub fn divisor_walk(line: &DivisorLine, ring: &RingDescriptor, depth: u64) -> Result<TheoremReport> {
    let mut report = TheoremReport::new(
        "t3",
        "MCM points on the line of a rigid, non-principal, height-one Gorenstein ideal \
         over a Gorenstein normal ring are exactly -1, 0, 1",
    );
    report
        .parameter("line", &line.name)
        .parameter("depth", depth)
        .parameter("declared_mcm", join(&line.declared_mcm.iter().collect::<Vec<_>>()));
    let missing = line.missing(&[
        Assumption::GorensteinIdeal,
        Assumption::HeightOne,
        Assumption::Rigid,
        Assumption::NonPrincipal,
    ]);
    let mut ring_missing: Vec<&str> = [RingFlag::Gorenstein, RingFlag::Normal]
        .iter()
        .filter(|f| !ring.has(**f))
        .map(|f| f.name())
        .collect();
    if !missing.is_empty() || !ring_missing.is_empty() {
        let mut all = missing;
        all.append(&mut ring_missing);
        report.witness("missing_assumptions", all.join(", "));
        return Ok(report.finish(Verdict::NotApplicable, "hypotheses not declared"));
    }
    if !line.base.is_zero() {
        report.witness("base", &line.base);
        return Ok(report.finish(Verdict::NotApplicable, "the walk concerns lines through 0"));
    }
    let group = ring.kernel_group()?;
    group.check(&line.direction)?;

    let relations = walk_relations(line, ring, depth.max(1))?;
    for rel in &relations {
        if !rel.lhs.same_class(&rel.rhs) {
            report.witness("failed_relation", rel.n);
            return Ok(report.finish(
                Verdict::Violated,
                format!("class relation fails at n = {}", rel.n),
            ));
        }
        report.witness(
            &format!("relation_{}", rel.n),
            format!(
                "[(1)] + [({})] = [(0)] + [({})] = {}",
                -rel.n,
                1 - rel.n,
                rel.lhs.realify()
            ),
        );
    }
    // At n = 1 the relation is the dual-class identity for (1).
    let one = divisor_point_class(1, &line.direction, ring)?;
    let dual = dual_class(&one, &group)?;
    let minus_one = divisor_point_class(-1, &line.direction, ring)?;
    let twice_free = ModuleClass::free("2R", 2, &group);
    let matches_dual = dual.same_class(&minus_one)
        && one.direct_sum(&dual, &group)?.same_class(&twice_free)
        && relations[0].lhs.same_class(&twice_free);
    report.witness(
        "n1_equals_dual_identity",
        if matches_dual { "holds" } else { "violated" },
    );
    if !matches_dual {
        return Ok(report.finish(Verdict::Violated, "relation at n = 1 is not the dual-class identity"));
    }
    report.witness("conclusion_set", join(&WALK_CONCLUSION));
    let mut outside: Vec<i64> = line
        .declared_mcm
        .iter()
        .copied()
        .filter(|n| !WALK_CONCLUSION.contains(n))
        .collect();
    outside.sort_by_key(|n| (n.abs(), *n));
    if let Some(&n) = outside.first() {
        report
            .witness("cited_index", n)
            .witness("outside_conclusion", join(&outside));
        return Ok(report.finish(
            Verdict::Violated,
            format!("declared MCM point n = {n} contradicts the conclusion set {{-1, 0, 1}}"),
        ));
    }
    let undeclared: Vec<i64> = WALK_CONCLUSION
        .iter()
        .copied()
        .filter(|n| !line.declared_mcm.contains(n))
        .collect();
    if !undeclared.is_empty() {
        report.witness("not_declared", join(&undeclared));
    }
    Ok(report.finish(Verdict::Holds, "MCM points on the line are n = -1, 0, 1"))
}

/// Interval property of MCM points on `J + ZI` and the exclusion of `±2`.
pub fn line_constraints_check(line: &DivisorLine) -> TheoremReport {
    let mut report = TheoremReport::new(
        "line",
        "declared MCM indices on a divisor line form an integer interval through 0, \
         and a non-principal direction never has both +2 and -2 declared",
    );
    report
        .parameter("line", &line.name)
        .parameter("declared_mcm", join(&line.declared_mcm.iter().collect::<Vec<_>>()));
    let missing = line.missing(&[
        Assumption::GorensteinIdeal,
        Assumption::HeightOne,
        Assumption::LocallyFreePunctured,
        Assumption::DimensionAtLeastThree,
    ]);
    if !missing.is_empty() {
        report.witness("missing_assumptions", missing.join(", "));
        return report.finish(Verdict::NotApplicable, "hypotheses not declared");
    }
    let declared = &line.declared_mcm;
    let mut failures = Vec::new();
    if let Some(&max) = declared.iter().filter(|n| **n >= 0).max() {
        if let Some(gap) = (0..=max).find(|i| !declared.contains(i)) {
            report.witness("interval_gap_positive", gap);
            failures.push(format!("J + {max}I declared but J + {gap}I is not"));
        }
    }
    if let Some(&min) = declared.iter().filter(|n| **n <= 0).min() {
        if let Some(gap) = (min..=0).rev().find(|i| !declared.contains(i)) {
            report.witness("interval_gap_negative", gap);
            failures.push(format!("J - {}I declared but J - {}I is not", -min, -gap));
        }
    }
    if declared.contains(&2) && declared.contains(&-2) && line.assumptions.contains(&Assumption::NonPrincipal) {
        report.witness("plus_minus_two", "[-2, 2]");
        failures.push("J + 2I and J - 2I both declared".to_string());
    }
    if failures.is_empty() {
        report.finish(Verdict::Holds, "declared MCM points form an interval through 0 and avoid +-2 together")
    } else {
        report.finish(Verdict::Violated, failures.join("; "))
    }
}

// ---------------------------------------------------------------------------
// χ half-space

pub fn chi_halfspace_report(
    functional: &RationalVector,
    classes: &[ModuleClass],
    probe: &GroupElement,
    ring: &RingDescriptor,
) -> Result<TheoremReport> {
    let dim = ring.real_dim();
    functional.check_dim(dim)?;
    let mut report = TheoremReport::new(
        "chi",
        "a functional chi(L, -) that is nonnegative on every maximal Cohen-Macaulay class \
         keeps the cone closure in its half-space; a kernel class with negative value is excluded",
    );
    report
        .parameter("functional", functional)
        .parameter("probe", probe);
    for m in classes {
        let x = m.realify();
        x.check_dim(dim)?;
        let value = functional.dot(&x);
        if value.is_negative() {
            return Err(Error::DataInconsistency(format!(
                "class `{}` has chi = {value} < 0, but maximal Cohen-Macaulay classes satisfy chi >= 0",
                m.label
            )));
        }
        report.witness(&format!("chi[{}]", m.label), value);
    }
    let mut probe_point = vec![BigRational::zero()];
    probe_point.extend(realify(probe).into_coords());
    let probe_point = RationalVector::new(probe_point);
    probe_point.check_dim(dim)?;
    let value = functional.dot(&probe_point);
    report.witness("chi[probe]", &value);
    if !value.is_negative() {
        return Ok(report.finish(
            Verdict::NotApplicable,
            "probe has chi >= 0: the one-sided test gives no conclusion",
        ));
    }
    report
        .witness("probe_excluded", format!("{probe_point} is outside the closed cone"))
        .witness("rank_zero_section", "a proper subspace of k(R)_R");
    let conclusion = if ring.zeta == 1 {
        report.witness(
            "finiteness",
            "k(R)_R is one-dimensional, so the section is {0} and each rank-r slice is bounded",
        );
        "probe excluded; the closed cone meets k(R)_R only in 0, so every rank-r slice is bounded"
    } else {
        "probe excluded; the closed cone meets k(R)_R in a proper subspace"
    };
    Ok(report.finish(Verdict::Holds, conclusion))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational;

    fn plane_ring() -> RingDescriptor {
        RingDescriptor::new(
            "plane",
            1,
            vec![],
            [RingFlag::Domain, RingFlag::Normal, RingFlag::CohenMacaulay, RingFlag::Gorenstein],
        )
        .unwrap()
    }

    fn class(label: &str, rank: u64, t: i64) -> ModuleClass {
        ModuleClass::new(label, rank, GroupElement::from_i64(&[t], &[])).declared_mcm(true)
    }

    fn quadric_classes() -> Vec<ModuleClass> {
        vec![class("R", 1, 0), class("p", 1, -1), class("p*", 1, 1)]
    }

    fn line(declared: &[i64], assumptions: &[Assumption]) -> DivisorLine {
        DivisorLine {
            name: "test".into(),
            base: GroupElement::from_i64(&[0], &[]),
            direction: GroupElement::from_i64(&[1], &[]),
            declared_mcm: declared.iter().copied().collect(),
            assumptions: assumptions.iter().copied().collect(),
            provenance: String::new(),
        }
    }

    const ALL: [Assumption; 6] = [
        Assumption::GorensteinIdeal,
        Assumption::HeightOne,
        Assumption::Rigid,
        Assumption::NonPrincipal,
        Assumption::LocallyFreePunctured,
        Assumption::DimensionAtLeastThree,
    ];

    #[test]
    fn chain_on_quadric_classes() {
        let r = chain_report(&quadric_classes(), 1, &plane_ring()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds, "{}", r.render_text());
        assert_eq!(r.get("slice_diameter_sq"), Some("4"));
        assert_eq!(r.get("slice_vertices"), Some("[[1, -1], [1, 1]]"));
    }

    #[test]
    fn chain_single_class_and_errors() {
        let r = chain_report(&[class("R", 1, 0)], 1, &plane_ring()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(matches!(
            chain_report(&[class("R2", 2, 0)], 1, &plane_ring()),
            Err(Error::RankMismatch { .. })
        ));
        let undeclared = ModuleClass::new("x", 1, GroupElement::from_i64(&[0], &[]));
        assert!(matches!(
            chain_report(&[undeclared], 1, &plane_ring()),
            Err(Error::NotDeclaredMcm(_))
        ));
    }

    #[test]
    fn chain_conditions_on_unbounded_cone() {
        let cone = RationalCone::from_integer_generators(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let c = chain_conditions(&cone, 0, &rational(1)).unwrap();
        assert!(!c.section_trivial() && !c.slice_bounded() && c.strongly_convex());
        assert!(c.consistent());
    }

    fn plane_group() -> GroupPresentation {
        GroupPresentation::free(1)
    }

    #[test]
    fn linear_stream_diverges_at_ten() {
        let s = LinearStream {
            base: class("R", 1, 0),
            step: GroupElement::from_i64(&[1], &[]),
            group: plane_group(),
        };
        let r = stream_divergence_monitor(&s, 1, 1000, &rational(10)).unwrap();
        assert_eq!(r.verdict, Verdict::Violated);
        assert_eq!(r.get("index"), Some("10"));
        assert_eq!(r.get("direction"), Some("[0, 1]"));
        assert_eq!(r.get("delta_sq"), Some("100"));
    }

    #[test]
    fn bounded_streams() {
        let alt = AlternatingStream {
            base: class("R", 1, 0),
            step: GroupElement::from_i64(&[1], &[]),
            group: plane_group(),
        };
        let r = stream_divergence_monitor(&alt, 1, 1000, &rational(10)).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.get("max_squared_norm"), Some("2"));
        let constant = LinearStream {
            base: class("R", 1, 0),
            step: GroupElement::from_i64(&[0], &[]),
            group: plane_group(),
        };
        let r = stream_divergence_monitor(&constant, 1, 50, &rational(1)).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(stream_divergence_monitor(&constant, 2, 5, &rational(1)).is_err());
        assert!(stream_divergence_monitor(&constant, 1, 0, &rational(1)).is_err());
    }

    #[test]
    fn separation() {
        let r = lattice_separation(&[class("R", 1, 0), class("R+t", 1, 1), class("R'", 1, 0)]).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.get("min_squared_distance"), Some("1"));
        let k = GroupPresentation::new(0, vec![4.into()]).unwrap();
        let a = ModuleClass::free("R", 1, &k);
        let b = ModuleClass::new("R+s", 1, k.element_i64(&[], &[1]).unwrap());
        let r = lattice_separation(&[a, b]).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.get("torsion_collapse"), Some("R ~ R+s"));
    }

    #[test]
    fn symmetry() {
        let ring = plane_ring();
        assert_eq!(symmetry_check(&quadric_classes(), &ring).unwrap().verdict, Verdict::Holds);
        assert_eq!(symmetry_check(&[class("R", 1, 0)], &ring).unwrap().verdict, Verdict::Holds);
        let r = symmetry_check(&[class("R", 1, 0), class("R+t", 1, 1)], &ring).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
        assert!(r.get("missing_duals").unwrap().contains("R+t"));
    }

    #[test]
    fn boundary_rank_criterion() {
        let r = syzygy_boundary_check(1, &BettiSequence::constant(2), 20).unwrap();
        assert!(r.conclusion.starts_with("necessary condition holds"));
        let r = syzygy_boundary_check(2, &BettiSequence::constant(3), 20).unwrap();
        assert_eq!(r.get("first_dip_index"), Some("1"));
        assert!(r.conclusion.contains("interior"));
        let free = syzygy_boundary_check(2, &BettiSequence::prefix(vec![2, 0, 0]), 5).unwrap();
        assert_eq!(free.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn entry_indices() {
        let v = RationalCone::from_integer_generators(2, &[vec![1, 1], vec![1, -1]]).unwrap();
        let m = ModuleClass::new("m", 1, GroupElement::from_i64(&[3], &[]));
        let betti = BettiSequence::polynomial(vec![3, 2]);
        let r = syzygy_entry_indices(&m, &betti, &v, 50).unwrap();
        assert_eq!(r.verdict, Verdict::Holds, "{}", r.render_text());
        assert_eq!(r.get("membership"), Some("{2..=49}"));
        assert_eq!(r.get("threshold_rank_even"), Some("3"));
        assert_eq!(r.get("threshold_rank_odd"), Some("3"));

        let axis = ModuleClass::new("R", 1, GroupElement::from_i64(&[0], &[]));
        let r = syzygy_entry_indices(&axis, &betti, &v, 10).unwrap();
        assert_eq!(r.get("membership"), Some("{0..=9}"));

        let ray = RationalCone::from_integer_generators(2, &[vec![1, 0]]).unwrap();
        assert_eq!(
            syzygy_entry_indices(&m, &betti, &ray, 10).unwrap().verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn index_runs() {
        assert_eq!(format_index_runs(&[]), "{}");
        assert_eq!(format_index_runs(&[1, 2, 3, 5, 7, 8]), "{1..=3, 5, 7..=8}");
    }

    #[test]
    fn walk() {
        let ring = plane_ring();
        let r = divisor_walk(&line(&[-1, 0, 1], &ALL), &ring, 3).unwrap();
        assert_eq!(r.verdict, Verdict::Holds, "{}", r.render_text());
        assert_eq!(r.get("conclusion_set"), Some("[-1, 0, 1]"));
        assert_eq!(r.get("n1_equals_dual_identity"), Some("holds"));
        let r = divisor_walk(&line(&[-1, 0, 1, 2], &ALL), &ring, 3).unwrap();
        assert_eq!(r.verdict, Verdict::Violated);
        assert_eq!(r.get("cited_index"), Some("2"));
        let r = divisor_walk(&line(&[-1, 0, 1], &[Assumption::HeightOne]), &ring, 3).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn walk_relations_hold_in_the_group() {
        let rels = walk_relations(&line(&[], &ALL), &plane_ring(), 5).unwrap();
        assert_eq!(rels.len(), 5);
        assert!(rels.iter().all(|r| r.lhs.same_class(&r.rhs)));
    }

    #[test]
    fn line_constraints() {
        let assumptions = [
            Assumption::GorensteinIdeal,
            Assumption::HeightOne,
            Assumption::LocallyFreePunctured,
            Assumption::DimensionAtLeastThree,
            Assumption::NonPrincipal,
        ];
        assert_eq!(line_constraints_check(&line(&[-1, 0, 1, 2, 3], &assumptions)).verdict, Verdict::Holds);
        let gap = line_constraints_check(&line(&[0, 3], &assumptions));
        assert_eq!(gap.verdict, Verdict::Violated);
        assert_eq!(gap.get("interval_gap_positive"), Some("1"));
        let pm2 = line_constraints_check(&line(&[-2, 0, 2], &assumptions));
        assert_eq!(pm2.verdict, Verdict::Violated);
        assert_eq!(pm2.get("plus_minus_two"), Some("[-2, 2]"));
        let only_pm2 = line_constraints_check(&line(&[-2, -1, 0, 1, 2], &assumptions));
        assert_eq!(only_pm2.get("interval_gap_positive"), None);
        assert_eq!(only_pm2.get("plus_minus_two"), Some("[-2, 2]"));
        assert_eq!(
            line_constraints_check(&line(&[0], &[Assumption::HeightOne])).verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn chi() {
        let ring = plane_ring();
        let f = RationalVector::from_integers([15, -1]);
        let probe = GroupElement::from_i64(&[1], &[]);
        let r = chi_halfspace_report(&f, &quadric_classes(), &probe, &ring).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.get("chi[probe]"), Some("-1"));
        assert!(r.get("finiteness").is_some());

        let zero = RationalVector::zeros(2);
        assert_eq!(
            chi_halfspace_report(&zero, &quadric_classes(), &probe, &ring).unwrap().verdict,
            Verdict::NotApplicable
        );
        let positive = GroupElement::from_i64(&[-1], &[]);
        assert_eq!(
            chi_halfspace_report(&f, &quadric_classes(), &positive, &ring).unwrap().verdict,
            Verdict::NotApplicable
        );
        let bad = RationalVector::from_integers([0, 1]);
        assert!(matches!(
            chi_halfspace_report(&bad, &quadric_classes(), &probe, &ring),
            Err(Error::DataInconsistency(_))
        ));
    }
}
