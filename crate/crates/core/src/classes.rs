//! Module classes in `h(R) = Z[R] ⊕ k(R)`.
//!
//! A class is stored as `rank · [R] + kernel_part` where `kernel_part` lives in
//! the presented group `k(R)`. Realification drops torsion and yields the
//! vector `(rank, free_part…)` in the basis `[R], [Φ_1], …, [Φ_ζ]`.
//!
//! Convention for the determinant: the `k(R)` basis consists of torsion
//! classes `[Φ_i]` with `cl(Φ_i) = -D_i`, where `D_i` is the matching basis
//! divisor of `Cl(R)`. So `cl` is negation in coordinates and
//! `cl(R/p) = -p` when `[Φ] = [R/p]`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{realify, GroupElement, GroupPresentation};
use crate::linalg::{RationalMatrix, RationalVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RingFlag {
    Domain,
    Normal,
    CohenMacaulay,
    Gorenstein,
    IsolatedSingularity,
    CanonicalModule,
    /// Declared: finitely many indecomposable MCM modules up to isomorphism.
    FiniteCmType,
}

impl RingFlag {
    pub fn name(self) -> &'static str {
        match self {
            RingFlag::Domain => "domain",
            RingFlag::Normal => "normal",
            RingFlag::CohenMacaulay => "cohen_macaulay",
            RingFlag::Gorenstein => "gorenstein",
            RingFlag::IsolatedSingularity => "isolated_singularity",
            RingFlag::CanonicalModule => "canonical_module",
            RingFlag::FiniteCmType => "finite_cm_type",
        }
    }
}

/// Declared invariants of a ring. Nothing here is computed from equations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDescriptor {
    pub name: String,
    /// Free rank of `k(R)`.
    pub zeta: usize,
    #[serde(with = "crate::format::bigint_list", default)]
    pub torsion_orders: Vec<BigInt>,
    pub flags: BTreeSet<RingFlag>,
    /// `[ω] - [R]` in `k(R)`; implied zero for Gorenstein rings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_kernel_part: Option<GroupElement>,
    #[serde(default)]
    pub provenance: String,
}

impl RingDescriptor {
    pub fn new(
        name: impl Into<String>,
        zeta: usize,
        torsion_orders: Vec<BigInt>,
        flags: impl IntoIterator<Item = RingFlag>,
    ) -> Result<Self> {
        let ring = RingDescriptor {
            name: name.into(),
            zeta,
            torsion_orders,
            flags: flags.into_iter().collect(),
            omega_kernel_part: None,
            provenance: String::new(),
        };
        ring.validate()?;
        Ok(ring)
    }

    pub fn with_omega(mut self, omega: GroupElement) -> Result<Self> {
        self.omega_kernel_part = Some(omega);
        self.flags.insert(RingFlag::CanonicalModule);
        self.validate()?;
        Ok(self)
    }

    pub fn with_provenance(mut self, text: impl Into<String>) -> Self {
        self.provenance = text.into();
        self
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.kernel_group()?;
        if let Some(w) = &self.omega_kernel_part {
            k.check(w)?;
            if self.has(RingFlag::Gorenstein) && !w.is_zero() {
                return Err(Error::DataInconsistency(format!(
                    "ring `{}` is Gorenstein but declares a nonzero canonical class {w}",
                    self.name
                )));
            }
        }
        Ok(())
    }

    pub fn has(&self, flag: RingFlag) -> bool {
        self.flags.contains(&flag)
    }

    /// The presented group `k(R) ≅ Z^ζ ⊕ ⊕ Z/θ_j`.
    pub fn kernel_group(&self) -> Result<GroupPresentation> {
        GroupPresentation::new(self.zeta, self.torsion_orders.clone())
    }

    /// Dimension of `h(R)_R`.
    pub fn real_dim(&self) -> usize {
        self.zeta + 1
    }

    pub fn has_canonical_module(&self) -> bool {
        self.has(RingFlag::Gorenstein) || self.has(RingFlag::CanonicalModule)
    }

    /// Kernel part of `[ω]`, when a canonical module is available.
    pub fn omega(&self) -> Result<GroupElement> {
        if self.has(RingFlag::Gorenstein) {
            return Ok(self.kernel_group()?.zero());
        }
        match (&self.omega_kernel_part, self.has(RingFlag::CanonicalModule)) {
            (Some(w), true) => Ok(w.clone()),
            _ => Err(Error::MissingCanonicalClass(self.name.clone())),
        }
    }

    fn require(&self, flag: RingFlag) -> Result<()> {
        if self.has(flag) {
            Ok(())
        } else {
            Err(Error::MissingRingProperty {
                ring: self.name.clone(),
                flag: flag.name(),
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleClass {
    pub label: String,
    pub rank: u64,
    #[serde(flatten)]
    pub kernel_part: GroupElement,
    /// Declared, never inferred.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mcm: Option<bool>,
}

impl ModuleClass {
    pub fn new(label: impl Into<String>, rank: u64, kernel_part: GroupElement) -> Self {
        ModuleClass {
            label: label.into(),
            rank,
            kernel_part,
            mcm: None,
        }
    }

    pub fn declared_mcm(mut self, mcm: bool) -> Self {
        self.mcm = Some(mcm);
        self
    }

    /// `r[R]` for the free module of rank `r`.
    pub fn free(label: impl Into<String>, rank: u64, k: &GroupPresentation) -> Self {
        ModuleClass::new(label, rank, k.zero()).declared_mcm(true)
    }

    /// `(rank, free_part…)` in `h(R)_R`.
    pub fn realify(&self) -> RationalVector {
        let mut coords = vec![BigRational::from_integer(BigInt::from(self.rank))];
        coords.extend(realify(&self.kernel_part).into_coords());
        RationalVector::new(coords)
    }

    /// Same element of `h(R)` (labels ignored).
    pub fn same_class(&self, other: &ModuleClass) -> bool {
        self.rank == other.rank && self.kernel_part == other.kernel_part
    }

    /// Class of the direct sum.
    pub fn direct_sum(&self, other: &ModuleClass, k: &GroupPresentation) -> Result<ModuleClass> {
        Ok(ModuleClass::new(
            format!("{} + {}", self.label, other.label),
            self.rank + other.rank,
            k.add(&self.kernel_part, &other.kernel_part)?,
        ))
    }
}

impl fmt::Display for ModuleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: rank {}, kernel {}", self.label, self.rank, self.kernel_part)
    }
}

pub fn rank_functional(m: &ModuleClass) -> u64 {
    m.rank
}

/// First coordinate (the `[R]` basis vector).
pub fn rank_functional_real(x: &RationalVector) -> BigRational {
    x.coords().first().cloned().unwrap_or_else(BigRational::zero)
}

/// Image in `Cl(R)` under the determinant; negation in coordinates.
pub fn determinant(m: &ModuleClass, ring: &RingDescriptor) -> Result<GroupElement> {
    ring.require(RingFlag::Normal)?;
    ring.kernel_group()?.negate(&m.kernel_part)
}

/// Kernel element whose determinant is `divisor`, i.e. the class
/// `[R] - [R/I]` shifted to `k(R)` for `divisor = cl(I)`.
pub fn kernel_of_divisor(divisor: &GroupElement, ring: &RingDescriptor) -> Result<GroupElement> {
    ring.require(RingFlag::Normal)?;
    ring.kernel_group()?.negate(divisor)
}

/// `[M*] = 2r[R] - [M]`: same rank, kernel part negated. Valid for modules
/// locally free in codimension one; that is the caller's declaration.
pub fn dual_class(m: &ModuleClass, k: &GroupPresentation) -> Result<ModuleClass> {
    Ok(ModuleClass {
        label: format!("{}*", m.label),
        rank: m.rank,
        kernel_part: k.negate(&m.kernel_part)?,
        mcm: m.mcm,
    })
}

/// `[M^†] = r([R] + [ω]) - [M]`: kernel part `t ↦ r·w - t`.
pub fn canonical_dual_class(m: &ModuleClass, ring: &RingDescriptor) -> Result<ModuleClass> {
    let k = ring.kernel_group()?;
    let w = ring.omega()?;
    let rw = k.scale(&BigInt::from(m.rank), &w)?;
    Ok(ModuleClass {
        label: format!("{}^dag", m.label),
        rank: m.rank,
        kernel_part: k.sub(&rw, &m.kernel_part)?,
        mcm: m.mcm,
    })
}

/// Matrix of the involution on `h(R)_R` sending `[R] ↦ [ω]` and `t ↦ -t` on
/// `k(R)_R`.
pub fn nu_involution_matrix(ring: &RingDescriptor) -> Result<RationalMatrix> {
    let w = ring.omega()?;
    let n = ring.real_dim();
    let mut m = RationalMatrix::zeros(n, n);
    m.set(0, 0, BigRational::from_integer(BigInt::from(1)));
    for (i, c) in w.free_part.iter().enumerate() {
        m.set(i + 1, 0, BigRational::from_integer(c.clone()));
    }
    for i in 1..n {
        m.set(i, i, BigRational::from_integer(BigInt::from(-1)));
    }
    Ok(m)
}

/// How the Betti numbers `b_0, b_1, …` are known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BettiRanks {
    /// Finitely many known values; nothing is claimed beyond them.
    Prefix { values: Vec<u64> },
    /// `b_i = value` for all `i`.
    Constant { value: u64 },
    /// `b_i = Σ_j coefficients[j] · i^j`.
    Polynomial { coefficients: Vec<i64> },
    /// `b_i = scale · base^i` with `base ≥ 2`.
    Exponential { scale: u64, base: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiSequence {
    #[serde(flatten)]
    pub ranks: BettiRanks,
    /// `β_{-1}, β_{-2}, …` of a totally reflexive module: the Betti numbers of
    /// the dual.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_prefix: Option<Vec<u64>>,
}

impl BettiSequence {
    pub fn prefix(values: Vec<u64>) -> Self {
        BettiSequence {
            ranks: BettiRanks::Prefix { values },
            dual_prefix: None,
        }
    }

    pub fn constant(value: u64) -> Self {
        BettiSequence {
            ranks: BettiRanks::Constant { value },
            dual_prefix: None,
        }
    }

    pub fn polynomial(coefficients: Vec<i64>) -> Self {
        BettiSequence {
            ranks: BettiRanks::Polynomial { coefficients },
            dual_prefix: None,
        }
    }

    pub fn exponential(scale: u64, base: u64) -> Self {
        BettiSequence {
            ranks: BettiRanks::Exponential { scale, base },
            dual_prefix: None,
        }
    }

    pub fn with_dual(mut self, dual: Vec<u64>) -> Self {
        self.dual_prefix = Some(dual);
        self
    }

    /// Number of known values, `None` when unbounded.
    pub fn known_len(&self) -> Option<usize> {
        match &self.ranks {
            BettiRanks::Prefix { values } => Some(values.len()),
            _ => None,
        }
    }

    /// `b_i`, or `None` past the end of a finite prefix.
    pub fn value(&self, i: usize) -> Result<Option<u64>> {
        match &self.ranks {
            BettiRanks::Prefix { values } => Ok(values.get(i).copied()),
            BettiRanks::Constant { value } => Ok(Some(*value)),
            BettiRanks::Polynomial { coefficients } => {
                let x = i as i128;
                let mut acc: i128 = 0;
                for c in coefficients.iter().rev() {
                    acc = acc
                        .checked_mul(x)
                        .and_then(|a| a.checked_add(*c as i128))
                        .ok_or_else(|| overflow(i))?;
                }
                u64::try_from(acc).map(Some).map_err(|_| {
                    Error::InconsistentBetti(format!("polynomial Betti value b_{i} = {acc} is negative"))
                })
            }
            BettiRanks::Exponential { scale, base } => {
                if *base < 2 {
                    return Err(Error::InconsistentBetti(format!(
                        "exponential base must be at least 2, got {base}"
                    )));
                }
                let e = u32::try_from(i).map_err(|_| overflow(i))?;
                base.checked_pow(e)
                    .and_then(|p| p.checked_mul(*scale))
                    .map(Some)
                    .ok_or_else(|| overflow(i))
            }
        }
    }
}

fn overflow(i: usize) -> Error {
    Error::InconsistentBetti(format!("Betti number b_{i} overflows 64 bits"))
}

/// Ranks of syzygies (and cosyzygies, when dual data is present).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    /// `rk syz^0 M, rk syz^1 M, …`
    pub syzygy: Vec<u64>,
    /// `rk syz^0 M, rk syz^{-1} M, …` computed as ranks of syzygies of `M*`.
    pub cosyzygy: Option<Vec<u64>>,
}

fn rank_recursion(rank: u64, betti: impl Fn(usize) -> Result<Option<u64>>, upto: usize) -> Result<Vec<u64>> {
    let mut ranks = vec![rank];
    for k in 0..upto {
        let Some(b) = betti(k)? else { break };
        let r = ranks[k];
        if b < r {
            return Err(Error::InconsistentBetti(format!(
                "rank of syzygy {} would be {b} - {r} < 0",
                k + 1
            )));
        }
        ranks.push(b - r);
    }
    Ok(ranks)
}

/// `r_0 = rank`, `r_{k+1} = b_k - r_k`, for `k < upto` (or until a finite
/// prefix runs out).
pub fn syzygy_rank_profile(rank: u64, betti: &BettiSequence, upto: usize) -> Result<RankProfile> {
    let syzygy = rank_recursion(rank, |k| betti.value(k), upto)?;
    let cosyzygy = match &betti.dual_prefix {
        Some(dual) => Some(rank_recursion(rank, |k| Ok(dual.get(k).copied()), upto)?),
        None => None,
    };
    Ok(RankProfile { syzygy, cosyzygy })
}

/// `[syz^n M] = r_n[R] + (-1)^n [C]` where `[M] = r_0[R] + [C]`.
pub fn syzygy_class(
    m: &ModuleClass,
    betti: &BettiSequence,
    n: usize,
    k: &GroupPresentation,
) -> Result<ModuleClass> {
    let profile = syzygy_rank_profile(m.rank, betti, n)?;
    let rank = *profile.syzygy.get(n).ok_or_else(|| {
        Error::InconsistentBetti(format!(
            "Betti data for `{}` only determines syzygies up to {}",
            m.label,
            profile.syzygy.len() - 1
        ))
    })?;
    let kernel_part = if n.is_multiple_of(2) {
        m.kernel_part.clone()
    } else {
        k.negate(&m.kernel_part)?
    };
    Ok(ModuleClass {
        label: format!("syz^{n}({})", m.label),
        rank,
        kernel_part,
        mcm: None,
    })
}

/// Complexity read off the Betti data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Complexity {
    Exact(u32),
    /// Betti numbers grow faster than any polynomial.
    AtLeastExponential,
    /// Only a finite prefix is known. The value is the least `n` with
    /// `b_i ≤ max(b_1, 1) · i^(n-1)` on the observed range `i ≥ 1`; it says
    /// nothing about the asymptotic growth.
    PrefixOnly { at_least: u32 },
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Complexity::Exact(c) => write!(f, "{c}"),
            Complexity::AtLeastExponential => f.write_str("at least exponential"),
            Complexity::PrefixOnly { at_least } => write!(f, ">= {at_least} (prefix only)"),
        }
    }
}

pub fn complexity_lower_bound(betti: &BettiSequence) -> Complexity {
    match &betti.ranks {
        BettiRanks::Constant { value } => Complexity::Exact(u32::from(*value != 0)),
        BettiRanks::Polynomial { coefficients } => {
            match coefficients.iter().rposition(|c| *c != 0) {
                Some(d) => Complexity::Exact(d as u32 + 1),
                None => Complexity::Exact(0),
            }
        }
        BettiRanks::Exponential { .. } => Complexity::AtLeastExponential,
        BettiRanks::Prefix { values } => {
            let alpha = values.get(1).copied().unwrap_or(0).max(1) as f64;
            let fits = |n: i32| {
                values.iter().enumerate().skip(1).all(|(i, &b)| {
                    let bound = alpha * (i as f64).powi(n - 1);
                    (b as f64) <= bound * (1.0 + 1e-12)
                })
            };
            let mut n = 0;
            while !fits(n) {
                n += 1;
            }
            Complexity::PrefixOnly { at_least: n as u32 }
        }
    }
}

/// A linear map `h(S)_R → h(R)_R` supplied as data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionMap {
    pub matrix: RationalMatrix,
    pub declared_injective: bool,
}

impl ExtensionMap {
    /// Checks surjectivity when the extension is declared injective and
    /// finite.
    pub fn new(matrix: RationalMatrix, declared_injective: bool) -> Result<Self> {
        if declared_injective && matrix.rank() != matrix.rows() {
            return Err(Error::DataInconsistency(format!(
                "pushforward of an injective finite extension must be surjective, \
                 but the {}x{} matrix has rank {}",
                matrix.rows(),
                matrix.cols(),
                matrix.rank()
            )));
        }
        Ok(ExtensionMap {
            matrix,
            declared_injective,
        })
    }
}

pub fn pushforward(map: &ExtensionMap, x: &RationalVector) -> Result<RationalVector> {
    map.matrix.mul_vec(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational;

    fn quadric() -> RingDescriptor {
        RingDescriptor::new(
            "quadric",
            1,
            vec![],
            [
                RingFlag::Domain,
                RingFlag::Normal,
                RingFlag::CohenMacaulay,
                RingFlag::Gorenstein,
            ],
        )
        .unwrap()
    }

    #[test]
    fn rank_functionals() {
        let k = GroupPresentation::free(1);
        assert_eq!(rank_functional(&ModuleClass::free("R", 1, &k)), 1);
        let torsion = ModuleClass::new("R/p", 0, k.element_i64(&[1], &[]).unwrap());
        assert_eq!(rank_functional(&torsion), 0);
        // 1·(rank 1) + 2·(rank 3)
        let a = ModuleClass::new("A", 1, k.element_i64(&[2], &[]).unwrap()).realify();
        let b = ModuleClass::new("B", 3, k.element_i64(&[-1], &[]).unwrap()).realify();
        let x = a.add_scaled(&rational(2), &b);
        assert_eq!(rank_functional_real(&x), rational(7));
    }

    #[test]
    fn determinant_of_torsion_quotient_is_minus_the_prime() {
        let ring = quadric();
        let k = ring.kernel_group().unwrap();
        let r_mod_p = ModuleClass::new("R/p", 0, k.element_i64(&[1], &[]).unwrap());
        assert_eq!(determinant(&r_mod_p, &ring).unwrap(), GroupElement::from_i64(&[-1], &[]));
        assert!(determinant(&ModuleClass::free("R", 1, &k), &ring).unwrap().is_zero());
        let twice = ModuleClass::new("2R/p", 0, k.element_i64(&[2], &[]).unwrap());
        assert_eq!(determinant(&twice, &ring).unwrap(), GroupElement::from_i64(&[-2], &[]));

        let mut not_normal = ring.clone();
        not_normal.flags.remove(&RingFlag::Normal);
        assert!(matches!(
            determinant(&r_mod_p, &not_normal),
            Err(Error::MissingRingProperty { .. })
        ));
    }

    #[test]
    fn duals() {
        let k = GroupPresentation::free(1);
        let p = ModuleClass::new("p", 1, k.element_i64(&[1], &[]).unwrap());
        let ps = dual_class(&p, &k).unwrap();
        assert_eq!(ps.kernel_part, GroupElement::from_i64(&[-1], &[]));
        assert_eq!(ps.rank, 1);
        assert!(dual_class(&ps, &k).unwrap().same_class(&p));
        let free = ModuleClass::free("R2", 2, &k);
        assert!(dual_class(&free, &k).unwrap().same_class(&free));
    }

    #[test]
    fn canonical_duals() {
        let ring = quadric();
        let k = ring.kernel_group().unwrap();
        let p = ModuleClass::new("p", 1, k.element_i64(&[1], &[]).unwrap());
        assert!(canonical_dual_class(&p, &ring)
            .unwrap()
            .same_class(&dual_class(&p, &k).unwrap()));

        let cm = RingDescriptor::new("cm", 1, vec![], [RingFlag::Normal, RingFlag::CohenMacaulay])
            .unwrap()
            .with_omega(k.element_i64(&[5], &[]).unwrap())
            .unwrap();
        let t = ModuleClass::new("t", 1, k.element_i64(&[2], &[]).unwrap());
        let td = canonical_dual_class(&t, &cm).unwrap();
        assert_eq!(td.kernel_part, GroupElement::from_i64(&[3], &[]));
        assert!(canonical_dual_class(&td, &cm).unwrap().same_class(&t));

        let bare = RingDescriptor::new("bare", 1, vec![], [RingFlag::Normal]).unwrap();
        assert!(canonical_dual_class(&t, &bare).is_err());
    }

    #[test]
    fn nu_matrix() {
        let ring = quadric();
        let m = nu_involution_matrix(&ring).unwrap();
        assert_eq!(m.to_string(), "[[1, 0], [0, -1]]");
        assert!(m.mul(&m).unwrap().is_identity());

        let k = GroupPresentation::free(2);
        let cm = RingDescriptor::new("cm", 2, vec![], [RingFlag::Normal])
            .unwrap()
            .with_omega(k.element_i64(&[1, -3], &[]).unwrap())
            .unwrap();
        let m = nu_involution_matrix(&cm).unwrap();
        assert!(m.mul(&m).unwrap().is_identity());
        let omega = ModuleClass::new("w", 1, cm.omega().unwrap()).realify();
        assert_eq!(m.mul_vec(&omega).unwrap(), RationalVector::unit(3, 0));
    }

    #[test]
    fn gorenstein_rejects_nonzero_omega() {
        let k = GroupPresentation::free(1);
        assert!(quadric().with_omega(k.element_i64(&[1], &[]).unwrap()).is_err());
    }

    #[test]
    fn syzygy_examples() {
        let k = GroupPresentation::free(1);
        let p = ModuleClass::new("p", 1, k.element_i64(&[1], &[]).unwrap());
        let two = BettiSequence::constant(2);
        assert!(syzygy_class(&p, &two, 0, &k).unwrap().same_class(&p));
        for n in 0..6 {
            let s = syzygy_class(&p, &two, n, &k).unwrap();
            assert_eq!(s.rank, 1);
            let expect = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(s.kernel_part, GroupElement::from_i64(&[expect], &[]));
        }

        // b = (3, 4, 5, …) starting from rank 1
        let linear = BettiSequence::polynomial(vec![3, 1]);
        let ranks = syzygy_rank_profile(1, &linear, 5).unwrap().syzygy;
        assert_eq!(ranks, vec![1, 2, 2, 3, 3, 4]);
        let s3 = syzygy_class(&p, &linear, 3, &k).unwrap();
        assert_eq!(s3.kernel_part, GroupElement::from_i64(&[-1], &[]));
    }

    #[test]
    fn rank_profiles() {
        assert_eq!(
            syzygy_rank_profile(1, &BettiSequence::constant(2), 4).unwrap().syzygy,
            vec![1, 1, 1, 1, 1]
        );
        assert_eq!(
            syzygy_rank_profile(3, &BettiSequence::prefix(vec![3]), 10).unwrap().syzygy,
            vec![3, 0]
        );
        assert_eq!(
            syzygy_rank_profile(2, &BettiSequence::constant(3), 4).unwrap().syzygy,
            vec![2, 1, 2, 1, 2]
        );
        let with_dual = BettiSequence::constant(2).with_dual(vec![2, 2, 2]);
        let prof = syzygy_rank_profile(1, &with_dual, 5).unwrap();
        assert_eq!(prof.cosyzygy, Some(vec![1, 1, 1, 1]));
    }

    #[test]
    fn inconsistent_betti_is_rejected() {
        assert!(matches!(
            syzygy_rank_profile(3, &BettiSequence::prefix(vec![2]), 3),
            Err(Error::InconsistentBetti(_))
        ));
    }

    #[test]
    fn complexities() {
        assert_eq!(complexity_lower_bound(&BettiSequence::constant(2)), Complexity::Exact(1));
        assert_eq!(
            complexity_lower_bound(&BettiSequence::polynomial(vec![3, 1])),
            Complexity::Exact(2)
        );
        assert_eq!(
            complexity_lower_bound(&BettiSequence::exponential(1, 2)),
            Complexity::AtLeastExponential
        );
        assert_eq!(
            complexity_lower_bound(&BettiSequence::prefix(vec![1, 2, 4, 8])),
            Complexity::PrefixOnly { at_least: 3 }
        );
    }

    #[test]
    fn pushforwards() {
        let id = ExtensionMap::new(RationalMatrix::identity(2), true).unwrap();
        let x = RationalVector::from_integers([3, -1]);
        assert_eq!(pushforward(&id, &x).unwrap(), x);
        // [S] ↦ 2[R] + [C], [Φ] ↦ [Φ]
        let doubling =
            ExtensionMap::new(RationalMatrix::from_integer_rows(&[vec![2, 0], vec![1, 1]]).unwrap(), true)
                .unwrap();
        assert_eq!(
            pushforward(&doubling, &RationalVector::unit(2, 0)).unwrap(),
            RationalVector::from_integers([2, 1])
        );
        assert!(pushforward(&doubling, &RationalVector::zeros(2)).unwrap().is_zero());
        let singular = RationalMatrix::from_integer_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(matches!(
            ExtensionMap::new(singular.clone(), true),
            Err(Error::DataInconsistency(_))
        ));
        assert!(ExtensionMap::new(singular, false).is_ok());
    }
}
