//! Exact polyhedral cones over the rationals.
//!
//! A [`RationalCone`] is stored by generators (the V-description). The
//! H-description (inward facet normals plus the equations of the linear span)
//! is computed on demand by the double description method and cached.
//!
//! Canonical forms, so that output is stable:
//! * generators are primitive integer vectors, deduplicated in input order;
//! * facet normals are primitive integer vectors lying in the linear span of
//!   the cone, sorted lexicographically;
//! * span equations are the echelon kernel basis of the generator matrix,
//!   primitive and sorted lexicographically.

use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{orthogonal_basis, project_away, rank_of, RationalMatrix, RationalVector};

/// H-description: `x ∈ C ⇔ n·x ≥ 0 ∀ normals ∧ e·x = 0 ∀ equations`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetDescription {
    pub normals: Vec<RationalVector>,
    pub equations: Vec<RationalVector>,
}

#[derive(Clone, Debug)]
pub struct RationalCone {
    ambient_dim: usize,
    generators: Vec<RationalVector>,
    facets: OnceLock<FacetDescription>,
}

/// Result of slicing a cone by `{x : x[coord] = level}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LevelSet {
    /// Vertices of the (possibly empty) bounded slice and its squared diameter.
    Bounded {
        vertices: Vec<RationalVector>,
        diameter_sq: BigRational,
    },
    /// A nonzero cone direction with `x[coord] = 0`; the slice recedes along it.
    Unbounded { direction: RationalVector },
}

impl LevelSet {
    pub fn is_bounded(&self) -> bool {
        matches!(self, LevelSet::Bounded { .. })
    }
}

impl RationalCone {
    /// Cone spanned by `generators`. Zero vectors are dropped (with a warning)
    /// and repeated rays are kept once.
    pub fn new(ambient_dim: usize, generators: Vec<RationalVector>) -> Result<Self> {
        let mut canonical: Vec<RationalVector> = Vec::with_capacity(generators.len());
        for (i, g) in generators.into_iter().enumerate() {
            g.check_dim(ambient_dim)?;
            if g.is_zero() {
                log::warn!("dropping zero generator at position {i}");
                continue;
            }
            let p = g.primitive();
            if !canonical.contains(&p) {
                canonical.push(p);
            }
        }
        Ok(RationalCone {
            ambient_dim,
            generators: canonical,
            facets: OnceLock::new(),
        })
    }

    pub fn from_integer_generators(ambient_dim: usize, generators: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            ambient_dim,
            generators
                .iter()
                .map(|g| RationalVector::from_integers(g.iter().copied()))
                .collect(),
        )
    }

    /// The cone `{0}`.
    pub fn zero(ambient_dim: usize) -> Self {
        RationalCone {
            ambient_dim,
            generators: Vec::new(),
            facets: OnceLock::new(),
        }
    }

    /// Cone `{x : a·x ≥ 0 ∀ a ∈ inequalities, e·x = 0 ∀ e ∈ equations}`.
    pub fn from_constraints(
        ambient_dim: usize,
        inequalities: &[RationalVector],
        equations: &[RationalVector],
    ) -> Result<Self> {
        let mut rows = Vec::with_capacity(inequalities.len() + 2 * equations.len());
        for a in inequalities {
            a.check_dim(ambient_dim)?;
            rows.push(a.clone());
        }
        for e in equations {
            e.check_dim(ambient_dim)?;
            rows.push(e.clone());
            rows.push(-e);
        }
        let dd = double_description(ambient_dim, &rows);
        let mut generators = dd.rays;
        for l in dd.lineality {
            generators.push(-&l);
            generators.push(l);
        }
        Self::new(ambient_dim, generators)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[RationalVector] {
        &self.generators
    }

    pub fn is_zero_cone(&self) -> bool {
        self.generators.is_empty()
    }

    /// Dimension of the linear span.
    pub fn dimension(&self) -> usize {
        rank_of(self.ambient_dim, &self.generators)
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dimension() == self.ambient_dim
    }

    /// The cached H-description, computed once.
    pub fn facets(&self) -> &FacetDescription {
        self.facets.get_or_init(|| self.compute_facets())
    }

    fn compute_facets(&self) -> FacetDescription {
        let mut equations = if self.generators.is_empty() {
            (0..self.ambient_dim)
                .map(|i| RationalVector::unit(self.ambient_dim, i))
                .collect()
        } else {
            RationalMatrix::from_rows(self.ambient_dim, &self.generators)
                .expect("generators share the ambient dimension")
                .kernel_basis()
        };
        equations.sort();

        // Facet normals are the extreme rays of the dual cone {y : g·y ≥ 0},
        // taken modulo its lineality space (the span equations).
        let dual = double_description(self.ambient_dim, &self.generators);
        let ortho = orthogonal_basis(&equations);
        let mut normals: Vec<RationalVector> = Vec::new();
        for ray in &dual.rays {
            let n = project_away(ray, &ortho);
            if n.is_zero() {
                continue;
            }
            let n = n.primitive();
            if !normals.contains(&n) {
                normals.push(n);
            }
        }
        normals.sort();
        FacetDescription { normals, equations }
    }

    pub fn contains(&self, x: &RationalVector) -> Result<bool> {
        x.check_dim(self.ambient_dim)?;
        let f = self.facets();
        Ok(f.equations.iter().all(|e| e.dot(x).is_zero())
            && f.normals.iter().all(|n| !n.dot(x).is_negative()))
    }

    /// Topological interior in the ambient space; empty unless the cone is
    /// full-dimensional.
    pub fn interior_contains(&self, x: &RationalVector) -> Result<bool> {
        x.check_dim(self.ambient_dim)?;
        let f = self.facets();
        Ok(f.equations.is_empty() && f.normals.iter().all(|n| n.dot(x).is_positive()))
    }

    /// Interior relative to the linear span of the cone.
    pub fn relative_interior_contains(&self, x: &RationalVector) -> Result<bool> {
        x.check_dim(self.ambient_dim)?;
        let f = self.facets();
        Ok(f.equations.iter().all(|e| e.dot(x).is_zero())
            && f.normals.iter().all(|n| n.dot(x).is_positive()))
    }

    /// Basis of `C ∩ −C`: the part of the span annihilated by every normal.
    pub fn lineality_space(&self) -> Vec<RationalVector> {
        let f = self.facets();
        let mut rows = f.equations.clone();
        rows.extend(f.normals.iter().cloned());
        let mut basis = RationalMatrix::from_rows(self.ambient_dim, &rows)
            .expect("facet vectors share the ambient dimension")
            .kernel_basis();
        basis.sort();
        basis
    }

    pub fn is_strongly_convex(&self) -> bool {
        self.lineality_space().is_empty()
    }

    /// `C ∩ {x : e·x = 0 ∀ e}` as a generated cone.
    pub fn intersect_subspace(&self, subspace_equations: &[RationalVector]) -> Result<Self> {
        if subspace_equations.is_empty() {
            return Ok(self.clone());
        }
        let f = self.facets();
        let mut equations = f.equations.clone();
        equations.extend(subspace_equations.iter().cloned());
        Self::from_constraints(self.ambient_dim, &f.normals, &equations)
    }

    /// Image of the cone under a linear map given by a matrix acting on
    /// column vectors.
    pub fn image(&self, map: &RationalMatrix) -> Result<Self> {
        if map.cols() != self.ambient_dim {
            return Err(Error::dim(self.ambient_dim, map.cols()));
        }
        let images = self
            .generators
            .iter()
            .map(|g| map.mul_vec(g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(map.rows(), images)
    }

    /// Whether `f·g ≥ 0` for every generator, i.e. the cone lies in the closed
    /// half-space `{f ≥ 0}`.
    pub fn halfspace_contains(&self, functional: &RationalVector) -> Result<bool> {
        functional.check_dim(self.ambient_dim)?;
        Ok(self
            .generators
            .iter()
            .all(|g| !functional.dot(g).is_negative()))
    }

    /// Mutual containment of generators.
    pub fn same_cone(&self, other: &RationalCone) -> Result<bool> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::dim(self.ambient_dim, other.ambient_dim));
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Analyses the slice `{x ∈ C : x[coord] = level}` for `level > 0`.
    ///
    /// This works on the generators directly: the slice recedes exactly when
    /// some nonzero nonnegative combination of generators has `coord`
    /// coordinate zero, and such a combination exists iff a generator has
    /// zero there or a pair of generators of opposite sign there is not
    /// antiparallel.
    pub fn level_set(&self, coord: usize, level: &BigRational) -> Result<LevelSet> {
        if coord >= self.ambient_dim {
            return Err(Error::InvalidArgument(format!(
                "coordinate {coord} out of range for dimension {}",
                self.ambient_dim
            )));
        }
        if !level.is_positive() {
            return Err(Error::InvalidArgument(format!(
                "level must be positive, got {level}"
            )));
        }
        if let Some(g) = self.generators.iter().find(|g| g.coords()[coord].is_zero()) {
            return Ok(LevelSet::Unbounded {
                direction: g.clone(),
            });
        }
        let (pos, neg): (Vec<&RationalVector>, Vec<&RationalVector>) = self
            .generators
            .iter()
            .partition(|g| g.coords()[coord].is_positive());
        for p in &pos {
            for n in &neg {
                let d = p.scale(&-n.coords()[coord].clone()).add_scaled(&p.coords()[coord], n);
                if !d.is_zero() {
                    return Ok(LevelSet::Unbounded {
                        direction: d.primitive(),
                    });
                }
            }
        }

        let points: Vec<RationalVector> = pos
            .iter()
            .map(|g| g.scale(&(level / &g.coords()[coord])))
            .collect();
        let mut vertices = Vec::new();
        for (i, p) in points.iter().enumerate() {
            let others: Vec<RationalVector> = points
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| q.clone())
                .collect();
            let redundant = !others.is_empty()
                && RationalCone::new(self.ambient_dim, others)?.contains(p)?;
            if !redundant {
                vertices.push(p.clone());
            }
        }
        vertices.sort();
        let mut diameter_sq = BigRational::zero();
        for (i, a) in vertices.iter().enumerate() {
            for b in &vertices[i + 1..] {
                let d = a.squared_distance(b);
                if d > diameter_sq {
                    diameter_sq = d;
                }
            }
        }
        Ok(LevelSet::Bounded {
            vertices,
            diameter_sq,
        })
    }
}

/// Generators of `{y : a·y ≥ 0 for every row a}`: a lineality basis and one
/// ray per extreme ray of the pointed quotient.
#[derive(Clone, Debug, Default)]
pub(crate) struct DoubleDescription {
    pub lineality: Vec<RationalVector>,
    pub rays: Vec<RationalVector>,
}

/// Incremental double description. Constraints are inserted in input order;
/// two rays are adjacent when the constraints tight at both have rank
/// `dim - lineality - 2`.
pub(crate) fn double_description(dim: usize, rows: &[RationalVector]) -> DoubleDescription {
    let mut lineality: Vec<RationalVector> = (0..dim).map(|i| RationalVector::unit(dim, i)).collect();
    let mut rays: Vec<RationalVector> = Vec::new();
    let mut processed: Vec<RationalVector> = Vec::new();

    for a in rows {
        if a.is_zero() {
            continue;
        }
        if let Some(idx) = lineality.iter().position(|l| !a.dot(l).is_zero()) {
            let mut l = lineality.remove(idx);
            if a.dot(&l).is_negative() {
                l = -&l;
            }
            let al = a.dot(&l);
            for other in lineality.iter_mut() {
                let c = a.dot(other) / &al;
                *other = other.add_scaled(&-c, &l).primitive();
            }
            for r in rays.iter_mut() {
                let c = a.dot(r) / &al;
                *r = r.add_scaled(&-c, &l).primitive();
            }
            rays.push(l.primitive());
            processed.push(a.clone());
            continue;
        }

        let values: Vec<BigRational> = rays.iter().map(|r| a.dot(r)).collect();
        let target_rank = dim as isize - lineality.len() as isize - 2;
        let mut next: Vec<RationalVector> = Vec::new();
        for (r, v) in rays.iter().zip(&values) {
            if !v.is_negative() {
                next.push(r.clone());
            }
        }
        for (i, (p, vp)) in rays.iter().zip(&values).enumerate() {
            if !vp.is_positive() {
                continue;
            }
            for (j, (n, vn)) in rays.iter().zip(&values).enumerate() {
                if i == j || !vn.is_negative() {
                    continue;
                }
                if !adjacent(p, n, &processed, dim, target_rank) {
                    continue;
                }
                // (a·p) n − (a·n) p has a·(…) = 0 and positive coefficients.
                let combo = n.scale(vp).add_scaled(&-vn.clone(), p).primitive();
                if !combo.is_zero() && !next.contains(&combo) {
                    next.push(combo);
                }
            }
        }
        rays = next;
        processed.push(a.clone());
    }
    DoubleDescription { lineality, rays }
}

fn adjacent(
    p: &RationalVector,
    n: &RationalVector,
    processed: &[RationalVector],
    dim: usize,
    target_rank: isize,
) -> bool {
    if target_rank < 0 {
        return false;
    }
    let tight: Vec<RationalVector> = processed
        .iter()
        .filter(|b| b.dot(p).is_zero() && b.dot(n).is_zero())
        .cloned()
        .collect();
    rank_of(dim, &tight) as isize == target_rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational;

    fn v(xs: &[i64]) -> RationalVector {
        RationalVector::from_integers(xs.iter().copied())
    }

    fn cone(dim: usize, gens: &[&[i64]]) -> RationalCone {
        RationalCone::new(dim, gens.iter().map(|g| v(g)).collect()).unwrap()
    }

    #[test]
    fn facets_of_wedge() {
        let c = cone(2, &[&[1, 0], &[1, 1]]);
        let f = c.facets();
        assert_eq!(f.normals, vec![v(&[0, 1]), v(&[1, -1])]);
        assert!(f.equations.is_empty());
    }

    #[test]
    fn facets_of_ray() {
        let c = cone(2, &[&[1, 0]]);
        let f = c.facets();
        assert_eq!(f.normals, vec![v(&[1, 0])]);
        assert_eq!(f.equations, vec![v(&[0, 1])]);
    }

    #[test]
    fn facets_of_whole_plane() {
        let c = cone(2, &[&[1, 1], &[1, -1], &[-1, 0]]);
        let f = c.facets();
        assert!(f.normals.is_empty());
        assert!(f.equations.is_empty());
        assert_eq!(c.lineality_space().len(), 2);
    }

    #[test]
    fn membership_examples() {
        let c = cone(2, &[&[1, 0], &[1, 1]]);
        assert!(c.contains(&v(&[2, 1])).unwrap());
        assert!(c.contains(&v(&[0, 0])).unwrap());
        assert!(!c.contains(&v(&[0, -1])).unwrap());
        assert!(c.contains(&v(&[1])).is_err());
    }

    #[test]
    fn interior_examples() {
        let c = cone(2, &[&[1, 0], &[1, 1]]);
        assert!(c.interior_contains(&v(&[2, 1])).unwrap());
        assert!(!c.interior_contains(&v(&[1, 0])).unwrap());
        let ray = cone(2, &[&[1, 0]]);
        assert!(!ray.interior_contains(&v(&[2, 0])).unwrap());
        assert!(ray.relative_interior_contains(&v(&[2, 0])).unwrap());
    }

    #[test]
    fn lineality_examples() {
        assert!(cone(2, &[&[1, 0], &[1, 1]]).is_strongly_convex());
        assert_eq!(cone(2, &[&[1, 0], &[-1, 0]]).lineality_space(), vec![v(&[1, 0])]);
        assert!(RationalCone::zero(3).lineality_space().is_empty());
    }

    #[test]
    fn intersections() {
        let c = cone(2, &[&[1, 1], &[1, -1]]);
        assert!(c.intersect_subspace(&[v(&[1, 0])]).unwrap().is_zero_cone());

        let half = cone(2, &[&[1, 0], &[0, 1], &[0, -1]]);
        let line = half.intersect_subspace(&[v(&[1, 0])]).unwrap();
        assert!(line.same_cone(&cone(2, &[&[0, 1], &[0, -1]])).unwrap());

        assert!(c.intersect_subspace(&[]).unwrap().same_cone(&c).unwrap());
    }

    #[test]
    fn images() {
        let c = cone(2, &[&[1, 1], &[1, -1]]);
        let id = RationalMatrix::identity(2);
        assert!(c.image(&id).unwrap().same_cone(&c).unwrap());
        let proj = RationalMatrix::from_integer_rows(&[vec![1, 0]]).unwrap();
        let img = c.image(&proj).unwrap();
        assert_eq!(img.generators(), &[v(&[1])]);
        let zero = RationalMatrix::zeros(2, 2);
        assert!(c.image(&zero).unwrap().is_zero_cone());
        assert!(c.image(&RationalMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn level_sets() {
        let c = cone(2, &[&[1, 1], &[1, -1]]);
        match c.level_set(0, &rational(1)).unwrap() {
            LevelSet::Bounded {
                vertices,
                diameter_sq,
            } => {
                assert_eq!(vertices, vec![v(&[1, -1]), v(&[1, 1])]);
                assert_eq!(diameter_sq, rational(4));
            }
            other => panic!("expected bounded, got {other:?}"),
        }
        let q = cone(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(
            q.level_set(0, &rational(1)).unwrap(),
            LevelSet::Unbounded {
                direction: v(&[0, 1])
            }
        );
        let ray = cone(2, &[&[1, 0]]);
        match ray.level_set(0, &rational(1)).unwrap() {
            LevelSet::Bounded { vertices, .. } => assert_eq!(vertices, vec![v(&[1, 0])]),
            other => panic!("expected bounded, got {other:?}"),
        }
        assert!(ray.level_set(0, &rational(0)).is_err());
    }

    #[test]
    fn halfspace_examples() {
        let c = cone(2, &[&[1, 1], &[1, -1]]);
        assert!(c.halfspace_contains(&v(&[1, 0])).unwrap());
        assert!(!cone(2, &[&[1, 1]]).halfspace_contains(&v(&[0, -1])).unwrap());
        assert!(RationalCone::zero(2).halfspace_contains(&v(&[-3, 7])).unwrap());
    }

    #[test]
    fn zero_and_duplicate_generators_are_canonicalized() {
        let c = RationalCone::new(2, vec![v(&[0, 0]), v(&[2, 4]), v(&[1, 2])]).unwrap();
        assert_eq!(c.generators(), &[v(&[1, 2])]);
    }

    #[test]
    fn square_pyramid_has_four_facets() {
        let c = cone(3, &[&[1, 1, 1], &[1, -1, 1], &[-1, 1, 1], &[-1, -1, 1]]);
        assert_eq!(c.facets().normals.len(), 4);
        assert!(c.interior_contains(&v(&[0, 0, 1])).unwrap());
        assert!(c.is_strongly_convex());
    }
}
