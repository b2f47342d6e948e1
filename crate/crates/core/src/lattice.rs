//! Finitely generated abelian groups through integer relation matrices.
//!
//! A group is presented by generators and integer relations (one relation per
//! matrix row). [`smith_normal_form`] diagonalizes the relation matrix and
//! [`presentation_from_relations`] reads off the free rank and the torsion
//! orders `θ_1 | θ_2 | …` of the cokernel.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::RationalVector;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Row-major construction. `cols` fixes the width so that a matrix with no
    /// rows still knows its column count.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedRow {
                    row: i,
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(IntegerMatrix {
            rows: n,
            cols,
            entries,
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[BigInt]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::dim(self.cols, other.rows));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.rows {
            return Err(Error::dim(self.rows, x.len()));
        }
        Ok((0..self.cols)
            .map(|j| {
                x.iter()
                    .enumerate()
                    .fold(BigInt::zero(), |acc, (i, xi)| acc + xi * self.get(i, j))
            })
            .collect())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::dim(self.rows, self.cols));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a.get(r, k).is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        Ok(sign * a.get(n - 1, n - 1))
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant()
            .map(|d| d.abs().is_one())
            .unwrap_or(false)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for k in 0..self.cols {
                self.entries.swap(a * self.cols + k, b * self.cols + k);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.entries.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[target] += factor * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for k in 0..self.cols {
            let v = self.get(target, k) + factor * self.get(source, k);
            self.set(target, k, v);
        }
    }

    /// col[target] += factor * col[source]
    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, target) + factor * self.get(r, source);
            self.set(r, target, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for k in 0..self.cols {
            let v = -self.get(r, k);
            self.set(r, k, v);
        }
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (i, e) in self.row(r).iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithDecomposition {
    /// The diagonal entries `d_1, d_2, …` (length `min(rows, cols)`).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors()
            .iter()
            .filter(|d| !d.is_zero())
            .count()
    }
}

/// Smith normal form by unimodular row and column operations.
///
/// Pivot: nonzero entry of least absolute value in the remaining block, ties
/// broken by the lowest `(row, col)`. The result is a deterministic function
/// of the input. Diagonal entries are nonnegative and form a divisibility
/// chain.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_pivot(&a, t) else {
                return SmithDecomposition { d: a, u, v };
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -(a.get(i, t) / a.get(t, t));
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -(a.get(t, j) / a.get(t, t));
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= a.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let pivot = a.get(t, t).clone();
            let offending = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    a.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithDecomposition { d: a, u, v }
}

fn smallest_pivot(a: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let e = a.get(i, j);
            if e.is_zero() {
                continue;
            }
            let abs = e.abs();
            if best.as_ref().is_none_or(|(_, b)| abs < *b) {
                best = Some(((i, j), abs));
            }
        }
    }
    best.map(|(idx, _)| idx)
}

/// `Z^free_rank ⊕ Z/θ_1 ⊕ … ⊕ Z/θ_k` with `θ_j ≥ 2` and `θ_j | θ_{j+1}`.
///
/// Labels are metadata only and do not take part in equality.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub free_rank: usize,
    #[serde(with = "crate::format::bigint_list")]
    pub torsion_orders: Vec<BigInt>,
    #[serde(default)]
    pub basis_labels: Vec<String>,
}

impl PartialEq for GroupPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.free_rank == other.free_rank && self.torsion_orders == other.torsion_orders
    }
}

impl Eq for GroupPresentation {}

/// An element of a presented group: integer free coordinates and torsion
/// residues `0 ≤ t_j < θ_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    #[serde(rename = "free", with = "crate::format::bigint_list")]
    pub free_part: Vec<BigInt>,
    #[serde(rename = "torsion", with = "crate::format::bigint_list", default)]
    pub torsion_part: Vec<BigInt>,
}

impl GroupElement {
    pub fn from_i64(free: &[i64], torsion: &[i64]) -> Self {
        GroupElement {
            free_part: free.iter().map(|&x| BigInt::from(x)).collect(),
            torsion_part: torsion.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_part.iter().all(Zero::is_zero) && self.torsion_part.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[BigInt]| {
            xs.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(
            f,
            "([{}], [{}])",
            list(&self.free_part),
            list(&self.torsion_part)
        )
    }
}

impl GroupPresentation {
    /// Validates that `torsion_orders` is a divisibility chain of integers ≥ 2.
    pub fn new(free_rank: usize, torsion_orders: Vec<BigInt>) -> Result<Self> {
        for (j, t) in torsion_orders.iter().enumerate() {
            if t < &BigInt::from(2) {
                return Err(Error::InvalidPresentation(format!(
                    "torsion order {t} at position {j} is below 2"
                )));
            }
            if j > 0 && !t.is_multiple_of(&torsion_orders[j - 1]) {
                return Err(Error::InvalidPresentation(format!(
                    "torsion orders must form a divisibility chain, {} does not divide {t}",
                    torsion_orders[j - 1]
                )));
            }
        }
        Ok(GroupPresentation {
            free_rank,
            torsion_orders,
            basis_labels: Vec::new(),
        })
    }

    pub fn free(rank: usize) -> Self {
        GroupPresentation {
            free_rank: rank,
            torsion_orders: Vec::new(),
            basis_labels: Vec::new(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.basis_labels = labels;
        self
    }

    pub fn torsion_rank(&self) -> usize {
        self.torsion_orders.len()
    }

    /// Whether `e` has the right shape and reduced residues.
    pub fn check(&self, e: &GroupElement) -> Result<()> {
        if e.free_part.len() != self.free_rank || e.torsion_part.len() != self.torsion_rank() {
            return Err(Error::PresentationMismatch(format!(
                "element {e} has shape ({}, {}), presentation {self} expects ({}, {})",
                e.free_part.len(),
                e.torsion_part.len(),
                self.free_rank,
                self.torsion_rank()
            )));
        }
        for (t, theta) in e.torsion_part.iter().zip(&self.torsion_orders) {
            if t.is_negative() || t >= theta {
                return Err(Error::PresentationMismatch(format!(
                    "torsion residue {t} is not reduced modulo {theta}"
                )));
            }
        }
        Ok(())
    }

    /// Builds an element, reducing torsion coordinates modulo `θ_j`.
    pub fn element(&self, free: Vec<BigInt>, torsion: Vec<BigInt>) -> Result<GroupElement> {
        if free.len() != self.free_rank {
            return Err(Error::PresentationMismatch(format!(
                "expected {} free coordinates, got {}",
                self.free_rank,
                free.len()
            )));
        }
        if torsion.len() != self.torsion_rank() {
            return Err(Error::PresentationMismatch(format!(
                "expected {} torsion coordinates, got {}",
                self.torsion_rank(),
                torsion.len()
            )));
        }
        Ok(GroupElement {
            free_part: free,
            torsion_part: self.reduce(torsion),
        })
    }

    pub fn element_i64(&self, free: &[i64], torsion: &[i64]) -> Result<GroupElement> {
        let e = GroupElement::from_i64(free, torsion);
        self.element(e.free_part, e.torsion_part)
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            free_part: vec![BigInt::zero(); self.free_rank],
            torsion_part: vec![BigInt::zero(); self.torsion_rank()],
        }
    }

    pub fn free_generator(&self, i: usize) -> GroupElement {
        let mut e = self.zero();
        e.free_part[i] = BigInt::one();
        e
    }

    pub fn torsion_generator(&self, j: usize) -> GroupElement {
        let mut e = self.zero();
        e.torsion_part[j] = BigInt::one();
        e
    }

    fn reduce(&self, torsion: Vec<BigInt>) -> Vec<BigInt> {
        torsion
            .into_iter()
            .zip(&self.torsion_orders)
            .map(|(t, theta)| t.mod_floor(theta))
            .collect()
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(GroupElement {
            free_part: a
                .free_part
                .iter()
                .zip(&b.free_part)
                .map(|(x, y)| x + y)
                .collect(),
            torsion_part: self.reduce(
                a.torsion_part
                    .iter()
                    .zip(&b.torsion_part)
                    .map(|(x, y)| x + y)
                    .collect(),
            ),
        })
    }

    pub fn negate(&self, a: &GroupElement) -> Result<GroupElement> {
        self.scale(&BigInt::from(-1), a)
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.add(a, &self.negate(b)?)
    }

    pub fn scale(&self, n: &BigInt, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(GroupElement {
            free_part: a.free_part.iter().map(|x| n * x).collect(),
            torsion_part: self.reduce(a.torsion_part.iter().map(|x| n * x).collect()),
        })
    }

    /// Order-independent summary such as `Z^2 + Z/2 + Z/4`, or `0`.
    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion_orders.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary())
    }
}

/// Drops the torsion coordinates; the result lives in the real span with the
/// free generators as orthonormal basis.
pub fn realify(a: &GroupElement) -> RationalVector {
    RationalVector::from_big_integers(&a.free_part)
}

/// The cokernel `Z^generators / rowspace(relations)` together with the change
/// of basis that carries generator coordinates to canonical coordinates.
#[derive(Clone, Debug)]
pub struct Cokernel {
    pub presentation: GroupPresentation,
    pub smith: SmithDecomposition,
}

impl Cokernel {
    pub fn new(generators: usize, relations: &IntegerMatrix) -> Result<Self> {
        if relations.cols() != generators {
            return Err(Error::dim(generators, relations.cols()));
        }
        let smith = smith_normal_form(relations);
        let factors = smith.invariant_factors();
        let rank = smith.rank();
        let torsion: Vec<BigInt> = factors
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect();
        let presentation = GroupPresentation::new(generators - rank, torsion)?;
        Ok(Cokernel {
            presentation,
            smith,
        })
    }

    /// Image of the generator combination `x` in canonical coordinates.
    ///
    /// With `u·m·v = d` the relations span the row space of `d·v⁻¹`, so the
    /// coordinates `y = x·v` are reduced against the diagonal of `d`.
    pub fn element_of(&self, x: &[BigInt]) -> Result<GroupElement> {
        let y = self.smith.v.left_mul_vec(x)?;
        let factors = self.smith.invariant_factors();
        let mut free = Vec::new();
        let mut torsion = Vec::new();
        for (i, yi) in y.into_iter().enumerate() {
            match factors.get(i) {
                Some(d) if d.is_one() => {}
                Some(d) if !d.is_zero() => torsion.push(yi),
                _ => free.push(yi),
            }
        }
        self.presentation.element(free, torsion)
    }
}

/// Free rank and torsion orders of `Z^generators / rowspace(relations)`.
pub fn presentation_from_relations(
    generators: usize,
    relations: &IntegerMatrix,
) -> Result<GroupPresentation> {
    Cokernel::new(generators, relations).map(|c| c.presentation)
}

/// Normalizes an arbitrary list of cyclic orders `Z/n_1 ⊕ …` (entries 0 stand
/// for free summands) into canonical form.
pub fn presentation_from_cyclic_orders(orders: &[BigInt]) -> Result<GroupPresentation> {
    let n = orders.len();
    let diag = IntegerMatrix::diagonal(n, n, orders);
    presentation_from_relations(n, &diag)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_of_four_is_four() {
        let m = IntegerMatrix::from_i64_rows(&[vec![4]]).unwrap();
        let s = smith_normal_form(&m);
        assert_eq!(s.invariant_factors(), big(&[4]));
    }

    #[test]
    fn snf_of_identity_is_identity() {
        let m = IntegerMatrix::identity(3);
        let s = smith_normal_form(&m);
        assert_eq!(s.d, m);
        let c = Cokernel::new(3, &m).unwrap();
        assert_eq!(c.presentation.summary(), "0");
    }

    #[test]
    fn snf_of_diag_two_three() {
        // gcd(2,3)=1 and lcm=6 force diag(1,6)
        let m = IntegerMatrix::from_i64_rows(&[vec![2, 0], vec![0, 3]]).unwrap();
        let s = smith_normal_form(&m);
        assert_eq!(s.invariant_factors(), big(&[1, 6]));
        assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(s.u.is_unimodular() && s.v.is_unimodular());
    }

    #[test]
    fn snf_of_empty_relation_set() {
        let m = IntegerMatrix::zeros(0, 1);
        let p = presentation_from_relations(1, &m).unwrap();
        assert_eq!(p, GroupPresentation::free(1));
    }

    #[test]
    fn presentations_from_spec_examples() {
        let m = IntegerMatrix::from_i64_rows(&[vec![0, 4]]).unwrap();
        let p = presentation_from_relations(2, &m).unwrap();
        assert_eq!(p.free_rank, 1);
        assert_eq!(p.torsion_orders, big(&[4]));

        let m = IntegerMatrix::from_i64_rows(&[vec![2, 0, 0], vec![0, 3, 0]]).unwrap();
        let p = presentation_from_relations(3, &m).unwrap();
        assert_eq!(p.free_rank, 1);
        assert_eq!(p.torsion_orders, big(&[6]));
    }

    #[test]
    fn presentation_rejects_wrong_width() {
        let m = IntegerMatrix::from_i64_rows(&[vec![1, 2, 3]]).unwrap();
        assert!(matches!(
            presentation_from_relations(2, &m),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn ragged_rows_are_reported_by_index() {
        let err = IntegerMatrix::from_i64_rows(&[vec![1, 2], vec![3]]).unwrap_err();
        assert_eq!(
            err,
            Error::RaggedRow {
                row: 1,
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn group_law_examples() {
        let g = GroupPresentation::new(1, big(&[4])).unwrap();
        let a = g.element_i64(&[1], &[3]).unwrap();
        let b = g.element_i64(&[0], &[2]).unwrap();
        assert_eq!(g.add(&a, &b).unwrap(), g.element_i64(&[1], &[1]).unwrap());

        let t = g.element_i64(&[0], &[1]).unwrap();
        assert!(g.scale(&BigInt::from(4), &t).unwrap().is_zero());

        let c = g.element_i64(&[2], &[1]).unwrap();
        assert_eq!(
            g.negate(&c).unwrap(),
            GroupElement::from_i64(&[-2], &[3])
        );
    }

    #[test]
    fn mismatched_elements_are_rejected() {
        let g = GroupPresentation::new(1, big(&[4])).unwrap();
        let h = GroupPresentation::free(2);
        let a = g.zero();
        let b = h.zero();
        assert!(g.add(&a, &b).is_err());
        let unreduced = GroupElement::from_i64(&[0], &[5]);
        assert!(g.check(&unreduced).is_err());
    }

    #[test]
    fn realify_drops_torsion() {
        let g = GroupPresentation::new(1, big(&[4])).unwrap();
        let a = g.element_i64(&[3], &[2]).unwrap();
        assert_eq!(realify(&a), RationalVector::from_integers([3]));
        assert!(realify(&g.zero()).is_zero());
        let f = GroupPresentation::free(2);
        assert_eq!(
            realify(&f.element_i64(&[1, -2], &[]).unwrap()),
            RationalVector::from_integers([1, -2])
        );
    }

    #[test]
    fn invalid_torsion_chain_rejected() {
        assert!(GroupPresentation::new(0, big(&[2, 3])).is_err());
        assert!(GroupPresentation::new(0, big(&[1])).is_err());
        let p = presentation_from_cyclic_orders(&big(&[2, 3])).unwrap();
        assert_eq!(p.torsion_orders, big(&[6]));
    }

    #[test]
    fn cokernel_maps_generators_into_canonical_coordinates() {
        // Z^2 / <(0, 4)>: the second generator has order 4
        let m = IntegerMatrix::from_i64_rows(&[vec![0, 4]]).unwrap();
        let c = Cokernel::new(2, &m).unwrap();
        let g2 = c.element_of(&big(&[0, 1])).unwrap();
        let four = c
            .presentation
            .scale(&BigInt::from(4), &g2)
            .unwrap();
        assert!(four.is_zero());
        assert!(!g2.is_zero());
        let rel = c.element_of(&big(&[0, 4])).unwrap();
        assert!(rel.is_zero());
    }

    #[test]
    fn labels_do_not_affect_equality() {
        let a = GroupPresentation::free(1).with_labels(vec!["[R]".into()]);
        let b = GroupPresentation::free(1).with_labels(vec!["x".into()]);
        assert_eq!(a, b);
    }
}
