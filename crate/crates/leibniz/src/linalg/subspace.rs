//! Canonical subspaces of F^n.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::field::{FieldDescriptor, FieldScalar};
use crate::linalg::matrix::{check_ambient, combine};
use crate::linalg::Matrix;

/// A subspace of the n-dimensional ambient space, held as its reduced
/// row echelon basis with no zero rows.  Two subspaces are equal iff their
/// canonical bases are entry-identical, so `==` is exact subspace equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    /// Canonicalize a spanning set (rows of `spanning`).
    pub fn from_spanning(spanning: Matrix) -> Self {
        let ambient = spanning.cols();
        let (basis, _) = spanning.rref();
        Subspace { ambient, basis }
    }

    pub fn zero(ambient: usize, field: FieldDescriptor) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient, field),
        }
    }

    pub fn full(ambient: usize, field: FieldDescriptor) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient, field),
        }
    }

    /// Wrap a matrix that is already a canonical RREF basis.
    /// Only for constructions that produce canonical forms directly.
    pub(crate) fn from_rref_unchecked(basis: Matrix) -> Self {
        debug_assert_eq!(basis.rref().0, basis, "basis not canonical");
        Subspace { ambient: basis.cols(), basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn field(&self) -> FieldDescriptor {
        self.basis.field()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[FieldScalar]> {
        self.basis.rows_iter()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Pivot columns of the canonical basis, in row order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| {
                (0..self.ambient)
                    .find(|&c| !self.basis.at(r, c).is_zero())
                    .expect("no zero rows in a canonical basis")
            })
            .collect()
    }

    /// Remainder of `v` after reduction against the canonical basis;
    /// zero iff `v` lies in the subspace.
    pub fn reduce_vector(&self, v: &[FieldScalar]) -> Vec<FieldScalar> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (row, &p) in self.basis.rows_iter().zip(self.pivots().iter()) {
            if !out[p].is_zero() {
                let factor = out[p].clone();
                for (o, b) in out.iter_mut().zip(row) {
                    *o = o.sub(&factor.mul(b));
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[FieldScalar]) -> bool {
        self.reduce_vector(v).iter().all(FieldScalar::is_zero)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis_vectors().all(|v| self.contains_vector(v))
    }

    /// Coordinates of a member vector with respect to the canonical basis
    /// (read off at the pivot columns).  `None` when `v` is not a member.
    pub fn coordinates_of(&self, v: &[FieldScalar]) -> Option<Vec<FieldScalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots().iter().map(|&p| v[p].clone()).collect())
    }

    /// Map coordinates w.r.t. the canonical basis back to an ambient vector.
    pub fn embed_coordinates(&self, coords: &[FieldScalar]) -> Vec<FieldScalar> {
        combine(coords, &self.basis)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_ambient(self.ambient, other.ambient)?;
        Ok(Subspace::from_spanning(self.basis.stack(&other.basis)))
    }

    /// Intersection via the kernel of the stacked system
    /// `a·U − b·V = 0`; the modular dimension law
    /// dim U + dim V = dim(U+V) + dim(U∩V) is asserted.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        check_ambient(self.ambient, other.ambient)?;
        let field = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient, field));
        }
        // Columns of the stacked system: U^T | −V^T.
        let stacked = self
            .basis
            .transpose()
            .augment(&other.basis.transpose().scale(&field.one().neg()));
        let coeffs = stacked.kernel();
        let mut rows = Vec::with_capacity(coeffs.dim());
        for cv in coeffs.basis_vectors() {
            rows.push(combine(&cv[..self.dim()], &self.basis));
        }
        let inter = Subspace::from_spanning(Matrix::from_rows(rows, self.ambient, field));
        debug_assert_eq!(
            self.dim() + other.dim(),
            self.sum(other)?.dim() + inter.dim(),
            "modular dimension law"
        );
        Ok(inter)
    }

    /// A canonical complement in the ambient space: the span of the standard
    /// basis vectors at the non-pivot coordinates.
    pub fn complement(&self) -> Subspace {
        let field = self.field();
        let pivots = self.pivots();
        let rows: Vec<Vec<FieldScalar>> = (0..self.ambient)
            .filter(|c| !pivots.contains(c))
            .map(|c| {
                let mut v = vec![field.zero(); self.ambient];
                v[c] = field.one();
                v
            })
            .collect();
        Subspace::from_spanning(Matrix::from_rows(rows, self.ambient, field))
    }

    /// Basis of the annihilator {f : f·u = 0 for all u in the subspace};
    /// a vector lies in the subspace iff the annihilator matrix kills it.
    pub fn annihilator(&self) -> Matrix {
        self.basis.kernel().basis().clone()
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.dim()))?;
        for row in self.basis_vectors() {
            let strings: Vec<String> = row.iter().map(|s| s.to_string()).collect();
            seq.serialize_element(&strings)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    fn span(rows: &[&[i64]], ambient: usize, field: FieldDescriptor) -> Subspace {
        if rows.is_empty() {
            return Subspace::zero(ambient, field);
        }
        Subspace::from_spanning(Matrix::from_i64_rows(rows, field))
    }

    #[test]
    fn sum_with_zero_is_identity() {
        let u = span(&[&[1, 2, 0]], 3, q());
        let z = Subspace::zero(3, q());
        assert_eq!(u.sum(&z).unwrap(), u);
    }

    #[test]
    fn self_intersection_is_identity() {
        let u = span(&[&[1, 2, 0], &[0, 0, 1]], 3, q());
        assert_eq!(u.intersect(&u).unwrap(), u);
    }

    #[test]
    fn lines_spanning_the_plane_over_f3() {
        let f3 = FieldDescriptor::prime(3).unwrap();
        let u = span(&[&[1, 0]], 2, f3);
        let v = span(&[&[0, 1]], 2, f3);
        assert_eq!(u.sum(&v).unwrap(), Subspace::full(2, f3));
        assert!(u.intersect(&v).unwrap().is_zero());
    }

    #[test]
    fn ambient_mismatch_reported() {
        let u = span(&[&[1, 0]], 2, q());
        let v = span(&[&[1, 0, 0]], 3, q());
        assert!(u.sum(&v).is_err());
        assert!(u.intersect(&v).is_err());
    }

    #[test]
    fn membership_and_coordinates() {
        let u = span(&[&[1, 0, 2], &[0, 1, 3]], 3, q());
        let v = [q().from_i64(2), q().from_i64(1), q().from_i64(7)];
        assert!(u.contains_vector(&v));
        let coords = u.coordinates_of(&v).unwrap();
        assert_eq!(u.embed_coordinates(&coords), v.to_vec());
        assert!(!u.contains_vector(&[q().zero(), q().zero(), q().one()]));
    }

    #[test]
    fn complement_splits_ambient() {
        let u = span(&[&[1, 5, 0, 2]], 4, q());
        let c = u.complement();
        assert_eq!(u.dim() + c.dim(), 4);
        assert!(u.intersect(&c).unwrap().is_zero());
        assert!(u.sum(&c).unwrap().is_full());
    }

    #[test]
    fn annihilator_detects_membership() {
        let u = span(&[&[1, 2, 3]], 3, q());
        let ann = u.annihilator();
        let inside = [q().from_i64(2), q().from_i64(4), q().from_i64(6)];
        let outside = [q().from_i64(1), q().zero(), q().zero()];
        assert!(ann.apply(&inside).iter().all(FieldScalar::is_zero));
        assert!(!ann.apply(&outside).iter().all(FieldScalar::is_zero));
    }
}
