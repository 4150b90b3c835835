//! Dense matrices over an exact field.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldScalar};
use crate::linalg::Subspace;

/// A dense `rows × cols` matrix.  All entries share one field; the field is
/// carried explicitly so that empty matrices stay well-typed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldDescriptor,
    entries: Vec<FieldScalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, field: FieldDescriptor) -> Self {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldDescriptor) -> Self {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Build from rows; all rows must have equal length and entries must
    /// share one field.
    pub fn from_rows(rows: Vec<Vec<FieldScalar>>, cols: usize, field: FieldDescriptor) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in &rows {
            assert_eq!(row.len(), cols, "ragged row");
            for e in row {
                assert_eq!(e.descriptor(), field, "entry from a different field");
                entries.push(e.clone());
            }
        }
        Matrix { rows: rows.len(), cols, field, entries }
    }

    /// Build from integer rows, mapping each entry through the field.
    pub fn from_i64_rows(rows: &[&[i64]], field: FieldDescriptor) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
            cols,
            field,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &FieldScalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldScalar) {
        assert_eq!(v.descriptor(), self.field, "entry from a different field");
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldScalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[FieldScalar]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldScalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows, self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = a.sub(b);
        }
        out
    }

    pub fn scale(&self, s: &FieldScalar) -> Matrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = e.mul(s);
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Matrix::zero(self.rows, other.cols, self.field);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.at(r, c).add(&a.mul(other.at(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Matrix-vector product (vector as coordinates).
    pub fn apply(&self, v: &[FieldScalar]) -> Vec<FieldScalar> {
        assert_eq!(self.cols, v.len(), "vector length differs from cols");
        let mut out = vec![self.field.zero(); self.rows];
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                out[r] = out[r].add(&self.at(r, k).mul(x));
            }
        }
        out
    }

    pub fn pow(&self, e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut result = Matrix::identity(self.rows, self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// A matrix is nilpotent iff its n-th power vanishes (n = size); no
    /// spectral computation is used anywhere.
    pub fn is_nilpotent(&self) -> bool {
        assert_eq!(self.rows, self.cols);
        self.pow(self.rows as u64).is_zero()
    }

    pub fn stack(&self, below: &Matrix) -> Matrix {
        assert_eq!(self.cols, below.cols, "column counts differ");
        let mut entries = self.entries.clone();
        entries.extend(below.entries.iter().cloned());
        Matrix {
            rows: self.rows + below.rows,
            cols: self.cols,
            field: self.field,
            entries,
        }
    }

    /// Paste `right` to the right of `self`.
    pub fn augment(&self, right: &Matrix) -> Matrix {
        assert_eq!(self.rows, right.rows, "row counts differ");
        let mut out = Matrix::zero(self.rows, self.cols + right.cols, self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c).clone());
            }
            for c in 0..right.cols {
                out.set(r, self.cols + c, right.at(r, c).clone());
            }
        }
        out
    }

    /// Reduced row echelon form with exact pivoting (the first nonzero entry
    /// in each column, scanning down).  Zero rows are dropped; the rank is
    /// the number of remaining rows.
    pub fn rref(&self) -> (Matrix, usize) {
        let (m, pivots) = self.rref_with_pivots();
        let rank = pivots.len();
        (m, rank)
    }

    /// As [`rref`](Matrix::rref), also returning the pivot columns in order.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut work = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..work.cols {
            // First nonzero entry at or below pivot_row.
            let found = (pivot_row..work.rows).find(|&r| !work.at(r, col).is_zero());
            let Some(r0) = found else { continue };
            work.swap_rows(pivot_row, r0);
            let inv = work
                .at(pivot_row, col)
                .checked_inv()
                .expect("pivot entry is nonzero");
            work.scale_row(pivot_row, &inv);
            for r in 0..work.rows {
                if r != pivot_row && !work.at(r, col).is_zero() {
                    let factor = work.at(r, col).clone();
                    work.row_sub_scaled(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
            if pivot_row == work.rows {
                break;
            }
        }
        work.truncate_rows(pivots.len());
        (work, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &FieldScalar) {
        for c in 0..self.cols {
            let v = self.at(r, c).mul(s);
            self.set(r, c, v);
        }
    }

    /// row[r] -= factor * row[src]
    fn row_sub_scaled(&mut self, r: usize, src: usize, factor: &FieldScalar) {
        for c in 0..self.cols {
            let v = self.at(r, c).sub(&factor.mul(self.at(src, c)));
            self.set(r, c, v);
        }
    }

    fn truncate_rows(&mut self, keep: usize) {
        self.entries.truncate(keep * self.cols);
        self.rows = keep;
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Nullspace {x : Mx = 0} as a canonical subspace of F^cols.
    /// rank–nullity is asserted.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis_rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (s, &p) in pivots.iter().enumerate() {
                v[p] = r.at(s, f).neg();
            }
            basis_rows.push(v);
        }
        let ker = Subspace::from_spanning(Matrix::from_rows(basis_rows, self.cols, self.field));
        assert_eq!(ker.dim() + rank, self.cols, "rank-nullity");
        ker
    }

    /// Column space as a canonical subspace of F^rows.
    pub fn image(&self) -> Subspace {
        Subspace::from_spanning(self.transpose())
    }

    /// Solve `self · x = rhs` for one particular solution (free variables
    /// set to zero).  Returns `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[FieldScalar]) -> Option<Vec<FieldScalar>> {
        assert_eq!(rhs.len(), self.rows);
        let rhs_col = Matrix::from_rows(rhs.iter().map(|v| vec![v.clone()]).collect(), 1, self.field);
        let (red, pivots) = self.augment(&rhs_col).rref_with_pivots();
        if pivots.contains(&self.cols) {
            return None; // pivot in the rhs column: inconsistent
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (s, &p) in pivots.iter().enumerate() {
            x[p] = red.at(s, self.cols).clone();
        }
        Some(x)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Linear combination of vectors: Σ coeff_i · rows_i.
pub(crate) fn combine(
    coeffs: &[FieldScalar],
    rows: &Matrix,
) -> Vec<FieldScalar> {
    assert_eq!(coeffs.len(), rows.rows());
    let mut out = vec![rows.field().zero(); rows.cols()];
    for (c, row) in coeffs.iter().zip(rows.rows_iter()) {
        if c.is_zero() {
            continue;
        }
        for (o, v) in out.iter_mut().zip(row) {
            *o = o.add(&c.mul(v));
        }
    }
    out
}

pub(crate) fn vec_add(a: &[FieldScalar], b: &[FieldScalar]) -> Vec<FieldScalar> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub(crate) fn vec_scale(s: &FieldScalar, a: &[FieldScalar]) -> Vec<FieldScalar> {
    a.iter().map(|x| s.mul(x)).collect()
}

pub(crate) fn vec_is_zero(a: &[FieldScalar]) -> bool {
    a.iter().all(FieldScalar::is_zero)
}

/// Check two subspaces have equal ambient dimension.
pub(crate) fn check_ambient(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::AmbientMismatch(a, b));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(3, q());
        let (r, rank) = id.rref();
        assert_eq!(r, id);
        assert_eq!(rank, 3);
    }

    #[test]
    fn rref_zero_matrix_drops_rows() {
        let z = Matrix::zero(3, 3, q());
        let (r, rank) = z.rref();
        assert_eq!(rank, 0);
        assert_eq!(r.rows(), 0);
    }

    #[test]
    fn rref_dependent_rows() {
        let m = Matrix::from_i64_rows(&[&[1, 2], &[2, 4]], q());
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r, Matrix::from_i64_rows(&[&[1, 2]], q()));
    }

    #[test]
    fn rref_is_idempotent() {
        let m = Matrix::from_i64_rows(&[&[2, 4, 1], &[0, 3, 5], &[2, 7, 6]], q());
        let (r1, _) = m.rref();
        let (r2, _) = r1.rref();
        assert_eq!(r1, r2);
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let ker = Matrix::identity(4, q()).kernel();
        assert_eq!(ker.dim(), 0);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let f5 = FieldDescriptor::prime(5).unwrap();
        let ker = Matrix::zero(3, 3, f5).kernel();
        assert_eq!(ker.dim(), 3);
        assert_eq!(ker, Subspace::full(3, f5));
    }

    #[test]
    fn image_of_shift_block() {
        let m = Matrix::from_i64_rows(&[&[0, 1], &[0, 0]], q());
        let im = m.image();
        assert_eq!(im.dim(), 1);
        assert!(im.contains_vector(&[q().one(), q().zero()]));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Matrix::from_i64_rows(&[&[1, 2], &[2, 4]], q());
        let sol = m.solve(&[q().from_i64(3), q().from_i64(6)]).unwrap();
        let back = m.apply(&sol);
        assert_eq!(back, vec![q().from_i64(3), q().from_i64(6)]);
        assert!(m.solve(&[q().from_i64(3), q().from_i64(7)]).is_none());
    }

    #[test]
    fn pow_and_nilpotent() {
        let jordan = Matrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]], q());
        assert!(jordan.is_nilpotent());
        assert!(!Matrix::identity(3, q()).is_nilpotent());
        assert!(jordan.pow(3).is_zero());
        assert!(!jordan.pow(2).is_zero());
    }

    #[test]
    fn generalized_nullspace_extremes() {
        use crate::linalg::{fitting_image, generalized_nullspace};
        let jordan = Matrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]], q());
        assert!(generalized_nullspace(&jordan).is_full());
        assert!(fitting_image(&jordan).is_zero());

        let invertible = Matrix::from_i64_rows(&[&[2, 1], &[1, 1]], q());
        assert!(generalized_nullspace(&invertible).is_zero());
        assert!(fitting_image(&invertible).is_full());
    }
}
