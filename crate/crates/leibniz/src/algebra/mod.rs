//! The Leibniz algebra engine.
//!
//! An algebra is presented by its structure constants: `e_i · e_j =
//! Σ_k c[i][j][k] e_k` over a fixed basis.  Elements are coordinate vectors
//! relative to that basis.  Checking the left Leibniz identity
//! `a(bc) = (ab)c + b(ac)` on all basis triples suffices by bilinearity.

mod maps;
mod subalgebra;

pub use maps::{Quotient, Restriction};
pub use subalgebra::{Normalizers, SubalgebraHandle, SubnormalVerdict};

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldScalar};
use crate::linalg::matrix::{vec_add, vec_is_zero, vec_scale};
use crate::linalg::{Matrix, Subspace};

/// An element of an algebra: its coordinate vector in the presentation basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    pub coords: Vec<FieldScalar>,
}

impl Element {
    pub fn new(coords: Vec<FieldScalar>) -> Self {
        Element { coords }
    }

    pub fn zero(dim: usize, field: FieldDescriptor) -> Self {
        Element { coords: vec![field.zero(); dim] }
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.coords)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element::new(vec_add(&self.coords, &other.coords))
    }

    pub fn scale(&self, s: &FieldScalar) -> Element {
        Element::new(vec_scale(s, &self.coords))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// Verdict of the Leibniz identity check: pass, or the first failing basis
/// triple together with both sides' coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeibnizVerdict {
    Pass,
    Fail {
        /// 0-based basis indices (a, b, c) with a(bc) ≠ (ab)c + b(ac).
        triple: (usize, usize, usize),
        lhs: Vec<FieldScalar>,
        rhs: Vec<FieldScalar>,
    },
}

impl LeibnizVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, LeibnizVerdict::Pass)
    }
}

/// A finite-dimensional algebra presented by structure constants.
///
/// The presentation itself is just a tensor; [`Algebra::verify_leibniz`]
/// decides whether it is a left Leibniz algebra.  Loaders and generators
/// gate on that verdict before letting a presentation into any corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    field: FieldDescriptor,
    /// Flattened n³ tensor, c[i][j][k] at (i·n + j)·n + k.
    structure: Vec<FieldScalar>,
    labels: Option<Vec<String>>,
}

impl Algebra {
    /// Build from the full structure tensor.
    pub fn new(
        dim: usize,
        field: FieldDescriptor,
        structure: Vec<FieldScalar>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if structure.len() != dim * dim * dim {
            return Err(Error::Parse(format!(
                "structure tensor has {} entries, expected {}",
                structure.len(),
                dim * dim * dim
            )));
        }
        if let Some(l) = &labels {
            if l.len() != dim {
                return Err(Error::Parse(format!(
                    "{} labels for dimension {}",
                    l.len(),
                    dim
                )));
            }
        }
        for s in &structure {
            if s.descriptor() != field {
                return Err(Error::MixedFields(
                    field.to_string(),
                    s.descriptor().to_string(),
                ));
            }
        }
        Ok(Algebra { dim, field, structure, labels })
    }

    /// Build from a sparse product table: unlisted products are zero.
    /// `products` maps (i, j) to the coordinates of e_i · e_j (0-based).
    pub fn from_products(
        dim: usize,
        field: FieldDescriptor,
        products: &[(usize, usize, Vec<FieldScalar>)],
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut structure = vec![field.zero(); dim * dim * dim];
        for (i, j, out) in products {
            if *i >= dim || *j >= dim || out.len() != dim {
                return Err(Error::Parse(format!(
                    "product entry ({}, {}) out of range for dimension {}",
                    i, j, dim
                )));
            }
            for (k, v) in out.iter().enumerate() {
                structure[(i * dim + j) * dim + k] = v.clone();
            }
        }
        Algebra::new(dim, field, structure, labels)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Structure constant c[i][j][k] (0-based).
    pub fn c(&self, i: usize, j: usize, k: usize) -> &FieldScalar {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    /// The coordinates of e_i · e_j.
    pub fn basis_product(&self, i: usize, j: usize) -> &[FieldScalar] {
        &self.structure[(i * self.dim + j) * self.dim..(i * self.dim + j + 1) * self.dim]
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut coords = vec![self.field.zero(); self.dim];
        coords[i] = self.field.one();
        Element::new(coords)
    }

    pub fn zero_element(&self) -> Element {
        Element::zero(self.dim, self.field)
    }

    pub fn element_from_i64(&self, coords: &[i64]) -> Element {
        assert_eq!(coords.len(), self.dim);
        Element::new(coords.iter().map(|&v| self.field.from_i64(v)).collect())
    }

    /// Bilinear product of two coordinate vectors.
    pub fn multiply(&self, x: &[FieldScalar], y: &[FieldScalar]) -> Vec<FieldScalar> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![self.field.zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let factor = x[i].mul(&y[j]);
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *o = o.add(&factor.mul(c));
                    }
                }
            }
        }
        out
    }

    pub fn product(&self, x: &Element, y: &Element) -> Element {
        Element::new(self.multiply(&x.coords, &y.coords))
    }

    /// Verify the left Leibniz identity a(bc) = (ab)c + b(ac) on all basis
    /// triples.  Failure is a verdict, not an error.
    pub fn verify_leibniz(&self) -> LeibnizVerdict {
        for a in 0..self.dim {
            let ea = self.basis_element(a).coords;
            for b in 0..self.dim {
                let eb = self.basis_element(b).coords;
                for c in 0..self.dim {
                    let bc = self.basis_product(b, c);
                    let lhs = self.multiply(&ea, bc);
                    let ab = self.basis_product(a, b);
                    let ac = self.basis_product(a, c);
                    let rhs = vec_add(&self.multiply(ab, &self.basis_element(c).coords), &self.multiply(&eb, ac));
                    if lhs != rhs {
                        return LeibnizVerdict::Fail { triple: (a, b, c), lhs, rhs };
                    }
                }
            }
        }
        LeibnizVerdict::Pass
    }

    /// Full antisymmetry: x·x = 0 for every x.  Equivalent to e_i·e_i = 0
    /// and e_i·e_j + e_j·e_i = 0 on the basis, over any characteristic.
    pub fn is_anticommutative(&self) -> bool {
        for i in 0..self.dim {
            if !vec_is_zero(self.basis_product(i, i)) {
                return false;
            }
            for j in i + 1..self.dim {
                if !vec_is_zero(&vec_add(self.basis_product(i, j), self.basis_product(j, i))) {
                    return false;
                }
            }
        }
        true
    }

    /// A Lie algebra is an anticommutative Leibniz algebra.
    pub fn is_lie(&self) -> bool {
        self.verify_leibniz().passed() && self.is_anticommutative()
    }

    /// Matrix of the left multiplication L_a : x ↦ a·x.
    pub fn left_mult(&self, a: &Element) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim, self.field);
        for i in 0..self.dim {
            if a.coords[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        let v = m.at(k, j).add(&a.coords[i].mul(c));
                        m.set(k, j, v);
                    }
                }
            }
        }
        m
    }

    /// Matrix of the right multiplication R_a : x ↦ x·a.
    pub fn right_mult(&self, a: &Element) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim, self.field);
        for j in 0..self.dim {
            if a.coords[j].is_zero() {
                continue;
            }
            for i in 0..self.dim {
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        let v = m.at(k, i).add(&a.coords[j].mul(c));
                        m.set(k, i, v);
                    }
                }
            }
        }
        m
    }

    /// Left-normed power a^k: a¹ = a, a^{k+1} = a·a^k.
    pub fn power_element(&self, a: &Element, k: u64) -> Element {
        assert!(k >= 1, "powers start at 1");
        let mut acc = a.clone();
        for _ in 1..k {
            acc = self.product(a, &acc);
        }
        acc
    }

    /// Span of all products u·v with u in `u`, v in `v` (bilinearity makes
    /// basis-vector products enough).
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
        assert_eq!(u.ambient_dim(), self.dim);
        assert_eq!(v.ambient_dim(), self.dim);
        let mut rows = Vec::with_capacity(u.dim() * v.dim());
        for x in u.basis_vectors() {
            for y in v.basis_vectors() {
                rows.push(self.multiply(x, y));
            }
        }
        Subspace::from_spanning(Matrix::from_rows(rows, self.dim, self.field))
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim, self.field)
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.dim, self.field)
    }

    /// Lower central series A¹ = A, A^{k+1} = A·A^k, until stabilization.
    /// The algebra is nilpotent iff the final term is zero.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut chain = vec![self.full_space()];
        loop {
            let last = chain.last().expect("chain never empty");
            let next = self.product_space(&self.full_space(), last);
            if &next == last {
                break;
            }
            let stop = next.is_zero();
            chain.push(next);
            if stop {
                break;
            }
        }
        chain
    }

    /// Derived series A^(0) = A, A^(r+1) = (A^(r))², until stabilization.
    /// The algebra is soluble iff the final term is zero.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut chain = vec![self.full_space()];
        loop {
            let last = chain.last().expect("chain never empty");
            let next = self.product_space(last, last);
            if &next == last {
                break;
            }
            let stop = next.is_zero();
            chain.push(next);
            if stop {
                break;
            }
        }
        chain
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series()
            .last()
            .map_or(true, Subspace::is_zero)
    }

    /// Smallest k with A^{k+1} = 0, when nilpotent (an abelian algebra has
    /// class 1, the zero algebra class 0).
    pub fn nilpotency_class(&self) -> Option<usize> {
        let chain = self.lower_central_series();
        if chain.last().map_or(true, Subspace::is_zero) {
            Some(chain.len() - 1)
        } else {
            None
        }
    }

    pub fn is_soluble(&self) -> bool {
        self.derived_series().last().map_or(true, Subspace::is_zero)
    }

    /// The left centre {z : z·a = 0 for all a}, the intersection of the
    /// kernels of z ↦ z·e_j.  Always a two-sided ideal containing every
    /// square a² (both verified here).
    pub fn left_centre(&self) -> Subspace {
        let mut stacked = Matrix::zero(0, self.dim, self.field);
        for j in 0..self.dim {
            stacked = stacked.stack(&self.right_mult(&self.basis_element(j)));
        }
        let lc = stacked.kernel();
        assert!(
            self.is_ideal(&lc),
            "left centre must be a two-sided ideal"
        );
        for i in 0..self.dim {
            for j in 0..self.dim {
                let s = self.basis_element(i).add(&self.basis_element(j));
                let sq = self.product(&s, &s);
                assert!(lc.contains_vector(&sq.coords), "a² must lie in the left centre");
            }
        }
        lc
    }

    /// Quotient by the left centre, which must be a Lie algebra.
    pub fn lie_quotient_verdict(&self) -> bool {
        let lc = self.left_centre();
        let q = self
            .quotient(&lc)
            .expect("left centre is an ideal");
        q.algebra().is_anticommutative()
    }

    /// Is `s` a two-sided ideal: A·S ⊆ S and S·A ⊆ S.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let a = self.full_space();
        s.contains(&self.product_space(&a, s)) && s.contains(&self.product_space(s, &a))
    }

    /// Is `s` a right ideal: S·A ⊆ S.
    pub fn is_right_ideal(&self, s: &Subspace) -> bool {
        s.contains(&self.product_space(s, &self.full_space()))
    }

    /// Is `s` closed under multiplication.
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains(&self.product_space(s, s))
    }

    /// Centralizer {x : x·U = U·x = 0} of a subalgebra, the joint kernel of
    /// the left and right multiplications by a basis of U.  Verified to be a
    /// subalgebra, and an ideal whenever U is one.
    pub fn centralizer(&self, u: &SubalgebraHandle) -> Subspace {
        let mut stacked = Matrix::zero(0, self.dim, self.field);
        for b in u.space().basis_vectors() {
            let e = Element::new(b.to_vec());
            stacked = stacked.stack(&self.right_mult(&e)); // x·b as function of x
            stacked = stacked.stack(&self.left_mult(&e)); // b·x as function of x
        }
        let c = stacked.kernel();
        assert!(self.is_subalgebra(&c), "centralizer must be a subalgebra");
        if self.is_ideal(u.space()) {
            assert!(self.is_ideal(&c), "centralizer of an ideal must be an ideal");
        }
        c
    }
}

#[cfg(test)]
mod tests;
