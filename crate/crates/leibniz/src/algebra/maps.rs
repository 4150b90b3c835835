//! Quotients by two-sided ideals and restriction to subalgebras.

use crate::algebra::{Algebra, Element, SubalgebraHandle};
use crate::error::{Error, Result};
use crate::field::FieldScalar;
use crate::linalg::{Matrix, Subspace};

/// Quotient presentation A/K with its projection and section maps.
///
/// The quotient basis consists of the images of the standard basis vectors
/// at the non-pivot coordinates of K's canonical basis, so the section is a
/// genuine linear splitting of the projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    algebra: Algebra,
    kernel: Subspace,
    /// q×n matrix of the projection A → A/K.
    projection: Matrix,
    /// n×q matrix of the section A/K → A (images of the quotient basis).
    section: Matrix,
}

impl Algebra {
    /// Quotient by a two-sided ideal; the induced presentation is built on a
    /// complement basis and must itself satisfy the Leibniz identity when
    /// the parent does.
    pub fn quotient(&self, k: &Subspace) -> Result<Quotient> {
        if !self.is_ideal(k) {
            return Err(Error::NotAnIdeal);
        }
        let field = self.field();
        let n = self.dim();
        let pivots = k.pivots();
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let q = free.len();

        // projection: reduce mod K, then read off the free coordinates.
        let mut projection = Matrix::zero(q, n, field);
        for j in 0..n {
            let mut e = vec![field.zero(); n];
            e[j] = field.one();
            let reduced = k.reduce_vector(&e);
            for (row, &f) in free.iter().enumerate() {
                projection.set(row, j, reduced[f].clone());
            }
        }
        let mut section = Matrix::zero(n, q, field);
        for (col, &f) in free.iter().enumerate() {
            section.set(f, col, field.one());
        }

        // Induced products on the quotient basis.
        let mut products = Vec::new();
        for (s, &fs) in free.iter().enumerate() {
            for (t, &ft) in free.iter().enumerate() {
                let prod = self.basis_product(fs, ft);
                let out = projection.apply(prod);
                if !out.iter().all(FieldScalar::is_zero) {
                    products.push((s, t, out));
                }
            }
        }
        let algebra = Algebra::from_products(q, field, &products, None)?;
        if self.verify_leibniz().passed() {
            assert!(
                algebra.verify_leibniz().passed(),
                "quotient of a Leibniz algebra must be Leibniz"
            );
        }
        Ok(Quotient {
            algebra,
            kernel: k.clone(),
            projection,
            section,
        })
    }

    /// Structure constants of a closed subspace on its own canonical basis.
    pub fn restrict(&self, u: &SubalgebraHandle) -> Restriction {
        self.restrict_subspace(u.space())
            .expect("handle certifies closure")
    }

    /// As [`Algebra::restrict`], checking closure.
    pub fn restrict_subspace(&self, u: &Subspace) -> Result<Restriction> {
        if !self.is_subalgebra(u) {
            return Err(Error::NotClosed);
        }
        let field = self.field();
        let r = u.dim();
        let mut products = Vec::new();
        let basis: Vec<&[FieldScalar]> = u.basis_vectors().collect();
        for s in 0..r {
            for t in 0..r {
                let prod = self.multiply(basis[s], basis[t]);
                let coords = u
                    .coordinates_of(&prod)
                    .expect("closure puts products inside the subspace");
                if !coords.iter().all(FieldScalar::is_zero) {
                    products.push((s, t, coords));
                }
            }
        }
        let algebra = Algebra::from_products(r, field, &products, None)?;
        Ok(Restriction {
            algebra,
            space: u.clone(),
        })
    }
}

impl Quotient {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn project_element(&self, x: &Element) -> Element {
        Element::new(self.projection.apply(&x.coords))
    }

    /// Canonical coset representative of a quotient element.
    pub fn lift_element(&self, x: &Element) -> Element {
        Element::new(self.section.apply(&x.coords))
    }

    pub fn project_subspace(&self, s: &Subspace) -> Subspace {
        let rows: Vec<Vec<FieldScalar>> =
            s.basis_vectors().map(|v| self.projection.apply(v)).collect();
        Subspace::from_spanning(Matrix::from_rows(
            rows,
            self.algebra.dim(),
            self.algebra.field(),
        ))
    }

    /// Full preimage of a quotient subspace: section image plus the kernel.
    pub fn lift_subspace(&self, s: &Subspace) -> Subspace {
        let rows: Vec<Vec<FieldScalar>> =
            s.basis_vectors().map(|v| self.section.apply(v)).collect();
        let lifted = Subspace::from_spanning(Matrix::from_rows(
            rows,
            self.kernel.ambient_dim(),
            self.algebra.field(),
        ));
        lifted.sum(&self.kernel).expect("same ambient")
    }
}

/// A subalgebra presented on its own basis, with the embedding back into
/// the ambient algebra.
#[derive(Debug, Clone)]
pub struct Restriction {
    algebra: Algebra,
    space: Subspace,
}

impl Restriction {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Sub-coordinates → ambient coordinates.
    pub fn embed_element(&self, x: &Element) -> Element {
        Element::new(self.space.embed_coordinates(&x.coords))
    }

    /// Ambient member of the subspace → sub-coordinates.
    pub fn restrict_element(&self, x: &Element) -> Option<Element> {
        self.space.coordinates_of(&x.coords).map(Element::new)
    }

    pub fn embed_subspace(&self, s: &Subspace) -> Subspace {
        let rows: Vec<Vec<FieldScalar>> = s
            .basis_vectors()
            .map(|v| self.space.embed_coordinates(v))
            .collect();
        Subspace::from_spanning(Matrix::from_rows(
            rows,
            self.space.ambient_dim(),
            self.algebra.field(),
        ))
    }

    /// Ambient subspace contained in this subalgebra → sub-coordinates.
    pub fn restrict_subspace(&self, s: &Subspace) -> Option<Subspace> {
        let mut rows = Vec::with_capacity(s.dim());
        for v in s.basis_vectors() {
            rows.push(self.space.coordinates_of(v)?);
        }
        Some(Subspace::from_spanning(Matrix::from_rows(
            rows,
            self.algebra.dim(),
            self.algebra.field(),
        )))
    }
}
