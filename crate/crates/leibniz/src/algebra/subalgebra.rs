//! Subalgebra handles, normalizers and right subnormality.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

/// A subspace together with a verified multiplicative-closure certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubalgebraHandle {
    space: Subspace,
}

impl SubalgebraHandle {
    /// Verify closure (every product of two basis vectors stays inside) and
    /// wrap the subspace.
    pub fn new(algebra: &Algebra, space: Subspace) -> Result<Self> {
        if !algebra.is_subalgebra(&space) {
            return Err(Error::NotClosed);
        }
        Ok(SubalgebraHandle { space })
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// The three normalizers of a subalgebra.  The left normalizer and the full
/// normalizer are always subalgebras (verified); the right normalizer need
/// not be one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalizers {
    pub left: Subspace,
    pub right: Subspace,
    pub full: Subspace,
}

/// Verdict of the right-subnormality test, with the canonical chain
/// X_0 = A ⊇ X_1 ⊇ … computed by iterated right-ideal closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubnormalVerdict {
    pub is_right_subnormal: bool,
    pub chain: Vec<Subspace>,
}

impl Algebra {
    /// The full space as a handle.
    pub fn whole_algebra(&self) -> SubalgebraHandle {
        SubalgebraHandle::new(self, self.full_space()).expect("A is closed")
    }

    /// Left normalizer {a : a·U ⊆ U}, right normalizer {a : U·a ⊆ U} and
    /// their intersection, each as the solution space of a linear system.
    pub fn normalizers(&self, u: &SubalgebraHandle) -> Normalizers {
        let ann = u.space().annihilator();
        let mut left_sys = Matrix::zero(0, self.dim(), self.field());
        let mut right_sys = Matrix::zero(0, self.dim(), self.field());
        for b in u.space().basis_vectors() {
            let e = Element::new(b.to_vec());
            // a·b as a function of a is R_b; b·a as a function of a is L_b.
            left_sys = left_sys.stack(&ann.mul(&self.right_mult(&e)));
            right_sys = right_sys.stack(&ann.mul(&self.left_mult(&e)));
        }
        let left = left_sys.kernel();
        let right = right_sys.kernel();
        let full = left.intersect(&right).expect("same ambient");
        assert!(
            self.is_subalgebra(&left),
            "left normalizer must be a subalgebra"
        );
        assert!(
            self.is_subalgebra(&full),
            "full normalizer must be a subalgebra"
        );
        Normalizers { left, right, full }
    }

    /// Canonical right-subnormality test: X_0 = A, X_{i+1} = the smallest
    /// right ideal of X_i containing U.  The chain always stabilizes; the
    /// verdict is whether it stabilizes at U itself.
    pub fn right_subnormal_chain(&self, u: &SubalgebraHandle) -> SubnormalVerdict {
        let mut chain = vec![self.full_space()];
        loop {
            let current = chain.last().expect("chain never empty").clone();
            // Iterated closure of U under right multiplication by current.
            let mut y = u.space().clone();
            loop {
                let grown = y
                    .sum(&self.product_space(&y, &current))
                    .expect("same ambient");
                if grown == y {
                    break;
                }
                y = grown;
            }
            if y == current {
                break;
            }
            chain.push(y);
        }
        let is_right_subnormal = chain.last().expect("nonempty") == u.space();
        SubnormalVerdict { is_right_subnormal, chain }
    }
}
