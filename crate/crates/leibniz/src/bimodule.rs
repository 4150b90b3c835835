//! Two-sided representations of Leibniz algebras as (S, T) operator pairs.
//!
//! A bimodule on M is a pair of linear maps a ↦ T_a (left action) and
//! a ↦ S_a (right action) satisfying, on all pairs a, b:
//!
//! ```text
//! T_a ∘ T_b = T_{ab} + T_b ∘ T_a
//! T_a ∘ S_b = S_b ∘ T_a + S_{ab}
//! S_{ab}    = S_b ∘ S_a + T_a ∘ S_b
//! ```
//!
//! The first identity makes M a module for the Lie algebra of T-operators.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::{random_scalar, FieldScalar};
use crate::linalg::Matrix;

/// Verdict of the bimodule-identity check: pass, or the first violated
/// identity (1, 2 or 3) together with the basis pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BimoduleVerdict {
    Pass,
    Fail { identity: u8, pair: (usize, usize) },
}

impl BimoduleVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, BimoduleVerdict::Pass)
    }
}

/// Check the three (S, T) identities on all algebra basis pairs.
pub fn verify_bimodule(
    algebra: &Algebra,
    t_ops: &[Matrix],
    s_ops: &[Matrix],
) -> BimoduleVerdict {
    let n = algebra.dim();
    let op_of = |ops: &[Matrix], coords: &[FieldScalar]| -> Matrix {
        let m = ops.first().map_or(0, Matrix::rows);
        let mut out = Matrix::zero(m, m, algebra.field());
        for (c, op) in coords.iter().zip(ops) {
            if !c.is_zero() {
                out = out.add(&op.scale(c));
            }
        }
        out
    };
    for i in 0..n {
        for j in 0..n {
            let prod = algebra.basis_product(i, j);
            let t_ab = op_of(t_ops, prod);
            let s_ab = op_of(s_ops, prod);
            let (ti, tj) = (&t_ops[i], &t_ops[j]);
            let (si, sj) = (&s_ops[i], &s_ops[j]);
            if ti.mul(tj) != t_ab.add(&tj.mul(ti)) {
                return BimoduleVerdict::Fail { identity: 1, pair: (i, j) };
            }
            if ti.mul(sj) != sj.mul(ti).add(&s_ab) {
                return BimoduleVerdict::Fail { identity: 2, pair: (i, j) };
            }
            if s_ab != sj.mul(si).add(&ti.mul(sj)) {
                return BimoduleVerdict::Fail { identity: 3, pair: (i, j) };
            }
        }
    }
    BimoduleVerdict::Pass
}

/// A verified bimodule: the identities hold on all basis pairs.
#[derive(Debug, Clone)]
pub struct Bimodule {
    algebra: Algebra,
    module_dim: usize,
    t_ops: Vec<Matrix>,
    s_ops: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(
        algebra: Algebra,
        t_ops: Vec<Matrix>,
        s_ops: Vec<Matrix>,
    ) -> Result<Self> {
        let n = algebra.dim();
        if t_ops.len() != n || s_ops.len() != n {
            return Err(Error::NotBimodule(format!(
                "expected {} operators per family, got T: {}, S: {}",
                n,
                t_ops.len(),
                s_ops.len()
            )));
        }
        let m = t_ops.first().map_or(0, Matrix::rows);
        for op in t_ops.iter().chain(&s_ops) {
            if op.rows() != m || op.cols() != m || op.field() != algebra.field() {
                return Err(Error::NotBimodule("operator shapes are inconsistent".into()));
            }
        }
        match verify_bimodule(&algebra, &t_ops, &s_ops) {
            BimoduleVerdict::Pass => Ok(Bimodule { algebra, module_dim: m, t_ops, s_ops }),
            BimoduleVerdict::Fail { identity, pair } => Err(Error::NotBimodule(format!(
                "identity {} fails at basis pair ({}, {})",
                identity, pair.0, pair.1
            ))),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn t_basis_ops(&self) -> &[Matrix] {
        &self.t_ops
    }

    pub fn s_basis_ops(&self) -> &[Matrix] {
        &self.s_ops
    }

    /// T_a for an arbitrary element, by linearity.
    pub fn t_of(&self, a: &Element) -> Matrix {
        self.combine(&self.t_ops, a)
    }

    /// S_a for an arbitrary element, by linearity.
    pub fn s_of(&self, a: &Element) -> Matrix {
        self.combine(&self.s_ops, a)
    }

    fn combine(&self, ops: &[Matrix], a: &Element) -> Matrix {
        let mut out = Matrix::zero(self.module_dim, self.module_dim, self.algebra.field());
        for (c, op) in a.coords.iter().zip(ops) {
            if !c.is_zero() {
                out = out.add(&op.scale(c));
            }
        }
        out
    }
}

/// The regular bimodule: A acting on itself with T_a = L_a and S_a = R_a.
/// The bimodule identities restate the Leibniz identity, so construction
/// cannot fail on a verified algebra.
pub fn regular_bimodule(algebra: &Algebra) -> Bimodule {
    let t: Vec<Matrix> = (0..algebra.dim())
        .map(|i| algebra.left_mult(&algebra.basis_element(i)))
        .collect();
    let s: Vec<Matrix> = (0..algebra.dim())
        .map(|i| algebra.right_mult(&algebra.basis_element(i)))
        .collect();
    Bimodule::new(algebra.clone(), t, s).expect("the regular bimodule always verifies")
}

/// Number of random elements sampled when checking the nil hypothesis.
/// Nilpotency of the basis operators does not imply it for sums, so the
/// random sample guards the precondition honestly (sound but incomplete
/// over Q; the hypothesis is only finitely checkable over finite fields).
const HYPOTHESIS_SAMPLES: usize = 20;

/// Find a nonzero module vector annihilated by every T_a and S_a, given
/// that all T_a are nilpotent.
///
/// First asserts S_a nilpotent for all basis a, then intersects the kernels
/// of all basis T- and S-operators; the underlying representation theorem
/// guarantees the joint kernel is nonzero.  `HypothesisViolated` reports a
/// non-nilpotent T; `TheoremViolated` must never fire.
pub fn engel_witness(bimodule: &Bimodule) -> Result<Vec<FieldScalar>> {
    let m = bimodule.module_dim();
    if m == 0 {
        return Err(Error::PreconditionViolated("module dimension is zero".into()));
    }
    let algebra = bimodule.algebra();
    for (i, t) in bimodule.t_basis_ops().iter().enumerate() {
        if !t.is_nilpotent() {
            return Err(Error::HypothesisViolated(format!(
                "T is not nilpotent at basis element {}",
                i
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..HYPOTHESIS_SAMPLES {
        let coords: Vec<FieldScalar> = (0..algebra.dim())
            .map(|_| random_scalar(&mut rng, &algebra.field()))
            .collect();
        let a = Element::new(coords);
        if !bimodule.t_of(&a).is_nilpotent() {
            return Err(Error::HypothesisViolated(format!(
                "T is not nilpotent at sampled element {}",
                a
            )));
        }
    }
    for (i, s) in bimodule.s_basis_ops().iter().enumerate() {
        if !s.is_nilpotent() {
            return Err(Error::TheoremViolated(format!(
                "S should be nilpotent at basis element {}",
                i
            )));
        }
    }
    let mut stacked = Matrix::zero(0, m, algebra.field());
    for op in bimodule.t_basis_ops().iter().chain(bimodule.s_basis_ops()) {
        stacked = stacked.stack(op);
    }
    let joint = stacked.kernel();
    if joint.is_zero() {
        return Err(Error::TheoremViolated(
            "joint kernel of a nil representation should be nonzero".into(),
        ));
    }
    // Lexicographically first canonical basis vector.
    Ok(joint.basis().row(0).to_vec())
}
