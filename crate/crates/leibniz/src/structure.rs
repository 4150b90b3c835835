//! Ideal-theoretic structure over prime fields: minimal ideals, socle,
//! Frattini subalgebra, primitive algebras, complements and C-conjugacy.
//!
//! Everything enumeration-based is restricted to prime fields with an
//! explicit candidate budget; over Q these operations return
//! `InfiniteField` rather than an unsound answer.

use serde::Serialize;

use crate::algebra::{Algebra, Element, SubalgebraHandle};
use crate::engel::engel_subalgebra;
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldScalar};
use crate::linalg::{enumerate_subspaces, Matrix, Subspace};

/// Certificate of primitivity: the unique minimal ideal (= socle), its
/// self-centralizing property, and — once computed — a complement.
#[derive(Debug, Clone, Serialize)]
pub struct PrimitiveCertificate {
    pub socle: Subspace,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement: Option<Subspace>,
    pub is_lie: bool,
}

/// Smallest two-sided ideal containing a subspace: iterate the span under
/// left and right multiplication by the whole algebra until stable.
pub fn ideal_closure(algebra: &Algebra, seed: &Subspace) -> Subspace {
    let full = algebra.full_space();
    let mut current = seed.clone();
    loop {
        let grown = current
            .sum(&algebra.product_space(&full, &current))
            .expect("same ambient")
            .sum(&algebra.product_space(&current, &full))
            .expect("same ambient");
        if grown == current {
            return current;
        }
        current = grown;
    }
}

/// Ideal closure of a single element.
pub fn ideal_closure_of_element(algebra: &Algebra, v: &Element) -> Subspace {
    let span = Subspace::from_spanning(Matrix::from_rows(
        vec![v.coords.clone()],
        algebra.dim(),
        algebra.field(),
    ));
    ideal_closure(algebra, &span)
}

/// Canonical representatives of the projective points of F_p^dim:
/// coordinate tuples with first nonzero entry 1, lexicographic order.
fn projective_points(dim: usize, field: &FieldDescriptor) -> Result<Vec<Vec<FieldScalar>>> {
    let p = match field {
        FieldDescriptor::PrimeField(p) => *p,
        FieldDescriptor::Rationals => return Err(Error::InfiniteField),
    };
    let mut out = Vec::new();
    let mut digits = vec![0u64; dim];
    loop {
        // advance odometer (most significant digit first)
        let mut i = dim;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
        if digits.iter().find(|&&d| d != 0) == Some(&1) {
            out.push(
                digits
                    .iter()
                    .map(|&d| field.from_i64(d as i64))
                    .collect(),
            );
        }
    }
}

fn projective_budget(dim: usize, p: u64, budget: u64) -> Result<()> {
    let count = ((p as u128).pow(dim as u32) - 1) / (p as u128 - 1).max(1);
    if count > budget as u128 {
        return Err(Error::BudgetExceeded { needed: count, budget });
    }
    Ok(())
}

/// Projective points of a subspace, via canonical coefficient tuples over
/// its basis.
fn points_of_subspace(space: &Subspace, budget: u64) -> Result<Vec<Vec<FieldScalar>>> {
    let p = space
        .field()
        .cardinality()
        .ok_or(Error::InfiniteField)?;
    projective_budget(space.dim(), p, budget)?;
    Ok(projective_points(space.dim(), &space.field())?
        .into_iter()
        .map(|coeffs| space.embed_coordinates(&coeffs))
        .collect())
}

/// All minimal two-sided ideals, by taking the inclusion-minimal distinct
/// ideal closures of the projective points.  Each returned ideal is
/// re-verified minimal: the closure of every one of its points is the
/// ideal itself.
pub fn minimal_ideals(algebra: &Algebra, budget: u64) -> Result<Vec<Subspace>> {
    let p = algebra
        .field()
        .cardinality()
        .ok_or(Error::InfiniteField)?;
    if algebra.dim() == 0 {
        return Ok(Vec::new());
    }
    projective_budget(algebra.dim(), p, budget)?;
    let mut closures: Vec<Subspace> = Vec::new();
    for point in projective_points(algebra.dim(), &algebra.field())? {
        let closure = ideal_closure_of_element(algebra, &Element::new(point));
        if !closures.contains(&closure) {
            closures.push(closure);
        }
    }
    let minimal: Vec<Subspace> = closures
        .iter()
        .filter(|c| {
            !closures
                .iter()
                .any(|other| other.dim() < c.dim() && c.contains(other))
        })
        .cloned()
        .collect();
    for ideal in &minimal {
        for point in points_of_subspace(ideal, budget)? {
            assert_eq!(
                ideal_closure_of_element(algebra, &Element::new(point)),
                *ideal,
                "a minimal ideal may not contain a smaller nonzero ideal"
            );
        }
    }
    Ok(minimal)
}

/// The socle: the subspace sum of the minimal ideals.
pub fn socle(algebra: &Algebra, budget: u64) -> Result<Subspace> {
    let mut sum = algebra.zero_space();
    for ideal in minimal_ideals(algebra, budget)? {
        sum = sum.sum(&ideal).expect("same ambient");
    }
    assert!(algebra.is_ideal(&sum), "the socle must be a two-sided ideal");
    Ok(sum)
}

/// All inclusion-maximal proper subalgebras, found by filtering the
/// exhaustive subspace enumeration for multiplicative closure.
pub fn maximal_subalgebras(algebra: &Algebra, budget: u64) -> Result<Vec<Subspace>> {
    let closed: Vec<Subspace> = enumerate_subspaces(algebra.dim(), &algebra.field(), None, budget)?
        .filter(|s| s.dim() < algebra.dim() && algebra.is_subalgebra(s))
        .collect();
    Ok(closed
        .iter()
        .filter(|s| {
            !closed
                .iter()
                .any(|other| other.dim() > s.dim() && other.contains(s))
        })
        .cloned()
        .collect())
}

/// The Frattini subalgebra: the intersection of the maximal subalgebras
/// (the whole algebra when none exist, i.e. only in dimension zero).
pub fn frattini(algebra: &Algebra, budget: u64) -> Result<Subspace> {
    let maximal = maximal_subalgebras(algebra, budget)?;
    let mut inter = algebra.full_space();
    for m in &maximal {
        inter = inter.intersect(m).expect("same ambient");
    }
    for m in &maximal {
        assert_eq!(
            inter.intersect(m).expect("same ambient"),
            inter,
            "Frattini subalgebra must lie inside every maximal subalgebra"
        );
    }
    Ok(inter)
}

/// Hypothesis bundle for the Frattini nilpotency theorem: U right subnormal,
/// V ⊆ Φ(A) a two-sided ideal of U with U/V nilpotent ⟹ U nilpotent.
/// A `false` return would falsify the theorem; it must never happen.
pub fn frattini_nilpotency_check(
    algebra: &Algebra,
    u: &SubalgebraHandle,
    v: &Subspace,
    budget: u64,
) -> Result<bool> {
    if !algebra.right_subnormal_chain(u).is_right_subnormal {
        return Err(Error::PreconditionViolated(
            "U is not right subnormal in A".into(),
        ));
    }
    let phi = frattini(algebra, budget)?;
    if !phi.contains(v) {
        return Err(Error::PreconditionViolated(
            "V is not contained in the Frattini subalgebra".into(),
        ));
    }
    if !u.space().contains(v) {
        return Err(Error::PreconditionViolated("V is not contained in U".into()));
    }
    let restriction = algebra.restrict(u);
    let v_in_u = restriction
        .restrict_subspace(v)
        .expect("V lies inside U");
    if !restriction.algebra().is_ideal(&v_in_u) {
        return Err(Error::PreconditionViolated(
            "V is not a two-sided ideal of U".into(),
        ));
    }
    let u_mod_v = restriction.algebra().quotient(&v_in_u)?;
    if !u_mod_v.algebra().is_nilpotent() {
        return Err(Error::PreconditionViolated("U/V is not nilpotent".into()));
    }
    Ok(restriction.algebra().is_nilpotent())
}

/// Decide primitivity: soluble, with a minimal ideal equal to its own
/// centralizer.  Returns the certificate (without complement), or `None`.
pub fn is_primitive(algebra: &Algebra, budget: u64) -> Result<Option<PrimitiveCertificate>> {
    if algebra.field().cardinality().is_none() {
        return Err(Error::InfiniteField);
    }
    if !algebra.is_soluble() {
        return Ok(None);
    }
    let minimal = minimal_ideals(algebra, budget)?;
    let socle_candidate = minimal.iter().find(|c| {
        let handle = SubalgebraHandle::new(algebra, (*c).clone())
            .expect("an ideal is closed");
        algebra.centralizer(&handle) == **c
    });
    let Some(c) = socle_candidate else {
        return Ok(None);
    };
    assert_eq!(
        minimal.len(),
        1,
        "a primitive algebra has exactly one minimal ideal"
    );
    let is_lie = algebra.is_anticommutative();
    if !is_lie {
        assert_eq!(
            c,
            &algebra.left_centre(),
            "in a non-Lie primitive algebra the socle equals the left centre"
        );
    }
    Ok(Some(PrimitiveCertificate {
        socle: c.clone(),
        complement: None,
        is_lie,
    }))
}

/// Construct a complement to the socle of a primitive algebra:
/// take a minimal ideal B/C of P/C, find b in B acting nontrivially on C,
/// and return E_P(b).  The splitting P = M ⊕ C is verified.
pub fn primitive_complement(algebra: &Algebra, budget: u64) -> Result<Subspace> {
    let cert = is_primitive(algebra, budget)?
        .ok_or_else(|| Error::PreconditionViolated("algebra is not primitive".into()))?;
    assert!(algebra.is_soluble(), "primitivity includes solubility");
    let c = cert.socle;
    if c.is_full() {
        return Err(Error::NoComplementNeeded);
    }
    let quotient = algebra.quotient(&c)?;
    let b_bar = minimal_ideals(quotient.algebra(), budget)?
        .into_iter()
        .next()
        .expect("a nonzero algebra has a minimal ideal");
    let b = quotient.lift_subspace(&b_bar);

    let c_basis: Vec<&[FieldScalar]> = c.basis_vectors().collect();
    let mut chosen = None;
    for point in points_of_subspace(&b, budget)? {
        let candidate = Element::new(point);
        let acts = c_basis
            .iter()
            .any(|cv| !algebra.multiply(&candidate.coords, cv).iter().all(FieldScalar::is_zero));
        if acts {
            chosen = Some(candidate);
            break;
        }
    }
    let b_elem = chosen.expect("some element of B must act nontrivially on the socle");
    let m = engel_subalgebra(algebra, &b_elem).space;
    assert!(
        m.sum(&c).expect("same ambient").is_full(),
        "complement plus socle must be the whole algebra"
    );
    assert!(
        m.intersect(&c).expect("same ambient").is_zero(),
        "complement must meet the socle trivially"
    );
    assert!(algebra.is_subalgebra(&m), "complement must be closed");
    Ok(m)
}

/// Solve for c in an abelian two-sided ideal with (1 + L_c)(u) = v.
/// Returns a verified conjugating element, or `None` when none exists.
pub fn conjugating_element(
    algebra: &Algebra,
    c_ideal: &Subspace,
    u: &Subspace,
    v: &Subspace,
) -> Result<Option<Element>> {
    if !algebra.is_ideal(c_ideal)
        || !algebra.product_space(c_ideal, c_ideal).is_zero()
    {
        return Err(Error::NotAbelianIdeal);
    }
    if u.dim() != v.dim() || !algebra.is_subalgebra(u) || !algebra.is_subalgebra(v) {
        return Err(Error::PreconditionViolated(
            "u and v must be subalgebras of equal dimension".into(),
        ));
    }
    let field = algebra.field();
    let ann_v = v.annihilator();
    // Unknown c = Σ y_j C_j.  For each basis vector u_i of u:
    // ann_v · R_{u_i} · c = −ann_v · u_i.
    let c_cols = c_ideal.basis().transpose();
    let mut system = Matrix::zero(0, c_ideal.dim(), field);
    let mut rhs: Vec<FieldScalar> = Vec::new();
    for ui in u.basis_vectors() {
        let r = algebra.right_mult(&Element::new(ui.to_vec()));
        system = system.stack(&ann_v.mul(&r).mul(&c_cols));
        for value in ann_v.apply(ui) {
            rhs.push(value.neg());
        }
    }
    let Some(y) = system.solve(&rhs) else {
        return Ok(None);
    };
    let c = Element::new(c_ideal.embed_coordinates(&y));

    // α_c = 1 + L_c: verify it is an automorphism carrying u onto v.
    let alpha = Matrix::identity(algebra.dim(), field).add(&algebra.left_mult(&c));
    assert_eq!(alpha.rank(), algebra.dim(), "α_c must be invertible");
    for i in 0..algebra.dim() {
        for j in 0..algebra.dim() {
            let lhs = alpha.apply(algebra.basis_product(i, j));
            let rhs = algebra.multiply(
                &alpha.apply(&algebra.basis_element(i).coords),
                &alpha.apply(&algebra.basis_element(j).coords),
            );
            assert_eq!(lhs, rhs, "α_c must be multiplicative");
        }
    }
    let image_rows: Vec<Vec<FieldScalar>> = u.basis_vectors().map(|b| alpha.apply(b)).collect();
    let image = Subspace::from_spanning(Matrix::from_rows(image_rows, algebra.dim(), field));
    assert_eq!(image, *v, "α_c must carry u onto v");
    Ok(Some(c))
}

/// One conjugating element between two enumerated complements.
#[derive(Debug, Clone, Serialize)]
pub struct ConjugatorEntry {
    pub from: usize,
    pub to: usize,
    pub element: Vec<String>,
}

/// Census report for the splitting/conjugacy theorem on a primitive algebra.
#[derive(Debug, Clone, Serialize)]
pub struct ConjugacyReport {
    pub socle_dim: usize,
    pub complement_count: usize,
    pub complements: Vec<Subspace>,
    /// Conjugating elements per complement pair, in census order.
    pub conjugators: Vec<ConjugatorEntry>,
    pub all_conjugate: bool,
    pub is_lie: bool,
    /// Degenerate case P = socle: nothing to split.
    pub vacuous: bool,
}

/// Enumerate all complements to the socle and verify the conjugacy theorem:
/// at least one complement exists, all pairs are C-conjugate, and a non-Lie
/// primitive algebra has exactly one complement.
pub fn conjugacy_theorem_check(algebra: &Algebra, budget: u64) -> Result<ConjugacyReport> {
    let cert = is_primitive(algebra, budget)?
        .ok_or_else(|| Error::PreconditionViolated("algebra is not primitive".into()))?;
    let c = cert.socle;
    if c.is_full() {
        return Ok(ConjugacyReport {
            socle_dim: c.dim(),
            complement_count: 0,
            complements: Vec::new(),
            conjugators: Vec::new(),
            all_conjugate: true,
            is_lie: cert.is_lie,
            vacuous: true,
        });
    }
    let want_dim = algebra.dim() - c.dim();
    // Early rejection order: dimension (via the enumeration filter), then
    // trivial intersection, then closure.
    let complements: Vec<Subspace> =
        enumerate_subspaces(algebra.dim(), &algebra.field(), Some(want_dim), budget)?
            .filter(|m| m.intersect(&c).expect("same ambient").is_zero())
            .filter(|m| algebra.is_subalgebra(m))
            .collect();
    assert!(
        !complements.is_empty(),
        "a primitive algebra must split over its socle"
    );
    let mut all_conjugate = true;
    let mut conjugators = Vec::new();
    for i in 0..complements.len() {
        for j in i + 1..complements.len() {
            match conjugating_element(algebra, &c, &complements[i], &complements[j])? {
                Some(conj) => conjugators.push(ConjugatorEntry {
                    from: i,
                    to: j,
                    element: conj.coords.iter().map(|s| s.to_string()).collect(),
                }),
                None => all_conjugate = false,
            }
        }
    }
    if !cert.is_lie {
        assert_eq!(
            complements.len(),
            1,
            "a non-Lie primitive algebra has a unique complement"
        );
    }
    Ok(ConjugacyReport {
        socle_dim: c.dim(),
        complement_count: complements.len(),
        complements,
        conjugators,
        all_conjugate,
        is_lie: cert.is_lie,
        vacuous: false,
    })
}
