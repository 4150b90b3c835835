//! Engel subalgebras, Fitting decompositions and Cartan subalgebras.
//!
//! E_A(a) is the generalized nullspace of the left multiplication L_a; it is
//! always a subalgebra, and A splits as E_A(a) ⊕ L_a^n(A).  Over a field
//! with at least dim(A)+1 elements the Cartan subalgebras (nilpotent and
//! self-normalizing) are exactly the minimal Engel subalgebras, and
//! [`minimal_engel_search`] finds one by deterministic descent.

use serde::Serialize;

use crate::algebra::{Algebra, Element, Quotient, SubalgebraHandle};
use crate::error::{Error, Result};
use crate::field::FieldScalar;
use crate::linalg::{fitting_image, generalized_nullspace, Matrix, Subspace};

/// An Engel subalgebra E_A(a) together with its Fitting complement.
///
/// The base element need not lie in its own Engel subalgebra; use
/// [`engel_representative`] to move it inside without changing E_A(a).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngelSubalgebra {
    pub base_element: Element,
    pub space: Subspace,
    pub fitting_image: Subspace,
}

/// Certificate that a subspace is a Cartan subalgebra: its restriction is
/// nilpotent and it equals its full normalizer.
#[derive(Debug, Clone, Serialize)]
pub struct CartanCertificate {
    pub subalgebra: Subspace,
    pub nilpotency_class: usize,
    pub normalizer_equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_element: Option<Vec<String>>,
}

/// Verdict of the right-self-normalizer check for a subalgebra containing
/// an Engel subalgebra.
#[derive(Debug, Clone)]
pub struct SelfNormVerdict {
    pub holds: bool,
    /// A vector of the right normalizer outside the subalgebra, were the
    /// check ever to fail.
    pub counterexample: Option<Element>,
}

/// E_A(a): the generalized nullspace of L_a, with verified closure and the
/// Fitting splitting E_A(a) ⊕ L_a^n(A) = A.
pub fn engel_subalgebra(algebra: &Algebra, a: &Element) -> EngelSubalgebra {
    let l = algebra.left_mult(a);
    let space = generalized_nullspace(&l);
    let image = fitting_image(&l);
    assert!(
        algebra.is_subalgebra(&space),
        "an Engel subalgebra must be closed"
    );
    assert_eq!(
        space.dim() + image.dim(),
        algebra.dim(),
        "Fitting dimensions must add up"
    );
    assert!(
        space.intersect(&image).expect("same ambient").is_zero(),
        "Fitting parts must meet trivially"
    );
    EngelSubalgebra {
        base_element: a.clone(),
        space,
        fitting_image: image,
    }
}

/// An a′ ∈ E_A(a) with L_{a′} = L_a, hence E_A(a′) = E_A(a).
///
/// Construction: inside the subalgebra U generated by a (the span of the
/// left-normed powers), split a = a′ + b along the Fitting decomposition of
/// L_a restricted to U; the b-part is a span of higher powers, so L_b = 0.
pub fn engel_representative(algebra: &Algebra, a: &Element) -> Element {
    if a.is_zero() {
        return a.clone();
    }
    let field = algebra.field();
    // U = span{a, a², …}; stabilizes within dim steps.
    let mut powers = vec![a.coords.clone()];
    for k in 2..=(algebra.dim() as u64 + 1) {
        powers.push(algebra.power_element(a, k).coords);
    }
    let u = Subspace::from_spanning(Matrix::from_rows(powers, algebra.dim(), field));
    let d = u.dim();

    // Matrix of L_a restricted to U, in U's canonical basis.
    let l = algebra.left_mult(a);
    let mut mu = Matrix::zero(d, d, field);
    for (col, b) in u.basis_vectors().enumerate() {
        let img = l.apply(b);
        let coords = u
            .coordinates_of(&img)
            .expect("a·U stays inside the subalgebra generated by a");
        for (row, v) in coords.into_iter().enumerate() {
            mu.set(row, col, v);
        }
    }
    let null_part = generalized_nullspace(&mu);
    let image_part = fitting_image(&mu);

    // Solve a = a′ + b with a′ in the null part, b in the image part.
    let a_in_u = u.coordinates_of(&a.coords).expect("a lies in U");
    let combined = null_part.basis().stack(image_part.basis()).transpose();
    let coeffs = combined.solve(&a_in_u).expect("Fitting parts span U");
    let null_coords: Vec<FieldScalar> = coeffs[..null_part.dim()].to_vec();
    let a_prime_in_u = null_part.embed_coordinates(&null_coords);
    let a_prime = Element::new(u.embed_coordinates(&a_prime_in_u));

    assert_eq!(
        algebra.left_mult(&a_prime),
        l,
        "representative must have the same left multiplication"
    );
    let e = engel_subalgebra(algebra, a);
    assert!(
        e.space.contains_vector(&a_prime.coords),
        "representative must lie in E_A(a)"
    );
    assert_eq!(
        engel_subalgebra(algebra, &a_prime).space,
        e.space,
        "representative must generate the same Engel subalgebra"
    );
    a_prime
}

/// Check that a subalgebra containing E_A(a) equals its own right
/// normalizer.  A failure would falsify the underlying lemma, so the
/// returned counterexample must never materialize.
pub fn check_right_self_normalizing(
    algebra: &Algebra,
    u: &SubalgebraHandle,
    a: &Element,
) -> Result<SelfNormVerdict> {
    let e = engel_subalgebra(algebra, a);
    if !u.space().contains(&e.space) {
        return Err(Error::PreconditionViolated(
            "E_A(a) is not contained in the subalgebra".into(),
        ));
    }
    let right = algebra.normalizers(u).right;
    if right == *u.space() {
        return Ok(SelfNormVerdict { holds: true, counterexample: None });
    }
    let witness = right
        .basis_vectors()
        .find(|v| !u.space().contains_vector(v))
        .map(|v| Element::new(v.to_vec()));
    Ok(SelfNormVerdict { holds: false, counterexample: witness })
}

/// A Cartan subalgebra is a nilpotent subalgebra equal to its own full
/// normalizer.
pub fn is_cartan(algebra: &Algebra, u: &SubalgebraHandle) -> bool {
    let restriction = algebra.restrict(u);
    restriction.algebra().is_nilpotent() && algebra.normalizers(u).full == *u.space()
}

/// Build the certificate for a subspace already known to be Cartan.
pub fn cartan_certificate(
    algebra: &Algebra,
    space: &Subspace,
    witness: Option<&Element>,
) -> Result<CartanCertificate> {
    let handle = SubalgebraHandle::new(algebra, space.clone())?;
    let restriction = algebra.restrict(&handle);
    let class = restriction
        .algebra()
        .nilpotency_class()
        .ok_or_else(|| Error::CertificationFailed("restriction is not nilpotent".into()))?;
    if algebra.normalizers(&handle).full != *space {
        return Err(Error::CertificationFailed(
            "subalgebra is not self-normalizing".into(),
        ));
    }
    Ok(CartanCertificate {
        subalgebra: space.clone(),
        nilpotency_class: class,
        normalizer_equal: true,
        witness_element: witness.map(|w| w.coords.iter().map(|c| c.to_string()).collect()),
    })
}

/// Deterministic stream of candidate elements: basis vectors first, then
/// coordinate tuples drawn from the canonical field enumeration (indices in
/// increasing max-then-lexicographic order).
pub struct ElementStream {
    dim: usize,
    scalars: Vec<FieldScalar>,
    field: crate::field::FieldDescriptor,
    basis_next: usize,
    indices: Vec<usize>,
    max_level: usize,
    done: bool,
}

impl ElementStream {
    pub fn new(algebra: &Algebra) -> Self {
        let field = algebra.field();
        ElementStream {
            dim: algebra.dim(),
            scalars: Vec::new(),
            field,
            basis_next: 0,
            indices: vec![0; algebra.dim()],
            max_level: 0,
            done: algebra.dim() == 0,
        }
    }

    fn scalar(&mut self, idx: usize) -> Option<FieldScalar> {
        while self.scalars.len() <= idx {
            let next = self.field.enumerate().nth(self.scalars.len())?;
            self.scalars.push(next);
        }
        Some(self.scalars[idx].clone())
    }

    /// Advance the index tuple through level sets: all tuples whose maximum
    /// index is `max_level`, lexicographically, then the next level.
    fn advance(&mut self) {
        loop {
            let mut i = self.dim;
            let mut carried = true;
            while i > 0 {
                i -= 1;
                if self.indices[i] < self.max_level {
                    self.indices[i] += 1;
                    for j in i + 1..self.dim {
                        self.indices[j] = 0;
                    }
                    carried = false;
                    break;
                }
                // at max: keep scanning left
            }
            if carried {
                self.max_level += 1;
                if let Some(card) = self.field.cardinality() {
                    if self.max_level as u64 >= card {
                        self.done = true;
                        return;
                    }
                }
                self.indices = vec![0; self.dim];
            }
            if self.indices.iter().any(|&x| x == self.max_level) {
                return;
            }
            // Tuples that never touch the new level were already produced.
        }
    }
}

impl Iterator for ElementStream {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        if self.done {
            return None;
        }
        if self.basis_next < self.dim {
            let mut coords = vec![self.field.zero(); self.dim];
            coords[self.basis_next] = self.field.one();
            self.basis_next += 1;
            return Some(Element::new(coords));
        }
        // First streamed tuple is all-zero indices (the zero element).
        let coords: Option<Vec<FieldScalar>> =
            self.indices.clone().iter().map(|&i| self.scalar(i)).collect();
        let coords = coords?;
        self.advance();
        Some(Element::new(coords))
    }
}

/// Outcome of the minimal-Engel descent.
#[derive(Debug, Clone)]
pub struct MinimalEngel {
    pub engel: EngelSubalgebra,
    pub certificate: CartanCertificate,
}

/// Find an Engel subalgebra minimal under inclusion (hence a Cartan
/// subalgebra) by descent, over a field with at least dim(A)+1 elements.
///
/// Starting from E = E_A(a₀) with a₀ moved inside E, repeat: while the
/// restriction of A to E is not nilpotent, pick u₁ in E whose left
/// multiplication is not nilpotent on E and scan t over the first dim(A)+1
/// canonical field scalars; some E_A(a₀ + t·u₁) is strictly smaller and
/// replaces E.  Once the restriction is nilpotent, E is Cartan; the result
/// is certified and a certification failure is a bug, not a mathematical
/// possibility.
pub fn minimal_engel_search(algebra: &Algebra) -> Result<MinimalEngel> {
    let n = algebra.dim() as u64;
    if let Some(card) = algebra.field().cardinality() {
        if card < n + 1 {
            return Err(Error::FieldTooSmall { cardinality: card, needed: n + 1 });
        }
    }
    if algebra.dim() == 0 {
        let engel = engel_subalgebra(algebra, &algebra.zero_element());
        let certificate = cartan_certificate(algebra, &engel.space, Some(&engel.base_element))?;
        return Ok(MinimalEngel { engel, certificate });
    }

    let scan_scalars = algebra.field().first_elements(algebra.dim() + 1)?;
    let mut a0 = engel_representative(algebra, &algebra.basis_element(0));
    let mut engel = engel_subalgebra(algebra, &a0);

    loop {
        let handle = SubalgebraHandle::new(algebra, engel.space.clone())
            .expect("Engel subalgebras are closed");
        let restriction = algebra.restrict(&handle);
        if restriction.algebra().is_nilpotent() {
            break;
        }
        let u1 = find_non_nilpotent_member(restriction.algebra())
            .map(|inner| restriction.embed_element(&inner))
            .ok_or_else(|| {
                Error::CertificationFailed(
                    "restriction not nilpotent but no witness found".into(),
                )
            })?;
        let mut descended = false;
        for t in &scan_scalars {
            let candidate = a0.add(&u1.scale(t));
            let e = engel_subalgebra(algebra, &candidate);
            if e.space.dim() < engel.space.dim() {
                a0 = engel_representative(algebra, &candidate);
                engel = engel_subalgebra(algebra, &a0);
                descended = true;
                break;
            }
        }
        if !descended {
            return Err(Error::CertificationFailed(
                "descent scan found no smaller Engel subalgebra".into(),
            ));
        }
    }

    let certificate = cartan_certificate(algebra, &engel.space, Some(&a0))?;
    Ok(MinimalEngel { engel, certificate })
}

/// An element whose left multiplication is not nilpotent, in a non-nilpotent
/// algebra.  Basis vectors are tried first, then the deterministic element
/// stream.  Existence is guaranteed: were every left multiplication
/// nilpotent the algebra would be nilpotent.
fn find_non_nilpotent_member(algebra: &Algebra) -> Option<Element> {
    for i in 0..algebra.dim() {
        let e = algebra.basis_element(i);
        if !algebra.left_mult(&e).is_nilpotent() {
            return Some(e);
        }
    }
    const STREAM_BUDGET: usize = 100_000;
    for e in ElementStream::new(algebra).take(STREAM_BUDGET) {
        if !algebra.left_mult(&e).is_nilpotent() {
            return Some(e);
        }
    }
    None
}

/// Push a Cartan subalgebra through a quotient: the image of C + K in A/K
/// is a Cartan subalgebra there.  Certification failure is a bug.
pub fn cartan_in_quotient(
    algebra: &Algebra,
    k: &Subspace,
    c: &CartanCertificate,
) -> Result<(Quotient, CartanCertificate)> {
    let q = algebra.quotient(k)?;
    let image = q.project_subspace(&c.subalgebra);
    let certificate = cartan_certificate(q.algebra(), &image, None)?;
    Ok((q, certificate))
}

/// Intravariance analogue: for a two-sided ideal N and a Cartan subalgebra
/// C of N (given in the coordinates of the restriction to N),
/// N + N_A(C) = A.
pub fn intravariance_check(
    algebra: &Algebra,
    n_ideal: &Subspace,
    c: &CartanCertificate,
) -> Result<bool> {
    if !algebra.is_ideal(n_ideal) {
        return Err(Error::PreconditionViolated(
            "N is not a two-sided ideal".into(),
        ));
    }
    let restriction = algebra.restrict_subspace(n_ideal)?;
    let handle_in_n = SubalgebraHandle::new(restriction.algebra(), c.subalgebra.clone())
        .map_err(|_| Error::PreconditionViolated("C is not closed inside N".into()))?;
    if !is_cartan(restriction.algebra(), &handle_in_n) {
        return Err(Error::PreconditionViolated(
            "C is not a Cartan subalgebra of N".into(),
        ));
    }
    let c_ambient = restriction.embed_subspace(&c.subalgebra);
    let handle = SubalgebraHandle::new(algebra, c_ambient)?;
    let normalizer = algebra.normalizers(&handle).full;
    let sum = n_ideal.sum(&normalizer)?;
    Ok(sum.is_full())
}
