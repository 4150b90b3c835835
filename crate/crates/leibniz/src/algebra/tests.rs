use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::error::Error;
use crate::generators::{barnes_algebra, cyclic_algebra, random_element};

fn q() -> FieldDescriptor {
    FieldDescriptor::rationals()
}

fn abelian(dim: usize) -> Algebra {
    Algebra::from_products(dim, q(), &[], None).unwrap()
}

fn span(a: &Algebra, rows: &[&[i64]]) -> Subspace {
    Subspace::from_spanning(Matrix::from_i64_rows(rows, a.field()))
}

#[test]
fn barnes_table_verifies() {
    assert!(barnes_algebra(q()).verify_leibniz().passed());
}

#[test]
fn abelian_table_verifies() {
    assert!(abelian(3).verify_leibniz().passed());
}

#[test]
fn self_square_table_fails_at_first_triple() {
    // e1·e1 = e1 in dimension 1: a(bc) = e1 but (ab)c + b(ac) = 2e1.
    let products = vec![(0usize, 0usize, vec![q().one()])];
    let a = Algebra::from_products(1, q(), &products, None).unwrap();
    match a.verify_leibniz() {
        LeibnizVerdict::Fail { triple, lhs, rhs } => {
            assert_eq!(triple, (0, 0, 0));
            assert_eq!(lhs, vec![q().one()]);
            assert_eq!(rhs, vec![q().from_i64(2)]);
        }
        LeibnizVerdict::Pass => panic!("table must fail"),
    }
}

#[test]
fn left_mult_by_zero_is_zero() {
    let a = barnes_algebra(q());
    assert!(a.left_mult(&a.zero_element()).is_zero());
}

#[test]
fn left_mult_by_n_matches_the_table() {
    let a = barnes_algebra(q());
    let n = a.element_from_i64(&[0, 1, 0, 0]);
    let l = a.left_mult(&n);
    // columns: n·u = −u + k, n·n = n², n·k = −k, n·n² = 0
    let expected = Matrix::from_i64_rows(
        &[
            &[-1, 0, 0, 0],
            &[0, 0, 0, 0],
            &[1, 0, -1, 0],
            &[0, 1, 0, 0],
        ],
        q(),
    );
    assert_eq!(l, expected);
}

#[test]
fn left_mult_of_product_is_the_commutator() {
    let a = barnes_algebra(q());
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let x = random_element(&mut rng, &a);
        let y = random_element(&mut rng, &a);
        let lxy = a.left_mult(&a.product(&x, &y));
        let (lx, ly) = (a.left_mult(&x), a.left_mult(&y));
        assert_eq!(lxy, lx.mul(&ly).sub(&ly.mul(&lx)));
    }
}

#[test]
fn first_power_is_the_element() {
    let a = barnes_algebra(q());
    let x = a.element_from_i64(&[3, -2, 1, 5]);
    assert_eq!(a.power_element(&x, 1), x);
}

#[test]
fn n_squared_is_the_basis_vector() {
    let a = barnes_algebra(q());
    let n = a.element_from_i64(&[0, 1, 0, 0]);
    assert_eq!(a.power_element(&n, 2), a.element_from_i64(&[0, 0, 0, 1]));
}

#[test]
fn squares_have_zero_left_multiplication() {
    let a = barnes_algebra(q());
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        let x = random_element(&mut rng, &a);
        let sq = a.power_element(&x, 2);
        assert!(a.left_mult(&sq).is_zero());
    }
}

#[test]
fn product_space_of_abelian_is_zero() {
    let a = abelian(2);
    assert!(a.product_space(&a.full_space(), &a.full_space()).is_zero());
}

#[test]
fn barnes_square_is_span_u_k_nsq() {
    // Oracle: spanning the 16 basis products of the table by hand leaves
    // u (from un), −u+k (from nu), k (from un²), −k (from nk) and n²
    // (from nn): the span is {u, k, n²}.
    let a = barnes_algebra(q());
    let square = a.product_space(&a.full_space(), &a.full_space());
    let expected = span(&a, &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    assert_eq!(square, expected);
}

#[test]
fn product_space_with_zero_is_zero() {
    let a = barnes_algebra(q());
    assert!(a.product_space(&a.zero_space(), &a.full_space()).is_zero());
}

#[test]
fn abelian_series_is_class_one() {
    let a = abelian(2);
    let chain = a.lower_central_series();
    assert_eq!(chain.len(), 2);
    assert!(chain[1].is_zero());
    assert_eq!(a.nilpotency_class(), Some(1));
}

#[test]
fn barnes_is_soluble_but_not_nilpotent() {
    let a = barnes_algebra(q());
    // Oracle: A² = span{u,k,n²}, A³ = span{u,k} = A⁴ stabilizes nonzero;
    // derived series hits span{k} and then 0.
    let lcs = a.lower_central_series();
    assert!(!lcs.last().unwrap().is_zero());
    assert_eq!(lcs.last().unwrap().dim(), 2);
    assert!(!a.is_nilpotent());
    assert_eq!(a.nilpotency_class(), None);

    let derived = a.derived_series();
    assert!(derived.last().unwrap().is_zero());
    assert_eq!(derived[1].dim(), 3);
    assert_eq!(derived[2].dim(), 1);
    assert!(a.is_soluble());
}

#[test]
fn left_centre_of_a_lie_algebra_is_its_centre() {
    // Heisenberg-like Lie algebra: xy = z, yx = −z.
    let products = vec![
        (0usize, 1usize, vec![q().zero(), q().zero(), q().one()]),
        (1, 0, vec![q().zero(), q().zero(), q().from_i64(-1)]),
    ];
    let a = Algebra::from_products(3, q(), &products, None).unwrap();
    assert!(a.is_lie());
    let lc = a.left_centre();
    assert_eq!(lc.dim(), 1);
    assert!(lc.contains_vector(&a.element_from_i64(&[0, 0, 1]).coords));
}

#[test]
fn barnes_left_centre_contains_k_and_nsq() {
    let a = barnes_algebra(q());
    let lc = a.left_centre();
    assert!(lc.contains_vector(&a.element_from_i64(&[0, 0, 1, 0]).coords));
    assert!(lc.contains_vector(&a.element_from_i64(&[0, 0, 0, 1]).coords));
    assert_eq!(lc.dim(), 2);
}

#[test]
fn quotient_by_left_centre_is_lie() {
    assert!(barnes_algebra(q()).lie_quotient_verdict());
    assert!(abelian(3).lie_quotient_verdict());
    assert!(cyclic_algebra(4, q()).lie_quotient_verdict());
}

#[test]
fn right_normalizer_of_span_u_is_not_closed() {
    let a = barnes_algebra(q());
    let u = SubalgebraHandle::new(&a, span(&a, &[&[1, 0, 0, 0]])).unwrap();
    let norms = a.normalizers(&u);
    // n lies in the right normalizer…
    let n = a.element_from_i64(&[0, 1, 0, 0]);
    assert!(norms.right.contains_vector(&n.coords));
    // …but n·n = n² does not, so it is not a subalgebra.
    let n_sq = a.product(&n, &n);
    assert!(!norms.right.contains_vector(&n_sq.coords));
    assert!(!a.is_subalgebra(&norms.right));
}

#[test]
fn normalizer_of_the_whole_algebra_is_everything() {
    let a = barnes_algebra(q());
    let whole = a.whole_algebra();
    let norms = a.normalizers(&whole);
    assert!(norms.left.is_full());
    assert!(norms.right.is_full());
    assert!(norms.full.is_full());
}

#[test]
fn proper_subalgebras_of_nilpotent_algebras_grow_under_normalizing() {
    let a = cyclic_algebra(4, q());
    let u = SubalgebraHandle::new(&a, span(&a, &[&[0, 0, 0, 1]])).unwrap();
    let norms = a.normalizers(&u);
    assert!(norms.full.dim() > u.space().dim());
}

#[test]
fn centralizer_of_zero_is_everything() {
    let a = barnes_algebra(q());
    let zero = SubalgebraHandle::new(&a, a.zero_space()).unwrap();
    assert!(a.centralizer(&zero).is_full());
}

#[test]
fn centralizer_in_abelian_algebra_is_everything() {
    let a = abelian(3);
    let whole = a.whole_algebra();
    assert!(a.centralizer(&whole).is_full());
}

#[test]
fn quotient_by_zero_keeps_the_presentation() {
    let a = barnes_algebra(q());
    let quotient = a.quotient(&a.zero_space()).unwrap();
    assert_eq!(quotient.algebra().dim(), 4);
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(
                quotient.algebra().basis_product(i, j),
                a.basis_product(i, j)
            );
        }
    }
}

#[test]
fn barnes_modulo_k_nsq_is_a_two_dim_lie_algebra() {
    // Oracle: the induced table is ū·n̄ = ū, n̄·ū = −ū, squares zero.
    let a = barnes_algebra(q());
    let k = span(&a, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
    let quotient = a.quotient(&k).unwrap();
    let b = quotient.algebra();
    assert_eq!(b.dim(), 2);
    assert!(b.is_lie());
    assert_eq!(b.basis_product(0, 1), &b.element_from_i64(&[1, 0]).coords[..]);
    assert_eq!(b.basis_product(1, 0), &b.element_from_i64(&[-1, 0]).coords[..]);
}

#[test]
fn quotient_by_everything_is_the_zero_algebra() {
    let a = barnes_algebra(q());
    let quotient = a.quotient(&a.full_space()).unwrap();
    assert_eq!(quotient.algebra().dim(), 0);
}

#[test]
fn quotient_rejects_non_ideals() {
    let a = barnes_algebra(q());
    let not_ideal = span(&a, &[&[1, 0, 0, 0]]);
    assert!(matches!(a.quotient(&not_ideal), Err(Error::NotAnIdeal)));
}

#[test]
fn restricting_to_the_whole_algebra_reproduces_it() {
    let a = barnes_algebra(q());
    let r = a.restrict(&a.whole_algebra());
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(r.algebra().basis_product(i, j), a.basis_product(i, j));
        }
    }
}

#[test]
fn restricting_barnes_to_span_n_nsq() {
    // Oracle: reading the table, nn = n² and every other product is zero.
    let a = barnes_algebra(q());
    let u = SubalgebraHandle::new(&a, span(&a, &[&[0, 1, 0, 0], &[0, 0, 0, 1]])).unwrap();
    let r = a.restrict(&u);
    let b = r.algebra();
    assert_eq!(b.dim(), 2);
    assert_eq!(b.basis_product(0, 0), &b.element_from_i64(&[0, 1]).coords[..]);
    for (i, j) in [(0usize, 1usize), (1, 0), (1, 1)] {
        assert!(b.basis_product(i, j).iter().all(FieldScalar::is_zero));
    }
}

#[test]
fn restriction_to_zero_is_the_zero_algebra() {
    let a = barnes_algebra(q());
    let zero = SubalgebraHandle::new(&a, a.zero_space()).unwrap();
    assert_eq!(a.restrict(&zero).algebra().dim(), 0);
}

#[test]
fn restriction_rejects_unclosed_subspaces() {
    let a = barnes_algebra(q());
    // span{n} is not closed: n·n = n² falls outside.
    let not_closed = span(&a, &[&[0, 1, 0, 0]]);
    assert!(matches!(
        a.restrict_subspace(&not_closed),
        Err(Error::NotClosed)
    ));
    assert!(SubalgebraHandle::new(&a, not_closed).is_err());
}

#[test]
fn whole_algebra_is_right_subnormal_with_trivial_chain() {
    let a = barnes_algebra(q());
    let verdict = a.right_subnormal_chain(&a.whole_algebra());
    assert!(verdict.is_right_subnormal);
    assert_eq!(verdict.chain.len(), 1);
}

#[test]
fn right_ideals_are_right_subnormal_with_short_chains() {
    let a = barnes_algebra(q());
    // span{k} is a two-sided (hence right) ideal.
    let u = SubalgebraHandle::new(&a, span(&a, &[&[0, 0, 1, 0]])).unwrap();
    assert!(a.is_right_ideal(u.space()));
    let verdict = a.right_subnormal_chain(&u);
    assert!(verdict.is_right_subnormal);
    assert!(verdict.chain.len() <= 2);
}

#[test]
fn self_normalizing_engel_subalgebra_is_not_right_subnormal() {
    // The chain from E_A(n) = span{n, n²} immediately stabilizes at A.
    let a = barnes_algebra(q());
    let u = SubalgebraHandle::new(&a, span(&a, &[&[0, 1, 0, 0], &[0, 0, 0, 1]])).unwrap();
    let verdict = a.right_subnormal_chain(&u);
    assert!(!verdict.is_right_subnormal);
    assert_eq!(verdict.chain.len(), 1);
}

#[test]
fn bracketed_products_stay_inside_the_power_subspaces() {
    let a = barnes_algebra(q());
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let lcs = a.lower_central_series();
    let term = |k: usize| -> Subspace {
        lcs.get(k - 1).cloned().unwrap_or_else(|| lcs.last().unwrap().clone())
    };
    for _ in 0..10 {
        let xs: Vec<Element> = (0..4).map(|_| random_element(&mut rng, &a)).collect();
        for (k, product) in all_bracketings(&a, &xs) {
            assert!(term(k).contains_vector(&product.coords));
        }
    }
}

/// All bracketed products of x1…xk for k = 2, 3, 4 with their arity.
fn all_bracketings(a: &Algebra, xs: &[Element]) -> Vec<(usize, Element)> {
    fn rec(a: &Algebra, xs: &[Element]) -> Vec<Element> {
        if xs.len() == 1 {
            return vec![xs[0].clone()];
        }
        let mut out = Vec::new();
        for split in 1..xs.len() {
            for left in rec(a, &xs[..split]) {
                for right in rec(a, &xs[split..]) {
                    out.push(a.product(&left, &right));
                }
            }
        }
        out
    }
    let mut out = Vec::new();
    for k in 2..=xs.len() {
        for p in rec(a, &xs[..k]) {
            out.push((k, p));
        }
    }
    out
}
