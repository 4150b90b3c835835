//! Property tests for the exact kernels: field axioms, canonical forms,
//! Fitting decompositions and the subspace lattice.

use proptest::prelude::*;

use leibniz::field::{FieldDescriptor, FieldScalar};
use leibniz::linalg::{
    enumerate_subspaces, fitting_image, gaussian_binomial, generalized_nullspace, subspace_count,
    Matrix, Subspace,
};

fn descriptors() -> impl Strategy<Value = FieldDescriptor> {
    prop_oneof![
        Just(FieldDescriptor::rationals()),
        Just(FieldDescriptor::prime(2).unwrap()),
        Just(FieldDescriptor::prime(5).unwrap()),
        Just(FieldDescriptor::prime(97).unwrap()),
    ]
}

proptest! {
    #[test]
    fn field_axioms_hold_on_random_triples(
        desc in descriptors(),
        seeds in proptest::collection::vec(any::<i64>(), 3),
    ) {
        let a = scalar_from_seed(&desc, seeds[0]);
        let b = scalar_from_seed(&desc, seeds[1]);
        let c = scalar_from_seed(&desc, seeds[2]);
        // associativity
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        // commutativity
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        // distributivity
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        // inverses
        prop_assert!(a.add(&a.neg()).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.checked_inv().unwrap()).is_one());
        }
    }

    #[test]
    fn fermat_little_theorem(p in prop_oneof![Just(2u64), Just(3), Just(5), Just(7), Just(13)], r in any::<u64>()) {
        let desc = FieldDescriptor::prime(p).unwrap();
        let a = desc.from_i64((r % p) as i64);
        let mut power = desc.one();
        for _ in 0..p {
            power = power.mul(&a);
        }
        prop_assert_eq!(power, a);
    }

    #[test]
    fn rref_is_idempotent(
        desc in descriptors(),
        dims in (0usize..=4, 1usize..=4),
        seed in any::<u64>(),
    ) {
        let m = matrix_from_seed(&desc, dims.0, dims.1, seed);
        let (r1, rank1) = m.rref();
        let (r2, rank2) = r1.rref();
        prop_assert_eq!(&r1, &r2);
        prop_assert_eq!(rank1, rank2);
    }

    #[test]
    fn fitting_splits_the_ambient_space(
        desc in descriptors(),
        n in 1usize..=4,
        seed in any::<u64>(),
    ) {
        let m = matrix_from_seed(&desc, n, n, seed);
        let null = generalized_nullspace(&m);
        let image = fitting_image(&m);
        prop_assert_eq!(null.dim() + image.dim(), n);
        prop_assert!(null.intersect(&image).unwrap().is_zero());
        prop_assert!(null.sum(&image).unwrap().is_full());
    }

    #[test]
    fn modular_dimension_law(
        p in prop_oneof![Just(2u64), Just(3), Just(5)],
        n in 1usize..=4,
        seed_u in any::<u64>(),
        seed_v in any::<u64>(),
    ) {
        let desc = FieldDescriptor::prime(p).unwrap();
        let u = Subspace::from_spanning(matrix_from_seed(&desc, 2, n, seed_u));
        let v = Subspace::from_spanning(matrix_from_seed(&desc, 2, n, seed_v));
        prop_assert_eq!(
            u.dim() + v.dim(),
            u.sum(&v).unwrap().dim() + u.intersect(&v).unwrap().dim()
        );
    }

    #[test]
    fn kernel_satisfies_rank_nullity(
        desc in descriptors(),
        dims in (1usize..=4, 1usize..=4),
        seed in any::<u64>(),
    ) {
        let m = matrix_from_seed(&desc, dims.0, dims.1, seed);
        let kernel = m.kernel();
        prop_assert_eq!(kernel.dim() + m.rank(), m.cols());
        for v in kernel.basis_vectors() {
            prop_assert!(m.apply(v).iter().all(FieldScalar::is_zero));
        }
    }
}

#[test]
fn subspace_enumeration_matches_gaussian_binomials() {
    for p in [2u64, 3, 5] {
        let desc = FieldDescriptor::prime(p).unwrap();
        for n in 0..=3usize {
            let all: Vec<_> = enumerate_subspaces(n, &desc, None, 100_000)
                .unwrap()
                .collect();
            assert_eq!(all.len() as u128, subspace_count(n, p, None));
            for r in 0..=n {
                assert_eq!(
                    all.iter().filter(|s| s.dim() == r).count() as u128,
                    gaussian_binomial(n, r, p),
                    "count of {}-dim subspaces of F_{}^{}",
                    r,
                    p,
                    n
                );
            }
            // pairwise distinct canonical forms
            for (i, a) in all.iter().enumerate() {
                for b in &all[i + 1..] {
                    assert_ne!(a, b);
                }
            }
        }
    }
}

fn scalar_from_seed(desc: &FieldDescriptor, seed: i64) -> FieldScalar {
    match desc {
        FieldDescriptor::Rationals => {
            let num = seed % 21;
            let den = (seed.rem_euclid(19)) + 1;
            desc.from_ratio(num, den).expect("nonzero denominator")
        }
        FieldDescriptor::PrimeField(p) => desc.from_i64(seed.rem_euclid(*p as i64)),
    }
}

fn matrix_from_seed(desc: &FieldDescriptor, rows: usize, cols: usize, seed: u64) -> Matrix {
    let mut state = seed;
    let mut next = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 33) as i64
    };
    let grid: Vec<Vec<FieldScalar>> = (0..rows)
        .map(|_| (0..cols).map(|_| scalar_from_seed(desc, next())).collect())
        .collect();
    Matrix::from_rows(grid, cols, *desc)
}
