//! Exhaustive enumeration of subspaces of F_p^n by RREF canonical form.

use crate::error::{Error, Result};
use crate::field::FieldDescriptor;
use crate::linalg::{Matrix, Subspace};

/// Gaussian binomial coefficient [n choose r]_p: the number of r-dimensional
/// subspaces of F_p^n.  Computed by the q-Pascal recurrence
/// [n r] = [n−1 r−1] + p^r [n−1 r].
pub fn gaussian_binomial(n: usize, r: usize, p: u64) -> u128 {
    if r > n {
        return 0;
    }
    let mut row = vec![0u128; r + 1];
    row[0] = 1;
    for _ in 1..=n {
        for k in (1..=r).rev() {
            let pk = (p as u128).checked_pow(k as u32).expect("p^k overflow");
            row[k] = row[k - 1]
                .checked_add(pk.checked_mul(row[k]).expect("gaussian overflow"))
                .expect("gaussian overflow");
        }
    }
    row[r]
}

/// Total number of subspaces of F_p^n (all ranks), or for one rank.
pub fn subspace_count(n: usize, p: u64, dim_filter: Option<usize>) -> u128 {
    match dim_filter {
        Some(r) => gaussian_binomial(n, r, p),
        None => (0..=n).map(|r| gaussian_binomial(n, r, p)).sum(),
    }
}

/// Iterator over every subspace of F_p^n exactly once.
///
/// Order: rank ascending, pivot-column sets lexicographic, free entries in
/// mixed-radix order over the canonical field enumeration (0, 1, …, p−1).
/// Each yielded basis is already in reduced row echelon form.
pub struct SubspaceEnumeration {
    ambient: usize,
    field: FieldDescriptor,
    p: u64,
    dim_filter: Option<usize>,
    rank: usize,
    pivots: Option<Vec<usize>>,
    free_positions: Vec<(usize, usize)>,
    counter: Vec<u64>,
    counter_live: bool,
    exhausted: bool,
}

impl SubspaceEnumeration {
    pub(crate) fn new(
        ambient: usize,
        desc: &FieldDescriptor,
        dim_filter: Option<usize>,
        budget: u64,
    ) -> Result<Self> {
        let p = match desc {
            FieldDescriptor::PrimeField(p) => *p,
            FieldDescriptor::Rationals => return Err(Error::InfiniteField),
        };
        let needed = subspace_count(ambient, p, dim_filter);
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let rank = dim_filter.unwrap_or(0);
        let mut en = SubspaceEnumeration {
            ambient,
            field: *desc,
            p,
            dim_filter,
            rank,
            pivots: None,
            free_positions: Vec::new(),
            counter: Vec::new(),
            counter_live: false,
            exhausted: rank > ambient,
        };
        en.start_rank();
        Ok(en)
    }

    fn start_rank(&mut self) {
        if self.rank > self.ambient {
            self.exhausted = true;
            return;
        }
        self.pivots = Some((0..self.rank).collect());
        self.start_pivot_set();
    }

    fn start_pivot_set(&mut self) {
        let pivots = self.pivots.as_ref().expect("pivot set initialized");
        self.free_positions = free_positions(self.ambient, pivots);
        self.counter = vec![0; self.free_positions.len()];
        self.counter_live = true;
    }

    /// Advance to the next free-entry assignment, pivot set, or rank.
    fn advance(&mut self) {
        // Mixed-radix increment over the free entries.
        for digit in self.counter.iter_mut() {
            *digit += 1;
            if *digit < self.p {
                return;
            }
            *digit = 0;
        }
        // Counter wrapped: next pivot combination.
        let pivots = self.pivots.as_mut().expect("pivot set initialized");
        if next_combination(pivots, self.ambient) {
            self.start_pivot_set();
            return;
        }
        // Combinations done: next rank (unless filtered to one).
        if self.dim_filter.is_some() {
            self.exhausted = true;
            return;
        }
        self.rank += 1;
        self.start_rank();
    }

    fn current(&self) -> Subspace {
        let pivots = self.pivots.as_ref().expect("pivot set initialized");
        let mut basis = Matrix::zero(self.rank, self.ambient, self.field);
        for (row, &p) in pivots.iter().enumerate() {
            basis.set(row, p, self.field.one());
        }
        for (idx, &(row, col)) in self.free_positions.iter().enumerate() {
            basis.set(row, col, self.field.from_i64(self.counter[idx] as i64));
        }
        Subspace::from_rref_unchecked(basis)
    }
}

impl Iterator for SubspaceEnumeration {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.exhausted || !self.counter_live {
            return None;
        }
        let out = self.current();
        self.advance();
        Some(out)
    }
}

/// Free entries of the RREF pattern for a pivot set: position (row, col) is
/// free iff col is not a pivot and col lies to the right of the row's pivot.
fn free_positions(ambient: usize, pivots: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (row, &p) in pivots.iter().enumerate() {
        for col in p + 1..ambient {
            if !pivots.contains(&col) {
                out.push((row, col));
            }
        }
    }
    out
}

/// Lexicographically next r-combination of {0, …, n−1}; false when done.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let r = combo.len();
    if r == 0 {
        return false;
    }
    let mut i = r;
    while i > 0 {
        i -= 1;
        if combo[i] < n - (r - i) {
            combo[i] += 1;
            for j in i + 1..r {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
