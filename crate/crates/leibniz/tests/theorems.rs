//! Corpus-wide theorem runs: every structural check must hold on every
//! member of the standard corpus.

use leibniz::checks::{run_checks, CheckStatus};
use leibniz::engel::{engel_subalgebra, minimal_engel_search};
use leibniz::error::Error;
use leibniz::field::FieldDescriptor;
use leibniz::generators::{barnes_algebra, standard_corpus};
use leibniz::DEFAULT_BUDGET;

#[test]
fn the_full_corpus_passes_the_whole_suite() {
    let corpus = standard_corpus();
    let mut pass = 0usize;
    let mut skip = 0usize;
    for entry in &corpus {
        for outcome in run_checks(&entry.algebra, DEFAULT_BUDGET, None) {
            match outcome.status {
                CheckStatus::Pass => pass += 1,
                CheckStatus::Skip => skip += 1,
                CheckStatus::Fail => panic!(
                    "{} fails {}: {}",
                    entry.name, outcome.id, outcome.detail
                ),
            }
        }
    }
    assert!(pass > 10 * corpus.len(), "{} passes over {} algebras", pass, corpus.len());
    assert!(skip < pass);
}

#[test]
fn engel_subalgebras_are_computed_over_too_small_fields() {
    // Only the Cartan equivalence is gated on field size; E_A(a) itself
    // must work over F_2 even in dimension 4.
    let f2 = FieldDescriptor::prime(2).unwrap();
    let a = barnes_algebra(f2);
    let n = a.element_from_i64(&[0, 1, 0, 0]);
    let e = engel_subalgebra(&a, &n);
    assert_eq!(e.space.dim(), 2);
    assert!(matches!(
        minimal_engel_search(&a),
        Err(Error::FieldTooSmall { cardinality: 2, needed: 5 })
    ));
}

#[test]
fn example_table_reduces_mod_p_without_losing_the_identity() {
    for p in [2u64, 3, 5, 7, 11] {
        let a = barnes_algebra(FieldDescriptor::prime(p).unwrap());
        assert!(a.verify_leibniz().passed(), "reduction mod {}", p);
    }
}
