//! Checks that go through the public API and cross module boundaries.

use coordination_core::analytics::{check_logconcave_unimodal, hankel_suite, HankelKind};
use coordination_core::lattice::{diagonal, DiagonalKind, LatticeFamily};
use coordination_core::positivity::check_tp_window;
use coordination_core::zeros::{check_interlacing, check_real_rooted_and_interval, family_poly, InterlaceVerdict, PolyKind};
use coordination_core::{ExactMatrix, RiordanArray};
use num_bigint::BigInt;

#[test]
fn riordan_windows_match_lattice_tables() {
    for (m, array) in [
        (0, RiordanArray::coordination_s(7)),
        (1, RiordanArray::delannoy(7)),
        (2, RiordanArray::coordination_c(7)),
    ] {
        let w = array.square_window(7).unwrap();
        let rows = w.integer_rows().unwrap();
        assert_eq!(rows, LatticeFamily::new(m).table(7, 7), "m = {m}");
    }
}

#[test]
fn inverse_times_array_is_identity() {
    let c = RiordanArray::coordination_triangle_c(9);
    let prod = c.multiply(&c.inverse().unwrap()).unwrap();
    assert_eq!(prod.square_window(9).unwrap(), ExactMatrix::identity(9));
}

#[test]
fn diagonal_of_the_table_is_the_central_sequence() {
    let d = diagonal(DiagonalKind::D, 12).unwrap().values;
    let mut lat = LatticeFamily::new(1);
    for (n, v) in d.iter().enumerate() {
        assert_eq!(&lat.get(n, n), v);
    }
}

#[test]
fn real_rooted_rows_are_log_concave() {
    for n in 1..=15 {
        assert!(check_real_rooted_and_interval(PolyKind::C, n).unwrap().passed());
        let coeffs = family_poly(PolyKind::C, n).integer_coeffs().unwrap();
        let r = check_logconcave_unimodal(&coeffs);
        assert!(r.logconcave && r.newton_pass, "n = {n}");
    }
}

#[test]
fn consecutive_rows_interlace() {
    for kind in [PolyKind::C, PolyKind::D] {
        for n in 2..=10 {
            let v = check_interlacing(&family_poly(kind, n - 1), &family_poly(kind, n)).unwrap();
            assert_eq!(v, InterlaceVerdict::Interlaces, "{kind:?} n = {n}");
        }
    }
}

#[test]
fn hankel_matrix_of_delannoy_numbers_is_totally_positive() {
    let d = diagonal(DiagonalKind::D, 10).unwrap().values;
    let h = ExactMatrix::from_integer_fn(5, 5, |i, j| d[i + j].clone());
    assert!(check_tp_window(&h, 3).passed());
    let suite = hankel_suite(HankelKind::Delta, 5).unwrap();
    assert_eq!(suite.determinants[2], BigInt::from(32));
}
