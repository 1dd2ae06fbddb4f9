//! Acceptance suite: every exit criterion of the build runs here, each as
//! one test printing a single pass/fail line. All comparisons are exact;
//! there are no tolerances anywhere.

use griess_core::*;
use griess_exact::ExactScalar;
use griess_workbench::{run_suite, VerificationReport};
use std::sync::OnceLock;

fn report() -> &'static VerificationReport {
    static REPORT: OnceLock<VerificationReport> = OnceLock::new();
    REPORT.get_or_init(|| run_suite("all", 4).expect("suite exists"))
}

/// Assert that every check with one of the given id prefixes passed, and
/// that each prefix matched at least one check.
fn criterion(number: u32, description: &str, prefixes: &[&str]) {
    let rep = report();
    let mut failures = Vec::new();
    for prefix in prefixes {
        let matched: Vec<_> = rep
            .checks
            .iter()
            .filter(|c| c.id.starts_with(prefix))
            .collect();
        assert!(
            !matched.is_empty(),
            "criterion {number}: no checks match prefix {prefix}"
        );
        for c in matched {
            if !c.pass {
                failures.push(format!(
                    "{} (expected {}, computed {})",
                    c.id, c.expected, c.computed
                ));
            }
        }
    }
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {number}: {verdict} — {description}");
    assert!(
        failures.is_empty(),
        "criterion {number} failed: {failures:?}"
    );
}

#[test]
fn criterion_01_catalog_table() {
    criterion(
        1,
        "dihedral table values (inner product, dimension, axis count)",
        &["catalog.table."],
    );
}

#[test]
fn criterion_02_conformal_charges() {
    criterion(
        2,
        "conformal central charges of the catalog and family algebras",
        &[
            "catalog.charge.3A",
            "catalog.charge.6A",
            "family.charge.x",
            "family.13.charge",
            "family.18.charge",
        ],
    );
}

#[test]
fn criterion_03_frame_charges() {
    criterion(
        3,
        "frame vector central charges across the family",
        &[
            "family.13.fcharge",
            "family.18.xicharge",
            "family.framecharge.f",
        ],
    );
}

#[test]
fn criterion_04_gram_determinants() {
    criterion(
        4,
        "exact Gram determinants of the 13- and 18-dimensional bases",
        &["family.13.gram", "family.18.gram"],
    );
}

#[test]
fn criterion_05_ternary_relation() {
    criterion(
        5,
        "grid relation between the class vectors and the nine axes",
        &["family.18.ternary"],
    );
}

#[test]
fn criterion_06_group_orders() {
    criterion(
        6,
        "involution group orders (6, 12, and the factorials)",
        &["groups.order."],
    );
}

#[test]
fn criterion_07_pair_orders_and_verdicts() {
    criterion(
        7,
        "pair-order spectra and 3-transposition verdicts",
        &["groups.pairorder.", "groups.verdict."],
    );
}

#[test]
fn criterion_08_lattice_oracle_and_enumeration() {
    criterion(
        8,
        "lattice axis-pair oracle, standard vector, and the 496 enumeration",
        &["lattice.oracle.", "lattice.e8."],
    );
}

#[test]
fn criterion_09_identity_residuals() {
    criterion(
        9,
        "displayed identities evaluate to zero residual in their host algebras",
        &[
            "catalog.axisproduct.",
            "catalog.sigma3A.",
            "catalog.doubleproduct.6A",
            "family.18.classinner",
            "family.18.classproducts",
            "family.18.tauclass",
            "family.18.classvectors",
            "family.18.doubleproduct",
            "family.18.axy",
            "family.13.axy",
            "family.frame.",
        ],
    );
}

#[test]
fn criterion_10_property_suites() {
    criterion(
        10,
        "involution, solver, serialization and covariance property checks",
        &[
            "catalog.covariance",
            "catalog.roundtrip.",
            "family.solver.",
            "lattice.span.",
            "lattice.tcharge.",
            "lattice.eta.",
        ],
    );
    // every Miyamoto map is a validated involutive isometric automorphism:
    // re-derive representative maps and exercise the validation directly
    let cat = griess_models::make_6a();
    let alg = &cat.algebra;
    for label in ["e0", "e1", "e2"] {
        let tau = miyamoto_tau(alg, cat.named(label)).unwrap();
        assert!(tau.matrix.mat_mul(&tau.matrix).is_identity());
    }
    let sigma = miyamoto_sigma(alg, cat.named("x")).unwrap();
    assert!(sigma.matrix.mat_mul(&sigma.matrix).is_identity());
    // conformal solver postconditions on a fresh model
    let f = griess_models::build_xn(2).unwrap();
    let basis: Vec<Element> = (0..f.dim()).map(|i| f.algebra.basis_element(i)).collect();
    let omega = conformal_vector(&f.algebra, &basis).unwrap();
    let half = omega.element.scale(&ExactScalar::ratio(1, 2));
    for b in &basis {
        assert_eq!(f.algebra.mul(&half, b), *b);
    }
}
