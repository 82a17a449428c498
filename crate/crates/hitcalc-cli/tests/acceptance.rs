//! Acceptance suite: one test per acceptance criterion, exact integer
//! equality throughout. Heavy bases are shared through a single engine.
//!
//! Criterion 9's per-weight invariant split at (5,31) asserts the
//! published reference values; those are refuted by an independent
//! certificate (see the companion test and the repository notes), so that
//! single test is expected to fail until the reference table is revised.

use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use hitcalc_cli::cache::Cache;
use hitcalc_cli::verify;
use hitcalc_core::arith::{kameko_iso, transfer_dimension, transfer_hypothesis};
use hitcalc_core::invariant::{invariant_dim, invariant_dim_omega, sigma, GroupKind};
use hitcalc_core::linalg::{BitRow, EchelonSpan};
use hitcalc_core::monomial::{Monomial, WeightVector};
use hitcalc_core::poly::Polynomial;
use hitcalc_core::quotient::{hit_span, HitCalc, QuotientBasis, SupportPart, DEFAULT_COLUMN_CAP};
use hitcalc_core::ExecMode;

fn engine() -> &'static HitCalc {
    static ENGINE: OnceLock<HitCalc> = OnceLock::new();
    ENGINE.get_or_init(HitCalc::new)
}

fn w(s: &str) -> WeightVector {
    s.parse().unwrap()
}

fn m(s: &str) -> Monomial {
    s.parse().unwrap()
}

fn basis31() -> std::sync::Arc<QuotientBasis> {
    engine().quotient_basis_traced(5, 31).unwrap()
}

#[test]
fn criterion_01_elimination_trace_replication_at_31() {
    let start = Instant::now();
    let qb = basis31();
    let elapsed = start.elapsed();
    let trace = qb.trace();
    let sources: Vec<u64> = trace.families.iter().map(|f| f.source_count).collect();
    assert_eq!(sources, vec![46_376, 40_920, 31_465, 17_550, 3_876]);
    let standalone: Vec<u64> = trace
        .families
        .iter()
        .map(|f| f.standalone_rank.unwrap())
        .collect();
    assert_eq!(standalone, vec![24_615, 28_665, 26_520, 15_900, 0]);
    let cumulative: Vec<u64> = trace.families.iter().map(|f| f.cumulative_rank).collect();
    assert_eq!(cumulative, vec![24_615, 43_334, 49_530, 51_494, 51_494]);
    assert_eq!(trace.columns, 52_360);
    assert_eq!(trace.hit_rank, 51_494);
    assert_eq!(trace.dim, 866);
    assert!(elapsed <= Duration::from_secs(20 * 60), "took {elapsed:.2?}");
    // Retained elimination state stays far below the 2 GiB budget even if
    // every column became a pivot.
    assert!(EchelonSpan::estimated_bytes(52_360, 52_360) < 2 << 30);
}

#[test]
fn criterion_02_dimension_at_32() {
    let qb = engine().quotient_basis(5, 32).unwrap();
    assert_eq!(qb.columns(), 58_905);
    assert_eq!(qb.trace().hit_rank, 57_901);
    assert_eq!(qb.dim(), 1004);
}

#[test]
fn criterion_03_degree_fourteen_with_components() {
    // Fresh engine so the stated runtime bound covers the computation.
    let start = Instant::now();
    let fresh = HitCalc::new();
    let qb = fresh.quotient_basis(5, 14).unwrap();
    assert_eq!(qb.dim(), 320);
    assert_eq!(qb.dim_omega(&w("2,2,2"), SupportPart::All).unwrap(), 130);
    assert_eq!(qb.dim_omega(&w("2,4,1"), SupportPart::All).unwrap(), 15);
    assert_eq!(qb.dim_omega(&w("4,3,1"), SupportPart::All).unwrap(), 175);
    assert!(start.elapsed() <= Duration::from_secs(5));
}

#[test]
fn criterion_04_generic_degree_table_desk_scale() {
    let fresh = HitCalc::new();
    let start = Instant::now();
    assert_eq!(fresh.dim_q(5, 5).unwrap(), 46);
    assert!(start.elapsed() <= Duration::from_secs(10));
    let start = Instant::now();
    assert_eq!(fresh.dim_q(5, 13).unwrap(), 250);
    assert!(start.elapsed() <= Duration::from_secs(10));
    let start = Instant::now();
    assert_eq!(fresh.dim_q(5, 29).unwrap(), 645);
    assert!(start.elapsed() <= Duration::from_secs(5 * 60));
    // The table's deeper entries rest on the squaring-map isomorphism
    // where the mu condition applies; the shortcut is exercised directly.
    assert!(kameko_iso(5, 139));
    assert_eq!(fresh.kameko_kernel_dim(5, 139).unwrap(), 0);
    assert!(kameko_iso(2, 1));
    assert_eq!(fresh.dim_q(2, 4).unwrap(), fresh.dim_q(2, 1).unwrap());
}

#[test]
fn criterion_05_weight_components_at_31() {
    let qb = basis31();
    assert_eq!(qb.dim_omega(&w("1,1,1,1,1"), SupportPart::Positive).unwrap(), 1);
    assert_eq!(qb.dim_omega(&w("3,2,2,2"), SupportPart::Positive).unwrap(), 215);
    assert_eq!(qb.dim_omega(&w("3,4,3,1"), SupportPart::Positive).unwrap(), 70);
    assert_eq!(qb.dim_omega(&w("1,1,1,1,1"), SupportPart::Zero).unwrap(), 30);
    assert_eq!(qb.dim_omega(&w("3,2,2,2"), SupportPart::Zero).unwrap(), 300);
    for extra in ["1,1,1,3", "1,3,2,2", "1,3,4,1", "3,2,4,1"] {
        assert_eq!(
            qb.dim_omega(&w(extra), SupportPart::All).unwrap(),
            0,
            "weight {extra}"
        );
    }
}

#[test]
fn criterion_06_weight_components_at_32() {
    let qb = engine().quotient_basis(5, 32).unwrap();
    assert_eq!(qb.dim_omega(&w("2,1,1,1,1"), SupportPart::Zero).unwrap(), 115);
    assert_eq!(qb.dim_omega(&w("4,2,2,2"), SupportPart::Zero).unwrap(), 175);
    assert_eq!(qb.dim_omega(&w("4,4,3,1"), SupportPart::Zero).unwrap(), 75);
    assert_eq!(qb.dim_omega(&w("2,1,1,1,1"), SupportPart::Positive).unwrap(), 9);
    assert_eq!(qb.dim_omega(&w("4,2,2,2"), SupportPart::Positive).unwrap(), 310);
    assert_eq!(qb.dim_omega(&w("4,4,3,1"), SupportPart::Positive).unwrap(), 320);
    // No other weight contributes: the three components exhaust the space.
    let total = 115 + 175 + 75 + 9 + 310 + 320;
    assert_eq!(qb.dim(), total);
    for ww in hitcalc_core::quotient::weight_vectors(5, 32) {
        if ["2,1,1,1,1", "4,2,2,2", "4,4,3,1"].iter().any(|s| w(s) == ww) {
            continue;
        }
        assert_eq!(qb.dim_omega(&ww, SupportPart::All).unwrap(), 0, "weight {ww}");
    }
}

#[test]
fn criterion_07_support_split_formula() {
    for (n, expected_inputs, expected_zero) in
        [(31u64, [1u64, 1, 8, 47], 330u64), (32, [0, 3, 5, 57], 365)]
    {
        let mut inputs = Vec::new();
        for s in 1..=4usize {
            inputs.push(
                engine()
                    .quotient_basis(s, n)
                    .unwrap()
                    .dim_part(SupportPart::Positive),
            );
        }
        assert_eq!(inputs, expected_inputs, "positive parts at n={n}");
        assert_eq!(
            hitcalc_core::quotient::dim_zero_via_formula(5, &inputs),
            expected_zero
        );
        let direct = engine()
            .quotient_basis(5, n)
            .unwrap()
            .dim_part(SupportPart::Zero);
        assert_eq!(direct, expected_zero, "direct zero-support at n={n}");
    }
}

#[test]
fn criterion_08_kameko_kernel_at_13() {
    assert_eq!(engine().kameko_kernel_dim(5, 13).unwrap(), 616);
    assert_eq!(engine().dim_q(5, 31).unwrap() - engine().dim_q(5, 13).unwrap(), 616);
    let qb = basis31();
    let split = 330
        + qb.dim_omega(&w("1,1,1,1,1"), SupportPart::Positive).unwrap()
        + qb.dim_omega(&w("3,2,2,2"), SupportPart::Positive).unwrap()
        + qb.dim_omega(&w("3,4,3,1"), SupportPart::Positive).unwrap();
    assert_eq!(split, 616);
    assert!(engine().kameko_surjective(5, 13).unwrap());
}

#[test]
fn criterion_09_invariant_dimensions() {
    let gl = GroupKind::GeneralLinear;
    assert_eq!(invariant_dim(engine(), 5, 14, gl).unwrap().0, 1);
    assert_eq!(invariant_dim(engine(), 5, 31, gl).unwrap().0, 2);
    assert_eq!(invariant_dim(engine(), 5, 32, gl).unwrap().0, 0);
    assert_eq!(invariant_dim(engine(), 5, 13, gl).unwrap().0, 0);
    assert_eq!(
        invariant_dim_omega(engine(), 5, 14, &w("2,2,2"), gl).unwrap(),
        1
    );
    assert_eq!(
        invariant_dim_omega(engine(), 5, 14, &w("2,4,1"), gl).unwrap(),
        0
    );
    assert_eq!(
        invariant_dim_omega(engine(), 5, 14, &w("4,3,1"), gl).unwrap(),
        0
    );
    assert_eq!(
        invariant_dim_omega(engine(), 5, 31, &w("1,1,1,1,1"), gl).unwrap(),
        1
    );
    // The two reference values below are refuted by the first-principles
    // certificate replayed in criterion_09_companion_certified_profile;
    // they are asserted as published and expected to fail.
    assert_eq!(
        invariant_dim_omega(engine(), 5, 31, &w("3,2,2,2"), gl).unwrap(),
        1,
        "published reference value; the certified value is 0 \
         (see criterion_09_companion_certified_profile)"
    );
    assert_eq!(
        invariant_dim_omega(engine(), 5, 31, &w("3,4,3,1"), gl).unwrap(),
        0,
        "published reference value; the certified value is 1 \
         (see criterion_09_companion_certified_profile)"
    );
}

/// The certified per-weight invariant profile at (5,31), with the
/// certificate replayed from first principles: the invariant of the
/// (3,4,3,1)-component is exhibited explicitly and checked against the raw
/// hit span, bypassing all quotient machinery.
#[test]
fn criterion_09_companion_certified_profile() {
    let gl = GroupKind::GeneralLinear;
    assert_eq!(
        invariant_dim_omega(engine(), 5, 31, &w("1,1,1,1,1"), gl).unwrap(),
        1
    );
    assert_eq!(
        invariant_dim_omega(engine(), 5, 31, &w("3,2,2,2"), gl).unwrap(),
        0
    );
    assert_eq!(
        invariant_dim_omega(engine(), 5, 31, &w("3,4,3,1"), gl).unwrap(),
        1
    );

    // Certificate: v is fixed by the transposition generators and by the
    // transvection modulo hit elements and lower filtration, where
    // membership is tested against a freshly built direct span.
    let terms: Vec<Monomial> = [
        "3 3 5 6 14", "3 3 5 14 6", "3 3 13 6 6", "3 5 3 6 14", "3 5 3 14 6",
        "3 5 6 3 14", "3 5 6 14 3", "3 5 7 6 10", "3 5 7 10 6", "3 7 5 6 10",
        "3 7 5 10 6", "3 13 3 6 6", "7 3 5 6 10", "7 3 5 10 6", "7 3 9 6 6",
        "7 9 3 6 6",
    ]
    .iter()
    .map(|s| m(s))
    .collect();
    let v = Polynomial::from_terms(5, terms);
    let w3 = w("3,4,3,1");
    let (context, mut span, _) =
        hit_span(5, 31, DEFAULT_COLUMN_CAP, ExecMode::Sequential, false).unwrap();
    for (rank, mono) in context.monomials().iter().enumerate() {
        if mono.weight() < w3 {
            let mut unit = BitRow::zeros(context.len());
            unit.set(rank);
            span.insert_forward(unit);
        }
    }
    for d in 1..=5usize {
        let map = sigma(d, 5).unwrap();
        let moved = map.apply(&v).unwrap().add(&v).unwrap();
        if moved.is_zero() {
            continue;
        }
        let row = context.pack(&moved).unwrap();
        assert!(span.contains(&row), "generator {d}");
    }
}

#[test]
fn criterion_10_appendix_basis_agreement() {
    for &(name, text, n, ww, part) in verify::FIXTURES {
        let listed =
            Cache::parse_basis(text, 5, n, std::path::Path::new(name)).unwrap();
        let qb = engine().quotient_basis(5, n).unwrap();
        for mono in &listed {
            assert!(qb.is_admissible(mono), "{name}: {mono}");
        }
        let computed: BTreeSet<&[u64]> = qb
            .admissible()
            .iter()
            .filter(|mono| {
                mono.weight() == w(ww)
                    && match part {
                        SupportPart::All => true,
                        SupportPart::Zero => !mono.has_full_support(),
                        SupportPart::Positive => mono.has_full_support(),
                    }
            })
            .map(|mono| mono.exponents())
            .collect();
        assert_eq!(listed.len(), computed.len(), "{name}: cardinality");
        let listed_set: BTreeSet<&[u64]> =
            listed.iter().map(|mono| mono.exponents()).collect();
        assert_eq!(listed_set, computed, "{name}: exact set agreement");
    }
}

#[test]
fn criterion_11_closed_form_transfer() {
    assert!(transfer_hypothesis(6, 47));
    assert_eq!(transfer_dimension(6, 1894), 119_322);
}

/// The long-running direct check behind criterion 11; run with
/// `cargo test -- --ignored` or through `hitcalc verify extended`.
#[test]
#[ignore = "long-running: direct elimination at (5,47), about 250k columns"]
fn criterion_11_extended_direct_dimension_at_47() {
    assert_eq!(engine().dim_q(5, 47).unwrap(), 1894);
}

#[test]
fn criterion_12_property_suites_pass_quickly() {
    let start = Instant::now();
    let ctx = hitcalc_cli::commands::Context {
        engine: HitCalc::new(),
        cache: Cache::at(std::env::temp_dir().join(format!("hitcalc-acc-{}", std::process::id()))),
        max_mem_bytes: 2 << 30,
    };
    let report = verify::run_suite(hitcalc_cli::cli::SuiteArg::Quick, &ctx).unwrap();
    assert!(report.failed.is_empty(), "failures: {:?}", report.failed);
    assert!(report.passed >= 20, "only {} checks ran", report.passed);
    assert!(
        start.elapsed() <= Duration::from_secs(60),
        "quick suite took {:.2?}",
        start.elapsed()
    );
}
