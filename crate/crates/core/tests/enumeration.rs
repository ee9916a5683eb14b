mod common;

use common::*;
use pcolor::g3::violations;
use pcolor::harness::{enumerate_connected, verify_critical_theorem, verify_vertex_critical_theorem};
use pcolor::solver::chi_rho_value;
use pcolor::*;
use proptest::prelude::*;

#[test]
fn counts_match_edge_subset_oracle() {
    for n in 1..=6 {
        assert_eq!(enumerate_connected(n).unwrap().len(), connected_classes_by_subsets(n), "n={n}");
    }
    assert_eq!(connected_classes_by_subsets(6), 112);
    assert_eq!(enumerate_connected(7).unwrap().len(), 853);
}

#[test]
fn enumeration_is_deterministic_and_duplicate_free() {
    let a = enumerate_connected(6).unwrap();
    let b = enumerate_connected(6).unwrap();
    assert_eq!(a, b);
    let forms: std::collections::HashSet<_> = a.iter().map(|g| canonical_form(g).unwrap()).collect();
    assert_eq!(forms.len(), a.len());
}

#[test]
fn small_theorem_positives() {
    let r = verify_vertex_critical_theorem(5).unwrap();
    assert!(r.verified());
    let labels: Vec<&str> = r.positives.iter().map(|p| p.label.as_str()).collect();
    for want in ["K4", "H1", "H2", "C(5)", "C5var(1)", "C5var(2)", "C5var(3)", "C5var(4)"] {
        assert!(labels.contains(&want), "{want} missing from {labels:?}");
    }
    let r = verify_critical_theorem(6).unwrap();
    let labels: Vec<&str> = r.positives.iter().map(|p| p.label.as_str()).collect();
    for want in ["H3", "H5"] {
        assert!(labels.contains(&want));
    }
    assert!(!labels.contains(&"H6"));
    assert!(!labels.iter().any(|l| l.starts_with("C5var") || l.starts_with("C6var")));
}

#[test]
fn reports_are_reproducible() {
    let a = verify_critical_theorem(6).unwrap();
    let b = verify_critical_theorem(6).unwrap();
    assert_eq!(a.body(), b.body());
    assert_eq!(a.summary_line(), b.summary_line());
}

#[test]
fn recognizer_certificates_validate() {
    for n in 1..=7 {
        for g in enumerate_connected(n).unwrap() {
            if let Some(cert) = recognize_g3(&g).unwrap() {
                assert!(violations(&g, &cert).unwrap().is_empty(), "{}", to_graph6(&g).unwrap());
                assert!(is_valid(&g, &cert.coloring(&g)).unwrap(), "{}", to_graph6(&g).unwrap());
            }
        }
    }
}

fn arb_connected() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (2usize..=9, any::<u64>()).prop_flat_map(|(n, seed)| {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| ((seed as usize >> (v % 16)) % v, v)).collect();
        let mut s = seed;
        for u in 0..n {
            for v in u + 1..n {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if s >> 61 == 0 && !edges.contains(&(u, v)) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn recognition_is_label_invariant((g, p) in arb_connected()) {
        let a = recognize_g3(&g).unwrap().is_some();
        let b = recognize_g3(&g.permute(&p)).unwrap().is_some();
        prop_assert_eq!(a, b);
        prop_assert_eq!(a, chi_rho_value(&g) == 3);
    }
}
