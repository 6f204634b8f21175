mod common;

use biq_core::biquandle::biquandle_of_quandle;
use biq_core::constructions::{dihedral_quandle, trivial_quandle, wada_biquandle};
use biq_core::groups::cyclic_group;
use biq_core::links::*;
use biq_core::Error;
use common::*;

#[test]
fn builtin_components_and_arcs() {
    let d = parse_diagram(VIRTUAL_HOPF).unwrap();
    assert_eq!((d.components(), d.arc_count()), (2, 4));
    assert_eq!(parse_diagram(&unlink_text(2)).unwrap().components(), 2);
    assert_eq!(parse_diagram(KINK_POSITIVE).unwrap().components(), 1);
}

#[test]
fn dfs_matches_brute_force() {
    let small: Vec<_> = biquandle_corpus(4).into_iter().map(|(_, b)| b).collect();
    for (name, d) in builtin_diagrams() {
        for b in &small {
            if (b.n() as f64).powi(d.arc_count() as i32) > 2e5 {
                continue;
            }
            assert_eq!(coloring_count_biquandle(&d, b), brute_biquandle_colorings(&d, b), "{name}");
        }
        for (_, q) in constructed_quandles(4) {
            if (q.n() as f64).powi(d.arc_count() as i32) > 2e5 {
                continue;
            }
            assert_eq!(coloring_count_quandle(&d, &q), brute_quandle_colorings(&d, &q), "{name}");
        }
    }
}

#[test]
fn trivial_structure_agrees_with_quandle() {
    for (qname, q) in constructed_quandles(6) {
        let b = biquandle_of_quandle(&q);
        for (name, d) in builtin_diagrams() {
            assert_eq!(coloring_count_biquandle(&d, &b), coloring_count_quandle(&d, &q), "{qname} {name}");
        }
    }
}

#[test]
fn monochrome_colorings_always_counted() {
    for (_, q) in constructed_quandles(5) {
        for (_, d) in builtin_diagrams() {
            assert!(coloring_count_quandle(&d, &q) >= q.n() as u64);
        }
    }
}

#[test]
fn trefoil_and_hopf_counts() {
    let r3 = dihedral_quandle(3).unwrap();
    assert_eq!(coloring_count_quandle(&builtin_diagram("trefoil").unwrap(), &r3), 9);
    assert_eq!(coloring_count_quandle(&builtin_diagram("hopf").unwrap(), &r3), 3);
    assert_eq!(coloring_count_quandle(&parse_diagram(UNKNOT).unwrap(), &r3), 3);
    let t3 = trivial_quandle(3).unwrap();
    assert_eq!(coloring_count_quandle(&builtin_diagram("virtual-hopf").unwrap(), &t3), 9);
    let wada = wada_biquandle(&cyclic_group(3).unwrap()).unwrap();
    assert_eq!(coloring_count_biquandle(&builtin_diagram("kink+").unwrap(), &wada), 3);
}

/// Two strands related by a second Reidemeister move, closed into a
/// 2-component unlink: colorings must number `n²`.
#[test]
fn second_reidemeister_move_invariance() {
    let parallel = |s1: char, s2: char| format!("X {s1} b1 a1 b2 a2\nX {s2} b2 a2 b3 a3\n= a3 a1\n= b3 b1\n");
    // under strand runs the other way: meets the second crossing first
    let antiparallel = |s1: char, s2: char| format!("X {s1} b2 a1 b3 a2\nX {s2} b1 a2 b2 a3\n= a3 a1\n= b3 b1\n");
    let diagrams: Vec<_> = [('+', '-'), ('-', '+')]
        .iter()
        .flat_map(|&(s1, s2)| [parallel(s1, s2), antiparallel(s1, s2)])
        .map(|t| parse_diagram(&t).unwrap())
        .collect();
    for d in &diagrams {
        assert_eq!(d.components(), 2);
    }
    for (name, b) in biquandle_corpus(6) {
        let n2 = (b.n() * b.n()) as u64;
        for d in &diagrams {
            assert_eq!(coloring_count_biquandle(d, &b), n2, "{name}");
        }
    }
}

#[test]
fn malformed_diagrams_report_lines() {
    for (text, line) in [("= a a\nX + a b c d\n", 2), ("X + a b c\n", 1), ("= a b\n", 1), ("foo\n", 1)] {
        match parse_diagram(text) {
            Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
}
