mod common;

use common::{hin_by_pieces, sweep_instances};
use szczarba::hom::{enumerate_sequences, seq_to_chain, SequenceIndex};
use szczarba::ops::VertexList;
use szczarba::sz::{derive_operator, sz_elementwise, sz_operator_route, verify_range, AlphaTable};

fn seq(p: usize, q: usize, e: &[usize]) -> SequenceIndex {
    SequenceIndex::new(p, q, e.to_vec()).unwrap()
}

fn sequences(max_n: usize) -> impl Iterator<Item = (usize, SequenceIndex)> {
    (1..=max_n).flat_map(|n| {
        (1..=n).flat_map(move |q| {
            (0..q).flat_map(move |p| {
                (0..q - p).flat_map(move |l| enumerate_sequences(p, q, l).into_iter().map(move |s| (n, s)))
            })
        })
    })
}

#[test]
fn routes_agree_through_six() {
    let report = verify_range(6);
    assert!(report.is_success(), "{report}");
    assert_eq!(report.instances, sweep_instances(6));
    let per_n: usize = report.per_dimension.iter().map(|d| d.instances).sum();
    assert_eq!(per_n, report.instances);
}

#[test]
fn operator_route_matches_pieces_oracle() {
    // the k component's j-th vertex is the k position of Hin applied to entry j
    let mut checked = 0;
    for (n, s) in sequences(5) {
        let chain = seq_to_chain(&s, n).unwrap();
        let images: Vec<Vec<usize>> = chain.entries().iter().map(hin_by_pieces).collect();
        let sz = sz_operator_route(&s, n).unwrap();
        for (slot, comp) in sz.components.iter().enumerate() {
            let expected: Vec<usize> = images.iter().map(|img| img[slot]).collect();
            assert_eq!(comp.vertices.vertices(), expected.as_slice(), "n={n} i={s} k={}", comp.k);
            checked += 1;
        }
    }
    let expected: usize = sequences(5).map(|(_, s)| s.q() - s.p()).sum();
    assert_eq!(checked, expected);
    assert!(checked > 500, "{checked}");
}

#[test]
fn operators_have_the_right_arity() {
    for (n, s) in sequences(6) {
        let sz = sz_operator_route(&s, n).unwrap();
        assert_eq!(sz.components.len(), s.q() - s.p());
        for (c, k) in sz.components.iter().zip((s.p() + 1..=s.q()).rev()) {
            assert_eq!(c.k, k);
            assert_eq!(c.operator.domain_dim(), n - k);
            assert_eq!(c.operator.codomain_dim(), s.len());
            assert_eq!(c.word.normalize(n - k).unwrap(), c.operator);
        }
    }
}

#[test]
fn unreduced_words_reduce_to_the_same_operator() {
    for (n, s) in sequences(5) {
        for k in s.p() + 1..=s.q() {
            let d = derive_operator(&s, k, n).unwrap();
            let generic = VertexList::generic(n - k);
            assert_eq!(d.word.apply_raw(&generic).unwrap(), d.operator.action());
        }
    }
}

#[test]
fn final_entries_are_anchored() {
    let t = common::base_anchor(6);
    assert!(t.checked > 0);
    assert_eq!(t.violations, 0, "{t:?}");
}

#[test]
fn hin_is_monotone() {
    let t = common::hin_monotone(6);
    assert_eq!(t.violations, 0, "{t:?}");
}

#[test]
fn hin_is_functorial() {
    let t = common::hin_functorial(6);
    assert_eq!(t.violations, 0, "{t:?}");
}

#[test]
fn hin_matches_its_definition_on_pieces() {
    let t = common::hin_matches_pieces(6);
    assert_eq!(t.violations, 0, "{t:?}");
}

#[test]
fn elementwise_map_is_natural() {
    let t = common::elementwise_natural(6);
    assert!(t.checked > 1000);
    assert_eq!(t.violations, 0, "{t:?}");
}

#[test]
fn sz_is_functorial_through_five() {
    let t = common::sz_functorial(5);
    assert!(t.checked > 0);
    assert_eq!(t.violations, 0, "{t:?}");
}

#[test]
fn alpha_never_increases() {
    let t = common::alpha_monotone(6);
    assert_eq!(t.violations, 0, "{t:?}");
}

#[test]
fn worked_tables() {
    let vl = |v: &[usize]| VertexList::new(v.to_vec()).unwrap();
    // {0,3} ≥ {0,2,3} ≥ {0,1,2,3}
    let sz = sz_elementwise(&seq_to_chain(&seq(0, 3, &[2, 1]), 3).unwrap());
    let got: Vec<_> = sz.components.iter().map(|c| c.vertices.clone()).collect();
    assert_eq!(got, vec![vl(&[0, 0, 0]), vl(&[0, 0, 1]), vl(&[0, 1, 2])]);
    // {0,3} ≥ {0,1,3} ≥ {0,1,2,3}, values from the pieces oracle
    let sz = sz_elementwise(&seq_to_chain(&seq(0, 3, &[1, 2]), 3).unwrap());
    let got: Vec<_> = sz.components.iter().map(|c| c.vertices.clone()).collect();
    assert_eq!(got, vec![vl(&[0, 0, 0]), vl(&[0, 1, 1]), vl(&[0, 0, 2])]);
}

#[test]
fn worked_operator_route() {
    let a = sz_operator_route(&seq(0, 3, &[2, 1]), 3).unwrap();
    assert_eq!(a.to_string(), "(s_0^2 g_3, s_0 g_2, g_1)");
    let b = sz_operator_route(&seq(0, 3, &[1, 2]), 3).unwrap();
    assert_eq!(b.to_string(), "(s_0^2 g_3, s_1 g_2, s_0 d_1 g_1)");

    let table = AlphaTable::new(3, &seq(0, 3, &[2, 1])).unwrap();
    let column = |len| -> Vec<usize> { (1..=3).map(|k| table.get(k, len).unwrap()).collect() };
    assert_eq!(column(0), vec![2, 1, 0]);
    assert_eq!(column(1), vec![1, 0, 0]);
    assert_eq!(column(2), vec![0, 0, 0]);
    assert_eq!(table.omegas, vec![0, 0]);
}

#[test]
fn empty_sequence_is_the_hinich_image_of_the_endpoints() {
    for (n, s) in sequences(6).filter(|(_, s)| s.is_empty()) {
        let sz = sz_operator_route(&s, n).unwrap();
        let verts: Vec<usize> = sz.components.iter().map(|c| c.vertices.vertices()[0]).collect();
        let expected: Vec<usize> = (s.p() + 1..=s.q()).rev().map(|k| s.q() - k).collect();
        assert_eq!(verts, expected);
    }
}
