mod oracle;

use petgraph::algo::is_isomorphic_matching;
use petgraph::graph::UnGraph;
use proptest::prelude::*;

use slodowy::branes::{Brane, BraneDiagram};
use slodowy::quivers::{
    compositions, coulomb_crosscheck, full_star_quiver, intersect, linear_quiver, parse_composition, psi_character,
    star_as_intersection, star_quiver, QuiverDatum,
};

fn graph(q: &QuiverDatum) -> UnGraph<(u64, u64), ()> {
    let mut g = UnGraph::new_undirected();
    let ids: Vec<_> = q.n.iter().zip(&q.m).map(|(&n, &m)| g.add_node((n, m))).collect();
    for &(a, b) in &q.edges {
        g.add_edge(ids[a], ids[b], ());
    }
    g
}

fn isomorphic(a: &QuiverDatum, b: &QuiverDatum) -> bool {
    is_isomorphic_matching(&graph(a), &graph(b), |x, y| x == y, |_, _| true)
}

#[test]
fn stars_are_flag_intersections() {
    for n in 1..=6 {
        for parts in compositions(n) {
            if n >= 2 {
                let star = star_quiver(&parts).unwrap();
                assert!(isomorphic(&star_as_intersection(&parts, false).unwrap().pruned(), &star), "{parts:?}");
                let full = full_star_quiver(&parts).unwrap();
                assert!(isomorphic(&star_as_intersection(&parts, true).unwrap().pruned(), &full), "{parts:?}");
            } else {
                assert!(star_quiver(&parts).is_err());
            }
        }
    }
}

#[test]
fn star_dimensions() {
    for n in 2..=7u64 {
        for parts in compositions(n) {
            let q = star_quiver(&parts).unwrap();
            let sq: u64 = parts.iter().map(|p| p * p).sum();
            assert_eq!(q.higgs_dim(), (n * (n - 1)) as i64 - 2 * sq as i64, "{parts:?}");
            assert_eq!(q.coulomb_dim(), (n * n + n) as i64);
            assert!(coulomb_crosscheck(&parts).unwrap().ok);
            let psi = psi_character(&parts).unwrap();
            assert_eq!(psi.len() as u64, n - 1);
            assert_eq!(psi.iter().filter(|&&x| x == 0).count(), parts.len() - 1);
        }
    }
}

#[test]
fn intersection_is_symmetric_up_to_relabeling() {
    let shapes: [&[u64]; 5] = [&[2, 1], &[3, 1], &[3, 2, 1], &[4, 2], &[5, 3, 1]];
    for a in shapes {
        for b in shapes {
            let qa = linear_quiver(a).unwrap();
            let qb = linear_quiver(b).unwrap();
            let (ia, ib) = (qa.vertex_count() - 1, qb.vertex_count() - 1);
            let ab = intersect(&qa, ia, &qb, ib).unwrap();
            let ba = intersect(&qb, ib, &qa, ia).unwrap();
            assert!(isomorphic(&ab, &ba), "{a:?} {b:?}");
            assert_eq!(ab.vertex_count(), qa.vertex_count() + qb.vertex_count() + 1);
            assert_eq!(ab.edge_count(), qa.edge_count() + qb.edge_count() + 2);
            let glue = ab.vertex_count() - 1;
            assert_eq!(ab.n[glue], a[0].min(b[0]));
            assert_eq!(ab.m[glue], a[0].abs_diff(b[0]));
        }
    }
}

#[test]
fn intersection_needs_framed_junctions() {
    let q = linear_quiver(&[3, 2, 1]).unwrap();
    assert!(intersect(&q, 0, &q, 1).is_err());
    assert!(intersect(&q, 9, &q, 1).is_err());
}

#[test]
fn linear_quiver_validation() {
    assert!(linear_quiver(&[3]).is_err());
    assert!(linear_quiver(&[2, 2]).is_err());
    assert!(linear_quiver(&[1, 2]).is_err());
    assert!(linear_quiver(&[2, 0]).is_err());
    assert!(QuiverDatum::new(vec![1], vec![1, 2], vec![]).is_err());
    assert!(QuiverDatum::new(vec![1], vec![1], vec![(0, 1)]).is_err());
}

#[test]
fn quiver_json_shape() {
    let q = linear_quiver(&[3, 2, 1]).unwrap();
    let v = serde_json::to_value(&q).unwrap();
    assert_eq!(v["vertices"], serde_json::json!([0, 1]));
    assert_eq!(v["edges"].as_array().unwrap().len(), 1);
    assert_eq!(v["n"]["0"], 1);
    assert_eq!(v["n"]["1"], 2);
    assert_eq!(v["m"]["1"], 3);
}

#[test]
fn composition_parsing() {
    assert_eq!(parse_composition("2, 1").unwrap(), vec![2, 1]);
    assert!(parse_composition("2,x").is_err());
    assert!(parse_composition("").is_err());
    let mut expected = oracle::compositions(8);
    expected.sort();
    assert_eq!(compositions(8), expected);
    assert_eq!(compositions(8).len(), 128);
}

#[test]
fn diagram_parsing_and_display() {
    let d = BraneDiagram::parse("D 2 N 3 D").unwrap();
    assert_eq!(d.to_string(), "D 2 N 3 D");
    assert_eq!(d.counts(), (2, 1));
    assert_eq!(d.mirror_dual().to_string(), "N 2 D 3 N");
    assert_eq!(BraneDiagram::parse("D 3 D").unwrap().mirror_dual().to_string(), "N 3 N");
    for bad in ["", "D 2", "D x N", "D 2 2 N", "Q 1 D", "D -1 N"] {
        assert!(BraneDiagram::parse(bad).is_err(), "{bad:?}");
    }
    assert!(BraneDiagram::new(vec![Brane::D, Brane::N], vec![]).is_err());
}

#[test]
fn split_separated_diagrams() {
    let d = BraneDiagram::parse("N 1 N 2 D 3 D").unwrap();
    assert!(d.is_separated());
    assert_eq!(d.split_separated().unwrap(), (vec![2, 1], vec![2, 3]));
    assert!(BraneDiagram::parse("D 1 N").unwrap().split_separated().is_err());
    assert!(BraneDiagram::parse("D 3 D").unwrap().split_separated().is_err());
    assert_eq!(BraneDiagram::parse("D 3 D 1 D").unwrap().split_at(1).unwrap(), (vec![1, 3], vec![1]));
}

fn arb_diagram() -> impl Strategy<Value = (Vec<char>, Vec<i64>)> {
    (2usize..=8).prop_flat_map(|n| {
        (
            proptest::collection::vec(prop_oneof![Just('D'), Just('N')], n),
            proptest::collection::vec(0i64..=9, n - 1),
        )
    })
}

fn diagram(b: &[char], g: &[i64]) -> BraneDiagram {
    let b = b.iter().map(|&c| if c == 'D' { Brane::D } else { Brane::N }).collect();
    BraneDiagram::new(b, g.iter().map(|&x| x as u64).collect()).unwrap()
}

proptest! {
    #[test]
    fn hw_moves_match_the_oracle((b, g) in arb_diagram(), pos in 0usize..7) {
        prop_assume!(pos + 1 < b.len());
        let d = diagram(&b, &g);
        match oracle::hw(&b, &g, pos) {
            Some((nb, ng)) => {
                let once = d.hw_move(pos).unwrap();
                prop_assert_eq!(&once, &diagram(&nb, &ng));
                prop_assert_eq!(once.hw_move(pos).unwrap(), d.clone());
                prop_assert_eq!(once.counts(), d.counts());
            }
            None => prop_assert!(d.hw_move(pos).is_err()),
        }
    }

    #[test]
    fn mirror_dual_is_an_involution((b, g) in arb_diagram()) {
        let d = diagram(&b, &g);
        let m = d.mirror_dual();
        prop_assert_eq!(m.mirror_dual(), d.clone());
        prop_assert_eq!(m.counts(), (d.counts().1, d.counts().0));
    }
}
