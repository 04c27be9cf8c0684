//! Text formats round-trip for random graphs and for generated families
//! with their certificates.

use onep::families::{gen_chain_graph, gen_grid_join, gen_u_graph, immersions_of_deleted_edge, ChainSpec, GridType};
use onep::graph::Graph;
use onep::immersion::{parse_immersion, serialize_immersion, verify};
use onep::io::{parse_graph, parse_rotation, serialize_graph, serialize_rotation};
use onep::embedding::{planarity_test, Planarity};
use proptest::prelude::*;

fn multigraph() -> impl Strategy<Value = Graph> {
    (2usize..12).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..30).prop_map(move |pairs| {
            let edges: Vec<(usize, usize)> = pairs.into_iter().filter(|(u, v)| u != v).collect();
            Graph::build(n, edges, true).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph_text_round_trips(g in multigraph()) {
        let text = serialize_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(serialize_graph(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn rotation_text_round_trips(g in multigraph()) {
        let simple = Graph::build(g.n(), g.edges().to_vec(), false);
        if let Ok(s) = simple {
            if let Planarity::Planar(rot) = planarity_test(&s) {
                let text = serialize_rotation(&rot);
                prop_assert_eq!(parse_rotation(&text, &s).unwrap(), rot);
            }
        }
    }
}

#[test]
fn certificates_round_trip() {
    let u = gen_u_graph(8).unwrap();
    let j = gen_grid_join(7, 9, GridType::Two, 2, 5).unwrap();
    let cg = gen_chain_graph(&ChainSpec::plain([2, 2, 2], [2, 3, 4])).unwrap();
    let d = immersions_of_deleted_edge(&cg, 10).unwrap();
    for imm in [u.immersion, j.immersion, d] {
        assert!(verify(&imm, 1).is_empty());
        let text = serialize_immersion(&imm);
        let back = parse_immersion(&text).unwrap();
        assert_eq!(serialize_immersion(&back), text);
        assert_eq!(back, imm);
    }
}
