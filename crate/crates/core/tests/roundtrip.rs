use proptest::prelude::*;
use sedgraph::blowup::{apex_augment, blow_up, BlowupSpec};
use sedgraph::constructions::{
    circulant_bipartite, circulant_unipartite, complete_graph, CirculantBipartiteSpec,
    CirculantSpec,
};
use sedgraph::extremal::{quasi_complete, quasi_star};
use sedgraph::graph::{Edge, Sign, SignedGraph};
use sedgraph::io::{parse_edge_list, write_edge_list};

fn arb_graph() -> impl Strategy<Value = SignedGraph> {
    (1usize..12).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let m = pairs.len();
        (
            proptest::collection::vec((0u8..3, any::<bool>()), m),
            Just(pairs),
            Just(n),
        )
            .prop_map(|(slots, pairs, n)| {
                let edges = slots
                    .into_iter()
                    .zip(pairs)
                    .filter_map(|((s, flip), (u, v))| {
                        let (u, v) = if flip { (v, u) } else { (u, v) };
                        match s {
                            1 => Some(Edge::new(u, v, Sign::Pos)),
                            2 => Some(Edge::new(u, v, Sign::Neg)),
                            _ => None,
                        }
                    })
                    .collect();
                SignedGraph::new(n, edges).unwrap()
            })
    })
}

proptest! {
    #[test]
    fn written_graphs_round_trip(g in arb_graph()) {
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_edge_list(&back), text);
    }
}

#[test]
fn generated_families_round_trip() {
    let graphs = vec![
        circulant_bipartite(
            CirculantBipartiteSpec {
                a: 2,
                b: 3,
                k: 2,
                l: 3,
            },
            Sign::Neg,
        )
        .unwrap(),
        circulant_unipartite(CirculantSpec { a: 2, k: 1, l: 3 }, Sign::Pos).unwrap(),
        complete_graph(6, Sign::Neg).unwrap(),
        quasi_complete(7, 12).unwrap(),
        quasi_star(7, 12).unwrap(),
        apex_augment(&blow_up(
            &complete_graph(3, Sign::Pos).unwrap(),
            BlowupSpec::new(3).unwrap(),
        )),
    ];
    for g in graphs {
        let text = write_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }
}

#[test]
fn quasi_star_is_complement_edge_for_edge() {
    for n in 1..=9 {
        let total = n * (n - 1) / 2;
        for e in 0..=total {
            let s = quasi_star(n, e).unwrap();
            let c = quasi_complete(n, total - e).unwrap().complement(Sign::Pos);
            assert!(s.same_graph(&c));
            assert_eq!(s.edge_count(), e);
        }
    }
}
