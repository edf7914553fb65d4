mod common;

use common::{random_connected, random_graph};
use ecc_spectra::graph::canon::is_isomorphic;
use ecc_spectra::graph::{generate, GraphKind};
use ecc_spectra::ops::{central, central_edge_join, central_vertex_edge_join, central_vertex_join, eccentric_graph, BlockRole};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn vertex_edge_join_edge_count_on_twenty_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..20 {
        let (n1, n2, n3) = (rng.gen_range(2..9), rng.gen_range(1..6), rng.gen_range(1..6));
        let g1 = random_connected(&mut rng, n1, 0.3);
        let g2 = random_graph(&mut rng, n2, 0.5);
        let g3 = random_graph(&mut rng, n3, 0.5);
        let (p1, q1, q2, q3) = (g1.n(), g1.edge_count(), g2.edge_count(), g3.edge_count());
        let (p2, p3) = (g2.n(), g3.n());
        let want = (p1 * (p1 - 1) / 2 - q1) + 2 * q1 + q2 + q3 + p1 * p2 + q1 * p3;
        let got = central_vertex_edge_join(&g1, &g2, &g3).unwrap();
        assert_eq!(got.result.edge_count(), want, "{g1:?} {g2:?} {g3:?}");
        assert_eq!(got.result.n(), p1 + q1 + p2 + p3);
    }
}

#[test]
fn block_order_is_v1_i1_v2_v3() {
    let c4 = generate(GraphKind::Cycle(4)).unwrap();
    let k2 = generate(GraphKind::Complete(2)).unwrap();
    let k3 = generate(GraphKind::Complete(3)).unwrap();
    let lp = central_vertex_edge_join(&c4, &k2, &k3).unwrap();
    let roles: Vec<(BlockRole, usize, usize)> = lp.block_offsets.iter().map(|b| (b.role, b.start, b.len)).collect();
    assert_eq!(
        roles,
        vec![(BlockRole::V1, 0, 4), (BlockRole::I1, 4, 4), (BlockRole::V2, 8, 2), (BlockRole::V3, 10, 3)]
    );
    // edge joins report their extra block as V2
    let ej = central_edge_join(&c4, &k2).unwrap();
    assert_eq!(ej.block(BlockRole::V2).map(|b| (b.start, b.len)), Some((8, 2)));
    assert!(ej.block(BlockRole::V3).is_none());
}

#[test]
fn documented_constructions() {
    let c4 = generate(GraphKind::Cycle(4)).unwrap();
    let k2 = generate(GraphKind::Complete(2)).unwrap();
    assert_eq!(central(&c4).unwrap().result.n(), 8);
    assert_eq!(central_vertex_join(&c4, &k2).unwrap().result.n(), 10);
    // eccentric graph of C4 is 2K2 on the antipodal pairs
    let ecc = eccentric_graph(&c4).unwrap();
    assert_eq!(ecc.edges(), vec![(0, 2), (1, 3)]);
    let k4 = generate(GraphKind::Complete(4)).unwrap();
    assert!(is_isomorphic(&k4.line_graph().unwrap(), &generate(GraphKind::CocktailParty(3)).unwrap()).unwrap());
    let star = generate(GraphKind::Star(5)).unwrap();
    assert!(is_isomorphic(&star.line_graph().unwrap(), &k4).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn central_graph_structure(seed in any::<u64>(), n in 2usize..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(&mut rng, n, 0.4);
        let c = central(&g).unwrap();
        let (p, q) = (g.n(), g.edge_count());
        prop_assert_eq!(c.result.n(), p + q);
        prop_assert_eq!(c.result.edge_count(), p * (p - 1) / 2 - q + 2 * q);
        // original vertices: adjacent in C[G] exactly when nonadjacent in G
        for a in 0..p {
            for b in a + 1..p {
                prop_assert_eq!(c.result.has_edge(a, b), !g.has_edge(a, b));
            }
        }
        // subdivision vertex k sits on the k-th edge in lexicographic order
        for (k, (a, b)) in g.edges().into_iter().enumerate() {
            prop_assert_eq!(c.result.neighbors(p + k).to_vec(), vec![a, b]);
        }
    }

    #[test]
    fn joins_edge_counts(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n1 = rng.gen_range(2..8);
        let g1 = random_connected(&mut rng, n1, 0.5);
        let g2 = random_graph(&mut rng, 3, 0.5);
        let (p1, q1, p2, q2) = (g1.n(), g1.edge_count(), g2.n(), g2.edge_count());
        let base = p1 * (p1 - 1) / 2 + q1;
        prop_assert_eq!(central_vertex_join(&g1, &g2).unwrap().result.edge_count(), base + q2 + p1 * p2);
        prop_assert_eq!(central_edge_join(&g1, &g2).unwrap().result.edge_count(), base + q2 + q1 * p2);
    }
}
