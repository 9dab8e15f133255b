mod common;

use common::{brute_isomorphic, oracle_connected, oracle_is_cactus};
use spext_core::enumeration::{enumerate_class, enumerate_hereditary, ClassName};
use spext_core::families::cactus_addable_edges;
use spext_core::{
    block_decomposition, cycle, h_n, is_cactus, is_edge_maximal_cactus, is_max_edge_cactus,
    is_odd_cycle_graph, is_unicyclic, k1n_plus, make_graph, max_cactus_edges, path, star, Graph,
    GraphError,
};

#[test]
fn star_examples() {
    assert_eq!(star(2).unwrap(), path(2).unwrap());
    assert_eq!(star(5).unwrap().max_degree(), 4);
    assert!(brute_isomorphic(&star(3).unwrap(), &path(3).unwrap()));
    assert!(matches!(
        star(1),
        Err(GraphError::OrderTooSmall { n: 1, min: 2 })
    ));
}

#[test]
fn h_n_examples() {
    assert_eq!(h_n(3).unwrap(), cycle(3).unwrap());
    assert_eq!(h_n(5).unwrap().size(), 6);
    let h6 = h_n(6).unwrap();
    assert_eq!(h6.size(), 7);
    assert_eq!(h6.degrees().iter().filter(|&&d| d == 1).count(), 1);
    assert!(h_n(2).is_err());
    for n in 3..=12 {
        let g = h_n(n).unwrap();
        assert_eq!(g.size(), n - 1 + (n - 1) / 2);
        assert!(is_max_edge_cactus(&g));
        assert!(is_odd_cycle_graph(&g));
        if n >= 6 {
            assert_eq!(g.t_count(), 1);
        }
    }
}

#[test]
fn k1n_plus_examples() {
    assert_eq!(k1n_plus(3).unwrap(), cycle(3).unwrap());
    let paw = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
    assert_eq!(k1n_plus(4).unwrap(), paw);
    for n in 3..=12 {
        let g = k1n_plus(n).unwrap();
        assert!(is_unicyclic(&g));
        assert_eq!(g.max_degree(), n - 1);
    }
}

#[test]
fn cycle_and_path_examples() {
    assert_eq!(cycle(3).unwrap(), h_n(3).unwrap());
    assert_eq!(path(2).unwrap().size(), 1);
    assert!(is_cactus(&cycle(4).unwrap()));
    assert!(!is_odd_cycle_graph(&cycle(4).unwrap()));
    assert!(cycle(2).is_err());
    assert!(path(0).is_err());
    assert_eq!(path(1).unwrap(), Graph::empty(1));
}

#[test]
fn max_cactus_edges_examples() {
    assert_eq!(max_cactus_edges(4), 4);
    assert_eq!(max_cactus_edges(5), 6);
    assert_eq!(max_cactus_edges(3), 3);
    assert_eq!(max_cactus_edges(1), 0);
    assert_eq!(max_cactus_edges(2), 1);
}

#[test]
fn max_cactus_edges_matches_enumeration() {
    for n in 1..=8 {
        let best = enumerate_hereditary(n, is_cactus)
            .unwrap()
            .into_iter()
            .filter(|g| g.is_connected())
            .map(|g| g.size())
            .max()
            .unwrap();
        assert_eq!(best, max_cactus_edges(n), "n = {n}");
    }
}

#[test]
fn max_edge_examples() {
    let h7 = h_n(7).unwrap();
    assert!(is_max_edge_cactus(&h7) && is_edge_maximal_cactus(&h7));
    assert!(is_max_edge_cactus(&cycle(4).unwrap()));
    let bridged = make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
    assert!(is_max_edge_cactus(&bridged));
    let subdivided = make_graph(
        7,
        [
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (2, 6),
            (6, 3),
        ],
    )
    .unwrap();
    assert!(!is_max_edge_cactus(&subdivided));
    assert!(!is_edge_maximal_cactus(&subdivided));
    assert_eq!(cactus_addable_edges(&subdivided), vec![(2, 3)]);
}

/// Adds every non-edge in turn and checks the cactus property with the
/// edge-cycle oracle.
fn oracle_edge_maximal(g: &Graph) -> bool {
    oracle_connected(g)
        && oracle_is_cactus(g)
        && g.non_edges()
            .all(|(u, v)| !oracle_is_cactus(&g.with_edge(u, v).unwrap()))
}

#[test]
fn edge_maximality_matches_oracle() {
    for n in 3..=7 {
        for g in enumerate_class(n, ClassName::Cactus).unwrap() {
            assert_eq!(is_edge_maximal_cactus(&g), oracle_edge_maximal(&g), "{g:?}");
            if is_max_edge_cactus(&g) {
                assert!(is_edge_maximal_cactus(&g));
            }
        }
    }
    // an edge-maximal cactus that is not max-edge
    assert!(is_edge_maximal_cactus(&cycle(5).unwrap()));
    assert!(!is_max_edge_cactus(&cycle(5).unwrap()));
}

/// Structure of every max-edge cactus at `n ≤ 8`: cycle blocks are
/// triangles apart from at most one 4-cycle, and for even `n` exactly one of
/// {a bridge, a 4-cycle block} is present (odd `n`: neither).
#[test]
fn max_edge_cactus_structure() {
    for n in 3..=8 {
        for g in enumerate_class(n, ClassName::MaxEdgeCactus).unwrap() {
            let bd = block_decomposition(&g);
            assert!(
                bd.blocks.iter().all(|b| matches!(b.len(), 1 | 3 | 4)),
                "{g:?}"
            );
            let bridges = bd.bridges().count();
            let squares = bd.blocks.iter().filter(|b| b.len() == 4).count();
            assert_eq!(bridges + squares, 1 - n % 2, "{g:?}");
            if squares == 0 && g.t_count() > 1 {
                assert!(g
                    .edges()
                    .iter()
                    .any(|&(a, b)| g.degree(a).unwrap() >= 3 && g.degree(b).unwrap() >= 3));
            }
            if n >= 6 && squares == 0 {
                assert_eq!(
                    g.t_count() == 1,
                    brute_isomorphic(&g, &h_n(n).unwrap()),
                    "{g:?}"
                );
            }
        }
    }
}

/// Max-edge cacti other than `C_4` that contain a 4-cycle.
#[test]
fn four_cycle_max_edge_cacti() {
    // C4 and a triangle sharing one vertex: t = 1 but not H_6
    let g6 = make_graph(6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5), (0, 5)]).unwrap();
    assert!(is_max_edge_cactus(&g6));
    assert_eq!(g6.t_count(), 1);
    assert!(!brute_isomorphic(&g6, &h_n(6).unwrap()));
    // C4 with triangles at opposite corners: t = 2, no adjacent pair of degree >= 3
    let g8 = make_graph(
        8,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 3),
            (0, 4),
            (4, 5),
            (0, 5),
            (2, 6),
            (6, 7),
            (2, 7),
        ],
    )
    .unwrap();
    assert!(is_max_edge_cactus(&g8));
    assert_eq!(g8.t_count(), 2);
    assert!(!g8
        .edges()
        .iter()
        .any(|&(a, b)| g8.degree(a).unwrap() >= 3 && g8.degree(b).unwrap() >= 3));
    let with_square: Vec<usize> = (3..=8)
        .map(|n| {
            enumerate_class(n, ClassName::MaxEdgeCactus)
                .unwrap()
                .iter()
                .filter(|g| block_decomposition(g).blocks.iter().any(|b| b.len() == 4))
                .count()
        })
        .collect();
    assert_eq!(with_square[0], 0);
    assert_eq!(with_square[1], 1);
    assert_eq!(with_square[2], 0);
    assert!(with_square[3] >= 1 && with_square[5] >= 1);
    assert_eq!(with_square[4], 0);
}

#[test]
fn small_max_edge_cacti_are_h_n() {
    for n in 3..=5 {
        let all = enumerate_class(n, ClassName::MaxEdgeCactus).unwrap();
        let h = h_n(n).unwrap();
        for g in &all {
            assert!(brute_isomorphic(g, &h) || brute_isomorphic(g, &cycle(4).unwrap()));
        }
        assert_eq!(all.len(), if n == 4 { 2 } else { 1 });
    }
}
