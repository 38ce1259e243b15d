//! Property tests and independent-oracle cross-checks.

mod common;

use proptest::prelude::*;

use latticework::birkhoff::{self, Digraph, Poset};
use latticework::exhaustive;
use latticework::factors::{self, CoverInterval};
use latticework::fixtures;
use latticework::io;
use latticework::lattice::Lattice;

/// The perspectivity partition computed the other way around: close the
/// generating relation over all *element* pairs (A, B) whose transposed
/// intervals are both covers, instead of scanning interval pairs.
fn closure_classes_by_element_pairs(lat: &Lattice) -> Vec<Vec<CoverInterval>> {
    let intervals: Vec<CoverInterval> = lat
        .covers()
        .iter()
        .map(|&(lower, upper)| CoverInterval { lower, upper })
        .collect();
    let index = |iv: CoverInterval| intervals.binary_search(&iv).ok();
    let mut parent: Vec<usize> = (0..intervals.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for a in 0..lat.n() {
        for b in 0..lat.n() {
            let upper_side = CoverInterval {
                lower: b,
                upper: lat.join(a, b),
            };
            let lower_side = CoverInterval {
                lower: lat.meet(a, b),
                upper: a,
            };
            if let (Some(i), Some(j)) = (index(upper_side), index(lower_side)) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<CoverInterval>> = Default::default();
    for (i, &iv) in intervals.iter().enumerate() {
        classes.entry(find(&mut parent, i)).or_default().push(iv);
    }
    classes.into_values().collect()
}

#[test]
fn factor_classes_match_the_element_pair_closure() {
    let mut lattices: Vec<Lattice> = exhaustive::all_posets_up_to(4)
        .iter()
        .map(|p| birkhoff::downsets(p).unwrap().lattice)
        .collect();
    lattices.push(fixtures::m3());
    lattices.push(fixtures::d2());
    lattices.push(fixtures::boolean_lattice(3));
    for lat in &lattices {
        let fm = factors::factor_classes(lat).unwrap();
        let mut got: Vec<Vec<CoverInterval>> = (0..fm.class_count())
            .map(|c| fm.class_members(c).to_vec())
            .collect();
        got.sort();
        let mut want = closure_classes_by_element_pairs(lat);
        want.sort();
        assert_eq!(got, want);
    }
}

#[test]
fn downset_count_equals_antichain_count() {
    for p in exhaustive::all_posets_up_to(6) {
        let downsets = birkhoff::downsets(&p).unwrap().lattice.n();
        let n = p.n();
        let antichains = (0..(1u64 << n))
            .filter(|&mask| {
                (0..n).all(|i| {
                    mask >> i & 1 == 0
                        || (0..n).all(|j| {
                            i == j || mask >> j & 1 == 0 || !(p.leq(i, j) || p.leq(j, i))
                        })
                })
            })
            .count();
        assert_eq!(downsets, antichains, "on a {n}-element poset");
    }
}

#[test]
fn join_irreducible_means_unique_lower_cover() {
    // In a distributive lattice the order-theoretic definition (A = X v Y
    // forces A = X or A = Y) picks out exactly the elements with one lower
    // cover.
    for p in exhaustive::all_posets_up_to(5) {
        let lat = birkhoff::downsets(&p).unwrap().lattice;
        for a in 0..lat.n() {
            let by_join = a != lat.bottom()
                && (0..lat.n()).all(|x| {
                    (0..lat.n()).all(|y| lat.join(x, y) != a || x == a || y == a)
                });
            let by_covers = lat.lower_covers(a).len() == 1;
            assert_eq!(by_join, by_covers);
        }
    }
}

#[test]
fn modular_fixtures_have_equal_length_chains() {
    for lat in [
        fixtures::chain3(),
        fixtures::b2(),
        fixtures::m3(),
        fixtures::d2(),
        fixtures::d3(),
        fixtures::boolean_lattice(3),
    ] {
        assert!(lat.is_modular());
        let chains = lat.maximal_chains().unwrap();
        let len = chains[0].len();
        assert!(chains.iter().all(|c| c.len() == len));
        // In the multiplicity-free case the common length is the class count.
        if factors::is_multiplicity_free(&lat).unwrap() {
            let fm = factors::factor_classes(&lat).unwrap();
            assert_eq!(fm.class_count(), len - 1);
        }
    }
}

#[test]
fn ext_vertices_match_chain_length_on_the_sweep() {
    for p in exhaustive::all_posets_up_to(5) {
        let lat = birkhoff::downsets(&p).unwrap().lattice;
        let ext = latticework::extgraph::ext_graph(&lat).unwrap();
        assert_eq!(ext.graph.n(), p.n(), "one class per poset element");
    }
}

// ---------------------------------------------------------------------------
// Randomized properties.
// ---------------------------------------------------------------------------

fn cover_pair_sets() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (2usize..8).prop_flat_map(|n| {
        let pairs = proptest::collection::vec((0..n, 0..n), 0..12);
        (Just(n), pairs)
    })
}

proptest! {
    /// Construction either fails cleanly or produces tables that agree with
    /// the order-only oracles, a reduced cover list that rebuilds the same
    /// lattice, and a JSON round trip.
    #[test]
    fn from_covers_is_sound((n, pairs) in cover_pair_sets()) {
        let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        let filtered: Vec<(usize, usize)> =
            pairs.into_iter().filter(|&(a, b)| a != b).collect();
        let Ok(lat) = Lattice::from_cover_ids(names, &filtered) else {
            return Ok(());
        };
        for a in 0..lat.n() {
            for b in 0..lat.n() {
                prop_assert_eq!(common::oracle_meet(&lat, a, b), Some(lat.meet(a, b)));
                prop_assert_eq!(common::oracle_join(&lat, a, b), Some(lat.join(a, b)));
            }
        }
        let rebuilt = Lattice::from_cover_ids(
            lat.names().to_vec(),
            lat.covers(),
        ).expect("reduced covers define the same lattice");
        prop_assert_eq!(&rebuilt, &lat);
        let parsed = io::lattice_from_json(&io::lattice_to_json(&lat)).expect("round trip");
        prop_assert_eq!(&parsed, &lat);
    }

    /// A digraph is isomorphic to any relabeling of itself.
    #[test]
    fn digraph_iso_finds_relabelings(
        n in 1usize..7,
        edges in proptest::collection::vec((0usize..7, 0usize..7), 0..10),
        seed in any::<u64>(),
    ) {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut g = Digraph::new(names.clone());
        for (a, b) in edges {
            if a < n && b < n && a != b {
                g.add_edge(a, b);
            }
        }
        // Deterministic shuffle from the seed.
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let mut h = Digraph::new(names);
        for (a, b) in g.edges() {
            h.add_edge(perm[a], perm[b]);
        }
        prop_assert!(birkhoff::digraph_iso(&g, &h).unwrap().is_some());
    }

    /// Poset JSON round trip.
    #[test]
    fn poset_json_round_trip((n, pairs) in cover_pair_sets()) {
        let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        let upward: Vec<(usize, usize)> = pairs
            .into_iter()
            .filter(|&(a, b)| a < b)
            .collect();
        let p = Poset::from_cover_ids(names, &upward).expect("acyclic by construction");
        let parsed = io::poset_from_json(&io::poset_to_json(&p)).expect("round trip");
        prop_assert_eq!(&parsed, &p);
    }
}
