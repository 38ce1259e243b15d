//! The directed Ext graph of a lattice and what it reconstructs.
//!
//! Vertices are the factor classes of a distributive multiplicity-free
//! lattice. There is an edge `x -> y` when some interval of length two is
//! uniserial with top factor `x` and bottom factor `y` — a nontrivial
//! extension of `y` by `x`. When the underlying graph of the Ext graph is
//! acyclic, the Ext graph is isomorphic to the cover digraph of the poset of
//! join irreducibles, via the map sending each class to its unique join
//! irreducible.

use std::collections::BTreeMap;

use crate::birkhoff::{self, Digraph, JoinIrreducibles};
use crate::error::{Error, Result};
use crate::factors::{self, CoverInterval, FactorMap};
use crate::lattice::Lattice;
use crate::limits;
use crate::union_find::UnionFind;

/// The Ext graph together with the data used to build it.
#[derive(Debug, Clone)]
pub struct ExtGraph {
    /// Vertex `c` is factor class `c`, labeled by its join irreducible.
    pub graph: Digraph,
    pub factor_map: FactorMap,
    /// The unique join irreducible (lattice element) of each class.
    pub class_irreducible: Vec<usize>,
    /// One witness interval `(upper, mid, lower)` per edge.
    pub witnesses: BTreeMap<(usize, usize), (usize, usize, usize)>,
}

/// Build the Ext graph of a distributive multiplicity-free lattice.
pub fn ext_graph(lat: &Lattice) -> Result<ExtGraph> {
    ext_graph_capped(lat, limits::max_enumeration())
}

pub fn ext_graph_capped(lat: &Lattice, cap: usize) -> Result<ExtGraph> {
    let fm = factors::factor_classes(lat)?;
    if !factors::is_multiplicity_free_with(lat, &fm, cap)? {
        return Err(Error::NotMultiplicityFree);
    }

    // Each class contains exactly one interval whose top is join irreducible.
    let mut class_irreducible = vec![usize::MAX; fm.class_count()];
    for x in 0..lat.n() {
        if let [x0] = lat.lower_covers(x) {
            let c = fm
                .class_of(CoverInterval {
                    lower: *x0,
                    upper: x,
                })
                .expect("lower cover pairs are covers");
            if class_irreducible[c] != usize::MAX {
                return Err(Error::IsoFailure(format!(
                    "class {c} has two join-irreducible intervals: tops `{}`, `{}`",
                    lat.name(class_irreducible[c]),
                    lat.name(x)
                )));
            }
            class_irreducible[c] = x;
        }
    }
    if let Some(c) = class_irreducible.iter().position(|&x| x == usize::MAX) {
        return Err(Error::IsoFailure(format!(
            "class {c} has no join-irreducible interval"
        )));
    }

    let labels = class_irreducible
        .iter()
        .map(|&x| lat.name(x).to_string())
        .collect();
    let mut graph = Digraph::new(labels);
    let mut witnesses = BTreeMap::new();
    for w in 0..lat.n() {
        for u in lat.up_set(w).ones() {
            if u == w {
                continue;
            }
            let between = lat.strictly_between(w, u);
            if between.count() != 1 {
                continue;
            }
            let v = between.first_one().expect("count is one");
            if !lat.is_cover(w, v) || !lat.is_cover(v, u) {
                continue;
            }
            let x = fm
                .class_of(CoverInterval { lower: v, upper: u })
                .expect("cover");
            let y = fm
                .class_of(CoverInterval { lower: w, upper: v })
                .expect("cover");
            assert_ne!(x, y, "a loop would contradict multiplicity-freeness");
            graph.add_edge(x, y);
            witnesses.entry((x, y)).or_insert((u, v, w));
        }
    }
    Ok(ExtGraph {
        graph,
        factor_map: fm,
        class_irreducible,
        witnesses,
    })
}

/// No directed cycle (a topological order exists).
pub fn is_acyclic(g: &Digraph) -> bool {
    let n = g.n();
    let mut indeg = vec![0usize; n];
    for (_, t) in g.edges() {
        indeg[t] += 1;
    }
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop() {
        seen += 1;
        for (s, t) in g.edges() {
            if s == v {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    queue.push(t);
                }
            }
        }
    }
    seen == n
}

/// The underlying multigraph is a forest. Antiparallel directed edges count
/// as two undirected edges between the same pair, hence as a cycle.
pub fn underlying_graph_acyclic(g: &Digraph) -> bool {
    let mut uf = UnionFind::new(g.n());
    for (s, t) in g.edges() {
        if !uf.union(s, t) {
            return false;
        }
    }
    true
}

/// Outcome of comparing the Ext graph with the join-irreducible cover
/// digraph.
#[derive(Debug, Clone)]
pub enum ReconstructVerdict {
    /// The underlying Ext graph is acyclic and the canonical map
    /// (class -> its join irreducible) is an isomorphism. `witness[c]` is the
    /// poset vertex of class `c`.
    HoldsWithIso { witness: Vec<usize> },
    /// The underlying Ext graph has a cycle, so no conclusion is asserted;
    /// whether the isomorphism holds anyway is reported.
    HypothesisFails {
        directed_acyclic: bool,
        canonical_is_iso: bool,
        any_iso: Option<bool>,
    },
    /// The hypothesis held but the canonical map is not an isomorphism.
    Counterexample { detail: String },
}

#[derive(Debug, Clone)]
pub struct Reconstruction {
    pub ext: ExtGraph,
    pub irreducibles: JoinIrreducibles,
    pub cover_digraph: Digraph,
    pub verdict: ReconstructVerdict,
}

/// Compare the Ext graph against the cover digraph of the join-irreducible
/// poset, using the underlying-graph sense of acyclicity as the hypothesis.
pub fn reconstruct_check(lat: &Lattice) -> Result<Reconstruction> {
    let ext = ext_graph(lat)?;
    let irreducibles = birkhoff::join_irreducibles(lat)?;
    let cover = birkhoff::cover_digraph(&irreducibles.poset);

    // Canonical map: class -> poset vertex of its join irreducible.
    let canonical: Option<Vec<usize>> = ext
        .class_irreducible
        .iter()
        .map(|&element| irreducibles.vertex_of(element))
        .collect();
    let canonical_is_iso = match (&canonical, ext.graph.n() == cover.n()) {
        (Some(map), true) => ext.graph.edges().all(|(x, y)| cover.has_edge(map[x], map[y]))
            && cover.edges().all(|(a, b)| {
                let x = map.iter().position(|&m| m == a);
                let y = map.iter().position(|&m| m == b);
                matches!((x, y), (Some(x), Some(y)) if ext.graph.has_edge(x, y))
            }),
        _ => false,
    };

    let verdict = if underlying_graph_acyclic(&ext.graph) {
        if canonical_is_iso {
            ReconstructVerdict::HoldsWithIso {
                witness: canonical.expect("checked above"),
            }
        } else {
            ReconstructVerdict::Counterexample {
                detail: format!(
                    "underlying Ext graph is acyclic but the canonical map fails: \
                     {} classes vs {} irreducibles, {} vs {} edges",
                    ext.graph.n(),
                    cover.n(),
                    ext.graph.edge_count(),
                    cover.edge_count()
                ),
            }
        }
    } else {
        let any_iso = if ext.graph.n() <= limits::MAX_ISO_VERTICES {
            Some(birkhoff::digraph_iso(&ext.graph, &cover)?.is_some())
        } else {
            None
        };
        ReconstructVerdict::HypothesisFails {
            directed_acyclic: is_acyclic(&ext.graph),
            canonical_is_iso,
            any_iso,
        }
    };
    Ok(Reconstruction {
        ext,
        irreducibles,
        cover_digraph: cover,
        verdict,
    })
}

/// Pass/fail report for the two directions of the cover/Ext correspondence.
#[derive(Debug, Clone)]
pub struct CoverCorrespondence {
    /// For every cover `X -> Y` in the join-irreducible poset: is the edge
    /// `x -> y` present in the Ext graph? (Holds unconditionally.)
    pub cover_edges: Vec<(usize, usize, bool)>,
    /// For every Ext edge `x -> y` that is the only x-y path in the
    /// underlying graph: does `X` cover `Y` in the poset?
    pub unique_path_edges: Vec<(usize, usize, bool)>,
}

impl CoverCorrespondence {
    pub fn all_pass(&self) -> bool {
        self.cover_edges.iter().all(|&(_, _, ok)| ok)
            && self.unique_path_edges.iter().all(|&(_, _, ok)| ok)
    }
}

pub fn cover_correspondence(lat: &Lattice) -> Result<CoverCorrespondence> {
    let ext = ext_graph(lat)?;
    let irreducibles = birkhoff::join_irreducibles(lat)?;

    let class_of_vertex: Vec<usize> = irreducibles.top_classes.clone();

    let mut cover_edges = Vec::new();
    for &(lower, upper) in irreducibles.poset.covers() {
        let x = class_of_vertex[upper];
        let y = class_of_vertex[lower];
        cover_edges.push((x, y, ext.graph.has_edge(x, y)));
    }

    let mut unique_path_edges = Vec::new();
    for (x, y) in ext.graph.edges() {
        if !only_path(&ext.graph, x, y) {
            continue;
        }
        let vx = irreducibles
            .top_classes
            .iter()
            .position(|&c| c == x)
            .expect("every class has a join irreducible");
        let vy = irreducibles
            .top_classes
            .iter()
            .position(|&c| c == y)
            .expect("every class has a join irreducible");
        let is_cover = irreducibles.poset.covers().contains(&(vy, vx));
        unique_path_edges.push((x, y, is_cover));
    }
    Ok(CoverCorrespondence {
        cover_edges,
        unique_path_edges,
    })
}

/// Is the edge `x -> y` the only path between `x` and `y` in the underlying
/// graph?
fn only_path(g: &Digraph, x: usize, y: usize) -> bool {
    if g.has_edge(y, x) {
        // An antiparallel edge is a second path.
        return false;
    }
    let mut uf = UnionFind::new(g.n());
    for (s, t) in g.edges() {
        if (s, t) != (x, y) {
            uf.union(s, t);
        }
    }
    !uf.same(x, y)
}

/// Split the lattice along the connected components of the underlying Ext
/// graph: `L ~ J(P_1) x ... x J(P_k)`, with the product isomorphism checked
/// element by element. The trivial lattice yields no factors.
pub fn decompose(lat: &Lattice) -> Result<Vec<Lattice>> {
    let ext = ext_graph(lat)?;
    let irreducibles = birkhoff::join_irreducibles(lat)?;
    let class_count = ext.graph.n();
    if class_count == 0 {
        return Ok(Vec::new());
    }

    let mut uf = UnionFind::new(class_count);
    for (s, t) in ext.graph.edges() {
        uf.union(s, t);
    }
    let mut component_of_class = vec![usize::MAX; class_count];
    let mut components = 0usize;
    for c in 0..class_count {
        let root = uf.find(c);
        if component_of_class[root] == usize::MAX {
            component_of_class[root] = components;
            components += 1;
        }
        component_of_class[c] = component_of_class[root];
    }

    // Vertices of each component's induced subposet of join irreducibles.
    let mut component_vertices = vec![Vec::new(); components];
    for (vertex, &class) in irreducibles.top_classes.iter().enumerate() {
        component_vertices[component_of_class[class]].push(vertex);
    }

    let mut factor_lattices = Vec::with_capacity(components);
    let mut factor_downsets = Vec::with_capacity(components);
    for vertices in &component_vertices {
        let sub = irreducibles.poset.induced(vertices);
        let d = birkhoff::downsets(&sub)?;
        factor_downsets.push(d.downsets.clone());
        factor_lattices.push(d.lattice);
    }

    // Verify the product isomorphism A -> (down-set per component).
    let mut images: Vec<Vec<usize>> = Vec::with_capacity(lat.n());
    for a in 0..lat.n() {
        let mut tuple = Vec::with_capacity(components);
        for (i, vertices) in component_vertices.iter().enumerate() {
            let mut mask = crate::bits::Bits::new(vertices.len());
            for (pos, &vertex) in vertices.iter().enumerate() {
                if lat.leq(irreducibles.members[vertex], a) {
                    mask.set(pos, true);
                }
            }
            let e = factor_downsets[i]
                .iter()
                .position(|d| *d == mask)
                .ok_or_else(|| {
                    Error::IsoFailure(format!(
                        "image of `{}` is not a down-set of component {i}",
                        lat.name(a)
                    ))
                })?;
            tuple.push(e);
        }
        images.push(tuple);
    }
    let product_size: usize = factor_lattices.iter().map(|f| f.n()).product();
    if product_size != lat.n() {
        return Err(Error::IsoFailure(format!(
            "product size {} differs from lattice size {}",
            product_size,
            lat.n()
        )));
    }
    for a in 0..lat.n() {
        for b in 0..lat.n() {
            if a != b && images[a] == images[b] {
                return Err(Error::IsoFailure(format!(
                    "`{}` and `{}` have the same product image",
                    lat.name(a),
                    lat.name(b)
                )));
            }
            let pointwise = (0..components)
                .all(|i| factor_lattices[i].leq(images[a][i], images[b][i]));
            if lat.leq(a, b) != pointwise {
                return Err(Error::IsoFailure(format!(
                    "product order disagrees at `{}`, `{}`",
                    lat.name(a),
                    lat.name(b)
                )));
            }
        }
    }
    Ok(factor_lattices)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> Lattice {
        Lattice::from_covers(&["0", "a", "1"], &[("0", "a"), ("a", "1")]).unwrap()
    }

    fn b2() -> Lattice {
        Lattice::from_covers(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap()
    }

    fn d2() -> Lattice {
        Lattice::from_covers(
            &["0", "ab", "a", "b", "a+b", "1"],
            &[
                ("0", "ab"),
                ("ab", "a"),
                ("ab", "b"),
                ("a", "a+b"),
                ("b", "a+b"),
                ("a+b", "1"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn chain_has_single_edge() {
        let ext = ext_graph(&chain3()).unwrap();
        assert_eq!(ext.graph.n(), 2);
        assert_eq!(ext.graph.edge_count(), 1);
        // The top class points at the bottom class.
        let edge = ext.graph.edges().next().unwrap();
        assert_eq!(ext.graph.name(edge.0), "1");
        assert_eq!(ext.graph.name(edge.1), "a");
    }

    #[test]
    fn b2_has_no_edges() {
        // The only length-two interval [1,0] has two intermediates.
        let ext = ext_graph(&b2()).unwrap();
        assert_eq!(ext.graph.n(), 2);
        assert_eq!(ext.graph.edge_count(), 0);
    }

    #[test]
    fn d2_matches_boolean_square() {
        let ext = ext_graph(&d2()).unwrap();
        assert_eq!(ext.graph.n(), 4);
        assert_eq!(ext.graph.edge_count(), 4);
        let cover = birkhoff::cover_digraph(&crate::birkhoff::Poset::boolean(2));
        assert!(birkhoff::digraph_iso(&ext.graph, &cover)
            .unwrap()
            .is_some());
    }

    #[test]
    fn m3_is_rejected() {
        let m3 = Lattice::from_covers(
            &["0", "x", "y", "z", "1"],
            &[
                ("0", "x"),
                ("0", "y"),
                ("0", "z"),
                ("x", "1"),
                ("y", "1"),
                ("z", "1"),
            ],
        )
        .unwrap();
        assert!(matches!(ext_graph(&m3), Err(Error::NotMultiplicityFree)));
    }

    #[test]
    fn acyclicity_senses() {
        let mut single = Digraph::new(vec!["x".into(), "y".into()]);
        single.add_edge(0, 1);
        assert!(is_acyclic(&single));
        assert!(underlying_graph_acyclic(&single));

        let mut two_cycle = Digraph::new(vec!["x".into(), "y".into()]);
        two_cycle.add_edge(0, 1);
        two_cycle.add_edge(1, 0);
        assert!(!is_acyclic(&two_cycle));
        assert!(!underlying_graph_acyclic(&two_cycle));

        let mut diamond = Digraph::new(vec!["a".into(), "b".into(), "c".into(), "d".into()]);
        diamond.add_edge(0, 1);
        diamond.add_edge(0, 2);
        diamond.add_edge(1, 3);
        diamond.add_edge(2, 3);
        assert!(is_acyclic(&diamond));
        assert!(!underlying_graph_acyclic(&diamond));
    }

    #[test]
    fn reconstruct_on_chain() {
        let rec = reconstruct_check(&chain3()).unwrap();
        assert!(matches!(
            rec.verdict,
            ReconstructVerdict::HoldsWithIso { .. }
        ));
    }

    #[test]
    fn reconstruct_on_d2_reports_the_square_cycle() {
        // The Ext graph of the free distributive lattice on two generators
        // is the cover digraph of the boolean square, whose underlying graph
        // is a 4-cycle: the acyclicity hypothesis fails even though the
        // canonical map is an isomorphism.
        let rec = reconstruct_check(&d2()).unwrap();
        match rec.verdict {
            ReconstructVerdict::HypothesisFails {
                directed_acyclic,
                canonical_is_iso,
                any_iso,
            } => {
                assert!(directed_acyclic);
                assert!(canonical_is_iso);
                assert_eq!(any_iso, Some(true));
            }
            other => panic!("expected HypothesisFails, got {other:?}"),
        }
    }

    #[test]
    fn cover_correspondence_passes_on_fixtures() {
        for lat in [chain3(), b2(), d2()] {
            let report = cover_correspondence(&lat).unwrap();
            assert!(report.all_pass());
        }
    }

    #[test]
    fn decompose_b2_into_two_chains() {
        let factors = decompose(&b2()).unwrap();
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|f| f.n() == 2));
    }

    #[test]
    fn decompose_chain_is_trivial() {
        let factors = decompose(&chain3()).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].n(), 3);
    }

    #[test]
    fn decompose_mixed_product() {
        // J(2-chain + point) = 3-chain x 2-chain.
        let p = crate::birkhoff::Poset::from_covers(&["x", "y", "z"], &[("x", "y")]).unwrap();
        let lat = birkhoff::downsets(&p).unwrap().lattice;
        let mut sizes: Vec<usize> = decompose(&lat).unwrap().iter().map(|f| f.n()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 3]);
    }

    #[test]
    fn witness_interval_realizes_both_classes() {
        let lat = d2();
        let ext = ext_graph(&lat).unwrap();
        for (&(x, y), &(u, _v, w)) in &ext.witnesses {
            let set = factors::interval_factors(&lat, &ext.factor_map, u, w).unwrap();
            assert_eq!(set.into_iter().collect::<Vec<_>>(), {
                let mut v = vec![x, y];
                v.sort_unstable();
                v
            });
        }
    }
}
