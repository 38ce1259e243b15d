//! Join irreducibles, down-set lattices, and the Birkhoff correspondence.
//!
//! Every finite distributive lattice is the lattice of down-sets of its
//! poset of join irreducibles, via the map sending an element to the set of
//! join irreducibles below it. This module provides both directions of that
//! correspondence together with posets, their cover digraphs, and a small
//! digraph-isomorphism search used to compare them.

use std::collections::HashMap;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::factors;
use crate::lattice::Lattice;
use crate::limits;

/// A finite poset over dense ids `0..n`. No lattice structure is assumed.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    /// `up[i]` = reflexive up-set of `i`.
    up: Vec<Bits>,
    covers: Vec<(usize, usize)>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Poset")
            .field("names", &self.names)
            .field("covers", &self.covers)
            .finish()
    }
}

impl Poset {
    /// Build from labels and cover pairs `(lower, upper)`; the order is the
    /// reflexive-transitive closure.
    pub fn from_covers(names: &[&str], covers: &[(&str, &str)]) -> Result<Poset> {
        let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let mut index = HashMap::new();
        for (i, name) in owned.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(name.clone()));
            }
        }
        let mut pairs = Vec::with_capacity(covers.len());
        for (lo, hi) in covers {
            let lo = *index
                .get(*lo)
                .ok_or_else(|| Error::UnknownLabel(lo.to_string()))?;
            let hi = *index
                .get(*hi)
                .ok_or_else(|| Error::UnknownLabel(hi.to_string()))?;
            pairs.push((lo, hi));
        }
        Self::from_cover_ids(owned, &pairs)
    }

    pub fn from_cover_ids(names: Vec<String>, covers: &[(usize, usize)]) -> Result<Poset> {
        let n = names.len();
        let mut step_up = vec![Vec::new(); n];
        for &(lo, hi) in covers {
            if lo >= n || hi >= n {
                return Err(Error::UnknownLabel(format!("element id {}", lo.max(hi))));
            }
            step_up[lo].push(hi);
        }
        let mut up = vec![Bits::new(n); n];
        for start in 0..n {
            let row = &mut up[start];
            row.set(start, true);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &step_up[x] {
                    if !row.get(y) {
                        row.set(y, true);
                        stack.push(y);
                    }
                }
            }
        }
        for i in 0..n {
            for j in up[i].ones() {
                if j != i && up[j].get(i) {
                    return Err(Error::Cycle(names[i].clone()));
                }
            }
        }
        Ok(Self::from_leq(names, up))
    }

    /// Build from a reflexive order matrix that is already a partial order.
    pub fn from_leq(names: Vec<String>, up: Vec<Bits>) -> Poset {
        let n = names.len();
        let mut down = vec![Bits::new(n); n];
        for i in 0..n {
            for j in up[i].ones() {
                down[j].set(i, true);
            }
        }
        let mut covers = Vec::new();
        for x in 0..n {
            for y in up[x].ones() {
                if y == x {
                    continue;
                }
                let mut between = up[x].and(&down[y]);
                between.set(x, false);
                between.set(y, false);
                if between.is_clear() {
                    covers.push((x, y));
                }
            }
        }
        covers.sort_unstable();
        Poset { names, up, covers }
    }

    /// The boolean poset of all subsets of `{1..n}` ordered by inclusion.
    /// Elements are in canonical order (cardinality, then subset mask).
    pub fn boolean(n: u32) -> Poset {
        let size = 1usize << n;
        let mut masks: Vec<usize> = (0..size).collect();
        masks.sort_by_key(|&m| (m.count_ones(), m));
        let names: Vec<String> = masks.iter().map(|&m| subset_label(m)).collect();
        let mut up = vec![Bits::new(size); size];
        for (i, &a) in masks.iter().enumerate() {
            for (j, &b) in masks.iter().enumerate() {
                if a & !b == 0 {
                    up[i].set(j, true);
                }
            }
        }
        Poset::from_leq(names, up)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].get(b)
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Strict down-set of `x` as a bit row.
    pub fn strict_down_set(&self, x: usize) -> Bits {
        let mut b = Bits::new(self.n());
        for y in 0..self.n() {
            if y != x && self.leq(y, x) {
                b.set(y, true);
            }
        }
        b
    }

    /// Induced subposet on the given elements (in the given order).
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let k = elements.len();
        let names = elements.iter().map(|&x| self.names[x].clone()).collect();
        let mut up = vec![Bits::new(k); k];
        for (i, &x) in elements.iter().enumerate() {
            for (j, &y) in elements.iter().enumerate() {
                if self.leq(x, y) {
                    up[i].set(j, true);
                }
            }
        }
        Poset::from_leq(names, up)
    }
}

fn subset_label(mask: usize) -> String {
    let members: Vec<String> = (0..usize::BITS)
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", members.join(","))
}

/// A simple directed graph: no parallel duplicate edges, no loops.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    names: Vec<String>,
    edges: std::collections::BTreeSet<(usize, usize)>,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Digraph")
            .field("names", &self.names)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Digraph {
    pub fn new(names: Vec<String>) -> Digraph {
        Digraph {
            names,
            edges: Default::default(),
        }
    }

    pub fn add_edge(&mut self, from: usize, to: usize) {
        assert!(from != to, "loops are not allowed");
        assert!(from < self.n() && to < self.n());
        self.edges.insert((from, to));
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges.contains(&(from, to))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.range((v, 0)..(v + 1, 0)).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(_, t)| t == v).count()
    }
}

/// The join irreducibles of a distributive lattice: elements with exactly one
/// lower cover, as a subposet, together with each one's unique lower cover
/// and the factor class of the top cover interval.
#[derive(Debug, Clone)]
pub struct JoinIrreducibles {
    pub poset: Poset,
    /// Lattice element id of each poset vertex.
    pub members: Vec<usize>,
    /// The unique lower cover of each member.
    pub lower_covers: Vec<usize>,
    /// Class of `[member, lower_cover]` in the lattice's factor map.
    pub top_classes: Vec<usize>,
}

impl JoinIrreducibles {
    /// Poset vertex of a lattice element, if it is a join irreducible.
    pub fn vertex_of(&self, element: usize) -> Option<usize> {
        self.members.iter().position(|&m| m == element)
    }
}

/// Join irreducibles of a distributive lattice.
///
/// In a distributive lattice "join irreducible" coincides with "has exactly
/// one lower cover"; the bottom element (zero lower covers) is excluded.
pub fn join_irreducibles(lat: &Lattice) -> Result<JoinIrreducibles> {
    if !lat.is_distributive() {
        return Err(Error::NotDistributive);
    }
    let fm = factors::factor_classes(lat)?;
    let mut members = Vec::new();
    let mut lower_covers = Vec::new();
    let mut top_classes = Vec::new();
    for x in 0..lat.n() {
        if let [x0] = lat.lower_covers(x) {
            members.push(x);
            lower_covers.push(*x0);
            top_classes.push(
                fm.class_of(factors::CoverInterval {
                    lower: *x0,
                    upper: x,
                })
                .expect("lower cover pairs are covers"),
            );
        }
    }
    let k = members.len();
    let names = members.iter().map(|&x| lat.name(x).to_string()).collect();
    let mut up = vec![Bits::new(k); k];
    for i in 0..k {
        for j in 0..k {
            if lat.leq(members[i], members[j]) {
                up[i].set(j, true);
            }
        }
    }
    Ok(JoinIrreducibles {
        poset: Poset::from_leq(names, up),
        members,
        lower_covers,
        top_classes,
    })
}

/// The lattice of down-sets of a poset, with the down-set masks kept parallel
/// to the element ids.
#[derive(Debug, Clone)]
pub struct DownsetLattice {
    pub lattice: Lattice,
    /// `downsets[i]` = member mask (over the poset's vertices) of element `i`.
    pub downsets: Vec<Bits>,
}

impl DownsetLattice {
    pub fn element_of(&self, downset: &Bits) -> Option<usize> {
        self.downsets.iter().position(|d| d == downset)
    }
}

/// Enumerate all down-sets of `p`, ordered by (cardinality, member-name
/// list), and assemble them into a lattice under inclusion.
pub fn downsets(p: &Poset) -> Result<DownsetLattice> {
    downsets_capped(p, limits::max_enumeration())
}

pub fn downsets_capped(p: &Poset, cap: usize) -> Result<DownsetLattice> {
    let n = p.n();
    let strict_down: Vec<Bits> = (0..n).map(|x| p.strict_down_set(x)).collect();

    let mut seen: HashMap<Bits, ()> = HashMap::new();
    let empty = Bits::new(n);
    seen.insert(empty.clone(), ());
    let mut frontier = vec![empty];
    while let Some(d) = frontier.pop() {
        for m in 0..n {
            if !d.get(m) && strict_down[m].is_subset(&d) {
                let mut next = d.clone();
                next.set(m, true);
                if !seen.contains_key(&next) {
                    if seen.len() >= cap {
                        return Err(Error::SizeLimit {
                            what: "down-set count".to_string(),
                            limit: cap,
                        });
                    }
                    seen.insert(next.clone(), ());
                    frontier.push(next);
                }
            }
        }
    }

    let mut sets: Vec<Bits> = seen.into_keys().collect();
    let sort_key = |d: &Bits| {
        let mut members: Vec<&str> = d.ones().map(|i| p.name(i)).collect();
        members.sort_unstable();
        (
            d.count(),
            members.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        )
    };
    sets.sort_by_key(|d| sort_key(d));

    let labels: Vec<String> = sets
        .iter()
        .map(|d| {
            let mut members: Vec<&str> = d.ones().map(|i| p.name(i)).collect();
            members.sort_unstable();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    let size = sets.len();
    let mut up = vec![Bits::new(size); size];
    for i in 0..size {
        for j in 0..size {
            if sets[i].is_subset(&sets[j]) {
                up[i].set(j, true);
            }
        }
    }
    Ok(DownsetLattice {
        lattice: Lattice::from_leq(labels, up)?,
        downsets: sets,
    })
}

/// Witness of the Birkhoff correspondence for one lattice.
#[derive(Debug, Clone)]
pub struct BirkhoffIso {
    pub irreducibles: JoinIrreducibles,
    pub downset_lattice: DownsetLattice,
    /// Image of each lattice element in the down-set lattice.
    pub image: Vec<usize>,
}

impl BirkhoffIso {
    /// The down-set of join irreducibles assigned to a lattice element.
    pub fn downset_of(&self, element: usize) -> &Bits {
        &self.downset_lattice.downsets[self.image[element]]
    }
}

/// The canonical map `A -> { join irreducibles <= A }`, verified to be an
/// isomorphism onto the down-set lattice of the join-irreducible poset.
pub fn birkhoff_iso(lat: &Lattice) -> Result<BirkhoffIso> {
    let irreducibles = join_irreducibles(lat)?;
    let downset_lattice = downsets(&irreducibles.poset)?;
    let k = irreducibles.members.len();
    let mut image = Vec::with_capacity(lat.n());
    for a in 0..lat.n() {
        let mut d = Bits::new(k);
        for (i, &m) in irreducibles.members.iter().enumerate() {
            if lat.leq(m, a) {
                d.set(i, true);
            }
        }
        let target = downset_lattice.element_of(&d).ok_or_else(|| {
            Error::IsoFailure(format!(
                "image of `{}` is not a down-set of the join-irreducible poset",
                lat.name(a)
            ))
        })?;
        image.push(target);
    }
    if lat.n() != downset_lattice.lattice.n() {
        return Err(Error::IsoFailure(format!(
            "element counts differ: {} vs {}",
            lat.n(),
            downset_lattice.lattice.n()
        )));
    }
    let mut hit = vec![false; lat.n()];
    for &t in &image {
        if hit[t] {
            return Err(Error::IsoFailure("canonical map is not injective".into()));
        }
        hit[t] = true;
    }
    for a in 0..lat.n() {
        for b in 0..lat.n() {
            if lat.leq(a, b) != downset_lattice.lattice.leq(image[a], image[b]) {
                return Err(Error::IsoFailure(format!(
                    "order not preserved at `{}`, `{}`",
                    lat.name(a),
                    lat.name(b)
                )));
            }
        }
    }
    Ok(BirkhoffIso {
        irreducibles,
        downset_lattice,
        image,
    })
}

/// The cover digraph of a poset: an edge `x -> y` iff `x` covers `y`.
pub fn cover_digraph(p: &Poset) -> Digraph {
    let mut g = Digraph::new(p.names().to_vec());
    for &(lower, upper) in p.covers() {
        g.add_edge(upper, lower);
    }
    g
}

/// Edge-preserving vertex bijection between two digraphs, or None.
///
/// Backtracking search with degree pruning; the first (lexicographically
/// least) bijection is returned. Errors past [`limits::MAX_ISO_VERTICES`].
pub fn digraph_iso(g: &Digraph, h: &Digraph) -> Result<Option<Vec<usize>>> {
    if g.n() > limits::MAX_ISO_VERTICES || h.n() > limits::MAX_ISO_VERTICES {
        return Err(Error::SizeLimit {
            what: "digraph isomorphism vertex count".to_string(),
            limit: limits::MAX_ISO_VERTICES,
        });
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let n = g.n();
    let deg = |d: &Digraph, v: usize| (d.out_degree(v), d.in_degree(v));
    let g_deg: Vec<_> = (0..n).map(|v| deg(g, v)).collect();
    let h_deg: Vec<_> = (0..n).map(|v| deg(h, v)).collect();
    {
        let mut gs = g_deg.clone();
        let mut hs = h_deg.clone();
        gs.sort_unstable();
        hs.sort_unstable();
        if gs != hs {
            return Ok(None);
        }
    }
    let mut assignment = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn backtrack(
        g: &Digraph,
        h: &Digraph,
        g_deg: &[(usize, usize)],
        h_deg: &[(usize, usize)],
        assignment: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        let n = g.n();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || g_deg[v] != h_deg[w] {
                continue;
            }
            let consistent = (0..v).all(|u| {
                g.has_edge(u, v) == h.has_edge(assignment[u], w)
                    && g.has_edge(v, u) == h.has_edge(w, assignment[u])
            });
            if !consistent {
                continue;
            }
            assignment[v] = w;
            used[w] = true;
            if backtrack(g, h, g_deg, h_deg, assignment, used, v + 1) {
                return true;
            }
            assignment[v] = usize::MAX;
            used[w] = false;
        }
        false
    }
    if backtrack(g, h, &g_deg, &h_deg, &mut assignment, &mut used, 0) {
        Ok(Some(assignment))
    } else {
        Ok(None)
    }
}

/// Poset isomorphism via the cover digraphs.
pub fn poset_iso(p: &Poset, q: &Poset) -> Result<Option<Vec<usize>>> {
    digraph_iso(&cover_digraph(p), &cover_digraph(q))
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

    /// The free distributive lattice on two generators with bounds.
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
    fn b2_irreducibles_form_an_antichain() {
        let ji = join_irreducibles(&b2()).unwrap();
        assert_eq!(ji.members, vec![1, 2]);
        assert!(ji.poset.covers().is_empty());
        assert_eq!(ji.lower_covers, vec![0, 0]);
    }

    #[test]
    fn chain_irreducibles_form_a_chain() {
        let ji = join_irreducibles(&chain3()).unwrap();
        assert_eq!(ji.members, vec![1, 2]);
        assert_eq!(ji.poset.covers(), &[(0, 1)]);
    }

    #[test]
    fn d2_irreducibles_form_boolean_square() {
        let ji = join_irreducibles(&d2()).unwrap();
        assert_eq!(ji.members.len(), 4);
        let square = Poset::boolean(2);
        assert!(poset_iso(&ji.poset, &square).unwrap().is_some());
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
        assert!(matches!(
            join_irreducibles(&m3),
            Err(Error::NotDistributive)
        ));
    }

    #[test]
    fn downsets_of_antichain_and_chain() {
        let antichain = Poset::from_covers(&["x", "y"], &[]).unwrap();
        let d = downsets(&antichain).unwrap();
        assert_eq!(d.lattice.n(), 4);
        assert_eq!(d.lattice, b2_renamed());

        let two_chain = Poset::from_covers(&["x", "y"], &[("x", "y")]).unwrap();
        let d = downsets(&two_chain).unwrap();
        assert_eq!(d.lattice.n(), 3);
        assert_eq!(d.lattice.covers().len(), 2);
    }

    fn b2_renamed() -> Lattice {
        Lattice::from_covers(
            &["{}", "{x}", "{y}", "{x,y}"],
            &[
                ("{}", "{x}"),
                ("{}", "{y}"),
                ("{x}", "{x,y}"),
                ("{y}", "{x,y}"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn downsets_of_boolean_square_is_d2() {
        let d = downsets(&Poset::boolean(2)).unwrap();
        assert_eq!(d.lattice.n(), 6);
        assert!(d.lattice.is_distributive());
    }

    #[test]
    fn downset_cap() {
        let antichain = Poset::from_covers(&["x", "y", "z"], &[]).unwrap();
        assert!(matches!(
            downsets_capped(&antichain, 4),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn birkhoff_iso_on_small_lattices() {
        for lat in [chain3(), b2(), d2()] {
            let iso = birkhoff_iso(&lat).unwrap();
            assert_eq!(iso.downset_lattice.lattice.n(), lat.n());
        }
    }

    #[test]
    fn birkhoff_witness_on_b2() {
        let lat = b2();
        let iso = birkhoff_iso(&lat).unwrap();
        // a maps to {a}, 1 maps to {a,b}, 0 maps to {}.
        assert_eq!(iso.downset_of(0).count(), 0);
        assert_eq!(iso.downset_of(1).count(), 1);
        assert_eq!(iso.downset_of(3).count(), 2);
    }

    #[test]
    fn cover_digraph_directions() {
        let g = cover_digraph(&Poset::boolean(2));
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        // Edges point from the covering element down to the covered one:
        // the top has out-degree 2, the bottom in-degree 2.
        assert_eq!(g.out_degree(3), 2);
        assert_eq!(g.in_degree(0), 2);
    }

    #[test]
    fn digraph_iso_basics() {
        let mut g = Digraph::new(vec!["x".into(), "y".into()]);
        g.add_edge(0, 1);
        let mut h = Digraph::new(vec!["u".into(), "v".into()]);
        h.add_edge(0, 1);
        assert_eq!(digraph_iso(&g, &h).unwrap(), Some(vec![0, 1]));

        // A 2-cycle is not isomorphic to a single edge.
        let mut cyc = Digraph::new(vec!["u".into(), "v".into()]);
        cyc.add_edge(0, 1);
        cyc.add_edge(1, 0);
        assert_eq!(digraph_iso(&g, &cyc).unwrap(), None);
    }

    #[test]
    fn digraph_iso_empty() {
        let g = Digraph::new(vec![]);
        assert_eq!(digraph_iso(&g, &g).unwrap(), Some(vec![]));
    }

    #[test]
    fn digraph_iso_respects_size_cap() {
        let g = Digraph::new((0..21).map(|i| i.to_string()).collect());
        assert!(matches!(
            digraph_iso(&g, &g),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn boolean_poset_shape() {
        let b3 = Poset::boolean(3);
        assert_eq!(b3.n(), 8);
        assert_eq!(b3.covers().len(), 12);
        assert_eq!(b3.name(0), "{}");
    }
}
