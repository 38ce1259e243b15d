//! Finite lattices as first-class values.
//!
//! A [`Lattice`] is built once — from cover relations or from a full order
//! matrix — and is immutable afterwards. Construction computes the order
//! bitmatrix, the meet/join tables, the cover list (transitive reduction)
//! and element heights eagerly, so every later query is a table lookup and
//! every operation downstream is a pure function.

use std::collections::HashMap;

use crate::bits::Bits;
use crate::error::{BoundKind, Error, Result};
use crate::limits;

/// A finite lattice over dense element ids `0..n`.
#[derive(Clone)]
pub struct Lattice {
    names: Vec<String>,
    /// `up[i]` = reflexive up-set `{ j : i <= j }`.
    up: Vec<Bits>,
    /// `down[i]` = reflexive down-set `{ j : j <= i }`.
    down: Vec<Bits>,
    /// Row-major `n * n` meet table.
    meet: Vec<u32>,
    /// Row-major `n * n` join table.
    join: Vec<u32>,
    /// Covering pairs `(lower, upper)`, sorted.
    covers: Vec<(usize, usize)>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    /// Length of the longest chain from bottom up to each element.
    height: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.up == other.up
    }
}

impl Eq for Lattice {}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Lattice")
            .field("names", &self.names)
            .field("covers", &self.covers)
            .finish()
    }
}

fn check_distinct(names: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(name.clone()));
        }
    }
    Ok(index)
}

/// Reflexive-transitive closure of a cover adjacency, as up-set rows.
fn closure(n: usize, step_up: &[Vec<usize>]) -> Vec<Bits> {
    let mut up = vec![Bits::new(n); n];
    // DFS from each node; memoizing in topological order would be faster but
    // these lattices are desk-sized.
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
    up
}

impl Lattice {
    /// Build a lattice from element labels and covering pairs `(lower, upper)`.
    ///
    /// The order is the reflexive-transitive closure of the pairs; the
    /// reported cover list is the transitive reduction, so redundant input
    /// pairs are dropped.
    pub fn from_covers(names: &[&str], covers: &[(&str, &str)]) -> Result<Lattice> {
        let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let index = check_distinct(&owned)?;
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

    /// As [`Lattice::from_covers`], with covers given as element ids.
    pub fn from_cover_ids(names: Vec<String>, covers: &[(usize, usize)]) -> Result<Lattice> {
        check_distinct(&names)?;
        let n = names.len();
        let mut step_up = vec![Vec::new(); n];
        for &(lo, hi) in covers {
            if lo >= n || hi >= n {
                return Err(Error::UnknownLabel(format!("element id {}", lo.max(hi))));
            }
            step_up[lo].push(hi);
        }
        let up = closure(n, &step_up);
        for i in 0..n {
            for j in up[i].ones() {
                if j != i && up[j].get(i) {
                    return Err(Error::Cycle(names[i].clone()));
                }
            }
        }
        Self::from_leq(names, up)
    }

    /// Build a lattice from a full reflexive order matrix (`rows[i]` is the
    /// up-set of `i`). The relation must already be a partial order.
    pub fn from_leq(names: Vec<String>, up: Vec<Bits>) -> Result<Lattice> {
        let n = names.len();
        if n == 0 {
            return Err(Error::NoBounds);
        }
        assert_eq!(up.len(), n, "order matrix size mismatch");

        let mut down = vec![Bits::new(n); n];
        for i in 0..n {
            debug_assert!(up[i].get(i), "order must be reflexive");
            for j in up[i].ones() {
                down[j].set(i, true);
            }
        }

        // Meet and join tables. The candidate bound set of a pair determines
        // the bound: if a greatest lower bound exists, its down-set equals the
        // whole candidate set, and a single max-sweep finds it.
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                let lower = down[a].and(&down[b]);
                let m = Self::sweep(&lower, &up)
                    .filter(|&m| lower.is_subset(&down[m]))
                    .ok_or_else(|| Error::NotALattice {
                        a: names[a].clone(),
                        b: names[b].clone(),
                        which: BoundKind::Meet,
                    })?;
                let upper = up[a].and(&up[b]);
                let j = Self::sweep(&upper, &down)
                    .filter(|&j| upper.is_subset(&up[j]))
                    .ok_or_else(|| Error::NotALattice {
                        a: names[a].clone(),
                        b: names[b].clone(),
                        which: BoundKind::Join,
                    })?;
                meet[a * n + b] = m as u32;
                meet[b * n + a] = m as u32;
                join[a * n + b] = j as u32;
                join[b * n + a] = j as u32;
            }
        }

        let mut bottom = 0;
        let mut top = 0;
        for x in 1..n {
            bottom = meet[bottom * n + x] as usize;
            top = join[top * n + x] as usize;
        }

        // Transitive reduction: (x, y) is a cover iff x < y with nothing
        // strictly between.
        let mut covers = Vec::new();
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
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
                    upper_covers[x].push(y);
                    lower_covers[y].push(x);
                }
            }
        }
        covers.sort_unstable();
        for list in upper_covers.iter_mut().chain(lower_covers.iter_mut()) {
            list.sort_unstable();
        }

        // Heights along a linear extension (ascending down-set size).
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| down[x].count());
        let mut height = vec![0usize; n];
        for &x in &order {
            height[x] = lower_covers[x]
                .iter()
                .map(|&y| height[y] + 1)
                .max()
                .unwrap_or(0);
        }

        Ok(Lattice {
            names,
            up,
            down,
            meet,
            join,
            covers,
            upper_covers,
            lower_covers,
            height,
            bottom,
            top,
        })
    }

    /// Sweep for the dominant element of a candidate set: `beyond[b]` holds
    /// the elements that supersede `b`. If the set has a greatest (resp.
    /// least) element the sweep lands on it; the caller re-checks dominance.
    fn sweep(candidates: &Bits, beyond: &[Bits]) -> Option<usize> {
        let mut best: Option<usize> = None;
        for x in candidates.ones() {
            match best {
                None => best = Some(x),
                Some(b) => {
                    if beyond[b].get(x) {
                        best = Some(x);
                    }
                }
            }
        }
        best
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

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].get(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n() + b] as usize
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n() + b] as usize
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Covering pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn is_cover(&self, lower: usize, upper: usize) -> bool {
        self.upper_covers[lower].binary_search(&upper).is_ok()
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    pub fn height(&self, x: usize) -> usize {
        self.height[x]
    }

    /// Reflexive up-set of `x` as a bit row.
    pub fn up_set(&self, x: usize) -> &Bits {
        &self.up[x]
    }

    /// Reflexive down-set of `x` as a bit row.
    pub fn down_set(&self, x: usize) -> &Bits {
        &self.down[x]
    }

    /// Elements strictly between `lower` and `upper`.
    pub fn strictly_between(&self, lower: usize, upper: usize) -> Bits {
        let mut b = self.up[lower].and(&self.down[upper]);
        b.set(lower, false);
        b.set(upper, false);
        b
    }

    /// Modular law: for all x <= z, `x v (y ^ z) = (x v y) ^ z`.
    pub fn is_modular(&self) -> bool {
        let n = self.n();
        for x in 0..n {
            for z in self.up[x].ones() {
                for y in 0..n {
                    if self.join(x, self.meet(y, z)) != self.meet(self.join(x, y), z) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Distributive law: for all triples, `x ^ (y v z) = (x ^ y) v (x ^ z)`.
    pub fn is_distributive(&self) -> bool {
        let n = self.n();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All saturated chains from bottom to top, in lexicographic order by
    /// element id. Errors with [`Error::ChainExplosion`] past the cap.
    pub fn maximal_chains(&self) -> Result<Vec<Vec<usize>>> {
        self.maximal_chains_capped(limits::max_enumeration())
    }

    pub fn maximal_chains_capped(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let mut chains = Vec::new();
        let mut current = vec![self.bottom];
        self.chain_dfs(&mut current, &mut chains, cap)?;
        Ok(chains)
    }

    fn chain_dfs(
        &self,
        current: &mut Vec<usize>,
        chains: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        let x = *current.last().expect("chain starts at bottom");
        if x == self.top {
            if chains.len() == cap {
                return Err(Error::ChainExplosion { cap });
            }
            chains.push(current.clone());
            return Ok(());
        }
        for &y in &self.upper_covers[x] {
            current.push(y);
            self.chain_dfs(current, chains, cap)?;
            current.pop();
        }
        Ok(())
    }

    /// Names of a chain of element ids, for reports.
    pub fn chain_names(&self, chain: &[usize]) -> Vec<String> {
        chain.iter().map(|&x| self.names[x].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn chain3() -> Lattice {
        Lattice::from_covers(&["0", "a", "1"], &[("0", "a"), ("a", "1")]).unwrap()
    }

    pub(crate) fn b2() -> Lattice {
        Lattice::from_covers(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap()
    }

    pub(crate) fn m3() -> Lattice {
        Lattice::from_covers(
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
        .unwrap()
    }

    pub(crate) fn n5() -> Lattice {
        Lattice::from_covers(
            &["0", "x", "z", "y", "1"],
            &[("0", "x"), ("x", "z"), ("z", "1"), ("0", "y"), ("y", "1")],
        )
        .unwrap()
    }

    #[test]
    fn chain_is_min_max() {
        let l = chain3();
        assert_eq!(l.n(), 3);
        let (z, a, one) = (0, 1, 2);
        assert_eq!(l.meet(a, one), a);
        assert_eq!(l.join(a, one), one);
        assert_eq!(l.meet(z, one), z);
        assert_eq!(l.bottom(), z);
        assert_eq!(l.top(), one);
        assert_eq!(l.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn b2_meet_join() {
        let l = b2();
        let (a, b) = (1, 2);
        assert_eq!(l.meet(a, b), 0);
        assert_eq!(l.join(a, b), 3);
        assert!(!l.leq(a, b) && !l.leq(b, a));
    }

    #[test]
    fn two_tops_is_not_a_lattice() {
        // Two maximal elements have no least upper bound.
        let err = Lattice::from_covers(
            &["0", "a", "b", "t1", "t2"],
            &[("0", "a"), ("0", "b"), ("a", "t1"), ("b", "t1"), ("a", "t2"), ("b", "t2")],
        )
        .unwrap_err();
        match err {
            Error::NotALattice { which, .. } => assert_eq!(which, BoundKind::Join),
            other => panic!("expected NotALattice, got {other:?}"),
        }
    }

    #[test]
    fn cycle_detected() {
        let err = Lattice::from_covers(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::Cycle(_)));
    }

    #[test]
    fn empty_has_no_bounds() {
        let err = Lattice::from_covers(&[], &[]).unwrap_err();
        assert!(matches!(err, Error::NoBounds));
    }

    #[test]
    fn duplicate_label_rejected() {
        let err = Lattice::from_covers(&["a", "a"], &[]).unwrap_err();
        assert!(matches!(err, Error::DuplicateLabel(_)));
    }

    #[test]
    fn singleton_lattice() {
        let l = Lattice::from_covers(&["x"], &[]).unwrap();
        assert_eq!(l.bottom(), l.top());
        assert!(l.covers().is_empty());
        assert_eq!(l.maximal_chains().unwrap(), vec![vec![0]]);
    }

    #[test]
    fn redundant_pair_reduced() {
        // The input contains the implied pair (0, 1); the reported covers are
        // the transitive reduction.
        let l = Lattice::from_covers(&["0", "a", "1"], &[("0", "a"), ("a", "1"), ("0", "1")])
            .unwrap();
        assert_eq!(l.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn modularity() {
        assert!(chain3().is_modular());
        assert!(m3().is_modular());
        assert!(!n5().is_modular());
    }

    #[test]
    fn distributivity() {
        assert!(chain3().is_distributive());
        assert!(b2().is_distributive());
        assert!(!m3().is_distributive());
        assert!(!n5().is_distributive());
    }

    #[test]
    fn maximal_chain_enumeration() {
        assert_eq!(chain3().maximal_chains().unwrap(), vec![vec![0, 1, 2]]);
        let b2_chains = b2().maximal_chains().unwrap();
        assert_eq!(b2_chains, vec![vec![0, 1, 3], vec![0, 2, 3]]);
        let m3_chains = m3().maximal_chains().unwrap();
        assert_eq!(m3_chains.len(), 3);
        assert!(m3_chains.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn chain_cap_errors() {
        let err = b2().maximal_chains_capped(1).unwrap_err();
        assert!(matches!(err, Error::ChainExplosion { cap: 1 }));
    }

    #[test]
    fn bound_laws() {
        for l in [chain3(), b2(), m3(), n5()] {
            for a in 0..l.n() {
                for b in 0..l.n() {
                    let m = l.meet(a, b);
                    assert!(l.leq(m, a) && l.leq(m, b));
                    for c in 0..l.n() {
                        if l.leq(c, a) && l.leq(c, b) {
                            assert!(l.leq(c, m));
                        }
                    }
                    let j = l.join(a, b);
                    assert!(l.leq(a, j) && l.leq(b, j));
                    for c in 0..l.n() {
                        if l.leq(a, c) && l.leq(b, c) {
                            assert!(l.leq(j, c));
                        }
                    }
                    // The three equivalent statements of b <= a.
                    assert_eq!(l.leq(b, a), l.meet(a, b) == b);
                    assert_eq!(l.leq(b, a), l.join(a, b) == a);
                }
            }
        }
    }

    #[test]
    fn heights() {
        let l = b2();
        assert_eq!(l.height(l.bottom()), 0);
        assert_eq!(l.height(l.top()), 2);
    }
}
