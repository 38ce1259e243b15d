//! Exhaustive generators for small structures.
//!
//! The theorem sweeps in the test suites run over *every* poset, quiver and
//! thin representation up to the stated sizes. Posets are generated up to
//! isomorphism by extending with a new maximal element and deduplicating on
//! a canonical form (the minimum matrix encoding over all relabelings);
//! quivers are generated as labeled structures.

use crate::bits::Bits;
use crate::birkhoff::Poset;
use crate::quiver::{Arrow, Quiver, ThinRep};

/// All posets with exactly `n` elements (`n <= 8`), up to isomorphism, in a
/// deterministic order.
pub fn posets_up_to_iso(n: usize) -> Vec<Poset> {
    assert!(n <= 8, "matrix encoding uses one u64");
    let mut level: Vec<Vec<u64>> = vec![vec![]];
    for k in 0..n {
        let mut next: Vec<Vec<u64>> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for rows in &level {
            for d in downset_masks(rows, k) {
                let mut extended = rows.clone();
                for (i, row) in extended.iter_mut().enumerate() {
                    if d >> i & 1 == 1 {
                        *row |= 1 << k;
                    }
                }
                extended.push(1 << k);
                let key = canonical_key(&extended, k + 1);
                if seen.insert(key) {
                    next.push(extended);
                }
            }
        }
        next.sort_by_key(|rows| canonical_key(rows, k + 1));
        level = next;
    }
    level
        .into_iter()
        .map(|rows| {
            let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            let up = rows
                .iter()
                .map(|&row| {
                    let mut b = Bits::new(n);
                    for j in 0..n {
                        if row >> j & 1 == 1 {
                            b.set(j, true);
                        }
                    }
                    b
                })
                .collect();
            Poset::from_leq(names, up)
        })
        .collect()
}

/// All posets with at most `n` elements, up to isomorphism.
pub fn all_posets_up_to(n: usize) -> Vec<Poset> {
    (0..=n).flat_map(posets_up_to_iso).collect()
}

/// Down-set masks of a poset given by its up rows.
fn downset_masks(rows: &[u64], k: usize) -> Vec<u64> {
    // down[i] = elements below i.
    let mut down = vec![0u64; k];
    for (i, &row) in rows.iter().enumerate() {
        for j in 0..k {
            if row >> j & 1 == 1 {
                down[j] |= 1 << i;
            }
        }
    }
    (0..(1u64 << k))
        .filter(|&mask| (0..k).all(|i| mask >> i & 1 == 0 || down[i] & !mask == 0))
        .collect()
}

/// Minimum matrix encoding over all relabelings.
fn canonical_key(rows: &[u64], k: usize) -> u64 {
    let mut best = u64::MAX;
    for perm in permutations(k) {
        let mut code = 0u64;
        for a in 0..k {
            for b in 0..k {
                if rows[perm[a]] >> perm[b] & 1 == 1 {
                    code |= 1 << (a * k + b);
                }
            }
        }
        best = best.min(code);
    }
    best
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..k).collect();
    fn heap(items: &mut Vec<usize>, size: usize, out: &mut Vec<Vec<usize>>) {
        if size <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..size {
            heap(items, size - 1, out);
            if size % 2 == 0 {
                items.swap(i, size - 1);
            } else {
                items.swap(0, size - 1);
            }
        }
    }
    heap(&mut items, k, &mut out);
    out
}

/// All labeled quivers with `1..=max_vertices` vertices and at most
/// `max_arrows` arrows (multisets of ordered vertex pairs, no self-loops)
/// whose arrow set has no directed cycle.
pub fn acyclic_quivers(max_vertices: usize, max_arrows: usize) -> Vec<Quiver> {
    let mut out = Vec::new();
    for v in 1..=max_vertices {
        let vertex_names: Vec<String> = (1..=v).map(|i| i.to_string()).collect();
        let pairs: Vec<(usize, usize)> = (0..v)
            .flat_map(|s| (0..v).filter(move |&t| t != s).map(move |t| (s, t)))
            .collect();
        let mut chosen: Vec<(usize, usize)> = Vec::new();
        multisets(&pairs, 0, max_arrows, &mut chosen, &mut |arrows| {
            let q = Quiver::new(
                vertex_names.clone(),
                arrows
                    .iter()
                    .enumerate()
                    .map(|(i, &(s, t))| Arrow {
                        name: format!("a{}", i + 1),
                        source: s,
                        target: t,
                    })
                    .collect(),
            );
            if q.is_directed_acyclic() {
                out.push(q);
            }
        });
    }
    out
}

fn multisets(
    pairs: &[(usize, usize)],
    from: usize,
    room: usize,
    chosen: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    emit(chosen);
    if room == 0 {
        return;
    }
    for i in from..pairs.len() {
        chosen.push(pairs[i]);
        multisets(pairs, i, room - 1, chosen, emit);
        chosen.pop();
    }
}

/// Every thin representation of a quiver: all supports, and all zero/nonzero
/// assignments on the arrows inside the support.
pub fn thin_reps(quiver: &Quiver) -> Vec<ThinRep> {
    let v = quiver.n_vertices();
    let mut out = Vec::new();
    for support_mask in 0..(1usize << v) {
        let mut support = Bits::new(v);
        for i in 0..v {
            if support_mask >> i & 1 == 1 {
                support.set(i, true);
            }
        }
        let inside: Vec<usize> = quiver
            .arrows()
            .iter()
            .enumerate()
            .filter(|(_, a)| support.get(a.source) && support.get(a.target))
            .map(|(i, _)| i)
            .collect();
        for flags in 0..(1usize << inside.len()) {
            let mut nonzero = vec![false; quiver.arrows().len()];
            for (bit, &arrow) in inside.iter().enumerate() {
                nonzero[arrow] = flags >> bit & 1 == 1;
            }
            let (rep, warnings) = ThinRep::new(quiver, support.clone(), nonzero);
            debug_assert!(warnings.is_empty());
            out.push(rep);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_counts_match_the_known_sequence() {
        // Posets up to isomorphism on 0..=6 elements.
        let expected = [1usize, 1, 2, 5, 16, 63, 318];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(posets_up_to_iso(n).len(), want, "n = {n}");
        }
    }

    #[test]
    fn generated_posets_are_pairwise_non_isomorphic() {
        use crate::birkhoff::poset_iso;
        let posets = posets_up_to_iso(4);
        for (i, p) in posets.iter().enumerate() {
            for q in posets.iter().skip(i + 1) {
                assert!(poset_iso(p, q).unwrap().is_none());
            }
        }
    }

    #[test]
    fn quiver_enumeration_is_acyclic_and_small() {
        let quivers = acyclic_quivers(2, 2);
        assert!(quivers.iter().all(|q| q.is_directed_acyclic()));
        // 1 vertex: empty arrow multiset only. 2 vertices: multisets of
        // {(0,1),(1,0)} of size <= 2 minus the cyclic ones.
        assert!(!quivers.is_empty());
        for q in &quivers {
            assert!(q.arrows().len() <= 2);
        }
    }

    #[test]
    fn thin_rep_enumeration_counts() {
        let q = Quiver::parse("vertices 1 2\narrow a 1 2\n").unwrap();
        let reps = thin_reps(&q);
        // Supports {}, {1}, {2} contribute one rep each; {1,2} contributes
        // two (arrow zero or nonzero).
        assert_eq!(reps.len(), 5);
    }
}
