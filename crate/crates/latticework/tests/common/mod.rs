//! Shared test oracles and random-instance generators.
//!
//! Everything here recomputes its answers from the order relation alone (or
//! by exhaustive pattern search), independent of the production meet/join
//! tables and scans it is used to check.

#![allow(dead_code)]

use latticework::lattice::Lattice;

/// Greatest lower bound recomputed from `leq` only.
pub fn oracle_meet(lat: &Lattice, a: usize, b: usize) -> Option<usize> {
    let lower: Vec<usize> = (0..lat.n())
        .filter(|&x| lat.leq(x, a) && lat.leq(x, b))
        .collect();
    let maximal: Vec<usize> = lower
        .iter()
        .copied()
        .filter(|&x| lower.iter().all(|&y| x == y || !lat.lt(x, y)))
        .collect();
    match maximal[..] {
        [m] => Some(m),
        _ => None,
    }
}

/// Least upper bound recomputed from `leq` only.
pub fn oracle_join(lat: &Lattice, a: usize, b: usize) -> Option<usize> {
    let upper: Vec<usize> = (0..lat.n())
        .filter(|&x| lat.leq(a, x) && lat.leq(b, x))
        .collect();
    let minimal: Vec<usize> = upper
        .iter()
        .copied()
        .filter(|&x| upper.iter().all(|&y| x == y || !lat.lt(y, x)))
        .collect();
    match minimal[..] {
        [j] => Some(j),
        _ => None,
    }
}

/// Triple-law distributivity with meets and joins recomputed from the order.
pub fn oracle_distributive(lat: &Lattice) -> bool {
    let n = lat.n();
    let meet = |a: usize, b: usize| oracle_meet(lat, a, b).expect("lattice");
    let join = |a: usize, b: usize| oracle_join(lat, a, b).expect("lattice");
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if meet(x, join(y, z)) != join(meet(x, y), meet(x, z)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Modular law with meets and joins recomputed from the order.
pub fn oracle_modular(lat: &Lattice) -> bool {
    let n = lat.n();
    let meet = |a: usize, b: usize| oracle_meet(lat, a, b).expect("lattice");
    let join = |a: usize, b: usize| oracle_join(lat, a, b).expect("lattice");
    for x in 0..n {
        for z in 0..n {
            if !lat.leq(x, z) {
                continue;
            }
            for y in 0..n {
                if join(x, meet(y, z)) != meet(join(x, y), z) {
                    return false;
                }
            }
        }
    }
    true
}

type Table5 = [[usize; 5]; 5];

/// Meet/join tables of the two forbidden five-element sublattices, indexed
/// 0..5. Diamond: 0 bottom, 1..=3 the middles, 4 top. Pentagon: 0 bottom,
/// 1 < 2 one side, 3 the other side, 4 top.
fn forbidden_tables() -> [(Table5, Table5); 2] {
    fn tables(leq: &[(usize, usize)]) -> (Table5, Table5) {
        let le = |a: usize, b: usize| a == b || leq.contains(&(a, b));
        let mut meet = [[0usize; 5]; 5];
        let mut join = [[0usize; 5]; 5];
        for a in 0..5 {
            for b in 0..5 {
                let lower: Vec<usize> = (0..5).filter(|&x| le(x, a) && le(x, b)).collect();
                let m = lower
                    .iter()
                    .copied()
                    .find(|&x| lower.iter().all(|&y| le(y, x)))
                    .expect("pattern is a lattice");
                meet[a][b] = m;
                let upper: Vec<usize> = (0..5).filter(|&x| le(a, x) && le(b, x)).collect();
                let j = upper
                    .iter()
                    .copied()
                    .find(|&x| upper.iter().all(|&y| le(x, y)))
                    .expect("pattern is a lattice");
                join[a][b] = j;
            }
        }
        (meet, join)
    }
    let diamond = tables(&[
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (1, 4),
        (2, 4),
        (3, 4),
    ]);
    let pentagon = tables(&[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 4), (3, 4)]);
    [diamond, pentagon]
}

/// Search for a five-element subset closed under meet and join whose induced
/// lattice matches the diamond (first flag) or the pentagon (second flag).
pub fn forbidden_sublattices(lat: &Lattice) -> (bool, bool) {
    let n = lat.n();
    let patterns = forbidden_tables();
    let mut found = [false, false];
    let mut subset = [0usize; 5];
    fn search(
        lat: &Lattice,
        start: usize,
        depth: usize,
        subset: &mut [usize; 5],
        patterns: &[(Table5, Table5); 2],
        found: &mut [bool; 2],
    ) {
        if depth == 5 {
            // Closure under the lattice operations.
            let index_of = |x: usize| subset.iter().position(|&s| s == x);
            let mut meet = [[0usize; 5]; 5];
            let mut join = [[0usize; 5]; 5];
            for a in 0..5 {
                for b in 0..5 {
                    match (
                        index_of(lat.meet(subset[a], subset[b])),
                        index_of(lat.join(subset[a], subset[b])),
                    ) {
                        (Some(m), Some(j)) => {
                            meet[a][b] = m;
                            join[a][b] = j;
                        }
                        _ => return, // not closed
                    }
                }
            }
            for (which, (pm, pj)) in patterns.iter().enumerate() {
                if found[which] {
                    continue;
                }
                // Try every bijection onto the pattern.
                let mut perm = [0usize, 1, 2, 3, 4];
                'perm: loop {
                    let matches = (0..5).all(|a| {
                        (0..5).all(|b| {
                            perm[meet[a][b]] == pm[perm[a]][perm[b]]
                                && perm[join[a][b]] == pj[perm[a]][perm[b]]
                        })
                    });
                    if matches {
                        found[which] = true;
                        break 'perm;
                    }
                    // Next permutation in lexicographic order.
                    let mut i = 4;
                    while i > 0 && perm[i - 1] >= perm[i] {
                        i -= 1;
                    }
                    if i == 0 {
                        break;
                    }
                    let mut j = 4;
                    while perm[j] <= perm[i - 1] {
                        j -= 1;
                    }
                    perm.swap(i - 1, j);
                    perm[i..].reverse();
                }
            }
            return;
        }
        for x in start..lat.n() {
            subset[depth] = x;
            search(lat, x + 1, depth + 1, subset, patterns, found);
            if found[0] && found[1] {
                return;
            }
        }
    }
    if n >= 5 {
        search(lat, 0, 0, &mut subset, &patterns, &mut found);
    }
    (found[0], found[1])
}
