//! Cover intervals, perspectivity, and simple lattice factors.
//!
//! Two cover intervals are perspective when one transposes onto the other:
//! `[U,V] ↘ [X,Y]` iff `U v Y = X` and `U ^ Y = V`. The equivalence closure
//! of perspectivity partitions the cover intervals of a modular lattice into
//! *factor classes* — the lattice analogue of composition factors. A lattice
//! is *multiplicity free* when no maximal chain meets the same class twice.

use std::collections::BTreeSet;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::limits;
use crate::union_find::UnionFind;

/// An interval `[upper, lower]` where `upper` covers `lower`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoverInterval {
    pub lower: usize,
    pub upper: usize,
}

impl CoverInterval {
    /// Validated constructor: `upper` must cover `lower` in `lat`.
    pub fn new(lat: &Lattice, lower: usize, upper: usize) -> Result<Self> {
        if !lat.is_cover(lower, upper) {
            return Err(Error::NotACover {
                lower: lat.name(lower).to_string(),
                upper: lat.name(upper).to_string(),
            });
        }
        Ok(CoverInterval { lower, upper })
    }
}

/// `[U,V] ↘ [X,Y]`: the upper interval transposes down onto the lower one.
pub fn down_arrow(lat: &Lattice, from: CoverInterval, to: CoverInterval) -> Result<bool> {
    for iv in [from, to] {
        if !lat.is_cover(iv.lower, iv.upper) {
            return Err(Error::NotACover {
                lower: lat.name(iv.lower).to_string(),
                upper: lat.name(iv.upper).to_string(),
            });
        }
    }
    Ok(down_arrow_unchecked(lat, from, to))
}

fn down_arrow_unchecked(lat: &Lattice, from: CoverInterval, to: CoverInterval) -> bool {
    lat.join(from.upper, to.lower) == to.upper && lat.meet(from.upper, to.lower) == from.lower
}

/// The partition of cover intervals into factor classes.
///
/// Class ids are canonical: classes are numbered by their least member
/// interval, ordered by `(lower, upper)`.
#[derive(Debug, Clone)]
pub struct FactorMap {
    intervals: Vec<CoverInterval>,
    class_ids: Vec<usize>,
    classes: Vec<Vec<CoverInterval>>,
}

impl FactorMap {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// All cover intervals, sorted by `(lower, upper)`.
    pub fn intervals(&self) -> &[CoverInterval] {
        &self.intervals
    }

    /// Class of a cover interval, or None if the pair is not a cover.
    pub fn class_of(&self, iv: CoverInterval) -> Option<usize> {
        self.intervals
            .binary_search(&iv)
            .ok()
            .map(|i| self.class_ids[i])
    }

    /// Members of a class, sorted.
    pub fn class_members(&self, class: usize) -> &[CoverInterval] {
        &self.classes[class]
    }
}

/// Factor classes of a modular lattice: connected components of the
/// perspectivity graph on cover intervals.
pub fn factor_classes(lat: &Lattice) -> Result<FactorMap> {
    if !lat.is_modular() {
        return Err(Error::NotModular);
    }
    let intervals: Vec<CoverInterval> = lat
        .covers()
        .iter()
        .map(|&(lower, upper)| CoverInterval { lower, upper })
        .collect();
    let m = intervals.len();
    let mut uf = UnionFind::new(m);
    for i in 0..m {
        for j in 0..m {
            if i != j && down_arrow_unchecked(lat, intervals[i], intervals[j]) {
                uf.union(i, j);
            }
        }
    }
    let mut class_ids = vec![usize::MAX; m];
    let mut root_to_class: Vec<(usize, usize)> = Vec::new();
    let mut classes: Vec<Vec<CoverInterval>> = Vec::new();
    for i in 0..m {
        let root = uf.find(i);
        let class = match root_to_class.iter().find(|&&(r, _)| r == root) {
            Some(&(_, c)) => c,
            None => {
                let c = classes.len();
                root_to_class.push((root, c));
                classes.push(Vec::new());
                c
            }
        };
        class_ids[i] = class;
        classes[class].push(intervals[i]);
    }
    Ok(FactorMap {
        intervals,
        class_ids,
        classes,
    })
}

/// True iff along every maximal chain the consecutive cover intervals fall in
/// pairwise distinct classes.
pub fn is_multiplicity_free(lat: &Lattice) -> Result<bool> {
    is_multiplicity_free_capped(lat, limits::max_enumeration())
}

pub fn is_multiplicity_free_capped(lat: &Lattice, cap: usize) -> Result<bool> {
    let fm = factor_classes(lat)?;
    is_multiplicity_free_with(lat, &fm, cap)
}

/// As [`is_multiplicity_free`], reusing an already computed factor map.
pub fn is_multiplicity_free_with(lat: &Lattice, fm: &FactorMap, cap: usize) -> Result<bool> {
    // Per-step class lookup table, parallel to upper_covers adjacency.
    let step_class: Vec<Vec<usize>> = (0..lat.n())
        .map(|x| {
            lat.upper_covers(x)
                .iter()
                .map(|&u| {
                    fm.class_of(CoverInterval { lower: x, upper: u })
                        .expect("adjacency lists mirror the cover list")
                })
                .collect()
        })
        .collect();
    let mut seen = Bits::new(fm.class_count());
    let mut chains = 0usize;
    mf_dfs(lat, &step_class, lat.bottom(), &mut seen, &mut chains, cap)
}

fn mf_dfs(
    lat: &Lattice,
    step_class: &[Vec<usize>],
    x: usize,
    seen: &mut Bits,
    chains: &mut usize,
    cap: usize,
) -> Result<bool> {
    if x == lat.top() {
        *chains += 1;
        if *chains > cap {
            return Err(Error::ChainExplosion { cap });
        }
        return Ok(true);
    }
    for (k, &u) in lat.upper_covers(x).iter().enumerate() {
        let class = step_class[x][k];
        if seen.get(class) {
            // A repeated class on a chain prefix extends to a full maximal
            // chain witnessing the failure.
            return Ok(false);
        }
        seen.set(class, true);
        let ok = mf_dfs(lat, step_class, u, seen, chains, cap)?;
        seen.set(class, false);
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The set of factor classes met along one maximal chain of the interval
/// `[x, y]` (`y <= x`). In a distributive multiplicity-free lattice this set
/// is independent of the chain chosen.
pub fn interval_factors(
    lat: &Lattice,
    fm: &FactorMap,
    x_upper: usize,
    y_lower: usize,
) -> Result<BTreeSet<usize>> {
    if !lat.leq(y_lower, x_upper) {
        return Err(Error::NotComparable {
            lower: lat.name(y_lower).to_string(),
            upper: lat.name(x_upper).to_string(),
        });
    }
    let mut classes = BTreeSet::new();
    let mut z = y_lower;
    while z != x_upper {
        let next = lat
            .upper_covers(z)
            .iter()
            .copied()
            .find(|&u| lat.leq(u, x_upper))
            .expect("a cover step toward the interval top always exists");
        classes.insert(
            fm.class_of(CoverInterval { lower: z, upper: next })
                .expect("interval steps are covers"),
        );
        z = next;
    }
    Ok(classes)
}
