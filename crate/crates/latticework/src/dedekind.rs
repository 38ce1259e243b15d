//! Dedekind lattices: monotone Boolean functions of `n` variables.
//!
//! A monotone function is stored as the `2^n`-bit mask of its true rows — an
//! upward-closed set of subsets of `{1..n}` — and is determined by its
//! antichain of minimal true sets. With `n <= 6` every mask fits in one
//! 64-bit word, so the counting kernel is word-parallel subset tests.
//!
//! Functions are ordered by pointwise implication (mask inclusion): the
//! constant-false function is the bottom and conjunctions sit low. Under
//! this orientation the join irreducibles of `D_n` are the `2^n` conjunction
//! functions, which form a boolean poset with `n` atoms, matching the
//! down-set description of `D_n`.

use rayon::prelude::*;

use crate::bits::Bits;
use crate::birkhoff::{self, Poset};
use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// Largest `n` for which the elements are enumerated.
pub const MAX_ENUMERATE_N: u32 = 5;
/// Largest `n` for which `count` works (via pairs over `n - 1`).
pub const MAX_COUNT_N: u32 = 6;
/// Largest `n` for which the full lattice is assembled.
pub const MAX_LATTICE_N: u32 = 4;

/// A monotone Boolean function of `n <= 6` variables, as an upset mask:
/// bit `S` is set iff the function is true on the subset `S` of `{1..n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AntichainFn {
    n: u32,
    upset: u64,
}

impl AntichainFn {
    pub fn constant(n: u32, value: bool) -> AntichainFn {
        assert!(n <= 6);
        let full = full_mask(n);
        AntichainFn {
            n,
            upset: if value { full } else { 0 },
        }
    }

    /// The i-th projection (variable) function, `1 <= i <= n`.
    pub fn variable(n: u32, i: u32) -> AntichainFn {
        assert!(1 <= i && i <= n);
        let mut upset = 0u64;
        for s in 0..(1u64 << n) {
            if s >> (i - 1) & 1 == 1 {
                upset |= 1 << s;
            }
        }
        AntichainFn { n, upset }
    }

    /// Validating constructor from a raw upset mask.
    pub fn from_upset(n: u32, upset: u64) -> Option<AntichainFn> {
        assert!(n <= 6);
        if upset & !full_mask(n) != 0 {
            return None;
        }
        let f = AntichainFn { n, upset };
        f.is_monotone().then_some(f)
    }

    fn is_monotone(&self) -> bool {
        for s in 0..(1u64 << self.n) {
            if self.upset >> s & 1 == 1 {
                for i in 0..self.n {
                    if s >> i & 1 == 0 && self.upset >> (s | 1 << i) & 1 == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn upset_mask(&self) -> u64 {
        self.upset
    }

    /// Value on a subset of `{1..n}` given as a bit mask over variables.
    pub fn eval(&self, subset: u64) -> bool {
        debug_assert!(subset < (1 << self.n));
        self.upset >> subset & 1 == 1
    }

    pub fn meet(&self, other: &AntichainFn) -> AntichainFn {
        assert_eq!(self.n, other.n);
        AntichainFn {
            n: self.n,
            upset: self.upset & other.upset,
        }
    }

    pub fn join(&self, other: &AntichainFn) -> AntichainFn {
        assert_eq!(self.n, other.n);
        AntichainFn {
            n: self.n,
            upset: self.upset | other.upset,
        }
    }

    /// Pointwise implication: self(S) implies other(S) for every S.
    pub fn leq(&self, other: &AntichainFn) -> bool {
        assert_eq!(self.n, other.n);
        self.upset & !other.upset == 0
    }

    /// Minimal true sets, ascending by mask.
    pub fn minimal_sets(&self) -> Vec<u64> {
        (0..(1u64 << self.n))
            .filter(|&s| {
                self.eval(s) && (0..self.n).all(|i| s >> i & 1 == 0 || !self.eval(s & !(1 << i)))
            })
            .collect()
    }

    /// Antichain rendering: `{1,2}|{3}` lists the minimal true sets; the
    /// constants render as `0` and `1`.
    pub fn render(&self) -> String {
        let minimal = self.minimal_sets();
        if minimal.is_empty() {
            return "0".to_string();
        }
        if minimal == [0] {
            return "1".to_string();
        }
        minimal
            .iter()
            .map(|&s| {
                let members: Vec<String> = (0..self.n)
                    .filter(|&i| s >> i & 1 == 1)
                    .map(|i| (i + 1).to_string())
                    .collect();
                format!("{{{}}}", members.join(","))
            })
            .collect::<Vec<_>>()
            .join("|")
    }
}

fn full_mask(n: u32) -> u64 {
    if (1u64 << n) == 64 {
        u64::MAX
    } else {
        (1u64 << (1u64 << n)) - 1
    }
}

/// All monotone functions of `n` variables, including both constants, in
/// canonical order (popcount of the upset, then mask value).
///
/// Enumeration walks antichains: subsets are considered in ascending mask
/// order and added when incomparable with everything already chosen; the
/// accumulated upset is carried along.
pub fn enumerate(n: u32) -> Result<Vec<AntichainFn>> {
    if n > MAX_ENUMERATE_N {
        return Err(Error::NTooLarge {
            n,
            max: MAX_ENUMERATE_N,
        });
    }
    let rows = 1u64 << n;
    // up_of[s] = mask of supersets of s.
    let up_of: Vec<u64> = (0..rows)
        .map(|s| {
            let mut m = 0u64;
            for t in 0..rows {
                if s & !t == 0 {
                    m |= 1 << t;
                }
            }
            m
        })
        .collect();

    let mut out = Vec::new();
    let mut chosen: Vec<u64> = Vec::new();
    fn walk(
        next: u64,
        rows: u64,
        up_of: &[u64],
        chosen: &mut Vec<u64>,
        upset: u64,
        n: u32,
        out: &mut Vec<AntichainFn>,
    ) {
        out.push(AntichainFn { n, upset });
        for s in next..rows {
            let incomparable = chosen.iter().all(|&t| t & !s != 0 && s & !t != 0);
            if incomparable {
                chosen.push(s);
                walk(s + 1, rows, up_of, chosen, upset | up_of[s as usize], n, out);
                chosen.pop();
            }
        }
    }
    walk(0, rows, &up_of, &mut chosen, 0, n, &mut out);
    out.sort_by_key(|f| (f.upset.count_ones(), f.upset));
    Ok(out)
}

/// The n-th Dedekind number `|D_n|` for `n <= 6`.
///
/// Counted by the pairing recurrence: a monotone function of `n` variables
/// is an ordered pair `(f, g)` of monotone functions of `n - 1` variables
/// with `f <= g` (its restrictions at the last variable = 0, 1). The pair
/// space is partitioned across threads and aggregated by summation.
pub fn count(n: u32) -> Result<u64> {
    let functions = count_basis(n)?;
    match functions {
        None => Ok(2),
        Some(fs) => Ok(fs
            .par_iter()
            .map(|f| fs.iter().filter(|g| f.leq(g)).count() as u64)
            .sum()),
    }
}

/// Single-threaded variant of [`count`], for timing comparisons.
pub fn count_sequential(n: u32) -> Result<u64> {
    let functions = count_basis(n)?;
    match functions {
        None => Ok(2),
        Some(fs) => Ok(fs
            .iter()
            .map(|f| fs.iter().filter(|g| f.leq(g)).count() as u64)
            .sum()),
    }
}

fn count_basis(n: u32) -> Result<Option<Vec<AntichainFn>>> {
    if n > MAX_COUNT_N {
        return Err(Error::NTooLarge { n, max: MAX_COUNT_N });
    }
    if n == 0 {
        return Ok(None);
    }
    Ok(Some(enumerate(n - 1)?))
}

/// The Dedekind lattice `D_n` as a [`Lattice`], elements in canonical order
/// and labeled by their antichain rendering.
pub fn dedekind_lattice(n: u32) -> Result<Lattice> {
    if n > MAX_LATTICE_N {
        return Err(Error::NTooLarge {
            n,
            max: MAX_LATTICE_N,
        });
    }
    let fs = enumerate(n)?;
    let labels: Vec<String> = fs.iter().map(|f| f.render()).collect();
    let size = fs.len();
    let mut up = vec![Bits::new(size); size];
    for i in 0..size {
        for j in 0..size {
            if fs[i].leq(&fs[j]) {
                up[i].set(j, true);
            }
        }
    }
    Lattice::from_leq(labels, up)
}

/// Verdict of checking `D_n ~ J(boolean poset with n atoms)`.
#[derive(Debug, Clone)]
pub struct BirkhoffVerdict {
    pub n: u32,
    pub lattice_size: usize,
    pub irreducible_count: usize,
    /// Witness poset isomorphism from the join irreducibles of `D_n` onto
    /// the boolean poset, or None (a counterexample).
    pub poset_witness: Option<Vec<usize>>,
    /// Whether the canonical down-set map is an isomorphism.
    pub downset_iso_ok: bool,
}

impl BirkhoffVerdict {
    pub fn passed(&self) -> bool {
        self.poset_witness.is_some() && self.downset_iso_ok
    }
}

/// Check that the join irreducibles of `D_n` form a boolean poset with `n`
/// atoms and that the down-set map reassembles `D_n`.
pub fn verify_birkhoff(n: u32) -> Result<BirkhoffVerdict> {
    let lat = dedekind_lattice(n)?;
    let ji = birkhoff::join_irreducibles(&lat)?;
    let boolean = Poset::boolean(n);
    let poset_witness = birkhoff::poset_iso(&ji.poset, &boolean)?;
    let downset_iso_ok = birkhoff::birkhoff_iso(&lat).is_ok();
    Ok(BirkhoffVerdict {
        n,
        lattice_size: lat.n(),
        irreducible_count: ji.members.len(),
        poset_witness,
        downset_iso_ok,
    })
}
