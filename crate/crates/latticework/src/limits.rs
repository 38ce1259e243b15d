//! Size caps guarding the enumeration kernels.
//!
//! The caps exist to catch pathological inputs, not to be tuned in normal
//! use. `LATTICE_MAX_ELEMENTS` overrides the enumeration caps at runtime;
//! the `_capped` function variants take an explicit cap instead.

/// Default cap on enumerated objects (maximal chains, down-sets).
pub const DEFAULT_MAX_ENUMERATION: usize = 1_000_000;

/// Default cap on candidate subsets scanned by the submodule enumeration.
pub const DEFAULT_MAX_SUBSETS: usize = 1 << 20;

/// Node cap for DOT emission.
pub const MAX_DOT_NODES: usize = 500;

/// Vertex cap for the digraph-isomorphism backtracking search.
pub const MAX_ISO_VERTICES: usize = 20;

fn env_override() -> Option<usize> {
    std::env::var("LATTICE_MAX_ELEMENTS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
}

/// Enumeration cap: `LATTICE_MAX_ELEMENTS` or the default.
pub fn max_enumeration() -> usize {
    env_override().unwrap_or(DEFAULT_MAX_ENUMERATION)
}

/// Subset-candidate cap: `LATTICE_MAX_ELEMENTS` or the default.
pub fn max_subsets() -> usize {
    env_override().unwrap_or(DEFAULT_MAX_SUBSETS)
}
