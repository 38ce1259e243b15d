//! Thin quiver representations and their submodule lattices.
//!
//! A representation is *thin* when every vertex carries a space of dimension
//! 0 or 1. A subrepresentation then keeps either none or all of each vertex
//! space, and the only constraint is that a nonzero arrow out of a kept
//! vertex lands in a kept vertex — so the submodule lattice is a lattice of
//! vertex subsets, and no field arithmetic is ever needed. Scalars beyond
//! zero/nonzero cannot change the lattice.

use std::collections::HashMap;

use crate::bits::Bits;
use crate::birkhoff::Digraph;
use crate::error::{Error, Result};
use crate::factors::{self, CoverInterval};
use crate::lattice::Lattice;
use crate::limits;
use crate::union_find::UnionFind;

#[derive(Debug, Clone)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver: vertices and arrows, parallel arrows permitted.
#[derive(Debug, Clone)]
pub struct Quiver {
    vertex_names: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_names: Vec<String>, arrows: Vec<Arrow>) -> Quiver {
        Quiver {
            vertex_names,
            arrows,
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertex_names[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|n| n == name)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// No directed cycle (self-loops included).
    pub fn is_directed_acyclic(&self) -> bool {
        let n = self.n_vertices();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for a in &self.arrows {
                if a.source == v {
                    indeg[a.target] -= 1;
                    if indeg[a.target] == 0 {
                        queue.push(a.target);
                    }
                }
            }
        }
        seen == n
    }

    /// Parse the line-oriented quiver format:
    ///
    /// ```text
    /// vertices 1 2 3
    /// arrow a 1 2
    /// arrow b 2 3
    /// ```
    ///
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Quiver> {
        let mut vertex_names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut arrows: Vec<Arrow> = Vec::new();
        let mut arrow_names: HashMap<String, ()> = HashMap::new();
        for (line_no, raw) in text.lines().enumerate() {
            let line = line_no + 1;
            let mut tokens = tokenize(raw);
            let Some((keyword, col)) = tokens.next() else {
                continue;
            };
            match keyword {
                "vertices" => {
                    let mut any = false;
                    for (name, col) in tokens.by_ref() {
                        any = true;
                        if index.contains_key(name) {
                            return Err(parse_err(line, col, format!("duplicate vertex `{name}`")));
                        }
                        index.insert(name.to_string(), vertex_names.len());
                        vertex_names.push(name.to_string());
                    }
                    if !any {
                        return Err(parse_err(line, col, "`vertices` needs at least one name"));
                    }
                }
                "arrow" => {
                    let (name, ncol) = tokens
                        .next()
                        .ok_or_else(|| parse_err(line, col, "`arrow` needs name src tgt"))?;
                    let (src, scol) = tokens
                        .next()
                        .ok_or_else(|| parse_err(line, ncol, "`arrow` needs name src tgt"))?;
                    let (tgt, tcol) = tokens
                        .next()
                        .ok_or_else(|| parse_err(line, scol, "`arrow` needs name src tgt"))?;
                    if let Some((extra, ecol)) = tokens.next() {
                        return Err(parse_err(line, ecol, format!("unexpected token `{extra}`")));
                    }
                    if arrow_names.insert(name.to_string(), ()).is_some() {
                        return Err(parse_err(line, ncol, format!("duplicate arrow `{name}`")));
                    }
                    let source = *index.get(src).ok_or(Error::UnknownVertex {
                        name: src.to_string(),
                        line,
                    })?;
                    let target = *index.get(tgt).ok_or(Error::UnknownVertex {
                        name: tgt.to_string(),
                        line,
                    })?;
                    let _ = (scol, tcol);
                    arrows.push(Arrow {
                        name: name.to_string(),
                        source,
                        target,
                    });
                }
                other => {
                    return Err(parse_err(line, col, format!("unknown directive `{other}`")));
                }
            }
        }
        Ok(Quiver {
            vertex_names,
            arrows,
        })
    }

    /// Emit the same line format `parse` reads.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("vertices");
        for v in &self.vertex_names {
            out.push(' ');
            out.push_str(v);
        }
        out.push('\n');
        for a in &self.arrows {
            out.push_str(&format!(
                "arrow {} {} {}\n",
                a.name, self.vertex_names[a.source], self.vertex_names[a.target]
            ));
        }
        out
    }
}

fn tokenize(line: &str) -> impl Iterator<Item = (&str, usize)> {
    let body = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    body.split_whitespace().map(move |tok| {
        let col = tok.as_ptr() as usize - body.as_ptr() as usize + 1;
        (tok, col)
    })
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// A thin representation: a support subset of vertices (dimension one there,
/// zero elsewhere) and a zero/nonzero flag per arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThinRep {
    pub support: Bits,
    pub nonzero: Vec<bool>,
}

impl ThinRep {
    /// Normalizing constructor: a nonzero flag on an arrow with an
    /// unsupported endpoint is forced to zero, with a warning.
    pub fn new(quiver: &Quiver, support: Bits, nonzero: Vec<bool>) -> (ThinRep, Vec<String>) {
        assert_eq!(support.len(), quiver.n_vertices());
        assert_eq!(nonzero.len(), quiver.arrows().len());
        let mut repaired = nonzero;
        let mut warnings = Vec::new();
        for (i, arrow) in quiver.arrows().iter().enumerate() {
            if repaired[i] && !(support.get(arrow.source) && support.get(arrow.target)) {
                repaired[i] = false;
                warnings.push(format!(
                    "arrow `{}` forced to zero: an endpoint is outside the support",
                    arrow.name
                ));
            }
        }
        (
            ThinRep {
                support,
                nonzero: repaired,
            },
            warnings,
        )
    }

    /// Parse the line-oriented representation format:
    ///
    /// ```text
    /// support 1 2
    /// nonzero a
    /// ```
    ///
    /// Arrows not listed under `nonzero` are zero. A vertex listed twice
    /// under `support` would mean dimension two and is rejected.
    pub fn parse(text: &str, quiver: &Quiver) -> Result<(ThinRep, Vec<String>)> {
        let mut support = Bits::new(quiver.n_vertices());
        let mut nonzero = vec![false; quiver.arrows().len()];
        for (line_no, raw) in text.lines().enumerate() {
            let line = line_no + 1;
            let mut tokens = tokenize(raw);
            let Some((keyword, col)) = tokens.next() else {
                continue;
            };
            match keyword {
                "support" => {
                    for (name, _col) in tokens.by_ref() {
                        let v = quiver.vertex_index(name).ok_or(Error::UnknownVertex {
                            name: name.to_string(),
                            line,
                        })?;
                        if support.get(v) {
                            return Err(Error::DimNotThin {
                                vertex: name.to_string(),
                                dim: 2,
                            });
                        }
                        support.set(v, true);
                    }
                }
                "nonzero" => {
                    for (name, col) in tokens.by_ref() {
                        let a = quiver
                            .arrow_index(name)
                            .ok_or_else(|| parse_err(line, col, format!("unknown arrow `{name}`")))?;
                        nonzero[a] = true;
                    }
                }
                other => {
                    return Err(parse_err(line, col, format!("unknown directive `{other}`")));
                }
            }
        }
        Ok(ThinRep::new(quiver, support, nonzero))
    }

    pub fn to_text(&self, quiver: &Quiver) -> String {
        let mut out = String::from("support");
        for v in self.support.ones() {
            out.push(' ');
            out.push_str(quiver.vertex_name(v));
        }
        out.push('\n');
        let listed: Vec<&str> = self
            .nonzero
            .iter()
            .enumerate()
            .filter(|&(_, &nz)| nz)
            .map(|(i, _)| quiver.arrows()[i].name.as_str())
            .collect();
        if !listed.is_empty() {
            out.push_str("nonzero ");
            out.push_str(&listed.join(" "));
            out.push('\n');
        }
        out
    }
}

/// The submodule lattice together with the vertex subset of each element.
#[derive(Debug, Clone)]
pub struct SubmoduleLattice {
    pub lattice: Lattice,
    /// `subsets[i]` = vertex set (over the quiver) of lattice element `i`.
    pub subsets: Vec<Bits>,
}

/// Enumerate the subrepresentations of a thin representation.
///
/// Elements are the subsets `S` of the support closed under nonzero arrows
/// (`s(a) in S` implies `t(a) in S`), ordered by inclusion; meet and join
/// are intersection and union.
pub fn submodule_lattice(quiver: &Quiver, rep: &ThinRep) -> Result<SubmoduleLattice> {
    submodule_lattice_capped(quiver, rep, limits::max_subsets())
}

pub fn submodule_lattice_capped(
    quiver: &Quiver,
    rep: &ThinRep,
    cap: usize,
) -> Result<SubmoduleLattice> {
    let support: Vec<usize> = rep.support.ones().collect();
    let k = support.len();
    if k >= usize::BITS as usize || (1usize << k) > cap {
        return Err(Error::SizeLimit {
            what: "submodule candidate subsets".to_string(),
            limit: cap,
        });
    }
    let position: HashMap<usize, usize> = support
        .iter()
        .enumerate()
        .map(|(pos, &v)| (v, pos))
        .collect();
    // Closure constraints (source position, target position) per nonzero arrow.
    let constraints: Vec<(usize, usize)> = quiver
        .arrows()
        .iter()
        .enumerate()
        .filter(|&(i, _)| rep.nonzero[i])
        .map(|(_, a)| (position[&a.source], position[&a.target]))
        .collect();

    let mut closed: Vec<usize> = Vec::new();
    'mask: for mask in 0..(1usize << k) {
        for &(s, t) in &constraints {
            if mask >> s & 1 == 1 && mask >> t & 1 == 0 {
                continue 'mask;
            }
        }
        closed.push(mask);
    }
    // Canonical order: cardinality, then member-name list.
    closed.sort_by_key(|&mask| {
        let mut names: Vec<&str> = (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| quiver.vertex_name(support[i]))
            .collect();
        names.sort_unstable();
        (
            mask.count_ones(),
            names.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        )
    });

    let labels: Vec<String> = closed
        .iter()
        .map(|&mask| {
            let mut names: Vec<&str> = (0..k)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| quiver.vertex_name(support[i]))
                .collect();
            names.sort_unstable();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    let n = closed.len();
    let mut up = vec![Bits::new(n); n];
    for i in 0..n {
        for j in 0..n {
            if closed[i] & !closed[j] == 0 {
                up[i].set(j, true);
            }
        }
    }
    let subsets = closed
        .iter()
        .map(|&mask| {
            let mut b = Bits::new(quiver.n_vertices());
            for i in 0..k {
                if mask >> i & 1 == 1 {
                    b.set(support[i], true);
                }
            }
            b
        })
        .collect();
    Ok(SubmoduleLattice {
        lattice: Lattice::from_leq(labels, up)?,
        subsets,
    })
}

/// A thin representation is indecomposable iff the undirected graph on its
/// support with an edge per nonzero arrow is connected. The zero module
/// counts as decomposable.
pub fn is_indecomposable(quiver: &Quiver, rep: &ThinRep) -> bool {
    let support: Vec<usize> = rep.support.ones().collect();
    if support.is_empty() {
        return false;
    }
    let position: HashMap<usize, usize> = support
        .iter()
        .enumerate()
        .map(|(pos, &v)| (v, pos))
        .collect();
    let mut uf = UnionFind::new(support.len());
    for (i, a) in quiver.arrows().iter().enumerate() {
        if rep.nonzero[i] {
            uf.union(position[&a.source], position[&a.target]);
        }
    }
    let root = uf.find(0);
    (1..support.len()).all(|i| uf.find(i) == root)
}

/// The Ext graph of the simple modules of an acyclic path algebra, restricted
/// to the support: vertices are the supported quiver vertices, with an edge
/// `x -> y` iff the quiver has at least one arrow `x -> y` (parallel arrows
/// collapse).
pub fn induced_ext_graph(quiver: &Quiver, rep: &ThinRep) -> Result<Digraph> {
    if !quiver.is_directed_acyclic() {
        return Err(Error::QuiverNotAcyclic);
    }
    let support: Vec<usize> = rep.support.ones().collect();
    let names = support
        .iter()
        .map(|&v| quiver.vertex_name(v).to_string())
        .collect();
    let position: HashMap<usize, usize> = support
        .iter()
        .enumerate()
        .map(|(pos, &v)| (v, pos))
        .collect();
    let mut g = Digraph::new(names);
    for a in quiver.arrows() {
        if let (Some(&s), Some(&t)) = (position.get(&a.source), position.get(&a.target)) {
            g.add_edge(s, t);
        }
    }
    Ok(g)
}

/// The bijection between factor classes of the submodule lattice and the
/// supported vertices: each cover adds exactly one vertex, and all covers in
/// a class add the same one.
#[derive(Debug, Clone)]
pub struct ClassVertexMap {
    /// Quiver vertex carried by each factor class.
    pub class_to_vertex: Vec<usize>,
}

pub fn class_vertex_map(sub: &SubmoduleLattice) -> Result<ClassVertexMap> {
    let lat = &sub.lattice;
    let fm = factors::factor_classes(lat)?;
    let mut class_to_vertex = vec![usize::MAX; fm.class_count()];
    for &iv in fm.intervals() {
        let CoverInterval { lower, upper } = iv;
        let added: Vec<usize> = sub.subsets[upper]
            .ones()
            .filter(|&v| !sub.subsets[lower].get(v))
            .collect();
        let [vertex] = added[..] else {
            return Err(Error::LabelConflict(format!(
                "cover `{}` -> `{}` adds {} vertices, expected exactly one",
                lat.name(lower),
                lat.name(upper),
                added.len()
            )));
        };
        let class = fm.class_of(iv).expect("interval from the factor map");
        if class_to_vertex[class] == usize::MAX {
            class_to_vertex[class] = vertex;
        } else if class_to_vertex[class] != vertex {
            return Err(Error::LabelConflict(format!(
                "class {class} carries two vertices"
            )));
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    for &v in &class_to_vertex {
        if v == usize::MAX || !seen.insert(v) {
            return Err(Error::LabelConflict(
                "class-to-vertex map is not a bijection onto the support".into(),
            ));
        }
    }
    Ok(ClassVertexMap { class_to_vertex })
}

/// Result of comparing the submodule-lattice Ext graph with the induced Ext
/// graph of the path algebra.
#[derive(Debug, Clone)]
pub struct ExtComparison {
    pub equal: bool,
    /// Whether the underlying graph of the quiver restricted to the support
    /// is a tree (the hypothesis under which equality is asserted).
    pub support_is_tree: bool,
    /// Edges (by vertex name) present in the lattice graph only.
    pub only_in_lattice: Vec<(String, String)>,
    /// Edges (by vertex name) present in the ring graph only.
    pub only_in_ring: Vec<(String, String)>,
}

/// Compare the two Ext graphs of an indecomposable thin representation over
/// an acyclic quiver. Both sides are computed independently: the lattice side
/// from the submodule lattice, the ring side from the quiver's arrows.
pub fn compare_ext_graphs(quiver: &Quiver, rep: &ThinRep) -> Result<ExtComparison> {
    if !quiver.is_directed_acyclic() {
        return Err(Error::QuiverNotAcyclic);
    }
    if !is_indecomposable(quiver, rep) {
        return Err(Error::NotIndecomposable);
    }
    let sub = submodule_lattice(quiver, rep)?;
    let ext = crate::extgraph::ext_graph(&sub.lattice)?;
    let map = class_vertex_map(&sub)?;
    let ring = induced_ext_graph(quiver, rep)?;

    let mut lattice_edges: Vec<(usize, usize)> = ext
        .graph
        .edges()
        .map(|(x, y)| (map.class_to_vertex[x], map.class_to_vertex[y]))
        .collect();
    lattice_edges.sort_unstable();
    let mut ring_edges: Vec<(usize, usize)> = ring
        .edges()
        .map(|(s, t)| {
            let sv = rep.support.ones().nth(s).expect("support vertex");
            let tv = rep.support.ones().nth(t).expect("support vertex");
            (sv, tv)
        })
        .collect();
    ring_edges.sort_unstable();

    let name = |v: usize| quiver.vertex_name(v).to_string();
    let only_in_lattice: Vec<(String, String)> = lattice_edges
        .iter()
        .filter(|e| !ring_edges.contains(e))
        .map(|&(a, b)| (name(a), name(b)))
        .collect();
    let only_in_ring: Vec<(String, String)> = ring_edges
        .iter()
        .filter(|e| !lattice_edges.contains(e))
        .map(|&(a, b)| (name(a), name(b)))
        .collect();

    // Tree check on the support-restricted underlying multigraph: parallel
    // arrows count as distinct edges.
    let support: Vec<usize> = rep.support.ones().collect();
    let position: HashMap<usize, usize> = support
        .iter()
        .enumerate()
        .map(|(pos, &v)| (v, pos))
        .collect();
    let mut uf = UnionFind::new(support.len());
    let mut forest = true;
    for a in quiver.arrows() {
        if let (Some(&s), Some(&t)) = (position.get(&a.source), position.get(&a.target)) {
            if s == t || !uf.union(s, t) {
                forest = false;
            }
        }
    }
    let connected = !support.is_empty() && {
        let root = uf.find(0);
        (1..support.len()).all(|i| uf.find(i) == root)
    };

    Ok(ExtComparison {
        equal: only_in_lattice.is_empty() && only_in_ring.is_empty(),
        support_is_tree: forest && connected,
        only_in_lattice,
        only_in_ring,
    })
}
