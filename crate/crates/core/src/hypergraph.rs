//! Hypergraph data model and incidence algebra.
//!
//! Vertices are dense indices `0..n`. Edges are strictly increasing vertex
//! lists kept in lexicographic order, so an edge index is stable for a given
//! edge set and every edge-indexed vector downstream uses that order.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Presentation-only names for vertices and edges.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labels {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<String>>,
}

#[derive(Debug, PartialEq, Eq)]
struct Data {
    n: usize,
    edges: Vec<Vec<usize>>,
    labels: Option<Labels>,
}

/// A finite simple hypergraph. Cloning is cheap; the value is immutable.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    data: Arc<Data>,
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph").field("n", &self.data.n).field("edges", &self.data.edges).finish()
    }
}

/// Sorts each raw edge, validates it, and returns the permutation that puts
/// the edges in canonical order (`order[k]` is the input position of the
/// k-th canonical edge).
fn canonicalize(n: usize, raw: Vec<Vec<usize>>) -> Result<(Vec<Vec<usize>>, Vec<usize>)> {
    let mut edges = Vec::with_capacity(raw.len());
    for (i, mut e) in raw.into_iter().enumerate() {
        if e.is_empty() {
            return Err(Error::EmptyEdge(i));
        }
        e.sort_unstable();
        if let Some(&v) = e.iter().find(|&&v| v >= n) {
            return Err(Error::IndexOutOfRange { edge: e, vertex: v, n });
        }
        if e.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!("edge {e:?} repeats a vertex")));
        }
        edges.push(e);
    }
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by(|&a, &b| edges[a].cmp(&edges[b]));
    for w in order.windows(2) {
        if edges[w[0]] == edges[w[1]] {
            return Err(Error::DuplicateEdge(edges[w[0]].clone()));
        }
    }
    let sorted = order.iter().map(|&i| edges[i].clone()).collect();
    Ok((sorted, order))
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let (edges, _) = canonicalize(n, edges)?;
        Ok(Self::from_canonical(n, edges, None))
    }

    /// Like [`Hypergraph::new`]; edge labels are given in input order and
    /// travel with their edges through canonicalization.
    pub fn with_labels(n: usize, edges: Vec<Vec<usize>>, labels: Labels) -> Result<Self> {
        Self::with_labels_permuted(n, edges, labels).map(|(h, _)| h)
    }

    pub(crate) fn with_labels_permuted(
        n: usize,
        edges: Vec<Vec<usize>>,
        mut labels: Labels,
    ) -> Result<(Self, Vec<usize>)> {
        let m = edges.len();
        let (edges, order) = canonicalize(n, edges)?;
        if let Some(v) = &labels.vertices {
            if v.len() != n {
                return Err(Error::InvalidInput(format!("labels.vertices has {} entries, expected {n}", v.len())));
            }
        }
        if let Some(e) = labels.edges.take() {
            if e.len() != m {
                return Err(Error::InvalidInput(format!("labels.edges has {} entries, expected {m}", e.len())));
            }
            labels.edges = Some(order.iter().map(|&i| e[i].clone()).collect());
        }
        Ok((Self::from_canonical(n, edges, Some(labels)), order))
    }

    fn from_canonical(n: usize, edges: Vec<Vec<usize>>, labels: Option<Labels>) -> Self {
        Hypergraph { data: Arc::new(Data { n, edges, labels }) }
    }

    pub fn n(&self) -> usize {
        self.data.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.data.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.data.edges[i]
    }

    pub fn num_edges(&self) -> usize {
        self.data.edges.len()
    }

    pub fn labels(&self) -> Option<&Labels> {
        self.data.labels.as_ref()
    }

    pub fn vertex_label(&self, v: usize) -> String {
        self.labels().and_then(|l| l.vertices.as_ref()).map(|names| names[v].clone()).unwrap_or_else(|| v.to_string())
    }

    /// Index of the edge with exactly these vertices, in any order.
    pub fn edge_index(&self, vertices: &[usize]) -> Option<usize> {
        let mut key = vertices.to_vec();
        key.sort_unstable();
        self.data.edges.binary_search(&key).ok()
    }

    pub fn is_uniform(&self, d: usize) -> bool {
        self.data.edges.iter().all(|e| e.len() == d)
    }

    /// The common edge size, if there is one (and at least one edge).
    pub fn uniformity(&self) -> Option<usize> {
        let d = self.data.edges.first()?.len();
        self.is_uniform(d).then_some(d)
    }

    /// For every vertex, the indices of the edges containing it.
    pub fn vertex_edges(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n()];
        for (i, e) in self.edges().iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n()];
        for e in self.edges() {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.degrees().iter().enumerate().filter(|(_, &d)| d == 0).map(|(v, _)| v).collect()
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let mut m = IncidenceMatrix::zeros(self.n(), self.num_edges());
        for (j, e) in self.edges().iter().enumerate() {
            for &v in e {
                m.data[v * m.cols + j] = 1;
            }
        }
        m
    }

    /// `A·u` for an edge-indexed vector, with overflow checking.
    pub fn apply(&self, u: &[i64]) -> Result<Vec<i64>> {
        if u.len() != self.num_edges() {
            return Err(Error::HostMismatch);
        }
        let mut out = vec![0i64; self.n()];
        for (e, &c) in self.edges().iter().zip(u) {
            if c == 0 {
                continue;
            }
            for &v in e {
                out[v] = out[v].checked_add(c).ok_or(Error::Overflow)?;
            }
        }
        Ok(out)
    }

    /// Whether `A·u = 0`. Vectors of the wrong length are never in the kernel.
    pub fn in_kernel(&self, u: &[i64]) -> bool {
        if u.len() != self.num_edges() {
            return false;
        }
        let mut acc = vec![0i128; self.n()];
        for (e, &c) in self.edges().iter().zip(u) {
            for &v in e {
                acc[v] += c as i128;
            }
        }
        acc.iter().all(|&x| x == 0)
    }

    /// Renames vertex `v` to `map[v]` in a hypergraph on `new_n` vertices.
    /// Edge labels are kept; vertex labels are dropped.
    pub fn relabel_vertices(&self, map: &[usize], new_n: usize) -> Result<Hypergraph> {
        if map.len() != self.n() {
            return Err(Error::InvalidInput("relabeling map has the wrong length".into()));
        }
        let edges = self.edges().iter().map(|e| e.iter().map(|&v| map[v]).collect()).collect();
        Hypergraph::new(new_n, edges)
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Hypergraph {
        let shift = self.n();
        let mut edges = self.edges().to_vec();
        edges.extend(other.edges().iter().map(|e| e.iter().map(|&v| v + shift).collect()));
        Hypergraph::new(self.n() + other.n(), edges).expect("disjoint union of valid hypergraphs")
    }

    /// Drops uncovered vertices, renumbering the rest in order.
    pub fn without_isolated(&self) -> Hypergraph {
        let deg = self.degrees();
        let mut map = vec![usize::MAX; self.n()];
        let mut next = 0;
        for v in 0..self.n() {
            if deg[v] > 0 {
                map[v] = next;
                next += 1;
            }
        }
        let edges = self.edges().iter().map(|e| e.iter().map(|&v| map[v]).collect()).collect();
        Hypergraph::new(next, edges).expect("compaction keeps edges valid")
    }

    /// The sub-hypergraph on a subset of edges, same vertex set.
    pub fn edge_subhypergraph(&self, keep: &[usize]) -> Hypergraph {
        let edges = keep.iter().map(|&i| self.edge(i).to_vec()).collect();
        Hypergraph::new(self.n(), edges).expect("subset of valid edges")
    }
}

/// Dense 0/1 vertex-by-edge matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl IncidenceMatrix {
    fn zeros(rows: usize, cols: usize) -> Self {
        IncidenceMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.data[row * self.cols + col]
    }

    pub fn transpose(&self) -> IncidenceMatrix {
        let mut t = IncidenceMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * t.cols + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn column_sums(&self) -> Vec<usize> {
        (0..self.cols).map(|c| (0..self.rows).map(|r| self.get(r, c) as usize).sum()).collect()
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, u: &[i64]) -> Vec<i128> {
        assert_eq!(u.len(), self.cols, "vector length must match column count");
        (0..self.rows).map(|r| self.row(r).iter().zip(u).map(|(&a, &x)| a as i128 * x as i128).sum()).collect()
    }
}

/// A hypergraph whose edges carry multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multihypergraph {
    base: Hypergraph,
    multiplicity: Vec<u64>,
}

impl Multihypergraph {
    pub fn new(base: Hypergraph, multiplicity: Vec<u64>) -> Result<Self> {
        if multiplicity.len() != base.num_edges() {
            return Err(Error::InvalidInput(format!(
                "multiplicity has {} entries, expected {}",
                multiplicity.len(),
                base.num_edges()
            )));
        }
        if !multiplicity.is_empty() && multiplicity.iter().all(|&m| m == 0) {
            return Err(Error::InvalidInput("all multiplicities are zero".into()));
        }
        Ok(Multihypergraph { base, multiplicity })
    }

    /// Every edge once.
    pub fn simple(base: Hypergraph) -> Self {
        let multiplicity = vec![1; base.num_edges()];
        Multihypergraph { base, multiplicity }
    }

    /// Builds from a raw edge list in which repeated edges become multiplicity.
    pub fn from_edge_list(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for (i, mut e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyEdge(i));
            }
            e.sort_unstable();
            *counts.entry(e).or_default() += 1;
        }
        let (edges, mult): (Vec<_>, Vec<_>) = counts.into_iter().unzip();
        let base = Hypergraph::new(n, edges)?;
        Ok(Multihypergraph { base, multiplicity: mult })
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn multiplicity(&self) -> &[u64] {
        &self.multiplicity
    }

    pub fn total_edges(&self) -> u64 {
        self.multiplicity.iter().sum()
    }

    pub fn is_simple(&self) -> bool {
        self.multiplicity.iter().all(|&m| m == 1)
    }

    /// Edge list with every edge repeated by its multiplicity.
    pub fn expanded_edges(&self) -> Vec<Vec<usize>> {
        self.base
            .edges()
            .iter()
            .zip(&self.multiplicity)
            .flat_map(|(e, &m)| std::iter::repeat_n(e.clone(), m as usize))
            .collect()
    }

    pub fn remove_core(&self, core: &[usize]) -> CoreRemoval {
        remove_core_weighted(&self.base, core, &self.multiplicity)
    }
}

/// The dual hypergraph together with the vertex-to-dual-edge correspondence.
///
/// Vertices of `hypergraph` are the edges of the primal hypergraph (same
/// indices). Two primal vertices lying in exactly the same edges give the same
/// dual edge, which is why the dual is a multihypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dual {
    pub hypergraph: Multihypergraph,
    /// `edge_of_vertex[v]` is the dual edge (canonical index) of primal vertex `v`.
    pub edge_of_vertex: Vec<usize>,
}

impl Dual {
    /// The dual as a simple hypergraph, when no dual edge is repeated.
    pub fn as_simple(&self) -> Option<&Hypergraph> {
        self.hypergraph.is_simple().then(|| self.hypergraph.base())
    }

    /// Incidence matrix of the dual with one column per primal vertex, in
    /// primal vertex order.
    pub fn incidence_by_primal_vertex(&self) -> IncidenceMatrix {
        let base = self.hypergraph.base();
        let mut m = IncidenceMatrix::zeros(base.n(), self.edge_of_vertex.len());
        for (v, &de) in self.edge_of_vertex.iter().enumerate() {
            for &x in base.edge(de) {
                m.data[x * m.cols + v] = 1;
            }
        }
        m
    }
}

pub fn dual(h: &Hypergraph) -> Result<Dual> {
    let inc = h.vertex_edges();
    if let Some(v) = inc.iter().position(|e| e.is_empty()) {
        return Err(Error::EmptyEdge(v));
    }
    let multi = Multihypergraph::from_edge_list(h.num_edges(), inc.clone())?;
    let edge_of_vertex = inc.iter().map(|e| multi.base().edge_index(e).expect("dual edge present")).collect();
    Ok(Dual { hypergraph: multi, edge_of_vertex })
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Connectivity of the primal graph. Isolated vertices make this false, as
/// does the hypergraph on zero vertices.
pub fn is_connected(h: &Hypergraph) -> bool {
    if h.n() == 0 || !h.isolated_vertices().is_empty() {
        return false;
    }
    let mut uf = UnionFind::new(h.n());
    for e in h.edges() {
        for w in e.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    (0..h.n()).all(|v| uf.find(v) == 0)
}

/// A connected piece of `H − C`: its vertices and the original edges whose
/// remnants lie in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreRemoval {
    pub removed: Vec<usize>,
    /// `e ∖ C` for every original edge, in edge order.
    pub remnants: Vec<Vec<usize>>,
    pub multiplicity: Vec<u64>,
    /// Edges whose remnant is empty; they belong to no component.
    pub empty: Vec<usize>,
    pub components: Vec<Component>,
}

impl CoreRemoval {
    pub fn component_of_edge(&self, e: usize) -> Option<usize> {
        self.components.iter().position(|c| c.edges.binary_search(&e).is_ok())
    }

    pub fn component_of_vertex(&self, v: usize) -> Option<usize> {
        self.components.iter().position(|c| c.vertices.binary_search(&v).is_ok())
    }
}

pub fn remove_core(h: &Hypergraph, core: &[usize]) -> CoreRemoval {
    remove_core_weighted(h, core, &vec![1; h.num_edges()])
}

fn remove_core_weighted(h: &Hypergraph, core: &[usize], multiplicity: &[u64]) -> CoreRemoval {
    let mut in_core = vec![false; h.n()];
    for &v in core.iter().filter(|&&v| v < h.n()) {
        in_core[v] = true;
    }
    let remnants: Vec<Vec<usize>> =
        h.edges().iter().map(|e| e.iter().copied().filter(|&v| !in_core[v]).collect()).collect();

    let mut uf = UnionFind::new(h.n());
    for r in &remnants {
        for w in r.windows(2) {
            uf.union(w[0], w[1]);
        }
    }

    let mut by_root: BTreeMap<usize, Component> = BTreeMap::new();
    let mut empty = Vec::new();
    for (i, r) in remnants.iter().enumerate() {
        if r.is_empty() {
            empty.push(i);
            continue;
        }
        let comp =
            by_root.entry(uf.find(r[0])).or_insert_with(|| Component { vertices: Vec::new(), edges: Vec::new() });
        comp.edges.push(i);
        comp.vertices.extend_from_slice(r);
    }
    let mut components: Vec<Component> = by_root
        .into_values()
        .map(|mut c| {
            c.vertices.sort_unstable();
            c.vertices.dedup();
            c
        })
        .collect();
    components.sort_by_key(|c| c.vertices[0]);

    let mut removed: Vec<usize> = core.iter().copied().filter(|&v| v < h.n()).collect();
    removed.sort_unstable();
    removed.dedup();
    CoreRemoval { removed, remnants, multiplicity: multiplicity.to_vec(), empty, components }
}
