//! Graver bases of edge subrings: primitivity and exact enumeration.
//!
//! Two independent routes compute the same set. The completion route starts
//! from an integer kernel basis and closes it under sums, reducing each
//! candidate by conformally smaller elements until nothing new survives. The
//! bounded oracle enumerates every kernel vector up to a degree bound and
//! keeps the conformally minimal ones. Primitivity of a single vector is
//! decided by a third, box-bounded search.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::lattice::kernel_basis;
use crate::walks::{degree_of, sign_normalize, WalkVector};

pub const DEFAULT_MAX_WORK: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Completion,
    BoundedOracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraverConfig {
    pub method: Method,
    pub degree_bound: Option<u64>,
    /// Cap on queue insertions (completion) or search nodes (oracle).
    pub max_work: u64,
}

impl Default for GraverConfig {
    fn default() -> Self {
        GraverConfig { method: Method::Completion, degree_bound: None, max_work: DEFAULT_MAX_WORK }
    }
}

impl GraverConfig {
    pub fn oracle(bound: u64) -> Self {
        GraverConfig { method: Method::BoundedOracle, degree_bound: Some(bound), ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraverBasis {
    pub host: Hypergraph,
    /// Sign-normalized, ordered by (degree, coefficients).
    pub elements: Vec<WalkVector>,
    pub method: Method,
    pub bound: Option<u64>,
}

impl GraverBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_degree(&self) -> u64 {
        self.elements.iter().map(|e| e.degree()).max().unwrap_or(0)
    }

    pub fn contains(&self, coeffs: &[i64]) -> bool {
        let mut key = coeffs.to_vec();
        sign_normalize(&mut key);
        self.elements.iter().any(|e| e.coeffs() == key.as_slice())
    }

    pub fn coeff_set(&self) -> BTreeSet<Vec<i64>> {
        self.elements.iter().map(|e| e.coeffs().to_vec()).collect()
    }
}

/// `v ⊑ u`: same sign everywhere and componentwise no larger in magnitude.
pub fn conformal_leq_raw(v: &[i64], u: &[i64]) -> bool {
    v.len() == u.len()
        && v.iter()
            .zip(u)
            .all(|(&a, &b)| (a == 0 || (a > 0) == (b > 0) && b != 0) && a.unsigned_abs() <= b.unsigned_abs())
}

pub fn conformal_leq(v: &WalkVector, u: &WalkVector) -> Result<bool> {
    if v.host() != u.host() {
        return Err(Error::HostMismatch);
    }
    Ok(conformal_leq_raw(v.coeffs(), u.coeffs()))
}

/// Looks for a kernel vector `w` with `w ⊑ u` and `w ∉ {0, u}` by searching
/// the box `0 ≤ |w_e| ≤ |u_e|`, pruning on per-vertex reachable ranges.
pub fn proper_conformal_subvector(h: &Hypergraph, u: &[i64]) -> Option<Vec<i64>> {
    let support: Vec<usize> = (0..u.len()).filter(|&e| u[e] != 0).collect();
    let n = h.n();
    // reach_pos[v] / reach_neg[v]: what the not-yet-assigned edges can still add.
    let mut reach_pos = vec![0i64; n];
    let mut reach_neg = vec![0i64; n];
    for &e in &support {
        for &v in h.edge(e) {
            if u[e] > 0 {
                reach_pos[v] += u[e];
            } else {
                reach_neg[v] += -u[e];
            }
        }
    }
    let mut search = BoxSearch {
        h,
        u,
        support: &support,
        margin: vec![0; n],
        reach_pos,
        reach_neg,
        w: vec![0; u.len()],
        nonzero: 0,
        full: 0,
    };
    search.run(0).then_some(search.w)
}

struct BoxSearch<'a> {
    h: &'a Hypergraph,
    u: &'a [i64],
    support: &'a [usize],
    margin: Vec<i64>,
    reach_pos: Vec<i64>,
    reach_neg: Vec<i64>,
    w: Vec<i64>,
    nonzero: usize,
    full: usize,
}

impl BoxSearch<'_> {
    fn run(&mut self, pos: usize) -> bool {
        if pos == self.support.len() {
            return self.nonzero > 0 && self.full < self.support.len();
        }
        let e = self.support[pos];
        let ue = self.u[e];
        let sign = ue.signum();
        let cap = ue.abs();
        for v in self.h.edge(e) {
            if ue > 0 {
                self.reach_pos[*v] -= cap;
            } else {
                self.reach_neg[*v] -= cap;
            }
        }
        let mut found = false;
        for k in 0..=cap {
            let val = sign * k;
            let mut ok = true;
            for &v in self.h.edge(e) {
                self.margin[v] += val;
                let m = self.margin[v];
                if m + self.reach_pos[v] < 0 || m - self.reach_neg[v] > 0 {
                    ok = false;
                }
            }
            if ok {
                self.w[e] = val;
                self.nonzero += (k > 0) as usize;
                self.full += (k == cap) as usize;
                found = self.run(pos + 1);
                self.nonzero -= (k > 0) as usize;
                self.full -= (k == cap) as usize;
            }
            for &v in self.h.edge(e) {
                self.margin[v] -= val;
            }
            if found {
                break;
            }
        }
        if !found {
            self.w[e] = 0;
            for v in self.h.edge(e) {
                if ue > 0 {
                    self.reach_pos[*v] += cap;
                } else {
                    self.reach_neg[*v] += cap;
                }
            }
        }
        found
    }
}

/// No nonzero kernel vector other than `u` itself lies conformally below `u`.
pub fn is_primitive(u: &WalkVector) -> Result<bool> {
    if u.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !u.host().in_kernel(u.coeffs()) {
        return Err(Error::NotInKernel);
    }
    Ok(proper_conformal_subvector(u.host(), u.coeffs()).is_none())
}

pub fn graver_basis(h: &Hypergraph, cfg: &GraverConfig) -> Result<GraverBasis> {
    if h.num_edges() > 0 && h.uniformity().is_none() {
        return Err(Error::NotUniform);
    }
    let raw = match cfg.method {
        Method::Completion => completion(h, cfg.max_work)?,
        Method::BoundedOracle => {
            let bound = cfg.degree_bound.ok_or(Error::BoundRequired)?;
            bounded_oracle(h, bound, cfg.max_work)?
        }
    };
    Ok(GraverBasis {
        host: h.clone(),
        elements: into_walks(h, raw),
        method: cfg.method,
        bound: match cfg.method {
            Method::Completion => None,
            Method::BoundedOracle => cfg.degree_bound,
        },
    })
}

fn into_walks(h: &Hypergraph, mut raw: Vec<Vec<i64>>) -> Vec<WalkVector> {
    for v in raw.iter_mut() {
        sign_normalize(v);
    }
    raw.sort_by(|a, b| (degree_of(a), a).cmp(&(degree_of(b), b)));
    raw.dedup();
    raw.into_iter().map(|c| WalkVector::from_raw(h.clone(), c).expect("length matches host")).collect()
}

/// The Graver basis as a move set for fiber walks.
pub fn markov_moves(h: &Hypergraph, cfg: &GraverConfig) -> Result<Vec<WalkVector>> {
    Ok(graver_basis(h, cfg)?.elements)
}

/// Moves with every coefficient in {-1, 0, 1}.
pub fn squarefree(moves: &[WalkVector]) -> Vec<WalkVector> {
    moves.iter().filter(|m| m.is_squarefree()).cloned().collect()
}

fn sign_compatible(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| (x as i128) * (y as i128) >= 0)
}

fn add_scaled(a: &[i64], b: &[i64], s: i64) -> Result<Vec<i64>> {
    a.iter().zip(b).map(|(&x, &y)| y.checked_mul(s).and_then(|p| x.checked_add(p)).ok_or(Error::Overflow)).collect()
}

fn is_zero(v: &[i64]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// Sign representative `g` of the symmetric set `{g, -g}` that reduces `s`.
fn reducer<'a>(s: &[i64], g: &'a [Vec<i64>]) -> Option<(&'a [i64], i64)> {
    g.iter().find_map(|h| {
        let pivot = h.iter().position(|&x| x != 0)?;
        let sign = if (h[pivot] > 0) == (s[pivot] > 0) { 1 } else { -1 };
        if s[pivot] == 0 {
            return None;
        }
        let ok = h.iter().zip(s).all(|(&x, &y)| {
            let x = x * sign;
            x == 0 || (x > 0) == (y > 0) && y != 0 && x.abs() <= y.abs()
        });
        ok.then_some((h.as_slice(), sign))
    })
}

fn normal_form(mut s: Vec<i64>, g: &[Vec<i64>]) -> Result<Vec<i64>> {
    while !is_zero(&s) {
        match reducer(&s, g) {
            Some((h, sign)) => s = add_scaled(&s, h, -sign)?,
            None => break,
        }
    }
    Ok(s)
}

struct Queue {
    items: BTreeSet<(u64, Vec<i64>)>,
    insertions: u64,
    limit: u64,
}

impl Queue {
    fn push(&mut self, mut v: Vec<i64>) -> bool {
        if is_zero(&v) {
            return true;
        }
        sign_normalize(&mut v);
        self.insertions += 1;
        if self.insertions > self.limit {
            return false;
        }
        self.items.insert((degree_of(&v), v));
        true
    }
}

/// Conformally minimal members of a symmetric set given by representatives.
fn minimal_representatives(g: &[Vec<i64>]) -> Vec<Vec<i64>> {
    g.iter()
        .enumerate()
        .filter(|&(i, v)| {
            !g.iter().enumerate().any(|(j, w)| {
                if i == j || w == v {
                    return false;
                }
                let neg: Vec<i64> = w.iter().map(|x| -x).collect();
                conformal_leq_raw(w, v) || conformal_leq_raw(&neg, v)
            })
        })
        .map(|(_, v)| v.clone())
        .collect()
}

/// Completion of a kernel lattice basis under conformal reduction. The set
/// `g` holds one sign representative per element; reductions and pair sums
/// use both signs.
fn completion(h: &Hypergraph, max_work: u64) -> Result<Vec<Vec<i64>>> {
    let basis = kernel_basis(h)?;
    let mut g: Vec<Vec<i64>> = Vec::new();
    let mut queue = Queue { items: BTreeSet::new(), insertions: 0, limit: max_work };
    let limit_hit = |g: &[Vec<i64>]| Error::ResourceLimit {
        resource: "completion queue insertions",
        limit: max_work,
        partial: Some(minimal_representatives(g)),
    };
    for b in basis {
        if !queue.push(b) {
            return Err(limit_hit(&g));
        }
    }
    while let Some((_, s)) = queue.items.pop_first() {
        let f = normal_form(s, &g)?;
        if is_zero(&f) {
            continue;
        }
        for other in &g {
            for sign in [1i64, -1] {
                let signed: Vec<i64> = other.iter().map(|x| x * sign).collect();
                if sign_compatible(&f, &signed) {
                    continue;
                }
                if !queue.push(add_scaled(&f, &signed, 1)?) {
                    return Err(limit_hit(&g));
                }
            }
        }
        let mut f = f;
        sign_normalize(&mut f);
        g.push(f);
    }
    Ok(minimal_representatives(&g))
}

/// Every kernel vector of degree at most `bound`, filtered to the
/// conformally minimal ones. Exhaustive, so exact below the bound.
fn bounded_oracle(h: &Hypergraph, bound: u64, max_work: u64) -> Result<Vec<Vec<i64>>> {
    let m = h.num_edges();
    let n = h.n();
    let bound = i64::try_from(bound).map_err(|_| Error::Overflow)?;
    // remaining[v]: number of not-yet-assigned edges through v
    let mut remaining = vec![0usize; n];
    for e in h.edges() {
        for &v in e {
            remaining[v] += 1;
        }
    }
    let mut st = OracleState {
        h,
        bound,
        margin: vec![0; n],
        remaining,
        pos_used: 0,
        neg_used: 0,
        w: vec![0; m],
        found: Vec::new(),
        nodes: 0,
        max_work,
    };
    if !st.run(0) {
        return Err(Error::ResourceLimit { resource: "oracle search nodes", limit: max_work, partial: None });
    }
    let mut found = st.found;
    // vectors are symmetric under negation; a vector can only sit below
    // vectors of strictly larger degree
    found.sort_by_key(|v| degree_of(v));
    let minimal: Vec<Vec<i64>> = found
        .iter()
        .filter(|v| {
            let d = degree_of(v);
            !found.iter().take_while(|w| degree_of(w) < d).any(|w| conformal_leq_raw(w, v))
        })
        .cloned()
        .collect();
    Ok(minimal)
}

struct OracleState<'a> {
    h: &'a Hypergraph,
    bound: i64,
    margin: Vec<i64>,
    remaining: Vec<usize>,
    pos_used: i64,
    neg_used: i64,
    w: Vec<i64>,
    found: Vec<Vec<i64>>,
    nodes: u64,
    max_work: u64,
}

impl OracleState<'_> {
    /// Returns false when the node budget runs out.
    fn run(&mut self, e: usize) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_work {
            return false;
        }
        if e == self.w.len() {
            if self.w.iter().any(|&x| x != 0) {
                self.found.push(self.w.clone());
            }
            return true;
        }
        let edge = self.h.edge(e);
        for &v in edge {
            self.remaining[v] -= 1;
        }
        let lo = -(self.bound - self.neg_used);
        let hi = self.bound - self.pos_used;
        let mut ok_all = true;
        for val in lo..=hi {
            let mut ok = true;
            for &v in edge {
                self.margin[v] += val;
            }
            let pos_left = self.bound - self.pos_used - val.max(0);
            let neg_left = self.bound - self.neg_used - (-val).max(0);
            for &v in edge {
                let mv = self.margin[v];
                if self.remaining[v] == 0 {
                    ok &= mv == 0;
                } else {
                    // remaining edges through v can shift its margin by at
                    // most the remaining positive / negative budget
                    ok &= mv >= -pos_left && mv <= neg_left;
                }
            }
            if ok {
                self.w[e] = val;
                self.pos_used += val.max(0);
                self.neg_used += (-val).max(0);
                ok_all = self.run(e + 1);
                self.pos_used -= val.max(0);
                self.neg_used -= (-val).max(0);
                self.w[e] = 0;
            }
            for &v in edge {
                self.margin[v] -= val;
            }
            if !ok_all {
                break;
            }
        }
        for &v in edge {
            self.remaining[v] += 1;
        }
        ok_all
    }
}

/// Shapes of primitive even closed walks on a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphWalkKind {
    EvenCycle,
    OddCyclesSharingVertex,
    OddCyclesJoinedByPath,
}

/// Structural classification of a kernel vector on a 2-uniform host; `None`
/// when the support is none of the three primitive shapes.
pub fn classify_graph_walk(h: &Hypergraph, u: &[i64]) -> Option<GraphWalkKind> {
    if !h.is_uniform(2) || u.iter().any(|x| x.abs() > 2) {
        return None;
    }
    let singles: Vec<usize> = (0..u.len()).filter(|&e| u[e].abs() == 1).collect();
    let doubles: Vec<usize> = (0..u.len()).filter(|&e| u[e].abs() == 2).collect();
    let deg = |edges: &[usize]| {
        let mut d = vec![0usize; h.n()];
        for &e in edges {
            for &v in h.edge(e) {
                d[v] += 1;
            }
        }
        d
    };
    let cycles = cycle_components(h, &singles)?;
    if doubles.is_empty() {
        let d = deg(&singles);
        let high: Vec<usize> = (0..h.n()).filter(|&v| d[v] > 2).collect();
        return match (cycles.len(), high.as_slice()) {
            (1, []) if cycles[0].0 % 2 == 0 => Some(GraphWalkKind::EvenCycle),
            (1, [v]) if d[*v] == 4 => {
                // a figure eight: split at v into two cycles
                let lens = figure_eight_lengths(h, &singles, *v)?;
                (lens.0 % 2 == 1 && lens.1 % 2 == 1).then_some(GraphWalkKind::OddCyclesSharingVertex)
            }
            _ => None,
        };
    }
    // two vertex-disjoint odd cycles joined by a path of doubled edges
    if cycles.len() != 2 || cycles.iter().any(|c| c.0 % 2 == 0 || !c.2) {
        return None;
    }
    let dp = deg(&doubles);
    let ends: Vec<usize> = (0..h.n()).filter(|&v| dp[v] == 1).collect();
    if ends.len() != 2 || (0..h.n()).any(|v| dp[v] > 2) {
        return None;
    }
    let in_cycle = |v: usize, k: usize| cycles[k].1.contains(&v);
    let ends_ok = (in_cycle(ends[0], 0) && in_cycle(ends[1], 1)) || (in_cycle(ends[0], 1) && in_cycle(ends[1], 0));
    let interior_clear = (0..h.n()).filter(|&v| dp[v] == 2).all(|v| !in_cycle(v, 0) && !in_cycle(v, 1));
    let path_connected = is_path(h, &doubles);
    (ends_ok && interior_clear && path_connected).then_some(GraphWalkKind::OddCyclesJoinedByPath)
}

/// Connected components of an edge set as (edge count, vertices, is simple
/// cycle). `None` if the edge set is empty.
fn cycle_components(h: &Hypergraph, edges: &[usize]) -> Option<Vec<(usize, Vec<usize>, bool)>> {
    if edges.is_empty() {
        return None;
    }
    let sub = h.edge_subhypergraph(edges);
    let r = crate::hypergraph::remove_core(&sub, &[]);
    let mut deg = vec![0usize; h.n()];
    for &e in edges {
        for &v in h.edge(e) {
            deg[v] += 1;
        }
    }
    Some(
        r.components
            .into_iter()
            .map(|c| {
                let simple = c.vertices.iter().all(|&v| deg[v] == 2) && c.edges.len() == c.vertices.len();
                (c.edges.len(), c.vertices, simple)
            })
            .collect(),
    )
}

/// The edge set forms one simple path.
fn is_path(h: &Hypergraph, edges: &[usize]) -> bool {
    match cycle_components(h, edges) {
        Some(comps) => comps.len() == 1 && comps[0].0 + 1 == comps[0].1.len(),
        None => false,
    }
}

/// Lengths of the two closed trails through the degree-4 vertex `hub`.
fn figure_eight_lengths(h: &Hypergraph, edges: &[usize], hub: usize) -> Option<(usize, usize)> {
    let mut used = vec![false; edges.len()];
    let mut lens = Vec::new();
    for _ in 0..2 {
        let start = (0..edges.len()).find(|&i| !used[i] && h.edge(edges[i]).contains(&hub))?;
        used[start] = true;
        let mut len = 1;
        let e = h.edge(edges[start]);
        let mut at = if e[0] == hub { e[1] } else { e[0] };
        while at != hub {
            let next = (0..edges.len()).find(|&i| !used[i] && h.edge(edges[i]).contains(&at))?;
            used[next] = true;
            len += 1;
            let e = h.edge(edges[next]);
            at = if e[0] == at { e[1] } else { e[0] };
        }
        lens.push(len);
    }
    used.iter().all(|&u| u).then_some((lens[0], lens[1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Hypergraph {
        Hypergraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap()
    }

    fn k5() -> Hypergraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                edges.push(vec![i, j]);
            }
        }
        Hypergraph::new(5, edges).unwrap()
    }

    #[test]
    fn conformal_order_basics() {
        let h = c4();
        let v = WalkVector::new(h.clone(), vec![1, -1, -1, 1]).unwrap();
        let v2 = WalkVector::new(h.clone(), vec![2, -2, -2, 2]).unwrap();
        let neg = WalkVector::from_raw(h.clone(), vec![-1, 1, 1, -1]).unwrap();
        assert!(conformal_leq(&v, &v).unwrap());
        assert!(!conformal_leq(&neg, &v).unwrap());
        assert!(conformal_leq(&v, &v2).unwrap());
        assert!(!conformal_leq(&v2, &v).unwrap());
        let other = WalkVector::from_raw(k5(), vec![0; 10]).unwrap();
        assert_eq!(conformal_leq(&v, &other), Err(Error::HostMismatch));
    }

    #[test]
    fn primitivity_of_cycles() {
        let h = c4();
        assert!(is_primitive(&WalkVector::new(h.clone(), vec![1, -1, -1, 1]).unwrap()).unwrap());
        assert!(!is_primitive(&WalkVector::new(h.clone(), vec![2, -2, -2, 2]).unwrap()).unwrap());
        assert_eq!(is_primitive(&WalkVector::from_raw(h.clone(), vec![0; 4]).unwrap()), Err(Error::ZeroVector));
        assert_eq!(is_primitive(&WalkVector::from_raw(h, vec![1, 0, 0, 0]).unwrap()), Err(Error::NotInKernel));
    }

    #[test]
    fn bow_tie_is_primitive() {
        // triangles {0,1,2} and {0,3,4} sharing vertex 0
        let h = k5();
        let e = |a, b| h.edge_index(&[a, b]).unwrap();
        let mut u = vec![0i64; 10];
        u[e(0, 1)] = 1;
        u[e(1, 2)] = -1;
        u[e(0, 2)] = 1;
        u[e(0, 3)] = -1;
        u[e(3, 4)] = 1;
        u[e(0, 4)] = -1;
        let w = WalkVector::new(h.clone(), u).unwrap();
        assert_eq!(w.degree(), 3);
        assert!(is_primitive(&w).unwrap());
        assert_eq!(classify_graph_walk(&h, w.coeffs()), Some(GraphWalkKind::OddCyclesSharingVertex));
    }

    #[test]
    fn c4_graver() {
        let g = graver_basis(&c4(), &GraverConfig::default()).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.elements[0].coeffs(), &[1, -1, -1, 1]);
        let o = graver_basis(&c4(), &GraverConfig::oracle(2)).unwrap();
        assert_eq!(o.coeff_set(), g.coeff_set());
    }

    #[test]
    fn sunflower_alone_has_empty_basis() {
        let h = Hypergraph::new(5, vec![vec![0, 1, 2], vec![0, 3, 4]]).unwrap();
        assert!(graver_basis(&h, &GraverConfig::default()).unwrap().is_empty());
    }

    #[test]
    fn k5_graver_has_thirty_elements() {
        let g = graver_basis(&k5(), &GraverConfig::default()).unwrap();
        // 15 four-cycles and 15 bow ties
        assert_eq!(g.len(), 30);
        assert_eq!(g.elements.iter().filter(|e| e.degree() == 2).count(), 15);
        for e in &g.elements {
            assert!(k5().in_kernel(e.coeffs()));
            assert!(is_primitive(e).unwrap());
            assert!(classify_graph_walk(&k5(), e.coeffs()).is_some());
        }
        let o = graver_basis(&k5(), &GraverConfig::oracle(g.max_degree())).unwrap();
        assert_eq!(o.coeff_set(), g.coeff_set());
    }

    #[test]
    fn oracle_needs_bound_and_uniform_host() {
        let cfg = GraverConfig { method: Method::BoundedOracle, degree_bound: None, ..Default::default() };
        assert_eq!(graver_basis(&c4(), &cfg), Err(Error::BoundRequired));
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![0, 1, 2]]).unwrap();
        assert_eq!(graver_basis(&h, &GraverConfig::default()), Err(Error::NotUniform));
    }

    #[test]
    fn resource_limit_is_reported() {
        let cfg = GraverConfig { max_work: 3, ..Default::default() };
        match graver_basis(&k5(), &cfg) {
            Err(Error::ResourceLimit { partial: Some(_), limit: 3, .. }) => {}
            other => panic!("expected resource limit, got {other:?}"),
        }
    }

    #[test]
    fn squarefree_filter() {
        let h = c4();
        let moves = vec![
            WalkVector::new(h.clone(), vec![1, -1, -1, 1]).unwrap(),
            WalkVector::from_raw(h, vec![2, -2, -2, 2]).unwrap(),
        ];
        assert_eq!(squarefree(&moves).len(), 1);
    }

    #[test]
    fn classify_path_joined_triangles() {
        // triangles 0-1-2 and 3-4-5 joined by edge 2-3 traversed twice
        let h = Hypergraph::new(
            6,
            vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![3, 5]],
        )
        .unwrap();
        let g = graver_basis(&h, &GraverConfig::default()).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(classify_graph_walk(&h, g.elements[0].coeffs()), Some(GraphWalkKind::OddCyclesJoinedByPath));
        assert!(g.elements[0].coeffs().iter().any(|x| x.abs() == 2));
    }
}
