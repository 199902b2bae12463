//! Exact combinatorial discrepancy and the dual monomiality test.
//!
//! A ±1 coloring of the vertices of the dual `H*` is a ±1 coloring of the
//! edges of `H`; it has discrepancy zero exactly when coloring the `+1` edges
//! blue and the `−1` edges red balances every vertex of `H`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{dual, Hypergraph};
use crate::walks::Bicoloring;

/// Default vertex cap for exact search.
pub const DEFAULT_VERTEX_CAP: usize = 48;

/// Largest edge count accepted by [`primitive_via_dual`].
pub const PRIMITIVE_EDGE_CAP: usize = 24;

/// Upper bound on zero-discrepancy colorings examined by [`primitive_via_dual`].
const COLORING_CAP: u64 = 1 << 18;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub chi: Vec<i8>,
}

impl Coloring {
    /// `max_e |Σ_{v∈e} χ(v)|`.
    pub fn max_imbalance(&self, h: &Hypergraph) -> u64 {
        h.edges().iter().map(|e| e.iter().map(|&v| self.chi[v] as i64).sum::<i64>().unsigned_abs()).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyResult {
    pub value: u64,
    pub witness: Coloring,
}

/// Exact discrepancy with the default vertex cap.
pub fn discrepancy(h: &Hypergraph) -> Result<DiscrepancyResult> {
    discrepancy_with_cap(h, DEFAULT_VERTEX_CAP)
}

/// Minimum over colorings of the largest absolute edge sum.
///
/// Targets are tried upward from the parity bound (an odd edge cannot sum to
/// zero). For each target a depth-first search assigns vertices by
/// decreasing degree, `+1` before `−1`, so the witness is the first coloring
/// in that order.
pub fn discrepancy_with_cap(h: &Hypergraph, cap: usize) -> Result<DiscrepancyResult> {
    if h.n() > cap {
        return Err(Error::ResourceLimit { resource: "vertices", limit: cap as u64, partial: None });
    }
    let lower = h.edges().iter().map(|e| (e.len() % 2) as u64).max().unwrap_or(0);
    let upper = h.edges().iter().map(|e| e.len() as u64).max().unwrap_or(0);
    let mut search = Search::new(h);
    for target in lower..=upper.max(lower) {
        let mut witness = None;
        search.run(target as i64, &mut |chi| {
            witness = Some(chi.to_vec());
            false
        });
        if let Some(chi) = witness {
            return Ok(DiscrepancyResult { value: target, witness: Coloring { chi } });
        }
    }
    unreachable!("the all-plus coloring meets the trivial bound")
}

/// Branch and bound over vertex colorings with a fixed target.
struct Search<'a> {
    h: &'a Hypergraph,
    order: Vec<usize>,
    inc: Vec<Vec<usize>>,
    sums: Vec<i64>,
    left: Vec<i64>,
    chi: Vec<i8>,
}

impl<'a> Search<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        let inc = h.vertex_edges();
        let mut order: Vec<usize> = (0..h.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(inc[v].len()), v));
        Search {
            h,
            order,
            inc,
            sums: vec![0; h.num_edges()],
            left: h.edges().iter().map(|e| e.len() as i64).collect(),
            chi: vec![1; h.n()],
        }
    }

    /// Calls `visit` on every coloring within `target`, until it returns false.
    fn run(&mut self, target: i64, visit: &mut dyn FnMut(&[i8]) -> bool) {
        self.sums.iter_mut().for_each(|s| *s = 0);
        for (l, e) in self.left.iter_mut().zip(self.h.edges()) {
            *l = e.len() as i64;
        }
        self.go(0, target, visit);
    }

    fn go(&mut self, k: usize, target: i64, visit: &mut dyn FnMut(&[i8]) -> bool) -> bool {
        if k == self.order.len() {
            return visit(&self.chi);
        }
        let v = self.order[k];
        for x in [1i8, -1] {
            self.chi[v] = x;
            let mut ok = true;
            for &e in &self.inc[v] {
                self.sums[e] += x as i64;
                self.left[e] -= 1;
                if self.sums[e].abs() - self.left[e] > target {
                    ok = false;
                }
            }
            let keep_going = !ok || self.go(k + 1, target, visit);
            for &e in &self.inc[v] {
                self.sums[e] -= x as i64;
                self.left[e] += 1;
            }
            if !keep_going {
                return false;
            }
        }
        self.chi[v] = 1;
        true
    }
}

/// The dual hypergraph as a plain hypergraph (repeated dual edges collapse,
/// which does not change discrepancy).
fn dual_base(h: &Hypergraph) -> Result<Hypergraph> {
    Ok(dual(h)?.hypergraph.base().clone())
}

fn coloring_to_bicoloring(h: &Hypergraph, chi: &[i8]) -> Result<Bicoloring> {
    let blue = chi.iter().map(|&x| (x > 0) as u64).collect();
    let red = chi.iter().map(|&x| (x < 0) as u64).collect();
    Bicoloring::new(h.clone(), blue, red)
}

/// A balanced bicoloring using every edge once, if `disc(H*) = 0`.
pub fn is_monomial_via_dual(h: &Hypergraph) -> Result<Option<Bicoloring>> {
    let d = dual_base(h)?;
    let r = discrepancy(&d)?;
    if r.value != 0 {
        return Ok(None);
    }
    coloring_to_bicoloring(h, &r.witness.chi).map(Some)
}

/// Whether some zero-discrepancy coloring of `H*` induces no zero-discrepancy
/// coloring on a nonempty proper vertex-deleted subhypergraph of `H*`.
///
/// Equivalently: some balanced bicoloring of all edges of `h` has no nonempty
/// proper balanced subset of edges.
pub fn primitive_via_dual(h: &Hypergraph) -> Result<bool> {
    let m = h.num_edges();
    if m > PRIMITIVE_EDGE_CAP {
        return Err(Error::ResourceLimit { resource: "edges", limit: PRIMITIVE_EDGE_CAP as u64, partial: None });
    }
    let d = dual_base(h)?;
    if d.n() > DEFAULT_VERTEX_CAP {
        return Err(Error::ResourceLimit { resource: "vertices", limit: DEFAULT_VERTEX_CAP as u64, partial: None });
    }
    let mut search = Search::new(&d);
    let first = search.order.first().copied();
    let mut seen = 0u64;
    let mut any = false;
    let mut primitive = false;
    let mut overflow = false;
    search.run(0, &mut |chi| {
        // χ and −χ are the same walk up to color swap
        if first.is_some_and(|v| chi[v] < 0) {
            return false;
        }
        seen += 1;
        if seen > COLORING_CAP {
            overflow = true;
            return false;
        }
        any = true;
        if !has_balanced_part(&d, chi) {
            primitive = true;
            return false;
        }
        true
    });
    if primitive {
        return Ok(true);
    }
    if overflow {
        return Err(Error::ResourceLimit { resource: "colorings", limit: COLORING_CAP, partial: None });
    }
    if !any {
        return Err(Error::NotMonomial);
    }
    Ok(false)
}

/// Direct search for a balanced bicoloring using every edge once, without
/// passing through the dual: all `±1` edge assignments with the first edge
/// blue are tried in binary order.
pub fn direct_balanced_coloring(h: &Hypergraph) -> Result<Option<Bicoloring>> {
    let m = h.num_edges();
    if m > PRIMITIVE_EDGE_CAP {
        return Err(Error::ResourceLimit { resource: "edges", limit: PRIMITIVE_EDGE_CAP as u64, partial: None });
    }
    if m == 0 {
        return Ok(None);
    }
    for mask in 0u32..1 << (m - 1) {
        let chi: Vec<i8> = (0..m).map(|e| if e > 0 && mask >> (e - 1) & 1 == 1 { -1 } else { 1 }).collect();
        let mut deg = vec![0i64; h.n()];
        for (e, &x) in h.edges().iter().zip(&chi) {
            for &v in e {
                deg[v] += x as i64;
            }
        }
        if deg.iter().all(|&d| d == 0) {
            return coloring_to_bicoloring(h, &chi).map(Some);
        }
    }
    Ok(None)
}

/// Searches for a nonempty proper set `S` of dual vertices with every dual
/// edge summing to zero over `S`.
fn has_balanced_part(d: &Hypergraph, chi: &[i8]) -> bool {
    let inc = d.vertex_edges();
    let n = d.n();
    // reach[k][e]: sum of |χ| over vertices ≥ k in dual edge e
    let mut reach = vec![vec![0i64; d.num_edges()]; n + 1];
    for k in (0..n).rev() {
        reach[k] = reach[k + 1].clone();
        for &e in &inc[k] {
            reach[k][e] += 1;
        }
    }
    struct Part<'a> {
        chi: &'a [i8],
        inc: &'a [Vec<usize>],
        reach: &'a [Vec<i64>],
        sums: Vec<i64>,
        size: usize,
    }
    impl Part<'_> {
        fn go(&mut self, k: usize) -> bool {
            let n = self.chi.len();
            if self.sums.iter().zip(&self.reach[k]).any(|(s, r)| s.abs() > *r) {
                return false;
            }
            if k == n {
                return self.size > 0 && self.size < n;
            }
            for take in [true, false] {
                if take {
                    for &e in &self.inc[k] {
                        self.sums[e] += self.chi[k] as i64;
                    }
                    self.size += 1;
                }
                let found = self.go(k + 1);
                if take {
                    for &e in &self.inc[k] {
                        self.sums[e] -= self.chi[k] as i64;
                    }
                    self.size -= 1;
                }
                if found {
                    return true;
                }
            }
            false
        }
    }
    Part { chi, inc: &inc, reach: &reach, sums: vec![0; d.num_edges()], size: 0 }.go(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_graph, cycle, tight_pair};
    use crate::walks::is_balanced;

    fn brute_disc(h: &Hypergraph) -> u64 {
        (0u32..1 << h.n())
            .map(|mask| {
                let chi: Vec<i8> = (0..h.n()).map(|v| if mask >> v & 1 == 1 { -1 } else { 1 }).collect();
                Coloring { chi }.max_imbalance(h)
            })
            .min()
            .unwrap()
    }

    #[test]
    fn single_edges() {
        let r = discrepancy(&Hypergraph::new(2, vec![vec![0, 1]]).unwrap()).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.witness.chi, vec![1, -1]);
        let r = discrepancy(&Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap()).unwrap();
        assert_eq!(r.value, 1);
    }

    #[test]
    fn dual_of_tight_pair() {
        let h = tight_pair();
        let d = dual(&h).unwrap();
        assert_eq!(d.hypergraph.total_edges(), 6);
        let r = discrepancy(d.hypergraph.base()).unwrap();
        assert_eq!(r.value, 0);
        // edges 012 and 345 on one side, 034 and 125 on the other
        let side = |e: &[usize]| r.witness.chi[h.edge_index(e).unwrap()];
        assert_eq!(side(&[0, 1, 2]), side(&[3, 4, 5]));
        assert_eq!(side(&[0, 3, 4]), side(&[1, 2, 5]));
        assert_ne!(side(&[0, 1, 2]), side(&[0, 3, 4]));
    }

    #[test]
    fn matches_brute_force() {
        for h in [complete_graph(4), complete_graph(5), cycle(5), tight_pair()] {
            assert_eq!(discrepancy(&h).unwrap().value, brute_disc(&h));
        }
    }

    #[test]
    fn monomial_via_dual() {
        let c = is_monomial_via_dual(&cycle(4)).unwrap().unwrap();
        assert!(is_balanced(&c));
        let k = is_monomial_via_dual(&complete_graph(5)).unwrap().unwrap();
        assert!(is_balanced(&k));
        assert_eq!(k.total(crate::walks::Color::Blue), 5);
        let sunflower = Hypergraph::new(7, vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6]]).unwrap();
        assert!(is_monomial_via_dual(&sunflower).unwrap().is_none());
        assert!(direct_balanced_coloring(&sunflower).unwrap().is_none());
        assert!(is_balanced(&direct_balanced_coloring(&complete_graph(5)).unwrap().unwrap()));
    }

    #[test]
    fn primitive_examples() {
        assert!(primitive_via_dual(&cycle(4)).unwrap());
        let two = cycle(4).disjoint_union(&cycle(4));
        assert!(!primitive_via_dual(&two).unwrap());
        assert!(primitive_via_dual(&tight_pair()).unwrap());
        assert_eq!(primitive_via_dual(&cycle(5)), Err(Error::NotMonomial));
    }

    #[test]
    fn vertex_cap() {
        let h = cycle(60);
        assert!(matches!(discrepancy(&h), Err(Error::ResourceLimit { .. })));
    }
}
