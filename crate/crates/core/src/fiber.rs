//! Fibers of the monomial map and seeded walks along Markov moves.
//!
//! Randomness comes from one generator, ChaCha8 seeded with
//! `seed_from_u64(seed)` (algorithm id [`RNG_ALGORITHM`]), so traces replay
//! exactly across platforms.

use std::collections::{HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::walks::WalkVector;

pub const RNG_ALGORITHM: &str = "chacha8";

/// Default cap on fiber points.
pub const DEFAULT_POINT_CAP: u64 = 1_000_000;

/// A nonnegative edge count vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberPoint {
    host: Hypergraph,
    counts: Vec<u64>,
}

impl FiberPoint {
    pub fn new(host: Hypergraph, counts: Vec<u64>) -> Result<Self> {
        if counts.len() != host.num_edges() {
            return Err(Error::InvalidInput(format!(
                "fiber point has {} counts, expected {}",
                counts.len(),
                host.num_edges()
            )));
        }
        Ok(FiberPoint { host, counts })
    }

    pub fn host(&self) -> &Hypergraph {
        &self.host
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }
}

impl Serialize for FiberPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.counts.serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    pub margin: Vec<u64>,
    /// Points in lexicographic order of their counts.
    pub points: Vec<FiberPoint>,
}

impl Fiber {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// `A · counts`.
pub fn margin(p: &FiberPoint) -> Vec<u64> {
    let mut b = vec![0u64; p.host.n()];
    for (e, &c) in p.host.edges().iter().zip(&p.counts) {
        for &v in e {
            b[v] += c;
        }
    }
    b
}

pub fn enumerate_fiber(h: &Hypergraph, b: &[u64]) -> Result<Fiber> {
    enumerate_fiber_capped(h, b, DEFAULT_POINT_CAP)
}

/// All nonnegative `u` with `A · u = b`, by backtracking over edges.
///
/// An edge takes at most the smallest residual margin over its vertices, and
/// once an edge is the last one touching a vertex that vertex's residual must
/// be exactly used up.
pub fn enumerate_fiber_capped(h: &Hypergraph, b: &[u64], cap: u64) -> Result<Fiber> {
    if b.len() != h.n() {
        return Err(Error::InvalidInput(format!("margin has {} entries, expected {}", b.len(), h.n())));
    }
    // last[v]: index of the last edge containing v
    let mut last = vec![None; h.n()];
    for (i, e) in h.edges().iter().enumerate() {
        for &v in e {
            last[v] = Some(i);
        }
    }
    if (0..h.n()).any(|v| last[v].is_none() && b[v] != 0) {
        return Ok(Fiber { margin: b.to_vec(), points: Vec::new() });
    }
    let mut st = Enum { h, last: &last, residual: b.to_vec(), counts: vec![0; h.num_edges()], found: Vec::new(), cap };
    if !st.go(0) {
        return Err(Error::ResourceLimit {
            resource: "fiber points",
            limit: cap,
            partial: Some(st.found.iter().map(|c| c.iter().map(|&x| x as i64).collect()).collect()),
        });
    }
    let mut counts = st.found;
    counts.sort();
    Ok(Fiber {
        margin: b.to_vec(),
        points: counts.into_iter().map(|counts| FiberPoint { host: h.clone(), counts }).collect(),
    })
}

struct Enum<'a> {
    h: &'a Hypergraph,
    last: &'a [Option<usize>],
    residual: Vec<u64>,
    counts: Vec<u64>,
    found: Vec<Vec<u64>>,
    cap: u64,
}

impl Enum<'_> {
    /// Returns false when the cap is hit.
    fn go(&mut self, i: usize) -> bool {
        if i == self.h.num_edges() {
            if self.found.len() as u64 >= self.cap {
                return false;
            }
            self.found.push(self.counts.clone());
            return true;
        }
        let e = self.h.edge(i);
        let max = e.iter().map(|&v| self.residual[v]).min().unwrap_or(0);
        // vertices closed by this edge force its value
        let forced: Option<u64> = e
            .iter()
            .filter(|&&v| self.last[v] == Some(i))
            .map(|&v| self.residual[v])
            .reduce(|a, b| if a == b { a } else { u64::MAX });
        let range = match forced {
            Some(x) if x <= max => x..=x,
            Some(_) => return true,
            None => 0..=max,
        };
        for x in range {
            for &v in e {
                self.residual[v] -= x;
            }
            self.counts[i] = x;
            let ok = self.go(i + 1);
            for &v in e {
                self.residual[v] += x;
            }
            self.counts[i] = 0;
            if !ok {
                return false;
            }
        }
        true
    }
}

/// `p + direction · m`, or `None` if an entry would go negative.
pub fn apply_move(p: &FiberPoint, m: &WalkVector, direction: i8) -> Result<Option<FiberPoint>> {
    if m.host() != &p.host {
        return Err(Error::HostMismatch);
    }
    Ok(shift(&p.counts, m.coeffs(), direction).map(|counts| FiberPoint { host: p.host.clone(), counts }))
}

fn shift(counts: &[u64], m: &[i64], direction: i8) -> Option<Vec<u64>> {
    counts
        .iter()
        .zip(m)
        .map(|(&c, &x)| {
            let delta = x.checked_mul(direction as i64)?;
            if delta >= 0 {
                c.checked_add(delta as u64)
            } else {
                c.checked_sub(delta.unsigned_abs())
            }
        })
        .collect()
}

/// A seeded walk of `steps` proposals.
///
/// Each step draws `k` uniformly from `0..2·|moves|`; the proposal is move
/// `k / 2`, added when `k` is even and subtracted when odd. Infeasible
/// proposals leave the chain in place. The trace has `steps + 1` points.
pub fn random_walk(p: &FiberPoint, moves: &[WalkVector], steps: usize, seed: u64) -> Result<Vec<FiberPoint>> {
    if moves.iter().any(|m| m.host() != &p.host) {
        return Err(Error::HostMismatch);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trace = Vec::with_capacity(steps + 1);
    let mut cur = p.counts.clone();
    trace.push(p.clone());
    for _ in 0..steps {
        if !moves.is_empty() {
            let k = rng.gen_range(0..2 * moves.len());
            let direction = if k % 2 == 0 { 1 } else { -1 };
            if let Some(next) = shift(&cur, moves[k / 2].coeffs(), direction) {
                cur = next;
            }
        }
        trace.push(FiberPoint { host: p.host.clone(), counts: cur.clone() });
    }
    Ok(trace)
}

/// Whether the move graph on the fiber's points is connected.
pub fn fiber_connected(f: &Fiber, moves: &[WalkVector]) -> bool {
    if f.points.len() <= 1 {
        return true;
    }
    let index: HashMap<&[u64], usize> = f.points.iter().enumerate().map(|(i, p)| (p.counts.as_slice(), i)).collect();
    let mut seen = vec![false; f.points.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for m in moves {
            for direction in [1, -1] {
                let Some(next) = shift(&f.points[i].counts, m.coeffs(), direction) else { continue };
                if let Some(&j) = index.get(next.as_slice()) {
                    if !seen[j] {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_graph, cycle};
    use crate::graver::{graver_basis, GraverConfig};

    fn point(h: &Hypergraph, edges: &[&[usize]]) -> FiberPoint {
        let mut c = vec![0; h.num_edges()];
        for e in edges {
            c[h.edge_index(e).unwrap()] += 1;
        }
        FiberPoint::new(h.clone(), c).unwrap()
    }

    #[test]
    fn margins() {
        let c4 = cycle(4);
        let p = FiberPoint::new(c4.clone(), vec![1, 0, 0, 1]).unwrap();
        assert_eq!(margin(&p), vec![1, 1, 1, 1]);
        assert_eq!(margin(&FiberPoint::new(c4, vec![0; 4]).unwrap()), vec![0; 4]);
        let k5 = complete_graph(5);
        assert_eq!(margin(&point(&k5, &[&[0, 2], &[1, 3]])), vec![1, 1, 1, 1, 0]);
    }

    #[test]
    fn small_fibers() {
        let c4 = cycle(4);
        let f = enumerate_fiber(&c4, &[1, 1, 1, 1]).unwrap();
        assert_eq!(f.len(), 2);
        let k5 = complete_graph(5);
        let f = enumerate_fiber(&k5, &[1, 1, 1, 1, 0]).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.points.iter().all(|p| margin(p) == vec![1, 1, 1, 1, 0]));
        let f = enumerate_fiber(&k5, &[0; 5]).unwrap();
        assert_eq!(f.len(), 1);
        assert!(enumerate_fiber(&c4, &[1, 0, 0, 0]).unwrap().is_empty());
    }

    #[test]
    fn fiber_cap() {
        let k5 = complete_graph(5);
        let r = enumerate_fiber_capped(&k5, &[4, 4, 4, 4, 4], 5);
        assert!(matches!(r, Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn moves_and_walks() {
        let c4 = cycle(4);
        let g = graver_basis(&c4, &GraverConfig::default()).unwrap();
        let m = &g.elements[0];
        let start = point(&c4, &[&[0, 1], &[2, 3]]);
        let other = point(&c4, &[&[0, 3], &[1, 2]]);
        let moved = apply_move(&start, m, 1).unwrap().or(apply_move(&start, m, -1).unwrap()).unwrap();
        assert_eq!(moved, other);
        assert!(apply_move(&start, m, 1).unwrap().is_none() || apply_move(&start, m, -1).unwrap().is_none());
        let back = apply_move(&moved, m, if apply_move(&start, m, 1).unwrap().is_some() { -1 } else { 1 });
        assert_eq!(back.unwrap().unwrap(), start);

        let a = random_walk(&start, &g.elements, 10, 7).unwrap();
        let b = random_walk(&start, &g.elements, 10, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 11);
        assert!(a.iter().all(|p| *p == start || *p == other));
        let still = random_walk(&start, &[], 5, 1).unwrap();
        assert!(still.iter().all(|p| *p == start));

        let f = enumerate_fiber(&c4, &[1, 1, 1, 1]).unwrap();
        assert!(fiber_connected(&f, &g.elements));
        assert!(!fiber_connected(&f, &[]));
    }
}
