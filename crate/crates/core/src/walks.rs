//! Balanced bicolorings, kernel vectors, binomials and monomial walks.
//!
//! A [`WalkVector`] is the working representation: an integer vector indexed
//! by edges whose positive part is the blue multiset and whose negative part
//! is the red multiset. Bicolorings, binomials and walk sequences are views of
//! the same object.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Red,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Blue => Color::Red,
            Color::Red => Color::Blue,
        }
    }
}

/// Blue and red edge multisets over a host, stored as per-edge counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bicoloring {
    host: Hypergraph,
    blue: Vec<u64>,
    red: Vec<u64>,
}

impl Bicoloring {
    pub fn new(host: Hypergraph, blue: Vec<u64>, red: Vec<u64>) -> Result<Self> {
        let m = host.num_edges();
        if blue.len() != m || red.len() != m {
            return Err(Error::InvalidInput(format!("bicoloring counts must have one entry per edge ({m})")));
        }
        Ok(Bicoloring { host, blue, red })
    }

    /// Builds counts from edge-index lists; repeated indices add multiplicity.
    pub fn from_edge_lists(host: Hypergraph, blue: &[usize], red: &[usize]) -> Result<Self> {
        let m = host.num_edges();
        let mut b = vec![0u64; m];
        let mut r = vec![0u64; m];
        for (list, counts) in [(blue, &mut b), (red, &mut r)] {
            for &e in list {
                if e >= m {
                    return Err(Error::InvalidInput(format!("edge index {e} out of range ({m} edges)")));
                }
                counts[e] += 1;
            }
        }
        Ok(Bicoloring { host, blue: b, red: r })
    }

    pub fn host(&self) -> &Hypergraph {
        &self.host
    }

    pub fn blue(&self) -> &[u64] {
        &self.blue
    }

    pub fn red(&self) -> &[u64] {
        &self.red
    }

    pub fn count(&self, color: Color) -> &[u64] {
        match color {
            Color::Blue => &self.blue,
            Color::Red => &self.red,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.blue.iter().chain(&self.red).all(|&c| c == 0)
    }

    pub fn total(&self, color: Color) -> u64 {
        self.count(color).iter().sum()
    }

    /// Per-vertex (blue degree, red degree), counted with multiplicity.
    pub fn degrees(&self) -> (Vec<u64>, Vec<u64>) {
        let n = self.host.n();
        let (mut db, mut dr) = (vec![0u64; n], vec![0u64; n]);
        for (i, e) in self.host.edges().iter().enumerate() {
            for &v in e {
                db[v] += self.blue[i];
                dr[v] += self.red[i];
            }
        }
        (db, dr)
    }

    /// The first vertex violating the balancing condition, if any.
    pub fn first_unbalanced(&self) -> Option<(usize, u64, u64)> {
        let (db, dr) = self.degrees();
        (0..self.host.n()).find(|&v| db[v] != dr[v]).map(|v| (v, db[v], dr[v]))
    }

    /// Blue minus red, per edge.
    pub fn difference(&self) -> Result<Vec<i64>> {
        self.blue
            .iter()
            .zip(&self.red)
            .map(|(&b, &r)| {
                let b = i64::try_from(b).map_err(|_| Error::Overflow)?;
                let r = i64::try_from(r).map_err(|_| Error::Overflow)?;
                b.checked_sub(r).ok_or(Error::Overflow)
            })
            .collect()
    }
}

/// Every vertex has equal blue and red degree.
pub fn is_balanced(c: &Bicoloring) -> bool {
    c.first_unbalanced().is_none()
}

fn not_balanced(c: &Bicoloring) -> Option<Error> {
    c.first_unbalanced().map(|(vertex, blue, red)| Error::NotBalanced { vertex, blue, red })
}

/// Flips `v` so that its first nonzero entry is positive.
pub fn sign_normalize(v: &mut [i64]) {
    if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}

/// Sum of positive entries.
pub fn degree_of(v: &[i64]) -> u64 {
    v.iter().filter(|&&x| x > 0).map(|&x| x as u64).sum()
}

/// A sign-normalized element of the integer kernel of the incidence matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct WalkVector {
    host: Hypergraph,
    coeffs: Vec<i64>,
}

impl fmt::Debug for WalkVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WalkVector{:?}", self.coeffs)
    }
}

impl WalkVector {
    /// Checks kernel membership and sign-normalizes.
    pub fn new(host: Hypergraph, mut coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != host.num_edges() {
            return Err(Error::HostMismatch);
        }
        if !host.in_kernel(&coeffs) {
            return Err(Error::NotInKernel);
        }
        sign_normalize(&mut coeffs);
        Ok(WalkVector { host, coeffs })
    }

    /// Keeps `coeffs` as given; only the length is checked. Operations that
    /// need the kernel invariant validate it themselves.
    pub fn from_raw(host: Hypergraph, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != host.num_edges() {
            return Err(Error::HostMismatch);
        }
        Ok(WalkVector { host, coeffs })
    }

    pub fn host(&self) -> &Hypergraph {
        &self.host
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&x| x == 0)
    }

    pub fn degree(&self) -> u64 {
        degree_of(&self.coeffs)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| self.coeffs[i] != 0).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.coeffs.iter().all(|x| x.abs() <= 1)
    }

    /// Positive entries blue, negative entries red.
    pub fn to_bicoloring(&self) -> Bicoloring {
        let blue = self.coeffs.iter().map(|&x| x.max(0) as u64).collect();
        let red = self.coeffs.iter().map(|&x| (-x).max(0) as u64).collect();
        Bicoloring { host: self.host.clone(), blue, red }
    }

    pub fn to_binomial(&self) -> Binomial {
        let mut plus = BTreeMap::new();
        let mut minus = BTreeMap::new();
        for (i, &x) in self.coeffs.iter().enumerate() {
            if x > 0 {
                plus.insert(i, x as u64);
            } else if x < 0 {
                minus.insert(i, x.unsigned_abs());
            }
        }
        Binomial { host: self.host.clone(), plus, minus }
    }

    /// Walk degree of every vertex: the number of walk edges through it,
    /// counted with multiplicity and ignoring color.
    pub fn vertex_degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.host.n()];
        for (e, &x) in self.host.edges().iter().zip(&self.coeffs) {
            for &v in e {
                deg[v] += x.unsigned_abs();
            }
        }
        deg
    }
}

/// Blue minus red, sign-normalized.
pub fn to_walk_vector(c: &Bicoloring) -> Result<WalkVector> {
    if let Some(err) = not_balanced(c) {
        return Err(err);
    }
    let mut coeffs = c.difference()?;
    sign_normalize(&mut coeffs);
    Ok(WalkVector { host: c.host.clone(), coeffs })
}

/// A pure difference of two monomials in the edge variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binomial {
    host: Hypergraph,
    plus: BTreeMap<usize, u64>,
    minus: BTreeMap<usize, u64>,
}

impl Binomial {
    pub fn new(host: Hypergraph, plus: BTreeMap<usize, u64>, minus: BTreeMap<usize, u64>) -> Result<Self> {
        let m = host.num_edges();
        if let Some(&e) = plus.keys().chain(minus.keys()).find(|&&e| e >= m) {
            return Err(Error::InvalidInput(format!("edge index {e} out of range ({m} edges)")));
        }
        let strip = |t: BTreeMap<usize, u64>| t.into_iter().filter(|&(_, k)| k > 0).collect();
        Ok(Binomial { host, plus: strip(plus), minus: strip(minus) })
    }

    pub fn host(&self) -> &Hypergraph {
        &self.host
    }

    pub fn plus(&self) -> &BTreeMap<usize, u64> {
        &self.plus
    }

    pub fn minus(&self) -> &BTreeMap<usize, u64> {
        &self.minus
    }

    /// Exponent vector of `plus` minus that of `minus`.
    pub fn exponent_difference(&self) -> Result<Vec<i64>> {
        let mut v = vec![0i64; self.host.num_edges()];
        for (&e, &k) in &self.plus {
            let k = i64::try_from(k).map_err(|_| Error::Overflow)?;
            v[e] = v[e].checked_add(k).ok_or(Error::Overflow)?;
        }
        for (&e, &k) in &self.minus {
            let k = i64::try_from(k).map_err(|_| Error::Overflow)?;
            v[e] = v[e].checked_sub(k).ok_or(Error::Overflow)?;
        }
        Ok(v)
    }

    /// Divides out the common monomial factor.
    pub fn reduced(&self) -> Binomial {
        let mut plus = self.plus.clone();
        let mut minus = self.minus.clone();
        for (e, k) in plus.iter_mut() {
            if let Some(j) = minus.get_mut(e) {
                let common = (*k).min(*j);
                *k -= common;
                *j -= common;
            }
        }
        plus.retain(|_, k| *k > 0);
        minus.retain(|_, k| *k > 0);
        Binomial { host: self.host.clone(), plus, minus }
    }

    pub fn to_walk_vector(&self) -> Result<WalkVector> {
        WalkVector::new(self.host.clone(), self.exponent_difference()?)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, mono: &BTreeMap<usize, u64>) -> fmt::Result {
    if mono.is_empty() {
        return write!(f, "1");
    }
    for (k, (e, &exp)) in mono.iter().enumerate() {
        if k > 0 {
            write!(f, "*")?;
        }
        write!(f, "t_{{e{e}}}")?;
        if exp > 1 {
            write!(f, "^{exp}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, &self.plus)?;
        write!(f, " - ")?;
        write_monomial(f, &self.minus)
    }
}

/// Both monomials map to the same vertex monomial.
pub fn in_ideal(b: &Binomial) -> bool {
    match b.exponent_difference() {
        Ok(v) => b.host.in_kernel(&v),
        Err(_) => false,
    }
}

/// An ordered edge walk; position 0 is blue and colors alternate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkSequence {
    pub steps: Vec<(usize, Color)>,
}

impl WalkSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn to_bicoloring(&self, host: &Hypergraph) -> Result<Bicoloring> {
        let pick = |c: Color| -> Vec<usize> { self.steps.iter().filter(|s| s.1 == c).map(|s| s.0).collect() };
        Bicoloring::from_edge_lists(host.clone(), &pick(Color::Blue), &pick(Color::Red))
    }
}

/// Even length, alternating colors, every edge after the first meets an
/// earlier one, and the induced coloring is balanced.
pub fn sequence_check(host: &Hypergraph, s: &WalkSequence) -> bool {
    if s.is_empty() || !s.len().is_multiple_of(2) {
        return false;
    }
    let m = host.num_edges();
    let mut covered = vec![false; host.n()];
    for (pos, &(e, color)) in s.steps.iter().enumerate() {
        if e >= m {
            return false;
        }
        let expected = if pos % 2 == 0 { Color::Blue } else { Color::Red };
        if color != expected {
            return false;
        }
        let edge = host.edge(e);
        if pos > 0 && !edge.iter().any(|&v| covered[v]) {
            return false;
        }
        for &v in edge {
            covered[v] = true;
        }
    }
    s.to_bicoloring(host).map(|c| is_balanced(&c)).unwrap_or(false)
}

struct Decomposer<'a> {
    host: &'a Hypergraph,
    remaining: [Vec<u64>; 2],
    /// blue minus red degree of each vertex within the current walk
    imbalance: Vec<i64>,
    touched: Vec<usize>,
    steps: Vec<(usize, Color)>,
}

impl Decomposer<'_> {
    fn slot(color: Color) -> usize {
        match color {
            Color::Blue => 0,
            Color::Red => 1,
        }
    }

    fn take(&mut self, e: usize, color: Color) {
        self.remaining[Self::slot(color)][e] -= 1;
        let delta = if color == Color::Blue { 1 } else { -1 };
        for &v in self.host.edge(e) {
            self.imbalance[v] += delta;
            self.touched.push(v);
        }
        self.steps.push((e, color));
    }

    fn closed(&self) -> bool {
        self.touched.iter().all(|&v| self.imbalance[v] == 0)
    }

    fn next_edge(&self, want: Color) -> Option<usize> {
        let pool = &self.remaining[Self::slot(want)];
        let needs = |v: usize| match want {
            Color::Blue => self.imbalance[v] < 0,
            Color::Red => self.imbalance[v] > 0,
        };
        (0..self.host.num_edges()).find(|&e| pool[e] > 0 && self.host.edge(e).iter().any(|&v| needs(v)))
    }
}

/// Splits a balanced bicoloring into monomial walks.
///
/// Each walk starts from the lowest-index remaining blue edge. At every later
/// step it takes the lowest-index remaining edge of the required color that
/// contains a vertex whose imbalance that color reduces. A walk closes as soon
/// as all its vertices balance. The outputs use every colored edge of `c`
/// exactly once.
pub fn decompose(c: &Bicoloring) -> Result<Vec<WalkSequence>> {
    let host = &c.host;
    if host.num_edges() > 0 && host.uniformity().is_none() {
        return Err(Error::NotUniform);
    }
    if let Some(err) = not_balanced(c) {
        return Err(err);
    }
    let mut st = Decomposer {
        host,
        remaining: [c.blue.clone(), c.red.clone()],
        imbalance: vec![0; host.n()],
        touched: Vec::new(),
        steps: Vec::new(),
    };
    let mut walks = Vec::new();

    while let Some(start) = st.remaining[0].iter().position(|&k| k > 0) {
        st.touched.clear();
        st.take(start, Color::Blue);
        while !st.closed() {
            let want = if st.steps.len().is_multiple_of(2) { Color::Blue } else { Color::Red };
            match st.next_edge(want) {
                Some(e) => st.take(e, want),
                None => {
                    return Err(Error::InvalidInput(
                        "walk could not be extended; input is not a balanced uniform coloring".into(),
                    ))
                }
            }
        }
        walks.push(WalkSequence { steps: std::mem::take(&mut st.steps) });
    }
    let remaining = st.remaining;
    if remaining[1].iter().any(|&k| k > 0) {
        return Err(Error::InvalidInput("red edges left without blue partners".into()));
    }
    Ok(walks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Hypergraph {
        Hypergraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap()
    }

    fn idx(h: &Hypergraph, e: &[usize]) -> usize {
        h.edge_index(e).unwrap()
    }

    fn matching_pair() -> Hypergraph {
        Hypergraph::new(6, vec![vec![0, 1, 2], vec![3, 4, 5], vec![0, 3, 4], vec![1, 2, 5]]).unwrap()
    }

    #[test]
    fn alternating_cycle_is_balanced() {
        let h = c4();
        let c = Bicoloring::from_edge_lists(
            h.clone(),
            &[idx(&h, &[0, 1]), idx(&h, &[2, 3])],
            &[idx(&h, &[1, 2]), idx(&h, &[0, 3])],
        )
        .unwrap();
        assert!(is_balanced(&c));
        let bad = Bicoloring::from_edge_lists(
            h.clone(),
            &[idx(&h, &[0, 1]), idx(&h, &[1, 2])],
            &[idx(&h, &[2, 3]), idx(&h, &[0, 3])],
        )
        .unwrap();
        assert!(!is_balanced(&bad));
        let (db, dr) = bad.degrees();
        assert_eq!((db[1], dr[1]), (2, 0));
    }

    #[test]
    fn three_uniform_pair_is_balanced() {
        let h = matching_pair();
        let c = Bicoloring::from_edge_lists(
            h.clone(),
            &[idx(&h, &[0, 1, 2]), idx(&h, &[3, 4, 5])],
            &[idx(&h, &[0, 3, 4]), idx(&h, &[1, 2, 5])],
        )
        .unwrap();
        assert!(is_balanced(&c));
    }

    #[test]
    fn walk_vector_of_cycle() {
        let h = c4();
        // canonical order [[0,1],[0,3],[1,2],[2,3]]
        assert_eq!(h.edges(), &[vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
        let c = Bicoloring::from_edge_lists(h.clone(), &[0, 3], &[1, 2]).unwrap();
        assert_eq!(to_walk_vector(&c).unwrap().coeffs(), &[1, -1, -1, 1]);
        // swapping colors gives the same normalized vector
        let swapped = Bicoloring::from_edge_lists(h, &[1, 2], &[0, 3]).unwrap();
        assert_eq!(to_walk_vector(&swapped).unwrap().coeffs(), &[1, -1, -1, 1]);
    }

    #[test]
    fn same_edge_in_both_colors_cancels() {
        let h = c4();
        let base = Bicoloring::from_edge_lists(h.clone(), &[0, 3], &[1, 2]).unwrap();
        let padded = Bicoloring::from_edge_lists(h, &[0, 3, 2], &[1, 2, 2]).unwrap();
        assert!(is_balanced(&padded));
        assert_eq!(to_walk_vector(&padded).unwrap(), to_walk_vector(&base).unwrap());
        assert_eq!(to_walk_vector(&padded).unwrap().coeffs()[2], -1);
    }

    #[test]
    fn not_balanced_error() {
        let h = c4();
        let c = Bicoloring::from_edge_lists(h, &[0], &[1]).unwrap();
        assert!(matches!(to_walk_vector(&c), Err(Error::NotBalanced { .. })));
    }

    #[test]
    fn binomial_display_and_membership() {
        let h = c4();
        let v = WalkVector::new(h.clone(), vec![1, -1, -1, 1]).unwrap();
        let b = v.to_binomial();
        assert_eq!(b.to_string(), "t_{e0}*t_{e3} - t_{e1}*t_{e2}");
        assert!(in_ideal(&b));
        let wrong = Binomial::new(h, BTreeMap::from([(0, 1), (1, 1)]), BTreeMap::from([(2, 1), (3, 1)])).unwrap();
        assert!(!in_ideal(&wrong));
        assert_eq!(b.to_walk_vector().unwrap(), v);
    }

    #[test]
    fn reduced_binomial_drops_common_factor() {
        let h = c4();
        let b = Binomial::new(h, BTreeMap::from([(0, 1), (3, 1), (2, 1)]), BTreeMap::from([(1, 1), (2, 2)])).unwrap();
        let r = b.reduced();
        assert_eq!(r.plus(), &BTreeMap::from([(0, 1), (3, 1)]));
        assert_eq!(r.minus(), &BTreeMap::from([(1, 1), (2, 1)]));
        assert_eq!(b.exponent_difference().unwrap(), r.exponent_difference().unwrap());
    }

    #[test]
    fn decompose_single_cycle() {
        let h = c4();
        let c = Bicoloring::from_edge_lists(h.clone(), &[0, 3], &[1, 2]).unwrap();
        let walks = decompose(&c).unwrap();
        assert_eq!(walks.len(), 1);
        assert_eq!(walks[0].len(), 4);
        assert!(sequence_check(&h, &walks[0]));
        assert_eq!(walks[0].steps, vec![(0, Color::Blue), (1, Color::Red), (3, Color::Blue), (2, Color::Red)]);
    }

    #[test]
    fn decompose_two_disjoint_cycles() {
        let h = c4().disjoint_union(&c4());
        let c = Bicoloring::from_edge_lists(h.clone(), &[0, 3, 4, 7], &[1, 2, 5, 6]).unwrap();
        let walks = decompose(&c).unwrap();
        assert_eq!(walks.len(), 2);
        assert!(walks.iter().all(|w| sequence_check(&h, w)));
    }

    #[test]
    fn decompose_doubled_cycle() {
        let h = c4();
        let c = Bicoloring::new(h.clone(), vec![2, 0, 0, 2], vec![0, 2, 2, 0]).unwrap();
        let walks = decompose(&c).unwrap();
        let total: usize = walks.iter().map(|w| w.len()).sum();
        assert_eq!(total, 8);
        let mut blue = vec![0u64; 4];
        let mut red = vec![0u64; 4];
        for w in &walks {
            assert!(sequence_check(&h, w));
            let b = w.to_bicoloring(&h).unwrap();
            for i in 0..4 {
                blue[i] += b.blue()[i];
                red[i] += b.red()[i];
            }
        }
        assert_eq!((blue.as_slice(), red.as_slice()), (c.blue(), c.red()));
    }

    #[test]
    fn decompose_rejects_non_uniform() {
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![0, 1, 2], vec![2]]).unwrap();
        let c = Bicoloring::from_edge_lists(h, &[1], &[0, 2]).unwrap();
        assert!(is_balanced(&c));
        assert_eq!(decompose(&c), Err(Error::NotUniform));
    }

    #[test]
    fn sequence_check_rejects_disconnected_step() {
        let h = c4();
        let s = WalkSequence { steps: vec![(0, Color::Blue), (3, Color::Red), (1, Color::Blue), (2, Color::Red)] };
        assert!(!sequence_check(&h, &s));
        let odd = WalkSequence { steps: vec![(0, Color::Blue)] };
        assert!(!sequence_check(&h, &odd));
    }
}
