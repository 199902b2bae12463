//! Sparse supports whose monomial and primitive status reduce to counting.
//!
//! Two templates are recognized. A *matching pair* is a uniform hypergraph
//! whose edges split into two edge-disjoint perfect matchings. A *bouquet* is
//! a family of sunflowers plus a perfect matching on the non-core vertices;
//! deleting the cores leaves components `G_j`, and a balanced bicoloring
//! exists iff the components can be split into two sides whose weighted petal
//! counts agree at every core vertex.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{is_connected, remove_core, Component, Hypergraph, Multihypergraph};
use crate::walks::Bicoloring;

/// Edge indices of the two perfect matchings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingPair {
    pub red: Vec<usize>,
    pub blue: Vec<usize>,
}

/// Splits the edges of `h` into two perfect matchings, if possible.
///
/// Every vertex must lie in exactly two edges, and those two edges must get
/// different colors. The lowest edge of each linked class goes to `red`.
pub fn recognize_matching_pair(h: &Hypergraph) -> Option<MatchingPair> {
    if h.num_edges() == 0 || h.uniformity().is_none() {
        return None;
    }
    let inc = h.vertex_edges();
    if inc.iter().any(|es| es.len() != 2) {
        return None;
    }
    let m = h.num_edges();
    let mut side: Vec<Option<bool>> = vec![None; m];
    for start in 0..m {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut stack = vec![start];
        while let Some(e) = stack.pop() {
            let s = side[e].expect("visited edges are colored");
            for &v in h.edge(e) {
                for &f in &inc[v] {
                    if f == e {
                        continue;
                    }
                    match side[f] {
                        None => {
                            side[f] = Some(!s);
                            stack.push(f);
                        }
                        Some(t) if t == s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
    }
    let (blue, red): (Vec<usize>, Vec<usize>) = (0..m).partition(|&e| side[e] == Some(true));
    Some(MatchingPair { red, blue })
}

/// Primitivity of a walk supported on a matching pair: the support must be
/// connected and no edge may be repeated.
pub fn matching_pair_primitive(h: &Hypergraph, m: &Multihypergraph) -> Result<bool> {
    recognize_matching_pair(h).ok_or(Error::NotMatchingPair)?;
    if m.base() != h {
        return Err(Error::HostMismatch);
    }
    Ok(is_connected(h) && m.is_simple())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BouquetKind {
    /// One sunflower.
    Sunflower,
    /// Several sunflowers with pairwise disjoint cores.
    PartitionedCore,
    /// Several sunflowers whose cores may overlap.
    RelaxedCore,
}

impl BouquetKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BouquetKind::Sunflower => "sunflower",
            BouquetKind::PartitionedCore => "partitioned-core",
            BouquetKind::RelaxedCore => "relaxed-core",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sunflower {
    pub core: Vec<usize>,
    /// Edge indices of the petals.
    pub petals: Vec<usize>,
}

/// Side of a component in a bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    J,
    K,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SunflowerDecomposition {
    pub host: Hypergraph,
    pub kind: BouquetKind,
    pub sunflowers: Vec<Sunflower>,
    /// Edge indices of the matching on the non-core vertices.
    pub matching: Vec<usize>,
    /// Union of all sunflower cores.
    pub core: Vec<usize>,
    /// Components `G_j` of `H − C`, ordered by smallest vertex.
    pub components: Vec<Component>,
    /// `|G_j|`: petals whose remnant lies in `G_j`.
    pub petal_counts: Vec<u64>,
    /// `counts[i][j]`: petals of sunflower `i` whose remnant lies in `G_j`.
    pub counts: Vec<Vec<u64>>,
    /// For each core vertex `v`, the sunflowers whose core contains `v`.
    pub core_index: BTreeMap<usize, Vec<usize>>,
}

impl SunflowerDecomposition {
    /// Builds the decomposition induced by choosing `matching` as the
    /// matching edges of `host`.
    pub fn from_matching(host: &Hypergraph, matching: &[usize]) -> Result<Self> {
        build(host, matching).map_err(Error::InvalidDecomposition)
    }

    /// Checks every structural invariant by rebuilding from the matching.
    pub fn validate(&self) -> Result<()> {
        let rebuilt = Self::from_matching(&self.host, &self.matching)?;
        if &rebuilt != self {
            return Err(Error::InvalidDecomposition(
                "fields disagree with the decomposition induced by the matching".into(),
            ));
        }
        Ok(())
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    /// Components containing a vertex of sunflower `i`.
    pub fn touching(&self, i: usize) -> Vec<usize> {
        (0..self.components.len()).filter(|&j| self.counts[i][j] > 0).collect()
    }

    /// The index sets `(𝒥(S_i), 𝒦(S_i))` of every sunflower under `partition`.
    pub fn index_sets(&self, partition: &[Side]) -> Vec<(Vec<usize>, Vec<usize>)> {
        (0..self.sunflowers.len())
            .map(|i| self.touching(i).into_iter().partition(|&j| partition[j] == Side::J))
            .collect()
    }

    /// One row per core vertex `v`: the number of petals through `v` whose
    /// remnant lies in each component. Identical rows are merged.
    pub fn balance_rows(&self) -> Vec<Vec<u64>> {
        let mut rows: Vec<Vec<u64>> = self
            .core_index
            .values()
            .map(|sunflowers| {
                (0..self.components.len()).map(|j| sunflowers.iter().map(|&i| self.counts[i][j]).sum()).collect()
            })
            .collect();
        rows.sort();
        rows.dedup();
        rows
    }

    /// Whether `partition` and `multiplicities` satisfy every balance equation.
    pub fn satisfies(&self, partition: &[Side], multiplicities: &[u64]) -> bool {
        partition.len() == self.components.len()
            && multiplicities.len() == self.components.len()
            && signed_rows(&self.balance_rows(), partition)
                .iter()
                .all(|row| row.iter().zip(multiplicities).map(|(&a, &m)| a as i128 * m as i128).sum::<i128>() == 0)
    }

    /// The bicoloring induced by a partition: on the `J` side matching edges
    /// are red and petals blue, on the `K` side the reverse, all scaled by the
    /// component multiplicity.
    pub fn witness(&self, partition: &[Side], multiplicities: &[u64]) -> Result<Bicoloring> {
        let c = self.components.len();
        if partition.len() != c || multiplicities.len() != c {
            return Err(Error::CertificateMismatch);
        }
        let m = self.host.num_edges();
        let mut blue = vec![0u64; m];
        let mut red = vec![0u64; m];
        let mut is_matching = vec![false; m];
        for &e in &self.matching {
            is_matching[e] = true;
        }
        for (j, comp) in self.components.iter().enumerate() {
            for &e in &comp.edges {
                let petal_blue = partition[j] == Side::J;
                let target = if is_matching[e] != petal_blue { &mut blue } else { &mut red };
                target[e] = multiplicities[j];
            }
        }
        Bicoloring::new(self.host.clone(), blue, red)
    }

    /// Wraps a solution as a certificate and decides its primitivity.
    pub fn certificate(&self, partition: &[Side], multiplicities: &[u64]) -> Result<PartitionCertificate> {
        if !self.satisfies(partition, multiplicities) || multiplicities.contains(&0) {
            return Err(Error::CertificateMismatch);
        }
        let mut cert = PartitionCertificate {
            partition: partition.to_vec(),
            multiplicities: multiplicities.to_vec(),
            primitive: false,
            witness: self.witness(partition, multiplicities)?,
        };
        cert.primitive = bouquet_primitive(&cert, self)?;
        Ok(cert)
    }
}

fn build(host: &Hypergraph, matching: &[usize]) -> std::result::Result<SunflowerDecomposition, String> {
    if host.uniformity().is_none() {
        return Err("host is not uniform".into());
    }
    let m = host.num_edges();
    let mut matching = matching.to_vec();
    matching.sort_unstable();
    matching.dedup();
    if matching.iter().any(|&e| e >= m) {
        return Err("matching edge index out of range".into());
    }
    let mut covered = vec![false; host.n()];
    for &e in &matching {
        for &v in host.edge(e) {
            if covered[v] {
                return Err(format!("matching edges overlap at vertex {v}"));
            }
            covered[v] = true;
        }
    }
    let core: Vec<usize> = (0..host.n()).filter(|&v| !covered[v]).collect();
    let inc = host.vertex_edges();

    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for e in (0..m).filter(|e| matching.binary_search(e).is_err()) {
        let (in_core, tail): (Vec<usize>, Vec<usize>) = host.edge(e).iter().partition(|&&v| !covered[v]);
        if in_core.is_empty() {
            return Err(format!("petal {e} misses the core"));
        }
        if tail.is_empty() {
            return Err(format!("petal {e} lies inside the core"));
        }
        groups.entry(in_core).or_default().push(e);
    }
    for v in (0..host.n()).filter(|&v| covered[v]) {
        if inc[v].len() != 2 {
            return Err(format!("non-core vertex {v} must lie in one petal and one matching edge"));
        }
    }
    for v in &core {
        if inc[*v].is_empty() {
            return Err(format!("vertex {v} is isolated"));
        }
    }
    let sunflowers: Vec<Sunflower> = groups.into_iter().map(|(core, petals)| Sunflower { core, petals }).collect();
    if sunflowers.is_empty() {
        return Err("no petals".into());
    }
    if sunflowers.iter().any(|s| s.petals.len() < 2) {
        return Err("a sunflower needs at least two petals".into());
    }

    let removal = remove_core(host, &core);
    let c = removal.components.len();
    let mut counts = vec![vec![0u64; c]; sunflowers.len()];
    for (i, s) in sunflowers.iter().enumerate() {
        for &e in &s.petals {
            let j = removal.component_of_edge(e).expect("petal remnants are nonempty");
            counts[i][j] += 1;
        }
    }
    let petal_counts = (0..c).map(|j| counts.iter().map(|row| row[j]).sum()).collect();

    let mut core_index: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, s) in sunflowers.iter().enumerate() {
        for &v in &s.core {
            core_index.entry(v).or_default().push(i);
        }
    }
    let kind = if sunflowers.len() == 1 {
        BouquetKind::Sunflower
    } else if core_index.values().all(|is| is.len() == 1) {
        BouquetKind::PartitionedCore
    } else {
        BouquetKind::RelaxedCore
    };

    Ok(SunflowerDecomposition {
        host: host.clone(),
        kind,
        sunflowers,
        matching,
        core,
        components: removal.components,
        petal_counts,
        counts,
        core_index,
    })
}

/// Cap on matching choices examined during recognition.
const RECOGNITION_NODES: u64 = 1 << 20;

/// Fits `h` to the bouquet template.
///
/// Only edges whose vertices all have degree 2 can be matching edges; every
/// subset of pairwise disjoint candidates is tried. Among valid decompositions
/// the one with the smallest core (then lexicographically smallest) wins.
/// Returns `None` when nothing fits or the search cap is hit.
pub fn recognize_bouquet(h: &Hypergraph) -> Option<SunflowerDecomposition> {
    h.uniformity()?;
    let degrees = h.degrees();
    let candidates: Vec<usize> = (0..h.num_edges()).filter(|&e| h.edge(e).iter().all(|&v| degrees[v] == 2)).collect();
    let mut search = RecognitionSearch {
        h,
        candidates: &candidates,
        used: vec![false; h.n()],
        chosen: Vec::new(),
        nodes: 0,
        best: None,
    };
    search.run(0);
    if search.nodes > RECOGNITION_NODES {
        return None;
    }
    search.best
}

struct RecognitionSearch<'a> {
    h: &'a Hypergraph,
    candidates: &'a [usize],
    used: Vec<bool>,
    chosen: Vec<usize>,
    nodes: u64,
    best: Option<SunflowerDecomposition>,
}

impl RecognitionSearch<'_> {
    fn run(&mut self, k: usize) {
        self.nodes += 1;
        if self.nodes > RECOGNITION_NODES {
            return;
        }
        if k == self.candidates.len() {
            if let Ok(d) = build(self.h, &self.chosen) {
                let better = match &self.best {
                    None => true,
                    Some(b) => (d.core.len(), &d.core) < (b.core.len(), &b.core),
                };
                if better {
                    self.best = Some(d);
                }
            }
            return;
        }
        let e = self.candidates[k];
        if self.h.edge(e).iter().all(|&v| !self.used[v]) {
            for &v in self.h.edge(e) {
                self.used[v] = true;
            }
            self.chosen.push(e);
            self.run(k + 1);
            self.chosen.pop();
            for &v in self.h.edge(e) {
                self.used[v] = false;
            }
        }
        self.run(k + 1);
    }
}

/// A solution of the balance equations together with its bicoloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCertificate {
    pub partition: Vec<Side>,
    pub multiplicities: Vec<u64>,
    pub primitive: bool,
    pub witness: Bicoloring,
}

impl PartitionCertificate {
    /// Components on side `s`.
    pub fn side(&self, s: Side) -> Vec<usize> {
        (0..self.partition.len()).filter(|&j| self.partition[j] == s).collect()
    }
}

/// `lcm(|G_j|) / min |G_j|`, clamped to `1..=64`.
pub fn default_bound(d: &SunflowerDecomposition) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    let sizes: Vec<u64> = d.petal_counts.iter().copied().filter(|&g| g > 0).collect();
    let Some(&min) = sizes.iter().min() else { return 1 };
    let mut lcm: u64 = 1;
    for &g in &sizes {
        lcm = lcm / gcd(lcm, g) * g;
        if lcm / min > 64 {
            return 64;
        }
    }
    (lcm / min).clamp(1, 64)
}

/// Largest component count for which all bipartitions are searched.
const MAX_COMPONENTS: usize = 24;

/// Searches bipartitions (component 0 on side `J`) and multiplicities in
/// `1..=bound` for a solution of the balance equations.
///
/// Within each bipartition only solutions that are minimal under the
/// componentwise order are kept. A primitive certificate is preferred; ties
/// go to the smallest bipartition index, then smallest multiplicity sum, then
/// lexicographic order.
pub fn bouquet_monomial(d: &SunflowerDecomposition, bound: u64) -> Result<Option<PartitionCertificate>> {
    let all = all_certificates(d, bound)?;
    let first_primitive = all.iter().position(|c| c.primitive);
    Ok(match first_primitive {
        Some(i) => all.into_iter().nth(i),
        None => all.into_iter().next(),
    })
}

/// Every componentwise-minimal solution of every bipartition, in search order.
pub fn all_certificates(d: &SunflowerDecomposition, bound: u64) -> Result<Vec<PartitionCertificate>> {
    d.validate()?;
    let c = d.num_components();
    if c > MAX_COMPONENTS {
        return Err(Error::ResourceLimit { resource: "components", limit: MAX_COMPONENTS as u64, partial: None });
    }
    if c < 2 || bound == 0 {
        return Ok(Vec::new());
    }
    let rows = d.balance_rows();
    let mut out = Vec::new();
    for mask in 1u64..(1 << (c - 1)) {
        let partition: Vec<Side> =
            (0..c).map(|j| if j > 0 && mask >> (j - 1) & 1 == 1 { Side::K } else { Side::J }).collect();
        let signed = signed_rows(&rows, &partition);
        let mut sols: Vec<Vec<u64>> = Vec::new();
        solve(&signed, &vec![1; c], &vec![bound; c], &mut |m| {
            sols.push(m.to_vec());
            true
        });
        sols.sort_by(|a, b| (a.iter().sum::<u64>(), a).cmp(&(b.iter().sum::<u64>(), b)));
        let minimal: Vec<&Vec<u64>> = sols
            .iter()
            .filter(|s| !sols.iter().any(|t| t != *s && t.iter().zip(s.iter()).all(|(a, b)| a <= b)))
            .collect();
        for m in minimal {
            out.push(d.certificate(&partition, m)?);
        }
    }
    Ok(out)
}

/// Decides primitivity of a certificate.
///
/// The walk is primitive unless some nonempty set of components, each kept
/// on its side with a multiplicity between 1 and its certificate value,
/// balances on its own, other than the certificate itself.
pub fn bouquet_primitive(c: &PartitionCertificate, d: &SunflowerDecomposition) -> Result<bool> {
    let n = d.num_components();
    if c.partition.len() != n
        || c.multiplicities.len() != n
        || c.multiplicities.contains(&0)
        || !d.satisfies(&c.partition, &c.multiplicities)
        || d.witness(&c.partition, &c.multiplicities)? != c.witness
    {
        return Err(Error::CertificateMismatch);
    }
    if n > MAX_COMPONENTS {
        return Err(Error::ResourceLimit { resource: "components", limit: MAX_COMPONENTS as u64, partial: None });
    }
    let signed = signed_rows(&d.balance_rows(), &c.partition);
    for subset in 1u64..(1 << n) {
        let active: Vec<usize> = (0..n).filter(|&j| subset >> j & 1 == 1).collect();
        let rows: Vec<Vec<i64>> = signed.iter().map(|row| active.iter().map(|&j| row[j]).collect()).collect();
        let hi: Vec<u64> = active.iter().map(|&j| c.multiplicities[j]).collect();
        let full = active.len() == n;
        let mut found = false;
        solve(&rows, &vec![1; active.len()], &hi, &mut |m| {
            if !(full && m == hi.as_slice()) {
                found = true;
            }
            !found
        });
        if found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rows with the `K` columns negated, so a solution has every row sum zero.
fn signed_rows(rows: &[Vec<u64>], partition: &[Side]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|row| {
            row.iter().zip(partition).map(|(&a, s)| if *s == Side::J { a as i64 } else { -(a as i64) }).collect()
        })
        .collect()
}

/// Enumerates `m` with `lo ≤ m ≤ hi` and `row · m = 0` for every row, in
/// lexicographic order, until `visit` returns false.
fn solve(rows: &[Vec<i64>], lo: &[u64], hi: &[u64], visit: &mut dyn FnMut(&[u64]) -> bool) {
    let n = lo.len();
    // suffix ranges of each row over columns k..n
    let mut reach = vec![vec![(0i128, 0i128); n + 1]; rows.len()];
    for (r, row) in rows.iter().enumerate() {
        for k in (0..n).rev() {
            let a = row[k] as i128;
            let (x, y) = (a * lo[k] as i128, a * hi[k] as i128);
            let (p, q) = reach[r][k + 1];
            reach[r][k] = (p + x.min(y), q + x.max(y));
        }
    }
    Solver { rows, reach: &reach, lo, hi, m: lo.to_vec(), sums: vec![0; rows.len()] }.go(0, visit);
}

struct Solver<'a> {
    rows: &'a [Vec<i64>],
    reach: &'a [Vec<(i128, i128)>],
    lo: &'a [u64],
    hi: &'a [u64],
    m: Vec<u64>,
    sums: Vec<i128>,
}

impl Solver<'_> {
    fn go(&mut self, k: usize, visit: &mut dyn FnMut(&[u64]) -> bool) -> bool {
        if (0..self.rows.len()).any(|r| {
            let (p, q) = self.reach[r][k];
            self.sums[r] + p > 0 || self.sums[r] + q < 0
        }) {
            return true;
        }
        if k == self.lo.len() {
            return visit(&self.m);
        }
        for x in self.lo[k]..=self.hi[k] {
            self.m[k] = x;
            for (r, row) in self.rows.iter().enumerate() {
                self.sums[r] += row[k] as i128 * x as i128;
            }
            let keep_going = self.go(k + 1, visit);
            for (r, row) in self.rows.iter().enumerate() {
                self.sums[r] -= row[k] as i128 * x as i128;
            }
            if !keep_going {
                return false;
            }
        }
        true
    }
}
