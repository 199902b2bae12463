//! Named hypergraph families used by tests, fixtures and the CLI.

use crate::hypergraph::Hypergraph;

/// The complete graph on `r` vertices.
pub fn complete_graph(r: usize) -> Hypergraph {
    let mut edges = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            edges.push(vec![i, j]);
        }
    }
    Hypergraph::new(r, edges).expect("complete graph")
}

/// The cycle graph on `len ≥ 3` vertices.
pub fn cycle(len: usize) -> Hypergraph {
    let edges = (0..len).map(|i| vec![i, (i + 1) % len]).collect();
    Hypergraph::new(len, edges).expect("cycle")
}

/// `C_r^d`: `r` disjoint blocks of `d/2` vertices, one edge per pair of
/// blocks. Edge `{i, j}` of `K_r` corresponds to the block union `V_i ∪ V_j`.
pub fn block_complete(r: usize, d: usize) -> Hypergraph {
    assert!(d >= 2 && d.is_multiple_of(2), "block size d/2 needs even d");
    let half = d / 2;
    let block = |i: usize| (i * half..(i + 1) * half).collect::<Vec<_>>();
    let mut edges = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let mut e = block(i);
            e.extend(block(j));
            edges.push(e);
        }
    }
    Hypergraph::new(r * half, edges).expect("block complete hypergraph")
}

/// Maps an edge of `block_complete(r, d)` back to its pair of blocks.
pub fn block_pair(d: usize, edge: &[usize]) -> (usize, usize) {
    let half = d / 2;
    (edge[0] / half, edge[edge.len() - 1] / half)
}

/// The 3-uniform pair of matchings `{012, 345}` and `{034, 125}`.
pub fn tight_pair() -> Hypergraph {
    Hypergraph::new(6, vec![vec![0, 1, 2], vec![3, 4, 5], vec![0, 3, 4], vec![1, 2, 5]]).expect("tight pair")
}

/// A sunflower bouquet: each sunflower is a core plus the non-core tails of
/// its petals; `matching` lists the extra edges.
pub fn bouquet(n: usize, sunflowers: &[(Vec<usize>, Vec<Vec<usize>>)], matching: &[Vec<usize>]) -> Hypergraph {
    let mut edges = Vec::new();
    for (core, tails) in sunflowers {
        for t in tails {
            let mut e = core.clone();
            e.extend(t);
            edges.push(e);
        }
    }
    edges.extend(matching.iter().cloned());
    Hypergraph::new(n, edges).expect("bouquet")
}

/// `d`-uniform sunflower with core `0..d-1`, `k·d` single-vertex tails, and
/// `k` matching edges over consecutive tails.
pub fn thin_core_sunflower(d: usize, k: usize) -> Hypergraph {
    let core: Vec<usize> = (0..d - 1).collect();
    let first = d - 1;
    let tails: Vec<Vec<usize>> = (0..k * d).map(|i| vec![first + i]).collect();
    let matching: Vec<Vec<usize>> = (0..k).map(|j| (first + j * d..first + (j + 1) * d).collect()).collect();
    bouquet(first + k * d, &[(core, tails)], &matching)
}

/// Core `{0,1}`, petals `[0,1,v]` for `v = 2..7`, matching `[2,3,4]`, `[5,6,7]`.
pub fn two_triple_sunflower() -> Hypergraph {
    thin_core_sunflower(3, 2)
}
