//! Integer kernel of an incidence matrix by unimodular column elimination.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

fn l1(v: &[i64]) -> i128 {
    v.iter().map(|&x| (x as i128).abs()).sum()
}

/// A basis of `ker_Z(A)` for the incidence matrix of `h`.
///
/// Column operations are applied to `A` and mirrored on an identity matrix;
/// the mirrored columns whose image under `A` is zero span the integer kernel.
/// The basis is then size-reduced pairwise in the l1 norm.
pub fn kernel_basis(h: &Hypergraph) -> Result<Vec<Vec<i64>>> {
    let rows = h.n();
    let cols = h.num_edges();
    let inc = h.incidence_matrix();
    // column-major copies so swaps and axpy touch contiguous memory
    let mut a: Vec<Vec<i128>> = (0..cols).map(|c| (0..rows).map(|r| inc.get(r, c) as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..cols).map(|c| (0..cols).map(|r| (r == c) as i128).collect()).collect();

    let mut pivot = 0;
    for r in 0..rows {
        if pivot == cols {
            break;
        }
        loop {
            let best = (pivot..cols).filter(|&c| a[c][r] != 0).min_by_key(|&c| a[c][r].abs());
            let Some(best) = best else { break };
            a.swap(pivot, best);
            u.swap(pivot, best);
            let p = a[pivot][r];
            let mut done = true;
            for c in pivot + 1..cols {
                let x = a[c][r];
                if x == 0 {
                    continue;
                }
                let q = x.div_euclid(p);
                axpy(&mut a, c, pivot, q)?;
                axpy(&mut u, c, pivot, q)?;
                if a[c][r] != 0 {
                    done = false;
                }
            }
            if done {
                pivot += 1;
                break;
            }
        }
    }

    let mut basis: Vec<Vec<i64>> = u[pivot..]
        .iter()
        .map(|col| col.iter().map(|&x| i64::try_from(x).map_err(|_| Error::Overflow)).collect::<Result<Vec<i64>>>())
        .collect::<Result<_>>()?;
    size_reduce(&mut basis)?;
    debug_assert!(basis.iter().all(|b| h.in_kernel(b)));
    Ok(basis)
}

/// `cols[target] -= q * cols[source]`.
fn axpy(cols: &mut [Vec<i128>], target: usize, source: usize, q: i128) -> Result<()> {
    let (t, s) = if target > source {
        let (lo, hi) = cols.split_at_mut(target);
        (&mut hi[0], &lo[source])
    } else {
        let (lo, hi) = cols.split_at_mut(source);
        (&mut lo[target], &hi[0])
    };
    for (x, &y) in t.iter_mut().zip(s) {
        *x = y.checked_mul(q).and_then(|p| x.checked_sub(p)).ok_or(Error::Overflow)?;
    }
    Ok(())
}

/// Replaces `b_i` by `b_i ± b_j` while that shrinks its l1 norm.
fn size_reduce(basis: &mut [Vec<i64>]) -> Result<()> {
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand: Vec<i64> = basis[i]
                        .iter()
                        .zip(&basis[j])
                        .map(|(&x, &y)| x.checked_sub(sign * y).ok_or(Error::Overflow))
                        .collect::<Result<_>>()?;
                    if l1(&cand) < l1(&basis[i]) {
                        basis[i] = cand;
                        changed = true;
                    }
                }
            }
        }
    }
    Ok(())
}
