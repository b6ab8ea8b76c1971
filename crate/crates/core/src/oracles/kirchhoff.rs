use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::impls::GraphicMatroid;
use crate::matroid::{Matroid, MatroidKind};

/// Number of spanning trees by the matrix-tree theorem: the determinant of
/// the Laplacian with its last row and column removed, evaluated with
/// fraction-free (Bareiss) elimination. Loops are ignored, parallel edges
/// counted. A disconnected graph yields 0.
pub fn count_bases(g: &GraphicMatroid) -> BigUint {
    let n = g.n_vertices();
    if n <= 1 {
        return BigUint::one();
    }
    let size = n - 1;
    let mut lap = vec![vec![BigInt::zero(); size]; size];
    for &(u, v) in g.edges() {
        if u == v {
            continue;
        }
        if u < size {
            lap[u][u] += 1;
        }
        if v < size {
            lap[v][v] += 1;
        }
        if u < size && v < size {
            lap[u][v] -= 1;
            lap[v][u] -= 1;
        }
    }
    let det = bareiss(lap);
    det.abs().to_biguint().unwrap_or_default()
}

/// Number of bases for the matroid kinds with a closed formula. `None` for
/// opaque oracles.
pub fn count_bases_of<M: Matroid + ?Sized>(matroid: &M) -> Option<BigUint> {
    match matroid.kind() {
        MatroidKind::Graphic(g) => Some(count_bases(g)),
        MatroidKind::Uniform(u) => Some(binomial(u.n() as u64, u.k() as u64)),
        MatroidKind::Partition(p) => {
            let mut sizes = vec![0u64; p.bounds().len()];
            for e in 0..p.ground_size() {
                sizes[p.block_of(crate::matroid::ElementId(e))] += 1;
            }
            Some(
                sizes
                    .iter()
                    .zip(p.bounds())
                    .map(|(&s, &k)| binomial(s, (k as u64).min(s)))
                    .product(),
            )
        }
        MatroidKind::Opaque => None,
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}
