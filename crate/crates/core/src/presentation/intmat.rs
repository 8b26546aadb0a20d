//! Hermite and Smith normal forms over ℤ with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect()
}

pub fn from_i64(rows: &[Vec<i64>]) -> Matrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = BigInt::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            s += &row[k] * &b[k][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination. Panics unless `a` is square.
pub fn determinant(a: &Matrix) -> BigInt {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &m[n - 1][n - 1]
}

fn combine_rows(m: &mut Matrix, i: usize, j: usize, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) {
    // (row_i, row_j) ← (a·row_i + b·row_j, c·row_i + d·row_j)
    let (ri, rj) = (m[i].clone(), m[j].clone());
    for k in 0..ri.len() {
        m[i][k] = a * &ri[k] + b * &rj[k];
        m[j][k] = c * &ri[k] + d * &rj[k];
    }
}

fn add_row_multiple(m: &mut Matrix, target: usize, src: usize, f: &BigInt) {
    if f.is_zero() {
        return;
    }
    let src_row = m[src].clone();
    for (t, s) in m[target].iter_mut().zip(src_row) {
        *t += f * s;
    }
}

/// Row Hermite normal form: returns `(H, U)` with `U·A = H`, `U` unimodular,
/// `H` in row echelon form with positive pivots and the entries above each
/// pivot reduced into `[0, pivot)`. Zero rows come last.
pub fn hermite(a: &Matrix) -> (Matrix, Matrix) {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut h = a.clone();
    let mut u = identity(m);
    let mut r = 0;
    for col in 0..n {
        if r == m {
            break;
        }
        for i in r + 1..m {
            if h[i][col].is_zero() {
                continue;
            }
            if h[r][col].is_zero() {
                h.swap(r, i);
                u.swap(r, i);
                continue;
            }
            let (x, y) = (h[r][col].clone(), h[i][col].clone());
            let e = x.extended_gcd(&y);
            let (p, q) = (&x / &e.gcd, &y / &e.gcd);
            // det [[e.x, e.y], [-q, p]] = e.x·p + e.y·q = 1
            let mq = -q;
            combine_rows(&mut h, r, i, &e.x, &e.y, &mq, &p);
            combine_rows(&mut u, r, i, &e.x, &e.y, &mq, &p);
        }
        if h[r][col].is_zero() {
            continue;
        }
        if h[r][col].is_negative() {
            for x in h[r].iter_mut().chain(u[r].iter_mut()) {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let f = -h[i][col].div_floor(&h[r][col]);
            add_row_multiple(&mut h, i, r, &f);
            add_row_multiple(&mut u, i, r, &f);
        }
        r += 1;
    }
    (h, u)
}

/// Nonzero rows of the Hermite form: a basis of the row lattice.
pub fn row_lattice_basis(a: &Matrix) -> Matrix {
    let (h, _) = hermite(a);
    h.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect()
}

/// `U·A·V = D` with `D` diagonal, `d_1 | d_2 | …`, nonnegative.
#[derive(Debug, Clone)]
pub struct Smith {
    pub diagonal: Vec<BigInt>,
    pub u: Matrix,
    pub v: Matrix,
    pub d: Matrix,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|x| !x.is_zero()).count()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|x| !x.is_zero() && !x.is_one())
            .cloned()
            .collect()
    }
}

fn transpose(a: &Matrix) -> Matrix {
    let n = a.first().map_or(0, Vec::len);
    (0..n).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Smith normal form, checked by reconstructing `U·A·V`.
pub fn smith(a: &Matrix) -> Result<Smith> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut d = a.clone();
    let mut u = identity(m);
    // Column operations on d are row operations on dᵀ; track V transposed.
    let mut vt = identity(n);
    let mut t = 0;
    while t < m.min(n) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !d[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        d.swap(t, bi);
        u.swap(t, bi);
        if bj != t {
            for row in d.iter_mut() {
                row.swap(t, bj);
            }
            vt.swap(t, bj);
        }
        let mut clean = true;
        for i in t + 1..m {
            if d[i][t].is_zero() {
                continue;
            }
            let f = -d[i][t].div_floor(&d[t][t]);
            add_row_multiple(&mut d, i, t, &f);
            add_row_multiple(&mut u, i, t, &f);
            clean &= d[i][t].is_zero();
        }
        for j in t + 1..n {
            if d[t][j].is_zero() {
                continue;
            }
            let f = -d[t][j].div_floor(&d[t][t]);
            for row in d.iter_mut() {
                let x = &row[t] * &f;
                row[j] += x;
            }
            add_row_multiple(&mut vt, j, t, &f);
            clean &= d[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[i][j].is_multiple_of(&d[t][t])));
        if let Some(i) = bad {
            let one = BigInt::one();
            add_row_multiple(&mut d, t, i, &one);
            add_row_multiple(&mut u, t, i, &one);
            continue;
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut().chain(u[t].iter_mut()) {
                *x = -&*x;
            }
        }
        t += 1;
    }
    let v = transpose(&vt);
    let check = mul(&mul(&u, a), &v);
    if check != d {
        return Err(Error::Internal("Smith normal form reconstruction failed".into()));
    }
    let diagonal = (0..m.min(n)).map(|i| d[i][i].clone()).collect();
    Ok(Smith { diagonal, u, v, d })
}
