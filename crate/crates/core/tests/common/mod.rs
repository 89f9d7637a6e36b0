//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's linear algebra or weight routines; only the field
//! tables are borrowed, and those are checked separately against plain
//! polynomial arithmetic.

#![allow(dead_code)]

use std::collections::HashSet;

use qrm_core::gf::{Elem, FieldSpec};

pub type Vector = Vec<Elem>;

pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

pub fn dot(f: &FieldSpec, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// `x^e` by repeated multiplication.
pub fn power(f: &FieldSpec, x: Elem, e: u32) -> Elem {
    (0..e).fold(1, |acc, _| f.mul(acc, x))
}

/// Rank by plain Gaussian elimination.
pub fn rank(f: &FieldSpec, rows: &[Vector]) -> usize {
    echelon(f, rows).len()
}

/// Reduced echelon rows (pivot 1), nonzero rows only.
pub fn echelon(f: &FieldSpec, rows: &[Vector]) -> Vec<Vector> {
    let mut m: Vec<Vector> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = f.inv(m[r][c]).unwrap();
        m[r] = m[r].iter().map(|&x| f.mul(x, inv)).collect();
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let s = m[i][c];
                let pivot = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(s, *y));
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

/// Basis of `{x : rows · x = 0}` from the echelon form.
pub fn kernel(f: &FieldSpec, rows: &[Vector], n: usize) -> Vec<Vector> {
    let e = echelon(f, rows);
    let pivots: Vec<usize> = e.iter().map(|r| r.iter().position(|&x| x != 0).unwrap()).collect();
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0; n];
            v[free] = 1;
            for (row, &p) in e.iter().zip(&pivots) {
                v[p] = f.neg(row[free]);
            }
            v
        })
        .collect()
}

pub fn in_span(f: &FieldSpec, rows: &[Vector], v: &[Elem]) -> bool {
    let mut ext = rows.to_vec();
    ext.push(v.to_vec());
    rank(f, &ext) == rank(f, rows)
}

/// Every vector of GF(q)^n, first coordinate varying fastest.
pub fn all_vectors(q: u32, n: usize) -> impl Iterator<Item = Vector> {
    let total = (q as u64).pow(n as u32);
    (0..total).map(move |mut j| {
        (0..n)
            .map(|_| {
                let d = (j % q as u64) as Elem;
                j /= q as u64;
                d
            })
            .collect()
    })
}

/// All codewords spanned by `rows`.
pub fn span_set(f: &FieldSpec, rows: &[Vector], n: usize) -> HashSet<Vector> {
    let basis = echelon(f, rows);
    all_vectors(f.q(), basis.len())
        .map(|msg| {
            let mut c = vec![0; n];
            for (&s, row) in msg.iter().zip(&basis) {
                for (x, &y) in c.iter_mut().zip(row) {
                    *x = f.add(*x, f.mul(s, y));
                }
            }
            c
        })
        .collect()
}

/// `{v ∈ GF(q)^n : v · g = 0 for every row g}` by exhaustion.
pub fn brute_dual(f: &FieldSpec, rows: &[Vector], n: usize) -> HashSet<Vector> {
    all_vectors(f.q(), n)
        .filter(|v| rows.iter().all(|g| dot(f, g, v) == 0))
        .collect()
}

pub fn min_weight_of(set: impl IntoIterator<Item = Vector>) -> Option<usize> {
    set.into_iter().map(|v| weight(&v)).filter(|&w| w > 0).min()
}

/// Points of GF(q)^m, first coordinate least significant.
pub fn points(q: u32, m: usize) -> Vec<Vector> {
    all_vectors(q, m).collect()
}

/// Exponent vectors `a` with `0 ≤ a_i < q` and `Σ a_i ≤ ν`.
pub fn monomials(q: u32, m: usize, nu: usize) -> Vec<Vec<u32>> {
    all_vectors(q, m)
        .map(|v| v.iter().map(|&x| x as u32).collect::<Vec<u32>>())
        .filter(|a| a.iter().sum::<u32>() as usize <= nu)
        .collect()
}

/// Evaluations of every monomial of degree ≤ ν at every point.
pub fn grm_rows(f: &FieldSpec, m: usize, nu: usize) -> Vec<Vector> {
    let pts = points(f.q(), m);
    monomials(f.q(), m, nu)
        .iter()
        .map(|a| {
            pts.iter()
                .map(|p| p.iter().zip(a).fold(1, |acc, (&x, &e)| f.mul(acc, power(f, x, e))))
                .collect()
        })
        .collect()
}

fn binom(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Dimension by inclusion-exclusion over exponents reaching `q`.
pub fn k_formula(q: u64, m: usize, nu: usize) -> u64 {
    let (q, m, nu) = (q as i128, m as i128, nu as i128);
    let s: i128 = (0..=m)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * binom(m, j) * binom(m + nu - j * q, nu - j * q)
        })
        .sum();
    s as u64
}

/// `(R+1) q^Q` with `m(q-1) - ν = (q-1)Q + R`, `0 ≤ R < q-1`.
pub fn d_formula(q: u64, m: usize, nu: usize) -> u64 {
    let t = m as u64 * (q - 1) - nu as u64;
    let (big_q, r) = (t / (q - 1), t % (q - 1));
    (r + 1) * q.pow(big_q as u32)
}

/// Conway-style polynomial multiplication mod the field's modulus, on
/// base-p digit vectors; independent of the log tables.
pub fn poly_mul(f: &FieldSpec, a: Elem, b: Elem) -> Elem {
    let p = f.p();
    let e = f.e() as usize;
    let digits = |x: Elem| -> Vec<u32> {
        let mut x = x as u32;
        (0..e)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    };
    let (da, db) = (digits(a), digits(b));
    let mut prod = vec![0u32; 2 * e];
    for i in 0..e {
        for j in 0..e {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    let modulus: Vec<u32> = f.modulus().iter().map(|&c| c as u32).collect();
    for top in (e..2 * e).rev() {
        let c = prod[top];
        if c != 0 {
            for (i, &mc) in modulus.iter().enumerate() {
                let idx = top - e + i;
                prod[idx] = (prod[idx] + p * p - c * mc % p) % p;
            }
        }
    }
    prod[..e].iter().rev().fold(0u32, |acc, &d| acc * p + d) as Elem
}

pub fn poly_add(f: &FieldSpec, a: Elem, b: Elem) -> Elem {
    let p = f.p();
    let (mut a, mut b) = (a as u32, b as u32);
    let mut out = 0;
    let mut scale = 1;
    for _ in 0..f.e() {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    out as Elem
}

/// Smallest weight `w` for which some vector of weight `w` satisfies
/// `accept`, scanning supports and nonzero values exhaustively.
pub fn low_weight_search(q: u32, n: usize, max_w: usize, mut accept: impl FnMut(&[Elem]) -> bool) -> Option<usize> {
    for w in 1..=max_w {
        let mut idx: Vec<usize> = (0..w).collect();
        loop {
            for vals in all_vectors(q - 1, w) {
                let mut v = vec![0; n];
                for (&i, &x) in idx.iter().zip(&vals) {
                    v[i] = x + 1;
                }
                if accept(&v) {
                    return Some(w);
                }
            }
            let mut i = w;
            let mut advanced = false;
            while i > 0 {
                i -= 1;
                if idx[i] < n - w + i {
                    idx[i] += 1;
                    for j in i + 1..w {
                        idx[j] = idx[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
    None
}

pub fn all_subsets(n: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..s).collect();
    loop {
        out.push(idx.clone());
        let mut i = s;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - s + i {
                idx[i] += 1;
                for j in i + 1..s {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}
