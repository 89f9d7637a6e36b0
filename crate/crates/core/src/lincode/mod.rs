//! Linear codes over GF(q) held in reduced row-echelon form.

mod subfield;
mod weight;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};

pub use subfield::{
    frobenius_code, hermitian_dual, hermitian_product_span, restriction, restriction_in, restriction_via_trace,
    trace_code, trace_code_in,
};
pub use weight::{
    enumerate_codewords, find_codeword_of_weight, min_weight, min_weight_difference, weight_distribution, Limits,
    Method, MinWeight, WeightDistribution, DEFAULT_CAP,
};

/// Reduces `rows` to reduced row-echelon form in place (leftmost pivots,
/// scaled to 1, zero rows dropped) and returns the pivot columns.
pub fn rref(field: &FieldSpec, rows: &mut Vec<Vec<Elem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(rows[r][c]).expect("pivot is nonzero");
        if inv != 1 {
            for x in rows[r].iter_mut() {
                *x = field.mul(inv, *x);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let s = field.neg(row[c]);
                field.axpy(row, s, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Rank of a matrix, without modifying it.
pub fn rank(field: &FieldSpec, rows: &[Vec<Elem>]) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m).len()
}

/// Basis of the right null space `{v : M v = 0}` of an RREF matrix with the
/// given pivots.
fn null_space_of_rref(field: &FieldSpec, rows: &[Vec<Elem>], pivots: &[usize], n: usize) -> Vec<Vec<Elem>> {
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![0; n];
            v[f] = 1;
            for (row, &p) in rows.iter().zip(pivots) {
                v[p] = field.neg(row[f]);
            }
            v
        })
        .collect()
}

/// Basis of `{v : M v = 0}` for an arbitrary `r × n` matrix.
pub fn null_space(field: &FieldSpec, rows: &[Vec<Elem>], n: usize) -> Vec<Vec<Elem>> {
    let mut m = rows.to_vec();
    let pivots = rref(field, &mut m);
    null_space_of_rref(field, &m, &pivots, n)
}

pub fn hamming_weight(v: &[Elem]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// A `k`-dimensional subspace of GF(q)^n. The generator is kept in RREF so
/// two codes are equal exactly when their matrices are equal.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: Arc<FieldSpec>,
    n: usize,
    gen: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]_{}", self.n, self.k(), self.field.q())?;
        for row in &self.gen {
            write!(f, "\n  {row:?}")?;
        }
        Ok(())
    }
}

/// Serializable `[n, k]_q` summary.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CodeSummary {
    pub q: u32,
    pub n: usize,
    pub k: usize,
}

impl LinearCode {
    /// Row space of `rows`. Rows may be dependent.
    pub fn from_generators(field: &Arc<FieldSpec>, n: usize, rows: Vec<Vec<Elem>>) -> Result<Self> {
        for row in &rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            if let Some(&bad) = row.iter().find(|&&x| x as u32 >= field.q()) {
                return Err(Error::DimensionMismatch {
                    expected: field.q() as usize,
                    got: bad as usize,
                });
            }
        }
        Ok(Self::from_rows_unchecked(field, n, rows))
    }

    pub(crate) fn from_rows_unchecked(field: &Arc<FieldSpec>, n: usize, mut rows: Vec<Vec<Elem>>) -> Self {
        let pivots = rref(field, &mut rows);
        LinearCode {
            field: field.clone(),
            n,
            gen: rows,
            pivots,
        }
    }

    pub fn zero(field: &Arc<FieldSpec>, n: usize) -> Self {
        LinearCode {
            field: field.clone(),
            n,
            gen: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Arc<FieldSpec>, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        Self::from_rows_unchecked(field, n, rows)
    }

    pub fn repetition(field: &Arc<FieldSpec>, n: usize) -> Self {
        Self::from_rows_unchecked(field, n, vec![vec![1; n]])
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.gen.len()
    }

    /// RREF generator rows.
    pub fn generator(&self) -> &[Vec<Elem>] {
        &self.gen
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn summary(&self) -> CodeSummary {
        CodeSummary {
            q: self.q(),
            n: self.n,
            k: self.k(),
        }
    }

    /// `q^k`, saturating.
    pub fn size(&self) -> u128 {
        (self.q() as u128).checked_pow(self.k() as u32).unwrap_or(u128::MAX)
    }

    /// Codeword for message `msg` (length `k`).
    pub fn encode(&self, msg: &[Elem]) -> Vec<Elem> {
        let mut c = vec![0; self.n];
        for (&m, row) in msg.iter().zip(&self.gen) {
            self.field.axpy(&mut c, m, row);
        }
        c
    }

    /// Euclidean dual `{v : <v|c> = 0 for all c}`.
    pub fn dual(&self) -> LinearCode {
        let rows = null_space_of_rref(&self.field, &self.gen, &self.pivots, self.n);
        Self::from_rows_unchecked(&self.field, self.n, rows)
    }

    /// Parity-check matrix: the RREF generator of the dual.
    pub fn parity_check(&self) -> Vec<Vec<Elem>> {
        self.dual().gen
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        if self.field.q() != other.field.q() {
            return Err(Error::FieldMismatch {
                left: self.q(),
                right: other.q(),
            });
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    /// Reduces `v` against the RREF rows; the residue is zero iff `v ∈ C`.
    fn residue(&self, v: &[Elem]) -> Vec<Elem> {
        let mut r = v.to_vec();
        for (row, &p) in self.gen.iter().zip(&self.pivots) {
            if r[p] != 0 {
                let s = self.field.neg(r[p]);
                self.field.axpy(&mut r, s, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Elem]) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        Ok(self.residue(v).iter().all(|&x| x == 0))
    }

    /// `self ⊆ other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.gen.iter().all(|row| other.residue(row).iter().all(|&x| x == 0)))
    }

    /// Sum of subspaces.
    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        let rows = self.gen.iter().chain(&other.gen).cloned().collect();
        Ok(Self::from_rows_unchecked(&self.field, self.n, rows))
    }

    /// Intersection of subspaces.
    pub fn intersection(&self, other: &LinearCode) -> Result<LinearCode> {
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// Keeps only the coordinates in `support`, in that order.
    pub fn puncture(&self, support: &[usize]) -> LinearCode {
        let rows = self
            .gen
            .iter()
            .map(|row| support.iter().map(|&i| row[i]).collect())
            .collect();
        Self::from_rows_unchecked(&self.field, support.len(), rows)
    }

    /// Multiplies coordinate `i` by `scale[i]`.
    pub fn scale_coordinates(&self, scale: &[Elem]) -> Result<LinearCode> {
        if scale.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: scale.len(),
            });
        }
        let rows = self
            .gen
            .iter()
            .map(|row| row.iter().zip(scale).map(|(&a, &s)| self.field.mul(a, s)).collect())
            .collect();
        Ok(Self::from_rows_unchecked(&self.field, self.n, rows))
    }

    /// Moves coordinate `i` to position `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<LinearCode> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: perm.len(),
            });
        }
        let rows = self.gen.iter().map(|row| permute_vector(row, perm)).collect();
        Ok(Self::from_rows_unchecked(&self.field, self.n, rows))
    }
}

/// Moves entry `i` of `v` to position `perm[i]`.
pub fn permute_vector(v: &[Elem], perm: &[usize]) -> Vec<Elem> {
    let mut out = vec![0; v.len()];
    for (i, &x) in v.iter().enumerate() {
        out[perm[i]] = x;
    }
    out
}

/// Span of all componentwise products `a * b`, `a ∈ A`, `b ∈ B`, computed
/// from pairs of generator rows.
pub fn product_span(a: &LinearCode, b: &LinearCode) -> Result<LinearCode> {
    a.check_compatible(b)?;
    let f = &a.field;
    let rows = a
        .gen
        .iter()
        .flat_map(|x| {
            b.gen
                .iter()
                .map(move |y| x.iter().zip(y).map(|(&s, &t)| f.mul(s, t)).collect())
        })
        .collect();
    Ok(LinearCode::from_rows_unchecked(f, a.n, rows))
}
