//! Generalized Reed-Muller codes `R_q(ν, m)`: evaluations of all
//! polynomials of total degree at most `ν` in `m` variables at every point
//! of GF(q)^m.
//!
//! Points are enumerated as an `m`-digit base-`q` counter over canonical
//! element indices, first coordinate least significant, so point `j` has
//! coordinates `(j mod q, (j / q) mod q, ..)`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};
use crate::lincode::{min_weight, min_weight_difference, Limits, LinearCode};

/// Longest code `build_grm` will construct by default.
pub const DEFAULT_MAX_LENGTH: usize = 256;

/// Largest order `m(q-1)`; at this order the code is the full space.
pub fn max_order(q: u64, m: usize) -> usize {
    m * (q as usize - 1)
}

/// `m(q-1) - 1 - ν`, or `None` when `ν = m(q-1)` (dual is the zero code).
pub fn dual_order(q: u64, m: usize, order: usize) -> Option<usize> {
    max_order(q, m).checked_sub(order + 1)
}

fn check_order(q: u64, m: usize, order: usize) -> Result<()> {
    let max = max_order(q, m);
    if order > max {
        return Err(Error::OrderOutOfRange { order, max });
    }
    Ok(())
}

fn binomial(a: i128, b: i128) -> i128 {
    if b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1i128, |acc, i| acc * (a - i) / (i + 1))
}

/// Dimension `k(ν) = Σ_j (-1)^j C(m, j) C(m + ν - jq, ν - jq)`.
pub fn grm_dimension(q: u64, m: usize, order: usize) -> Result<u64> {
    check_order(q, m, order)?;
    let (q, m, nu) = (q as i128, m as i128, order as i128);
    let k: i128 = (0..=m)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * binomial(m, j) * binomial(m + nu - j * q, nu - j * q)
        })
        .sum();
    Ok(k as u64)
}

/// Minimum distance `(R+1) q^Q` where `m(q-1) - ν = (q-1)Q + R`, `0 ≤ R < q-1`.
pub fn grm_distance(q: u64, m: usize, order: usize) -> Result<u64> {
    check_order(q, m, order)?;
    let rest = (max_order(q, m) - order) as u64;
    let (big_q, r) = (rest / (q - 1), rest % (q - 1));
    Ok((r + 1) * q.pow(big_q as u32))
}

/// Exponent tuples `(a_1, .., a_m)` with `a_i ≤ q-1` and `Σ a_i ≤ ν`, in
/// graded lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialBasis {
    exponents: Vec<Vec<u32>>,
}

impl MonomialBasis {
    pub fn new(q: u64, m: usize, order: usize) -> Self {
        let top = q as u32 - 1;
        let mut exponents = Vec::new();
        let mut cur = vec![0u32; m];
        loop {
            if cur.iter().sum::<u32>() as usize <= order {
                exponents.push(cur.clone());
            }
            // Odometer over [0, q-1]^m.
            let mut i = 0;
            while i < m && cur[i] == top {
                cur[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
            cur[i] += 1;
        }
        exponents.sort_by(|a, b| {
            let (da, db) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        MonomialBasis { exponents }
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[Vec<u32>] {
        &self.exponents
    }
}

/// All points of GF(q)^m in canonical order.
pub fn points(field: &FieldSpec, m: usize) -> Vec<Vec<Elem>> {
    let q = field.q() as usize;
    let n = q.pow(m as u32);
    (0..n)
        .map(|mut j| {
            (0..m)
                .map(|_| {
                    let d = (j % q) as Elem;
                    j /= q;
                    d
                })
                .collect()
        })
        .collect()
}

/// Evaluation vectors of the monomials in `basis` at `pts`.
pub fn evaluate_monomials(field: &FieldSpec, basis: &MonomialBasis, pts: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    basis
        .exponents()
        .iter()
        .map(|exps| {
            pts.iter()
                .map(|p| {
                    p.iter().zip(exps).fold(1, |acc, (&x, &a)| {
                        field.mul(acc, field.pow(x, a as i64).expect("nonnegative exponent"))
                    })
                })
                .collect()
        })
        .collect()
}

/// `R_q(ν, m)` together with its closed-form parameters.
#[derive(Debug, Clone)]
pub struct GrmCode {
    pub q: u32,
    pub m: usize,
    pub order: usize,
    pub code: LinearCode,
    pub k_formula: u64,
    pub d_formula: u64,
    pub nu_perp: Option<usize>,
    pub basis: MonomialBasis,
}

impl GrmCode {
    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn label(&self) -> String {
        format!("R_{}({},{})", self.q, self.order, self.m)
    }
}

pub fn build_grm(q: u32, m: usize, order: usize) -> Result<GrmCode> {
    build_grm_with(q, m, order, DEFAULT_MAX_LENGTH)
}

pub fn build_grm_with(q: u32, m: usize, order: usize, max_len: usize) -> Result<GrmCode> {
    let field = FieldSpec::new(q)?;
    check_order(q as u64, m, order)?;
    let len = (q as u128).pow(m as u32);
    if len > max_len as u128 {
        return Err(Error::LengthCapExceeded { len, max: max_len });
    }
    let pts = points(&field, m);
    let basis = MonomialBasis::new(q as u64, m, order);
    let code = evaluation_code(&field, &basis, &pts);
    Ok(GrmCode {
        q,
        m,
        order,
        k_formula: grm_dimension(q as u64, m, order)?,
        d_formula: grm_distance(q as u64, m, order)?,
        nu_perp: dual_order(q as u64, m, order),
        code,
        basis,
    })
}

fn evaluation_code(field: &Arc<FieldSpec>, basis: &MonomialBasis, pts: &[Vec<Elem>]) -> LinearCode {
    let rows = evaluate_monomials(field, basis, pts);
    LinearCode::from_rows_unchecked(field, pts.len(), rows)
}

/// Weights reported by [`nesting_and_difference_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NestingReport {
    pub d_inner: usize,
    pub d_outer: usize,
    pub d_difference: usize,
    pub strictly_nested: bool,
    /// `wt(C₂ \ C₁) = wt(C₂)`.
    pub difference_matches: bool,
}

/// For `ν₁ < ν₂`, checks `R_q(ν₁,m) ⊊ R_q(ν₂,m)` and
/// `wt(R_q(ν₂,m) \ R_q(ν₁,m)) = wt(R_q(ν₂,m))`.
pub fn nesting_and_difference_check(
    q: u32,
    m: usize,
    inner: usize,
    outer: usize,
    limits: &Limits,
) -> Result<NestingReport> {
    if inner >= outer {
        return Err(Error::NotNested);
    }
    let c1 = build_grm(q, m, inner)?;
    let c2 = build_grm(q, m, outer)?;
    if c2.code.size() > limits.cap as u128 {
        return Err(Error::CapExceeded {
            needed: c2.code.size(),
            cap: limits.cap,
        });
    }
    let strictly_nested = c1.code.is_subcode_of(&c2.code)? && c1.code.k() < c2.code.k();
    let d_inner = min_weight(&c1.code, limits)?.weight;
    let d_outer = min_weight(&c2.code, limits)?.weight;
    let d_difference = min_weight_difference(&c2.code, &c1.code, limits)?.weight;
    Ok(NestingReport {
        d_inner,
        d_outer,
        d_difference,
        strictly_nested,
        difference_matches: d_difference == d_outer,
    })
}
