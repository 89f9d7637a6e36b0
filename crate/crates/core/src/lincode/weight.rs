//! Exhaustive weight computations.
//!
//! Two exact routes are available. Codeword enumeration walks all `q^k`
//! messages in lexicographic order, updating the codeword by one row
//! addition per step. The support scan walks column subsets of a
//! parity-check matrix in order of size; the first subset whose columns are
//! dependent (and whose kernel leaves the excluded subcode) gives the
//! minimum weight. The cheaper route is picked per call, and the enumeration
//! cap bounds the work of either one.

use serde::Serialize;

use super::{hamming_weight, null_space, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};

/// Default enumeration ceiling: 2^24 codewords (or column subsets).
pub const DEFAULT_CAP: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    pub cap: u64,
    /// Fail with `CapExceeded` instead of returning bounds.
    pub strict: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            cap: DEFAULT_CAP,
            strict: false,
        }
    }
}

impl Limits {
    pub fn with_cap(cap: u64) -> Self {
        Limits { cap, strict: false }
    }

    pub fn strict(self) -> Self {
        Limits { strict: true, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Enumeration,
    SupportScan,
    /// Capped support scan; the weight is a certified lower bound.
    LowerBound,
    /// Nothing to minimize over (the difference set is empty).
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinWeight {
    pub weight: usize,
    pub exact: bool,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightDistribution {
    pub counts: Vec<u64>,
    pub exact: bool,
}

impl WeightDistribution {
    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// Smallest `i ≥ 1` with `A_i > 0`.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.counts.iter().skip(1).position(|&c| c > 0).map(|i| i + 1)
    }

    /// Weights `i ≥ 1` that occur.
    pub fn support(&self) -> Vec<usize> {
        (1..self.counts.len()).filter(|&i| self.counts[i] > 0).collect()
    }
}

/// Lexicographic walk over `Σ m_i rows[i]`, `m_0` most significant.
struct Odometer<'a> {
    field: &'a FieldSpec,
    q: usize,
    n: usize,
    /// `steps[j][a]` = `(succ(a) - a) * rows[j]`, flattened.
    steps: Vec<Elem>,
    digits: Vec<Elem>,
    word: Vec<Elem>,
    weight: usize,
}

impl<'a> Odometer<'a> {
    fn new(field: &'a FieldSpec, rows: &[Vec<Elem>], n: usize) -> Self {
        let q = field.q() as usize;
        let mut steps = vec![0; rows.len() * q * n];
        for (j, row) in rows.iter().enumerate() {
            for a in 0..q {
                let next = (a + 1) % q;
                let d = field.sub(next as Elem, a as Elem);
                let dst = &mut steps[(j * q + a) * n..][..n];
                for (s, &x) in dst.iter_mut().zip(row) {
                    *s = field.mul(d, x);
                }
            }
        }
        Odometer {
            field,
            q,
            n,
            steps,
            digits: vec![0; rows.len()],
            word: vec![0; n],
            weight: 0,
        }
    }

    #[inline]
    fn bump(&mut self, j: usize) {
        let a = self.digits[j] as usize;
        let step = &self.steps[(j * self.q + a) * self.n..][..self.n];
        let mut w = self.weight as isize;
        for (c, &s) in self.word.iter_mut().zip(step) {
            if s != 0 {
                let old = *c;
                let new = self.field.add(old, s);
                w += (new != 0) as isize - (old != 0) as isize;
                *c = new;
            }
        }
        self.weight = w as usize;
        self.digits[j] = ((a + 1) % self.q) as Elem;
    }

    /// Advances to the next message; false after the last one.
    fn advance(&mut self) -> bool {
        let mut j = self.digits.len();
        while j > 0 {
            j -= 1;
            let wrapped = self.digits[j] as usize == self.q - 1;
            self.bump(j);
            if !wrapped {
                return true;
            }
        }
        false
    }
}

/// Visits, in lexicographic order, every codeword of `rows`' span whose
/// message index is at least `q^skip_low`, i.e. with a nonzero digit among
/// the first `rows.len() - skip_low` rows. Stops when `visit` returns false.
/// `skip_low = 0` gives all nonzero messages; `skip_low = rows.len()` all.
fn walk(
    field: &FieldSpec,
    rows: &[Vec<Elem>],
    n: usize,
    skip_low: usize,
    mut visit: impl FnMut(&[Elem], usize) -> bool,
) {
    let k = rows.len();
    let mut odo = Odometer::new(field, rows, n);
    if skip_low == k {
        if k == 0 {
            return;
        }
        // Lexicographic order from message index 0.
        if !visit(&odo.word, odo.weight) {
            return;
        }
    } else {
        odo.bump(k - 1 - skip_low);
        if !visit(&odo.word, odo.weight) {
            return;
        }
    }
    while odo.advance() {
        if !visit(&odo.word, odo.weight) {
            return;
        }
    }
}

/// Calls `visit` on every codeword in lexicographic message order.
pub fn enumerate_codewords(code: &LinearCode, limits: &Limits, mut visit: impl FnMut(&[Elem])) -> Result<()> {
    check_cap(code.size(), limits)?;
    if code.k() == 0 {
        visit(&vec![0; code.n()]);
        return Ok(());
    }
    walk(code.field(), code.generator(), code.n(), code.k(), |w, _| {
        visit(w);
        true
    });
    Ok(())
}

fn check_cap(needed: u128, limits: &Limits) -> Result<()> {
    if needed > limits.cap as u128 {
        return Err(Error::CapExceeded {
            needed,
            cap: limits.cap,
        });
    }
    Ok(())
}

pub fn weight_distribution(code: &LinearCode, limits: &Limits) -> Result<WeightDistribution> {
    let mut counts = vec![0u64; code.n() + 1];
    if code.size() <= limits.cap as u128 {
        if code.k() == 0 {
            counts[0] = 1;
        } else {
            walk(code.field(), code.generator(), code.n(), code.k(), |_, w| {
                counts[w] += 1;
                true
            });
        }
        return Ok(WeightDistribution { counts, exact: true });
    }
    if limits.strict {
        check_cap(code.size(), limits)?;
    }
    let mut left = limits.cap;
    walk(code.field(), code.generator(), code.n(), code.k(), |_, w| {
        counts[w] += 1;
        left = left.saturating_sub(1);
        left > 0
    });
    Ok(WeightDistribution { counts, exact: false })
}

enum Scan {
    Found(usize),
    Empty,
    Capped(usize),
}

/// Column-subset scan over `{v : H v = 0} \ exclude`.
fn support_scan(field: &FieldSpec, h: &[Vec<Elem>], n: usize, exclude: Option<&LinearCode>, budget: u64) -> Scan {
    let mut spent = 0u64;
    let mut cols = Vec::with_capacity(n);
    for s in 1..=n {
        // One elimination on an h.len() x s matrix, in units of codeword
        // visits (about n operations each).
        let cost = 1 + (h.len() * s * s.min(h.len().max(1)) / n.max(1)) as u64;
        let mut idx: Vec<usize> = (0..s).collect();
        loop {
            spent += cost;
            if spent > budget {
                return Scan::Capped(s);
            }
            cols.clear();
            cols.extend_from_slice(&idx);
            let sub: Vec<Vec<Elem>> = h.iter().map(|row| cols.iter().map(|&c| row[c]).collect()).collect();
            let kernel = if h.is_empty() {
                null_space(field, &[vec![0; s]], s)
            } else {
                null_space(field, &sub, s)
            };
            let hit = kernel.iter().any(|v| match exclude {
                None => true,
                Some(e) => {
                    let mut full = vec![0; n];
                    for (&c, &x) in cols.iter().zip(v) {
                        full[c] = x;
                    }
                    !e.contains(&full).expect("lengths agree")
                }
            });
            if hit {
                return Scan::Found(s);
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    Scan::Empty
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let s = idx.len();
    let mut i = s;
    while i > 0 {
        i -= 1;
        if idx[i] < n - s + i {
            idx[i] += 1;
            for j in i + 1..s {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Minimum weight of a nonzero codeword.
pub fn min_weight(code: &LinearCode, limits: &Limits) -> Result<MinWeight> {
    if code.k() == 0 {
        return Err(Error::EmptyCode);
    }
    if code.size() <= limits.cap as u128 {
        let mut best = usize::MAX;
        walk(code.field(), code.generator(), code.n(), 0, |_, w| {
            best = best.min(w);
            true
        });
        return Ok(MinWeight {
            weight: best,
            exact: true,
            method: Method::Enumeration,
        });
    }
    let h = code.parity_check();
    scan_result(
        support_scan(code.field(), &h, code.n(), None, limits.cap),
        code.size(),
        limits,
    )
}

fn scan_result(scan: Scan, size: u128, limits: &Limits) -> Result<MinWeight> {
    match scan {
        Scan::Found(w) => Ok(MinWeight {
            weight: w,
            exact: true,
            method: Method::SupportScan,
        }),
        Scan::Empty => Ok(MinWeight {
            weight: 0,
            exact: true,
            method: Method::Empty,
        }),
        Scan::Capped(lower) => {
            if limits.strict {
                return Err(Error::CapExceeded {
                    needed: size,
                    cap: limits.cap,
                });
            }
            Ok(MinWeight {
                weight: lower,
                exact: false,
                method: Method::LowerBound,
            })
        }
    }
}

/// Minimum weight over `outer \ inner`, for `inner ⊊ outer`.
pub fn min_weight_difference(outer: &LinearCode, inner: &LinearCode, limits: &Limits) -> Result<MinWeight> {
    if !inner.is_subcode_of(outer)? || inner.k() >= outer.k() {
        return Err(Error::NotNested);
    }
    if outer.size() <= limits.cap as u128 {
        // Basis [complement..., inner...]: a codeword lies outside `inner`
        // exactly when some complement digit is nonzero.
        let mut rows: Vec<Vec<Elem>> = Vec::new();
        let mut span = inner.clone();
        for row in outer.generator() {
            if !span.contains(row)? {
                rows.push(row.clone());
                span = span.sum(&LinearCode::from_rows_unchecked(
                    outer.field(),
                    outer.n(),
                    vec![row.clone()],
                ))?;
            }
        }
        let extra = rows.len();
        rows.extend(inner.generator().iter().cloned());
        let mut best = usize::MAX;
        walk(outer.field(), &rows, outer.n(), rows.len() - extra, |_, w| {
            best = best.min(w);
            true
        });
        return Ok(MinWeight {
            weight: best,
            exact: true,
            method: Method::Enumeration,
        });
    }
    let h = outer.parity_check();
    scan_result(
        support_scan(outer.field(), &h, outer.n(), Some(inner), limits.cap),
        outer.size(),
        limits,
    )
}

/// First codeword of weight exactly `target`.
///
/// Within the cap the scan is lexicographic over all messages, so a miss
/// proves absence. Past the cap, messages are tried in order of increasing
/// message weight (positions, then values, lexicographically) until the
/// cap is spent; a miss there is reported as unproven.
pub fn find_codeword_of_weight(code: &LinearCode, target: usize, limits: &Limits) -> Result<Vec<Elem>> {
    if target == 0 {
        return Ok(vec![0; code.n()]);
    }
    if target > code.n() || code.k() == 0 {
        return Err(Error::NotFound {
            weight: target,
            proven: true,
        });
    }
    let mut found = None;
    if code.size() <= limits.cap as u128 {
        walk(code.field(), code.generator(), code.n(), 0, |c, w| {
            if w == target {
                found = Some(c.to_vec());
            }
            found.is_none()
        });
        return found.ok_or(Error::NotFound {
            weight: target,
            proven: true,
        });
    }

    let field = code.field();
    let q = field.q() as usize;
    let k = code.k();
    let mut spent = 0u64;
    for w in 1..=k {
        let mut pos: Vec<usize> = (0..w).collect();
        loop {
            let mut vals = vec![1usize; w];
            loop {
                spent += 1;
                if spent > limits.cap {
                    return Err(Error::NotFound {
                        weight: target,
                        proven: false,
                    });
                }
                let mut msg = vec![0; k];
                for (&p, &v) in pos.iter().zip(&vals) {
                    msg[p] = v as Elem;
                }
                let c = code.encode(&msg);
                if hamming_weight(&c) == target {
                    return Ok(c);
                }
                let mut i = w;
                let mut carried = true;
                while carried && i > 0 {
                    i -= 1;
                    if vals[i] + 1 < q {
                        vals[i] += 1;
                        carried = false;
                    } else {
                        vals[i] = 1;
                    }
                }
                if carried {
                    break;
                }
            }
            if !next_combination(&mut pos, k) {
                break;
            }
        }
    }
    Err(Error::NotFound {
        weight: target,
        proven: true,
    })
}
