//! Quantum stabilizer codes from classical codes.
//!
//! Two constructions are provided. The CSS construction takes nested codes
//! `C₁ ⊆ C₂` over GF(q) and yields `[[n, k₂ - k₁, d]]_q`, where `d` is the
//! minimum weight of `(C₂ \ C₁) ∪ (C₁^⊥ \ C₂^⊥)`. The Hermitian construction
//! takes a code `C` over GF(q²) contained in its Hermitian dual and yields
//! `[[n, n - 2k, d]]_q` with `d = wt(C^{⊥h} \ C)`. Both return the record
//! together with a stabilizer matrix whose self-orthogonality is checked.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{exact_sqrt, Elem, Extension, FieldSpec};
use crate::grm::{self, build_grm};
use crate::lincode::{hermitian_dual, min_weight, min_weight_difference, Limits, LinearCode, MinWeight};

/// Rows of field elements.
pub type Matrix = Vec<Vec<Elem>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    Css,
    Hermitian,
    PuncturedCss,
    PuncturedHermitian,
}

/// A parameter value; `exact = false` means the true value is at least `value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Param {
    pub value: usize,
    pub exact: bool,
}

impl Param {
    pub fn exact(value: usize) -> Self {
        Param { value, exact: true }
    }

    pub fn at_least(value: usize) -> Self {
        Param { value, exact: false }
    }
}

impl std::fmt::Display for Param {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.exact {
            write!(f, "{}", self.value)
        } else {
            write!(f, ">={}", self.value)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Could not be decided within the enumeration cap.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub expected: String,
    pub observed: String,
}

impl Check {
    pub fn compare<T: PartialEq + std::fmt::Display>(name: &str, expected: T, observed: T, decided: bool) -> Check {
        let status = if !decided {
            CheckStatus::Inconclusive
        } else if expected == observed {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        Check {
            name: name.to_string(),
            status,
            expected: expected.to_string(),
            observed: observed.to_string(),
        }
    }

    /// `observed ≥ bound`; a lower-bound observation that already clears
    /// the bound passes, one that does not is inconclusive.
    pub fn at_least(name: &str, bound: i64, observed: Param) -> Check {
        let status = if observed.value as i64 >= bound {
            CheckStatus::Pass
        } else if observed.exact {
            CheckStatus::Fail
        } else {
            CheckStatus::Inconclusive
        };
        Check {
            name: name.to_string(),
            status,
            expected: format!(">={bound}"),
            observed: observed.to_string(),
        }
    }

    pub fn holds(name: &str, ok: bool) -> Check {
        Check::compare(name, true, ok, true)
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Where a record came from.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub source: String,
    pub inputs: Vec<String>,
    pub params: BTreeMap<String, i64>,
    /// Which distance definition applied, e.g. `nested` or `equal`.
    pub branch: String,
}

/// Guarantees that hold by construction for punctured codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub k_at_least: i64,
    pub d_at_least: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuantumCodeRecord {
    pub q: u32,
    pub n: usize,
    pub k: Param,
    pub d: Param,
    /// `None` when purity could not be decided within the cap.
    pub pure: Option<bool>,
    pub construction: Construction,
    pub provenance: Provenance,
    pub bounds: Option<Bounds>,
    /// `n - k - 2(d - 1)`, present when `k` and `d` are exact.
    pub singleton_slack: Option<i64>,
    pub mds: bool,
    pub checks: Vec<Check>,
}

impl QuantumCodeRecord {
    fn new(q: u32, n: usize, k: Param, d: Param, construction: Construction) -> Self {
        let mut rec = QuantumCodeRecord {
            q,
            n,
            k,
            d,
            pure: None,
            construction,
            provenance: Provenance::default(),
            bounds: None,
            singleton_slack: None,
            mds: false,
            checks: Vec::new(),
        };
        rec.refresh_singleton();
        rec
    }

    pub(crate) fn refresh_singleton(&mut self) {
        self.singleton_slack = singleton_check(self).ok();
        self.mds = self.singleton_slack == Some(0);
    }

    /// `[[n,k,d]]_q`, with `>=` on bounded entries.
    pub fn params(&self) -> String {
        format!("[[{},{},{}]]_{}", self.n, self.k, self.d, self.q)
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn any_check_failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }
}

/// Quantum Singleton slack `n - k - 2(d-1)`; zero means MDS.
pub fn singleton_check(rec: &QuantumCodeRecord) -> Result<i64> {
    if !rec.k.exact || !rec.d.exact {
        return Err(Error::InexactParameters);
    }
    Ok(rec.n as i64 - rec.k.value as i64 - 2 * (rec.d.value as i64 - 1))
}

/// Stabilizer generators. CSS codes keep separate X and Z blocks over GF(q);
/// Hermitian codes keep the generator rows over GF(q²).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilizerMatrix {
    Css {
        field: Arc<FieldSpec>,
        x: Vec<Vec<Elem>>,
        z: Vec<Vec<Elem>>,
    },
    Hermitian {
        field: Arc<FieldSpec>,
        rows: Vec<Vec<Elem>>,
    },
}

impl StabilizerMatrix {
    /// `[X | 0]` rows from `x_rows` followed by `[0 | Z]` rows from `z_rows`.
    pub fn css(field: &Arc<FieldSpec>, n: usize, x_rows: &[Vec<Elem>], z_rows: &[Vec<Elem>]) -> Self {
        let zero = vec![0; n];
        let x = x_rows
            .iter()
            .cloned()
            .chain(z_rows.iter().map(|_| zero.clone()))
            .collect();
        let z = x_rows
            .iter()
            .map(|_| zero.clone())
            .chain(z_rows.iter().cloned())
            .collect();
        StabilizerMatrix::Css {
            field: field.clone(),
            x,
            z,
        }
    }

    /// The symplectic `(X | Z)` form over GF(q). Hermitian rows `g` expand
    /// to `g` and `zeta * g`, each split as `a + b zeta` into `(a | b)`.
    pub fn symplectic_form(&self) -> Result<(Arc<FieldSpec>, Matrix, Matrix)> {
        match self {
            StabilizerMatrix::Css { field, x, z } => Ok((field.clone(), x.clone(), z.clone())),
            StabilizerMatrix::Hermitian { field, rows } => {
                let ext = Extension::quadratic_over(field)?;
                let (mut xs, mut zs) = (Vec::new(), Vec::new());
                for g in rows {
                    for &beta in ext.basis() {
                        let u: Vec<Elem> = g.iter().map(|&v| field.mul(beta, v)).collect();
                        xs.push(u.iter().map(|&v| ext.coords(v)[0]).collect());
                        zs.push(u.iter().map(|&v| ext.coords(v)[1]).collect());
                    }
                }
                Ok((ext.sub().clone(), xs, zs))
            }
        }
    }

    /// `X Zᵀ - Z Xᵀ = 0` over GF(q).
    pub fn is_symplectic_self_orthogonal(&self) -> Result<bool> {
        let (f, x, z) = self.symplectic_form()?;
        for i in 0..x.len() {
            for j in i + 1..x.len() {
                let s = f.sub(f.dot(&x[i], &z[j]), f.dot(&z[i], &x[j]));
                if s != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Number of generators over GF(q).
    pub fn num_generators(&self) -> usize {
        match self {
            StabilizerMatrix::Css { x, .. } => x.len(),
            StabilizerMatrix::Hermitian { rows, .. } => 2 * rows.len(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct QuantumCode {
    pub record: QuantumCodeRecord,
    pub stabilizer: StabilizerMatrix,
}

fn combine(a: &MinWeight, b: &MinWeight) -> Param {
    Param {
        value: a.weight.min(b.weight),
        exact: a.exact && b.exact,
    }
}

/// Minimum weight of a possibly-zero code; `None` for the zero code.
fn min_weight_opt(c: &LinearCode, limits: &Limits) -> Result<Option<MinWeight>> {
    if c.k() == 0 {
        return Ok(None);
    }
    min_weight(c, limits).map(Some)
}

/// CSS code from `C₁ ⊆ C₂`.
pub fn css(c1: &LinearCode, c2: &LinearCode, limits: &Limits) -> Result<QuantumCode> {
    if !c1.is_subcode_of(c2)? {
        return Err(Error::NotNested);
    }
    let n = c1.n();
    let (k1, k2) = (c1.k(), c2.k());
    let c1_perp = c1.dual();
    let c2_perp = c2.dual();

    let (d, pure, branch) = if k1 < k2 {
        let x_side = min_weight_difference(c2, c1, limits)?;
        let z_side = min_weight_difference(&c1_perp, &c2_perp, limits)?;
        let w2 = min_weight(c2, limits)?;
        let w1p = min_weight(&c1_perp, limits)?;
        let decided = x_side.exact && z_side.exact && w2.exact && w1p.exact;
        let pure = decided.then_some(x_side.weight == w2.weight && z_side.weight == w1p.weight);
        (combine(&x_side, &z_side), pure, "nested")
    } else {
        let a = min_weight_opt(c1, limits)?;
        let b = min_weight_opt(&c1_perp, limits)?;
        let d = match (a, b) {
            (Some(a), Some(b)) => combine(&a, &b),
            (Some(w), None) | (None, Some(w)) => Param {
                value: w.weight,
                exact: w.exact,
            },
            (None, None) => Param::exact(0),
        };
        (d, Some(true), "equal")
    };

    let stabilizer = StabilizerMatrix::css(c1.field(), n, c1.generator(), c2_perp.generator());
    let mut record = QuantumCodeRecord::new(c1.q(), n, Param::exact(k2 - k1), d, Construction::Css);
    record.pure = pure;
    record.provenance = Provenance {
        source: "css".into(),
        inputs: vec![
            format!("C1=[{},{}]_{}", n, k1, c1.q()),
            format!("C2=[{},{}]_{}", n, k2, c1.q()),
        ],
        params: BTreeMap::new(),
        branch: branch.into(),
    };
    record.checks.push(Check::holds(
        "symplectic_self_orthogonal",
        stabilizer.is_symplectic_self_orthogonal()?,
    ));
    Ok(QuantumCode { record, stabilizer })
}

pub(crate) fn check_quantum_order(q: u32, m: usize, order: usize) -> Result<()> {
    let max = grm::max_order(q as u64, m);
    if max == 0 || order > max - 1 {
        return Err(Error::OrderOutOfRange {
            order,
            max: max.saturating_sub(1),
        });
    }
    Ok(())
}

/// CSS code from `R_q(ν₁,m) ⊆ R_q(ν₂,m)`; checks the result against
/// `[[q^m, k(ν₂)-k(ν₁), min{d(ν₁^⊥), d(ν₂)}]]_q` and purity.
pub fn css_grm(q: u32, m: usize, nu1: usize, nu2: usize, limits: &Limits) -> Result<QuantumCode> {
    check_quantum_order(q, m, nu2)?;
    if nu1 > nu2 {
        return Err(Error::OrderOutOfRange { order: nu1, max: nu2 });
    }
    let c1 = build_grm(q, m, nu1)?;
    let c2 = build_grm(q, m, nu2)?;
    let mut qc = css(&c1.code, &c2.code, limits)?;
    let rec = &mut qc.record;

    let qq = q as u64;
    let k_pred = c2.k_formula - c1.k_formula;
    let nu1_perp = grm::dual_order(qq, m, nu1).expect("nu1 < m(q-1)");
    let d_pred = grm::grm_distance(qq, m, nu1_perp)?.min(c2.d_formula);
    rec.checks
        .push(Check::compare("n", qq.pow(m as u32), rec.n as u64, true));
    rec.checks.push(Check::compare("k", k_pred, rec.k.value as u64, true));
    rec.checks
        .push(Check::compare("d", d_pred, rec.d.value as u64, rec.d.exact));
    rec.checks.push(Check::compare(
        "pure",
        true,
        rec.pure.unwrap_or(false),
        rec.pure.is_some(),
    ));
    rec.provenance.source = "css_grm".into();
    rec.provenance.inputs = vec![c1.label(), c2.label()];
    rec.provenance.params = BTreeMap::from([
        ("q".into(), q as i64),
        ("m".into(), m as i64),
        ("nu1".into(), nu1 as i64),
        ("nu2".into(), nu2 as i64),
    ]);
    Ok(qc)
}

/// `css_grm(q, m, ν, ν^⊥)`: a pure `[[q^m, q^m - 2k(ν), d(ν^⊥)]]_q` code,
/// for `ν ≤ (m(q-1)-1)/2`.
pub fn css_grm_selfdual_pair(q: u32, m: usize, nu: usize, limits: &Limits) -> Result<QuantumCode> {
    let max = grm::max_order(q as u64, m);
    if max == 0 || 2 * nu > max - 1 {
        return Err(Error::OrderOutOfRange {
            order: nu,
            max: max.saturating_sub(1) / 2,
        });
    }
    let perp = grm::dual_order(q as u64, m, nu).expect("nu < m(q-1)");
    let mut qc = css_grm(q, m, nu, perp, limits)?;
    let n = (q as u64).pow(m as u32);
    let k_pred = n - 2 * grm::grm_dimension(q as u64, m, nu)?;
    let d_pred = grm::grm_distance(q as u64, m, perp)?;
    let rec = &mut qc.record;
    rec.checks
        .push(Check::compare("k_selfdual_pair", k_pred, rec.k.value as u64, true));
    rec.checks.push(Check::compare(
        "d_selfdual_pair",
        d_pred,
        rec.d.value as u64,
        rec.d.exact,
    ));
    rec.provenance.source = "css_grm_selfdual_pair".into();
    Ok(qc)
}

/// `<g_i | g_j>_h = Σ g_i g_j^q = 0` for every pair of generator rows.
pub fn hermitian_self_orthogonal(code: &LinearCode) -> Result<bool> {
    let ext = Extension::quadratic_over(code.field())?;
    let f = code.field();
    let gen = code.generator();
    for a in gen {
        for b in gen {
            let s = a
                .iter()
                .zip(b)
                .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, ext.frobenius(y))));
            if s != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Hermitian construction from `C ⊆ C^{⊥h}` over GF(q²).
pub fn hermitian(code: &LinearCode, limits: &Limits) -> Result<QuantumCode> {
    if !hermitian_self_orthogonal(code)? {
        return Err(Error::NotSelfOrthogonal);
    }
    let q = exact_sqrt(code.q()).expect("checked by quadratic_over");
    let n = code.n();
    let hdual = hermitian_dual(code)?;

    let (d, pure, branch) = if hdual.k() > code.k() {
        let diff = min_weight_difference(&hdual, code, limits)?;
        let whole = min_weight(&hdual, limits)?;
        let decided = diff.exact && whole.exact;
        let pure = decided.then_some(diff.weight == whole.weight);
        (
            Param {
                value: diff.weight,
                exact: diff.exact,
            },
            pure,
            "nested",
        )
    } else {
        let d = match min_weight_opt(&hdual, limits)? {
            Some(w) => Param {
                value: w.weight,
                exact: w.exact,
            },
            None => Param::exact(0),
        };
        (d, Some(true), "self_dual")
    };

    let stabilizer = StabilizerMatrix::Hermitian {
        field: code.field().clone(),
        rows: code.generator().to_vec(),
    };
    let mut record = QuantumCodeRecord::new(q, n, Param::exact(n - 2 * code.k()), d, Construction::Hermitian);
    record.pure = pure;
    record.provenance = Provenance {
        source: "hermitian".into(),
        inputs: vec![format!("C=[{},{}]_{}", n, code.k(), code.q())],
        params: BTreeMap::new(),
        branch: branch.into(),
    };
    record.checks.push(Check::holds(
        "symplectic_self_orthogonal",
        stabilizer.is_symplectic_self_orthogonal()?,
    ));
    Ok(QuantumCode { record, stabilizer })
}

/// `d(ν^⊥) = (R+1) q^{2Q}` with `ν + 1 = (q²-1)Q + R`, `0 ≤ R < q²-1`.
pub fn hermitian_grm_distance(q: u64, nu: usize) -> u64 {
    let s = q * q - 1;
    let t = nu as u64 + 1;
    let (big_q, r) = (t / s, t % s);
    (r + 1) * q.pow(2 * big_q as u32)
}

/// Hermitian code from `R_{q²}(ν, m)`, checked against
/// `[[q^{2m}, q^{2m} - 2k(ν), d(ν^⊥)]]_q` (parameters over GF(q²)).
pub fn hermitian_grm(q: u32, m: usize, nu: usize, limits: &Limits) -> Result<QuantumCode> {
    check_quantum_order(q, m, nu)?;
    let qq = q * q;
    let c = build_grm(qq, m, nu)?;
    let mut qc = hermitian(&c.code, limits)?;
    let n = (qq as u64).pow(m as u32);
    let k_pred = n - 2 * c.k_formula;
    let d_pred = hermitian_grm_distance(q as u64, nu);
    let rec = &mut qc.record;
    rec.checks.push(Check::compare("n", n, rec.n as u64, true));
    rec.checks.push(Check::compare("k", k_pred, rec.k.value as u64, true));
    rec.checks
        .push(Check::compare("d", d_pred, rec.d.value as u64, rec.d.exact));
    rec.checks.push(Check::compare(
        "pure",
        true,
        rec.pure.unwrap_or(false),
        rec.pure.is_some(),
    ));
    rec.provenance.source = "hermitian_grm".into();
    rec.provenance.inputs = vec![c.label()];
    rec.provenance.params = BTreeMap::from([("q".into(), q as i64), ("m".into(), m as i64), ("nu".into(), nu as i64)]);
    Ok(qc)
}
