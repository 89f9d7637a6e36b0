//! Puncture codes and punctured quantum codes.
//!
//! For a CSS pair `C₁ ⊆ C₂` the puncture code is `P(C) = (C₁ * C₂^⊥)^⊥`;
//! for a Hermitian self-orthogonal `C` over GF(q²) it is
//! `P_h(C) = tr(C * C^q)^⊥` over GF(q). A weight-`r` vector of either one
//! shortens the quantum code to length `r` while keeping the distance.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Elem, Extension, FieldSpec};
use crate::grm::{self, build_grm};
use crate::lincode::{
    find_codeword_of_weight, hermitian_product_span, min_weight, permute_vector, product_span, restriction,
    restriction_in, trace_code, CodeSummary, Limits, LinearCode,
};
use crate::qcode::{
    check_quantum_order, css, hermitian, hermitian_grm_distance, hermitian_self_orthogonal, Bounds, Check,
    Construction, QuantumCode,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PunctureKind {
    Euclidean,
    Hermitian,
}

#[derive(Debug, Clone)]
pub enum BaseCodes {
    Css { c1: LinearCode, c2: LinearCode },
    Hermitian { code: LinearCode },
}

/// GRM parameters a record was built from, when it was.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GrmSource {
    Css { q: u32, m: usize, nu1: usize, nu2: usize },
    Hermitian { q: u32, m: usize, nu: usize },
}

#[derive(Debug, Clone)]
pub struct KnownSubcode {
    pub label: String,
    pub code: LinearCode,
}

#[derive(Debug, Clone)]
pub struct PunctureCodeRecord {
    pub kind: PunctureKind,
    pub base: BaseCodes,
    pub pcode: LinearCode,
    pub known_subcodes: Vec<KnownSubcode>,
    pub grm: Option<GrmSource>,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SubcodeSummary {
    pub label: String,
    pub code: CodeSummary,
}

/// The serializable part of a [`PunctureCodeRecord`].
#[derive(Debug, Clone, Serialize)]
pub struct PunctureSummary {
    pub kind: PunctureKind,
    pub grm: Option<GrmSource>,
    pub pcode: CodeSummary,
    pub known_subcodes: Vec<SubcodeSummary>,
    pub checks: Vec<Check>,
}

impl PunctureCodeRecord {
    pub fn n(&self) -> usize {
        self.pcode.n()
    }

    pub fn summary(&self) -> PunctureSummary {
        PunctureSummary {
            kind: self.kind,
            grm: self.grm,
            pcode: self.pcode.summary(),
            known_subcodes: self
                .known_subcodes
                .iter()
                .map(|s| SubcodeSummary {
                    label: s.label.clone(),
                    code: s.code.summary(),
                })
                .collect(),
            checks: self.checks.clone(),
        }
    }

    fn add_subcode(&mut self, label: String, code: LinearCode) -> Result<()> {
        let ok = code.is_subcode_of(&self.pcode)?;
        self.checks.push(Check::holds(&format!("subcode {label}"), ok));
        self.known_subcodes.push(KnownSubcode { label, code });
        Ok(())
    }
}

/// `P(C) = dual(span{a * b : a ∈ C₁, b ∈ C₂^⊥})`.
pub fn puncture_code_css(c1: &LinearCode, c2: &LinearCode) -> Result<PunctureCodeRecord> {
    if !c1.is_subcode_of(c2)? {
        return Err(Error::NotNested);
    }
    let pcode = product_span(c1, &c2.dual())?.dual();
    Ok(PunctureCodeRecord {
        kind: PunctureKind::Euclidean,
        base: BaseCodes::Css {
            c1: c1.clone(),
            c2: c2.clone(),
        },
        pcode,
        known_subcodes: Vec::new(),
        grm: None,
        checks: Vec::new(),
    })
}

/// `P(C)` for `R_q(ν₁,m) ⊆ R_q(ν₂,m)`, checked against `R_q(ν₂-ν₁,m)`.
pub fn puncture_code_css_grm(q: u32, m: usize, nu1: usize, nu2: usize) -> Result<PunctureCodeRecord> {
    check_quantum_order(q, m, nu2)?;
    if nu1 > nu2 {
        return Err(Error::OrderOutOfRange { order: nu1, max: nu2 });
    }
    let c1 = build_grm(q, m, nu1)?;
    let c2 = build_grm(q, m, nu2)?;
    let mut rec = puncture_code_css(&c1.code, &c2.code)?;
    rec.grm = Some(GrmSource::Css { q, m, nu1, nu2 });
    let expected = build_grm(q, m, nu2 - nu1)?;
    rec.checks.push(Check::holds(
        &format!("pcode equals {}", expected.label()),
        rec.pcode == expected.code,
    ));
    for mu in 0..=nu2 - nu1 {
        let sub = build_grm(q, m, mu)?;
        rec.add_subcode(sub.label(), sub.code)?;
    }
    Ok(rec)
}

/// `P_h(C) = dual(trace_code(span{a * b^q}))` over GF(q).
pub fn puncture_code_hermitian(code: &LinearCode) -> Result<PunctureCodeRecord> {
    let pcode = trace_code(&hermitian_product_span(code)?)?.dual();
    Ok(PunctureCodeRecord {
        kind: PunctureKind::Hermitian,
        base: BaseCodes::Hermitian { code: code.clone() },
        pcode,
        known_subcodes: Vec::new(),
        grm: None,
        checks: Vec::new(),
    })
}

/// `P_h(R_{q²}(ν,m))` with `R_{q²}(μ,m)^⊥|_{GF(q)}` recorded as subcodes for
/// `(q+1)ν ≤ μ ≤ m(q²-1)-1`.
pub fn puncture_code_hermitian_grm(q: u32, m: usize, nu: usize) -> Result<PunctureCodeRecord> {
    check_quantum_order(q, m, nu)?;
    let qq = q * q;
    let c = build_grm(qq, m, nu)?;
    let mut rec = puncture_code_hermitian(&c.code)?;
    rec.grm = Some(GrmSource::Hermitian { q, m, nu });
    let top = grm::max_order(qq as u64, m) - 1;
    for mu in (q as usize + 1) * nu..=top {
        let big = build_grm(qq, m, mu)?;
        let sub = restriction(&big.code.dual())?;
        rec.add_subcode(format!("{}^perp|F_{}", big.label(), q), sub)?;
    }
    Ok(rec)
}

/// A vector of the puncture code and what puncturing by it needs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PunctureWitness {
    pub x: Vec<Elem>,
    pub r: usize,
    pub support: Vec<usize>,
    /// Hermitian kind only: `y` over GF(q²) with `y_i^{q+1} = x_{S_i}`.
    pub scaling: Option<Vec<Elem>>,
}

impl PunctureWitness {
    /// Validates `x ∈ pcode` and derives the support and scaling.
    pub fn new(rec: &PunctureCodeRecord, x: Vec<Elem>) -> Result<Self> {
        if x.len() != rec.n() {
            return Err(Error::DimensionMismatch {
                expected: rec.n(),
                got: x.len(),
            });
        }
        if !rec.pcode.contains(&x)? {
            return Err(Error::WitnessInvalid("vector is not in the puncture code".into()));
        }
        let support: Vec<usize> = (0..x.len()).filter(|&i| x[i] != 0).collect();
        let scaling = match &rec.base {
            BaseCodes::Css { .. } => None,
            BaseCodes::Hermitian { code } => {
                let ext = Extension::quadratic_over(code.field())?;
                Some(
                    support
                        .iter()
                        .map(|&i| ext.solve_norm(x[i]))
                        .collect::<Result<Vec<_>>>()?,
                )
            }
        };
        Ok(PunctureWitness {
            r: support.len(),
            x,
            support,
            scaling,
        })
    }
}

/// First vector of weight `r` in the puncture code. A miss on the full
/// scan is proven; past the cap the known subcodes are tried as well.
pub fn find_weight_witness(rec: &PunctureCodeRecord, r: usize, limits: &Limits) -> Result<PunctureWitness> {
    match find_codeword_of_weight(&rec.pcode, r, limits) {
        Ok(x) => PunctureWitness::new(rec, x),
        Err(err @ Error::NotFound { proven: false, .. }) => {
            for sub in &rec.known_subcodes {
                if let Ok(x) = find_codeword_of_weight(&sub.code, r, limits) {
                    return PunctureWitness::new(rec, x);
                }
            }
            if limits.strict {
                return Err(Error::CapExceeded {
                    needed: rec.pcode.size(),
                    cap: limits.cap,
                });
            }
            Err(err)
        }
        Err(e) => Err(e),
    }
}

fn check_witness(rec: &PunctureCodeRecord, w: &PunctureWitness) -> Result<()> {
    if w.r == 0 {
        return Err(Error::WitnessInvalid("weight 0".into()));
    }
    let fresh = PunctureWitness::new(rec, w.x.clone())?;
    if fresh.support != w.support || fresh.r != w.r {
        return Err(Error::WitnessInvalid("support does not match x".into()));
    }
    Ok(())
}

fn record_bounds(qc: &mut QuantumCode, construction: Construction, k_bound: i64, d_bound: usize) {
    let rec = &mut qc.record;
    rec.construction = construction;
    rec.bounds = Some(Bounds {
        k_at_least: k_bound,
        d_at_least: d_bound,
    });
    rec.checks.push(Check::at_least("k_bound", k_bound, rec.k));
    rec.checks.push(Check::at_least("d_bound", d_bound as i64, rec.d));
}

/// Distance guaranteed after puncturing: the minimum weight of the parent
/// codes the construction draws from, from closed forms when available.
fn css_distance_bound(rec: &PunctureCodeRecord, c1: &LinearCode, c2: &LinearCode, limits: &Limits) -> Result<usize> {
    if let Some(GrmSource::Css { q, m, nu1, nu2 }) = rec.grm {
        let q = q as u64;
        let perp = grm::dual_order(q, m, nu1).expect("nu1 < m(q-1)");
        return Ok(grm::grm_distance(q, m, perp)?.min(grm::grm_distance(q, m, nu2)?) as usize);
    }
    let mut d = usize::MAX;
    for c in [c2.clone(), c1.dual()] {
        if c.k() > 0 {
            let w = min_weight(&c, limits)?;
            if !w.exact {
                return Err(Error::CapExceeded {
                    needed: c.size(),
                    cap: limits.cap,
                });
            }
            d = d.min(w.weight);
        }
    }
    Ok(if d == usize::MAX { 0 } else { d })
}

/// Punctured CSS code `css(B, C₂')` with `B = (x * C₁)|_S` and
/// `C₂' = (C₂^⊥|_S)^⊥`.
pub fn puncture_css(rec: &PunctureCodeRecord, w: &PunctureWitness, limits: &Limits) -> Result<QuantumCode> {
    let BaseCodes::Css { c1, c2 } = &rec.base else {
        return Err(Error::WitnessInvalid("expected a Euclidean puncture record".into()));
    };
    check_witness(rec, w)?;
    let n = c1.n();
    let b = c1.scale_coordinates(&w.x)?.puncture(&w.support);
    let c2p = c2.dual().puncture(&w.support).dual();
    if !b.is_subcode_of(&c2p)? {
        return Err(Error::WitnessInvalid("scaled code is not nested".into()));
    }
    let k_bound = c2.k() as i64 - c1.k() as i64 - (n - w.r) as i64;
    let d_bound = css_distance_bound(rec, c1, c2, limits)?;
    let mut qc = css(&b, &c2p, limits)?;
    record_bounds(&mut qc, Construction::PuncturedCss, k_bound, d_bound);
    qc.record.provenance.source = "puncture_css".into();
    qc.record.provenance.params = witness_params(rec, w);
    Ok(qc)
}

/// Punctured Hermitian code from `C' = (y * C)|_S`.
pub fn puncture_hermitian(rec: &PunctureCodeRecord, w: &PunctureWitness, limits: &Limits) -> Result<QuantumCode> {
    let BaseCodes::Hermitian { code } = &rec.base else {
        return Err(Error::WitnessInvalid("expected a Hermitian puncture record".into()));
    };
    check_witness(rec, w)?;
    let ext = Extension::quadratic_over(code.field())?;
    let y = w
        .scaling
        .as_ref()
        .ok_or_else(|| Error::WitnessInvalid("missing scaling".into()))?;
    if y.len() != w.r
        || w.support
            .iter()
            .zip(y)
            .any(|(&i, &yi)| yi == 0 || ext.norm(yi) != w.x[i])
    {
        return Err(Error::WitnessInvalid("scaling does not solve the norm equation".into()));
    }
    let punctured = code.puncture(&w.support).scale_coordinates(y)?;
    if !hermitian_self_orthogonal(&punctured)? {
        return Err(Error::NotSelfOrthogonal);
    }
    let k_bound = w.r as i64 - 2 * code.k() as i64;
    let d_bound = match rec.grm {
        Some(GrmSource::Hermitian { q, nu, .. }) => hermitian_grm_distance(q as u64, nu) as usize,
        _ => {
            let hd = crate::lincode::hermitian_dual(code)?;
            let mw = min_weight(&hd, limits)?;
            if !mw.exact {
                return Err(Error::CapExceeded {
                    needed: hd.size(),
                    cap: limits.cap,
                });
            }
            mw.weight
        }
    };
    let mut qc = hermitian(&punctured, limits)?;
    record_bounds(&mut qc, Construction::PuncturedHermitian, k_bound, d_bound);
    qc.record.provenance.source = "puncture_hermitian".into();
    qc.record.provenance.params = witness_params(rec, w);
    Ok(qc)
}

fn witness_params(rec: &PunctureCodeRecord, w: &PunctureWitness) -> BTreeMap<String, i64> {
    let mut p = BTreeMap::from([("r".to_string(), w.r as i64)]);
    match rec.grm {
        Some(GrmSource::Css { q, m, nu1, nu2 }) => {
            p.extend(
                [
                    ("q", q as i64),
                    ("m", m as i64),
                    ("nu1", nu1 as i64),
                    ("nu2", nu2 as i64),
                ]
                .map(|(k, v)| (k.to_string(), v)),
            );
        }
        Some(GrmSource::Hermitian { q, m, nu }) => {
            p.extend([("q", q as i64), ("m", m as i64), ("nu", nu as i64)].map(|(k, v)| (k.to_string(), v)));
        }
        None => {}
    }
    p
}

/// Canonical GF(q^m) index of each point of GF(q)^m: the digit vector
/// `(a_1, …, a_m)` maps to `Σ a_i ζ^{i-1}`.
pub fn point_bijection(ext: &Extension, m: usize) -> Result<Vec<usize>> {
    if ext.degree() != m {
        return Err(Error::PointOrderMismatch {
            q: ext.sub().q(),
            m,
            ext: ext.ext().q(),
        });
    }
    let big = ext.ext();
    Ok(grm::points(ext.sub(), m)
        .iter()
        .map(|p| {
            p.iter()
                .zip(ext.basis())
                .fold(0, |acc, (&a, &b)| big.add(acc, big.mul(ext.embed(a), b))) as usize
        })
        .collect())
}

/// Output of [`mds_chain`].
#[derive(Debug, Clone)]
pub struct MdsChain {
    pub puncture: PunctureCodeRecord,
    pub witness: PunctureWitness,
    pub quantum: QuantumCode,
}

/// `[[(ν+1)q, (ν+1)q-2ν-2, ν+2]]_q` from `R_{q²}(ν,1)`, punctured along a
/// minimum-weight word of `R_q(q-ν-1, 2)` placed on GF(q²).
pub fn mds_chain(q: u32, nu: usize, limits: &Limits) -> Result<MdsChain> {
    if q < 2 || nu + 2 > q as usize {
        return Err(Error::OrderOutOfRange {
            order: nu,
            max: (q as usize).saturating_sub(2),
        });
    }
    let ext = Extension::quadratic(q)?;
    let rec = puncture_code_hermitian_grm(q, 1, nu)?;
    let small = build_grm(q, 2, q as usize - nu - 1)?;
    let target = (nu + 1) * q as usize;
    let word = find_codeword_of_weight(&small.code, target, limits).map_err(|e| match e {
        Error::NotFound { .. } => Error::WitnessSearchFailed(target),
        e => e,
    })?;
    let x = permute_vector(&word, &point_bijection(&ext, 2)?);
    let witness = PunctureWitness::new(&rec, x)?;
    let mut quantum = puncture_hermitian(&rec, &witness, limits)?;

    let r = &mut quantum.record;
    r.checks.push(Check::compare("n", target, r.n, true));
    r.checks.push(Check::compare("k", target - 2 * nu - 2, r.k.value, true));
    r.checks.push(Check::compare("d", nu + 2, r.d.value, r.d.exact));
    r.checks.push(Check::compare(
        "singleton_slack",
        "0".to_string(),
        r.singleton_slack.map_or("-".into(), |s| s.to_string()),
        r.singleton_slack.is_some(),
    ));
    r.provenance.source = "mds_chain".into();
    r.provenance.inputs = vec![format!("R_{}({},1)", q * q, nu), small.label()];
    Ok(MdsChain {
        puncture: rec,
        witness,
        quantum,
    })
}

/// Checks `R_q(ν,m) ⊆ R_{q^m}(q^m - d(ν), 1)|_{GF(q)}`, with the large code
/// built as a generalized Reed-Solomon code on locators `(0, 1, ζ, ζ², …)`.
pub fn subfield_puncture_check(q: u32, m: usize, nu: usize) -> Result<bool> {
    let mismatch = |big: u128| Error::PointOrderMismatch {
        q,
        m,
        ext: big.min(u32::MAX as u128) as u32,
    };
    let big_q = (q as u128).pow(m as u32);
    let big = FieldSpec::new(u32::try_from(big_q).map_err(|_| mismatch(big_q))?).map_err(|_| mismatch(big_q))?;
    let ext = Extension::new(&FieldSpec::new(q)?, &big).map_err(|_| mismatch(big_q))?;
    let small = build_grm(q, m, nu)?;
    let dim = big_q as usize - small.d_formula as usize + 1;

    let locators: Vec<Elem> = std::iter::once(0)
        .chain((0..big_q as u64 - 1).map(|i| big.exp(i)))
        .collect();
    let rows = (0..dim)
        .map(|j| {
            locators
                .iter()
                .map(|&a| big.pow(a, j as i64))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let grs = LinearCode::from_generators(&big, big_q as usize, rows)?;

    let position = |e: usize| match big.log(e as Elem) {
        None => 0,
        Some(l) => l as usize + 1,
    };
    let perm: Vec<usize> = point_bijection(&ext, m)?.into_iter().map(position).collect();
    small.code.permute(&perm)?.is_subcode_of(&restriction_in(&grs, &ext)?)
}
