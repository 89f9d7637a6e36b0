//! Arithmetic in the small finite fields GF(p^e) used throughout the crate.
//!
//! Elements are stored as their canonical index: the coefficient vector of
//! the reducing polynomial basis `1, x, .., x^(e-1)` read as base-`p` digits,
//! constant term least significant. For prime fields the index is the
//! residue itself. Every field is generated by a fixed Conway polynomial, so
//! the root `x` is primitive and subfield embeddings line up across the
//! tower.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Raw element index. All supported fields have at most 64 elements.
pub type Elem = u8;

/// (q, p, e, modulus coefficients c_0..c_e, low degree first).
const FIELD_TABLE: [(u32, u32, u32, &[u8]); 12] = [
    (2, 2, 1, &[1, 1]),
    (3, 3, 1, &[1, 1]),
    (4, 2, 2, &[1, 1, 1]),
    (5, 5, 1, &[3, 1]),
    (7, 7, 1, &[4, 1]),
    (8, 2, 3, &[1, 1, 0, 1]),
    (9, 3, 2, &[2, 2, 1]),
    (16, 2, 4, &[1, 1, 0, 0, 1]),
    (25, 5, 2, &[2, 4, 1]),
    (27, 3, 3, &[1, 2, 0, 1]),
    (49, 7, 2, &[3, 6, 1]),
    (64, 2, 6, &[1, 1, 0, 1, 1, 0, 1]),
];

/// Field sizes with a compiled-in modulus.
pub const SUPPORTED_SIZES: [u32; 12] = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64];

static CACHE: [OnceLock<Arc<FieldSpec>>; 12] = [const { OnceLock::new() }; 12];

/// A finite field GF(p^e) with precomputed operation tables.
pub struct FieldSpec {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u8>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
    exp: Vec<Elem>,
    log: Vec<u32>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    /// Returns the shared instance of GF(q).
    pub fn new(q: u32) -> Result<Arc<FieldSpec>> {
        let slot = FIELD_TABLE
            .iter()
            .position(|row| row.0 == q)
            .ok_or(Error::UnsupportedField(q))?;
        Ok(CACHE[slot]
            .get_or_init(|| {
                let (q, p, e, modulus) = FIELD_TABLE[slot];
                Arc::new(FieldSpec::build(q, p, e, modulus))
            })
            .clone())
    }

    pub fn is_supported(q: u32) -> bool {
        SUPPORTED_SIZES.contains(&q)
    }

    fn build(q: u32, p: u32, e: u32, modulus: &[u8]) -> FieldSpec {
        let qs = q as usize;
        let digits = |mut v: usize| -> Vec<u32> {
            (0..e)
                .map(|_| {
                    let d = (v % p as usize) as u32;
                    v /= p as usize;
                    d
                })
                .collect()
        };
        let index = |ds: &[u32]| -> usize { ds.iter().rev().fold(0usize, |acc, &d| acc * p as usize + d as usize) };

        let mut add = vec![0; qs * qs];
        let mut neg = vec![0; qs];
        for a in 0..qs {
            let da = digits(a);
            for b in 0..qs {
                let db = digits(b);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * qs + b] = index(&s) as Elem;
            }
            let n: Vec<u32> = da.iter().map(|x| (p - x) % p).collect();
            neg[a] = index(&n) as Elem;
        }

        // Powers of the root x of the modulus; x^e = -(c_0 + .. + c_{e-1} x^{e-1}).
        let times_x = |v: usize| -> usize {
            let mut d = digits(v);
            let top = d[e as usize - 1];
            d.rotate_right(1);
            d[0] = 0;
            for (i, di) in d.iter_mut().enumerate() {
                let sub = top * modulus[i] as u32 % p;
                *di = (*di + p - sub) % p;
            }
            index(&d)
        };
        let mut exp = Vec::with_capacity(qs - 1);
        let mut log = vec![u32::MAX; qs];
        let mut cur = 1usize;
        for i in 0..qs - 1 {
            assert_eq!(log[cur], u32::MAX, "modulus for GF({q}) is not primitive");
            exp.push(cur as Elem);
            log[cur] = i as u32;
            cur = times_x(cur);
        }
        assert_eq!(cur, 1, "modulus for GF({q}) is not primitive");

        let order = qs - 1;
        let mut mul = vec![0; qs * qs];
        let mut inv = vec![0; qs];
        for a in 1..qs {
            for b in 1..qs {
                mul[a * qs + b] = exp[(log[a] as usize + log[b] as usize) % order];
            }
            inv[a] = exp[(order - log[a] as usize) % order];
        }

        FieldSpec {
            p,
            e,
            q,
            modulus: modulus.to_vec(),
            add,
            mul,
            neg,
            inv,
            exp,
            log,
        }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// Monic primitive modulus, constant coefficient first.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    /// The fixed primitive element (the root of the modulus).
    pub fn generator(&self) -> Elem {
        self.exp[1 % self.exp.len()]
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv[a as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k` for any integer `k`; negative exponents invert first.
    pub fn pow(&self, a: Elem, k: i64) -> Result<Elem> {
        if a == 0 {
            return match k.cmp(&0) {
                std::cmp::Ordering::Less => Err(Error::DivisionByZero),
                std::cmp::Ordering::Equal => Ok(1),
                std::cmp::Ordering::Greater => Ok(0),
            };
        }
        let order = (self.q - 1) as i64;
        let l = (self.log[a as usize] as i64 * k.rem_euclid(order)).rem_euclid(order);
        Ok(self.exp[l as usize])
    }

    /// `zeta^i` for the fixed primitive element.
    pub fn exp(&self, i: u64) -> Elem {
        self.exp[(i % (self.q as u64 - 1)) as usize]
    }

    /// Discrete log base the primitive element; `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> Option<u32> {
        let l = self.log(a)?;
        let n = self.q - 1;
        Some(n / gcd(n, l))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(|v| v as Elem)
    }

    /// Scalar multiple `s * v`.
    pub fn scale(&self, s: Elem, v: &[Elem]) -> Vec<Elem> {
        v.iter().map(|&x| self.mul(s, x)).collect()
    }

    /// `acc += s * v` in place.
    pub fn axpy(&self, acc: &mut [Elem], s: Elem, v: &[Elem]) {
        if s == 0 {
            return;
        }
        let row = &self.mul[s as usize * self.q as usize..][..self.q as usize];
        for (a, &x) in acc.iter_mut().zip(v) {
            *a = self.add(*a, row[x as usize]);
        }
    }

    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    pub fn element(self: &Arc<Self>, value: u32) -> Result<FieldElement> {
        if value >= self.q {
            return Err(Error::DimensionMismatch {
                expected: self.q as usize,
                got: value as usize,
            });
        }
        Ok(FieldElement {
            value: value as Elem,
            field: self.clone(),
        })
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Integer square root when `n` is a perfect square.
pub(crate) fn exact_sqrt(n: u32) -> Option<u32> {
    let r = (n as f64).sqrt().round() as u32;
    (r * r == n).then_some(r)
}

/// An element tagged with its field. Operations between different fields fail.
#[derive(Clone)]
pub struct FieldElement {
    value: Elem,
    field: Arc<FieldSpec>,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@GF({})", self.value, self.field.q)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.q == other.field.q && self.value == other.value
    }
}

impl Eq for FieldElement {}

impl FieldElement {
    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field.q != other.field.q {
            return Err(Error::FieldMismatch {
                left: self.field.q,
                right: other.field.q,
            });
        }
        Ok(())
    }

    fn with(&self, value: Elem) -> FieldElement {
        FieldElement {
            value,
            field: self.field.clone(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(self.field.div(self.value, other.value)?))
    }

    pub fn neg(&self) -> Self {
        self.with(self.field.neg(self.value))
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        Ok(self.with(self.field.pow(self.value, k)?))
    }
}

/// GF(q) sitting inside GF(q^d), with the coordinate maps needed for trace
/// codes and subfield subcodes.
///
/// The embedding sends the primitive element of GF(q) to the first power
/// `beta^j` (`beta = zeta^((Q-1)/(q-1))`, `gcd(j, q-1) = 1`) that is a root
/// of GF(q)'s modulus. With Conway moduli this is always `j = 1`. The
/// GF(q)-basis of the extension is `1, zeta, .., zeta^(d-1)`.
#[derive(Debug, Clone)]
pub struct Extension {
    sub: Arc<FieldSpec>,
    ext: Arc<FieldSpec>,
    degree: usize,
    embed: Vec<Elem>,
    project: Vec<Option<Elem>>,
    basis: Vec<Elem>,
    coords: Vec<Elem>,
    frob: Vec<Elem>,
}

impl Extension {
    pub fn new(sub: &Arc<FieldSpec>, ext: &Arc<FieldSpec>) -> Result<Extension> {
        let no = || Error::NoEmbeddingDefined { sub: sub.q, ext: ext.q };
        if sub.p != ext.p || !ext.e.is_multiple_of(sub.e) {
            return Err(no());
        }
        let degree = (ext.e / sub.e) as usize;
        let (q, qq) = (sub.q as u64, ext.q as u64);

        let beta = ext.exp((qq - 1) / (q - 1));
        let on_modulus = |x: Elem| -> bool {
            // Modulus coefficients are prime-field residues, whose index is
            // the same in every field of characteristic p.
            let mut acc: Elem = 0;
            for &c in sub.modulus.iter().rev() {
                acc = ext.add(ext.mul(acc, x), c);
            }
            acc == 0
        };
        let root = (1..q.max(2))
            .filter(|&j| gcd(j as u32, (q - 1).max(1) as u32) == 1)
            .map(|j| ext.pow(beta, j as i64).expect("beta is nonzero"))
            .find(|&x| on_modulus(x))
            .ok_or_else(no)?;

        let mut embed = vec![0; sub.q as usize];
        for (a, slot) in embed.iter_mut().enumerate().skip(1) {
            *slot = ext.pow(root, sub.log[a] as i64)?;
        }
        let mut project = vec![None; ext.q as usize];
        for (a, &x) in embed.iter().enumerate() {
            project[x as usize] = Some(a as Elem);
        }

        let basis: Vec<Elem> = (0..degree).map(|t| ext.exp(t as u64)).collect();
        let mut coords = vec![0; ext.q as usize * degree];
        let mut seen = vec![false; ext.q as usize];
        let mut digits = vec![0 as Elem; degree];
        for idx in 0..qq {
            let mut v = idx;
            for d in digits.iter_mut() {
                *d = (v % q) as Elem;
                v /= q;
            }
            let x = digits
                .iter()
                .zip(&basis)
                .fold(0, |acc, (&a, &b)| ext.add(acc, ext.mul(embed[a as usize], b)));
            assert!(!seen[x as usize], "powers of zeta are not a basis");
            seen[x as usize] = true;
            coords[x as usize * degree..][..degree].copy_from_slice(&digits);
        }

        let frob = (0..ext.q)
            .map(|x| ext.pow(x as Elem, q as i64))
            .collect::<Result<Vec<_>>>()?;

        Ok(Extension {
            sub: sub.clone(),
            ext: ext.clone(),
            degree,
            embed,
            project,
            basis,
            coords,
            frob,
        })
    }

    /// The designated quadratic extension GF(q) ⊂ GF(q²).
    pub fn quadratic(q: u32) -> Result<Extension> {
        let sub = FieldSpec::new(q)?;
        let ext = FieldSpec::new(q * q).map_err(|_| Error::NoEmbeddingDefined { sub: q, ext: q * q })?;
        Extension::new(&sub, &ext)
    }

    /// Quadratic extension whose large field is `ext`.
    pub fn quadratic_over(ext: &Arc<FieldSpec>) -> Result<Extension> {
        let q = exact_sqrt(ext.q)
            .filter(|&q| FieldSpec::is_supported(q))
            .ok_or(Error::NoEmbeddingDefined { sub: 0, ext: ext.q })?;
        Extension::new(&FieldSpec::new(q)?, ext)
    }

    pub fn sub(&self) -> &Arc<FieldSpec> {
        &self.sub
    }

    pub fn ext(&self) -> &Arc<FieldSpec> {
        &self.ext
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn embed(&self, x: Elem) -> Elem {
        self.embed[x as usize]
    }

    /// Inverse of [`embed`](Self::embed); `None` outside the subfield.
    pub fn project(&self, x: Elem) -> Option<Elem> {
        self.project[x as usize]
    }

    /// GF(q)-basis `zeta^t`, `t < degree`.
    pub fn basis(&self) -> &[Elem] {
        &self.basis
    }

    /// Coordinates of `x` in [`basis`](Self::basis), as GF(q) elements.
    pub fn coords(&self, x: Elem) -> &[Elem] {
        &self.coords[x as usize * self.degree..][..self.degree]
    }

    /// `x^q`.
    pub fn frobenius(&self, x: Elem) -> Elem {
        self.frob[x as usize]
    }

    /// Relative trace `x + x^q + .. + x^(q^(d-1))`, returned in GF(q).
    pub fn trace(&self, x: Elem) -> Elem {
        let mut acc = 0;
        let mut y = x;
        for _ in 0..self.degree {
            acc = self.ext.add(acc, y);
            y = self.frob[y as usize];
        }
        self.project(acc).expect("trace lies in the subfield")
    }

    /// Relative norm `x^((Q-1)/(q-1))`, returned in GF(q).
    pub fn norm(&self, x: Elem) -> Elem {
        let k = (self.ext.q as i64 - 1) / (self.sub.q as i64 - 1);
        let y = self.ext.pow(x, k).expect("nonnegative exponent");
        self.project(y).expect("norm lies in the subfield")
    }

    /// Smallest-index `y` with `norm(y) = x`.
    pub fn solve_norm(&self, x: Elem) -> Result<Elem> {
        if x == 0 {
            return Err(Error::ZeroInput);
        }
        Ok(self
            .ext
            .elements()
            .find(|&y| y != 0 && self.norm(y) == x)
            .expect("norm map is onto"))
    }
}

fn designated(x: &FieldElement, target: &Arc<FieldSpec>) -> Result<Extension> {
    if target.q != x.field.q * x.field.q {
        return Err(Error::NoEmbeddingDefined {
            sub: x.field.q,
            ext: target.q,
        });
    }
    Extension::new(&x.field, target)
}

/// Image of `x ∈ GF(q)` in its designated quadratic extension `target`.
pub fn embed_subfield(x: &FieldElement, target: &Arc<FieldSpec>) -> Result<FieldElement> {
    let ext = designated(x, target)?;
    Ok(FieldElement {
        value: ext.embed(x.value),
        field: target.clone(),
    })
}

/// `x + x^q` for `x ∈ GF(q²)`, as an element of GF(q).
pub fn trace_q2_q(x: &FieldElement) -> Result<FieldElement> {
    let ext = Extension::quadratic_over(&x.field)?;
    Ok(FieldElement {
        value: ext.trace(x.value),
        field: ext.sub.clone(),
    })
}

/// Canonically first `y ∈ GF(q²)` with `y^(q+1) = x`.
pub fn solve_norm(x: &FieldElement, target: &Arc<FieldSpec>) -> Result<FieldElement> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let ext = designated(x, target)?;
    Ok(FieldElement {
        value: ext.solve_norm(x.value)?,
        field: target.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fields() -> impl Iterator<Item = Arc<FieldSpec>> {
        SUPPORTED_SIZES.iter().map(|&q| FieldSpec::new(q).unwrap())
    }

    #[test]
    fn every_modulus_is_primitive() {
        for f in fields() {
            assert_eq!(f.order(f.generator()), Some(f.q() - 1), "{f:?}");
        }
    }

    #[test]
    fn unsupported_size_is_rejected() {
        assert_eq!(FieldSpec::new(6).unwrap_err(), Error::UnsupportedField(6));
        assert!(FieldSpec::new(11).is_err());
    }

    #[test]
    fn gf4_zeta_squared() {
        let f = FieldSpec::new(4).unwrap();
        let z = f.element(2).unwrap();
        assert_eq!(z.try_mul(&z).unwrap(), f.element(3).unwrap());
        assert_eq!(f.generator(), 2);
    }

    #[test]
    fn gf3_two_times_two() {
        let f = FieldSpec::new(3).unwrap();
        let two = f.element(2).unwrap();
        assert_eq!(two.try_mul(&two).unwrap().value(), 1);
    }

    #[test]
    fn identities() {
        for f in fields() {
            let zero = f.element(0).unwrap();
            let one = f.element(1).unwrap();
            for a in f.elements() {
                let a = f.element(a as u32).unwrap();
                assert_eq!(a.try_add(&zero).unwrap(), a);
                assert_eq!(a.try_mul(&one).unwrap(), a);
            }
        }
    }

    #[test]
    fn mixing_fields_fails() {
        let a = FieldSpec::new(4).unwrap().element(1).unwrap();
        let b = FieldSpec::new(2).unwrap().element(1).unwrap();
        assert!(matches!(a.try_add(&b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn division_by_zero() {
        let f = FieldSpec::new(9).unwrap();
        let a = f.element(5).unwrap();
        let z = f.element(0).unwrap();
        assert_eq!(a.try_div(&z).unwrap_err(), Error::DivisionByZero);
        assert_eq!(z.inverse().unwrap_err(), Error::DivisionByZero);
        assert_eq!(z.pow(-1).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn negative_powers() {
        let f = FieldSpec::new(27).unwrap();
        for a in 1..27 {
            let x = f.element(a).unwrap();
            let left = x.pow(-3).unwrap();
            let right = x.inverse().unwrap().pow(3).unwrap();
            assert_eq!(left, right);
            assert_eq!(x.pow(26).unwrap().value(), 1);
        }
    }

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        for &(q, qq) in &[
            (2, 4),
            (3, 9),
            (4, 16),
            (5, 25),
            (7, 49),
            (8, 64),
            (2, 8),
            (4, 64),
            (3, 27),
            (2, 16),
        ] {
            let sub = FieldSpec::new(q).unwrap();
            let ext = Extension::new(&sub, &FieldSpec::new(qq).unwrap()).unwrap();
            let big = ext.ext().clone();
            assert_eq!(ext.embed(0), 0);
            assert_eq!(ext.embed(1), 1);
            for a in sub.elements() {
                for b in sub.elements() {
                    assert_eq!(big.add(ext.embed(a), ext.embed(b)), ext.embed(sub.add(a, b)));
                    assert_eq!(big.mul(ext.embed(a), ext.embed(b)), ext.embed(sub.mul(a, b)));
                }
            }
        }
    }

    #[test]
    fn conway_tower_uses_the_norm_compatible_root() {
        for &(q, qq) in &[(4, 16), (8, 64), (2, 4), (3, 9)] {
            let ext = Extension::new(&FieldSpec::new(q).unwrap(), &FieldSpec::new(qq).unwrap()).unwrap();
            let beta = ext.ext().exp(((qq - 1) / (q - 1)) as u64);
            assert_eq!(ext.embed(FieldSpec::new(q).unwrap().generator()), beta);
        }
    }

    #[test]
    fn embed_gf2_into_gf4() {
        let f2 = FieldSpec::new(2).unwrap();
        let f4 = FieldSpec::new(4).unwrap();
        for a in 0..2 {
            let x = embed_subfield(&f2.element(a).unwrap(), &f4).unwrap();
            assert!(x.value() < 2);
        }
    }

    #[test]
    fn embed_gf3_into_gf9_sends_two_to_order_two() {
        let f3 = FieldSpec::new(3).unwrap();
        let f9 = FieldSpec::new(9).unwrap();
        let order_two: Vec<Elem> = f9.elements().filter(|&y| f9.order(y) == Some(2)).collect();
        assert_eq!(order_two.len(), 1);
        let x = embed_subfield(&f3.element(2).unwrap(), &f9).unwrap();
        assert_eq!(x.value(), order_two[0]);
    }

    #[test]
    fn embed_requires_designated_extension() {
        let f3 = FieldSpec::new(3).unwrap();
        let f27 = FieldSpec::new(27).unwrap();
        assert!(matches!(
            embed_subfield(&f3.element(1).unwrap(), &f27),
            Err(Error::NoEmbeddingDefined { .. })
        ));
        let f5 = FieldSpec::new(5).unwrap();
        assert!(trace_q2_q(&f5.element(1).unwrap()).is_err());
    }

    #[test]
    fn trace_of_zeta_in_gf4() {
        let f4 = FieldSpec::new(4).unwrap();
        let t = trace_q2_q(&f4.element(2).unwrap()).unwrap();
        assert_eq!(t.value(), 1);
        assert_eq!(t.field().q(), 2);
    }

    #[test]
    fn trace_of_subfield_element_doubles_it() {
        for q in [2, 3, 4, 5, 7, 8] {
            let ext = Extension::quadratic(q).unwrap();
            let sub = ext.sub().clone();
            for a in sub.elements() {
                assert_eq!(ext.trace(ext.embed(a)), sub.add(a, a));
            }
        }
    }

    #[test]
    fn trace_is_linear_and_form_nondegenerate() {
        for q in [2, 3, 4, 5, 7, 8] {
            let ext = Extension::quadratic(q).unwrap();
            let (big, sub) = (ext.ext().clone(), ext.sub().clone());
            for x in big.elements() {
                for y in big.elements() {
                    assert_eq!(ext.trace(big.add(x, y)), sub.add(ext.trace(x), ext.trace(y)));
                }
                for c in sub.elements() {
                    assert_eq!(ext.trace(big.mul(ext.embed(c), x)), sub.mul(c, ext.trace(x)));
                }
                if x != 0 {
                    assert!(big.elements().any(|b| ext.trace(big.mul(x, b)) != 0));
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_exactly_the_subfield() {
        for q in [2, 3, 4, 5] {
            let ext = Extension::quadratic(q).unwrap();
            let big = ext.ext().clone();
            let fixed: Vec<Elem> = big.elements().filter(|&x| ext.frobenius(x) == x).collect();
            let mut image: Vec<Elem> = ext.sub().elements().map(|a| ext.embed(a)).collect();
            image.sort();
            assert_eq!(fixed, image);
            for x in big.elements() {
                for y in big.elements() {
                    assert_eq!(
                        ext.frobenius(big.mul(x, y)),
                        big.mul(ext.frobenius(x), ext.frobenius(y))
                    );
                    assert_eq!(
                        ext.frobenius(big.add(x, y)),
                        big.add(ext.frobenius(x), ext.frobenius(y))
                    );
                }
            }
        }
    }

    #[test]
    fn norm_fibres_have_size_q_plus_one() {
        for q in [2, 3, 4, 5] {
            let ext = Extension::quadratic(q).unwrap();
            let mut count = vec![0usize; q as usize];
            for y in 1..(q * q) {
                count[ext.norm(y as Elem) as usize] += 1;
            }
            assert_eq!(count[0], 0);
            assert!(count[1..].iter().all(|&c| c == (q + 1) as usize), "q={q}: {count:?}");
        }
    }

    #[test]
    fn solve_norm_examples() {
        let f2 = FieldSpec::new(2).unwrap();
        let f4 = FieldSpec::new(4).unwrap();
        let one = f2.element(1).unwrap();
        let y = solve_norm(&one, &f4).unwrap();
        assert_eq!(y.value(), 1);
        assert_eq!(y.pow(3).unwrap().value(), 1);
        let sols: Vec<_> = (1..4).filter(|&y| f4.pow(y, 3).unwrap() == 1).collect();
        assert_eq!(sols, vec![1, 2, 3]);

        let f3 = FieldSpec::new(3).unwrap();
        let f9 = FieldSpec::new(9).unwrap();
        let ext = Extension::quadratic(3).unwrap();
        for x in 1..3 {
            let target = ext.embed(x);
            let n = f9.elements().filter(|&y| f9.pow(y, 4).unwrap() == target).count();
            assert_eq!(n, 4);
            let y = solve_norm(&f3.element(x as u32).unwrap(), &f9).unwrap();
            assert_eq!(f9.pow(y.value(), 4).unwrap(), target);
        }
        assert_eq!(solve_norm(&f3.element(0).unwrap(), &f9).unwrap_err(), Error::ZeroInput);
    }

    #[test]
    fn coords_round_trip() {
        let ext = Extension::quadratic(4).unwrap();
        let big = ext.ext().clone();
        for x in big.elements() {
            let c = ext.coords(x);
            let back = c
                .iter()
                .zip(ext.basis())
                .fold(0, |acc, (&a, &b)| big.add(acc, big.mul(ext.embed(a), b)));
            assert_eq!(back, x);
        }
    }
}
