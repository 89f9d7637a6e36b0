//! Codes over an extension GF(q^d) viewed from GF(q): Frobenius images,
//! Hermitian duals, trace codes and subfield subcodes.

use super::{null_space, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, Extension};

fn check_ext(code: &LinearCode, ext: &Extension) -> Result<()> {
    if code.q() != ext.ext().q() {
        return Err(Error::NoEmbeddingDefined {
            sub: ext.sub().q(),
            ext: code.q(),
        });
    }
    Ok(())
}

/// Raises every coordinate of every codeword to the `q`-th power.
pub fn frobenius_code(code: &LinearCode, ext: &Extension) -> Result<LinearCode> {
    check_ext(code, ext)?;
    let rows = code
        .generator()
        .iter()
        .map(|row| row.iter().map(|&x| ext.frobenius(x)).collect())
        .collect();
    Ok(LinearCode::from_rows_unchecked(code.field(), code.n(), rows))
}

/// `C^{⊥h} = {v : Σ v_i c_i^q = 0}` for a code over GF(q²), computed as the
/// Euclidean dual of the Frobenius image.
pub fn hermitian_dual(code: &LinearCode) -> Result<LinearCode> {
    let ext = Extension::quadratic_over(code.field())?;
    Ok(frobenius_code(code, &ext)?.dual())
}

/// Span of `a * b^q` over generator-row pairs of `code` (GF(q²)).
pub fn hermitian_product_span(code: &LinearCode) -> Result<LinearCode> {
    let ext = Extension::quadratic_over(code.field())?;
    let f = code.field();
    let gen = code.generator();
    let mut rows = Vec::with_capacity(gen.len() * gen.len());
    for a in gen {
        for b in gen {
            rows.push(a.iter().zip(b).map(|(&x, &y)| f.mul(x, ext.frobenius(y))).collect());
        }
    }
    Ok(LinearCode::from_rows_unchecked(f, code.n(), rows))
}

/// GF(q)-span of `tr(beta * c)` for generator rows `c` and basis
/// elements `beta` of the extension.
pub fn trace_code_in(code: &LinearCode, ext: &Extension) -> Result<LinearCode> {
    check_ext(code, ext)?;
    let big = ext.ext();
    let mut rows = Vec::with_capacity(code.k() * ext.degree());
    for row in code.generator() {
        for &beta in ext.basis() {
            rows.push(row.iter().map(|&x| ext.trace(big.mul(beta, x))).collect());
        }
    }
    Ok(LinearCode::from_rows_unchecked(ext.sub(), code.n(), rows))
}

/// Subfield subcode `C ∩ GF(q)^n`, solved directly: each parity check over
/// GF(q^d) splits into `d` checks over GF(q) through the basis coordinates.
pub fn restriction_in(code: &LinearCode, ext: &Extension) -> Result<LinearCode> {
    check_ext(code, ext)?;
    let h = code.parity_check();
    let d = ext.degree();
    let mut rows: Vec<Vec<Elem>> = Vec::with_capacity(h.len() * d);
    for row in &h {
        for t in 0..d {
            rows.push(row.iter().map(|&x| ext.coords(x)[t]).collect());
        }
    }
    let basis = null_space(ext.sub(), &rows, code.n());
    Ok(LinearCode::from_rows_unchecked(ext.sub(), code.n(), basis))
}

/// Trace code of a code over GF(q²).
pub fn trace_code(code: &LinearCode) -> Result<LinearCode> {
    trace_code_in(code, &Extension::quadratic_over(code.field())?)
}

/// Subfield subcode of a code over GF(q²).
pub fn restriction(code: &LinearCode) -> Result<LinearCode> {
    restriction_in(code, &Extension::quadratic_over(code.field())?)
}

/// Subfield subcode through the trace route: `tr(C^⊥)^⊥`.
pub fn restriction_via_trace(code: &LinearCode) -> Result<LinearCode> {
    Ok(trace_code(&code.dual())?.dual())
}

impl Extension {
    /// Embeds a GF(q) vector coordinatewise.
    pub fn embed_vector(&self, v: &[Elem]) -> Vec<Elem> {
        v.iter().map(|&x| self.embed(x)).collect()
    }

    /// The same code, read over the extension field.
    pub fn extend_code(&self, code: &LinearCode) -> Result<LinearCode> {
        if code.q() != self.sub().q() {
            return Err(Error::FieldMismatch {
                left: code.q(),
                right: self.sub().q(),
            });
        }
        let rows = code.generator().iter().map(|r| self.embed_vector(r)).collect();
        Ok(LinearCode::from_rows_unchecked(self.ext(), code.n(), rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    #[test]
    fn hermitian_dual_of_zero_is_full() {
        let f = FieldSpec::new(9).unwrap();
        assert_eq!(
            hermitian_dual(&LinearCode::zero(&f, 3)).unwrap(),
            LinearCode::full(&f, 3)
        );
    }

    #[test]
    fn hermitian_dual_of_single_one() {
        let f = FieldSpec::new(4).unwrap();
        let c = LinearCode::repetition(&f, 1);
        assert_eq!(hermitian_dual(&c).unwrap().k(), 0);
    }

    #[test]
    fn hermitian_dual_needs_quadratic_field() {
        let f = FieldSpec::new(8).unwrap();
        assert!(matches!(
            hermitian_dual(&LinearCode::full(&f, 2)),
            Err(Error::NoEmbeddingDefined { .. })
        ));
        let f5 = FieldSpec::new(5).unwrap();
        assert!(trace_code(&LinearCode::full(&f5, 2)).is_err());
    }

    #[test]
    fn trace_of_code_with_subfield_generators() {
        // tr(g) = 2g = 0 row by row, but the code also holds zeta * g and
        // tr(zeta * g) = tr(zeta) g, so the trace code is the GF(2) span.
        let ext = Extension::quadratic(2).unwrap();
        let f = ext.ext().clone();
        let rows = vec![vec![1, 0, 1], vec![0, 1, 1]];
        for row in &rows {
            assert!(row.iter().all(|&x| ext.trace(x) == 0));
        }
        let c = LinearCode::from_generators(&f, 3, rows.clone()).unwrap();
        let t = trace_code(&c).unwrap();
        assert_eq!(t, LinearCode::from_generators(ext.sub(), 3, rows).unwrap());
    }

    #[test]
    fn full_space_maps_to_full_space() {
        for qq in [4, 9, 16, 25] {
            let f = FieldSpec::new(qq).unwrap();
            let full = LinearCode::full(&f, 4);
            let sub = FieldSpec::new(crate::gf::exact_sqrt(qq).unwrap()).unwrap();
            assert_eq!(trace_code(&full).unwrap(), LinearCode::full(&sub, 4));
            assert_eq!(restriction(&full).unwrap(), LinearCode::full(&sub, 4));
        }
    }

    #[test]
    fn restriction_of_scaled_ones() {
        let f = FieldSpec::new(4).unwrap();
        let zeta = f.generator();
        let d = LinearCode::from_generators(&f, 2, vec![vec![zeta, zeta]]).unwrap();
        let r = restriction(&d).unwrap();
        assert_eq!(r.q(), 2);
        assert_eq!(r.generator(), &[vec![1, 1]]);
    }

    #[test]
    fn restriction_routes_agree() {
        let f = FieldSpec::new(9).unwrap();
        let d = LinearCode::from_generators(&f, 4, vec![vec![1, 3, 0, 5], vec![0, 2, 7, 1]]).unwrap();
        assert_eq!(restriction(&d).unwrap(), restriction_via_trace(&d).unwrap());
    }
}
