mod common;

use common::*;
use qrm_core::gf::FieldSpec;
use qrm_core::grm::{build_grm, dual_order, max_order};
use qrm_core::lincode::{hermitian_dual, min_weight, Limits};
use qrm_core::qcode::{css_grm, hermitian_grm, StabilizerMatrix};

#[test]
fn css_grm_codes_are_pure_with_predicted_parameters() {
    let lim = Limits::default();
    for q in [2u32, 3, 4] {
        for m in [1usize, 2] {
            let top = m * (q as usize - 1) - 1;
            for nu2 in 0..=top {
                for nu1 in 0..nu2 {
                    let qc = css_grm(q, m, nu1, nu2, &lim).unwrap();
                    let r = &qc.record;
                    let n = (q as u64).pow(m as u32);
                    let k = k_formula(q as u64, m, nu2) - k_formula(q as u64, m, nu1);
                    let perp = m * (q as usize - 1) - 1 - nu1;
                    let d = d_formula(q as u64, m, nu2).min(d_formula(q as u64, m, perp));
                    assert!(r.k.exact && r.d.exact, "{}", r.params());
                    assert_eq!(
                        (r.n as u64, r.k.value as u64, r.d.value as u64),
                        (n, k, d),
                        "{q} {m} {nu1} {nu2}"
                    );
                    assert_eq!(r.pure, Some(true));
                    let StabilizerMatrix::Css { field, x, z } = &qc.stabilizer else {
                        unreachable!()
                    };
                    for i in 0..x.len() {
                        for j in 0..x.len() {
                            assert_eq!(field.sub(dot(field, &x[i], &z[j]), dot(field, &z[i], &x[j])), 0);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn hermitian_grm_distance_matches_closed_form() {
    let lim = Limits::default();
    for (q, m) in [(2u32, 1usize), (3, 1), (2, 2)] {
        for nu in 0..m * (q as usize - 1) {
            let qc = hermitian_grm(q, m, nu, &lim).unwrap();
            let s = (q * q - 1) as usize;
            let (bq, br) = ((nu + 1) / s, (nu + 1) % s);
            let formula = (br + 1) * (q as usize).pow(2 * bq as u32);
            assert_eq!(qc.record.d.value, formula, "{q} {m} {nu}");
            assert!(qc.record.d.exact && qc.record.all_checks_pass());
        }
    }
}

#[test]
fn hermitian_dual_has_the_euclidean_dual_weight() {
    let lim = Limits::default();
    for (qq, m) in [(4u32, 1usize), (9, 1), (4, 2), (16, 1)] {
        for nu in 0..max_order(qq as u64, m) {
            let c = build_grm(qq, m, nu).unwrap().code;
            let herm = min_weight(&hermitian_dual(&c).unwrap(), &lim).unwrap();
            let eucl = min_weight(&c.dual(), &lim).unwrap();
            assert!(herm.exact && eucl.exact);
            assert_eq!(herm.weight, eucl.weight, "q={qq} m={m} nu={nu}");
            let perp = dual_order(qq as u64, m, nu).unwrap();
            assert_eq!(eucl.weight as u64, d_formula(qq as u64, m, perp));
        }
    }
}

#[test]
fn hermitian_stabilizer_expansion_commutes() {
    let lim = Limits::default();
    for (q, m, nu) in [(2u32, 2usize, 1usize), (3, 1, 1), (4, 1, 2)] {
        let qc = hermitian_grm(q, m, nu, &lim).unwrap();
        let (f, x, z) = qc.stabilizer.symplectic_form().unwrap();
        assert_eq!(f.q(), q);
        assert_eq!(x.len(), 2 * build_grm(q * q, m, nu).unwrap().code.k());
        let sub = FieldSpec::new(q).unwrap();
        for i in 0..x.len() {
            for j in 0..x.len() {
                assert_eq!(sub.sub(dot(&sub, &x[i], &z[j]), dot(&sub, &z[i], &x[j])), 0);
            }
        }
    }
}
