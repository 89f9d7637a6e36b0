use qrm_core::grm::{self, build_grm};
use qrm_core::lincode::{min_weight, weight_distribution, Limits, LinearCode};
use qrm_core::puncture::{
    find_weight_witness, mds_chain, puncture_code_css_grm, puncture_code_hermitian_grm, puncture_css,
    puncture_hermitian, PunctureCodeRecord,
};
use qrm_core::qcode::{css_grm, hermitian_grm, Check, Param, QuantumCode, StabilizerMatrix};
use qrm_core::report::{ClassicalRecord, MatrixDump, Record, RunReport};
use qrm_core::Result;

use super::{Command, CssArgs, Family, GrmArgs, HermitianArgs, PunctureAction, PunctureCmd, QuantumCmd, SweepArgs};

pub fn run(cmd: &Command, limits: &Limits) -> RunReport {
    let name = match cmd {
        Command::Grm(_) => "grm",
        Command::Quantum(QuantumCmd::Css(_)) => "quantum css",
        Command::Quantum(QuantumCmd::Hermitian(_)) => "quantum hermitian",
        Command::Puncture(PunctureCmd::Css { .. }) => "puncture css",
        Command::Puncture(PunctureCmd::Hermitian { .. }) => "puncture hermitian",
        Command::Sweep(_) => "sweep",
    };
    let mut report = RunReport::new(name, limits);
    let result = match cmd {
        Command::Grm(a) => grm_cmd(&mut report, a, limits),
        Command::Quantum(QuantumCmd::Css(a)) => quantum_css(&mut report, a, limits),
        Command::Quantum(QuantumCmd::Hermitian(a)) => quantum_hermitian(&mut report, a, limits),
        Command::Puncture(PunctureCmd::Css { code, action }) => puncture_css_cmd(&mut report, code, action, limits),
        Command::Puncture(PunctureCmd::Hermitian { code, action }) => {
            puncture_hermitian_cmd(&mut report, code, action, limits)
        }
        Command::Sweep(a) => sweep(&mut report, a, limits),
    };
    if let Err(e) = result {
        report.fail_with(&e);
    }
    report
}

fn classical(label: String, code: &LinearCode) -> ClassicalRecord {
    ClassicalRecord {
        label,
        q: code.q(),
        n: code.n(),
        k: code.k(),
        d: None,
        k_formula: None,
        d_formula: None,
        weight_distribution: None,
        generator: None,
    }
}

fn grm_cmd(report: &mut RunReport, a: &GrmArgs, limits: &Limits) -> Result<()> {
    report.param("q", a.q).param("m", a.m).param("order", a.order);
    let c = build_grm(a.q, a.m, a.order)?;
    let mw = min_weight(&c.code, limits)?;
    let d = Param {
        value: mw.weight,
        exact: mw.exact,
    };
    let mut rec = classical(c.label(), &c.code);
    rec.d = Some(d);
    rec.k_formula = Some(c.k_formula);
    rec.d_formula = Some(c.d_formula);
    report
        .checks
        .push(Check::compare("k", c.k_formula, c.code.k() as u64, true));
    report
        .checks
        .push(Check::compare("d", c.d_formula, d.value as u64, d.exact));
    if !d.exact {
        report.cap.capped = true;
    }
    if a.dual_check {
        let dual = c.code.dual();
        match c.nu_perp {
            Some(perp) => {
                let other = build_grm(a.q, a.m, perp)?;
                report.checks.push(Check::holds(
                    &format!("dual equals {}", other.label()),
                    dual == other.code,
                ));
            }
            None => report.checks.push(Check::holds("dual is the zero code", dual.k() == 0)),
        }
    }
    if a.weights {
        let wd = weight_distribution(&c.code, limits)?;
        if !wd.exact {
            report.cap.capped = true;
        }
        rec.weight_distribution = Some(wd);
    }
    if a.dump {
        rec.generator = Some(c.code.generator().to_vec());
    }
    report.records.push(Record::Classical(rec));
    Ok(())
}

fn stabilizer_dump(qc: &QuantumCode) -> MatrixDump {
    match &qc.stabilizer {
        StabilizerMatrix::Css { field, x, z } => MatrixDump {
            label: "stabilizer (X | Z)".into(),
            q: field.q(),
            rows: x
                .iter()
                .zip(z)
                .map(|(a, b)| [a.as_slice(), b.as_slice()].concat())
                .collect(),
        },
        StabilizerMatrix::Hermitian { field, rows } => MatrixDump {
            label: "stabilizer generators".into(),
            q: field.q(),
            rows: rows.clone(),
        },
    }
}

fn push_code(report: &mut RunReport, qc: QuantumCode, dump: bool) {
    if dump {
        report.records.push(Record::Matrix(stabilizer_dump(&qc)));
    }
    report.push_quantum(qc.record);
}

fn quantum_css(report: &mut RunReport, a: &CssArgs, limits: &Limits) -> Result<()> {
    report
        .param("q", a.q)
        .param("m", a.m)
        .param("nu1", a.nu1)
        .param("nu2", a.nu2);
    let qc = css_grm(a.q, a.m, a.nu1, a.nu2, limits)?;
    push_code(report, qc, a.dump);
    Ok(())
}

fn quantum_hermitian(report: &mut RunReport, a: &HermitianArgs, limits: &Limits) -> Result<()> {
    report.param("q", a.q).param("m", a.m).param("nu", a.nu);
    let qc = hermitian_grm(a.q, a.m, a.nu, limits)?;
    push_code(report, qc, a.dump);
    Ok(())
}

fn list_weights(report: &mut RunReport, rec: &PunctureCodeRecord, limits: &Limits) -> Result<()> {
    let wd = weight_distribution(&rec.pcode, limits)?;
    if !wd.exact {
        report.cap.capped = true;
    }
    let mut c = classical("puncture code".into(), &rec.pcode);
    c.d = wd.min_nonzero_weight().map(|w| Param {
        value: w,
        exact: wd.exact,
    });
    c.weight_distribution = Some(wd);
    report.records.push(Record::Classical(c));
    Ok(())
}

fn puncture_css_cmd(report: &mut RunReport, a: &CssArgs, action: &PunctureAction, limits: &Limits) -> Result<()> {
    report
        .param("q", a.q)
        .param("m", a.m)
        .param("nu1", a.nu1)
        .param("nu2", a.nu2);
    let rec = puncture_code_css_grm(a.q, a.m, a.nu1, a.nu2)?;
    report.push_puncture(rec.summary());
    if action.mds_chain {
        return Err(qrm_core::Error::WitnessInvalid(
            "--mds-chain needs the hermitian kind".into(),
        ));
    }
    if action.list_weights {
        return list_weights(report, &rec, limits);
    }
    let r = action.target_weight.expect("clap requires one action");
    report.param("target_weight", r);
    let w = find_weight_witness(&rec, r, limits)?;
    report.records.push(Record::Witness(w.clone()));
    let qc = puncture_css(&rec, &w, limits)?;
    push_code(report, qc, a.dump);
    Ok(())
}

fn puncture_hermitian_cmd(
    report: &mut RunReport,
    a: &HermitianArgs,
    action: &PunctureAction,
    limits: &Limits,
) -> Result<()> {
    report.param("q", a.q).param("m", a.m).param("nu", a.nu);
    if action.mds_chain {
        if a.m != 1 {
            return Err(qrm_core::Error::WitnessInvalid("--mds-chain needs m = 1".into()));
        }
        let chain = mds_chain(a.q, a.nu, limits)?;
        report.push_puncture(chain.puncture.summary());
        report.records.push(Record::Witness(chain.witness));
        push_code(report, chain.quantum, a.dump);
        return Ok(());
    }
    let rec = puncture_code_hermitian_grm(a.q, a.m, a.nu)?;
    report.push_puncture(rec.summary());
    if action.list_weights {
        return list_weights(report, &rec, limits);
    }
    let r = action.target_weight.expect("clap requires one action");
    report.param("target_weight", r);
    let w = find_weight_witness(&rec, r, limits)?;
    report.records.push(Record::Witness(w.clone()));
    let qc = puncture_hermitian(&rec, &w, limits)?;
    push_code(report, qc, a.dump);
    Ok(())
}

fn sweep(report: &mut RunReport, a: &SweepArgs, limits: &Limits) -> Result<()> {
    report.param("q", &a.q);
    match a.family {
        Family::Css => {
            report.param("family", "css").param("m", &a.m);
            for &q in &a.q {
                for &m in &a.m {
                    let top = grm::max_order(q as u64, m).saturating_sub(1);
                    for nu2 in 0..=top {
                        for nu1 in 0..=nu2 {
                            report.push_quantum(css_grm(q, m, nu1, nu2, limits)?.record);
                        }
                    }
                }
            }
        }
        Family::Hermitian => {
            report.param("family", "hermitian").param("m", &a.m);
            for &q in &a.q {
                for &m in &a.m {
                    let top = grm::max_order(q as u64, m).saturating_sub(1);
                    for nu in 0..=top {
                        report.push_quantum(hermitian_grm(q, m, nu, limits)?.record);
                    }
                }
            }
        }
        Family::Mds => {
            report.param("family", "mds");
            for &q in &a.q {
                for nu in 0..=(q as usize).saturating_sub(2) {
                    report.push_quantum(mds_chain(q, nu, limits)?.quantum.record);
                }
            }
        }
    }
    Ok(())
}
