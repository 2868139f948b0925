use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pqn_core::exterior::{
    d_n_cartan, exterior_derivative, koszul_bracket_graded, schouten_bracket, DifferentialForm,
    MultiVectorField, PoissonBivector,
};
use pqn_core::gencplx::{
    algebraic_defects, build_j, courant_axiom_defects, deformed_bracket, double_bracket,
    integrability_defect, lemma74_defects, prop75_equivalence, std_bracket, verify_theorem_d,
    CourantStructure, GeneralizedEndomorphism, GeneralizedSection,
};
use pqn_core::random;
use pqn_core::structures::{
    check_pn, check_pqn, lie_algebroid_defect, poisson_defect, symplectic_quasi_check,
    verify_theorem_a, Defect, DefectReport, PairedVerdict, StructureData, POISSON,
};

use crate::instance::{parse_instance, tensor_doc, CourantKind, Instance, Kind, Tensor};
use crate::report::{ReportDocument, ResultOut, SectionOut};

#[derive(Debug, Parser)]
#[command(
    name = "pqn",
    version,
    about = "Exact checks for Poisson quasi-Nijenhuis and generalized complex structures"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Instance document (JSON).
    #[arg(long)]
    pub instance: std::path::PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random trials for the sampling commands.
    #[arg(long, default_value_t = 25)]
    pub trials: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Add wall-clock time to the report; output is then no longer reproducible.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// [pi,pi] = 0 and the Lie algebroid (T*M)_pi.
    CheckPoisson(Common),
    /// Poisson-Nijenhuis conditions on (pi, N).
    CheckPn(Common),
    /// Poisson quasi-Nijenhuis conditions on (pi, N, phi) or (pi, N, d sigma).
    CheckPqn(Common),
    /// Symplectic quasi-Nijenhuis conditions on (omega, N, phi).
    CheckSymplecticQuasi(Common),
    /// Algebraic conditions and integrability of J built from (pi, N, sigma).
    CheckGcs(Common),
    /// Quasi-Nijenhuis structure vs quasi-Lie bialgebroid, on (pi, N, phi).
    VerifyTheoremA(Common),
    /// Integrability of J vs the quasi-Nijenhuis conditions, on (pi, N, sigma).
    VerifyTheoremD(Common),
    /// The five Courant algebroid axioms on random sections and functions.
    CourantAxioms(Common),
    /// Deformed bracket against its closed forms on random pairs.
    Lemma74(Common),
    /// Deformed structure against the double on random pairs.
    Prop75(Common),
    /// Single computations.
    #[command(subcommand)]
    Compute(ComputeOp),
}

#[derive(Debug, Subcommand)]
pub enum ComputeOp {
    /// [P, Q].
    Schouten(Common),
    /// d alpha.
    D(Common),
    /// d_N alpha.
    Dn(Common),
    /// [alpha, beta]_pi.
    Koszul(Common),
    /// Standard Courant bracket of X + xi and Y + eta.
    BracketStd(Common),
    /// Bracket deformed by J(pi, N, sigma).
    BracketDeformed(Common),
    /// Bracket of the double of ((T*M)_pi, d_N, phi).
    BracketDouble(Common),
}

impl Command {
    pub fn name(&self) -> String {
        let s = match self {
            Command::CheckPoisson(_) => "check-poisson",
            Command::CheckPn(_) => "check-pn",
            Command::CheckPqn(_) => "check-pqn",
            Command::CheckSymplecticQuasi(_) => "check-symplectic-quasi",
            Command::CheckGcs(_) => "check-gcs",
            Command::VerifyTheoremA(_) => "verify-theorem-a",
            Command::VerifyTheoremD(_) => "verify-theorem-d",
            Command::CourantAxioms(_) => "courant-axioms",
            Command::Lemma74(_) => "lemma74",
            Command::Prop75(_) => "prop75",
            Command::Compute(op) => {
                return format!(
                    "compute {}",
                    match op {
                        ComputeOp::Schouten(_) => "schouten",
                        ComputeOp::D(_) => "d",
                        ComputeOp::Dn(_) => "dn",
                        ComputeOp::Koszul(_) => "koszul",
                        ComputeOp::BracketStd(_) => "bracket-std",
                        ComputeOp::BracketDeformed(_) => "bracket-deformed",
                        ComputeOp::BracketDouble(_) => "bracket-double",
                    }
                )
            }
        };
        s.to_string()
    }

    pub fn common(&self) -> &Common {
        match self {
            Command::CheckPoisson(c)
            | Command::CheckPn(c)
            | Command::CheckPqn(c)
            | Command::CheckSymplecticQuasi(c)
            | Command::CheckGcs(c)
            | Command::VerifyTheoremA(c)
            | Command::VerifyTheoremD(c)
            | Command::CourantAxioms(c)
            | Command::Lemma74(c)
            | Command::Prop75(c) => c,
            Command::Compute(op) => match op {
                ComputeOp::Schouten(c)
                | ComputeOp::D(c)
                | ComputeOp::Dn(c)
                | ComputeOp::Koszul(c)
                | ComputeOp::BracketStd(c)
                | ComputeOp::BracketDeformed(c)
                | ComputeOp::BracketDouble(c) => c,
            },
        }
    }
}

/// Reads the instance and runs the command. Errors carry the message shown
/// to the user.
pub fn execute(cmd: &Command) -> Result<ReportDocument, String> {
    let common = cmd.common();
    let text = std::fs::read_to_string(&common.instance)
        .map_err(|e| format!("cannot read {}: {e}", common.instance.display()))?;
    let inst = parse_instance(&text).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let mut report = run_command(cmd, &inst)?;
    if common.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}

/// Exit status for a finished report: 0 unless a verdict is false.
pub fn exit_code(report: &ReportDocument) -> i32 {
    match report.verdict {
        Some(false) => 1,
        _ => 0,
    }
}

pub fn render(report: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    }
}

fn core_err(e: pqn_core::Error) -> String {
    e.to_string()
}

fn single(report: &mut ReportDocument, name: &str, r: &DefectReport) {
    report.sections.push(SectionOut::from_report(name, r));
    report.verdict = Some(r.verdict());
}

fn paired(report: &mut ReportDocument, v: &PairedVerdict) {
    report
        .sections
        .push(SectionOut::from_report("left", &v.left));
    report
        .sections
        .push(SectionOut::from_report("right", &v.right));
    report.verdict = Some(v.agree());
}

fn structure_data(inst: &Instance) -> Result<StructureData, String> {
    let pi = inst.multivector("pi").map_err(|e| e.0)?.clone();
    let endo = inst.endomorphism("N").map_err(|e| e.0)?.clone();
    let phi = inst.optional_form("phi").map_err(|e| e.0)?.cloned();
    let sigma = inst.optional_form("sigma").map_err(|e| e.0)?.cloned();
    if phi.is_none() && sigma.is_none() {
        return Err("missing tensor 'phi' (or 'sigma') for this command".into());
    }
    let mut data = StructureData::new(pi);
    data.endo = Some(endo);
    data.phi = phi;
    data.sigma = sigma;
    data.omega = inst.optional_form("omega").map_err(|e| e.0)?.cloned();
    Ok(data)
}

fn j_blocks(inst: &Instance) -> Result<GeneralizedEndomorphism, String> {
    build_j(
        inst.multivector("pi").map_err(|e| e.0)?,
        inst.endomorphism("N").map_err(|e| e.0)?,
        inst.form("sigma").map_err(|e| e.0)?,
    )
    .map_err(core_err)
}

fn section(inst: &Instance, vector: &str, form: &str) -> Result<GeneralizedSection, String> {
    let n = inst.n;
    let x = inst.optional_multivector(vector).map_err(|e| e.0)?;
    let xi = inst.optional_form(form).map_err(|e| e.0)?;
    if x.is_none() && xi.is_none() {
        return Err(format!(
            "missing tensor '{vector}' or '{form}' for this command"
        ));
    }
    GeneralizedSection::new(
        x.cloned().unwrap_or_else(|| MultiVectorField::zero(n, 1)),
        xi.cloned().unwrap_or_else(|| DifferentialForm::zero(n, 1)),
    )
    .map_err(core_err)
}

fn multivector_out(field: MultiVectorField) -> ResultOut {
    let kind = if field.degree() == 2 {
        Kind::Bivector
    } else {
        Kind::Vector
    };
    ResultOut::Tensor(tensor_doc(&Tensor::Multivector { kind, field }))
}

fn form_out(f: DifferentialForm) -> ResultOut {
    ResultOut::Tensor(tensor_doc(&Tensor::Form(f)))
}

fn section_out(s: &GeneralizedSection) -> ResultOut {
    ResultOut::Section {
        vector: tensor_doc(&Tensor::Multivector {
            kind: Kind::Vector,
            field: s.vector().clone(),
        }),
        form: tensor_doc(&Tensor::Form(s.form().clone())),
    }
}

fn courant_structure(inst: &Instance) -> Result<CourantStructure, String> {
    match inst.courant.unwrap_or(CourantKind::Standard) {
        CourantKind::Standard => Ok(CourantStructure::Standard),
        CourantKind::Deformed => Ok(CourantStructure::Deformed(j_blocks(inst)?)),
        CourantKind::Double => CourantStructure::double(
            inst.multivector("pi").map_err(|e| e.0)?.clone(),
            inst.endomorphism("N").map_err(|e| e.0)?.clone(),
            inst.form("phi").map_err(|e| e.0)?.clone(),
        )
        .map_err(core_err),
    }
}

/// Axiom defects on `trials` seeded tuples of three sections and two
/// functions, one family per axiom.
fn courant_report(s: &CourantStructure, n: usize, trials: u64, seed: u64) -> DefectReport {
    let mut identities: Vec<String> = Vec::new();
    let mut families: Vec<Vec<(String, Defect)>> = Vec::new();
    for t in 0..trials {
        let mut rng = random::trial_rng(seed, t);
        let sections: Vec<_> = (0..3).map(|_| random::section(&mut rng, n, 2)).collect();
        let functions: Vec<_> = (0..2).map(|_| random::polynomial(&mut rng, n, 2)).collect();
        let r = courant_axiom_defects(s, &sections, &functions);
        if identities.is_empty() {
            identities = r.entries().iter().map(|e| e.identity.clone()).collect();
            families = vec![Vec::new(); identities.len()];
        }
        for (fam, e) in families.iter_mut().zip(r.entries()) {
            fam.push((format!("trial{}", t + 1), e.defect.clone()));
        }
    }
    let mut out = DefectReport::new();
    for (id, fam) in identities.into_iter().zip(families) {
        out.push(id, Defect::Family(fam));
    }
    out
}

pub fn run_command(cmd: &Command, inst: &Instance) -> Result<ReportDocument, String> {
    let common = cmd.common();
    let (seed, trials) = (common.seed, common.trials);
    let mut report = ReportDocument::new(&cmd.name(), seed, trials);
    let e = |e: crate::instance::InstanceError| e.0;
    match cmd {
        Command::CheckPoisson(_) => {
            let pi = inst.multivector("pi").map_err(e)?;
            let mut r = DefectReport::new();
            r.push(POISSON, Defect::MultiVector(poisson_defect(pi)));
            r.push("(T*M)_pi is a Lie algebroid", lie_algebroid_defect(pi));
            single(&mut report, "poisson", &r);
        }
        Command::CheckPn(_) => {
            let r = check_pn(
                inst.multivector("pi").map_err(e)?,
                inst.endomorphism("N").map_err(e)?,
            );
            single(&mut report, "pn", &r);
        }
        Command::CheckPqn(_) => {
            let r = check_pqn(&structure_data(inst)?).map_err(core_err)?;
            single(&mut report, "pqn", &r);
        }
        Command::CheckSymplecticQuasi(_) => {
            let r = symplectic_quasi_check(
                inst.form("omega").map_err(e)?,
                inst.endomorphism("N").map_err(e)?,
                inst.form("phi").map_err(e)?,
            )
            .map_err(core_err)?;
            single(&mut report, "symplectic-quasi", &r);
        }
        Command::CheckGcs(_) => {
            let j = j_blocks(inst)?;
            let alg = algebraic_defects(&j);
            report
                .sections
                .push(SectionOut::from_report("algebraic", &alg));
            let mut verdict = alg.verdict();
            if verdict {
                let int = integrability_defect(&j).map_err(core_err)?;
                report
                    .sections
                    .push(SectionOut::from_report("integrability", &int));
                verdict = int.verdict();
            }
            report.verdict = Some(verdict);
        }
        Command::VerifyTheoremA(_) => {
            let v = verify_theorem_a(&structure_data(inst)?).map_err(core_err)?;
            paired(&mut report, &v);
        }
        Command::VerifyTheoremD(_) => {
            let v = verify_theorem_d(
                inst.multivector("pi").map_err(e)?,
                inst.endomorphism("N").map_err(e)?,
                inst.form("sigma").map_err(e)?,
            )
            .map_err(core_err)?;
            paired(&mut report, &v);
        }
        Command::CourantAxioms(_) => {
            let s = courant_structure(inst)?;
            let r = courant_report(&s, inst.n, trials, seed);
            single(&mut report, "courant", &r);
        }
        Command::Lemma74(_) => {
            let r = lemma74_defects(&j_blocks(inst)?, trials, seed);
            single(&mut report, "lemma74", &r);
        }
        Command::Prop75(_) => {
            let r = prop75_equivalence(
                inst.multivector("pi").map_err(e)?,
                inst.endomorphism("N").map_err(e)?,
                inst.form("sigma").map_err(e)?,
                trials,
                seed,
            )
            .map_err(core_err)?;
            single(&mut report, "prop75", &r);
        }
        Command::Compute(op) => {
            report.result = Some(match op {
                ComputeOp::Schouten(_) => {
                    let p = inst.multivector("P").map_err(e)?;
                    let q = inst.multivector("Q").map_err(e)?;
                    multivector_out(schouten_bracket(p, q))
                }
                ComputeOp::D(_) => form_out(exterior_derivative(inst.form("alpha").map_err(e)?)),
                ComputeOp::Dn(_) => form_out(d_n_cartan(
                    inst.endomorphism("N").map_err(e)?,
                    inst.form("alpha").map_err(e)?,
                )),
                ComputeOp::Koszul(_) => {
                    let pi = PoissonBivector::try_new(inst.multivector("pi").map_err(e)?.clone())
                        .map_err(core_err)?;
                    form_out(koszul_bracket_graded(
                        &pi,
                        inst.form("alpha").map_err(e)?,
                        inst.form("beta").map_err(e)?,
                    ))
                }
                ComputeOp::BracketStd(_) => {
                    let (v, w) = (section(inst, "X", "xi")?, section(inst, "Y", "eta")?);
                    section_out(&std_bracket(&v, &w))
                }
                ComputeOp::BracketDeformed(_) => {
                    let j = j_blocks(inst)?;
                    let (v, w) = (section(inst, "X", "xi")?, section(inst, "Y", "eta")?);
                    section_out(&deformed_bracket(&j, &v, &w))
                }
                ComputeOp::BracketDouble(_) => {
                    let (v, w) = (section(inst, "X", "xi")?, section(inst, "Y", "eta")?);
                    let b = double_bracket(
                        inst.multivector("pi").map_err(e)?,
                        inst.endomorphism("N").map_err(e)?,
                        inst.form("phi").map_err(e)?,
                        &v,
                        &w,
                    )
                    .map_err(core_err)?;
                    section_out(&b)
                }
            });
        }
    }
    Ok(report)
}
