//! Subcommand implementations. All output is deterministic: sets serialize
//! sorted ascending and documents use fixed field order.

use crate::{CliError, CommonOpts, Format};
use matroid_forge::generate::{generate, GeneratorSpec, MatroidFamily};
use matroid_forge::instance::{parse_instance, serialize_instance, InstanceFile};
use matroid_forge::{
    check_axioms as lib_check_axioms, classify_uniform as lib_classify, intersection_witness_with,
    max_common_independent, verify_witness, AxiomReport, ExplicitMatroid, IntersectOptions,
    Matroid, PartitionMatroid, Subset, Thresholds, TraceEvent, UniformClass, VerificationReport,
    Witness,
};
use serde::Serialize;
use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;

fn print_doc<T: Serialize>(format: Format, doc: &T, text: impl FnOnce(&T) -> String) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(doc).expect("documents serialize"))
        }
        Format::Text => print!("{}", text(doc)),
    }
}

fn load(common: &CommonOpts) -> Result<(Arc<dyn Matroid>, PartitionMatroid, Thresholds), CliError> {
    let thresholds = common.thresholds()?;
    let text = common.read_input()?;
    let (m, n) = parse_instance(&text, &thresholds)?;
    Ok((m, n, thresholds))
}

#[derive(Serialize)]
struct IntersectDoc {
    witness: Witness,
    #[serde(rename = "certificate_A")]
    certificate: Subset,
    size: usize,
    edmonds_size: usize,
    agreement: bool,
    verification: VerificationReport,
    theta_heuristic_exhausted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<TraceEvent>>,
}

pub fn intersect(common: &CommonOpts, trace: bool, seed: u64) -> Result<ExitCode, CliError> {
    let (m, n, thresholds) = load(common)?;
    let opts = IntersectOptions { thresholds, theta_seed: seed, collect_trace: trace };
    let run = intersection_witness_with(m.clone(), &n, &opts)?;
    let verification = verify_witness(&*m, &n, &run.witness);
    let oracle = max_common_independent(&*m, &n)?;
    let agreement = oracle.size() == run.witness.set.len();
    let doc = IntersectDoc {
        certificate: verification.certificate,
        size: run.witness.set.len(),
        edmonds_size: oracle.size(),
        agreement,
        theta_heuristic_exhausted: run.log.heuristic_gave_up,
        trace: trace.then_some(run.log.trace),
        witness: run.witness,
        verification,
    };
    let ok = doc.agreement && doc.verification.ok();
    print_doc(common.format, &doc, |d| {
        let mut out = String::new();
        out += &format!("I   = {}\n", d.witness.set);
        out += &format!("I_M = {}\n", d.witness.m_side);
        out += &format!("I_N = {}\n", d.witness.n_side);
        out += &format!("A   = {}\n", d.certificate);
        out += &format!("size = {} (oracle {})\n", d.size, d.edmonds_size);
        out += &format!("agreement = {}\n", d.agreement);
        out += &format!("verified = {}\n", d.verification.ok());
        for f in &d.verification.failures {
            out += &format!("failure: {f}\n");
        }
        out
    });
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

#[derive(Serialize)]
struct EdmondsDoc {
    #[serde(rename = "I_star")]
    set: Subset,
    #[serde(rename = "A")]
    certificate: Subset,
    size: usize,
    certified: bool,
}

pub fn edmonds(common: &CommonOpts) -> Result<ExitCode, CliError> {
    let (m, n, _) = load(common)?;
    let opt = max_common_independent(&*m, &n)?;
    let certified = matroid_forge::certify(&*m, &n, opt.set, opt.certificate)?;
    let doc =
        EdmondsDoc { set: opt.set, certificate: opt.certificate, size: opt.set.len(), certified };
    print_doc(common.format, &doc, |d| {
        format!("I* = {}\nA  = {}\nsize = {}\ncertified = {}\n", d.set, d.certificate, d.size, d.certified)
    });
    Ok(if certified { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

pub fn verify(common: &CommonOpts, witness_path: &Path) -> Result<ExitCode, CliError> {
    let (m, n, _) = load(common)?;
    let witness_text = std::fs::read_to_string(witness_path)
        .map_err(|e| CliError::Io(format!("{}: {e}", witness_path.display())))?;
    let witness: Witness = serde_json::from_str(&witness_text)
        .map_err(|e| CliError::Io(format!("witness document: {e}")))?;
    let report = verify_witness(&*m, &n, &witness);
    let ok = report.ok();
    print_doc(common.format, &report, |r| {
        let mut out = format!("verified = {}\n", r.ok());
        for f in &r.failures {
            out += &format!("failure: {f}\n");
        }
        out
    });
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

#[derive(Serialize)]
struct AxiomsDoc {
    #[serde(rename = "M")]
    m: AxiomReport,
    #[serde(rename = "N")]
    n: AxiomReport,
    passed: bool,
}

pub fn check_axioms(common: &CommonOpts) -> Result<ExitCode, CliError> {
    let thresholds = common.thresholds()?;
    let text = common.read_input()?;
    let file: InstanceFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Io(format!("instance document: {e}")))?;
    // Lenient instantiation so violating explicit families still get a
    // report rather than a parse rejection.
    let (m, n) = file.instantiate_lenient()?;
    let m_family = ExplicitMatroid::from_matroid(&*m)?;
    let m_report = lib_check_axioms(m.ground(), &m_family.family(), &thresholds)?;
    let n_family = ExplicitMatroid::from_matroid(&n)?;
    let n_report = lib_check_axioms(n.ground(), &n_family.family(), &thresholds)?;
    let passed = m_report.passed() && n_report.passed();
    let doc = AxiomsDoc { m: m_report, n: n_report, passed };
    print_doc(common.format, &doc, |d| {
        format!("M: {}\nN: {}\n", d.m, d.n)
    });
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

#[derive(Serialize)]
struct ClassifyDoc {
    classification: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Subset>,
}

pub fn classify_uniform(common: &CommonOpts) -> Result<ExitCode, CliError> {
    let (m, _, thresholds) = load(common)?;
    let doc = match lib_classify(&*m, &thresholds)? {
        UniformClass::Free => ClassifyDoc { classification: "free", rank: None, witness: None },
        UniformClass::UniformRank(rank) => {
            ClassifyDoc { classification: "uniform", rank: Some(rank), witness: None }
        }
        UniformClass::NotUniform { witness } => {
            ClassifyDoc { classification: "not_uniform", rank: None, witness: Some(witness) }
        }
    };
    print_doc(common.format, &doc, |d| match d.classification {
        "uniform" => format!("uniform of rank {}\n", d.rank.unwrap()),
        "free" => "free\n".to_string(),
        _ => format!("not uniform; witness {}\n", d.witness.unwrap()),
    });
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
pub fn gen(
    seed: u64,
    family: &str,
    size: usize,
    parts: usize,
    cap_min: usize,
    cap_max: usize,
    edge_prob: f64,
    dim: usize,
    out: Option<&Path>,
) -> Result<ExitCode, CliError> {
    let family: MatroidFamily = family.parse()?;
    let spec = GeneratorSpec { seed, family, size, parts, cap_min, cap_max, edge_prob, gf2_dim: dim };
    let file = generate(&spec)?;
    let text = serialize_instance(&file);
    match out {
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => println!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}
