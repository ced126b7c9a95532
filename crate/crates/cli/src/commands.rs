use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use cleanideal_core::complexes::facets;
use cleanideal_core::filtration::{
    is_clean, is_pretty_clean, prime_filtration, verify, PrimeFiltration,
};
use cleanideal_core::hilbert::hilbert_series;
use cleanideal_core::invariants::{adeg, betti_table, mult_length};
use cleanideal_core::polarization::polarize_ideal;
use cleanideal_core::stanley::{
    corresponds_to_filtration, from_filtration, hilbert_of_decomposition, ordering_to_filtration,
    stanley_depth, verify_decomposition, StanleyDecomposition,
};
use cleanideal_core::{MonomialIdeal, Ring};
use serde_json::{json, Value};

use crate::audit::{run_audit, AuditConfig};
use crate::format::{parse, render_decomposition, render_filtration, render_ideal, render_space, ParseError};
use crate::report::{digest, Format, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Polarize,
    Facets,
    Adeg,
    Hilbert,
    Depth,
    Clean,
    PrettyClean,
    VerifyFiltration,
    Stanley,
    VerifyStanley,
    Correspond,
    RandomAudit,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Polarize => "polarize",
            Command::Facets => "facets",
            Command::Adeg => "adeg",
            Command::Hilbert => "hilbert",
            Command::Depth => "depth",
            Command::Clean => "clean",
            Command::PrettyClean => "pretty-clean",
            Command::VerifyFiltration => "verify-filtration",
            Command::Stanley => "stanley",
            Command::VerifyStanley => "verify-stanley",
            Command::Correspond => "correspond",
            Command::RandomAudit => "random-audit",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub format: Format,
    pub seed: u64,
    pub max_degree: u32,
    pub count: usize,
    pub vars: usize,
    pub max_generators: usize,
    pub witness: Option<PathBuf>,
}

impl Default for Options {
    fn default() -> Self {
        let a = AuditConfig::default();
        Self {
            format: Format::Human,
            seed: a.seed,
            max_degree: a.max_exponent,
            count: a.count,
            vars: a.nvars,
            max_generators: a.max_generators,
            witness: None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Io(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("precondition: {0}")]
    Core(#[from] cleanideal_core::Error),
}

/// Exit status and the text to print on stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub output: String,
}

pub fn run(command: Command, input: Option<&Path>, opts: &Options) -> Outcome {
    let text = match (command, input) {
        (Command::RandomAudit, _) => None,
        (_, None) => return failure(command, opts, CliError::Usage("missing input file".into())),
        (_, Some(p)) => match std::fs::read_to_string(p) {
            Ok(t) => Some(t),
            Err(e) => return failure(command, opts, CliError::Io(format!("{}: {e}", p.display()))),
        },
    };
    match run_text(command, text.as_deref(), opts) {
        Ok((report, code)) => Outcome {
            exit_code: code,
            output: report.render(opts.format),
        },
        Err(e) => failure(command, opts, e),
    }
}

fn failure(command: Command, opts: &Options, e: CliError) -> Outcome {
    let output = match opts.format {
        Format::Machine => {
            let doc = json!({ "command": command.name(), "error": e.to_string() });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json values serialize"))
        }
        Format::Human => format!("error: {e}\n"),
    };
    Outcome { exit_code: 2, output }
}

/// Runs a command on the contents of an input file (none for
/// `random-audit`) and returns the report and exit code.
pub fn run_text(command: Command, text: Option<&str>, opts: &Options) -> Result<(Report, i32), CliError> {
    let start = Instant::now();
    let (input_digest, (result, human, code)) = match text {
        Some(t) => (digest(t.as_bytes()), dispatch(command, t, opts)?),
        None => {
            let params = format!(
                "vars={} max_degree={} max_generators={} count={} seed={}",
                opts.vars, opts.max_degree, opts.max_generators, opts.count, opts.seed
            );
            (digest(params.as_bytes()), random_audit(opts)?)
        }
    };
    Ok((
        Report {
            command: command.name().to_string(),
            input_digest,
            result,
            human,
            elapsed: start.elapsed(),
        },
        code,
    ))
}

type Answer = (Value, String, i32);

fn proper(ideal: &MonomialIdeal) -> Result<(), CliError> {
    if ideal.is_zero() {
        Err(cleanideal_core::Error::ZeroIdeal.into())
    } else if ideal.is_unit() {
        Err(cleanideal_core::Error::UnitIdeal.into())
    } else {
        Ok(())
    }
}

fn monomials(ring: &Ring, ms: &[cleanideal_core::Monomial]) -> Vec<String> {
    ms.iter().map(|m| ring.format_monomial(m)).collect()
}

fn write_witness(opts: &Options, contents: &str) -> Result<(), CliError> {
    if let Some(p) = &opts.witness {
        std::fs::write(p, contents).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn dispatch(command: Command, text: &str, opts: &Options) -> Result<Answer, CliError> {
    let file = parse(text)?;
    let ideal = file.ideal();
    let ring = ideal.ring().clone();
    match command {
        Command::Polarize => {
            proper(&ideal)?;
            let (pr, ip) = polarize_ideal(&ideal)?;
            let human = render_ideal(&ip);
            let v = json!({
                "blocks": pr.blocks(),
                "variables": pr.target().names(),
                "generators": monomials(pr.target(), ip.generators()),
            });
            Ok((v, human, 0))
        }
        Command::Facets => {
            proper(&ideal)?;
            let fs: Vec<String> = facets(&ideal)?.iter().map(ToString::to_string).collect();
            let human = format!("{} facets\n{}\n", fs.len(), fs.join("\n"));
            Ok((json!({ "count": fs.len(), "facets": fs }), human, 0))
        }
        Command::Adeg => {
            proper(&ideal)?;
            let a = adeg(&ideal)?;
            let mut rows = Vec::new();
            let mut human = format!("adeg = {a}\n");
            for p in ideal.associated_primes()? {
                let m = mult_length(&ideal, &p)?;
                let _ = writeln!(human, "mult {} = {m}", p.display());
                rows.push(json!({ "prime": p.display().to_string(), "mult": m }));
            }
            Ok((json!({ "adeg": a, "length_multiplicities": rows }), human, 0))
        }
        Command::Hilbert => {
            let h = hilbert_series(&ideal);
            let r = h.reduced();
            let dim = h.dimension();
            let human = format!(
                "hilbert = {h}\nreduced = {r}\ndimension = {}\nmultiplicity = {}\n",
                dim.map_or("none".to_string(), |d| d.to_string()),
                h.multiplicity()
            );
            let v = json!({
                "numerator": h.numerator(),
                "denominator_power": h.denominator_power(),
                "reduced_numerator": r.numerator(),
                "dimension": dim,
                "multiplicity": h.multiplicity(),
            });
            Ok((v, human, 0))
        }
        Command::Depth => {
            proper(&ideal)?;
            let b = betti_table(&ideal)?;
            let pd = b.projective_dimension();
            let totals: Vec<usize> = (0..=pd).map(|i| b.total(i)).collect();
            let dim = hilbert_series(&ideal).dimension();
            let human = format!(
                "depth = {}\nprojective dimension = {pd}\ndimension = {}\nbetti = {:?}\n",
                b.depth(),
                dim.unwrap_or(0),
                totals
            );
            let v = json!({
                "depth": b.depth(),
                "projective_dimension": pd,
                "dimension": dim,
                "betti": totals,
            });
            Ok((v, human, 0))
        }
        Command::Clean => {
            proper(&ideal)?;
            let w = is_clean(&ideal)?;
            decision("clean", &ideal, w.as_ref(), opts)
        }
        Command::PrettyClean => {
            proper(&ideal)?;
            let w = is_pretty_clean(&ideal)?;
            let (mut v, mut human, code) = decision("pretty_clean", &ideal, w.as_ref(), opts)?;
            let a = adeg(&ideal)?;
            let bound = if w.is_some() { a } else { a + 1 };
            v["adeg"] = json!(a);
            v["min_filtration_length"] = json!(bound);
            let _ = writeln!(human, "adeg = {a}");
            if w.is_none() {
                let _ = writeln!(human, "length of any prime filtration ≥ {bound}");
            }
            Ok((v, human, code))
        }
        Command::VerifyFiltration => {
            let f = file.filtration();
            let rep = verify(&f);
            let primes: Vec<String> = rep.support.iter().map(|p| p.display().to_string()).collect();
            let mut human = format!("valid = {}\n", yes_no(rep.valid));
            if let Some((step, reason)) = rep.failure {
                let _ = writeln!(human, "failure at step {step}: {reason}");
            }
            if rep.valid {
                let _ = writeln!(human, "primes = {}", primes.join(" "));
                let _ = writeln!(human, "classification = {}", rep.classification.as_str());
                let _ = writeln!(human, "supp = ass: {}", yes_no(rep.supp_equals_ass));
                let _ = writeln!(human, "supp = min: {}", yes_no(rep.supp_equals_min));
            }
            let v = json!({
                "valid": rep.valid,
                "failure": rep.failure.map(|(step, reason)| json!({ "step": step, "reason": reason })),
                "primes": primes,
                "length": f.len(),
                "classification": rep.classification.as_str(),
                "supp_equals_ass": rep.supp_equals_ass,
                "supp_equals_min": rep.supp_equals_min,
                "mu_nonincreasing": rep.mu_nonincreasing,
            });
            Ok((v, human, 0))
        }
        Command::Stanley => {
            let (f, source) = if !file.adjoined.is_empty() {
                (file.filtration(), "input")
            } else {
                proper(&ideal)?;
                match is_pretty_clean(&ideal)? {
                    Some(f) => (f, "pretty_clean"),
                    None => (prime_filtration(&ideal), "greedy"),
                }
            };
            let d = from_filtration(&f)?;
            write_witness(opts, &render_decomposition(&d))?;
            let spaces: Vec<String> = d.spaces().iter().map(|s| render_space(&ring, s)).collect();
            let sdepth = stanley_depth(&d).ok();
            let human = format!(
                "source = {source}\nstanley depth = {}\n{}\n",
                sdepth.map_or("none".into(), |s| s.to_string()),
                spaces.iter().map(|s| format!("space: {s}")).collect::<Vec<_>>().join("\n")
            );
            let v = json!({ "source": source, "spaces": spaces, "stanley_depth": sdepth });
            Ok((v, human, 0))
        }
        Command::VerifyStanley => {
            let d = file.decomposition();
            let valid = verify_decomposition(&d);
            let hilbert = hilbert_of_decomposition(&d) == hilbert_series(&ideal);
            let sdepth = if valid { stanley_depth(&d).ok() } else { None };
            let human = format!(
                "valid = {}\nhilbert series matches = {}\nstanley depth = {}\n",
                yes_no(valid),
                yes_no(hilbert),
                sdepth.map_or("none".into(), |s| s.to_string())
            );
            let v = json!({
                "valid": valid,
                "hilbert_matches": hilbert,
                "spaces": d.len(),
                "stanley_depth": sdepth,
            });
            Ok((v, human, 0))
        }
        Command::Correspond => {
            let d: StanleyDecomposition = file.decomposition();
            let order = corresponds_to_filtration(&d)?;
            match order {
                None => Ok((json!({ "ordering": Value::Null, "filtration": Value::Null }), "none\n".into(), 0)),
                Some(order) => {
                    let f = ordering_to_filtration(&d, &order)?;
                    let human = format!(
                        "ordering = {order:?}\n{}",
                        render_filtration(&f)
                    );
                    let v = json!({
                        "ordering": order,
                        "filtration": monomials(&ring, f.adjoined()),
                    });
                    Ok((v, human, 0))
                }
            }
        }
        Command::RandomAudit => Err(CliError::Usage("random-audit takes no input file".into())),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn decision(
    key: &str,
    ideal: &MonomialIdeal,
    witness: Option<&PrimeFiltration>,
    opts: &Options,
) -> Result<Answer, CliError> {
    let ring = ideal.ring();
    let mut human = format!("{}\n", yes_no(witness.is_some()));
    let mut v = json!({ key: witness.is_some(), "witness": Value::Null, "primes": Value::Null });
    if let Some(f) = witness {
        let rep = verify(f);
        let primes: Vec<String> = rep.support.iter().map(|p| p.display().to_string()).collect();
        v["witness"] = json!(monomials(ring, f.adjoined()));
        v["primes"] = json!(primes);
        let _ = writeln!(human, "witness ({} steps):", f.len());
        for (u, p) in f.adjoined().iter().zip(&primes) {
            let _ = writeln!(human, "  adjoin {}  quotient S/{}", ring.display(u), p);
        }
        write_witness(opts, &render_filtration(f))?;
    }
    Ok((v, human, 0))
}

fn random_audit(opts: &Options) -> Result<Answer, CliError> {
    if opts.vars == 0 {
        return Err(CliError::Usage("--vars must be positive".into()));
    }
    let cfg = AuditConfig {
        nvars: opts.vars,
        max_exponent: opts.max_degree.max(1),
        max_generators: opts.max_generators.max(1),
        count: opts.count,
        seed: opts.seed,
    };
    let s = run_audit(&cfg);
    let mut human = format!(
        "checked {} ideals: {} pretty clean, {} clean, {} violations\n",
        s.checked,
        s.pretty_clean,
        s.clean,
        s.violations.len()
    );
    for v in &s.violations {
        let _ = writeln!(human, "violation: {} ({})\n{}", v.property, v.detail, v.ideal);
    }
    let violations: Vec<Value> = s
        .violations
        .iter()
        .map(|v| json!({ "property": v.property, "detail": v.detail, "ideal": v.ideal }))
        .collect();
    let v = json!({
        "checked": s.checked,
        "pretty_clean": s.pretty_clean,
        "clean": s.clean,
        "violations": violations,
    });
    let code = if s.violations.is_empty() { 0 } else { 1 };
    Ok((v, human, code))
}
