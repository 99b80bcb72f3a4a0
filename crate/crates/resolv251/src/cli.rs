//! The `build` / `verify` / `report` command-line surface.
//!
//! `build {Q|M|B|HB}` writes one complex in the interchange JSON form,
//! byte-identical across runs.  `verify <suite>` runs one verification
//! suite — `complex`, `gradings`, `mu`, `phi`, `psi`, `linkage`,
//! `rigidity-identities`, `exactness`, or `all` — and exits 0 exactly when
//! every check passes.  `report` emits a consolidated document with complex
//! metadata, per-suite verdicts, and timing.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O
//! failure.  `RESOLV_SEED` overrides the default seed of 42; an explicit
//! `--seed` wins over both.  Verification output never contains timing, so
//! a fixed (command, seed) pair reproduces its bytes exactly; `report` is
//! the one command that includes wall-clock numbers.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::certify::{
    random_exactness_report, specialize_and_certify, ExactnessReport, SpecializationCheck,
};
use crate::complexes::{FreeComplex, SCHEMA};
use crate::linkage::{
    linkage_run_report, run_linkage, verify_hyperplane_colon, verify_rigidity_identities,
    LinkageRun, VerificationReport,
};
use crate::matrix::PolyMatrix;
use crate::resolutions::{
    build_b_matrices, build_hyperplane_aci_resolution, build_m, build_q_matrices,
};
use crate::ring::CoefficientDomain;
use crate::specializations::{
    complex_over, verify_mu, verify_phi, verify_psi, SpecializationReport,
};

const DEFAULT_SEED: u64 = 42;
const DEFAULT_TRIALS: usize = 20;

#[derive(Parser)]
#[command(
    name = "resolv251",
    version,
    about = "Build and verify three bigraded free resolutions with Betti numbers (2, 6, 5, 1)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one complex in the interchange JSON form
    Build {
        /// Which complex to build
        #[arg(value_enum)]
        complex: Selector,
        /// Output path; stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one verification suite and exit 0 exactly when every check passes
    Verify {
        /// Which suite to run
        #[arg(value_enum)]
        suite: Suite,
        /// Restrict a complex-indexed suite to one complex
        #[arg(long, value_enum)]
        complex: Option<Selector>,
        /// Coefficient domain; suites that pin their domain refuse others
        #[arg(long, value_enum)]
        ring: Option<RingChoice>,
        /// Seed for randomized evidence; RESOLV_SEED overrides the default 42
        #[arg(long)]
        seed: Option<u64>,
        /// Trial count for the exactness suite (default 20)
        #[arg(long)]
        trials: Option<usize>,
        /// Output format
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        /// Output path; stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit complex metadata, every suite verdict, and timing in one document
    Report {
        /// Seed for randomized evidence; RESOLV_SEED overrides the default 42
        #[arg(long)]
        seed: Option<u64>,
        /// Trial count for the exactness suite (default 20)
        #[arg(long)]
        trials: Option<usize>,
        /// Output format
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        /// Output path; stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Selector {
    #[value(name = "Q", alias = "q")]
    Q,
    #[value(name = "M", alias = "m")]
    M,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "HB", alias = "hb")]
    Hb,
}

impl Selector {
    fn label(self) -> &'static str {
        match self {
            Selector::Q => "Q",
            Selector::M => "M",
            Selector::B => "B",
            Selector::Hb => "HB",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Suite {
    Complex,
    Gradings,
    Mu,
    Phi,
    Psi,
    Linkage,
    RigidityIdentities,
    Exactness,
    All,
}

impl Suite {
    fn label(self) -> &'static str {
        match self {
            Suite::Complex => "complex",
            Suite::Gradings => "gradings",
            Suite::Mu => "mu",
            Suite::Phi => "phi",
            Suite::Psi => "psi",
            Suite::Linkage => "linkage",
            Suite::RigidityIdentities => "rigidity-identities",
            Suite::Exactness => "exactness",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum RingChoice {
    #[value(name = "zz")]
    Zz,
    #[value(name = "zz2")]
    Zz2,
    #[value(name = "qq")]
    Qq,
}

impl RingChoice {
    fn domain(self) -> CoefficientDomain {
        match self {
            RingChoice::Zz => CoefficientDomain::Integers,
            RingChoice::Zz2 => CoefficientDomain::IntegersWithTwoInverted,
            RingChoice::Qq => CoefficientDomain::Rationals,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

/// Entry point for the thin binary: parse, dispatch, return the exit code.
pub fn run(args: Vec<String>) -> i32 {
    let argv = std::iter::once("resolv251".to_string()).chain(args);
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match cli.command {
        Command::Build { complex, out } => cmd_build(complex, &out),
        Command::Verify {
            suite,
            complex,
            ring,
            seed,
            trials,
            format,
            out,
        } => {
            let seed = match resolve_seed(seed) {
                Ok(s) => s,
                Err(message) => return usage_error(&message),
            };
            if trials == Some(0) {
                return usage_error("--trials must be at least 1");
            }
            let cfg = VerifyConfig {
                complex,
                ring: ring.map(RingChoice::domain),
                seed,
                trials: trials.unwrap_or(DEFAULT_TRIALS),
                trials_explicit: trials.is_some(),
            };
            cmd_verify(suite, &cfg, format, &out)
        }
        Command::Report {
            seed,
            trials,
            format,
            out,
        } => {
            let seed = match resolve_seed(seed) {
                Ok(s) => s,
                Err(message) => return usage_error(&message),
            };
            if trials == Some(0) {
                return usage_error("--trials must be at least 1");
            }
            cmd_report(seed, trials.unwrap_or(DEFAULT_TRIALS), format, &out)
        }
    }
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    2
}

fn resolve_seed(explicit: Option<u64>) -> Result<u64, String> {
    if let Some(seed) = explicit {
        return Ok(seed);
    }
    match std::env::var("RESOLV_SEED") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| format!("RESOLV_SEED must be an unsigned integer, got {text:?}")),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn build_complex(sel: Selector) -> FreeComplex {
    match sel {
        Selector::Q => build_q_matrices(),
        Selector::M => build_m(),
        Selector::B => build_b_matrices(),
        Selector::Hb => build_hyperplane_aci_resolution(),
    }
}

fn pretty_json<T: Serialize>(value: &T) -> String {
    let mut text =
        serde_json::to_string_pretty(value).expect("report serialization cannot fail");
    text.push('\n');
    text
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write to stdout: {e}")),
    }
}

fn cmd_build(sel: Selector, out: &Option<PathBuf>) -> i32 {
    let text = pretty_json(&build_complex(sel).to_json());
    match emit(&text, out) {
        Ok(()) => 0,
        Err(message) => {
            eprintln!("error: {message}");
            3
        }
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyConfig {
    complex: Option<Selector>,
    ring: Option<CoefficientDomain>,
    seed: u64,
    trials: usize,
    trials_explicit: bool,
}

impl VerifyConfig {
    fn selected_or(&self, default: &[Selector]) -> Vec<Selector> {
        match self.complex {
            Some(sel) => vec![sel],
            None => default.to_vec(),
        }
    }

    fn no_complex(&self, suite: &str) -> Result<(), String> {
        match self.complex {
            Some(sel) => Err(format!(
                "--complex {} does not apply to the {suite} suite",
                sel.label()
            )),
            None => Ok(()),
        }
    }

    fn no_trials(&self, suite: &str) -> Result<(), String> {
        if self.trials_explicit {
            Err(format!(
                "--trials only applies to the exactness suite, not to {suite}"
            ))
        } else {
            Ok(())
        }
    }
}

/// One suite's portion of the `verify` output: which checks ran, whether
/// they all passed, and where the first failure sits.
#[derive(Serialize)]
struct SuiteOutcome {
    suite: String,
    ring: String,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_failure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<LinkageCertificate>,
    reports: Vec<Value>,
}

impl SuiteOutcome {
    fn new(suite: &str, ring: &str) -> SuiteOutcome {
        SuiteOutcome {
            suite: suite.to_string(),
            ring: ring.to_string(),
            pass: true,
            first_failure: None,
            certificate: None,
            reports: Vec::new(),
        }
    }

    fn add(&mut self, pass: bool, first_failure: Option<String>, report: Value) {
        if !pass {
            self.pass = false;
            if self.first_failure.is_none() {
                self.first_failure = first_failure;
            }
        }
        self.reports.push(report);
    }

    fn add_report(&mut self, rep: &VerificationReport) {
        let failure = rep
            .first_failure
            .as_ref()
            .map(|f| format!("{}: {f}", rep.name));
        self.add(rep.pass, failure, to_value(rep));
    }

    fn add_specialization(&mut self, rep: &SpecializationReport) {
        let failure = rep
            .first_failure
            .as_ref()
            .map(|f| format!("{}: {f}", rep.map_name));
        self.add(rep.pass, failure, to_value(rep));
    }

    fn add_exactness(&mut self, rep: &ExactnessReport) {
        let failure = if rep.pass {
            None
        } else {
            match rep
                .observed_ranks
                .iter()
                .position(|ranks| ranks != &rep.expected_ranks)
            {
                Some(t) => Some(format!(
                    "{}: trial {t} ranks {:?} differ from the expected {:?}",
                    rep.complex, rep.observed_ranks[t], rep.expected_ranks
                )),
                None => Some(format!(
                    "{}: the expected rank profile is unsatisfiable",
                    rep.complex
                )),
            }
        };
        self.add(rep.pass, failure, to_value(rep));
    }

    fn add_codim(&mut self, check: &SpecializationCheck) {
        let failure = if check.pass {
            None
        } else if !check.complex_intact {
            Some(format!(
                "{}: d∘d ≠ 0 after the {}‑variable specialization",
                check.complex, check.target_vars
            ))
        } else {
            Some(format!(
                "{}: specialized codimension {} instead of {}",
                check.complex, check.codim, check.expected_codim
            ))
        };
        self.add(check.pass, failure, to_value(check));
    }
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report serialization cannot fail")
}

/// The whole `verify` output document.
#[derive(Serialize)]
struct VerifyOutput {
    schema: String,
    command: String,
    suite: String,
    seed: u64,
    trials: usize,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_failure: Option<String>,
    suites: Vec<SuiteOutcome>,
}

/// Summary of the linkage pipeline, complete enough to re-check the claim:
/// cone ranks, cancellation count, the reduced complex's shape, the variable
/// dictionary, and the certified ladder with its determinants.
#[derive(Serialize)]
struct LinkageCertificate {
    cone_ranks_ascending: Vec<usize>,
    cancellations: usize,
    linked_ranks_ascending: Vec<usize>,
    linked_twists_ascending: Vec<Vec<[i64; 2]>>,
    variable_images: Vec<[String; 2]>,
    isomorphism_direction: String,
    ladder_matrices: Vec<Vec<Vec<String>>>,
    ladder_determinants: Vec<String>,
}

fn linkage_certificate(run: &LinkageRun) -> LinkageCertificate {
    let linked = &run.linked;
    let twists = (0..=linked.top())
        .map(|i| {
            linked
                .module(i)
                .twists
                .as_ref()
                .map(|t| t.iter().map(|d| [d.0, d.1]).collect())
                .unwrap_or_default()
        })
        .collect();
    let cert = &run.certificate;
    let variable_images = cert
        .map
        .source()
        .var_names()
        .iter()
        .map(|name| [name.clone(), cert.map.image(name).to_string()])
        .collect();
    let ladder_matrices = (0..=3)
        .map(|i| {
            let m = cert.ladder.map(i);
            (0..m.rows())
                .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
                .collect()
        })
        .collect();
    let ladder_determinants = (0..=3)
        .map(|i| cert.ladder.map(i).det().to_string())
        .collect();
    LinkageCertificate {
        cone_ranks_ascending: run.cone_ranks.clone(),
        cancellations: run.cancellations,
        linked_ranks_ascending: linked.ranks(),
        linked_twists_ascending: twists,
        variable_images,
        isomorphism_direction: cert.direction.label().to_string(),
        ladder_matrices,
        ladder_determinants,
    }
}

fn first_nonzero_entry(m: &PolyMatrix) -> Option<String> {
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !m.get(r, c).is_zero() {
                return Some(format!(
                    "first nonzero entry at row {r}, column {c}: {}",
                    m.get(r, c)
                ));
            }
        }
    }
    None
}

fn require_plain_integers(suite: &str, cfg: &VerifyConfig) -> Result<(), String> {
    match cfg.ring {
        None | Some(CoefficientDomain::Integers) => Ok(()),
        Some(domain) => Err(format!(
            "the {suite} suite runs over the plain integers; drop --ring or pass --ring zz (got --ring {})",
            domain.label()
        )),
    }
}

fn suite_complex(cfg: &VerifyConfig) -> Result<SuiteOutcome, String> {
    cfg.no_trials("complex")?;
    let domain = cfg.ring.unwrap_or(CoefficientDomain::Integers);
    let mut outcome = SuiteOutcome::new("complex", domain.label());
    for sel in cfg.selected_or(&[Selector::Q, Selector::M, Selector::B, Selector::Hb]) {
        let built = build_complex(sel);
        let c = if domain == CoefficientDomain::Integers {
            built
        } else {
            complex_over(&built, domain)
        };
        let mut rep = VerificationReport::new(&format!("complex {}", sel.label()));
        for i in 1..c.top() {
            let composite = c.differential(i) * c.differential(i + 1);
            rep.push(
                &format!("d{i} ∘ d{} is the zero matrix", i + 1),
                match first_nonzero_entry(&composite) {
                    None => Ok(()),
                    Some(detail) => Err(detail),
                },
            );
        }
        outcome.add_report(&rep);
    }
    Ok(outcome)
}

fn suite_gradings(cfg: &VerifyConfig) -> Result<SuiteOutcome, String> {
    cfg.no_trials("gradings")?;
    let domain = cfg.ring.unwrap_or(CoefficientDomain::Integers);
    let mut outcome = SuiteOutcome::new("gradings", domain.label());
    for sel in cfg.selected_or(&[Selector::Q, Selector::M, Selector::B, Selector::Hb]) {
        let built = build_complex(sel);
        let c = if domain == CoefficientDomain::Integers {
            built
        } else {
            complex_over(&built, domain)
        };
        let mut rep = VerificationReport::new(&format!("gradings {}", sel.label()));
        rep.push(
            "every differential entry is bihomogeneous of the twist difference",
            c.check_bigrading(),
        );
        outcome.add_report(&rep);
    }
    Ok(outcome)
}

fn suite_mu(cfg: &VerifyConfig) -> Result<SuiteOutcome, String> {
    cfg.no_complex("mu")?;
    cfg.no_trials("mu")?;
    match cfg.ring {
        None | Some(CoefficientDomain::IntegersWithTwoInverted) => {}
        Some(CoefficientDomain::Integers) => {
            return Err(
                "cannot verify mu over the plain integers: 2 is not a unit there, and the \
                 ladder scales by powers of 2; pass --ring zz2 or drop --ring"
                    .to_string(),
            )
        }
        Some(CoefficientDomain::Rationals) => {
            return Err(
                "the mu ladder is constructed over zz2; pass --ring zz2 or drop --ring"
                    .to_string(),
            )
        }
    }
    let mut outcome =
        SuiteOutcome::new("mu", CoefficientDomain::IntegersWithTwoInverted.label());
    outcome.add_specialization(&verify_mu());
    Ok(outcome)
}

fn suite_phi(cfg: &VerifyConfig) -> Result<SuiteOutcome, String> {
    cfg.no_complex("phi")?;
    cfg.no_trials("phi")?;
    require_plain_integers("phi", cfg)?;
    let mut outcome = SuiteOutcome::new("phi", "zz");
    outcome.add_specialization(&verify_phi());
    Ok(outcome)
}

fn suite_psi(cfg: &VerifyConfig) -> Result<SuiteOutcome, String> {
    cfg.no_complex("psi")?;
    cfg.no_trials("psi")?;
    require_plain_integers("psi", cfg)?;
    let mut outcome = SuiteOutcome::new("psi", "zz");
    outcome.add_specialization(&verify_psi());
    Ok(outcome)
}

fn suite_linkage(cfg: &VerifyConfig) -> Result<SuiteOutcome, String> {
    cfg.no_complex("linkage")?;
    cfg.no_trials("linkage")?;
    require_plain_integers("linkage", cfg)?;
    let mut outcome = SuiteOutcome::new("linkage", "zz");
    match run_linkage() {
        Ok(run) => {
            outcome.certificate = Some(linkage_certificate(&run));
            outcome.add_report(&linkage_run_report(&run));
        }
        Err(detail) => {
            let mut rep = VerificationReport::new("linkage");
            rep.push("linkage pipeline", Err(detail));
            outcome.add_report(&rep);
        }
    }
    outcome.add_report(&verify_hyperplane_colon());
    Ok(outcome)
}

fn suite_rigidity(cfg: &VerifyConfig) -> Result<SuiteOutcome, String> {
    cfg.no_complex("rigidity-identities")?;
    cfg.no_trials("rigidity-identities")?;
    require_plain_integers("rigidity-identities", cfg)?;
    let mut outcome = SuiteOutcome::new("rigidity-identities", "zz");
    outcome.add_report(&verify_rigidity_identities());
    Ok(outcome)
}

fn suite_exactness(cfg: &VerifyConfig) -> Result<SuiteOutcome, String> {
    require_plain_integers("exactness", cfg)?;
    let mut outcome = SuiteOutcome::new("exactness", "zz");
    for sel in cfg.selected_or(&[Selector::Q, Selector::M, Selector::B]) {
        let rep = random_exactness_report(&build_complex(sel), cfg.trials, cfg.seed);
        outcome.add_exactness(&rep);
    }
    // The codimension certificate defaults to the short resolution: its
    // four-variable Gröbner run finishes in seconds, while the seventeen
    // variable complexes take minutes and stay available via --complex.
    for sel in cfg.selected_or(&[Selector::B]) {
        let check = specialize_and_certify(&build_complex(sel), 4, cfg.seed);
        outcome.add_codim(&check);
    }
    Ok(outcome)
}

fn run_one(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteOutcome, String> {
    match suite {
        Suite::Complex => suite_complex(cfg),
        Suite::Gradings => suite_gradings(cfg),
        Suite::Mu => suite_mu(cfg),
        Suite::Phi => suite_phi(cfg),
        Suite::Psi => suite_psi(cfg),
        Suite::Linkage => suite_linkage(cfg),
        Suite::RigidityIdentities => suite_rigidity(cfg),
        Suite::Exactness => suite_exactness(cfg),
        Suite::All => unreachable!("all is expanded before dispatch"),
    }
}

const ALL_SUITES: [Suite; 8] = [
    Suite::Complex,
    Suite::Gradings,
    Suite::Mu,
    Suite::Phi,
    Suite::Psi,
    Suite::Linkage,
    Suite::RigidityIdentities,
    Suite::Exactness,
];

fn run_suites(suite: Suite, cfg: &VerifyConfig) -> Result<Vec<SuiteOutcome>, String> {
    match suite {
        Suite::All => {
            cfg.no_complex("all")?;
            if cfg.ring.is_some() {
                return Err(
                    "the all suite runs each check at its own coefficient domain; drop --ring"
                        .to_string(),
                );
            }
            ALL_SUITES.iter().map(|s| run_one(*s, cfg)).collect()
        }
        s => Ok(vec![run_one(s, cfg)?]),
    }
}

fn cmd_verify(
    suite: Suite,
    cfg: &VerifyConfig,
    format: OutputFormat,
    out: &Option<PathBuf>,
) -> i32 {
    let outcomes = match run_suites(suite, cfg) {
        Ok(outcomes) => outcomes,
        Err(message) => return usage_error(&message),
    };
    let pass = outcomes.iter().all(|o| o.pass);
    let first_failure = outcomes.iter().find_map(|o| o.first_failure.clone());
    let output = VerifyOutput {
        schema: SCHEMA.to_string(),
        command: "verify".to_string(),
        suite: suite.label().to_string(),
        seed: cfg.seed,
        trials: cfg.trials,
        pass,
        first_failure,
        suites: outcomes,
    };
    let text = match format {
        OutputFormat::Json => pretty_json(&output),
        OutputFormat::Text => render_verify_text(&output),
    };
    if let Err(message) = emit(&text, out) {
        eprintln!("error: {message}");
        return 3;
    }
    if pass {
        0
    } else {
        1
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Count leaf checks — objects carrying `name`/`pass`/`detail` — inside the
/// serialized reports; returns (passed, total).
fn count_checks(values: &[Value]) -> (usize, usize) {
    fn walk(value: &Value, acc: &mut (usize, usize)) {
        match value {
            Value::Array(items) => items.iter().for_each(|v| walk(v, acc)),
            Value::Object(map) => {
                let leaf = matches!(
                    (map.get("name"), map.get("pass"), map.get("detail")),
                    (Some(Value::String(_)), Some(Value::Bool(_)), Some(Value::String(_)))
                );
                if leaf {
                    acc.1 += 1;
                    if map.get("pass") == Some(&Value::Bool(true)) {
                        acc.0 += 1;
                    }
                } else {
                    map.values().for_each(|v| walk(v, acc));
                }
            }
            _ => {}
        }
    }
    let mut acc = (0, 0);
    values.iter().for_each(|v| walk(v, &mut acc));
    acc
}

fn render_verify_text(output: &VerifyOutput) -> String {
    let mut text = format!(
        "verify {} (seed {}): {}\n",
        output.suite,
        output.seed,
        verdict(output.pass)
    );
    for suite in &output.suites {
        let (ok, total) = count_checks(&suite.reports);
        let counts = if total > 0 {
            format!(" ({ok}/{total} checks)")
        } else {
            String::new()
        };
        text.push_str(&format!(
            "  {} [{}]: {}{}\n",
            suite.suite,
            suite.ring,
            verdict(suite.pass),
            counts
        ));
        if let Some(failure) = &suite.first_failure {
            text.push_str(&format!("    first failure: {failure}\n"));
        }
    }
    text
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

/// Shape summary of one complex for the consolidated report.
#[derive(Serialize)]
struct ComplexMeta {
    name: String,
    variables: usize,
    domain: String,
    ranks_descending: Vec<usize>,
    twists_descending: Vec<Vec<[i64; 2]>>,
}

fn complex_meta(sel: Selector) -> ComplexMeta {
    let c = build_complex(sel);
    let twists = (0..=c.top())
        .rev()
        .map(|i| {
            c.module(i)
                .twists
                .as_ref()
                .map(|t| t.iter().map(|d| [d.0, d.1]).collect())
                .unwrap_or_default()
        })
        .collect();
    ComplexMeta {
        name: sel.label().to_string(),
        variables: c.ring().num_vars(),
        domain: c.ring().domain().label().to_string(),
        ranks_descending: c.ranks_desc(),
        twists_descending: twists,
    }
}

#[derive(Serialize)]
struct SuiteVerdict {
    suite: String,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_failure: Option<String>,
    millis: u128,
}

#[derive(Serialize)]
struct ReportOutput {
    schema: String,
    command: String,
    seed: u64,
    trials: usize,
    complexes: Vec<ComplexMeta>,
    verdicts: Vec<SuiteVerdict>,
    total_millis: u128,
    pass: bool,
}

fn cmd_report(seed: u64, trials: usize, format: OutputFormat, out: &Option<PathBuf>) -> i32 {
    let started = Instant::now();
    let complexes = [Selector::Q, Selector::M, Selector::B, Selector::Hb]
        .iter()
        .map(|sel| complex_meta(*sel))
        .collect();
    let cfg = VerifyConfig {
        complex: None,
        ring: None,
        seed,
        trials,
        trials_explicit: false,
    };
    let mut verdicts = Vec::new();
    let mut pass = true;
    for suite in ALL_SUITES {
        let suite_started = Instant::now();
        let outcome = run_one(suite, &cfg)
            .expect("the default configuration satisfies every suite's flag contract");
        let millis = suite_started.elapsed().as_millis();
        pass &= outcome.pass;
        verdicts.push(SuiteVerdict {
            suite: outcome.suite,
            pass: outcome.pass,
            first_failure: outcome.first_failure,
            millis,
        });
    }
    let output = ReportOutput {
        schema: SCHEMA.to_string(),
        command: "report".to_string(),
        seed,
        trials,
        complexes,
        verdicts,
        total_millis: started.elapsed().as_millis(),
        pass,
    };
    let text = match format {
        OutputFormat::Json => pretty_json(&output),
        OutputFormat::Text => render_report_text(&output),
    };
    if let Err(message) = emit(&text, out) {
        eprintln!("error: {message}");
        return 3;
    }
    if pass {
        0
    } else {
        1
    }
}

fn render_report_text(output: &ReportOutput) -> String {
    let mut text = format!(
        "report (seed {}, {} trials): {}\n",
        output.seed,
        output.trials,
        verdict(output.pass)
    );
    for meta in &output.complexes {
        text.push_str(&format!(
            "  {}: {} variables over {}, ranks {:?}\n",
            meta.name, meta.variables, meta.domain, meta.ranks_descending
        ));
    }
    for v in &output.verdicts {
        text.push_str(&format!(
            "  {} [{} ms]: {}\n",
            v.suite,
            v.millis,
            verdict(v.pass)
        ));
        if let Some(failure) = &v.first_failure {
            text.push_str(&format!("    first failure: {failure}\n"));
        }
    }
    text.push_str(&format!("  total: {} ms\n", output.total_millis));
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::ComplexJson;

    fn run_args(args: &[&str]) -> i32 {
        run(args.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn build_writes_byte_identical_json_with_the_expected_header() {
        let dir = tempfile::tempdir().unwrap();
        let first = dir.path().join("q1.json");
        let second = dir.path().join("q2.json");
        assert_eq!(run_args(&["build", "Q", "--out", first.to_str().unwrap()]), 0);
        assert_eq!(run_args(&["build", "Q", "--out", second.to_str().unwrap()]), 0);
        let bytes1 = std::fs::read(&first).unwrap();
        let bytes2 = std::fs::read(&second).unwrap();
        assert_eq!(bytes1, bytes2);
        let json: ComplexJson = serde_json::from_slice(&bytes1).unwrap();
        assert_eq!(json.schema, SCHEMA);
        assert_eq!(json.ranks, vec![2, 6, 5, 1]);
        assert_eq!(json.ring.vars.len(), 17);
    }

    #[test]
    fn build_lists_the_short_resolution_ranks() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("hb.json");
        assert_eq!(run_args(&["build", "HB", "--out", path.to_str().unwrap()]), 0);
        let json: ComplexJson =
            serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
        assert_eq!(json.ranks, vec![2, 5, 4, 1]);
        assert_eq!(json.ring.vars.len(), 11);
    }

    #[test]
    fn bad_arguments_are_usage_errors() {
        assert_eq!(run_args(&["build", "X"]), 2);
        assert_eq!(run_args(&["verify", "mu", "--ring", "zz"]), 2);
        assert_eq!(run_args(&["verify", "mu", "--ring", "qq"]), 2);
        assert_eq!(run_args(&["verify", "phi", "--ring", "zz2"]), 2);
        assert_eq!(run_args(&["verify", "linkage", "--complex", "Q"]), 2);
        assert_eq!(run_args(&["verify", "complex", "--trials", "3"]), 2);
        assert_eq!(run_args(&["verify", "all", "--ring", "qq"]), 2);
        assert_eq!(run_args(&["verify", "exactness", "--trials", "0"]), 2);
        assert_eq!(run_args(&["frobnicate"]), 2);
    }

    #[test]
    fn unwritable_output_path_is_an_io_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("no-such-dir").join("q.json");
        assert_eq!(run_args(&["build", "Q", "--out", path.to_str().unwrap()]), 3);
    }

    #[test]
    fn verify_complex_reports_one_check_per_composite() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.json");
        assert_eq!(
            run_args(&["verify", "complex", "--complex", "M", "--out", path.to_str().unwrap()]),
            0
        );
        let value: Value =
            serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
        assert_eq!(value["pass"], Value::Bool(true));
        assert_eq!(value["suite"], Value::String("complex".to_string()));
        let checks = &value["suites"][0]["reports"][0]["checks"];
        assert_eq!(checks.as_array().unwrap().len(), 2);
    }

    #[test]
    fn verify_gradings_accepts_the_rationals() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.json");
        assert_eq!(
            run_args(&["verify", "gradings", "--ring", "qq", "--out", path.to_str().unwrap()]),
            0
        );
        let value: Value =
            serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
        assert_eq!(value["suites"][0]["ring"], Value::String("qq".to_string()));
        assert_eq!(value["suites"][0]["reports"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn text_format_prints_a_digest() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("digest.txt");
        assert_eq!(
            run_args(&[
                "verify", "gradings", "--complex", "B", "--format", "text", "--out",
                path.to_str().unwrap(),
            ]),
            0
        );
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("verify gradings (seed 42): PASS"));
        assert!(text.contains("gradings [zz]: PASS (1/1 checks)"));
    }
}
