use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use gabi_core::algcore::check_algebra;
use gabi_core::exactalg::invert;
use gabi_core::gabi::{
    antipode, canonical_beta, check_double, check_gabi, check_tricocycloid, derive_hopf, hopf_axioms, search_gabi, tricocycloid, Derivation, EpsChoice,
    GabiError, GabiSide, GabiStructure, Gate, HopfStrategy,
};
use gabi_core::modcat::{adjunction_check, check_module, closed_maps_check, default_test_modules, hom_module, normality_check_with, AModule, ModError};
use gabi_core::settheory::{check_monoid_gabi, group_gabi, is_group, search_monoid_gabi, Level};
use gabi_core::{Execution, Report, DEFAULT_CAP};
use serde_json::json;

use crate::document::{Format, ReportDocument, Verdict};
use crate::format::{gabi_doc, hopf_doc, read_algebra_file, read_modules_file, read_monoid_file, AlgebraFile, InputError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CommandName {
    CheckAlgebra,
    CheckGabi,
    DeriveHopf,
    Tricocycloid,
    DoubleCheck,
    HomAction,
    Adjunction,
    Normality,
    SearchGabi,
    SetCheck,
    SetSearch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum StrategyArg {
    #[default]
    Beta,
    Commutative,
    InvAntipode,
}

impl From<StrategyArg> for HopfStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Beta => HopfStrategy::BetaInverse,
            StrategyArg::Commutative => HopfStrategy::Commutative,
            StrategyArg::InvAntipode => HopfStrategy::InvertibleAntipode,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum LevelArg {
    Hom,
    #[default]
    Full,
}

/// Exact checks for gabi-algebras, Hopf algebras and their module categories.
#[derive(Clone, Debug, Parser)]
#[command(name = "gabi", version)]
pub struct Job {
    #[arg(value_enum)]
    pub command: CommandName,
    /// Algebra definition file (monoid file for set-check and set-search).
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    pub strategy: StrategyArg,
    /// Overrides the side recorded in the file.
    #[arg(long, value_enum)]
    pub side: Option<SideArg>,
    #[arg(long, value_enum, default_value_t)]
    pub level: LevelArg,
    /// Largest raw candidate count a search may enumerate.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: u128,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Extra test modules for hom-action, adjunction and normality.
    #[arg(long)]
    pub modules: Option<PathBuf>,
}

impl Job {
    pub fn new(command: CommandName, file: impl Into<PathBuf>) -> Self {
        Job {
            command,
            file: file.into(),
            strategy: StrategyArg::default(),
            side: None,
            level: LevelArg::default(),
            cap: DEFAULT_CAP,
            format: Format::default(),
            modules: None,
        }
    }
}

fn require_gabi(file: &AlgebraFile, side: Option<SideArg>) -> Result<GabiStructure, InputError> {
    let g = file.gabi.clone().ok_or_else(|| InputError::new("gabi", "this command needs a gabi block"))?;
    Ok(match side {
        None => g,
        Some(s) => {
            let side = if s == SideArg::Left { GabiSide::Left } else { GabiSide::Right };
            GabiStructure::new(g.algebra().clone(), g.delta().clone(), g.eps().clone(), side).expect("same shapes")
        }
    })
}

/// `Some(doc)` when the structure fails its own axioms.
fn precondition(g: &GabiStructure) -> Option<ReportDocument> {
    let r = check_gabi(g);
    (!r.passed()).then(|| ReportDocument::with_verdict(Verdict::NotApplicable, r.prefixed("precondition")))
}

fn gabi_err(e: GabiError) -> InputError {
    InputError::new("gabi", e)
}

fn mod_err(e: ModError) -> InputError {
    InputError::new("modules", e)
}

fn test_modules(job: &Job, file: &AlgebraFile, g: &GabiStructure) -> Result<Vec<AModule>, InputError> {
    let mut extra = file.modules.clone();
    if let Some(path) = &job.modules {
        extra.extend(read_modules_file(path, g.algebra())?);
    }
    default_test_modules(g, &extra).map_err(mod_err)
}

fn gate_text(g: &Gate) -> String {
    match g {
        Gate::NotGabi(r) => format!("not a gabi structure ({} failed identities)", r.findings.len()),
        Gate::SingularBeta => "the canonical map is singular".into(),
        Gate::CounitFailure(r) => format!("β⁻¹(id⊗1) is not left counital ({} failed identities)", r.findings.len()),
        Gate::NonCommutative => "the algebra is not commutative".into(),
        Gate::SingularAntipode => "the antipode σ is singular".into(),
    }
}

/// Outcome of one derivation as findings, verdict and derived data.
fn derivation_doc(g: &GabiStructure, strategy: HopfStrategy) -> Result<(Verdict, Report, serde_json::Value), InputError> {
    match derive_hopf(g, strategy) {
        Ok(Derivation::Derived(h)) => Ok((Verdict::Pass, Report::new(), json!({ "hopf": hopf_doc(&h.bialgebra, &h.antipode) }))),
        Ok(Derivation::NotApplicable(gate)) => {
            let report = match &gate {
                Gate::NotGabi(r) | Gate::CounitFailure(r) => r.clone(),
                _ => Report::new(),
            };
            Ok((Verdict::NotApplicable, report, json!({ "gate": gate_text(&gate) })))
        }
        Err(GabiError::TheoremViolation { report, .. }) => Ok((Verdict::Fail, report.prefixed("theorem"), json!({ "gate": "derived structure is not Hopf" }))),
        Err(e) => Err(gabi_err(e)),
    }
}

fn strategy_name(s: HopfStrategy) -> &'static str {
    match s {
        HopfStrategy::BetaInverse => "beta",
        HopfStrategy::Commutative => "commutative",
        HopfStrategy::InvertibleAntipode => "inv-antipode",
    }
}

fn derive_hopf_cmd(job: &Job, file: &AlgebraFile) -> Result<ReportDocument, InputError> {
    let strategy = HopfStrategy::from(job.strategy);
    if file.gabi.is_some() {
        let g = require_gabi(file, job.side)?;
        let (verdict, report, derived) = derivation_doc(&g, strategy)?;
        let mut doc = ReportDocument::with_verdict(verdict, report).derive("strategy", strategy_name(strategy));
        for (k, v) in derived.as_object().expect("object") {
            doc = doc.derive(k, v);
        }
        return Ok(doc);
    }
    // No structure given: derive from every structure an exhaustive search finds.
    let census = search_gabi(&file.algebra, EpsChoice::SearchAll, job.cap, Execution::default()).map_err(|e| InputError::new("search", e))?;
    let mut report = Report::new();
    let mut results = Vec::new();
    let mut verdict = if census.is_empty() { Verdict::NotApplicable } else { Verdict::Pass };
    for (i, g) in census.iter().enumerate() {
        let (v, r, derived) = derivation_doc(g, strategy)?;
        report.extend(r.prefixed(&format!("census[{i}]")));
        verdict = match (verdict, v) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::NotApplicable, _) | (_, Verdict::NotApplicable) => Verdict::NotApplicable,
            _ => Verdict::Pass,
        };
        results.push(json!({ "gabi": gabi_doc(g), "result": derived }));
    }
    let report = if verdict == Verdict::Fail { report } else { Report::new() };
    Ok(ReportDocument::with_verdict(verdict, report).derive("strategy", strategy_name(strategy)).derive("census_size", census.len()).derive("census", results))
}

fn invertible(m: &gabi_core::exactalg::Matrix) -> bool {
    m.is_square() && invert(m).ok().flatten().is_some()
}

fn level(l: LevelArg) -> Level {
    match l {
        LevelArg::Hom => Level::HomLift,
        LevelArg::Full => Level::FullLift,
    }
}

/// Runs one job; `Err` is an input error (exit code 2).
pub fn run(job: &Job) -> Result<ReportDocument, InputError> {
    match job.command {
        CommandName::SetCheck | CommandName::SetSearch => return run_monoid(job),
        _ => {}
    }
    let file = read_algebra_file(&job.file)?;
    let doc = match job.command {
        CommandName::CheckAlgebra => {
            let a = &file.algebra;
            let mut report = check_algebra(a);
            if let Some((b, s)) = &file.hopf {
                report.extend(hopf_axioms(b, s).prefixed("hopf"));
            }
            ReportDocument::from_report(report).derive("dim", a.dim()).derive("commutative", a.is_commutative())
        }
        CommandName::CheckGabi => {
            let g = require_gabi(&file, job.side)?;
            let report = check_gabi(&g);
            let mut doc = ReportDocument::from_report(report.clone());
            if report.passed() && g.side() == GabiSide::Left {
                let sigma = antipode(&g).map_err(gabi_err)?;
                let beta = canonical_beta(&g).map_err(gabi_err)?;
                doc = doc.derive("antipode", crate::format::matrix_doc(&sigma)).derive("beta_invertible", invertible(&beta));
            }
            doc
        }
        CommandName::DeriveHopf => derive_hopf_cmd(job, &file)?,
        CommandName::Tricocycloid => {
            let g = require_gabi(&file, job.side)?;
            if let Some(doc) = precondition(&g) {
                return Ok(doc);
            }
            let t = tricocycloid(&g).map_err(gabi_err)?;
            let r = check_tricocycloid(&t).map_err(gabi_err)?;
            ReportDocument::from_report(r.report).derive("inverse_augmented", r.inverse_augmented)
        }
        CommandName::DoubleCheck => {
            let g = require_gabi(&file, job.side)?;
            let g2 = file.gabi_prime.clone().ok_or_else(|| InputError::new("gabi_prime", "double-check needs a gabi_prime block"))?;
            let r = check_double(&g, &g2).map_err(gabi_err)?;
            let verdict = if r.passed() { Verdict::Pass } else { Verdict::Fail };
            let hopf = r.hopf.as_ref().map(|d| d.result().is_some());
            ReportDocument::with_verdict(verdict, r.report).derive("antipodes_inverse", r.antipodes_inverse).derive("hopf_derived", hopf)
        }
        CommandName::HomAction => {
            let g = require_gabi(&file, job.side)?;
            let modules = test_modules(job, &file, &g)?;
            let mut report = check_gabi(&g).prefixed("precondition");
            let mut dims = BTreeMap::new();
            for m in &modules {
                for n in &modules {
                    let h = hom_module(&g, m, n).map_err(mod_err)?;
                    report.extend(check_module(&h).prefixed(h.name()));
                    dims.insert(h.name().to_string(), h.dim());
                }
            }
            report.extend(closed_maps_check(&g, &modules[1..]).map_err(mod_err)?);
            ReportDocument::from_report(report).derive("hom_dims", dims)
        }
        CommandName::Adjunction => {
            let g = require_gabi(&file, job.side)?;
            if let Some(doc) = precondition(&g) {
                return Ok(doc);
            }
            let modules = test_modules(job, &file, &g)?;
            let mut report = Report::new();
            for m in &modules {
                report.extend(adjunction_check(&g, m, &modules).map_err(mod_err)?);
            }
            let names: Vec<&str> = modules.iter().map(AModule::name).collect();
            ReportDocument::from_report(report).derive("sampled", names)
        }
        CommandName::Normality => {
            let g = require_gabi(&file, job.side)?;
            if let Some(doc) = precondition(&g) {
                return Ok(doc);
            }
            let mut extra = file.modules.clone();
            if let Some(path) = &job.modules {
                extra.extend(read_modules_file(path, g.algebra())?);
            }
            let r = normality_check_with(&g, &extra, Execution::default()).map_err(mod_err)?;
            let verdict = if !r.report.passed() {
                Verdict::Fail
            } else if r.is_normal() {
                Verdict::Pass
            } else {
                Verdict::NotApplicable
            };
            let flags = |v: &[(String, bool)]| v.iter().cloned().collect::<BTreeMap<_, _>>();
            ReportDocument::with_verdict(verdict, r.report.clone())
                .derive("beta_invertible", r.beta_invertible)
                .derive("alpha_invertible", flags(&r.alpha_invertible))
                .derive("lambda_invertible", flags(&r.lambda_invertible))
                .derive("rho_invertible", flags(&r.rho_invertible))
                .derive("hopf_derived", r.hopf.result().is_some())
                .derive("sampled", &r.sampled)
        }
        CommandName::SearchGabi => {
            let census = search_gabi(&file.algebra, EpsChoice::SearchAll, job.cap, Execution::default()).map_err(|e| InputError::new("search", e))?;
            let verdict = if census.is_empty() { Verdict::NotApplicable } else { Verdict::Pass };
            let docs: Vec<_> = census.iter().map(gabi_doc).collect();
            ReportDocument::with_verdict(verdict, Report::new()).derive("census_size", census.len()).derive("census", docs)
        }
        CommandName::SetCheck | CommandName::SetSearch => unreachable!(),
    };
    Ok(doc)
}

fn run_monoid(job: &Job) -> Result<ReportDocument, InputError> {
    let file = read_monoid_file(&job.file)?;
    let m = &file.monoid;
    let lvl = level(job.level);
    let pairs = |d: &[(usize, usize)]| d.iter().map(|&(p, q)| [p, q]).collect::<Vec<_>>();
    match job.command {
        CommandName::SetCheck => {
            let s = file.gabi.ok_or_else(|| InputError::new("gabi", "set-check needs a gabi block"))?;
            Ok(ReportDocument::from_report(check_monoid_gabi(&s, lvl)).derive("is_group", is_group(m).is_some()))
        }
        CommandName::SetSearch => {
            let census = search_monoid_gabi(m, lvl, job.cap, Execution::default()).map_err(|e| InputError::new("search", e))?;
            let verdict = if census.is_empty() { Verdict::NotApplicable } else { Verdict::Pass };
            let docs: Vec<_> = census.iter().map(|s| pairs(&s.delta)).collect();
            let group = group_gabi(m).map(|s| pairs(&s.delta));
            Ok(ReportDocument::with_verdict(verdict, Report::new())
                .derive("census_size", census.len())
                .derive("census", docs)
                .derive("is_group", is_group(m).is_some())
                .derive("group_gabi", group))
        }
        _ => unreachable!(),
    }
}

/// Parses arguments, runs the job and returns the text to print and the exit code.
pub fn main_with<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let job = match Job::try_parse_from(args) {
        Ok(j) => j,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (e.render().to_string(), code);
        }
    };
    match run(&job) {
        Ok(doc) => (doc.render(job.format), doc.exit_code()),
        Err(e) => (format!("input error: {e}\n"), 2),
    }
}
