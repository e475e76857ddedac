use std::fmt;
use std::io;
use std::path::{Path, PathBuf};

use cmtype_core::classifier::{classify, Assumption};
use cmtype_core::dim1::{arrangement_dr, semigroup_closure, semigroup_dr, LineArrangement};
use cmtype_core::families::{
    binary_form, graded12, gw12, match_named_family, quadric, scroll_ideal, veronese_cone_ideal, ScrollType,
};
use cmtype_core::groebner::{buchberger_with_limits, minimalize_presentation_with_limits, RingPresentation};
use cmtype_core::invariants::ring_invariants;
use cmtype_core::poly::{parse_lines, parse_polynomial, parse_presentation, render_presentation, MonomialOrder, VariableSet};
use cmtype_core::singularity::singular_locus;
use cmtype_core::{Error, Limits, Options};
use serde_json::{json, Map, Value};

use crate::args::{AssumeArg, Cli, Command, Family, OrderArg};
use crate::report::ReportBody;
use crate::sections;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Read { path: PathBuf, source: io::Error },
    Core(Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Read { path, source } => write!(f, "cannot read {}: {source}", path.display()),
            CliError::Core(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for CliError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CliError::Read { source, .. } => Some(source),
            CliError::Core(_) => None,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

/// A finished command: the report body, its exit code, and an optional
/// plain-text rendering that replaces the generic one.
pub struct Outcome {
    pub body: ReportBody,
    pub exit_code: i32,
    pub plain: Option<String>,
}

impl Outcome {
    fn ok(body: ReportBody) -> Self {
        Outcome {
            body,
            exit_code: EXIT_OK,
            plain: None,
        }
    }
}

fn exhausted(e: &Error) -> bool {
    e.is_budget() || matches!(e, Error::LsopExhausted { .. })
}

/// Turns a budget failure partway through into a partial report.
fn finish(mut body: ReportBody, r: Result<(), Error>) -> Result<Outcome, CliError> {
    match r {
        Ok(()) => Ok(Outcome::ok(body)),
        Err(e) if exhausted(&e) => {
            body.error = Some(e.to_string());
            Ok(Outcome {
                body,
                exit_code: EXIT_BUDGET,
                plain: None,
            })
        }
        Err(e) => Err(e.into()),
    }
}

fn put_detail(body: &mut ReportBody, key: &str, v: Value) {
    let details = body.details.get_or_insert_with(|| Value::Object(Map::new()));
    if let Value::Object(m) = details {
        m.insert(key.to_string(), v);
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

pub fn options(cli: &Cli) -> Options {
    let defaults = Limits::default();
    Options {
        limits: Limits {
            max_pairs: cli.budget_pairs.unwrap_or(defaults.max_pairs),
            max_degree: cli.budget_degree.unwrap_or(defaults.max_degree),
            max_minors: defaults.max_minors,
        },
        seed: cli.seed,
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let opts = options(cli);
    match &cli.command {
        Command::Analyze { file } => analyze(file, &opts),
        Command::Classify { file, assume } => classify_file(file, assume, &opts),
        Command::Semigroup { generators } => semigroup(generators),
        Command::Arrangement { file, reduction } => arrangement(file, reduction),
        Command::Generate { family } => generate(family),
        Command::Gb { file, order } => groebner(file, *order, &opts),
    }
}

fn load(command: &str, file: &Path) -> Result<(ReportBody, RingPresentation), CliError> {
    let text = read(file)?;
    let parsed = parse_presentation(&text)?;
    let mut body = ReportBody::new(command, text.as_bytes());
    body.warnings = parsed.warnings;
    parsed.presentation.ideal().require_homogeneous()?;
    Ok((body, parsed.presentation))
}

fn analyze(file: &Path, opts: &Options) -> Result<Outcome, CliError> {
    let (mut body, pres) = load("analyze", file)?;
    let r = analyze_stages(&pres, opts, &mut body);
    finish(body, r)
}

fn analyze_stages(pres: &RingPresentation, opts: &Options, body: &mut ReportBody) -> Result<(), Error> {
    let min = minimalize_presentation_with_limits(pres, &opts.limits)?;
    put_detail(body, "minimal_presentation", sections::presentation(&min));
    let inv = ring_invariants(&min, opts)?;
    body.invariants = Some(sections::invariants(&inv));
    let sing = singular_locus(&min, opts)?;
    put_detail(body, "singularity", sections::singularity(&sing));
    let tag = match_named_family(&min, &opts.limits)?;
    put_detail(body, "family", sections::family(&tag, min.variables()));
    Ok(())
}

fn classify_file(file: &Path, assume: &[AssumeArg], opts: &Options) -> Result<Outcome, CliError> {
    let (mut body, pres) = load("classify", file)?;
    let mut assumptions: Vec<Assumption> = assume
        .iter()
        .map(|a| match a {
            AssumeArg::Reduced => Assumption::Reduced,
            AssumeArg::Domain => Assumption::Domain,
        })
        .collect();
    assumptions.dedup();
    let report = classify(&pres, &assumptions, opts)?;
    body.invariants = report.invariants.as_ref().map(sections::invariants);
    body.verdict = Some(sections::verdict(&report));
    body.justification = report.justification.iter().map(sections::justification).collect();
    if let Some(min) = &report.minimal_presentation {
        put_detail(&mut body, "minimal_presentation", sections::presentation(min));
        if let Some(tag) = &report.family {
            put_detail(&mut body, "family", sections::family(tag, min.variables()));
        }
    }
    if let Some(s) = &report.singularity {
        put_detail(&mut body, "singularity", sections::singularity(s));
    }
    if let Some(dr) = &report.drozd_roiter {
        put_detail(&mut body, "drozd_roiter", sections::drozd_roiter(dr));
    }
    if let Some(o) = &report.obstruction {
        put_detail(&mut body, "obstruction", sections::obstruction(o));
    }
    let exit_code = if report.budget_exceeded {
        body.error = report.reason.clone();
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        body,
        exit_code,
        plain: None,
    })
}

fn semigroup(generators: &[u64]) -> Result<Outcome, CliError> {
    let input: Vec<String> = generators.iter().map(u64::to_string).collect();
    let mut body = ReportBody::new("semigroup", input.join(",").as_bytes());
    let sg = semigroup_closure(generators)?;
    let dr = semigroup_dr(&sg);
    put_detail(&mut body, "semigroup", sections::semigroup(&sg));
    put_detail(&mut body, "drozd_roiter", sections::drozd_roiter(&dr));
    Ok(Outcome::ok(body))
}

fn arrangement(file: &Path, reduction: &str) -> Result<Outcome, CliError> {
    let text = read(file)?;
    let lines = parse_lines(&text)?;
    let form = parse_polynomial(reduction, &lines.variables)?;
    let input = format!("{text}\n--reduction {reduction}");
    let mut body = ReportBody::new("arrangement", input.as_bytes());
    let rendered: Vec<String> = lines.lines.iter().map(|l| l.display(&lines.variables).to_string()).collect();
    let reduction_text = form.display(&lines.variables).to_string();
    let arr = LineArrangement::new(lines.variables, lines.lines, form)?;
    let dr = arrangement_dr(&arr);
    put_detail(&mut body, "lines", json!(rendered));
    put_detail(&mut body, "reduction", json!(reduction_text));
    put_detail(&mut body, "drozd_roiter", sections::drozd_roiter(&dr));
    Ok(Outcome::ok(body))
}

pub fn family_presentation(family: &Family) -> Result<RingPresentation, Error> {
    Ok(match family {
        Family::Polynomial { n } => {
            if *n == 0 {
                return Err(Error::NoVariables);
            }
            RingPresentation::polynomial_ring(VariableSet::indexed("x", *n, true))
        }
        Family::Quadric { rank, n } => quadric(*rank, *n)?,
        Family::Binary { profile } => binary_form(profile)?,
        Family::Scroll { entries } => scroll_ideal(&ScrollType::new(entries.clone())?),
        Family::Veronese { n } => veronese_cone_ideal(*n)?,
        Family::Sym3x3 => veronese_cone_ideal(5)?,
        Family::Gw12 => gw12(),
        Family::Graded12 => graded12(),
    })
}

fn generate(family: &Family) -> Result<Outcome, CliError> {
    let described = family.describe();
    let pres = family_presentation(family)?;
    let text = render_presentation(&pres);
    let mut body = ReportBody::new("generate", described.as_bytes());
    put_detail(&mut body, "family", json!(described));
    put_detail(&mut body, "presentation", sections::presentation(&pres));
    Ok(Outcome {
        body,
        exit_code: EXIT_OK,
        plain: Some(format!("# cmtype generate {described}\n{text}")),
    })
}

fn groebner(file: &Path, order: OrderArg, opts: &Options) -> Result<Outcome, CliError> {
    let text = read(file)?;
    let parsed = parse_presentation(&text)?;
    let mut body = ReportBody::new("gb", text.as_bytes());
    body.warnings = parsed.warnings;
    let pres = parsed.presentation;
    let order = match order {
        OrderArg::Degrevlex => MonomialOrder::DegRevLex,
        OrderArg::Lex => MonomialOrder::Lex,
    };
    let r = buchberger_with_limits(pres.ideal(), order, &opts.limits).map(|gb| {
        let vars = pres.variables();
        let basis: Vec<String> = gb.elements().iter().map(|g| g.display(vars).to_string()).collect();
        let initial: Vec<String> = gb
            .initial_ideal()
            .generators()
            .iter()
            .map(|g| g.display(vars).to_string())
            .collect();
        put_detail(&mut body, "order", json!(order.name()));
        put_detail(&mut body, "basis", json!(basis));
        put_detail(&mut body, "initial_ideal", json!(initial));
    });
    finish(body, r)
}
