//! Driver for the `orthochar2` verifier: form files, report lines and the check suites.

pub mod census;
pub mod formfile;
pub mod report;
pub mod suites;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use orthochar2::fibermodel::{
    descent_obstruction, phi_class_in_quotient, verify_nondegenerate_twist, verify_twist_identity, FiberModel,
    ModelKind,
};
use orthochar2::linalg::Matrix;
use orthochar2::ortho::{lie_algebra, so7_form, so8_form, LieSubalgebra, LieVariant};
use orthochar2::quadform::QuadraticForm;
use orthochar2::scalars::{Field, Gf2, Literal, RationalFunction, Tower};
use thiserror::Error;

use formfile::{print_form, FieldSpec, FormFile, FormFileError};
use report::{Line, Report};
use suites::{monomial, run_suite, unit_sum, Suite, SuiteOptions};

#[derive(Debug, Parser)]
#[command(name = "orthochar2", version, about = "Exact checks for quadratic forms and orthogonal groups in characteristic 2")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite and print one CHECK line per check.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Restrict dimension sweeps to a single n.
        #[arg(long)]
        n: Option<usize>,
        /// Restrict finite-field sweeps to GF(2^k).
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=8))]
        k: Option<u8>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Compute the Lie algebra of O(Q) for a standard group or a form file.
    Lie {
        #[arg(long, value_enum, conflicts_with = "form")]
        group: Option<Group>,
        #[arg(long)]
        form: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "smooth")]
        variant: Variant,
        /// Field GF(2^k) for `--group`.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=8))]
        k: u8,
        #[arg(long)]
        print_basis: bool,
    },
    /// Enumerate O(Q)(GF(2)) for a form file with n <= 4.
    Census {
        #[arg(long)]
        form: PathBuf,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Print only the group order.
        #[arg(long)]
        group_order: bool,
    },
    /// Checks on a single fiber model.
    Fiber {
        #[arg(long, default_value = "so7", value_parser = parse_kind)]
        kind: ModelKind,
        #[arg(long, default_value_t = 0)]
        pad: usize,
        #[arg(long, value_enum, default_value = "all")]
        check: FiberCheck,
        /// Multiply psi by this element of K' (for example `01` for t); 1 is the adjoint pair.
        #[arg(long, default_value = "1")]
        psi_scale: String,
    },
    /// Parse a form file and report dimension, radical and non-degeneracy.
    Inspect {
        #[arg(long)]
        form: PathBuf,
        /// Echo the normalized file.
        #[arg(long)]
        print: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Group {
    So7,
    So8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Smooth,
    Scheme,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FiberCheck {
    Twist,
    Involution,
    Nondegenerate,
    Descent,
    PhiClass,
    All,
}

fn parse_kind(s: &str) -> Result<ModelKind, String> {
    ModelKind::parse(s).ok_or_else(|| format!("unknown model `{s}` (expected so7, so8-hat or so8-B)"))
}

/// Invalid input; maps to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    FormFile(#[from] FormFileError),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Library(#[from] orthochar2::Error),
}

/// What a command prints: report lines plus free-form lines (basis matrices, file echo).
#[derive(Debug, Default)]
pub struct Output {
    pub report: Report,
    pub extra: Vec<String>,
}

impl Output {
    fn lines(report: Report) -> Self {
        Self { report, extra: Vec::new() }
    }

    pub fn render(&self) -> String {
        let mut out = self.report.to_string();
        for line in &self.extra {
            out.push_str(line);
            out.push('\n');
        }
        out
    }

    /// 0 if every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(!self.report.passed())
    }
}

pub fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Verify { suite, n, k, seed, threads } => {
            Ok(Output::lines(run_suite(suite, &SuiteOptions { n, k, seed, threads: threads.max(1) })))
        }
        Command::Lie { group, form, variant, k, print_basis } => lie_command(group, form, variant, k, print_basis),
        Command::Census { form, threads, group_order } => census_command(&form, threads, group_order),
        Command::Fiber { kind, pad, check, psi_scale } => fiber_command(kind, pad, check, &psi_scale),
        Command::Inspect { form, print } => inspect_command(&form, print),
    }
}

fn matrix_text<F: Field>(m: &Matrix<F>) -> String {
    let rows: Vec<String> =
        (0..m.rows()).map(|i| (0..m.cols()).map(|j| m[(i, j)].to_string()).collect::<Vec<_>>().join(" ")).collect();
    rows.join("; ")
}

fn lie_lines<F: Field>(id: &str, q: &QuadraticForm<F>, variant: Variant, expected: Option<usize>, print_basis: bool) -> Result<Output, CliError> {
    let v = match variant {
        Variant::Smooth => LieVariant::Smooth,
        Variant::Scheme => LieVariant::SchemeTangent,
    };
    let g: LieSubalgebra<F> = lie_algebra(q, v)?;
    let mut out = Output::default();
    out.report.push(Line::info(format!("{id}.field")).kv("field", F::field_name()));
    let dim_line = match expected {
        Some(d) => Line::check(format!("{id}.dim"), g.dim() == d),
        None => Line::info(format!("{id}.dim")),
    };
    out.report.push(dim_line.kv("dim", g.dim()));
    let failure = g.bracket_failure();
    out.report.push(
        Line::check(format!("{id}.bracket"), failure.is_none())
            .witness("pair", || failure.map(|(i, j)| format!("{i},{j}")).unwrap_or_default()),
    );
    if print_basis {
        for (i, b) in g.basis_matrices().iter().enumerate() {
            out.extra.push(format!("BASIS {} [{}]", i + 1, matrix_text(b)));
        }
    }
    Ok(out)
}

fn lie_command(group: Option<Group>, form: Option<PathBuf>, variant: Variant, k: u8, print_basis: bool) -> Result<Output, CliError> {
    let vname = match variant {
        Variant::Smooth => "smooth",
        Variant::Scheme => "scheme",
    };
    if let Some(path) = form {
        let file = FormFile::read(&path)?;
        return with_field!(file.field, F => {
            let q = file.form::<F>()?;
            lie_lines(&format!("lie.form.{vname}"), &q, variant, None, print_basis)
        });
    }
    let group = group.ok_or_else(|| CliError::Input("one of --group or --form is required".into()))?;
    with_field!(FieldSpec::Gf2k(k), F => {
        let (name, q, expected) = match (group, variant) {
            (Group::So8, _) => ("so8", so8_form::<F>(), 28),
            (Group::So7, Variant::Smooth) => ("so7", so7_form::<F>(), 21),
            (Group::So7, Variant::Scheme) => ("so7", so7_form::<F>(), 22),
        };
        lie_lines(&format!("lie.{name}.{vname}"), &q, variant, Some(expected), print_basis)
    })
}

fn census_command(path: &std::path::Path, threads: usize, group_order: bool) -> Result<Output, CliError> {
    let file = FormFile::read(path)?;
    if file.field != FieldSpec::Gf2k(1) {
        return Err(CliError::Input(format!("census needs field gf2^1, found {}", file.field)));
    }
    let q = file.form::<Gf2>()?;
    let elements = census::sharded_elements(&q, threads)?;
    let mut lines = census::census_lines("census", &q, &elements, None);
    if group_order {
        lines.retain(|l| l.id == "census.order");
    } else {
        let count = q.count_isotropic_vectors(true)?;
        lines.push(Line::info("census.isotropic").kv("count", count));
    }
    Ok(Output::lines(Report { lines }))
}

fn fiber_command(kind: ModelKind, pad: usize, check: FiberCheck, psi_scale: &str) -> Result<Output, CliError> {
    let scale = Tower::parse_literal(psi_scale).map_err(|e| CliError::Input(e.to_string()))?;
    if scale.is_zero() {
        return Err(CliError::Input("psi scale must be nonzero".into()));
    }
    let model = FiberModel::<Tower>::with_psi_scale(kind, pad, &scale);
    let id = format!("fiber.{kind}.m{pad}");
    let wants = |c: FiberCheck| check == FiberCheck::All || check == c;
    let mut report = Report::default();
    report.push(Line::info(format!("{id}.model")).kv("n", model.n()).kv("psi_scale", scale.pretty()));
    let tw = verify_twist_identity(&model, &Tower::s());
    if wants(FiberCheck::Twist) {
        report.push(Line::check(format!("{id}.twist"), tw.passed).witness("monomial", || {
            tw.first_difference.as_ref().map(|d| format!("{} lhs={} rhs={}", monomial(d.0, d.1), d.2.pretty(), d.3.pretty())).unwrap_or_default()
        }));
    }
    if wants(FiberCheck::Involution) {
        report.push(Line::check(format!("{id}.involution"), tw.involution));
    }
    let base = FiberModel::<RationalFunction>::new(kind, pad);
    if wants(FiberCheck::Nondegenerate) {
        let nd = verify_nondegenerate_twist(&base, &RationalFunction::t(), None);
        let mut line = Line::check(format!("{id}.nondegenerate"), nd.passed()).kv("radical_dim", nd.radical_dim);
        if let Some(r) = &nd.radical_generator {
            line = line.kv("radical", unit_sum(r));
        }
        report.push(line);
    }
    if wants(FiberCheck::Descent) {
        let rk = descent_obstruction(&base, &RationalFunction::t());
        report.push(Line::check(format!("{id}.descent.K"), rk.lambda.is_none()));
        let rp = descent_obstruction(&FiberModel::<Tower>::new(kind, pad), &Tower::t());
        report.push(
            Line::check(format!("{id}.descent.Kprime"), rp.graph_isotropic == Some(true))
                .kv("lambda", rp.lambda.as_ref().map(Tower::pretty).unwrap_or_else(|| "none".into())),
        );
    }
    if wants(FiberCheck::PhiClass) {
        let pc = phi_class_in_quotient(&FiberModel::<Gf2>::new(kind, pad), None)?;
        report.push(
            Line::check(format!("{id}.phi-class"), pc.passed())
                .kv("algebra", pc.algebra_dim)
                .kv("parabolic", pc.parabolic_dim),
        );
    }
    Ok(Output::lines(report))
}

fn inspect_command(path: &std::path::Path, print: bool) -> Result<Output, CliError> {
    let file = FormFile::read(path)?;
    with_field!(file.field, F => {
        let q = file.form::<F>()?;
        let mut out = Output::default();
        out.report.push(Line::info("form.field").kv("field", file.field));
        out.report.push(Line::info("form.dim").kv("dim", q.dim()));
        let radical = q.radical();
        let basis: Vec<String> = radical.basis().iter().map(|v| unit_sum(v)).collect();
        out.report.push(
            Line::info("form.radical")
                .kv("dim", radical.dim())
                .kv("basis", if basis.is_empty() { "none".into() } else { basis.join(",") }),
        );
        out.report.push(Line::info("form.nondegenerate").kv("value", q.is_nondegenerate()));
        let printed = print_form(file.field, &q);
        let again = FormFile::parse(&printed)?.form::<F>()?;
        out.report.push(Line::check("form.roundtrip", again == q));
        if print {
            out.extra.extend(printed.lines().map(str::to_owned));
        }
        Ok(out)
    })
}
