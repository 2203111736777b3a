//! Command dispatch for the `hyperlap` binary.
//!
//! [`run_cli`] never touches the process environment or standard streams
//! itself, so it can be driven from tests.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hyperlap_core::enumerate::{cross_check, enum_signed_walks, enum_walks, DEFAULT_BUDGET};
use hyperlap_core::evolve::{evolution_operator, evolve_state, partition_trace, StateVector};
use hyperlap_core::formats::{builtin_fixture, parse_any, serialize};
use hyperlap_core::laplacian::{cw_laplacian, d_incidence, hypergraph_laplacian, incidence, susy_laplacian};
use hyperlap_core::walkcount::{count_walks, power_table, signed_base, signed_count, unsigned_base};
use hyperlap_core::{CwHypergraph, Error, ExactMatrix, Hypergraph, Instance, Parity, WalkKind, WalkQuery};
use num_complex::Complex64;

pub const BUDGET_ENV: &str = "HYPERLAP_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Human,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Even,
    Odd,
    Susy,
    Incidence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum UnsignedKind {
    Vertex,
    Edge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SignedKind {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AnyKind {
    Vertex,
    Edge,
    Lower,
    Upper,
}

impl From<UnsignedKind> for WalkKind {
    fn from(k: UnsignedKind) -> Self {
        match k {
            UnsignedKind::Vertex => WalkKind::Vertex,
            UnsignedKind::Edge => WalkKind::Edge,
        }
    }
}

impl From<SignedKind> for WalkKind {
    fn from(k: SignedKind) -> Self {
        match k {
            SignedKind::Lower => WalkKind::Lower,
            SignedKind::Upper => WalkKind::Upper,
        }
    }
}

impl From<AnyKind> for WalkKind {
    fn from(k: AnyKind) -> Self {
        match k {
            AnyKind::Vertex => WalkKind::Vertex,
            AnyKind::Edge => WalkKind::Edge,
            AnyKind::Lower => WalkKind::Lower,
            AnyKind::Upper => WalkKind::Upper,
        }
    }
}

/// Hypergraph Laplacians, walk counts and their brute-force verification.
#[derive(Debug, Parser)]
#[command(name = "hyperlap", version)]
struct Cli {
    /// Input file in `.hg` or `.cw` format.
    #[arg(long, global = true, value_name = "PATH", conflicts_with = "fixture")]
    input: Option<PathBuf>,

    /// Built-in input: fig1 or fig2.
    #[arg(long, global = true, value_name = "NAME")]
    fixture: Option<String>,

    #[arg(long, global = true, value_enum, default_value = "human")]
    format: OutputMode,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the input and report every problem found.
    Validate,
    /// Print an incidence matrix or a Laplacian.
    Laplacian {
        #[arg(long, value_enum)]
        which: Which,
        /// Level d (CW input only).
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Count vertex or edge walks via matrix powers.
    Count {
        #[arg(long, value_enum)]
        kind: UnsignedKind,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        length: u64,
        /// Print every length from 1 to --length.
        #[arg(long)]
        table: bool,
    },
    /// Signed sum over lower or upper walks via matrix powers.
    SignedCount {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum)]
        kind: SignedKind,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        length: u64,
        #[arg(long)]
        table: bool,
    },
    /// List every walk of the given kind and length.
    Enumerate {
        #[arg(long, value_enum)]
        kind: AnyKind,
        /// Level d (lower/upper only).
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        length: usize,
    },
    /// Compare matrix powers with brute-force enumeration.
    Check {
        #[arg(long)]
        max_length: usize,
    },
    /// Evolution operator exp(-i·theta·Δ) of the supersymmetric Laplacian.
    Evolve {
        #[arg(long, allow_negative_numbers = true)]
        theta: f64,
        /// Print only the trace of the operator.
        #[arg(long)]
        trace: bool,
        /// Evolve the basis state with this 1-based index instead.
        #[arg(long, conflicts_with = "trace")]
        state: Option<usize>,
    },
    /// Print the plain hypergraph underlying a CW input.
    Project,
    /// Show or emit a built-in fixture.
    Fixture {
        #[arg(long)]
        name: String,
        /// Print the fixture in its file format.
        #[arg(long)]
        emit: bool,
    },
}

/// Exit status plus captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } | Error::NotSymmetric => Failure::Internal(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

struct Ctx {
    mode: OutputMode,
    budget: u64,
    out: String,
    err: String,
}

impl Ctx {
    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn kv(&mut self, key: &str, value: impl std::fmt::Display) {
        let _ = writeln!(self.out, "{key}={value}");
    }

    fn human(&self) -> bool {
        self.mode == OutputMode::Human
    }
}

/// Runs one invocation. `args` includes the program name; `budget_env` is
/// the value of `HYPERLAP_BUDGET`, if set.
pub fn run_cli<I, T>(args: I, budget_env: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let budget = match budget_env {
        None => DEFAULT_BUDGET,
        Some(raw) => match raw.trim().parse::<u64>() {
            Ok(b) if b > 0 => b,
            _ => {
                return Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: format!("error: {BUDGET_ENV} must be a positive integer, got `{raw}`\n"),
                }
            }
        },
    };
    let mut ctx = Ctx {
        mode: cli.format,
        budget,
        out: String::new(),
        err: String::new(),
    };
    let result = dispatch(&cli, &mut ctx);
    let (code, extra) = match result {
        Ok(()) => (0, None),
        Err(Failure::Input(msg)) => (1, Some(msg)),
        Err(Failure::Internal(msg)) => (2, Some(msg)),
    };
    if let Some(msg) = extra {
        let _ = writeln!(ctx.err, "error: {msg}");
    }
    Outcome {
        code,
        stdout: ctx.out,
        stderr: ctx.err,
    }
}

fn load(cli: &Cli) -> Result<Instance, Failure> {
    match (&cli.input, &cli.fixture) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
            parse_any(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
        (None, Some(name)) => Ok(builtin_fixture(name)?),
        (None, None) => Err(Failure::Input("no input: pass --input PATH or --fixture NAME".into())),
        (Some(_), Some(_)) => Err(Failure::Input("--input and --fixture are mutually exclusive".into())),
    }
}

fn need_hypergraph(object: &Instance) -> Result<&Hypergraph, Failure> {
    match object {
        Instance::Hypergraph(h) => Ok(h),
        Instance::Cw(_) => Err(Failure::Input("this command needs a hypergraph (.hg) input".into())),
    }
}

fn need_cw(object: &Instance) -> Result<&CwHypergraph, Failure> {
    match object {
        Instance::Cw(x) => Ok(x),
        Instance::Hypergraph(_) => Err(Failure::Input("this command needs a CW-hypergraph (.cw) input".into())),
    }
}

/// 1-based CLI index to 0-based, rejecting 0.
fn index(flag: &str, value: usize) -> Result<usize, Failure> {
    value
        .checked_sub(1)
        .ok_or_else(|| Failure::Input(format!("--{flag} is 1-based; 0 is not a valid index")))
}

fn level_zero_note(ctx: &mut Ctx, level: usize) {
    if level == 0 {
        ctx.err
            .push_str("note: level 0 treats vertices as 0-cells; walks between 0- and 1-cells are an extension\n");
    }
}

fn dispatch(cli: &Cli, ctx: &mut Ctx) -> CmdResult {
    match &cli.command {
        Command::Fixture { name, emit } => fixture(ctx, name, *emit),
        Command::Validate => validate(ctx, &load(cli)?),
        Command::Laplacian { which, dim } => laplacian(ctx, &load(cli)?, *which, *dim),
        Command::Count {
            kind,
            from,
            to,
            length,
            table,
        } => {
            let object = load(cli)?;
            let h = need_hypergraph(&object)?;
            let q = WalkQuery {
                kind: (*kind).into(),
                level: 0,
                from: index("from", *from)?,
                to: index("to", *to)?,
                length: *length,
            };
            if *table {
                let base = unsigned_base(h, q.kind)?;
                print_table(ctx, &base, q)
            } else {
                let r = count_walks(h, q)?;
                print_count(ctx, q, &r.value.to_string());
                Ok(())
            }
        }
        Command::SignedCount {
            dim,
            kind,
            from,
            to,
            length,
            table,
        } => {
            let object = load(cli)?;
            let x = need_cw(&object)?;
            let q = WalkQuery {
                kind: (*kind).into(),
                level: *dim,
                from: index("from", *from)?,
                to: index("to", *to)?,
                length: *length,
            };
            level_zero_note(ctx, *dim);
            if *table {
                let base = signed_base(x, q.kind, q.level)?;
                print_table(ctx, &base, q)
            } else {
                let r = signed_count(x, q)?;
                print_count(ctx, q, &r.value.to_string());
                Ok(())
            }
        }
        Command::Enumerate {
            kind,
            dim,
            from,
            to,
            length,
        } => enumerate(ctx, &load(cli)?, (*kind).into(), *dim, index("from", *from)?, index("to", *to)?, *length),
        Command::Check { max_length } => check(ctx, &load(cli)?, *max_length),
        Command::Evolve { theta, trace, state } => evolve(ctx, &load(cli)?, *theta, *trace, *state),
        Command::Project => {
            let object = load(cli)?;
            let h = need_cw(&object)?.project_hypergraph()?;
            ctx.out.push_str(&serialize(&Instance::Hypergraph(h)));
            Ok(())
        }
    }
}

fn fixture(ctx: &mut Ctx, name: &str, emit: bool) -> CmdResult {
    let object = builtin_fixture(name)?;
    if emit {
        ctx.out.push_str(&serialize(&object));
        return Ok(());
    }
    match &object {
        Instance::Hypergraph(h) => {
            ctx.kv("type", "hypergraph");
            ctx.kv("vertices", h.vertex_count());
            ctx.kv("edges", h.edge_count());
        }
        Instance::Cw(x) => {
            ctx.kv("type", "cw");
            let counts: Vec<String> = x.counts().iter().map(ToString::to_string).collect();
            ctx.kv("cells", counts.join(","));
        }
    }
    Ok(())
}

fn validate(ctx: &mut Ctx, object: &Instance) -> CmdResult {
    let report = object.validate();
    if ctx.human() {
        ctx.out.push_str(&report.to_string());
    } else {
        ctx.kv("ok", report.ok);
        for issue in &report.issues {
            ctx.kv("issue", format!("{}|{}|{}", issue.severity, issue.location, issue.message));
        }
        for (d, zero) in &report.boundary_squared_zero {
            ctx.kv(&format!("boundary_squared_zero.{d}"), zero);
        }
    }
    if report.ok {
        Ok(())
    } else {
        Err(Failure::Input("validation failed".into()))
    }
}

fn print_grid(ctx: &mut Ctx, title: &str, rows: usize, cols: usize, cell: impl Fn(usize, usize) -> String) {
    if ctx.human() {
        ctx.line(format!("{title} ({rows}x{cols})"));
        let cells: Vec<Vec<String>> = (0..rows).map(|i| (0..cols).map(|j| cell(i, j)).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
        for row in cells {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            ctx.line(padded.join(" "));
        }
    } else {
        ctx.kv("matrix", title);
        ctx.kv("rows", rows);
        ctx.kv("cols", cols);
        for i in 0..rows {
            let row: Vec<String> = (0..cols).map(|j| cell(i, j)).collect();
            ctx.kv("row", row.join(" "));
        }
    }
}

fn print_exact(ctx: &mut Ctx, title: &str, m: &ExactMatrix) {
    print_grid(ctx, title, m.dim(), m.dim(), |i, j| m.get(i, j).to_string());
}

fn laplacian(ctx: &mut Ctx, object: &Instance, which: Which, dim: Option<usize>) -> CmdResult {
    match object {
        Instance::Hypergraph(h) => {
            if dim.is_some() {
                return Err(Failure::Input("--dim applies to CW-hypergraph input only".into()));
            }
            match which {
                Which::Even => print_exact(ctx, "even", &hypergraph_laplacian(h, Parity::Even)?),
                Which::Odd => print_exact(ctx, "odd", &hypergraph_laplacian(h, Parity::Odd)?),
                Which::Susy => print_exact(ctx, "supersymmetric", &susy_laplacian(h)?),
                Which::Incidence => {
                    let inc = incidence(h)?;
                    print_grid(ctx, "incidence", inc.rows(), inc.cols(), |i, j| inc.get(i, j).to_string());
                }
            }
        }
        Instance::Cw(x) => {
            let d = dim.ok_or_else(|| Failure::Input("--dim is required for CW-hypergraph input".into()))?;
            level_zero_note(ctx, d);
            match which {
                Which::Even => print_exact(ctx, &format!("even d={d}"), &cw_laplacian(x, d, Parity::Even)?),
                Which::Odd => print_exact(ctx, &format!("odd d={d}"), &cw_laplacian(x, d, Parity::Odd)?),
                Which::Incidence => {
                    let inc = d_incidence(x, d)?;
                    print_grid(ctx, &format!("incidence d={d}"), inc.rows(), inc.cols(), |i, j| {
                        inc.get(i, j).to_string()
                    });
                }
                Which::Susy => {
                    return Err(Failure::Input(
                        "the supersymmetric Laplacian is defined for hypergraph input; use `project` first".into(),
                    ))
                }
            }
        }
    }
    Ok(())
}

fn echo_query(ctx: &mut Ctx, q: WalkQuery) {
    ctx.kv("kind", q.kind);
    if q.kind.is_signed() {
        ctx.kv("dim", q.level);
    }
    ctx.kv("from", q.from + 1);
    ctx.kv("to", q.to + 1);
}

fn print_count(ctx: &mut Ctx, q: WalkQuery, value: &str) {
    if ctx.human() {
        ctx.line(value);
    } else {
        echo_query(ctx, q);
        ctx.kv("length", q.length);
        ctx.kv("value", value);
    }
}

fn print_table(ctx: &mut Ctx, base: &ExactMatrix, q: WalkQuery) -> CmdResult {
    let bound = base.dim();
    for (flag, idx) in [("from", q.from), ("to", q.to)] {
        if idx >= bound {
            return Err(Failure::Input(format!("--{flag} {} out of range 1..={bound}", idx + 1)));
        }
    }
    let table = power_table(base, q.length);
    if !ctx.human() {
        echo_query(ctx, q);
    }
    for (k, m) in table.iter().enumerate().skip(1) {
        let value = m.get(q.from, q.to);
        if ctx.human() {
            ctx.line(format!("{k} {value}"));
        } else {
            ctx.kv(&format!("value.{k}"), value);
        }
    }
    Ok(())
}

fn enumerate(
    ctx: &mut Ctx,
    object: &Instance,
    kind: WalkKind,
    dim: Option<usize>,
    from: usize,
    to: usize,
    length: usize,
) -> CmdResult {
    if kind.is_signed() {
        let x = need_cw(object)?;
        let d = dim.ok_or_else(|| Failure::Input("--dim is required for lower/upper walks".into()))?;
        level_zero_note(ctx, d);
        let walks = enum_signed_walks(x, d, kind, from, to, length, ctx.budget)?;
        let sum: i64 = walks.iter().map(|(_, s)| s.value()).sum();
        for (w, s) in &walks {
            if ctx.human() {
                ctx.line(format!("{w} [{s}]"));
            } else {
                ctx.kv("walk", format!("{w} [{s}]"));
            }
        }
        if ctx.human() {
            ctx.line(format!("{} walks, signed sum {sum}", walks.len()));
        } else {
            ctx.kv("count", walks.len());
            ctx.kv("signed_sum", sum);
        }
    } else {
        let h = need_hypergraph(object)?;
        if dim.is_some() {
            return Err(Failure::Input("--dim applies to lower/upper walks only".into()));
        }
        let walks = enum_walks(h, kind, from, to, length, ctx.budget)?;
        for w in &walks {
            if ctx.human() {
                ctx.line(w.to_string());
            } else {
                ctx.kv("walk", w);
            }
        }
        if ctx.human() {
            ctx.line(format!("{} walks", walks.len()));
        } else {
            ctx.kv("count", walks.len());
        }
    }
    Ok(())
}

fn check(ctx: &mut Ctx, object: &Instance, max_length: usize) -> CmdResult {
    if max_length == 0 {
        return Err(Failure::Input("--max-length must be at least 1".into()));
    }
    let report = cross_check(object, max_length, ctx.budget)?;
    let describe = |e: &hyperlap_core::enumerate::CheckEntry| {
        let level = if e.kind.is_signed() { format!(" d={}", e.level) } else { String::new() };
        format!(
            "{}{level} {}->{} k={}: matrix {} oracle {}",
            e.kind,
            e.from + 1,
            e.to + 1,
            e.length,
            e.matrix,
            e.oracle
        )
    };
    if ctx.human() {
        ctx.line(&report.description);
        ctx.line(format!("{} comparisons", report.entries.len()));
        for m in &report.mismatches {
            ctx.line(format!("mismatch: {}", describe(m)));
        }
        ctx.line(format!("{} mismatches", report.mismatches.len()));
    } else {
        ctx.kv("comparisons", report.entries.len());
        ctx.kv("mismatches", report.mismatches.len());
        for m in &report.mismatches {
            ctx.kv("mismatch", describe(m));
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Internal(format!("{} mismatches", report.mismatches.len())))
    }
}

/// Shortest-form decimal with at most 12 significant digits.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        let s = format!("{x:.11e}");
        let (mantissa, exponent) = s.split_once('e').expect("exponent form");
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{exponent}")
    }
}

/// `a+bi` / `a-bi` with 12 significant digits per part.
pub fn format_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() && z.im != 0.0 { '-' } else { '+' };
    format!("{}{sign}{}i", format_real(z.re), format_real(z.im.abs()))
}

fn evolve(ctx: &mut Ctx, object: &Instance, theta: f64, trace: bool, state: Option<usize>) -> CmdResult {
    let projected;
    let h = match object {
        Instance::Hypergraph(h) => h,
        Instance::Cw(x) => {
            projected = x.project_hypergraph()?;
            &projected
        }
    };
    if trace {
        let z = partition_trace(h, theta)?;
        if ctx.human() {
            ctx.line(format_complex(z));
        } else {
            ctx.kv("theta", format_real(theta));
            ctx.kv("trace", format_complex(z));
        }
        return Ok(());
    }
    let u = evolution_operator(&susy_laplacian(h)?, theta)?;
    match state {
        Some(idx) => {
            let idx = index("state", idx)?;
            if idx >= u.dim() {
                return Err(Failure::Input(format!("--state {} out of range 1..={}", idx + 1, u.dim())));
            }
            let psi = evolve_state(&u, &StateVector::basis(u.dim(), idx))?;
            for (i, z) in psi.0.iter().enumerate() {
                if ctx.human() {
                    ctx.line(format_complex(*z));
                } else {
                    ctx.kv(&format!("amplitude.{}", i + 1), format_complex(*z));
                }
            }
            if ctx.human() {
                ctx.line(format!("norm {}", format_real(psi.norm())));
            } else {
                ctx.kv("norm", format_real(psi.norm()));
            }
        }
        None => {
            let title = format!("exp(-i*{}*L)", format_real(theta));
            print_grid(ctx, &title, u.dim(), u.dim(), |i, j| format_complex(u.get(i, j)));
        }
    }
    Ok(())
}
