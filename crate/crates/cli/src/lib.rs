//! Command-line front end for `tanhspec`.
//!
//! Every command produces one numeric table (CSV or JSON) plus a few
//! diagnostic lines for stderr. Errors are single lines of the form
//! `error[kind]: message`; usage and domain errors exit with 2, numerical
//! failures with 3.

pub mod error;
pub mod functions;
pub mod table;

use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use tanhspec::{
    analyze, analyze_full, differentiate, fourier_transform, mult_op, multiplier_coeffs, phi, solve_first_order,
    BasisSpec, ChebyshevKind, Evaluator, Expansion, JacobiParams, RangeMode,
};

pub use error::{CliError, Kind, Result};
pub use functions::{Builtin, Function, FunctionSpec, Interpolant};
pub use table::{Format, Table};

#[derive(Debug, Parser)]
#[command(name = "tanhspec", version, about = "Spectral expansions on the real line in tanh-Jacobi bases")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expansion coefficients of a function.
    Expand(ExpandArgs),
    /// Evaluate a coefficient table at points.
    Eval(PointArgs),
    /// Evaluate the derivative of a coefficient table at points.
    Diff(PointArgs),
    /// Fourier transform of a coefficient table at frequencies.
    Ft(PointArgs),
    /// Solve u' + a u = f on the real line.
    Solve(SolveArgs),
    /// Basis functions sampled on a grid.
    Basis(BasisCmdArgs),
}

#[derive(Debug, Clone, Args)]
pub struct BasisArgs {
    #[arg(long, default_value_t = -0.5, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = -0.5, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, default_value = "full", value_parser = parse_mode)]
    pub mode: RangeMode,
}

impl BasisArgs {
    pub fn spec(&self) -> Result<BasisSpec> {
        if self.mode == RangeMode::Half && self.alpha != self.beta {
            return Err(CliError::new(
                Kind::Domain,
                format!("half mode requires alpha = beta (got {} and {})", self.alpha, self.beta),
            ));
        }
        Ok(BasisSpec::new(JacobiParams::new(self.alpha, self.beta)?, self.mode)?)
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub basis: BasisArgs,
    #[arg(long, default_value_t = 64)]
    pub n: usize,
    /// NAME[:PARAM] or file:PATH
    #[arg(long = "fn", value_parser = parse_function)]
    pub function: FunctionSpec,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    #[command(flatten)]
    pub basis: BasisArgs,
    /// Coefficient table with columns `m,c` (CSV or JSON).
    #[arg(long = "in")]
    pub input: PathBuf,
    /// `LO:HI:COUNT` or a comma-separated list.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_points)]
    pub points: Option<Points>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[arg(long, default_value_t = 64)]
    pub n: usize,
    /// Multiplier: `poly:C0,C1,…` for Σ C_k tanh^k x, or a function spec.
    #[arg(long, value_parser = parse_multiplier)]
    pub a: Multiplier,
    /// Right-hand side.
    #[arg(long = "fn", value_parser = parse_function)]
    pub function: FunctionSpec,
    /// Number M of multiplier coefficients kept beyond the constant.
    #[arg(long, default_value_t = 8)]
    pub bandwidth: usize,
    /// Also sample u at these points.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_points)]
    pub points: Option<Points>,
    /// Where the sampled u goes (requires --points).
    #[arg(long)]
    pub samples: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct BasisCmdArgs {
    #[command(flatten)]
    pub basis: BasisArgs,
    /// Indices of the basis functions.
    #[arg(long, value_delimiter = ',', default_value = "0,1,2,3,4")]
    pub m: Vec<usize>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_points)]
    pub points: Option<Points>,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_mode(s: &str) -> std::result::Result<RangeMode, String> {
    s.parse::<RangeMode>().map_err(|e| e.to_string())
}

fn parse_function(s: &str) -> std::result::Result<FunctionSpec, String> {
    s.parse::<FunctionSpec>().map_err(|e| e.message)
}

fn parse_points(s: &str) -> std::result::Result<Points, String> {
    s.parse::<Points>().map_err(|e| e.message)
}

fn parse_multiplier(s: &str) -> std::result::Result<Multiplier, String> {
    s.parse::<Multiplier>().map_err(|e| e.message)
}

/// Sample points, either evenly spaced or listed.
#[derive(Debug, Clone, PartialEq)]
pub struct Points(pub Vec<f64>);

impl Points {
    pub fn linspace(lo: f64, hi: f64, count: usize) -> Self {
        if count == 1 {
            return Points(vec![lo]);
        }
        let h = (hi - lo) / (count - 1) as f64;
        Points((0..count).map(|k| if k + 1 == count { hi } else { lo + k as f64 * h }).collect())
    }
}

impl FromStr for Points {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let num = |v: &str| {
            v.trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| CliError::usage(format!("'{v}' is not a finite number")))
        };
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [lo, hi, count] => {
                let count: usize =
                    count.trim().parse().map_err(|_| CliError::usage(format!("'{count}' is not a point count")))?;
                if count == 0 {
                    return Err(CliError::usage("point count must be at least 1"));
                }
                Ok(Points::linspace(num(lo)?, num(hi)?, count))
            }
            [list] => Ok(Points(list.split(',').map(num).collect::<Result<_>>()?)),
            _ => Err(CliError::usage(format!("points '{s}' must be LO:HI:COUNT or a comma-separated list"))),
        }
    }
}

/// The coefficient function `a` of a first-order problem.
#[derive(Debug, Clone, PartialEq)]
pub enum Multiplier {
    TanhPolynomial(Vec<f64>),
    Function(FunctionSpec),
}

impl FromStr for Multiplier {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s.strip_prefix("poly:") {
            Some(list) => {
                let c = list
                    .split(',')
                    .map(|v| {
                        v.trim()
                            .parse::<f64>()
                            .ok()
                            .filter(|x| x.is_finite())
                            .ok_or_else(|| CliError::usage(format!("bad polynomial coefficient '{v}'")))
                    })
                    .collect::<Result<Vec<f64>>>()?;
                Ok(Multiplier::TanhPolynomial(c))
            }
            None => Ok(Multiplier::Function(s.parse()?)),
        }
    }
}

impl Multiplier {
    fn load(&self) -> Result<Box<dyn Fn(f64) -> f64>> {
        Ok(match self {
            Multiplier::TanhPolynomial(c) => {
                let c = c.clone();
                Box::new(move |x: f64| {
                    let t = x.tanh();
                    c.iter().rev().fold(0.0, |acc, &v| acc * t + v)
                })
            }
            Multiplier::Function(f) => {
                let f = f.load()?;
                Box::new(move |x| f.eval(x))
            }
        })
    }
}

/// A finished command: the main table and lines for stderr.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub table: Table,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub extra: Vec<(PathBuf, Table)>,
    pub notes: Vec<String>,
}

fn table_from_expansion(e: &Expansion) -> Table {
    let mut t = Table::new(["m", "c"]);
    for (m, &c) in e.coeffs().iter().enumerate() {
        t.push(vec![m as f64, c]);
    }
    t
}

/// Coefficients from a table with a `c` column and an optional `m`
/// column that must read `0, 1, …`.
pub fn expansion_from_table(spec: BasisSpec, table: &Table) -> Result<Expansion> {
    if table.is_empty() {
        return Err(CliError::input("coefficient table is empty"));
    }
    let c = table.column("c").ok_or_else(|| CliError::input("coefficient table needs a 'c' column"))?;
    if let Some(m) = table.column("m") {
        if let Some(k) = m.iter().enumerate().position(|(k, &v)| v != k as f64) {
            return Err(CliError::input(format!("row {k}: expected m = {k}, found {}", m[k])));
        }
    }
    Ok(Expansion::new(spec, c)?)
}

pub fn read_table(path: &Path) -> Result<Table> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::new(Kind::Io, format!("{}: {e}", path.display())))?;
    Table::parse(&text)
}

pub fn cmd_expand(spec: &BasisSpec, f: &Function, n: usize) -> Result<(Table, f64)> {
    if n == 0 {
        return Err(CliError::new(Kind::Domain, "n must be at least 1"));
    }
    let e = analyze(spec, |x| f.eval(x), n)?;
    let tail = e.coeffs()[n - 1].abs();
    Ok((table_from_expansion(&e), tail))
}

pub fn cmd_eval(e: &Expansion, points: &[f64]) -> Table {
    let ev = Evaluator::new(e);
    let mut t = Table::new(["x", "value"]);
    for &x in points {
        t.push(vec![x, ev.eval(x)]);
    }
    t
}

pub fn cmd_diff(e: &Expansion, points: &[f64]) -> Result<Table> {
    Ok(cmd_eval(&differentiate(e)?, points))
}

pub fn cmd_ft(e: &Expansion, xi: &[f64]) -> Result<Table> {
    let values = fourier_transform(e, xi)?;
    let mut t = Table::new(["xi", "re", "im"]);
    for (&k, v) in xi.iter().zip(values) {
        t.push(vec![k, v.re, v.im]);
    }
    Ok(t)
}

/// Columns `x, phi_<m>…`.
pub fn cmd_basis(spec: &BasisSpec, ms: &[usize], points: &[f64]) -> Table {
    let mut t = Table::new(std::iter::once("x".to_string()).chain(ms.iter().map(|m| format!("phi_{m}"))));
    for &x in points {
        let mut row = vec![x];
        row.extend(ms.iter().map(|&m| phi(spec, m, x)));
        t.push(row);
    }
    t
}

/// Result of [`cmd_solve`].
#[derive(Debug, Clone, PartialEq)]
pub struct Solved {
    pub u: Expansion,
    pub residual: f64,
    /// Largest multiplier coefficient dropped by the truncation.
    pub dropped: f64,
}

pub fn cmd_solve<A: Fn(f64) -> f64, F: Fn(f64) -> f64>(a: A, f: F, n: usize, bandwidth: usize) -> Result<Solved> {
    if n == 0 {
        return Err(CliError::new(Kind::Domain, "n must be at least 1"));
    }
    if bandwidth >= n {
        return Err(CliError::new(Kind::Domain, format!("bandwidth {bandwidth} must be smaller than n = {n}")));
    }
    let samples = (4 * (bandwidth + 1)).max(64);
    let ac = multiplier_coeffs(&a, samples)?;
    let dropped = ac[bandwidth + 1..].iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let op = mult_op(&ac, bandwidth, n)?;
    let spec = BasisSpec::full(ChebyshevKind::T.params());
    let rows = n + bandwidth.max(1);
    let rhs = analyze_full(&spec, f, rows)?;
    let d = tanhspec::diff_coeffs(spec.params(), rows + 1);
    let sol = solve_first_order(&d, &op, &rhs, n)?;
    Ok(Solved { u: sol.u, residual: sol.residual, dropped })
}

fn points_or(p: &Option<Points>, lo: f64, hi: f64, count: usize) -> Vec<f64> {
    p.clone().unwrap_or_else(|| Points::linspace(lo, hi, count)).0
}

/// Runs a parsed command without touching stdout or output files.
pub fn run(cli: &Cli) -> Result<Output> {
    let plain = |table: Table, output: &OutputArgs, notes: Vec<String>| Output {
        table,
        format: output.format,
        out: output.out.clone(),
        extra: Vec::new(),
        notes,
    };
    match &cli.command {
        Command::Expand(args) => {
            let spec = args.basis.spec()?;
            let f = args.function.load()?;
            let (table, tail) = cmd_expand(&spec, &f, args.n)?;
            Ok(plain(table, &args.output, vec![format!("tail |c_{}| = {tail:e}", args.n.saturating_sub(1))]))
        }
        Command::Eval(args) | Command::Diff(args) | Command::Ft(args) => {
            let spec = args.basis.spec()?;
            let e = expansion_from_table(spec, &read_table(&args.input)?)?;
            let table = match &cli.command {
                Command::Eval(_) => cmd_eval(&e, &points_or(&args.points, -5.0, 5.0, 101)),
                Command::Diff(_) => cmd_diff(&e, &points_or(&args.points, -5.0, 5.0, 101))?,
                _ => cmd_ft(&e, &points_or(&args.points, -8.0, 8.0, 33))?,
            };
            Ok(plain(table, &args.output, Vec::new()))
        }
        Command::Solve(args) => {
            if args.samples.is_some() && args.points.is_none() {
                return Err(CliError::usage("--samples needs --points"));
            }
            let a = args.a.load()?;
            let f = args.function.load()?;
            let s = cmd_solve(a, |x| f.eval(x), args.n, args.bandwidth)?;
            let mut notes = vec![format!("residual = {:e}", s.residual)];
            if s.dropped > 0.0 {
                notes.push(format!("largest dropped multiplier coefficient = {:e}", s.dropped));
            }
            let mut extra = Vec::new();
            if let (Some(path), Some(points)) = (&args.samples, &args.points) {
                extra.push((path.clone(), cmd_eval(&s.u, &points.0)));
            }
            let mut o = plain(table_from_expansion(&s.u), &args.output, notes);
            o.extra = extra;
            Ok(o)
        }
        Command::Basis(args) => {
            let spec = args.basis.spec()?;
            Ok(plain(cmd_basis(&spec, &args.m, &points_or(&args.points, -5.0, 5.0, 201)), &args.output, Vec::new()))
        }
    }
}

/// Writes the tables of `o`; returns the main table's text when it goes
/// to stdout.
pub fn emit(o: &Output) -> Result<Option<String>> {
    for (path, t) in &o.extra {
        write_file(path, &t.write(o.format)?)?;
    }
    let text = o.table.write(o.format)?;
    match &o.out {
        Some(path) => {
            write_file(path, &text)?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| CliError::new(Kind::Io, format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points() {
        assert_eq!("-1:1:3".parse::<Points>().unwrap(), Points(vec![-1.0, 0.0, 1.0]));
        assert_eq!("0.5".parse::<Points>().unwrap(), Points(vec![0.5]));
        assert_eq!("1,2, 3".parse::<Points>().unwrap(), Points(vec![1.0, 2.0, 3.0]));
        assert_eq!("2:3:1".parse::<Points>().unwrap(), Points(vec![2.0]));
        for bad in ["0:1:0", "a,b", "1:2", "1:2:3:4", "inf"] {
            assert!(bad.parse::<Points>().is_err(), "{bad}");
        }
        let p = Points::linspace(-5.0, 5.0, 201);
        assert_eq!(p.0[200], 5.0);
        assert_eq!(p.0[100], 0.0);
    }

    #[test]
    fn multiplier_parsing() {
        assert_eq!("poly:2,1".parse::<Multiplier>().unwrap(), Multiplier::TanhPolynomial(vec![2.0, 1.0]));
        assert!(matches!("sech".parse::<Multiplier>().unwrap(), Multiplier::Function(_)));
        assert!("poly:1,x".parse::<Multiplier>().is_err());
        let a = Multiplier::TanhPolynomial(vec![2.0, 0.0, 3.0]).load().unwrap();
        assert!((a(1.0) - (2.0 + 3.0 * 1f64.tanh().powi(2))).abs() < 1e-15);
    }

    #[test]
    fn basis_args_validation() {
        let mk = |alpha, beta, mode| BasisArgs { alpha, beta, mode };
        assert!(mk(-0.5, -0.5, RangeMode::Full).spec().is_ok());
        let e = mk(-1.0, 0.0, RangeMode::Full).spec().unwrap_err();
        assert_eq!(e.kind, Kind::Domain);
        assert!(e.message.contains("alpha must exceed -1"));
        let e = mk(0.5, 0.0, RangeMode::Half).spec().unwrap_err();
        assert!(e.message.contains("half mode requires alpha = beta"));
    }

    #[test]
    fn coefficient_tables() {
        let spec = BasisSpec::full(JacobiParams::new(0.0, 0.0).unwrap());
        let mut t = Table::new(["m", "c"]);
        t.push(vec![0.0, 1.0]);
        t.push(vec![2.0, 1.0]);
        assert!(expansion_from_table(spec, &t).is_err());
        assert!(expansion_from_table(spec, &Table::new(["m", "c"])).is_err());
        let mut t = Table::new(["c"]);
        t.push(vec![0.25]);
        assert_eq!(expansion_from_table(spec, &t).unwrap().coeffs(), &[0.25]);
    }
}
