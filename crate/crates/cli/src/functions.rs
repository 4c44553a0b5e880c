//! Input functions: a small registry of builtins plus sampled data.

use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{CliError, Result};
use crate::table::Table;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    /// `exp(-(x/w)²)`, default `w = 1`.
    Gaussian,
    /// `sech^p x`, default `p = 1`.
    Sech,
    /// `sech^p x tanh x`, default `p = 1`.
    SechTanh,
    /// `sech x / (1 + r tanh²x)`, default `r = 25`.
    RungeTanh,
    /// `exp(-1/(1 - (x/w)²))` on `|x| < w`, zero outside, default `w = 1`.
    Bump,
}

impl Builtin {
    pub const ALL: [Builtin; 5] =
        [Builtin::Gaussian, Builtin::Sech, Builtin::SechTanh, Builtin::RungeTanh, Builtin::Bump];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Gaussian => "gaussian",
            Builtin::Sech => "sech",
            Builtin::SechTanh => "sech_tanh",
            Builtin::RungeTanh => "runge_tanh",
            Builtin::Bump => "bump",
        }
    }

    fn default_param(self) -> f64 {
        match self {
            Builtin::RungeTanh => 25.0,
            _ => 1.0,
        }
    }

    pub fn eval(self, p: f64, x: f64) -> f64 {
        match self {
            Builtin::Gaussian => (-(x / p).powi(2)).exp(),
            Builtin::Sech => sech_pow(x, p),
            Builtin::SechTanh => sech_pow(x, p) * x.tanh(),
            Builtin::RungeTanh => 1.0 / (x.cosh() * (1.0 + p * x.tanh().powi(2))),
            Builtin::Bump => {
                let u = x / p;
                if u.abs() < 1.0 {
                    (-1.0 / (1.0 - u * u)).exp()
                } else {
                    0.0
                }
            }
        }
    }
}

/// `sech^p x` without overflow in `cosh`.
fn sech_pow(x: f64, p: f64) -> f64 {
    let a = x.abs();
    // sech x = 2 e^{-a} / (1 + e^{-2a})
    (p * (std::f64::consts::LN_2 - a - (-2.0 * a).exp().ln_1p())).exp()
}

/// A function given on the command line as `NAME[:PARAM]` or
/// `file:PATH`.
#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSpec {
    Builtin { kind: Builtin, param: f64 },
    Samples(PathBuf),
}

impl FromStr for FunctionSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(path) = s.strip_prefix("file:") {
            if path.is_empty() {
                return Err(CliError::usage("file: needs a path"));
            }
            return Ok(FunctionSpec::Samples(PathBuf::from(path)));
        }
        let (name, param) = match s.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (s, None),
        };
        let kind = Builtin::ALL.into_iter().find(|b| b.name() == name).ok_or_else(|| {
            let names: Vec<_> = Builtin::ALL.iter().map(|b| b.name()).collect();
            CliError::usage(format!("unknown function '{name}' (builtins: {}; or file:PATH)", names.join(", ")))
        })?;
        let param = match param {
            None => kind.default_param(),
            Some(p) => {
                let v: f64 = p.parse().map_err(|_| CliError::usage(format!("bad parameter '{p}' for {name}")))?;
                if !(v.is_finite() && v > 0.0) {
                    return Err(CliError::usage(format!("parameter for {name} must be positive (got {p})")));
                }
                v
            }
        };
        Ok(FunctionSpec::Builtin { kind, param })
    }
}

impl FunctionSpec {
    /// Loads sample files; builtins need no I/O.
    pub fn load(&self) -> Result<Function> {
        match self {
            FunctionSpec::Builtin { kind, param } => Ok(Function::Builtin(*kind, *param)),
            FunctionSpec::Samples(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::new(crate::error::Kind::Io, format!("{}: {e}", path.display())))?;
                let table = Table::parse(&text)?;
                let x = table.column("x").ok_or_else(|| CliError::input("sample table needs an 'x' column"))?;
                let f = table
                    .column("value")
                    .or_else(|| table.column("f"))
                    .ok_or_else(|| CliError::input("sample table needs a 'value' column"))?;
                Ok(Function::Sampled(Interpolant::new(&x, &f)?))
            }
        }
    }
}

/// A callable input.
#[derive(Debug, Clone)]
pub enum Function {
    Builtin(Builtin, f64),
    Sampled(Interpolant),
}

impl Function {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Function::Builtin(b, p) => b.eval(*p, x),
            Function::Sampled(i) => i.eval(x),
        }
    }
}

const FH_ORDER: usize = 3;

/// Floater–Hormann rational interpolant of order 3 in `x`; zero outside
/// the sampled range.
#[derive(Debug, Clone)]
pub struct Interpolant {
    x: Vec<f64>,
    f: Vec<f64>,
    w: Vec<f64>,
}

impl Interpolant {
    pub fn new(x: &[f64], f: &[f64]) -> Result<Self> {
        if x.len() != f.len() {
            return Err(CliError::input("x and value columns differ in length"));
        }
        if x.len() < 2 {
            return Err(CliError::input("need at least two samples"));
        }
        if let Some(k) = x.iter().chain(f).position(|v| !v.is_finite()) {
            return Err(CliError::input(format!("sample {} is not finite", k % x.len())));
        }
        if let Some(k) = x.windows(2).position(|w| w[0] >= w[1]) {
            return Err(CliError::input(format!("samples must be strictly increasing in x (rows {k} and {})", k + 1)));
        }
        let n = x.len();
        let d = FH_ORDER.min(n - 1);
        let w = (0..n)
            .map(|k| {
                let lo = k.saturating_sub(d);
                let hi = k.min(n - 1 - d);
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                let sum: f64 = (lo..=hi)
                    .map(|i| (i..=i + d).filter(|&j| j != k).map(|j| 1.0 / (x[k] - x[j]).abs()).product::<f64>())
                    .sum();
                sign * sum
            })
            .collect();
        Ok(Self { x: x.to_vec(), f: f.to_vec(), w })
    }

    pub fn eval(&self, x: f64) -> f64 {
        if x < self.x[0] || x > self.x[self.x.len() - 1] {
            return 0.0;
        }
        let (mut num, mut den) = (0.0, 0.0);
        for k in 0..self.x.len() {
            let dt = x - self.x[k];
            if dt == 0.0 {
                return self.f[k];
            }
            let c = self.w[k] / dt;
            num += c * self.f[k];
            den += c;
        }
        num / den
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_builtins() {
        assert_eq!("sech".parse::<FunctionSpec>().unwrap(), FunctionSpec::Builtin { kind: Builtin::Sech, param: 1.0 });
        assert_eq!(
            "gaussian:2.5".parse::<FunctionSpec>().unwrap(),
            FunctionSpec::Builtin { kind: Builtin::Gaussian, param: 2.5 }
        );
        assert_eq!(
            "runge_tanh".parse::<FunctionSpec>().unwrap(),
            FunctionSpec::Builtin { kind: Builtin::RungeTanh, param: 25.0 }
        );
        assert_eq!("file:a.csv".parse::<FunctionSpec>().unwrap(), FunctionSpec::Samples("a.csv".into()));
        for bad in ["cosh", "sech:abc", "bump:-1", "file:", "gaussian:0"] {
            assert!(bad.parse::<FunctionSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn builtin_values() {
        assert_eq!(Builtin::Gaussian.eval(1.0, 0.0), 1.0);
        assert_eq!(Builtin::Bump.eval(1.0, 1.0), 0.0);
        assert!((Builtin::Bump.eval(1.0, 0.0) - (-1.0f64).exp()).abs() < 1e-16);
        assert_eq!(Builtin::SechTanh.eval(1.0, 0.0), 0.0);
        for x in [-3.0, 0.0, 0.7, 40.0] {
            let want = 1.0 / f64::cosh(x);
            assert!((Builtin::Sech.eval(1.0, x) - want).abs() <= 1e-13 * want);
            assert!((Builtin::Sech.eval(0.5, x) - want.sqrt()).abs() <= 1e-13 * want.sqrt());
        }
        assert!((Builtin::RungeTanh.eval(25.0, 0.0) - 1.0).abs() < 1e-16);
    }

    #[test]
    fn interpolant_reproduces_cubics() {
        // order-3 Floater–Hormann is exact for cubic polynomials
        let x: Vec<f64> = (0..41).map(|k| -4.0 + 0.2 * k as f64 + 0.03 * (k as f64).sin()).collect();
        let p = |t: f64| 0.3 - t + 2.0 * t * t - 0.7 * t * t * t;
        let f: Vec<f64> = x.iter().map(|&v| p(v)).collect();
        let it = Interpolant::new(&x, &f).unwrap();
        for k in 0..97 {
            let v = -3.95 + 0.082 * k as f64;
            assert!((it.eval(v) - p(v)).abs() < 1e-11 * p(v).abs().max(1.0), "x={v}");
        }
        assert_eq!(it.eval(-5.0), 0.0);
        assert_eq!(it.eval(x[7]), f[7]);
    }

    #[test]
    fn interpolant_converges_for_smooth_data() {
        let g = |x: f64| 1.0 / x.cosh();
        let x: Vec<f64> = (0..401).map(|k| -15.0 + 0.075 * k as f64).collect();
        let f: Vec<f64> = x.iter().map(|&v| g(v)).collect();
        let it = Interpolant::new(&x, &f).unwrap();
        for k in 0..100 {
            let v = -14.0 + 0.2817 * k as f64;
            assert!((it.eval(v) - g(v)).abs() < 1e-7, "x={v}");
        }
    }

    #[test]
    fn interpolant_validates() {
        assert!(Interpolant::new(&[0.0, 0.0], &[1.0, 2.0]).is_err());
        assert!(Interpolant::new(&[1.0, 0.0], &[1.0, 2.0]).is_err());
        assert!(Interpolant::new(&[0.0], &[1.0]).is_err());
        assert!(Interpolant::new(&[0.0, 1.0], &[1.0, f64::NAN]).is_err());
    }
}
