//! Run configuration: defaults, optional flat key=value config file, and
//! command-line flags, merged in that order (flags win).

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use maj_confine::{Error as CoreError, Grid, PotentialParams};

/// Which solver(s) a command should exercise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Analytic,
    Fd,
    Shooting,
    All,
}

impl Method {
    /// Concrete solvers behind the selection, in canonical output order.
    pub fn members(self) -> &'static [Method] {
        match self {
            Method::Analytic => &[Method::Analytic],
            Method::Fd => &[Method::Fd],
            Method::Shooting => &[Method::Shooting],
            Method::All => &[Method::Analytic, Method::Fd, Method::Shooting],
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Analytic => "analytic",
            Method::Fd => "fd",
            Method::Shooting => "shooting",
            Method::All => "all",
        }
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "analytic" => Ok(Method::Analytic),
            "fd" => Ok(Method::Fd),
            "shooting" => Ok(Method::Shooting),
            "all" => Ok(Method::All),
            other => Err(format!(
                "unknown method '{other}' (expected analytic, fd, shooting, or all)"
            )),
        }
    }
}

/// Output encoding for tabular commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format '{other}' (expected csv or json)")),
        }
    }
}

/// A grid request in `min:max:points` form, kept symbolic until a command
/// materializes it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl GridSpec {
    pub fn to_grid(self) -> Result<Grid, CoreError> {
        Grid::new(self.min, self.max, self.points)
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("grid '{s}' must have the form min:max:points"));
        }
        let min: f64 = parts[0]
            .parse()
            .map_err(|_| format!("grid minimum '{}' is not a number", parts[0]))?;
        let max: f64 = parts[1]
            .parse()
            .map_err(|_| format!("grid maximum '{}' is not a number", parts[1]))?;
        let points: usize = parts[2]
            .parse()
            .map_err(|_| format!("grid point count '{}' is not a positive integer", parts[2]))?;
        Ok(GridSpec { min, max, points })
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}",
            maj_confine::format::g12(self.min),
            maj_confine::format::g12(self.max),
            self.points
        )
    }
}

/// Fully resolved configuration shared by every subcommand.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub m: f64,
    pub b: f64,
    pub n_max: usize,
    pub method: Method,
    pub grid: Option<GridSpec>,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub tol: Option<f64>,
    pub allow_narrow_grid: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            m: 0.0,
            b: 1.0,
            n_max: 6,
            method: Method::All,
            grid: None,
            format: OutputFormat::Csv,
            out: None,
            tol: None,
            allow_narrow_grid: false,
        }
    }
}

impl RunConfig {
    /// Validated physical parameters; slope and mass problems are
    /// configuration errors here, not runtime failures.
    pub fn params(&self) -> Result<PotentialParams, String> {
        PotentialParams::new(self.m, self.b).map_err(|e| e.to_string())
    }
}

/// Unresolved option set, as read from a config file or flags; `None`
/// means "not specified here".
#[derive(Debug, Clone, Default)]
pub struct PartialConfig {
    pub m: Option<f64>,
    pub b: Option<f64>,
    pub n_max: Option<usize>,
    pub method: Option<Method>,
    pub grid: Option<GridSpec>,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
    pub tol: Option<f64>,
    pub allow_narrow_grid: Option<bool>,
}

impl PartialConfig {
    /// Overlays `self` on top of `base` (fields set here win).
    fn apply(&self, base: &mut RunConfig) {
        if let Some(m) = self.m {
            base.m = m;
        }
        if let Some(b) = self.b {
            base.b = b;
        }
        if let Some(n_max) = self.n_max {
            base.n_max = n_max;
        }
        if let Some(method) = self.method {
            base.method = method;
        }
        if let Some(grid) = self.grid {
            base.grid = Some(grid);
        }
        if let Some(format) = self.format {
            base.format = format;
        }
        if let Some(out) = &self.out {
            base.out = Some(out.clone());
        }
        if let Some(tol) = self.tol {
            base.tol = Some(tol);
        }
        if let Some(allow) = self.allow_narrow_grid {
            base.allow_narrow_grid = allow;
        }
    }
}

/// Parses a flat `key = value` file (one pair per line, `#` comments).
pub fn parse_config_file(path: &Path) -> Result<PartialConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
    parse_config_text(&text).map_err(|e| format!("config file {}: {e}", path.display()))
}

fn parse_config_text(text: &str) -> Result<PartialConfig, String> {
    let mut out = PartialConfig::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key = value", lineno + 1))?;
        let key = key.trim();
        let value = value.trim();
        let fail = |what: &str| format!("line {}: {what}", lineno + 1);
        match key {
            "m" => out.m = Some(value.parse().map_err(|_| fail("m is not a number"))?),
            "b" => out.b = Some(value.parse().map_err(|_| fail("b is not a number"))?),
            "n_max" => {
                out.n_max = Some(value.parse().map_err(|_| fail("n_max is not an integer"))?)
            }
            "method" => out.method = Some(value.parse().map_err(|e: String| fail(&e))?),
            "grid" => out.grid = Some(value.parse().map_err(|e: String| fail(&e))?),
            "format" => out.format = Some(value.parse().map_err(|e: String| fail(&e))?),
            "out" => out.out = Some(PathBuf::from(value)),
            "tol" => out.tol = Some(value.parse().map_err(|_| fail("tol is not a number"))?),
            "allow_narrow_grid" => {
                out.allow_narrow_grid =
                    Some(value.parse().map_err(|_| fail("allow_narrow_grid is not a bool"))?)
            }
            other => return Err(fail(&format!("unknown key '{other}'"))),
        }
    }
    Ok(out)
}

/// Merges defaults, then the optional config file, then the flag set.
pub fn resolve(file: Option<&Path>, flags: &PartialConfig) -> Result<RunConfig, String> {
    let mut config = RunConfig::default();
    if let Some(path) = file {
        parse_config_file(path)?.apply(&mut config);
    }
    flags.apply(&mut config);
    if !(config.b > 0.0) || !config.b.is_finite() {
        return Err(format!(
            "b must be positive and finite (got {})",
            config.b
        ));
    }
    if !config.m.is_finite() {
        return Err(format!("m must be finite (got {})", config.m));
    }
    if let Some(tol) = config.tol {
        if !(tol >= 0.0) || !tol.is_finite() {
            return Err(format!("tol must be non-negative and finite (got {tol})"));
        }
    }
    Ok(config)
}
