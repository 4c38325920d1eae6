//! Subcommand implementations. Every command renders its entire output as
//! a String so the tests can compare bytes; main() decides where it goes.
//!
//! Output is deterministic by construction: no timestamps, numbers always
//! formatted to 12 significant digits, fixed column and key order, and a
//! fixed header block echoing the resolved configuration.

use rayon::prelude::*;

use maj_confine::format::g12;
use maj_confine::validate::{run_all, ValidationConfig, ValidationReport};
use maj_confine::{
    default_grid, energy_level, find_eigen_shooting, spectrum_fd, EnergySign, Error as CoreError,
    Grid, Mode, PotentialParams,
};

use crate::config::{GridSpec, Method, OutputFormat, RunConfig};

/// Shooting bisection width: energies derive from beta through a square
/// root, so this keeps even the zero-mode energy accurate to ~1e-6 sqrt(b).
const SHOOTING_TOL: f64 = 1e-12;

/// Command failure split by exit code: usage/configuration problems exit 2,
/// runtime/validation failures exit 1.
#[derive(Debug)]
pub enum CmdError {
    Usage(String),
    Failure(String),
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Usage(_) => 2,
            CmdError::Failure(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CmdError::Usage(m) | CmdError::Failure(m) => m,
        }
    }
}

/// Errors that stem from the supplied grid or parameters are usage errors;
/// anything else is a runtime failure.
fn map_core_error(e: CoreError) -> CmdError {
    match e {
        CoreError::GridTooNarrow { .. }
        | CoreError::InvalidGrid { .. }
        | CoreError::ShootingDomainTooNarrow { .. }
        | CoreError::NonPositiveSlope { .. }
        | CoreError::NonFiniteMass { .. }
        | CoreError::NonPositiveTolerance { .. } => CmdError::Usage(e.to_string()),
        other => CmdError::Failure(other.to_string()),
    }
}

/// A rendered table: header key/value pairs in fixed order, column names,
/// and pre-formatted row cells.
struct Table {
    command: &'static str,
    header: Vec<(&'static str, String)>,
    columns: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => self.render_json(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# maj-confine {} {}\n",
            env!("CARGO_PKG_VERSION"),
            self.command
        ));
        out.push_str("# units: c = hbar = 1\n");
        for (key, value) in &self.header {
            out.push_str(&format!("# {key} = {value}\n"));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let mut header = serde_json::Map::new();
        header.insert("tool".into(), "maj-confine".into());
        header.insert("version".into(), env!("CARGO_PKG_VERSION").into());
        header.insert("command".into(), self.command.into());
        header.insert("units".into(), "c = hbar = 1".into());
        for (key, value) in &self.header {
            header.insert((*key).into(), value.clone().into());
        }
        let columns: Vec<serde_json::Value> =
            self.columns.iter().map(|c| (*c).into()).collect();
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                serde_json::Value::Array(row.iter().map(|cell| cell.clone().into()).collect())
            })
            .collect();
        let mut doc = serde_json::Map::new();
        doc.insert("header".into(), serde_json::Value::Object(header));
        doc.insert("columns".into(), serde_json::Value::Array(columns));
        doc.insert("rows".into(), serde_json::Value::Array(rows));
        let mut text = serde_json::to_string_pretty(&serde_json::Value::Object(doc))
            .expect("tables serialize to JSON");
        text.push('\n');
        text
    }
}

/// Shared header entries echoing the resolved configuration.
fn config_header(config: &RunConfig) -> Vec<(&'static str, String)> {
    vec![
        ("m", g12(config.m)),
        ("b", g12(config.b)),
        ("n_max", config.n_max.to_string()),
        ("method", config.method.as_str().to_string()),
        ("format", config.format.as_str().to_string()),
        (
            "grid",
            config
                .grid
                .map(|g| g.to_string())
                .unwrap_or_else(|| "default".to_string()),
        ),
        (
            "tol",
            config
                .tol
                .map(g12)
                .unwrap_or_else(|| "default".to_string()),
        ),
    ]
}

/// Materializes the configured grid, or the default one for these
/// parameters. `needs_support` marks commands that will discretize on it.
fn materialize_grid(
    spec: Option<GridSpec>,
    params: &PotentialParams,
    needs_support: bool,
    allow_narrow: bool,
) -> Result<Grid, CmdError> {
    let grid = match spec {
        Some(spec) => spec.to_grid().map_err(map_core_error)?,
        None => default_grid(params),
    };
    if needs_support && !allow_narrow {
        let half = 8.0 / params.slope().sqrt();
        let center = -params.origin_shift();
        if !grid.covers(center - half, center + half) {
            return Err(CmdError::Usage(format!(
                "grid [{}, {}] does not cover the support window [{}, {}]; \
                 widen it or pass --allow-narrow-grid where sampling outside \
                 the window is acceptable",
                g12(grid.x_min()),
                g12(grid.x_max()),
                g12(center - half),
                g12(center + half),
            )));
        }
    }
    Ok(grid)
}

/// Energy ladder E_0..=E_top for one method. FD and shooting both reduce to
/// the positive branch; the negative branch is its exact mirror.
fn energies_for(
    method: Method,
    params: &PotentialParams,
    top: usize,
    grid: &Grid,
) -> Result<Vec<f64>, CmdError> {
    let b = params.slope();
    match method {
        Method::Analytic => (0..=top)
            .map(|n| energy_level(n, b, EnergySign::Plus))
            .collect::<Result<_, _>>()
            .map_err(map_core_error),
        Method::Fd => spectrum_fd(params, grid, top + 1).map_err(map_core_error),
        Method::Shooting => (0..=top)
            .into_par_iter()
            .map(|n| {
                let found = find_eigen_shooting(params, n, SHOOTING_TOL)?;
                Ok((b * (found.beta_over_b() - 1.0).max(0.0)).sqrt())
            })
            .collect::<Result<_, CoreError>>()
            .map_err(map_core_error),
        Method::All => unreachable!("method selections are expanded by members()"),
    }
}

/// Energy table per method and level, with the spacing to the next level.
pub fn cmd_spectrum(config: &RunConfig) -> Result<String, CmdError> {
    let params = config.params().map_err(CmdError::Usage)?;
    let needs_fd = config.method.members().contains(&Method::Fd);
    // The FD discretization genuinely requires the support window, so the
    // narrow-grid override does not apply to it.
    let grid = materialize_grid(config.grid, &params, needs_fd, false)?;

    let mut rows = Vec::new();
    for &method in config.method.members() {
        // One extra level so the last row still has its spacing.
        let energies = energies_for(method, &params, config.n_max + 1, &grid)?;
        for n in 0..=config.n_max {
            rows.push(vec![
                method.as_str().to_string(),
                n.to_string(),
                g12(energies[n]),
                g12(-energies[n]),
                g12(energies[n + 1] - energies[n]),
            ]);
        }
    }

    let mut header = config_header(config);
    header.push((
        "tolerances",
        "analytic exact; fd 5e-4 abs energy on the default grid; \
         shooting 1e-6 on beta/b"
            .to_string(),
    ));
    let table = Table {
        command: "spectrum",
        header,
        columns: vec!["method", "n", "energy_plus", "energy_minus", "spacing_to_next"],
        rows,
    };
    Ok(table.render(config.format))
}

/// Sampled profile of one normalized stationary mode.
pub fn cmd_modes(config: &RunConfig, n: usize) -> Result<String, CmdError> {
    if n > config.n_max {
        return Err(CmdError::Usage(format!(
            "mode index {n} exceeds n_max {}",
            config.n_max
        )));
    }
    let params = config.params().map_err(CmdError::Usage)?;
    let grid = materialize_grid(config.grid, &params, true, config.allow_narrow_grid)?;
    let mode = Mode::normalized(params, n, EnergySign::Plus).map_err(map_core_error)?;

    let mut rows = Vec::with_capacity(grid.len());
    let mut psi_sq = Vec::with_capacity(grid.len());
    for i in 0..grid.len() {
        let x = grid.point(i);
        let phi = mode.phi(x);
        let chi_im = mode.chi_imag(x);
        let density = phi * phi + chi_im * chi_im;
        psi_sq.push(density);
        rows.push(vec![
            g12(x),
            g12(params.oscillator_coordinate(x)),
            g12(phi),
            // chi is purely imaginary for every level; the column exists to
            // make that explicit in the output.
            g12(0.0),
            g12(chi_im),
            g12(density),
        ]);
    }
    let norm_on_grid =
        maj_confine::integrate_samples(&psi_sq, grid.spacing()).map_err(map_core_error)?;

    let mut header = config_header(config);
    header.push(("n", n.to_string()));
    header.push(("energy", g12(mode.energy())));
    header.push(("norm_constant", g12(mode.norm_constant())));
    header.push(("norm_on_grid", g12(norm_on_grid)));
    let table = Table {
        command: "modes",
        header,
        columns: vec!["x", "r", "phi", "chi_real", "chi_imag", "psi_squared"],
        rows,
    };
    Ok(table.render(config.format))
}

/// Cross-validation battery. The returned flag is true when every check
/// passed; the rendered output is one JSON object per line regardless of
/// the format flag (the table for humans goes to stderr in main).
pub fn cmd_validate(config: &RunConfig) -> Result<(String, Vec<ValidationReport>), CmdError> {
    let params = config.params().map_err(CmdError::Usage)?;
    let grid = match config.grid {
        Some(spec) => Some(materialize_grid(Some(spec), &params, true, false)?),
        None => None,
    };
    let vconfig = ValidationConfig {
        n_max: config.n_max,
        tol_override: config.tol,
        grid,
    };
    let reports = run_all(&params, &vconfig).map_err(map_core_error)?;
    let mut out = String::new();
    for report in &reports {
        out.push_str(&report.to_json_line());
        out.push('\n');
    }
    Ok((out, reports))
}

/// Closed-form spectra across a list of slopes, demonstrating that
/// E_n / sqrt(b) is slope-independent. Slopes appear in the given order.
pub fn cmd_sweep(config: &RunConfig, b_values: &[f64]) -> Result<String, CmdError> {
    if b_values.is_empty() {
        return Err(CmdError::Usage(
            "sweep requires at least one slope via --b-values".to_string(),
        ));
    }
    let mut rows = Vec::new();
    for &b in b_values {
        if !(b > 0.0) || !b.is_finite() {
            return Err(CmdError::Usage(format!(
                "sweep slope values must be positive and finite (got {b})"
            )));
        }
        let sqrt_b = b.sqrt();
        for n in 0..=config.n_max {
            let e = energy_level(n, b, EnergySign::Plus).map_err(map_core_error)?;
            rows.push(vec![g12(b), n.to_string(), g12(e), g12(e / sqrt_b)]);
        }
    }

    let mut header = config_header(config);
    header.push((
        "b_values",
        b_values.iter().map(|b| g12(*b)).collect::<Vec<_>>().join(" "),
    ));
    header.push(("note", "energy_over_sqrt_b is slope-independent".to_string()));
    let table = Table {
        command: "sweep",
        header,
        columns: vec!["b", "n", "energy", "energy_over_sqrt_b"],
        rows,
    };
    Ok(table.render(config.format))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::RunConfig;

    fn base_config() -> RunConfig {
        RunConfig {
            n_max: 2,
            ..Default::default()
        }
    }

    #[test]
    fn spectrum_rows_cover_each_method_and_level() {
        let config = base_config();
        let text = cmd_spectrum(&config).unwrap();
        let data_lines: Vec<&str> = text
            .lines()
            .filter(|l| !l.starts_with('#') && !l.starts_with("method,"))
            .collect();
        // 3 methods x 3 levels.
        assert_eq!(data_lines.len(), 9);
        assert!(text.starts_with("# maj-confine "));
        assert!(text.contains("method,n,energy_plus,energy_minus,spacing_to_next"));
        assert!(data_lines[0].starts_with("analytic,0,0,0,1.41421356237"));
    }

    #[test]
    fn modes_respects_the_level_cap() {
        let config = base_config();
        let err = cmd_modes(&config, 3).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.message().contains("exceeds n_max"));
    }

    #[test]
    fn modes_zero_level_has_an_identically_zero_lower_component() {
        let config = base_config();
        let text = cmd_modes(&config, 0).unwrap();
        for line in text.lines().filter(|l| !l.starts_with('#') && !l.starts_with("x,")) {
            let cells: Vec<&str> = line.split(',').collect();
            assert_eq!(cells[3], "0", "chi_real must vanish");
            assert_eq!(cells[4], "0", "zero-mode chi_imag must vanish");
        }
    }

    #[test]
    fn narrow_grid_needs_the_override_flag() {
        let mut config = base_config();
        config.grid = Some("-3:3:501".parse().unwrap());
        let err = cmd_modes(&config, 0).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.message().contains("--allow-narrow-grid"));
        config.allow_narrow_grid = true;
        assert!(cmd_modes(&config, 0).is_ok());
    }

    #[test]
    fn spectrum_fd_rejects_narrow_grids_regardless_of_override() {
        let mut config = base_config();
        config.grid = Some("-3:3:501".parse().unwrap());
        config.allow_narrow_grid = true;
        let err = cmd_spectrum(&config).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn sweep_preserves_slope_order_and_rejects_empty_lists() {
        let config = base_config();
        let err = cmd_sweep(&config, &[]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let text = cmd_sweep(&config, &[2.0, 0.5]).unwrap();
        let first_data = text
            .lines()
            .find(|l| !l.starts_with('#') && !l.starts_with("b,"))
            .unwrap();
        assert!(first_data.starts_with("2,0,"), "got {first_data}");
    }

    #[test]
    fn validate_emits_one_json_line_per_report() {
        let mut config = base_config();
        config.n_max = 1;
        let (out, reports) = cmd_validate(&config).unwrap();
        assert_eq!(out.lines().count(), reports.len());
        for line in out.lines() {
            let parsed: serde_json::Value = line.parse().unwrap();
            assert!(parsed.get("check").is_some());
        }
    }

    #[test]
    fn json_format_wraps_rows_and_header() {
        let mut config = base_config();
        config.format = crate::config::OutputFormat::Json;
        config.method = crate::config::Method::Analytic;
        let text = cmd_spectrum(&config).unwrap();
        let doc: serde_json::Value = text.parse().unwrap();
        assert_eq!(doc["header"]["command"], "spectrum");
        assert_eq!(doc["columns"][0], "method");
        assert_eq!(doc["rows"].as_array().unwrap().len(), 3);
    }
}
