//! Parameter files.
//!
//! Numeric mode:   {"r": 2, "u": ["2", "3"], "omega": ["10", "45", "165"]}
//! Numeric + eta:  {"r": 2, "u": ["2", "3"], "omega": "eta"}
//! Symbolic mode:  {"r": 2, "symbolic": true, "omega": "eta"}
//!                 {"r": 2, "symbolic": true, "omega": [[{"exponents": [1, 0],
//!                  "coeff": "2"}, ...], ...]}
//!
//! All scalars are exact "p/q" strings; polynomials are lists of
//! {exponents, coeff} records.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;

use dbmw_core::{MultiPoly, ParameterSet, PolyRecord, Rational};

#[derive(Deserialize)]
struct ParamsFile {
    r: usize,
    #[serde(default)]
    symbolic: bool,
    #[serde(default)]
    u: Option<Vec<Rational>>,
    omega: OmegaSpec,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OmegaSpec {
    Named(String),
    Values(Vec<Rational>),
    Polys(Vec<Vec<PolyRecord>>),
}

pub enum LoadedParams {
    Numeric(ParameterSet<Rational>),
    Symbolic(ParameterSet<MultiPoly>),
}

impl LoadedParams {
    pub fn r(&self) -> usize {
        match self {
            LoadedParams::Numeric(p) => p.r(),
            LoadedParams::Symbolic(p) => p.r(),
        }
    }
}

pub fn load_params(path: &Path) -> Result<LoadedParams> {
    let bytes = std::fs::read(path)
        .with_context(|| format!("cannot read parameter file {}", path.display()))?;
    let file: ParamsFile = serde_json::from_slice(&bytes).map_err(|e| {
        anyhow!(
            "{}: line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        )
    })?;
    if file.r == 0 {
        bail!("{}: r must be at least 1", path.display());
    }

    if file.symbolic {
        if file.u.is_some() {
            bail!(
                "{}: symbolic parameter files must not list u values",
                path.display()
            );
        }
        let params = match file.omega {
            OmegaSpec::Named(name) if name == "eta" => ParameterSet::symbolic_eta(file.r),
            OmegaSpec::Named(other) => {
                bail!("{}: unknown omega value {other:?}", path.display())
            }
            OmegaSpec::Polys(polys) => {
                let omega: Vec<MultiPoly> = polys
                    .iter()
                    .map(|records| MultiPoly::from_records(file.r, records))
                    .collect::<dbmw_core::Result<_>>()?;
                ParameterSet::symbolic_with_omega(file.r, omega)?
            }
            OmegaSpec::Values(_) => bail!(
                "{}: symbolic parameter files need polynomial omegas or \"eta\"",
                path.display()
            ),
        };
        return Ok(LoadedParams::Symbolic(params));
    }

    let u = file
        .u
        .ok_or_else(|| anyhow!("{}: numeric parameter files need u values", path.display()))?;
    if u.len() != file.r {
        bail!(
            "{}: expected {} u values, found {}",
            path.display(),
            file.r,
            u.len()
        );
    }
    let params = match file.omega {
        OmegaSpec::Named(name) if name == "eta" => ParameterSet::u_admissible(u)?,
        OmegaSpec::Named(other) => bail!("{}: unknown omega value {other:?}", path.display()),
        OmegaSpec::Values(omega) => ParameterSet::new(u, omega)?,
        OmegaSpec::Polys(_) => bail!(
            "{}: numeric parameter files need \"p/q\" omegas",
            path.display()
        ),
    };
    Ok(LoadedParams::Numeric(params))
}

/// Parameter file content for a symbolic omega prefix (used by `admiss
/// solve --out`); files written here round-trip through `load_params`.
pub fn symbolic_params_json(r: usize, omega: &[MultiPoly]) -> serde_json::Value {
    serde_json::json!({
        "r": r,
        "symbolic": true,
        "omega": omega.iter().map(|p| p.to_records()).collect::<Vec<_>>(),
    })
}
