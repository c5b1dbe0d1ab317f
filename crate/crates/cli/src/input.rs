//! Ideal files, parameter files and the `--d-poly` option.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use gradedcone_core::deformation::{normalize_d, ParameterPoint};
use gradedcone_core::formats::veronese_ambient;
use gradedcone_core::ideal::GradedIdeal;
use gradedcone_core::{parse_polynomial, Coeff, IdealError, Polynomial, RingRef, WeightedRing};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::CliError;

/// On-disk ideal: variable names, positive weights, generator strings.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub variables: Vec<String>,
    pub weights: Vec<u32>,
    pub generators: Vec<String>,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed ideal file: {e}")))
    }

    /// Builds the ring and the ideal, validating weights and homogeneity.
    pub fn build(&self) -> Result<GradedIdeal, CliError> {
        if self.variables.len() != self.weights.len() {
            return Err(CliError::Input(format!(
                "bad weights: {} variables but {} weights",
                self.variables.len(),
                self.weights.len()
            )));
        }
        if let Some(i) = self.weights.iter().position(|&w| w == 0) {
            return Err(CliError::Input(format!("bad weights: variable {} has weight 0", self.variables[i])));
        }
        let ring = WeightedRing::from_parts(self.variables.clone(), self.weights.clone())
            .map_err(|e| CliError::Input(format!("bad ring: {e}")))?;
        let mut gens = Vec::with_capacity(self.generators.len());
        for (i, g) in self.generators.iter().enumerate() {
            let p = parse_polynomial(&ring, g).map_err(|e| CliError::Input(format!("generator {}: {e}", i + 1)))?;
            gens.push(p);
        }
        GradedIdeal::new(&ring, gens).map_err(|e| match e {
            IdealError::Inhomogeneous { index, text, degrees } => CliError::Input(format!(
                "generator {} is not homogeneous: {text} has monomials of degrees {degrees:?}",
                index + 1
            )),
            other => CliError::Input(other.to_string()),
        })
    }
}

/// Reads and validates an ideal file.
pub fn load_ideal(path: &Path) -> Result<GradedIdeal, CliError> {
    IdealFile::parse(&read(path)?)?.build()
}

/// Reads `{"name": "value", ..}` with rational values such as `"-3/2"`.
pub fn load_parameters(path: &Path) -> Result<ParameterPoint, CliError> {
    let raw: BTreeMap<String, serde_json::Value> = serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Input(format!("malformed parameter file: {e}")))?;
    let mut pt = ParameterPoint::zero();
    for (name, value) in raw {
        let text = match value {
            serde_json::Value::String(s) => s,
            serde_json::Value::Number(n) => n.to_string(),
            other => return Err(CliError::Input(format!("parameter {name}: expected a number, got {other}"))),
        };
        let c: Coeff = text
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("parameter {name}: `{text}` is not a rational number")))?;
        pt.set(&name, c).map_err(|e| CliError::Input(e.to_string()))?;
    }
    Ok(pt)
}

/// Choice of the degree-7 entry `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DChoice {
    Zero,
    /// Seeded coefficients in `[-9, 9]`, no `x2^7`, rewritten into the
    /// normalized form expected by the degree-0 class.
    Sample,
    Path(PathBuf),
}

impl DChoice {
    pub fn parse(text: &str) -> Self {
        match text {
            "zero" => DChoice::Zero,
            "sample" => DChoice::Sample,
            path => DChoice::Path(PathBuf::from(path)),
        }
    }

    pub fn label(&self) -> String {
        match self {
            DChoice::Zero => "zero".into(),
            DChoice::Sample => "sample".into(),
            DChoice::Path(p) => p.display().to_string(),
        }
    }

    pub fn resolve(&self, seed: u64) -> Result<Polynomial, CliError> {
        let ring = veronese_ambient();
        let d = match self {
            DChoice::Zero => Polynomial::zero(&ring),
            DChoice::Sample => sample_d(&ring, seed),
            DChoice::Path(p) => parse_polynomial(&ring, read(p)?.trim())
                .map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?,
        };
        if !d.is_zero() && d.homogeneous_degree() != Some(7) {
            return Err(CliError::Input(format!("D must be homogeneous of degree 7, got {d}")));
        }
        Ok(d)
    }
}

fn sample_d(ring: &RingRef, seed: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = Polynomial::random_homogeneous(ring, 7, 9, &mut rng);
    let x2_7 = parse_polynomial(ring, "x2^7").expect("literal");
    let c = d.coefficient(x2_7.leading_monomial().expect("monomial"));
    normalize_d(&(&d - &x2_7.scale(&c)))
}
