use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use workbench_core::quiver::ArmParams;
use workbench_core::reconstruction::DeformParams;
use workbench_core::{Budget, Field, Rational, DEFAULT_PRIME};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaSource {
    Zero,
    File(PathBuf),
    Random(u64),
}

impl FromStr for GammaSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "zero" {
            return Ok(GammaSource::Zero);
        }
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(GammaSource::File(PathBuf::from(path)));
        }
        let seed = s.strip_prefix("random:").or_else(|| s.strip_prefix("random(").and_then(|r| r.strip_suffix(')')));
        match seed.map(str::parse::<u64>) {
            Some(Ok(seed)) => Ok(GammaSource::Random(seed)),
            _ => Err(format!("expected zero, file:PATH or random:SEED, got `{s}`")),
        }
    }
}

impl std::fmt::Display for GammaSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GammaSource::Zero => write!(f, "zero"),
            GammaSource::File(p) => write!(f, "file:{}", p.display()),
            GammaSource::Random(s) => write!(f, "random:{s}"),
        }
    }
}

pub fn parse_field(s: &str) -> Result<Field, String> {
    if s == "q" || s == "Q" {
        return Ok(Field::Rationals);
    }
    let q = s.strip_prefix("fp:").ok_or_else(|| format!("expected q or fp:Q, got `{s}`"))?;
    let q: u64 = q.parse().map_err(|_| format!("bad modulus `{q}`"))?;
    Field::prime(q).map_err(|e| e.to_string())
}

pub fn field_label(field: Field) -> String {
    match field {
        Field::Rationals => "q".into(),
        Field::Prime(q) => format!("fp:{q}"),
    }
}

pub const DEFAULT_KERNEL_FIELD: Field = Field::Prime(DEFAULT_PRIME);

/// γ on disk: rationals as "n/d" strings.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GammaJson {
    pub gamma1: Vec<String>,
    pub gamma2: Vec<String>,
    pub gamma3: Vec<String>,
    pub a: String,
    pub b: String,
    #[serde(rename = "A")]
    pub big_a: String,
    #[serde(rename = "B")]
    pub big_b: String,
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    Rational::from_str(s.trim()).map_err(|_| CliError::Usage(format!("bad rational `{s}`")))
}

impl GammaJson {
    pub fn from_params(g: &DeformParams) -> GammaJson {
        let v = |xs: &[Rational]| xs.iter().map(|x| x.to_string()).collect();
        GammaJson {
            gamma1: v(&g.gamma1),
            gamma2: v(&g.gamma2),
            gamma3: v(&g.gamma3),
            a: g.a.to_string(),
            b: g.b.to_string(),
            big_a: g.big_a.to_string(),
            big_b: g.big_b.to_string(),
        }
    }

    pub fn to_params(&self) -> Result<DeformParams, CliError> {
        let v = |xs: &[String]| xs.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>, _>>();
        Ok(DeformParams {
            gamma1: v(&self.gamma1)?,
            gamma2: v(&self.gamma2)?,
            gamma3: v(&self.gamma3)?,
            a: parse_rational(&self.a)?,
            b: parse_rational(&self.b)?,
            big_a: parse_rational(&self.big_a)?,
            big_b: parse_rational(&self.big_b)?,
        })
    }
}

pub fn read_gamma_file(path: &Path) -> Result<DeformParams, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let json: GammaJson = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    json.to_params()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub p: ArmParams,
    pub gamma: GammaSource,
    pub field: Option<Field>,
    pub spair_cap: Option<u64>,
    pub deg_cap: Option<u32>,
    pub time_cap: Option<f64>,
    pub jobs: usize,
    pub json: Option<PathBuf>,
    pub height: u32,
    pub seed: u64,
    pub samples: usize,
    pub ideal: Option<PathBuf>,
    pub point: Option<String>,
}

impl RunConfig {
    pub fn field_or(&self, default: Field) -> Field {
        self.field.unwrap_or(default)
    }

    pub fn gamma_params(&self) -> Result<DeformParams, CliError> {
        let g = match &self.gamma {
            GammaSource::Zero => DeformParams::zero(&self.p),
            GammaSource::File(path) => read_gamma_file(path)?,
            GammaSource::Random(seed) => DeformParams::random_in_delta(&self.p, &mut rng(*seed), self.height),
        };
        g.check_shape(&self.p).map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(g)
    }

    pub fn deadline(&self) -> Deadline {
        Deadline { end: self.time_cap.map(|s| Instant::now() + Duration::from_secs_f64(s)) }
    }

    pub fn budget<'a>(&self, interrupt: &'a (dyn Fn() -> bool + Sync)) -> Budget<'a> {
        Budget { max_pairs: self.spair_cap, max_degree: self.deg_cap, interrupt: Some(interrupt) }
    }

    pub fn echo(&self, field: Option<Field>) -> serde_json::Value {
        serde_json::json!({
            "p": self.p.to_string(),
            "gamma": self.gamma.to_string(),
            "field": field.map(field_label),
            "spair_cap": self.spair_cap,
            "deg_cap": self.deg_cap,
            "time_cap": self.time_cap,
            "jobs": self.jobs,
            "height": self.height,
            "seed": self.seed,
            "samples": self.samples,
            "ideal": self.ideal.as_ref().map(|p| p.display().to_string()),
            "point": self.point,
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Deadline {
    end: Option<Instant>,
}

impl Deadline {
    pub fn expired(&self) -> bool {
        self.end.is_some_and(|e| Instant::now() >= e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use workbench_core::rat;

    #[test]
    fn gamma_sources() {
        assert_eq!("zero".parse::<GammaSource>().unwrap(), GammaSource::Zero);
        assert_eq!("random:7".parse::<GammaSource>().unwrap(), GammaSource::Random(7));
        assert_eq!("random(7)".parse::<GammaSource>().unwrap(), GammaSource::Random(7));
        assert_eq!("file:g.json".parse::<GammaSource>().unwrap(), GammaSource::File("g.json".into()));
        assert!("random:x".parse::<GammaSource>().is_err());
    }

    #[test]
    fn fields() {
        assert_eq!(parse_field("q").unwrap(), Field::Rationals);
        assert_eq!(parse_field("fp:65521").unwrap(), Field::Prime(65521));
        assert!(parse_field("fp:65520").is_err());
        assert!(parse_field("r").is_err());
    }

    #[test]
    fn gamma_json_round_trip() {
        let p = ArmParams::new(3, 2, 2).unwrap();
        let g = DeformParams::random_in_delta(&p, &mut rng(3), 10);
        let json = GammaJson::from_params(&g);
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.contains("\"A\":"));
        let back: GammaJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_params().unwrap(), g);
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
    }
}
