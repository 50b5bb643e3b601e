//! JSON configs: `{"cone": {"dim": 2, "generators": [["1","0"],["0","1"]]}, "module": {...}}`.
//!
//! A bare cone object is accepted too. Modules are `{"kind":"cone","offsets":[["0","0"]]}`
//! or `{"kind":"opposite","inner":{...}}`; nested opposites collapse.

use std::path::Path;

use ccrop_core::cone::Cone;
use ccrop_core::lattice::Point;
use ccrop_core::module::ModuleExpr;
use ccrop_core::rational::{format_rational, parse_rational, RatVec};
use ccrop_core::Error;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeSpec {
    pub dim: usize,
    pub generators: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ModuleSpec {
    Cone { offsets: Vec<Vec<String>> },
    Opposite { inner: Box<ModuleSpec> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub cone: ConeSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleSpec>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AnyConfig {
    Full(Config),
    Bare(ConeSpec),
}

impl Config {
    pub fn parse(text: &str) -> Result<Config, serde_json::Error> {
        Ok(match serde_json::from_str::<AnyConfig>(text)? {
            AnyConfig::Full(c) => c,
            AnyConfig::Bare(cone) => Config { cone, module: None },
        })
    }

    pub fn load(path: &Path) -> CliResult<Config> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        })?;
        Config::parse(&text).map_err(|source| CliError::Json {
            path: path.to_owned(),
            source,
        })
    }

    pub fn build_cone(&self) -> CliResult<Cone> {
        let gens = self
            .cone
            .generators
            .iter()
            .map(|g| g.iter().map(|s| parse_rational(s)).collect::<Result<RatVec, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Cone::from_generators(self.cone.dim, &gens)?)
    }

    /// The configured module over the configured cone; `S` itself if absent.
    pub fn build(&self) -> CliResult<(Cone, ModuleExpr)> {
        let cone = self.build_cone()?;
        let module = match &self.module {
            None => ModuleExpr::semigroup(cone.clone()),
            Some(spec) => build_module(spec, &cone)?,
        };
        Ok((cone, module))
    }
}

fn parse_point(coords: &[String], dim: usize) -> CliResult<Point> {
    if coords.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: coords.len() }.into());
    }
    coords
        .iter()
        .map(|s| {
            let q = parse_rational(s)?;
            if !q.is_integer() {
                return Err(CliError::Input(format!("offset coordinate {s} is not an integer")));
            }
            i64::try_from(q.to_integer()).map_err(|_| CliError::Input(format!("offset coordinate {s} is out of range")))
        })
        .collect::<CliResult<Vec<i64>>>()
        .map(Point)
}

pub fn build_module(spec: &ModuleSpec, cone: &Cone) -> CliResult<ModuleExpr> {
    match spec {
        ModuleSpec::Cone { offsets } => {
            let pts = offsets
                .iter()
                .map(|o| parse_point(o, cone.dim()))
                .collect::<CliResult<Vec<_>>>()?;
            Ok(ModuleExpr::cone_module(cone.clone(), pts)?)
        }
        ModuleSpec::Opposite { inner } => Ok(build_module(inner, cone)?.opposite()),
    }
}

pub fn point_strings(p: &Point) -> Vec<String> {
    p.coords().iter().map(i64::to_string).collect()
}

pub fn rational_strings(v: &[ccrop_core::rational::Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

/// The canonical description of a module, after reduction and collapsing.
pub fn module_spec(m: &ModuleExpr) -> ModuleSpec {
    let inner = ModuleSpec::Cone {
        offsets: m.inner().offsets().iter().map(point_strings).collect(),
    };
    if m.is_opposite() {
        ModuleSpec::Opposite { inner: Box::new(inner) }
    } else {
        inner
    }
}

pub fn cone_spec(cone: &Cone) -> ConeSpec {
    ConeSpec {
        dim: cone.dim(),
        generators: cone.generators().iter().map(|g| rational_strings(g)).collect(),
    }
}
