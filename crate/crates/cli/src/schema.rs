//! Versioned JSON documents read and written by the CLI.
//!
//! Every document carries `"schema": "weylgen/1"`. Rationals are written as
//! `{"num": "...", "den": "..."}` with decimal strings; on input, integers
//! and `"p/q"` strings are accepted as well.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use weylgen::construct::{QuiverSpec, SufficientSpec};
use weylgen::rep::{GroupSpec, IrredSummand, Representation};
use weylgen::roots::LieType;
use weylgen::RatVec;

pub const SCHEMA: &str = "weylgen/1";

/// How highest weights are written in an input document.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coordinates {
    /// Coefficients on the fundamental weights.
    #[default]
    Fundamental,
    /// Bourbaki ambient coordinates.
    Ambient,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandDoc {
    pub highest_weights: Vec<RatVec>,
    #[serde(default)]
    pub torus_weight: RatVec,
}

/// `{"factors": [{"family": "A", "rank": 3}], "torus_rank": k, "summands": [...]}`.
#[derive(Clone, Debug, Deserialize)]
pub struct RepDoc {
    pub factors: Vec<LieType>,
    #[serde(default)]
    pub torus_rank: usize,
    #[serde(default)]
    pub summands: Vec<SummandDoc>,
    #[serde(default)]
    pub coordinates: Coordinates,
}

impl RepDoc {
    pub fn group(&self) -> Result<GroupSpec> {
        let factors = self
            .factors
            .iter()
            .map(|t| LieType::new(t.family, t.rank))
            .collect::<weylgen::Result<Vec<_>>>()?;
        Ok(GroupSpec::new(factors, self.torus_rank))
    }

    pub fn representation(&self) -> Result<Representation> {
        let group = self.group()?;
        let summands = self
            .summands
            .iter()
            .map(|s| summand(&group, s, self.coordinates))
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation::new(group, summands)?)
    }
}

fn summand(group: &GroupSpec, s: &SummandDoc, coords: Coordinates) -> Result<IrredSummand> {
    if s.highest_weights.len() != group.factors.len() {
        bail!(
            "summand has {} highest weights for {} simple factors",
            s.highest_weights.len(),
            group.factors.len()
        );
    }
    if s.torus_weight.len() != group.torus_rank {
        bail!(
            "torus weight has {} entries for torus rank {}",
            s.torus_weight.len(),
            group.torus_rank
        );
    }
    let highest_weights = match coords {
        Coordinates::Ambient => s.highest_weights.clone(),
        Coordinates::Fundamental => group
            .root_systems()
            .iter()
            .zip(&s.highest_weights)
            .map(|(rs, c)| {
                if c.len() != rs.rank() {
                    bail!(
                        "{} expects {} fundamental coordinates",
                        rs.lie_type,
                        rs.rank()
                    );
                }
                Ok(rs.from_fundamental_coords(c)?)
            })
            .collect::<Result<Vec<_>>>()?,
    };
    Ok(IrredSummand {
        highest_weights,
        torus_weight: s.torus_weight.clone(),
    })
}

/// Input of `min-t`: `X₊` over `H`, the D-weights `y` of `Y`, and the summands
/// `z` of `Z` over `H × D`.
#[derive(Clone, Debug, Deserialize)]
pub struct SufficientDoc {
    pub x_plus: RepDoc,
    pub torus_rank: usize,
    pub y: Vec<RatVec>,
    #[serde(default)]
    pub z: Vec<SummandDoc>,
    #[serde(default)]
    pub nu: Option<RatVec>,
}

impl SufficientDoc {
    pub fn spec(&self) -> Result<SufficientSpec> {
        let x_plus = self.x_plus.representation()?;
        if x_plus.group.torus_rank != 0 {
            bail!("x_plus must be a representation of the semisimple group (torus_rank 0)");
        }
        let g = GroupSpec::new(x_plus.group.factors.clone(), self.torus_rank);
        let z = self
            .z
            .iter()
            .map(|s| summand(&g, s, self.x_plus.coordinates))
            .collect::<Result<Vec<_>>>()?;
        Ok(SufficientSpec {
            x_plus,
            torus_rank: self.torus_rank,
            y: self.y.clone(),
            z,
            nu: self.nu.clone(),
        })
    }
}

/// Input of `grflop`: a representation `X` of `H` and the torus weight `a`.
#[derive(Clone, Debug, Deserialize)]
pub struct FlopDoc {
    pub representation: RepDoc,
    pub a: i64,
}

/// Optional change of basis for `quiver`: sum-zero vectors in the full
/// vertex coordinates.
#[derive(Clone, Debug, Deserialize)]
pub struct BasisDoc {
    pub basis: Vec<RatVec>,
}

/// Checks the version tag and returns the document body.
pub fn parse_document(text: &str) -> Result<Value> {
    let v: Value = serde_json::from_str(text).context("input is not valid JSON")?;
    match v.get("schema") {
        Some(Value::String(s)) if s == SCHEMA => Ok(v),
        Some(other) => bail!("unsupported schema {other}; expected \"{SCHEMA}\""),
        None => bail!("missing \"schema\": \"{SCHEMA}\""),
    }
}

/// Deserializes a typed document, ignoring the version tag.
pub fn typed<T: for<'de> Deserialize<'de>>(mut v: Value) -> Result<T> {
    if let Value::Object(m) = &mut v {
        m.remove("schema");
    }
    Ok(serde_json::from_value(v)?)
}

pub fn quiver_spec(v: Value) -> Result<QuiverSpec> {
    typed(v)
}

/// Wraps a payload as `{"schema": ..., "command": ..., ...payload}`.
pub fn envelope(command: &str, payload: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), SCHEMA.into());
    m.insert("command".into(), command.into());
    match payload {
        Value::Object(p) => m.extend(p),
        other => {
            m.insert("result".into(), other);
        }
    }
    Value::Object(m)
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}
