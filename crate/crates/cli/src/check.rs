//! Independent re-verification of the certificates in an output document.
//!
//! The checker reads rationals straight from the JSON and recomputes every
//! sum with `num::BigRational`; it shares no arithmetic with the library.

use anyhow::{anyhow, bail, Context, Result};
use itertools::Itertools;
use num::{BigInt, BigRational, Signed, Zero};
use serde::Serialize;
use serde_json::Value;

type Q = BigRational;

#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub item: String,
    pub ok: bool,
    pub detail: String,
}

fn q(v: &Value) -> Result<Q> {
    let int = |s: &Value| -> Result<BigInt> {
        match s {
            Value::String(s) => s.parse().with_context(|| format!("bad integer {s:?}")),
            Value::Number(n) => n
                .to_string()
                .parse()
                .with_context(|| format!("bad integer {n}")),
            other => bail!("expected an integer, found {other}"),
        }
    };
    match v {
        Value::Object(m) => {
            let num = int(m
                .get("num")
                .ok_or_else(|| anyhow!("rational without num"))?)?;
            let den = m
                .get("den")
                .map(int)
                .transpose()?
                .unwrap_or_else(|| BigInt::from(1));
            if den.is_zero() {
                bail!("zero denominator");
            }
            Ok(Q::new(num, den))
        }
        other => Ok(Q::from_integer(int(other)?)),
    }
}

fn qvec(v: &Value) -> Result<Vec<Q>> {
    v.as_array()
        .ok_or_else(|| anyhow!("expected a vector"))?
        .iter()
        .map(q)
        .collect()
}

fn qvecs(v: &Value) -> Result<Vec<Vec<Q>>> {
    v.as_array()
        .ok_or_else(|| anyhow!("expected a list of vectors"))?
        .iter()
        .map(qvec)
        .collect()
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn combination(coeffs: &[Q], vecs: &[Vec<Q>], dim: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); dim];
    for (c, v) in coeffs.iter().zip(vecs) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| anyhow!("missing field {key:?}"))
}

/// `Σ aᵢ ξᵢ = 0`, `Σ aᵢ = 1`, `aᵢ > 0`, optionally with each `ξᵢ` a listed weight.
fn check_realization(terms: &Value, weights: Option<&[Vec<Q>]>) -> Result<String> {
    let terms = terms
        .as_array()
        .ok_or_else(|| anyhow!("realization is not a list"))?;
    let mut coeffs = Vec::new();
    let mut pts = Vec::new();
    for t in terms {
        coeffs.push(q(field(t, "coeff")?)?);
        pts.push(qvec(field(t, "weight")?)?);
    }
    let dim = pts.first().map_or(0, |p| p.len());
    if coeffs.is_empty() || coeffs.iter().any(|c| !c.is_positive()) {
        bail!("coefficients must be positive");
    }
    if coeffs.iter().sum::<Q>() != Q::from_integer(1.into()) {
        bail!("coefficients do not sum to 1");
    }
    if combination(&coeffs, &pts, dim).iter().any(|x| !x.is_zero()) {
        bail!("combination is not zero");
    }
    if let Some(ws) = weights {
        if pts.iter().any(|p| !ws.contains(p)) {
            bail!("a term is not a weight");
        }
    }
    Ok(format!("zero combination of {} weights", pts.len()))
}

/// Every subset of `rank − 1` weights (all weights if fewer) is separated
/// from `θ` by one of the listed functionals.
fn check_off_walls(
    weights: &[Vec<Q>],
    rank: usize,
    theta: &[Q],
    seps: &[Vec<Q>],
) -> Result<String> {
    if theta.iter().all(|x| x.is_zero()) {
        bail!("θ = 0 lies on every wall");
    }
    let useful: Vec<&Vec<Q>> = seps
        .iter()
        .filter(|f| dot(f, theta).is_negative())
        .collect();
    let size = rank.saturating_sub(1).min(weights.len());
    let mut count = 0usize;
    for s in (0..weights.len()).combinations(size) {
        count += 1;
        let ok = useful
            .iter()
            .any(|f| s.iter().all(|&i| !dot(f, &weights[i]).is_negative()));
        if !ok {
            bail!("no separator for the wall over weights {s:?}");
        }
    }
    Ok(format!(
        "θ separated from all {count} maximal weight subsets"
    ))
}

/// A witness of Weyl-genericity: `θ ∈ Σ`, `θ` Weyl-invariant, `θ` off every wall.
fn check_witness(c: &Value) -> Result<String> {
    let weights = qvecs(field(c, "weights")?)?;
    let rank = field(c, "rank")?
        .as_u64()
        .ok_or_else(|| anyhow!("rank is not an integer"))? as usize;
    let theta = qvec(field(c, "theta")?)?;
    let dim = theta.len();
    let coeffs = qvec(field(c, "sigma_coeffs")?)?;
    if coeffs.len() != weights.len() || coeffs.iter().any(|x| x.is_negative()) {
        bail!("θ ∈ Σ coefficients malformed or negative");
    }
    if combination(&coeffs, &weights, dim) != theta {
        bail!("θ is not the stated combination of weights");
    }
    let inv = field(c, "invariance")?;
    if let Some(h) = inv.get("zero_block") {
        let h = h
            .as_u64()
            .ok_or_else(|| anyhow!("zero_block is not an integer"))? as usize;
        if theta.iter().take(h).any(|x| !x.is_zero()) {
            bail!("θ has a nonzero semisimple part");
        }
    } else if let Some(gens) = inv.get("fixed_by") {
        for g in gens
            .as_array()
            .ok_or_else(|| anyhow!("fixed_by is not a list"))?
        {
            let rows = qvecs(g)?;
            let image: Vec<Q> = rows.iter().map(|r| dot(r, &theta)).collect();
            if image != theta {
                bail!("θ is moved by a Weyl generator");
            }
        }
    } else {
        bail!("unknown invariance certificate");
    }
    let seps = qvecs(field(c, "separators")?)?;
    check_off_walls(&weights, rank, &theta, &seps)
}

/// The sample point of every cell lies in its wall.
fn check_covering(report: &Value) -> Result<String> {
    let walls = field(report, "walls")?
        .as_array()
        .ok_or_else(|| anyhow!("walls is not a list"))?;
    let gens: Vec<Vec<Vec<Q>>> = walls
        .iter()
        .map(|w| qvecs(field(field(w, "cone")?, "generators")?))
        .collect::<Result<_>>()?;
    let cells = field(report, "covering")?
        .as_array()
        .ok_or_else(|| anyhow!("covering is not a list"))?;
    for cell in cells {
        let sample = qvec(field(cell, "sample")?)?;
        let wi = field(cell, "wall")?
            .as_u64()
            .ok_or_else(|| anyhow!("wall index"))? as usize;
        let g = gens
            .get(wi)
            .ok_or_else(|| anyhow!("wall index out of range"))?;
        let coeffs = qvec(field(cell, "coeffs")?)?;
        if coeffs.len() != g.len() || coeffs.iter().any(|x| x.is_negative()) {
            bail!("cell coefficients malformed or negative");
        }
        if combination(&coeffs, g, sample.len()) != sample {
            bail!("cell sample is not in its wall");
        }
    }
    Ok(format!("{} cell samples lie in their walls", cells.len()))
}

fn check_wall_certificate(
    c: &Value,
    weights: &[Vec<Q>],
    rank: usize,
    theta: &[Q],
) -> Result<String> {
    if let Some(on) = c.get("OnWall") {
        let subset: Vec<usize> = serde_json::from_value(field(on, "subset")?.clone())?;
        let coeffs = qvec(field(on, "coeffs")?)?;
        if subset.len() >= rank
            || coeffs.len() != subset.len()
            || coeffs.iter().any(|x| !x.is_positive())
        {
            bail!("wall subset too large or coefficients not positive");
        }
        let pts: Vec<Vec<Q>> = subset
            .iter()
            .map(|&i| weights.get(i).cloned().ok_or_else(|| anyhow!("index")))
            .collect::<Result<_>>()?;
        if combination(&coeffs, &pts, theta.len()) != theta {
            bail!("θ is not the stated combination");
        }
        Ok(format!("θ lies in the cone over {} weights", subset.len()))
    } else if let Some(off) = c.get("OffWalls") {
        let seps: Vec<Vec<Q>> = field(off, "separators")?
            .as_array()
            .ok_or_else(|| anyhow!("separators is not a list"))?
            .iter()
            .map(|p| qvec(&p[1]))
            .collect::<Result<_>>()?;
        check_off_walls(weights, rank, theta, &seps)
    } else {
        bail!("unknown wall certificate")
    }
}

fn run(items: &mut Vec<CheckItem>, name: String, f: impl FnOnce() -> Result<String>) {
    let (ok, detail) = match f() {
        Ok(d) => (true, d),
        Err(e) => (false, format!("{e:#}")),
    };
    items.push(CheckItem {
        item: name,
        ok,
        detail,
    });
}

/// Finds and re-verifies every certificate in `doc`.
pub fn check_document(doc: &Value) -> Result<Vec<CheckItem>> {
    let mut items = Vec::new();
    let weights = doc.get("weights").map(qvecs).transpose()?;
    if let Some(r) = doc.get("realization") {
        run(&mut items, "realization".into(), || {
            check_realization(r, weights.as_deref())
        });
    }
    if let Some(rows) = doc.get("rows").and_then(Value::as_array) {
        for row in rows {
            let name = format!(
                "{} ω{}",
                row["group"].as_str().unwrap_or("?"),
                row["weight"]
            );
            run(&mut items, name, || {
                let bound = field(row, "bound")?
                    .as_u64()
                    .ok_or_else(|| anyhow!("bound"))? as usize;
                let r = field(row, "bound_realization")?;
                if r.as_array().map_or(0, Vec::len) > bound + 1 {
                    bail!("realization longer than bound + 1");
                }
                check_realization(r, None)
            });
        }
    }
    if let Some(c) = doc.get("certificate") {
        run(&mut items, "genericity witness".into(), || check_witness(c));
    }
    if let Some(report) = doc.get("report") {
        if report.get("covering").is_some_and(|c| !c.is_null()) {
            run(&mut items, "covering cells".into(), || {
                check_covering(report)
            });
        }
    }
    if let Some(c) = doc.get("wall_certificate") {
        run(&mut items, "wall certificate".into(), || {
            let ws = weights
                .as_deref()
                .ok_or_else(|| anyhow!("document has no weights"))?;
            let rank = field(doc, "rank")?
                .as_u64()
                .ok_or_else(|| anyhow!("rank"))? as usize;
            check_wall_certificate(c, ws, rank, &qvec(field(doc, "theta")?)?)
        });
    }
    if items.is_empty() {
        bail!("document contains no certificates");
    }
    Ok(items)
}
