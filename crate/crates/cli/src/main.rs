//! `weylgen`: command-line front end for Weyl-genericity, torus GIT walls
//! and degeneracy computations. Reads and writes `weylgen/1` JSON documents.
//!
//! Exit codes: 0 success (or generic), 10 not generic, 2 invalid input,
//! 1 computation failure or rejected certificate.

mod check;
mod schema;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::io::Read;
use std::path::PathBuf;
use weylgen::construct::{gr_flop, min_t_search, quiver_genericity, quiver_rep};
use weylgen::degen::{classify_nondegenerate, degeneracy_of_rep, table1_verify, DegenOptions};
use weylgen::git::{
    dm_replication_bound, invariant_semistable_cone, is_weyl_generic, necessary_screen,
    semistable_cone, torus_walls, unstable_components, wall_membership, GenericityReport,
};
use weylgen::linalg::{unit_vec, RatMat};
use weylgen::lp::{lp_feasible, LpOutcome};
use weylgen::rep::{rep_weight_set, Representation, WeightSet};
use weylgen::{Rat, RatVec};

use schema::{envelope, to_value, RepDoc};

const EXIT_NOT_GENERIC: i32 = 10;
const EXIT_INVALID: i32 = 2;
const EXIT_FAILED: i32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "weylgen",
    version,
    about = "Weyl-genericity, torus GIT walls and degeneracy"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input document (reads standard input when omitted).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Output file (writes standard output when omitted).
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Search budget for degeneracy computations.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Largest t tried by `min-t`.
    #[arg(long, global = true, default_value_t = 16)]
    t_max: i64,
    /// Change-of-basis document for `quiver`.
    #[arg(long, global = true)]
    basis: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Weight set of a representation.
    Weights,
    /// Degeneracy of the semisimple part, with a minimal realization.
    Degen,
    /// Nondegeneracy classification for products of SL(n).
    Classify,
    /// Weyl-genericity with a witness or a covering.
    Generic,
    /// Semistable cone, walls, and wall slices of the invariant subspace.
    Walls,
    /// Least t making the sufficient-condition family generic.
    MinT,
    /// Torus data and genericity of a quiver representation.
    Quiver,
    /// Genericity of the flop representation X ⊗ C_a ⊕ X^∨ ⊗ C_{-a}.
    Grflop,
    /// Replication bound for a Deligne–Mumford quotient.
    BoundR,
    /// Re-verify the certificates in an output document.
    Check,
    /// Degeneracy bounds for minuscule representations.
    Table1,
}

/// A finished job: the document to write and the exit code.
struct Outcome {
    doc: Value,
    code: i32,
}

impl Outcome {
    fn ok(doc: Value) -> Outcome {
        Outcome { doc, code: 0 }
    }

    fn verdict(doc: Value, generic: bool) -> Outcome {
        let code = if generic { 0 } else { EXIT_NOT_GENERIC };
        Outcome { doc, code }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(out) => match write_output(&cli, &out.doc) {
            Ok(()) => out.code,
            Err(e) => {
                eprintln!("error: {e:#}");
                EXIT_FAILED
            }
        },
        Err(e) => {
            eprintln!("error: {e:#}");
            exit_code_for(&e)
        }
    };
    std::process::exit(code);
}

fn exit_code_for(e: &anyhow::Error) -> i32 {
    match e.downcast_ref::<weylgen::Error>() {
        Some(weylgen::Error::Unsupported(_)) | Some(weylgen::Error::Degenerate(_)) => EXIT_FAILED,
        _ => EXIT_INVALID,
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<Value> {
    let text = match path {
        Some(p) => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        }
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .context("reading standard input")?;
            s
        }
    };
    schema::parse_document(&text)
}

fn write_output(cli: &Cli, doc: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    match &cli.output {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    if let Command::Table1 = cli.command {
        let report = table1_verify()?;
        let code = if report.all_pass { 0 } else { EXIT_FAILED };
        return Ok(Outcome {
            doc: envelope("table1", to_value(&report)),
            code,
        });
    }
    let input = read_input(cli.input.as_ref())?;
    let rep =
        || -> Result<Representation> { schema::typed::<RepDoc>(input.clone())?.representation() };
    match cli.command {
        Command::Weights => cmd_weights(&rep()?),
        Command::Degen => cmd_degen(&rep()?, cli.budget),
        Command::Classify => Ok(Outcome::ok(envelope(
            "classify",
            to_value(&classify_nondegenerate(&rep()?)?),
        ))),
        Command::Generic => cmd_generic(&rep()?),
        Command::Walls => cmd_walls(&rep()?, input.get("theta")),
        Command::MinT => {
            let spec = schema::typed::<schema::SufficientDoc>(input)?.spec()?;
            let report = min_t_search(&spec, cli.t_max)?;
            let found = report.min_t.is_some();
            Ok(Outcome::verdict(
                envelope("min-t", to_value(&report)),
                found,
            ))
        }
        Command::Quiver => cmd_quiver(input, cli.basis.as_ref()),
        Command::Grflop => {
            let doc = schema::typed::<schema::FlopDoc>(input)?;
            let v = gr_flop(&doc.representation.representation()?, doc.a)?;
            let ws = rep_weight_set(&v)?;
            let report = is_weyl_generic(&v)?;
            let invariance = json!({ "zero_block": v.group.semisimple_ambient_dim() });
            let generic = report.generic;
            let mut payload = json!({ "representation": to_value(&v) });
            attach_genericity(&mut payload, &ws, &report, invariance)?;
            Ok(Outcome::verdict(envelope("grflop", payload), generic))
        }
        Command::BoundR => {
            let group = schema::typed::<RepDoc>(input)?.group()?;
            Ok(Outcome::ok(envelope(
                "bound-r",
                to_value(&dm_replication_bound(&group)),
            )))
        }
        Command::Check => {
            let items = check::check_document(&input)?;
            let all_ok = items.iter().all(|i| i.ok);
            let doc = envelope("check", json!({ "items": items, "all_ok": all_ok }));
            Ok(Outcome {
                doc,
                code: if all_ok { 0 } else { EXIT_FAILED },
            })
        }
        Command::Table1 => unreachable!("handled above"),
    }
}

fn cmd_weights(v: &Representation) -> Result<Outcome> {
    let ws = rep_weight_set(v)?;
    let dims = v.group.block_dims();
    let offsets = v.group.block_offsets();
    let mut names: Vec<String> = v.group.factors.iter().map(|t| t.to_string()).collect();
    names.push("torus".into());
    let mut blocks = Vec::new();
    let mut scaled: Vec<Vec<String>> = vec![Vec::new(); ws.len()];
    for (b, name) in names.iter().enumerate() {
        let range = offsets[b]..offsets[b] + dims[b];
        let all: Vec<Rat> = ws
            .weights
            .iter()
            .flat_map(|w| w[range.clone()].to_vec())
            .collect();
        let den = weylgen::rat::common_denominator(&all);
        for (w, out) in ws.weights.iter().zip(scaled.iter_mut()) {
            out.extend(
                w[range.clone()]
                    .iter()
                    .map(|x| (x.numer() * (&den / x.denom())).to_string()),
            );
        }
        blocks.push(json!({ "factor": name, "offset": offsets[b], "dim": dims[b], "denominator": den.to_string() }));
    }
    Ok(Outcome::ok(envelope(
        "weights",
        json!({
            "group": v.group.describe(),
            "count": ws.len(),
            "blocks": blocks,
            "weights": to_value(&ws.weights),
            "scaled_weights": scaled,
        }),
    )))
}

fn cmd_degen(v: &Representation, budget: Option<usize>) -> Result<Outcome> {
    let mut opts = DegenOptions::default();
    if let Some(b) = budget {
        opts.budget = b;
    }
    let h = v.semisimple_part();
    let ws = rep_weight_set(&h)?;
    let r = degeneracy_of_rep(&h, &opts)?;
    let rank = h.group.semisimple_rank();
    Ok(Outcome::ok(envelope(
        "degen",
        json!({
            "group": h.group.describe(),
            "rank": rank,
            "value": r.value,
            "exact": r.exact,
            "nondegenerate": if r.exact { Some(r.value == rank) } else { None },
            "realization": to_value(&r.realization),
            "transcript": to_value(&r.transcript),
            "weights": to_value(&ws.weights),
        }),
    )))
}

/// Adds the report, and for a witness an independently checkable certificate.
fn attach_genericity(
    payload: &mut Value,
    ws: &WeightSet,
    report: &GenericityReport,
    invariance: Value,
) -> Result<()> {
    payload["generic"] = json!(report.generic);
    payload["report"] = to_value(report);
    if let Some(w) = &report.witness {
        let m = RatMat::from_cols(&ws.weights, ws.dim)?;
        let coeffs: RatVec = match lp_feasible(&m, &w.theta, &[])? {
            LpOutcome::Feasible(x) => x,
            LpOutcome::Infeasible(_) => anyhow::bail!("witness θ is not in the semistable cone"),
        };
        payload["certificate"] = json!({
            "weights": to_value(&ws.weights),
            "rank": report.rank,
            "theta": to_value(&w.theta),
            "sigma_coeffs": to_value(&coeffs),
            "invariance": invariance,
            "separators": to_value(&w.separators),
        });
    }
    Ok(())
}

fn cmd_generic(v: &Representation) -> Result<Outcome> {
    let screen = necessary_screen(v);
    if !screen.pass {
        let doc = envelope(
            "generic",
            json!({ "generic": false, "screen": to_value(&screen) }),
        );
        return Ok(Outcome::verdict(doc, false));
    }
    let ws = rep_weight_set(v)?;
    let report = is_weyl_generic(v)?;
    let mut payload = json!({ "group": v.group.describe(), "screen": to_value(&screen) });
    attach_genericity(
        &mut payload,
        &ws,
        &report,
        json!({ "zero_block": v.group.semisimple_ambient_dim() }),
    )?;
    Ok(Outcome::verdict(
        envelope("generic", payload),
        report.generic,
    ))
}

fn cmd_walls(v: &Representation, theta: Option<&Value>) -> Result<Outcome> {
    let ws = rep_weight_set(v)?;
    let rank = v.group.rank();
    let walls = torus_walls(&ws, rank)?;
    // Slices of the walls with the invariant subspace 0 × Q^k.
    let hdim = v.group.semisimple_ambient_dim();
    let p = if hdim == 0 {
        RatMat::zeros(1, ws.dim)
    } else {
        RatMat::from_rows(
            &(0..hdim).map(|i| unit_vec(ws.dim, i)).collect::<Vec<_>>(),
            ws.dim,
        )?
    };
    let mut rays = std::collections::BTreeSet::new();
    for w in &walls.walls {
        let slice = weylgen::cone::cone_intersect_subspace(&w.cone, &p)?;
        rays.extend(slice.generators.iter().map(|g| g[hdim..].to_vec()));
    }
    let mut payload = json!({
        "group": v.group.describe(),
        "rank": rank,
        "weights": to_value(&ws.weights),
        "semistable_cone": to_value(&semistable_cone(&ws)),
        "invariant_cone": to_value(&invariant_semistable_cone(v)?.cone),
        "walls": to_value(&walls),
        "invariant_wall_rays": to_value(&rays),
    });
    if let Some(t) = theta {
        let theta: RatVec = serde_json::from_value(t.clone()).context("theta")?;
        payload["theta"] = to_value(&theta);
        payload["wall_certificate"] = to_value(&wall_membership(&ws, rank, &theta)?);
        payload["unstable_components"] = to_value(&unstable_components(&ws, &theta)?);
    }
    Ok(Outcome::ok(envelope("walls", payload)))
}

fn cmd_quiver(input: Value, basis: Option<&PathBuf>) -> Result<Outcome> {
    let spec = schema::quiver_spec(input)?;
    let basis = basis
        .map(|p| -> Result<Vec<RatVec>> {
            Ok(schema::typed::<schema::BasisDoc>(read_input(Some(p))?)?.basis)
        })
        .transpose()?;
    let q = quiver_rep(&spec, basis.as_deref())?;
    let report = quiver_genericity(&q)?;
    let slices = q.invariant_wall_rays()?;
    let generators: Vec<Vec<RatVec>> = q.weyl_generators.iter().map(|g| g.to_rows()).collect();
    let mut payload = json!({
        "rank": q.rank,
        "basis": to_value(&q.basis),
        "weights": to_value(&q.weights.weights),
        "entries": to_value(&q.entries),
        "invariant_basis": to_value(&q.invariant_basis),
        "invariant_semistable_cone": to_value(&q.invariant_semistable_cone()?),
        "invariant_wall_rays": to_value(&slices),
    });
    attach_genericity(
        &mut payload,
        &q.weights,
        &report,
        json!({ "fixed_by": to_value(&generators) }),
    )?;
    Ok(Outcome::verdict(
        envelope("quiver", payload),
        report.generic,
    ))
}
