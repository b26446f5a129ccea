//! Torus GIT: the semistable cone, walls, unstable components, the
//! Weyl-invariant semistable cone and the Weyl-genericity decision.
//!
//! For a torus `T` acting with weights `ξ₁, …, ξ_N` in a character space of
//! rank `r`, `Σ = Cone(ξ)` and the union of walls `ω` is the union of the
//! cones over subsets of at most `r − 1` weights. A representation is
//! Weyl-generic when the Weyl-invariant part of `Σ` is not contained in `ω`.

use crate::cone::{caratheodory_reduce, cone_contains, Cone, Membership};
use crate::covering::{cone_covered_by_union, CoverOutcome, CoveredCell, DiscardedWall};
use crate::error::{dim_err, Error, Result};
use crate::linalg::{is_zero_vec, lin_comb, rank_of, zero_vec, RatMat, RatVec};
use crate::lp::{lp_feasible, LpOutcome};
use crate::rat::Rat;
use crate::rep::{rep_weight_set, summand_weights, GroupSpec, Representation, WeightSet};
use crate::roots::Family;
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A wall: the cone over a subset of weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wall {
    pub subset: Vec<usize>,
    pub cone: Cone,
}

/// All walls of a weight configuration, deduplicated by cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallSet {
    pub rank: usize,
    /// Number of subsets of size at most `rank − 1` before deduplication.
    pub candidates: usize,
    pub walls: Vec<Wall>,
}

/// `Σ = Cone(weights)`.
pub fn semistable_cone(ws: &WeightSet) -> Cone {
    Cone::new(ws.dim, ws.weights.iter().cloned()).expect("weights share the ambient dimension")
}

fn dedup_walls(
    ws: &[RatVec],
    dim: usize,
    subsets: impl Iterator<Item = Vec<usize>>,
) -> (usize, Vec<Wall>) {
    let mut seen: BTreeMap<Cone, Vec<usize>> = BTreeMap::new();
    let mut count = 0;
    for s in subsets {
        count += 1;
        let cone = Cone::new(dim, s.iter().map(|&i| ws[i].clone())).expect("weight dimensions");
        seen.entry(cone).or_insert(s);
    }
    let mut walls: Vec<Wall> = seen
        .into_iter()
        .map(|(cone, subset)| Wall { subset, cone })
        .collect();
    walls.sort_by(|a, b| {
        a.subset
            .len()
            .cmp(&b.subset.len())
            .then_with(|| a.subset.cmp(&b.subset))
    });
    (count, walls)
}

/// All cones over weight subsets of size at most `rank − 1`.
pub fn torus_walls(ws: &WeightSet, rank: usize) -> Result<WallSet> {
    if rank == 0 {
        return Err(Error::InvalidInput("torus rank must be positive".into()));
    }
    let n = ws.len();
    let max = (rank - 1).min(n);
    let subsets = (0..=max).flat_map(|s| (0..n).combinations(s));
    let (candidates, walls) = dedup_walls(&ws.weights, ws.dim, subsets);
    Ok(WallSet {
        rank,
        candidates,
        walls,
    })
}

/// Walls over subsets of the largest allowed size; every wall lies in one of them.
pub fn maximal_walls(ws: &WeightSet, rank: usize) -> Result<Vec<Wall>> {
    if rank == 0 {
        return Err(Error::InvalidInput("torus rank must be positive".into()));
    }
    let n = ws.len();
    let s = (rank - 1).min(n);
    Ok(dedup_walls(&ws.weights, ws.dim, (0..n).combinations(s)).1)
}

/// Evidence about whether `θ` lies on a wall.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WallCertificate {
    /// `θ = Σ coeffs[i] · weights[subset[i]]` with positive coefficients and
    /// linearly independent support.
    OnWall { subset: Vec<usize>, coeffs: RatVec },
    /// For each maximal wall (subset), a functional nonnegative on it and
    /// negative at `θ`. Every wall is contained in some maximal wall.
    OffWalls {
        separators: Vec<(Vec<usize>, RatVec)>,
    },
}

impl WallCertificate {
    pub fn on_wall(&self) -> bool {
        matches!(self, WallCertificate::OnWall { .. })
    }
}

/// Decides whether `θ` lies in some wall.
pub fn wall_membership(ws: &WeightSet, rank: usize, theta: &[Rat]) -> Result<WallCertificate> {
    if theta.len() != ws.dim {
        return dim_err(format!(
            "θ has {} coordinates, weights have {}",
            theta.len(),
            ws.dim
        ));
    }
    if is_zero_vec(theta) {
        return Ok(WallCertificate::OnWall {
            subset: vec![],
            coeffs: vec![],
        });
    }
    let walls = maximal_walls(ws, rank)?;
    let mut separators = Vec::with_capacity(walls.len());
    for w in &walls {
        let gens: Vec<RatVec> = w.subset.iter().map(|&i| ws.weights[i].clone()).collect();
        let m = RatMat::from_cols(&gens, ws.dim)?;
        match lp_feasible(&m, theta, &[])? {
            LpOutcome::Feasible(a) => {
                let a = caratheodory_reduce(&gens, theta, &a)?;
                let (subset, coeffs): (Vec<usize>, RatVec) = w
                    .subset
                    .iter()
                    .zip(a)
                    .filter(|(_, c)| c.is_positive())
                    .map(|(&i, c)| (i, c))
                    .unzip();
                return Ok(WallCertificate::OnWall { subset, coeffs });
            }
            LpOutcome::Infeasible(cert) => {
                separators.push((w.subset.clone(), cert.y.iter().map(|x| -x).collect()));
            }
        }
    }
    Ok(WallCertificate::OffWalls { separators })
}

fn in_cone_of(ws: &[RatVec], dim: usize, subset: &[usize], theta: &[Rat]) -> Result<bool> {
    if is_zero_vec(theta) {
        return Ok(true);
    }
    if subset.is_empty() {
        return Ok(false);
    }
    let gens: Vec<RatVec> = subset.iter().map(|&i| ws[i].clone()).collect();
    let m = RatMat::from_cols(&gens, dim)?;
    Ok(lp_feasible(&m, theta, &[])?.is_feasible())
}

/// Maximal index sets `S` with `θ ∉ Cone(ξ_S)`; each is the support of an
/// irreducible component of the unstable locus (points whose nonzero
/// coordinates lie in `S`). Sorted lexicographically.
pub fn unstable_components(ws: &WeightSet, theta: &[Rat]) -> Result<Vec<Vec<usize>>> {
    if theta.len() != ws.dim {
        return dim_err(format!(
            "θ has {} coordinates, weights have {}",
            theta.len(),
            ws.dim
        ));
    }
    if is_zero_vec(theta) {
        return Ok(vec![]);
    }
    let mut found: Vec<Vec<usize>> = Vec::new();
    // Depth-first over include/exclude decisions. Badness (θ ∉ cone) is
    // inherited by subsets, so once `chosen ∪ rest` is bad it is the unique
    // maximal completion of this branch.
    fn rec(
        ws: &WeightSet,
        theta: &[Rat],
        i: usize,
        chosen: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        let n = ws.len();
        let mut full = chosen.clone();
        full.extend(i..n);
        if !in_cone_of(&ws.weights, ws.dim, &full, theta)? {
            if !found.iter().any(|f| full.iter().all(|x| f.contains(x))) {
                found.retain(|f| !f.iter().all(|x| full.contains(x)));
                found.push(full);
            }
            return Ok(());
        }
        if i == n {
            return Ok(());
        }
        chosen.push(i);
        if !in_cone_of(&ws.weights, ws.dim, chosen, theta)? {
            rec(ws, theta, i + 1, chosen, found)?;
        }
        chosen.pop();
        rec(ws, theta, i + 1, chosen, found)
    }
    rec(ws, theta, 0, &mut Vec::new(), &mut found)?;
    // Keep only sets that are maximal under single-element extension.
    let mut out = Vec::new();
    for s in found {
        let mut maximal = true;
        for j in (0..ws.len()).filter(|j| !s.contains(j)) {
            let mut t = s.clone();
            t.push(j);
            if !in_cone_of(&ws.weights, ws.dim, &t, theta)? {
                maximal = false;
                break;
            }
        }
        if maximal {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

/// A zero-sum convex combination of a summand's `H`-weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroConvexWitness {
    pub torus_weight: RatVec,
    pub weights: Vec<RatVec>,
    pub coeffs: RatVec,
}

/// `Σ(V, T)^W = 0 × Cone(D-weights)`, with per-summand witnesses that
/// `(0, α)` lies in the cone of that summand's weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantCone {
    pub cone: Cone,
    pub witnesses: Vec<ZeroConvexWitness>,
}

/// The Weyl-invariant part of the semistable cone of `V`.
pub fn invariant_semistable_cone(v: &Representation) -> Result<InvariantCone> {
    let g = &v.group;
    let hdim = g.semisimple_ambient_dim();
    let mut gens = Vec::new();
    let mut witnesses = Vec::new();
    for s in v.distinct_summands() {
        let full = summand_weights(g, &s)?;
        let hw: Vec<RatVec> = full.iter().map(|w| w[..hdim].to_vec()).collect();
        let mut target = zero_vec(hdim);
        target.push(Rat::one());
        let cols: Vec<RatVec> = hw
            .iter()
            .map(|w| {
                let mut c = w.clone();
                c.push(Rat::one());
                c
            })
            .collect();
        let m = RatMat::from_cols(&cols, hdim + 1)?;
        let a = lp_feasible(&m, &target, &[])?.into_point().ok_or_else(|| {
            Error::Unsupported("irreducible summand without a zero-sum combination".into())
        })?;
        let a = crate::cone::zero_convex_reduce(&hw, &a)?;
        let (ws, cs): (Vec<RatVec>, RatVec) = hw
            .into_iter()
            .zip(a)
            .filter(|(_, c)| c.is_positive())
            .unzip();
        witnesses.push(ZeroConvexWitness {
            torus_weight: s.torus_weight.clone(),
            weights: ws,
            coeffs: cs,
        });
        let mut gvec = zero_vec(hdim);
        gvec.extend(s.torus_weight.iter().cloned());
        gens.push(gvec);
    }
    Ok(InvariantCone {
        cone: Cone::new(g.ambient_dim(), gens)?,
        witnesses,
    })
}

/// A witness of Weyl-genericity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericWitness {
    /// θ in full ambient coordinates (primitive integer).
    pub theta: RatVec,
    /// θ in the coordinates of the invariant subspace (the torus block for `H × D`).
    pub theta_invariant: RatVec,
    /// Coefficients of θ on the generators of the invariant cone.
    pub in_invariant_cone: RatVec,
    /// One separating functional per maximal wall (same order as `walls`).
    pub separators: Vec<RatVec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericityReport {
    pub generic: bool,
    pub rank: usize,
    pub invariant_cone: Cone,
    /// The maximal walls; every wall is contained in one of these.
    pub walls: Vec<Wall>,
    pub witness: Option<GenericWitness>,
    pub covering: Option<Vec<CoveredCell>>,
    pub discarded_walls: Vec<DiscardedWall>,
}

impl GenericityReport {
    /// Re-verifies the attached certificate exactly.
    pub fn verify(&self) -> bool {
        let cones: Vec<Cone> = self.walls.iter().map(|w| w.cone.clone()).collect();
        match (&self.witness, &self.covering) {
            (Some(w), None) => {
                self.generic
                    && crate::covering::verify_witness(
                        &self.invariant_cone,
                        &cones,
                        &crate::covering::UncoveredWitness {
                            theta: w.theta.clone(),
                            in_cone: w.in_invariant_cone.clone(),
                            separators: w.separators.clone(),
                        },
                    )
            }
            (None, Some(cells)) => !self.generic && crate::covering::verify_cells(&cones, cells),
            _ => false,
        }
    }
}

/// Decides Weyl-genericity for weights in `Q^dim` of a torus of rank
/// `rank`, given the Weyl-invariant semistable cone. `invariant_coords`
/// maps an ambient invariant vector to invariant coordinates.
pub fn decide_weyl_generic(
    ws: &WeightSet,
    rank: usize,
    invariant: &Cone,
    invariant_coords: &dyn Fn(&[Rat]) -> RatVec,
) -> Result<GenericityReport> {
    let walls = maximal_walls(ws, rank)?;
    let cones: Vec<Cone> = walls.iter().map(|w| w.cone.clone()).collect();
    let report = cone_covered_by_union(invariant, &cones)?;
    let (generic, witness, covering) = match report.outcome {
        CoverOutcome::Uncovered(w) => {
            let theta_invariant = invariant_coords(&w.theta);
            (
                true,
                Some(GenericWitness {
                    theta: w.theta,
                    theta_invariant,
                    in_invariant_cone: w.in_cone,
                    separators: w.separators,
                }),
                None,
            )
        }
        CoverOutcome::Covered { cells } => (false, None, Some(cells)),
    };
    Ok(GenericityReport {
        generic,
        rank,
        invariant_cone: invariant.clone(),
        walls,
        witness,
        covering,
        discarded_walls: report.discarded,
    })
}

/// Weyl-genericity of a representation of `H × D`.
pub fn is_weyl_generic(v: &Representation) -> Result<GenericityReport> {
    let ws = rep_weight_set(v)?;
    let inv = invariant_semistable_cone(v)?;
    let hdim = v.group.semisimple_ambient_dim();
    decide_weyl_generic(&ws, v.group.rank(), &inv.cone, &|x: &[Rat]| {
        x[hdim..].to_vec()
    })
}

/// Result of the quick necessary-condition screen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreenResult {
    pub pass: bool,
    pub reason: Option<String>,
}

/// Fails when a simple factor is not of type `A`, or when the torus
/// characters of `V` do not span the character space of `D`. Passing does
/// not imply genericity.
pub fn necessary_screen(v: &Representation) -> ScreenResult {
    if let Some(t) = v.group.factors.iter().find(|t| t.family != Family::A) {
        return ScreenResult {
            pass: false,
            reason: Some(format!("non-type-A factor ({t})")),
        };
    }
    let k = v.group.torus_rank;
    let tw = v.torus_weights();
    if rank_of(&tw, k) < k {
        return ScreenResult {
            pass: false,
            reason: Some(
                "torus weights do not span the character space of the central torus".into(),
            ),
        };
    }
    ScreenResult {
        pass: true,
        reason: None,
    }
}

/// Replication bound: for `r > dim G`, `V^{⊕r}` admits a character with a
/// Deligne–Mumford quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplicationBound {
    pub dim_g: usize,
    pub r: usize,
    pub note: String,
}

pub fn dm_replication_bound(g: &GroupSpec) -> ReplicationBound {
    let dim_g = g.dim();
    ReplicationBound {
        dim_g,
        r: dim_g + 1,
        note: "sufficient only; much smaller r often works (e.g. r = n for GL(n) acting on C^n)"
            .into(),
    }
}

/// The two conditions for `SL(2) × D` and the resulting verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sl2Classification {
    /// The D-weights span the character space of `D`.
    pub span_full: bool,
    /// The cone of all D-weights lies in the cone of D-weights paired with even symmetric powers.
    pub contained_in_even: bool,
    pub generic: bool,
}

/// Weyl-genericity for representations of `SL(2) × D` from the two
/// conditions on D-weights of odd and even symmetric powers.
pub fn sl2_torus_classify(v: &Representation) -> Result<Sl2Classification> {
    if v.group.factors.len() != 1 || v.group.factors[0] != crate::roots::LieType::a(1) {
        return Err(Error::InvalidInput(
            "sl2_torus_classify needs exactly one simple factor of type A1".into(),
        ));
    }
    let k = v.group.torus_rank;
    let fc = v.fundamental_coords();
    let mut all = Vec::new();
    let mut even = Vec::new();
    for (s, c) in v.summands.iter().zip(&fc) {
        let n = c[0][0].to_i64().expect("integral highest weight");
        all.push(s.torus_weight.clone());
        if n % 2 == 0 {
            even.push(s.torus_weight.clone());
        }
    }
    let span_full = rank_of(&all, k) == k;
    let even_cone = Cone::new(k, even)?;
    let mut contained = true;
    for a in &all {
        if !cone_contains(&even_cone, a)?.is_inside() {
            contained = false;
            break;
        }
    }
    Ok(Sl2Classification {
        span_full,
        contained_in_even: contained,
        generic: span_full && !contained,
    })
}

/// Checks a wall certificate against the weights.
pub fn verify_wall_certificate(ws: &WeightSet, theta: &[Rat], cert: &WallCertificate) -> bool {
    match cert {
        WallCertificate::OnWall { subset, coeffs } => {
            let gens: Vec<RatVec> = subset
                .iter()
                .filter_map(|&i| ws.weights.get(i).cloned())
                .collect();
            gens.len() == subset.len()
                && coeffs.iter().all(|c| !c.is_negative())
                && lin_comb(coeffs, &gens, ws.dim) == theta
        }
        WallCertificate::OffWalls { separators } => separators.iter().all(|(subset, f)| {
            let Ok(c) = Cone::new(
                ws.dim,
                subset.iter().filter_map(|&i| ws.weights.get(i).cloned()),
            ) else {
                return false;
            };
            Membership::Outside {
                functional: f.clone(),
            }
            .verify(&c, theta)
        }),
    }
}
