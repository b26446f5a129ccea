//! Builders: the sufficient-condition family `(X₊ ⊗ Y) ⊕ Z^{(t)}` with the
//! search for the least generic `t`, the Grassmannian-flop family, and torus
//! data of quiver representations.

use crate::cone::{cone_intersect_subspace, extreme_rays, Cone};
use crate::degen::{classify_nondegenerate, is_nondegenerate};
use crate::error::{dim_err, invalid, Error, Result};
use crate::git::{
    decide_weyl_generic, is_weyl_generic, maximal_walls, semistable_cone, GenericityReport,
};
use crate::linalg::{
    dot, is_zero_vec, kernel_basis, lin_comb, primitive_line, rank_of, solve, RatMat, RatVec,
};
use crate::lp::solve_inequalities;
use crate::rat::Rat;
use crate::rep::{dual_rep, rep_weight_set, GroupSpec, IrredSummand, Representation, WeightSet};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Data of the sufficient-condition family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SufficientSpec {
    /// A representation of the semisimple group `H` (torus rank 0).
    pub x_plus: Representation,
    pub torus_rank: usize,
    /// D-weights of `Y`.
    pub y: Vec<RatVec>,
    /// Summands of `Z` over `H × D`.
    pub z: Vec<IrredSummand>,
    pub nu: Option<RatVec>,
}

/// A spec whose hypotheses were checked, with `ν` filled in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidatedSpec {
    pub spec: SufficientSpec,
    pub nu: RatVec,
}

fn z_torus_weights(spec: &SufficientSpec) -> Vec<RatVec> {
    spec.z
        .iter()
        .map(|s| s.torus_weight.clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Checks every hypothesis, synthesizing `ν` by LP when it is absent.
pub fn validate_sufficient(spec: &SufficientSpec) -> Result<ValidatedSpec> {
    let k = spec.torus_rank;
    if spec.x_plus.group.torus_rank != 0 {
        return invalid("X_plus must be a representation of the semisimple group only");
    }
    if spec.y.iter().any(|a| a.len() != k) {
        return dim_err(format!("Y weights must have length {k}"));
    }
    if !is_nondegenerate(&spec.x_plus)? {
        return Err(Error::Hypothesis("X_plus is degenerate".into()));
    }
    if rank_of(&spec.y, k) != k {
        return Err(Error::Hypothesis(
            "the cone of Y-weights is not full-dimensional".into(),
        ));
    }
    let minus = z_torus_weights(spec);
    if minus.iter().any(|a| a.len() != k) {
        return dim_err(format!("Z torus weights must have length {k}"));
    }
    let nu = match &spec.nu {
        Some(nu) => {
            if nu.len() != k {
                return dim_err(format!("ν must have length {k}"));
            }
            if spec.y.iter().any(|a| dot(nu, a).is_negative()) {
                return Err(Error::Hypothesis("⟨ν, α⁺⟩ < 0 for some Y-weight".into()));
            }
            if minus.iter().any(|a| !dot(nu, a).is_negative()) {
                return Err(Error::Hypothesis(
                    "⟨ν, α⁻⟩ ≥ 0 for some D-weight of Z".into(),
                ));
            }
            nu.clone()
        }
        None => {
            let mut g = spec.y.clone();
            let mut h = vec![Rat::zero(); g.len()];
            for a in &minus {
                g.push(a.iter().map(|x| -x).collect());
                h.push(Rat::one());
            }
            solve_inequalities(&g, &h, k)?.ok_or_else(|| {
                Error::Hypothesis("no ν with ⟨ν, α⁺⟩ ≥ 0 and ⟨ν, α⁻⟩ < 0 exists".into())
            })?
        }
    };
    Ok(ValidatedSpec {
        spec: spec.clone(),
        nu,
    })
}

/// `(X₊ ⊗ Y) ⊕ Z^{(t)}`, after checking the hypotheses with [`validate_sufficient`].
pub fn build_sufficient(spec: &SufficientSpec, t: i64) -> Result<Representation> {
    validate_sufficient(spec)?;
    assemble_sufficient(spec, t)
}

fn assemble_sufficient(spec: &SufficientSpec, t: i64) -> Result<Representation> {
    if t <= 0 {
        return invalid("t must be positive");
    }
    let group = GroupSpec::new(spec.x_plus.group.factors.clone(), spec.torus_rank);
    let mut summands = Vec::new();
    for s in &spec.x_plus.summands {
        for a in &spec.y {
            summands.push(IrredSummand {
                highest_weights: s.highest_weights.clone(),
                torus_weight: a.clone(),
            });
        }
    }
    let tt = Rat::int(t);
    for s in &spec.z {
        summands.push(IrredSummand {
            highest_weights: s.highest_weights.clone(),
            torus_weight: s.torus_weight.iter().map(|x| x * &tt).collect(),
        });
    }
    Representation::new(group, summands)
}

/// One ray of an invariant wall slice, written as in the proof of the
/// sufficiency theorem, with its pairing against `ν`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewRay {
    pub wall: Vec<usize>,
    pub kernel_ray: RatVec,
    /// The D-part of the ray.
    pub ray: RatVec,
    pub nu_value: Rat,
}

/// The ν-certificate at a given `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuCertificate {
    pub t: i64,
    pub walls_checked: usize,
    /// Walls whose χ(T)-projection has full dimension (skipped by dimension).
    pub walls_full_projection: usize,
    pub rays: Vec<NewRay>,
    /// Every ray is zero or pairs negatively with `ν`.
    pub holds: bool,
    pub failure: Option<String>,
}

/// Checks that every invariant slice of a wall with χ(T)-projection of
/// dimension below `rank(H)` is generated by rays on which `ν` is negative
/// (or that vanish), using the kernel cone of the `T`-parts.
pub fn nu_certificate(v: &ValidatedSpec, t: i64) -> Result<NuCertificate> {
    let spec = &v.spec;
    let rep = assemble_sufficient(spec, t)?;
    let ws = rep_weight_set(&rep)?;
    let g = &rep.group;
    let hdim = g.semisimple_ambient_dim();
    let n = g.semisimple_rank();
    let k = spec.torus_rank;
    // Which weights come from X₊ ⊗ Y.
    let plus_rep = assemble_sufficient(
        &SufficientSpec {
            z: vec![],
            ..spec.clone()
        },
        1,
    )?;
    let plus: BTreeSet<RatVec> = rep_weight_set(&plus_rep)?.weights.into_iter().collect();
    let tt = Rat::int(t);
    let walls = maximal_walls(&ws, g.rank())?;
    let mut rays = Vec::new();
    let mut full = 0;
    let mut failure = None;
    for w in &walls {
        let xis: Vec<RatVec> = w
            .subset
            .iter()
            .map(|&i| ws.weights[i][..hdim].to_vec())
            .collect();
        if rank_of(&xis, hdim) >= n {
            full += 1;
            continue;
        }
        let m = RatMat::from_cols(&xis, hdim)?;
        for c in extreme_rays(&m)? {
            let is_plus: Vec<bool> = w
                .subset
                .iter()
                .map(|&i| plus.contains(&ws.weights[i]))
                .collect();
            let Some(jl) = (0..c.len()).find(|&j| !is_plus[j] && !c[j].is_zero()) else {
                failure = Some(format!(
                    "kernel ray of wall {:?} has no Z-coordinate",
                    w.subset
                ));
                continue;
            };
            // t⁻¹ Σ_I (c_i/c_jl) α_i⁺ + (α_jl⁻ + Σ_{j≠jl} (c_j/c_jl) α_j⁻); the
            // weights carry t·α⁻, so every term is (c_j / (t c_jl)) times a D-part.
            let mut ray = vec![Rat::zero(); k];
            for (j, &i) in w.subset.iter().enumerate() {
                let f = &c[j] / &(&c[jl] * &tt);
                for (r, a) in ray.iter_mut().zip(&ws.weights[i][hdim..]) {
                    *r += &f * a;
                }
            }
            let nu_value = dot(&v.nu, &ray);
            if !is_zero_vec(&ray) && !nu_value.is_negative() && failure.is_none() {
                failure = Some(format!("ν is not negative on a ray of wall {:?}", w.subset));
            }
            rays.push(NewRay {
                wall: w.subset.clone(),
                kernel_ray: c,
                ray,
                nu_value,
            });
        }
    }
    Ok(NuCertificate {
        t,
        walls_checked: walls.len(),
        walls_full_projection: full,
        rays,
        holds: failure.is_none(),
        failure,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinTReport {
    pub nu: RatVec,
    /// `(t, generic)` for every tested value, in test order.
    pub verdicts: Vec<(i64, bool)>,
    /// The least tested `t` found generic, if any.
    pub min_t: Option<i64>,
    pub certificate: Option<NuCertificate>,
    /// The direct decision and the ν-certificate agree at `min_t`.
    pub methods_agree: Option<bool>,
}

/// Finds the least `t ≤ t_max` for which `(X₊ ⊗ Y) ⊕ Z^{(t)}` is Weyl-generic:
/// doubling until a generic value, then bisection below it. All tested
/// verdicts are recorded; the result is the least tested generic value.
pub fn min_t_search(spec: &SufficientSpec, t_max: i64) -> Result<MinTReport> {
    if t_max < 1 {
        return invalid("t_max must be at least 1");
    }
    let v = validate_sufficient(spec)?;
    let mut verdicts: Vec<(i64, bool)> = Vec::new();
    let test = |t: i64, verdicts: &mut Vec<(i64, bool)>| -> Result<bool> {
        if let Some(&(_, g)) = verdicts.iter().find(|(s, _)| *s == t) {
            return Ok(g);
        }
        let g = is_weyl_generic(&assemble_sufficient(spec, t)?)?.generic;
        verdicts.push((t, g));
        Ok(g)
    };
    let mut lo = 0i64;
    let mut hi = None;
    let mut t = 1i64;
    loop {
        if test(t, &mut verdicts)? {
            hi = Some(t);
            break;
        }
        lo = t;
        if t == t_max {
            break;
        }
        t = (t * 2).min(t_max);
    }
    if let Some(mut h) = hi {
        while h - lo > 1 {
            let mid = lo + (h - lo) / 2;
            if test(mid, &mut verdicts)? {
                h = mid;
            } else {
                lo = mid;
            }
        }
        hi = Some(h);
    }
    let min_t = verdicts.iter().filter(|(_, g)| *g).map(|(t, _)| *t).min();
    debug_assert!(hi.is_none() || min_t <= hi);
    let certificate = min_t.map(|t| nu_certificate(&v, t)).transpose()?;
    let methods_agree = certificate.as_ref().map(|c| c.holds);
    Ok(MinTReport {
        nu: v.nu,
        verdicts,
        min_t,
        certificate,
        methods_agree,
    })
}

/// `(X ⊗ C_a) ⊕ (X^∨ ⊗ C_{−a})` over `H × G_m`, for nondegenerate `X`.
pub fn gr_flop(x: &Representation, a: i64) -> Result<Representation> {
    if a == 0 {
        return invalid("a must be nonzero");
    }
    let xh = x.semisimple_part();
    let c = classify_nondegenerate(&xh)?;
    if !c.nondegenerate {
        return Err(Error::Degenerate(format!(
            "X is degenerate: {}",
            c.notes.join("; ")
        )));
    }
    let dual = dual_rep(&xh)?;
    let group = GroupSpec::new(xh.group.factors.clone(), 1);
    let mut summands = Vec::new();
    for s in &xh.summands {
        summands.push(IrredSummand {
            highest_weights: s.highest_weights.clone(),
            torus_weight: vec![Rat::int(a)],
        });
    }
    for s in &dual.summands {
        summands.push(IrredSummand {
            highest_weights: s.highest_weights.clone(),
            torus_weight: vec![Rat::int(-a)],
        });
    }
    Representation::new(group, summands)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverVertex {
    pub id: String,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverArrow {
    pub src: String,
    pub dst: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub vertices: Vec<QuiverVertex>,
    pub arrows: Vec<QuiverArrow>,
}

/// Torus data of a quiver representation, in a basis of the character
/// lattice of `T = T'/G_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverData {
    pub spec: QuiverSpec,
    /// Basis characters as vectors in the full coordinates `ε_{v,i}`.
    pub basis: Vec<RatVec>,
    pub rank: usize,
    pub weights: WeightSet,
    /// `(arrow index, target index, source index)` for each matrix entry, with its weight.
    pub entries: Vec<((usize, usize, usize), RatVec)>,
    /// Coordinate transpositions generating `∏ S_{d_v}`, as matrices in the chosen basis.
    pub weyl_generators: Vec<RatMat>,
    /// A basis of the Weyl-invariant subspace.
    pub invariant_basis: Vec<RatVec>,
}

/// Builds the weights of `⊕_a Hom(C^{d_s(a)}, C^{d_t(a)})` for the torus of
/// `(∏ GL(d_v))/G_m`. Without `basis`, characters are written in the basis
/// `ε_c − ε_last` where `last` is the last coordinate of the last
/// dimension-1 vertex (or the last coordinate overall); this amounts to
/// dropping that coordinate. A custom basis lists sum-zero vectors in the
/// full coordinates.
pub fn quiver_rep(q: &QuiverSpec, basis: Option<&[RatVec]>) -> Result<QuiverData> {
    if q.vertices.is_empty() {
        return invalid("quiver has no vertices");
    }
    if let Some(v) = q.vertices.iter().find(|v| v.dim == 0) {
        return invalid(format!("vertex {} has dimension zero", v.id));
    }
    let ids: Vec<&str> = q.vertices.iter().map(|v| v.id.as_str()).collect();
    if ids.iter().collect::<BTreeSet<_>>().len() != ids.len() {
        return invalid("duplicate vertex id");
    }
    let mut offsets = Vec::new();
    let mut total = 0;
    for v in &q.vertices {
        offsets.push(total);
        total += v.dim;
    }
    let index = |id: &str| -> Result<usize> {
        ids.iter()
            .position(|&x| x == id)
            .ok_or_else(|| Error::InvalidInput(format!("unknown vertex {id}")))
    };
    // Connectivity (undirected).
    let mut comp: Vec<usize> = (0..ids.len()).collect();
    fn find(c: &mut [usize], x: usize) -> usize {
        if c[x] != x {
            let r = find(c, c[x]);
            c[x] = r;
        }
        c[x]
    }
    for a in &q.arrows {
        let (s, t) = (index(&a.src)?, index(&a.dst)?);
        let (rs, rt) = (find(&mut comp, s), find(&mut comp, t));
        comp[rs] = rt;
    }
    let root = find(&mut comp, 0);
    if (0..ids.len()).any(|i| find(&mut comp, i) != root) {
        return invalid("quiver is not connected");
    }
    let basis: Vec<RatVec> = match basis {
        Some(b) => {
            if b.len() != total - 1 || b.iter().any(|x| x.len() != total) {
                return dim_err(format!(
                    "basis must list {} vectors of length {total}",
                    total - 1
                ));
            }
            if b.iter().any(|x| !x.iter().sum::<Rat>().is_zero()) {
                return invalid(
                    "basis vectors must be trivial on the diagonal (coordinate sum zero)",
                );
            }
            if rank_of(b, total) != total - 1 {
                return invalid("basis vectors are linearly dependent");
            }
            b.to_vec()
        }
        None => {
            let last = q
                .vertices
                .iter()
                .enumerate()
                .rev()
                .find(|(_, v)| v.dim == 1)
                .map_or(total - 1, |(i, _)| offsets[i]);
            (0..total)
                .filter(|&c| c != last)
                .map(|c| {
                    let mut x = vec![Rat::zero(); total];
                    x[c] = Rat::one();
                    x[last] = -Rat::one();
                    x
                })
                .collect()
        }
    };
    let bm = RatMat::from_cols(&basis, total)?;
    let to_basis = |x: &[Rat]| -> Result<RatVec> {
        solve(&bm, x)?
            .ok_or_else(|| Error::InvalidInput("character not in the span of the basis".into()))
    };
    let mut entries = Vec::new();
    for (ai, a) in q.arrows.iter().enumerate() {
        let (s, t) = (index(&a.src)?, index(&a.dst)?);
        for i in 0..q.vertices[t].dim {
            for j in 0..q.vertices[s].dim {
                let mut x = vec![Rat::zero(); total];
                x[offsets[t] + i] += Rat::one();
                x[offsets[s] + j] -= Rat::one();
                entries.push(((ai, i, j), to_basis(&x)?));
            }
        }
    }
    let dim = total - 1;
    let weights = WeightSet::new(dim, entries.iter().map(|(_, w)| w.clone()));
    let rank = rank_of(&weights.weights, dim);
    let mut weyl_generators = Vec::new();
    for (vi, v) in q.vertices.iter().enumerate() {
        for i in 0..v.dim.saturating_sub(1) {
            let (c1, c2) = (offsets[vi] + i, offsets[vi] + i + 1);
            let cols = basis
                .iter()
                .map(|b| {
                    let mut s = b.clone();
                    s.swap(c1, c2);
                    to_basis(&s)
                })
                .collect::<Result<Vec<_>>>()?;
            weyl_generators.push(RatMat::from_cols(&cols, dim)?);
        }
    }
    let invariant_basis = invariant_subspace(&weyl_generators, dim)?;
    Ok(QuiverData {
        spec: q.clone(),
        basis,
        rank,
        weights,
        entries,
        weyl_generators,
        invariant_basis,
    })
}

/// Rows `w − I` for each generator; their common kernel is the invariant subspace.
fn invariance_equations(gens: &[RatMat], dim: usize) -> Result<RatMat> {
    let mut rows = Vec::new();
    for g in gens {
        for i in 0..dim {
            let mut r = g.row_vec(i);
            r[i] -= Rat::one();
            rows.push(r);
        }
    }
    if rows.is_empty() {
        return Ok(RatMat::zeros(1, dim));
    }
    RatMat::from_rows(&rows, dim)
}

fn invariant_subspace(gens: &[RatMat], dim: usize) -> Result<Vec<RatVec>> {
    Ok(kernel_basis(&invariance_equations(gens, dim)?))
}

impl QuiverData {
    fn coords_in_invariant(&self, x: &[Rat]) -> RatVec {
        let m =
            RatMat::from_cols(&self.invariant_basis, self.weights.dim).expect("basis dimensions");
        solve(&m, x).ok().flatten().unwrap_or_default()
    }

    /// `Σ(V, T)^W = Σ(V, T) ∩ (invariant subspace)`.
    pub fn invariant_semistable_cone(&self) -> Result<Cone> {
        let p = invariance_equations(&self.weyl_generators, self.weights.dim)?;
        cone_intersect_subspace(&semistable_cone(&self.weights), &p)
    }

    /// Intersections of the maximal walls with the invariant subspace, as
    /// primitive rays in invariant coordinates, deduplicated and sorted.
    pub fn invariant_wall_rays(&self) -> Result<InvariantWallSlices> {
        let p = invariance_equations(&self.weyl_generators, self.weights.dim)?;
        let mut rays = BTreeSet::new();
        let mut max_dim = 0;
        for w in maximal_walls(&self.weights, self.rank)? {
            let slice = cone_intersect_subspace(&w.cone, &p)?;
            max_dim = max_dim.max(slice.span_dim());
            for g in &slice.generators {
                rays.insert(crate::linalg::primitive(&self.coords_in_invariant(g)));
            }
        }
        Ok(InvariantWallSlices {
            rays: rays.into_iter().collect(),
            max_slice_dim: max_dim,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantWallSlices {
    /// Generators of all wall slices, in invariant coordinates.
    pub rays: Vec<RatVec>,
    /// The largest dimension of a slice; 1 means the slices are rays.
    pub max_slice_dim: usize,
}

/// Weyl-genericity of a quiver representation at the torus level.
pub fn quiver_genericity(q: &QuiverData) -> Result<GenericityReport> {
    let inv = q.invariant_semistable_cone()?;
    decide_weyl_generic(&q.weights, q.rank, &inv, &|x: &[Rat]| {
        q.coords_in_invariant(x)
    })
}

/// The combination `(0, α) = C Σ (eᵢ, εᵢ) + t⁻¹ (e₁+e₂, t·z) + t⁻¹ (e₃+e₄, t·z)`
/// with `z = ½(α − C·1)` for `SL(4) × G_m⁴`, checked exactly: the six
/// weights belong to `(X₊ ⊗ Y) ⊕ Z^{(t)}` and their combination equals
/// `(0, α)`. Returns the weights and coefficients.
pub fn wall_persistence_combination(
    alpha: &[i64; 4],
    c: i64,
    t: i64,
) -> Result<(Representation, Vec<RatVec>, RatVec)> {
    if c <= *alpha.iter().max().unwrap() || c % 2 != 0 || alpha.iter().any(|a| a % 2 != 0 || *a < 0)
    {
        return invalid("need even α_i ≥ 0 and an even C > α_i");
    }
    let z: Vec<i64> = alpha.iter().map(|a| (a - c) / 2).collect();
    let g = GroupSpec::sl(&[4], 4);
    let x_plus = Representation::new(
        GroupSpec::sl(&[4], 0),
        vec![IrredSummand::from_fundamental(
            &GroupSpec::sl(&[4], 0),
            &[vec![1, 0, 0]],
            &[],
        )?],
    )?;
    let spec = SufficientSpec {
        x_plus,
        torus_rank: 4,
        y: (0..4).map(|i| crate::linalg::unit_vec(4, i)).collect(),
        z: vec![IrredSummand::from_fundamental(&g, &[vec![0, 1, 0]], &z)?],
        nu: None,
    };
    let rep = build_sufficient(&spec, t)?;
    let rs = crate::rep::root_system(crate::roots::LieType::a(3));
    let e = |idx: &[usize]| -> Result<RatVec> {
        let mut x = vec![Rat::zero(); 4];
        for &i in idx {
            x[i] = Rat::one();
        }
        rs.normalize(&x)
    };
    let mut weights = Vec::new();
    let mut coeffs = Vec::new();
    for i in 0..4 {
        let mut w = e(&[i])?;
        w.extend(crate::linalg::unit_vec(4, i));
        weights.push(w);
        coeffs.push(Rat::int(c));
    }
    for pair in [[0usize, 1], [2, 3]] {
        let mut w = e(&pair)?;
        w.extend(z.iter().map(|&x| Rat::int(x * t)));
        weights.push(w);
        coeffs.push(Rat::new(1, t));
    }
    Ok((rep, weights, coeffs))
}

/// Verifies the wall-persistence combination for one `t`: all six vectors
/// are weights, they are at most `rank − 1`, and they sum to `(0, α)`.
pub fn verify_wall_persistence(alpha: &[i64; 4], c: i64, t: i64) -> Result<bool> {
    let (rep, weights, coeffs) = wall_persistence_combination(alpha, c, t)?;
    let ws = rep_weight_set(&rep)?;
    let mut target = vec![Rat::zero(); 4];
    target.extend(alpha.iter().map(|&a| Rat::int(a)));
    let sum = lin_comb(&coeffs, &weights, target.len());
    Ok(weights.iter().all(|w| ws.contains(w))
        && weights.len() < rep.group.rank()
        && coeffs.iter().all(|c| c.is_positive())
        && sum == target)
}

/// Direction of a ray in invariant coordinates, for comparisons.
pub fn ray_key(v: &[Rat]) -> RatVec {
    primitive_line(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::git::wall_membership;
    use crate::linalg::int_vec;

    pub(crate) fn sufficient_example() -> SufficientSpec {
        let h = GroupSpec::sl(&[4], 0);
        let g = GroupSpec::sl(&[4], 1);
        SufficientSpec {
            x_plus: Representation::new(
                h.clone(),
                vec![IrredSummand::from_fundamental(&h, &[vec![1, 0, 0]], &[]).unwrap()],
            )
            .unwrap(),
            torus_rank: 1,
            y: vec![int_vec(&[1])],
            z: vec![IrredSummand::from_fundamental(&g, &[vec![0, 1, 0]], &[-1]).unwrap()],
            nu: None,
        }
    }

    #[test]
    fn sufficient_example_min_t() {
        let spec = sufficient_example();
        let v1 = build_sufficient(&spec, 1).unwrap();
        let ws = rep_weight_set(&v1).unwrap();
        assert_eq!(ws.len(), 10);
        let theta = int_vec(&[0, 0, 0, 0, 1]);
        assert!(wall_membership(&ws, 4, &theta).unwrap().on_wall());
        let ws2 = rep_weight_set(&build_sufficient(&spec, 2).unwrap()).unwrap();
        assert!(!wall_membership(&ws2, 4, &theta).unwrap().on_wall());
        let r = min_t_search(&spec, 16).unwrap();
        assert_eq!(r.min_t, Some(2));
        assert_eq!(r.methods_agree, Some(true));
        assert!(nu_certificate(&validate_sufficient(&spec).unwrap(), 1)
            .unwrap()
            .failure
            .is_some());
    }

    #[test]
    fn sufficient_without_z() {
        let mut spec = sufficient_example();
        spec.z.clear();
        let r = min_t_search(&spec, 4).unwrap();
        assert_eq!(r.min_t, Some(1));
        spec.y = vec![int_vec(&[1]), int_vec(&[2])];
        assert!(validate_sufficient(&spec).is_ok());
        spec.torus_rank = 2;
        spec.y = vec![int_vec(&[1, 0]), int_vec(&[2, 0])];
        assert!(matches!(
            validate_sufficient(&spec),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn flop_examples() {
        let h = GroupSpec::sl(&[2], 0);
        let x = Representation::new(
            h.clone(),
            vec![IrredSummand::from_fundamental(&h, &[vec![1]], &[]).unwrap()],
        )
        .unwrap();
        let v = gr_flop(&x, 1).unwrap();
        let ws = rep_weight_set(&v).unwrap();
        assert_eq!(ws.len(), 4);
        assert!(ws
            .weights
            .iter()
            .all(|w| ws.contains(&crate::linalg::neg(w))));
        assert!(is_weyl_generic(&v).unwrap().generic);
        assert!(is_weyl_generic(&gr_flop(&x, 2).unwrap()).unwrap().generic);
        let w = Representation::new(
            GroupSpec::sl(&[4], 0),
            vec![
                IrredSummand::from_fundamental(&GroupSpec::sl(&[4], 0), &[vec![0, 1, 0]], &[])
                    .unwrap(),
            ],
        )
        .unwrap();
        assert!(matches!(gr_flop(&w, 1), Err(Error::Degenerate(_))));
    }

    fn quiver1() -> QuiverSpec {
        let v = |id: &str, dim| QuiverVertex { id: id.into(), dim };
        let a = |s: &str, d: &str| QuiverArrow {
            src: s.into(),
            dst: d.into(),
        };
        QuiverSpec {
            vertices: vec![v("A", 2), v("B", 1), v("C", 1)],
            arrows: vec![
                a("B", "A"),
                a("C", "A"),
                a("C", "B"),
                a("A", "C"),
                a("B", "C"),
            ],
        }
    }

    #[test]
    fn quiver_example() {
        let q = quiver_rep(&quiver1(), None).unwrap();
        assert_eq!(q.weights.len(), 8);
        assert_eq!(q.rank, 3);
        assert_eq!(
            q.invariant_basis,
            vec![int_vec(&[1, 1, 0]), int_vec(&[0, 0, 1])]
        );
        assert_eq!(q.invariant_semistable_cone().unwrap().span_dim(), 2);
        let slices = q.invariant_wall_rays().unwrap();
        assert_eq!(slices.max_slice_dim, 1);
        assert!(slices.rays.contains(&int_vec(&[1, -1])));
        assert!(slices.rays.contains(&int_vec(&[1, -2])));
        let r = quiver_genericity(&q).unwrap();
        assert!(r.generic && r.verify());
    }

    #[test]
    fn small_quivers() {
        let one = QuiverSpec {
            vertices: vec![QuiverVertex {
                id: "x".into(),
                dim: 1,
            }],
            arrows: vec![QuiverArrow {
                src: "x".into(),
                dst: "x".into(),
            }],
        };
        let q = quiver_rep(&one, None).unwrap();
        assert_eq!(q.weights.weights, vec![Vec::<Rat>::new()]);
        let a2 = QuiverSpec {
            vertices: vec![
                QuiverVertex {
                    id: "1".into(),
                    dim: 1,
                },
                QuiverVertex {
                    id: "2".into(),
                    dim: 1,
                },
            ],
            arrows: vec![QuiverArrow {
                src: "1".into(),
                dst: "2".into(),
            }],
        };
        let q = quiver_rep(&a2, None).unwrap();
        assert_eq!((q.weights.len(), q.rank), (1, 1));
        let bad = QuiverSpec {
            vertices: vec![QuiverVertex {
                id: "x".into(),
                dim: 0,
            }],
            arrows: vec![],
        };
        assert!(quiver_rep(&bad, None).is_err());
    }

    #[test]
    fn wall_persistence() {
        for t in [1, 2, 5, 10, 100] {
            assert!(verify_wall_persistence(&[2, 2, 2, 2], 4, t).unwrap());
        }
    }
}
