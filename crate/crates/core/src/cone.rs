//! Finitely generated rational cones: membership with certificates,
//! Carathéodory reductions, the northwest-corner merge of two conic
//! combinations, and extreme rays by the double description method.

use crate::error::{dim_err, invalid, Error, Result};
use crate::linalg::{
    dot, is_zero_vec, kernel_basis, lin_comb, primitive, rank_of, solve, zero_vec, EchelonBasis,
    RatMat, RatVec,
};
use crate::lp::{lp_feasible, LpOutcome};
use crate::rat::Rat;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A cone given by primitive integer generators (deduplicated, zeros dropped, sorted).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cone {
    pub dim: usize,
    pub generators: Vec<RatVec>,
}

impl Cone {
    pub fn new(dim: usize, gens: impl IntoIterator<Item = RatVec>) -> Result<Cone> {
        let mut set = BTreeSet::new();
        for g in gens {
            if g.len() != dim {
                return dim_err(format!(
                    "generator of length {} in a cone of dimension {dim}",
                    g.len()
                ));
            }
            if !is_zero_vec(&g) {
                set.insert(primitive(&g));
            }
        }
        Ok(Cone {
            dim,
            generators: set.into_iter().collect(),
        })
    }

    pub fn zero(dim: usize) -> Cone {
        Cone {
            dim,
            generators: vec![],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Dimension of the linear span.
    pub fn span_dim(&self) -> usize {
        rank_of(&self.generators, self.dim)
    }

    pub fn contains(&self, theta: &[Rat]) -> Result<Membership> {
        cone_contains(self, theta)
    }

    pub fn generator_matrix(&self) -> RatMat {
        RatMat::from_cols(&self.generators, self.dim).expect("generator dimensions")
    }
}

/// Outcome of a membership test, with its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Membership {
    /// `θ = Σ coeffs[i] · generators[i]` with nonnegative coefficients.
    Inside { coeffs: RatVec },
    /// A functional `f` with `f·g ≥ 0` on every generator and `f·θ < 0`.
    Outside { functional: RatVec },
}

impl Membership {
    pub fn is_inside(&self) -> bool {
        matches!(self, Membership::Inside { .. })
    }

    /// Re-verifies the certificate exactly.
    pub fn verify(&self, cone: &Cone, theta: &[Rat]) -> bool {
        match self {
            Membership::Inside { coeffs } => {
                coeffs.len() == cone.generators.len()
                    && coeffs.iter().all(|c| !c.is_negative())
                    && lin_comb(coeffs, &cone.generators, cone.dim) == theta
            }
            Membership::Outside { functional } => {
                functional.len() == cone.dim
                    && cone
                        .generators
                        .iter()
                        .all(|g| !dot(functional, g).is_negative())
                    && dot(functional, theta).is_negative()
            }
        }
    }
}

/// Decides `θ ∈ Cone(G)` by exact LP.
pub fn cone_contains(cone: &Cone, theta: &[Rat]) -> Result<Membership> {
    if theta.len() != cone.dim {
        return dim_err(format!(
            "point of length {} for a cone in dimension {}",
            theta.len(),
            cone.dim
        ));
    }
    if is_zero_vec(theta) {
        return Ok(Membership::Inside {
            coeffs: zero_vec(cone.generators.len()),
        });
    }
    Ok(match lp_feasible(&cone.generator_matrix(), theta, &[])? {
        LpOutcome::Feasible(coeffs) => Membership::Inside { coeffs },
        LpOutcome::Infeasible(cert) => Membership::Outside {
            functional: cert.y.iter().map(|x| -x).collect(),
        },
    })
}

/// Shrinks the support of a conic combination `θ = Σ aᵢ gᵢ` until the used
/// generators are linearly independent, so the support is at most the
/// dimension of their span. Each step moves along a kernel vector of the
/// support by the largest step keeping coefficients nonnegative.
pub fn caratheodory_reduce(gens: &[RatVec], theta: &[Rat], coeffs: &[Rat]) -> Result<RatVec> {
    let dim = theta.len();
    if gens.len() != coeffs.len() {
        return dim_err("generator and coefficient counts differ");
    }
    if gens.iter().any(|g| g.len() != dim) {
        return dim_err("generator dimension differs from the target");
    }
    if coeffs.iter().any(|c| c.is_negative()) {
        return invalid("negative coefficient in a conic combination");
    }
    if lin_comb(coeffs, gens, dim) != theta {
        return invalid("coefficients do not reproduce the target");
    }
    let mut a = coeffs.to_vec();
    // Feed the support in one index at a time, keeping the active columns
    // independent, so each kernel computation involves at most `dim + 1`
    // columns.
    let mut active: Vec<usize> = Vec::new();
    for i in 0..a.len() {
        if !a[i].is_positive() {
            continue;
        }
        active.push(i);
        let cols: Vec<RatVec> = active.iter().map(|&j| gens[j].clone()).collect();
        let m = RatMat::from_cols(&cols, dim)?;
        let Some(mut z) = kernel_basis(&m).into_iter().next() else {
            continue;
        };
        if !z.iter().any(|x| x.is_positive()) {
            z = z.iter().map(|x| -x).collect();
        }
        let mut best: Option<(Rat, usize)> = None;
        for (k, zk) in z.iter().enumerate() {
            if zk.is_positive() {
                let r = &a[active[k]] / zk;
                if best.as_ref().map_or(true, |(b, _)| r < *b) {
                    best = Some((r, k));
                }
            }
        }
        let (eps, hit) = best.expect("kernel vector has a positive entry");
        for (k, zk) in z.iter().enumerate() {
            let j = active[k];
            a[j] = &a[j] - &(&eps * zk);
        }
        a[active[hit]] = Rat::zero();
        active.retain(|&j| a[j].is_positive());
    }
    Ok(a)
}

/// Given `Σ aᵢ ξᵢ = 0` with `Σ aᵢ = 1`, `aᵢ ≥ 0`, returns coefficients with
/// the same two properties and support at most `m + 1`, where `m` is the
/// dimension of the span of the `ξᵢ`.
pub fn zero_convex_reduce(xis: &[RatVec], coeffs: &[Rat]) -> Result<RatVec> {
    let Some(first) = xis.first() else {
        return invalid("empty vector list");
    };
    let dim = first.len();
    if coeffs.iter().sum::<Rat>() != Rat::one() {
        return invalid("coefficients must sum to one");
    }
    if !is_zero_vec(&lin_comb(coeffs, xis, dim)) {
        return invalid("combination is not zero");
    }
    let lifted: Vec<RatVec> = xis
        .iter()
        .map(|x| {
            let mut v = x.clone();
            v.push(Rat::one());
            v
        })
        .collect();
    let mut target = zero_vec(dim);
    target.push(Rat::one());
    caratheodory_reduce(&lifted, &target, coeffs)
}

/// Northwest-corner merge of two positive coefficient vectors.
///
/// Given `Σ aᵢ vᵢ = v` and `Σ bⱼ wⱼ = w`, returns pairs `((i, j), c_ij)`
/// (0-based) with `Σ_j c_ij = aᵢ`, `Σ_i c_ij = b'ⱼ`, all `c_ij > 0`, the last
/// pair equal to `(n−1, m−1)`, and at most `n + m − 1` entries. Here `b' = b`
/// when the sums agree; when they differ, the side whose combination is the
/// zero vector is rescaled to match the other. Ties advance both indices.
pub fn box_merge(
    vs: &[RatVec],
    a: &[Rat],
    ws: &[RatVec],
    b: &[Rat],
) -> Result<Vec<((usize, usize), Rat)>> {
    if vs.len() != a.len() || ws.len() != b.len() {
        return dim_err("vector and coefficient counts differ");
    }
    if a.is_empty() || b.is_empty() {
        return invalid("box_merge needs at least one vector on each side");
    }
    if a.iter().chain(b).any(|c| !c.is_positive()) {
        return invalid("box_merge coefficients must be positive");
    }
    let sa: Rat = a.iter().sum();
    let sb: Rat = b.iter().sum();
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    if sa != sb {
        let v_zero = is_zero_vec(&lin_comb(&a, vs, vs[0].len()));
        let w_zero = is_zero_vec(&lin_comb(&b, ws, ws[0].len()));
        if v_zero {
            let f = &sb / &sa;
            a = a.iter().map(|x| x * &f).collect();
        } else if w_zero {
            let f = &sa / &sb;
            b = b.iter().map(|x| x * &f).collect();
        } else {
            return Err(Error::Hypothesis(
                "coefficient sums differ and neither combination is zero".into(),
            ));
        }
    }
    let (n, m) = (a.len(), b.len());
    let (mut i, mut j) = (0, 0);
    let mut ra = a[0].clone();
    let mut rb = b[0].clone();
    let mut out = Vec::with_capacity(n + m - 1);
    while i < n && j < m {
        let c = if ra <= rb { ra.clone() } else { rb.clone() };
        out.push(((i, j), c.clone()));
        ra -= &c;
        rb -= &c;
        let adv_i = ra.is_zero();
        let adv_j = rb.is_zero();
        if adv_i {
            i += 1;
            if i < n {
                ra = a[i].clone();
            }
        }
        if adv_j {
            j += 1;
            if j < m {
                rb = b[j].clone();
            }
        }
    }
    Ok(out)
}

/// Extreme rays of the pointed cone `{x : A x ≥ 0, E x = 0}` in `Q^dim`, by
/// the double description method. Fails if the cone is not pointed.
pub fn dd_extreme_rays(ineq: &[RatVec], eq: &[RatVec], dim: usize) -> Result<Vec<RatVec>> {
    for r in ineq.iter().chain(eq) {
        if r.len() != dim {
            return dim_err(format!(
                "constraint of length {} in dimension {dim}",
                r.len()
            ));
        }
    }
    // Parametrize ker E by a basis K, so x = K z.
    let k: Vec<RatVec> = if eq.is_empty() {
        (0..dim).map(|i| crate::linalg::unit_vec(dim, i)).collect()
    } else {
        kernel_basis(&RatMat::from_rows(eq, dim)?)
    };
    let d = k.len();
    if d == 0 {
        return Ok(vec![]);
    }
    // Constraint rows in z-coordinates: (A K)_i.
    let rows: Vec<RatVec> = ineq
        .iter()
        .map(|a| k.iter().map(|kc| dot(a, kc)).collect())
        .collect();
    let rays_z = dd_core(&rows, d)?;
    let mut out: BTreeSet<RatVec> = BTreeSet::new();
    for z in rays_z {
        let x = lin_comb(&z, &k, dim);
        out.insert(primitive(&x));
    }
    Ok(out.into_iter().collect())
}

type Bits = Vec<u64>;

fn bit_set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn bits_and(a: &Bits, b: &Bits) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn bits_subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn bits_count(a: &Bits) -> usize {
    a.iter().map(|x| x.count_ones() as usize).sum()
}

/// Double description on `{z ∈ Q^d : rows·z ≥ 0}`, which must be pointed.
fn dd_core(rows: &[RatVec], d: usize) -> Result<Vec<RatVec>> {
    let words = rows.len().div_ceil(64).max(1);
    let basis_rows = {
        let mut eb = EchelonBasis::new(d);
        let mut chosen = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            if eb.insert(r) {
                chosen.push(i);
            }
        }
        chosen
    };
    if basis_rows.len() < d {
        return Err(Error::Unsupported(
            "double description requires a pointed cone".into(),
        ));
    }
    // Initial simplicial cone: rays are the columns of B⁻¹.
    let b = RatMat::from_rows(
        &basis_rows
            .iter()
            .map(|&i| rows[i].clone())
            .collect::<Vec<_>>(),
        d,
    )?;
    let mut rays: Vec<(RatVec, Bits)> = Vec::new();
    for j in 0..d {
        let rhs = crate::linalg::unit_vec(d, j);
        let r = solve(&b, &rhs)?.expect("basis rows are invertible");
        let mut z = vec![0u64; words];
        for (jj, &i) in basis_rows.iter().enumerate() {
            if jj != j {
                bit_set(&mut z, i);
            }
        }
        rays.push((primitive(&r), z));
    }
    let mut processed: Vec<bool> = vec![false; rows.len()];
    for &i in &basis_rows {
        processed[i] = true;
    }
    for (h, row) in rows.iter().enumerate() {
        if processed[h] {
            continue;
        }
        processed[h] = true;
        let vals: Vec<Rat> = rays.iter().map(|(r, _)| dot(row, r)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let negs: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if negs.is_empty() {
            for (i, v) in vals.iter().enumerate() {
                if v.is_zero() {
                    bit_set(&mut rays[i].1, h);
                }
            }
            continue;
        }
        let mut next: Vec<(RatVec, Bits)> = Vec::new();
        for &p in &pos {
            for &q in &negs {
                let common = bits_and(&rays[p].1, &rays[q].1);
                if bits_count(&common) + 2 < d {
                    continue;
                }
                let adjacent =
                    (0..rays.len()).all(|r| r == p || r == q || !bits_subset(&common, &rays[r].1));
                if !adjacent {
                    continue;
                }
                let v: RatVec = rays[q]
                    .0
                    .iter()
                    .zip(&rays[p].0)
                    .map(|(x, y)| &(&vals[p] * x) - &(&vals[q] * y))
                    .collect();
                let mut z = common;
                bit_set(&mut z, h);
                next.push((primitive(&v), z));
            }
        }
        for (i, v) in vals.iter().enumerate() {
            if !v.is_negative() {
                let mut r = rays[i].clone();
                if v.is_zero() {
                    bit_set(&mut r.1, h);
                }
                next.push(r);
            }
        }
        rays = next;
    }
    Ok(rays.into_iter().map(|(r, _)| r).collect())
}

/// Primitive generators of the extreme rays of `{x ≥ 0 : M x = 0}`.
pub fn extreme_rays(m: &RatMat) -> Result<Vec<RatVec>> {
    let n = m.cols();
    let ineq: Vec<RatVec> = (0..n).map(|i| crate::linalg::unit_vec(n, i)).collect();
    dd_extreme_rays(&ineq, &m.to_rows(), n)
}

/// Removes generators that lie in the cone of the others.
pub fn minimal_generators(cone: &Cone) -> Result<Cone> {
    let mut gens = cone.generators.clone();
    let mut i = 0;
    while i < gens.len() {
        let others: Vec<RatVec> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let c = Cone {
            dim: cone.dim,
            generators: others.clone(),
        };
        if cone_contains(&c, &gens[i])?.is_inside() {
            gens = others;
        } else {
            i += 1;
        }
    }
    Cone::new(cone.dim, gens)
}

/// `Cone(G) ∩ ker P`: generators of the intersection, obtained from the
/// extreme rays of `{a ≥ 0 : (P G) a = 0}` mapped through `G`.
pub fn cone_intersect_subspace(cone: &Cone, p: &RatMat) -> Result<Cone> {
    if p.cols() != cone.dim {
        return dim_err(format!(
            "P has {} columns, cone dimension is {}",
            p.cols(),
            cone.dim
        ));
    }
    if cone.is_zero() {
        return Ok(Cone::zero(cone.dim));
    }
    let g = cone.generator_matrix();
    let pg = p.mul(&g)?;
    let rays = extreme_rays(&pg)?;
    let images = rays
        .iter()
        .map(|a| g.mul_vec(a))
        .collect::<Result<Vec<_>>>()?;
    minimal_generators(&Cone::new(cone.dim, images)?)
}

/// Inward facet normals of a full-dimensional cone in `Q^dim`.
pub fn facet_normals(cone: &Cone) -> Result<Vec<RatVec>> {
    if cone.span_dim() != cone.dim {
        return invalid("facet normals requested for a cone that is not full-dimensional");
    }
    dd_extreme_rays(&cone.generators, &[], cone.dim)
}

/// The smallest subset of `ws` summing with positive weights to `θ`, if
/// any, found by enumerating supports in increasing size.
pub fn min_support_combination(
    ws: &[RatVec],
    theta: &[Rat],
    max_size: usize,
) -> Result<Option<(Vec<usize>, RatVec)>> {
    use itertools::Itertools;
    let dim = theta.len();
    for s in 1..=max_size.min(ws.len()) {
        for idx in (0..ws.len()).combinations(s) {
            let cols: Vec<RatVec> = idx.iter().map(|&i| ws[i].clone()).collect();
            let m = RatMat::from_cols(&cols, dim)?;
            let strict: Vec<usize> = (0..s).collect();
            if let LpOutcome::Feasible(x) = lp_feasible(&m, theta, &strict)? {
                return Ok(Some((idx, x)));
            }
        }
    }
    Ok(None)
}
